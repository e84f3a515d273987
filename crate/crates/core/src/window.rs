use std::fmt;

use serde::{Deserialize, Serialize};

use crate::pauli::Site;

/// A finite set of sites, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Site>", into = "Vec<Site>")]
pub struct Window {
    sites: Vec<Site>,
}

impl Window {
    pub fn new<I: IntoIterator<Item = Site>>(sites: I) -> Self {
        let mut sites: Vec<Site> = sites.into_iter().collect();
        sites.sort_unstable();
        sites.dedup();
        Window { sites }
    }

    /// All sites in `lo..=hi`; empty when `lo > hi`.
    pub fn range(lo: Site, hi: Site) -> Self {
        Window { sites: (lo..=hi).collect() }
    }

    pub fn empty() -> Self {
        Window::default()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn contains(&self, site: Site) -> bool {
        self.sites.binary_search(&site).is_ok()
    }

    /// Zero-based position of `site` in increasing order.
    pub fn position(&self, site: Site) -> Option<usize> {
        self.sites.binary_search(&site).ok()
    }

    pub fn is_subset(&self, other: &Window) -> bool {
        self.sites.iter().all(|&s| other.contains(s))
    }

    pub fn union(&self, other: &Window) -> Window {
        Window::new(self.sites.iter().chain(other.sites.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = Site> + '_ {
        self.sites.iter().copied()
    }
}

impl From<Vec<Site>> for Window {
    fn from(v: Vec<Site>) -> Self {
        Window::new(v)
    }
}

impl From<Window> for Vec<Site> {
    fn from(w: Window) -> Self {
        w.sites
    }
}

impl FromIterator<Site> for Window {
    fn from_iter<I: IntoIterator<Item = Site>>(iter: I) -> Self {
        Window::new(iter)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sites.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_dedups() {
        let w = Window::new([3, -1, 3, 0]);
        assert_eq!(w.sites(), &[-1, 0, 3]);
        assert_eq!(w.position(3), Some(2));
        assert_eq!(w.position(1), None);
    }

    #[test]
    fn subset_and_union() {
        let a = Window::new([0, 2]);
        let b = Window::range(-1, 2);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.union(&Window::new([-5])).sites(), &[-5, 0, 2]);
        assert!(Window::range(3, 2).is_empty());
    }

    #[test]
    fn serde_as_plain_list() {
        let w: Window = serde_json::from_str("[4, -2, 4]").unwrap();
        assert_eq!(w.sites(), &[-2, 4]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[-2,4]");
    }
}
