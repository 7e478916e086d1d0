//! Leaf-to-leaf path-length spectra. The spectrum of a tree is the set of
//! distinct leaf-to-leaf path lengths; 0 is always included because a single
//! vertex is a path. The full scan costs one BFS per leaf and is guarded by
//! a work limit that errors out instead of truncating.

use crate::exec::map_chunked;
use crate::tree::{bfs_distances, Tree};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Default cap on `leaf_count * n` BFS work for a full spectrum scan.
pub const DEFAULT_WORK_LIMIT: u64 = 1_000_000_000;

/// Strictly increasing set of path lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LengthSet {
    values: Vec<usize>,
}

impl LengthSet {
    pub fn from_sorted_set(set: BTreeSet<usize>) -> LengthSet {
        LengthSet { values: set.into_iter().collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, len: usize) -> bool {
        self.values.binary_search(&len).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.values.last().copied()
    }

    /// Restriction to `[0, bound]`.
    pub fn clamp(&self, bound: usize) -> LengthSet {
        LengthSet { values: self.values.iter().copied().filter(|&v| v <= bound).collect() }
    }

    pub fn is_subset_of(&self, other: &LengthSet) -> bool {
        self.values.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for LengthSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LengthSet::from_sorted_set(iter.into_iter().collect())
    }
}

fn check_work_limit(t: &Tree, limit: u64) -> Result<()> {
    let work = t.leaf_count() as u128 * t.n() as u128;
    if work > limit as u128 {
        return Err(Error::WorkLimitExceeded { work, limit: limit as u128, what: "full spectrum scan" });
    }
    Ok(())
}

/// Full spectrum with the default work limit, single worker.
pub fn leaf_spectrum(t: &Tree) -> Result<LengthSet> {
    leaf_spectrum_opts(t, DEFAULT_WORK_LIMIT, 1)
}

/// Full spectrum: one BFS per leaf, distances to other leaves collected,
/// 0 included. The worker count only partitions the leaf list; the merged
/// result is identical for every count.
pub fn leaf_spectrum_opts(t: &Tree, work_limit: u64, workers: usize) -> Result<LengthSet> {
    check_work_limit(t, work_limit)?;
    let leaves = t.leaves();
    let is_leaf: Vec<bool> = (0..t.n()).map(|v| t.is_leaf(v)).collect();
    let partials = map_chunked(&leaves, workers, |&leaf| {
        let dist = bfs_distances(t, leaf).expect("leaf id valid");
        let mut set = BTreeSet::new();
        for (v, &d) in dist.iter().enumerate() {
            if is_leaf[v] {
                set.insert(d);
            }
        }
        set
    });
    let mut all = BTreeSet::new();
    all.insert(0);
    for set in partials {
        all.extend(set);
    }
    Ok(LengthSet::from_sorted_set(all))
}

/// Lengths witnessed by one leaf: distances from `v` to every leaf,
/// 0 included (the single-vertex path at `v`).
pub fn witnessed(t: &Tree, v: usize) -> Result<LengthSet> {
    t.check_vertex(v)?;
    if !t.is_leaf(v) {
        return Err(Error::NotALeaf { v });
    }
    let dist = bfs_distances(t, v)?;
    let mut set = BTreeSet::new();
    set.insert(0);
    for leaf in t.leaves() {
        set.insert(dist[leaf]);
    }
    Ok(LengthSet::from_sorted_set(set))
}

/// Witnessed lengths restricted to `[0, bound]`.
pub fn witnessed_in_range(t: &Tree, v: usize, bound: usize) -> Result<LengthSet> {
    Ok(witnessed(t, v)?.clamp(bound))
}

/// Full spectrum restricted to `[0, bound]`.
pub fn spectrum_in_range(t: &Tree, bound: usize) -> Result<LengthSet> {
    Ok(leaf_spectrum(t)?.clamp(bound))
}

/// Report for one tree; fields serialize in this order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub leaf_count: usize,
    pub max_degree: usize,
    pub diameter: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    pub spectrum: LengthSet,
    pub spectrum_size: usize,
}

/// Builds the standard report; with `max_len` the spectrum is restricted and
/// the bound recorded.
pub fn spectrum_report(t: &Tree, max_len: Option<usize>, work_limit: u64, workers: usize) -> Result<SpectrumReport> {
    let full = leaf_spectrum_opts(t, work_limit, workers)?;
    let spectrum = match max_len {
        Some(bound) => full.clamp(bound),
        None => full,
    };
    Ok(SpectrumReport {
        n: t.n(),
        leaf_count: t.leaf_count(),
        max_degree: t.max_degree(),
        diameter: crate::tree::diameter(t)?,
        max_len,
        spectrum_size: spectrum.len(),
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;
    use crate::tree::Tree;

    /// Brute-force oracle: BFS from every vertex, collect leaf-pair distances.
    pub(crate) fn spectrum_oracle(t: &Tree) -> LengthSet {
        let leaves = t.leaves();
        let mut set = BTreeSet::new();
        set.insert(0);
        for &a in &leaves {
            let dist = bfs_distances(t, a).unwrap();
            for &b in &leaves {
                set.insert(dist[b]);
            }
        }
        LengthSet::from_sorted_set(set)
    }

    #[test]
    fn single_vertex_spectrum_is_zero() {
        let t = parse_tree("1\n").unwrap();
        assert_eq!(leaf_spectrum(&t).unwrap().values(), &[0]);
    }

    #[test]
    fn single_edge_spectrum() {
        let t = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(leaf_spectrum(&t).unwrap().values(), &[0, 1]);
    }

    #[test]
    fn path_spectrum_is_zero_and_diameter() {
        let t = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(leaf_spectrum(&t).unwrap().values(), &[0, 5]);
    }

    #[test]
    fn star_spectrum() {
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(leaf_spectrum(&t).unwrap().values(), &[0, 2]);
    }

    #[test]
    fn matches_oracle_on_small_trees() {
        for text in [
            "4\n0 1\n1 2\n1 3\n",
            "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n",
            "8\n0 1\n0 2\n0 3\n1 4\n1 5\n4 6\n4 7\n",
        ] {
            let t = parse_tree(text).unwrap();
            assert_eq!(leaf_spectrum(&t).unwrap(), spectrum_oracle(&t));
        }
    }

    #[test]
    fn workers_do_not_change_spectrum() {
        let t = parse_tree("8\n0 1\n0 2\n0 3\n1 4\n1 5\n4 6\n4 7\n").unwrap();
        let base = leaf_spectrum_opts(&t, DEFAULT_WORK_LIMIT, 1).unwrap();
        for workers in [2, 3, 8, 100] {
            assert_eq!(leaf_spectrum_opts(&t, DEFAULT_WORK_LIMIT, workers).unwrap(), base);
        }
    }

    #[test]
    fn work_limit_errors_not_truncates() {
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let err = leaf_spectrum_opts(&t, 19, 1).unwrap_err();
        assert!(matches!(err, Error::WorkLimitExceeded { work: 20, .. }));
    }

    #[test]
    fn witnessed_subset_union() {
        let t = parse_tree("8\n0 1\n0 2\n0 3\n1 4\n1 5\n4 6\n4 7\n").unwrap();
        let full = leaf_spectrum(&t).unwrap();
        let mut union = BTreeSet::new();
        for leaf in t.leaves() {
            let w = witnessed(&t, leaf).unwrap();
            assert!(w.is_subset_of(&full));
            union.extend(w.values().iter().copied());
        }
        assert_eq!(LengthSet::from_sorted_set(union), full);
    }

    #[test]
    fn witnessed_rejects_internal_vertex() {
        let t = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(witnessed(&t, 1).unwrap_err(), Error::NotALeaf { v: 1 }));
    }

    #[test]
    fn range_restriction() {
        let t = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(spectrum_in_range(&t, 4).unwrap().values(), &[0]);
        assert_eq!(spectrum_in_range(&t, 5).unwrap().values(), &[0, 5]);
        assert_eq!(witnessed_in_range(&t, 0, 0).unwrap().values(), &[0]);
    }
}
