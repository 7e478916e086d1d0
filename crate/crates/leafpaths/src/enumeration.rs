//! Exhaustive generation of 1-3 trees (every degree 1 or 3) up to
//! isomorphism, plus an independent Prüfer-sequence recount used to audit
//! the generator.

use crate::tree::{longest_path, RootedTree, Tree};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Isomorphism invariant: balanced-parentheses encoding of the tree rooted
/// at its center, children sorted lexicographically; with two central
/// vertices the smaller of the two rooted encodings wins.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(pub String);

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn rooted_code(t: &Tree, root: usize) -> Result<String> {
    let rt = RootedTree::new(t.clone(), root)?;
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_unstable_by_key(|&v| std::cmp::Reverse(rt.depth[v]));
    let mut code: Vec<String> = vec![String::new(); t.n()];
    for &v in &order {
        let mut kids: Vec<String> = rt.children(v).iter().map(|&c| code[c].clone()).collect();
        kids.sort_unstable();
        code[v] = format!("({})", kids.concat());
    }
    Ok(code[root].clone())
}

pub fn canonical_code(t: &Tree) -> Result<CanonicalCode> {
    let p = longest_path(t)?;
    let verts = p.vertices();
    let m = p.len();
    let c1 = verts[m / 2];
    let c2 = verts[m.div_ceil(2)];
    let code1 = rooted_code(t, c1)?;
    if c1 == c2 {
        return Ok(CanonicalCode(code1));
    }
    let code2 = rooted_code(t, c2)?;
    Ok(CanonicalCode(code1.min(code2)))
}

/// Applies a vertex bijection: vertex v becomes perm[v].
pub fn relabel_tree(t: &Tree, perm: &[usize]) -> Result<Tree> {
    if perm.len() != t.n() {
        return Err(Error::InvalidParameter {
            name: "perm",
            value: perm.len().to_string(),
            reason: format!("length must equal the vertex count {}", t.n()),
        });
    }
    let mut seen = vec![false; t.n()];
    for &p in perm {
        if p >= t.n() || seen[p] {
            return Err(Error::InvalidParameter {
                name: "perm",
                value: format!("{perm:?}"),
                reason: "not a bijection on the vertex ids".into(),
            });
        }
        seen[p] = true;
    }
    let edges: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(t.n(), &edges)
}

fn check_13_order(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidVertexCount {
            reason: format!("1-3 trees exist only for even vertex counts of at least 2, got {n}"),
        });
    }
    Ok(())
}

/// All 1-3 trees on n vertices, one representative per isomorphism class,
/// sorted by canonical code. Grows level by level: every 1-3 tree on n+2
/// vertices arises from one on n by subdividing an edge and hanging a new
/// leaf on the subdivision vertex.
pub fn enumerate_13_trees(n: usize) -> Result<Vec<(CanonicalCode, Tree)>> {
    check_13_order(n)?;
    let edge = Tree::from_edges(2, &[(0, 1)])?;
    let mut level: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    level.insert(canonical_code(&edge)?, edge);
    let mut cur = 2;
    while cur < n {
        let mut next: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
        for t in level.values() {
            for &(u, v) in t.edges() {
                let w = cur;
                let x = cur + 1;
                let mut edges: Vec<(usize, usize)> =
                    t.edges().iter().copied().filter(|&e| e != (u, v)).collect();
                edges.push((u, w));
                edges.push((w, v));
                edges.push((w, x));
                let grown = Tree::from_edges(cur + 2, &edges)?;
                let code = canonical_code(&grown)?;
                next.entry(code).or_insert(grown);
            }
        }
        level = next;
        cur += 2;
    }
    Ok(level.into_iter().collect())
}

/// Standard Prüfer decoding; the sequence has length n-2 and vertex degrees
/// are one more than the appearance counts.
pub fn pruefer_decode(seq: &[usize], n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(Error::InvalidVertexCount {
            reason: format!("decoding needs at least 2 vertices, got {n}"),
        });
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParameter {
            name: "seq",
            value: seq.len().to_string(),
            reason: format!("length must be {}", n - 2),
        });
    }
    let mut degree = vec![1u32; n];
    for &s in seq {
        if s >= n {
            return Err(Error::InvalidParameter {
                name: "seq",
                value: s.to_string(),
                reason: format!("entries must be vertex ids below {n}"),
            });
        }
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    for &s in seq {
        let l = *leaves.iter().next().ok_or_else(|| Error::internal("decoder ran out of leaves"))?;
        leaves.remove(&l);
        edges.push((l, s));
        degree[l] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    if last.len() != 2 {
        return Err(Error::internal("decoder did not end with exactly two vertices"));
    }
    edges.push((last[0], last[1]));
    Tree::from_edges(n, &edges)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Cap on total Prüfer sequences the oracle may decode; the 1-3 filter at
/// n = 12 costs 113400, n = 14 would cost 7.5 million.
pub const ORACLE_WORK_LIMIT: u128 = 2_000_000;

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Degree multisets (sorted descending) drawn from `allowed` with the tree
/// degree sum 2(n-1).
fn degree_multisets(n: usize, allowed: &[usize]) -> Vec<Vec<usize>> {
    let mut choices: Vec<usize> = allowed.to_vec();
    choices.sort_unstable();
    choices.dedup();
    choices.reverse();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        choices: &[usize],
        n: usize,
        remaining: usize,
        max_allowed: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = n - cur.len();
        for &d in choices.iter().filter(|&&d| d <= max_allowed) {
            // Smallest usable degree is the tail of `choices`.
            let min_d = *choices.last().unwrap();
            if d > remaining || remaining - d < min_d * (slots - 1) || remaining > d * slots {
                continue;
            }
            cur.push(d);
            rec(choices, n, remaining - d, d, cur, out);
            cur.pop();
        }
    }
    if !choices.is_empty() {
        rec(&choices, n, 2 * (n - 1), *choices.first().unwrap(), &mut cur, &mut out);
    }
    out
}

/// Independent class count by full labeled enumeration: every class has a
/// labeling whose degrees are assigned in sorted order, so it suffices to
/// walk, per valid degree multiset, the multiset permutations of the Prüfer
/// content (vertex v appearing degree(v) - 1 times) and canonicalize each
/// decoded tree. Odd n with an odd-degrees-only filter simply has no valid
/// multiset and counts 0.
pub fn pruefer_oracle_count(n: usize, allowed: &[usize]) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidVertexCount {
            reason: format!("oracle needs at least 2 vertices, got {n}"),
        });
    }
    if allowed.is_empty() || allowed.contains(&0) {
        return Err(Error::InvalidParameter {
            name: "allowed",
            value: format!("{allowed:?}"),
            reason: "at least one positive degree required".into(),
        });
    }
    let multisets = degree_multisets(n, allowed);
    let mut work: u128 = 0;
    for degrees in &multisets {
        let mut count = factorial(n - 2);
        for &d in degrees {
            count /= factorial(d - 1);
        }
        work += count;
    }
    if work > ORACLE_WORK_LIMIT {
        return Err(Error::WorkLimitExceeded {
            work,
            limit: ORACLE_WORK_LIMIT,
            what: "labeled-tree oracle scan",
        });
    }
    let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
    for degrees in &multisets {
        let mut seq: Vec<usize> = Vec::with_capacity(n - 2);
        for (v, &d) in degrees.iter().enumerate() {
            seq.extend(std::iter::repeat(v).take(d - 1));
        }
        if seq.len() != n - 2 {
            return Err(Error::internal("degree multiset does not fill the sequence"));
        }
        if seq.is_empty() {
            // n = 2: the single edge, provided degree 1 is allowed.
            let t = pruefer_decode(&[], n)?;
            codes.insert(canonical_code(&t)?);
            continue;
        }
        loop {
            let t = pruefer_decode(&seq, n)?;
            codes.insert(canonical_code(&t)?);
            if !next_permutation(&mut seq) {
                break;
            }
        }
    }
    Ok(codes.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::leaf_spectrum;

    #[test]
    fn code_ignores_labels() {
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let relabeled = relabel_tree(&t, &[3, 1, 2, 0]).unwrap();
        assert_eq!(canonical_code(&t).unwrap(), canonical_code(&relabeled).unwrap());
        let star = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&t).unwrap(), canonical_code(&star).unwrap());
    }

    #[test]
    fn code_base_cases() {
        let single = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(canonical_code(&single).unwrap().0, "()");
        let edge = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(canonical_code(&edge).unwrap().0, "(())");
    }

    #[test]
    fn relabel_rejects_non_bijections() {
        let t = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(relabel_tree(&t, &[0, 1]).is_err());
        assert!(relabel_tree(&t, &[0, 0, 1]).is_err());
        assert!(relabel_tree(&t, &[0, 1, 3]).is_err());
    }

    #[test]
    fn class_counts_frozen() {
        for (n, expect) in [(2, 1), (4, 1), (6, 1), (8, 1), (10, 2), (12, 2), (14, 4), (16, 6)] {
            let classes = enumerate_13_trees(n).unwrap();
            assert_eq!(classes.len(), expect, "n={n}");
            for (code, t) in &classes {
                assert_eq!(t.n(), n);
                assert!(t.is_13_tree());
                assert_eq!(*code, canonical_code(t).unwrap());
            }
            let codes: Vec<&CanonicalCode> = classes.iter().map(|(c, _)| c).collect();
            assert!(codes.windows(2).all(|w| w[0] < w[1]), "codes not sorted at n={n}");
        }
    }

    #[test]
    fn enumeration_rejects_odd_or_empty() {
        assert!(enumerate_13_trees(0).is_err());
        assert!(enumerate_13_trees(5).is_err());
    }

    #[test]
    fn decoder_round_trip() {
        // Sequence (1, 1, 2) gives degrees (1, 3, 2, 1, 1): vertex 1 joined
        // to the two smallest leaves, then a path out through 2.
        let t = pruefer_decode(&[1, 1, 2], 5).unwrap();
        assert_eq!(t.degree(1), 3);
        assert_eq!(t.degree(2), 2);
        assert!(pruefer_decode(&[1, 9], 4).is_err());
        assert!(pruefer_decode(&[1], 5).is_err());
    }

    #[test]
    fn oracle_matches_generator() {
        for n in [2usize, 4, 6, 8, 10, 12] {
            assert_eq!(
                pruefer_oracle_count(n, &[1, 3]).unwrap(),
                enumerate_13_trees(n).unwrap().len(),
                "n={n}"
            );
        }
    }

    #[test]
    fn oracle_on_odd_orders_and_limits() {
        assert_eq!(pruefer_oracle_count(3, &[1, 3]).unwrap(), 0);
        assert_eq!(pruefer_oracle_count(5, &[1, 3]).unwrap(), 0);
        assert!(matches!(
            pruefer_oracle_count(14, &[1, 3]).unwrap_err(),
            Error::WorkLimitExceeded { .. }
        ));
        assert!(pruefer_oracle_count(1, &[1]).is_err());
        assert!(pruefer_oracle_count(4, &[]).is_err());
        assert!(pruefer_oracle_count(4, &[0, 1]).is_err());
    }

    #[test]
    fn oracle_reproduces_known_tree_counts() {
        // Unlabeled trees on 2..8 vertices: 1, 1, 2, 3, 6, 11, 23.
        for (n, expect) in [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)] {
            let allowed: Vec<usize> = (1..n).collect();
            assert_eq!(pruefer_oracle_count(n, &allowed).unwrap(), expect, "n={n}");
        }
    }

    #[test]
    fn degree_cap_counts_mirror_13_levels() {
        // A 1-3 tree is its internal tree (max degree 3) with forced leaves,
        // so the class count at 2k + 2 vertices equals the number of trees
        // on k vertices with every degree at most 3.
        for (k, n13) in [(4usize, 10usize), (5, 12), (6, 14), (7, 16)] {
            assert_eq!(
                pruefer_oracle_count(k, &[1, 2, 3]).unwrap(),
                enumerate_13_trees(n13).unwrap().len(),
                "internal order {k}"
            );
        }
    }

    #[test]
    fn orbit_reduction_matches_full_label_scan() {
        // Every labeled sequence with all appearance counts 0 or 2, not just
        // the ones with degrees assigned in sorted order.
        for n in [4usize, 6, 8] {
            let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
            let len = n - 2;
            let total = (n as u64).pow(len as u32);
            for mut rank in 0..total {
                let mut seq = vec![0usize; len];
                for slot in seq.iter_mut() {
                    *slot = (rank % n as u64) as usize;
                    rank /= n as u64;
                }
                let mut counts = vec![0u32; n];
                for &s in &seq {
                    counts[s] += 1;
                }
                if counts.iter().any(|&c| c != 0 && c != 2) {
                    continue;
                }
                let t = pruefer_decode(&seq, n).unwrap();
                codes.insert(canonical_code(&t).unwrap());
            }
            assert_eq!(codes.len(), pruefer_oracle_count(n, &[1, 3]).unwrap(), "n={n}");
        }
    }

    #[test]
    fn smallest_class_spectra() {
        // The lone class at n=10 with the smaller spectrum is the one
        // matching the tight construction.
        let classes = enumerate_13_trees(10).unwrap();
        let sizes: Vec<usize> =
            classes.iter().map(|(_, t)| leaf_spectrum(t).unwrap().len()).collect();
        assert_eq!(sizes.iter().min(), Some(&3));
        let extremal =
            crate::constructions::perfect_regular_extremal(3, 2, 1 << 20).unwrap();
        let code = canonical_code(&extremal).unwrap();
        let (min_code, _) = classes
            .iter()
            .zip(&sizes)
            .min_by_key(|((c, _), &s)| (s, (*c).clone()))
            .map(|((c, t), _)| (c.clone(), t.clone()))
            .unwrap();
        assert_eq!(min_code, code);
    }
}
