use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::Index;

use leafpaths::constructions::{sequence_to_tree, trimmed_extremal, DEFAULT_VERTEX_LIMIT};
use leafpaths::enumeration::{canonical_code, relabel_tree};
use leafpaths::spectrum::{leaf_spectrum, witnessed};
use leafpaths::tree::{bfs_distances, diameter, parse_tree, write_tree, RootedTree, Tree};
use leafpaths::witness::{
    erdos_szekeres, es_guarantee, lemma5_witness, lemma8_guarantee, lemma8_shift_set,
    theorem1_certificate, Direction, Side,
};

/// Random tree: vertex i + 1 hangs off a uniformly chosen earlier vertex.
fn tree_from_indices(parents: &[Index]) -> Tree {
    let edges: Vec<(usize, usize)> =
        parents.iter().enumerate().map(|(i, idx)| (i + 1, idx.index(i + 1))).collect();
    Tree::from_edges(parents.len() + 1, &edges).unwrap()
}

fn tree_and_permutation() -> impl Strategy<Value = (Vec<Index>, Vec<usize>)> {
    prop::collection::vec(any::<Index>(), 1..40).prop_flat_map(|parents| {
        let n = parents.len() + 1;
        let perm: Vec<usize> = (0..n).collect();
        (Just(parents), Just(perm).prop_shuffle())
    })
}

fn bounded_sequence(n_max: usize, m_max: u64) -> impl Strategy<Value = (u64, Vec<i64>)> {
    (1..=m_max).prop_flat_map(move |m| {
        (Just(m), prop::collection::vec(0..=m as i64, 1..=n_max))
    })
}

proptest! {
    #[test]
    fn document_round_trip(parents in prop::collection::vec(any::<Index>(), 1..48)) {
        let t = tree_from_indices(&parents);
        let back = parse_tree(&write_tree(&t)).unwrap();
        prop_assert_eq!(t.n(), back.n());
        prop_assert_eq!(t.edges(), back.edges());
    }

    #[test]
    fn spectrum_is_union_of_witnessed_sets(parents in prop::collection::vec(any::<Index>(), 1..48)) {
        let t = tree_from_indices(&parents);
        let spectrum = leaf_spectrum(&t).unwrap();
        prop_assert_eq!(spectrum.values().first().copied(), Some(0));
        prop_assert_eq!(spectrum.max().unwrap(), diameter(&t).unwrap());
        let mut union = BTreeSet::new();
        for v in t.leaves() {
            let w = witnessed(&t, v).unwrap();
            prop_assert!(w.is_subset_of(&spectrum), "leaf {} witnessed outside spectrum", v);
            union.extend(w.values().iter().copied());
        }
        let union: Vec<usize> = union.into_iter().collect();
        prop_assert_eq!(union, spectrum.values().to_vec());
    }

    #[test]
    fn code_and_spectrum_ignore_labels((parents, perm) in tree_and_permutation()) {
        let t = tree_from_indices(&parents);
        let relabeled = relabel_tree(&t, &perm).unwrap();
        prop_assert_eq!(canonical_code(&t).unwrap(), canonical_code(&relabeled).unwrap());
        prop_assert_eq!(
            leaf_spectrum(&t).unwrap().values().to_vec(),
            leaf_spectrum(&relabeled).unwrap().values().to_vec()
        );
    }

    #[test]
    fn spectrum_certificate_sound_on_random_trees(parents in prop::collection::vec(any::<Index>(), 1..40)) {
        let t = tree_from_indices(&parents);
        let cert = theorem1_certificate(&t).unwrap();
        prop_assert!(cert.verify(&t).is_ok());
        prop_assert!(cert.bound_holds);
        let spectrum = leaf_spectrum(&t).unwrap();
        for len in cert.lengths() {
            prop_assert!(spectrum.contains(len));
        }
    }

    #[test]
    fn shift_set_dominated_by_full_set_oracle((m, a) in bounded_sequence(12, 6)) {
        let r = lemma8_shift_set(&a, m).unwrap();
        prop_assert_eq!(r.guarantee, lemma8_guarantee(a.len(), m));
        prop_assert!(r.values.len() >= r.guarantee);
        // values is the ascending set of shifts of the chosen positions
        let mut expect: Vec<i64> = r
            .indices
            .iter()
            .map(|&i| match r.side {
                Side::Plus => a[i - 1] + i as i64,
                Side::Minus => a[i - 1] - i as i64,
            })
            .collect();
        expect.sort_unstable();
        prop_assert!(expect.windows(2).all(|w| w[0] < w[1]), "shift collision");
        prop_assert_eq!(&r.values, &expect);
        let plus: BTreeSet<i64> =
            a.iter().enumerate().map(|(i, &v)| v + (i + 1) as i64).collect();
        let minus: BTreeSet<i64> =
            a.iter().enumerate().map(|(i, &v)| v - (i + 1) as i64).collect();
        prop_assert!(r.values.len() <= plus.len().max(minus.len()));
    }

    #[test]
    fn shift_set_guarantee_at_scale((m, a) in bounded_sequence(300, 20)) {
        let r = lemma8_shift_set(&a, m).unwrap();
        prop_assert!(r.values.len() >= lemma8_guarantee(a.len(), m));
    }

    #[test]
    fn monotone_subsequence_long_enough(a in prop::collection::vec(-1000i64..1000, 1..200)) {
        let r = erdos_szekeres(&a).unwrap();
        prop_assert!(r.indices.len() >= es_guarantee(a.len()));
        prop_assert!(r.indices.windows(2).all(|w| w[0] < w[1]));
        let picked: Vec<i64> = r.indices.iter().map(|&i| a[i]).collect();
        match r.direction {
            Direction::Increasing => prop_assert!(picked.windows(2).all(|w| w[0] <= w[1])),
            Direction::Decreasing => prop_assert!(picked.windows(2).all(|w| w[0] >= w[1])),
        }
    }

    #[test]
    fn descent_certificate_on_random_rooted_trees(
        (parents, root) in (prop::collection::vec(any::<Index>(), 1..40), any::<Index>())
    ) {
        let t = tree_from_indices(&parents);
        let root = root.index(t.n());
        let rt = RootedTree::new(t, root).unwrap();
        let deepest = rt.tree.leaves().iter().map(|&v| rt.depth[v]).max().unwrap();
        prop_assume!(deepest > 0);
        let marked = rt.leaves_at_depth(deepest);
        let delta = rt.tree.max_degree().max(3);
        let cert = lemma5_witness(&rt, &marked, delta).unwrap();
        prop_assert!(cert.verify(&rt.tree).is_ok());
        prop_assert!(cert.bound_holds);
        prop_assert!(marked.contains(&cert.witness));
        for len in cert.lengths() {
            prop_assert_eq!(len % 2, 0);
            prop_assert!(len <= 2 * deepest);
        }
    }

    #[test]
    fn pair_sum_count_matches_brute_force(a in prop::collection::vec(0u64..=3, 2..8)) {
        let mut sums = BTreeSet::new();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                sums.insert(a[i] + a[j] + (j - i) as u64);
            }
        }
        prop_assert_eq!(
            leafpaths::conjecture::conjecture_c_value(&a).unwrap(),
            sums.len()
        );
    }

    #[test]
    fn decorated_slots_realize_pair_sums(seq in prop::collection::vec(1u64..=3, 2..5)) {
        let (t, layout) = sequence_to_tree(&seq, 1, DEFAULT_VERTEX_LIMIT).unwrap();
        // One period plus a cycled remainder; check the first period only.
        for i in 0..seq.len() {
            let from: Vec<usize> =
                layout.slot_vertices(i).filter(|&v| t.is_leaf(v)).collect();
            for j in i + 1..seq.len() {
                let expect = (seq[i] + seq[j]) as usize + (j - i);
                for &u in &from {
                    let dist = bfs_distances(&t, u).unwrap();
                    for v in layout.slot_vertices(j).filter(|&v| t.is_leaf(v)) {
                        prop_assert_eq!(dist[v], expect, "slots {} {}", i, j);
                    }
                }
            }
        }
    }

    #[test]
    fn trimmed_family_keeps_spectrum(
        (delta, d) in (3usize..=5, 2u32..=3),
        pick in any::<Index>()
    ) {
        let lo = delta as u64 * (delta as u64 - 1).pow(d - 2);
        let hi = delta as u64 * (delta as u64 - 1).pow(d - 1);
        let leaves = lo + 1 + pick.index((hi - lo) as usize) as u64;
        let t = trimmed_extremal(delta, d, leaves, DEFAULT_VERTEX_LIMIT).unwrap();
        prop_assert_eq!(t.leaf_count() as u64, leaves);
        prop_assert!(t.max_degree() <= delta);
        let expect: Vec<usize> = (0..=d as usize).map(|k| 2 * k).collect();
        prop_assert_eq!(leaf_spectrum(&t).unwrap().values().to_vec(), expect);
    }
}
