//! Extremal and reduction constructions. Every generator is deterministic
//! in its vertex numbering, validates its output shape, and guards
//! exponential blowups with an explicit vertex cap that errors instead of
//! truncating.

use crate::intmath::{ceil_log2, pow_saturating};
use crate::tree::{RootedTree, Tree};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default cap on generated tree size.
pub const DEFAULT_VERTEX_LIMIT: u64 = 1 << 24;

fn check_vertex_limit(count: u128, limit: u64, what: &'static str) -> Result<()> {
    if count > limit as u128 {
        return Err(Error::WorkLimitExceeded { work: count, limit: limit as u128, what });
    }
    Ok(())
}

/// Perfect binary tree on `layers` layers in heap order: root 0, children of
/// `i` are `2i+1` and `2i+2`, all leaves on the last layer. One layer is a
/// single vertex.
pub fn perfect_binary(layers: u32, limit: u64) -> Result<RootedTree> {
    if layers == 0 {
        return Err(Error::InvalidParameter {
            name: "layers",
            value: "0".into(),
            reason: "at least one layer required".into(),
        });
    }
    let count = pow_saturating(2, layers) - 1;
    check_vertex_limit(count, limit, "perfect binary tree")?;
    let n = count as usize;
    let edges: Vec<(usize, usize)> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    let tree = Tree::from_edges(n, &edges)?;
    RootedTree::new(tree, 0)
}

fn regular_extremal_size(delta: u64, d: u32) -> u128 {
    // 1 + delta * ((delta-1)^d - 1) / (delta - 2); summed iteratively to stay exact.
    let mut count: u128 = 1;
    let mut level: u128 = delta as u128;
    for _ in 0..d {
        count = count.saturating_add(level);
        level = level.saturating_mul(delta as u128 - 1);
    }
    count
}

/// Tight tree for the spectrum lower bound: a root of degree `delta`, every
/// other internal vertex with `delta - 1` children, all leaves at depth `d`.
/// Vertices are numbered level by level. Its spectrum is {0, 2, ..., 2d}.
pub fn perfect_regular_extremal(delta: usize, d: u32, limit: u64) -> Result<Tree> {
    if delta < 3 {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: delta.to_string(),
            reason: "max degree must be at least 3".into(),
        });
    }
    if d == 0 {
        return Err(Error::InvalidParameter {
            name: "d",
            value: "0".into(),
            reason: "depth must be at least 1".into(),
        });
    }
    let count = regular_extremal_size(delta as u64, d);
    check_vertex_limit(count, limit, "perfect regular extremal tree")?;
    let mut edges = Vec::with_capacity(count as usize - 1);
    let mut next_id = 1usize;
    let mut frontier = vec![0usize];
    for depth in 0..d {
        let fanout = if depth == 0 { delta } else { delta - 1 };
        let mut next_frontier = Vec::with_capacity(frontier.len() * fanout);
        for &p in &frontier {
            for _ in 0..fanout {
                edges.push((p, next_id));
                next_frontier.push(next_id);
                next_id += 1;
            }
        }
        frontier = next_frontier;
    }
    Tree::from_edges(next_id, &edges)
}

/// Trimmed variant with exactly `leaves` leaves and the same spectrum
/// {0, 2, ..., 2d}. Bottom leaves come in sibling tuples of `delta - 1`;
/// deleting at most `delta - 2` per tuple keeps every tuple inhabited,
/// which is what preserves the spectrum and the max degree.
pub fn trimmed_extremal(delta: usize, d: u32, leaves: u64, limit: u64) -> Result<Tree> {
    if delta < 3 {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: delta.to_string(),
            reason: "max degree must be at least 3".into(),
        });
    }
    if d == 0 {
        return Err(Error::InvalidParameter {
            name: "d",
            value: "0".into(),
            reason: "depth must be at least 1".into(),
        });
    }
    let upper = (delta as u128).saturating_mul(pow_saturating(delta as u128 - 1, d - 1));
    if d == 1 {
        // Any deletion from the star would lower the max degree below delta.
        if leaves as u128 != upper {
            return Err(Error::InvalidParameter {
                name: "leaves",
                value: leaves.to_string(),
                reason: format!("with d=1 only leaves={delta} is realizable at max degree {delta}"),
            });
        }
        return perfect_regular_extremal(delta, d, limit);
    }
    let lower = (delta as u128).saturating_mul(pow_saturating(delta as u128 - 1, d - 2));
    if !(lower < leaves as u128 && leaves as u128 <= upper) {
        return Err(Error::InvalidParameter {
            name: "leaves",
            value: leaves.to_string(),
            reason: format!("required range: {lower} < leaves <= {upper} for delta={delta}, d={d}"),
        });
    }
    let full = perfect_regular_extremal(delta, d, limit)?;
    let mut to_delete = (upper - leaves as u128) as usize;
    let per_tuple_cap = delta - 2;
    // Bottom layer is the final contiguous id block; tuples share a parent.
    let mut deleted = vec![false; full.n()];
    let bottom_start = full.n() - upper as usize;
    let mut parents: Vec<usize> = (bottom_start..full.n()).map(|v| full.neighbors(v)[0]).collect();
    parents.dedup();
    'outer: for p in parents {
        if to_delete == 0 {
            break;
        }
        let mut tuple: Vec<usize> = full
            .neighbors(p)
            .iter()
            .copied()
            .filter(|&c| c >= bottom_start)
            .collect();
        tuple.sort_unstable_by(|a, b| b.cmp(a));
        for leaf in tuple.into_iter().take(per_tuple_cap) {
            deleted[leaf] = true;
            to_delete -= 1;
            if to_delete == 0 {
                break 'outer;
            }
        }
    }
    if to_delete > 0 {
        return Err(Error::internal("leaf trim failed to reach target"));
    }
    let kept: Vec<usize> = (0..full.n()).filter(|&v| !deleted[v]).collect();
    let mut new_id = vec![usize::MAX; full.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<(usize, usize)> = full
        .edges()
        .iter()
        .filter(|&&(u, v)| !deleted[u] && !deleted[v])
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    Tree::from_edges(kept.len(), &edges)
}

/// Star with one subdivided edge: center 0 of degree `delta`, `delta - 1`
/// direct leaves, one chain of `n - delta` edges. Spectrum is exactly
/// {0, 2, n - delta + 1}, so at least one subdivision is required.
pub fn subdivided_star(n: usize, delta: usize) -> Result<Tree> {
    if delta < 3 {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: delta.to_string(),
            reason: "max degree must be at least 3".into(),
        });
    }
    if n < delta + 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n.to_string(),
            reason: format!("need n >= delta + 2 = {} for a subdivided edge", delta + 2),
        });
    }
    let mut edges = Vec::with_capacity(n - 1);
    for leaf in 1..delta {
        edges.push((0, leaf));
    }
    edges.push((0, delta));
    for v in delta..n - 1 {
        edges.push((v, v + 1));
    }
    Tree::from_edges(n, &edges)
}

/// Parameters of the long-path construction, recorded alongside the tree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Theorem4Params {
    /// Path-length bound the construction is tuned against.
    pub len_bound: u64,
    pub n: usize,
    /// Block width, the integer cube root of `len_bound`.
    pub m: u64,
    /// Base sequence of subtree layer counts, length `m^2`.
    pub base_seq: Vec<u64>,
    /// Number of decorated spine slots actually used.
    pub prefix_len: usize,
    /// Vertex count of the final, trimmed subtree.
    pub last_tree_size: usize,
    /// Running total `2 + sum 2^{a'_i}` at the stopping index.
    pub threshold_sum: u128,
}

/// Base sequence: within block `b` (1-based), values run `bm - 1, bm - 2,
/// ..., down`, then the block's top `bm` last, so that `a_i + i` is always
/// divisible by `m` while consecutive values stay far apart.
pub fn theorem4_sequence(m: u64) -> Vec<u64> {
    let mut a = Vec::with_capacity((m * m) as usize);
    for i in 1..=m * m {
        let rem = i % m;
        let block = i.div_ceil(m);
        a.push(block * m - rem);
    }
    a
}

fn pow2_term(exp: u64) -> u128 {
    if exp >= 120 {
        u128::MAX >> 1
    } else {
        1u128 << exp
    }
}

/// Builds a 1-3 tree on exactly `n` vertices whose every leaf witnesses few
/// distinct short path lengths: a spine with perfect binary subtrees whose
/// layer counts follow the periodic base sequence, the last subtree trimmed
/// to land on `n` exactly.
pub fn theorem4_tree(len_bound: u64, n: usize, limit: u64) -> Result<(Tree, Theorem4Params)> {
    if n % 2 != 0 || n < 6 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n.to_string(),
            reason: "an even n >= 6 is required for a 1-3 tree of this shape".into(),
        });
    }
    let m = crate::intmath::icbrt(len_bound as u128) as u64;
    if m < 2 {
        return Err(Error::InvalidParameter {
            name: "len_bound",
            value: len_bound.to_string(),
            reason: "need len_bound >= 8 so the block width is at least 2".into(),
        });
    }
    check_vertex_limit(n as u128, limit, "spine-and-subtrees tree")?;
    let base = theorem4_sequence(m);
    let period = base.len();
    let layer_at = |i: usize| base[(i - 1) % period]; // 1-based slot index
    let mut running: u128 = 2;
    let mut slot = 0usize;
    let (t, sum_before, sum) = loop {
        slot += 1;
        let before = running;
        running = running.saturating_add(pow2_term(layer_at(slot)));
        if running >= n as u128 {
            break (slot, before, running);
        }
    };
    // Full subtrees plus spine occupy sum_before + 1 vertices, at most n - 1.
    let used = sum_before + 1;
    if used >= n as u128 {
        return Err(Error::internal(format!("prefix scan overshot: used={used}, n={n}")));
    }
    let last_size = (n as u128 - used) as usize;
    let last_layers = ceil_log2(last_size as u128 + 1);
    debug_assert!(last_size % 2 == 1);
    debug_assert!(pow_saturating(2, last_layers) - 1 >= last_size as u128);

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    for i in 0..=t {
        edges.push((i, i + 1));
    }
    let mut next_id = t + 2;
    for slot in 1..=t {
        let (local_n, local_edges) = if slot < t {
            full_binary_local(layer_at(slot) as u32)
        } else {
            trimmed_binary_local(last_layers, last_size)
        };
        edges.push((slot, next_id));
        for (u, v) in local_edges {
            edges.push((next_id + u, next_id + v));
        }
        next_id += local_n;
    }
    if next_id != n {
        return Err(Error::internal(format!("construction built {next_id} vertices, wanted {n}")));
    }
    let tree = Tree::from_edges(n, &edges)?;
    if !tree.is_13_tree() {
        return Err(Error::internal("spine-and-subtrees output is not a 1-3 tree"));
    }
    let params = Theorem4Params {
        len_bound,
        n,
        m,
        base_seq: base,
        prefix_len: t,
        last_tree_size: last_size,
        threshold_sum: sum,
    };
    Ok((tree, params))
}

/// Heap-ordered perfect binary tree as local edges rooted at 0.
fn full_binary_local(layers: u32) -> (usize, Vec<(usize, usize)>) {
    let n = (pow_saturating(2, layers) - 1) as usize;
    ((n), (1..n).map(|v| ((v - 1) / 2, v)).collect())
}

/// Perfect binary tree on `layers` layers with bottom sibling pairs deleted
/// in ascending parent order until `target` vertices remain. `target` must
/// have the same parity as the full count and stay above the previous layer.
fn trimmed_binary_local(layers: u32, target: usize) -> (usize, Vec<(usize, usize)>) {
    let full = (pow_saturating(2, layers) - 1) as usize;
    debug_assert!(target <= full);
    debug_assert!((full - target) % 2 == 0);
    let mut deleted = vec![false; full];
    let mut pairs = (full - target) / 2;
    if pairs > 0 {
        let first_parent = (pow_saturating(2, layers - 2) - 1) as usize;
        let mut p = first_parent;
        while pairs > 0 {
            deleted[2 * p + 1] = true;
            deleted[2 * p + 2] = true;
            pairs -= 1;
            p += 1;
        }
    }
    let kept: Vec<usize> = (0..full).filter(|&v| !deleted[v]).collect();
    let mut new_id = vec![usize::MAX; full];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = (1..full)
        .filter(|&v| !deleted[v])
        .map(|v| (new_id[(v - 1) / 2], new_id[v]))
        .collect();
    (kept.len(), edges)
}

/// One decorated spine slot of `sequence_to_tree`: the spine vertex, the
/// layer count of its appended subtree, and the subtree's contiguous id
/// block (root first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedSlot {
    pub spine_vertex: usize,
    pub layers: u64,
    pub root: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceTreeLayout {
    /// Spine vertices are `0..=spine_end` in order.
    pub spine_end: usize,
    pub slots: Vec<DecoratedSlot>,
}

impl SequenceTreeLayout {
    /// Leaves of slot `i`'s subtree all sit at distance `layers` from the
    /// spine vertex.
    pub fn slot_vertices(&self, i: usize) -> std::ops::Range<usize> {
        let s = &self.slots[i];
        s.root..s.root + s.count
    }
}

/// Embeds a positive integer sequence into a 1-3 tree: a spine path of
/// length `seq.len() * mult + 2` whose every interior vertex carries a
/// perfect binary subtree, layer counts cycling through the sequence. The
/// nearest-leaf distance from the i-th decorated vertex is exactly the
/// appended layer count, so leaf distances between slots i < j come out to
/// `a_i + a_j + (j - i)`.
pub fn sequence_to_tree(seq: &[u64], mult: usize, limit: u64) -> Result<(Tree, SequenceTreeLayout)> {
    if seq.is_empty() {
        return Err(Error::InvalidParameter {
            name: "seq",
            value: "[]".into(),
            reason: "at least one entry required".into(),
        });
    }
    if mult == 0 {
        return Err(Error::InvalidParameter {
            name: "mult",
            value: "0".into(),
            reason: "multiplier must be at least 1".into(),
        });
    }
    if let Some(pos) = seq.iter().position(|&a| a == 0) {
        return Err(Error::InvalidParameter {
            name: "seq",
            value: format!("a[{}]=0", pos + 1),
            reason: "layer counts must be positive; a zero would need a leaf on the spine itself".into(),
        });
    }
    let spine_edges = seq.len() * mult + 2;
    let decorated = spine_edges - 1;
    let mut total: u128 = spine_edges as u128 + 1;
    for j in 0..decorated {
        total = total.saturating_add(pow2_term(seq[j % seq.len()]) - 1);
    }
    check_vertex_limit(total, limit, "sequence embedding")?;
    let n = total as usize;
    let mut edges: Vec<(usize, usize)> = (0..spine_edges).map(|i| (i, i + 1)).collect();
    let mut next_id = spine_edges + 1;
    let mut slots = Vec::with_capacity(decorated);
    for j in 0..decorated {
        let layers = seq[j % seq.len()];
        let (local_n, local_edges) = full_binary_local(layers as u32);
        let spine_vertex = j + 1;
        edges.push((spine_vertex, next_id));
        for (u, v) in local_edges {
            edges.push((next_id + u, next_id + v));
        }
        slots.push(DecoratedSlot { spine_vertex, layers, root: next_id, count: local_n });
        next_id += local_n;
    }
    if next_id != n {
        return Err(Error::internal(format!("embedding built {next_id} vertices, wanted {n}")));
    }
    let tree = Tree::from_edges(n, &edges)?;
    if !tree.is_13_tree() {
        return Err(Error::internal("sequence embedding is not a 1-3 tree"));
    }
    Ok((tree, SequenceTreeLayout { spine_end: spine_edges, slots }))
}

/// General graph emitted by the closure; not a `Tree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphEdgeList {
    pub fn to_document(&self) -> String {
        crate::tree::write_edge_list(self.n, &self.edges)
    }
}

/// Degree-3-critical closure of a 1-3 tree: two new vertices adjacent to
/// every leaf and to each other. The result has `n + 2` vertices and
/// `2(n + 2) - 2` edges.
pub fn degree3_closure(t: &Tree) -> Result<GraphEdgeList> {
    if !t.is_13_tree() {
        return Err(Error::InvalidTree { reason: "closure requires every degree in {1, 3}".into() });
    }
    let n = t.n();
    let (a, b) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = t.edges().to_vec();
    for leaf in t.leaves() {
        edges.push((leaf, a));
        edges.push((leaf, b));
    }
    edges.push((a, b));
    edges.sort_unstable();
    Ok(GraphEdgeList { n: n + 2, edges })
}
