//! Tree representation, parsing, and the path primitives everything else
//! builds on: BFS distances, longest paths, the hub vertex, spanning
//! subtrees, and off-path components.

use crate::{Error, Result};

const UNVISITED: usize = usize::MAX;

/// Unrooted tree on vertices `0..n`. Edges are normalized `(min, max)` and
/// kept sorted; adjacency lists are sorted ascending so every traversal that
/// scans neighbors in order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates edge count, ranges, simplicity, and connectivity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidTree { reason: "vertex count must be at least 1".into() });
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree {
                reason: format!("expected {} edges for n={}, got {}", n - 1, n, edges.len()),
            });
        }
        let mut builder = TreeBuilder::new(n);
        for &(u, v) in edges {
            builder.add_edge(u, v, None)?;
        }
        builder.finish()
    }

    /// Self-check used by generators; `from_edges` establishes the same
    /// invariants for external input.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1 || self.n == 1
    }

    /// Degree-1 vertices ascending; `[0]` for the single-vertex tree.
    pub fn leaves(&self) -> Vec<usize> {
        if self.n == 1 {
            return vec![0];
        }
        (0..self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// Every degree is 1 or 3.
    pub fn is_13_tree(&self) -> bool {
        if self.n == 1 {
            return false;
        }
        (0..self.n).all(|v| matches!(self.adj[v].len(), 1 | 3))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }
}

/// Incremental builder shared by `from_edges` and the parser; attributes
/// structural errors to input line numbers when they are known.
struct TreeBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dsu: Vec<usize>,
}

impl TreeBuilder {
    fn new(n: usize) -> Self {
        TreeBuilder { n, edges: Vec::with_capacity(n.saturating_sub(1)), adj: vec![Vec::new(); n], dsu: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.dsu[x] != x {
            self.dsu[x] = self.dsu[self.dsu[x]];
            x = self.dsu[x];
        }
        x
    }

    fn add_edge(&mut self, u: usize, v: usize, line: Option<usize>) -> Result<()> {
        let line = line.unwrap_or(0);
        if u >= self.n {
            return Err(Error::IdOutOfRange { line, id: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::IdOutOfRange { line, id: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop { line, id: u });
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.adj[a].contains(&b) {
            return Err(Error::DuplicateEdge { line, u: a, v: b });
        }
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return Err(Error::CycleDetected { line, u: a, v: b });
        }
        self.dsu[ra] = rb;
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.edges.push((a, b));
        Ok(())
    }

    fn finish(mut self) -> Result<Tree> {
        let root = self.find(0);
        let components = (0..self.n).filter(|&v| self.find(v) == root).count();
        if components != self.n {
            let mut roots = std::collections::BTreeSet::new();
            for v in 0..self.n {
                let r = self.find(v);
                roots.insert(r);
            }
            return Err(Error::Disconnected { components: roots.len() });
        }
        self.edges.sort_unstable();
        for list in &mut self.adj {
            list.sort_unstable();
        }
        Ok(Tree { n: self.n, edges: self.edges, adj: self.adj })
    }
}

/// Parses the edge-list format: '#' starts a comment, blank lines are
/// skipped, the first payload line is `n`, each following line is one edge
/// `u v`. Errors carry 1-based line numbers.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut n: Option<usize> = None;
    let mut builder: Option<TreeBuilder> = None;
    let mut edges_read = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                let count: usize = line.parse().map_err(|_| Error::InvalidVertexCount {
                    reason: format!("line {line_no}: expected a vertex count, got {line:?}"),
                })?;
                if count == 0 {
                    return Err(Error::InvalidVertexCount {
                        reason: format!("line {line_no}: vertex count must be at least 1"),
                    });
                }
                n = Some(count);
                builder = Some(TreeBuilder::new(count));
            }
            Some(count) => {
                if edges_read == count - 1 {
                    return Err(Error::Malformed {
                        line: line_no,
                        reason: format!("unexpected extra edge line after {} edges", count - 1),
                    });
                }
                let mut parts = line.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), None) => {
                        let u: usize = a.parse().map_err(|_| Error::Malformed {
                            line: line_no,
                            reason: format!("expected integer vertex id, got {a:?}"),
                        })?;
                        let v: usize = b.parse().map_err(|_| Error::Malformed {
                            line: line_no,
                            reason: format!("expected integer vertex id, got {b:?}"),
                        })?;
                        (u, v)
                    }
                    _ => {
                        return Err(Error::Malformed {
                            line: line_no,
                            reason: format!("expected \"u v\", got {line:?}"),
                        })
                    }
                };
                builder.as_mut().unwrap().add_edge(u, v, Some(line_no))?;
                edges_read += 1;
            }
        }
    }
    match builder {
        None => Err(Error::InvalidVertexCount { reason: "empty document".into() }),
        Some(b) => b.finish(),
    }
}

/// Edge-list document for a tree: vertex count line, then edges sorted
/// lexicographically. Round-trips through `parse_tree`.
pub fn write_tree(t: &Tree) -> String {
    write_edge_list(t.n(), t.edges())
}

/// Same document shape for a general graph (the degree-3 closure emits one);
/// only re-parses as a tree when the edge set actually is one.
pub fn write_edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for &(u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// BFS distances from `source`; every vertex of a tree is reachable.
pub fn bfs_distances(t: &Tree, source: usize) -> Result<Vec<usize>> {
    t.check_vertex(source)?;
    let mut dist = vec![UNVISITED; t.n()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::with_capacity(t.n());
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if dist[w] == UNVISITED {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// BFS parents from `source` (parent of the source is itself). Neighbor
/// lists are sorted, so the parent assignment is deterministic.
pub fn bfs_parents(t: &Tree, source: usize) -> Result<Vec<usize>> {
    t.check_vertex(source)?;
    let mut parent = vec![UNVISITED; t.n()];
    parent[source] = source;
    let mut queue = std::collections::VecDeque::with_capacity(t.n());
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if parent[w] == UNVISITED {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    Ok(parent)
}

fn farthest(dist: &[usize]) -> usize {
    let mut best = 0usize;
    for (v, &d) in dist.iter().enumerate() {
        if d != UNVISITED && d > dist[best] {
            best = v;
        }
    }
    best
}

/// Simple path as its vertex sequence; length is the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    vertices: Vec<usize>,
}

impl PathRecord {
    /// Validates that consecutive vertices are adjacent in `t` and no vertex
    /// repeats.
    pub fn new(t: &Tree, vertices: Vec<usize>) -> Result<PathRecord> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath { reason: "empty vertex sequence".into() });
        }
        let mut seen = vec![false; t.n()];
        for &v in &vertices {
            t.check_vertex(v)?;
            if seen[v] {
                return Err(Error::InvalidPath { reason: format!("vertex {v} repeats") });
            }
            seen[v] = true;
        }
        for pair in vertices.windows(2) {
            if !t.neighbors(pair[0]).contains(&pair[1]) {
                return Err(Error::InvalidPath {
                    reason: format!("{} and {} are not adjacent", pair[0], pair[1]),
                });
            }
        }
        Ok(PathRecord { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// Longest path by double sweep: BFS from vertex 0 picks the farthest vertex
/// (smallest id on ties), BFS from there picks the far end the same way.
/// The recorded path runs from the first sweep's vertex to the second's.
pub fn longest_path(t: &Tree) -> Result<PathRecord> {
    if t.n() == 1 {
        return PathRecord::new(t, vec![0]);
    }
    let d0 = bfs_distances(t, 0)?;
    let u = farthest(&d0);
    let du = bfs_distances(t, u)?;
    let v = farthest(&du);
    let parent = bfs_parents(t, u)?;
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    PathRecord::new(t, path)
}

pub fn diameter(t: &Tree) -> Result<usize> {
    Ok(longest_path(t)?.len())
}

/// Vertex lying on every longest path: the midpoint of one longest path (for
/// odd diameter, the central-edge endpoint closer to the path's first
/// vertex), moved to its unique neighbor if it is a leaf. Only with n = 2 is
/// that neighbor also a leaf; both ends of a single edge lie on the unique
/// longest path, so the invariant stands.
pub fn hub_vertex(t: &Tree) -> Result<usize> {
    if t.n() == 1 {
        return Err(Error::SingleVertex { what: "hub vertex" });
    }
    let p = longest_path(t)?;
    let m = p.len();
    let mid = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
    let mut hub = p.vertices()[mid];
    if t.degree(hub) == 1 {
        hub = t.neighbors(hub)[0];
    }
    Ok(hub)
}

/// Minimal spanning subtree of a kept vertex set, re-indexed to `0..n'`.
/// `to_original[new_id] = old_id`; new ids follow ascending old-id order.
#[derive(Debug, Clone)]
pub struct SubtreeExtraction {
    pub tree: Tree,
    pub to_original: Vec<usize>,
}

impl SubtreeExtraction {
    pub fn from_original(&self, old: usize) -> Option<usize> {
        self.to_original.binary_search(&old).ok()
    }
}

/// Union of all pairwise paths between `keep` vertices (equivalently, paths
/// from each kept vertex to the first one). Every leaf of the result is a
/// kept vertex; distances between kept vertices are preserved.
pub fn minimal_spanning_subtree(t: &Tree, keep: &[usize]) -> Result<SubtreeExtraction> {
    if keep.is_empty() {
        return Err(Error::InvalidParameter {
            name: "keep",
            value: "[]".into(),
            reason: "at least one vertex required".into(),
        });
    }
    for &v in keep {
        t.check_vertex(v)?;
    }
    let anchor = keep[0];
    let parent = bfs_parents(t, anchor)?;
    let mut marked = vec![false; t.n()];
    marked[anchor] = true;
    for &v in keep {
        let mut cur = v;
        while !marked[cur] {
            marked[cur] = true;
            cur = parent[cur];
        }
    }
    let to_original: Vec<usize> = (0..t.n()).filter(|&v| marked[v]).collect();
    let mut new_id = vec![UNVISITED; t.n()];
    for (i, &v) in to_original.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .filter(|&&(u, v)| marked[u] && marked[v])
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    let tree = Tree::from_edges(to_original.len(), &edges)
        .map_err(|e| Error::internal(format!("spanning subtree not a tree: {e}")))?;
    Ok(SubtreeExtraction { tree, to_original })
}

/// Tree with a distinguished root plus parent and depth arrays
/// (`parent[root] == root`).
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub tree: Tree,
    pub root: usize,
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<RootedTree> {
        tree.check_vertex(root)?;
        let parent = bfs_parents(&tree, root)?;
        let depth = bfs_distances(&tree, root)?;
        Ok(RootedTree { tree, root, parent, depth })
    }

    /// Children in ascending id order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.tree
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.parent[w] == v && w != self.root)
            .collect()
    }

    pub fn leaves_at_depth(&self, d: usize) -> Vec<usize> {
        self.tree.leaves().into_iter().filter(|&v| self.depth[v] == d).collect()
    }
}

/// Component of `t` minus the edges of a path, rooted at its path vertex and
/// re-indexed; `to_original` maps new ids back.
#[derive(Debug, Clone)]
pub struct OffPathComponent {
    pub rooted: RootedTree,
    pub to_original: Vec<usize>,
}

impl OffPathComponent {
    pub fn original_root(&self) -> usize {
        self.to_original[self.rooted.root]
    }
}

/// Components of `t` minus `p`'s edges, one per path vertex, in path order.
/// In a tree no edge joins two non-consecutive path vertices, so each
/// component contains exactly one path vertex and they partition `V(t)`.
pub fn off_path_components(t: &Tree, p: &PathRecord) -> Result<Vec<OffPathComponent>> {
    let on_path = {
        let mut on = vec![false; t.n()];
        for &v in p.vertices() {
            on[v] = true;
        }
        on
    };
    let mut assigned = vec![false; t.n()];
    let mut out = Vec::with_capacity(p.vertices().len());
    for &anchor in p.vertices() {
        if assigned[anchor] {
            return Err(Error::internal(format!("path vertex {anchor} in two components")));
        }
        let mut members = vec![anchor];
        assigned[anchor] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(anchor);
        while let Some(v) = queue.pop_front() {
            for &w in t.neighbors(v) {
                // Path edges are exactly the edges between two path vertices.
                if on_path[v] && on_path[w] {
                    continue;
                }
                if !assigned[w] {
                    assigned[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        let mut new_id = std::collections::HashMap::with_capacity(members.len());
        for (i, &v) in members.iter().enumerate() {
            new_id.insert(v, i);
        }
        let edges: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .filter(|&&(u, v)| new_id.contains_key(&u) && new_id.contains_key(&v) && !(on_path[u] && on_path[v]))
            .map(|&(u, v)| (new_id[&u], new_id[&v]))
            .collect();
        let tree = Tree::from_edges(members.len(), &edges)
            .map_err(|e| Error::internal(format!("off-path component not a tree: {e}")))?;
        let root = new_id[&anchor];
        out.push(OffPathComponent { rooted: RootedTree::new(tree, root)?, to_original: members });
    }
    let unassigned = assigned.iter().filter(|&&a| !a).count();
    if unassigned > 0 {
        return Err(Error::internal(format!("{unassigned} vertices in no off-path component")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_tree(n: usize) -> Tree {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let text = "# comment\n4\n0 1  # trailing comment\n1 2\n1 3\n";
        let t = parse_tree(text).unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (1, 3)]);
        let rewritten = write_tree(&t);
        let t2 = parse_tree(&rewritten).unwrap();
        assert_eq!(t, t2);
    }

    #[test]
    fn parse_single_vertex() {
        let t = parse_tree("1\n").unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.leaves(), vec![0]);
        assert!(t.is_leaf(0));
    }

    #[test]
    fn parse_disconnected() {
        let err = parse_tree("4\n0 1\n2 3\n").unwrap_err();
        assert!(matches!(err, Error::Disconnected { components: 2 }));
    }

    #[test]
    fn parse_cycle_with_line_number() {
        let err = parse_tree("4\n0 1\n1 2\n0 2\n").unwrap_err();
        assert!(matches!(err, Error::CycleDetected { line: 4, u: 0, v: 2 }));
    }

    #[test]
    fn parse_duplicate_edge() {
        let err = parse_tree("3\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { line: 3, u: 0, v: 1 }));
    }

    #[test]
    fn parse_self_loop() {
        let err = parse_tree("3\n0 0\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 2, id: 0 }));
    }

    #[test]
    fn parse_out_of_range() {
        let err = parse_tree("3\n0 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::IdOutOfRange { line: 2, id: 3, n: 3 }));
    }

    #[test]
    fn parse_malformed_line() {
        let err = parse_tree("3\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 3, .. }));
    }

    #[test]
    fn parse_extra_edges() {
        let err = parse_tree("2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 3, .. }));
    }

    #[test]
    fn longest_path_on_path_graph() {
        let t = path_tree(5);
        let p = longest_path(&t).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.vertices(), &[4, 3, 2, 1, 0]);
    }

    #[test]
    fn longest_path_single_vertex() {
        let t = parse_tree("1\n").unwrap();
        let p = longest_path(&t).unwrap();
        assert_eq!(p.len(), 0);
        assert_eq!(p.vertices(), &[0]);
    }

    #[test]
    fn hub_of_even_diameter_path_is_midpoint() {
        let t = path_tree(5);
        assert_eq!(hub_vertex(&t).unwrap(), 2);
    }

    #[test]
    fn hub_of_single_edge() {
        let t = path_tree(2);
        // Both endpoints lie on the only longest path; the leaf rule lands on 0.
        assert_eq!(hub_vertex(&t).unwrap(), 0);
    }

    #[test]
    fn hub_of_star_is_center() {
        let t = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(hub_vertex(&t).unwrap(), 0);
    }

    #[test]
    fn spider_hub_lies_on_all_longest_paths() {
        // Three legs of length 2 from center 0; every longest path joins two
        // leg tips through the center. Exhaustive check over all leaf pairs.
        let t = Tree::from_edges(
            7,
            &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        )
        .unwrap();
        let hub = hub_vertex(&t).unwrap();
        assert_eq!(hub, 0);
        let m = diameter(&t).unwrap();
        assert_eq!(m, 4);
        let leaves = t.leaves();
        for &a in &leaves {
            let da = bfs_distances(&t, a).unwrap();
            let pa = bfs_parents(&t, a).unwrap();
            for &b in &leaves {
                if a < b && da[b] == m {
                    let mut cur = b;
                    let mut seen_hub = cur == hub;
                    while cur != a {
                        cur = pa[cur];
                        seen_hub |= cur == hub;
                    }
                    assert!(seen_hub, "hub {hub} missing from longest path {a}..{b}");
                }
            }
        }
    }

    #[test]
    fn minimal_spanning_subtree_of_two_leaves_is_their_path() {
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let ex = minimal_spanning_subtree(&t, &[2, 4]).unwrap();
        assert_eq!(ex.to_original, vec![0, 1, 2, 3, 4]);
        assert_eq!(ex.tree.n(), 5);
        assert_eq!(crate::tree::diameter(&ex.tree).unwrap(), 4);
        // Distances between kept vertices preserved.
        let d_orig = bfs_distances(&t, 2).unwrap();
        let d_new = bfs_distances(&ex.tree, ex.from_original(2).unwrap()).unwrap();
        assert_eq!(d_orig[4], d_new[ex.from_original(4).unwrap()]);
    }

    #[test]
    fn minimal_spanning_subtree_single_vertex() {
        let t = path_tree(4);
        let ex = minimal_spanning_subtree(&t, &[2]).unwrap();
        assert_eq!(ex.tree.n(), 1);
        assert_eq!(ex.to_original, vec![2]);
    }

    #[test]
    fn off_path_components_of_caterpillar() {
        // Path 0-1-2 with leaf 3 on vertex 1.
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let p = PathRecord::new(&t, vec![0, 1, 2]).unwrap();
        let comps = off_path_components(&t, &p).unwrap();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_original, vec![0]);
        assert_eq!(comps[1].to_original, vec![1, 3]);
        assert_eq!(comps[1].original_root(), 1);
        assert_eq!(comps[2].to_original, vec![2]);
        let total: usize = comps.iter().map(|c| c.to_original.len()).sum();
        assert_eq!(total, t.n());
    }

    #[test]
    fn rooted_tree_children_and_depths() {
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        assert_eq!(rt.children(0), vec![1]);
        assert_eq!(rt.children(1), vec![2, 3]);
        assert_eq!(rt.depth, vec![0, 1, 2, 2]);
        assert_eq!(rt.leaves_at_depth(2), vec![2, 3]);
    }

    #[test]
    fn path_record_rejects_non_paths() {
        let t = path_tree(4);
        assert!(PathRecord::new(&t, vec![0, 2]).is_err());
        assert!(PathRecord::new(&t, vec![0, 1, 0]).is_err());
        assert!(PathRecord::new(&t, vec![]).is_err());
    }
}
