//! Finite unweighted trees over arbitrary nonnegative integer vertex ids.
//!
//! A [`Tree`] is validated on construction and immutable afterwards. Vertex
//! ids are kept sorted and every adjacency list is sorted, so iteration order
//! is deterministic.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub type VertexId = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{}self-loop on vertex {vertex}", line_prefix(*.line))]
    SelfLoop {
        line: Option<usize>,
        vertex: VertexId,
    },
    #[error("{}duplicate edge {u} {v}", line_prefix(*.line))]
    DuplicateEdge {
        line: Option<usize>,
        u: VertexId,
        v: VertexId,
    },
    #[error("{}cycle detected: edge {u} {v} closes a cycle", line_prefix(*.line))]
    Cycle {
        line: Option<usize>,
        u: VertexId,
        v: VertexId,
    },
    #[error("input is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("input declares no vertices")]
    Empty,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {vertex} is not a leaf (degree {degree})")]
    NotALeaf { vertex: VertexId, degree: usize },
    #[error("tree has no vertex of degree greater than two")]
    NoBranchingVertex,
    #[error("a tree needs at least one vertex")]
    ZeroVertices,
    #[error("invalid Pr\u{fc}fer sequence: {0}")]
    Prufer(String),
}

fn line_prefix(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

/// The unique path from a leaf to the nearest vertex of degree at least three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HangingPath {
    pub leaf: VertexId,
    pub anchor: VertexId,
    /// Vertices from `anchor` to `leaf`, both included.
    pub path: Vec<VertexId>,
    /// Number of edges on `path`.
    pub length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeClass {
    SingleVertex,
    Path,
    /// Exactly one vertex of degree greater than two.
    Spider {
        center: VertexId,
    },
    /// Two or more vertices of degree greater than two.
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    ids: Vec<VertexId>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn single(id: VertexId) -> Self {
        Tree {
            ids: vec![id],
            adjacency: vec![Vec::new()],
        }
    }

    /// Builds a tree from an edge list, rejecting self-loops, duplicate
    /// edges, cycles and disconnected input.
    pub fn from_edges<I>(edges: I) -> Result<Self, TreeError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        build(edges.into_iter().map(|(u, v)| (None, u, v)), &[])
    }

    /// Decodes a Prüfer sequence into a labeled tree on `{0, .., vertex_count - 1}`.
    pub fn from_prufer(vertex_count: usize, sequence: &[usize]) -> Result<Self, TreeError> {
        match vertex_count {
            0 => return Err(TreeError::ZeroVertices),
            1 if sequence.is_empty() => return Ok(Tree::single(0)),
            _ => {}
        }
        if sequence.len() + 2 != vertex_count {
            return Err(TreeError::Prufer(format!(
                "length {} does not match {vertex_count} vertices",
                sequence.len()
            )));
        }
        if let Some(&bad) = sequence.iter().find(|&&x| x >= vertex_count) {
            return Err(TreeError::Prufer(format!("entry {bad} out of range")));
        }
        let n = vertex_count;
        let mut degree = vec![1usize; n];
        for &x in sequence {
            degree[x] += 1;
        }
        let mut ptr = degree
            .iter()
            .position(|&d| d == 1)
            .expect("a leaf always exists");
        let mut leaf = ptr;
        let mut edges = Vec::with_capacity(n - 1);
        for &v in sequence {
            edges.push((leaf as VertexId, v as VertexId));
            degree[v] -= 1;
            if degree[v] == 1 && v < ptr {
                leaf = v;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        edges.push((leaf as VertexId, (n - 1) as VertexId));
        Tree::from_edges(edges)
    }

    /// Uniformly random labeled tree on `{0, .., vertex_count - 1}`, fully
    /// determined by `(vertex_count, seed)`.
    pub fn random(vertex_count: usize, seed: u64) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::ZeroVertices);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sequence: Vec<usize> = (0..vertex_count.saturating_sub(2))
            .map(|_| rng.random_range(0..vertex_count))
            .collect();
        Tree::from_prufer(vertex_count, &sequence)
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ids.len() - 1
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.ids.iter().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.index_of(v).map(|i| self.adjacency[i].len())
    }

    pub fn neighbors(&self, v: VertexId) -> Option<impl Iterator<Item = VertexId> + '_> {
        self.index_of(v)
            .map(|i| self.adjacency[i].iter().map(|&j| self.ids[j]))
    }

    /// Edges as `(smaller, larger)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(i, nbrs)| {
                nbrs.iter()
                    .filter(move |&&j| j > i)
                    .map(move |&j| (self.ids[i], self.ids[j]))
            })
    }

    /// Sorted degree-1 vertices. A single vertex has degree 0 and is not a leaf.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, nbrs)| nbrs.len() == 1)
            .map(|(i, _)| self.ids[i])
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.adjacency.iter().filter(|nbrs| nbrs.len() == 1).count()
    }

    /// Edges with no leaf endpoint.
    pub fn inner_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .filter(|&(u, v)| self.degree(u).unwrap() >= 2 && self.degree(v).unwrap() >= 2)
            .collect()
    }

    pub fn tree_distance(&self, u: VertexId, v: VertexId) -> Result<usize, TreeError> {
        let iu = self.index_of(u).ok_or(TreeError::UnknownVertex(u))?;
        let iv = self.index_of(v).ok_or(TreeError::UnknownVertex(v))?;
        Ok(self.bfs_distances(iu)[iv])
    }

    /// Distances from `source` to every vertex, in ascending vertex-id order.
    pub fn distances_from(&self, source: VertexId) -> Result<Vec<(VertexId, usize)>, TreeError> {
        let is = self
            .index_of(source)
            .ok_or(TreeError::UnknownVertex(source))?;
        Ok(self
            .ids
            .iter()
            .copied()
            .zip(self.bfs_distances(is))
            .collect())
    }

    /// Distances for every unordered pair `(u, v)` with `u < v`.
    pub fn all_pairs_distances(&self) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut out = BTreeMap::new();
        for i in 0..self.ids.len() {
            let dist = self.bfs_distances(i);
            for (j, &d) in dist.iter().enumerate().skip(i + 1) {
                out.insert((self.ids[i], self.ids[j]), d);
            }
        }
        out
    }

    pub fn hanging_path(&self, leaf: VertexId) -> Result<HangingPath, TreeError> {
        let start = self.index_of(leaf).ok_or(TreeError::UnknownVertex(leaf))?;
        let degree = self.adjacency[start].len();
        if degree != 1 {
            return Err(TreeError::NotALeaf {
                vertex: leaf,
                degree,
            });
        }
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = self.adjacency[start][0];
        loop {
            walk.push(cur);
            match self.adjacency[cur].len() {
                1 => return Err(TreeError::NoBranchingVertex),
                2 => {
                    let next = self.adjacency[cur]
                        .iter()
                        .copied()
                        .find(|&n| n != prev)
                        .unwrap();
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        walk.reverse();
        Ok(HangingPath {
            leaf,
            anchor: self.ids[cur],
            length: walk.len() - 1,
            path: walk.into_iter().map(|i| self.ids[i]).collect(),
        })
    }

    pub fn classify(&self) -> ShapeClass {
        if self.ids.len() == 1 {
            return ShapeClass::SingleVertex;
        }
        let mut branching = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|(_, n)| n.len() > 2);
        match (branching.next(), branching.next()) {
            (None, _) => ShapeClass::Path,
            (Some((c, _)), None) => ShapeClass::Spider {
                center: self.ids[c],
            },
            _ => ShapeClass::General,
        }
    }

    /// Canonical edge-list text: edges in lexicographic order, or a vertex
    /// declaration for a single-vertex tree.
    pub fn to_edge_list(&self) -> String {
        if self.ids.len() == 1 {
            return format!("# vertex {}\n", self.ids[0]);
        }
        let mut out = String::with_capacity(self.ids.len() * 12);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// SHA-256 of the canonical edge list, hex encoded.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn id_at(&self, index: usize) -> VertexId {
        self.ids[index]
    }

    pub(crate) fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub(crate) fn adjacent(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.ids.len()];
        let mut queue = VecDeque::with_capacity(self.ids.len());
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}

/// Parses the line-oriented edge-list format: two whitespace-separated ids
/// per line, `#` comments and blank lines ignored, and `# vertex <id>`
/// declaring a vertex (needed for the single-vertex tree).
pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
    let mut edges = Vec::new();
    let mut declared = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let words: Vec<&str> = comment.split_whitespace().collect();
            if let ["vertex", id] = words.as_slice() {
                if let Ok(id) = id.parse::<VertexId>() {
                    declared.push(id);
                }
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(TreeError::Syntax {
                line: lineno,
                message: format!("expected two vertex ids, found {line:?}"),
            });
        };
        let parse = |tok: &str| {
            tok.parse::<VertexId>().map_err(|_| TreeError::Syntax {
                line: lineno,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        edges.push((Some(lineno), parse(a)?, parse(b)?));
    }
    build(edges, &declared)
}

fn build<I>(edges: I, declared: &[VertexId]) -> Result<Tree, TreeError>
where
    I: IntoIterator<Item = (Option<usize>, VertexId, VertexId)>,
{
    let edges: Vec<_> = edges.into_iter().collect();
    let mut ids: Vec<VertexId> = edges
        .iter()
        .flat_map(|&(_, u, v)| [u, v])
        .chain(declared.iter().copied())
        .collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.is_empty() {
        return Err(TreeError::Empty);
    }
    let index = |v: VertexId| ids.binary_search(&v).unwrap();

    let mut seen = HashSet::with_capacity(edges.len());
    let mut dsu = DisjointSets::new(ids.len());
    let mut adjacency = vec![Vec::new(); ids.len()];
    for &(line, u, v) in &edges {
        if u == v {
            return Err(TreeError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(TreeError::DuplicateEdge { line, u, v });
        }
        let (iu, iv) = (index(u), index(v));
        if !dsu.union(iu, iv) {
            return Err(TreeError::Cycle { line, u, v });
        }
        adjacency[iu].push(iv);
        adjacency[iv].push(iu);
    }
    if edges.len() + 1 != ids.len() {
        return Err(TreeError::Disconnected {
            components: ids.len() - edges.len(),
        });
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Ok(Tree { ids, adjacency })
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Constant-memory-per-vertex distance queries via binary-lifting LCA,
/// for trees too large for per-pair breadth-first search.
#[derive(Debug, Clone)]
pub struct DistanceIndex<'a> {
    tree: &'a Tree,
    depth: Vec<u32>,
    ancestors: Vec<Vec<u32>>,
}

impl<'a> DistanceIndex<'a> {
    pub fn new(tree: &'a Tree) -> Self {
        let n = tree.vertex_count();
        let mut depth = vec![0u32; n];
        let mut parent = vec![0u32; n];
        let mut visited = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        visited[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in tree.adjacent(x) {
                if !visited[y] {
                    visited[y] = true;
                    depth[y] = depth[x] + 1;
                    parent[y] = x as u32;
                    queue.push_back(y);
                }
            }
        }
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let mut ancestors = vec![parent];
        for k in 1..levels {
            let prev = &ancestors[k - 1];
            let next = prev.iter().map(|&p| prev[p as usize]).collect();
            ancestors.push(next);
        }
        DistanceIndex {
            tree,
            depth,
            ancestors,
        }
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<usize, TreeError> {
        let a = self.tree.index_of(u).ok_or(TreeError::UnknownVertex(u))?;
        let b = self.tree.index_of(v).ok_or(TreeError::UnknownVertex(v))?;
        Ok(self.distance_by_index(a, b))
    }

    pub(crate) fn distance_by_index(&self, a: usize, b: usize) -> usize {
        let lca = self.lca(a, b);
        (self.depth[a] + self.depth[b] - 2 * self.depth[lca]) as usize
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut lift = self.depth[a] - self.depth[b];
        let mut k = 0;
        while lift > 0 {
            if lift & 1 == 1 {
                a = self.ancestors[k][a] as usize;
            }
            lift >>= 1;
            k += 1;
        }
        if a == b {
            return a;
        }
        for k in (0..self.ancestors.len()).rev() {
            let (pa, pb) = (self.ancestors[k][a], self.ancestors[k][b]);
            if pa != pb {
                a = pa as usize;
                b = pb as usize;
            }
        }
        self.ancestors[0][a] as usize
    }
}
