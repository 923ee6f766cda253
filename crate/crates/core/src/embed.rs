//! Isometric embeddings of trees into the integer lattice `Z^d` with
//! `d = ceil(n / 2)` for a tree with `n` leaves.
//!
//! Spiders are laid out leg by leg, two legs per axis. Every other tree is
//! reduced by repeatedly removing two hanging paths with distinct anchors;
//! each removed pair later gets its own new axis, one path on the positive
//! side and one on the negative side.
//!
//! Coordinates are stored sparsely: a per-axis base value plus, for every
//! vertex, the axes on which it deviates from that base. Embeddings of large
//! trees have tens of thousands of axes but each vertex only touches a few.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tree::{HangingPath, ShapeClass, Tree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("tree is not a spider or path (it has several vertices of degree > 2)")]
    NotSpider,
    #[error("vertex {vertex} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        vertex: VertexId,
        expected: usize,
        found: usize,
    },
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(VertexId),
    #[error("axis {axis} has zero extent")]
    ZeroLengthAxis { axis: usize },
    #[error("invalid embedding JSON: {0}")]
    Json(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// A point of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn origin(dimension: usize) -> Self {
        LatticePoint(vec![0; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn l1_distance(&self, other: &LatticePoint) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

type Offsets = Vec<(u32, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    dimension: usize,
    vertices: Vec<VertexId>,
    base: Vec<i64>,
    /// Per vertex, sorted by axis: the axes where the coordinate differs from
    /// `base`, stored as the difference.
    offsets: Vec<Offsets>,
    fingerprint: Option<String>,
}

impl Embedding {
    /// Builds an embedding from dense coordinate vectors.
    pub fn from_points<I>(dimension: usize, points: I) -> Result<Self, EmbedError>
    where
        I: IntoIterator<Item = (VertexId, Vec<i64>)>,
    {
        let mut sorted: Vec<(VertexId, Vec<i64>)> = points.into_iter().collect();
        sorted.sort_by_key(|(v, _)| *v);
        for pair in sorted.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(EmbedError::DuplicateVertex(pair[0].0));
            }
        }
        let mut vertices = Vec::with_capacity(sorted.len());
        let mut offsets = Vec::with_capacity(sorted.len());
        for (v, coords) in sorted {
            if coords.len() != dimension {
                return Err(EmbedError::DimensionMismatch {
                    vertex: v,
                    expected: dimension,
                    found: coords.len(),
                });
            }
            vertices.push(v);
            offsets.push(
                coords
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .map(|(k, c)| (k as u32, c))
                    .collect(),
            );
        }
        Ok(Embedding {
            dimension,
            vertices,
            base: vec![0; dimension],
            offsets,
            fingerprint: None,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Fingerprint of the tree this embedding was built from, if known.
    pub fn fingerprint(&self) -> Option<&str> {
        self.fingerprint.as_deref()
    }

    pub fn with_fingerprint(mut self, fingerprint: impl Into<String>) -> Self {
        self.fingerprint = Some(fingerprint.into());
        self
    }

    pub fn point(&self, v: VertexId) -> Option<LatticePoint> {
        self.index_of(v).map(|i| self.point_by_index(i))
    }

    pub fn coordinate(&self, v: VertexId, axis: usize) -> Option<i64> {
        if axis >= self.dimension {
            return None;
        }
        self.index_of(v).map(|i| self.coordinate_by_index(i, axis))
    }

    /// All points in ascending vertex order. Allocates a dense vector per
    /// vertex; prefer [`Embedding::l1_distance`] for large embeddings.
    pub fn points(&self) -> impl Iterator<Item = (VertexId, LatticePoint)> + '_ {
        (0..self.vertices.len()).map(|i| (self.vertices[i], self.point_by_index(i)))
    }

    pub fn l1_distance(&self, u: VertexId, v: VertexId) -> Option<u64> {
        Some(self.l1_by_index(self.index_of(u)?, self.index_of(v)?))
    }

    /// Number of stored (vertex, axis) deviations from the per-axis base.
    pub fn stored_entries(&self) -> usize {
        self.offsets.iter().map(Vec::len).sum()
    }

    /// `(min, max)` of each coordinate over all points.
    pub fn axis_ranges(&self) -> Vec<(i64, i64)> {
        let mut lo = vec![0i64; self.dimension];
        let mut hi = vec![0i64; self.dimension];
        let mut touched = vec![0usize; self.dimension];
        for offs in &self.offsets {
            for &(k, d) in offs {
                let k = k as usize;
                if touched[k] == 0 {
                    lo[k] = d;
                    hi[k] = d;
                } else {
                    lo[k] = lo[k].min(d);
                    hi[k] = hi[k].max(d);
                }
                touched[k] += 1;
            }
        }
        (0..self.dimension)
            .map(|k| {
                if touched[k] < self.vertices.len() {
                    lo[k] = lo[k].min(0);
                    hi[k] = hi[k].max(0);
                }
                (self.base[k] + lo[k], self.base[k] + hi[k])
            })
            .collect()
    }

    /// Translates every axis so that its minimum coordinate is 0.
    pub fn normalize(&self) -> Embedding {
        let mut out = self.clone();
        for (k, (lo, _)) in self.axis_ranges().into_iter().enumerate() {
            out.base[k] -= lo;
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        self.axis_ranges().iter().all(|&(lo, _)| lo == 0)
    }

    /// Side lengths of the smallest box containing the embedding.
    pub fn grid_profile(&self) -> Result<GridProfile, EmbedError> {
        let lengths: Vec<u64> = self
            .axis_ranges()
            .iter()
            .map(|&(lo, hi)| hi.abs_diff(lo))
            .collect();
        if let Some(axis) = lengths.iter().position(|&l| l == 0) {
            return Err(EmbedError::ZeroLengthAxis { axis });
        }
        Ok(GridProfile::new(lengths))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EmbeddingDocument::from(self)).expect("embedding serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, EmbedError> {
        let doc: EmbeddingDocument =
            serde_json::from_str(text).map_err(|e| EmbedError::Json(e.to_string()))?;
        Embedding::from_points(doc.dimension, doc.coordinates.0)
    }

    /// Tab-separated coordinate table, one row per vertex.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("vertex");
        for k in 0..self.dimension {
            out.push_str(&format!("\tc{k}"));
        }
        out.push('\n');
        for (v, p) in self.points() {
            out.push_str(&v.to_string());
            for c in p.0 {
                out.push_str(&format!("\t{c}"));
            }
            out.push('\n');
        }
        out
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub(crate) fn vertex_ids(&self) -> &[VertexId] {
        &self.vertices
    }

    pub(crate) fn point_by_index(&self, i: usize) -> LatticePoint {
        let mut coords = self.base.clone();
        for &(k, d) in &self.offsets[i] {
            coords[k as usize] += d;
        }
        LatticePoint(coords)
    }

    pub(crate) fn coordinate_by_index(&self, i: usize, axis: usize) -> i64 {
        let offs = &self.offsets[i];
        let delta = offs
            .binary_search_by_key(&(axis as u32), |&(k, _)| k)
            .map_or(0, |p| offs[p].1);
        self.base[axis] + delta
    }

    /// ℓ1 distance by merging the two sparse offset lists; the base cancels.
    pub(crate) fn l1_by_index(&self, i: usize, j: usize) -> u64 {
        let (a, b) = (&self.offsets[i], &self.offsets[j]);
        let (mut x, mut y, mut total) = (0, 0, 0u64);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                std::cmp::Ordering::Less => {
                    total += a[x].1.unsigned_abs();
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    total += b[y].1.unsigned_abs();
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    total += a[x].1.abs_diff(b[y].1);
                    x += 1;
                    y += 1;
                }
            }
        }
        total += a[x..]
            .iter()
            .chain(&b[y..])
            .map(|&(_, d)| d.unsigned_abs())
            .sum::<u64>();
        total
    }

    /// Rewrites every coordinate on `axis` through `f`.
    pub(crate) fn remap_axis(&mut self, axis: usize, f: impl Fn(i64) -> i64) {
        let old_base = self.base[axis];
        let new_base = f(old_base);
        self.base[axis] = new_base;
        let key = axis as u32;
        for offs in &mut self.offsets {
            let pos = offs.binary_search_by_key(&key, |&(k, _)| k);
            let old = old_base + pos.map_or(0, |p| offs[p].1);
            let delta = f(old) - new_base;
            match (pos, delta) {
                (Ok(p), 0) => {
                    offs.remove(p);
                }
                (Ok(p), d) => offs[p].1 = d,
                (Err(_), 0) => {}
                (Err(p), d) => offs.insert(p, (key, d)),
            }
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        if let Some(i) = self.index_of(v) {
            self.vertices.remove(i);
            self.offsets.remove(i);
            self.fingerprint = None;
        }
    }
}

/// Multiset of axis lengths `{l_1, .., l_d}` of the smallest complete grid
/// graph `P_{l_1} x .. x P_{l_d}` containing an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridProfile {
    /// In axis order.
    pub lengths: Vec<u64>,
    pub lattice_dim: usize,
    pub isometric_dim: u64,
}

impl GridProfile {
    fn new(lengths: Vec<u64>) -> Self {
        GridProfile {
            lattice_dim: lengths.len(),
            isometric_dim: lengths.iter().sum(),
            lengths,
        }
    }
}

/// JSON shape of an embedding. Coordinates are keyed by vertex id strings in
/// ascending numeric order.
#[derive(Debug, Serialize, Deserialize)]
struct EmbeddingDocument {
    dimension: usize,
    coordinates: Coordinates,
    #[serde(default)]
    grid_profile: Vec<u64>,
    #[serde(default)]
    isometric_dimension: u64,
}

#[derive(Debug)]
struct Coordinates(Vec<(VertexId, Vec<i64>)>);

impl Serialize for Coordinates {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, coords) in &self.0 {
            map.serialize_entry(&v.to_string(), coords)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Coordinates {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<i64>>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|(k, v)| {
                k.parse::<VertexId>()
                    .map(|id| (id, v))
                    .map_err(|_| D::Error::custom(format!("invalid vertex id {k:?}")))
            })
            .collect::<Result<_, _>>()
            .map(Coordinates)
    }
}

impl From<&Embedding> for EmbeddingDocument {
    fn from(e: &Embedding) -> Self {
        let ranges = e.axis_ranges();
        let grid_profile: Vec<u64> = ranges.iter().map(|&(lo, hi)| hi.abs_diff(lo)).collect();
        EmbeddingDocument {
            dimension: e.dimension,
            isometric_dimension: grid_profile.iter().sum(),
            grid_profile,
            coordinates: Coordinates(e.points().map(|(v, p)| (v, p.0)).collect()),
        }
    }
}

/// `ceil(n / 2)` for a tree with `n` leaves; 0 for a single vertex.
pub fn lattice_dimension(tree: &Tree) -> usize {
    tree.leaf_count().div_ceil(2)
}

/// Embeds a spider (or path, or single vertex) with the center at the origin.
///
/// Legs are ordered by length descending, then leaf id ascending; legs
/// `2k` and `2k + 1` (0-based) run along `+e_k` and `-e_k`, and an unpaired
/// last leg runs along `+e_k` of the last axis.
pub fn embed_spider(tree: &Tree) -> Result<Embedding, EmbedError> {
    if tree.classify() == ShapeClass::General {
        return Err(EmbedError::NotSpider);
    }
    let pruner = Pruner::new(tree);
    Ok(pruner.base_case().into_embedding(tree, &[]))
}

/// Embeds any tree isometrically into `Z^d` with `d = lattice_dimension(tree)`.
///
/// While the tree has two or more branching vertices, the smallest leaf `u`
/// and the smallest leaf `v` whose anchor differs from `u`'s are removed
/// together with their hanging paths. The remaining spider or path is laid
/// out by [`embed_spider`], then each removed pair is restored on a fresh
/// axis in reverse removal order: `u`'s path at `1, 2, ..` and `v`'s at
/// `-1, -2, ..`, all other coordinates copied from the respective anchor.
pub fn embed_tree(tree: &Tree) -> Result<Embedding, EmbedError> {
    let mut pruner = Pruner::new(tree);
    let pairs = pruner.prune()?;
    Ok(pruner.base_case().into_embedding(tree, &pairs))
}

pub fn normalize(embedding: &Embedding) -> Embedding {
    embedding.normalize()
}

pub fn grid_profile(embedding: &Embedding) -> Result<GridProfile, EmbedError> {
    embedding.grid_profile()
}

/// One reduction step: two hanging paths of the current tree with distinct
/// anchors. `positive` holds the smaller leaf id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedPair {
    pub positive: HangingPath,
    pub negative: HangingPath,
}

/// The sequence of hanging-path pairs [`embed_tree`] removes, in removal order.
pub fn pruning_sequence(tree: &Tree) -> Result<Vec<PrunedPair>, EmbedError> {
    let mut pruner = Pruner::new(tree);
    let pairs = pruner.prune()?;
    Ok(pairs
        .iter()
        .map(|p| PrunedPair {
            positive: p.positive.to_hanging_path(tree),
            negative: p.negative.to_hanging_path(tree),
        })
        .collect())
}

/// A hanging path in index space: `path` runs from the anchor's neighbor
/// out to the leaf, anchor excluded.
#[derive(Debug, Clone)]
struct RemovedPath {
    anchor: usize,
    path: Vec<usize>,
}

impl RemovedPath {
    fn to_hanging_path(&self, tree: &Tree) -> HangingPath {
        let mut path = vec![tree.id_at(self.anchor)];
        path.extend(self.path.iter().map(|&i| tree.id_at(i)));
        HangingPath {
            leaf: *path.last().unwrap(),
            anchor: path[0],
            length: self.path.len(),
            path,
        }
    }
}

#[derive(Debug, Clone)]
struct RemovedPair {
    positive: RemovedPath,
    negative: RemovedPath,
}

/// Spider or path remaining after pruning.
enum BaseCase {
    Single,
    /// Vertices in order from the start (coordinate 0) to the far end.
    Path(Vec<usize>),
    /// Center plus legs in layout order, each listed from the center outward.
    Spider(Vec<Vec<usize>>),
}

impl BaseCase {
    fn dimension(&self) -> usize {
        match self {
            BaseCase::Single => 0,
            BaseCase::Path(_) => 1,
            BaseCase::Spider(legs) => legs.len().div_ceil(2),
        }
    }

    fn into_embedding(self, tree: &Tree, pairs: &[RemovedPair]) -> Embedding {
        let base_dim = self.dimension();
        let dimension = base_dim + pairs.len();
        let mut offsets: Vec<Offsets> = vec![Vec::new(); tree.vertex_count()];
        match self {
            BaseCase::Single => {}
            BaseCase::Path(order) => {
                for (j, &x) in order.iter().enumerate().skip(1) {
                    offsets[x].push((0, j as i64));
                }
            }
            BaseCase::Spider(legs) => {
                for (i, leg) in legs.iter().enumerate() {
                    let axis = (i / 2) as u32;
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    for (j, &x) in leg.iter().enumerate() {
                        offsets[x].push((axis, sign * (j as i64 + 1)));
                    }
                }
            }
        }
        for (k, pair) in pairs.iter().enumerate().rev() {
            let axis = (base_dim + pairs.len() - 1 - k) as u32;
            for (side, sign) in [(&pair.positive, 1i64), (&pair.negative, -1i64)] {
                let anchored = offsets[side.anchor].clone();
                for (j, &x) in side.path.iter().enumerate() {
                    let mut offs = anchored.clone();
                    offs.push((axis, sign * (j as i64 + 1)));
                    offsets[x] = offs;
                }
            }
        }
        Embedding {
            dimension,
            vertices: tree.ids().to_vec(),
            base: vec![0; dimension],
            offsets,
            fingerprint: Some(tree.fingerprint()),
        }
    }
}

/// Mutable view of a tree under hanging-path removal.
///
/// Every leaf of the current tree is attached to its anchor. `heads` holds
/// `(smallest leaf, anchor)` for every anchor, so the two smallest entries
/// give the next pair to remove.
struct Pruner<'a> {
    tree: &'a Tree,
    alive: Vec<bool>,
    degree: Vec<usize>,
    branching: usize,
    /// Leaf to anchor, leaf first and anchor last.
    walks: HashMap<usize, Vec<usize>>,
    anchor_leaves: HashMap<usize, BTreeSet<usize>>,
    heads: BTreeSet<(usize, usize)>,
}

impl<'a> Pruner<'a> {
    fn new(tree: &'a Tree) -> Self {
        let n = tree.vertex_count();
        let degree: Vec<usize> = (0..n).map(|i| tree.adjacent(i).len()).collect();
        let branching = degree.iter().filter(|&&d| d > 2).count();
        Pruner {
            tree,
            alive: vec![true; n],
            degree,
            branching,
            walks: HashMap::new(),
            anchor_leaves: HashMap::new(),
            heads: BTreeSet::new(),
        }
    }

    fn other_alive_neighbor(&self, x: usize, not: usize) -> usize {
        self.tree
            .adjacent(x)
            .iter()
            .copied()
            .find(|&y| y != not && self.alive[y])
            .expect("degree-2 vertex has two live neighbors")
    }

    /// Extends `walk` (ending at `walk[last]`, entered from `walk[last - 1]`)
    /// through degree-2 vertices. Returns the final vertex, which has degree
    /// 1 or at least 3, appended to the walk.
    fn extend_walk(&self, walk: &mut Vec<usize>) -> usize {
        loop {
            let cur = *walk.last().unwrap();
            if self.degree[cur] != 2 {
                return cur;
            }
            let prev = walk[walk.len() - 2];
            walk.push(self.other_alive_neighbor(cur, prev));
        }
    }

    fn attach(&mut self, leaf: usize, walk: Vec<usize>) {
        let anchor = *walk.last().unwrap();
        let leaves = self.anchor_leaves.entry(anchor).or_default();
        if let Some(&old) = leaves.first() {
            self.heads.remove(&(old, anchor));
        }
        leaves.insert(leaf);
        self.heads.insert((*leaves.first().unwrap(), anchor));
        self.walks.insert(leaf, walk);
    }

    fn detach(&mut self, leaf: usize) -> Vec<usize> {
        let walk = self.walks.remove(&leaf).expect("leaf is attached");
        let anchor = *walk.last().unwrap();
        let leaves = self.anchor_leaves.get_mut(&anchor).unwrap();
        self.heads.remove(&(*leaves.first().unwrap(), anchor));
        leaves.remove(&leaf);
        match leaves.first() {
            Some(&head) => {
                self.heads.insert((head, anchor));
            }
            None => {
                self.anchor_leaves.remove(&anchor);
            }
        }
        walk
    }

    fn remove_path(&mut self, leaf: usize) -> RemovedPath {
        let mut walk = self.detach(leaf);
        let anchor = walk.pop().unwrap();
        walk.reverse();
        for &x in &walk {
            self.alive[x] = false;
        }
        self.degree[anchor] -= 1;
        if self.degree[anchor] == 2 {
            self.branching -= 1;
        }
        RemovedPath { anchor, path: walk }
    }

    /// Re-anchors the leaves of a former anchor that has dropped to degree 2.
    fn dissolve_anchor(&mut self, anchor: usize) {
        let Some(leaves) = self.anchor_leaves.remove(&anchor) else {
            return;
        };
        if let Some(&head) = leaves.first() {
            self.heads.remove(&(head, anchor));
        }
        for leaf in leaves {
            let mut walk = self.walks.remove(&leaf).unwrap();
            let came_from = walk[walk.len() - 2];
            walk.push(self.other_alive_neighbor(anchor, came_from));
            let end = self.extend_walk(&mut walk);
            if self.degree[end] > 2 {
                self.attach(leaf, walk);
            }
            // Otherwise the walk reached another leaf and what remains is a path.
        }
    }

    fn prune(&mut self) -> Result<Vec<RemovedPair>, EmbedError> {
        let mut pairs = Vec::new();
        if self.branching < 2 {
            return Ok(pairs);
        }
        for leaf in 0..self.tree.vertex_count() {
            if self.degree[leaf] == 1 {
                let mut walk = vec![leaf, self.tree.adjacent(leaf)[0]];
                self.extend_walk(&mut walk);
                self.attach(leaf, walk);
            }
        }
        while self.branching >= 2 {
            let mut heads = self.heads.iter();
            let (Some(&(u, anchor_u)), Some(&(v, anchor_v))) = (heads.next(), heads.next()) else {
                return Err(EmbedError::Internal(format!(
                    "{} branching vertices but all leaves share one anchor",
                    self.branching
                )));
            };
            debug_assert_ne!(anchor_u, anchor_v);
            let positive = self.remove_path(u);
            let negative = self.remove_path(v);
            for anchor in [anchor_u, anchor_v] {
                if self.degree[anchor] == 2 {
                    self.dissolve_anchor(anchor);
                }
            }
            pairs.push(RemovedPair { positive, negative });
        }
        Ok(pairs)
    }

    fn base_case(&self) -> BaseCase {
        let live: Vec<usize> = (0..self.alive.len()).filter(|&i| self.alive[i]).collect();
        if live.len() == 1 {
            return BaseCase::Single;
        }
        let walk_leg = |center: usize, first: usize| {
            let mut walk = vec![center, first];
            self.extend_walk(&mut walk);
            walk.remove(0);
            walk
        };
        if let Some(&center) = live.iter().find(|&&i| self.degree[i] > 2) {
            let mut legs: Vec<Vec<usize>> = self
                .tree
                .adjacent(center)
                .iter()
                .filter(|&&y| self.alive[y])
                .map(|&y| walk_leg(center, y))
                .collect();
            legs.sort_by_key(|leg| (std::cmp::Reverse(leg.len()), *leg.last().unwrap()));
            BaseCase::Spider(legs)
        } else {
            let start = *live.iter().find(|&&i| self.degree[i] == 1).unwrap();
            let next = *self
                .tree
                .adjacent(start)
                .iter()
                .find(|&&y| self.alive[y])
                .unwrap();
            let mut order = vec![start];
            order.extend(walk_leg(start, next));
            BaseCase::Path(order)
        }
    }
}
