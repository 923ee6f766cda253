//! Independent checks on embeddings: pairwise isometry, the contraction
//! certificate for the `ceil(n / 2)` lower bound, and an exhaustive search
//! for the minimum lattice dimension of small trees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::embed::{EmbedError, Embedding};
use crate::tree::{DistanceIndex, Tree, TreeError, VertexId};

/// Largest tree [`brute_force_min_dimension`] accepts.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("embedding and tree disagree on vertex {0}")]
    VertexSetMismatch(VertexId),
    #[error("{u} {v} is not an edge of the tree")]
    NotAnEdge { u: VertexId, v: VertexId },
    #[error("edge {u} {v} is not an inner edge")]
    NotInnerEdge { u: VertexId, v: VertexId },
    #[error("edge {u} {v} is not a unit lattice step")]
    NotUnitStep { u: VertexId, v: VertexId },
    #[error("slab {lo}|{} on axis {axis} is crossed by edge {} {} as well as {} {}", lo + 1, other.0, other.1, edge.0, edge.1)]
    SlabNotUnique {
        edge: (VertexId, VertexId),
        other: (VertexId, VertexId),
        axis: usize,
        lo: i64,
    },
    #[error("leaf {leaf} is not at a unit vector from the star center")]
    NonUnitLeaf { leaf: VertexId },
    #[error("leaves {0} and {1} share a direction from the star center")]
    DuplicateDirection(VertexId, VertexId),
    #[error("a tree with {0} vertices has no star center to contract onto")]
    NoStarCenter(usize),
    #[error("tree has {0} vertices; exhaustive search is limited to {BRUTE_FORCE_MAX_VERTICES}")]
    TooLarge(usize),
    #[error("no isometric embedding in dimension {max_dim} or lower")]
    NoEmbeddingWithin { max_dim: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub tree_distance: u64,
    pub l1_distance: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub passed: bool,
    pub checked_pairs: u64,
    /// True when only edges and a random subset of pairs were checked.
    pub sampled: bool,
    #[serde(rename = "violation", skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<Violation>,
}

impl IsometryReport {
    fn new(checked_pairs: u64, sampled: bool, first_violation: Option<Violation>) -> Self {
        IsometryReport {
            passed: first_violation.is_none(),
            checked_pairs,
            sampled,
            first_violation,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn check_vertex_sets(tree: &Tree, embedding: &Embedding) -> Result<(), VerifyError> {
    let (a, b) = (tree.ids(), embedding.vertex_ids());
    if a == b {
        return Ok(());
    }
    let mismatch = a
        .iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .map(|(x, y)| *x.min(y))
        .or_else(|| a.get(b.len()).or(b.get(a.len())).copied())
        .unwrap();
    Err(VerifyError::VertexSetMismatch(mismatch))
}

/// Checks `ℓ1(e[u], e[v]) = d_T(u, v)` for every unordered pair.
pub fn verify_isometric(tree: &Tree, embedding: &Embedding) -> Result<IsometryReport, VerifyError> {
    verify_isometric_parallel(tree, embedding, 1)
}

/// [`verify_isometric`] with sources split across `threads` workers. The
/// reported violation is the lexicographically smallest one regardless of
/// the thread count.
pub fn verify_isometric_parallel(
    tree: &Tree,
    embedding: &Embedding,
    threads: usize,
) -> Result<IsometryReport, VerifyError> {
    check_vertex_sets(tree, embedding)?;
    let n = tree.vertex_count();
    let threads = threads.clamp(1, n.max(1));
    let scan = |worker: usize| {
        let mut first: Option<Violation> = None;
        let mut checked = 0u64;
        for i in (worker..n).step_by(threads) {
            let dist = tree.bfs_distances(i);
            for (j, &d) in dist.iter().enumerate().skip(i + 1) {
                checked += 1;
                let l1 = embedding.l1_by_index(i, j);
                if l1 != d as u64 && first.is_none() {
                    first = Some(Violation {
                        u: tree.id_at(i),
                        v: tree.id_at(j),
                        tree_distance: d as u64,
                        l1_distance: l1,
                    });
                }
            }
        }
        (checked, first)
    };
    let results: Vec<(u64, Option<Violation>)> = if threads == 1 {
        vec![scan(0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads).map(|w| s.spawn(move || scan(w))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    let checked = results.iter().map(|r| r.0).sum();
    let first = results
        .into_iter()
        .filter_map(|r| r.1)
        .min_by_key(|v| (v.u, v.v));
    Ok(IsometryReport::new(checked, false, first))
}

/// Checks every edge plus `samples` seeded random pairs. A passing sampled
/// report is evidence, not proof, of isometry.
pub fn verify_sampled(
    tree: &Tree,
    embedding: &Embedding,
    samples: usize,
    seed: u64,
) -> Result<IsometryReport, VerifyError> {
    check_vertex_sets(tree, embedding)?;
    let n = tree.vertex_count();
    let index = DistanceIndex::new(tree);
    let mut first = None;
    let mut checked = 0u64;
    let mut check = |i: usize, j: usize, d: usize| {
        checked += 1;
        let l1 = embedding.l1_by_index(i, j);
        if l1 != d as u64 && first.is_none() {
            first = Some(Violation {
                u: tree.id_at(i),
                v: tree.id_at(j),
                tree_distance: d as u64,
                l1_distance: l1,
            });
        }
    };
    for i in 0..n {
        for &j in tree.adjacent(i) {
            if j > i {
                check(i, j, 1);
            }
        }
    }
    if n > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            check(i, j, index.distance_by_index(i, j));
        }
    }
    Ok(IsometryReport::new(checked, true, first))
}

/// One identification of an inner edge together with the lattice slab it
/// crossed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionStep {
    #[serde(rename = "edge")]
    pub contracted_edge: (VertexId, VertexId),
    pub axis: usize,
    /// Coordinates of the two endpoints on `axis`, in edge order.
    pub slab: (i64, i64),
    #[serde(skip)]
    pub resulting_vertex: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeafDirection {
    pub leaf: VertexId,
    pub axis: usize,
    /// `1` for `+e_axis`, `-1` for `-e_axis`.
    pub sign: i8,
}

/// Witness that a tree with `n` leaves needs `ceil(n / 2)` dimensions: the
/// embedding contracts to a star whose leaves sit at distinct signed unit
/// vectors, and `Z^d` has only `2d` of those.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    pub steps: Vec<ContractionStep>,
    #[serde(rename = "final_leaf_count")]
    pub final_star_leaf_count: usize,
    pub final_dimension: usize,
    pub bound: usize,
    pub leaf_directions: Vec<LeafDirection>,
}

impl LowerBoundCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

/// Identifies the endpoints of inner edge `(u, v)` (keeping the smaller id)
/// and collapses the unit slab it crosses: on the edge's axis every
/// coordinate above the lower endpoint's drops by one.
pub fn contract_inner_edge(
    tree: &Tree,
    embedding: &Embedding,
    edge: (VertexId, VertexId),
) -> Result<(Tree, Embedding, ContractionStep), VerifyError> {
    check_vertex_sets(tree, embedding)?;
    let (u, v) = edge;
    let iu = tree.index_of(u).ok_or(TreeError::UnknownVertex(u))?;
    let iv = tree.index_of(v).ok_or(TreeError::UnknownVertex(v))?;
    if tree.adjacent(iu).binary_search(&iv).is_err() {
        return Err(VerifyError::NotAnEdge { u, v });
    }
    if tree.adjacent(iu).len() < 2 || tree.adjacent(iv).len() < 2 {
        return Err(VerifyError::NotInnerEdge { u, v });
    }
    let (pu, pv) = (embedding.point_by_index(iu), embedding.point_by_index(iv));
    let differing: Vec<usize> = (0..embedding.dimension())
        .filter(|&k| pu.0[k] != pv.0[k])
        .collect();
    let axis = match differing.as_slice() {
        [k] if pu.0[*k].abs_diff(pv.0[*k]) == 1 => *k,
        _ => return Err(VerifyError::NotUnitStep { u, v }),
    };
    let lo = pu.0[axis].min(pv.0[axis]);
    for (x, y) in tree.edges() {
        if (x, y) == (u.min(v), u.max(v)) {
            continue;
        }
        let cx = embedding.coordinate_by_index(tree.index_of(x).unwrap(), axis);
        let cy = embedding.coordinate_by_index(tree.index_of(y).unwrap(), axis);
        if cx.min(cy) == lo && cx.max(cy) == lo + 1 {
            return Err(VerifyError::SlabNotUnique {
                edge,
                other: (x, y),
                axis,
                lo,
            });
        }
    }

    let (keep, drop) = (u.min(v), u.max(v));
    let rename = |x: VertexId| if x == drop { keep } else { x };
    let contracted = Tree::from_edges(
        tree.edges()
            .filter(|&e| e != (keep, drop))
            .map(|(x, y)| (rename(x), rename(y))),
    )?;
    if contracted.leaf_count() != tree.leaf_count() {
        return Err(VerifyError::Internal(format!(
            "contracting {u} {v} changed the leaf count"
        )));
    }
    let mut collapsed = embedding.clone();
    collapsed.remove_vertex(drop);
    collapsed.remap_axis(axis, |x| if x > lo { x - 1 } else { x });
    let collapsed = collapsed.with_fingerprint(contracted.fingerprint());
    let step = ContractionStep {
        contracted_edge: edge,
        axis,
        slab: (pu.0[axis], pv.0[axis]),
        resulting_vertex: keep,
    };
    Ok((contracted, collapsed, step))
}

/// Contracts inner edges, smallest first, until a star remains, then reads
/// off each leaf's signed unit direction from the center. A path of three or
/// more vertices ends as the star `K_{1,2}`.
pub fn contract_to_star(
    tree: &Tree,
    embedding: &Embedding,
) -> Result<LowerBoundCertificate, VerifyError> {
    if tree.vertex_count() < 3 {
        return Err(VerifyError::NoStarCenter(tree.vertex_count()));
    }
    let leaf_count = tree.leaf_count();
    let mut current = (tree.clone(), embedding.clone());
    let mut steps = Vec::new();
    while let Some(&edge) = current.0.inner_edges().first() {
        let (t, e, step) = contract_inner_edge(&current.0, &current.1, edge)?;
        steps.push(step);
        current = (t, e);
    }
    let (star, star_embedding) = current;
    let centers: Vec<VertexId> = star
        .vertices()
        .filter(|&v| star.degree(v) != Some(1))
        .collect();
    let (&[center], true) = (centers.as_slice(), star.leaf_count() == leaf_count) else {
        return Err(VerifyError::Internal(
            "contraction did not end in a star".into(),
        ));
    };
    let origin = star_embedding.point(center).unwrap();
    let mut leaf_directions = Vec::with_capacity(leaf_count);
    let mut seen = std::collections::HashMap::new();
    for leaf in star.leaves() {
        let p = star_embedding.point(leaf).unwrap();
        let moved: Vec<(usize, i64)> =
            p.0.iter()
                .zip(&origin.0)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(k, (a, b))| (k, a - b))
                .collect();
        let [(axis, delta)] = moved.as_slice() else {
            return Err(VerifyError::NonUnitLeaf { leaf });
        };
        if delta.abs() != 1 {
            return Err(VerifyError::NonUnitLeaf { leaf });
        }
        let direction = LeafDirection {
            leaf,
            axis: *axis,
            sign: *delta as i8,
        };
        if let Some(other) = seen.insert((direction.axis, direction.sign), leaf) {
            return Err(VerifyError::DuplicateDirection(other, leaf));
        }
        leaf_directions.push(direction);
    }
    let final_dimension = star_embedding.dimension();
    let bound = leaf_count.div_ceil(2);
    if bound > final_dimension {
        return Err(VerifyError::Internal(
            "distinct unit directions exceed 2d".into(),
        ));
    }
    Ok(LowerBoundCertificate {
        steps,
        final_star_leaf_count: leaf_count,
        final_dimension,
        bound,
        leaf_directions,
    })
}

/// Smallest `d <= max_dim` such that the tree embeds isometrically into
/// `Z^d`, by exhaustive search.
pub fn brute_force_min_dimension(tree: &Tree, max_dim: usize) -> Result<usize, VerifyError> {
    for d in 0..=max_dim {
        if admits_embedding(tree, d)? {
            return Ok(d);
        }
    }
    Err(VerifyError::NoEmbeddingWithin { max_dim })
}

/// Whether the tree embeds isometrically into `Z^dimension`.
///
/// Vertices are placed in breadth-first order from the smallest id, each one
/// a unit step from its parent, pruning any placement that breaks a
/// distance to an already placed vertex. Axis permutations and reflections
/// preserve isometry, so axes are opened in order and each is first used in
/// the positive direction.
pub fn admits_embedding(tree: &Tree, dimension: usize) -> Result<bool, VerifyError> {
    let n = tree.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(VerifyError::TooLarge(n));
    }
    let distances: Vec<Vec<usize>> = (0..n).map(|i| tree.bfs_distances(i)).collect();
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX];
    let mut position = vec![usize::MAX; n];
    position[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        for &y in tree.adjacent(x) {
            if position[y] == usize::MAX {
                position[y] = order.len();
                order.push(y);
                parent.push(head);
            }
        }
        head += 1;
    }
    let mut search = Search {
        dimension,
        order: &order,
        parent: &parent,
        distances: &distances,
        placed: vec![vec![0i64; dimension]; n],
    };
    Ok(search.place(1, 0))
}

struct Search<'a> {
    dimension: usize,
    order: &'a [usize],
    parent: &'a [usize],
    distances: &'a [Vec<usize>],
    /// Points by breadth-first position.
    placed: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn place(&mut self, k: usize, used_axes: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let vertex = self.order[k];
        let open = (used_axes + 1).min(self.dimension);
        for axis in 0..open {
            let signs: &[i64] = if axis < used_axes { &[1, -1] } else { &[1] };
            for &sign in signs {
                let mut candidate = self.placed[self.parent[k]].clone();
                candidate[axis] += sign;
                let consistent = (0..k).all(|m| {
                    let l1: u64 = candidate
                        .iter()
                        .zip(&self.placed[m])
                        .map(|(a, b)| a.abs_diff(*b))
                        .sum();
                    l1 == self.distances[self.order[m]][vertex] as u64
                });
                if consistent {
                    self.placed[k] = candidate;
                    if self.place(k + 1, used_axes.max(axis + 1)) {
                        return true;
                    }
                }
            }
        }
        false
    }
}
