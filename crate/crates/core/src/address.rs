//! Addressing schemes: integer labels whose Hamming or ℓ1 distance equals
//! tree distance.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::embed::Embedding;
use crate::tree::{Tree, TreeError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AddressError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("embedding is not normalized: axis {axis} has minimum {min}")]
    NotNormalized { axis: usize, min: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AddressScheme {
    /// 0/1 labels of length `q`, one coordinate per edge.
    Hypercube,
    /// Bounded integer labels of length `d`, read off a normalized embedding.
    Grid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressTable {
    pub scheme: AddressScheme,
    pub width: usize,
    /// Per-coordinate maximum; every entry `k` of every label is in `0..=bounds[k]`.
    pub bounds: Vec<i64>,
    /// Labels in ascending vertex order.
    pub labels: Vec<(VertexId, Vec<i64>)>,
}

impl AddressTable {
    pub fn label(&self, v: VertexId) -> Option<&[i64]> {
        self.labels
            .binary_search_by_key(&v, |(id, _)| *id)
            .ok()
            .map(|i| self.labels[i].1.as_slice())
    }

    /// ℓ1 distance between two labels, which is the Hamming distance for
    /// hypercube labels.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<u64> {
        let (a, b) = (self.label(u)?, self.label(v)?);
        Some(a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).sum())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("vertex");
        for k in 0..self.width {
            out.push_str(&format!("\tc{k}"));
        }
        out.push('\n');
        for (v, label) in &self.labels {
            out.push_str(&v.to_string());
            for x in label {
                out.push('\t');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            scheme: AddressScheme,
            width: usize,
            bounds: &'a [i64],
            labels: Labels<'a>,
        }
        struct Labels<'a>(&'a [(VertexId, Vec<i64>)]);
        impl Serialize for Labels<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (v, label) in self.0 {
                    map.serialize_entry(&v.to_string(), label)?;
                }
                map.end()
            }
        }
        serde_json::to_string(&Doc {
            scheme: self.scheme,
            width: self.width,
            bounds: &self.bounds,
            labels: Labels(&self.labels),
        })
        .expect("address table serializes")
    }
}

/// Labels each vertex with the set of edges on its path from `root`.
///
/// Edge `i` is the `i`-th edge in lexicographic `(smaller, larger)` endpoint
/// order; `label(v)[i] = 1` iff that edge lies on the `root`-to-`v` path.
pub fn hypercube_address(tree: &Tree, root: VertexId) -> Result<AddressTable, AddressError> {
    let root_index = tree.index_of(root).ok_or(TreeError::UnknownVertex(root))?;
    let n = tree.vertex_count();
    let edges: Vec<(VertexId, VertexId)> = tree.edges().collect();
    let edge_index = |a: VertexId, b: VertexId| {
        edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("tree edge")
    };
    let width = edges.len();
    let mut labels: Vec<Option<Vec<i64>>> = vec![None; n];
    labels[root_index] = Some(vec![0; width]);
    let mut queue = VecDeque::from([root_index]);
    while let Some(x) = queue.pop_front() {
        for &y in tree.adjacent(x) {
            if labels[y].is_none() {
                let mut label = labels[x].clone().unwrap();
                label[edge_index(tree.id_at(x), tree.id_at(y))] = 1;
                labels[y] = Some(label);
                queue.push_back(y);
            }
        }
    }
    Ok(AddressTable {
        scheme: AddressScheme::Hypercube,
        width,
        bounds: vec![1; width],
        labels: tree
            .vertices()
            .zip(labels.into_iter().map(Option::unwrap))
            .collect(),
    })
}

/// Grid labels of a normalized embedding: the coordinates themselves, with
/// axis `k` bounded by its extent `l_k`.
pub fn grid_address(embedding: &Embedding) -> Result<AddressTable, AddressError> {
    let ranges = embedding.axis_ranges();
    if let Some((axis, &(min, _))) = ranges.iter().enumerate().find(|(_, r)| r.0 != 0) {
        return Err(AddressError::NotNormalized { axis, min });
    }
    Ok(AddressTable {
        scheme: AddressScheme::Grid,
        width: embedding.dimension(),
        bounds: ranges.iter().map(|&(_, hi)| hi).collect(),
        labels: embedding.points().map(|(v, p)| (v, p.0)).collect(),
    })
}
