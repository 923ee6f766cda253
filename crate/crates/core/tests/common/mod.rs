//! Test corpora and oracles shared by the integration suites. Nothing here
//! goes through the breadth-first machinery the library uses.
#![allow(dead_code)]

use std::collections::BTreeSet;

use treedim::{Embedding, Tree, VertexId};

pub fn star(leaves: u64) -> Tree {
    Tree::from_edges((1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn path(vertices: u64) -> Tree {
    if vertices == 1 {
        return Tree::single(0);
    }
    Tree::from_edges((1..vertices).map(|i| (i - 1, i))).unwrap()
}

/// Spider with center 0 and the given leg lengths.
pub fn spider(legs: &[u64]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(edges).unwrap()
}

/// Spine of `spine` vertices, each carrying `legs` pendant leaves.
pub fn caterpillar(spine: u64, legs: u64) -> Tree {
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs {
            edges.push((s, next));
            next += 1;
        }
    }
    Tree::from_edges(edges).unwrap()
}

/// Every labeled tree on `{0, .., n - 1}`, one per Prüfer sequence.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n.saturating_sub(2);
    let total = if n <= 2 {
        1
    } else {
        (n as u64).pow(len as u32)
    };
    (0..total).map(move |mut code| {
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        Tree::from_prufer(n, &seq).unwrap()
    })
}

/// One representative per isomorphism class of trees with `1..=max_n`
/// vertices, grown leaf by leaf and deduplicated by a canonical string.
pub fn unlabeled_trees(max_n: usize) -> Vec<Tree> {
    let mut out = vec![Tree::single(0)];
    let mut layer = vec![Vec::<(u64, u64)>::new()];
    for n in 2..=max_n as u64 {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &layer {
            for attach in 0..n - 1 {
                let mut grown = edges.clone();
                grown.push((attach, n - 1));
                let key = canonical_form(n as usize, &grown);
                if seen.insert(key) {
                    next.push(grown);
                }
            }
        }
        out.extend(
            next.iter()
                .map(|e| Tree::from_edges(e.iter().copied()).unwrap()),
        );
        layer = next;
    }
    out
}

/// AHU encoding rooted at the tree's center (minimum over both centers
/// when there are two).
fn canonical_form(n: usize, edges: &[(u64, u64)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&i| degree[i] <= 1).collect();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &x in &layer {
            for &y in &adj[x] {
                degree[y] -= 1;
                if degree[y] == 1 {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], x: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[x]
            .iter()
            .filter(|&&y| y != parent)
            .map(|&y| encode(adj, y, x))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| encode(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// All-pairs distances by Floyd–Warshall over the edge list.
pub struct FloydDistances {
    ids: Vec<VertexId>,
    dist: Vec<Vec<u64>>,
}

impl FloydDistances {
    pub fn new(tree: &Tree) -> Self {
        let ids: Vec<VertexId> = tree.vertices().collect();
        let n = ids.len();
        let at = |v: VertexId| ids.binary_search(&v).unwrap();
        let inf = u64::MAX / 4;
        let mut dist = vec![vec![inf; n]; n];
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = 0;
        }
        for (u, v) in tree.edges() {
            dist[at(u)][at(v)] = 1;
            dist[at(v)][at(u)] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let through = dist[i][k] + dist[k][j];
                    if through < dist[i][j] {
                        dist[i][j] = through;
                    }
                }
            }
        }
        FloydDistances { ids, dist }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u64 {
        let i = self.ids.binary_search(&u).unwrap();
        let j = self.ids.binary_search(&v).unwrap();
        self.dist[i][j]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        let n = self.ids.len();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (self.ids[i], self.ids[j], self.dist[i][j])))
    }
}

pub fn l1(a: &[i64], b: &[i64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).sum()
}

/// Dense all-pairs isometry check against Floyd–Warshall.
pub fn oracle_isometric(tree: &Tree, embedding: &Embedding) -> bool {
    let floyd = FloydDistances::new(tree);
    let points: Vec<Vec<i64>> = tree
        .vertices()
        .map(|v| embedding.point(v).unwrap().0)
        .collect();
    let ids: Vec<VertexId> = tree.vertices().collect();
    let ok = floyd.pairs().all(|(u, v, d)| {
        let (i, j) = (
            ids.binary_search(&u).unwrap(),
            ids.binary_search(&v).unwrap(),
        );
        l1(&points[i], &points[j]) == d
    });
    ok
}

pub fn leaf_count_by_census(tree: &Tree) -> usize {
    tree.vertices()
        .filter(|&v| tree.degree(v) == Some(1))
        .count()
}

pub fn ceil_half(n: usize) -> usize {
    n / 2 + n % 2
}
