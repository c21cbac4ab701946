//! Brute-force reference computations shared by the integration tests.
//! Everything here enumerates vectors directly and uses none of the
//! closed-form machinery under test.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use repgraph::qform::{QuadraticForm, VectorSpace};
use repgraph::{parse_form, Field};

pub const GRID_FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

pub fn field(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

pub fn all_vectors(q: &QuadraticForm) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    q.space().scan::<()>(|_, v| {
        out.push(v.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Both isometry classes in dimension `n`, written in the DSL, with a
/// representative that is not already in canonical shape where possible.
pub fn class_sources(f: &Field, n: usize) -> Vec<String> {
    if f.is_char2() {
        if n % 2 == 1 {
            return Vec::new();
        }
        let k = n / 2;
        let head = |k: usize| match k {
            0 => String::new(),
            k => format!("{k}*H + "),
        };
        vec![format!("{}H", head(k - 1)), format!("{}bin(1,lambda)", head(k - 1))]
    } else {
        let ones = vec!["1"; n - 1].join(",");
        let sep = if n > 1 { "," } else { "" };
        vec![format!("diag({ones}{sep}1)"), format!("diag({ones}{sep}lambda)")]
    }
}

/// The grid of forms: each field, dimensions 1..=4, both classes.
pub fn grid() -> Vec<(u64, String, QuadraticForm)> {
    let mut out = Vec::new();
    for &q in &GRID_FIELDS {
        let f = field(q);
        for n in 1..=4 {
            for src in class_sources(&f, n) {
                let form = parse_form(&f, &src).unwrap();
                out.push((q, src, form));
            }
        }
    }
    out
}

/// `a ∈ {0, 1, λ}`, deduplicated.
pub fn grid_values(f: &Field) -> Vec<u32> {
    let mut v = vec![0, 1, f.lambda()];
    v.dedup();
    v
}

pub fn preimage_count(q: &QuadraticForm, a: u32) -> u128 {
    let mut c = 0;
    q.space().scan::<()>(|_, v| {
        c += (q.eval(v) == a) as u128;
        ControlFlow::Continue(())
    });
    c
}

/// All `(u, v)` with `q(u) = a`, `q(v) = b`, `u + v = w`.
pub fn decompositions(q: &QuadraticForm, w: &[u32], a: u32, b: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let space = q.space();
    let mut out = Vec::new();
    space.scan::<()>(|_, u| {
        let v = space.sub(w, u);
        if q.eval(u) == a && q.eval(&v) == b {
            out.push((u.to_vec(), v.0));
        }
        ControlFlow::Continue(())
    });
    out
}

/// `|O(q)|` by backtracking over images of the standard basis.
pub fn isometry_count(q: &QuadraticForm) -> u128 {
    let n = q.dim();
    let vectors = all_vectors(q);
    let basis: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u32).collect()).collect();
    fn go(q: &QuadraticForm, basis: &[Vec<u32>], vectors: &[Vec<u32>], images: &mut Vec<Vec<u32>>) -> u128 {
        let i = images.len();
        if i == basis.len() {
            return 1;
        }
        let mut total = 0;
        for y in vectors {
            if q.eval(y) != q.eval(&basis[i]) {
                continue;
            }
            if (0..i).any(|j| q.polar(y, &images[j]) != q.polar(&basis[i], &basis[j])) {
                continue;
            }
            images.push(y.clone());
            total += go(q, basis, vectors, images);
            images.pop();
        }
        total
    }
    go(q, &basis, &vectors, &mut Vec::new())
}

/// Whether some `u + v` with `q(u) = q(v) = 1` has `q(u + v) = a`.
pub fn v1v1_hits(q: &QuadraticForm, a: u32) -> bool {
    let space = q.space();
    let ones: Vec<Vec<u32>> = all_vectors(q).into_iter().filter(|v| q.eval(v) == 1).collect();
    ones.iter().any(|u| ones.iter().any(|v| q.eval(&space.add(u, v)) == a))
}

/// Explicit adjacency lists of `G(q, a)` over vector indices.
pub fn adjacency(q: &QuadraticForm, a: u32) -> Vec<Vec<usize>> {
    let space = q.space();
    let vectors = all_vectors(q);
    let index: HashMap<Vec<u32>, usize> = vectors.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let gens: Vec<&Vec<u32>> = vectors
        .iter()
        .filter(|v| !VectorSpace::is_zero(v) && q.eval(v) == a)
        .collect();
    vectors
        .iter()
        .map(|x| gens.iter().map(|g| index[&space.add(x, g).0]).collect())
        .collect()
}

/// Girth by BFS from every vertex.
pub fn girth_all_roots(adj: &[Vec<usize>]) -> Option<u64> {
    let mut best: Option<u64> = None;
    for root in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = (dist[u] + dist[v] + 1) as u64;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Eccentricity-based diameter over all vertices; `None` if disconnected.
pub fn diameter_all_roots(adj: &[Vec<usize>]) -> Option<u64> {
    let mut diam = 0;
    for root in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        diam = diam.max(*dist.iter().max().unwrap());
    }
    (diam != usize::MAX).then_some(diam as u64)
}

/// Triangles and 4-cycles of an explicit graph, by direct enumeration.
pub fn triangles_and_squares(adj: &[Vec<usize>]) -> (u128, u128) {
    let n = adj.len();
    let mut is_edge = vec![false; n * n];
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs {
            is_edge[u * n + v] = true;
        }
    }
    let mut triangles = 0u128;
    let mut squares = 0u128;
    for u in 0..n {
        for &v in &adj[u] {
            if v <= u {
                continue;
            }
            for &w in &adj[v] {
                if w > v && is_edge[w * n + u] {
                    triangles += 1;
                }
            }
        }
    }
    // each 4-cycle u-x-w-y is counted once per opposite pair {u, w} with u < w
    for u in 0..n {
        let mut common = HashMap::<usize, u128>::new();
        for &x in &adj[u] {
            for &w in &adj[x] {
                if w > u {
                    *common.entry(w).or_default() += 1;
                }
            }
        }
        squares += common.values().map(|&c| c * c.saturating_sub(1) / 2).sum::<u128>();
    }
    (triangles, squares / 2)
}
