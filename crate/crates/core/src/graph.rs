//! Explicit representation graphs and their invariants by exhaustive search.
//!
//! Vertices of `G(q, a)` are the dense indices `0..f^n` of [`VectorSpace`];
//! the neighbours of `x` are `x + N` with `N = {u ≠ 0 : q(u) = a}`. Nothing
//! beyond the distance array is materialized.
//!
//! Every invariant here is computed from the origin only. A Cayley graph is
//! vertex-transitive (translation by `x` is an automorphism), so the origin
//! sees the same distances and the same shortest cycles as any vertex.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::qform::{QuadraticForm, Vector, VectorSpace};
use crate::DEFAULT_MAX_VERTICES;

/// A non-negative integer or `∞`. Serializes as a number or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => s.serialize_u64(*x),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(x) => Ok(Extended::Finite(x)),
            Raw::S(s) if s == "inf" => Ok(Extended::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!(
                "expected a number or \"inf\", got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GraphJob {
    pub form: QuadraticForm,
    pub a: u32,
    pub max_vertices: u64,
    /// Worker count; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl GraphJob {
    pub fn new(form: QuadraticForm, a: u32) -> GraphJob {
        GraphJob {
            form,
            a,
            max_vertices: DEFAULT_MAX_VERTICES,
            threads: None,
        }
    }

    pub fn with_max_vertices(mut self, cap: u64) -> GraphJob {
        self.max_vertices = cap;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> GraphJob {
        self.threads = Some(threads);
        self
    }

    pub fn build(&self) -> Result<Graph> {
        Graph::new(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceSpectrum {
    /// `d(0, v)` for the nonzero vectors `v` with `q(v) = b`, keyed by `b`.
    pub per_value: BTreeMap<u32, Extended>,
    pub diameter: Extended,
    /// Whether every nonzero vector of a given value had the same distance.
    pub uniform: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCensus {
    /// Triangles `{0, v, w}` with `w ∈ span(v)`.
    pub c1: u128,
    /// Triangles `{0, v, w}` with `v, w` independent.
    pub c2: u128,
    pub through_origin: u128,
    pub total: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleCensus {
    pub through_origin: u128,
    pub total: u128,
}

/// Edge export format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// One `i j` line per edge, `i < j`.
    Edges,
    /// Graphviz, vertices labelled by coordinates.
    Dot,
}

/// Vertex cap for [`ExportFormat::Dot`].
pub const DOT_MAX_VERTICES: u64 = 10_000;

const UNREACHED: u32 = u32::MAX;

/// Vertex-index arithmetic on `F^n`.
struct Arith {
    field: Field,
    // coordinate-wise addition in characteristic 2 is XOR of codes, and so
    // of indices
    xor: bool,
    prime: Option<u32>,
    dim: usize,
    // coordinate i of vertex x at x·dim + i; empty with `xor`
    digits: Vec<u32>,
    place: Vec<u64>,
}

impl Arith {
    fn new(field: &Field, dim: usize, vertices: u64) -> Arith {
        let xor = field.is_char2();
        let order = field.order() as u64;
        let digits = if xor {
            Vec::new()
        } else {
            let mut d = Vec::with_capacity(vertices as usize * dim);
            for x in 0..vertices {
                let mut y = x;
                for _ in 0..dim {
                    d.push((y % order) as u32);
                    y /= order;
                }
            }
            d
        };
        Arith {
            field: field.clone(),
            xor,
            prime: (field.degree() == 1).then(|| field.characteristic()),
            dim,
            digits,
            place: (0..dim as u32).map(|i| order.pow(i)).collect(),
        }
    }

    fn combine(&self, x: u64, u: u64, op: impl Fn(u32, u32) -> u32) -> u64 {
        let n = self.dim;
        let dx = &self.digits[x as usize * n..][..n];
        let du = &self.digits[u as usize * n..][..n];
        (0..n).map(|i| op(dx[i], du[i]) as u64 * self.place[i]).sum()
    }

    #[inline]
    fn add(&self, x: u64, u: u64) -> u64 {
        if self.xor {
            return x ^ u;
        }
        match self.prime {
            Some(p) => self.combine(x, u, |a, b| if a + b >= p { a + b - p } else { a + b }),
            None => self.combine(x, u, |a, b| self.field.add(a, b)),
        }
    }

    #[inline]
    fn sub(&self, x: u64, u: u64) -> u64 {
        if self.xor {
            return x ^ u;
        }
        match self.prime {
            Some(p) => self.combine(x, u, |a, b| if a >= b { a - b } else { a + p - b }),
            None => self.combine(x, u, |a, b| self.field.sub(a, b)),
        }
    }
}

pub struct Graph {
    form: QuadraticForm,
    a: u32,
    space: VectorSpace,
    vertices: u64,
    arith: Arith,
    // q at every vertex
    values: Vec<u32>,
    neighbors: Vec<Vector>,
    neighbor_index: Vec<u64>,
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Graph {
    pub fn new(job: &GraphJob) -> Result<Graph> {
        let space = job.form.space();
        let vertices = space.check_cap(job.max_vertices)?;
        let field = job.form.field();
        field.check(job.a as u64)?;
        let mut neighbors = Vec::new();
        let mut values = Vec::with_capacity(vertices as usize);
        space.scan::<()>(|_, v| {
            let value = job.form.eval(v);
            values.push(value);
            if value == job.a && !VectorSpace::is_zero(v) {
                neighbors.push(Vector(v.to_vec()));
            }
            std::ops::ControlFlow::Continue(())
        });
        let neighbor_index = neighbors.iter().map(|v| space.index(v)).collect();
        let pool = match job.threads {
            Some(t) => Some(Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Error::NotApplicable(Box::leak(e.to_string().into_boxed_str())))?,
            )),
            None => None,
        };
        Ok(Graph {
            form: job.form.clone(),
            a: job.a,
            arith: Arith::new(field, space.dim(), vertices),
            values,
            space,
            vertices,
            neighbors,
            neighbor_index,
            pool,
        })
    }

    fn run<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn field(&self) -> &Field {
        self.form.field()
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertices
    }

    pub fn space(&self) -> &VectorSpace {
        &self.space
    }

    /// `N`, sorted by index.
    pub fn neighbor_set(&self) -> &[Vector] {
        &self.neighbors
    }

    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }

    /// Index of `x + u`.
    pub fn add(&self, x: u64, u: u64) -> u64 {
        self.arith.add(x, u)
    }

    /// Index of `x − u`.
    pub fn sub(&self, x: u64, u: u64) -> u64 {
        self.arith.sub(x, u)
    }

    /// `q` at the vertex with index `x`.
    pub fn value(&self, x: u64) -> u32 {
        self.values[x as usize]
    }

    pub fn neighbors_of(&self, x: u64) -> impl Iterator<Item = u64> + '_ {
        self.neighbor_index.iter().map(move |&u| self.add(x, u))
    }

    /// Level-synchronous BFS from `root`; `UNREACHED` marks other components.
    fn bfs(&self, root: u64) -> Vec<u32> {
        let dist: Vec<AtomicU32> = (0..self.vertices).map(|_| AtomicU32::new(UNREACHED)).collect();
        dist[root as usize].store(0, Ordering::Relaxed);
        let mut frontier = vec![root];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next: Vec<u64> = frontier
                .par_iter()
                .flat_map_iter(|&x| {
                    let dist = &dist;
                    self.neighbors_of(x).filter(move |&y| {
                        dist[y as usize]
                            .compare_exchange(UNREACHED, level, Ordering::Relaxed, Ordering::Relaxed)
                            .is_ok()
                    })
                })
                .collect();
            next.sort_unstable();
            frontier = next;
        }
        dist.into_iter().map(AtomicU32::into_inner).collect()
    }

    /// Distances from the origin; `None` for other components.
    pub fn distances_from_origin(&self) -> Vec<Option<u32>> {
        self.run(|| self.bfs(0))
            .into_iter()
            .map(|d| (d != UNREACHED).then_some(d))
            .collect()
    }

    /// Number of connected components, computed twice: as the index of the
    /// subgroup generated by `N`, and by BFS over all components.
    pub fn component_count(&self) -> Result<u64> {
        let by_index = self.vertices / self.subgroup_order();
        let by_bfs = self.run(|| self.components_by_bfs());
        if by_index != by_bfs {
            return Err(Error::Disagreement(format!(
                "component count: subgroup index {by_index}, BFS {by_bfs}"
            )));
        }
        Ok(by_index)
    }

    /// `|⟨N⟩|` by closure under adding multiples of each generator.
    pub fn subgroup_order(&self) -> u64 {
        let p = self.field().characteristic() as u64;
        let mut member = vec![false; self.vertices as usize];
        member[0] = true;
        let mut elements = vec![0u64];
        for &g in &self.neighbor_index {
            if member[g as usize] {
                continue;
            }
            let base = elements.len();
            let mut shifted: Vec<u64> = elements.clone();
            for _ in 1..p {
                for s in shifted.iter_mut() {
                    *s = self.add(*s, g);
                }
                for &s in &shifted {
                    member[s as usize] = true;
                }
                elements.extend_from_slice(&shifted);
            }
            debug_assert_eq!(elements.len() as u64, base as u64 * p);
        }
        elements.len() as u64
    }

    fn components_by_bfs(&self) -> u64 {
        let mut seen = vec![false; self.vertices as usize];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertices {
            if seen[start as usize] {
                continue;
            }
            count += 1;
            seen[start as usize] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for y in self.neighbors_of(x) {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// `d(0, v)` grouped by `q(v)` over nonzero `v`, and the diameter.
    pub fn distance_spectrum(&self) -> DistanceSpectrum {
        let dist = self.run(|| self.bfs(0));
        let mut per_value: BTreeMap<u32, Extended> = BTreeMap::new();
        let mut uniform = true;
        for (&d, &b) in dist.iter().zip(&self.values).skip(1) {
            let d = match d {
                UNREACHED => Extended::Infinite,
                d => Extended::Finite(d as u64),
            };
            match per_value.get(&b) {
                Some(&prev) => uniform &= prev == d,
                None => {
                    per_value.insert(b, d);
                }
            }
        }
        let diameter = per_value.values().copied().max().unwrap_or(Extended::Finite(0));
        DistanceSpectrum {
            per_value,
            diameter,
            uniform,
        }
    }

    /// Length of a shortest cycle.
    ///
    /// BFS from the origin; every edge `{u, v}` outside the BFS tree closes
    /// a walk of length `d(u) + d(v) + 1` through the origin, which contains
    /// a cycle of at most that length. When the root lies on a shortest
    /// cycle, the minimum over such edges equals the girth; by
    /// vertex-transitivity every vertex does. The search stops once the
    /// unexplored edges, both of whose ends lie deeper, cannot improve on
    /// the best candidate.
    pub fn girth(&self) -> Extended {
        self.run(|| {
            let n = self.vertices as usize;
            let parent: Vec<AtomicU32> = (0..n).map(|_| AtomicU32::new(UNREACHED)).collect();
            let dist: Vec<AtomicU32> = (0..n).map(|_| AtomicU32::new(UNREACHED)).collect();
            dist[0].store(0, Ordering::Relaxed);
            parent[0].store(0, Ordering::Relaxed);
            let d = |x: u64| dist[x as usize].load(Ordering::Relaxed) as u64;
            let p = |x: u64| parent[x as usize].load(Ordering::Relaxed) as u64;
            let mut frontier = vec![0u64];
            let mut level = 0u64;
            let mut best = u64::MAX;
            while !frontier.is_empty() {
                let next: Vec<u64> = frontier
                    .par_iter()
                    .flat_map_iter(|&x| {
                        let (dist, parent) = (&dist, &parent);
                        self.neighbors_of(x).filter(move |&y| {
                            let claimed = dist[y as usize]
                                .compare_exchange(UNREACHED, level as u32 + 1, Ordering::Relaxed, Ordering::Relaxed)
                                .is_ok();
                            if claimed {
                                parent[y as usize].store(x as u32, Ordering::Relaxed);
                            }
                            claimed
                        })
                    })
                    .collect();
                let closing = frontier
                    .par_iter()
                    .filter_map(|&u| {
                        self.neighbors_of(u)
                            .filter(|&v| p(v) != u && p(u) != v)
                            .map(|v| d(u) + d(v) + 1)
                            .min()
                    })
                    .min();
                best = best.min(closing.unwrap_or(u64::MAX));
                // edges not yet seen join two vertices at depth ≥ level + 1
                if best <= 2 * (level + 1) + 1 {
                    break;
                }
                frontier = next;
                level += 1;
            }
            if best == u64::MAX {
                Extended::Infinite
            } else {
                Extended::Finite(best)
            }
        })
    }

    /// Triangles through the origin, split by the dimension of `span(v, w)`.
    pub fn triangle_census(&self) -> TriangleCensus {
        let (c1, c2) = self.run(|| {
            (0..self.neighbors.len())
                .into_par_iter()
                .map(|i| {
                    let v = &self.neighbors[i];
                    let vi = self.neighbor_index[i];
                    let mut c = (0u128, 0u128);
                    for j in i + 1..self.neighbors.len() {
                        if self.value(self.sub(vi, self.neighbor_index[j])) != self.a {
                            continue;
                        }
                        if self.space.in_span(v, &self.neighbors[j]) {
                            c.0 += 1;
                        } else {
                            c.1 += 1;
                        }
                    }
                    c
                })
                .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1))
        });
        let through_origin = c1 + c2;
        TriangleCensus {
            c1,
            c2,
            through_origin,
            total: through_origin * self.vertices as u128 / 3,
        }
    }

    /// Number of paths `0 − u − w` with `u ∈ N`, `w − u ∈ N`, indexed by `w`.
    fn two_path_counts(&self) -> Vec<u32> {
        let counts: Vec<AtomicU32> = (0..self.vertices).map(|_| AtomicU32::new(0)).collect();
        self.neighbor_index.par_iter().for_each(|&u| {
            for w in self.neighbors_of(u) {
                counts[w as usize].fetch_add(1, Ordering::Relaxed);
            }
        });
        counts.into_iter().map(AtomicU32::into_inner).collect()
    }

    /// 4-cycles `(0, u, w, v)`: every unordered pair of distinct 2-paths from
    /// the origin to the same `w ≠ 0` closes exactly one.
    pub fn four_cycle_census(&self) -> FourCycleCensus {
        let through_origin: u128 = self.run(|| {
            self.two_path_counts()
                .par_iter()
                .skip(1)
                .map(|&c| c as u128 * (c as u128).saturating_sub(1) / 2)
                .sum()
        });
        FourCycleCensus {
            through_origin,
            total: through_origin * self.vertices as u128 / 4,
        }
    }

    /// Calls `visit(u, w, v)` for every 4-cycle `(0, u, w, v)` with
    /// `index(u) < index(v)`.
    pub fn for_each_four_cycle(&self, mut visit: impl FnMut(&Vector, &Vector, &Vector)) {
        let counts = self.two_path_counts();
        for (w, &c) in counts.iter().enumerate().skip(1) {
            if c < 2 {
                continue;
            }
            let w = w as u64;
            let mids: Vec<usize> = (0..self.neighbors.len())
                .filter(|&i| {
                    let rest = self.sub(w, self.neighbor_index[i]);
                    rest != 0 && self.value(rest) == self.a
                })
                .collect();
            let wv = self.space.coords(w);
            for (k, &i) in mids.iter().enumerate() {
                for &j in &mids[k + 1..] {
                    visit(&self.neighbors[i], &wv, &self.neighbors[j]);
                }
            }
        }
    }

    /// All edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.vertices).flat_map(move |x| {
            let mut ys: Vec<u64> = self.neighbors_of(x).filter(|&y| y > x).collect();
            ys.sort_unstable();
            ys.into_iter().map(move |y| (x, y))
        })
    }

    pub fn export(&self, format: ExportFormat, out: &mut dyn Write) -> Result<()> {
        if format == ExportFormat::Dot && self.vertices > DOT_MAX_VERTICES {
            return Err(Error::CapExceeded {
                needed: self.vertices,
                cap: DOT_MAX_VERTICES,
            });
        }
        self.write(format, out)
            .map_err(|e| Error::Parse(format!("write failed: {e}")))
    }

    fn write(&self, format: ExportFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            ExportFormat::Edges => {
                for (x, y) in self.edges() {
                    writeln!(out, "{x} {y}")?;
                }
            }
            ExportFormat::Dot => {
                writeln!(out, "graph G {{")?;
                for x in 0..self.vertices {
                    writeln!(out, "  {x} [label=\"{}\"];", self.space.coords(x))?;
                }
                for (x, y) in self.edges() {
                    writeln!(out, "  {x} -- {y};")?;
                }
                writeln!(out, "}}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(q: u64, form: &str, a: u32) -> Graph {
        let field = Field::of_order(q).unwrap();
        let form = crate::qform::parse_form(&field, form).unwrap();
        GraphJob::new(form, a).build().unwrap()
    }

    #[test]
    fn neighbor_set_examples() {
        let g = job(5, "H", 1);
        let expected: Vec<Vector> = [[1, 1], [3, 2], [2, 3], [4, 4]]
            .iter()
            .map(|v| Vector(v.to_vec()))
            .collect();
        assert_eq!(g.neighbor_set(), &expected[..]);
        assert_eq!(job(2, "H", 1).neighbor_set(), &[Vector(vec![1, 1])]);
        assert!(job(2, "bin(1,1)", 0).neighbor_set().is_empty());
    }

    #[test]
    fn component_examples() {
        assert_eq!(job(3, "H", 1).component_count().unwrap(), 3);
        assert_eq!(job(4, "H", 1).component_count().unwrap(), 4);
        assert_eq!(job(5, "H", 1).component_count().unwrap(), 1);
        assert_eq!(job(2, "H", 1).component_count().unwrap(), 2);
        assert_eq!(job(2, "bin(1,1)", 0).component_count().unwrap(), 4);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(job(5, "H", 0).distance_spectrum().diameter, Extended::Finite(2));
        assert_eq!(
            job(5, "diag(1,1,1,1)", 1).distance_spectrum().diameter,
            Extended::Finite(2)
        );
        assert_eq!(job(3, "H", 1).distance_spectrum().diameter, Extended::Infinite);
        let s = job(7, "H", 1).distance_spectrum();
        assert!(s.uniform);
        assert_eq!(s.per_value[&1], Extended::Finite(1));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(job(2, "H", 1).girth(), Extended::Infinite);
        assert_eq!(job(2, "bin(1,1)", 1).girth(), Extended::Finite(3));
        assert_eq!(job(7, "diag(1)", 1).girth(), Extended::Finite(7));
        assert_eq!(job(2, "H", 0).girth(), Extended::Finite(4));
    }

    #[test]
    fn triangle_examples() {
        let t = job(5, "diag(1,1,1,1)", 1).triangle_census();
        assert_eq!((t.c2, t.total), (1200, 250_000));
        assert_eq!(job(2, "H", 1).triangle_census().total, 0);
        let t = job(3, "H", 1).triangle_census();
        assert_eq!(t.c1, 1);
    }

    #[test]
    fn four_cycle_examples() {
        let c = job(2, "H+bin(1,1)", 1).four_cycle_census();
        assert_eq!((c.through_origin, c.total), (225, 900));
        assert_eq!(job(5, "H", 1).four_cycle_census().total, 25);

        let g = job(5, "diag(1,1,1)", 1);
        let w = Vector(vec![1, 4, 0]);
        let mut through_w = 0;
        g.for_each_four_cycle(|_, x, _| through_w += (*x == w) as u32);
        assert!(through_w >= 2);
    }

    #[test]
    fn export_examples() {
        let mut out = Vec::new();
        job(2, "H", 1).export(ExportFormat::Edges, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 3\n1 2\n");
        assert_eq!(job(2, "bin(1,1)", 1).edges().count(), 6);
        assert_eq!(job(2, "bin(1,1)", 0).edges().count(), 0);
        let mut dot = Vec::new();
        job(2, "bin(1,1)", 1).export(ExportFormat::Dot, &mut dot).unwrap();
        assert!(String::from_utf8(dot).unwrap().contains("label=\"(1,1)\""));
    }

    #[test]
    fn cap_and_threads() {
        let field = Field::of_order(13).unwrap();
        let form = QuadraticForm::diag(&field, &[1; 5]).unwrap();
        assert!(matches!(
            GraphJob::new(form, 1).with_max_vertices(100).build(),
            Err(Error::CapExceeded { .. })
        ));
        let field = Field::of_order(7).unwrap();
        let form = QuadraticForm::diag(&field, &[1, 1, 3]).unwrap();
        let a = GraphJob::new(form.clone(), 1).with_threads(1).build().unwrap();
        let b = GraphJob::new(form, 1).with_threads(4).build().unwrap();
        assert_eq!(a.distance_spectrum(), b.distance_spectrum());
        assert_eq!(a.girth(), b.girth());
        assert_eq!(a.triangle_census(), b.triangle_census());
    }

    #[test]
    fn extended_serializes_inf() {
        let s = serde_json::to_string(&[Extended::Finite(3), Extended::Infinite]).unwrap();
        assert_eq!(s, "[3,\"inf\"]");
        let back: Vec<Extended> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![Extended::Finite(3), Extended::Infinite]);
    }
}
