//! Brute-force tight spans of small finite metric spaces.
//!
//! The tight span `E(X)` is the set of `f: X → ℝ` with
//! `f(x) + f(y) ≥ d(x,y)` for all `x, y` and `f(x) = max_y (d(x,y) - f(y))`.
//! Its vertices are vertices of the polyhedron of feasible functions, so each
//! is the unique solution of `n` independent tight equations. This module
//! finds them by searching over sets of point pairs, independently of the
//! partition constructions elsewhere in the crate.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull::{HullComplex, VertexFunction};
use crate::linalg::{integer, pair_row, rank, Echelon, Rational};
use crate::partitions::ModelSpace;

pub const DEFAULT_CAP: usize = 7;
/// Largest point count accepted even with an explicit cap override.
pub const MAX_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetric {
    d: Vec<Vec<i64>>,
}

impl FiniteMetric {
    /// Checks squareness, symmetry, zero diagonal, positivity off the
    /// diagonal and the triangle inequality.
    pub fn new(d: Vec<Vec<i64>>) -> Result<Self> {
        let n = d.len();
        if n == 0 {
            return Err(Error::InvalidMetric("no points".into()));
        }
        for (i, row) in d.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMetric(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            if d[i][i] != 0 {
                return Err(Error::InvalidMetric(format!("d({i},{i}) = {} ≠ 0", d[i][i])));
            }
            for j in 0..n {
                if d[i][j] != d[j][i] {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) ≠ d({j},{i})")));
                }
                if i != j && d[i][j] <= 0 {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) = {} ≤ 0", d[i][j])));
                }
                for l in 0..n {
                    if d[i][l] > d[i][j] + d[j][l] {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails at ({i},{j},{l})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteMetric { d })
    }

    pub fn from_space(space: &ModelSpace) -> Self {
        let d = space
            .distance_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as i64).collect())
            .collect();
        FiniteMetric { d }
    }

    /// Plain text: the point count on the first line, then one row of
    /// integers per line. Commas are accepted as separators.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidMetric("empty metric file".into()))?
            .parse()
            .map_err(|e| Error::InvalidMetric(format!("bad point count: {e}")))?;
        let rows = lines
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|e| Error::InvalidMetric(format!("bad entry {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::InvalidMetric(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        FiniteMetric::new(rows)
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn d(&self, i: usize, j: usize) -> i64 {
        self.d[i][j]
    }

    fn dr(&self, i: usize, j: usize) -> Rational {
        integer(self.d[i][j])
    }
}

fn check_dim(f: &[Rational], metric: &FiniteMetric) -> Result<()> {
    if f.len() != metric.n() {
        return Err(Error::DimensionMismatch {
            expected: metric.n(),
            got: f.len(),
        });
    }
    Ok(())
}

fn feasible(f: &[Rational], metric: &FiniteMetric) -> bool {
    let n = metric.n();
    (0..n).all(|i| (i..n).all(|j| f[i] + f[j] >= metric.dr(i, j)))
}

/// Feasible and `f_i = max_j (d(i,j) - f_j)` for every `i`.
pub fn is_extremal_rational(f: &[Rational], metric: &FiniteMetric) -> Result<bool> {
    check_dim(f, metric)?;
    let n = metric.n();
    Ok(feasible(f, metric)
        && (0..n).all(|i| (0..n).any(|j| f[i] + f[j] == metric.dr(i, j))))
}

pub fn is_extremal(f: &VertexFunction, metric: &FiniteMetric) -> Result<bool> {
    let f: Vec<Rational> = f.values.iter().map(|&v| integer(v)).collect();
    is_extremal_rational(&f, metric)
}

/// Point pairs `(i,j)` with `i ≤ j` that are tight at `f`.
fn tight_pairs(f: &[Rational], metric: &FiniteMetric) -> Vec<(usize, usize)> {
    let n = metric.n();
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| f[i] + f[j] == metric.dr(i, j))
        .collect()
}

/// Vertices of `E(metric)`, sorted.
///
/// A vertex with a zero coordinate `f_x = 0` is forced to be the distance
/// row `d(x,·)`; these are added directly. Every other vertex is the unique
/// solution of `n` tight equations `f_i + f_j = d(i,j)` over distinct
/// points, found by a depth-first search that only extends independent sets.
pub fn tight_span_vertices(metric: &FiniteMetric, cap: usize) -> Result<Vec<Vec<Rational>>> {
    let n = metric.n();
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();

    fn search(
        pairs: &[(usize, usize)],
        from: usize,
        ech: &mut Echelon,
        metric: &FiniteMetric,
        out: &mut BTreeSet<Vec<Rational>>,
    ) {
        let n = metric.n();
        if ech.rank() == n {
            let f = ech.solution().expect("full rank");
            if is_extremal_rational(&f, metric).unwrap_or(false) {
                out.insert(f);
            }
            return;
        }
        for idx in from..pairs.len() {
            if pairs.len() - idx < n - ech.rank() {
                break;
            }
            let (i, j) = pairs[idx];
            if ech.push(pair_row(n, i, j), metric.dr(i, j)) {
                search(pairs, idx + 1, ech, metric, out);
                ech.pop();
            }
        }
    }

    let found: Vec<BTreeSet<Vec<Rational>>> = (0..pairs.len())
        .into_par_iter()
        .map(|first| {
            let mut out = BTreeSet::new();
            let mut ech = Echelon::new(n);
            let (i, j) = pairs[first];
            ech.push(pair_row(n, i, j), metric.dr(i, j));
            search(&pairs, first + 1, &mut ech, metric, &mut out);
            out
        })
        .collect();
    let mut all: BTreeSet<Vec<Rational>> = found.into_iter().flatten().collect();
    for x in 0..n {
        all.insert((0..n).map(|j| metric.dr(x, j)).collect());
    }
    Ok(all.into_iter().collect())
}

/// Index pairs `(a,b)`, `a < b`, of vertices joined by an edge of `E`: the
/// midpoint is extremal and its tight equations have rank `n-1`.
pub fn tight_span_edges(vertices: &[Vec<Rational>], metric: &FiniteMetric) -> Vec<(usize, usize)> {
    let n = metric.n();
    let two = integer(2);
    let candidates: Vec<(usize, usize)> = (0..vertices.len())
        .flat_map(|a| (a + 1..vertices.len()).map(move |b| (a, b)))
        .collect();
    let mut edges: Vec<(usize, usize)> = candidates
        .into_par_iter()
        .filter(|&(a, b)| {
            let mid: Vec<Rational> = vertices[a]
                .iter()
                .zip(&vertices[b])
                .map(|(x, y)| (x + y) / two)
                .collect();
            if !is_extremal_rational(&mid, metric).unwrap_or(false) {
                return false;
            }
            let rows: Vec<Vec<Rational>> = tight_pairs(&mid, metric)
                .into_iter()
                .map(|(i, j)| pair_row(n, i, j))
                .collect();
            rank(&rows) + 1 == n
        })
        .collect();
    edges.sort_unstable();
    edges
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub oracle_vertices: usize,
    pub oracle_edges: usize,
    pub hull_vertices: usize,
    pub hull_edges: usize,
    pub vertices_match: bool,
    pub edges_match: bool,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.vertices_match && self.edges_match
    }
}

type CoordEdge = (Vec<Rational>, Vec<Rational>);

fn edge_set(vertices: &[Vec<Rational>], edges: &[(usize, usize)]) -> BTreeSet<CoordEdge> {
    edges
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (vertices[a].clone(), vertices[b].clone());
            if u <= v {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect()
}

/// Compares the oracle's vertices and edges with a constructed complex as
/// exact coordinate sets.
pub fn compare(metric: &FiniteMetric, hull: &HullComplex, cap: usize) -> Result<Comparison> {
    let vertices = tight_span_vertices(metric, cap)?;
    let edges = tight_span_edges(&vertices, metric);
    let graph = hull.skeleton();
    let hull_coords: Vec<Vec<Rational>> = graph
        .nodes
        .iter()
        .map(|node| node.values.values.iter().map(|&v| integer(v)).collect())
        .collect();
    let oracle_set: BTreeSet<&Vec<Rational>> = vertices.iter().collect();
    let hull_set: BTreeSet<&Vec<Rational>> = hull_coords.iter().collect();
    Ok(Comparison {
        oracle_vertices: vertices.len(),
        oracle_edges: edges.len(),
        hull_vertices: hull_coords.len(),
        hull_edges: graph.edges.len(),
        vertices_match: oracle_set == hull_set,
        edges_match: edge_set(&vertices, &edges) == edge_set(&hull_coords, &graph.edges),
    })
}

/// Converts oracle vertices to integer functions, if they all are integral.
pub fn integral(vertices: &[Vec<Rational>]) -> Option<Vec<VertexFunction>> {
    vertices
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| x.is_integer().then(|| *x.numer() as i64))
                .collect::<Option<Vec<i64>>>()
                .map(VertexFunction::new)
        })
        .collect()
}
