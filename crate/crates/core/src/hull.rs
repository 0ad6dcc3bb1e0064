//! The cube complexes `E(X_N)` and `E(C_N)`.
//!
//! A face is stored as its top vertex `λ` and a set `V` of corner rows; its
//! vertices are the partitions between `λ_V` (one box removed from each row
//! in `V`) and `λ`. For `E(X_N)` the rows are inner corners, for `E(C_N)`
//! they are ◦-inner corners.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{integer, pair_row, Echelon, Rational};
use crate::moebius::{self, circ_inner_corners, enumerate_circ, fold, in_circ};
use crate::partitions::{
    corners, enumerate_yn, orbit_sizes, staircase, tau_unchecked, ModelSpace, Partition,
    SpaceKind,
};

/// A real-valued function on the points of a model space, indexed `0..N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexFunction {
    pub values: Vec<i64>,
}

impl VertexFunction {
    pub fn new(values: Vec<i64>) -> Self {
        VertexFunction { values }
    }

    /// `max_i |f_i - g_i|`.
    pub fn sup_distance(&self, other: &VertexFunction) -> i64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }
}

/// `f_λ(R_j) = |τ^j(λ)|`.
pub fn f_vertex(lambda: &Partition, n: usize) -> Result<VertexFunction> {
    let sizes = orbit_sizes(lambda, n)?;
    Ok(VertexFunction::new(sizes.into_iter().map(|s| s as i64).collect()))
}

/// The constant `½k(k-1)` separating `f_λ` from `g_λ`.
pub fn cycle_offset(n: usize) -> i64 {
    let k = (n / 2) as i64;
    k * (k - 1) / 2
}

/// `g_λ(α_j) = |τ^j(λ)| - ½k(k-1)` for `λ ∈ 𝕐_N°`. The same offset works
/// for even `N`.
pub fn g_vertex(lambda: &Partition, n: usize) -> Result<VertexFunction> {
    moebius::check_circ(lambda, n)?;
    let o = cycle_offset(n);
    let f = f_vertex(lambda, n)?;
    Ok(VertexFunction::new(f.values.into_iter().map(|v| v - o).collect()))
}

/// Solves `u(i) + u(j) = d(i,j)` over the `N` rim sites of `λ`, with `d` the
/// metric of `space`.
pub fn rim_system(lambda: &Partition, space: ModelSpace) -> Result<Vec<Rational>> {
    let n = space.n;
    let rim = moebius::outer_rim(lambda, n)?;
    let mut ech = Echelon::new(n);
    for s in &rim.sites {
        let d = space.distance(s.i, s.j)?;
        ech.push(pair_row(n, s.i, s.j), integer(d as i64));
    }
    ech.solution().ok_or_else(|| Error::SingularSystem {
        partition: lambda.clone(),
        n,
    })
}

/// A cube face: top vertex and the set of removed corner rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub top: Partition,
    pub removed: Vec<usize>,
}

impl Face {
    pub fn new(top: Partition, mut removed: Vec<usize>) -> Self {
        removed.sort_unstable();
        removed.dedup();
        Face { top, removed }
    }

    pub fn dim(&self) -> usize {
        self.removed.len()
    }

    /// `λ_V`: one box removed from each row of `V`.
    pub fn bottom(&self) -> Partition {
        let mut parts = self.top.parts().to_vec();
        for &r in &self.removed {
            parts[r - 1] -= 1;
        }
        Partition::from_padded(parts)
    }

    /// The `2^|V|` partitions of the interval `[λ_V, λ]`.
    pub fn vertices(&self) -> Vec<Partition> {
        let v = self.removed.len();
        let mut out: Vec<Partition> = (0u32..1 << v)
            .map(|mask| {
                let mut parts = self.top.parts().to_vec();
                for (b, &r) in self.removed.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        parts[r - 1] -= 1;
                    }
                }
                Partition::from_padded(parts)
            })
            .collect();
        out.sort();
        out
    }
}

fn subsets(rows: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u32..1 << rows.len()).map(move |mask| {
        rows.iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &r)| r)
            .collect()
    })
}

/// Vertex functions and cube faces of `E(X_N)` or `E(C_N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullComplex {
    pub space: ModelSpace,
    pub vertices: BTreeMap<Partition, VertexFunction>,
    /// `faces[v]` lists the `v`-dimensional faces.
    pub faces: Vec<Vec<Face>>,
}

/// The corner rows spanning faces at `λ` in the given space.
fn face_rows(lambda: &Partition, space: ModelSpace) -> Result<Vec<usize>> {
    match space.kind {
        SpaceKind::Xn => Ok(corners(lambda, space.n)?.inner),
        SpaceKind::Cycle => circ_inner_corners(lambda, space.n),
    }
}

pub fn build_hull(kind: SpaceKind, n: usize) -> Result<HullComplex> {
    let space = ModelSpace::new(kind, n)?;
    let points = match kind {
        SpaceKind::Xn => enumerate_yn(n),
        SpaceKind::Cycle => enumerate_circ(n),
    };
    let per_vertex: Vec<(Partition, VertexFunction, Vec<Face>)> = points
        .into_par_iter()
        .map(|lam| {
            let f = match kind {
                SpaceKind::Xn => f_vertex(&lam, n)?,
                SpaceKind::Cycle => g_vertex(&lam, n)?,
            };
            let rows = face_rows(&lam, space)?;
            let faces = subsets(&rows).map(|v| Face::new(lam.clone(), v)).collect();
            Ok((lam, f, faces))
        })
        .collect::<Result<_>>()?;
    let mut vertices = BTreeMap::new();
    let mut faces: Vec<Vec<Face>> = Vec::new();
    for (lam, f, fs) in per_vertex {
        vertices.insert(lam, f);
        for face in fs {
            let d = face.dim();
            if faces.len() <= d {
                faces.resize(d + 1, Vec::new());
            }
            faces[d].push(face);
        }
    }
    for group in &mut faces {
        group.sort();
    }
    Ok(HullComplex {
        space,
        vertices,
        faces,
    })
}

impl HullComplex {
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces.iter().map(|g| g.len() as u64).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(v, g)| if v % 2 == 0 { g.len() as i64 } else { -(g.len() as i64) })
            .sum()
    }

    /// The 1-skeleton. Odd cycles get cube/extra roles on their nodes.
    pub fn skeleton(&self) -> Graph {
        let roles = if self.space.kind == SpaceKind::Cycle && self.space.n % 2 == 1 && self.space.n >= 3 {
            max_cube_decomposition(self.space.n).ok().map(|mc| mc.incident)
        } else {
            None
        };
        let mut nodes: Vec<Node> = self
            .vertices
            .iter()
            .map(|(p, f)| Node {
                partition: p.clone(),
                values: f.clone(),
                role: roles.as_ref().map(|inc| {
                    if inc.contains(p) {
                        NodeRole::Cube
                    } else {
                        NodeRole::Extra
                    }
                }),
            })
            .collect();
        nodes.sort_by_key(|node| node.partition.to_string());
        let index: BTreeMap<&Partition, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, node)| (&node.partition, i))
            .collect();
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .get(1)
            .into_iter()
            .flatten()
            .map(|face| {
                let a = index[&face.top];
                let b = index[&face.bottom()];
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph { nodes, edges }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: serde_json::Map<String, serde_json::Value> = self
            .vertices
            .iter()
            .map(|(p, f)| (p.to_string(), json!(f.values)))
            .collect();
        let faces: Vec<serde_json::Value> = self
            .faces
            .iter()
            .flatten()
            .map(|face| json!({"top": face.top.to_string(), "removed": face.removed}))
            .collect();
        json!({
            "space": self.space.kind.to_string(),
            "n": self.space.n,
            "vertices": vertices,
            "faces": faces,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRole {
    /// Lies in one of the `N` maximal cubes.
    Cube,
    Extra,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    pub partition: Partition,
    pub values: VertexFunction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub role: Option<NodeRole>,
}

/// Nodes sorted by partition string; edges as sorted index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub nodes: Vec<Node>,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let values: Vec<String> = node.values.values.iter().map(i64::to_string).collect();
            let _ = write!(
                out,
                "  v{i} [label=\"({})\", values=\"{}\"",
                node.partition,
                values.join(",")
            );
            if let Some(role) = node.role {
                let name = match role {
                    NodeRole::Cube => "cube",
                    NodeRole::Extra => "extra",
                };
                let _ = write!(out, ", role=\"{name}\"");
            }
            out.push_str("];\n");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[String; 2]> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                [
                    self.nodes[a].partition.to_string(),
                    self.nodes[b].partition.to_string(),
                ]
            })
            .collect();
        json!({"nodes": self.nodes, "edges": edges})
    }
}

/// The retraction `E(X_N) → E(X_N)°` on faces. The top vertex is folded,
/// and a direction `r ∈ V` survives iff `r` is a ◦-inner corner of `λ°` and
/// folding left the corner box of row `r` where it was (`λ°_r = λ_r`).
pub fn retract_face(face: &Face, n: usize) -> Result<Face> {
    let top = fold(&face.top, n)?;
    let circ = circ_inner_corners(&top, n)?;
    let removed = face
        .removed
        .iter()
        .copied()
        .filter(|r| circ.contains(r) && top.part(*r) == face.top.part(*r))
        .collect();
    Ok(Face::new(top, removed))
}

/// The `N` maximal cubes of `E(C_N)` and the vertices outside all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxCubes {
    pub cubes: Vec<Face>,
    pub incident: BTreeSet<Partition>,
    pub extras: Vec<Partition>,
}

/// Translates the `k`-cube `[α_0, (k, …, 1)]` around by `τ`.
pub fn max_cube_decomposition(n: usize) -> Result<MaxCubes> {
    if n.is_multiple_of(2) {
        return Err(Error::BadParity(n));
    }
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let k = n / 2;
    let base = Face::new(staircase(k), (1..=k).collect());
    let mut members = base.vertices();
    let mut cubes = Vec::with_capacity(n);
    let mut incident = BTreeSet::new();
    for _ in 0..n {
        let top = members
            .iter()
            .max_by_key(|p| p.size())
            .expect("cube has vertices")
            .clone();
        let bottom = members
            .iter()
            .min_by_key(|p| p.size())
            .expect("cube has vertices");
        let removed: Vec<usize> = (1..=top.len())
            .filter(|&r| top.part(r) != bottom.part(r))
            .collect();
        let cube = Face::new(top, removed);
        debug_assert_eq!(cube.vertices(), {
            let mut m = members.clone();
            m.sort();
            m
        });
        incident.extend(members.iter().cloned());
        cubes.push(cube);
        members = members.iter().map(|p| tau_unchecked(p, n)).collect();
    }
    let extras = enumerate_circ(n)
        .into_iter()
        .filter(|p| !incident.contains(p))
        .collect();
    Ok(MaxCubes {
        cubes,
        incident,
        extras,
    })
}

/// Whether `face` is a face of `E(C_N)` as built by [`build_hull`].
pub fn is_cycle_face(face: &Face, n: usize) -> bool {
    in_circ(&face.top, n)
        && circ_inner_corners(&face.top, n)
            .is_ok_and(|rows| face.removed.iter().all(|r| rows.contains(r)))
}
