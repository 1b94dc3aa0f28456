//! Graphs, edge labelings, vertex weights and the bound table.

mod bounds;
mod chromatic;
mod dispatch;
pub(crate) mod labeling;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bounds::{chi_la_bounds, BoundReason, ChiBounds};
pub use chromatic::chromatic_number;
pub use dispatch::{construct_labeling, Constructed, Source};
pub use labeling::{
    check_local_antimagic, labeling_from_b_matrix, labeling_from_matrix_family, vertex_weights,
    EdgeLabeling, WeightColoring,
};

/// Graph families with a canonical vertex and edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GraphFamily {
    /// `r` disjoint copies of `K_{m,n}`; `r = 1` is `K_{m,n}` itself.
    Rkmn { m: usize, n: usize, r: usize },
    /// The complete tripartite graph `K_{1,m,n}`.
    K1mn { m: usize, n: usize },
    /// Anything else, given by an explicit edge list.
    Custom,
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Rkmn { m, n, r: 1 } => write!(f, "K_{{{m},{n}}}"),
            GraphFamily::Rkmn { m, n, r } => write!(f, "{r}K_{{{m},{n}}}"),
            GraphFamily::K1mn { m, n } => write!(f, "K_{{1,{m},{n}}}"),
            GraphFamily::Custom => f.write_str("custom graph"),
        }
    }
}

/// Which side of a partite graph a vertex sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    /// The single vertex `x` of `K_{1,m,n}`.
    Hub,
    /// `v_1 .. v_m`, labelled by matrix rows.
    V,
    /// `u_1 .. u_n`, labelled by matrix columns.
    U,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub part: Part,
    /// Copy index (0-based) in `rK_{m,n}`.
    pub copy: usize,
    /// Index within its part (0-based).
    pub index: usize,
}

/// Simple graph without isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartiteGraph {
    pub family: GraphFamily,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
}

impl PartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    fn validated(self) -> Result<Self> {
        let n = self.vertices.len();
        let mut seen = HashSet::new();
        let mut degree = vec![0usize; n];
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "edge ({a},{b}) names a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("self-loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid(format!("parallel edge between {a} and {b}")));
            }
            degree[a] += 1;
            degree[b] += 1;
        }
        if let Some(k) = degree.iter().position(|&d| d == 0) {
            return Err(Error::invalid(format!(
                "vertex {} is isolated",
                self.vertices[k].name
            )));
        }
        Ok(self)
    }

    /// A graph on vertices named `n1, n2, ..` with the given 0-based edges.
    pub fn custom(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid("graph needs at least one vertex"));
        }
        PartiteGraph {
            family: GraphFamily::Custom,
            vertices: (0..vertex_count)
                .map(|k| Vertex {
                    name: format!("n{}", k + 1),
                    part: Part::Free,
                    copy: 0,
                    index: k,
                })
                .collect(),
            edges,
        }
        .validated()
    }

    /// The path with `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("a path needs at least 2 vertices"));
        }
        Self::custom(k, (1..k).map(|i| (i - 1, i)).collect())
    }
}

fn side(part: Part, copy: usize, index: usize, prefix: &str) -> Vertex {
    let letter = if part == Part::V { 'v' } else { 'u' };
    Vertex {
        name: format!("{prefix}{letter}{}", index + 1),
        part,
        copy,
        index,
    }
}

/// Instantiates a family.
///
/// `rK_{m,n}`: copies outermost, each listing `v_1..v_m` then `u_1..u_n`;
/// edges copy by copy, `v_i u_j` row-major. Vertices are named `v3`, or
/// `t2.v3` when `r > 1`.
///
/// `K_{1,m,n}`: `x`, then `v_1..v_m`, then `u_1..u_n`; edges `x v_i`, then
/// `x u_j`, then `v_i u_j` row-major.
pub fn make_graph(family: GraphFamily) -> Result<PartiteGraph> {
    match family {
        GraphFamily::Rkmn { m, n, r } => {
            if m == 0 || n == 0 || r == 0 {
                return Err(Error::invalid(format!(
                    "{family} needs positive parameters"
                )));
            }
            let mut vertices = Vec::with_capacity(r * (m + n));
            let mut edges = Vec::with_capacity(r * m * n);
            for t in 0..r {
                let prefix = if r > 1 {
                    format!("t{}.", t + 1)
                } else {
                    String::new()
                };
                let base = vertices.len();
                vertices.extend((0..m).map(|i| side(Part::V, t, i, &prefix)));
                vertices.extend((0..n).map(|j| side(Part::U, t, j, &prefix)));
                for i in 0..m {
                    for j in 0..n {
                        edges.push((base + i, base + m + j));
                    }
                }
            }
            PartiteGraph {
                family,
                vertices,
                edges,
            }
            .validated()
        }
        GraphFamily::K1mn { m, n } => {
            if m == 0 || n == 0 {
                return Err(Error::invalid(format!(
                    "{family} needs positive parameters"
                )));
            }
            let mut vertices = vec![Vertex {
                name: "x".into(),
                part: Part::Hub,
                copy: 0,
                index: 0,
            }];
            vertices.extend((0..m).map(|i| side(Part::V, 0, i, "")));
            vertices.extend((0..n).map(|j| side(Part::U, 0, j, "")));
            let mut edges: Vec<(usize, usize)> = (1..=m + n).map(|k| (0, k)).collect();
            for i in 0..m {
                for j in 0..n {
                    edges.push((1 + i, 1 + m + j));
                }
            }
            PartiteGraph {
                family,
                vertices,
                edges,
            }
            .validated()
        }
        GraphFamily::Custom => Err(Error::invalid(
            "custom graphs are built from an edge list, not from family parameters",
        )),
    }
}
