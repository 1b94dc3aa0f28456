use std::collections::BTreeMap;

use crate::builders::{BlankedMatrix, MatrixFamily};
use crate::error::{Error, Result};
use crate::graph::{GraphFamily, PartiteGraph};
use crate::matrix::{distinct, IntMatrix};

/// A bijection from the edges of a graph onto `1..=|E|`, stored in edge
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub graph: PartiteGraph,
    pub labels: Vec<u32>,
}

impl EdgeLabeling {
    pub fn new(graph: PartiteGraph, labels: Vec<u32>) -> Result<Self> {
        let e = graph.edge_count();
        if labels.len() != e {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {e} edges",
                labels.len()
            )));
        }
        let mut seen = vec![false; e + 1];
        for &l in &labels {
            let k = l as usize;
            if k == 0 || k > e || std::mem::replace(&mut seen[k], true) {
                return Err(Error::invalid(format!(
                    "labels are not a bijection onto 1..={e} (offending label {l})"
                )));
            }
        }
        Ok(EdgeLabeling { graph, labels })
    }
}

/// Vertex weights in vertex order, their distinct values, and whether
/// adjacent vertices always differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightColoring {
    pub weights: Vec<u64>,
    pub classes: Vec<u64>,
    pub proper: bool,
}

impl WeightColoring {
    pub fn color_count(&self) -> usize {
        self.classes.len()
    }

    pub fn by_name(&self, g: &PartiteGraph) -> BTreeMap<String, u64> {
        g.vertices
            .iter()
            .zip(&self.weights)
            .map(|(v, &w)| (v.name.clone(), w))
            .collect()
    }
}

pub(crate) fn weights_of(g: &PartiteGraph, labels: &[u32]) -> Vec<u64> {
    let mut w = vec![0u64; g.vertex_count()];
    for (&(a, b), &l) in g.edges.iter().zip(labels) {
        w[a] += u64::from(l);
        w[b] += u64::from(l);
    }
    w
}

pub fn vertex_weights(l: &EdgeLabeling) -> WeightColoring {
    let weights = weights_of(&l.graph, &l.labels);
    let proper = l.graph.edges.iter().all(|&(a, b)| weights[a] != weights[b]);
    WeightColoring {
        classes: distinct(&weights),
        weights,
        proper,
    }
}

/// Edges whose endpoints have equal weight. Empty iff the labeling is
/// local antimagic.
pub fn check_local_antimagic(l: &EdgeLabeling) -> Vec<(usize, usize)> {
    let w = weights_of(&l.graph, &l.labels);
    l.graph
        .edges
        .iter()
        .copied()
        .filter(|&(a, b)| w[a] == w[b])
        .collect()
}

/// Copy `t` of the family labels copy `t` of `rK_{m,n}`: edge `v_i u_j`
/// gets entry `(i, j)`.
pub fn labeling_from_matrix_family(g: &PartiteGraph, fam: &MatrixFamily) -> Result<EdgeLabeling> {
    let GraphFamily::Rkmn { m, n, r } = g.family else {
        return Err(Error::invalid(format!("{} is not an rK_{{m,n}}", g.family)));
    };
    if m < 2 || n < 2 {
        return Err(Error::invalid("matrix labelings need m, n > 1"));
    }
    if fam.copies.len() != r || fam.rows() != m || fam.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "family of {} {}x{} matrices cannot label {}",
            fam.copies.len(),
            fam.rows(),
            fam.cols(),
            g.family
        )));
    }
    let labels = fam
        .copies
        .iter()
        .flat_map(|z| z.entries().iter().copied())
        .collect();
    EdgeLabeling::new(g.clone(), labels)
}

/// `x v_i` gets `b[i+1][1]`, `x u_j` gets `b[1][j+1]`, and `v_i u_j` gets
/// `b[i+1][j+1]` (1-based).
pub fn labeling_from_b_matrix(g: &PartiteGraph, b: &BlankedMatrix) -> Result<EdgeLabeling> {
    labeling_from_blanked(g, &b.matrix)
}

pub(crate) fn labeling_from_blanked(g: &PartiteGraph, mat: &IntMatrix) -> Result<EdgeLabeling> {
    let GraphFamily::K1mn { m, n } = g.family else {
        return Err(Error::invalid(format!("{} is not a K_{{1,m,n}}", g.family)));
    };
    if mat.rows() != m + 1 || mat.cols() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix cannot label {}",
            mat.rows(),
            mat.cols(),
            g.family
        )));
    }
    if mat.blank() != Some((0, 0)) {
        return Err(Error::ShapeMismatch(
            "B matrix must be blank at (1,1)".into(),
        ));
    }
    let mut labels: Vec<u32> = (1..=m).map(|i| mat.get(i, 0)).collect();
    labels.extend((1..=n).map(|j| mat.get(0, j)));
    for i in 1..=m {
        labels.extend(&mat.row(i)[1..]);
    }
    EdgeLabeling::new(g.clone(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_b_odd_square, build_b_same_parity, build_nmr_single};
    use crate::graph::make_graph;

    #[test]
    fn path_of_three() {
        let g = PartiteGraph::path(3).unwrap();
        let l = EdgeLabeling::new(g, vec![1, 2]).unwrap();
        let w = vertex_weights(&l);
        assert_eq!(w.weights, vec![1, 3, 2]);
        assert!(w.proper);
        assert_eq!(w.color_count(), 3);
    }

    #[test]
    fn single_edge_violates() {
        let g = PartiteGraph::path(2).unwrap();
        let l = EdgeLabeling::new(g, vec![1]).unwrap();
        assert_eq!(check_local_antimagic(&l), vec![(0, 1)]);
    }

    #[test]
    fn rejects_non_bijection() {
        let g = PartiteGraph::path(3).unwrap();
        assert!(EdgeLabeling::new(g.clone(), vec![1, 1]).is_err());
        assert!(EdgeLabeling::new(g.clone(), vec![1, 3]).is_err());
        assert!(EdgeLabeling::new(g, vec![1]).is_err());
    }

    #[test]
    fn nmr_labels_k43() {
        let g = make_graph(GraphFamily::Rkmn { m: 4, n: 3, r: 1 }).unwrap();
        let l = labeling_from_matrix_family(&g, &build_nmr_single(4, 3).unwrap()).unwrap();
        let w = vertex_weights(&l);
        assert_eq!(&w.weights[..4], &[20, 20, 19, 19]);
        assert_eq!(&w.weights[4..], &[26, 26, 26]);
        assert!(check_local_antimagic(&l).is_empty());
        assert_eq!(w.classes, vec![19, 20, 26]);
    }

    #[test]
    fn b_matrix_weights() {
        let g = make_graph(GraphFamily::K1mn { m: 3, n: 3 }).unwrap();
        let l = labeling_from_b_matrix(&g, &build_b_odd_square(3).unwrap()).unwrap();
        let w = vertex_weights(&l).by_name(&g);
        assert_eq!(w["x"], 36);
        assert!((1..=3).all(|i| w[&format!("v{i}")] == 30 && w[&format!("u{i}")] == 38));

        let g = make_graph(GraphFamily::K1mn { m: 2, n: 4 }).unwrap();
        let l = labeling_from_b_matrix(&g, &build_b_same_parity(2, 4).unwrap()).unwrap();
        let w = vertex_weights(&l);
        assert_eq!(w.classes, vec![21, 35, 56]);
        assert!(w.proper);
    }

    #[test]
    fn b_matrix_needs_blank() {
        let g = make_graph(GraphFamily::K1mn { m: 3, n: 3 }).unwrap();
        let mut b = build_b_odd_square(3).unwrap();
        b.matrix.set_blank(None).unwrap();
        assert!(labeling_from_b_matrix(&g, &b).is_err());
        let g = make_graph(GraphFamily::K1mn { m: 2, n: 3 }).unwrap();
        assert!(labeling_from_b_matrix(&g, &build_b_odd_square(3).unwrap()).is_err());
    }
}
