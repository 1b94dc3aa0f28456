//! Exact local antimagic chromatic number by exhaustive enumeration.
//!
//! Labelings are visited in lexicographic order of the label vector. The
//! search is split by the label of the first edge, each branch runs on its
//! own rayon task, and branches are merged in label order, so the answer
//! and witness do not depend on the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::labeling::weights_of;
use crate::graph::{chromatic_number, EdgeLabeling, PartiteGraph};

pub const DEFAULT_MAX_EDGES: usize = 9;
pub const HARD_MAX_EDGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Refuse graphs with more edges than this (at most [`HARD_MAX_EDGES`]).
    pub max_edges: usize,
    /// Stop after this many labelings; the result is then only an upper
    /// bound and `budget_hit` is set.
    pub max_labelings: Option<u64>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_edges: DEFAULT_MAX_EDGES,
            max_labelings: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` when no labeling is local antimagic (e.g. `K_2`).
    pub chi_la: Option<usize>,
    /// Lexicographically first labeling achieving `chi_la`.
    pub witness: Option<EdgeLabeling>,
    pub explored: u64,
    pub budget_hit: bool,
}

fn check_budget(g: &PartiteGraph, max_edges: usize) -> Result<()> {
    if max_edges > HARD_MAX_EDGES {
        return Err(Error::invalid(format!(
            "max_edges {max_edges} exceeds the hard cap of {HARD_MAX_EDGES}"
        )));
    }
    if g.edge_count() > max_edges {
        return Err(Error::BudgetExceeded {
            edges: g.edge_count(),
            budget: max_edges,
        });
    }
    Ok(())
}

/// Rearranges `v` into the next permutation in lexicographic order.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Class count of a proper labeling, `None` if improper.
fn classes(g: &PartiteGraph, labels: &[u32], scratch: &mut Vec<u64>) -> Option<usize> {
    let w = weights_of(g, labels);
    if g.edges.iter().any(|&(a, b)| w[a] == w[b]) {
        return None;
    }
    scratch.clear();
    scratch.extend(w);
    scratch.sort_unstable();
    scratch.dedup();
    Some(scratch.len())
}

struct Branch {
    best: Option<(usize, Vec<u32>)>,
    explored: u64,
    budget_hit: bool,
}

/// Visits every labeling whose first edge carries `first`, in lex order.
/// `stop_at` ends the branch at the first labeling with at most that many
/// classes.
fn run_branch(g: &PartiteGraph, first: u32, cap: Option<u64>, stop_at: Option<usize>) -> Branch {
    let e = g.edge_count() as u32;
    let mut labels = vec![first];
    labels.extend((1..=e).filter(|&l| l != first));
    let mut out = Branch {
        best: None,
        explored: 0,
        budget_hit: false,
    };
    let mut scratch = Vec::new();
    loop {
        if cap.is_some_and(|c| out.explored >= c) {
            out.budget_hit = true;
            break;
        }
        out.explored += 1;
        if let Some(k) = classes(g, &labels, &mut scratch) {
            if out.best.as_ref().is_none_or(|(b, _)| k < *b) {
                out.best = Some((k, labels.clone()));
            }
            if stop_at.is_some_and(|s| k <= s) {
                break;
            }
        }
        if !next_permutation(&mut labels[1..]) {
            break;
        }
    }
    out
}

fn search(
    g: &PartiteGraph,
    opts: &OracleOptions,
    stop_at: Option<usize>,
) -> Result<(Vec<Branch>, u64)> {
    check_budget(g, opts.max_edges)?;
    let e = g.edge_count() as u64;
    let cap = opts.max_labelings.map(|c| c.div_ceil(e.max(1)));
    let branches: Vec<Branch> = (1..=e as u32)
        .into_par_iter()
        .map(|first| run_branch(g, first, cap, stop_at))
        .collect();
    let explored = branches.iter().map(|b| b.explored).sum();
    Ok((branches, explored))
}

/// Minimum number of weight classes over all local antimagic labelings.
pub fn exact_chi_la(g: &PartiteGraph, max_edges: usize) -> Result<OracleResult> {
    exact_chi_la_with(
        g,
        &OracleOptions {
            max_edges,
            ..OracleOptions::default()
        },
    )
}

pub fn exact_chi_la_with(g: &PartiteGraph, opts: &OracleOptions) -> Result<OracleResult> {
    // nothing beats chi(G), so a branch may stop once it reaches it
    let floor = chromatic_number(g);
    let (branches, explored) = search(g, opts, Some(floor))?;
    let budget_hit = branches.iter().any(|b| b.budget_hit);
    // branches are in first-label order; the strict `<` keeps the earliest
    let mut best: Option<(usize, Vec<u32>)> = None;
    for b in branches {
        if let Some((k, l)) = b.best {
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, l));
            }
        }
    }
    let (chi_la, witness) = match best {
        Some((k, l)) => (Some(k), Some(EdgeLabeling::new(g.clone(), l)?)),
        None => (None, None),
    };
    Ok(OracleResult {
        chi_la,
        witness,
        explored,
        budget_hit,
    })
}

/// The lexicographically first local antimagic labeling with at most `k`
/// classes, if any.
pub fn exists_k_class_labeling(
    g: &PartiteGraph,
    k: usize,
    max_edges: usize,
) -> Result<Option<EdgeLabeling>> {
    check_budget(g, max_edges)?;
    let found = (1..=g.edge_count() as u32)
        .into_par_iter()
        .map(|first| run_branch(g, first, None, Some(k)))
        .find_map_first(|b| b.best.filter(|(c, _)| *c <= k).map(|(_, l)| l));
    found.map(|l| EdgeLabeling::new(g.clone(), l)).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, vertex_weights, GraphFamily};

    #[test]
    fn permutation_order() {
        let mut v = vec![1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![1, 3, 2]);
        assert_eq!(seen[5], vec![3, 2, 1]);
    }

    #[test]
    fn path_of_three() {
        let r = exact_chi_la(&PartiteGraph::path(3).unwrap(), 9).unwrap();
        assert_eq!(r.chi_la, Some(3));
        assert_eq!(r.explored, 2);
        assert_eq!(r.witness.unwrap().labels, vec![1, 2]);
    }

    #[test]
    fn single_edge_has_none() {
        let g = PartiteGraph::path(2).unwrap();
        let r = exact_chi_la(&g, 9).unwrap();
        assert_eq!(r.chi_la, None);
        assert!(exists_k_class_labeling(&g, 5, 9).unwrap().is_none());
    }

    #[test]
    fn four_cycle() {
        let g = make_graph(GraphFamily::Rkmn { m: 2, n: 2, r: 1 }).unwrap();
        let r = exact_chi_la(&g, 9).unwrap();
        assert_eq!(r.chi_la, Some(3));
        let w = vertex_weights(r.witness.as_ref().unwrap());
        assert!(w.proper && w.color_count() == 3);
    }

    #[test]
    fn budgets() {
        let g = make_graph(GraphFamily::Rkmn { m: 2, n: 5, r: 1 }).unwrap();
        assert!(matches!(
            exact_chi_la(&g, 9),
            Err(Error::BudgetExceeded {
                edges: 10,
                budget: 9
            })
        ));
        assert!(exact_chi_la(&g, 11).is_err());
        let r = exact_chi_la_with(
            &g,
            &OracleOptions {
                max_edges: 10,
                max_labelings: Some(100),
            },
        )
        .unwrap();
        assert!(r.budget_hit);
        assert_eq!(r.explored, 100);
    }

    #[test]
    fn decision_form() {
        let g = make_graph(GraphFamily::Rkmn { m: 2, n: 3, r: 1 }).unwrap();
        assert!(exists_k_class_labeling(&g, 2, 9).unwrap().is_none());
        let l = exists_k_class_labeling(&g, 3, 9).unwrap().unwrap();
        assert_eq!(vertex_weights(&l).color_count(), 3);
    }
}
