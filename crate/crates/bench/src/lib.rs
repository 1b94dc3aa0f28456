//! Inputs shared by the benchmarks.

use antimagic_core::graph::{make_graph, GraphFamily, PartiteGraph};

/// Families labelled by the construction benchmarks, one per recipe.
pub const LABEL_CASES: &[GraphFamily] = &[
    GraphFamily::Rkmn { m: 4, n: 6, r: 3 },
    GraphFamily::Rkmn { m: 7, n: 11, r: 4 },
    GraphFamily::Rkmn { m: 8, n: 8, r: 3 },
    GraphFamily::Rkmn { m: 7, n: 7, r: 3 },
    GraphFamily::Rkmn { m: 7, n: 7, r: 4 },
    GraphFamily::Rkmn { m: 6, n: 9, r: 1 },
    GraphFamily::K1mn { m: 4, n: 8 },
    GraphFamily::K1mn { m: 5, n: 8 },
    GraphFamily::K1mn { m: 9, n: 9 },
    GraphFamily::K1mn { m: 8, n: 8 },
];

/// Graphs small enough for exhaustive search, with a label for reports.
pub fn oracle_cases() -> Vec<(&'static str, PartiteGraph)> {
    let g = |f| make_graph(f).expect("benchmark families are valid");
    vec![
        ("K_{2,3}", g(GraphFamily::Rkmn { m: 2, n: 3, r: 1 })),
        ("K_{2,4}", g(GraphFamily::Rkmn { m: 2, n: 4, r: 1 })),
        ("K_{1,2,2}", g(GraphFamily::K1mn { m: 2, n: 2 })),
        ("2K_{2,2}", g(GraphFamily::Rkmn { m: 2, n: 2, r: 2 })),
    ]
}
