use crate::builders::{
    build_b_even_square, build_b_mixed_parity, build_b_odd_square, build_b_same_parity,
    build_mrs_family, build_nmr_single, build_zt_family_bipartite, build_zt_family_glued,
    build_zt_family_square, BlankedMatrix, BuildRecipe, MatrixFamily, RecipeTag,
};
use crate::error::{Error, Result};
use crate::graph::{
    check_local_antimagic, chi_la_bounds, labeling_from_b_matrix, labeling_from_matrix_family,
    make_graph, EdgeLabeling, GraphFamily,
};

/// The matrix object a labeling was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Family(MatrixFamily),
    Blanked(BlankedMatrix),
}

impl Source {
    pub fn recipe(&self) -> &BuildRecipe {
        match self {
            Source::Family(f) => &f.recipe,
            Source::Blanked(b) => &b.recipe,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub source: Source,
    pub labeling: EdgeLabeling,
}

fn square(tag: RecipeTag, m: usize, n: usize) -> Result<usize> {
    if m == n {
        Ok(m)
    } else {
        Err(Error::invalid(format!(
            "{tag} needs m = n, got {m} and {n}"
        )))
    }
}

fn build_source(family: GraphFamily, tag: RecipeTag) -> Result<Source> {
    use RecipeTag::*;
    match (family, tag) {
        (GraphFamily::Rkmn { m, n, r }, Mrs) => build_mrs_family(m, n, r).map(Source::Family),
        (GraphFamily::Rkmn { m, n, r }, ZtBipartite) => {
            build_zt_family_bipartite(m, n, r).map(Source::Family)
        }
        (GraphFamily::Rkmn { m, n, r }, GluedMrs) => {
            build_zt_family_glued(square(tag, m, n)?, r).map(Source::Family)
        }
        (GraphFamily::Rkmn { m, n, r }, ZtSquareKotzig | ZtSquareQuasi) => {
            let want_odd = tag == ZtSquareKotzig;
            if (r % 2 == 1) != want_odd {
                return Err(Error::invalid(format!("{tag} does not apply to r = {r}")));
            }
            build_zt_family_square(square(tag, m, n)?, r).map(Source::Family)
        }
        (GraphFamily::Rkmn { m, n, r: 1 }, NmrSingle) => build_nmr_single(m, n).map(Source::Family),
        (GraphFamily::K1mn { m, n }, BSameParity) => build_b_same_parity(m, n).map(Source::Blanked),
        (GraphFamily::K1mn { m, n }, BMixedParity) => {
            build_b_mixed_parity(m, n).map(Source::Blanked)
        }
        (GraphFamily::K1mn { m, n }, BOddSquare) => {
            build_b_odd_square(square(tag, m, n)?).map(Source::Blanked)
        }
        (GraphFamily::K1mn { m, n }, BEvenSquare) => {
            build_b_even_square(square(tag, m, n)?).map(Source::Blanked)
        }
        _ => Err(Error::invalid(format!("{tag} does not label {family}"))),
    }
}

/// Builds a labeling of `family` with the recipe from the bound table, or
/// with `forced` when given.
///
/// `OutOfScope` when no recipe covers the parameters. The result is always
/// checked to be local antimagic.
pub fn construct_labeling(family: GraphFamily, forced: Option<RecipeTag>) -> Result<Constructed> {
    let tag = match forced.or_else(|| chi_la_bounds(family).recipe()) {
        Some(t) => t,
        None => return Err(Error::OutOfScope(family.to_string())),
    };
    let g = make_graph(family)?;
    let source = build_source(family, tag)?;
    let labeling = match &source {
        Source::Family(f) => labeling_from_matrix_family(&g, f)?,
        Source::Blanked(b) => labeling_from_b_matrix(&g, b)?,
    };
    let bad = check_local_antimagic(&labeling);
    if !bad.is_empty() {
        return Err(Error::Construction(format!(
            "{tag} gave {} improper edges on {family}",
            bad.len()
        )));
    }
    Ok(Constructed { source, labeling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_weights;

    #[test]
    fn dispatches_by_table() {
        let c = construct_labeling(GraphFamily::Rkmn { m: 7, n: 11, r: 4 }, None).unwrap();
        assert_eq!(c.source.recipe().tag, RecipeTag::ZtBipartite);
        assert_eq!(
            vertex_weights(&c.labeling).classes,
            vec![1081, 1082, 1699, 1700]
        );

        let c = construct_labeling(GraphFamily::K1mn { m: 3, n: 3 }, None).unwrap();
        assert_eq!(vertex_weights(&c.labeling).color_count(), 3);
    }

    #[test]
    fn out_of_scope() {
        for f in [
            GraphFamily::Rkmn { m: 2, n: 3, r: 2 },
            GraphFamily::Rkmn { m: 2, n: 2, r: 1 },
            GraphFamily::K1mn { m: 1, n: 4 },
        ] {
            assert!(matches!(
                construct_labeling(f, None),
                Err(Error::OutOfScope(_))
            ));
        }
    }

    #[test]
    fn forced_recipe_must_fit() {
        let f = GraphFamily::Rkmn { m: 3, n: 5, r: 2 };
        assert!(construct_labeling(f, Some(RecipeTag::BOddSquare)).is_err());
        assert!(construct_labeling(f, Some(RecipeTag::Mrs)).is_err());
        let f = GraphFamily::Rkmn { m: 3, n: 3, r: 2 };
        assert!(construct_labeling(f, Some(RecipeTag::ZtSquareKotzig)).is_err());
    }
}
