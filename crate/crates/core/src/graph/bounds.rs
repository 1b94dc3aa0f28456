use serde::{Deserialize, Serialize};

use crate::builders::RecipeTag;
use crate::graph::GraphFamily;

/// Why a bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", content = "recipe", rename_all = "kebab-case")]
pub enum BoundReason {
    /// `chi_la(G) >= chi(G)`.
    ChromaticNumber,
    /// Exact value for `K_{1,n}`: `n + 1`.
    StarFormula,
    /// Exact value for `K_{m,n}`, `n > m >= 2`: 2 for equal parity, 3
    /// otherwise.
    CompleteBipartite,
    /// Two classes would force `r(rmn+1)mn/2` to split evenly over both
    /// sides, which fails for odd `m != n` and even `r`.
    WeightDivisibility,
    /// Two classes on `rK_{m,m}` would need an MRS with unequal row and
    /// column sums, which a square cannot have.
    SquareSymmetry,
    /// Realised by the named construction.
    Construction(RecipeTag),
    /// No bound known.
    Unknown,
}

/// `lower <= chi_la <= upper`; `upper == None` when nothing is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiBounds {
    pub lower: usize,
    pub upper: Option<usize>,
    pub lower_reason: BoundReason,
    pub upper_reason: BoundReason,
}

impl ChiBounds {
    fn exact(v: usize, lower: BoundReason, upper: BoundReason) -> Self {
        ChiBounds {
            lower: v,
            upper: Some(v),
            lower_reason: lower,
            upper_reason: upper,
        }
    }

    fn range(lo: usize, hi: usize, lower: BoundReason, upper: BoundReason) -> Self {
        ChiBounds {
            lower: lo,
            upper: Some(hi),
            lower_reason: lower,
            upper_reason: upper,
        }
    }

    fn open(lo: usize) -> Self {
        ChiBounds {
            lower: lo,
            upper: None,
            lower_reason: BoundReason::ChromaticNumber,
            upper_reason: BoundReason::Unknown,
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= self.lower && self.upper.is_none_or(|u| k <= u)
    }

    /// The recipe behind the upper bound, if it comes from a construction.
    pub fn recipe(&self) -> Option<RecipeTag> {
        match self.upper_reason {
            BoundReason::Construction(t) => Some(t),
            _ => None,
        }
    }
}

fn kmn(m: usize, n: usize) -> ChiBounds {
    use BoundReason::*;
    let (m, n) = (m.min(n), m.max(n));
    if m == 1 {
        return if n >= 2 {
            ChiBounds::exact(n + 1, StarFormula, StarFormula)
        } else {
            // K_2 has no local antimagic labeling at all
            ChiBounds::open(2)
        };
    }
    if m == n {
        return match m % 2 {
            1 => ChiBounds::exact(3, SquareSymmetry, Construction(RecipeTag::ZtSquareKotzig)),
            _ if m >= 4 => ChiBounds::exact(3, SquareSymmetry, Construction(RecipeTag::GluedMrs)),
            _ => ChiBounds::exact(3, CompleteBipartite, CompleteBipartite),
        };
    }
    if m % 2 == n % 2 {
        ChiBounds::exact(2, ChromaticNumber, Construction(RecipeTag::Mrs))
    } else {
        ChiBounds::exact(3, CompleteBipartite, Construction(RecipeTag::NmrSingle))
    }
}

fn rkmn(m: usize, n: usize, r: usize) -> ChiBounds {
    use BoundReason::*;
    if r == 1 {
        return kmn(m, n);
    }
    let (m, n) = (m.min(n), m.max(n));
    if m < 2 {
        return ChiBounds::open(2);
    }
    if m == n {
        if m % 2 == 0 {
            return if m >= 4 {
                ChiBounds::exact(3, SquareSymmetry, Construction(RecipeTag::GluedMrs))
            } else {
                ChiBounds::open(2)
            };
        }
        return if r % 2 == 1 {
            ChiBounds::exact(3, SquareSymmetry, Construction(RecipeTag::ZtSquareKotzig))
        } else {
            ChiBounds::range(3, 6, SquareSymmetry, Construction(RecipeTag::ZtSquareQuasi))
        };
    }
    let both_even = m % 2 == 0 && n % 2 == 0;
    let both_odd = m % 2 == 1 && n % 2 == 1;
    if both_even || (both_odd && r % 2 == 1) {
        ChiBounds::exact(2, ChromaticNumber, Construction(RecipeTag::Mrs))
    } else if both_odd {
        ChiBounds::exact(4, WeightDivisibility, Construction(RecipeTag::ZtBipartite))
    } else {
        ChiBounds::open(2)
    }
}

fn k1mn(m: usize, n: usize) -> ChiBounds {
    use BoundReason::*;
    let (m, n) = (m.min(n), m.max(n));
    if m < 2 {
        return ChiBounds::open(3);
    }
    let tag = match (m == n, m % 2, n % 2) {
        (true, 1, _) => RecipeTag::BOddSquare,
        (true, _, _) => RecipeTag::BEvenSquare,
        (false, a, b) if a == b => RecipeTag::BSameParity,
        _ => RecipeTag::BMixedParity,
    };
    let upper = match tag {
        RecipeTag::BOddSquare | RecipeTag::BSameParity => 3,
        _ => 4,
    };
    ChiBounds::range(3, upper, ChromaticNumber, Construction(tag))
}

/// Known bounds on the local antimagic chromatic number of a family.
///
/// Out-of-scope parameters get `lower = chi(G)` and no upper bound.
pub fn chi_la_bounds(family: GraphFamily) -> ChiBounds {
    match family {
        GraphFamily::Rkmn { m, n, r } => rkmn(m, n, r),
        GraphFamily::K1mn { m, n } => k1mn(m, n),
        GraphFamily::Custom => ChiBounds::open(1),
    }
}
