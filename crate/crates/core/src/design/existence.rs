//! Existence predicates for the standalone designs.
//!
//! These gate every constructor: a constructor asked for a design whose
//! predicate is false fails with `NonexistentDesign` quoting the condition
//! below.

use crate::error::{Error, Result};

pub const MR_CONDITION: &str =
    "a magic rectangle MR(a,b) exists iff a,b > 1, ab > 4 and a = b (mod 2)";
pub const NMR_CONDITION: &str =
    "a nearly magic rectangle NMR(a,b) exists iff a is even and b >= 3 is odd";
pub const KA_CONDITION: &str =
    "a Kotzig array KA(a,b) exists for every b when a is even, and iff b is odd when a is odd";
pub const MRS_CONDITION: &str =
    "a magic rectangle set MRS(a,b;c) with 1 < a <= b exists iff a,b,c are all odd, \
     or a,b are both even and (a,b) != (2,2)";

pub fn mr_exists(a: usize, b: usize) -> bool {
    a > 1 && b > 1 && a * b > 4 && a % 2 == b % 2
}

pub fn nmr_exists(a: usize, b: usize) -> bool {
    a >= 2 && a % 2 == 0 && b >= 3 && b % 2 == 1
}

/// `a < 2` is outside the domain of Kotzig arrays and is reported as an
/// error rather than `false`.
pub fn ka_exists(a: usize, b: usize) -> Result<bool> {
    if a < 2 {
        return Err(Error::invalid(format!(
            "Kotzig arrays need at least 2 rows, got {a}"
        )));
    }
    Ok(b >= 1 && (a % 2 == 0 || b % 2 == 1))
}

/// Arguments are canonicalised so that `a <= b`.
pub fn mrs_exists(a: usize, b: usize, c: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    if a <= 1 || c == 0 {
        return false;
    }
    let all_odd = a % 2 == 1 && b % 2 == 1 && c % 2 == 1;
    let both_even = a % 2 == 0 && b % 2 == 0 && (a, b) != (2, 2);
    all_odd || both_even
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn magic_rectangles() {
        assert!(mr_exists(7, 11));
        assert!(!mr_exists(2, 2));
        assert!(!mr_exists(4, 3));
        assert!(!mr_exists(1, 5));
        assert!(mr_exists(2, 4));
        assert!(mr_exists(3, 3));
    }

    #[test]
    fn nearly_magic_rectangles() {
        assert!(nmr_exists(2, 3));
        assert!(nmr_exists(4, 3));
        assert!(!nmr_exists(3, 4));
        assert!(nmr_exists(6, 5));
        assert!(!nmr_exists(2, 1));
    }

    #[test]
    fn kotzig_arrays() {
        assert!(ka_exists(2, 5).unwrap());
        assert!(!ka_exists(3, 4).unwrap());
        assert!(!ka_exists(7, 4).unwrap());
        assert!(ka_exists(4, 4).unwrap());
        assert!(ka_exists(1, 3).is_err());
    }

    #[test]
    fn rectangle_sets() {
        assert!(mrs_exists(3, 5, 7));
        assert!(!mrs_exists(2, 2, 3));
        assert!(mrs_exists(4, 6, 5));
        assert!(mrs_exists(6, 4, 2));
        assert!(!mrs_exists(3, 5, 2));
        assert!(!mrs_exists(3, 4, 3));
        assert!(!mrs_exists(1, 3, 3));
    }
}
