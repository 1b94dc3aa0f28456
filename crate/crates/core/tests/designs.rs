use proptest::prelude::*;

use antimagic_core::builders::{
    build_b_even_square, build_b_mixed_parity, build_b_odd_square, build_b_same_parity,
    build_mrs_family, build_nmr_single, build_zt_family_bipartite, build_zt_family_glued,
    build_zt_family_square, BlankedMatrix, MatrixFamily,
};
use antimagic_core::design::{
    ka_exists, kotzig_array, magic_rectangle, magic_rectangle_set, mr_exists, mrs_exists,
    nearly_magic_rectangle, quasi_kotzig_array, verify_array, ArrayKind,
};
use antimagic_core::IntMatrix;

/// All permutations of `1..=n`, in lexicographic order.
fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = (1..=n).collect();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
            return out;
        };
        let j = v.iter().rposition(|&x| x > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

fn is_range(ms: &[IntMatrix], n: usize) -> bool {
    let mut all: Vec<u32> = ms
        .iter()
        .flat_map(|m| m.live_entries().collect::<Vec<_>>())
        .collect();
    all.sort_unstable();
    all == (1..=n as u32).collect::<Vec<_>>()
}

fn rows_are_permutations(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| {
        let mut r = m.row(i).to_vec();
        r.sort_unstable();
        r == (1..=m.cols() as u32).collect::<Vec<_>>()
    })
}

#[test]
fn magic_rectangles_up_to_12() {
    for a in 1..=12usize {
        for b in 1..=12usize {
            if !mr_exists(a, b) {
                assert!(magic_rectangle(a, b).is_err(), "MR({a},{b})");
                continue;
            }
            let m = magic_rectangle(a, b).unwrap();
            assert!(
                verify_array(std::slice::from_ref(&m), ArrayKind::MagicRectangle).passed,
                "MR({a},{b})"
            );
            let (a, b) = (a as u64, b as u64);
            assert!(m.row_sums().iter().all(|&s| s == b * (a * b + 1) / 2));
            assert!(m.col_sums().iter().all(|&s| s == a * (a * b + 1) / 2));
        }
    }
}

#[test]
fn nearly_magic_rectangles() {
    for a in [2u64, 4, 6, 8] {
        for b in [3u64, 5, 7] {
            let m = nearly_magic_rectangle(a as usize, b as usize).unwrap();
            assert!(is_range(std::slice::from_ref(&m), (a * b) as usize));
            assert!(m.col_sums().iter().all(|&s| s == a * (1 + a * b) / 2));
            let lo = (b * (1 + a * b) - 1) / 2;
            let mut want = vec![lo; (a / 2) as usize];
            want.extend(vec![lo + 1; (a / 2) as usize]);
            assert_eq!(sorted(m.row_sums()), want, "NMR({a},{b})");
        }
    }
}

/// Every 2x3 arrangement of 1..6 with equal column sums and row sums one
/// apart has rows 10, 11 and columns 7.
#[test]
fn nmr_2_3_by_brute_force() {
    let mut found = Vec::new();
    for p in permutations(6) {
        let m = IntMatrix::new(2, 3, p).unwrap();
        let (rows, cols) = (sorted(m.row_sums()), m.col_sums());
        if cols.iter().all(|&c| c == cols[0]) && rows[1] - rows[0] <= 1 {
            assert_eq!(rows, vec![10, 11]);
            assert_eq!(cols, vec![7, 7, 7]);
            found.push(m);
        }
    }
    assert!(found.contains(&nearly_magic_rectangle(2, 3).unwrap()));
}

fn assert_family(f: &MatrixFamily) {
    let (m, n, r) = (f.rows(), f.cols(), f.copies.len());
    assert!(is_range(&f.copies, r * m * n), "{:?}", f.recipe);
    assert!(
        f.violations().is_empty(),
        "{:?}: {:?}",
        f.recipe,
        f.violations()
    );
    assert_eq!(f.observed_row_sums(), f.claimed_row_sums);
    assert_eq!(f.observed_col_sums(), f.claimed_col_sums);
    assert!(f.copies.iter().all(|c| c.blank().is_none()));
}

fn assert_blanked(b: &BlankedMatrix) {
    let (p, q) = (b.matrix.rows(), b.matrix.cols());
    assert_eq!(b.matrix.blank(), Some((0, 0)));
    assert!(
        is_range(std::slice::from_ref(&b.matrix), p * q - 1),
        "{:?}",
        b.recipe
    );
    assert_eq!(b.observed_row_sums(), b.claimed_row_sums);
    assert_eq!(b.observed_col_sums(), b.claimed_col_sums);
    assert_eq!(b.observed_hub(), b.claimed_hub);
}

#[test]
fn every_family_builder_at_desk_scale() {
    for m in 2..=9 {
        for n in 2..=9 {
            for r in 1..=4 {
                if m < n && mrs_exists(m, n, r) {
                    assert_family(&build_mrs_family(m, n, r).unwrap());
                }
                if m != n && m % 2 == 1 && n % 2 == 1 && r % 2 == 0 {
                    assert_family(&build_zt_family_bipartite(m, n, r).unwrap());
                }
            }
            if m != n && (m + n) % 2 == 0 {
                assert_blanked(&build_b_same_parity(m, n).unwrap());
            }
            if (m + n) % 2 == 1 {
                assert_blanked(&build_b_mixed_parity(m, n).unwrap());
                assert_family(&build_nmr_single(m, n).unwrap());
            }
        }
        for r in 1..=4 {
            if m % 2 == 0 && m >= 4 {
                assert_family(&build_zt_family_glued(m, r).unwrap());
            }
            if m % 2 == 1 {
                assert_family(&build_zt_family_square(m, r).unwrap());
            }
        }
        if m % 2 == 1 {
            assert_blanked(&build_b_odd_square(m).unwrap());
        } else {
            assert_blanked(&build_b_even_square(m).unwrap());
        }
    }
}

/// Equal cells across copies stay within `r - 1` of each other, so values
/// from different base cells can never meet.
#[test]
fn lifted_families_separate_cells() {
    let fams = [
        build_zt_family_bipartite(3, 7, 4).unwrap(),
        build_zt_family_bipartite(7, 11, 4).unwrap(),
        build_zt_family_square(5, 3).unwrap(),
        build_zt_family_square(7, 4).unwrap(),
        build_mrs_family(3, 5, 3).unwrap(),
    ];
    for f in &fams {
        let r = f.copies.len() as u32;
        for k in 0..f.rows() * f.cols() {
            let vals: Vec<u32> = f.copies.iter().map(|c| c.entries()[k]).collect();
            let (lo, hi) = (vals.iter().min().unwrap(), vals.iter().max().unwrap());
            assert!(hi - lo < r, "{:?} cell {k}: {vals:?}", f.recipe);
            assert_eq!((lo - 1) / r, (hi - 1) / r);
        }
    }
}

#[test]
fn bipartite_sums_are_adjacent_and_apart() {
    for m in (3..=9).step_by(2) {
        for n in (m + 2..=11).step_by(2) {
            for r in (2..=6).step_by(2) {
                let f = build_zt_family_bipartite(m, n, r).unwrap();
                let (rows, cols) = (&f.claimed_row_sums, &f.claimed_col_sums);
                assert_eq!(rows.len(), 2);
                assert_eq!(cols.len(), 2);
                assert_eq!(rows[0] + 1, rows[1]);
                assert_eq!(cols[0] + 1, cols[1]);
                assert!(rows[0] > cols[1], "({m},{n},{r})");
            }
        }
    }
}

#[test]
fn rebuilding_is_identical() {
    assert_eq!(
        magic_rectangle(5, 7).unwrap(),
        magic_rectangle(5, 7).unwrap()
    );
    assert_eq!(
        build_zt_family_square(5, 4).unwrap(),
        build_zt_family_square(5, 4).unwrap()
    );
    assert_eq!(
        build_b_mixed_parity(3, 4).unwrap(),
        build_b_mixed_parity(3, 4).unwrap()
    );
    assert_eq!(
        quasi_kotzig_array(9, 6).unwrap(),
        quasi_kotzig_array(9, 6).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kotzig_arrays(a in 2usize..=10, b in 1usize..=15) {
        prop_assume!(ka_exists(a, b).unwrap());
        let k = kotzig_array(a, b).unwrap().matrix;
        prop_assert!(rows_are_permutations(&k));
        let want = (a * (b + 1) / 2) as u64;
        prop_assert!(k.col_sums().iter().all(|&s| s == want));
        prop_assert!(verify_array(&[k], ArrayKind::Kotzig).passed);
    }

    #[test]
    fn quasi_kotzig_arrays(h in 1usize..=6, s in 1usize..=5) {
        let (m, r) = (2 * h + 1, 2 * s);
        let q = quasi_kotzig_array(m, r).unwrap().matrix;
        prop_assert!(rows_are_permutations(&q));
        let lo = ((m * (r + 1) - 1) / 2) as u64;
        let mut want = vec![lo; s];
        want.extend(vec![lo + 1; s]);
        prop_assert_eq!(sorted(q.col_sums()), want);
        prop_assert!(verify_array(&[q], ArrayKind::QuasiKotzig).passed);
    }

    #[test]
    fn rectangle_sets(a in 2usize..=8, b in 2usize..=8, c in 1usize..=6) {
        prop_assume!(mrs_exists(a, b, c));
        let set = magic_rectangle_set(a, b, c).unwrap();
        prop_assert_eq!(set.len(), c);
        prop_assert!(is_range(&set, a * b * c));
        let abc = (a * b * c) as u64;
        for m in &set {
            prop_assert_eq!((m.rows(), m.cols()), (a, b));
            prop_assert!(m.row_sums().iter().all(|&s| s == b as u64 * (abc + 1) / 2));
            prop_assert!(m.col_sums().iter().all(|&s| s == a as u64 * (abc + 1) / 2));
        }
        prop_assert!(verify_array(&set, ArrayKind::MagicRectangleSet).passed);
    }

    #[test]
    fn nonexistent_sets_are_refused(a in 1usize..=8, b in 1usize..=8, c in 1usize..=6) {
        prop_assume!(!mrs_exists(a, b, c));
        prop_assert!(magic_rectangle_set(a, b, c).is_err());
    }
}
