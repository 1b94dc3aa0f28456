//! Published instances shipped verbatim.

use crate::matrix::IntMatrix;

const MR_7_11: [[u32; 11]; 7] = [
    [77, 57, 43, 56, 15, 1, 64, 50, 36, 22, 8],
    [6, 9, 34, 23, 30, 37, 44, 51, 58, 65, 72],
    [3, 10, 17, 33, 31, 38, 45, 54, 59, 66, 73],
    [39, 46, 53, 60, 67, 74, 4, 11, 18, 25, 32],
    [75, 61, 47, 24, 19, 5, 68, 52, 40, 26, 12],
    [2, 20, 16, 48, 62, 76, 13, 27, 41, 55, 69],
    [71, 70, 63, 29, 49, 42, 35, 28, 21, 14, 7],
];

const NMR_4_3: [[u32; 3]; 4] = [[3, 12, 5], [10, 4, 6], [2, 9, 8], [11, 1, 7]];

/// The 7 x 11 magic rectangle used for `4K_{7,11}`.
pub fn mr_7_11() -> IntMatrix {
    IntMatrix::from_rows(&MR_7_11).expect("fixture is rectangular")
}

/// The 4 x 3 nearly magic rectangle labeling `K_{4,3}`.
pub fn nmr_4_3() -> IntMatrix {
    IntMatrix::from_rows(&NMR_4_3).expect("fixture is rectangular")
}
