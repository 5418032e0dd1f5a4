//! Matrices as printed in the reference displays, transcribed entry for entry.
//!
//! Every matrix is stored as full rows, zeros included.

/// Binomial matrix, 7 by 7.
pub const PASCAL_7: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0],
    [1, 3, 3, 1, 0, 0, 0],
    [1, 4, 6, 4, 1, 0, 0],
    [1, 5, 10, 10, 5, 1, 0],
    [1, 6, 15, 20, 15, 6, 1],
];

/// Column partial sum of the binomial matrix.
pub const PASCAL_COL_PS_7: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0],
    [3, 3, 1, 0, 0, 0, 0],
    [4, 6, 4, 1, 0, 0, 0],
    [5, 10, 10, 5, 1, 0, 0],
    [6, 15, 20, 15, 6, 1, 0],
    [7, 21, 35, 35, 21, 7, 1],
];

/// Row partial sum of the binomial matrix.
pub const PASCAL_ROW_PS_7: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, 2, 2, 2, 2, 2, 2],
    [1, 3, 4, 4, 4, 4, 4],
    [1, 4, 7, 8, 8, 8, 8],
    [1, 5, 11, 15, 16, 16, 16],
    [1, 6, 16, 26, 31, 32, 32],
    [1, 7, 22, 42, 57, 63, 64],
];

pub const SIGMA_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1],
];

pub const SIGMA_INV_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0],
    [0, 0, -1, 1, 0, 0],
    [0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, -1, 1],
];

pub const SIGMA_T_7: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1],
];

pub const ONE_MINUS_X_T_7: [[i64; 7]; 7] = [
    [1, -1, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 1],
];

pub const SHIFT_U_7: [[i64; 7]; 7] = [
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0],
];

/// The array ((1+x)/(1-2x), x(1-x)/(1-3x)).
pub const EXAMPLE_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [3, 1, 0, 0, 0, 0],
    [6, 5, 1, 0, 0, 0],
    [12, 18, 7, 1, 0, 0],
    [24, 60, 34, 9, 1, 0],
    [48, 192, 144, 54, 11, 1],
];

pub const EXAMPLE_INV_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [-3, 1, 0, 0, 0, 0],
    [9, -5, 1, 0, 0, 0],
    [-21, 17, -7, 1, 0, 0],
    [39, -43, 29, -9, 1, 0],
    [-63, 83, -85, 45, -11, 1],
];

pub const EXAMPLE_ROW_PS_6: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [3, 4, 4, 4, 4, 4],
    [6, 11, 12, 12, 12, 12],
    [12, 30, 37, 38, 38, 38],
    [24, 84, 118, 127, 128, 128],
    [48, 240, 384, 438, 449, 450],
];

/// Inverse of the 6 by 6 row partial sum of the example array.
pub const EXAMPLE_H_FINITE_6: [[i64; 6]; 6] = [
    [4, -1, 0, 0, 0, 0],
    [-12, 6, -1, 0, 0, 0],
    [30, -22, 8, -1, 0, 0],
    [-60, 60, -36, 10, -1, 0],
    [102, -126, 114, -54, 12, -1],
    [-63, 83, -85, 45, -11, 1],
];

/// Finite inverse minus the inverse array: the shifted inverse rows, last row zero.
pub const EXAMPLE_H_CORRECTION_6: [[i64; 6]; 6] = [
    [3, -1, 0, 0, 0, 0],
    [-9, 5, -1, 0, 0, 0],
    [21, -17, 7, -1, 0, 0],
    [-39, 43, -29, 9, -1, 0],
    [63, -83, 85, -45, 11, -1],
    [0, 0, 0, 0, 0, 0],
];

pub const U_TIMES_SIGMA_INV_7: [[i64; 7]; 7] = [
    [-1, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 0, -1],
];

/// Inverse of the 6 by 6 row partial sum of the binomial matrix.
pub const PASCAL_H_FINITE_6: [[i64; 6]; 6] = [
    [2, -1, 0, 0, 0, 0],
    [-2, 3, -1, 0, 0, 0],
    [2, -5, 4, -1, 0, 0],
    [-2, 7, -9, 5, -1, 0],
    [2, -9, 16, -14, 6, -1],
    [-1, 5, -10, 10, -5, 1],
];

/// Leading 6 by 6 block of the inverse of the infinite row partial sum.
pub const PASCAL_H_INFINITE_6: [[i64; 6]; 6] = [
    [2, -1, 0, 0, 0, 0],
    [-2, 3, -1, 0, 0, 0],
    [2, -5, 4, -1, 0, 0],
    [-2, 7, -9, 5, -1, 0],
    [2, -9, 16, -14, 6, -1],
    [-2, 11, -25, 30, -20, 7],
];

/// Finite minus infinite form.
pub const PASCAL_H_DIFFERENCE_6: [[i64; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [1, -6, 15, -20, 15, -6],
];

pub const EXAMPLE_P_INV_5: [[i64; 5]; 5] = [
    [-1, 0, 0, 0, 0],
    [-6, -1, 0, 0, 0],
    [-26, -8, -1, 0, 0],
    [-104, -44, -10, -1, 0],
    [-402, -210, -66, -12, -1],
];

/// Inverse of EXAMPLE_P_INV_5.
pub const EXAMPLE_P_5: [[i64; 5]; 5] = [
    [-1, 0, 0, 0, 0],
    [6, -1, 0, 0, 0],
    [-22, 8, -1, 0, 0],
    [60, -36, 10, -1, 0],
    [-126, 114, -54, 12, -1],
];

/// Block of the rank-one decomposition of EXAMPLE_ROW_PS_6.
pub const EXAMPLE_BLOCK_6: [[i64; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0],
    [-6, -1, 0, 0, 0, 0],
    [-26, -8, -1, 0, 0, 0],
    [-104, -44, -10, -1, 0, 0],
    [-402, -210, -66, -12, -1, 0],
];

/// First term of the decomposition of the example array.
pub const EXAMPLE_DECOMP_FIRST_6: [[i64; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [-6, 5, 1, 0, 0, 0],
    [-26, 18, 7, 1, 0, 0],
    [-104, 60, 34, 9, 1, 0],
    [-402, 192, 144, 54, 11, 1],
];

pub const EXAMPLE_DECOMP_SECOND_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [4, 0, 0, 0, 0, 0],
    [12, 0, 0, 0, 0, 0],
    [38, 0, 0, 0, 0, 0],
    [128, 0, 0, 0, 0, 0],
    [450, 0, 0, 0, 0, 0],
];

/// Production matrix of the inverse of the example array.
pub const EXAMPLE_INV_PRODUCTION_6: [[i64; 6]; 6] = [
    [-3, 1, 0, 0, 0, 0],
    [0, -2, 1, 0, 0, 0],
    [6, -2, -2, 1, 0, 0],
    [18, -2, -2, -2, 1, 0],
    [42, -2, -2, -2, -2, 1],
    [90, -2, -2, -2, -2, -2],
];

/// Coefficients of 1/((1-x)(1-y-xy)).
pub const WHITNEY_SQUARE_6: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 3, 4, 5, 6],
    [1, 2, 4, 7, 11, 16],
    [1, 2, 4, 8, 15, 26],
    [1, 2, 4, 8, 16, 31],
    [1, 2, 4, 8, 16, 32],
];

/// The array (1/(1-x), x(1+x)).
pub const WHITNEY_TRIANGLE_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0],
    [1, 2, 3, 1, 0, 0],
    [1, 2, 4, 4, 1, 0],
    [1, 2, 4, 7, 5, 1],
];

/// Reflection of WHITNEY_TRIANGLE_6.
pub const KNIGHTS_MOVE_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0],
    [1, 3, 2, 1, 0, 0],
    [1, 4, 4, 2, 1, 0],
    [1, 5, 7, 4, 2, 1],
];

/// [1/(1-x)^2, log(1-x)].
pub const EXP_A049444_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0],
    [6, -5, 1, 0, 0, 0],
    [24, -26, 9, -1, 0, 0],
    [120, -154, 71, -14, 1, 0],
    [720, -1044, 580, -155, 20, -1],
];

/// [e^{2x}, 1-e^x].
pub const EXP_A143494_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0],
    [4, -5, 1, 0, 0, 0],
    [8, -19, 9, -1, 0, 0],
    [16, -65, 55, -14, 1, 0],
    [32, -211, 285, -125, 20, -1],
];

pub const SIGMA_TILDE_6: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

pub const BINOMIAL_SIGMA_TILDE_6: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 1, 1, 1, 1],
    [1, 3, 2, 1, 1, 1],
    [1, 4, 4, 2, 1, 1],
    [1, 5, 7, 5, 2, 1],
    [1, 6, 11, 11, 6, 2],
];

/// First rows of the principal inverses of BINOMIAL_SIGMA_TILDE, collected.
pub const A_7: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0, 0],
    [1, 1, -1, 0, 0, 0, 0],
    [2, -2, 2, -1, 0, 0, 0],
    [1, 2, -4, 3, -1, 0, 0],
    [2, -3, 6, -7, 4, -1, 0],
    [1, 3, -9, 13, -11, 5, -1],
];

/// Left factor of the almost-Riordan times Riordan factorization.
pub const A_FACTOR_LEFT_7: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0],
    [2, -1, 0, -1, 0, 0, 0],
    [1, 0, -1, 0, -1, 0, 0],
    [2, -1, 0, -1, 0, -1, 0],
    [1, 0, -1, 0, -1, 0, -1],
];

pub const A_FACTOR_RIGHT_7: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0],
    [0, -1, 3, -3, 1, 0, 0],
    [0, 1, -4, 6, -4, 1, 0],
    [0, -1, 5, -10, 10, -5, 1],
];

/// Left factor of A = L B^{-1}.
pub const A_ONES_FACTOR_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0],
    [1, -1, -1, 0, 0, 0],
    [1, -1, -1, -1, 0, 0],
    [1, -1, -1, -1, -1, 0],
    [1, -1, -1, -1, -1, -1],
];

pub const PASCAL_INV_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0],
    [-1, 3, -3, 1, 0, 0],
    [1, -4, 6, -4, 1, 0],
    [-1, 5, -10, 10, -5, 1],
];

/// Middle factor of A = B M B^{-1}.
pub const A_TRIPLE_MIDDLE_5: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, -1, 0, 0, 0],
    [0, 1, -1, 0, 0],
    [0, -1, 2, -1, 0],
    [0, 1, -3, 3, -1],
];

pub const A_INV_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0],
    [3, -1, -1, 0, 0, 0],
    [4, 0, -2, -1, 0, 0],
    [5, 2, -2, -3, -1, 0],
    [6, 5, 0, -5, -4, -1],
];

/// Right factor of A^{-1} = B D.
pub const A_INV_RIGHT_FACTOR_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0],
    [0, 0, 1, -1, 0, 0],
    [0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 1, -1],
];

/// The almost-Riordan involution ((1+x)/(1-x); -1, x).
pub const C_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0],
    [2, 0, -1, 0, 0, 0],
    [2, 0, 0, -1, 0, 0],
    [2, 0, 0, 0, -1, 0],
    [2, 0, 0, 0, 0, -1],
];

/// Matrix generated by A with its top row removed.
pub const A_BAR_GENERATED_6: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0],
    [3, -3, 1, 0, 0, 0],
    [5, -8, 5, -1, 0, 0],
    [11, -25, 22, -8, 1, 0],
    [35, -99, 107, -53, 12, -1],
];

/// Production matrix of the inverse of A_BAR_GENERATED.
pub const FINAL_PRODUCTION_6: [[i64; 6]; 6] = [
    [2, -1, 0, 0, 0, 0],
    [1, 1, -1, 0, 0, 0],
    [1, -1, 2, -1, 0, 0],
    [1, -1, -1, 3, -1, 0],
    [1, -1, -1, -1, 4, -1],
    [1, -1, -1, -1, -1, 5],
];

/// Inverses of the leading principal submatrices of BINOMIAL_SIGMA_TILDE_6, orders 1 to 6.
pub fn principal_inverses() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![vec![1]],
        vec![vec![2, -1], vec![-1, 1]],
        vec![vec![1, 1, -1], vec![-1, 1, 0], vec![1, -2, 1]],
        vec![
            vec![2, -2, 2, -1],
            vec![-1, 1, 0, 0],
            vec![1, -2, 1, 0],
            vec![-1, 3, -3, 1],
        ],
        vec![
            vec![1, 2, -4, 3, -1],
            vec![-1, 1, 0, 0, 0],
            vec![1, -2, 1, 0, 0],
            vec![-1, 3, -3, 1, 0],
            vec![1, -4, 6, -4, 1],
        ],
        vec![
            vec![2, -3, 6, -7, 4, -1],
            vec![-1, 1, 0, 0, 0, 0],
            vec![1, -2, 1, 0, 0, 0],
            vec![-1, 3, -3, 1, 0, 0],
            vec![1, -4, 6, -4, 1, 0],
            vec![-1, 5, -10, 10, -5, 1],
        ],
    ]
}
