//! Seeded random instances for randomized checks.

use rand::Rng;

use crate::error::Result;
use crate::hessenberg::HessenbergMatrix;
use crate::matrix::ExactMatrix;
use crate::riordan::RiordanPair;
use crate::series::{int, Series};

const ALPHAS: [i64; 4] = [-2, -1, 1, 2];

/// Entries in `[-9, 9]` on and below the diagonal, superdiagonal in
/// `{-2, -1, 1, 2}`. May be singular.
pub fn random_hessenberg<R: Rng>(rng: &mut R, n: usize) -> HessenbergMatrix {
    let m = ExactMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            int(ALPHAS[rng.gen_range(0..ALPHAS.len())])
        } else if j <= i {
            int(rng.gen_range(-9..=9))
        } else {
            int(0)
        }
    });
    HessenbergMatrix::new(m).expect("shape is lower Hessenberg by construction")
}

/// Integer series with constant term `lead` and later terms in `[-bound, bound]`.
pub fn random_series<R: Rng>(rng: &mut R, lead: i64, bound: i64, order: usize) -> Series {
    let mut v = vec![lead];
    v.extend((1..order).map(|_| rng.gen_range(-bound..=bound)));
    Series::from_ints(&v)
}

/// `g_0 = 1`, `f = x (1 + ...)`, integer coefficients in `[-3, 3]`.
pub fn random_pair<R: Rng>(rng: &mut R, order: usize) -> Result<RiordanPair> {
    let g = random_series(rng, 1, 3, order);
    let f = random_series(rng, 1, 3, order).mul_x();
    RiordanPair::new(g, f)
}
