//! Fixtures shared by the criterion benches.

use riordan_core::RiordanPair;

/// `((1+x)/(1-2x), x(1-x)/(1-3x))`, a pair with no closed-form shortcuts.
pub fn example_pair(order: usize) -> RiordanPair {
    RiordanPair::from_exprs("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order).expect("valid pair")
}

pub fn pascal_pair(order: usize) -> RiordanPair {
    RiordanPair::pascal(order)
}
