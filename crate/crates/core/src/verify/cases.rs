use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Case, Outcome};
use crate::error::Result;
use crate::golden::*;
use crate::hessenberg::{
    det_relation_check, p_block_identity_check, w_vector, x_vector, zhong_inverse, HessenbergMatrix,
};
use crate::matrix::ExactMatrix;
use crate::parser::{expand, expand_bivariate};
use crate::partial_sums::{
    canonical_rowps_decomposition, col_partial_sum, col_ps_inverse, h_bivariate_gf,
    original_array_decomposition, p_inverse_pair, row_partial_sum, row_ps_inverse_finite,
    row_ps_inverse_infinite,
};
use crate::phyllotaxis::{
    a_squared_check, a_squared_checks, a_squared_minus_form_holds, binomial_sigma_tilde, build_a,
    c_matrix, conjecture_check, diagonal_sum_identities, factorization_checks, fibonacci,
    final_production_array, generated_from_a_bar, principal_inverses, IdentityCheck,
};
use crate::production::{
    a_seq_of_fourfold_target, a_sequence_of_inverse, charpoly_rows_check, four_fold_product,
    generate_from_production, is_riordan_production, production_matrix, stirling_finite_rows_check,
    stirling_production_check, FourFold,
};
use crate::riordan::{
    binomial, matrix_diagonal_sums, one_minus_x_t, reflect_triangle, shift_u, sigma, sigma_inv,
    sigma_t, sigma_tilde, ExpRiordanPair, RiordanPair,
};
use crate::sample::{random_hessenberg, random_pair};
use crate::series::Coef;

fn m<const W: usize>(rows: &[[i64; W]]) -> ExactMatrix {
    ExactMatrix::from_rows(rows)
}

fn golden(check: &str, expected: &ExactMatrix, actual: &ExactMatrix) -> Outcome {
    match actual.first_difference(expected) {
        None => Outcome::Pass,
        diff => Outcome::Fail {
            check: check.to_string(),
            diff,
        },
    }
}

fn claim(check: &str, holds: bool) -> Outcome {
    if holds {
        Outcome::Pass
    } else {
        Outcome::Fail {
            check: check.to_string(),
            diff: None,
        }
    }
}

fn first_failure(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes
        .into_iter()
        .find(|o| *o != Outcome::Pass)
        .unwrap_or(Outcome::Pass)
}

fn identities(checks: Vec<IdentityCheck>) -> Outcome {
    first_failure(checks.into_iter().map(|c| match c.diff {
        None => Outcome::Pass,
        diff => Outcome::Fail {
            check: c.name,
            diff,
        },
    }))
}

fn pascal(order: usize) -> RiordanPair {
    RiordanPair::pascal(order)
}

fn example(order: usize) -> Result<RiordanPair> {
    RiordanPair::from_exprs("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order)
}

fn ints(values: &[i64]) -> Vec<Coef> {
    values.iter().map(|&v| crate::series::int(v)).collect()
}

// Riordan arrays and column partial sums.

fn pascal_display(_: usize) -> Result<Outcome> {
    Ok(golden(
        "binomial matrix",
        &m(&PASCAL_7),
        &pascal(7).matrix(7)?,
    ))
}

fn pascal_colps(_: usize) -> Result<Outcome> {
    Ok(golden(
        "column partial sum",
        &m(&PASCAL_COL_PS_7),
        &col_partial_sum(&pascal(7))?.matrix(7)?,
    ))
}

fn pascal_rowps(_: usize) -> Result<Outcome> {
    Ok(golden(
        "row partial sum",
        &m(&PASCAL_ROW_PS_7),
        &row_partial_sum(&pascal(7), 7)?,
    ))
}

fn pascal_diagonal_sums(n: usize) -> Result<Outcome> {
    let sums = pascal(n).diagonal_sums(n)?.into_coeffs();
    Ok(claim(
        "diagonal sums are F(n+1)",
        sums == fibonacci(n + 1)[1..],
    ))
}

fn constants(_: usize) -> Result<Outcome> {
    Ok(first_failure([
        golden("sigma", &m(&SIGMA_6), &sigma(6)),
        golden("sigma inverse", &m(&SIGMA_INV_6), &sigma_inv(6)),
        golden("sigma transpose", &m(&SIGMA_T_7), &sigma_t(7)),
        golden(
            "(1-x, x) transpose",
            &m(&ONE_MINUS_X_T_7),
            &one_minus_x_t(7),
        ),
        golden("shift", &m(&SHIFT_U_7), &shift_u(7)),
        golden("sigma tilde", &m(&SIGMA_TILDE_6), &sigma_tilde(6)),
    ]))
}

fn colps_inverse(n: usize) -> Result<Outcome> {
    let mut out = Vec::new();
    for p in [pascal(n), example(n)?] {
        let direct = (&sigma(n) * &p.matrix(n)?).inverse()?;
        out.push(golden(
            "inverse of column partial sum",
            &direct,
            &col_ps_inverse(&p)?.matrix(n)?,
        ));
        let product = col_partial_sum(&p)?.multiply(&col_ps_inverse(&p)?)?;
        out.push(golden(
            "product with column partial sum",
            &ExactMatrix::identity(n),
            &product.matrix(n)?,
        ));
    }
    Ok(first_failure(out))
}

fn colps_diagonal_sums(n: usize) -> Result<Outcome> {
    let sums = matrix_diagonal_sums(&col_partial_sum(&pascal(n))?.matrix(n)?);
    let fib = fibonacci(n + 1);
    let expected: Vec<Coef> = (0..n).map(|k| fib[1..=k + 1].iter().sum()).collect();
    Ok(claim(
        "diagonal sums are partial sums of F(k+1)",
        sums == expected,
    ))
}

// Row partial sums and their Hessenberg inverses.

fn example_array(_: usize) -> Result<Outcome> {
    let p = example(6)?;
    Ok(first_failure([
        golden("array", &m(&EXAMPLE_6), &p.matrix(6)?),
        golden("inverse", &m(&EXAMPLE_INV_6), &p.inverse()?.matrix(6)?),
    ]))
}

fn example_rowps(_: usize) -> Result<Outcome> {
    Ok(golden(
        "row partial sum",
        &m(&EXAMPLE_ROW_PS_6),
        &row_partial_sum(&example(6)?, 6)?,
    ))
}

fn example_hessenberg(_: usize) -> Result<Outcome> {
    let p = example(6)?;
    let h = row_ps_inverse_finite(&p, 6)?;
    Ok(first_failure([
        golden("finite inverse", &m(&EXAMPLE_H_FINITE_6), &h),
        golden(
            "finite inverse minus inverse array",
            &m(&EXAMPLE_H_CORRECTION_6),
            &(&h - &p.inverse()?.matrix(6)?),
        ),
        golden(
            "inverse of row partial sum",
            &h,
            &m(&EXAMPLE_ROW_PS_6).inverse()?,
        ),
    ]))
}

fn pascal_h_finite(_: usize) -> Result<Outcome> {
    let h = row_ps_inverse_finite(&pascal(6), 6)?;
    Ok(first_failure([
        golden("finite inverse", &m(&PASCAL_H_FINITE_6), &h),
        golden(
            "exact inverse",
            &row_partial_sum(&pascal(6), 6)?.inverse()?,
            &h,
        ),
    ]))
}

fn pascal_h_infinite(_: usize) -> Result<Outcome> {
    let inf = row_ps_inverse_infinite(&pascal(7), 6)?;
    let fin = row_ps_inverse_finite(&pascal(6), 6)?;
    Ok(first_failure([
        golden("infinite form", &m(&PASCAL_H_INFINITE_6), &inf),
        golden(
            "finite minus infinite",
            &m(&PASCAL_H_DIFFERENCE_6),
            &(&fin - &inf),
        ),
    ]))
}

fn h_generating_function(n: usize) -> Result<Outcome> {
    let mut out = Vec::new();
    for p in [pascal(n + 1), example(n + 1)?] {
        let from_gf = ExactMatrix::from_bivariate(&h_bivariate_gf(&p, n, n)?);
        out.push(golden(
            "bivariate expansion",
            &row_ps_inverse_infinite(&p, n)?,
            &from_gf,
        ));
    }
    Ok(first_failure(out))
}

fn shift_removes_top_row(_: usize) -> Result<Outcome> {
    let infinite = sigma_inv(8).remove_top_row().truncate(7, 7);
    let finite = &shift_u(7) * &sigma_inv(7);
    Ok(first_failure([
        golden("shifted sigma inverse", &m(&U_TIMES_SIGMA_INV_7), &infinite),
        golden(
            "finite shift",
            &m(&U_TIMES_SIGMA_INV_7).truncate(6, 7),
            &finite.truncate(6, 7),
        ),
    ]))
}

fn decomposition(_: usize) -> Result<Outcome> {
    let d = canonical_rowps_decomposition(&example(6)?, 6)?;
    Ok(first_failure([
        golden("block", &m(&EXAMPLE_BLOCK_6), &d.block),
        claim(
            "x is 1, 4, 12, 38, 128, 450",
            d.x == ints(&[1, 4, 12, 38, 128, 450]),
        ),
        claim("w is all ones", d.w == ints(&[1; 6])),
        golden("block plus x w", &m(&EXAMPLE_ROW_PS_6), &d.reconstruct()),
    ]))
}

fn original_decomposition(_: usize) -> Result<Outcome> {
    let (t, r) = original_array_decomposition(&example(6)?, 6)?;
    Ok(first_failure([
        golden("first term", &m(&EXAMPLE_DECOMP_FIRST_6), &t),
        golden("second term", &m(&EXAMPLE_DECOMP_SECOND_6), &r),
        golden("sum", &m(&EXAMPLE_6), &(&t + &r)),
    ]))
}

fn p_block(n: usize) -> Result<Outcome> {
    let p = example(n.max(6))?;
    let p_inv = p_inverse_pair(&p)?.matrix(5)?;
    Ok(first_failure([
        golden("P inverse", &m(&EXAMPLE_P_INV_5), &p_inv),
        golden("P", &m(&EXAMPLE_P_5), &p_inv.inverse()?),
        claim(
            "P block of the finite inverse",
            p_block_identity_check(&example(n)?, n)?,
        ),
        claim("P block, binomial", p_block_identity_check(&pascal(n), n)?),
    ]))
}

fn zhong_example(_: usize) -> Result<Outcome> {
    let h = HessenbergMatrix::new(row_ps_inverse_finite(&example(6)?, 6)?)?;
    Ok(first_failure([
        golden(
            "rank-one assembly",
            &m(&EXAMPLE_ROW_PS_6),
            &zhong_inverse(&h)?,
        ),
        claim(
            "x is the row sums",
            x_vector(&h)? == ints(&[1, 4, 12, 38, 128, 450]),
        ),
        claim("w is all ones", w_vector(&h)? == ints(&[1; 6])),
        claim("determinant relation", det_relation_check(&h)?),
    ]))
}

fn zhong_random(_: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut tested = 0;
    while tested < 200 {
        let n = rng.gen_range(1..=8);
        let h = random_hessenberg(&mut rng, n);
        let Ok(inv) = h.matrix().inverse() else {
            continue;
        };
        tested += 1;
        let o = first_failure([
            golden("rank-one assembly", &inv, &zhong_inverse(&h)?),
            claim("determinant relation", det_relation_check(&h)?),
        ]);
        if o != Outcome::Pass {
            return Ok(o);
        }
    }
    Ok(Outcome::Pass)
}

// Production matrices and the four-fold product.

fn production_example_inverse(_: usize) -> Result<Outcome> {
    let p = example(7)?;
    let pm = production_matrix(&p.inverse()?.matrix(7)?)?;
    let a = a_sequence_of_inverse(&p, 6)?;
    let expected_a = expand("(1-3*x)/(1-x)", 6)?;
    Ok(first_failure([
        golden(
            "production matrix of the inverse",
            &m(&EXAMPLE_INV_PRODUCTION_6),
            &pm,
        ),
        claim(
            "columns from the second on are shifts",
            is_riordan_production(&pm),
        ),
        claim(
            "A-sequence is (1-3x)/(1-x)",
            a == expected_a && pm.col(1) == expected_a.coeffs(),
        ),
    ]))
}

fn fourfold_pairs(n: usize) -> Result<Vec<RiordanPair>> {
    Ok(vec![pascal(n + 2), example(n + 2)?])
}

fn fourfold_difference(n: usize) -> Result<Outcome> {
    let mut out = Vec::new();
    for p in fourfold_pairs(n)? {
        out.push(claim(
            "product equals (I - P) times sigma inverse",
            FourFold::compute(&p, n)?.difference_form_holds(),
        ));
    }
    Ok(first_failure(out))
}

fn fourfold_production(n: usize) -> Result<Outcome> {
    let mut stated = true;
    let mut negated = true;
    for p in fourfold_pairs(n)? {
        let ff = FourFold::compute(&p, n)?;
        stated &= ff.stated_form_holds();
        negated &= ff.negated_form_holds();
    }
    Ok(match (stated, negated) {
        (true, _) => Outcome::Pass,
        (false, true) => Outcome::Erratum {
            note: "product equals minus the production matrix of R^-1, R = (g/((1-x)(1-f)), f/((1-x)(1-f)))".into(),
        },
        (false, false) => claim("product against production matrix of R^-1", false),
    })
}

fn fourfold_a_sequence(n: usize) -> Result<Outcome> {
    let mut out = Vec::new();
    for p in fourfold_pairs(n)? {
        let a = a_seq_of_fourfold_target(&p, n)?;
        let col: Vec<Coef> = four_fold_product(&p, n)?
            .col(1)
            .into_iter()
            .map(|c| -c)
            .collect();
        out.push(claim("second column is minus x/F", col == a.coeffs()));
    }
    Ok(first_failure(out))
}

/// Entry `(i, j)` of `Σ^{-1} - P Σ^{-1}` read directly off `P`:
/// `[i = j] - [i = j + 1] - P(i, j) + P(i, j + 1)`.
fn fourfold_template(pm: &ExactMatrix, n: usize) -> ExactMatrix {
    use num_traits::{One, Zero};
    ExactMatrix::from_fn(n, n, |i, j| {
        let s = if i == j {
            Coef::one()
        } else if i == j + 1 {
            -Coef::one()
        } else {
            Coef::zero()
        };
        s - pm.get(i, j) + pm.get(i, j + 1)
    })
}

fn fourfold_symbolic(n: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0f0 + n as u64);
    for _ in 0..20 {
        let p = random_pair(&mut rng, n + 2)?;
        let pm = production_matrix(&p.inverse()?.matrix(n + 2)?)?;
        let o = golden(
            "template read off P",
            &fourfold_template(&pm, n),
            &four_fold_product(&p, n)?,
        );
        if o != Outcome::Pass {
            return Ok(o);
        }
    }
    Ok(Outcome::Pass)
}

// Bivariate generating functions.

fn grid(expr: &str, n: usize) -> Result<ExactMatrix> {
    Ok(ExactMatrix::from_bivariate(&expand_bivariate(expr, n, n)?))
}

fn rowps_gf(_: usize) -> Result<Outcome> {
    Ok(golden(
        "1/((1-y)(1-x-xy))",
        &m(&PASCAL_ROW_PS_7),
        &grid("1/((1-y)*(1-x-x*y))", 7)?,
    ))
}

fn whitney_square(_: usize) -> Result<Outcome> {
    Ok(golden(
        "1/((1-x)(1-y-xy))",
        &m(&WHITNEY_SQUARE_6),
        &grid("1/((1-x)*(1-y-x*y))", 6)?,
    ))
}

fn whitney_triangle(_: usize) -> Result<Outcome> {
    let pair = RiordanPair::from_exprs("1/(1-x)", "x*(1+x)", 6)?;
    Ok(first_failure([
        golden("Riordan array", &m(&WHITNEY_TRIANGLE_6), &pair.matrix(6)?),
        golden(
            "1/((1-x)(1-xy-x^2 y))",
            &m(&WHITNEY_TRIANGLE_6),
            &grid("1/((1-x)*(1-x*y-x^2*y))", 6)?,
        ),
    ]))
}

fn reflection(_: usize) -> Result<Outcome> {
    let t = m(&WHITNEY_TRIANGLE_6);
    let r = reflect_triangle(&t)?;
    Ok(first_failure([
        golden("reflection", &m(&KNIGHTS_MOVE_6), &r),
        golden("reflected twice", &t, &reflect_triangle(&r)?),
    ]))
}

fn knights_move(_: usize) -> Result<Outcome> {
    Ok(golden(
        "1/((1-xy)(1-x-x^2 y))",
        &m(&KNIGHTS_MOVE_6),
        &grid("1/((1-x*y)*(1-x-x^2*y))", 6)?,
    ))
}

// Exponential arrays.

fn generated_exp(_: usize) -> Result<Outcome> {
    let h = row_ps_inverse_finite(&pascal(6), 6)?;
    let e = ExpRiordanPair::from_exprs("1/(1-x)^2", "log(1-x)", 6)?.matrix(6)?;
    Ok(first_failure([
        golden(
            "generated by the finite inverse",
            &m(&EXP_A049444_6),
            &generate_from_production(&h, 6)?,
        ),
        golden("[1/(1-x)^2, log(1-x)]", &m(&EXP_A049444_6), &e),
    ]))
}

fn exp_inverse(_: usize) -> Result<Outcome> {
    let e = ExpRiordanPair::from_exprs("exp(2*x)", "1-exp(x)", 6)?.matrix(6)?;
    Ok(first_failure([
        golden("[e^(2x), 1-e^x]", &m(&EXP_A143494_6), &e),
        golden(
            "inverse of the generated matrix",
            &m(&EXP_A143494_6),
            &m(&EXP_A049444_6).inverse()?,
        ),
    ]))
}

fn stirling(r: i64, n: usize) -> Result<Outcome> {
    Ok(first_failure([
        claim(
            "infinite inverse is the production matrix",
            stirling_production_check(r, n)?,
        ),
        claim(
            "finite inverse agrees above its last row",
            stirling_finite_rows_check(r, n)?,
        ),
    ]))
}

fn charpoly(n: usize) -> Result<Outcome> {
    Ok(claim(
        "rows are signed characteristic polynomials",
        charpoly_rows_check(n)?,
    ))
}

// The collection matrix.

fn binomial_sigma_tilde_display(_: usize) -> Result<Outcome> {
    Ok(golden(
        "B sigma tilde",
        &m(&BINOMIAL_SIGMA_TILDE_6),
        &binomial_sigma_tilde(6),
    ))
}

fn principal_inverse_displays(_: usize) -> Result<Outcome> {
    let computed = principal_inverses(6)?;
    Ok(first_failure(
        principal_inverses_printed()
            .iter()
            .zip(&computed)
            .map(|(p, c)| golden("principal inverse", &ExactMatrix::from_rows(p), c)),
    ))
}

fn principal_inverses_printed() -> Vec<Vec<Vec<i64>>> {
    crate::golden::principal_inverses()
}

fn a_display(_: usize) -> Result<Outcome> {
    let a = build_a(7)?;
    Ok(first_failure([
        golden("A", &m(&A_7), &a),
        golden("A inverse", &m(&A_INV_6), &build_a(6)?.inverse()?),
    ]))
}

fn factor_displays(_: usize) -> Result<Outcome> {
    let a7 = m(&A_7);
    let a6 = a7.principal(6);
    let a5 = a7.principal(5);
    let b6 = binomial(6);
    let b5 = binomial(5);
    Ok(first_failure([
        golden(
            "almost-Riordan times Riordan",
            &a7,
            &(&m(&A_FACTOR_LEFT_7) * &m(&A_FACTOR_RIGHT_7)),
        ),
        golden("inverse binomial", &m(&PASCAL_INV_6), &b6.inverse()?),
        golden(
            "ones matrix times inverse binomial",
            &a6,
            &(&m(&A_ONES_FACTOR_6) * &m(&PASCAL_INV_6)),
        ),
        golden(
            "triple product",
            &a5,
            &(&(&b5 * &m(&A_TRIPLE_MIDDLE_5)) * &b5.inverse()?),
        ),
        golden(
            "binomial times right factor",
            &m(&A_INV_6),
            &(&b6 * &m(&A_INV_RIGHT_FACTOR_6)),
        ),
        golden("C", &m(&C_6), &c_matrix(6)?),
    ]))
}

fn factorizations(n: usize) -> Result<Outcome> {
    Ok(identities(factorization_checks(n)?))
}

fn involution(n: usize) -> Result<Outcome> {
    let c = c_matrix(n)?;
    Ok(golden("C squared", &ExactMatrix::identity(n), &(&c * &c)))
}

fn a_squared(n: usize) -> Result<Outcome> {
    Ok(identities(a_squared_checks(n)?))
}

fn a_squared_display(n: usize) -> Result<Outcome> {
    let n = n.max(3);
    Ok(
        match (a_squared_check(n)?, a_squared_minus_form_holds(n)?) {
            (_, true) => Outcome::Pass,
            (true, false) => Outcome::Erratum {
                note: "A^2 has g = (1+x)/((1-x)(1+2x)); the (1-x)(1-2x) denominator does not match"
                    .into(),
            },
            (false, false) => claim("A^2 against either form", false),
        },
    )
}

fn diagonal_sums(n: usize) -> Result<Outcome> {
    let r = diagonal_sum_identities(n.max(12))?;
    Ok(first_failure([
        claim("generating function", r.gf_holds()),
        claim("signed Fibonacci partial sums", r.signed_fibonacci_holds()),
        claim("inverse diagonal sums are F(n)+1", r.inverse_holds()),
    ]))
}

fn generated(_: usize) -> Result<Outcome> {
    Ok(golden(
        "generated by A without its top row",
        &m(&A_BAR_GENERATED_6),
        &generated_from_a_bar(6)?,
    ))
}

fn final_production(_: usize) -> Result<Outcome> {
    Ok(golden(
        "production array of the inverse",
        &m(&FINAL_PRODUCTION_6),
        &final_production_array(6)?,
    ))
}

fn conjecture(n: usize) -> Result<Outcome> {
    let r = conjecture_check(n)?;
    Ok(match r.mismatch {
        None => Outcome::ConjectureVerified { up_to: r.checked },
        Some(mm) => Outcome::ConjectureRefuted {
            n: mm.n,
            generated: mm.generated,
            conjectured: mm.conjectured,
        },
    })
}

macro_rules! case {
    ($id:literal, $topic:literal, $desc:literal, $run:expr) => {
        Case {
            id: $id,
            topic: $topic,
            description: $desc,
            run: $run,
        }
    };
}

fn build() -> Vec<Case> {
    let mut v = vec![
        case!(
            "sec1.colps.pascal",
            "partial sums",
            "column partial sum of the binomial matrix, 7x7",
            pascal_colps
        ),
        case!(
            "sec1.diagonal_sums.pascal",
            "riordan arrays",
            "diagonal sums of the binomial matrix are F(n+1)",
            pascal_diagonal_sums
        ),
        case!(
            "sec1.pascal",
            "riordan arrays",
            "binomial matrix, 7x7",
            pascal_display
        ),
        case!(
            "sec1.rowps.pascal",
            "partial sums",
            "row partial sum of the binomial matrix, 7x7",
            pascal_rowps
        ),
        case!(
            "sec2.colps.diagonal_sums",
            "partial sums",
            "diagonal sums of the column partial sum of the binomial matrix",
            colps_diagonal_sums
        ),
        case!(
            "sec2.colps.inverse",
            "partial sums",
            "inverse of the column partial sum as (1 - fbar, x) times the inverse",
            colps_inverse
        ),
        case!(
            "sec2.constants",
            "riordan arrays",
            "sigma, its inverse and transposes, shift, sigma tilde",
            constants
        ),
        case!(
            "sec3.example.array",
            "riordan arrays",
            "example array and its inverse, 6x6",
            example_array
        ),
        case!(
            "sec3.h_gf",
            "hessenberg inverse",
            "bivariate expansion of the infinite Hessenberg inverse",
            h_generating_function
        ),
        case!(
            "sec3.hessenberg.example",
            "hessenberg inverse",
            "finite Hessenberg inverse of the example row partial sum",
            example_hessenberg
        ),
        case!(
            "sec3.hessenberg.pascal.finite",
            "hessenberg inverse",
            "finite inverse of the binomial row partial sum, 6x6",
            pascal_h_finite
        ),
        case!(
            "sec3.hessenberg.pascal.infinite",
            "hessenberg inverse",
            "infinite form and its difference from the finite form",
            pascal_h_infinite
        ),
        case!(
            "sec3.rowps.example",
            "partial sums",
            "row partial sum of the example array, 6x6",
            example_rowps
        ),
        case!(
            "sec3.shift",
            "riordan arrays",
            "shift times sigma inverse removes the top row",
            shift_removes_top_row
        ),
        case!(
            "sec4.decomposition.example",
            "hessenberg inverse",
            "row partial sum as block plus x w",
            decomposition
        ),
        case!(
            "sec4.decomposition.original",
            "hessenberg inverse",
            "example array as a sum of two matrices",
            original_decomposition
        ),
        case!(
            "sec4.p_block.example",
            "hessenberg inverse",
            "P block and its inverse array",
            p_block
        ),
        case!(
            "sec4.zhong.example",
            "hessenberg inverse",
            "rank-one inverse formula on the example",
            zhong_example
        ),
        case!(
            "sec4.zhong.random",
            "hessenberg inverse",
            "rank-one inverse formula on 200 random matrices",
            zhong_random
        ),
        case!(
            "sec5.fourfold.a_sequence",
            "production matrices",
            "second column of the four-fold product against x/F",
            fourfold_a_sequence
        ),
        case!(
            "sec5.fourfold.difference",
            "production matrices",
            "four-fold product as (I - P) times sigma inverse",
            fourfold_difference
        ),
        case!(
            "sec5.fourfold.production",
            "production matrices",
            "four-fold product against the production matrix of R^-1",
            fourfold_production
        ),
        case!(
            "sec5.fourfold.symbolic",
            "production matrices",
            "four-fold product read entrywise off P, random pairs",
            fourfold_symbolic
        ),
        case!(
            "sec5.production.example_inverse",
            "production matrices",
            "production matrix of the example inverse, 6x6",
            production_example_inverse
        ),
        case!(
            "sec6.knights_move",
            "bivariate",
            "knights-move triangle from its bivariate function",
            knights_move
        ),
        case!(
            "sec6.reflection",
            "bivariate",
            "reflection of the (1/(1-x), x(1+x)) triangle",
            reflection
        ),
        case!(
            "sec6.rowps.gf",
            "bivariate",
            "binomial row partial sum from its bivariate function",
            rowps_gf
        ),
        case!(
            "sec6.whitney.square",
            "bivariate",
            "square array 1/((1-x)(1-y-xy)), 6x6",
            whitney_square
        ),
        case!(
            "sec6.whitney.triangle",
            "bivariate",
            "(1/(1-x), x(1+x)) as array and bivariate expansion",
            whitney_triangle
        ),
        case!(
            "sec7.charpoly",
            "exponential arrays",
            "rows of [e^(2x), 1-e^x] as characteristic polynomials",
            charpoly
        ),
        case!(
            "sec7.exp.generated",
            "exponential arrays",
            "matrix generated by the binomial Hessenberg inverse",
            generated_exp
        ),
        case!(
            "sec7.exp.inverse",
            "exponential arrays",
            "[e^(2x), 1-e^x] and the inverse of the generated matrix",
            exp_inverse
        ),
        case!(
            "sec7.stirling.r1",
            "exponential arrays",
            "Hessenberg inverse as exponential production matrix, r = 1",
            |n| stirling(1, n)
        ),
        case!(
            "sec7.stirling.r2",
            "exponential arrays",
            "Hessenberg inverse as exponential production matrix, r = 2",
            |n| stirling(2, n)
        ),
        case!(
            "sec7.stirling.r3",
            "exponential arrays",
            "Hessenberg inverse as exponential production matrix, r = 3",
            |n| stirling(3, n)
        ),
        case!(
            "sec7.stirling.r4",
            "exponential arrays",
            "Hessenberg inverse as exponential production matrix, r = 4",
            |n| stirling(4, n)
        ),
        case!(
            "sec8.a_matrix",
            "collection matrix",
            "A, 7x7, and its inverse, 6x6",
            a_display
        ),
        case!(
            "sec8.a_squared",
            "collection matrix",
            "A^2 by three pipelines",
            a_squared
        ),
        case!(
            "sec8.a_squared.display",
            "collection matrix",
            "A^2 against the (1-2x) denominator form",
            a_squared_display
        ),
        case!(
            "sec8.binomial_sigma_tilde",
            "collection matrix",
            "binomial times sigma tilde, 6x6",
            binomial_sigma_tilde_display
        ),
        case!(
            "sec8.conjecture",
            "collection matrix",
            "row polynomials of the matrix generated by A without its top row",
            conjecture
        ),
        case!(
            "sec8.diagonal_sums",
            "collection matrix",
            "diagonal sums of A and its inverse",
            diagonal_sums
        ),
        case!(
            "sec8.factor_displays",
            "collection matrix",
            "printed factors multiply to A and its inverse",
            factor_displays
        ),
        case!(
            "sec8.factorizations",
            "collection matrix",
            "factorizations of A and its inverse",
            factorizations
        ),
        case!(
            "sec8.final_production",
            "collection matrix",
            "production array of the inverse row-polynomial array, 6x6",
            final_production
        ),
        case!(
            "sec8.generated",
            "collection matrix",
            "matrix generated by A without its top row, 6x6",
            generated
        ),
        case!(
            "sec8.involution",
            "collection matrix",
            "C squared is the identity",
            involution
        ),
        case!(
            "sec8.principal_inverses",
            "collection matrix",
            "inverses of the leading blocks of binomial times sigma tilde",
            principal_inverse_displays
        ),
    ];
    v.sort_by_key(|c| c.id);
    v
}

pub(super) fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(build)
}
