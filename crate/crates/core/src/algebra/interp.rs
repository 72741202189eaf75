//! Exact univariate interpolation through sample points.

use super::{AlgebraError, MultiPoly, Scalar, Var};

/// Interpolates a polynomial in `var` of degree at most `degree_bound`.
///
/// The first `degree_bound + 1` samples determine the polynomial (Newton
/// divided differences); every further sample must lie on it, otherwise the
/// degree bound was wrong and [`AlgebraError::InconsistentSamples`] is returned.
pub fn lagrange_interpolate<C: Scalar>(
    samples: &[(C, C)],
    var: Var,
    degree_bound: usize,
) -> Result<MultiPoly<C>, AlgebraError> {
    if samples.len() < degree_bound + 1 {
        return Err(AlgebraError::TooFewSamples {
            needed: degree_bound + 1,
            got: samples.len(),
        });
    }
    for i in 0..samples.len() {
        for j in 0..i {
            if samples[i].0 == samples[j].0 {
                return Err(AlgebraError::DuplicateAbscissa(samples[i].0.to_string()));
            }
        }
    }
    let used = &samples[..=degree_bound];
    let xs: Vec<C> = used.iter().map(|(x, _)| x.clone()).collect();
    let mut table: Vec<C> = used.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..xs.len() {
        for i in (level..xs.len()).rev() {
            table[i] =
                (table[i].clone() - table[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
        }
    }
    // Horner on the Newton form.
    let t = MultiPoly::var(var);
    let mut poly = MultiPoly::zero();
    for i in (0..xs.len()).rev() {
        poly = &(&poly * &(&t - &MultiPoly::constant(xs[i].clone())))
            + &MultiPoly::constant(table[i].clone());
    }
    for (index, (x, y)) in samples.iter().enumerate().skip(degree_bound + 1) {
        if poly.eval(&[(var, x.clone())]) != *y {
            return Err(AlgebraError::InconsistentSamples { index });
        }
    }
    Ok(poly)
}

/// Interpolation through all samples (degree bound `len - 1`).
pub fn interpolate_all<C: Scalar>(
    samples: &[(C, C)],
    var: Var,
) -> Result<MultiPoly<C>, AlgebraError> {
    if samples.is_empty() {
        return Err(AlgebraError::TooFewSamples { needed: 1, got: 0 });
    }
    lagrange_interpolate(samples, var, samples.len() - 1)
}
