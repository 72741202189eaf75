use crate::algebra::{binom_poly, int_binom_i64, lagrange_interpolate, MultiPoly, Scalar, Var};
use crate::arbor::Arbor;
use crate::oracle::count_points;

use super::InvariantError;

/// Ehrhart polynomial `E_t(u)`, interpolated from exact point counts of the
/// dilates `u = 0, …, n` and checked against the extra sample `u = n + 1`.
pub fn ehrhart<C: Scalar>(t: &Arbor) -> Result<MultiPoly<C>, InvariantError> {
    let n = t.size();
    let samples: Vec<(C, C)> = (0..=n as u32 + 1)
        .map(|u| (C::int(u as i64), C::int128(count_points(t, u) as i128)))
        .collect();
    Ok(lagrange_interpolate(&samples, Var::U, n)?)
}

/// `E_{t_n}(u) = (u+1)^{n-1} (u(n+1)/2 + 1)`.
pub fn ehrhart_tn_closed<C: Scalar>(n: usize) -> MultiPoly<C> {
    assert!(n >= 1, "t_n needs n >= 1");
    let u = MultiPoly::var(Var::U);
    let one = MultiPoly::one();
    let linear = &u.scale(&C::ratio(n as i64 + 1, 2)) + &one;
    &(&u + &one).pow(n as u32 - 1) * &linear
}

/// Inclusion–exclusion form
/// `E_{t_n}(u) = Σ_{j=0}^{n-1} (-1)^j binom(n-1, j) binom((n-j)(u+1), n)`.
pub fn ehrhart_tn_alternating<C: Scalar>(n: usize) -> MultiPoly<C> {
    assert!(n >= 1, "t_n needs n >= 1");
    let n = n as i64;
    let u_plus_1 = &MultiPoly::var(Var::U) + &MultiPoly::one();
    (0..n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            binom_poly(&u_plus_1.scale(&C::int(n - j)), n as u32)
                .scale(&C::int(sign * int_binom_i64(n - 1, j)))
        })
        .fold(MultiPoly::zero(), |acc, term| &acc + &term)
}
