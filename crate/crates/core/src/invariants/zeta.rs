use crate::algebra::{binom_poly, int_binom_i64, Monomial, MultiPoly, Scalar, Var};
use crate::arbor::Arbor;

use super::SubArbor;

/// Extended Zeta polynomial `Z_t(u, X)`.
///
/// With `W = Π Z_{t^(k)}` over the sub-trees of the root (`W = 1` for a leaf
/// vertex), `n` the sub-tree size and `r` the root cardinality, the `X^j`
/// coefficient is `Σ_{l = max(0, j-n+r)}^{j} binom(r(u-1)+l-1, l) · W_{j-l}`.
pub fn zeta_poly<C: Scalar>(t: &Arbor) -> MultiPoly<C> {
    zeta_at(SubArbor::whole(t))
}

fn zeta_at<C: Scalar>(t: SubArbor<'_>) -> MultiPoly<C> {
    let n = t.size() as i64;
    let r = t.root_size() as i64;
    let w = t
        .subtrees()
        .fold(MultiPoly::one(), |acc, child| &acc * &zeta_at(child));
    let w_coeffs = w.coefficients_in(Var::X);
    let u = MultiPoly::var(Var::U);
    // r(u-1) - 1 + l, for l = 0..=n
    let base = &(&u - &MultiPoly::one()).scale(&C::int(r)) - &MultiPoly::one();
    let binoms: Vec<MultiPoly<C>> = (0..=n)
        .map(|l| binom_poly(&(&base + &MultiPoly::int(l)), l as u32))
        .collect();
    let mut out = MultiPoly::zero();
    for j in 0..=n {
        let mut coeff = MultiPoly::zero();
        for l in (j - n + r).max(0)..=j {
            if let Some(wj) = w_coeffs.get((j - l) as usize) {
                coeff += &(&binoms[l as usize] * wj);
            }
        }
        out += &coeff.mul_monomial(&Monomial::var(Var::X, j as u32));
    }
    out
}

/// `Z_{t_n}(u, 1) = Σ_{k=0}^{n-1} binom(n-1, k) (u-1)^k binom(u+n-k-1, n-k)`.
pub fn zeta_tn_closed<C: Scalar>(n: usize) -> MultiPoly<C> {
    assert!(n >= 1, "t_n needs n >= 1");
    let n = n as i64;
    let u = MultiPoly::var(Var::U);
    let um1 = &u - &MultiPoly::one();
    (0..n)
        .map(|k| {
            let upper = &u + &MultiPoly::int(n - k - 1);
            (&um1.pow(k as u32) * &binom_poly(&upper, (n - k) as u32))
                .scale(&C::int(int_binom_i64(n - 1, k)))
        })
        .fold(MultiPoly::zero(), |acc, term| &acc + &term)
}
