use crate::algebra::{int_binom_i64, AlgebraError, LaurentPoly, Monomial, MultiPoly, Scalar, Var};
use crate::arbor::Arbor;

use super::SubArbor;

/// `K_t(X, Y) = Σ_{a ∈ P_t} X^{nz(a)} Y^{ht(a)}`, by recursion on sub-trees.
///
/// With `W = Π K_{t^(k)}` (`W = 1` for a leaf vertex), the `X^j Y^k`
/// coefficient for `0 ≤ j ≤ k ≤ n` is
/// `Σ_ℓ Σ_m binom(r, ℓ) binom(m-1, m-ℓ) W_{j-ℓ, k-m}` with
/// `max(0, j-n+r) ≤ ℓ ≤ min(j, r)` and `max(ℓ, k-n+r) ≤ m ≤ k+ℓ-j`.
pub fn k_poly<C: Scalar>(t: &Arbor) -> MultiPoly<C> {
    k_at(SubArbor::whole(t))
}

fn k_at<C: Scalar>(t: SubArbor<'_>) -> MultiPoly<C> {
    let n = t.size() as i64;
    let r = t.root_size() as i64;
    let w = t
        .subtrees()
        .fold(MultiPoly::one(), |acc, child| &acc * &k_at(child));
    let w_at = |i: i64, j: i64| -> C {
        if i < 0 || j < 0 {
            return C::zero();
        }
        w.coeff(&Monomial::from_pairs(&[
            (Var::X, i as u32),
            (Var::Y, j as u32),
        ]))
    };
    let mut out = MultiPoly::zero();
    for j in 0..=n {
        for k in j..=n {
            let mut total = C::zero();
            for l in (j - n + r).max(0)..=j.min(r) {
                for m in l.max(k - n + r)..=(k + l - j) {
                    let weight = int_binom_i64(r, l) * int_binom_i64(m - 1, m - l);
                    if weight != 0 {
                        total = total + C::int(weight) * w_at(j - l, k - m);
                    }
                }
            }
            out.add_term(
                Monomial::from_pairs(&[(Var::X, j as u32), (Var::Y, k as u32)]),
                total,
            );
        }
    }
    out
}

/// `K_{t_n} = (1+XY)^n + XY²((1+XY)^{n-1} − (Y(1+X))^{n-1}) / (1−Y)`.
pub fn k_tn_closed<C: Scalar>(n: usize) -> Result<MultiPoly<C>, AlgebraError> {
    assert!(n >= 1, "t_n needs n >= 1");
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let one = MultiPoly::one();
    let xy = &x * &y;
    let one_xy = &one + &xy;
    let bracket = &one_xy.pow(n as u32 - 1) - &(&y * &(&one + &x)).pow(n as u32 - 1);
    let correction = (&(&xy * &y) * &bracket).exact_div(&(&one - &y))?;
    Ok(&one_xy.pow(n as u32) + &correction)
}

/// `M_t(X, Y) = K_t(1 − 1/X, XY)`; every negative power of `X` must cancel.
pub fn m_from_k<C: Scalar>(k: &MultiPoly<C>) -> Result<MultiPoly<C>, AlgebraError> {
    let one_minus_inv_x =
        &LaurentPoly::constant(C::one()) + &LaurentPoly::monomial(Var::X, -1, -C::one());
    let xy = LaurentPoly::from(&(&MultiPoly::var(Var::X) * &MultiPoly::var(Var::Y)));
    k.substitute_laurent(&[(Var::X, one_minus_inv_x), (Var::Y, xy)])
        .into_poly()
}

/// M-triangle of `P_t` from the K-polynomial recursion.
pub fn m_triangle<C: Scalar>(t: &Arbor) -> Result<MultiPoly<C>, AlgebraError> {
    m_from_k(&k_poly(t))
}

/// `M_{t_n} = A^n + (X²Y² − XY²)(A^{n-1} − B^{n-1}) / (1 − XY)` with
/// `A = 1 + XY − Y`, `B = 2XY − Y`.
pub fn m_tn_closed<C: Scalar>(n: usize) -> Result<MultiPoly<C>, AlgebraError> {
    assert!(n >= 1, "t_n needs n >= 1");
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let one = MultiPoly::one();
    let xy = &x * &y;
    let a = &(&one + &xy) - &y;
    let b = &xy.scale(&C::int(2)) - &y;
    let c_num = &(&xy * &xy) - &(&xy * &y);
    let k = n as u32 - 1;
    let combined = (&c_num * &(&a.pow(k) - &b.pow(k))).exact_div(&(&one - &xy))?;
    Ok(&a.pow(n as u32) + &combined)
}
