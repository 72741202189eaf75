//! Power series in `s` truncated at a fixed order, with polynomial
//! coefficients in the remaining variables.

use std::fmt;

use super::{binom_poly, AlgebraError, MultiPoly, Scalar, Var};

/// `Σ_{m=0}^{N} coeffs[m] · s^m`. Coefficients never contain `s`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Scalar> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// Builds a series from explicit coefficients; `coeffs.len()` must be at
    /// least one and no coefficient may contain `s`.
    pub fn from_coeffs(coeffs: Vec<MultiPoly<C>>) -> Result<Self, AlgebraError> {
        if coeffs.is_empty() {
            return Err(AlgebraError::BadShape(
                "a series needs at least one coefficient".into(),
            ));
        }
        if coeffs.iter().any(|c| c.contains_var(Var::S)) {
            return Err(AlgebraError::BadShape(
                "series coefficient contains s".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Splits a polynomial by powers of `s`, dropping everything above `order`.
    pub fn from_poly(p: &MultiPoly<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (m, c) in p
            .coefficients_in(Var::S)
            .into_iter()
            .enumerate()
            .take(order + 1)
        {
            out.coeffs[m] = c;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &MultiPoly<C> {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|m| &self.coeffs[m] + &other.coeffs[m])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|m| &self.coeffs[m] - &other.coeffs[m])
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }

    pub fn scale(&self, p: &MultiPoly<C>) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// `d/ds`; the result has order one less (but at least zero).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=self.order())
                .map(|m| self.coeffs[m].scale(&C::int(m as i64)))
                .collect(),
        }
    }

    /// Evaluates a variable inside every coefficient.
    pub fn eval_at(&self, v: Var, value: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.eval_at(v, value)).collect(),
        }
    }

    /// Recombines into a polynomial in `s`.
    pub fn to_poly(&self) -> MultiPoly<C> {
        MultiPoly::from_coefficients(Var::S, &self.coeffs)
    }
}

impl<C: Scalar> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (m, c) in self.coeffs.iter().enumerate() {
            if m > 0 {
                write!(f, ", ")?;
            }
            write!(f, "s^{m}: {c}")?;
        }
        write!(f, "] + O(s^{})", self.order() + 1)
    }
}

/// Expands `num / den` as a power series in `s` up to `order`.
///
/// The coefficients solve `num_m = Σ_k den_k · c_{m-k}` for `c_m`, which
/// requires the `s^0` part of `den` to be nonzero and to divide every
/// intermediate exactly (it is `±1` for every rational function used here).
pub fn series_expand_rational<C: Scalar>(
    num: &MultiPoly<C>,
    den: &MultiPoly<C>,
    order: usize,
) -> Result<TruncatedSeries<C>, AlgebraError> {
    let num = TruncatedSeries::from_poly(num, order);
    let den = TruncatedSeries::from_poly(den, order);
    let lead = den.coeff(0).clone();
    if lead.is_zero() {
        return Err(AlgebraError::ZeroConstantTerm);
    }
    let mut out = TruncatedSeries::zero(order);
    for m in 0..=order {
        let mut rhs = num.coeff(m).clone();
        for k in 1..=m {
            rhs -= &(den.coeff(k) * out.coeff(m - k));
        }
        out.coeffs[m] = rhs.exact_div(&lead)?;
    }
    Ok(out)
}

/// Expands `((1 + α s) / (1 − β s))^u` with the symbolic exponent `u`.
///
/// `base_num` must be `1 + α s` and `base_den` must be `1 − β s` with `α`, `β`
/// free of `s`. Uses `(1+αs)^u = Σ binom(u,k) α^k s^k` and
/// `(1−βs)^{−u} = Σ binom(u+k−1,k) β^k s^k`.
pub fn series_pow_symbolic<C: Scalar>(
    base_num: &MultiPoly<C>,
    base_den: &MultiPoly<C>,
    order: usize,
) -> Result<TruncatedSeries<C>, AlgebraError> {
    let alpha = linear_in_s(base_num, "numerator")?;
    let beta = -&linear_in_s(base_den, "denominator")?;
    let u = MultiPoly::var(Var::U);
    let mut rising = TruncatedSeries::zero(order);
    let mut falling = TruncatedSeries::zero(order);
    let mut alpha_k = MultiPoly::one();
    let mut beta_k = MultiPoly::one();
    for k in 0..=order {
        let k32 = k as u32;
        rising.coeffs[k] = &binom_poly(&u, k32) * &alpha_k;
        let upper = &u + &MultiPoly::int(k as i64 - 1);
        falling.coeffs[k] = &binom_poly(&upper, k32) * &beta_k;
        alpha_k = &alpha_k * &alpha;
        beta_k = &beta_k * &beta;
    }
    Ok(rising.mul(&falling))
}

/// Returns `a` for an input of the form `1 + a·s` with `a` free of `s`.
fn linear_in_s<C: Scalar>(p: &MultiPoly<C>, what: &str) -> Result<MultiPoly<C>, AlgebraError> {
    if p.degree_in(Var::S) > 1 || p.coeff_of(Var::S, 0) != MultiPoly::one() {
        return Err(AlgebraError::BadShape(format!(
            "{what} must have the form 1 + a*s, got {p}"
        )));
    }
    Ok(p.coeff_of(Var::S, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    type P = MultiPoly<Rat>;

    fn s() -> P {
        P::var(Var::S)
    }
    fn u() -> P {
        P::var(Var::U)
    }

    #[test]
    fn geometric_series() {
        let g = series_expand_rational(&P::one(), &(&P::one() - &s()), 3).unwrap();
        for m in 0..=3 {
            assert_eq!(g.coeff(m), &P::one());
        }
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert!(matches!(
            series_expand_rational(&P::one(), &s(), 3),
            Err(AlgebraError::ZeroConstantTerm)
        ));
    }

    #[test]
    fn expansion_satisfies_convolution() {
        let num = &P::one() + &(&u() * &s());
        let den = &(&P::one() - &s().scale(&Rat::int(3))) + &(&s() * &s());
        let c = series_expand_rational(&num, &den, 6).unwrap();
        let back = c.mul(&TruncatedSeries::from_poly(&den, 6));
        assert_eq!(back, TruncatedSeries::from_poly(&num, 6));
    }

    #[test]
    fn binomial_series_in_u() {
        let g = series_pow_symbolic(&(&P::one() + &s()), &P::one(), 1).unwrap();
        assert_eq!(g.coeff(0), &P::one());
        assert_eq!(g.coeff(1), &u());
    }

    #[test]
    fn symbolic_power_rejects_wrong_shape() {
        let bad = &P::int(2) + &s();
        assert!(series_pow_symbolic(&bad, &P::one(), 2).is_err());
    }

    #[test]
    fn symbolic_exponent_matches_integer_powers() {
        // ((1 + (1-u)s) / (1 - us))^u at u = m equals (1+αs)^m / (1−βs)^m.
        let alpha = &P::one() - &u();
        let num = &P::one() + &(&alpha * &s());
        let den = &P::one() - &(&u() * &s());
        let order = 6;
        let sym = series_pow_symbolic(&num, &den, order).unwrap();
        for m in 1..=order as i64 {
            let um = Rat::int(m);
            let num_m = num.eval_at(Var::U, &um).pow(m as u32);
            let den_m = den.eval_at(Var::U, &um).pow(m as u32);
            let direct = series_expand_rational(&num_m, &den_m, order).unwrap();
            assert_eq!(sym.eval_at(Var::U, &um), direct, "u = {m}");
        }
    }

    #[test]
    fn derivative_and_truncation() {
        let p = &(&P::one() + &s()) + &(&s() * &s()).scale(&Rat::int(4));
        let g = TruncatedSeries::from_poly(&p, 4);
        let d = g.derivative();
        assert_eq!(d.order(), 3);
        assert_eq!(d.coeff(0), &P::one());
        assert_eq!(d.coeff(1), &P::int(8));
        assert_eq!(g.truncate(1).to_poly(), &P::one() + &s());
    }
}
