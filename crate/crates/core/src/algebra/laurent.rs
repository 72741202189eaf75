//! Laurent expansion in `v` of polynomials in `E = e^{-v}` and `V = 1/v`.

use std::fmt;

use super::{AlgebraError, MultiPoly, Scalar, Var};

/// `Σ_{d=min_degree}^{order} coeffs[d - min_degree] · v^d`.
///
/// The lowest stored coefficient is nonzero; the zero series has no stored
/// coefficients and `min_degree = order + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries<C> {
    min_degree: i64,
    order: i64,
    coeffs: Vec<C>,
}

impl<C: Scalar> LaurentSeries<C> {
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest power of `v` that is exact.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `v^d`; zero outside the stored range.
    ///
    /// Panics when `d` exceeds the truncation order.
    pub fn coeff(&self, d: i64) -> C {
        assert!(
            d <= self.order,
            "v^{d} is beyond the truncation order {}",
            self.order
        );
        if d < self.min_degree {
            return C::zero();
        }
        self.coeffs[(d - self.min_degree) as usize].clone()
    }

    fn from_dense(low: i64, order: i64, mut dense: Vec<C>) -> Self {
        let lead = dense.iter().position(|c| !c.is_zero());
        match lead {
            None => LaurentSeries {
                min_degree: order + 1,
                order,
                coeffs: Vec::new(),
            },
            Some(i) => {
                dense.drain(..i);
                LaurentSeries {
                    min_degree: low + i as i64,
                    order,
                    coeffs: dense,
                }
            }
        }
    }
}

impl<C: Scalar> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = self.min_degree + i as i64;
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*v")?,
                _ => write!(f, "{c}*v^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(v^{})", self.order + 1)
    }
}

/// Substitutes `E ↦ e^{-v}` and `V ↦ v^{-1}` into `l` and returns the exact
/// Laurent coefficients through `v^order`.
///
/// A term `V^a E^b` contributes `Σ_k (-b)^k / k! · v^{k-a}`; reaching `v^order`
/// needs `k` up to `order + a`, so the exponential is expanded to
/// `order + max deg_V` terms.
pub fn laplace_laurent<C: Scalar>(
    l: &MultiPoly<C>,
    order: i64,
) -> Result<LaurentSeries<C>, AlgebraError> {
    if let Some(v) = l.vars().into_iter().find(|&v| v != Var::E && v != Var::V) {
        return Err(AlgebraError::BadShape(format!(
            "Laplace polynomial must only involve E and V, found {v}"
        )));
    }
    let max_v = l.degree_in(Var::V) as i64;
    let low = -max_v;
    if order < low {
        return Ok(LaurentSeries::from_dense(low, order, Vec::new()));
    }
    let mut dense = vec![C::zero(); (order - low + 1) as usize];
    let precision = (order + max_v) as usize;
    let mut factorials = vec![C::one()];
    for k in 1..=precision {
        let next = factorials[k - 1].clone() * C::int(k as i64);
        factorials.push(next);
    }
    for (m, c) in l.terms() {
        let a = m.exp(Var::V) as i64;
        let b = m.exp(Var::E) as i64;
        let mut power = C::one();
        for (k, fact) in factorials.iter().enumerate().take((order + a) as usize + 1) {
            let d = k as i64 - a;
            let term = c.clone() * power.clone() / fact.clone();
            let slot = &mut dense[(d - low) as usize];
            *slot = slot.clone() + term;
            power = power * C::int(-b);
        }
    }
    Ok(LaurentSeries::from_dense(low, order, dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    type P = MultiPoly<Rat>;

    #[test]
    fn segment_transform_is_entire() {
        let v = P::var(Var::V);
        let l = &v - &(&v * &P::var(Var::E));
        let lau = laplace_laurent(&l, 3).unwrap();
        assert_eq!(lau.min_degree(), 0);
        assert_eq!(lau.coeff(0), Rat::int(1));
        assert_eq!(lau.coeff(1), Rat::ratio(-1, 2));
        assert_eq!(lau.coeff(2), Rat::ratio(1, 6));
        assert_eq!(lau.coeff(3), Rat::ratio(-1, 24));
    }

    #[test]
    fn pure_pole() {
        let lau = laplace_laurent(&P::var(Var::V), 2).unwrap();
        assert_eq!(lau.min_degree(), -1);
        assert_eq!(lau.coeff(-1), Rat::int(1));
        assert_eq!(lau.coeff(0), Rat::int(0));
        assert_eq!(lau.coeff(2), Rat::int(0));
    }

    #[test]
    fn two_leaf_arbor_volume() {
        // V^2 (1 - E) - V E^2
        let v = P::var(Var::V);
        let e = P::var(Var::E);
        let l = &(&(&v * &v) * &(&P::one() - &e)) - &(&v * &(&e * &e));
        let lau = laplace_laurent(&l, 1).unwrap();
        assert!(lau.min_degree() >= 0);
        assert_eq!(lau.coeff(0), Rat::ratio(3, 2));
    }

    #[test]
    fn rejects_foreign_variables() {
        assert!(laplace_laurent(&P::var(Var::U), 2).is_err());
    }

    #[test]
    fn zero_input() {
        let lau = laplace_laurent(&P::zero(), 2).unwrap();
        assert!(lau.is_zero());
        assert_eq!(lau.coeff(1), Rat::int(0));
    }
}
