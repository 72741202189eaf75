//! Coefficientwise checks of the generating series of the family `t_n`.
//!
//! Each check expands a closed-form right-hand side as a truncated series in
//! `s` and compares the `s^n` coefficient with the invariant of `t_n`
//! computed by recursion, for `n = 1, …, N`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    series_expand_rational, series_pow_symbolic, MultiPoly, TruncatedSeries, Var,
};
use crate::arbor::Arbor;
use crate::invariants::{ehrhart, laplace, m_triangle, zeta_poly, InvariantError};
use crate::{Poly, Rat, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("series order must be at least 1")]
    InvalidOrder,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

impl From<crate::algebra::AlgebraError> for VerifyError {
    fn from(e: crate::algebra::AlgebraError) -> Self {
        VerifyError::Invariant(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Zeta,
    MTriangle,
    Ehrhart,
    Laplace,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::Zeta,
        Theorem::MTriangle,
        Theorem::Ehrhart,
        Theorem::Laplace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Zeta => "zeta",
            Theorem::MTriangle => "m_triangle",
            Theorem::Ehrhart => "ehrhart",
            Theorem::Laplace => "laplace",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Comparison of the `s^n` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub n: usize,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    /// `lhs − rhs`, present only on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

/// A check that is not tied to a single `n`, such as the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxCheck {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: Theorem,
    pub order: usize,
    pub per_order: Vec<OrderCheck>,
    #[serde(default)]
    pub checks: Vec<AuxCheck>,
    pub overall: bool,
}

impl Report {
    fn assemble(
        theorem: Theorem,
        order: usize,
        per_order: Vec<OrderCheck>,
        checks: Vec<AuxCheck>,
    ) -> Self {
        let overall = per_order.iter().all(|c| c.pass) && checks.iter().all(|c| c.pass);
        Report {
            theorem,
            order,
            per_order,
            checks,
            overall,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {} to order {}: {}",
            self.theorem,
            self.order,
            if self.overall { "PASS" } else { "FAIL" }
        )?;
        for c in &self.per_order {
            writeln!(
                f,
                "  n={:<3} {}  {}",
                c.n,
                if c.pass { "ok  " } else { "FAIL" },
                c.lhs
            )?;
            if let Some(diff) = &c.diff {
                writeln!(f, "         rhs:  {}", c.rhs)?;
                writeln!(f, "         diff: {diff}")?;
            }
        }
        for c in &self.checks {
            write!(f, "  {:<28} {}", c.name, if c.pass { "ok" } else { "FAIL" })?;
            if let Some(d) = &c.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn var(v: Var) -> Poly {
    MultiPoly::var(v)
}

fn int(i: i64) -> Poly {
    MultiPoly::int(i)
}

/// `((1 − su + s) / (1 − su))^u`.
pub fn zeta_rhs(order: usize) -> Result<Series, VerifyError> {
    let s = var(Var::S);
    let su = &s * &var(Var::U);
    let num = &(&int(1) - &su) + &s;
    let den = &int(1) - &su;
    Ok(series_pow_symbolic(&num, &den, order)?)
}

/// `(XYs − Ys − 1)(XYs − 1) / ((2XYs − Ys − 1)(XYs − Ys + s − 1))`.
pub fn m_triangle_rhs(order: usize) -> Result<Series, VerifyError> {
    let s = var(Var::S);
    let xys = &(&var(Var::X) * &var(Var::Y)) * &s;
    let ys = &var(Var::Y) * &s;
    let one = int(1);
    let num = &(&(&xys - &ys) - &one) * &(&xys - &one);
    let den = &(&(&xys.scale(&Rat::from_integer(2.into())) - &ys) - &one)
        * &(&(&(&xys - &ys) + &s) - &one);
    Ok(series_expand_rational(&num, &den, order)?)
}

/// `(1/2)(1 − s/(us+s−1) − (s−1)/(us+s−1)²)` over the common denominator
/// `(us+s−1)²`.
pub fn ehrhart_rhs(order: usize) -> Result<Series, VerifyError> {
    let s = var(Var::S);
    let d = &(&(&var(Var::U) * &s) + &s) - &int(1);
    let d2 = &d * &d;
    let num = (&(&d2 - &(&s * &d)) - &(&s - &int(1))).scale(&Rat::new(1.into(), 2.into()));
    Ok(series_expand_rational(&num, &d2, order)?)
}

/// `V (s/(EVs − Vs + 1) + Es/(Es − 1))` over the common denominator
/// `(EVs − Vs + 1)(Es − 1)`.
pub fn laplace_rhs(order: usize) -> Result<Series, VerifyError> {
    let s = var(Var::S);
    let v = var(Var::V);
    let e = var(Var::E);
    let vs = &v * &s;
    let d1 = &(&(&e * &vs) - &vs) + &int(1);
    let es = &e * &s;
    let d2 = &es - &int(1);
    let num = &v * &(&(&s * &d2) + &(&es * &d1));
    Ok(series_expand_rational(&num, &(&d1 * &d2), order)?)
}

/// The recursion-computed `s^n` coefficient for each theorem.
pub fn default_lhs(theorem: Theorem, n: usize) -> Result<Poly, InvariantError> {
    let t = Arbor::tn(n).map_err(|_| InvariantError::InvalidSize)?;
    Ok(match theorem {
        Theorem::Zeta => zeta_poly::<Rat>(&t).eval_at(Var::X, &Rat::from_integer(1.into())),
        Theorem::MTriangle => m_triangle(&t)?,
        // Interpolated from lattice-point counts of the dilates.
        Theorem::Ehrhart => ehrhart(&t)?,
        Theorem::Laplace => laplace(&t)?,
    })
}

pub fn rhs_series(theorem: Theorem, order: usize) -> Result<Series, VerifyError> {
    match theorem {
        Theorem::Zeta => zeta_rhs(order),
        Theorem::MTriangle => m_triangle_rhs(order),
        Theorem::Ehrhart => ehrhart_rhs(order),
        Theorem::Laplace => laplace_rhs(order),
    }
}

/// Runs one theorem check with the default recursion-based left-hand side.
pub fn verify(theorem: Theorem, order: usize) -> Result<Report, VerifyError> {
    verify_with(theorem, order, |n| default_lhs(theorem, n))
}

pub fn verify_zeta(order: usize) -> Result<Report, VerifyError> {
    verify(Theorem::Zeta, order)
}

pub fn verify_m_triangle(order: usize) -> Result<Report, VerifyError> {
    verify(Theorem::MTriangle, order)
}

pub fn verify_ehrhart(order: usize) -> Result<Report, VerifyError> {
    verify(Theorem::Ehrhart, order)
}

pub fn verify_laplace(order: usize) -> Result<Report, VerifyError> {
    verify(Theorem::Laplace, order)
}

/// Like [`verify`] but with the left-hand side supplied by `lhs(n)`, so
/// callers can substitute other computations (or deliberately wrong ones).
pub fn verify_with<F>(theorem: Theorem, order: usize, lhs: F) -> Result<Report, VerifyError>
where
    F: Fn(usize) -> Result<Poly, InvariantError> + Sync,
{
    if order == 0 {
        return Err(VerifyError::InvalidOrder);
    }
    let rhs = rhs_series(theorem, order)?;
    // The Zeta check also needs the s^{N+1} coefficient for its
    // differential identity.
    let needed = if theorem == Theorem::Zeta {
        order + 1
    } else {
        order
    };
    let lhs_coeffs: Vec<Poly> = std::thread::scope(|scope| {
        let lhs = &lhs;
        let handles: Vec<_> = (1..=needed).map(|n| scope.spawn(move || lhs(n))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("lhs worker panicked"))
            .collect::<Result<_, _>>()
    })?;

    let per_order = (1..=order)
        .map(|n| {
            let l = &lhs_coeffs[n - 1];
            let r = rhs.coeff(n);
            let pass = l == r;
            OrderCheck {
                n,
                pass,
                lhs: l.to_string(),
                rhs: r.to_string(),
                diff: (!pass).then(|| (l - r).to_string()),
            }
        })
        .collect();

    let mut checks = Vec::new();
    let expected_constant = if theorem == Theorem::Laplace {
        int(0)
    } else {
        int(1)
    };
    let constant_ok = rhs.coeff(0) == &expected_constant;
    checks.push(AuxCheck {
        name: "constant term of series".into(),
        pass: constant_ok,
        detail: Some(format!("s^0 coefficient {}", rhs.coeff(0))),
    });
    if theorem == Theorem::Zeta {
        checks.push(log_derivative_check(&lhs_coeffs, order));
    }
    Ok(Report::assemble(theorem, order, per_order, checks))
}

/// With `G = 1 + Σ Z_{t_n}(u,1) s^n`, checks `G′ (1−us)(1+s−us) − u G = 0`
/// through `s^order`. This is the differential form of
/// `G = exp ∫ u / ((1−us)(1+s−us)) ds`.
fn log_derivative_check(lhs: &[Poly], order: usize) -> AuxCheck {
    let mut coeffs = vec![int(1)];
    coeffs.extend(lhs.iter().cloned());
    let g = TruncatedSeries::from_coeffs(coeffs).expect("coefficients are free of s");
    let s = var(Var::S);
    let us = &var(Var::U) * &s;
    let q = &(&int(1) - &us) * &(&(&int(1) + &s) - &us);
    let q = TruncatedSeries::from_poly(&q, order);
    let residual = g
        .derivative()
        .truncate(order)
        .mul(&q)
        .sub(&g.truncate(order).scale(&var(Var::U)));
    let bad = residual.coeffs().iter().position(|c| !c.is_zero());
    AuxCheck {
        name: "log-derivative residual".into(),
        pass: bad.is_none(),
        detail: bad.map(|m| format!("s^{m} coefficient {}", residual.coeff(m))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    #[test]
    fn zeta_low_orders() {
        let rhs = zeta_rhs(2).unwrap();
        assert_eq!(rhs.coeff(0), &int(1));
        assert_eq!(rhs.coeff(1), &var(Var::U));
        let expected = MultiPoly::from_terms([
            (Monomial::var(Var::U, 1), r(-1, 2)),
            (Monomial::var(Var::U, 2), r(3, 2)),
        ]);
        assert_eq!(rhs.coeff(2), &expected);
        let report = verify_zeta(2).unwrap();
        assert!(report.overall, "{report}");
    }

    #[test]
    fn m_triangle_rhs_shape() {
        let rhs = m_triangle_rhs(6).unwrap();
        assert_eq!(rhs.coeff(0), &int(1));
        assert_eq!(rhs.coeff(1).to_string(), "1 - Y + X*Y");
        let at_one = rhs.eval_at(Var::X, &r(1, 1));
        for m in 0..=6 {
            assert_eq!(at_one.coeff(m), &int(1), "s^{m}");
        }
    }

    #[test]
    fn ehrhart_rhs_low_orders() {
        let rhs = ehrhart_rhs(3).unwrap();
        assert_eq!(rhs.coeff(1).to_string(), "1 + u");
        assert_eq!(rhs.coeff(2).to_string(), "1 + 5/2*u + 3/2*u^2");
        assert_eq!(rhs.coeff(3).eval(&[(Var::U, r(1, 1))]), r(12, 1));
    }

    #[test]
    fn laplace_rhs_low_orders() {
        let rhs = laplace_rhs(2).unwrap();
        assert!(rhs.coeff(0).is_zero());
        assert_eq!(rhs.coeff(1).to_string(), "V - V*E");
        let v = var(Var::V);
        let e = var(Var::E);
        let expected = &(&(&v * &v) * &(&int(1) - &e)) - &(&v * &(&e * &e));
        assert_eq!(rhs.coeff(2), &expected);
    }

    #[test]
    fn order_zero_is_rejected() {
        assert_eq!(verify_zeta(0), Err(VerifyError::InvalidOrder));
    }

    #[test]
    fn perturbed_lhs_fails() {
        for theorem in Theorem::ALL {
            let report = verify_with(theorem, 4, |n| {
                let p = default_lhs(theorem, n)?;
                Ok(if n == 3 { &p + &int(1) } else { p })
            })
            .unwrap();
            assert!(!report.overall, "{theorem}");
            let failed: Vec<usize> = report
                .per_order
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.n)
                .collect();
            assert_eq!(failed, vec![3]);
            assert!(report.per_order[2].diff.is_some());
        }
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify_laplace(1).unwrap();
        assert_eq!(report.per_order.len(), 1);
        assert!(report.per_order[0].pass);
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert!(report.to_json().contains("\"theorem\": \"laplace\""));
    }
}
