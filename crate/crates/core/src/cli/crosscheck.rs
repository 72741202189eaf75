//! Recursion-versus-oracle comparison for a single arbor.

use serde::Serialize;

use crate::algebra::{Monomial, Var};
use crate::arbor::Arbor;
use crate::invariants::{ehrhart, k_poly, laplace, m_from_k, volume, zeta_poly, InvariantError};
use crate::oracle::{build_poset, count_points, k_oracle, m_triangle_oracle, zeta_oracle};
use crate::{Poly, Rat};

/// Deliberate corruption of one recursion, to prove the harness can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to the K-polynomial (and so to the M-triangle).
    KPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub pass: bool,
    /// Both sides, only when they disagree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recursion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArborCheck {
    pub arbor: String,
    pub size: usize,
    pub points: usize,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

fn line<A: ToString, B: ToString>(name: &'static str, recursion: A, oracle: B) -> CheckLine {
    let (r, o) = (recursion.to_string(), oracle.to_string());
    let pass = r == o;
    CheckLine {
        name,
        pass,
        recursion: (!pass).then_some(r),
        oracle: (!pass).then_some(o),
    }
}

fn rat(i: i64) -> Rat {
    Rat::from_integer(i.into())
}

/// Compares every recursion against its oracle on `t`, plus the identities
/// that tie the invariants together.
pub fn check_arbor(t: &Arbor, fault: Option<Fault>) -> Result<ArborCheck, InvariantError> {
    let poset = build_poset(t);
    let n = t.size();
    let size = poset.len() as i64;
    let mut checks = Vec::new();

    let zeta: Poly = zeta_poly(t);
    checks.push(line("zeta", &zeta, zeta_oracle::<Rat>(t)?));

    let mut k: Poly = k_poly(t);
    if fault == Some(Fault::KPoly) {
        k = &k + &Poly::one();
    }
    checks.push(line("k_poly", &k, k_oracle::<Rat>(t)));

    let m = m_from_k(&k)?;
    checks.push(line("m_triangle", &m, m_triangle_oracle::<Rat>(&poset)));

    let e: Poly = ehrhart(t)?;
    let extra = n as i64 + 2;
    checks.push(line(
        "ehrhart",
        e.eval(&[(Var::U, rat(extra))]),
        count_points(t, extra as u32),
    ));

    let lead = e.coeff(&Monomial::var(Var::U, n as u32));
    checks.push(line("volume", volume::<Rat>(t)?, &lead));

    let z21 = zeta.eval(&[(Var::U, rat(2)), (Var::X, rat(1))]);
    let k11 = k.eval(&[(Var::X, rat(1)), (Var::Y, rat(1))]);
    let e1 = e.eval(&[(Var::U, rat(1))]);
    checks.push(line("Z(2,1) = |P|", &z21, size));
    checks.push(line("K(1,1) = |P|", &k11, size));
    checks.push(line("E(1) = |P|", &e1, size));
    checks.push(line("M(1,Y) = 1", m.eval_at(Var::X, &rat(1)), 1));
    checks.push(line("Z constant in X = 1", zeta.coeff_of(Var::X, 0), 1));
    checks.push(line("E(0) = 1", e.constant_term(), 1));
    checks.push(line("K(0,Y) = 1", k.eval_at(Var::X, &rat(0)), 1));
    checks.push(line("M(0,0) = 1", m.constant_term(), 1));

    let reversed = t.reorder_children(|kids| (0..kids.len()).rev().collect());
    let rotated =
        t.reorder_children(|kids| (0..kids.len()).map(|i| (i + 1) % kids.len()).collect());
    let mut permutation_ok = true;
    for other in [&reversed, &rotated] {
        permutation_ok &= zeta_poly::<Rat>(other) == zeta
            && k_poly::<Rat>(other) == k_poly::<Rat>(t)
            && laplace::<Rat>(other)? == laplace::<Rat>(t)?
            && ehrhart::<Rat>(other)? == e;
    }
    checks.push(CheckLine {
        name: "child order",
        pass: permutation_ok,
        recursion: None,
        oracle: None,
    });

    let pass = checks.iter().all(|c| c.pass);
    Ok(ArborCheck {
        arbor: t.serialize(),
        size: n,
        points: poset.len(),
        checks,
        pass,
    })
}
