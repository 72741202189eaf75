use crate::algebra::{laplace_laurent, AlgebraError, Monomial, MultiPoly, Scalar, Var};
use crate::arbor::Arbor;

use super::{InvariantError, SubArbor};

/// The truncation operator `T_n` on polynomials in `E` and `V`, extended
/// linearly from
///
/// ```text
/// T_n(V^{k+1} E^l) = 0                                              if l ≥ n
/// T_n(V^{k+1} E^l) = V^{k+1} E^l − Σ_{j=0}^{k} (n−l)^{k−j}/(k−j)! · V^{j+1} E^n   otherwise
/// ```
///
/// Every monomial must carry at least one `V`.
pub fn truncate_tn<C: Scalar>(p: &MultiPoly<C>, n: u32) -> Result<MultiPoly<C>, InvariantError> {
    if let Some(v) = p.vars().into_iter().find(|&v| v != Var::E && v != Var::V) {
        return Err(AlgebraError::BadShape(format!("T_n acts on E, V only; found {v}")).into());
    }
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let a = m.exp(Var::V);
        let l = m.exp(Var::E);
        if a == 0 {
            return Err(InvariantError::MissingV(
                MultiPoly::term(*m, c.clone()).to_string(),
            ));
        }
        if l >= n {
            continue;
        }
        out.add_term(*m, c.clone());
        let k = a - 1;
        let gap = C::int((n - l) as i64);
        // (n-l)^{i} / i! for i = k - j, j = k, k-1, …, 0
        let mut weight = C::one();
        for i in 0..=k {
            if i > 0 {
                weight = weight * gap.clone() / C::int(i as i64);
            }
            let j = k - i;
            let target = Monomial::from_pairs(&[(Var::V, j + 1), (Var::E, n)]);
            out.add_term(target, -(c.clone() * weight.clone()));
        }
    }
    Ok(out)
}

/// Laplace transform of the volume function, as a polynomial in
/// `E = e^{-v}` and `V = 1/v`:
/// `L_t = T_n(Π_k L_{t^(k)} · T_n(V^r))`, and `V − VE` for a single label.
pub fn laplace<C: Scalar>(t: &Arbor) -> Result<MultiPoly<C>, InvariantError> {
    laplace_at(SubArbor::whole(t))
}

fn laplace_at<C: Scalar>(t: SubArbor<'_>) -> Result<MultiPoly<C>, InvariantError> {
    if t.size() == 1 {
        let v = MultiPoly::var(Var::V);
        return Ok(&v - &(&v * &MultiPoly::var(Var::E)));
    }
    let n = t.size() as u32;
    let root_part = truncate_tn(
        &MultiPoly::term(Monomial::var(Var::V, t.root_size() as u32), C::one()),
        n,
    )?;
    let mut product = root_part;
    for child in t.subtrees() {
        product = &product * &laplace_at(child)?;
    }
    truncate_tn(&product, n)
}

/// `L_{t_n} = V^n (1−E)^{n−1} − V E^n`.
pub fn laplace_tn_closed<C: Scalar>(n: usize) -> MultiPoly<C> {
    assert!(n >= 1, "t_n needs n >= 1");
    let v = MultiPoly::var(Var::V);
    let e = MultiPoly::var(Var::E);
    let one = MultiPoly::one();
    &(&v.pow(n as u32) * &(&one - &e).pow(n as u32 - 1)) - &(&v * &e.pow(n as u32))
}

/// Volume of the arbor polytope: the `v^0` coefficient of the Laplace
/// transform, which must have no pole at `v = 0`.
pub fn volume<C: Scalar>(t: &Arbor) -> Result<C, InvariantError> {
    volume_of_laplace(&laplace(t)?)
}

pub(crate) fn volume_of_laplace<C: Scalar>(l: &MultiPoly<C>) -> Result<C, InvariantError> {
    let series = laplace_laurent(l, 0)?;
    if series.min_degree() < 0 {
        return Err(InvariantError::NegativeLaurentDegree(-series.min_degree()));
    }
    Ok(series.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arbor::parse_arbor;
    use crate::Rat;

    type P = MultiPoly<Rat>;

    fn v() -> P {
        P::var(Var::V)
    }
    fn e() -> P {
        P::var(Var::E)
    }

    #[test]
    fn truncation_examples() {
        // T_n(V) = V - V E^n
        for n in 1..6 {
            assert_eq!(truncate_tn(&v(), n).unwrap(), &v() - &(&v() * &e().pow(n)));
        }
        let high = &(&v() * &v()) * &e().pow(3);
        assert_eq!(truncate_tn(&high, 2).unwrap(), P::zero());
        // T_2(V^2) = V^2 - (2V + V^2) E^2
        let expected =
            &(&v() * &v()) - &(&(&v().scale(&Rat::int(2)) + &(&v() * &v())) * &e().pow(2));
        assert_eq!(truncate_tn(&(&v() * &v()), 2).unwrap(), expected);
    }

    #[test]
    fn truncation_rejects_bad_input() {
        assert!(matches!(
            truncate_tn(&e(), 2),
            Err(InvariantError::MissingV(_))
        ));
        assert!(truncate_tn(&P::var(Var::U), 2).is_err());
    }

    #[test]
    fn small_arbors() {
        assert_eq!(
            laplace::<Rat>(&Arbor::tn(1).unwrap()).unwrap().to_string(),
            "V - V*E"
        );
        let t2 = laplace::<Rat>(&Arbor::tn(2).unwrap()).unwrap();
        assert_eq!(
            t2,
            &(&(&v() * &v()) * &(&P::one() - &e())) - &(&v() * &e().pow(2))
        );
        for n in 1..=10 {
            assert_eq!(
                laplace::<Rat>(&Arbor::tn(n).unwrap()).unwrap(),
                laplace_tn_closed(n)
            );
        }
    }

    #[test]
    fn volumes() {
        assert_eq!(volume::<Rat>(&Arbor::tn(1).unwrap()).unwrap(), Rat::int(1));
        assert_eq!(
            volume::<Rat>(&Arbor::tn(2).unwrap()).unwrap(),
            Rat::ratio(3, 2)
        );
        for n in 1..=8 {
            assert_eq!(
                volume::<Rat>(&Arbor::tn(n).unwrap()).unwrap(),
                Rat::ratio(n as i64 + 1, 2)
            );
        }
        // A lone vertex of size r is the scaled simplex {x ≥ 0, Σ x ≤ r}: r^r / r!.
        let t = parse_arbor("{1,2,3}").unwrap();
        assert_eq!(volume::<Rat>(&t).unwrap(), Rat::ratio(27, 6));
        assert!(matches!(
            volume_of_laplace(&v()),
            Err::<Rat, _>(InvariantError::NegativeLaurentDegree(1))
        ));
    }
}
