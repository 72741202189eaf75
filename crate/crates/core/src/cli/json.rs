//! JSON encoding of polynomials as explicit monomial lists.
//!
//! ```json
//! {"text": "1 + 5/2*u", "terms": [{"coeff": "1", "exponents": {}},
//!                                 {"coeff": "5/2", "exponents": {"u": 1}}]}
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MultiPoly, Scalar, Var, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyJsonError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
}

impl PolyJson {
    pub fn from_poly<C: Scalar>(p: &MultiPoly<C>) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exponents: Var::ALL
                    .into_iter()
                    .filter(|&v| m.exp(v) > 0)
                    .map(|v| (v.name().to_string(), m.exp(v)))
                    .collect(),
            })
            .collect();
        PolyJson {
            text: p.to_string(),
            terms,
        }
    }

    /// Rebuilds the polynomial from `terms`; `text` is informational.
    pub fn to_poly<C: Scalar + FromStr>(&self) -> Result<MultiPoly<C>, PolyJsonError> {
        let mut out = MultiPoly::zero();
        for t in &self.terms {
            let mut e = [0u32; NVARS];
            for (name, &k) in &t.exponents {
                let v = Var::from_name(name)
                    .ok_or_else(|| PolyJsonError::UnknownVariable(name.clone()))?;
                e[v.index()] += k;
            }
            let c = C::from_str(&t.coeff)
                .map_err(|_| PolyJsonError::BadCoefficient(t.coeff.clone()))?;
            out.add_term(Monomial::new(e), c);
        }
        Ok(out)
    }
}
