use std::sync::OnceLock;

use crate::algebra::{MultiPoly, Scalar};
use crate::arbor::Arbor;

use super::laplace::volume_of_laplace;
use super::{ehrhart, k_poly, laplace, m_from_k, zeta_poly, InvariantError};

/// All invariants of one arbor, each computed on first access and cached.
pub struct InvariantBundle<C> {
    arbor: Arbor,
    zeta: OnceLock<MultiPoly<C>>,
    k_poly: OnceLock<MultiPoly<C>>,
    m_triangle: OnceLock<Result<MultiPoly<C>, InvariantError>>,
    ehrhart: OnceLock<Result<MultiPoly<C>, InvariantError>>,
    laplace: OnceLock<Result<MultiPoly<C>, InvariantError>>,
}

impl<C: Scalar> InvariantBundle<C> {
    pub fn new(arbor: Arbor) -> Self {
        InvariantBundle {
            arbor,
            zeta: OnceLock::new(),
            k_poly: OnceLock::new(),
            m_triangle: OnceLock::new(),
            ehrhart: OnceLock::new(),
            laplace: OnceLock::new(),
        }
    }

    pub fn arbor(&self) -> &Arbor {
        &self.arbor
    }

    /// `Z_t(u, X)`.
    pub fn zeta(&self) -> &MultiPoly<C> {
        self.zeta.get_or_init(|| zeta_poly(&self.arbor))
    }

    /// `K_t(X, Y)`.
    pub fn k_poly(&self) -> &MultiPoly<C> {
        self.k_poly.get_or_init(|| k_poly(&self.arbor))
    }

    /// `M_t(X, Y)`, derived from the cached K-polynomial.
    pub fn m_triangle(&self) -> Result<&MultiPoly<C>, InvariantError> {
        self.m_triangle
            .get_or_init(|| Ok(m_from_k(self.k_poly())?))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `E_t(u)`.
    pub fn ehrhart(&self) -> Result<&MultiPoly<C>, InvariantError> {
        self.ehrhart
            .get_or_init(|| ehrhart(&self.arbor))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `L_t(E, V)`.
    pub fn laplace(&self) -> Result<&MultiPoly<C>, InvariantError> {
        self.laplace
            .get_or_init(|| laplace(&self.arbor))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Volume, read off the cached Laplace polynomial.
    pub fn volume(&self) -> Result<C, InvariantError> {
        volume_of_laplace(self.laplace()?)
    }
}
