//! Invariants of arbors computed by recursion on sub-trees, plus the closed
//! forms known for the family `t_n`.
//!
//! The recursive invariants only depend on the shape of a sub-tree (its size
//! and root cardinality), never on the actual labels, so they walk the arbor
//! bottom-up through [`SubArbor`] views.

mod bundle;
mod ehrhart;
mod kpoly;
mod laplace;
mod zeta;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::arbor::{Arbor, VertexId};
use crate::oracle::OracleError;

pub use bundle::InvariantBundle;
pub use ehrhart::{ehrhart, ehrhart_tn_alternating, ehrhart_tn_closed};
pub use kpoly::{k_poly, k_tn_closed, m_from_k, m_tn_closed, m_triangle};
pub use laplace::{laplace, laplace_tn_closed, truncate_tn, volume};
pub use zeta::{zeta_poly, zeta_tn_closed};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("truncation operator applied to a monomial without V: {0}")]
    MissingV(String),
    #[error("Laplace expansion has a pole of order {0} at v = 0")]
    NegativeLaurentDegree(i64),
    #[error("n must be at least 1")]
    InvalidSize,
}

/// The sub-tree of an arbor rooted at one vertex.
#[derive(Clone, Copy)]
pub struct SubArbor<'a> {
    arbor: &'a Arbor,
    root: VertexId,
}

impl<'a> SubArbor<'a> {
    pub fn whole(arbor: &'a Arbor) -> Self {
        SubArbor {
            arbor,
            root: arbor.root(),
        }
    }

    /// Number of labels in the sub-tree.
    pub fn size(&self) -> usize {
        self.arbor.subtree_size(self.root)
    }

    /// Cardinality of the root vertex.
    pub fn root_size(&self) -> usize {
        self.arbor.labels(self.root).len()
    }

    pub fn subtrees(&self) -> impl Iterator<Item = SubArbor<'a>> + 'a {
        let arbor = self.arbor;
        arbor
            .children(self.root)
            .iter()
            .map(move |&c| SubArbor { arbor, root: c })
    }
}
