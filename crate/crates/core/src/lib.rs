//! Exact invariants of arbors and their polytopes.
//!
//! An arbor is a rooted tree whose vertices carry disjoint label sets
//! partitioning `{1, …, n}`. Each arbor defines a lattice polytope and the
//! poset of its lattice points. This crate computes, in exact rational
//! arithmetic,
//!
//! * the extended Zeta polynomial `Z_t(u, X)`,
//! * the K-polynomial `K_t(X, Y)` and the M-triangle `M_t(X, Y)`,
//! * the Ehrhart polynomial `E_t(u)`,
//! * the Laplace transform of the volume function as a polynomial `L_t(E, V)`,
//!
//! by recursion on sub-trees, cross-checks them against brute-force oracles
//! ([`oracle`]), and checks the generating series of the family `t_n`
//! coefficient by coefficient ([`verify`]).
//!
//! The algebra kernel is generic over the coefficient type; the aliases below
//! fix it to arbitrary-precision rationals, which is what the rest of the
//! crate and the CLI use.

pub mod algebra;
pub mod arbor;
pub mod cli;
pub mod invariants;
pub mod oracle;
pub mod verify;

pub use algebra::{Monomial, Scalar, Var};
pub use arbor::{parse_arbor, Arbor, ArborError, Constraint};

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Polynomial over [`Rat`].
pub type Poly = algebra::MultiPoly<Rat>;
/// Truncated series in `s` over [`Rat`].
pub type Series = algebra::TruncatedSeries<Rat>;
/// Laurent expansion in `v` over [`Rat`].
pub type Laurent = algebra::LaurentSeries<Rat>;
/// Fixed-width rational, for quick cross-checks on small inputs.
pub type Rat64 = num_rational::Rational64;
/// Polynomial over [`Rat64`].
pub type Poly64 = algebra::MultiPoly<Rat64>;

/// Default truncation order of the generating-series checks.
pub const DEFAULT_ORDER: usize = 10;
