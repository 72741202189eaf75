//! Sparse multivariate polynomials over a [`Scalar`] in a fixed, small set of
//! named variables.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! graded order used both for printing and as the monomial order of
//! [`MultiPoly::exact_div`]. Zero coefficients are never stored, so structural
//! equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{AlgebraError, Scalar};

/// Number of variables known to the kernel.
pub const NVARS: usize = 7;

/// The variables that occur in the invariants and their generating series.
///
/// The declaration order is the printing order inside a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U,
    X,
    Y,
    V,
    E,
    S,
    /// Laplace variable, only used by Laurent expansions.
    LowerV,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::U, Var::X, Var::Y, Var::V, Var::E, Var::S, Var::LowerV];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::X => "X",
            Var::Y => "Y",
            Var::V => "V",
            Var::E => "E",
            Var::S => "s",
            Var::LowerV => "v",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, one entry per [`Var`].
///
/// Ordered by total degree first; within a degree a larger exponent on an
/// earlier variable sorts first (`X^2 < X*Y < Y^2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exponents: [u32; NVARS]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in pairs {
            e[v.index()] += k;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    fn quotient(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    fn with_exp(&self, v: Var, exp: u32) -> Monomial {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }
}

/// Product of monomials: exponents add.
impl Mul for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(value: i64) -> Self {
        Self::constant(C::int(value))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `Σ coeffs[k] · v^k`.
    pub fn from_coefficients(v: Var, coeffs: &[MultiPoly<C>]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out += &c.mul_monomial(&Monomial::var(v, k as u32));
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in printing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::ONE)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables occurring with positive exponent, in printing order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.contains_var(v))
            .collect()
    }

    /// The coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_of(&self, v: Var, k: u32) -> MultiPoly<C> {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// All coefficients of powers of `v`, index `k` holding that of `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly<C>> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * *m, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs the one-divisor division algorithm in the graded monomial order;
    /// with a single divisor the remainder vanishes iff the divisor divides.
    pub fn exact_div(&self, divisor: &MultiPoly<C>) -> Result<MultiPoly<C>, AlgebraError> {
        let (lead_m, lead_c) = match divisor.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero();
        while let Some((m, c)) = rest.leading_term() {
            if !lead_m.divides(m) {
                return Err(AlgebraError::NonExactDivision {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            let q = MultiPoly::term(m.quotient(&lead_m), c.clone() / lead_c.clone());
            rest -= &(&q * divisor);
            quotient += &q;
        }
        Ok(quotient)
    }

    /// Simultaneous substitution `v ↦ p` for every pair in `map`.
    pub fn substitute(&self, map: &[(Var, MultiPoly<C>)]) -> MultiPoly<C> {
        let mut powers: Vec<Vec<MultiPoly<C>>> = vec![Vec::new(); NVARS];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut keep = *m;
            let mut factor = MultiPoly::constant(c.clone());
            for (v, image) in map {
                let e = m.exp(*v) as usize;
                keep = keep.with_exp(*v, 0);
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v.index()];
                if cache.is_empty() {
                    cache.push(MultiPoly::one());
                }
                while cache.len() <= e {
                    let next = &cache[cache.len() - 1] * image;
                    cache.push(next);
                }
                factor = &factor * &cache[e];
            }
            out += &factor.mul_monomial(&keep);
        }
        out
    }

    /// Substitution whose images may carry negative exponents.
    pub fn substitute_laurent(&self, map: &[(Var, LaurentPoly<C>)]) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut keep = *m;
            let mut factor = LaurentPoly::constant(c.clone());
            for (v, image) in map {
                let e = m.exp(*v);
                keep = keep.with_exp(*v, 0);
                if e > 0 {
                    factor = &factor * &image.pow(e);
                }
            }
            out += &(&factor * &LaurentPoly::from(&MultiPoly::term(keep, C::one())));
        }
        out
    }

    /// Partially evaluates `v = value`.
    pub fn eval_at(&self, v: Var, value: &C) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff * value.clone();
            }
            out.add_term(m.with_exp(v, 0), coeff);
        }
        out
    }

    /// Evaluates every variable; variables missing from `point` count as 0.
    pub fn eval(&self, point: &[(Var, C)]) -> C {
        let mut p = self.clone();
        for (v, value) in point {
            p = p.eval_at(*v, value);
        }
        for v in Var::ALL {
            p = p.eval_at(v, &C::zero());
        }
        p.constant_term()
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c.clone() * C::int(e as i64));
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&magnitude)?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl<C: Scalar> From<Var> for MultiPoly<C> {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a, C: Scalar> AddAssign<&'a MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &'a MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a, C: Scalar> SubAssign<&'a MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &'a MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a, C: Scalar> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, C: Scalar> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, C: Scalar> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Scalar> $trait<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

/// Polynomial whose exponents may be negative. Only used as an intermediate
/// when substituting `X ↦ 1 - 1/X`; [`LaurentPoly::into_poly`] checks that
/// every negative power cancelled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<[i32; NVARS], C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::term([0; NVARS], c)
    }

    pub fn term(exps: [i32; NVARS], c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { terms }
    }

    /// `c · v^exp` with a possibly negative exponent.
    pub fn monomial(v: Var, exp: i32, c: C) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Self::term(e, c)
    }

    fn add_term(&mut self, exps: [i32; NVARS], c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exps) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exps, sum);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::constant(C::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Converts back, failing if any negative exponent survived.
    pub fn into_poly(self) -> Result<MultiPoly<C>, AlgebraError> {
        let mut out = MultiPoly::zero();
        for (exps, c) in self.terms {
            if let Some(i) = exps.iter().position(|&e| e < 0) {
                return Err(AlgebraError::NegativeExponent {
                    var: Var::ALL[i].name(),
                    exponent: exps[i],
                });
            }
            let mut m = [0u32; NVARS];
            for (dst, src) in m.iter_mut().zip(exps.iter()) {
                *dst = *src as u32;
            }
            out.add_term(Monomial::new(m), c);
        }
        Ok(out)
    }
}

impl<C: Scalar> From<&MultiPoly<C>> for LaurentPoly<C> {
    fn from(p: &MultiPoly<C>) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in p.terms() {
            let mut e = [0i32; NVARS];
            for (dst, src) in e.iter_mut().zip(m.exponents().iter()) {
                *dst = *src as i32;
            }
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> AddAssign<&'a LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &'a LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a, C: Scalar> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, C: Scalar> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (a, b) in e.iter_mut().zip(eb.iter()) {
                    *a += b;
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}
