//! Brute-force ground truth for the recursions in [`crate::invariants`].
//!
//! Nothing here uses the recursions: points of the dilated polytopes are
//! enumerated directly from the constraints, and the poset invariants are
//! computed from the order relation on those points.

mod poset;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{lagrange_interpolate, AlgebraError, Monomial, MultiPoly, Scalar, Var};
use crate::arbor::{Arbor, VertexId};

pub use poset::{MobiusTable, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("interpolation failed: {0}")]
    Interpolation(#[from] AlgebraError),
    #[error("multichain count overflowed 128 bits")]
    Overflow,
}

/// An integer point, coordinate `i` belonging to label `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub coords: Vec<u32>,
}

impl LatticePoint {
    pub fn height(&self) -> u32 {
        self.coords.iter().sum()
    }

    /// Number of nonzero coordinates.
    pub fn nonzero_count(&self) -> u32 {
        self.coords.iter().filter(|&&c| c != 0).count() as u32
    }

    pub fn le(&self, other: &LatticePoint) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }
}

/// Depth-first walk over the integer points of a dilate.
///
/// Labels are assigned vertex by vertex in pre-order; each vertex carries the
/// remaining budget `u·|D(v)|` minus what its sub-tree already used, and a
/// coordinate may take at most the smallest budget along its root path.
struct PointWalker {
    /// (coordinate index, vertices whose constraint contains it)
    slots: Vec<(usize, Vec<VertexId>)>,
    budget: Vec<u64>,
    coords: Vec<u32>,
}

impl PointWalker {
    fn new(t: &Arbor, u: u32) -> Self {
        let parents = t.parents();
        let slots = t
            .preorder()
            .into_iter()
            .flat_map(|v| {
                let mut chain = vec![v];
                let mut cur = v;
                while let Some(p) = parents[cur.0] {
                    chain.push(p);
                    cur = p;
                }
                t.labels(v)
                    .iter()
                    .map(|&l| (l as usize - 1, chain.clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        let budget = (0..t.vertex_count())
            .map(|i| u as u64 * t.subtree_size(VertexId(i)) as u64)
            .collect();
        PointWalker {
            slots,
            budget,
            coords: vec![0; t.size()],
        }
    }

    fn room(&self, depth: usize) -> u64 {
        self.slots[depth]
            .1
            .iter()
            .map(|v| self.budget[v.0])
            .min()
            .unwrap_or(0)
    }

    fn shift(&mut self, depth: usize, x: u64, add: bool) {
        for v in &self.slots[depth].1 {
            if add {
                self.budget[v.0] += x;
            } else {
                self.budget[v.0] -= x;
            }
        }
    }

    fn visit<F: FnMut(&[u32])>(&mut self, depth: usize, f: &mut F) {
        if depth == self.slots.len() {
            f(&self.coords);
            return;
        }
        let coord = self.slots[depth].0;
        for x in 0..=self.room(depth) {
            self.coords[coord] = x as u32;
            self.shift(depth, x, false);
            self.visit(depth + 1, f);
            self.shift(depth, x, true);
        }
        self.coords[coord] = 0;
    }
}

/// Integer points of the `u`-th dilate of the arbor polytope, in
/// lexicographic order of coordinates.
pub fn enumerate_points(t: &Arbor, u: u32) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    PointWalker::new(t, u).visit(0, &mut |c: &[u32]| {
        out.push(LatticePoint { coords: c.to_vec() })
    });
    out.sort_unstable();
    out
}

/// Number of integer points in the `u`-th dilate, without materializing them.
///
/// For each vertex the number of fillings of its sub-tree with a given
/// coordinate sum is tabulated bottom-up: the children's tables and one
/// all-ones table per root label are convolved, then cut off at the vertex's
/// bound `u·|D(v)|`.
pub fn count_points(t: &Arbor, u: u32) -> u128 {
    let mut tables: Vec<Vec<u128>> = vec![Vec::new(); t.vertex_count()];
    for v in t.postorder() {
        let bound = u as usize * t.subtree_size(v);
        let mut acc = vec![1u128];
        let ones = vec![1u128; bound + 1];
        let factors = t.children(v).iter().map(|c| &tables[c.0]);
        for f in factors.chain(std::iter::repeat_n(&ones, t.labels(v).len())) {
            acc = truncated_convolution(&acc, f, bound);
        }
        tables[v.0] = acc;
    }
    tables[t.root().0].iter().sum()
}

fn truncated_convolution(a: &[u128], b: &[u128], bound: usize) -> Vec<u128> {
    let len = (a.len() + b.len() - 1).min(bound + 1);
    let mut out = vec![0u128; len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// The poset `P_t` on the points of the undilated polytope.
pub fn build_poset(t: &Arbor) -> Poset {
    Poset::new(enumerate_points(t, 1))
}

/// `Σ_{a ∈ P_t} X^{nz(a)} Y^{ht(a)}`.
pub fn k_oracle<C: Scalar>(t: &Arbor) -> MultiPoly<C> {
    MultiPoly::from_terms(enumerate_points(t, 1).into_iter().map(|p| {
        (
            Monomial::from_pairs(&[(Var::X, p.nonzero_count()), (Var::Y, p.height())]),
            C::one(),
        )
    }))
}

/// Points of the `m`-th dilate weighted by `X^height`.
pub fn height_distribution_oracle<C: Scalar>(t: &Arbor, m: u32) -> MultiPoly<C> {
    MultiPoly::from_terms(
        enumerate_points(t, m)
            .into_iter()
            .map(|p| (Monomial::var(Var::X, p.height()), C::one())),
    )
}

/// `Σ_{a ≤ b} μ(a,b) X^{ht a} Y^{ht b}` from the Möbius table.
pub fn m_triangle_oracle<C: Scalar>(p: &Poset) -> MultiPoly<C> {
    let mu = p.mobius();
    let mut out = MultiPoly::zero();
    for (a, b, value) in mu.entries() {
        let m = Monomial::from_pairs(&[(Var::X, p.height(a)), (Var::Y, p.height(b))]);
        out.add_term(m, C::int(value));
    }
    out
}

/// Multichain counts `Z_t(m, X)` for one integer `m ≥ 2`, as a map from
/// height to the number of multichains `e_1 ≤ … ≤ e_{m-1}` ending there.
pub fn multichain_counts(p: &Poset, m: u32) -> Result<BTreeMap<u32, u128>, OracleError> {
    assert!(m >= 2, "multichains are counted for m >= 2");
    let mut row = vec![1u128; p.len()];
    for _ in 0..m - 2 {
        row = p.zeta_step(&row).ok_or(OracleError::Overflow)?;
    }
    let mut by_height = BTreeMap::new();
    for (b, count) in row.into_iter().enumerate() {
        let slot = by_height.entry(p.height(b)).or_insert(0u128);
        *slot = slot.checked_add(count).ok_or(OracleError::Overflow)?;
    }
    Ok(by_height)
}

/// `Z_t(u, X)` recovered from multichain counts at `u = 2, …, n+3`.
///
/// Each `X^j` coefficient is interpolated in `u` with degree bound `n`; the
/// `(n+2)`-th sample checks the bound.
pub fn zeta_oracle<C: Scalar>(t: &Arbor) -> Result<MultiPoly<C>, OracleError> {
    let p = build_poset(t);
    let n = t.size();
    let max_height = t.size() as u32;
    let mut samples: Vec<Vec<(C, C)>> = vec![Vec::new(); max_height as usize + 1];
    for m in 2..=(n as u32 + 3) {
        let counts = multichain_counts(&p, m)?;
        for (j, column) in samples.iter_mut().enumerate() {
            let c = counts.get(&(j as u32)).copied().unwrap_or(0);
            column.push((C::int(m as i64), C::int128(c as i128)));
        }
    }
    let mut out = MultiPoly::zero();
    for (j, column) in samples.iter().enumerate() {
        let coeff = lagrange_interpolate(column, Var::U, n)?;
        out += &coeff.mul_monomial(&Monomial::var(Var::X, j as u32));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arbor::parse_arbor;
    use crate::Rat;

    type P = MultiPoly<Rat>;

    fn pt(c: &[u32]) -> LatticePoint {
        LatticePoint { coords: c.to_vec() }
    }

    #[test]
    fn points_of_small_dilates() {
        let t1 = Arbor::tn(1).unwrap();
        assert_eq!(enumerate_points(&t1, 1), vec![pt(&[0]), pt(&[1])]);
        let t2 = Arbor::tn(2).unwrap();
        assert_eq!(
            enumerate_points(&t2, 1),
            vec![
                pt(&[0, 0]),
                pt(&[0, 1]),
                pt(&[1, 0]),
                pt(&[1, 1]),
                pt(&[2, 0])
            ]
        );
        assert_eq!(count_points(&t2, 2), 12);
        assert_eq!(count_points(&t2, 0), 1);
    }

    #[test]
    fn enumeration_matches_filtering_a_box() {
        let t = parse_arbor("{2}({1,4}({3}),{5})").unwrap();
        for u in 0..3u32 {
            let cs = t.constraints();
            let mut brute = Vec::new();
            let bound = u * t.size() as u32;
            let mut c = vec![0u32; t.size()];
            loop {
                let ok = cs.iter().all(|k| {
                    k.support.iter().map(|&l| c[l as usize - 1]).sum::<u32>() <= u * k.bound
                });
                if ok {
                    brute.push(pt(&c));
                }
                let mut i = 0;
                while i < c.len() {
                    c[i] += 1;
                    if c[i] <= bound {
                        break;
                    }
                    c[i] = 0;
                    i += 1;
                }
                if i == c.len() {
                    break;
                }
            }
            brute.sort();
            assert_eq!(enumerate_points(&t, u), brute, "u = {u}");
        }
    }

    #[test]
    fn counting_matches_enumeration() {
        for text in [
            "{1}",
            "{1,2,3}",
            "{1,2}({3}({6,7},{8}),{4,5})",
            "{2}({1},{3}({4}))",
        ] {
            let t = parse_arbor(text).unwrap();
            for u in 0..=3 {
                assert_eq!(
                    count_points(&t, u),
                    enumerate_points(&t, u).len() as u128,
                    "{text} u = {u}"
                );
            }
        }
    }

    #[test]
    fn tn_point_counts() {
        // |P_{t_n}| = 2^{n-1}(n+3)/2
        for n in 1..=6usize {
            let expected = (1u128 << (n - 1)) * (n as u128 + 3) / 2;
            assert_eq!(count_points(&Arbor::tn(n).unwrap(), 1), expected, "n = {n}");
        }
    }

    #[test]
    fn k_oracle_small() {
        let t1 = Arbor::tn(1).unwrap();
        assert_eq!(k_oracle::<Rat>(&t1).to_string(), "1 + X*Y");
        let t2 = Arbor::tn(2).unwrap();
        assert_eq!(
            k_oracle::<Rat>(&t2).to_string(),
            "1 + 2*X*Y + X*Y^2 + X^2*Y^2"
        );
    }

    #[test]
    fn height_distributions() {
        let t1 = Arbor::tn(1).unwrap();
        for m in 1..5 {
            let expected = P::from_terms((0..=m).map(|h| (Monomial::var(Var::X, h), Rat::int(1))));
            assert_eq!(height_distribution_oracle::<Rat>(&t1, m), expected);
        }
        let t2 = Arbor::tn(2).unwrap();
        assert_eq!(
            height_distribution_oracle::<Rat>(&t2, 1).to_string(),
            "1 + 2*X + 2*X^2"
        );
        for n in 1..=5usize {
            let tn = Arbor::tn(n).unwrap();
            for m in 1..=3u32 {
                let total =
                    height_distribution_oracle::<Rat>(&tn, m).eval(&[(Var::X, Rat::int(1))]);
                let mm = Rat::int(m as i64);
                let nn = Rat::int(n as i64);
                let closed = (mm.clone() + Rat::int(1)).pow(n as i32 - 1)
                    * (mm.clone() * nn / Rat::int(2) + mm / Rat::int(2) + Rat::int(1));
                assert_eq!(total, closed, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn zeta_oracle_small() {
        let t1 = Arbor::tn(1).unwrap();
        assert_eq!(zeta_oracle::<Rat>(&t1).unwrap().to_string(), "1 - X + u*X");
        let t2 = Arbor::tn(2).unwrap();
        let z = zeta_oracle::<Rat>(&t2).unwrap();
        let at = |u: i64| z.eval(&[(Var::U, Rat::int(u)), (Var::X, Rat::int(1))]);
        assert_eq!(at(2), Rat::int(5));
        // 12 comparable pairs a <= b in P_{t_2}.
        assert_eq!(at(3), Rat::int(12));
        let p = build_poset(&t2);
        let pairs = (0..p.len())
            .flat_map(|a| (0..p.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| p.le(a, b))
            .count();
        assert_eq!(pairs, 12);
    }

    #[test]
    fn multichain_counts_are_monotone() {
        let p = build_poset(&parse_arbor("{1,2}({3})").unwrap());
        let mut last = 0u128;
        for m in 2..8 {
            let total: u128 = multichain_counts(&p, m).unwrap().values().sum();
            assert!(total >= last);
            last = total;
        }
        let z2: u128 = multichain_counts(&p, 2).unwrap().values().sum();
        assert_eq!(z2 as usize, p.len());
    }

    #[test]
    fn m_triangle_oracle_small() {
        let p1 = build_poset(&Arbor::tn(1).unwrap());
        assert_eq!(m_triangle_oracle::<Rat>(&p1).to_string(), "1 - Y + X*Y");
        let p3 = build_poset(&Arbor::tn(3).unwrap());
        let m = m_triangle_oracle::<Rat>(&p3);
        assert_eq!(m.eval_at(Var::X, &Rat::int(1)), P::one());
    }
}
