//! Arbors: rooted trees whose vertices carry disjoint label sets that
//! partition `{1, …, n}`.
//!
//! Vertices live in an arena addressed by [`VertexId`]. Children keep the
//! order in which they were given; [`Arbor::canonical`] and the text form
//! sort them by smallest label.

mod parse;
mod random;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use parse::parse_arbor;
pub use random::{random_arbor, random_corpus, CORPUS_VERSION};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArborError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("empty label set at byte {pos}")]
    EmptyLabelSet { pos: usize },
    #[error("label {0} is not a positive integer")]
    NonPositiveLabel(i64),
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("label {0} is missing (labels must cover 1..={1})")]
    MissingLabel(u32, u32),
    #[error("arbor size must be at least 1, got {0}")]
    InvalidSize(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// A validated arbor.
#[derive(Clone)]
pub struct Arbor {
    root: VertexId,
    labels: Vec<Vec<u32>>,
    children: Vec<Vec<VertexId>>,
    subtree_size: Vec<usize>,
    size: usize,
}

/// Unvalidated tree used to assemble an [`Arbor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArborSpec {
    pub labels: Vec<u32>,
    pub children: Vec<ArborSpec>,
}

impl ArborSpec {
    pub fn leaf(labels: Vec<u32>) -> Self {
        ArborSpec {
            labels,
            children: Vec::new(),
        }
    }

    pub fn node(labels: Vec<u32>, children: Vec<ArborSpec>) -> Self {
        ArborSpec { labels, children }
    }
}

/// One inequality `Σ_{i ∈ support} x_i ≤ bound` of the arbor polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub support: BTreeSet<u32>,
    pub bound: u32,
}

impl Constraint {
    /// TeX rendering, e.g. `x_3+x_6+x_7+x_8\leq 4`. Runs of four or more
    /// consecutive labels starting the support are elided with `\cdots`.
    pub fn to_tex(&self) -> String {
        let labels: Vec<u32> = self.support.iter().copied().collect();
        let consecutive = labels.windows(2).all(|w| w[1] == w[0] + 1);
        let lhs = if consecutive && labels.len() >= 4 {
            format!(
                "x_{}+x_{}+\\cdots +x_{}",
                labels[0],
                labels[1],
                labels[labels.len() - 1]
            )
        } else {
            labels
                .iter()
                .map(|l| format!("x_{l}"))
                .collect::<Vec<_>>()
                .join("+")
        };
        format!("{lhs}\\leq {}", self.bound)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.support.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{} <= {}", terms.join(" + "), self.bound)
    }
}

impl Arbor {
    /// Validates a tree of label sets: labels must be positive, pairwise
    /// distinct and cover `1..=max`.
    pub fn from_spec(spec: &ArborSpec) -> Result<Arbor, ArborError> {
        let mut arbor = Arbor {
            root: VertexId(0),
            labels: Vec::new(),
            children: Vec::new(),
            subtree_size: Vec::new(),
            size: 0,
        };
        arbor.push(spec)?;
        let mut seen = BTreeSet::new();
        for labels in &arbor.labels {
            for &l in labels {
                if !seen.insert(l) {
                    return Err(ArborError::DuplicateLabel(l));
                }
            }
        }
        let max = *seen.iter().next_back().expect("non-empty label sets");
        for l in 1..=max {
            if !seen.contains(&l) {
                return Err(ArborError::MissingLabel(l, max));
            }
        }
        arbor.size = max as usize;
        Ok(arbor)
    }

    fn push(&mut self, spec: &ArborSpec) -> Result<VertexId, ArborError> {
        if spec.labels.is_empty() {
            return Err(ArborError::EmptyLabelSet { pos: 0 });
        }
        if let Some(&zero) = spec.labels.iter().find(|&&l| l == 0) {
            return Err(ArborError::NonPositiveLabel(zero as i64));
        }
        let id = VertexId(self.labels.len());
        let mut labels = spec.labels.clone();
        labels.sort_unstable();
        self.labels.push(labels);
        self.children.push(Vec::new());
        self.subtree_size.push(0);
        let mut size = spec.labels.len();
        for child in &spec.children {
            let c = self.push(child)?;
            size += self.subtree_size[c.0];
            self.children[id.0].push(c);
        }
        self.subtree_size[id.0] = size;
        Ok(id)
    }

    /// `t_n`: a root `{1}` with leaf children `{2}, …, {n}`.
    pub fn tn(n: usize) -> Result<Arbor, ArborError> {
        if n < 1 {
            return Err(ArborError::InvalidSize(n as i64));
        }
        let leaves = (2..=n as u32).map(|l| ArborSpec::leaf(vec![l])).collect();
        Arbor::from_spec(&ArborSpec::node(vec![1], leaves))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self, v: VertexId) -> &[u32] {
        &self.labels[v.0]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len()).map(VertexId)
    }

    /// Number of labels in the sub-tree rooted at `v`.
    pub fn subtree_size(&self, v: VertexId) -> usize {
        self.subtree_size[v.0]
    }

    /// Labels of `v` and all its descendants.
    pub fn descendant_labels(&self, v: VertexId) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            out.extend(self.labels(w).iter().copied());
            stack.extend(self.children(w).iter().copied());
        }
        out
    }

    /// Vertices in pre-order (parents before children, children in stored order).
    pub fn preorder(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children(v).iter().rev().copied());
        }
        out
    }

    /// Vertices in post-order (children before parents).
    pub fn postorder(&self) -> Vec<VertexId> {
        fn walk(t: &Arbor, v: VertexId, out: &mut Vec<VertexId>) {
            for &c in t.children(v) {
                walk(t, c, out);
            }
            out.push(v);
        }
        let mut out = Vec::with_capacity(self.vertex_count());
        walk(self, self.root, &mut out);
        out
    }

    /// Parent of every vertex (`None` for the root).
    pub fn parents(&self) -> Vec<Option<VertexId>> {
        let mut parent = vec![None; self.vertex_count()];
        for v in self.vertices() {
            for &c in self.children(v) {
                parent[c.0] = Some(v);
            }
        }
        parent
    }

    /// The defining inequalities of the arbor polytope besides `x_i ≥ 0`, one
    /// per vertex, in post-order. The last one is the root's, `Σ x_i ≤ n`.
    pub fn constraints(&self) -> Vec<Constraint> {
        self.postorder()
            .into_iter()
            .map(|v| {
                let support = self.descendant_labels(v);
                Constraint {
                    bound: support.len() as u32,
                    support,
                }
            })
            .collect()
    }

    /// The same arbor with children sorted by smallest label, recursively.
    pub fn canonical(&self) -> Arbor {
        Arbor::from_spec(&self.to_spec_sorted(self.root)).expect("already validated")
    }

    fn to_spec_sorted(&self, v: VertexId) -> ArborSpec {
        let mut kids: Vec<VertexId> = self.children(v).to_vec();
        kids.sort_by_key(|c| self.labels(*c)[0]);
        ArborSpec {
            labels: self.labels(v).to_vec(),
            children: kids.into_iter().map(|c| self.to_spec_sorted(c)).collect(),
        }
    }

    /// Tree structure in stored child order.
    pub fn to_spec(&self) -> ArborSpec {
        fn build(t: &Arbor, v: VertexId) -> ArborSpec {
            ArborSpec {
                labels: t.labels(v).to_vec(),
                children: t.children(v).iter().map(|&c| build(t, c)).collect(),
            }
        }
        build(self, self.root)
    }

    /// Rebuilds the arbor with the children of every vertex reordered by
    /// `order`, which receives the current child list and returns a
    /// permutation of it.
    pub fn reorder_children<F>(&self, mut order: F) -> Arbor
    where
        F: FnMut(&[ArborSpec]) -> Vec<usize>,
    {
        fn build<F: FnMut(&[ArborSpec]) -> Vec<usize>>(
            spec: &ArborSpec,
            order: &mut F,
        ) -> ArborSpec {
            let kids: Vec<ArborSpec> = spec.children.iter().map(|c| build(c, order)).collect();
            let perm = order(&kids);
            ArborSpec {
                labels: spec.labels.clone(),
                children: perm.into_iter().map(|i| kids[i].clone()).collect(),
            }
        }
        Arbor::from_spec(&build(&self.to_spec(), &mut order)).expect("permutation keeps validity")
    }

    /// Canonical text form, e.g. `{1,2}({3}({6,7},{8}),{4,5})`.
    pub fn serialize(&self) -> String {
        fn write(spec: &ArborSpec, out: &mut String) {
            out.push('{');
            let labels: Vec<String> = spec.labels.iter().map(u32::to_string).collect();
            out.push_str(&labels.join(","));
            out.push('}');
            if !spec.children.is_empty() {
                out.push('(');
                for (i, c) in spec.children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write(c, out);
                }
                out.push(')');
            }
        }
        let mut out = String::new();
        write(&self.to_spec_sorted(self.root), &mut out);
        out
    }
}

/// Two arbors are equal when they have the same canonical form, so vertex
/// ids and child order do not matter.
impl PartialEq for Arbor {
    fn eq(&self, other: &Self) -> bool {
        self.serialize() == other.serialize()
    }
}

impl Eq for Arbor {}

impl fmt::Display for Arbor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for Arbor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arbor({})", self.serialize())
    }
}

impl std::str::FromStr for Arbor {
    type Err = ArborError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_arbor(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIZE_EIGHT: &str = "{1,2}({3}({6,7},{8}),{4,5})";

    fn support(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn tn_shapes() {
        let t1 = Arbor::tn(1).unwrap();
        assert_eq!(t1.size(), 1);
        assert_eq!(t1.vertex_count(), 1);
        let t5 = Arbor::tn(5).unwrap();
        assert_eq!(t5.labels(t5.root()), &[1]);
        let kids: Vec<&[u32]> = t5
            .children(t5.root())
            .iter()
            .map(|&c| t5.labels(c))
            .collect();
        assert_eq!(kids, vec![&[2][..], &[3], &[4], &[5]]);
        assert!(t5
            .children(t5.root())
            .iter()
            .all(|&c| t5.children(c).is_empty()));
        assert_eq!(Arbor::tn(3).unwrap().serialize(), "{1}({2},{3})");
        assert!(matches!(Arbor::tn(0), Err(ArborError::InvalidSize(0))));
    }

    #[test]
    fn constraints_of_small_arbors() {
        let t2 = Arbor::tn(2).unwrap();
        assert_eq!(
            t2.constraints(),
            vec![
                Constraint {
                    support: support(&[2]),
                    bound: 1
                },
                Constraint {
                    support: support(&[1, 2]),
                    bound: 2
                },
            ]
        );
        let t1 = Arbor::tn(1).unwrap();
        assert_eq!(
            t1.constraints(),
            vec![Constraint {
                support: support(&[1]),
                bound: 1
            }]
        );
    }

    #[test]
    fn size_eight_constraints() {
        let t = parse_arbor(SIZE_EIGHT).unwrap();
        assert_eq!(t.size(), 8);
        let cs = t.constraints();
        assert_eq!(cs.len(), 5);
        assert!(cs.contains(&Constraint {
            support: support(&[3, 6, 7, 8]),
            bound: 4
        }));
        assert!(cs.contains(&Constraint {
            support: support(&[6, 7]),
            bound: 2
        }));
        assert!(cs.contains(&Constraint {
            support: (1..=8).collect(),
            bound: 8
        }));
        let tex: Vec<String> = cs.iter().map(Constraint::to_tex).collect();
        for expected in [
            "x_8\\leq 1",
            "x_6+x_7\\leq 2",
            "x_3+x_6+x_7+x_8\\leq 4",
            "x_4+x_5\\leq 2",
            "x_1+x_2+\\cdots +x_8\\leq 8",
        ] {
            assert!(
                tex.iter().any(|t| t == expected),
                "missing {expected} in {tex:?}"
            );
        }
    }

    #[test]
    fn constraint_family_is_laminar() {
        let t = parse_arbor(SIZE_EIGHT).unwrap();
        let cs = t.constraints();
        for a in &cs {
            for b in &cs {
                let nested = a.support.is_subset(&b.support) || b.support.is_subset(&a.support);
                assert!(nested || a.support.is_disjoint(&b.support));
            }
        }
        assert_eq!(
            cs.iter().filter(|c| c.bound as usize == t.size()).count(),
            1
        );
    }

    #[test]
    fn canonical_serialization_sorts_children() {
        let t = parse_arbor("{4,5}( {8} , {3}({7,6}) ,{1,2})").unwrap();
        assert_eq!(t.serialize(), "{4,5}({1,2},{3}({6,7}),{8})");
        let reversed = t.reorder_children(|kids| (0..kids.len()).rev().collect());
        assert_eq!(reversed, t);
    }
}
