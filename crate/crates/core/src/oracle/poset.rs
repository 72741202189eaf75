use std::collections::HashMap;

use super::LatticePoint;

/// Finite poset of lattice points under the coordinatewise order, graded by
/// coordinate sum.
#[derive(Debug, Clone)]
pub struct Poset {
    elements: Vec<LatticePoint>,
    heights: Vec<u32>,
    /// `down[b]` lists every `a ≤ b`, `b` included.
    down: Vec<Vec<usize>>,
    /// `up[a]` lists every `b ≥ a` in nondecreasing height, `a` first.
    up: Vec<Vec<usize>>,
}

impl Poset {
    pub fn new(elements: Vec<LatticePoint>) -> Self {
        let heights: Vec<u32> = elements.iter().map(LatticePoint::height).collect();
        let n = elements.len();
        let mut by_height: Vec<usize> = (0..n).collect();
        by_height.sort_by_key(|&i| (heights[i], i));
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for &b in &by_height {
            for &a in &by_height {
                if elements[a].le(&elements[b]) {
                    down[b].push(a);
                    up[a].push(b);
                }
            }
        }
        Poset {
            elements,
            heights,
            down,
            up,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LatticePoint] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &LatticePoint {
        &self.elements[i]
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.elements[a].le(&self.elements[b])
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| self.down[b].len() == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.up[a].len() == 1).collect()
    }

    /// One multiplication by the zeta matrix: `out[b] = Σ_{a ≤ b} row[a]`.
    /// `None` on overflow.
    pub fn zeta_step(&self, row: &[u128]) -> Option<Vec<u128>> {
        self.down
            .iter()
            .map(|below| {
                below
                    .iter()
                    .try_fold(0u128, |acc, &a| acc.checked_add(row[a]))
            })
            .collect()
    }

    /// Möbius function via `μ(a,a) = 1`, `μ(a,b) = −Σ_{a ≤ e < b} μ(a,e)`.
    pub fn mobius(&self) -> MobiusTable {
        let mut rows = Vec::with_capacity(self.len());
        for a in 0..self.len() {
            let mut row: HashMap<usize, i64> = HashMap::with_capacity(self.up[a].len());
            // Elements e with μ(a,e) ≠ 0 seen so far; zero terms do not
            // contribute to any later sum.
            let mut support: Vec<usize> = Vec::new();
            for &b in &self.up[a] {
                let value = if b == a {
                    1
                } else {
                    -support
                        .iter()
                        .filter(|&&e| self.le(e, b))
                        .map(|e| row[e])
                        .sum::<i64>()
                };
                row.insert(b, value);
                if value != 0 {
                    support.push(b);
                }
            }
            rows.push(row);
        }
        MobiusTable { rows }
    }

    /// Elements `e` with `a ≤ e ≤ b`.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        self.up[a]
            .iter()
            .copied()
            .filter(|&e| self.le(e, b))
            .collect()
    }
}

/// `μ(a, b)` for every comparable pair `a ≤ b`.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    rows: Vec<HashMap<usize, i64>>,
}

impl MobiusTable {
    /// `None` when `a ≰ b`.
    pub fn get(&self, a: usize, b: usize) -> Option<i64> {
        self.rows[a].get(&b).copied()
    }

    /// All `(a, b, μ(a, b))` with `a ≤ b`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |(&b, &m)| (a, b, m)))
    }

    /// Checks `Σ_{a ≤ e ≤ b} μ(a, e) = δ_{ab}` on every comparable pair.
    pub fn satisfies_defining_identity(&self, p: &Poset) -> bool {
        self.entries().all(|(a, b, _)| {
            let sum: i64 = p.interval(a, b).into_iter().map(|e| self.rows[a][&e]).sum();
            sum == i64::from(a == b)
        })
    }
}
