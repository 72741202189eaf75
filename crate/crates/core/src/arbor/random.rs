//! Seeded random arbors for the recursion-versus-oracle corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Arbor, ArborSpec};

/// Bumped whenever the generator changes, so a seed always names the same
/// corpus within a version.
pub const CORPUS_VERSION: u32 = 1;

/// A random arbor of size `n`: a uniformly random recursive tree on a random
/// number of vertices, decorated by a random ordered set partition of `[n]`.
pub fn random_arbor<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Arbor {
    assert!(n >= 1, "arbor size must be positive");
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    let vertices = rng.gen_range(1..=n);
    // Choose vertices-1 distinct cut points in 1..n to split the labels.
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(vertices - 1).collect();
    cuts.sort_unstable();
    let mut blocks = Vec::with_capacity(vertices);
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&n)) {
        blocks.push(labels[start..c].to_vec());
        start = c;
    }
    let parent: Vec<usize> = (1..vertices).map(|i| rng.gen_range(0..i)).collect();
    fn build(v: usize, blocks: &[Vec<u32>], parent: &[usize]) -> ArborSpec {
        let children = parent
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == v)
            .map(|(i, _)| build(i + 1, blocks, parent))
            .collect();
        ArborSpec {
            labels: blocks[v].clone(),
            children,
        }
    }
    Arbor::from_spec(&build(0, &blocks, &parent)).expect("generator yields a partition")
}

/// `count` arbors with sizes cycling through `1..=max_size`, drawn from a
/// ChaCha8 stream seeded with `seed`.
pub fn random_corpus(seed: u64, count: usize, max_size: usize) -> Vec<Arbor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_arbor(&mut rng, 1 + i % max_size))
        .collect()
}
