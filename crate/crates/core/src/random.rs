//! Random posets for property tests and the verification suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::poset::Poset;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// A random poset on `n` elements: each pair `i < j` is related with
/// probability `density`, then closed transitively.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    // Shuffle ids so the natural order is not always a linear extension.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Poset::from_cover_ids(labels(n), &pairs).expect("acyclic by construction")
}

/// A random graded poset with between 1 and `max_elements` elements.
///
/// Elements are split into consecutive nonempty levels; every element above
/// level 0 covers at least one element of the level below and every element
/// below the top level is covered by one above, so minimal elements are
/// exactly level 0 and maximal elements exactly the top level.
pub fn random_graded_poset<R: Rng + ?Sized>(rng: &mut R, max_elements: usize) -> Poset {
    let n = rng.gen_range(1..=max_elements.max(1));
    let level_count = rng.gen_range(1..=n);
    // Random composition of n into level_count positive parts.
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(level_count - 1).collect();
    cuts.sort_unstable();
    let mut levels = Vec::with_capacity(level_count);
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&n)) {
        levels.push((start..c).collect::<Vec<usize>>());
        start = c;
    }
    let extra = rng.gen_range(0.0..0.6);
    let mut pairs = Vec::new();
    for w in levels.windows(2) {
        let (lower, upper) = (&w[0], &w[1]);
        let mut covered = vec![false; lower.len()];
        for &b in upper {
            let ai = rng.gen_range(0..lower.len());
            pairs.push((lower[ai], b));
            covered[ai] = true;
            for (i, &a) in lower.iter().enumerate() {
                if i != ai && rng.gen_bool(extra) {
                    pairs.push((a, b));
                    covered[i] = true;
                }
            }
        }
        for (i, &a) in lower.iter().enumerate() {
            if !covered[i] {
                pairs.push((a, upper[rng.gen_range(0..upper.len())]));
            }
        }
    }
    let p = Poset::from_cover_ids(labels(n), &pairs).expect("acyclic by construction");
    debug_assert!(p.is_graded());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graded_generator_produces_graded_posets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = random_graded_poset(&mut rng, 12);
            assert!(p.is_graded());
            assert!(p.len() <= 12 && !p.is_empty());
        }
    }

    #[test]
    fn random_poset_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_poset(&mut rng, 6, 0.4);
        assert_eq!(p.len(), 6);
        assert!(random_poset(&mut rng, 0, 0.5).is_empty());
    }
}
