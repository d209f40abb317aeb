use rand::seq::index;
use rand::Rng;

use super::MAX_ORACLE_N;
use crate::error::{Error, Result};
use crate::sequences::IntervalSequencePair;

/// All cells `(a, b)` with `0 <= a <= b <= n - 1`, largest first under the
/// good-order comparator.
fn cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells: Vec<_> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    cells.sort_by(|x, y| y.cmp(x));
    cells
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of good-ordered pairs on `n` vertices: multisets of `n` cells.
pub fn instance_count(n: usize) -> u64 {
    let cells = (n * (n + 1) / 2) as u64;
    if n == 0 {
        return 1;
    }
    binomial(cells + n as u64 - 1, n as u64)
}

/// Every good-ordered pair with `0 <= a_i <= b_i <= n - 1`, each once.
///
/// Instances are non-increasing runs of cells, produced in lexicographic
/// order of their cell indices.
pub fn enumerate_instances(n: usize) -> Result<InstanceIter> {
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    Ok(InstanceIter {
        cells: cells(n),
        index: vec![0; n],
        done: false,
    })
}

pub struct InstanceIter {
    cells: Vec<(usize, usize)>,
    index: Vec<usize>,
    done: bool,
}

impl InstanceIter {
    fn current(&self) -> IntervalSequencePair {
        let (a, b) = self.index.iter().map(|&c| self.cells[c]).unzip();
        IntervalSequencePair::from_parts_unchecked(a, b)
    }

    fn advance(&mut self) {
        let last = self.cells.len().saturating_sub(1);
        match self.index.iter().rposition(|&c| c < last) {
            Some(pos) => {
                let next = self.index[pos] + 1;
                self.index[pos..].fill(next);
            }
            None => self.done = true,
        }
    }
}

impl Iterator for InstanceIter {
    type Item = IntervalSequencePair;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// A uniformly random good-ordered pair on `n` vertices (stars and bars
/// over the cell multiset).
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, n: usize) -> IntervalSequencePair {
    if n == 0 {
        return IntervalSequencePair::from_parts_unchecked(Vec::new(), Vec::new());
    }
    let cells = cells(n);
    let mut picks = index::sample(rng, cells.len() + n - 1, n).into_vec();
    picks.sort_unstable();
    let (a, b) = picks.iter().enumerate().map(|(k, &p)| cells[p - k]).unzip();
    IntervalSequencePair::from_parts_unchecked(a, b)
}

/// `n` uniform in `1..=max_n`, then [`random_instance`].
pub fn random_instance_up_to<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> IntervalSequencePair {
    let n = rng.gen_range(1..=max_n);
    random_instance(rng, n)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn counts() {
        let one: Vec<_> = enumerate_instances(1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!((one[0].a(), one[0].b()), (&[0][..], &[0][..]));
        assert_eq!(enumerate_instances(2).unwrap().count(), 6);
        assert_eq!(instance_count(2), 6);
        assert_eq!(instance_count(3), 56);
        assert_eq!(instance_count(4), 715);
        assert_eq!(instance_count(5), 11628);
        assert_eq!(enumerate_instances(0).unwrap().count(), 1);
        assert!(enumerate_instances(8).is_err());
    }

    #[test]
    fn exhaustive_distinct_and_good_ordered() {
        for n in 0..=5 {
            let all: Vec<_> = enumerate_instances(n).unwrap().collect();
            assert_eq!(all.len() as u64, instance_count(n));
            assert!(all.iter().all(|p| p.is_good_order()));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn sampler_is_seeded_and_valid() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..50)
                .map(|_| random_instance_up_to(&mut rng, 12))
                .collect::<Vec<_>>()
        };
        let first = draw(3);
        assert_eq!(first, draw(3));
        for p in &first {
            assert!(p.is_good_order());
            assert!(p.a().iter().zip(p.b()).all(|(x, y)| x <= y && *y < p.n()));
        }
    }

    #[test]
    fn sampler_reaches_every_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let seen: HashSet<_> = (0..2000).map(|_| random_instance(&mut rng, 3)).collect();
        assert_eq!(seen.len() as u64, instance_count(3));
    }
}
