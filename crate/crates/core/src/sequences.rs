//! Bound pairs, their normal form, and the sequence transforms the
//! criteria are written in terms of.
//!
//! Index conventions: a prefix length `t` counts vertices, so `t = 0` is
//! the empty prefix and `t = n` is everything. Vertex positions in returned
//! index sets are 0-based.

use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A plain vector of nonnegative integers: degrees, Berge sequences,
/// conjugates, tilde sequences. Monotonicity is not assumed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Self {
        Self(d)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_non_increasing(&self) -> bool {
        is_non_increasing(&self.0)
    }
}

impl Deref for DegreeSequence {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(d: Vec<usize>) -> Self {
        Self(d)
    }
}

impl PartialEq<[usize]> for DegreeSequence {
    fn eq(&self, other: &[usize]) -> bool {
        self.0 == other
    }
}

impl<const N: usize> PartialEq<[usize; N]> for DegreeSequence {
    fn eq(&self, other: &[usize; N]) -> bool {
        self.0 == other
    }
}

/// Lower and upper degree bounds `a_i <= b_i <= n - 1` for `n` vertices.
///
/// Construct with [`validate_and_clamp`]; the invariants hold for every
/// value of this type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntervalSequencePair {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl IntervalSequencePair {
    /// Same as [`validate_and_clamp`].
    pub fn new(a: &[usize], b: &[usize]) -> Result<Self> {
        validate_and_clamp(a, b)
    }

    /// Caller guarantees equal lengths and `a_i <= b_i <= n - 1`.
    pub(crate) fn from_parts_unchecked(a: Vec<usize>, b: Vec<usize>) -> Self {
        debug_assert_eq!(a.len(), b.len());
        debug_assert!(a.iter().zip(&b).all(|(x, y)| x <= y && *y < a.len()));
        Self { a, b }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_good_order(&self) -> bool {
        is_good_order(self)
    }

    /// Fails with `NotGoodOrder` at the first position that breaks good order.
    pub fn require_good_order(&self) -> Result<()> {
        match first_order_violation(&self.a, &self.b) {
            Some(index) => Err(Error::NotGoodOrder { index }),
            None => Ok(()),
        }
    }
}

/// Checks lengths and bounds, clamping every `b_i` to `n - 1`.
pub fn validate_and_clamp(a: &[usize], b: &[usize]) -> Result<IntervalSequencePair> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    let n = a.len();
    let max = n.saturating_sub(1);
    let mut clamped = Vec::with_capacity(n);
    for (index, (&lo, &hi)) in a.iter().zip(b).enumerate() {
        if lo > max {
            return Err(Error::LowerExceedsMaxDegree { index, a: lo, max });
        }
        let hi = hi.min(max);
        if lo > hi {
            return Err(Error::LowerExceedsUpper {
                index,
                a: lo,
                b: hi,
            });
        }
        clamped.push(hi);
    }
    Ok(IntervalSequencePair {
        a: a.to_vec(),
        b: clamped,
    })
}

/// `(a', b') ⪯ (a, b)`: strictly smaller lower bound, or equal lower bound
/// and no larger upper bound.
pub fn precedes_or_equal(next: (usize, usize), prev: (usize, usize)) -> bool {
    next.0 < prev.0 || (next.0 == prev.0 && next.1 <= prev.1)
}

fn first_order_violation(a: &[usize], b: &[usize]) -> Option<usize> {
    (1..a.len()).find(|&i| !precedes_or_equal((a[i], b[i]), (a[i - 1], b[i - 1])))
}

pub fn is_good_order(pair: &IntervalSequencePair) -> bool {
    first_order_violation(&pair.a, &pair.b).is_none()
}

/// A pair in good order together with the permutation back to input order:
/// normalized position `k` came from original position `perm[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedInstance {
    pub pair: IntervalSequencePair,
    pub perm: Vec<usize>,
}

impl NormalizedInstance {
    /// Scatters per-position values of the normalized pair back to the
    /// original vertex order.
    pub fn to_original<T: Clone + Default>(&self, values: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); values.len()];
        for (k, v) in values.iter().enumerate() {
            out[self.perm[k]] = v.clone();
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }
}

/// Validates, then stable-sorts the `(a_i, b_i)` cells into good order.
pub fn normalize_good_order(a: &[usize], b: &[usize]) -> Result<NormalizedInstance> {
    let pair = validate_and_clamp(a, b)?;
    let mut perm: Vec<usize> = (0..pair.n()).collect();
    perm.sort_by(|&i, &j| cmp_cells_descending((pair.a[i], pair.b[i]), (pair.a[j], pair.b[j])));
    let a = perm.iter().map(|&i| pair.a[i]).collect();
    let b = perm.iter().map(|&i| pair.b[i]).collect();
    Ok(NormalizedInstance {
        pair: IntervalSequencePair { a, b },
        perm,
    })
}

pub(crate) fn cmp_cells_descending(x: (usize, usize), y: (usize, usize)) -> Ordering {
    y.cmp(&x)
}

pub fn is_non_increasing(x: &[usize]) -> bool {
    x.windows(2).all(|w| w[0] >= w[1])
}

fn require_non_increasing(x: &[usize]) -> Result<()> {
    match x.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(Error::NotNonIncreasing { index: i + 1 }),
        None => Ok(()),
    }
}

/// Column sums of the 0-1 matrix whose row `k` has `b_k` ones in its
/// leading columns, skipping the diagonal cell.
pub fn berge_sequence(b: &[usize]) -> Result<DegreeSequence> {
    let n = b.len();
    if let Some((index, &value)) = b.iter().enumerate().find(|(_, &v)| v + 1 > n) {
        return Err(Error::EntryTooLarge {
            index,
            value,
            max: n.saturating_sub(1),
        });
    }
    // diff[j] accumulates +1 at a run start and -1 one past its end.
    let mut diff = vec![0isize; n + 1];
    for (k, &len) in b.iter().enumerate() {
        if len == 0 {
            continue;
        }
        if len <= k {
            diff[0] += 1;
            diff[len] -= 1;
        } else {
            // columns 0..=len minus the diagonal k
            diff[0] += 1;
            diff[len + 1] -= 1;
            diff[k] -= 1;
            diff[k + 1] += 1;
        }
    }
    let mut acc = 0isize;
    let out = diff[..n]
        .iter()
        .map(|d| {
            acc += d;
            acc as usize
        })
        .collect();
    Ok(DegreeSequence(out))
}

/// `b*_j = #{i : b_i >= j}` for `j = 1..=n`, the Ferrers transpose.
pub fn conjugate_sequence(b: &[usize]) -> DegreeSequence {
    let n = b.len();
    let mut at_least = vec![0usize; n + 2];
    for &v in b {
        at_least[v.min(n + 1)] += 1;
    }
    for j in (0..=n).rev() {
        at_least[j] += at_least[j + 1];
    }
    DegreeSequence(at_least[1..=n].to_vec())
}

/// `max{i : x_i >= i}` over 1-based positions, 0 when no position qualifies.
pub fn crossing_index(x: &[usize]) -> usize {
    x.iter()
        .enumerate()
        .rev()
        .find(|(i, &v)| v > *i)
        .map_or(0, |(i, _)| i + 1)
}

/// `max{i : a_i >= i - 1}`; at least 1 whenever `n >= 1`.
pub fn reduced_range_end(a: &[usize]) -> usize {
    a.iter()
        .enumerate()
        .rev()
        .find(|(i, &v)| v + 1 > *i)
        .map_or(0, |(i, _)| i + 1)
}

/// Adds 1 to the first `g` entries, `g` being the sequence's own crossing
/// index.
pub fn tilde_sequence(x: &[usize]) -> Result<DegreeSequence> {
    require_non_increasing(x)?;
    Ok(tilde_by_crossing(x))
}

/// [`tilde_sequence`] without the monotonicity check. Upper bound vectors
/// in good order need not be non-increasing.
pub(crate) fn tilde_by_crossing(x: &[usize]) -> DegreeSequence {
    let g = crossing_index(x);
    DegreeSequence(
        x.iter()
            .enumerate()
            .map(|(i, &v)| if i < g { v + 1 } else { v })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexProfile {
    /// `max{i : a_i >= i - 1}`
    pub s: usize,
    /// `max{i : a_i >= i}`
    pub g_a: usize,
    /// `max{i : b_i >= i}`
    pub g_b: usize,
}

pub fn crossing_indices(pair: &IntervalSequencePair) -> IndexProfile {
    IndexProfile {
        s: reduced_range_end(&pair.a),
        g_a: crossing_index(&pair.a),
        g_b: crossing_index(&pair.b),
    }
}

fn check_prefix(t: usize, n: usize) -> Result<()> {
    if t > n {
        Err(Error::IndexOutOfRange { t, max: n })
    } else {
        Ok(())
    }
}

/// Positions `i` (0-based) with `i >= t` and `b_i >= t + 1`.
pub fn index_set_it(pair: &IntervalSequencePair, t: usize) -> Result<Vec<usize>> {
    check_prefix(t, pair.n())?;
    Ok((t..pair.n()).filter(|&i| pair.b[i] > t).collect())
}

/// Parity correction: 1 when every bound indexed by `I_t` is fixed and
/// `sum_{I_t} b_i + t |I_t|` is odd, else 0. Empty `I_t` gives 0.
pub fn epsilon(pair: &IntervalSequencePair, t: usize) -> Result<i64> {
    check_prefix(t, pair.n())?;
    Ok(epsilon_unchecked(pair, t))
}

pub(crate) fn epsilon_unchecked(pair: &IntervalSequencePair, t: usize) -> i64 {
    let mut sum = 0usize;
    let mut size = 0usize;
    for i in t..pair.n() {
        if pair.b[i] > t {
            if pair.a[i] != pair.b[i] {
                return 0;
            }
            sum += pair.b[i];
            size += 1;
        }
    }
    ((sum + t * size) % 2) as i64
}

/// Both max-sum identities over the prefix of length `t`.
pub fn lemma31_identities_hold(p: &[usize], t: usize) -> Result<bool> {
    if t == 0 || t > p.len() {
        return Err(Error::IndexOutOfRange { t, max: p.len() });
    }
    let t1 = t as i64 - 1;
    let prefix = p[..t].iter().map(|&x| x as i64);
    let lhs: i64 = prefix.clone().map(|x| x + (-t1).max(-x)).sum();
    let first: i64 = prefix.clone().map(|x| (x - t1).max(0)).sum();
    let second: i64 = prefix.map(|x| x.max(t1) - t1).sum();
    Ok(lhs == first && lhs == second)
}

/// For non-increasing `d` with entries at most `n - 1`: every prefix of the
/// Berge sequence up to the crossing index equals the matching prefix of
/// `d* - 1`.
pub fn berge_conjugate_prefix_identity(d: &[usize]) -> Result<bool> {
    require_non_increasing(d)?;
    let berge = berge_sequence(d)?;
    let conj = conjugate_sequence(d);
    let f = crossing_index(d);
    let (mut lhs, mut rhs) = (0i64, 0i64);
    for k in 0..f {
        lhs += berge[k] as i64;
        rhs += conj[k] as i64 - 1;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &[usize], b: &[usize]) -> IntervalSequencePair {
        validate_and_clamp(a, b).unwrap()
    }

    fn counterexample() -> IntervalSequencePair {
        pair(&[5, 4, 3, 3, 3, 1], &[5, 5, 3, 3, 3, 1])
    }

    #[test]
    fn clamp_and_reject() {
        let p = counterexample();
        assert_eq!(p.b(), &[5, 5, 3, 3, 3, 1]);
        assert_eq!(pair(&[0, 0], &[9, 9]).b(), &[1, 1]);
        assert_eq!(
            validate_and_clamp(&[3, 0], &[3, 3]),
            Err(Error::LowerExceedsMaxDegree {
                index: 0,
                a: 3,
                max: 1
            })
        );
        assert_eq!(
            validate_and_clamp(&[1, 2], &[1]),
            Err(Error::LengthMismatch { a: 2, b: 1 })
        );
        assert_eq!(
            validate_and_clamp(&[0, 2, 0], &[0, 1, 0]),
            Err(Error::LowerExceedsUpper {
                index: 1,
                a: 2,
                b: 1
            })
        );
        assert!(validate_and_clamp(&[], &[]).unwrap().is_empty());
    }

    #[test]
    fn good_order() {
        assert!(counterexample().is_good_order());
        // padded to n = 5 so the bounds survive clamping
        assert!(!pair(&[3, 4, 0, 0, 0], &[4, 4, 0, 0, 0]).is_good_order());
        assert!(!pair(&[3, 3, 0, 0, 0], &[3, 4, 0, 0, 0]).is_good_order());
        assert_eq!(
            pair(&[3, 3, 0, 0, 0], &[3, 4, 0, 0, 0]).require_good_order(),
            Err(Error::NotGoodOrder { index: 1 })
        );
    }

    #[test]
    fn normalize() {
        let norm = normalize_good_order(&[1, 3, 0, 0], &[2, 3, 0, 0]).unwrap();
        assert_eq!(norm.pair.a(), &[3, 1, 0, 0]);
        assert_eq!(norm.pair.b(), &[3, 2, 0, 0]);
        assert_eq!(norm.perm, vec![1, 0, 2, 3]);

        let norm = normalize_good_order(&[5, 4, 3, 3, 3, 1], &[5, 5, 3, 3, 3, 1]).unwrap();
        assert!(norm.is_identity());
    }

    #[test]
    fn normalize_unclamped_tie() {
        // n = 5 leaves room for b = 4 so the tie-break on b is visible.
        let norm = normalize_good_order(&[3, 3, 0, 0, 0], &[3, 4, 0, 0, 0]).unwrap();
        assert_eq!(norm.pair.a(), &[3, 3, 0, 0, 0]);
        assert_eq!(norm.pair.b(), &[4, 3, 0, 0, 0]);
        assert_eq!(norm.perm, vec![1, 0, 2, 3, 4]);
        assert_eq!(norm.to_original(norm.pair.b()), vec![3, 4, 0, 0, 0]);
    }

    #[test]
    fn berge() {
        assert_eq!(berge_sequence(&[4, 2, 2, 2, 1]).unwrap(), [4, 3, 2, 1, 1]);
        assert_eq!(
            berge_sequence(&[5, 5, 3, 3, 3, 1]).unwrap(),
            [5, 4, 4, 3, 2, 2]
        );
        assert_eq!(berge_sequence(&[0, 0, 0]).unwrap(), [0, 0, 0]);
        assert_eq!(berge_sequence(&[3, 3, 1, 1]).unwrap(), [3, 1, 2, 2]);
        assert_eq!(
            berge_sequence(&[0, 2]),
            Err(Error::EntryTooLarge {
                index: 1,
                value: 2,
                max: 1
            })
        );
    }

    #[test]
    fn conjugate() {
        assert_eq!(conjugate_sequence(&[5, 5, 3, 3, 3, 1]), [6, 5, 5, 2, 2, 0]);
        assert_eq!(conjugate_sequence(&[4, 2, 2, 2, 1]), [5, 4, 1, 1, 0]);
        assert_eq!(conjugate_sequence(&[0, 0]), [0, 0]);
        assert_eq!(conjugate_sequence(&[]), [0usize; 0]);
    }

    #[test]
    fn tilde() {
        assert_eq!(
            tilde_sequence(&[5, 4, 3, 3, 3, 1]).unwrap(),
            [6, 5, 4, 3, 3, 1]
        );
        assert_eq!(
            tilde_sequence(&[5, 5, 3, 3, 3, 1]).unwrap(),
            [6, 6, 4, 3, 3, 1]
        );
        assert_eq!(tilde_sequence(&[0, 0, 0]).unwrap(), [0, 0, 0]);
        assert_eq!(
            tilde_sequence(&[1, 2]),
            Err(Error::NotNonIncreasing { index: 1 })
        );
    }

    #[test]
    fn index_sets() {
        let p = counterexample();
        // 1-based {3,4,5}
        assert_eq!(index_set_it(&p, 2).unwrap(), vec![2, 3, 4]);
        assert!(index_set_it(&p, 6).unwrap().is_empty());
        assert_eq!(
            index_set_it(&p, 7),
            Err(Error::IndexOutOfRange { t: 7, max: 6 })
        );
        let tri = pair(&[2, 2, 2], &[2, 2, 2]);
        assert_eq!(index_set_it(&tri, 1).unwrap(), vec![1, 2]);
    }

    #[test]
    fn parity_correction() {
        assert_eq!(epsilon(&counterexample(), 2).unwrap(), 1);
        assert_eq!(epsilon(&pair(&[2, 2, 2], &[2, 2, 2]), 0).unwrap(), 0);
        assert_eq!(epsilon(&pair(&[0], &[0]), 0).unwrap(), 0);
        assert_eq!(epsilon(&pair(&[1, 1, 1], &[1, 1, 1]), 0).unwrap(), 1);
        // n = 2 so that b_1 = 1 survives clamping
        assert_eq!(epsilon(&pair(&[0, 0], &[1, 1]), 0).unwrap(), 0);
        let p = counterexample();
        assert_eq!(epsilon(&p, p.n()).unwrap(), 0);
    }

    #[test]
    fn profile() {
        let prof = crossing_indices(&counterexample());
        assert_eq!(
            prof,
            IndexProfile {
                s: 4,
                g_a: 3,
                g_b: 3
            }
        );
        let prof = crossing_indices(&pair(&[0], &[0]));
        assert_eq!((prof.s, prof.g_a), (1, 0));
        assert_eq!(crossing_indices(&pair(&[], &[])).s, 0);
    }

    #[test]
    fn max_sum_identities() {
        assert!(lemma31_identities_hold(&[5, 4, 3], 3).unwrap());
        assert!(lemma31_identities_hold(&[0; 6], 4).unwrap());
        assert!(lemma31_identities_hold(&[1], 1).unwrap());
        assert!(lemma31_identities_hold(&[1], 0).is_err());
        assert!(lemma31_identities_hold(&[1], 2).is_err());
    }

    #[test]
    fn prefix_identity_worked_example() {
        let d = [4, 2, 2, 2, 1];
        assert_eq!(crossing_index(&d), 2);
        assert!(berge_conjugate_prefix_identity(&d).unwrap());
    }
}
