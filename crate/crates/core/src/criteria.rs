//! Realizability criteria for bound pairs in good order.
//!
//! Every checker evaluates its inequality family verbatim over the stated
//! range of `t` (and `m`, for the Fulkerson form), including `t = 0`, and
//! reports the lexicographically smallest failing index. Checkers never
//! reorder their input; normalize first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realization;
use crate::sequences::{
    berge_sequence, conjugate_sequence, epsilon_unchecked, reduced_range_end, IntervalSequencePair,
};

/// Outcome of one criterion. When `holds` is false, `witness_t` (and
/// `witness_m` for the Fulkerson form) name the first failing inequality
/// and `lhs > rhs` are its two sides. Only the bipartite Ryser check fails
/// without an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub witness_t: Option<usize>,
    pub witness_m: Option<usize>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
}

impl CriterionVerdict {
    pub const HOLDS: Self = Self {
        holds: true,
        witness_t: None,
        witness_m: None,
        lhs: None,
        rhs: None,
    };

    pub const FAILS: Self = Self {
        holds: false,
        ..Self::HOLDS
    };

    pub fn fails_at(t: usize, m: Option<usize>, lhs: i64, rhs: i64) -> Self {
        Self {
            holds: false,
            witness_t: Some(t),
            witness_m: m,
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }
}

/// `holds`, `fails`, or `fails at t=2 (9 > 8)` with `m` when present.
impl fmt::Display for CriterionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return f.write_str("holds");
        }
        f.write_str("fails")?;
        if let Some(t) = self.witness_t {
            write!(f, " at t={t}")?;
        }
        if let Some(m) = self.witness_m {
            write!(f, ", m={m}")?;
        }
        if let (Some(l), Some(r)) = (self.lhs, self.rhs) {
            write!(f, " ({l} > {r})")?;
        }
        Ok(())
    }
}

/// The criteria this crate can evaluate. Declaration order is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    Cdz,
    CdzReduced,
    BergeNecessary,
    BergeSufficient,
    Fulkerson,
    Bollobas,
    Grunbaum,
    Hasselbarth,
    RyserInterval,
    /// The Fulkerson form with `m` quantified existentially instead of
    /// universally. Not part of the default report.
    FulkersonExists,
}

impl Criterion {
    /// Report order: CDZ, CDZ', (1), (1'), (2), (3), (4), (5), Ryser-interval.
    pub const REPORT: [Criterion; 9] = [
        Criterion::Cdz,
        Criterion::CdzReduced,
        Criterion::BergeNecessary,
        Criterion::BergeSufficient,
        Criterion::Fulkerson,
        Criterion::Bollobas,
        Criterion::Grunbaum,
        Criterion::Hasselbarth,
        Criterion::RyserInterval,
    ];

    pub const ALL: [Criterion; 10] = [
        Criterion::Cdz,
        Criterion::CdzReduced,
        Criterion::BergeNecessary,
        Criterion::BergeSufficient,
        Criterion::Fulkerson,
        Criterion::Bollobas,
        Criterion::Grunbaum,
        Criterion::Hasselbarth,
        Criterion::RyserInterval,
        Criterion::FulkersonExists,
    ];

    /// Stable identifier used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Cdz => "cdz",
            Criterion::CdzReduced => "cdz-reduced",
            Criterion::BergeNecessary => "berge-necessary",
            Criterion::BergeSufficient => "berge-sufficient",
            Criterion::Fulkerson => "fulkerson",
            Criterion::Bollobas => "bollobas",
            Criterion::Grunbaum => "grunbaum",
            Criterion::Hasselbarth => "hasselbarth",
            Criterion::RyserInterval => "ryser-interval",
            Criterion::FulkersonExists => "fulkerson-exists",
        }
    }

    /// Short label for tables.
    pub fn label(self) -> &'static str {
        match self {
            Criterion::Cdz => "CDZ",
            Criterion::CdzReduced => "CDZ'",
            Criterion::BergeNecessary => "(1)",
            Criterion::BergeSufficient => "(1')",
            Criterion::Fulkerson => "(2)",
            Criterion::Bollobas => "(3)",
            Criterion::Grunbaum => "(4)",
            Criterion::Hasselbarth => "(5)",
            Criterion::RyserInterval => "Ryser-interval",
            Criterion::FulkersonExists => "(2)-exists",
        }
    }

    /// Whether the criterion is claimed to hold for every realizable pair.
    pub fn claims_necessity(self) -> bool {
        !matches!(self, Criterion::BergeSufficient)
    }

    /// Whether the criterion is claimed to imply realizability.
    pub fn claims_sufficiency(self) -> bool {
        !matches!(self, Criterion::BergeNecessary | Criterion::RyserInterval)
    }

    pub fn check(self, pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
        match self {
            Criterion::Cdz => check_cdz(pair),
            Criterion::CdzReduced => check_cdz_reduced(pair),
            Criterion::BergeNecessary => check_berge_necessary(pair),
            Criterion::BergeSufficient => check_berge_sufficient(pair),
            Criterion::Fulkerson => check_fulkerson(pair),
            Criterion::Bollobas => check_bollobas(pair),
            Criterion::Grunbaum => check_grunbaum(pair),
            Criterion::Hasselbarth => check_hasselbarth(pair),
            Criterion::RyserInterval => realization::check_ryser_interval(pair),
            Criterion::FulkersonExists => check_fulkerson_exists(pair),
        }
    }

    /// Both sides of the criterion's inequality at `(t, m)`, recomputed
    /// from scratch. `m` is required for [`Criterion::Fulkerson`] and
    /// ignored otherwise; `FulkersonExists` reports the best `m`. Returns
    /// `None` for the bipartite check and for indices outside the range.
    pub fn evaluate_at(
        self,
        pair: &IntervalSequencePair,
        t: usize,
        m: Option<usize>,
    ) -> Option<(i64, i64)> {
        let n = pair.n();
        if t > n {
            return None;
        }
        let (a, b) = (pair.a(), pair.b());
        let lhs = sum(&a[..t]);
        let eps = epsilon_unchecked(pair, t);
        let t64 = t as i64;
        let rhs = match self {
            Criterion::Cdz => t64 * (t64 - 1) + sum_min(&b[t..], t) - eps,
            Criterion::CdzReduced => {
                if t > reduced_range_end(a) {
                    return None;
                }
                t64 * (t64 - 1) + sum_min(&b[t..], t) - eps
            }
            Criterion::BergeNecessary => sum(&berge_sequence(b).ok()?[..t]),
            Criterion::BergeSufficient => sum(&berge_sequence(b).ok()?[..t]) - eps,
            Criterion::Fulkerson => {
                let m = m?;
                if m > n - t {
                    return None;
                }
                fulkerson_rhs(b, t, m) - eps
            }
            Criterion::FulkersonExists => (0..=n - t).map(|m| fulkerson_rhs(b, t, m)).max()? - eps,
            Criterion::Bollobas => {
                sum(&b[t..]) + a[..t].iter().map(|&x| (x as i64).min(t64 - 1)).sum::<i64>() - eps
            }
            Criterion::Grunbaum => {
                let lhs = a[..t].iter().map(|&x| (x as i64).max(t64 - 1)).sum();
                return Some((lhs, t64 * (t64 - 1) + sum(&b[t..]) - eps));
            }
            Criterion::Hasselbarth => {
                if t + 1 > reduced_range_end(a) {
                    return None;
                }
                let conj = conjugate_sequence(b);
                conj[..t].iter().map(|&x| x as i64 - 1).sum::<i64>() - eps
            }
            Criterion::RyserInterval => return None,
        };
        Some((lhs, rhs))
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s || c.label() == s)
            .ok_or_else(|| Error::UnknownCriterion(s.to_string()))
    }
}

fn sum(x: &[usize]) -> i64 {
    x.iter().map(|&v| v as i64).sum()
}

fn sum_min(x: &[usize], cap: usize) -> i64 {
    x.iter().map(|&v| v.min(cap) as i64).sum()
}

fn fulkerson_rhs(b: &[usize], t: usize, m: usize) -> i64 {
    let n = b.len() as i64;
    t as i64 * (n - m as i64 - 1) + sum(&b[b.len() - m..])
}

/// First `t` in `range` with `lhs(t) > rhs(t)`.
fn first_failure(
    range: impl IntoIterator<Item = usize>,
    mut sides: impl FnMut(usize) -> (i64, i64),
) -> CriterionVerdict {
    for t in range {
        let (lhs, rhs) = sides(t);
        if lhs > rhs {
            return CriterionVerdict::fails_at(t, None, lhs, rhs);
        }
    }
    CriterionVerdict::HOLDS
}

/// Prefix sums with `p[t] = x_1 + ... + x_t`.
fn prefix_sums(x: &[usize]) -> Vec<i64> {
    let mut p = Vec::with_capacity(x.len() + 1);
    p.push(0);
    for &v in x {
        p.push(p.last().unwrap() + v as i64);
    }
    p
}

fn cdz_over(pair: &IntervalSequencePair, last_t: usize) -> CriterionVerdict {
    let pa = prefix_sums(pair.a());
    let b = pair.b();
    first_failure(0..=last_t, |t| {
        let t64 = t as i64;
        let rhs = t64 * (t64 - 1) + sum_min(&b[t..], t) - epsilon_unchecked(pair, t);
        (pa[t], rhs)
    })
}

/// `sum_{i<=t} a_i <= t(t-1) + sum_{i>t} min(t, b_i) - eps(t)` for `0 <= t <= n`.
pub fn check_cdz(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    Ok(cdz_over(pair, pair.n()))
}

/// Same inequality restricted to `0 <= t <= s`, `s = max{i : a_i >= i - 1}`.
pub fn check_cdz_reduced(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    Ok(cdz_over(pair, reduced_range_end(pair.a())))
}

fn berge_prefix_check(pair: &IntervalSequencePair, with_parity: bool) -> CriterionVerdict {
    let pa = prefix_sums(pair.a());
    let berge = berge_sequence(pair.b()).expect("upper bounds are clamped below n");
    let pb = prefix_sums(&berge);
    first_failure(0..=pair.n(), |t| {
        let eps = if with_parity {
            epsilon_unchecked(pair, t)
        } else {
            0
        };
        (pa[t], pb[t] - eps)
    })
}

/// Prefix sums of `A` bounded by prefix sums of the Berge sequence of `B`.
/// Necessary only.
pub fn check_berge_necessary(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    Ok(berge_prefix_check(pair, false))
}

/// The Berge bound tightened by `eps(t)`. Sufficient only.
pub fn check_berge_sufficient(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    Ok(berge_prefix_check(pair, true))
}

/// `sum_{i<=t} a_i <= t(n-m-1) + sum_{i>n-m} b_i - eps(t)` for every
/// `0 <= t <= n` and every `0 <= m <= n - t`.
pub fn check_fulkerson(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    let n = pair.n() as i64;
    let pa = prefix_sums(pair.a());
    let b = pair.b();
    for (t, &lhs) in pa.iter().enumerate() {
        let eps = epsilon_unchecked(pair, t);
        let mut suffix = 0i64;
        for m in 0..=pair.n() - t {
            if m > 0 {
                suffix += b[pair.n() - m] as i64;
            }
            let rhs = t as i64 * (n - m as i64 - 1) + suffix - eps;
            if lhs > rhs {
                return Ok(CriterionVerdict::fails_at(t, Some(m), lhs, rhs));
            }
        }
    }
    Ok(CriterionVerdict::HOLDS)
}

/// The Fulkerson form where each `t` only needs some admissible `m`. A
/// failure reports the best right-hand side over `m`.
pub fn check_fulkerson_exists(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    let pa = prefix_sums(pair.a());
    let b = pair.b();
    Ok(first_failure(0..=pair.n(), |t| {
        let best = (0..=pair.n() - t)
            .map(|m| fulkerson_rhs(b, t, m))
            .max()
            .unwrap();
        (pa[t], best - epsilon_unchecked(pair, t))
    }))
}

/// `sum_{i<=t} a_i <= sum_{i>t} b_i + sum_{i<=t} min(a_i, t-1) - eps(t)`.
pub fn check_bollobas(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    let (a, b) = (pair.a(), pair.b());
    let pa = prefix_sums(a);
    Ok(first_failure(0..=pair.n(), |t| {
        let capped: i64 = a[..t].iter().map(|&x| (x as i64).min(t as i64 - 1)).sum();
        (pa[t], sum(&b[t..]) + capped - epsilon_unchecked(pair, t))
    }))
}

/// `sum_{i<=t} max(t-1, a_i) <= t(t-1) + sum_{i>t} b_i - eps(t)`.
pub fn check_grunbaum(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    let (a, b) = (pair.a(), pair.b());
    Ok(first_failure(0..=pair.n(), |t| {
        let t64 = t as i64;
        let lhs = a[..t].iter().map(|&x| (x as i64).max(t64 - 1)).sum();
        (
            lhs,
            t64 * (t64 - 1) + sum(&b[t..]) - epsilon_unchecked(pair, t),
        )
    }))
}

/// `sum_{i<=t} a_i <= sum_{i<=t} (b*_i - 1) - eps(t)` for `0 <= t <= s - 1`.
pub fn check_hasselbarth(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    pair.require_good_order()?;
    let s = reduced_range_end(pair.a());
    let pa = prefix_sums(pair.a());
    let conj = conjugate_sequence(pair.b());
    let mut pc = vec![0i64; conj.len() + 1];
    for (j, &v) in conj.iter().enumerate() {
        pc[j + 1] = pc[j] + v as i64 - 1;
    }
    Ok(first_failure(0..s, |t| {
        (pa[t], pc[t] - epsilon_unchecked(pair, t))
    }))
}

/// The classical fixed-sequence test: even sum and
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)` for `1 <= k <= n`.
///
/// An odd sum is reported as a failure at `t = 0` with `lhs = 0, rhs = -1`,
/// the same shape the parity correction gives CDZ.
pub fn check_erdos_gallai_fixed(d: &[usize]) -> Result<CriterionVerdict> {
    if let Some(i) = d.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotNonIncreasing { index: i + 1 });
    }
    if d.iter().sum::<usize>() % 2 == 1 {
        return Ok(CriterionVerdict::fails_at(0, None, 0, -1));
    }
    let pd = prefix_sums(d);
    Ok(first_failure(1..=d.len(), |k| {
        let k64 = k as i64;
        (pd[k], k64 * (k64 - 1) + sum_min(&d[k..], k))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedVerdict {
    pub criterion: Criterion,
    pub label: &'static str,
    #[serde(flatten)]
    pub verdict: CriterionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub verdicts: Vec<NamedVerdict>,
    /// False if the full and reduced CDZ checks disagree.
    pub consistent: bool,
}

impl CriteriaReport {
    pub fn get(&self, criterion: Criterion) -> Option<&CriterionVerdict> {
        self.verdicts
            .iter()
            .find(|v| v.criterion == criterion)
            .map(|v| &v.verdict)
    }
}

/// Every criterion in [`Criterion::REPORT`] order.
pub fn criteria_report(pair: &IntervalSequencePair) -> Result<CriteriaReport> {
    pair.require_good_order()?;
    let verdicts = Criterion::REPORT
        .iter()
        .map(|&criterion| {
            Ok(NamedVerdict {
                criterion,
                label: criterion.label(),
                verdict: criterion.check(pair)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = CriteriaReport {
        verdicts,
        consistent: true,
    };
    report.consistent = report.get(Criterion::Cdz) == report.get(Criterion::CdzReduced);
    Ok(report)
}
