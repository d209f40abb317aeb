use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_instances, oracle_decide, random_instance, MAX_ORACLE_N};
use crate::criteria::{Criterion, CriterionVerdict};
use crate::error::{Error, Result};
use crate::sequences::{validate_and_clamp, IntervalSequencePair};

pub const DEFAULT_SAMPLE_COUNT: u64 = 10_000;

/// Counterexamples kept per (criterion, direction); tallies count them all.
pub const MAX_LISTED_PER_KIND: usize = 100;

const CHUNK: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub count: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    /// CDZ is always evaluated, whether listed or not.
    pub criteria: Vec<Criterion>,
    /// `None` sweeps every instance; otherwise draws uniformly with the seed.
    pub sample: Option<Sampling>,
}

impl SweepConfig {
    pub fn exhaustive(n: usize, criteria: &[Criterion]) -> Self {
        Self {
            n,
            criteria: criteria.to_vec(),
            sample: None,
        }
    }

    pub fn sampled(n: usize, criteria: &[Criterion], count: u64, seed: u64) -> Self {
        Self {
            n,
            criteria: criteria.to_vec(),
            sample: Some(Sampling { count, seed }),
        }
    }
}

/// Which claimed implication an instance breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Realizable, yet the criterion fails.
    Necessity,
    /// The criterion holds, yet the pair is not realizable.
    Sufficiency,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub criterion: Criterion,
    pub direction: Direction,
    pub verdict: CriterionVerdict,
}

impl Counterexample {
    /// Recomputes oracle and criterion and checks they still disagree in
    /// the recorded direction with the recorded verdict.
    pub fn reverify(&self) -> Result<bool> {
        let pair = validate_and_clamp(&self.a, &self.b)?;
        let realizable = oracle_decide(&pair)?;
        let verdict = self.criterion.check(&pair)?;
        let broken = match self.direction {
            Direction::Necessity => realizable && !verdict.holds,
            Direction::Sufficiency => !realizable && verdict.holds,
        };
        Ok(broken && verdict == self.verdict)
    }
}

/// The four oracle-by-criterion cells for one criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionTally {
    pub criterion: Criterion,
    pub label: &'static str,
    pub realizable_holds: u64,
    pub realizable_fails: u64,
    pub unrealizable_holds: u64,
    pub unrealizable_fails: u64,
}

impl CriterionTally {
    fn new(criterion: Criterion) -> Self {
        Self {
            criterion,
            label: criterion.label(),
            realizable_holds: 0,
            realizable_fails: 0,
            unrealizable_holds: 0,
            unrealizable_fails: 0,
        }
    }

    pub fn total(&self) -> u64 {
        self.realizable_holds
            + self.realizable_fails
            + self.unrealizable_holds
            + self.unrealizable_fails
    }

    /// Instances where criterion and oracle differ, in either direction.
    pub fn disagreements(&self) -> u64 {
        self.realizable_fails + self.unrealizable_holds
    }

    /// Violations of the directions the criterion is claimed to satisfy.
    pub fn claimed_violations(&self) -> u64 {
        let mut v = 0;
        if self.criterion.claims_necessity() {
            v += self.realizable_fails;
        }
        if self.criterion.claims_sufficiency() {
            v += self.unrealizable_holds;
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub sample: Option<Sampling>,
    pub instance_count: u64,
    pub realizable_count: u64,
    pub criteria: Vec<CriterionTally>,
    /// Violations of claimed directions, in enumeration order, at most
    /// [`MAX_LISTED_PER_KIND`] per criterion and direction.
    pub counterexamples: Vec<Counterexample>,
    /// Wall time; left out of JSON so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn tally(&self, criterion: Criterion) -> Option<&CriterionTally> {
        self.criteria.iter().find(|t| t.criterion == criterion)
    }

    pub fn cdz_disagreements(&self) -> u64 {
        self.tally(Criterion::Cdz)
            .map_or(0, CriterionTally::disagreements)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        sorted_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mode = match self.sample {
            None => "exhaustive".to_string(),
            Some(s) => format!("sampled {} (seed {})", s.count, s.seed),
        };
        let _ = writeln!(
            out,
            "n = {}, {mode}: {} instances, {} realizable",
            self.n, self.instance_count, self.realizable_count
        );
        let _ = writeln!(
            out,
            "{:<16} {:>10} {:>10} {:>10} {:>10} {:>10}",
            "criterion", "R&holds", "R&fails", "U&holds", "U&fails", "claimed"
        );
        for t in &self.criteria {
            let _ = writeln!(
                out,
                "{:<16} {:>10} {:>10} {:>10} {:>10} {:>10}",
                t.label,
                t.realizable_holds,
                t.realizable_fails,
                t.unrealizable_holds,
                t.unrealizable_fails,
                t.claimed_violations()
            );
        }
        if !self.counterexamples.is_empty() {
            let _ = writeln!(out, "counterexamples (claimed direction broken):");
            for c in &self.counterexamples {
                let _ = writeln!(
                    out,
                    "  {:<16} {:<11} A={:?} B={:?}: {}",
                    c.criterion.label(),
                    json_name(&c.direction),
                    c.a,
                    c.b,
                    c.verdict
                );
            }
        }
        out
    }
}

fn json_name<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub(crate) fn sorted_json<T: Serialize>(value: &T) -> String {
    // serde_json's default map is a BTreeMap, so going through Value sorts keys.
    let value = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

struct Evaluated {
    realizable: bool,
    verdicts: Vec<CriterionVerdict>,
}

fn evaluate(pair: &IntervalSequencePair, criteria: &[Criterion]) -> Result<Evaluated> {
    Ok(Evaluated {
        realizable: oracle_decide(pair)?,
        verdicts: criteria
            .iter()
            .map(|c| c.check(pair))
            .collect::<Result<_>>()?,
    })
}

/// Compares the oracle with each requested criterion on every instance of
/// size `n` (or a seeded uniform sample).
pub fn cross_validate(config: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let n = config.n;
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    let mut criteria = config.criteria.clone();
    if !criteria.contains(&Criterion::Cdz) {
        criteria.insert(0, Criterion::Cdz);
    }
    let mut report = SweepReport {
        n,
        sample: config.sample,
        instance_count: 0,
        realizable_count: 0,
        criteria: criteria.iter().map(|&c| CriterionTally::new(c)).collect(),
        counterexamples: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let mut listed = vec![[0usize; 2]; criteria.len()];

    let mut absorb = |chunk: &[IntervalSequencePair]| -> Result<()> {
        let results: Vec<Evaluated> = chunk
            .par_iter()
            .map(|p| evaluate(p, &criteria))
            .collect::<Result<_>>()?;
        for (pair, ev) in chunk.iter().zip(results) {
            report.instance_count += 1;
            report.realizable_count += u64::from(ev.realizable);
            for (k, verdict) in ev.verdicts.iter().enumerate() {
                let tally = &mut report.criteria[k];
                let direction = match (ev.realizable, verdict.holds) {
                    (true, true) => {
                        tally.realizable_holds += 1;
                        None
                    }
                    (true, false) => {
                        tally.realizable_fails += 1;
                        tally
                            .criterion
                            .claims_necessity()
                            .then_some(Direction::Necessity)
                    }
                    (false, true) => {
                        tally.unrealizable_holds += 1;
                        tally
                            .criterion
                            .claims_sufficiency()
                            .then_some(Direction::Sufficiency)
                    }
                    (false, false) => {
                        tally.unrealizable_fails += 1;
                        None
                    }
                };
                if let Some(direction) = direction {
                    let slot = &mut listed[k][direction as usize];
                    if *slot < MAX_LISTED_PER_KIND {
                        *slot += 1;
                        report.counterexamples.push(Counterexample {
                            a: pair.a().to_vec(),
                            b: pair.b().to_vec(),
                            criterion: tally.criterion,
                            direction,
                            verdict: *verdict,
                        });
                    }
                }
            }
        }
        Ok(())
    };

    match config.sample {
        None => {
            let mut iter = enumerate_instances(n)?;
            loop {
                let chunk: Vec<_> = iter.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                absorb(&chunk)?;
            }
        }
        Some(Sampling { count, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut remaining = count;
            while remaining > 0 {
                let take = remaining.min(CHUNK as u64);
                let chunk: Vec<_> = (0..take).map(|_| random_instance(&mut rng, n)).collect();
                absorb(&chunk)?;
                remaining -= take;
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
