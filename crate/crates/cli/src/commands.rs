use std::fmt::Write as _;

use degbox_core::oracle::{implication_matrix, MAX_MATRIX_N, MAX_ORACLE_N};
use degbox_core::sequences::berge_conjugate_prefix_identity;
use degbox_core::{
    berge_sequence, conjugate_sequence, criteria_report, cross_validate, lemma31_identities_hold,
    normalize_good_order, oracle_realizable, realize_pair, verify_witness, Criterion, SweepConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::instance::{InstanceSpec, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] degbox_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub const EXIT_CODE: u8 = 2;
}

/// What a subcommand prints on stdout and the code it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn new(affirmative: bool, stdout: String) -> Self {
        Self {
            code: if affirmative { 0 } else { 1 },
            stdout,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Format {
    pub json: bool,
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("output serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

fn one_based(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|&i| i + 1).collect()
}

pub fn check(spec: &InstanceSpec, oracle: bool, fmt: Format) -> Result<Outcome, CliError> {
    let norm = normalize_good_order(&spec.a, &spec.b)?;
    let report = criteria_report(&norm.pair)?;
    let oracle = match (oracle, norm.pair.n() <= MAX_ORACLE_N) {
        (true, true) => Some(oracle_realizable(&norm.pair)?),
        _ => None,
    };
    let cdz = report.get(Criterion::Cdz).is_some_and(|v| v.holds);

    if fmt.json {
        let out = json!({
            "instance": spec,
            "normalized": { "a": norm.pair.a(), "b": norm.pair.b() },
            "permutation": one_based(&norm.perm),
            "report": report,
            "oracle": oracle,
        });
        return Ok(Outcome::new(cdz, to_sorted_json(&out)));
    }

    let mut out = String::new();
    let _ = writeln!(out, "instance: {spec} (n = {})", spec.n());
    if norm.is_identity() {
        let _ = writeln!(out, "order: input is in good order");
    } else {
        let perm: Vec<String> = one_based(&norm.perm).iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "order: normalized to {:?} / {:?}",
            norm.pair.a(),
            norm.pair.b()
        );
        let _ = writeln!(
            out,
            "permutation (input vertex at each position): {}",
            perm.join(" ")
        );
    }
    for v in &report.verdicts {
        let _ = writeln!(out, "{:<16} {}", v.label, v.verdict);
    }
    if !report.consistent {
        let _ = writeln!(out, "warning: CDZ and CDZ' disagree");
    }
    match oracle {
        Some(o) => {
            let verdict = if o.realizable {
                "realizable"
            } else {
                "not realizable"
            };
            let _ = writeln!(
                out,
                "{:<16} {verdict} ({} of {} edge subsets)",
                "oracle", o.witness_count, o.subsets_examined
            );
        }
        None if norm.pair.n() > MAX_ORACLE_N => {
            let _ = writeln!(out, "{:<16} skipped (n > {MAX_ORACLE_N})", "oracle");
        }
        None => {}
    }
    Ok(Outcome::new(cdz, out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dot,
}

pub fn realize(spec: &InstanceSpec, graph: GraphFormat, fmt: Format) -> Result<Outcome, CliError> {
    let norm = normalize_good_order(&spec.a, &spec.b)?;
    let witness = realize_pair(&norm)?;
    if let Some(g) = &witness {
        if !verify_witness(g, &spec.a, &spec.b)? {
            return Err(CliError::Internal(
                "constructed graph violates the bounds".into(),
            ));
        }
    }

    if fmt.json {
        let out = match &witness {
            Some(g) => json!({
                "instance": spec,
                "realizable": true,
                "n": g.n(),
                "edges": g.edges().map(|(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
                "degrees": g.degrees(),
            }),
            None => json!({ "instance": spec, "realizable": false }),
        };
        return Ok(Outcome::new(witness.is_some(), to_sorted_json(&out)));
    }
    let out = match (&witness, graph) {
        (Some(g), GraphFormat::EdgeList) => g.to_edge_list(),
        (Some(g), GraphFormat::Dot) => g.to_dot(),
        (None, _) => "not realizable\n".to_string(),
    };
    Ok(Outcome::new(witness.is_some(), out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossvalArgs {
    pub n: usize,
    pub sample: Option<u64>,
    pub seed: u64,
    pub matrix: bool,
    pub criteria: Vec<Criterion>,
    pub examples: usize,
}

pub fn crossval(args: &CrossvalArgs, fmt: Format) -> Result<Outcome, CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let config = match args.sample {
        Some(count) => SweepConfig::sampled(args.n, &args.criteria, count, args.seed),
        None => SweepConfig::exhaustive(args.n, &args.criteria),
    };
    if args.matrix && args.n > MAX_MATRIX_N {
        return Err(degbox_core::Error::TooLarge {
            n: args.n,
            max: MAX_MATRIX_N,
        }
        .into());
    }
    let report = cross_validate(&config)?;
    let matrix = if args.matrix {
        Some(implication_matrix(args.n, args.examples)?)
    } else {
        None
    };
    let agree = report.cdz_disagreements() == 0;

    if fmt.json {
        let out = match &matrix {
            Some(m) => to_sorted_json(&json!({ "sweep": report, "matrix": m })),
            None => report.to_json(),
        };
        return Ok(Outcome::new(agree, out));
    }
    let mut out = report.to_text();
    let _ = writeln!(
        out,
        "CDZ disagreements: {} ({:.2?})",
        report.cdz_disagreements(),
        report.elapsed
    );
    if let Some(m) = &matrix {
        out.push('\n');
        out.push_str(&m.to_text());
    }
    Ok(Outcome::new(agree, out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct IdentityFailure {
    identity: &'static str,
    input: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
}

/// Random max-sum, Berge/conjugate prefix, sum and involution checks.
pub fn identities(count: u64, seed: u64, fmt: Format) -> Result<Outcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..count {
        let len = rng.gen_range(1..=20);
        let p: Vec<usize> = (0..len).map(|_| rng.gen_range(0..40)).collect();
        let t = rng.gen_range(1..=len);
        if !lemma31_identities_hold(&p, t)? {
            failures.push(IdentityFailure {
                identity: "max-sum",
                input: p,
                t: Some(t),
            });
        }

        let n = rng.gen_range(1..=20);
        let mut d: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        d.sort_unstable_by(|x, y| y.cmp(x));
        let total: usize = d.iter().sum();
        let conj = conjugate_sequence(&d);
        let checks = [
            (
                "berge-conjugate-prefix",
                berge_conjugate_prefix_identity(&d)?,
            ),
            ("berge-sum", berge_sequence(&d)?.sum() == total),
            ("conjugate-sum", conj.sum() == total),
            ("conjugate-involution", *conjugate_sequence(&conj) == d[..]),
        ];
        for (identity, holds) in checks {
            if !holds {
                failures.push(IdentityFailure {
                    identity,
                    input: d.clone(),
                    t: None,
                });
            }
        }
    }
    let passed = failures.is_empty();

    if fmt.json {
        let out = json!({ "count": count, "seed": seed, "passed": passed, "failures": failures });
        return Ok(Outcome::new(passed, to_sorted_json(&out)));
    }
    let mut out = String::new();
    for f in &failures {
        match f.t {
            Some(t) => writeln!(out, "FAIL {}: p={:?} t={t}", f.identity, f.input),
            None => writeln!(out, "FAIL {}: d={:?}", f.identity, f.input),
        }
        .expect("writing to a String");
    }
    let _ = writeln!(
        out,
        "{count} random cases (seed {seed}): {}",
        if passed {
            "all identities hold".to_string()
        } else {
            format!("{} failures", failures.len())
        }
    );
    Ok(Outcome::new(passed, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_instance;

    const TEXT: Format = Format { json: false };
    const JSON: Format = Format { json: true };

    #[test]
    fn check_counterexample() {
        let spec = parse_instance("5,4,3,3,3,1/5,5,3,3,3,1").unwrap();
        let out = check(&spec, true, TEXT).unwrap();
        assert_eq!(out.code, 1);
        assert!(
            out.stdout.contains("CDZ              fails at t=2 (9 > 8)"),
            "{}",
            out.stdout
        );
        assert!(out
            .stdout
            .contains("not realizable (0 of 32768 edge subsets)"));
        assert!(out.stdout.contains("good order"));
    }

    #[test]
    fn check_reports_permutation() {
        let spec = parse_instance("1,3/2,3").unwrap();
        assert!(check(&spec, false, TEXT).is_err());
        let spec = parse_instance("1,3,0,0/2,3,0,0").unwrap();
        let out = check(&spec, false, TEXT).unwrap();
        assert!(
            out.stdout
                .contains("permutation (input vertex at each position): 2 1 3 4"),
            "{}",
            out.stdout
        );
        let json = check(&spec, false, JSON).unwrap().stdout;
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["permutation"], json!([2, 1, 3, 4]));
        assert_eq!(v["oracle"], serde_json::Value::Null);
    }

    #[test]
    fn realize_formats() {
        let spec = parse_instance("2,2,2/2,2,2").unwrap();
        let out = realize(&spec, GraphFormat::EdgeList, TEXT).unwrap();
        assert_eq!(
            out,
            Outcome {
                code: 0,
                stdout: "1 2\n1 3\n2 3\n".into()
            }
        );
        let dot = realize(&spec, GraphFormat::Dot, TEXT).unwrap().stdout;
        assert!(dot.starts_with("graph G {") && dot.contains("1 -- 2;"));
        let spec = parse_instance("0,0/1,1").unwrap();
        assert_eq!(realize(&spec, GraphFormat::EdgeList, TEXT).unwrap().code, 0);
    }

    #[test]
    fn crossval_small() {
        let args = CrossvalArgs {
            n: 3,
            sample: None,
            seed: 0,
            matrix: true,
            criteria: Criterion::ALL.to_vec(),
            examples: 1,
        };
        let out = crossval(&args, TEXT).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("56 instances"));
        assert!(out.stdout.contains("implication matrix"));
        assert!(crossval(
            &CrossvalArgs {
                n: 7,
                ..args.clone()
            },
            TEXT
        )
        .is_err());
        assert!(crossval(&CrossvalArgs { n: 0, ..args }, TEXT).is_err());
    }

    #[test]
    fn identities_pass() {
        assert_eq!(identities(500, 7, TEXT).unwrap().code, 0);
        assert_eq!(identities(0, 7, TEXT).unwrap().code, 0);
        let a = identities(50, 3, JSON).unwrap().stdout;
        assert_eq!(a, identities(50, 3, JSON).unwrap().stdout);
    }
}
