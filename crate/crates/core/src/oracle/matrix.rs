use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::enumerate_instances;
use super::oracle_decide;
use super::sweep::sorted_json;
use crate::criteria::Criterion;
use crate::error::{Error, Result};
use crate::sequences::IntervalSequencePair;

pub const MAX_MATRIX_N: usize = 6;

/// A row or column of the matrix: realizability itself or one criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statement {
    Realizable,
    Holds(Criterion),
}

impl Statement {
    pub fn label(self) -> &'static str {
        match self {
            Statement::Realizable => "realizable",
            Statement::Holds(c) => c.label(),
        }
    }

    fn evaluate(self, pair: &IntervalSequencePair, realizable: bool) -> Result<bool> {
        match self {
            Statement::Realizable => Ok(realizable),
            Statement::Holds(c) => Ok(c.check(pair)?.holds),
        }
    }
}

impl Serialize for Statement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// Instances where `from` holds and `to` fails. A zero count supports
/// `from => to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationCell {
    pub from: Statement,
    pub to: Statement,
    pub count: u64,
    pub examples: Vec<InstanceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationMatrix {
    pub n: Option<usize>,
    pub instance_count: u64,
    pub statements: Vec<Statement>,
    /// `counts[i][j]`: instances with statement `i` true and `j` false.
    pub counts: Vec<Vec<u64>>,
    /// Nonzero off-diagonal cells with their stored examples.
    pub cells: Vec<ImplicationCell>,
}

impl ImplicationMatrix {
    pub fn count(&self, from: Statement, to: Statement) -> Option<u64> {
        let i = self.statements.iter().position(|&s| s == from)?;
        let j = self.statements.iter().position(|&s| s == to)?;
        Some(self.counts[i][j])
    }

    pub fn cell(&self, from: Statement, to: Statement) -> Option<&ImplicationCell> {
        self.cells.iter().find(|c| c.from == from && c.to == to)
    }

    pub fn to_json(&self) -> String {
        sorted_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "implication matrix ({} instances): row holds and column fails",
            self.instance_count
        );
        let width = self
            .statements
            .iter()
            .map(|s| s.label().len())
            .max()
            .unwrap_or(0)
            .max(6);
        let _ = write!(out, "{:<width$}", "");
        for s in &self.statements {
            let _ = write!(out, " {:>width$}", s.label());
        }
        out.push('\n');
        for (i, row) in self.counts.iter().enumerate() {
            let _ = write!(out, "{:<width$}", self.statements[i].label());
            for (j, count) in row.iter().enumerate() {
                if i == j {
                    let _ = write!(out, " {:>width$}", "-");
                } else {
                    let _ = write!(out, " {count:>width$}");
                }
            }
            out.push('\n');
        }
        for cell in &self.cells {
            for ex in &cell.examples {
                let _ = writeln!(
                    out,
                    "  {} holds, {} fails: A={:?} B={:?}",
                    cell.from.label(),
                    cell.to.label(),
                    ex.a,
                    ex.b
                );
            }
        }
        out
    }
}

/// Builds the matrix over `instances` for realizability plus `criteria`,
/// storing up to `max_examples` instances per nonzero cell.
pub fn implication_matrix_over<I>(
    instances: I,
    criteria: &[Criterion],
    max_examples: usize,
) -> Result<ImplicationMatrix>
where
    I: IntoIterator<Item = IntervalSequencePair>,
{
    let statements: Vec<Statement> = std::iter::once(Statement::Realizable)
        .chain(criteria.iter().map(|&c| Statement::Holds(c)))
        .collect();
    let k = statements.len();
    let mut counts = vec![vec![0u64; k]; k];
    let mut examples: Vec<Vec<Vec<InstanceRecord>>> = vec![vec![Vec::new(); k]; k];

    let instances: Vec<IntervalSequencePair> = instances.into_iter().collect();
    let truth: Vec<Vec<bool>> = instances
        .par_iter()
        .map(|p| {
            let realizable = oracle_decide(p)?;
            statements
                .iter()
                .map(|s| s.evaluate(p, realizable))
                .collect()
        })
        .collect::<Result<_>>()?;

    for (pair, row) in instances.iter().zip(&truth) {
        for i in 0..k {
            if !row[i] {
                continue;
            }
            for j in 0..k {
                if row[j] {
                    continue;
                }
                counts[i][j] += 1;
                if examples[i][j].len() < max_examples {
                    examples[i][j].push(InstanceRecord {
                        a: pair.a().to_vec(),
                        b: pair.b().to_vec(),
                    });
                }
            }
        }
    }

    let mut cells = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if counts[i][j] > 0 {
                cells.push(ImplicationCell {
                    from: statements[i],
                    to: statements[j],
                    count: counts[i][j],
                    examples: std::mem::take(&mut examples[i][j]),
                });
            }
        }
    }
    Ok(ImplicationMatrix {
        n: None,
        instance_count: instances.len() as u64,
        statements,
        counts,
        cells,
    })
}

/// Exhaustive matrix at size `n` over every criterion in the report.
pub fn implication_matrix(n: usize, max_examples: usize) -> Result<ImplicationMatrix> {
    if n > MAX_MATRIX_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_MATRIX_N,
        });
    }
    let mut m = implication_matrix_over(enumerate_instances(n)?, &Criterion::REPORT, max_examples)?;
    m.n = Some(n);
    Ok(m)
}
