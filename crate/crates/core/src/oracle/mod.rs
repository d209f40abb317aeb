//! Ground truth by brute force, and the harnesses that compare every
//! criterion against it.
//!
//! The oracle only looks at the bounds themselves; it never consults
//! [`crate::criteria`].

mod enumerate;
mod matrix;
mod sweep;

use serde::Serialize;

pub use enumerate::{
    enumerate_instances, instance_count, random_instance, random_instance_up_to, InstanceIter,
};
pub use matrix::{
    implication_matrix, implication_matrix_over, ImplicationCell, ImplicationMatrix, Statement,
    MAX_MATRIX_N,
};
pub use sweep::{
    cross_validate, Counterexample, CriterionTally, Direction, Sampling, SweepConfig, SweepReport,
    DEFAULT_SAMPLE_COUNT, MAX_LISTED_PER_KIND,
};

use crate::error::{Error, Result};
use crate::sequences::IntervalSequencePair;

/// Largest `n` the oracle accepts: `2^21` edge subsets.
pub const MAX_ORACLE_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub realizable: bool,
    /// Number of edge subsets whose degree vector lies in the box.
    pub witness_count: u64,
    pub subsets_examined: u64,
}

/// Scans every edge subset of `K_n` and counts those inside the box.
pub fn oracle_realizable(pair: &IntervalSequencePair) -> Result<OracleVerdict> {
    let (witness_count, subsets_examined) = scan(pair, false)?;
    Ok(OracleVerdict {
        realizable: witness_count > 0,
        witness_count,
        subsets_examined,
    })
}

/// Like [`oracle_realizable`] but stops at the first witness.
pub fn oracle_decide(pair: &IntervalSequencePair) -> Result<bool> {
    Ok(scan(pair, true)?.0 > 0)
}

/// Walks the edge subsets in Gray-code order so each step toggles one edge,
/// keeping a running count of vertices whose degree is outside its bound.
fn scan(pair: &IntervalSequencePair, stop_at_first: bool) -> Result<(u64, u64)> {
    let n = pair.n();
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    let (a, b) = (pair.a(), pair.b());
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let total: u64 = 1 << edges.len();
    let mut deg = [0usize; MAX_ORACLE_N];
    let inside = |i: usize, d: usize| a[i] <= d && d <= b[i];
    let mut outside = (0..n).filter(|&i| !inside(i, 0)).count();
    let mut present = 0u64;
    let mut witnesses = u64::from(outside == 0);
    if witnesses > 0 && stop_at_first {
        return Ok((1, 1));
    }
    for step in 1..total {
        let bit = step.trailing_zeros() as usize;
        present ^= 1 << bit;
        let adding = present & (1 << bit) != 0;
        let (u, v) = edges[bit];
        for w in [u, v] {
            let before = inside(w, deg[w]);
            if adding {
                deg[w] += 1;
            } else {
                deg[w] -= 1;
            }
            match (before, inside(w, deg[w])) {
                (true, false) => outside += 1,
                (false, true) => outside -= 1,
                _ => {}
            }
        }
        if outside == 0 {
            witnesses += 1;
            if stop_at_first {
                return Ok((witnesses, step + 1));
            }
        }
    }
    Ok((witnesses, total))
}
