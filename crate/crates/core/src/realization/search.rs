use crate::criteria::check_erdos_gallai_fixed;
use crate::error::{Error, Result};
use crate::sequences::{DegreeSequence, IntervalSequencePair};

/// Node budget for [`find_graphic_in_box`].
pub const DEFAULT_SEARCH_LIMIT: u64 = 20_000_000;

/// A graphic degree vector `d` with `a_i <= d_i <= b_i` at every position,
/// or `None` if the box contains none.
///
/// Depth-first over positions, trying each `d_i` from `b_i` downward, so
/// the first candidate is `B` itself. Partial assignments are pruned by the
/// degree-sum inequality over their largest entries and by parity once the
/// remaining positions are fixed.
pub fn find_graphic_in_box(pair: &IntervalSequencePair) -> Result<Option<DegreeSequence>> {
    find_graphic_in_box_with_limit(pair, DEFAULT_SEARCH_LIMIT)
}

pub fn find_graphic_in_box_with_limit(
    pair: &IntervalSequencePair,
    limit: u64,
) -> Result<Option<DegreeSequence>> {
    pair.require_good_order()?;
    let n = pair.n();
    let mut slack_after = vec![0usize; n + 1];
    let mut fixed_after = vec![0usize; n + 1];
    for i in (0..n).rev() {
        slack_after[i] = slack_after[i + 1] + pair.b()[i] - pair.a()[i];
        fixed_after[i] = fixed_after[i + 1] + pair.a()[i];
    }
    let mut search = Search {
        a: pair.a(),
        b: pair.b(),
        slack_after,
        fixed_after,
        d: Vec::with_capacity(n),
        nodes: 0,
        limit,
    };
    match search.descend() {
        Ok(true) => Ok(Some(DegreeSequence::new(search.d))),
        Ok(false) => Ok(None),
        Err(nodes) => Err(Error::Incomplete { nodes }),
    }
}

struct Search<'p> {
    a: &'p [usize],
    b: &'p [usize],
    slack_after: Vec<usize>,
    fixed_after: Vec<usize>,
    d: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    /// `Err` carries the node count when the budget runs out.
    fn descend(&mut self) -> std::result::Result<bool, u64> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(self.nodes);
        }
        let k = self.d.len();
        if k == self.a.len() {
            let mut sorted = self.d.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            return Ok(check_erdos_gallai_fixed(&sorted).expect("sorted").holds);
        }
        for value in (self.a[k]..=self.b[k]).rev() {
            self.d.push(value);
            if self.feasible_prefix() && self.descend()? {
                return Ok(true);
            }
            self.d.pop();
        }
        Ok(false)
    }

    fn feasible_prefix(&self) -> bool {
        let k = self.d.len();
        if self.slack_after[k] == 0 {
            let total: usize = self.d.iter().sum::<usize>() + self.fixed_after[k];
            if total % 2 == 1 {
                return false;
            }
        }
        let mut assigned = self.d.clone();
        assigned.sort_unstable_by(|x, y| y.cmp(x));
        let rest = &self.b[k..];
        let mut top = 0i64;
        for r in 1..=k {
            top += assigned[r - 1] as i64;
            let r64 = r as i64;
            let outside: i64 = assigned[r..]
                .iter()
                .chain(rest)
                .map(|&x| x.min(r) as i64)
                .sum();
            if top > r64 * (r64 - 1) + outside {
                return false;
            }
        }
        true
    }
}
