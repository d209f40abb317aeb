use crate::error::{Error, Result};

use super::SimpleGraph;

/// Realizes a non-increasing degree sequence, or returns `None` when it is
/// not graphic.
pub fn havel_hakimi_realize(d: &[usize]) -> Result<Option<SimpleGraph>> {
    if let Some(i) = d.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotNonIncreasing { index: i + 1 });
    }
    Ok(realize_degrees(d))
}

/// Havel-Hakimi on a degree vector in any order; vertex `i` of the result
/// has degree `d[i]`.
///
/// Each round takes the vertex with the largest residual degree and joins
/// it to the next-largest ones. Ties go to the lower index.
pub fn realize_degrees(d: &[usize]) -> Option<SimpleGraph> {
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 || d.iter().any(|&x| x >= n) {
        return None;
    }
    let mut residual = d.to_vec();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut g = SimpleGraph::new(n);
    while !alive.is_empty() {
        alive.sort_by(|&i, &j| residual[j].cmp(&residual[i]).then(i.cmp(&j)));
        let v = alive.remove(0);
        let need = residual[v];
        if need > alive.len() {
            return None;
        }
        for &u in &alive[..need] {
            if residual[u] == 0 {
                return None;
            }
            residual[u] -= 1;
            g.add_edge(v, u);
        }
        residual[v] = 0;
        alive.retain(|&u| residual[u] > 0);
    }
    Some(g)
}
