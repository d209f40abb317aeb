//! Independent brute-force oracles for the transforms and decision
//! procedures, checked exhaustively on small inputs.

use degbox_core::oracle::enumerate_instances;
use degbox_core::realization::{realize_degrees, ryser_intervals};
use degbox_core::sequences::{crossing_index, reduced_range_end};
use degbox_core::*;

/// The zero-diagonal 0-1 matrix written out cell by cell.
fn berge_by_matrix(b: &[usize]) -> Vec<usize> {
    let n = b.len();
    let mut matrix = vec![vec![0u8; n]; n];
    for (k, row) in matrix.iter_mut().enumerate() {
        let mut placed = 0;
        for (j, cell) in row.iter_mut().enumerate() {
            if placed == b[k] {
                break;
            }
            if j != k {
                *cell = 1;
                placed += 1;
            }
        }
    }
    (0..n)
        .map(|j| matrix.iter().map(|r| r[j] as usize).sum())
        .collect()
}

fn conjugate_by_counting(b: &[usize]) -> Vec<usize> {
    (1..=b.len())
        .map(|j| b.iter().filter(|&&x| x >= j).count())
        .collect()
}

/// Epsilon straight from the definition, 1-based indices.
#[allow(clippy::int_plus_one)]
fn epsilon_by_definition(a: &[usize], b: &[usize], t: usize) -> i64 {
    let it: Vec<usize> = (1..=a.len())
        .filter(|&i| i >= t + 1 && b[i - 1] >= t + 1)
        .collect();
    let fixed = it.iter().all(|&i| a[i - 1] == b[i - 1]);
    let sum: usize = it.iter().map(|&i| b[i - 1]).sum::<usize>() + t * it.len();
    i64::from(fixed && sum % 2 == 1)
}

/// CDZ evaluated term by term, independent of the crate's prefix sums.
fn cdz_by_definition(a: &[usize], b: &[usize]) -> Option<usize> {
    let n = a.len();
    (0..=n).find(|&t| {
        let lhs: i64 = (1..=t).map(|i| a[i - 1] as i64).sum();
        let rhs = (t * t.saturating_sub(1)) as i64
            + (t + 1..=n).map(|i| t.min(b[i - 1]) as i64).sum::<i64>()
            - epsilon_by_definition(a, b, t);
        lhs > rhs
    })
}

/// All bipartite graphs between parts of the given sizes.
fn bipartite_brute(left: &[(usize, usize)], right: &[(usize, usize)]) -> bool {
    let (l, r) = (left.len(), right.len());
    let cells = l * r;
    (0u32..1 << cells).any(|mask| {
        let mut ld = vec![0; l];
        let mut rd = vec![0; r];
        for bit in 0..cells {
            if mask >> bit & 1 == 1 {
                ld[bit / r] += 1;
                rd[bit % r] += 1;
            }
        }
        ld.iter()
            .zip(left)
            .all(|(d, &(lo, hi))| lo <= *d && *d <= hi)
            && rd
                .iter()
                .zip(right)
                .all(|(d, &(lo, hi))| lo <= *d && *d <= hi)
    })
}

/// Every non-increasing sequence of length `n` with entries `<= max`.
fn non_increasing(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn berge_matches_explicit_matrix() {
    for n in 0..=6 {
        for d in non_increasing(n, n.saturating_sub(1)) {
            assert_eq!(
                *berge_sequence(&d).unwrap(),
                berge_by_matrix(&d)[..],
                "{d:?}"
            );
        }
    }
    // unsorted rows too
    for p in enumerate_instances(5).unwrap() {
        assert_eq!(*berge_sequence(p.b()).unwrap(), berge_by_matrix(p.b())[..]);
    }
}

#[test]
fn conjugate_matches_counting() {
    for d in [vec![5, 5, 3, 3, 3, 1], vec![4, 2, 2, 2, 1], vec![0, 0]] {
        assert_eq!(*conjugate_sequence(&d), conjugate_by_counting(&d)[..]);
    }
    for n in 0..=6 {
        for d in non_increasing(n, n) {
            assert_eq!(*conjugate_sequence(&d), conjugate_by_counting(&d)[..]);
        }
    }
}

#[test]
fn epsilon_and_index_sets_match_definition() {
    for n in 0..=5 {
        for p in enumerate_instances(n).unwrap() {
            for t in 0..=n {
                assert_eq!(
                    epsilon(&p, t).unwrap(),
                    epsilon_by_definition(p.a(), p.b(), t)
                );
                let it: Vec<usize> = (t..n).filter(|&i| p.b()[i] > t).collect();
                assert_eq!(index_set_it(&p, t).unwrap(), it);
            }
        }
    }
}

#[test]
fn worked_examples_by_definition() {
    let ce = validate_and_clamp(&[5, 4, 3, 3, 3, 1], &[5, 5, 3, 3, 3, 1]).unwrap();
    assert_eq!(epsilon_by_definition(ce.a(), ce.b(), 2), 1);
    assert_eq!(cdz_by_definition(ce.a(), ce.b()), Some(2));
    assert_eq!(cdz_by_definition(&[2, 2, 2], &[2, 2, 2]), None);
    assert_eq!(cdz_by_definition(&[1, 1, 1], &[1, 1, 1]), Some(0));
    assert_eq!(epsilon_by_definition(&[2, 2, 2], &[2, 2, 2], 0), 0);
    assert_eq!(
        crossing_indices(&ce),
        IndexProfile {
            s: 4,
            g_a: 3,
            g_b: 3
        }
    );
    assert_eq!(reduced_range_end(&[0]), 1);
    assert_eq!(crossing_index(&[0]), 0);
}

#[test]
fn cdz_matches_term_by_term_evaluation() {
    for n in 0..=5 {
        for p in enumerate_instances(n).unwrap() {
            let v = check_cdz(&p).unwrap();
            assert_eq!(v.witness_t, cdz_by_definition(p.a(), p.b()), "{p:?}");
        }
    }
}

#[test]
fn bipartite_flow_matches_enumeration() {
    fn intervals(n: usize, part: usize) -> Vec<Vec<(usize, usize)>> {
        let cells: Vec<_> = (0..=part)
            .flat_map(|lo| (lo..=part).map(move |hi| (lo, hi)))
            .collect();
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<_>| {
                    cells.iter().map(move |&c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }
    let mut checked = 0;
    for (l, r) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)] {
        for left in intervals(l, r) {
            for right in intervals(r, l) {
                let got = interval_bipartite_realize(&left, &right).unwrap();
                assert_eq!(
                    got.is_some(),
                    bipartite_brute(&left, &right),
                    "{left:?} {right:?}"
                );
                if let Some(g) = got {
                    let ok = |deg: Vec<usize>, b: &[(usize, usize)]| {
                        deg.iter().zip(b).all(|(d, &(lo, hi))| lo <= *d && *d <= hi)
                    };
                    assert!(ok(g.left_degrees(), &left) && ok(g.right_degrees(), &right));
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn bipartite_flow_matches_enumeration_4x4() {
    // Part sizes 4: 2^16 subsets per case, so degenerate and unit-width
    // intervals only.
    for d in non_increasing(4, 4) {
        let fixed: Vec<_> = d.iter().map(|&x| (x, x)).collect();
        let loose: Vec<_> = d.iter().map(|&x| (x.saturating_sub(1), x)).collect();
        for (left, right) in [(&fixed, &fixed), (&loose, &fixed), (&fixed, &loose)] {
            assert_eq!(
                interval_bipartite_realize(left, right).unwrap().is_some(),
                bipartite_brute(left, right),
                "{left:?} {right:?}"
            );
        }
    }
}

#[test]
fn havel_hakimi_agrees_with_erdos_gallai() {
    for n in 0..=8 {
        for d in non_increasing(n, 7) {
            let eg = check_erdos_gallai_fixed(&d).unwrap().holds;
            let hh = havel_hakimi_realize(&d).unwrap();
            assert_eq!(hh.is_some(), eg, "{d:?}");
            if let Some(g) = hh {
                assert_eq!(g.degrees(), d);
            }
        }
    }
}

#[test]
fn fixed_sequence_ryser_with_even_sum() {
    for n in 0..=6 {
        for d in non_increasing(n, n.saturating_sub(1)) {
            if d.iter().sum::<usize>() % 2 == 1 {
                continue;
            }
            let tilde = tilde_sequence(&d).unwrap();
            let s: Vec<_> = tilde.iter().map(|&x| (x, x)).collect();
            let bip = interval_bipartite_realize(&s, &s).unwrap().is_some();
            assert_eq!(havel_hakimi_realize(&d).unwrap().is_some(), bip, "{d:?}");
        }
    }
    // An odd sum slips through the bipartite test.
    let s: Vec<_> = tilde_sequence(&[1, 1, 1])
        .unwrap()
        .iter()
        .map(|&x| (x, x))
        .collect();
    assert!(interval_bipartite_realize(&s, &s).unwrap().is_some());
}

#[test]
fn cdz_on_fixed_box_is_erdos_gallai() {
    for n in 0..=7 {
        for d in non_increasing(n, n.saturating_sub(1)) {
            let p = validate_and_clamp(&d, &d).unwrap();
            assert_eq!(
                check_cdz(&p).unwrap().holds,
                check_erdos_gallai_fixed(&d).unwrap().holds,
                "{d:?}"
            );
        }
    }
}

#[test]
fn box_search_matches_oracle() {
    for n in 0..=5 {
        for p in enumerate_instances(n).unwrap() {
            let found = find_graphic_in_box(&p).unwrap();
            assert_eq!(found.is_some(), oracle_decide(&p).unwrap(), "{p:?}");
            if let Some(d) = found {
                assert!(d
                    .iter()
                    .zip(p.a().iter().zip(p.b()))
                    .all(|(x, (lo, hi))| lo <= x && x <= hi));
                assert_eq!(realize_degrees(&d).unwrap().degrees(), *d);
            }
        }
    }
}

#[test]
fn ryser_intervals_are_valid_and_bounded() {
    for n in 1..=5 {
        for p in enumerate_instances(n).unwrap() {
            for (lo, hi) in ryser_intervals(&p) {
                assert!(lo <= hi && hi <= n);
            }
        }
    }
}
