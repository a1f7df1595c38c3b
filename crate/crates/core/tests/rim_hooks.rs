mod common;

use std::collections::BTreeSet;

use common::{contexts_up_to, ctx, p, random_partition};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rimhook_core::rim::{enumerate_preimages, n_core, n_rim_from_column, nu_bracket};
use rimhook_core::tableau::classical_lr;
use rimhook_core::{Partition, RimStatus};

/// Walks the rim cell by cell from the bottom of column `r`, removes the
/// cells and checks the rows directly.
fn walk_cells(lambda: &Partition, r: usize, n: usize) -> RimStatus {
    let mut rows: Vec<usize> = lambda.parts().to_vec();
    let mut i = lambda.column_len(r);
    let mut j = r;
    let mut cells = Vec::new();
    while cells.len() < n {
        if i == 0 {
            return RimStatus::Absent;
        }
        cells.push((i, j));
        if lambda.has_cell(i, j + 1) {
            j += 1;
        } else {
            i -= 1;
        }
    }
    for &(row, _) in &cells {
        rows[row - 1] -= 1;
    }
    // a walk that stops inside a row leaves a hole
    let touched: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    for row in touched {
        let last = cells.iter().filter(|c| c.0 == row).map(|c| c.1).max().unwrap();
        if last != lambda.part(row) {
            return RimStatus::Illegal;
        }
    }
    let (start, end) = (r, cells.last().unwrap().1);
    match Partition::new(rows) {
        Ok(remainder) => RimStatus::Hook { start, end, width: end - start + 1, remainder },
        Err(_) => RimStatus::Illegal,
    }
}

#[test]
fn rim_walk_matches_cell_walk() {
    for weight in 1..=11 {
        for lambda in Partition::all_of_weight(weight) {
            for n in 1..=weight + 2 {
                for r in 1..=lambda.first() {
                    let fast = n_rim_from_column(&lambda, r, n).unwrap();
                    assert_eq!(fast, walk_cells(&lambda, r, n), "λ={lambda} r={r} n={n}");
                }
            }
        }
    }
}

#[test]
fn hook_end_is_unique() {
    for weight in 1..=10 {
        for lambda in Partition::all_of_weight(weight) {
            let width = lambda.first();
            let d = |j: usize| lambda.column_len(j) as i64 - j as i64;
            for n in 1..=weight {
                for r in 1..=width {
                    if let RimStatus::Hook { end, remainder, .. } = n_rim_from_column(&lambda, r, n).unwrap() {
                        let target = d(r) - n as i64;
                        let ends: Vec<usize> = (r..=width).filter(|&s| d(s) > target && target >= d(s + 1)).collect();
                        assert_eq!(ends, vec![end]);
                        assert_eq!(remainder.weight() + n, lambda.weight());
                    }
                }
            }
        }
    }
}

/// Removes hooks in random order until none remain; returns the core, the
/// count and the width parity.
fn random_strip(rng: &mut impl Rng, lambda: &Partition, n: usize) -> (Partition, usize, usize) {
    let mut current = lambda.clone();
    let (mut m, mut width_sum) = (0, 0);
    loop {
        let hooks: Vec<(usize, Partition)> = (1..=current.first())
            .filter_map(|r| match n_rim_from_column(&current, r, n).unwrap() {
                RimStatus::Hook { width, remainder, .. } => Some((width, remainder)),
                _ => None,
            })
            .collect();
        if hooks.is_empty() {
            return (current, m, width_sum % 2);
        }
        let (w, rest) = hooks[rng.gen_range(0..hooks.len())].clone();
        m += 1;
        width_sum += w;
        current = rest;
    }
}

#[test]
fn core_is_independent_of_removal_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let k = rng.gen_range(1..=6);
        let l = rng.gen_range(1..=6);
        let c = ctx(l, k);
        let lambda = random_partition(&mut rng, k, 3 * (l + k));
        let reference = n_core(&lambda, c.n(), c).unwrap();
        for _ in 0..4 {
            let (core, m, parity) = random_strip(&mut rng, &lambda, c.n());
            assert_eq!(core, reference.core);
            assert_eq!(m, reference.m);
            let sign = if (m * k + parity) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign, reference.sign, "λ={lambda} l={l} k={k}");
        }
    }
}

#[test]
fn bracket_round_trip() {
    for c in contexts_up_to(8) {
        for nu in Partition::all_in_rect(c) {
            for m in 0..=3 {
                let big = nu_bracket(&nu, m, c).unwrap();
                assert_eq!(big.weight(), nu.weight() + m * c.n());
                let r = n_core(&big, c.n(), c).unwrap();
                assert_eq!((&r.core, r.m, r.sign), (&nu, m, 1));
                assert!(r.widths.iter().all(|&w| w == c.k()));
            }
        }
    }
}

#[test]
fn preimages_agree_with_a_full_scan() {
    let nu = p(&[2, 1]);
    let n = 5;
    for m in 0..=2 {
        let weight = nu.weight() + m * n;
        let expected: Vec<Partition> = Partition::all_of_weight(weight)
            .into_iter()
            .filter(|rho| rho.first() <= 4)
            .filter(|rho| n_core(rho, n, ctx(1, 4)).unwrap().core == nu)
            .collect();
        let got = enumerate_preimages(&nu, m, n, 4).unwrap();
        assert!(got.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(got.iter().collect::<BTreeSet<_>>(), expected.iter().collect::<BTreeSet<_>>());
    }
}

#[test]
fn listed_preimages_are_the_contributing_ones() {
    let (lambda, mu, nu) = (p(&[3, 3, 2, 1]), p(&[4, 3, 2, 1]), p(&[4, 2, 2, 1]));
    let contributing: Vec<Partition> = enumerate_preimages(&nu, 1, 10, 6)
        .unwrap()
        .into_iter()
        .filter(|rho| classical_lr(&lambda, &mu, rho).unwrap() > 0)
        .collect();
    assert_eq!(contributing, vec![p(&[6, 5, 3, 3, 2]), p(&[5, 5, 3, 3, 2, 1]), p(&[4, 4, 3, 3, 2, 1, 1, 1])]);
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 0..12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn conjugation_is_an_involution(lambda in partition_strategy()) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.weight(), lambda.weight());
        prop_assert_eq!(conj.len(), lambda.first());
        prop_assert_eq!(conj.conjugate(), lambda);
    }

    #[test]
    fn display_round_trips(lambda in partition_strategy()) {
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
}
