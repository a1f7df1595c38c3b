mod common;

use std::collections::BTreeMap;

use common::{ctx, random_in_rect};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rimhook_core::oracle::{schur_expansion, schur_poly};
use rimhook_core::tableau::{
    classical_kostka, classical_lr, conjugate_quantum_kostka, count_tableaux, enumerate_conjugate_tableaux, enumerate_ssyt,
    is_proper, is_proper_conjugate, is_proper_conjugate_via_prefixes, is_proper_via_prefixes, kostka_shape, quantum_kostka,
};
use rimhook_core::{ContentVector, GrassmannContext, Orientation, Partition, SkewTableau};

fn random_content(rng: &mut impl Rng, bound: usize, max_len: usize) -> ContentVector {
    let len = rng.gen_range(1..=max_len);
    ContentVector::new((0..len).map(|_| rng.gen_range(0..=bound)).collect::<Vec<_>>())
}

fn check_prefix_gap(t: &SkewTableau, c: GrassmannContext) {
    let max = t.rows().iter().flatten().copied().max().unwrap_or(0);
    let first_bad = (1..=max).find(|&i| {
        let rho = t.prefix_shape(i);
        rho.column_len(1) > rho.column_len(c.k()) + c.l()
    });
    let rho = t.prefix_shape(first_bad.expect("a nonproper tableau has a failing prefix"));
    assert_eq!(rho.column_len(1) - rho.column_len(c.k()), c.l() + 1);
}

#[test]
fn prefix_properness_matches_literal_properness() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut ordinary, mut conjugate, mut nonproper) = (0usize, 0usize, 0usize);
    while ordinary < 10_000 || conjugate < 10_000 {
        let c = ctx(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let lambda = random_in_rect(&mut rng, c);
        let nu = random_in_rect(&mut rng, c);
        let mu = random_content(&mut rng, c.k(), 3);
        if let Some((_, Some(shape))) = kostka_shape(&lambda, &mu, &nu, c).unwrap() {
            for t in enumerate_ssyt(&shape, &mu).unwrap() {
                let proper = is_proper(&t, c);
                assert_eq!(proper, is_proper_via_prefixes(&t, c), "{t}");
                if !proper {
                    nonproper += 1;
                    check_prefix_gap(&t, c);
                }
                ordinary += 1;
            }
        }
        let mu = random_content(&mut rng, c.l(), 3);
        if let Some((_, Some(shape))) = kostka_shape(&lambda, &mu, &nu, c).unwrap() {
            for t in enumerate_conjugate_tableaux(&shape, &mu).unwrap() {
                assert_eq!(is_proper_conjugate(&t, c), is_proper_conjugate_via_prefixes(&t, c), "{t}");
                conjugate += 1;
            }
        }
    }
    assert!(nonproper > 0);
}

#[test]
fn conjugate_tableaux_are_transposed_tableaux() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let outer = common::random_partition(&mut rng, 5, 5);
        let inner = common::random_partition(&mut rng, outer.first(), outer.len());
        let Some(shape) = rimhook_core::SkewShape::new(outer, inner) else { continue };
        let cells = shape.cell_count();
        let mut entries = vec![0; rng.gen_range(1..=4)];
        for _ in 0..cells {
            let i = rng.gen_range(0..entries.len());
            entries[i] += 1;
        }
        let mu = ContentVector::new(entries);
        let conj = count_tableaux(&shape, &mu, Orientation::Conjugate, |_| true).unwrap();
        let ord = count_tableaux(&shape.conjugate(), &mu, Orientation::Ordinary, |_| true).unwrap();
        assert_eq!(conj, ord);
    }
}

#[test]
fn lr_is_commutative() {
    for total in 0..=10 {
        for a in 0..=total {
            for lambda in Partition::all_of_weight(a) {
                for mu in Partition::all_of_weight(total - a) {
                    for nu in Partition::all_of_weight(total) {
                        assert_eq!(
                            classical_lr(&lambda, &mu, &nu).unwrap(),
                            classical_lr(&mu, &lambda, &nu).unwrap(),
                            "{lambda} {mu} {nu}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn kostka_numbers_expand_products_of_rows() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let lambda = common::random_partition(&mut rng, 3, 2);
        let rows: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..=3)).collect();
        let mu = ContentVector::new(rows.clone());
        let nvars = lambda.len() + rows.iter().filter(|&&r| r > 0).count();
        let mut poly = schur_poly(&lambda, nvars.max(1)).unwrap();
        for &r in &rows {
            poly = poly.checked_mul(&schur_poly(&Partition::row(r), nvars.max(1)).unwrap()).unwrap();
        }
        let expected = schur_expansion(&poly).unwrap();
        let total = lambda.weight() + mu.total();
        let mut got = BTreeMap::new();
        for nu in Partition::all_of_weight(total) {
            let kostka = classical_kostka(&lambda, &mu, &nu).unwrap();
            if kostka > 0 {
                got.insert(nu, kostka as i64);
            }
        }
        assert_eq!(got, expected, "λ={lambda} μ={rows:?}");
    }
}

#[test]
fn quantum_kostka_ignores_the_order_of_mu() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let c = ctx(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let lambda = random_in_rect(&mut rng, c);
        let nu = random_in_rect(&mut rng, c);
        let mut rows: Vec<usize> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..=c.k())).collect();
        let base = quantum_kostka(&lambda, &ContentVector::new(rows.clone()), &nu, c).unwrap();
        rows.shuffle(&mut rng);
        assert_eq!(quantum_kostka(&lambda, &ContentVector::new(rows), &nu, c).unwrap(), base);
    }
}

#[test]
fn conjugate_kostka_counts_the_dual_instance() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut nonzero = 0;
    for _ in 0..300 {
        let c = ctx(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let lambda = random_in_rect(&mut rng, c);
        let nu = random_in_rect(&mut rng, c);
        let mu = random_content(&mut rng, c.k(), 3);
        let direct = quantum_kostka(&lambda, &mu, &nu, c).unwrap();
        let dual = conjugate_quantum_kostka(&lambda.conjugate(), &mu, &nu.conjugate(), c.dual()).unwrap();
        assert_eq!(direct, dual, "λ={lambda} μ={:?} ν={nu} in {}×{}", mu.entries(), c.l(), c.k());
        nonzero += usize::from(direct.value() > 0);
    }
    assert!(nonzero >= 30, "only {nonzero} nonzero instances");
}
