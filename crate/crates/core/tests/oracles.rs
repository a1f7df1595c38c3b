mod common;

use common::{ctx, p, random_in_rect};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rimhook_core::oracle::{pieri_giambelli_product, poly_lr, poly_lr_expansion, schur_poly, y_closed_form};
use rimhook_core::ring::{basis_product, reduce_schur};
use rimhook_core::tableau::classical_lr;
use rimhook_core::Partition;

#[test]
fn polynomial_lr_matches_tableau_lr() {
    for total in 0..=12 {
        let targets = Partition::all_of_weight(total);
        for a in 0..=total / 2 {
            for lambda in Partition::all_of_weight(a) {
                for mu in Partition::all_of_weight(total - a) {
                    let nvars = (lambda.len() + mu.len()).max(1);
                    let expansion = poly_lr_expansion(&lambda, &mu, nvars).unwrap();
                    for nu in &targets {
                        let classical = classical_lr(&lambda, &mu, nu).unwrap();
                        assert_eq!(expansion.get(nu).copied().unwrap_or(0), classical, "{lambda} {mu} {nu}");
                        assert_eq!(classical_lr(&mu, &lambda, nu).unwrap(), classical);
                    }
                }
            }
        }
    }
}

#[test]
fn poly_lr_on_the_worked_example() {
    let (lambda, mu) = (p(&[3, 3, 2, 1]), p(&[4, 3, 2, 1]));
    assert_eq!(poly_lr(&lambda, &mu, &p(&[6, 5, 3, 3, 2])).unwrap(), 6);
    assert_eq!(poly_lr(&lambda, &mu, &p(&[5, 5, 3, 3, 2, 1])).unwrap(), 8);
    assert_eq!(poly_lr(&lambda, &mu, &p(&[4, 4, 3, 3, 2, 1, 1, 1])).unwrap(), 2);
    assert_eq!(poly_lr(&Partition::empty(), &mu, &mu).unwrap(), 1);
}

#[test]
fn column_classes_follow_the_closed_form() {
    for l in 1..=4 {
        for k in 1..=4 {
            let c = ctx(l, k);
            for r in 0..=3 * c.n() {
                assert_eq!(reduce_schur(&Partition::column(r), c).unwrap(), y_closed_form(r, c).unwrap(), "r={r} {l}×{k}");
            }
        }
    }
}

#[test]
fn giambelli_route_matches_the_product_exhaustively() {
    for l in 1..=3 {
        for k in 1..=3 {
            let c = ctx(l, k);
            let basis = Partition::all_in_rect(c);
            for lambda in &basis {
                for mu in &basis {
                    assert_eq!(pieri_giambelli_product(lambda, mu, c).unwrap(), basis_product(lambda, mu, c).unwrap());
                }
            }
        }
    }
}

#[test]
fn giambelli_route_matches_the_product_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let c = ctx(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let lambda = random_in_rect(&mut rng, c);
        let mu = random_in_rect(&mut rng, c);
        assert_eq!(pieri_giambelli_product(&lambda, &mu, c).unwrap(), basis_product(&lambda, &mu, c).unwrap());
    }
}

#[test]
fn schur_polynomials_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..40 {
        let lambda = common::random_partition(&mut rng, 4, 4);
        let nvars = rng.gen_range(lambda.len().max(2)..=5);
        let poly = schur_poly(&lambda, nvars).unwrap();
        for _ in 0..10 {
            let i = rng.gen_range(0..nvars);
            let j = rng.gen_range(0..nvars);
            assert_eq!(poly.swap_variables(i, j), poly);
        }
    }
}

#[test]
fn schur_polynomial_examples() {
    let x = schur_poly(&p(&[1]), 2).unwrap();
    assert_eq!((x.coefficient(&[1, 0]), x.coefficient(&[0, 1]), x.len()), (1, 1, 2));
    let e2 = schur_poly(&p(&[1, 1]), 2).unwrap();
    assert_eq!((e2.coefficient(&[1, 1]), e2.len()), (1, 1));
    assert_eq!(schur_poly(&p(&[2, 1]), 3).unwrap().coefficient_sum().unwrap(), 8);
    assert!(schur_poly(&p(&[1, 1, 1]), 2).unwrap().is_zero());
}
