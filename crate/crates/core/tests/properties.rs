mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use gammawitt::hochschild::{kunneth_check, ungraded_hh_dims};
use gammawitt::kgroup::{lattice_rays, positive_orthant_rays};
use gammawitt::{
    AffineMonoid, ComplexOptions, FiniteAlgebra, GradedAlgebra, Integers, Rationals, TruncatedMonoid, WittVector,
};

use common::{ghost, rank_mod_p};

fn orthant2(d: i64) -> Arc<TruncatedMonoid> {
    Arc::new(TruncatedMonoid::new(AffineMonoid::orthant(2), None, vec![1, 1], d).unwrap())
}

fn witt(base: &Arc<TruncatedMonoid>, c: &[i64]) -> WittVector<Integers> {
    let coeffs = (0..base.len()).map(|i| BigInt::from(c[i % c.len()])).collect();
    WittVector::from_coeffs(base.clone(), Integers, coeffs).unwrap()
}

fn coefficient_vec() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witt_ring_axioms(a in coefficient_vec(), b in coefficient_vec(), c in coefficient_vec(), d in 1i64..=4) {
        let base = orthant2(d);
        let (x, y, z) = (witt(&base, &a), witt(&base, &b), witt(&base, &c));
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert!(x.sub(&x).unwrap().is_zero());
        prop_assert_eq!(x.mul(&WittVector::one(base.clone(), Integers)).unwrap(), x);
    }

    #[test]
    fn ghost_matches_oracle(a in coefficient_vec(), d in 1i64..=6) {
        let base = Arc::new(TruncatedMonoid::naturals(d));
        let x = witt(&base, &a);
        let support = base.enumerate().to_vec();
        let coords: BTreeMap<Vec<i64>, BigInt> = support.iter().cloned().zip(x.coeffs().iter().cloned()).collect();
        let expected = ghost(&support, &coords);
        for (eta, g) in support.iter().zip(x.ghost().components()) {
            prop_assert_eq!(g, &expected[eta]);
        }
    }

    #[test]
    fn ghost_round_trip_over_rationals(a in coefficient_vec(), d in 1i64..=5) {
        let base = orthant2(d);
        let x = witt(&base, &a).map_ring(Rationals, |c| num_rational::BigRational::from_integer(c.clone()));
        prop_assert_eq!(x.ghost().from_ghost().unwrap(), x);
    }

    #[test]
    fn rays_are_primitive_and_distinct(h in 1i64..=20) {
        let rays = positive_orthant_rays(2, h);
        let mut sorted = rays.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), rays.len());
        for v in &rays {
            prop_assert_eq!(num_integer::gcd(v[0], v[1]), 1);
        }
        prop_assert_eq!(lattice_rays(2, h).len(), 4 + 4 * rays.len());
    }
}

#[test]
fn kunneth_for_truncated_polynomials() {
    let left = GradedAlgebra::monoid_algebra(FiniteAlgebra::ground(Rationals), &TruncatedMonoid::naturals_mod(3).unwrap());
    let right = FiniteAlgebra::truncated_polynomial(Rationals, "y", 2).unwrap();
    let report = kunneth_check(&left, &right, &ComplexOptions::new(3, true)).unwrap();
    assert!(report.holds());
}

#[test]
fn ungraded_hochschild_of_dual_numbers() {
    // HH_0 is the algebra itself, HH_n is one-dimensional for n >= 1 in characteristic 0
    let dims = ungraded_hh_dims(&FiniteAlgebra::truncated_polynomial(Rationals, "y", 2).unwrap(), 3).unwrap();
    assert_eq!(dims, vec![2, 1, 1, 1]);
}

#[test]
fn dense_rank_oracle_sanity() {
    // [[1, 2], [2, 4]] has rank 1, [[1, 0], [0, 1]] rank 2
    assert_eq!(rank_mod_p(2, &[vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]], 101), 1);
    assert_eq!(rank_mod_p(2, &[vec![(0, 1)], vec![(1, 1)]], 101), 2);
}
