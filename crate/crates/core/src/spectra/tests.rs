use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::codecore::{cyclic_code, golay_binary, golay_ternary, hamming_parity};
use crate::fieldkit::{minimal_polynomial, Field, Rational};

fn g() -> Guards {
    Guards::default()
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn hamming(q: u32, m: usize) -> Code {
    let f = Field::gf(q).unwrap();
    let h = hamming_parity(&f, m).unwrap();
    Code::from_parity_check(&f, h[0].len(), &h).unwrap()
}

fn bch31() -> Code {
    let f = Field::gf(2).unwrap();
    let gpoly = minimal_polynomial(&f, 1, 31).unwrap().mul(&minimal_polynomial(&f, 3, 31).unwrap(), &f);
    cyclic_code(&f, 31, &gpoly).unwrap()
}

fn ia(s: &str, n: usize, q: usize) -> IntersectionArray {
    IntersectionArray::parse(s, n, q).unwrap()
}

#[test]
fn hamming_is_perfect_and_completely_regular() {
    let a = analyze(&hamming(2, 3), &g()).unwrap();
    let c = &a.classification;
    assert_eq!((c.d, c.e, c.rho, c.s, c.b), (3, 1, 1, 1, 1));
    assert!(c.perfect && c.completely_regular && c.up_wide);
    assert_eq!(c.up_narrow, Some(true));
    assert_eq!(a.partition.sizes, vec![1, 7]);
    assert_eq!(a.intersection_array, Some(ia("{7;1}", 7, 2)));
    assert_eq!(a.packing.unwrap().beta, vec![r(1, 1), r(1, 1)]);
    assert_eq!(a.profile.rows.len(), 2);
}

#[test]
fn golay_spectrum() {
    let a = analyze(&golay_binary().unwrap(), &g()).unwrap();
    assert_eq!(a.partition.sizes, vec![1, 23, 253, 1771]);
    assert_eq!(a.classification.s, 3);
    assert_eq!(a.classification.t_regular_degree, Some(3));
    assert_eq!(a.intersection_array, Some(ia("{23,22,21;1,2,3}", 23, 2)));
    let dual_weights: Vec<usize> = (1..=23).filter(|&w| a.dual.as_ref().unwrap().counts[w] > 0).collect();
    assert_eq!(dual_weights, vec![8, 12, 16]);
}

#[test]
fn ternary_golay() {
    let a = analyze(&golay_ternary().unwrap(), &g()).unwrap();
    assert_eq!(a.intersection_array, Some(ia("{22,20;1,2}", 11, 3)));
    assert!(a.classification.perfect);
}

#[test]
fn half_golay() {
    let golay = golay_binary().unwrap();
    let mut h = golay.parity().unwrap().row_vecs();
    h.push(vec![1; 23]);
    let half = Code::from_parity_check(golay.field(), 23, &h).unwrap();
    let a = analyze(&half, &g()).unwrap();
    assert_eq!(a.classification.d, 8);
    assert_eq!(a.classification.rho, 7);
    assert_eq!(a.intersection_array, Some(ia("{23,22,21,20,3,2,1;1,2,3,20,21,22,23}", 23, 2)));
}

#[test]
fn hamming_times_repetition_is_up_wide_not_cr() {
    let f = Field::gf(2).unwrap();
    let ha = crate::fieldkit::Matrix::from_rows(3, &hamming_parity(&f, 2).unwrap());
    let rep = crate::fieldkit::Matrix::from_rows(4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]);
    let h = ha.kronecker(&rep, &f);
    let code = Code::from_parity_check(&f, 12, &h.row_vecs()).unwrap();
    assert_eq!(code.dimension(), Some(6));
    let a = analyze(&code, &g()).unwrap();
    let c = &a.classification;
    assert_eq!(c.rho, 3);
    assert!(c.up_wide);
    assert!(!c.completely_regular);
    assert!(c.b > c.rho);
    assert!(c.t_regular_degree.unwrap() < 3);
}

#[test]
fn bch_packing_parameters_and_extension() {
    let code = bch31();
    assert_eq!(code.dimension(), Some(21));
    let a = analyze(&code, &g()).unwrap();
    assert_eq!(a.intersection_array, Some(ia("{31,30,17;1,2,15}", 31, 2)));
    let beta = a.packing.unwrap();
    assert!(beta.unique);
    assert_eq!(beta.beta, vec![r(1, 1), r(1, 1), r(1, 5), r(1, 5)]);
    let (ok, gamma) = up_extension_criterion(&beta.beta, 31, 2).unwrap();
    assert!(ok);
    let ext = analyze(&code.extend().unwrap(), &g()).unwrap();
    assert_eq!(ext.packing.unwrap().beta, gamma.unwrap());
    assert_eq!(ext.intersection_array, Some(ia("{32,31,30,17;1,2,15,32}", 32, 2)));
}

#[test]
fn double_punctured_golay_extension_is_not_up_wide() {
    let dp = golay_binary().unwrap().puncture_many(&[0, 1]).unwrap();
    let a = analyze(&dp, &g()).unwrap();
    assert!(a.classification.completely_regular);
    let (ok, _) = up_extension_criterion(&a.packing.as_ref().unwrap().beta, 21, 2).unwrap();
    assert!(!ok);
    let e = analyze(&dp.extend().unwrap(), &g()).unwrap();
    assert!(!e.classification.up_wide);
    assert!(!e.classification.completely_regular);
}

#[test]
fn extension_blocked_for_self_complementary_even_length() {
    let eg = golay_binary().unwrap().extend().unwrap();
    assert!(self_complementary_extension_block(&eg, &g()).unwrap());
    assert!(!self_complementary_extension_block(&golay_binary().unwrap(), &g()).unwrap());
    let ee = analyze(&eg.extend().unwrap(), &g()).unwrap();
    assert!(!ee.classification.up_wide);
}

#[test]
fn not_distance_invariant_is_a_distinct_outcome() {
    let f = Field::gf(2).unwrap();
    let c = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
    let a = analyze(&c, &g()).unwrap();
    assert!(!a.classification.distance_invariant);
    assert!(!a.classification.completely_regular);
    assert_eq!(a.classification.t_regular_degree, None);
    assert!(a.intersection_array.is_none());
}

#[test]
fn explicit_repetition_code() {
    let f = Field::gf(2).unwrap();
    let c = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
    let a = analyze(&c, &g()).unwrap();
    assert_eq!(a.intersection_array, Some(ia("{3;1}", 3, 2)));
    assert_eq!(a.classification.s, 1);
}

#[test]
fn cross_validation_on_small_codes() {
    for code in [hamming(2, 3), hamming(3, 2), hamming(4, 2), golay_ternary().unwrap()] {
        cross_validate_modes(&code, &g()).unwrap();
    }
    let e = hamming(2, 3).extend().unwrap();
    cross_validate_modes(&e, &g()).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_binary_codes_agree_across_modes(rows in 1usize..6, n in 4usize..12, seed in proptest::collection::vec(0u8..2, 72)) {
        let f = Field::gf(2).unwrap();
        let g_rows: Vec<Vec<u8>> = seed.chunks(n).take(rows).filter(|c| c.len() == n).map(|c| c.to_vec()).collect();
        prop_assume!(!g_rows.is_empty());
        let code = Code::from_generator(&f, n, &g_rows).unwrap();
        cross_validate_modes(&code, &Guards::default()).unwrap();
    }

    #[test]
    fn random_small_field_codes_agree_across_modes(q in prop::sample::select(vec![3u32, 4, 5]), rows in 1usize..3, seed in proptest::collection::vec(0u8..5, 12)) {
        let f = Field::gf(q).unwrap();
        let n = 5;
        let g_rows: Vec<Vec<u8>> = seed.chunks(n).take(rows).filter(|c| c.len() == n)
            .map(|c| c.iter().map(|&x| x % q as u8).collect()).collect();
        prop_assume!(!g_rows.is_empty());
        let code = Code::from_generator(&f, n, &g_rows).unwrap();
        cross_validate_modes(&code, &Guards::default()).unwrap();
    }
}
