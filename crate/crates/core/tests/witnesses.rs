mod common;

use common::random_weight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tameweights::char_arith::InertialChar;
use tameweights::weights::{
    det_char, find_witness, hodge_type_niveau1_holds, hodge_type_niveau2_holds, ht_data_niveau1,
    ht_data_niveau2, lifts_of, solve_niveau1_big_e, solve_niveau2_big_e, solve_niveau2_traced,
    witness_characters, Embeddings, HodgeTypeLift, LocalModRep, Shape, WitnessJD,
};

const CASES: [(u64, usize); 6] = [(3, 1), (3, 2), (5, 1), (5, 2), (7, 2), (3, 3)];

#[test]
fn niveau1_solver_runs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..500 {
        let (l, f) = CASES[rng.gen_range(0..CASES.len())];
        let e = rng.gen_range(l..3 * l);
        let a = random_weight(&mut rng, l, f);
        let chi1 = common::random_char(&mut rng, a.params());
        let chi2 = det_char(&a, e).unwrap().div(&chi1).unwrap();
        let w = solve_niveau1_big_e(&chi1, &chi2, &a, e).unwrap();
        assert!(w.delta.iter().all(|d| *d < e));
        assert_eq!(witness_characters(&a, e, &w).unwrap(), (chi1, chi2));
        let bad = chi2.mul(&InertialChar::fundamental(a.params(), 0)).unwrap();
        assert!(solve_niveau1_big_e(&chi1, &bad, &a, e).is_err());
    }
}

#[test]
fn niveau2_solver_runs() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut degenerate = 0;
    for _ in 0..500 {
        let (l, f) = CASES[rng.gen_range(0..CASES.len())];
        let e = rng.gen_range(l..3 * l);
        let a = random_weight(&mut rng, l, f);
        let small = a.params();
        let big = small.doubled().unwrap();
        // ψ ψ^c = det pulled back iff E(ψ) ≡ E(det) mod l^f - 1
        let k = rng.gen_range(0..=small.modulus() + 1);
        let psi = InertialChar::from_canonical(big, (det_char(&a, e).unwrap().canonical() + k * small.modulus()) as i128);
        let trace = solve_niveau2_traced(&psi, &a, e).unwrap();
        let (first, second) = witness_characters(&a, e, &trace.witness).unwrap();
        assert_eq!(first, psi);
        assert_eq!(second, psi.conjugate_c().unwrap());
        assert!(trace.witness.delta.iter().all(|d| *d < e));
        let eta = &trace.eta;
        match &trace.phi_double_prime {
            None => {
                for p in 0..f {
                    assert_eq!(eta[p + f], l as i64 - 1 - eta[p], "{eta:?}");
                }
            }
            Some(phi2) => {
                degenerate += 1;
                assert!(trace.phi_prime.is_trivial());
                assert!(!phi2.is_trivial());
            }
        }
        if psi != psi.conjugate_c().unwrap() {
            let rho = LocalModRep::new(l, f, e, Shape::Irreducible(psi)).unwrap();
            assert!(find_witness(&rho, &a).unwrap().is_some());
        }
    }
    assert!(degenerate > 0);
}

#[test]
fn niveau2_trivial_phi_prime_case() {
    // ψ = ω̃_1 ω̃_2 cancels the shift exactly, so φ' = 1
    let a = tameweights::weights::SerreWeight::new(7, vec![(0, 0), (0, 0)]).unwrap();
    let e = 7;
    let big = a.params().doubled().unwrap();
    let psi = InertialChar::from_exponents(big, &[0, 1, 1, 0]).unwrap();
    let trace = solve_niveau2_traced(&psi, &a, e).unwrap();
    assert!(trace.phi_prime.is_trivial());
    assert!(!trace.phi_double_prime.unwrap().is_trivial());
    assert_eq!(trace.witness.j, Embeddings::Niveau2(vec![false, false]));
    assert_eq!(solve_niveau2_big_e(&psi, &a, e).unwrap(), trace.witness);
}

fn random_witness(rng: &mut impl Rng, f: usize, e: u64, niveau2: bool) -> WitnessJD {
    let bits: Vec<bool> = (0..f).map(|_| rng.gen_bool(0.5)).collect();
    WitnessJD {
        j: if niveau2 { Embeddings::Niveau2(bits) } else { Embeddings::Niveau1(bits) },
        delta: (0..f).map(|_| rng.gen_range(0..e)).collect(),
    }
}

fn random_lift(rng: &mut impl Rng, a: &tameweights::weights::SerreWeight, e: usize) -> HodgeTypeLift {
    let slots = (0..a.f()).map(|_| rng.gen_range(0..e)).collect();
    HodgeTypeLift::new(a.clone(), e, slots).unwrap()
}

#[test]
fn niveau1_hodge_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let (l, f) = CASES[rng.gen_range(0..CASES.len())];
        let e = rng.gen_range(1..6usize);
        let a = random_weight(&mut rng, l, f);
        let w = random_witness(&mut rng, f, e as u64, false);
        let lift = random_lift(&mut rng, &a, e);
        let (b, c) = ht_data_niveau1(&a, &w, &lift).unwrap();
        assert!(hodge_type_niveau1_holds(&b, &c, &lift));
        assert_eq!((b.reduction(), c.reduction()), witness_characters(&a, e as u64, &w).unwrap());
        assert_eq!(b.reduction().mul(&c.reduction()).unwrap(), det_char(&a, e as u64).unwrap());
    }
}

#[test]
fn niveau2_hodge_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let (l, f) = CASES[rng.gen_range(0..CASES.len())];
        let e = rng.gen_range(1..6usize);
        let a = random_weight(&mut rng, l, f);
        let w = random_witness(&mut rng, f, e as u64, true);
        let lift = random_lift(&mut rng, &a, e);
        let b = ht_data_niveau2(&a, &w, &lift).unwrap();
        assert!(hodge_type_niveau2_holds(&b, &lift));
        assert_eq!(b.reduction(), witness_characters(&a, e as u64, &w).unwrap().0);
        assert!(ht_data_niveau1(&a, &w, &lift).is_err());
    }
}

#[test]
fn lift_enumeration() {
    let a = tameweights::weights::SerreWeight::new(5, vec![(4, 1), (2, 2), (3, 0)]).unwrap();
    let lifts: Vec<_> = lifts_of(&a, 3).unwrap().collect();
    assert_eq!(lifts.len(), 27);
    let distinct: std::collections::HashSet<_> = lifts.iter().map(|x| x.slots.clone()).collect();
    assert_eq!(distinct.len(), 27);
    for lift in &lifts {
        let nonzero = (0..3).flat_map(|s| (0..3).map(move |t| (s, t))).filter(|&(s, t)| lift.at(s, t) != (0, 0));
        assert!(nonzero.count() <= 3);
    }
}
