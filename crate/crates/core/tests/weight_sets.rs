mod common;

use common::{random_equivalent, random_rep, random_weight, uncapped_search};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tameweights::adequacy::FiniteField;
use tameweights::verify::semisimple_reps;
use tameweights::weights::{
    bdj_set, det_char, det_weight_set, enumerate_weight_classes, explicit_set, explicit_set_by_search,
    find_witness, ghs_inertial_set, schein_set, weight_class, weights_equivalent, LocalModRep, SerreWeight,
};

/// `x ↦ ∏_i σ_i(x)^{b_i}` at a generator of `F_{l^f}^×`, with `σ_{f-1}` the
/// identity and `σ_i = σ_{i+1}^l`.
fn twist_value(a: &SerreWeight, b: &SerreWeight) -> bool {
    let f = a.f();
    let k = FiniteField::standard(a.l(), f as u32).unwrap();
    let q1 = k.order() as i64 - 1;
    let g = k.primitive();
    let mut acc = k.one();
    let mut sigma = g;
    for i in (0..f).rev() {
        let b_i = (a.lower(i) - b.lower(i)).rem_euclid(q1) as u64;
        acc = k.mul(acc, k.pow(sigma, b_i));
        sigma = k.pow(sigma, a.l());
    }
    acc == k.one()
}

#[test]
fn equivalence_matches_field_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (l, f) in [(3u64, 1usize), (3, 2), (5, 2), (7, 3), (3, 4)] {
        for _ in 0..200 {
            let a = random_weight(&mut rng, l, f);
            let b = if rng.gen_bool(0.5) { random_equivalent(&mut rng, &a) } else { random_weight(&mut rng, l, f) };
            let oracle = a.differences() == b.differences() && twist_value(&a, &b);
            assert_eq!(weights_equivalent(&a, &b).unwrap(), oracle, "{a} {b}");
        }
    }
    let w = |p: &[(i64, i64)]| SerreWeight::new(3, p.to_vec()).unwrap();
    assert!(!twist_value(&w(&[(2, 0)]), &w(&[(3, 1)])));
    assert!(!weights_equivalent(&w(&[(2, 0)]), &w(&[(3, 1)])).unwrap());
}

#[test]
fn membership_is_class_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut runs = 0;
    while runs < 500 {
        let (l, f) = [(3u64, 1usize), (3, 2), (5, 1), (5, 2)][rng.gen_range(0..4)];
        let e = rng.gen_range(1..4);
        let rho = random_rep(&mut rng, l, f, e, true);
        let a = random_weight(&mut rng, l, f);
        let b = random_equivalent(&mut rng, &a);
        let class = weight_class(&a).unwrap();
        assert_eq!(class, weight_class(&b).unwrap());
        let wa = find_witness(&rho, &a).unwrap().is_some();
        let wb = find_witness(&rho, &b).unwrap().is_some();
        assert_eq!(wa, wb, "{rho:?} {a} {b}");
        assert_eq!(explicit_set(&rho).contains(&class), wa);
        if rho.is_semisimple() {
            assert_eq!(schein_set(&rho).unwrap().contains(&class), wa);
        } else {
            assert_eq!(ghs_inertial_set(&rho).unwrap().contains(&class), wa);
        }
        if e == 1 {
            assert_eq!(bdj_set(&rho).unwrap().contains(&class), wa);
        }
        runs += 1;
    }
}

#[test]
fn delta_cap_loses_nothing() {
    for (l, f, es) in [(3u64, 1usize, 1..=6u64), (5, 1, 1..=7), (3, 2, 1..=3)] {
        for e in es {
            let mut reps = semisimple_reps(l, f, e).unwrap();
            reps.extend(nonsplit_reps(l, f, e));
            for rho in &reps {
                for c in enumerate_weight_classes(l, f).unwrap() {
                    let a = c.representative(l);
                    let capped = find_witness(rho, &a).unwrap().is_some();
                    assert_eq!(capped, uncapped_search(rho, &a), "{rho:?} {a} e={e}");
                }
            }
        }
    }
}

fn nonsplit_reps(l: u64, f: usize, e: u64) -> Vec<LocalModRep> {
    let m = (l.pow(f as u32) - 1) as i64;
    let digits = |x: i64| -> Vec<i64> {
        let mut v = vec![0; f];
        let mut r = x;
        for d in v.iter_mut().rev() {
            *d = r % l as i64;
            r /= l as i64;
        }
        v
    };
    let mut out = Vec::new();
    for x in 0..m {
        for y in 0..m {
            out.push(LocalModRep::non_split(l, f, e, &digits(x), &digits(y)).unwrap());
        }
    }
    out
}

#[test]
fn e_periodicity() {
    for (l, f) in [(3u64, 1usize), (5, 1), (3, 2)] {
        let m = l.pow(f as u32) - 1;
        for e in [m, m + 1] {
            for rho in semisimple_reps(l, f, e).unwrap() {
                let later = rho.with_e(e + m).unwrap();
                assert_eq!(schein_set(&rho).unwrap(), schein_set(&later).unwrap(), "{rho:?}");
            }
        }
    }
}

#[test]
fn big_e_sets_are_determinant_sets() {
    for (l, f, e) in [(3u64, 1usize, 3u64), (3, 1, 4), (3, 2, 3), (3, 2, 5), (5, 1, 5), (5, 1, 6), (5, 2, 5)] {
        for rho in semisimple_reps(l, f, e).unwrap() {
            assert_eq!(schein_set(&rho).unwrap().classes, det_weight_set(&rho.det(), e).classes, "{rho:?}");
        }
    }
}

#[test]
fn det_weight_set_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let (l, f) = [(3u64, 1usize), (3, 2), (5, 2), (7, 2), (3, 3)][rng.gen_range(0..5)];
        let e = rng.gen_range(1..10);
        let a = random_weight(&mut rng, l, f);
        let chi = common::random_char(&mut rng, a.params());
        let set = det_weight_set(&chi, e);
        assert_eq!(set.contains(&weight_class(&a).unwrap()), det_char(&a, e).unwrap() == chi);
        let own = det_weight_set(&det_char(&a, e).unwrap(), e);
        assert!(own.contains(&weight_class(&a).unwrap()));
        assert_eq!(own.len() as u64 % 2, 0);
    }
}

#[test]
fn unramified_sets_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let (l, f) = [(3u64, 1usize), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2), (3, 3)][rng.gen_range(0..7)];
        let rho = random_rep(&mut rng, l, f, 1, false);
        let bdj = bdj_set(&rho).unwrap();
        assert_eq!(bdj, schein_set(&rho).unwrap());
        assert!(!bdj.superset);
    }
    for rho in semisimple_reps(5, 2, 1).unwrap().iter().step_by(7) {
        assert_eq!(explicit_set(rho), explicit_set_by_search(rho).unwrap());
    }
}

#[test]
fn nonsplit_sets_are_flagged_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..60 {
        let e = rng.gen_range(1..4);
        let rho = loop {
            let r = random_rep(&mut rng, 5, 1, e, true);
            if !r.is_semisimple() {
                break r;
            }
        };
        let ghs = ghs_inertial_set(&rho).unwrap();
        assert!(ghs.superset);
        assert!(schein_set(&rho).is_err());
        let tameweights::weights::Shape::NonSplit { sub, quotient } = rho.shape() else { unreachable!() };
        let split = LocalModRep::new(5, 1, e, tameweights::weights::Shape::Split(*sub, *quotient)).unwrap();
        assert!(ghs.classes.is_subset(&schein_set(&split).unwrap().classes));
    }
}
