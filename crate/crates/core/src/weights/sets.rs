use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::char_arith::InertialChar;
use crate::error::{Error, Result};

use super::rep::{all_delta, all_j, witness_characters};
use super::{enumerate_weight_classes, Embeddings, LocalModRep, SerreWeight, Shape, WeightClass, WitnessJD};

/// A set of weight classes. `superset` marks sets that only impose the
/// inertial necessary condition (non-split input).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSet {
    pub classes: BTreeSet<WeightClass>,
    pub superset: bool,
}

impl WeightSet {
    pub fn contains(&self, c: &WeightClass) -> bool {
        self.classes.contains(c)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Weight classes `a` with `det_char(a, e) = χ`.
///
/// For each difference vector `d` this solves `2t ≡ E(χ) - E(d) - e·E(1)`
/// modulo the even number `l^f - 1`, which has zero or two solutions.
pub fn det_weight_set(chi: &InertialChar, e: u64) -> WeightSet {
    let params = chi.params();
    let f = params.f_prime() as usize;
    let l = params.l();
    let m = params.modulus() as i128;
    let ones = InertialChar::from_exponents(params, &vec![1; f]).expect("length f");
    let mut classes = BTreeSet::new();
    for code in 0..l.pow(f as u32) {
        let mut d = vec![0u64; f];
        let mut rest = code;
        for slot in d.iter_mut().rev() {
            *slot = rest % l;
            rest /= l;
        }
        let d_exps: Vec<i64> = d.iter().map(|x| *x as i64).collect();
        let ed = InertialChar::from_exponents(params, &d_exps).expect("length f").canonical() as i128;
        let c = (chi.canonical() as i128 - ed - (e as i128 % m) * ones.canonical() as i128).rem_euclid(m);
        if c % 2 == 0 {
            for t in [c / 2, c / 2 + m / 2] {
                classes.insert(WeightClass { d: d.clone(), t: t as u64 });
            }
        }
    }
    WeightSet { classes, superset: false }
}

/// The twist-free part of a witness: characters `(X, Y)` with the witness
/// characters equal to `(T·X, T·Y)`, `T` being the (inflated) twist of the
/// weight. Both depend only on `d`, `J` and `δ`.
fn untwisted(d: &[u64], l: u64, e: u64, w: &WitnessJD) -> (InertialChar, InertialChar) {
    let a = SerreWeight::new(l, d.iter().map(|x| (*x as i64, 0)).collect()).expect("d ≥ 0");
    witness_characters(&a, e, w).expect("shapes agree")
}

fn classes_for(rho: &LocalModRep, j: &Embeddings) -> BTreeSet<WeightClass> {
    let (l, f) = (rho.l(), rho.f());
    let small = rho.params();
    let mut found = BTreeSet::new();
    let targets: Vec<(InertialChar, InertialChar)> = match rho.shape() {
        Shape::Split(a, b) => vec![(*a, *b), (*b, *a)],
        Shape::NonSplit { sub, quotient } => vec![(*sub, *quotient)],
        Shape::Irreducible(psi) => {
            let c = psi.conjugate_c().expect("even niveau");
            vec![(*psi, c), (c, *psi)]
        }
    };
    let inflation = l.pow(f as u32) as i128 + 1;
    for code in 0..l.pow(f as u32) {
        let mut d = vec![0u64; f];
        let mut rest = code;
        for slot in d.iter_mut().rev() {
            *slot = rest % l;
            rest /= l;
        }
        for delta in all_delta(f, rho.delta_cap()) {
            let w = WitnessJD { j: j.clone(), delta };
            let (x, y) = untwisted(&d, l, rho.e(), &w);
            for (t1, t2) in &targets {
                let twist = t1.div(&x).expect("same params");
                if twist.mul(&y).expect("same params") != *t2 {
                    continue;
                }
                let t = match rho.shape() {
                    Shape::Irreducible(_) => {
                        // the twist must be an inflated niveau-f character
                        let c = twist.canonical() as i128;
                        if c % inflation != 0 {
                            continue;
                        }
                        InertialChar::from_canonical(small, c / inflation).canonical()
                    }
                    _ => twist.canonical(),
                };
                found.insert(WeightClass { d: d.clone(), t });
            }
        }
    }
    found
}

/// Classes admitting some `(J, δ)`, found by solving for the twist instead of
/// enumerating weights.
fn witnessed_classes(rho: &LocalModRep) -> WeightSet {
    let niveau2 = matches!(rho.shape(), Shape::Irreducible(_));
    let js: Vec<Embeddings> = all_j(rho.f(), niveau2).collect();
    let classes = js
        .par_iter()
        .map(|j| classes_for(rho, j))
        .reduce(BTreeSet::new, |mut acc, part| {
            acc.extend(part);
            acc
        });
    WeightSet { classes, superset: !rho.is_semisimple() }
}

pub fn schein_set(rho: &LocalModRep) -> Result<WeightSet> {
    if !rho.is_semisimple() {
        return Err(Error::NonSemisimpleInput);
    }
    Ok(witnessed_classes(rho))
}

/// Only defined for `e = 1`. Non-split input yields the flagged inertial
/// superset.
pub fn bdj_set(rho: &LocalModRep) -> Result<WeightSet> {
    if rho.e() != 1 {
        return Err(Error::RamifiedField(rho.e()));
    }
    Ok(witnessed_classes(rho))
}

/// Weights passing the ordered inertial condition for a non-split
/// extension. Always flagged: the condition on the extension class is not
/// decided.
pub fn ghs_inertial_set(rho: &LocalModRep) -> Result<WeightSet> {
    if rho.is_semisimple() {
        return Err(Error::PreconditionViolated(
            "the GHS inertial set is computed for non-split input only".into(),
        ));
    }
    Ok(witnessed_classes(rho))
}

pub fn explicit_set(rho: &LocalModRep) -> WeightSet {
    witnessed_classes(rho)
}

/// Exhaustive variant used for cross-checks: one `find_witness` call per
/// class representative.
pub fn explicit_set_by_search(rho: &LocalModRep) -> Result<WeightSet> {
    let mut classes = BTreeSet::new();
    for c in enumerate_weight_classes(rho.l(), rho.f())? {
        let rep = c.representative(rho.l());
        if super::find_witness(rho, &rep)?.is_some() {
            classes.insert(c);
        }
    }
    Ok(WeightSet { classes, superset: !rho.is_semisimple() })
}

/// Product of local sets, one factor per chosen place above `l`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalWeightSet {
    pub tuples: Vec<Vec<WeightClass>>,
    pub superset: bool,
}

pub fn global_weight_set(local_sets: &[WeightSet]) -> GlobalWeightSet {
    let mut tuples: Vec<Vec<WeightClass>> = vec![Vec::new()];
    for set in local_sets {
        tuples = tuples
            .into_iter()
            .flat_map(|prefix| {
                set.classes.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    GlobalWeightSet { tuples, superset: local_sets.iter().any(|s| s.superset) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_arith::FieldParams;

    fn classes(pairs: &[(u64, u64)]) -> BTreeSet<WeightClass> {
        pairs.iter().map(|(d, t)| WeightClass { d: vec![*d], t: *t }).collect()
    }

    #[test]
    fn det_set_small() {
        let params = FieldParams::new(3, 1).unwrap();
        for e in 1..4 {
            for c in 0..2 {
                let s = det_weight_set(&InertialChar::from_canonical(params, c), e);
                assert!(s.len() <= 6);
                assert_eq!(s.len() % 2, 0);
            }
        }
    }

    #[test]
    fn schein_split_l3() {
        let rho = LocalModRep::split(3, 1, 1, &[1], &[0]).unwrap();
        let s = schein_set(&rho).unwrap();
        assert_eq!(s.classes, classes(&[(0, 0), (2, 0), (0, 1), (2, 1)]));
        assert!(!s.superset);
        assert_eq!(s, explicit_set_by_search(&rho).unwrap());
    }

    #[test]
    fn ghs_non_split_l3() {
        let rho = LocalModRep::non_split(3, 1, 1, &[1], &[0]).unwrap();
        let s = ghs_inertial_set(&rho).unwrap();
        assert_eq!(s.classes, classes(&[(0, 0), (2, 0), (0, 1), (2, 1)]));
        assert!(s.superset);
        assert_eq!(schein_set(&rho).unwrap_err(), Error::NonSemisimpleInput);
        assert_eq!(bdj_set(&rho).unwrap(), s);
        assert!(ghs_inertial_set(&LocalModRep::split(3, 1, 1, &[1], &[0]).unwrap()).is_err());
    }

    #[test]
    fn bdj_requires_unramified() {
        let rho = LocalModRep::split(5, 1, 2, &[3], &[0]).unwrap();
        assert_eq!(bdj_set(&rho).unwrap_err(), Error::RamifiedField(2));
        let rho = LocalModRep::split(5, 1, 1, &[3], &[0]).unwrap();
        let a = SerreWeight::new(5, vec![(2, 0)]).unwrap();
        assert!(bdj_set(&rho).unwrap().contains(&super::super::weight_class(&a).unwrap()));
    }

    #[test]
    fn global_products() {
        let a = WeightSet { classes: classes(&[(0, 0), (1, 1)]), superset: false };
        let b = WeightSet { classes: classes(&[(2, 0), (2, 1), (0, 1)]), superset: true };
        let single = global_weight_set(std::slice::from_ref(&a));
        assert_eq!(single.tuples.len(), 2);
        assert!(!single.superset);
        let both = global_weight_set(&[a.clone(), b]);
        assert_eq!(both.tuples.len(), 6);
        assert!(both.superset);
        assert!(global_weight_set(&[a, WeightSet::default()]).tuples.is_empty());
    }
}
