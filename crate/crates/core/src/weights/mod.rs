//! Serre weights of `GL_2(k)` and the explicit weight sets of local mod-`l`
//! representations.
//!
//! Embeddings `σ_0, …, σ_{f-1}` of the residue field follow the labelling of
//! [`crate::char_arith`]. Over the quadratic extension, `σ̃_p` (for
//! `p ∈ [0, 2f)`) restricts to `σ_{p mod f}`.

mod hodge;
mod rep;
mod sets;
mod solvers;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::char_arith::{FieldParams, InertialChar};
use crate::error::{Error, Result};

pub use hodge::{
    ht_data_niveau1, ht_data_niveau2, hodge_type_niveau1_holds, hodge_type_niveau2_holds,
    lifts_of, HodgeTypeLift,
};
pub use rep::{find_witness, witness_characters, Embeddings, LocalModRep, Shape, WitnessJD};
pub use sets::{
    bdj_set, det_weight_set, explicit_set, explicit_set_by_search, ghs_inertial_set, global_weight_set, schein_set,
    GlobalWeightSet, WeightSet,
};
pub use solvers::{solve_niveau1_big_e, solve_niveau2_big_e, solve_niveau2_traced, Niveau2Trace};

/// A tuple `(a_{σ_i,1}, a_{σ_i,2})` per embedding, with `a_{σ,1} ≥ a_{σ,2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SerreWeight {
    l: u64,
    pairs: Vec<(i64, i64)>,
}

impl SerreWeight {
    pub fn new(l: u64, pairs: Vec<(i64, i64)>) -> Result<Self> {
        FieldParams::new(l, 1)?;
        if pairs.is_empty() {
            return Err(Error::InvalidParams("a weight needs at least one embedding".into()));
        }
        if let Some((i, _)) = pairs.iter().enumerate().find(|(_, (a1, a2))| a1 < a2) {
            return Err(Error::InvalidParams(format!(
                "a_{{{i},1}} < a_{{{i},2}} in {pairs:?}"
            )));
        }
        Ok(Self { l, pairs })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn f(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn upper(&self, i: usize) -> i64 {
        self.pairs[i].0
    }

    pub fn lower(&self, i: usize) -> i64 {
        self.pairs[i].1
    }

    pub fn params(&self) -> FieldParams {
        FieldParams::new(self.l, self.f() as u32).expect("validated at construction")
    }

    pub fn differences(&self) -> Vec<i64> {
        self.pairs.iter().map(|(a1, a2)| a1 - a2).collect()
    }

    pub fn is_serre_weight(&self) -> bool {
        self.differences().iter().all(|d| *d < self.l as i64)
    }

    pub(crate) fn require_serre(&self) -> Result<()> {
        if self.is_serre_weight() {
            Ok(())
        } else {
            Err(Error::NotASerreWeight(format!("{self} at l = {}", self.l)))
        }
    }

    /// `∏_σ ω_σ^{a_{σ,2}}`, the twist part of the weight.
    pub fn twist_char(&self) -> InertialChar {
        let lows: Vec<i64> = self.pairs.iter().map(|p| p.1).collect();
        InertialChar::from_exponents(self.params(), &lows).expect("length matches f")
    }
}

impl fmt::Display for SerreWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Equivalence class of a Serre weight: difference vector and twist residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightClass {
    pub d: Vec<u64>,
    pub t: u64,
}

impl WeightClass {
    /// The weight whose lower entries are the base-`l` digits of `t`.
    pub fn representative(&self, l: u64) -> SerreWeight {
        let params = FieldParams::new(l, self.d.len() as u32).expect("class of a valid weight");
        let lows = InertialChar::from_canonical(params, self.t as i128).digits();
        let pairs = lows.iter().zip(&self.d).map(|(&lo, &d)| (lo + d as i64, lo)).collect();
        SerreWeight { l, pairs }
    }
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "d=({}) t={}", d.join(","), self.t)
    }
}

fn check_same(a: &SerreWeight, b: &SerreWeight) -> Result<()> {
    if a.l != b.l || a.f() != b.f() {
        return Err(Error::ParamMismatch(format!(
            "weights at (l={}, f={}) and (l={}, f={})",
            a.l,
            a.f(),
            b.l,
            b.f()
        )));
    }
    Ok(())
}

pub fn weights_equivalent(a: &SerreWeight, b: &SerreWeight) -> Result<bool> {
    check_same(a, b)?;
    a.require_serre()?;
    b.require_serre()?;
    Ok(a.differences() == b.differences() && a.twist_char() == b.twist_char())
}

pub fn weight_class(a: &SerreWeight) -> Result<WeightClass> {
    a.require_serre()?;
    Ok(WeightClass {
        d: a.differences().iter().map(|d| *d as u64).collect(),
        t: a.twist_char().canonical(),
    })
}

/// All `l^f (l^f - 1)` weight classes, ordered by `(d, t)`.
pub fn enumerate_weight_classes(l: u64, f: usize) -> Result<impl Iterator<Item = WeightClass>> {
    let params = FieldParams::new(l, f as u32)?;
    let m = params.modulus();
    let count = l.pow(f as u32);
    Ok((0..count).flat_map(move |code| {
        let mut d = vec![0u64; f];
        let mut rest = code;
        for slot in d.iter_mut().rev() {
            *slot = rest % l;
            rest /= l;
        }
        (0..m).map(move |t| WeightClass { d: d.clone(), t })
    }))
}

pub fn is_regular(a: &SerreWeight) -> Result<bool> {
    a.require_serre()?;
    Ok(a.differences().iter().all(|d| *d <= a.l as i64 - 3))
}

pub fn is_e_regular(a: &SerreWeight, e: u64) -> Result<bool> {
    a.require_serre()?;
    Ok(a.differences().iter().all(|d| *d <= a.l as i64 - 1 - e as i64))
}

/// `∏_σ ω_σ^{a_{σ,1} + a_{σ,2} + e}`: the inertial determinant forced on any
/// crystalline lift of Hodge type lifting `a`.
pub fn det_char(a: &SerreWeight, e: u64) -> Result<InertialChar> {
    a.require_serre()?;
    let exps: Vec<i64> = a.pairs.iter().map(|(x, y)| x + y + e as i64).collect();
    InertialChar::from_exponents(a.params(), &exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: u64, pairs: &[(i64, i64)]) -> SerreWeight {
        SerreWeight::new(l, pairs.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_predicates() {
        assert!(SerreWeight::new(3, vec![(0, 1)]).is_err());
        assert!(SerreWeight::new(4, vec![(1, 0)]).is_err());
        assert!(w(3, &[(2, 0)]).is_serre_weight());
        assert!(!w(3, &[(3, 0)]).is_serre_weight());
        assert!(is_regular(&w(5, &[(2, 0)])).unwrap());
        assert!(!is_regular(&w(5, &[(3, 0)])).unwrap());
        assert!(matches!(is_regular(&w(5, &[(5, 0)])), Err(Error::NotASerreWeight(_))));
        for d in 0..5 {
            let a = w(5, &[(d, 0)]);
            assert_eq!(is_e_regular(&a, 1).unwrap(), d <= 3);
        }
    }

    #[test]
    fn equivalence_examples() {
        let a = w(3, &[(2, 0)]);
        assert!(weights_equivalent(&a, &a).unwrap());
        assert!(weights_equivalent(&a, &w(3, &[(4, 2)])).unwrap());
        assert!(!weights_equivalent(&a, &w(3, &[(3, 1)])).unwrap());
        assert!(matches!(
            weights_equivalent(&a, &w(5, &[(2, 0)])),
            Err(Error::ParamMismatch(_))
        ));
        assert!(matches!(
            weights_equivalent(&a, &w(3, &[(3, 0)])),
            Err(Error::NotASerreWeight(_))
        ));
    }

    #[test]
    fn classes() {
        assert_eq!(enumerate_weight_classes(3, 1).unwrap().count(), 6);
        assert_eq!(enumerate_weight_classes(3, 2).unwrap().count(), 72);
        let c = weight_class(&w(3, &[(2, 0)])).unwrap();
        assert_eq!(c, WeightClass { d: vec![2], t: 0 });
        for c in enumerate_weight_classes(5, 2).unwrap() {
            assert_eq!(weight_class(&c.representative(5)).unwrap(), c);
        }
    }

    #[test]
    fn determinant_character() {
        let a = w(7, &[(6, 0), (1, 0)]);
        let expected = InertialChar::from_exponents(FieldParams::new(7, 2).unwrap(), &[12, 7]).unwrap();
        assert_eq!(det_char(&a, 6).unwrap(), expected);
        assert!(det_char(&w(5, &[(0, 0)]), 0).unwrap().is_trivial());
    }
}
