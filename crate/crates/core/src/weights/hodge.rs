//! Lifts of weights and the Hodge–Tate data of the diagonal crystalline
//! lifts built from a witness.

use serde::{Deserialize, Serialize};

use crate::char_arith::CrysCharData;
use crate::error::{Error, Result};

use super::{Embeddings, SerreWeight, WitnessJD};

/// A lift `λ` of a weight: above each `σ` one distinguished embedding (a slot
/// in `[0, e)`) carries `a_σ`; every other embedding carries `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HodgeTypeLift {
    pub weight: SerreWeight,
    pub e: usize,
    pub slots: Vec<usize>,
}

impl HodgeTypeLift {
    pub fn new(weight: SerreWeight, e: usize, slots: Vec<usize>) -> Result<Self> {
        if slots.len() != weight.f() {
            return Err(Error::NotALift(format!("{} slots for f = {}", slots.len(), weight.f())));
        }
        if let Some(s) = slots.iter().find(|s| **s >= e) {
            return Err(Error::NotALift(format!("slot {s} outside [0, {e})")));
        }
        Ok(Self { weight, e, slots })
    }

    /// `(λ_{τ,1}, λ_{τ,2})` at embedding `τ = (σ, slot)`.
    pub fn at(&self, sigma: usize, slot: usize) -> (i64, i64) {
        if self.slots[sigma] == slot {
            self.weight.pairs()[sigma]
        } else {
            (0, 0)
        }
    }

    /// Hodge–Tate weights `{λ_{τ,1}+1, λ_{τ,2}}`, sorted descending.
    pub fn hodge_tate(&self, sigma: usize, slot: usize) -> (i64, i64) {
        let (x, y) = self.at(sigma, slot);
        (x + 1, y)
    }
}

/// All `e^f` lifts of `a`.
pub fn lifts_of(a: &SerreWeight, e: usize) -> Result<impl Iterator<Item = HodgeTypeLift>> {
    a.require_serre()?;
    if e == 0 {
        return Err(Error::InvalidParams("e must be positive".into()));
    }
    let f = a.f();
    let total = e.checked_pow(f as u32).ok_or_else(|| Error::InvalidParams("too many lifts".into()))?;
    let a = a.clone();
    Ok((0..total).map(move |mut code| {
        let mut slots = vec![0usize; f];
        for s in slots.iter_mut().rev() {
            *s = code % e;
            code /= e;
        }
        HodgeTypeLift { weight: a.clone(), e, slots }
    }))
}

fn check_inputs(a: &SerreWeight, w: &WitnessJD, lift: &HodgeTypeLift, niveau: u8) -> Result<()> {
    a.require_serre()?;
    if lift.weight != *a {
        return Err(Error::NotALift(format!("lift of {} used for {a}", lift.weight)));
    }
    if lift.slots.len() != a.f() || lift.slots.iter().any(|s| *s >= lift.e) {
        return Err(Error::NotALift("slots out of range".into()));
    }
    if w.j.niveau() != niveau {
        return Err(Error::InvalidWitness(format!("expected a niveau-{niveau} witness")));
    }
    w.validate(a.f(), lift.e as u64)
}

/// The first `count` slots of `[0, e)` other than `skip`.
fn chosen_slots(e: usize, skip: usize, count: usize) -> Vec<bool> {
    let mut chosen = vec![false; e];
    for s in (0..e).filter(|s| *s != skip).take(count) {
        chosen[s] = true;
    }
    chosen
}

/// Hodge–Tate tables `(B, C)` of the two characters of a diagonal
/// crystalline lift of Hodge type `λ`, for a niveau-1 witness.
///
/// For `σ ∈ J` the set `K_σ` is the first `δ_σ` non-distinguished slots;
/// for `σ ∉ J` it has `e-1-δ_σ` elements, so that the reductions are the
/// witness characters in the `a₂+δ`, `a₁+e-δ` normalisation.
pub fn ht_data_niveau1(
    a: &SerreWeight,
    w: &WitnessJD,
    lift: &HodgeTypeLift,
) -> Result<(CrysCharData, CrysCharData)> {
    check_inputs(a, w, lift, 1)?;
    let e = lift.e;
    let params = a.params();
    let mut b = CrysCharData::zeros(params, e);
    let mut c = CrysCharData::zeros(params, e);
    let Embeddings::Niveau1(in_j) = &w.j else { unreachable!() };
    for (s, &(a1, a2)) in a.pairs().iter().enumerate() {
        let dist = lift.slots[s];
        let delta = w.delta[s] as usize;
        // (main, other) receive (a₁+1, a₂) at the distinguished slot
        let (main, other) = if in_j[s] { (&mut b, &mut c) } else { (&mut c, &mut b) };
        let k_size = if in_j[s] { delta } else { e - 1 - delta };
        let k = chosen_slots(e, dist, k_size);
        for slot in 0..e {
            if slot == dist {
                main.set(s, slot, a1 + 1);
                other.set(s, slot, a2);
            } else if k[slot] {
                main.set(s, slot, 1);
            } else {
                other.set(s, slot, 1);
            }
        }
    }
    Ok((b, c))
}

/// Hodge–Tate table of the character `ψ̃` of `G_{K'}` (rows are the `2f`
/// embeddings `σ̃_p`) whose induction is a lift of Hodge type `λ`.
pub fn ht_data_niveau2(a: &SerreWeight, w: &WitnessJD, lift: &HodgeTypeLift) -> Result<CrysCharData> {
    check_inputs(a, w, lift, 2)?;
    let e = lift.e;
    let f = a.f();
    let mut b = CrysCharData::zeros(a.params().doubled()?, e);
    let Embeddings::Niveau2(upper) = &w.j else { unreachable!() };
    for (s, &(a1, a2)) in a.pairs().iter().enumerate() {
        let (pj, pc) = if upper[s] { (s + f, s) } else { (s, s + f) };
        let dist = lift.slots[s];
        let k = chosen_slots(e, dist, w.delta[s] as usize);
        for slot in 0..e {
            if slot == dist {
                b.set(pj, slot, a1 + 1);
                b.set(pc, slot, a2);
            } else if k[slot] {
                b.set(pj, slot, 1);
            } else {
                b.set(pc, slot, 1);
            }
        }
    }
    Ok(b)
}

fn same_pair(x: (i64, i64), target: (i64, i64)) -> bool {
    x == target || (x.1, x.0) == target
}

/// Per embedding `τ`, `{B_τ, C_τ} = {λ_{τ,1}+1, λ_{τ,2}}`.
pub fn hodge_type_niveau1_holds(b: &CrysCharData, c: &CrysCharData, lift: &HodgeTypeLift) -> bool {
    (0..lift.weight.f()).all(|s| {
        (0..lift.e).all(|slot| same_pair((b.get(s, slot), c.get(s, slot)), lift.hodge_tate(s, slot)))
    })
}

/// Per `τ`, the values at its two extensions `{B_{τ₁}, B_{τ₂}}` are
/// `{λ_{τ,1}+1, λ_{τ,2}}`.
pub fn hodge_type_niveau2_holds(b: &CrysCharData, lift: &HodgeTypeLift) -> bool {
    let f = lift.weight.f();
    (0..f).all(|s| {
        (0..lift.e).all(|slot| same_pair((b.get(s, slot), b.get(s + f, slot)), lift.hodge_tate(s, slot)))
    })
}
