//! Constructive `(J, δ)` for `e ≥ l`, when the determinant condition alone
//! decides membership.

use crate::char_arith::InertialChar;
use crate::error::{Error, Result};

use super::rep::witness_characters;
use super::{det_char, Embeddings, SerreWeight, WitnessJD};

fn require_big_e(a: &SerreWeight, e: u64) -> Result<()> {
    a.require_serre()?;
    if e < a.l() {
        return Err(Error::PreconditionViolated(format!("e = {e} < l = {}", a.l())));
    }
    Ok(())
}

/// Witness for `χ₁ ⊕ χ₂` with `J` the full set and `δ` the digits of
/// `χ₁ · ∏_σ ω_σ^{-(a_{σ,1}+1)}`; the first witness character is `χ₁`.
pub fn solve_niveau1_big_e(
    chi1: &InertialChar,
    chi2: &InertialChar,
    a: &SerreWeight,
    e: u64,
) -> Result<WitnessJD> {
    require_big_e(a, e)?;
    if chi1.params() != a.params() || chi2.params() != a.params() {
        return Err(Error::ParamMismatch("characters must have niveau f".into()));
    }
    if chi1.mul(chi2)? != det_char(a, e)? {
        return Err(Error::PreconditionViolated("determinant condition fails".into()));
    }
    let shifts: Vec<i64> = a.pairs().iter().map(|(a1, _)| a1 + 1).collect();
    let rest = chi1.div(&InertialChar::from_exponents(a.params(), &shifts)?)?;
    let w = WitnessJD {
        j: Embeddings::Niveau1(vec![true; a.f()]),
        delta: rest.digits().iter().map(|c| *c as u64).collect(),
    };
    let (first, second) = witness_characters(a, e, &w)?;
    if first != *chi1 || second != *chi2 {
        return Err(Error::InvalidWitness(format!("constructed {w:?} does not verify")));
    }
    Ok(w)
}

/// Intermediate data of the niveau-2 construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Niveau2Trace {
    pub witness: WitnessJD,
    /// `φ'`.
    pub phi_prime: InertialChar,
    /// Digits of `φ'`, or of `φ''` when `φ'` is trivial.
    pub eta: Vec<i64>,
    /// `φ''`, present only in the case `φ' = 1`.
    pub phi_double_prime: Option<InertialChar>,
}

pub fn solve_niveau2_big_e(psi: &InertialChar, a: &SerreWeight, e: u64) -> Result<WitnessJD> {
    solve_niveau2_traced(psi, a, e).map(|t| t.witness)
}

/// Niveau-2 construction with embeddings `σ̃_p`, `p` mod `2f`, labelled so
/// that `ω̃_p = ω̃_{p+1}^l`, and `a_{p,·}` meaning `a_{p mod f,·}`.
///
/// With `J = {σ̃_1, …, σ̃_f}` put
/// `φ' = ψ ∏_{p=1}^{f} ω̃_p^{-a_{p,1}-1} ∏_{p=f+1}^{2f} ω̃_p^{-a_{p,2}-e+l}`;
/// if `φ' ≠ 1` its digits `η` satisfy `η_{p+f} = l-1-η_p` and `δ_p = η_p`.
/// Otherwise `φ'' = φ' ω̃_0^{-a_{0,1}-1+a_{0,2}} ω̃_f^{a_{0,1}+1-a_{0,2}}` is
/// non-trivial, `J = {σ̃_0, …, σ̃_{f-1}}`, `δ_p = η''_p` for `0 < p < f` and
/// `δ_0 = e-1-η''_f`.
pub fn solve_niveau2_traced(psi: &InertialChar, a: &SerreWeight, e: u64) -> Result<Niveau2Trace> {
    require_big_e(a, e)?;
    let f = a.f();
    let l = a.l() as i64;
    let big = a.params().doubled()?;
    if psi.params() != big {
        return Err(Error::ParamMismatch("psi must have niveau 2f".into()));
    }
    if psi.mul(&psi.conjugate_c()?)? != det_char(a, e)?.inflate()? {
        return Err(Error::PreconditionViolated("determinant condition fails".into()));
    }
    let e_i = e as i64;
    let mut shift = vec![0i64; 2 * f];
    for p in 1..=2 * f {
        let (a1, a2) = a.pairs()[p % f];
        shift[p % (2 * f)] = if p <= f { -a1 - 1 } else { -a2 - e_i + l };
    }
    let phi_prime = psi.mul(&InertialChar::from_exponents(big, &shift)?)?;

    let (witness, eta, phi_double_prime) = if !phi_prime.is_trivial() {
        let eta = phi_prime.digits();
        // J = {σ̃_1, …, σ̃_f}: σ_0 is covered by σ̃_f, the others by σ̃_i
        let upper: Vec<bool> = (0..f).map(|i| i == 0).collect();
        let delta = (0..f).map(|i| eta[if i == 0 { f } else { i }] as u64).collect();
        (WitnessJD { j: Embeddings::Niveau2(upper), delta }, eta, None)
    } else {
        let (a01, a02) = a.pairs()[0];
        let k = a01 + 1 - a02;
        let mut corr = vec![0i64; 2 * f];
        corr[0] = -k;
        corr[f] += k;
        let phi2 = phi_prime.mul(&InertialChar::from_exponents(big, &corr)?)?;
        let eta = phi2.digits();
        let mut delta: Vec<u64> = (0..f).map(|i| eta[i] as u64).collect();
        delta[0] = (e_i - 1 - eta[f]) as u64;
        (WitnessJD { j: Embeddings::Niveau2(vec![false; f]), delta }, eta, Some(phi2))
    };

    if let Some(d) = witness.delta.iter().find(|d| **d >= e) {
        return Err(Error::InvalidWitness(format!("delta {d} exceeds e - 1")));
    }
    let (first, _) = witness_characters(a, e, &witness)?;
    if first != *psi {
        return Err(Error::InvalidWitness(format!("constructed {witness:?} does not verify")));
    }
    Ok(Niveau2Trace { witness, phi_prime, eta, phi_double_prime })
}
