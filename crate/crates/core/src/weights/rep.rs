use serde::{Deserialize, Serialize};

use crate::char_arith::{FieldParams, InertialChar};
use crate::error::{Error, Result};

use super::SerreWeight;

/// Restriction to inertia of a two-dimensional mod-`l` representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    /// Induced from `ψ` on the quadratic unramified extension (niveau `2f`).
    Irreducible(InertialChar),
    /// `χ₁ ⊕ χ₂` (niveau `f`).
    Split(InertialChar, InertialChar),
    /// Non-split extension with sub `χ₁` and quotient `χ₂` (niveau `f`).
    NonSplit { sub: InertialChar, quotient: InertialChar },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalModRep {
    l: u64,
    f: usize,
    e: u64,
    shape: Shape,
}

impl LocalModRep {
    pub fn new(l: u64, f: usize, e: u64, shape: Shape) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParams("e must be at least 1".into()));
        }
        let base = FieldParams::new(l, f as u32)?;
        let expect = |c: &InertialChar, params: FieldParams| {
            if c.params() == params {
                Ok(())
            } else {
                Err(Error::ParamMismatch(format!(
                    "character at niveau {} where {} was expected",
                    c.params().f_prime(),
                    params.f_prime()
                )))
            }
        };
        match &shape {
            Shape::Irreducible(psi) => {
                expect(psi, base.doubled()?)?;
                if *psi == psi.conjugate_c()? {
                    return Err(Error::ReducibleInduction);
                }
            }
            Shape::Split(a, b) | Shape::NonSplit { sub: a, quotient: b } => {
                expect(a, base)?;
                expect(b, base)?;
            }
        }
        Ok(Self { l, f, e, shape })
    }

    pub fn irreducible(l: u64, f: usize, e: u64, psi: &[i64]) -> Result<Self> {
        let params = FieldParams::new(l, 2 * f as u32)?;
        Self::new(l, f, e, Shape::Irreducible(InertialChar::from_exponents(params, psi)?))
    }

    pub fn split(l: u64, f: usize, e: u64, chi1: &[i64], chi2: &[i64]) -> Result<Self> {
        let params = FieldParams::new(l, f as u32)?;
        Self::new(
            l,
            f,
            e,
            Shape::Split(
                InertialChar::from_exponents(params, chi1)?,
                InertialChar::from_exponents(params, chi2)?,
            ),
        )
    }

    pub fn non_split(l: u64, f: usize, e: u64, sub: &[i64], quotient: &[i64]) -> Result<Self> {
        let params = FieldParams::new(l, f as u32)?;
        Self::new(
            l,
            f,
            e,
            Shape::NonSplit {
                sub: InertialChar::from_exponents(params, sub)?,
                quotient: InertialChar::from_exponents(params, quotient)?,
            },
        )
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn params(&self) -> FieldParams {
        FieldParams::new(self.l, self.f as u32).expect("validated at construction")
    }

    pub fn is_semisimple(&self) -> bool {
        !matches!(self.shape, Shape::NonSplit { .. })
    }

    /// Same inertial data at another ramification index.
    pub fn with_e(&self, e: u64) -> Result<Self> {
        Self::new(self.l, self.f, e, self.shape.clone())
    }

    /// `det ρ̄|_{I_K}` at niveau `f`.
    pub fn det(&self) -> InertialChar {
        match &self.shape {
            Shape::Split(a, b) | Shape::NonSplit { sub: a, quotient: b } => {
                a.mul(b).expect("same params")
            }
            Shape::Irreducible(psi) => {
                // ψ^{1+l^f} is the inflation of the determinant
                let m_small = self.params().modulus() as i128;
                let c = psi.mul(&psi.conjugate_c().expect("even niveau")).expect("same params");
                let factor = self.l.pow(self.f as u32) as i128 + 1;
                InertialChar::from_canonical(self.params(), c.canonical() as i128 / factor % m_small)
            }
        }
    }

    /// Bound on `δ_σ` beyond which the search repeats itself.
    pub(crate) fn delta_cap(&self) -> u64 {
        let modulus = match self.shape {
            Shape::Irreducible(_) => self.params().doubled().expect("valid").modulus(),
            _ => self.params().modulus(),
        };
        self.e.min(modulus)
    }

    pub(crate) fn check_weight(&self, a: &SerreWeight) -> Result<()> {
        a.require_serre()?;
        if a.l() != self.l || a.f() != self.f {
            return Err(Error::ParamMismatch(format!(
                "weight at (l={}, f={}) for a representation at (l={}, f={})",
                a.l(),
                a.f(),
                self.l,
                self.f
            )));
        }
        Ok(())
    }
}

/// The set `J` of a witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Embeddings {
    /// `σ_i ∈ J` iff entry `i` is set.
    Niveau1(Vec<bool>),
    /// Entry `i` picks the extension of `σ_i` lying in `J`: `σ̃_i` when
    /// unset, `σ̃_{i+f}` when set.
    Niveau2(Vec<bool>),
}

impl Embeddings {
    pub fn bits(&self) -> &[bool] {
        match self {
            Embeddings::Niveau1(b) | Embeddings::Niveau2(b) => b,
        }
    }

    pub fn niveau(&self) -> u8 {
        match self {
            Embeddings::Niveau1(_) => 1,
            Embeddings::Niveau2(_) => 2,
        }
    }
}

/// A choice of `J` and `δ` exhibiting a weight in an explicit set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WitnessJD {
    pub j: Embeddings,
    pub delta: Vec<u64>,
}

impl WitnessJD {
    pub(crate) fn validate(&self, f: usize, e: u64) -> Result<()> {
        if self.j.bits().len() != f || self.delta.len() != f {
            return Err(Error::InvalidWitness(format!("expected {f} entries in {self:?}")));
        }
        if let Some(d) = self.delta.iter().find(|d| **d >= e) {
            return Err(Error::InvalidWitness(format!("delta {d} outside [0, {}]", e - 1)));
        }
        Ok(())
    }
}

/// The two diagonal characters prescribed by `(J, δ)` for the weight `a`.
///
/// Niveau 1 gives `(∏_J ω^{a₁+1+δ} ∏_{J^c} ω^{a₂+δ}, ∏_{J^c} ω^{a₁+e-δ} ∏_J ω^{a₂+e-1-δ})`;
/// niveau 2 gives `(∏_J ω̃^{a₁+1+δ} ∏_{J^c} ω̃^{a₂+e-1-δ}, same with J and J^c swapped)`.
/// `δ` is taken as given, without range checks, so the periodicity of the
/// search can be probed.
pub fn witness_characters(
    a: &SerreWeight,
    e: u64,
    w: &WitnessJD,
) -> Result<(InertialChar, InertialChar)> {
    let f = a.f();
    if w.j.bits().len() != f || w.delta.len() != f {
        return Err(Error::InvalidWitness(format!("expected {f} entries")));
    }
    let e = e as i64;
    match &w.j {
        Embeddings::Niveau1(in_j) => {
            let mut first = vec![0i64; f];
            let mut second = vec![0i64; f];
            for i in 0..f {
                let (a1, a2) = a.pairs()[i];
                let d = w.delta[i] as i64;
                if in_j[i] {
                    first[i] = a1 + 1 + d;
                    second[i] = a2 + e - 1 - d;
                } else {
                    first[i] = a2 + d;
                    second[i] = a1 + e - d;
                }
            }
            let params = a.params();
            Ok((
                InertialChar::from_exponents(params, &first)?,
                InertialChar::from_exponents(params, &second)?,
            ))
        }
        Embeddings::Niveau2(upper) => {
            let mut first = vec![0i64; 2 * f];
            let mut second = vec![0i64; 2 * f];
            for i in 0..f {
                let (a1, a2) = a.pairs()[i];
                let d = w.delta[i] as i64;
                let (pj, pc) = if upper[i] { (i + f, i) } else { (i, i + f) };
                first[pj] = a1 + 1 + d;
                first[pc] = a2 + e - 1 - d;
                second[pc] = a1 + 1 + d;
                second[pj] = a2 + e - 1 - d;
            }
            let params = a.params().doubled()?;
            Ok((
                InertialChar::from_exponents(params, &first)?,
                InertialChar::from_exponents(params, &second)?,
            ))
        }
    }
}

fn unordered_eq(x: (InertialChar, InertialChar), y: (InertialChar, InertialChar)) -> bool {
    (x.0 == y.0 && x.1 == y.1) || (x.0 == y.1 && x.1 == y.0)
}

/// Whether the characters of `w` match `rho`: as an unordered pair for
/// semisimple shapes, sub-first for non-split ones.
pub(crate) fn matches(rho: &LocalModRep, chars: (InertialChar, InertialChar)) -> bool {
    match rho.shape() {
        Shape::Split(a, b) => unordered_eq(chars, (*a, *b)),
        Shape::NonSplit { sub, quotient } => chars.0 == *sub && chars.1 == *quotient,
        Shape::Irreducible(psi) => {
            unordered_eq(chars, (*psi, psi.conjugate_c().expect("even niveau")))
        }
    }
}

/// Every `J`, starting from the full set.
pub(crate) fn all_j(f: usize, niveau2: bool) -> impl Iterator<Item = Embeddings> {
    (0u64..1 << f).rev().map(move |mask| {
        let bits: Vec<bool> = (0..f).map(|i| mask >> i & 1 == 1).collect();
        if niveau2 {
            Embeddings::Niveau2(bits)
        } else {
            Embeddings::Niveau1(bits)
        }
    })
}

/// Every `δ ∈ [0, cap)^f` in lexicographic order.
pub(crate) fn all_delta(f: usize, cap: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = cap.checked_pow(f as u32).expect("delta search space fits in u64");
    (0..total).map(move |mut code| {
        let mut d = vec![0u64; f];
        for slot in d.iter_mut().rev() {
            *slot = code % cap;
            code /= cap;
        }
        d
    })
}

/// Search for `(J, δ)` realising `a` for `rho`. The `δ` range is capped at
/// `min(e, l^{f'} - 1)`, which loses nothing since each exponent is affine in
/// `δ_σ` with unit slope.
pub fn find_witness(rho: &LocalModRep, a: &SerreWeight) -> Result<Option<WitnessJD>> {
    rho.check_weight(a)?;
    let niveau2 = matches!(rho.shape(), Shape::Irreducible(_));
    let cap = rho.delta_cap();
    for j in all_j(rho.f(), niveau2) {
        for delta in all_delta(rho.f(), cap) {
            let w = WitnessJD { j: j.clone(), delta };
            if matches(rho, witness_characters(a, rho.e(), &w)?) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
