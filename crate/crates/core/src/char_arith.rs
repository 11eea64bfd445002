//! Characters of tame inertia written in terms of fundamental characters.
//!
//! At niveau `f'` the embeddings `σ_0, …, σ_{f'-1}` of the residue field are
//! labelled so that `ω_{σ_i} = ω_{σ_{i+1}}^l` (indices mod `f'`). Every such
//! character is a power of `ω_{σ_{f'-1}}`, and `ω_{σ_i}` is its
//! `l^{f'-1-i}`-th power. The exponent of a character with respect to
//! `ω_{σ_{f'-1}}` is its *canonical residue*, an element of `Z/(l^{f'}-1)`;
//! all comparisons go through it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime `l` and a niveau `f'`, with the derived modulus `l^{f'} - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    l: u64,
    f_prime: u32,
    modulus: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl FieldParams {
    pub fn new(l: u64, f_prime: u32) -> Result<Self> {
        if l < 3 || !is_prime(l) {
            return Err(Error::InvalidParams(format!("l = {l} must be an odd prime")));
        }
        if f_prime == 0 {
            return Err(Error::InvalidParams("niveau must be at least 1".into()));
        }
        let modulus = l
            .checked_pow(f_prime)
            .filter(|q| *q < (1 << 40))
            .ok_or_else(|| Error::InvalidParams(format!("{l}^{f_prime} is too large")))?
            - 1;
        Ok(Self { l, f_prime, modulus })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn f_prime(&self) -> u32 {
        self.f_prime
    }

    /// `l^{f'} - 1`, the order of every fundamental character.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Parameters one niveau up (`2f'`), where the quadratic unramified
    /// extension's characters live.
    pub fn doubled(&self) -> Result<Self> {
        Self::new(self.l, 2 * self.f_prime)
    }

    /// Weight of position `i` in the canonical residue: `l^{f'-1-i}`.
    pub fn place_value(&self, i: usize) -> u64 {
        self.l.pow(self.f_prime - 1 - i as u32)
    }

    fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.modulus as i128) as u64
    }
}

/// A character of tame inertia, stored by its canonical residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InertialChar {
    params: FieldParams,
    canonical: u64,
}

impl PartialOrd for FieldParams {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldParams {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.l, self.f_prime).cmp(&(other.l, other.f_prime))
    }
}

impl InertialChar {
    /// `∏_i ω_{σ_i}^{b_i}`.
    pub fn from_exponents(params: FieldParams, b: &[i64]) -> Result<Self> {
        if b.len() != params.f_prime as usize {
            return Err(Error::LengthMismatch {
                expected: params.f_prime as usize,
                got: b.len(),
            });
        }
        let m = params.modulus as i128;
        let canonical = b.iter().enumerate().fold(0i128, |acc, (i, &bi)| {
            (acc + (bi as i128).rem_euclid(m) * params.place_value(i) as i128) % m
        });
        Ok(Self { params, canonical: canonical as u64 })
    }

    pub fn from_canonical(params: FieldParams, canonical: i128) -> Self {
        Self { params, canonical: params.reduce(canonical) }
    }

    pub fn trivial(params: FieldParams) -> Self {
        Self { params, canonical: 0 }
    }

    /// The fundamental character `ω_{σ_i}`.
    pub fn fundamental(params: FieldParams, i: usize) -> Self {
        Self::from_canonical(params, params.place_value(i % params.f_prime as usize) as i128)
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn canonical(&self) -> u64 {
        self.canonical
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical == 0
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamMismatch(format!(
                "characters at (l={}, f'={}) and (l={}, f'={})",
                self.params.l, self.params.f_prime, other.params.l, other.params.f_prime
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_canonical(
            self.params,
            self.canonical as i128 + other.canonical as i128,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Self {
        Self::from_canonical(self.params, -(self.canonical as i128))
    }

    pub fn pow(&self, n: i64) -> Self {
        let m = self.params.modulus as i128;
        let n = (n as i128).rem_euclid(m);
        Self::from_canonical(self.params, self.canonical as i128 * n % m)
    }

    /// Base-`l` digits `d` in `[0, l-1]^{f'}` with `from_exponents(d) = self`.
    /// The trivial character gives all zeros.
    pub fn digits(&self) -> Vec<i64> {
        let l = self.params.l;
        let mut rest = self.canonical;
        let mut out = vec![0; self.params.f_prime as usize];
        for slot in out.iter_mut().rev() {
            *slot = (rest % l) as i64;
            rest /= l;
        }
        out
    }

    /// Like [`digits`](Self::digits) but the trivial character gives the
    /// all-`(l-1)` expansion.
    pub fn digits_alt(&self) -> Vec<i64> {
        if self.is_trivial() {
            vec![self.params.l as i64 - 1; self.params.f_prime as usize]
        } else {
            self.digits()
        }
    }

    /// `χ^l`; shifts the exponent vector one place towards `σ_0`.
    pub fn frobenius_twist(&self) -> Self {
        Self::from_canonical(self.params, self.canonical as i128 * self.params.l as i128)
    }

    /// `ψ^c = ψ^{l^f}` for a character at even niveau `2f`.
    pub fn conjugate_c(&self) -> Result<Self> {
        let fp = self.params.f_prime;
        if !fp.is_multiple_of(2) {
            return Err(Error::OddNiveau(fp));
        }
        let shift = self.params.l.pow(fp / 2) as i128;
        Ok(Self::from_canonical(self.params, self.canonical as i128 * shift))
    }

    /// View a niveau-`f` character on the inertia of the quadratic unramified
    /// extension (niveau `2f`).
    pub fn inflate(&self) -> Result<Self> {
        let up = self.params.doubled()?;
        let factor = self.params.l.pow(self.params.f_prime) as i128 + 1;
        Ok(Self::from_canonical(up, self.canonical as i128 * factor))
    }
}

impl fmt::Display for InertialChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .digits()
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(i, d)| format!("w{i}^{d}"))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Hodge–Tate weights of a crystalline character, one integer per embedding
/// `τ`, grouped by the residue embedding `σ_i` below it (`f'` rows of `e`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrysCharData {
    params: FieldParams,
    e: usize,
    table: Vec<Vec<i64>>,
}

impl CrysCharData {
    pub fn new(params: FieldParams, e: usize, table: Vec<Vec<i64>>) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParams("e must be positive".into()));
        }
        if table.len() != params.f_prime as usize {
            return Err(Error::LengthMismatch {
                expected: params.f_prime as usize,
                got: table.len(),
            });
        }
        if let Some(row) = table.iter().find(|r| r.len() != e) {
            return Err(Error::LengthMismatch { expected: e, got: row.len() });
        }
        Ok(Self { params, e, table })
    }

    pub fn zeros(params: FieldParams, e: usize) -> Self {
        Self { params, e, table: vec![vec![0; e]; params.f_prime as usize] }
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn table(&self) -> &[Vec<i64>] {
        &self.table
    }

    pub fn get(&self, sigma: usize, slot: usize) -> i64 {
        self.table[sigma][slot]
    }

    pub(crate) fn set(&mut self, sigma: usize, slot: usize, value: i64) {
        self.table[sigma][slot] = value;
    }

    /// Inertial restriction of the reduction mod `l` of a crystalline
    /// character with these Hodge–Tate weights: `∏_σ ω_σ^{Σ_τ a_τ}`.
    pub fn reduction(&self) -> InertialChar {
        let sums: Vec<i64> = self.table.iter().map(|row| row.iter().sum()).collect();
        InertialChar::from_exponents(self.params, &sums).expect("row count checked at construction")
    }
}
