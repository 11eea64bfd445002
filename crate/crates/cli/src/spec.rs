//! TOML input documents.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use tameweights::adequacy::{group_closure, FiniteField, Mat, MatGroup, StandardGroup};
use tameweights::weights::{LocalModRep, SerreWeight};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeName {
    Irreducible,
    Split,
    Nonsplit,
}

/// A local representation, optionally with a weight to query.
///
/// `characters` holds one niveau-`2f` exponent vector for `irreducible`,
/// or two niveau-`f` vectors (sub first) otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub l: u64,
    pub f: usize,
    pub e: u64,
    pub shape: ShapeName,
    pub characters: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<(i64, i64)>>,
}

fn field_err(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("field `{field}`: {msg}"))
}

impl RepSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serialises")
    }

    pub fn rep(&self) -> Result<LocalModRep, CliError> {
        let (want, len) = match self.shape {
            ShapeName::Irreducible => (1, 2 * self.f),
            _ => (2, self.f),
        };
        if self.characters.len() != want {
            return Err(field_err("characters", format!("expected {want} vectors for {:?}", self.shape)));
        }
        if let Some(v) = self.characters.iter().find(|v| v.len() != len) {
            return Err(field_err("characters", format!("vector {v:?} should have length {len}")));
        }
        let c = &self.characters;
        let rep = match self.shape {
            ShapeName::Irreducible => LocalModRep::irreducible(self.l, self.f, self.e, &c[0]),
            ShapeName::Split => LocalModRep::split(self.l, self.f, self.e, &c[0], &c[1]),
            ShapeName::Nonsplit => LocalModRep::non_split(self.l, self.f, self.e, &c[0], &c[1]),
        };
        rep.map_err(|e| field_err("characters", e))
    }

    pub fn query(&self) -> Result<Option<SerreWeight>, CliError> {
        self.weight
            .as_ref()
            .map(|w| SerreWeight::new(self.l, w.clone()).map_err(|e| field_err("weight", e)))
            .transpose()
    }
}

/// Input of `detset`: a niveau-`f` character and `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetSpec {
    pub l: u64,
    pub f: usize,
    pub e: u64,
    pub character: Vec<i64>,
}

/// Input of `equiv`: two weights at the same `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivSpec {
    pub l: u64,
    pub a: Vec<(i64, i64)>,
    pub b: Vec<(i64, i64)>,
}

/// A matrix entry: a prime-field integer or a coefficient vector
/// `(c₀, …, c_{m-1})` in the power basis of the shipped modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(u64),
    Coeffs(Vec<u64>),
}

/// A finite matrix group, either named or by explicit generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    /// Generators, row-major.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<Vec<Entry>>>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serialises")
    }

    /// The characteristic to test adequacy at.
    pub fn l(&self) -> Result<u64, CliError> {
        if let Some(l) = self.l {
            return Ok(l);
        }
        match &self.named {
            Some(name) => {
                let g: StandardGroup = name.parse().map_err(|e| field_err("named", e))?;
                Ok(g.field().map_err(|e| field_err("named", e))?.characteristic())
            }
            None => Err(field_err("l", "missing")),
        }
    }

    pub fn group(&self, cap: usize) -> Result<MatGroup, CliError> {
        if let Some(name) = &self.named {
            if self.n.is_some() || self.m.is_some() || !self.generators.is_empty() {
                return Err(field_err("named", "cannot be combined with n, m or generators"));
            }
            let g: StandardGroup = name.parse().map_err(|e| field_err("named", e))?;
            return g.build(cap).map_err(CliError::engine);
        }
        let l = self.l.ok_or_else(|| field_err("l", "missing"))?;
        let n = self.n.ok_or_else(|| field_err("n", "missing"))?;
        let m = self.m.unwrap_or(1);
        let k = Arc::new(FiniteField::standard(l, m).map_err(|e| field_err("m", e))?);
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            if g.len() != n || g.iter().any(|row| row.len() != n) {
                return Err(field_err("generators", format!("generator {gi} is not {n}×{n}")));
            }
            let mut flat = Vec::with_capacity(n * n);
            for entry in g.iter().flatten() {
                let value = match entry {
                    Entry::Int(x) => k.from_int((*x % l) as i64),
                    Entry::Coeffs(c) => {
                        if c.len() != m as usize {
                            return Err(field_err(
                                "generators",
                                format!("entry {c:?} of generator {gi} should have length {m}"),
                            ));
                        }
                        k.from_coeffs(c).map_err(|e| field_err("generators", e))?
                    }
                };
                flat.push(value);
            }
            gens.push(Mat::from_flat(n, flat));
        }
        group_closure(n, k, gens, cap).map_err(|e| match e {
            tameweights::Error::SingularGenerator(i) => {
                field_err("generators", format!("generator {i} is singular"))
            }
            other => CliError::engine(other),
        })
    }
}
