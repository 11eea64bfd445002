//! Named subgroups of `GL_2(F_q)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::field::{Elem, FiniteField};
use super::group::{group_closure, MatGroup};
use super::linalg::Mat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardGroup {
    Sl2(u64),
    Gl2(u64),
    /// Dihedral group of the given order `2m`, generated by `diag(ζ, ζ⁻¹)`
    /// with `ζ` of order `m` and the coordinate swap.
    Dihedral { q: u64, order: u64 },
    /// `2.A₅` inside `SL_2(F_9)`.
    BinaryIcosahedral,
    /// Non-zero scalar matrices in `GL_2(F_q)`.
    Scalars(u64),
}

impl fmt::Display for StandardGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sl2(q) => write!(f, "SL2({q})"),
            Self::Gl2(q) => write!(f, "GL2({q})"),
            Self::Dihedral { q, order } => write!(f, "DIHEDRAL({q}, {order})"),
            Self::BinaryIcosahedral => write!(f, "BINARY_ICOSAHEDRAL(9)"),
            Self::Scalars(q) => write!(f, "SCALARS({q})"),
        }
    }
}

fn parse_q(s: &str, spec: &str) -> Result<u64> {
    let s = s.trim();
    let s = s.strip_prefix("F_").or_else(|| s.strip_prefix('F')).unwrap_or(s);
    s.parse().map_err(|_| Error::UnsupportedSpec(spec.to_string()))
}

impl FromStr for StandardGroup {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::UnsupportedSpec(spec.to_string());
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, rest) = compact.split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(bad)?.split(',').collect();
        let group = match (name.to_ascii_uppercase().as_str(), args.as_slice()) {
            ("SL2", [q]) => Self::Sl2(parse_q(q, spec)?),
            ("GL2", [q]) => Self::Gl2(parse_q(q, spec)?),
            ("DIHEDRAL", [q, order]) => {
                Self::Dihedral { q: parse_q(q, spec)?, order: order.parse().map_err(|_| bad())? }
            }
            ("BINARY_ICOSAHEDRAL", [q]) if parse_q(q, spec)? == 9 => Self::BinaryIcosahedral,
            ("SCALARS", [q]) => Self::Scalars(parse_q(q, spec)?),
            _ => return Err(bad()),
        };
        Ok(group)
    }
}

/// Generators of `2.A₅ ⊂ SL_2(F_9)`, `F_9 = F_3[i]`, element `c₀ + c₁ i`
/// encoded as `c₀ + 3 c₁`: `[[0, -1], [1, 0]]` of order 4 and
/// `[[2+2i, 2i], [1, i]]` of order 3.
const BINARY_ICOSAHEDRAL_GENS: [[Elem; 4]; 2] = [[0, 2, 1, 0], [8, 6, 1, 3]];

impl StandardGroup {
    pub fn field(&self) -> Result<FiniteField> {
        let q = match self {
            Self::Sl2(q) | Self::Gl2(q) | Self::Scalars(q) | Self::Dihedral { q, .. } => *q,
            Self::BinaryIcosahedral => 9,
        };
        FiniteField::of_order(q).map_err(|_| Error::UnsupportedSpec(self.to_string()))
    }

    pub fn generators(&self, k: &FiniteField) -> Result<Vec<Mat>> {
        let one = k.one();
        let minus = k.neg(one);
        let alpha = k.primitive();
        let alpha_inv = k.inv(alpha).expect("non-zero");
        let m2 = |a: Elem, b: Elem, c: Elem, d: Elem| Mat::from_rows(vec![vec![a, b], vec![c, d]]);
        let sl2 = || vec![m2(one, one, 0, one), m2(0, minus, one, 0), Mat::diag(&[alpha, alpha_inv])];
        Ok(match self {
            Self::Sl2(_) => sl2(),
            Self::Gl2(_) => {
                let mut g = sl2();
                g.push(Mat::diag(&[alpha, one]));
                g
            }
            Self::Dihedral { order, .. } => {
                let q1 = k.order() as u64 - 1;
                if *order == 0 || order % 2 != 0 || !q1.is_multiple_of(order / 2) {
                    return Err(Error::UnsupportedSpec(self.to_string()));
                }
                let zeta = k.pow(alpha, q1 / (order / 2));
                let zeta_inv = k.inv(zeta).expect("non-zero");
                vec![Mat::diag(&[zeta, zeta_inv]), m2(0, one, one, 0)]
            }
            Self::BinaryIcosahedral => BINARY_ICOSAHEDRAL_GENS
                .iter()
                .map(|g| Mat::from_flat(2, g.to_vec()))
                .collect(),
            Self::Scalars(_) => vec![Mat::scalar(2, alpha)],
        })
    }

    pub fn build(&self, cap: usize) -> Result<MatGroup> {
        let k = Arc::new(self.field()?);
        let gens = self.generators(&k)?;
        group_closure(2, k, gens, cap)
    }
}

/// The named group described by `spec`, e.g. `SL2(9)` or `DIHEDRAL(5, 8)`.
pub fn standard_group(spec: &str, cap: usize) -> Result<MatGroup> {
    spec.parse::<StandardGroup>()?.build(cap)
}
