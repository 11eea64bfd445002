//! The adequacy verdict and the constructions it is tested against.

use std::sync::Arc;

use serde::Serialize;

use super::cohomology::h1_adjoint;
use super::field::FiniteField;
use super::group::{abelianization_l_part, group_closure, span_rank_prime_to_l, MatGroup};
use super::linalg::Mat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub pass: bool,
    /// The quantity the condition was decided on, if any.
    pub value: Option<u64>,
}

/// The four adequacy conditions.
///
/// `cond1.value` is the `l`-part of `|G^ab|`, `cond3.value` the span rank
/// of prime-to-`l` elements and `cond4.value` is `dim H¹(G, gl_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdequacyReport {
    pub l: u64,
    pub n: usize,
    pub order: usize,
    pub cond1: Condition,
    pub cond2: Condition,
    pub cond3: Condition,
    pub cond4: Condition,
    pub verdict: bool,
}

impl AdequacyReport {
    /// Indices (1-based) of the failing conditions.
    pub fn failures(&self) -> Vec<u8> {
        [self.cond1, self.cond2, self.cond3, self.cond4]
            .iter()
            .zip(1..)
            .filter(|(c, _)| !c.pass)
            .map(|(_, i)| i)
            .collect()
    }
}

pub fn is_adequate(g: &MatGroup, l: u64) -> Result<AdequacyReport> {
    let field_l = g.field().characteristic();
    if field_l != l {
        return Err(Error::CharMismatch { field: field_l, l });
    }
    let n = g.n();
    let cap = g.order().max(super::group::DEFAULT_CAP);
    let l_part = abelianization_l_part(g, l, cap)?;
    let span = span_rank_prime_to_l(g) as u64;
    let h1 = h1_adjoint(g) as u64;
    let cond1 = Condition { pass: l_part == 1, value: Some(l_part) };
    let cond2 = Condition { pass: !(n as u64).is_multiple_of(l), value: None };
    let cond3 = Condition { pass: span == (n * n) as u64, value: Some(span) };
    let cond4 = Condition { pass: h1 == 0, value: Some(h1) };
    Ok(AdequacyReport {
        l,
        n,
        order: g.order(),
        cond1,
        cond2,
        cond3,
        cond4,
        verdict: cond1.pass && cond2.pass && cond3.pass && cond4.pass,
    })
}

/// `k^× G` for the subfield `k` of degree `subfield_degree` of the entry field.
pub fn scalar_saturate(g: &MatGroup, subfield_degree: u32, cap: usize) -> Result<MatGroup> {
    let alpha = g.field().subfield_generator(subfield_degree)?;
    let mut gens = g.generators().to_vec();
    let scalar = Mat::scalar(g.n(), alpha);
    if !scalar.is_identity() {
        gens.push(scalar);
    }
    group_closure(g.n(), g.field_arc(), gens, cap)
}

fn same_field(a: &FiniteField, b: &FiniteField) -> Result<()> {
    if a != b {
        return Err(Error::InvalidParams(format!("{a:?} and {b:?} differ")));
    }
    Ok(())
}

/// Image of `G₁ × G₂` under `r₁ ⊗ r₂`, generated by `s ⊗ 1` and `1 ⊗ t`.
pub fn tensor_image(g1: &MatGroup, g2: &MatGroup, cap: usize) -> Result<MatGroup> {
    same_field(g1.field(), g2.field())?;
    let k = g1.field();
    let (i1, i2) = (Mat::identity(g1.n()), Mat::identity(g2.n()));
    let gens = g1
        .generators()
        .iter()
        .map(|s| s.kron(&i2, k))
        .chain(g2.generators().iter().map(|t| i1.kron(t, k)))
        .collect();
    group_closure(g1.n() * g2.n(), g1.field_arc(), gens, cap)
}

/// Image of a group `Γ` given by paired generators `(r₁(γ), r₂(γ))`.
pub fn tensor_of_pairs(field: Arc<FiniteField>, pairs: &[(Mat, Mat)], cap: usize) -> Result<MatGroup> {
    let Some((a, b)) = pairs.first() else {
        return Err(Error::InvalidParams("need at least one generator pair".into()));
    };
    let n = a.n() * b.n();
    if pairs.iter().any(|(x, y)| x.n() * y.n() != n || x.n() != a.n()) {
        return Err(Error::InvalidParams("generator pairs have inconsistent sizes".into()));
    }
    let gens = pairs.iter().map(|(x, y)| x.kron(y, &field)).collect();
    group_closure(n, field, gens, cap)
}
