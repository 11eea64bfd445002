//! Finite matrix groups enumerated from generators.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::field::FiniteField;
use super::linalg::{rank, Mat};
use crate::error::{Error, Result};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 20_000;

/// A finite subgroup of `GL_n(F_q)` with its full element table.
///
/// Elements are listed in breadth-first order from the identity (index 0);
/// `parent[i] = (j, s)` means `elements[i] = elements[j] · generators[s]`.
#[derive(Debug, Clone)]
pub struct MatGroup {
    n: usize,
    field: Arc<FiniteField>,
    generators: Vec<Mat>,
    elements: Vec<Mat>,
    index: HashMap<Mat, usize>,
    parent: Vec<Option<(usize, usize)>>,
    right: Vec<Vec<usize>>,
}

pub fn group_closure(
    n: usize,
    field: Arc<FiniteField>,
    generators: Vec<Mat>,
    cap: usize,
) -> Result<MatGroup> {
    if n == 0 {
        return Err(Error::InvalidParams("matrix size must be positive".into()));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.n() != n {
            return Err(Error::InvalidParams(format!("generator {i} is not {n}×{n}")));
        }
        if g.flat().iter().any(|x| *x as usize >= field.order()) {
            return Err(Error::InvalidParams(format!("generator {i} has entries outside the field")));
        }
        if g.inverse(&field).is_none() {
            return Err(Error::SingularGenerator(i));
        }
    }
    let id = Mat::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for (s, gen) in generators.iter().enumerate() {
            let h = elements[head].mul(gen, &field);
            let idx = match index.get(&h) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let i = elements.len();
                    index.insert(h.clone(), i);
                    elements.push(h);
                    parent.push(Some((head, s)));
                    i
                }
            };
            row.push(idx);
        }
        right.push(row);
        head += 1;
    }
    Ok(MatGroup { n, field, generators, elements, index, parent, right })
}

impl MatGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FiniteField> {
        Arc::clone(&self.field)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Mat) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.index.contains_key(g)
    }

    /// Spanning-tree parent `(j, s)` with `g_i = g_j · s`; `None` for the identity.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    /// Index of `g_i · generators[s]`.
    pub fn right_mul(&self, i: usize, s: usize) -> usize {
        self.right[i][s]
    }

    pub fn inverse(&self, g: &Mat) -> Mat {
        g.inverse(&self.field).expect("group elements are invertible")
    }

    /// Index of `g_i · g_j`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        let prod = self.elements[i].mul(&self.elements[j], &self.field);
        self.index[&prod]
    }

    pub fn is_abelian(&self) -> bool {
        let k = &*self.field;
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.mul(b, k) == b.mul(a, k)))
    }

    /// Same generators with entries pushed through a field embedding.
    pub fn extend_scalars(&self, big: Arc<FiniteField>, cap: usize) -> Result<MatGroup> {
        let phi = self.field.embedding_into(&big)?;
        let gens = self.generators.iter().map(|g| g.map(|x| phi[x as usize])).collect();
        group_closure(self.n, big, gens, cap)
    }
}

/// Multiplicative order of an invertible matrix.
pub fn element_order(g: &Mat, k: &FiniteField) -> u64 {
    let mut x = g.clone();
    let mut ord = 1;
    while !x.is_identity() {
        x = x.mul(g, k);
        ord += 1;
    }
    ord
}

fn coprime(a: u64, b: u64) -> bool {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x == 1
}

/// Elements whose order is prime to the characteristic.
pub fn prime_to_l_elements(g: &MatGroup) -> Vec<&Mat> {
    let l = g.field().characteristic();
    g.elements()
        .par_iter()
        .filter(|x| coprime(element_order(x, g.field()), l))
        .collect()
}

/// Rank of the span of the prime-to-`l` elements inside `M_n(F_q)`.
pub fn span_rank_prime_to_l(g: &MatGroup) -> usize {
    let good = prime_to_l_elements(g);
    rank(good.iter().map(|m| m.flat()), g.n() * g.n(), g.field())
}

/// `[G, G]` as the normal closure of the commutators of generators.
pub fn derived_subgroup(g: &MatGroup, cap: usize) -> Result<MatGroup> {
    let k = g.field();
    let gens = g.generators();
    let invs: Vec<Mat> = gens.iter().map(|s| g.inverse(s)).collect();
    let mut sub_gens: Vec<Mat> = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let c = a.mul(b, k).mul(&invs[i], k).mul(&invs[j], k);
            if !c.is_identity() && !sub_gens.contains(&c) {
                sub_gens.push(c);
            }
        }
    }
    loop {
        let h = group_closure(g.n(), g.field_arc(), sub_gens.clone(), cap)?;
        let missing = gens.iter().zip(&invs).find_map(|(s, s_inv)| {
            h.generators()
                .iter()
                .map(|x| s.mul(x, k).mul(s_inv, k))
                .find(|c| !h.contains(c))
        });
        match missing {
            Some(c) => sub_gens.push(c),
            None => return Ok(h),
        }
    }
}

/// `l`-primary part of `|G / [G, G]|`.
pub fn abelianization_l_part(g: &MatGroup, l: u64, cap: usize) -> Result<u64> {
    let d = derived_subgroup(g, cap)?;
    let mut ab = (g.order() / d.order()) as u64;
    let mut part = 1;
    while ab.is_multiple_of(l) {
        ab /= l;
        part *= l;
    }
    Ok(part)
}
