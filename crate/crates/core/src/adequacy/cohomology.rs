//! `H¹(G, gl_n)` for the adjoint action `g · m = g m g⁻¹`, over the entry
//! field of `G`.

use rayon::prelude::*;

use super::field::{Elem, FiniteField};
use super::group::MatGroup;
use super::linalg::{Echelon, Mat};
use crate::error::{Error, Result};

/// Largest group accepted by [`h1_adjoint_bruteforce`].
pub const BRUTE_FORCE_MAX: usize = 200;

/// Matrix of `m ↦ g m g⁻¹` on `gl_n` in the row-major basis `E_{ij}`.
pub fn adjoint_matrix(g: &Mat, g_inv: &Mat, k: &FiniteField) -> Mat {
    let n = g.n();
    let mut data = vec![0; n.pow(4)];
    let dim = n * n;
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                let x = g.get(i, a);
                if x == 0 {
                    continue;
                }
                for b in 0..n {
                    data[(i * n + j) * dim + a * n + b] = k.mul(x, g_inv.get(b, j));
                }
            }
        }
    }
    Mat::from_flat(dim, data)
}

/// Rows of `Ad_g - 1`.
fn coboundary_rows(g: &Mat, g_inv: &Mat, k: &FiniteField) -> Vec<Vec<Elem>> {
    let ad = adjoint_matrix(g, g_inv, k);
    let id = Mat::identity(ad.n());
    ad.sub(&id, k).rows()
}

/// `dim gl_n^G`; the generators suffice.
pub fn fixed_subspace_dim(g: &MatGroup) -> usize {
    let k = g.field();
    let dim = g.n() * g.n();
    let mut ech = Echelon::new(dim);
    for s in g.generators() {
        for row in coboundary_rows(s, &g.inverse(s), k) {
            ech.insert(row, k);
        }
    }
    dim - ech.rank()
}

/// `dim H¹(G, gl_n)` by propagating cocycles along the spanning tree.
///
/// A cocycle is determined by its values `x_s` on the generators, so
/// `Z¹` is cut out of `gl_n^{#gens}` by the non-tree Cayley edges
/// `f(g s) = f(g) + g · x_s`.
pub fn h1_adjoint(g: &MatGroup) -> usize {
    let k = g.field();
    let dim = g.n() * g.n();
    let ngens = g.generators().len();
    let unknowns = dim * ngens;
    if unknowns == 0 {
        return 0;
    }
    let ads: Vec<Mat> = g
        .elements()
        .par_iter()
        .map(|x| adjoint_matrix(x, &g.inverse(x), k))
        .collect();

    // c[i] is the dim × unknowns matrix giving f(g_i) in terms of the x_s
    let mut c: Vec<Vec<Elem>> = Vec::with_capacity(g.order());
    c.push(vec![0; dim * unknowns]);
    for i in 1..g.order() {
        let (p, s) = g.parent(i).expect("non-identity has a parent");
        let mut row = c[p].clone();
        add_block(&mut row, &ads[p], s, unknowns, k);
        c.push(row);
    }

    let chunk = (g.order() / rayon::current_num_threads().max(1)).clamp(64, 4096);
    let partial: Vec<Echelon> = (0..g.order())
        .collect::<Vec<_>>()
        .par_chunks(chunk)
        .map(|range| {
            let mut ech = Echelon::new(unknowns);
            for &i in range {
                for s in 0..ngens {
                    let h = g.right_mul(i, s);
                    if g.parent(h) == Some((i, s)) {
                        continue;
                    }
                    let mut lhs = c[h].clone();
                    for (x, y) in lhs.iter_mut().zip(&c[i]) {
                        *x = k.sub(*x, *y);
                    }
                    sub_block(&mut lhs, &ads[i], s, unknowns, k);
                    for r in lhs.chunks(unknowns) {
                        if ech.is_full() {
                            return ech;
                        }
                        ech.insert(r.to_vec(), k);
                    }
                }
            }
            ech
        })
        .collect();
    let mut constraints = Echelon::new(unknowns);
    for e in partial {
        constraints.absorb(e, k);
    }
    let z1 = unknowns - constraints.rank();
    let b1 = dim - fixed_subspace_dim(g);
    z1 - b1
}

fn add_block(target: &mut [Elem], ad: &Mat, s: usize, width: usize, k: &FiniteField) {
    let dim = ad.n();
    for r in 0..dim {
        for col in 0..dim {
            let v = ad.get(r, col);
            if v != 0 {
                let t = &mut target[r * width + s * dim + col];
                *t = k.add(*t, v);
            }
        }
    }
}

fn sub_block(target: &mut [Elem], ad: &Mat, s: usize, width: usize, k: &FiniteField) {
    let neg = ad.map(|x| k.neg(x));
    add_block(target, &neg, s, width, k);
}

/// `dim H¹(G, gl_n)` from the full cocycle equations on all functions
/// `G → gl_n`; independent of the spanning tree. Only for `|G| ≤ 200`.
pub fn h1_adjoint_bruteforce(g: &MatGroup) -> Result<usize> {
    if g.order() > BRUTE_FORCE_MAX {
        return Err(Error::PreconditionViolated(format!(
            "brute force needs |G| ≤ {BRUTE_FORCE_MAX}, got {}",
            g.order()
        )));
    }
    let k = g.field();
    let n = g.n();
    let dim = n * n;
    let order = g.order();
    let unknowns = order * dim;
    let invs: Vec<Mat> = g.elements().iter().map(|x| g.inverse(x)).collect();
    let ads: Vec<Mat> = g.elements().iter().zip(&invs).map(|(x, xi)| adjoint_matrix(x, xi, k)).collect();

    // f(a b) - f(a) - a · f(b) = 0 for every pair
    let mut z = Echelon::new(unknowns);
    for a in 0..order {
        for b in 0..order {
            let ab = g.mul_index(a, b);
            for r in 0..dim {
                let mut row = vec![0; unknowns];
                row[ab * dim + r] = k.add(row[ab * dim + r], 1);
                row[a * dim + r] = k.sub(row[a * dim + r], 1);
                for col in 0..dim {
                    let v = ads[a].get(r, col);
                    if v != 0 {
                        let t = &mut row[b * dim + col];
                        *t = k.sub(*t, v);
                    }
                }
                z.insert(row, k);
            }
        }
    }
    let z1 = unknowns - z.rank();

    // coboundaries m ↦ (a · m - m)_a
    let mut b = Echelon::new(dim);
    for (x, xi) in g.elements().iter().zip(&invs) {
        for row in coboundary_rows(x, xi, k) {
            b.insert(row, k);
        }
    }
    Ok(z1 - b.rank())
}
