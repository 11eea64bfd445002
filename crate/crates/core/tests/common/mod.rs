#![allow(dead_code)]

use rand::Rng;
use tameweights::char_arith::{FieldParams, InertialChar};
use tameweights::weights::{witness_characters, Embeddings, LocalModRep, SerreWeight, Shape, WitnessJD};

pub fn random_char(rng: &mut impl Rng, params: FieldParams) -> InertialChar {
    InertialChar::from_canonical(params, rng.gen_range(0..params.modulus()) as i128)
}

pub fn random_weight(rng: &mut impl Rng, l: u64, f: usize) -> SerreWeight {
    let pairs = (0..f)
        .map(|_| {
            let lo = rng.gen_range(-(l as i64)..2 * l as i64);
            (lo + rng.gen_range(0..l as i64), lo)
        })
        .collect();
    SerreWeight::new(l, pairs).unwrap()
}

/// A weight equivalent to `a`: same differences, lower entries shifted by
/// a vector whose place-value sum is a multiple of `l^f - 1`.
pub fn random_equivalent(rng: &mut impl Rng, a: &SerreWeight) -> SerreWeight {
    let params = a.params();
    let f = a.f();
    let mut shift: Vec<i64> = (0..f).map(|_| rng.gen_range(-5..6)).collect();
    let partial: i64 = (0..f - 1).map(|i| shift[i] * params.place_value(i) as i64).sum();
    let m = params.modulus() as i64;
    shift[f - 1] = -partial + m * rng.gen_range(-2..3);
    let pairs = a.pairs().iter().zip(&shift).map(|((x, y), s)| (x + s, y + s)).collect();
    SerreWeight::new(a.l(), pairs).unwrap()
}

pub fn random_rep(rng: &mut impl Rng, l: u64, f: usize, e: u64, allow_nonsplit: bool) -> LocalModRep {
    let small = FieldParams::new(l, f as u32).unwrap();
    let big = small.doubled().unwrap();
    loop {
        let kind = rng.gen_range(0..if allow_nonsplit { 3 } else { 2 });
        let shape = match kind {
            0 => Shape::Split(random_char(rng, small), random_char(rng, small)),
            1 => Shape::Irreducible(random_char(rng, big)),
            _ => Shape::NonSplit { sub: random_char(rng, small), quotient: random_char(rng, small) },
        };
        if let Ok(rho) = LocalModRep::new(l, f, e, shape) {
            return rho;
        }
    }
}

/// Independent matching rule: unordered for semisimple shapes, ordered
/// (sub first) for non-split.
pub fn chars_match(rho: &LocalModRep, chars: (InertialChar, InertialChar)) -> bool {
    let (x, y) = chars;
    match rho.shape() {
        Shape::Split(a, b) => (x == *a && y == *b) || (x == *b && y == *a),
        Shape::NonSplit { sub, quotient } => x == *sub && y == *quotient,
        Shape::Irreducible(psi) => {
            let c = psi.conjugate_c().unwrap();
            (x == *psi && y == c) || (x == c && y == *psi)
        }
    }
}

/// Search over every `δ ∈ [0, e)^f` with no period cap.
pub fn uncapped_search(rho: &LocalModRep, a: &SerreWeight) -> bool {
    let f = rho.f();
    let e = rho.e();
    let niveau2 = matches!(rho.shape(), Shape::Irreducible(_));
    for mask in 0u32..1 << f {
        let bits: Vec<bool> = (0..f).map(|i| mask >> i & 1 == 1).collect();
        let j = if niveau2 { Embeddings::Niveau2(bits) } else { Embeddings::Niveau1(bits) };
        for code in 0..e.pow(f as u32) {
            let mut delta = vec![0u64; f];
            let mut rest = code;
            for d in delta.iter_mut() {
                *d = rest % e;
                rest /= e;
            }
            let w = WitnessJD { j: j.clone(), delta };
            if chars_match(rho, witness_characters(a, e, &w).unwrap()) {
                return true;
            }
        }
    }
    false
}
