//! Small finite fields `F_q = F_l[x]/(P)` with table arithmetic.
//!
//! An element is stored as the integer `Σ c_i l^i` encoding its coefficient
//! vector `(c_0, …, c_{m-1})` in the power basis.

use std::fmt;

use crate::error::{Error, Result};

pub type Elem = u16;

/// Largest field order handled by the tables.
pub const MAX_ORDER: u64 = 1 << 10;

/// Shipped moduli, low degree first. `x` is primitive in all of them except
/// `x² + 1` over `F_3`.
const STANDARD_MODULI: &[(u64, &[u64])] = &[
    (3, &[1, 0, 1]),
    (3, &[1, 0, 2, 1]),
    (3, &[2, 0, 0, 1, 1]),
    (5, &[2, 1, 1]),
    (5, &[2, 0, 1, 1]),
    (5, &[2, 0, 2, 1, 1]),
    (7, &[3, 1, 1]),
    (7, &[2, 1, 1, 1]),
];

#[derive(Clone)]
pub struct FiniteField {
    l: u64,
    m: u32,
    q: usize,
    modulus: Vec<u64>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    primitive: Elem,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} (modulus {:?})", self.q, self.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Remainder of `a` modulo the monic polynomial `modulus`, coefficients mod `l`.
fn poly_rem(mut a: Vec<u64>, modulus: &[u64], l: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    while a.len() > m {
        let c = a.pop().expect("non-empty");
        if c != 0 {
            let top = a.len();
            for k in 0..m {
                let idx = top - m + k;
                a[idx] = (a[idx] + (l - c) * modulus[k]) % l;
            }
        }
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % l;
        }
    }
    out
}

/// Trial division by every monic polynomial of degree `1..=m/2`.
pub fn is_irreducible(modulus: &[u64], l: u64) -> bool {
    let m = modulus.len() - 1;
    if m == 0 || modulus[m] != 1 {
        return false;
    }
    for deg in 1..=m / 2 {
        for code in 0..l.pow(deg as u32) {
            let mut d: Vec<u64> = (0..deg).map(|i| code / l.pow(i as u32) % l).collect();
            d.push(1);
            if poly_rem(modulus.to_vec(), &d, l).iter().all(|c| *c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// `F_l[x]/(modulus)`; `modulus` is monic, coefficients listed from the
    /// constant term up.
    pub fn new(l: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(l) {
            return Err(Error::Field(format!("{l} is not prime")));
        }
        if modulus.len() < 2 || modulus.iter().any(|c| *c >= l) {
            return Err(Error::Field(format!("bad modulus {modulus:?}")));
        }
        if !is_irreducible(modulus, l) {
            return Err(Error::Field(format!("{modulus:?} is reducible over F_{l}")));
        }
        let m = (modulus.len() - 1) as u32;
        let q = l.checked_pow(m).filter(|q| *q <= MAX_ORDER).ok_or_else(|| {
            Error::Field(format!("F_{{{l}^{m}}} exceeds the supported order {MAX_ORDER}"))
        })? as usize;
        let coeffs = |x: usize| -> Vec<u64> {
            (0..m).map(|i| (x as u64 / l.pow(i)) % l).collect()
        };
        let encode = |c: &[u64]| -> Elem {
            c.iter().enumerate().map(|(i, v)| v * l.pow(i as u32)).sum::<u64>() as Elem
        };
        let all: Vec<Vec<u64>> = (0..q).map(coeffs).collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            for y in 0..q {
                let s: Vec<u64> = all[x].iter().zip(&all[y]).map(|(a, b)| (a + b) % l).collect();
                add[x * q + y] = encode(&s);
                let mut p = poly_rem(poly_mul(&all[x], &all[y], l), modulus, l);
                p.resize(m as usize, 0);
                mul[x * q + y] = encode(&p);
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for x in 0..q {
            neg[x] = (0..q).find(|y| add[x * q + y] == 0).expect("additive group") as Elem;
            if x != 0 {
                inv[x] = (1..q).find(|y| mul[x * q + y] == 1).expect("field") as Elem;
            }
        }
        let mut field = Self { l, m, q, modulus: modulus.to_vec(), add, mul, neg, inv, primitive: 0 };
        field.primitive = (1..q as Elem)
            .find(|g| field.mult_order(*g) == (q - 1) as u64)
            .expect("cyclic multiplicative group");
        Ok(field)
    }

    /// The shipped model of `F_{l^m}`.
    pub fn standard(l: u64, m: u32) -> Result<Self> {
        if m == 1 {
            return Self::new(l, &[0, 1]);
        }
        let modulus = STANDARD_MODULI
            .iter()
            .find(|(p, poly)| *p == l && poly.len() == m as usize + 1)
            .ok_or_else(|| Error::Field(format!("no shipped modulus for F_{{{l}^{m}}}")))?
            .1;
        Self::new(l, modulus)
    }

    /// `F_q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let l = (2..=q).find(|p| q.is_multiple_of(*p)).ok_or_else(|| Error::Field(format!("bad order {q}")))?;
        let mut m = 0;
        let mut rest = q;
        while rest.is_multiple_of(l) {
            rest /= l;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::Field(format!("{q} is not a prime power")));
        }
        Self::standard(l, m)
    }

    pub fn characteristic(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// A generator of `F_q^×`.
    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn mult_order(&self, a: Elem) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.l as i64) as Elem
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|c| *c >= self.l) {
            return Err(Error::Field(format!("{coeffs:?} is not an element of F_{}", self.q)));
        }
        Ok(coeffs.iter().enumerate().map(|(i, c)| c * self.l.pow(i as u32)).sum::<u64>() as Elem)
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        (0..self.m).map(|i| (a as u64 / self.l.pow(i)) % self.l).collect()
    }

    /// The unique subfield of order `l^d`, as the list of its elements.
    pub fn subfield(&self, d: u32) -> Result<Vec<Elem>> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::Field(format!("no subfield of degree {d} in F_{}", self.q)));
        }
        let size = self.l.pow(d);
        Ok((0..self.q as Elem).filter(|x| self.pow(*x, size) == *x).collect())
    }

    /// A generator of the multiplicative group of the degree-`d` subfield.
    pub fn subfield_generator(&self, d: u32) -> Result<Elem> {
        self.subfield(d)?;
        let exp = (self.q as u64 - 1) / (self.l.pow(d) - 1);
        Ok(self.pow(self.primitive, exp))
    }

    /// A field embedding `self → big`, sending `x` to the first root of the
    /// modulus found in `big`.
    pub fn embedding_into(&self, big: &FiniteField) -> Result<Vec<Elem>> {
        if big.l != self.l || !big.m.is_multiple_of(self.m) {
            return Err(Error::Field(format!("F_{} does not embed in F_{}", self.q, big.q)));
        }
        let eval = |r: Elem| {
            self.modulus.iter().rev().fold(0, |acc, c| big.add(big.mul(acc, r), *c as Elem))
        };
        let root = (0..big.q as Elem)
            .find(|r| eval(*r) == 0)
            .ok_or_else(|| Error::Field("modulus has no root in the larger field".into()))?;
        Ok((0..self.q as Elem)
            .map(|a| {
                self.coeffs(a)
                    .iter()
                    .rev()
                    .fold(0, |acc, c| big.add(big.mul(acc, root), *c as Elem))
            })
            .collect())
    }
}
