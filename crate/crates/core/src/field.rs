//! Small finite fields `GF(p^n)` with precomputed arithmetic tables, and 2x2
//! matrices over them.
//!
//! An element is encoded as the integer `sum c_i p^i` of its coefficients in
//! the basis `1, t, ..., t^(n-1)`, where `t` is a root of the lexicographically
//! least monic irreducible polynomial of degree `n`.

use crate::error::{GroupError, Result};
use crate::group::prime_power;

const MAX_FIELD_ORDER: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    n: u32,
    q: u32,
    /// Low coefficients `c_0..c_{n-1}` of the monic modulus.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(GroupError::CapExceeded {
                what: "field order",
                size: q as usize,
                cap: MAX_FIELD_ORDER as usize,
            });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = least_irreducible(p, n);
        let decode = |v: u32| -> Vec<u32> {
            let mut c = Vec::with_capacity(n as usize);
            let mut v = v;
            for _ in 0..n {
                c.push(v % p);
                v /= p;
            }
            c
        };
        let encode = |c: &[u32]| c.iter().rev().fold(0, |acc, &x| acc * p + x);
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let ca = decode(a);
            for b in 0..q {
                let cb = decode(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = encode(&sum);
                let prod = poly_mul_mod(&ca, &cb, &modulus, p);
                mul[a as usize * qs + b as usize] = encode(&prod);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a as usize * qs + b as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a as usize * qs + b as usize] == 1).unwrap()
                }
            })
            .collect();
        Ok(Self {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Low coefficients of the monic defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.q + b.0) as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElement, k: u32) -> FieldElement {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let mut k = 1;
        let mut x = a;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest-encoded generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == Some(self.q - 1))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let n = modulus.len();
    let mut prod = vec![0u32; 2 * n];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // t^n = -(c_0 + ... + c_{n-1} t^{n-1})
    for k in (n..2 * n).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            prod[k - n + i] = (prod[k - n + i] + (p - m) * c) % p;
        }
    }
    prod.truncate(n);
    prod
}

/// Remainder of `num` modulo a monic `den`, both as full coefficient lists (low first).
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let d = den.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * lead % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(full: &[u32], p: u32) -> bool {
    let n = full.len() - 1;
    for deg in 1..=n / 2 {
        for code in 0..(p as u64).pow(deg as u32) {
            let mut div = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                div.push((c % p as u64) as u32);
                c /= p as u64;
            }
            div.push(1);
            if poly_rem(full, &div, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Least monic irreducible of degree `n`, ordering by `(c_{n-1}, ..., c_0)`.
fn least_irreducible(p: u32, n: u32) -> Vec<u32> {
    for code in 0..(p as u64).pow(n) {
        let mut low = Vec::with_capacity(n as usize);
        let mut c = code;
        for _ in 0..n {
            low.push((c % p as u64) as u32);
            c /= p as u64;
        }
        let mut full = low.clone();
        full.push(1);
        if is_irreducible(&full, p) {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// `[[a, b], [c, d]]` over a [`GaloisField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Matrix2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Self { a, b, c, d }
    }

    pub fn det(&self, f: &GaloisField) -> FieldElement {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn is_invertible(&self, f: &GaloisField) -> bool {
        self.det(f) != f.zero()
    }

    pub fn mul(&self, other: &Self, f: &GaloisField) -> Self {
        Self {
            a: f.add(f.mul(self.a, other.a), f.mul(self.b, other.c)),
            b: f.add(f.mul(self.a, other.b), f.mul(self.b, other.d)),
            c: f.add(f.mul(self.c, other.a), f.mul(self.d, other.c)),
            d: f.add(f.mul(self.c, other.b), f.mul(self.d, other.d)),
        }
    }

    /// `M (x, y)^T`.
    pub fn apply(&self, v: (FieldElement, FieldElement), f: &GaloisField) -> (FieldElement, FieldElement) {
        (
            f.add(f.mul(self.a, v.0), f.mul(self.b, v.1)),
            f.add(f.mul(self.c, v.0), f.mul(self.d, v.1)),
        )
    }

    /// Mobius action `z -> (az + b)/(cz + d)` on the projective line, where
    /// `None` is the point at infinity.
    pub fn mobius(&self, z: Option<FieldElement>, f: &GaloisField) -> Option<FieldElement> {
        match z {
            None => f.inv(self.c).map(|ci| f.mul(self.a, ci)),
            Some(z) => {
                let num = f.add(f.mul(self.a, z), self.b);
                let den = f.add(f.mul(self.c, z), self.d);
                f.inv(den).map(|di| f.mul(num, di))
            }
        }
    }
}
