//! Small finite fields GF(p^f).
//!
//! Elements are encoded as integers in `0..q`: the element with polynomial
//! coordinates `c_0 + c_1 x + ...` over GF(p) is `sum c_i p^i`. The modulus is
//! the lexicographically smallest monic irreducible of degree f, and the stored
//! generator is the smallest primitive element in this encoding, so everything
//! about the field (and every permutation built from it) is deterministic.

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    f: u32,
    q: u64,
    /// log[a] for a in 1..q, with respect to `generator`
    log: Vec<u32>,
    /// exp[i] = generator^i for i in 0..q-1
    exp: Vec<u64>,
    generator: u64,
    /// coefficients of the modulus, little-endian, length f+1 (used only for Frobenius checks)
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, f) = arith::prime_power(q)
            .ok_or_else(|| Error::Unsupported(format!("{q} is not a prime power")))?;
        if q > 1 << 16 {
            return Err(Error::Unsupported(format!("field size {q} too large")));
        }
        let modulus = smallest_irreducible(p, f);
        let mut field = FiniteField {
            p,
            f,
            q,
            log: vec![0; q as usize],
            exp: Vec::with_capacity((q - 1) as usize),
            generator: 0,
            modulus,
        };
        field.build_tables()?;
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The cached primitive element.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.f {
            out += place * ((a + b) % self.p);
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let mut a = a;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.f {
            out += place * ((self.p - a % self.p) % self.p);
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(i % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let i = self.log[a as usize] as u64;
        self.exp[((self.q - 1 - i) % (self.q - 1)) as usize]
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let i = self.log[a as usize] as u64;
        self.exp[(((i as u128 * e as u128) % (self.q as u128 - 1)) as u64) as usize]
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Nonzero squares are the even powers of the generator.
    pub fn is_square(&self, a: u64) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    fn build_tables(&mut self) -> Result<()> {
        let (p, f, q, modulus) = (self.p, self.f, self.q, self.modulus.clone());
        let mul_poly = |a: u64, b: u64| poly_mul_mod(a, b, p, f, &modulus);

        let order_factors = arith::factor_u64(q - 1);
        let pow_via = |mut base: u64, mut e: u64| -> u64 {
            let mut acc = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_poly(acc, base);
                }
                base = mul_poly(base, base);
                e >>= 1;
            }
            acc
        };
        let mut generator = 0u64;
        for cand in 2..q {
            let primitive = order_factors
                .iter()
                .all(|&(r, _)| pow_via(cand, (q - 1) / r) != 1);
            if primitive {
                generator = cand;
                break;
            }
        }
        if generator == 0 && q == 2 {
            generator = 1;
        }
        if generator == 0 {
            return Err(Error::Unsupported(format!("no primitive element for q={q}")));
        }
        self.generator = generator;
        let mut cur = 1u64;
        self.exp.clear();
        for i in 0..(q - 1) {
            self.exp.push(cur);
            self.log[cur as usize] = i as u32;
            cur = mul_poly(cur, generator);
        }
        if cur != 1 {
            return Err(Error::Unsupported("generator order mismatch".into()));
        }
        Ok(())
    }

}

/// Multiplies two field elements in the integer encoding by multiplying their
/// coefficient polynomials and reducing by the monic modulus.
fn poly_mul_mod(a: u64, b: u64, p: u64, f: u32, modulus: &[u64]) -> u64 {
    let coeffs = |mut x: u64| -> Vec<u64> {
        let mut v = Vec::with_capacity(f as usize);
        for _ in 0..f {
            v.push(x % p);
            x /= p;
        }
        v
    };
    let av = coeffs(a);
    let bv = coeffs(b);
    let mut prod = vec![0u64; 2 * f as usize];
    for (i, &ai) in av.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in bv.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for d in (f as usize..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &m) in modulus.iter().enumerate().take(f as usize) {
            if m != 0 {
                let idx = d - f as usize + k;
                prod[idx] = (prod[idx] + p * p - c * m % p) % p;
            }
        }
    }
    let mut out = 0u64;
    for &c in prod[..f as usize].iter().rev() {
        out = out * p + c;
    }
    out
}

/// Lexicographically smallest monic irreducible of degree f over GF(p),
/// little-endian coefficients without the leading 1.
fn smallest_irreducible(p: u64, f: u32) -> Vec<u64> {
    if f == 1 {
        return vec![0];
    }
    let total = p.pow(f);
    'cand: for tail in 0..total {
        // candidate = x^f + tail (tail encodes the lower coefficients)
        if tail % p == 0 {
            continue; // reducible: x divides it
        }
        let coeffs: Vec<u64> = {
            let mut v = Vec::with_capacity(f as usize);
            let mut t = tail;
            for _ in 0..f {
                v.push(t % p);
                t /= p;
            }
            v
        };
        // trial division by all monic polynomials of degree 1..=f/2
        for d in 1..=(f / 2) {
            let count = p.pow(d);
            for dtail in 0..count {
                let mut divisor: Vec<u64> = {
                    let mut v = Vec::with_capacity(d as usize + 1);
                    let mut t = dtail;
                    for _ in 0..d {
                        v.push(t % p);
                        t /= p;
                    }
                    v.push(1);
                    v
                };
                if poly_divides(&mut divisor, &coeffs, f, p) {
                    continue 'cand;
                }
            }
        }
        return coeffs;
    }
    unreachable!("an irreducible of every degree exists");
}

/// Does the monic `divisor` divide x^f + tail-poly over GF(p)?
fn poly_divides(divisor: &mut [u64], low: &[u64], f: u32, p: u64) -> bool {
    let mut rem: Vec<u64> = low.to_vec();
    rem.resize(f as usize + 1, 0);
    rem[f as usize] = 1;
    let d = divisor.len() - 1;
    for i in (d..=f as usize).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for k in 0..d {
            rem[i - d + k] = (rem[i - d + k] + p * p - c * divisor[k] % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_basics() {
        let k = FiniteField::new(9).unwrap();
        assert_eq!(k.p(), 3);
        // x^2 + 1 is the smallest irreducible over GF(3)
        assert_eq!(k.modulus, vec![1, 0]);
        for a in 0..9 {
            assert_eq!(k.add(a, k.neg(a)), 0);
            if a != 0 {
                assert_eq!(k.mul(a, k.inv(a)), 1);
            }
        }
        // the multiplicative group is cyclic of order 8
        let g = k.generator();
        let mut seen = std::collections::HashSet::new();
        let mut cur = 1u64;
        for _ in 0..8 {
            seen.insert(cur);
            cur = k.mul(cur, g);
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(cur, 1);
    }

    #[test]
    fn gf8_frobenius_is_additive() {
        let k = FiniteField::new(8).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    k.frobenius(k.add(a, b)),
                    k.add(k.frobenius(a), k.frobenius(b))
                );
            }
        }
        // sigma = x -> x^4 squares to x -> x^16 = x^2 over GF(8)
        for a in 0..8 {
            assert_eq!(k.pow(a, 16), k.pow(a, 2));
        }
    }

    #[test]
    fn prime_fields_and_squares() {
        let k = FiniteField::new(7).unwrap();
        assert_eq!(k.add(5, 4), 2);
        assert_eq!(k.mul(3, 5), 1);
        let squares: Vec<u64> = (1..7).filter(|&a| k.is_square(a)).collect();
        assert_eq!(squares, vec![1, 2, 4]);
    }

    #[test]
    fn distributivity_spot_checks() {
        for q in [4u64, 5, 8, 9, 16, 25, 27, 49] {
            let k = FiniteField::new(q).unwrap();
            for a in 0..q.min(12) {
                for b in 0..q.min(12) {
                    for c in 0..q.min(12) {
                        assert_eq!(
                            k.mul(a, k.add(b, c)),
                            k.add(k.mul(a, b), k.mul(a, c)),
                            "q={q} a={a} b={b} c={c}"
                        );
                    }
                }
            }
        }
    }
}
