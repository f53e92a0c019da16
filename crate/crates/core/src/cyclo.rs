//! Exact cyclotomic integers as root-of-unity multiplicity vectors.
//!
//! A character value is stored as the multiplicities (m_0, ..., m_{e-1}) of the
//! e-th roots of unity among the eigenvalues of a representing matrix, so the
//! multiplicities are nonnegative and sum to the character degree. Equality is
//! decided on canonical forms: the polynomial sum m_j x^j reduced modulo the
//! e-th cyclotomic polynomial. Conjugation negates exponents. No floating
//! point anywhere.

use num::bigint::BigUint;
use num::traits::One;

use crate::arith;

/// Reduction context for a fixed cyclotomic order e: the integer coefficients
/// of the e-th cyclotomic polynomial and the table of x^j mod Phi_e.
#[derive(Debug)]
pub struct CycloCtx {
    e: u64,
    /// degree of Phi_e = euler_phi(e)
    dim: usize,
    /// reduction[j] = coefficients of x^j mod Phi_e, length `dim`, j in 0..e
    reduction: Vec<Vec<i64>>,
}

impl CycloCtx {
    pub fn new(e: u64) -> CycloCtx {
        assert!(e >= 1);
        let phi = cyclotomic_poly_coeffs(e);
        let dim = phi.len() - 1;
        let mut reduction: Vec<Vec<i64>> = Vec::with_capacity(e as usize);
        let mut row = vec![0i64; dim.max(1)];
        if dim > 0 {
            row[0] = 1;
        }
        for _ in 0..e {
            reduction.push(row.clone());
            // multiply by x and reduce once by the monic Phi_e
            let top = row[dim - 1];
            for k in (1..dim).rev() {
                row[k] = row[k - 1];
            }
            row[0] = 0;
            if top != 0 {
                for k in 0..dim {
                    let c = i128::from(top) * i128::from(phi[k]);
                    let v = i128::from(row[k]) - c;
                    row[k] = i64::try_from(v).expect("cyclotomic reduction overflow");
                }
            }
        }
        CycloCtx { e, dim, reduction }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// Degree of the e-th cyclotomic polynomial.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical coefficient vector of sum_j mult[j] zeta^j.
    pub fn canonical(&self, mult: &[u64]) -> Vec<i64> {
        let acc = self.canonical_i128_from(mult.iter().map(|&m| m as i128));
        acc.into_iter()
            .map(|c| i64::try_from(c).expect("canonical coefficient overflow"))
            .collect()
    }

    /// Canonical form of a signed accumulator vector (inner-product sums).
    pub fn canonical_i128(&self, acc: &[i128]) -> Vec<i128> {
        self.canonical_i128_from(acc.iter().copied())
    }

    fn canonical_i128_from(&self, coeffs: impl Iterator<Item = i128>) -> Vec<i128> {
        let mut out = vec![0i128; self.dim];
        for (j, c) in coeffs.enumerate() {
            if c == 0 {
                continue;
            }
            debug_assert!(j < self.e as usize);
            for (k, &r) in self.reduction[j].iter().enumerate() {
                if r != 0 {
                    out[k] += c * i128::from(r);
                }
            }
        }
        out
    }

    /// Is the accumulator an ordinary integer? Returns it if so.
    pub fn as_integer(&self, acc: &[i128]) -> Option<i128> {
        let canon = self.canonical_i128(acc);
        if canon[1..].iter().all(|&c| c == 0) {
            Some(canon[0])
        } else {
            None
        }
    }
}

/// A cyclotomic integer sum_j mult[j] zeta_e^j with nonnegative multiplicities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycValue {
    e: u64,
    mult: Vec<u64>,
}

impl CycValue {
    pub fn zero(e: u64) -> CycValue {
        CycValue {
            e,
            mult: vec![0; e as usize],
        }
    }

    pub fn constant(e: u64, v: u64) -> CycValue {
        let mut mult = vec![0u64; e as usize];
        mult[0] = v;
        CycValue { e, mult }
    }

    pub fn from_mult(e: u64, mult: Vec<u64>) -> CycValue {
        assert_eq!(mult.len(), e as usize);
        CycValue { e, mult }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn mult(&self) -> &[u64] {
        &self.mult
    }

    /// Sum of multiplicities (the degree of the character the value belongs to).
    pub fn mult_sum(&self) -> u64 {
        self.mult.iter().sum()
    }

    /// Complex conjugate: exponent negation m_j -> m_{(e-j) mod e}.
    pub fn conj(&self) -> CycValue {
        let e = self.e as usize;
        let mut mult = vec![0u64; e];
        for (j, &m) in self.mult.iter().enumerate() {
            mult[(e - j) % e] = m;
        }
        CycValue { e: self.e, mult }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m != 0)
            .map(|(j, &m)| (j, m))
    }

    /// Re-expresses the value in a larger cyclotomic order `e_to` (e | e_to).
    pub fn lift(&self, e_to: u64) -> CycValue {
        assert_eq!(e_to % self.e, 0, "lift target must be a multiple of e");
        let stride = (e_to / self.e) as usize;
        let mut mult = vec![0u64; e_to as usize];
        for (j, m) in self.nonzero() {
            mult[j * stride] = m;
        }
        CycValue { e: e_to, mult }
    }

    pub fn equal_under(&self, ctx: &CycloCtx, other: &CycValue) -> bool {
        debug_assert_eq!(self.e, ctx.e());
        debug_assert_eq!(other.e, ctx.e());
        ctx.canonical(&self.mult) == ctx.canonical(&other.mult)
    }

    /// The value as an ordinary integer if it is one.
    pub fn as_integer(&self, ctx: &CycloCtx) -> Option<i64> {
        let canon = ctx.canonical(&self.mult);
        if canon[1..].iter().all(|&c| c == 0) {
            Some(canon[0])
        } else {
            None
        }
    }
}

impl std::fmt::Debug for CycValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycValue(e={}, ", self.e)?;
        let mut first = true;
        for (j, m) in self.nonzero() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{m}*z^{j}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Adds `weight * a * conj(b)` into the length-e accumulator: the cross terms
/// land at index (i - j) mod e. Only nonzero entries are visited, and a
/// character value has at most ord(g) of them.
pub fn accumulate_weighted_product(acc: &mut [i128], a: &CycValue, b: &CycValue, weight: u64) {
    let e = acc.len();
    debug_assert_eq!(a.e as usize, e);
    debug_assert_eq!(b.e as usize, e);
    let w = weight as i128;
    for (i, mi) in a.nonzero() {
        let wa = w * mi as i128;
        for (j, mj) in b.nonzero() {
            acc[(i + e - j) % e] += wa * mj as i128;
        }
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, little-endian,
/// monic of degree euler_phi(n). Computed by exact division of x^n - 1 by the
/// lower cyclotomic polynomials.
pub fn cyclotomic_poly_coeffs(n: u64) -> Vec<i64> {
    fn compute(n: u64, memo: &mut std::collections::HashMap<u64, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut poly: Vec<i128> = vec![0; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in arith::divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = compute(d, memo);
            poly = poly_div_exact(&poly, &phi_d);
        }
        let out: Vec<i64> = poly
            .into_iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
            .collect();
        memo.insert(n, out.clone());
        out
    }
    let mut memo = std::collections::HashMap::new();
    compute(n, &mut memo)
}

/// Exact division of an integer polynomial by a monic integer polynomial.
fn poly_div_exact(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    let mut rem: Vec<i128> = num.to_vec();
    let deg = rem.len() - 1;
    assert!(deg >= dn);
    let mut quot = vec![0i128; deg - dn + 1];
    for i in (dn..=deg).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - dn] = c;
        for (k, &dk) in den.iter().enumerate() {
            rem[i - dn + k] -= c * i128::from(dk);
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Exact value of the k-th cyclotomic polynomial at an integer q >= 2, via
/// Phi_k(q) = prod over d | k of (q^d - 1)^moebius(k/d).
pub fn cyclotomic_value_at(k: u64, q: &BigUint) -> BigUint {
    assert!(k >= 1);
    assert!(*q >= BigUint::from(2u32));
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in arith::divisors(k) {
        let term = q.pow(d as u32) - BigUint::one();
        match arith::moebius(k / d) {
            1 => num *= &term,
            -1 => den *= &term,
            _ => {}
        }
    }
    debug_assert!((&num % &den) == BigUint::ZERO);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polys_match_known_values() {
        assert_eq!(cyclotomic_poly_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly_coeffs(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly_coeffs(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly_coeffs(12), vec![1, 0, -1, 0, 1]);
        // first index with a coefficient of magnitude 2
        let c105 = cyclotomic_poly_coeffs(105);
        assert_eq!(c105.iter().map(|c| c.abs()).max(), Some(2));
    }

    #[test]
    fn phi_values_at_integers() {
        let q2 = BigUint::from(2u32);
        assert_eq!(cyclotomic_value_at(12, &q2), BigUint::from(13u32));
        assert_eq!(cyclotomic_value_at(1, &BigUint::from(9u32)), BigUint::from(8u32));
        assert_eq!(cyclotomic_value_at(2, &q2), BigUint::from(3u32));
        assert_eq!(cyclotomic_value_at(8, &q2), BigUint::from(17u32));
        // defining identity: prod over d | n of Phi_d(q) = q^n - 1
        for n in 1..=24u64 {
            for q in [2u64, 3, 5, 9] {
                let bq = BigUint::from(q);
                let mut prod = BigUint::one();
                for d in arith::divisors(n) {
                    prod *= cyclotomic_value_at(d, &bq);
                }
                assert_eq!(prod, bq.pow(n as u32) - BigUint::one(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn root_of_unity_arithmetic() {
        let ctx = CycloCtx::new(6);
        // zeta_6^3 = -1, so 1 + zeta^3 = 0
        let v = CycValue::from_mult(6, vec![1, 0, 0, 1, 0, 0]);
        assert_eq!(v.as_integer(&ctx), Some(0));
        // zeta + zeta^5 = 1 (the two primitive 6th roots sum to 1)
        let w = CycValue::from_mult(6, vec![0, 1, 0, 0, 0, 1]);
        assert_eq!(w.as_integer(&ctx), Some(1));
        assert!(w.equal_under(&ctx, &w.conj()));
    }

    #[test]
    fn lift_preserves_value() {
        // zeta_3 inside e = 6: zeta_6^2
        let v = CycValue::from_mult(3, vec![0, 1, 0]);
        let lifted = v.lift(6);
        assert_eq!(lifted.mult(), &[0, 0, 1, 0, 0, 0]);
        assert_eq!(lifted.mult_sum(), v.mult_sum());
    }

    #[test]
    fn weighted_product_matches_direct_convolution() {
        let e = 12u64;
        let ctx = CycloCtx::new(e);
        let a = CycValue::from_mult(e, vec![2, 0, 1, 0, 0, 0, 3, 0, 0, 0, 0, 1]);
        let b = CycValue::from_mult(e, vec![0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0]);
        let mut acc = vec![0i128; e as usize];
        accumulate_weighted_product(&mut acc, &a, &b, 5);
        // oracle: full dense convolution of a with conj(b)
        let bc = b.conj();
        let mut oracle = vec![0i128; e as usize];
        for i in 0..e as usize {
            for j in 0..e as usize {
                oracle[(i + j) % e as usize] += 5 * a.mult()[i] as i128 * bc.mult()[j] as i128;
            }
        }
        assert_eq!(ctx.canonical_i128(&acc), ctx.canonical_i128(&oracle));
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(mult in proptest::collection::vec(0u64..50, 12)) {
            let v = CycValue::from_mult(12, mult);
            prop_assert_eq!(v.conj().conj(), v);
        }

        #[test]
        fn canonicalization_is_linear(
            a in proptest::collection::vec(0u64..40, 20),
            b in proptest::collection::vec(0u64..40, 20),
        ) {
            let ctx = CycloCtx::new(20);
            let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let ca = ctx.canonical(&a);
            let cb = ctx.canonical(&b);
            let cs = ctx.canonical(&sum);
            let added: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
            prop_assert_eq!(cs, added);
        }

        #[test]
        fn root_power_convolution(j in 0usize..30, k in 0usize..30) {
            // zeta^j * conj(zeta^(30-k)) = zeta^(j+k)
            let e = 30usize;
            let ctx = CycloCtx::new(e as u64);
            let mut a = vec![0u64; e];
            a[j] = 1;
            let mut b = vec![0u64; e];
            b[(e - k) % e] = 1;
            let va = CycValue::from_mult(e as u64, a);
            let vb = CycValue::from_mult(e as u64, b);
            let mut acc = vec![0i128; e];
            accumulate_weighted_product(&mut acc, &va, &vb, 1);
            let mut direct = vec![0i128; e];
            direct[(j + k) % e] = 1;
            prop_assert_eq!(ctx.canonical_i128(&acc), ctx.canonical_i128(&direct));
        }
    }
}
