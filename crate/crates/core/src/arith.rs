//! Exact integer helpers: gcd/lcm, primality, factorization, prime powers.

use num::bigint::BigUint;
use num::traits::{One, Zero};
use num::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-witness set is exact below 3.3e24).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a u64 by trial division (inputs here are small or smooth).
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial-division bound used when factoring big integers.
const BIG_TRIAL_BOUND: u64 = 1_000_000;

/// Factors out every prime below [`BIG_TRIAL_BOUND`]; returns the factor list and
/// the remaining cofactor (1 if fully factored).
pub fn factor_biguint_smooth(n: &BigUint) -> (Vec<(u64, u32)>, BigUint) {
    let mut n = n.clone();
    let mut out = Vec::new();
    let one: BigUint = BigUint::one();
    let mut p = 2u64;
    while p <= BIG_TRIAL_BOUND {
        if n == one {
            break;
        }
        let bp = BigUint::from(p);
        if (&n % &bp).is_zero() {
            let mut e = 0u32;
            while (&n % &bp).is_zero() {
                n /= &bp;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (out, n)
}

/// True iff no prime fourth power divides `n`.
///
/// Fails only when `n` has an undecidable rough cofactor, which cannot happen for
/// the smooth group orders this crate works with.
pub fn fourth_power_free(n: &BigUint) -> Result<bool> {
    let (factors, cofactor) = factor_biguint_smooth(n);
    if factors.iter().any(|&(_, e)| e >= 4) {
        return Ok(false);
    }
    if cofactor.is_one() {
        return Ok(true);
    }
    // Every prime factor of the cofactor exceeds the trial bound, so a fourth
    // power inside it would make it at least BOUND^4.
    let limit = BigUint::from(BIG_TRIAL_BOUND).pow(4);
    if cofactor < limit {
        return Ok(true);
    }
    Err(Error::Unsupported(format!(
        "cannot decide fourth-power-freeness: rough cofactor {cofactor}"
    )))
}

/// Smallest prime whose square divides `n`, if any.
pub fn square_part_witness(n: u64) -> Option<u64> {
    factor_u64(n)
        .into_iter()
        .find(|&(_, e)| e >= 2)
        .map(|(p, _)| p)
}

pub fn is_square_free(n: u64) -> bool {
    square_part_witness(n).is_none()
}

/// Writes `q` as `p^f` for a prime `p`, if it is a prime power > 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor_u64(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Ascending prime powers q with `lo <= q <= hi`.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&q| prime_power(q).is_some()).collect()
}

pub fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

/// Exact integer square root of a big integer, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Moebius function of `n`.
pub fn moebius(n: u64) -> i8 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor_u64(n) {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factor_u64(n) {
        out = out / p * (p - 1);
    }
    out
}

pub fn big_factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// gcd for big integers.
pub fn big_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}
