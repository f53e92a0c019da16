//! Permutations on `{0, ..., degree-1}` with cycle-string IO.
//!
//! Points are 0-based everywhere in the library; the cycle-string grammar is
//! 1-based and conversion happens only at parse/print boundaries. Products
//! compose left to right: `(a * b)(x) = b(a(x))`.

use std::fmt;

use num::bigint::BigUint;
use num::One;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::Unsupported(format!("degree {n} out of range")));
        }
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(Error::Unsupported("image list is not a bijection".into()));
            }
            seen[im as usize] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u16 == im)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&im| other.images[im as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u16;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// Conjugate `g^-1 * self * g` under left-to-right composition, i.e. the map
    /// `x -> g(self(g^-1(x)))`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for i in 0..self.degree() {
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle lengths (including fixed points), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Element order as an exact integer (lcm of cycle lengths).
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for len in self.cycle_type() {
            let l = BigUint::from(len);
            acc = &acc / acc.clone().gcd_with(&l) * l;
        }
        acc
    }

    /// Element order as u64; errors if it does not fit.
    pub fn order_u64(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| arith::lcm(acc, l as u64))
    }

    /// Extends the action to a larger degree by fixing the new points.
    pub fn extend_degree(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images: Vec<u16> = self.images.to_vec();
        images.extend(self.degree() as u16..degree as u16);
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Shifts the action onto points `offset..offset+degree` inside a larger domain.
    pub fn shift(&self, offset: usize, total: usize) -> Perm {
        let mut images: Vec<u16> = (0..total as u16).collect();
        for (i, &im) in self.images.iter().enumerate() {
            images[offset + i] = (offset + im as usize) as u16;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses a 1-based cycle string like `(1 2 3)(4 5)`. `()` and the empty
    /// string denote the identity. Non-disjoint cycles are applied left to right.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let err = |msg: &str| Error::CycleParse(text.to_string(), msg.to_string());
        let mut result = Perm::identity(degree);
        let mut chars = text.char_indices().peekable();
        let mut saw_any = false;
        while let Some(&(_, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(err(&format!("expected '(' but found '{c}'")));
            }
            chars.next();
            let mut cycle: Vec<u16> = Vec::new();
            let mut cur = String::new();
            loop {
                match chars.next() {
                    None => return Err(err("unterminated cycle")),
                    Some((_, ')')) => {
                        if !cur.is_empty() {
                            cycle.push(parse_point(&cur, degree, text)?);
                        }
                        break;
                    }
                    Some((_, ch)) if ch.is_ascii_digit() => cur.push(ch),
                    Some((_, ch)) if ch.is_whitespace() || ch == ',' => {
                        if !cur.is_empty() {
                            cycle.push(parse_point(&cur, degree, text)?);
                            cur.clear();
                        }
                    }
                    Some((_, ch)) => return Err(err(&format!("unexpected character '{ch}'"))),
                }
            }
            saw_any = true;
            if cycle.len() > 1 {
                let mut seen = vec![false; degree];
                for &p in &cycle {
                    if seen[p as usize] {
                        return Err(err("repeated point inside a cycle"));
                    }
                    seen[p as usize] = true;
                }
                let mut images: Vec<u16> = (0..degree as u16).collect();
                for w in cycle.windows(2) {
                    images[w[0] as usize] = w[1];
                }
                images[cycle[cycle.len() - 1] as usize] = cycle[0];
                result = result.compose(&Perm {
                    images: images.into_boxed_slice(),
                });
            }
        }
        if !saw_any && !text.trim().is_empty() {
            return Err(err("no cycles found"));
        }
        Ok(result)
    }

    /// Disjoint-cycle form, 1-based, fixed points omitted; identity is `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.images[p] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<u16> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &im)| i as u16 != im)
            .map(|(i, _)| i as u16)
    }
}

trait GcdWith {
    fn gcd_with(self, other: &BigUint) -> BigUint;
}

impl GcdWith for BigUint {
    fn gcd_with(self, other: &BigUint) -> BigUint {
        num::Integer::gcd(&self, other)
    }
}

fn parse_point(s: &str, degree: usize, text: &str) -> Result<u16> {
    let v: usize = s
        .parse()
        .map_err(|_| Error::CycleParse(text.to_string(), format!("bad point `{s}`")))?;
    if v == 0 || v > degree {
        return Err(Error::CycleParse(
            text.to_string(),
            format!("point {v} outside 1..={degree}"),
        ));
    }
    Ok((v - 1) as u16)
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}
