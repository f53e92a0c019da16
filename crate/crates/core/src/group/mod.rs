//! Finite permutation groups: named constructors, spec grammar, normal
//! closures, coset actions and conjugacy classes.

use std::fmt;

use num::bigint::BigUint;
use num::traits::ToPrimitive;

use crate::arith;
use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::perm::Perm;

mod classes;
pub mod named;

pub use classes::ConjugacyClasses;

/// Default cap on the group order for element-listing computations
/// (conjugacy classes and everything downstream of them).
pub const DEFAULT_ORDER_BOUND: u64 = 1_000_000;

#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    order: BigUint,
    label: String,
}

impl PermutationGroup {
    /// Builds a group from generators, computing its stabilizer chain.
    pub fn from_generators(degree: usize, gens: Vec<Perm>, label: impl Into<String>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Unsupported("generator list must be nonempty".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, &gens);
        let order = chain.order();
        Ok(PermutationGroup {
            degree,
            gens,
            chain,
            order,
            label: label.into(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::from_generators(degree, vec![Perm::identity(degree)], "trivial")
            .expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.chain.contains(p)
    }

    pub fn is_subgroup(&self, sub: &PermutationGroup) -> bool {
        sub.degree == self.degree && sub.gens.iter().all(|g| self.contains(g))
    }

    /// True iff `n <= self` and every generator conjugate stays inside `n`.
    pub fn is_normal_subgroup(&self, n: &PermutationGroup) -> bool {
        self.is_subgroup(n)
            && n.gens
                .iter()
                .all(|s| self.gens.iter().all(|g| n.contains(&s.conjugate_by(g))))
    }

    /// Elements in the chain's deterministic order (identity first).
    pub fn elements(&self) -> impl Iterator<Item = Perm> + '_ {
        self.chain.elements()
    }

    /// Smallest normal subgroup of `self` containing `elems`.
    pub fn normal_closure(&self, elems: &[Perm]) -> Result<PermutationGroup> {
        for e in elems {
            if !self.contains(e) {
                return Err(Error::NotAMember);
            }
        }
        let mut gens: Vec<Perm> = elems.iter().filter(|e| !e.is_identity()).cloned().collect();
        if gens.is_empty() {
            return Ok(PermutationGroup::trivial(self.degree));
        }
        let mut chain = StabChain::new(self.degree, &gens);
        loop {
            let mut fresh = Vec::new();
            for s in &gens {
                for g in &self.gens {
                    let c = s.conjugate_by(g);
                    if !chain.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            gens.extend(fresh);
            chain = StabChain::new(self.degree, &gens);
        }
        PermutationGroup::from_generators(self.degree, gens, format!("closure in {}", self.label))
    }

    pub fn conjugacy_classes(&self) -> Result<ConjugacyClasses> {
        self.conjugacy_classes_bounded(DEFAULT_ORDER_BOUND)
    }

    pub fn conjugacy_classes_bounded(&self, bound: u64) -> Result<ConjugacyClasses> {
        classes::compute(self, bound)
    }

    /// The action of `self` on the right cosets of `n`, as a permutation group
    /// on `|G : N|` points. Requires `n` normal is *not* required here; any
    /// subgroup gives a coset action, but callers in this crate use normal `n`.
    pub fn coset_action(&self, n: &PermutationGroup) -> Result<PermutationGroup> {
        if !self.is_subgroup(n) {
            return Err(Error::NotAMember);
        }
        let mut reps: Vec<Perm> = vec![Perm::identity(self.degree)];
        let coset_of = |reps: &[Perm], x: &Perm| -> Option<usize> {
            reps.iter().position(|r| n.contains(&x.compose(&r.inverse())))
        };
        let mut i = 0usize;
        while i < reps.len() {
            for g in &self.gens {
                let y = reps[i].compose(g);
                if coset_of(&reps, &y).is_none() {
                    reps.push(y);
                }
            }
            i += 1;
        }
        let index = reps.len();
        if index > u16::MAX as usize {
            return Err(Error::Unsupported(format!("coset space of size {index} too large")));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut images = vec![0u16; index];
            for (ci, r) in reps.iter().enumerate() {
                let y = r.compose(g);
                images[ci] = coset_of(&reps, &y).expect("coset space is closed") as u16;
            }
            gens.push(Perm::from_images(images)?);
        }
        let q = PermutationGroup::from_generators(index, gens, format!("{} mod {}", self.label, n.label))?;
        let expected = self.order() / n.order();
        if *q.order() != expected {
            return Err(Error::TableDefect(format!(
                "coset action order {} does not match index {}",
                q.order(),
                expected
            )));
        }
        Ok(q)
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationGroup({}, degree {}, order {})", self.label, self.degree, self.order)
    }
}

/// Which coset of the outer automorphism group extends PSL2(q).
///
/// `Pure { k }` is generated over S by the field power `phi^k`; `WithDelta { k }`
/// also contains the diagonal class; `Twisted { k }` (k even) is generated by
/// `delta * phi^(k/2)` and does not contain delta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OuterClass {
    Pure { k: u32 },
    WithDelta { k: u32 },
    Twisted { k: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Alt(u64),
    Sym(u64),
    Psl2(u64),
    Pgl2(u64),
    Named(String),
    Prod(Box<GroupSpec>, Box<GroupSpec>),
    Raw { degree: usize, gens: Vec<String> },
}

impl GroupSpec {
    /// Parses the spec grammar: `Alt(n)`, `Sym(n)`, `PSL2(q)`, `PGL2(q)`,
    /// `named:<id>`, `prod(<spec>,<spec>)`,
    /// `perm:deg=<d>;gens=<cycles>[,<cycles>...]`. Case- and whitespace-insensitive.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let lower = t.to_ascii_lowercase();
        let bad = |msg: &str| Error::InvalidSpec(text.to_string(), msg.to_string());

        if let Some(rest) = lower.strip_prefix("named:") {
            let id = rest.trim();
            if id.is_empty() {
                return Err(bad("empty named id"));
            }
            return Ok(GroupSpec::Named(id.to_string()));
        }
        if let Some(rest) = lower.strip_prefix("perm:") {
            return parse_raw(rest, text);
        }
        for (kw, ctor) in [
            ("alt", GroupSpec::Alt as fn(u64) -> GroupSpec),
            ("sym", GroupSpec::Sym as fn(u64) -> GroupSpec),
            ("psl2", GroupSpec::Psl2 as fn(u64) -> GroupSpec),
            ("pgl2", GroupSpec::Pgl2 as fn(u64) -> GroupSpec),
        ] {
            if let Some(rest) = lower.strip_prefix(kw) {
                let inner = strip_parens(rest).ok_or_else(|| bad("expected (n)"))?;
                let n: u64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| bad(&format!("bad integer `{}`", inner.trim())))?;
                return Ok(ctor(n));
            }
        }
        if let Some(rest) = lower.strip_prefix("prod") {
            let inner = strip_parens(rest).ok_or_else(|| bad("expected (spec,spec)"))?;
            let comma = top_level_comma(inner).ok_or_else(|| bad("expected two specs"))?;
            // reparse from the original text so raw cycle strings keep their case/spacing
            let offset = t.len() - inner.len() - 1;
            let left = &t[offset..offset + comma];
            let right = &t[offset + comma + 1..t.len() - 1];
            return Ok(GroupSpec::Prod(
                Box::new(GroupSpec::parse(left)?),
                Box::new(GroupSpec::parse(right)?),
            ));
        }
        Err(bad("unrecognized spec"))
    }

    pub fn build(&self) -> Result<PermutationGroup> {
        let mut g = match self {
            GroupSpec::Alt(n) => alternating(*n)?,
            GroupSpec::Sym(n) => symmetric(*n)?,
            GroupSpec::Psl2(q) => psl2(*q)?,
            GroupSpec::Pgl2(q) => pgl2(*q)?,
            GroupSpec::Named(id) => named::build(id)?,
            GroupSpec::Prod(a, b) => direct_product(&a.build()?, &b.build()?)?,
            GroupSpec::Raw { degree, gens } => {
                if *degree == 0 {
                    return Err(Error::InvalidSpec(self.to_string(), "degree must be >= 1".into()));
                }
                let perms = gens
                    .iter()
                    .map(|s| Perm::parse_cycles(s, *degree))
                    .collect::<Result<Vec<_>>>()?;
                PermutationGroup::from_generators(*degree, perms, "")?
            }
        };
        g.set_label(self.to_string());
        Ok(g)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alt(n) => write!(f, "Alt({n})"),
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::Psl2(q) => write!(f, "PSL2({q})"),
            GroupSpec::Pgl2(q) => write!(f, "PGL2({q})"),
            GroupSpec::Named(id) => write!(f, "named:{id}"),
            GroupSpec::Prod(a, b) => write!(f, "prod({a},{b})"),
            GroupSpec::Raw { degree, gens } => {
                write!(f, "perm:deg={degree};gens={}", gens.join(","))
            }
        }
    }
}

fn strip_parens(rest: &str) -> Option<&str> {
    let rest = rest.trim();
    rest.strip_prefix('(')?.strip_suffix(')')
}

/// Position of the first comma at paren depth zero.
fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn parse_raw(lower_rest: &str, original: &str) -> Result<GroupSpec> {
    let bad = |msg: &str| Error::InvalidSpec(original.to_string(), msg.to_string());
    // recover the untouched tail of the original text
    let tail_start = original.to_ascii_lowercase().find("perm:").unwrap() + 5;
    let tail = &original[tail_start..];
    debug_assert_eq!(tail.to_ascii_lowercase(), lower_rest);

    let mut degree: Option<usize> = None;
    let mut gens: Option<Vec<String>> = None;
    for part in tail.split(';') {
        let part = part.trim();
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| bad("expected key=value fields separated by ;"))?;
        match key.trim().to_ascii_lowercase().as_str() {
            "deg" => {
                degree = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|_| bad(&format!("bad degree `{}`", value.trim())))?,
                )
            }
            "gens" => {
                let mut list = Vec::new();
                let mut depth = 0i32;
                let mut cur = String::new();
                for c in value.chars() {
                    match c {
                        '(' => {
                            depth += 1;
                            cur.push(c);
                        }
                        ')' => {
                            depth -= 1;
                            cur.push(c);
                        }
                        ',' if depth == 0 => {
                            if !cur.trim().is_empty() {
                                list.push(cur.trim().to_string());
                            }
                            cur.clear();
                        }
                        _ => cur.push(c),
                    }
                }
                if !cur.trim().is_empty() {
                    list.push(cur.trim().to_string());
                }
                if list.is_empty() {
                    return Err(bad("empty generator list"));
                }
                gens = Some(list);
            }
            other => return Err(bad(&format!("unknown field `{other}`"))),
        }
    }
    Ok(GroupSpec::Raw {
        degree: degree.ok_or_else(|| bad("missing deg="))?,
        gens: gens.ok_or_else(|| bad("missing gens="))?,
    })
}

pub fn symmetric(n: u64) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::InvalidSpec(format!("Sym({n})"), "n must be >= 1".into()));
    }
    let degree = n.max(1) as usize;
    let gens = if n < 2 {
        vec![Perm::identity(degree)]
    } else {
        let swap = Perm::parse_cycles("(1 2)", degree)?;
        let cycle_str = format!(
            "({})",
            (1..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
        );
        let cycle = Perm::parse_cycles(&cycle_str, degree)?;
        vec![swap, cycle]
    };
    let g = PermutationGroup::from_generators(degree, gens, format!("Sym({n})"))?;
    debug_assert_eq!(*g.order(), arith::big_factorial(n));
    Ok(g)
}

pub fn alternating(n: u64) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::InvalidSpec(format!("Alt({n})"), "n must be >= 1".into()));
    }
    let degree = n.max(1) as usize;
    let gens = if n < 3 {
        vec![Perm::identity(degree)]
    } else if n == 3 {
        vec![Perm::parse_cycles("(1 2 3)", degree)?]
    } else {
        let three = Perm::parse_cycles("(1 2 3)", degree)?;
        // a long cycle of even length is odd, so shift by one point when n is even
        let big = if n % 2 == 1 {
            format!("({})", (1..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(" "))
        } else {
            format!("({})", (2..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(" "))
        };
        vec![three, Perm::parse_cycles(&big, degree)?]
    };
    let g = PermutationGroup::from_generators(degree, gens, format!("Alt({n})"))?;
    if n >= 3 {
        debug_assert_eq!(g.order() * BigUint::from(2u32), arith::big_factorial(n));
    }
    Ok(g)
}

/// The q+1 points of the projective line: affine x at index x, infinity last.
struct ProjLine {
    field: FiniteField,
}

impl ProjLine {
    fn new(q: u64) -> Result<Self> {
        Ok(ProjLine {
            field: FiniteField::new(q)?,
        })
    }

    fn degree(&self) -> usize {
        self.field.q() as usize + 1
    }

    fn infinity(&self) -> u16 {
        self.field.q() as u16
    }

    /// Permutation of the line induced by an invertible matrix [[a,b],[c,d]].
    fn moebius(&self, a: u64, b: u64, c: u64, d: u64) -> Perm {
        let k = &self.field;
        let q = k.q();
        let mut images = vec![0u16; self.degree()];
        for x in 0..q {
            let denom = k.add(k.mul(c, x), d);
            images[x as usize] = if denom == 0 {
                self.infinity()
            } else {
                k.div(k.add(k.mul(a, x), b), denom) as u16
            };
        }
        images[self.infinity() as usize] = if c == 0 {
            self.infinity()
        } else {
            k.div(a, c) as u16
        };
        Perm::from_images(images).expect("moebius maps are bijections")
    }

    /// The field automorphism x -> x^p acting on the line.
    fn frobenius(&self) -> Perm {
        let k = &self.field;
        let mut images = vec![0u16; self.degree()];
        for x in 0..k.q() {
            images[x as usize] = k.frobenius(x) as u16;
        }
        images[self.infinity() as usize] = self.infinity();
        Perm::from_images(images).expect("frobenius is a bijection")
    }
}

fn psl2_gens(line: &ProjLine) -> Vec<Perm> {
    let k = &line.field;
    let g = k.generator();
    let translation = line.moebius(1, 1, 0, 1);
    let weyl = line.moebius(0, k.neg(1), 1, 0);
    let torus = if k.p() == 2 {
        line.moebius(g, 0, 0, 1)
    } else {
        line.moebius(k.mul(g, g), 0, 0, 1)
    };
    vec![translation, torus, weyl]
}

fn delta_gen(line: &ProjLine) -> Perm {
    line.moebius(line.field.generator(), 0, 0, 1)
}

pub fn psl2(q: u64) -> Result<PermutationGroup> {
    let (_, _) = check_psl_q(q)?;
    let line = ProjLine::new(q)?;
    let g = PermutationGroup::from_generators(line.degree(), psl2_gens(&line), format!("PSL2({q})"))?;
    let expected = q * (q * q - 1) / arith::gcd(2, q - 1);
    if g.order_u64() != Some(expected) {
        return Err(Error::TableDefect(format!(
            "PSL2({q}) constructed with order {} instead of {expected}",
            g.order()
        )));
    }
    Ok(g)
}

pub fn pgl2(q: u64) -> Result<PermutationGroup> {
    let (p, _) = check_psl_q(q)?;
    let line = ProjLine::new(q)?;
    let mut gens = psl2_gens(&line);
    if p != 2 {
        gens.push(delta_gen(&line));
    }
    let g = PermutationGroup::from_generators(line.degree(), gens, format!("PGL2({q})"))?;
    let expected = q * (q * q - 1);
    if g.order_u64() != Some(expected) {
        return Err(Error::TableDefect(format!(
            "PGL2({q}) constructed with order {} instead of {expected}",
            g.order()
        )));
    }
    Ok(g)
}

fn check_psl_q(q: u64) -> Result<(u64, u32)> {
    match arith::prime_power(q) {
        Some((p, f)) if q > 3 => Ok((p, f)),
        _ => Err(Error::InvalidSpec(
            format!("PSL2({q})"),
            "q must be a prime power > 3".into(),
        )),
    }
}

/// A group H with PSL2(q) <= H <= Aut(PSL2(q)), given by the image of H in the
/// outer automorphism group. Acts on the q+1 points of the projective line.
pub fn psl2_extension(q: u64, outer: OuterClass) -> Result<PermutationGroup> {
    let (p, f) = check_psl_q(q)?;
    let line = ProjLine::new(q)?;
    let mut gens = psl2_gens(&line);
    let frob = line.frobenius();
    let outer_size: u64;
    match outer {
        OuterClass::Pure { k } => {
            if k == 0 || f % k != 0 {
                return Err(Error::InvalidSpec(format!("psl2ext({q})"), "k must divide f".into()));
            }
            if k < f {
                gens.push(frob.pow(k as u64));
            }
            outer_size = (f / k) as u64;
        }
        OuterClass::WithDelta { k } => {
            if k == 0 || f % k != 0 {
                return Err(Error::InvalidSpec(format!("psl2ext({q})"), "k must divide f".into()));
            }
            if p != 2 {
                gens.push(delta_gen(&line));
            }
            if k < f {
                gens.push(frob.pow(k as u64));
            }
            outer_size = (f / k) as u64 * arith::gcd(2, q - 1);
        }
        OuterClass::Twisted { k } => {
            if p == 2 || k == 0 || k % 2 != 0 || f % k != 0 {
                return Err(Error::InvalidSpec(
                    format!("psl2ext({q})"),
                    "twisted class needs odd p and even k dividing f".into(),
                ));
            }
            gens.push(delta_gen(&line).compose(&frob.pow((k / 2) as u64)));
            outer_size = 2 * (f / k) as u64;
        }
    }
    let g = PermutationGroup::from_generators(
        line.degree(),
        gens,
        format!("psl2ext({q},{outer:?})"),
    )?;
    let expected = q * (q * q - 1) / arith::gcd(2, q - 1) * outer_size;
    if g.order_u64() != Some(expected) {
        return Err(Error::TableDefect(format!(
            "PSL2({q}) extension {outer:?} has order {} instead of {expected}",
            g.order()
        )));
    }
    Ok(g)
}

pub fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> Result<PermutationGroup> {
    let degree = a.degree() + b.degree();
    if degree > u16::MAX as usize {
        return Err(Error::Unsupported("product degree too large".into()));
    }
    let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.extend_degree(degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.shift(a.degree(), degree)));
    let g = PermutationGroup::from_generators(
        degree,
        gens,
        format!("prod({},{})", a.label(), b.label()),
    )?;
    debug_assert_eq!(*g.order(), a.order() * b.order());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn enumerate_all(g: &PermutationGroup) -> HashSet<Perm> {
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![Perm::identity(g.degree())];
        seen.insert(Perm::identity(g.degree()));
        while let Some(x) = frontier.pop() {
            for h in g.generators() {
                let y = x.compose(h);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn spec_parsing_round_trip() {
        for text in [
            "Alt(5)",
            "Sym(6)",
            "PSL2(7)",
            "PGL2(9)",
            "named:m10",
            "prod(Alt(5),Sym(3))",
            "perm:deg=3;gens=(1 2 3),(1 2)",
        ] {
            let spec = GroupSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
            let reparsed = GroupSpec::parse(&spec.to_string()).unwrap();
            assert_eq!(spec, reparsed);
        }
        // whitespace and case insensitivity
        assert_eq!(GroupSpec::parse(" alt ( 5 ) ").unwrap(), GroupSpec::Alt(5));
        assert_eq!(
            GroupSpec::parse("prod( Alt(5) , prod(Sym(3),Alt(4)) )").unwrap().to_string(),
            "prod(Alt(5),prod(Sym(3),Alt(4)))"
        );
        assert!(GroupSpec::parse("foo(3)").is_err());
        assert!(GroupSpec::parse("perm:deg=3").is_err());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(6).unwrap().order_u64(), Some(720));
        assert_eq!(alternating(5).unwrap().order_u64(), Some(60));
        assert_eq!(alternating(8).unwrap().order_u64(), Some(20160));
        assert_eq!(alternating(2).unwrap().order_u64(), Some(1));
        assert_eq!(symmetric(1).unwrap().order_u64(), Some(1));
    }

    #[test]
    fn alternating_matches_enumeration_oracle() {
        for n in 3..=6u64 {
            let g = alternating(n).unwrap();
            let all = enumerate_all(&g);
            let expected: u64 = (1..=n).product::<u64>() / 2;
            assert_eq!(all.len() as u64, expected, "A_{n}");
            assert_eq!(g.order_u64(), Some(expected));
        }
    }

    #[test]
    fn psl2_orders_match_formula() {
        for q in arith::prime_powers_in(4, 23) {
            let g = psl2(q).unwrap();
            let expected = q * (q * q - 1) / arith::gcd(2, q - 1);
            assert_eq!(g.order_u64(), Some(expected), "PSL2({q})");
            assert_eq!(g.degree() as u64, q + 1);
        }
        for q in [5u64, 7, 9] {
            let g = pgl2(q).unwrap();
            assert_eq!(g.order_u64(), Some(q * (q * q - 1)), "PGL2({q})");
        }
        assert!(psl2(3).is_err());
        assert!(psl2(6).is_err());
    }

    #[test]
    fn psl2_seven_on_eight_points() {
        let g = psl2(7).unwrap();
        assert_eq!(g.order_u64(), Some(168));
        assert_eq!(g.degree(), 8);
    }

    #[test]
    fn direct_product_order_multiplies() {
        let a = alternating(5).unwrap();
        let b = symmetric(4).unwrap();
        let p = direct_product(&a, &b).unwrap();
        assert_eq!(p.order_u64(), Some(60 * 24));
        assert_eq!(p.degree(), 9);
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = symmetric(4).unwrap();
        let three = Perm::parse_cycles("(1 2 3)", 4).unwrap();
        let a4 = s4.normal_closure(&[three]).unwrap();
        assert_eq!(a4.order_u64(), Some(12));

        let a5 = alternating(5).unwrap();
        let three5 = Perm::parse_cycles("(1 2 3)", 5).unwrap();
        let closure = a5.normal_closure(&[three5]).unwrap();
        assert_eq!(closure.order_u64(), Some(60), "A5 is simple");

        let trivial = s4.normal_closure(&[Perm::identity(4)]).unwrap();
        assert_eq!(trivial.order_u64(), Some(1));

        let outside = Perm::parse_cycles("(1 2 3)", 5).unwrap();
        assert!(matches!(
            alternating(4).unwrap().normal_closure(&[outside.clone()]),
            Err(Error::DegreeMismatch { .. }) | Err(Error::NotAMember)
        ));
    }

    #[test]
    fn normality_and_coset_action() {
        let s4 = symmetric(4).unwrap();
        let v4 = s4
            .normal_closure(&[Perm::parse_cycles("(1 2)(3 4)", 4).unwrap()])
            .unwrap();
        assert_eq!(v4.order_u64(), Some(4));
        assert!(s4.is_normal_subgroup(&v4));
        let q = s4.coset_action(&v4).unwrap();
        assert_eq!(q.order_u64(), Some(6));
        assert_eq!(q.degree(), 6);

        let s5 = symmetric(5).unwrap();
        let a5 = alternating(5).unwrap();
        // same points, A5 <= S5
        let a5_in = PermutationGroup::from_generators(5, a5.generators().to_vec(), "Alt(5)").unwrap();
        assert!(s5.is_normal_subgroup(&a5_in));
        let c2 = s5.coset_action(&a5_in).unwrap();
        assert_eq!(c2.order_u64(), Some(2));
    }

    #[test]
    fn psl2_extensions_over_q9() {
        // the five groups between PSL2(9) and its automorphism group
        let s = psl2_extension(9, OuterClass::Pure { k: 2 }).unwrap();
        assert_eq!(s.order_u64(), Some(360));
        let pgl = psl2_extension(9, OuterClass::WithDelta { k: 2 }).unwrap();
        assert_eq!(pgl.order_u64(), Some(720));
        let sphi = psl2_extension(9, OuterClass::Pure { k: 1 }).unwrap();
        assert_eq!(sphi.order_u64(), Some(720));
        let twisted = psl2_extension(9, OuterClass::Twisted { k: 2 }).unwrap();
        assert_eq!(twisted.order_u64(), Some(720));
        let full = psl2_extension(9, OuterClass::WithDelta { k: 1 }).unwrap();
        assert_eq!(full.order_u64(), Some(1440));

        // the three index-2 subgroups above PSL2(9) are pairwise distinct
        for (a, b) in [(&pgl, &sphi), (&pgl, &twisted), (&sphi, &twisted)] {
            assert!(!a.generators().iter().all(|g| b.contains(g)));
        }
        // the twisted extension is the one with elements of order 8 and
        // without odd permutations... it is sharply 3-transitive on 10 points:
        let has8 = |g: &PermutationGroup| g.elements().any(|e| e.order_u64() == 8);
        assert!(has8(&twisted));
        assert!(!has8(&sphi), "the field extension is Sym(6) which has no order-8 element");

        let gamma8 = psl2_extension(8, OuterClass::Pure { k: 1 }).unwrap();
        assert_eq!(gamma8.order_u64(), Some(1512));
    }
}
