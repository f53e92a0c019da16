//! Named groups shipped as generator data.
//!
//! The bundled groups are the ones without a family constructor in the spec
//! grammar: the extensions of PSL2(9) by outer automorphisms (M10, the
//! degree-10 copy of Sym(6), the full automorphism group), the automorphism
//! group of PSL2(8), and the Suzuki group Sz(8) on its 65-point ovoid. Each
//! data file records how its generators were produced and the group order;
//! `reconstruct` rebuilds the same groups from first principles and the test
//! suite checks the bundled data against it.

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::perm::Perm;

use super::{pgl2, psl2, psl2_extension, OuterClass, PermutationGroup};

struct NamedEntry {
    canonical: &'static str,
    aliases: &'static [&'static str],
    description: &'static str,
    source: Source,
}

enum Source {
    Data(&'static str),
    Builtin(fn() -> Result<PermutationGroup>),
}

const M10_DATA: &str = include_str!("../../data/named/m10.gens");
const S6_DATA: &str = include_str!("../../data/named/s6_deg10.gens");
const AUT_PSL29_DATA: &str = include_str!("../../data/named/aut_psl2_9.gens");
const PGAMMAL28_DATA: &str = include_str!("../../data/named/pgammal2_8.gens");
const SZ8_DATA: &str = include_str!("../../data/named/sz8.gens");

fn registry() -> &'static [NamedEntry] {
    &[
        NamedEntry {
            canonical: "m10",
            aliases: &["m10"],
            description: "Mathieu group M10 = A6.2_3 on 10 points, order 720",
            source: Source::Data(M10_DATA),
        },
        NamedEntry {
            canonical: "s6",
            aliases: &["s6", "psigmal29", "sigmal29", "s6deg10"],
            description: "Sym(6) in its degree-10 action (the field extension of PSL2(9)), order 720",
            source: Source::Data(S6_DATA),
        },
        NamedEntry {
            canonical: "autpsl29",
            aliases: &["autpsl29", "pgammal29", "autalt6", "auta6"],
            description: "Aut(PSL2(9)) on 10 points, order 1440",
            source: Source::Data(AUT_PSL29_DATA),
        },
        NamedEntry {
            canonical: "pgammal28",
            aliases: &["pgammal28", "autpsl28"],
            description: "Aut(PSL2(8)) on 9 points, order 1512",
            source: Source::Data(PGAMMAL28_DATA),
        },
        NamedEntry {
            canonical: "sz8",
            aliases: &["sz8", "suz8", "2b28"],
            description: "Suzuki group Sz(8) on the 65 ovoid points, order 29120",
            source: Source::Data(SZ8_DATA),
        },
        NamedEntry {
            canonical: "psl29",
            aliases: &["psl29", "alt6deg10", "a6deg10"],
            description: "PSL2(9) on 10 points, order 360",
            source: Source::Builtin(|| psl2(9)),
        },
        NamedEntry {
            canonical: "pgl29",
            aliases: &["pgl29"],
            description: "PGL2(9) on 10 points, order 720",
            source: Source::Builtin(|| pgl2(9)),
        },
    ]
}

fn normalize(id: &str) -> String {
    id.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

pub fn known_ids() -> Vec<(&'static str, &'static str)> {
    registry().iter().map(|e| (e.canonical, e.description)).collect()
}

pub fn build(id: &str) -> Result<PermutationGroup> {
    let key = normalize(id);
    let entry = registry()
        .iter()
        .find(|e| e.aliases.iter().any(|a| *a == key))
        .ok_or_else(|| Error::UnknownNamed(id.to_string()))?;
    let mut g = match &entry.source {
        Source::Data(text) => parse_gens_file(text, entry.canonical)?,
        Source::Builtin(f) => f()?,
    };
    g.set_label(format!("named:{}", entry.canonical));
    Ok(g)
}

fn parse_gens_file(text: &str, name: &str) -> Result<PermutationGroup> {
    let mut degree: Option<usize> = None;
    let mut order: Option<u64> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| Error::WitnessParse {
            line: lineno + 1,
            msg: format!("bad line in {name} data: `{line}`"),
        })?;
        match key.trim() {
            "degree" => degree = value.trim().parse().ok(),
            "order" => order = value.trim().parse().ok(),
            "gen" => {
                let d = degree.ok_or_else(|| Error::WitnessParse {
                    line: lineno + 1,
                    msg: "gen before degree".into(),
                })?;
                gens.push(Perm::parse_cycles(value.trim(), d)?);
            }
            other => {
                return Err(Error::WitnessParse {
                    line: lineno + 1,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::WitnessParse {
        line: 0,
        msg: format!("{name}: missing degree"),
    })?;
    let g = PermutationGroup::from_generators(degree, gens, name.to_string())?;
    if let Some(expected) = order {
        if g.order_u64() != Some(expected) {
            return Err(Error::TableDefect(format!(
                "bundled {name} generators give order {} instead of {expected}",
                g.order()
            )));
        }
    }
    Ok(g)
}

/// Rebuilds each bundled group from first principles (used to validate the
/// shipped generator files).
pub fn reconstruct(canonical: &str) -> Result<PermutationGroup> {
    match canonical {
        // Of the two index-2 extensions of PSL2(9) avoiding the diagonal class,
        // M10 is the twisted one (it has elements of order 8; the field
        // extension is Sym(6), whose element orders stop at 6).
        "m10" => psl2_extension(9, OuterClass::Twisted { k: 2 }),
        "s6" => psl2_extension(9, OuterClass::Pure { k: 1 }),
        "autpsl29" => psl2_extension(9, OuterClass::WithDelta { k: 1 }),
        "pgammal28" => psl2_extension(8, OuterClass::Pure { k: 1 }),
        "sz8" => suzuki(8),
        other => Err(Error::UnknownNamed(other.to_string())),
    }
}

/// Suzuki group Sz(q), q = 2^(2n+1), acting on the q^2+1 ovoid points
/// {infinity} u F_q^2. With sigma the field automorphism x -> x^(2^(n+1)):
/// the point stabilizer of infinity is generated by the maps
/// (a,b) -> (a+c, b+d+a c^sigma) and (a,b) -> (ka, k^(sigma+1) b), and the
/// involution swapping infinity with (0,0) sends (a,b) to
/// (b/f, a/f) with f = ab + a^(sigma+2) + b^sigma.
fn suzuki(q: u64) -> Result<PermutationGroup> {
    let (p, f) = crate::arith::prime_power(q).ok_or_else(|| Error::Unsupported("not a prime power".into()))?;
    if p != 2 || f % 2 == 0 {
        return Err(Error::Unsupported("Sz(q) needs q = 2^(2n+1)".into()));
    }
    let k = FiniteField::new(q)?;
    let sigma = 1u64 << ((f as u64 + 1) / 2);
    let degree = (q * q + 1) as usize;
    let idx = |a: u64, b: u64| (a * q + b) as usize;
    let infinity = (q * q) as u16;

    let translation = |c: u64, d: u64| -> Perm {
        let mut images = vec![0u16; degree];
        for a in 0..q {
            for b in 0..q {
                let na = k.add(a, c);
                let nb = k.add(k.add(b, d), k.mul(a, k.pow(c, sigma)));
                images[idx(a, b)] = idx(na, nb) as u16;
            }
        }
        images[infinity as usize] = infinity;
        Perm::from_images(images).expect("translation is a bijection")
    };
    let torus = {
        let kappa = k.generator();
        let mut images = vec![0u16; degree];
        for a in 0..q {
            for b in 0..q {
                images[idx(a, b)] = idx(k.mul(kappa, a), k.mul(k.pow(kappa, sigma + 1), b)) as u16;
            }
        }
        images[infinity as usize] = infinity;
        Perm::from_images(images).expect("torus map is a bijection")
    };
    let involution = {
        let mut images = vec![0u16; degree];
        images[idx(0, 0)] = infinity;
        images[infinity as usize] = idx(0, 0) as u16;
        for a in 0..q {
            for b in 0..q {
                if a == 0 && b == 0 {
                    continue;
                }
                let norm = k.add(k.add(k.mul(a, b), k.pow(a, sigma + 2)), k.pow(b, sigma));
                assert!(norm != 0, "ovoid norm vanishes only at the origin");
                images[idx(a, b)] = idx(k.div(b, norm), k.div(a, norm)) as u16;
            }
        }
        Perm::from_images(images).expect("ovoid involution is a bijection")
    };

    let gens = vec![translation(1, 0), translation(0, 1), torus, involution];
    let g = PermutationGroup::from_generators(degree, gens, format!("Sz({q})"))?;
    let expected = q * q * (q * q + 1) * (q - 1);
    if g.order_u64() != Some(expected) {
        return Err(Error::TableDefect(format!(
            "Sz({q}) constructed with order {} instead of {expected}",
            g.order()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_named_id_errors() {
        assert!(matches!(build("nosuchgroup"), Err(Error::UnknownNamed(_))));
    }

    #[test]
    fn suzuki_reconstruction_has_the_right_shape() {
        let g = suzuki(8).unwrap();
        assert_eq!(g.order_u64(), Some(29120));
        assert_eq!(g.degree(), 65);
        // transitive on the ovoid
        let mut orbit = std::collections::HashSet::new();
        let mut frontier = vec![0u16];
        orbit.insert(0u16);
        while let Some(x) = frontier.pop() {
            for gen in g.generators() {
                let y = gen.apply(x);
                if orbit.insert(y) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(orbit.len(), 65);
    }

    #[test]
    fn bundled_data_matches_reconstruction() {
        for id in ["m10", "s6", "autpsl29", "pgammal28", "sz8"] {
            let bundled = build(id).unwrap();
            let rebuilt = reconstruct(id).unwrap();
            assert_eq!(bundled.order(), rebuilt.order(), "{id} order");
            assert_eq!(bundled.degree(), rebuilt.degree(), "{id} degree");
            for gen in bundled.generators() {
                assert!(rebuilt.contains(gen), "{id}: bundled generator escapes reconstruction");
            }
            for gen in rebuilt.generators() {
                assert!(bundled.contains(gen), "{id}: reconstruction generator escapes bundled");
            }
        }
    }

    #[test]
    fn m10_is_the_twisted_extension() {
        let m10 = build("m10").unwrap();
        assert_eq!(m10.order_u64(), Some(720));
        assert!(m10.elements().any(|e| e.order_u64() == 8));
        let s6 = build("s6").unwrap();
        assert_eq!(s6.order_u64(), Some(720));
        assert!(s6.elements().all(|e| e.order_u64() <= 6));
    }

    /// Regenerates the bundled generator files from the reconstructions.
    /// Run explicitly: cargo test -p codeg-core regen_named_data -- --ignored
    #[test]
    #[ignore]
    fn regen_named_data() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/named");
        std::fs::create_dir_all(dir).unwrap();
        let files: [(&str, &str, &str); 5] = [
            (
                "m10",
                "m10.gens",
                "# M10 on the 10 points of the projective line over GF(9):\n\
                 # PSL2(9) extended by the product of the diagonal and field\n\
                 # automorphism classes. Verified: order 720, contains elements\n\
                 # of order 8 (which Sym(6) does not), acts sharply 3-transitively.\n",
            ),
            (
                "s6",
                "s6_deg10.gens",
                "# Sym(6) in its transitive degree-10 action: PSL2(9) on the\n\
                 # projective line over GF(9) extended by the field automorphism.\n\
                 # Verified: order 720, all element orders <= 6.\n",
            ),
            (
                "autpsl29",
                "aut_psl2_9.gens",
                "# Aut(PSL2(9)) on the 10 points of the projective line over GF(9):\n\
                 # PSL2(9) extended by both the diagonal and field automorphisms.\n\
                 # Verified: order 1440.\n",
            ),
            (
                "pgammal28",
                "pgammal2_8.gens",
                "# Aut(PSL2(8)) on the 9 points of the projective line over GF(8):\n\
                 # PSL2(8) extended by the field automorphism of order 3.\n\
                 # Verified: order 1512.\n",
            ),
            (
                "sz8",
                "sz8.gens",
                "# Sz(8) acting on its 65-point ovoid {infinity} u GF(8)^2, with\n\
                 # sigma: x -> x^4. Generators: the translations (a,b) -> (a+1, b+a)\n\
                 # and (a,b) -> (a, b+1), the torus (a,b) -> (ka, k^(sigma+1) b) for a\n\
                 # generator k of GF(8)*, and the ovoid involution swapping infinity\n\
                 # with the origin. Verified: order 29120 = q^2 (q^2+1) (q-1).\n",
            ),
        ];
        for (id, file, header) in files {
            let g = reconstruct(id).unwrap();
            let mut out = String::from(header);
            out.push_str(&format!("degree: {}\norder: {}\n", g.degree(), g.order()));
            for gen in g.generators() {
                out.push_str(&format!("gen: {}\n", gen.cycle_string()));
            }
            std::fs::write(format!("{dir}/{file}"), out).unwrap();
        }
    }
}
