//! Conjugacy classes by conjugation-orbit closure.
//!
//! Classes are found by sweeping the group elements in the stabilizer chain's
//! deterministic order and closing each unclassified element under conjugation
//! by the generators, so class indexing, representatives and the element lists
//! are reproducible run to run. The sweep stops as soon as the class sizes sum
//! to the group order.

use std::collections::HashMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::par;
use crate::perm::Perm;

use super::PermutationGroup;

#[derive(Clone)]
pub struct ConjugacyClasses {
    order: u64,
    reps: Vec<Perm>,
    sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    /// power_classes[c][l] = class index of rep_c^l, l in 0..rep_orders[c]
    power_classes: Vec<Vec<u32>>,
    inverse_map: Vec<u32>,
    exponent: u64,
    class_of: HashMap<Perm, u32>,
    members: Vec<Vec<Perm>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn representative(&self, c: usize) -> &Perm {
        &self.reps[c]
    }

    pub fn representatives(&self) -> &[Perm] {
        &self.reps
    }

    pub fn size(&self, c: usize) -> u64 {
        self.sizes[c]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn rep_order(&self, c: usize) -> u64 {
        self.rep_orders[c]
    }

    /// lcm of the representative element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn class_of(&self, p: &Perm) -> Option<u32> {
        self.class_of.get(p).copied()
    }

    /// Class of rep_c raised to an arbitrary power.
    pub fn power_class(&self, c: usize, exponent: u64) -> u32 {
        let ord = self.rep_orders[c];
        self.power_classes[c][(exponent % ord) as usize]
    }

    /// Class of the l-th powers for a prime l dividing the exponent (the stored
    /// power map restricted to the primes, which is how normal-subgroup closure
    /// of kernels is checked).
    pub fn power_class_prime(&self, c: usize, l: u64) -> u32 {
        self.power_class(c, l)
    }

    pub fn inverse_class(&self, c: usize) -> u32 {
        self.inverse_map[c]
    }

    pub fn members(&self, c: usize) -> &[Perm] {
        &self.members[c]
    }
}

pub(super) fn compute(group: &PermutationGroup, bound: u64) -> Result<ConjugacyClasses> {
    let order = match group.order_u64() {
        Some(n) if n <= bound => n,
        _ => {
            return Err(Error::OrderBound {
                order: group.order().to_string(),
                bound,
            })
        }
    };

    let gens: Vec<Perm> = group.generators().to_vec();
    let mut class_of: HashMap<Perm, u32> = HashMap::with_capacity(order as usize);
    let mut members: Vec<Vec<Perm>> = Vec::new();
    let mut covered = 0u64;

    for elem in group.elements() {
        if covered == order {
            break;
        }
        if class_of.contains_key(&elem) {
            continue;
        }
        let idx = members.len() as u32;
        let mut orbit: Vec<Perm> = vec![elem.clone()];
        class_of.insert(elem, idx);
        let mut frontier = 0usize;
        while frontier < orbit.len() {
            // one BFS round; conjugates are computed in parallel but inserted
            // in (member, generator) order so the orbit listing is deterministic
            let round_end = orbit.len();
            let batch: Vec<Vec<Perm>> = par::map_slice(&orbit[frontier..round_end], |x| {
                gens.iter().map(|g| x.conjugate_by(g)).collect()
            });
            frontier = round_end;
            for conjugates in batch {
                for y in conjugates {
                    if !class_of.contains_key(&y) {
                        class_of.insert(y.clone(), idx);
                        orbit.push(y);
                    }
                }
            }
        }
        covered += orbit.len() as u64;
        members.push(orbit);
    }
    debug_assert_eq!(covered, order);

    let reps: Vec<Perm> = members.iter().map(|m| m[0].clone()).collect();
    let sizes: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
    let rep_orders: Vec<u64> = reps.iter().map(|r| r.order_u64()).collect();
    let exponent = rep_orders.iter().fold(1u64, |acc, &o| arith::lcm(acc, o));

    let mut power_classes = Vec::with_capacity(reps.len());
    for (c, rep) in reps.iter().enumerate() {
        let ord = rep_orders[c];
        let mut row = Vec::with_capacity(ord as usize);
        let mut cur = Perm::identity(rep.degree());
        for _ in 0..ord {
            row.push(*class_of.get(&cur).expect("powers stay in the group"));
            cur = cur.compose(rep);
        }
        power_classes.push(row);
    }
    let inverse_map: Vec<u32> = (0..reps.len())
        .map(|c| power_classes[c][(rep_orders[c] - 1) as usize])
        .collect();

    // class 0 is the identity class of size 1, and sizes divide the order
    debug_assert!(reps[0].is_identity() && sizes[0] == 1);
    debug_assert!(sizes.iter().all(|&s| order % s == 0));

    Ok(ConjugacyClasses {
        order,
        reps,
        sizes,
        rep_orders,
        power_classes,
        inverse_map,
        exponent,
        class_of,
        members,
    })
}
