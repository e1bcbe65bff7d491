//! Computations on sections `L/K` (with `K` normal in `L`) carried out
//! inside the element table of a common parent group, without building the
//! quotient as a separate permutation group.

use crate::group::is_prime;
use crate::table::{Elem, ElemSet, Table};

#[derive(Clone, Copy)]
pub(crate) struct Section<'a> {
    pub top: &'a ElemSet,
    pub top_gens: &'a [Elem],
    pub bottom: &'a ElemSet,
    pub bottom_gens: &'a [Elem],
}

impl<'a> Section<'a> {
    pub fn new(top: &'a ElemSet, top_gens: &'a [Elem], bottom: &'a ElemSet, bottom_gens: &'a [Elem]) -> Self {
        Section { top, top_gens, bottom, bottom_gens }
    }

    pub fn is_trivial(&self) -> bool {
        self.top.count_ones(..) == self.bottom.count_ones(..)
    }
}

/// `[A, B]K` for subgroups `A`, `B` normal in `L` given by generators,
/// where `K` is the bottom of the section.
pub(crate) fn commutator_mod(t: &Table, s: &Section, a_gens: &[Elem], b_gens: &[Elem]) -> (ElemSet, Vec<Elem>) {
    let mut seed: Vec<Elem> = s.bottom_gens.to_vec();
    for &a in a_gens {
        for &b in b_gens {
            seed.push(t.commutator(a, b));
        }
    }
    t.normal_closure(s.top_gens, &seed)
}

pub(crate) fn is_abelian(t: &Table, s: &Section) -> bool {
    s.top_gens
        .iter()
        .all(|&a| s.top_gens.iter().all(|&b| s.bottom.contains(t.commutator(a, b) as usize)))
}

/// Limit of the lower central series of `L` taken modulo `K`.
pub(crate) fn nilpotent_residual(t: &Table, s: &Section) -> (ElemSet, Vec<Elem>) {
    let mut current = (s.top.clone(), s.top_gens.to_vec());
    loop {
        let next = commutator_mod(t, s, &current.1, s.top_gens);
        if next.0 == current.0 {
            return current;
        }
        current = next;
    }
}

/// Limit of the derived series of `L` taken modulo `K`.
pub(crate) fn soluble_residual(t: &Table, s: &Section) -> (ElemSet, Vec<Elem>) {
    let mut current = (s.top.clone(), s.top_gens.to_vec());
    loop {
        let next = commutator_mod(t, s, &current.1, &current.1);
        if next.0 == current.0 {
            return current;
        }
        current = next;
    }
}

pub(crate) fn is_nilpotent(t: &Table, s: &Section) -> bool {
    nilpotent_residual(t, s).0 == *s.bottom
}

pub(crate) fn is_soluble(t: &Table, s: &Section) -> bool {
    soluble_residual(t, s).0 == *s.bottom
}

/// `L/K` has nilpotent derived subgroup.
pub(crate) fn is_nilpotent_by_abelian(t: &Table, s: &Section) -> bool {
    let (derived, derived_gens) = commutator_mod(t, s, s.top_gens, s.top_gens);
    let inner = Section::new(&derived, &derived_gens, s.bottom, s.bottom_gens);
    is_nilpotent(t, &inner)
}

/// Order of `xK` in `L/K`.
pub(crate) fn order_mod(t: &Table, bottom: &ElemSet, x: Elem) -> u32 {
    let mut y = x;
    let mut k = 1;
    while !bottom.contains(y as usize) {
        y = t.mul(y, x);
        k += 1;
    }
    k
}

/// Supersolubility of `L/K` along a chief series: repeatedly pick a minimal
/// normal subgroup of the current quotient and require it to have prime order.
pub(crate) fn is_supersoluble(t: &Table, s: &Section) -> bool {
    let mut cur = s.bottom.clone();
    let mut cur_gens = s.bottom_gens.to_vec();
    let top_order = s.top.count_ones(..);
    while cur.count_ones(..) < top_order {
        let cur_order = cur.count_ones(..);
        let mut best: Option<(ElemSet, Vec<Elem>)> = None;
        for x in s.top.ones() {
            if cur.contains(x) {
                continue;
            }
            let x = x as Elem;
            if !is_prime(order_mod(t, &cur, x) as u64) {
                continue;
            }
            let mut seed = cur_gens.clone();
            seed.push(x);
            let (n, n_gens) = t.normal_closure(s.top_gens, &seed);
            let size = n.count_ones(..);
            if is_prime((size / cur_order) as u64) {
                best = Some((n, n_gens));
                break;
            }
            if best.as_ref().is_none_or(|b| b.0.count_ones(..) > size) {
                best = Some((n, n_gens));
            }
        }
        match best {
            Some((n, n_gens)) if is_prime((n.count_ones(..) / cur_order) as u64) => {
                cur = n;
                cur_gens = n_gens;
            }
            _ => return false,
        }
    }
    true
}
