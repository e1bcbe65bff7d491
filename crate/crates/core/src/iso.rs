//! Desk-scale isomorphism testing: cheap invariants first, then a
//! backtracking search for an isomorphism on a small generating set.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::group::Group;
use crate::lattice::subgroup_lattice;
use crate::perm::Permutation;

/// Invariants that agree on isomorphic groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Invariants {
    pub order: u64,
    pub element_orders: Vec<(u32, usize)>,
    pub derived_orders: Vec<u64>,
    pub center_order: u64,
    /// `(order, class size)` per conjugacy class of subgroups, sorted.
    pub subgroup_classes: Vec<(u64, usize)>,
}

pub fn invariants(g: &Group) -> Result<Invariants> {
    let whole = g.whole()?;
    let center = whole
        .elements()
        .into_iter()
        .filter(|z| g.generators().iter().all(|x| (z * x) == (x * z)))
        .count() as u64;
    let lattice = subgroup_lattice(g)?;
    let mut classes: Vec<(u64, usize)> = lattice.classes().iter().map(|c| (c.order, c.class_size)).collect();
    classes.sort_unstable();
    Ok(Invariants {
        order: g.order(),
        element_orders: g.element_order_census()?,
        derived_orders: whole.derived_series().iter().map(|s| s.order()).collect(),
        center_order: center,
        subgroup_classes: classes,
    })
}

/// A short generating list: greedily adds elements of largest order.
pub fn small_generating_set(g: &Group) -> Result<Vec<Permutation>> {
    let mut elems: Vec<Permutation> = g.elements()?.to_vec();
    elems.sort_by_key(|x| std::cmp::Reverse(x.order()));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = 1u64;
    for x in elems {
        if span == g.order() {
            break;
        }
        let mut trial = gens.clone();
        trial.push(x);
        let sub = g.subgroup(&trial)?;
        if sub.order() > span {
            span = sub.order();
            gens = trial;
        }
    }
    Ok(gens)
}

/// An isomorphism `a → b`, given as images of a generating set of `a`.
pub fn find_isomorphism(a: &Group, b: &Group) -> Result<Option<Vec<(Permutation, Permutation)>>> {
    if a.order() != b.order() || a.element_order_census()? != b.element_order_census()? {
        return Ok(None);
    }
    let gens = small_generating_set(a)?;
    let b_elems = b.elements()?;
    let candidates: Vec<Vec<&Permutation>> =
        gens.iter().map(|x| b_elems.iter().filter(|y| y.order() == x.order()).collect()).collect();
    let a_ident = Permutation::identity(a.degree());
    let b_ident = Permutation::identity(b.degree());
    let mut choice: Vec<&Permutation> = Vec::with_capacity(gens.len());

    fn extends(gens: &[Permutation], images: &[&Permutation], a_ident: &Permutation, b_ident: &Permutation, order: u64) -> bool {
        let mut phi: HashMap<Permutation, Permutation> = HashMap::new();
        phi.insert(a_ident.clone(), b_ident.clone());
        let mut queue = vec![a_ident.clone()];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k].clone();
            let fx = phi[&x].clone();
            for (g, img) in gens.iter().zip(images) {
                let y = &x * g;
                let fy = &fx * *img;
                match phi.get(&y) {
                    Some(prev) if *prev != fy => return false,
                    Some(_) => {}
                    None => {
                        phi.insert(y.clone(), fy);
                        queue.push(y);
                    }
                }
            }
            k += 1;
        }
        let mut seen: Vec<&Permutation> = phi.values().collect();
        seen.sort();
        seen.dedup();
        seen.len() as u64 == order
    }

    fn search<'a>(
        depth: usize,
        gens: &[Permutation],
        candidates: &[Vec<&'a Permutation>],
        choice: &mut Vec<&'a Permutation>,
        a_ident: &Permutation,
        b_ident: &Permutation,
        order: u64,
    ) -> bool {
        if depth == gens.len() {
            return extends(gens, choice, a_ident, b_ident, order);
        }
        for &c in &candidates[depth] {
            choice.push(c);
            if search(depth + 1, gens, candidates, choice, a_ident, b_ident, order) {
                return true;
            }
            choice.pop();
        }
        false
    }

    if search(0, &gens, &candidates, &mut choice, &a_ident, &b_ident, a.order()) {
        Ok(Some(gens.into_iter().zip(choice.into_iter().cloned()).collect()))
    } else {
        Ok(None)
    }
}

pub fn are_isomorphic(a: &Group, b: &Group) -> Result<bool> {
    if invariants(a)? != invariants(b)? {
        return Ok(false);
    }
    Ok(find_isomorphism(a, b)?.is_some())
}
