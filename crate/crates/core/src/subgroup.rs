//! Subgroups of a parent group, stored as element sets in the parent's table.
//!
//! Every subgroup operation that takes an "ambient" subgroup uses `self` as
//! the ambient: `g.normalizer(&h)` is `N_G(H)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{p_part, prime_factors, Group};
use crate::perm::Permutation;
use crate::section::{self, Section};
use crate::table::{Elem, ElemSet, Table};

#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    set: Arc<ElemSet>,
    gens: Arc<Vec<Elem>>,
    order: u64,
}

impl Subgroup {
    pub(crate) fn from_parts(parent: Group, set: ElemSet, gens: Vec<Elem>) -> Subgroup {
        let order = set.count_ones(..) as u64;
        Subgroup { parent, set: Arc::new(set), gens: Arc::new(gens), order }
    }

    pub(crate) fn from_gens(parent: Group, gens: Vec<Elem>) -> Subgroup {
        let set = parent.table().expect("table exists for subgroups").closure(&gens);
        Self::from_parts(parent, set, gens)
    }

    pub(crate) fn from_set(parent: Group, set: ElemSet) -> Subgroup {
        let gens = parent.table().expect("table exists for subgroups").generating_set(&set);
        Self::from_parts(parent, set, gens)
    }

    pub(crate) fn table(&self) -> &Table {
        self.parent.table().expect("table exists for subgroups")
    }

    pub(crate) fn set(&self) -> &ElemSet {
        &self.set
    }

    pub(crate) fn gen_indices(&self) -> &[Elem] {
        &self.gens
    }

    pub(crate) fn section_over<'a>(&'a self, bottom: &'a Subgroup) -> Section<'a> {
        Section::new(&self.set, &self.gens, &bottom.set, &bottom.gens)
    }

    pub(crate) fn as_section<'a>(&'a self, trivial: &'a ElemSet) -> Section<'a> {
        Section::new(&self.set, &self.gens, trivial, &[])
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> Vec<Permutation> {
        let t = self.table();
        self.gens.iter().map(|&g| t.element(g).clone()).collect()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let t = self.table();
        self.set.ones().map(|e| t.element(e as Elem).clone()).collect()
    }

    /// Sorted parent-table indices of the elements; the canonical encoding
    /// used for deterministic ordering.
    pub fn element_indices(&self) -> Vec<u32> {
        self.set.ones().map(|e| e as u32).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.table().index_of(g).is_some_and(|e| self.set.contains(e as usize))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    pub(crate) fn check_same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent.same_as(&other.parent) {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }

    /// `other ≤ self`.
    pub(crate) fn check_contains(&self, other: &Subgroup) -> Result<()> {
        self.check_same_parent(other)?;
        if other.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    /// True if every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.gens.iter().all(|&g| other.set.contains(g as usize))
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && self.order < other.order
    }

    /// True if `h` is normal in `self`.
    pub fn is_normal_subgroup(&self, h: &Subgroup) -> bool {
        h.is_subgroup_of(self) && self.table().normalized_by(&h.set, &h.gens, &self.gens)
    }

    /// True if `self` is normal in `ambient`.
    pub fn is_normal_in(&self, ambient: &Subgroup) -> bool {
        ambient.is_normal_subgroup(self)
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let mut set = (*self.set).clone();
        set.intersect_with(&other.set);
        Ok(Subgroup::from_set(self.parent.clone(), set))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let mut gens = (*self.gens).clone();
        gens.extend(other.gens.iter().copied());
        Ok(Subgroup::from_gens(self.parent.clone(), gens))
    }

    /// `N_self(h)`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_contains(h)?;
        let t = self.table();
        let mut set = t.empty_set();
        for g in self.set.ones() {
            let g = g as Elem;
            if h.gens.iter().all(|&x| h.set.contains(t.conj(x, g) as usize)) {
                set.insert(g as usize);
            }
        }
        Ok(Subgroup::from_set(self.parent.clone(), set))
    }

    /// Largest normal subgroup of `self` contained in `h`: the intersection
    /// of all `self`-conjugates of `h`.
    pub fn core(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_contains(h)?;
        let mut core = (*h.set).clone();
        for conj in self.conjugates_of_set(&h.set) {
            core.intersect_with(&conj);
        }
        Ok(Subgroup::from_set(self.parent.clone(), core))
    }

    /// The orbit of an element set under conjugation by `self`.
    pub(crate) fn conjugates_of_set(&self, set: &ElemSet) -> Vec<ElemSet> {
        let t = self.table();
        let mut orbit = vec![set.clone()];
        let mut seen: std::collections::HashSet<ElemSet> = orbit.iter().cloned().collect();
        let mut i = 0;
        while i < orbit.len() {
            for &g in self.gens.iter() {
                let c = t.conjugate_set(&orbit[i], g);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit
    }

    /// All conjugates of `h` under `self`.
    pub fn conjugates(&self, h: &Subgroup) -> Result<Vec<Subgroup>> {
        self.check_contains(h)?;
        let mut orbit = vec![h.clone()];
        let mut seen: std::collections::HashSet<ElemSet> = std::collections::HashSet::new();
        seen.insert((*h.set).clone());
        let mut i = 0;
        while i < orbit.len() {
            for &g in self.gens.iter() {
                let c = orbit[i].conjugate_by_elem(g);
                if seen.insert((*c.set).clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        Ok(orbit)
    }

    /// `self^g = g⁻¹ self g`; `g` must lie in the parent group.
    pub fn conjugate(&self, g: &Permutation) -> Result<Subgroup> {
        if g.degree() != self.parent.degree() {
            return Err(Error::DegreeMismatch { expected: self.parent.degree(), found: g.degree() });
        }
        let e = self.table().index_of(g).ok_or(Error::NotMember)?;
        Ok(self.conjugate_by_elem(e))
    }

    pub(crate) fn conjugate_by_elem(&self, g: Elem) -> Subgroup {
        let t = self.table();
        let set = t.conjugate_set(&self.set, g);
        let gens = self.gens.iter().map(|&x| t.conj(x, g)).collect();
        Subgroup::from_parts(self.parent.clone(), set, gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let t = self.table();
        let triv = t.trivial_set();
        let (set, gens) = section::commutator_mod(t, &self.as_section(&triv), &self.gens, &self.gens);
        Subgroup::from_parts(self.parent.clone(), set, gens)
    }

    /// `self ≥ self′ ≥ self″ ≥ …`, ending at the first term equal to its
    /// predecessor or at the trivial group.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.clone()];
        if self.is_trivial() {
            return series;
        }
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup();
            let done = next.order == last.order || next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let t = self.table();
        let triv = t.trivial_set();
        let sec = self.as_section(&triv);
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let (set, gens) = section::commutator_mod(t, &sec, &last.gens, &self.gens);
            if set == *last.set {
                break;
            }
            series.push(Subgroup::from_parts(self.parent.clone(), set, gens));
        }
        series
    }

    pub fn is_abelian(&self) -> bool {
        let t = self.table();
        let triv = t.trivial_set();
        section::is_abelian(t, &self.as_section(&triv))
    }

    pub fn is_nilpotent(&self) -> bool {
        let t = self.table();
        let triv = t.trivial_set();
        section::is_nilpotent(t, &self.as_section(&triv))
    }

    pub fn is_soluble(&self) -> bool {
        let t = self.table();
        let triv = t.trivial_set();
        section::is_soluble(t, &self.as_section(&triv))
    }

    pub fn is_cyclic(&self) -> bool {
        let t = self.table();
        self.set.ones().any(|e| t.order_of(e as Elem) as u64 == self.order)
    }

    pub fn is_elementary_abelian(&self) -> bool {
        if self.is_trivial() {
            return true;
        }
        let f = prime_factors(self.order);
        if f.len() != 1 || !self.is_abelian() {
            return false;
        }
        let p = f[0].0 as u32;
        let t = self.table();
        self.set.ones().all(|e| e == 0 || t.order_of(e as Elem) == p)
    }

    /// Prime divisors of the order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_factors(self.order).into_iter().map(|(p, _)| p).collect()
    }

    /// A Sylow `p`-subgroup of `self`, grown one factor `p` at a time inside
    /// successive normalizers.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if p < 2 || !self.order.is_multiple_of(p) {
            return Err(Error::PrimeNotDividing { prime: p, order: self.order });
        }
        let t = self.table();
        let target = p_part(self.order, p) as usize;
        let mut set = t.trivial_set();
        let mut gens: Vec<Elem> = Vec::new();
        while set.count_ones(..) < target {
            let x = self
                .set
                .ones()
                .map(|g| g as Elem)
                .find(|&g| {
                    !set.contains(g as usize)
                        && set.contains(t.pow(g, p as u32) as usize)
                        && gens.iter().all(|&h| set.contains(t.conj(h, g) as usize))
                })
                .expect("a p-element normalizing a non-Sylow p-subgroup exists");
            let mut next = set.clone();
            let mut power = x;
            for _ in 1..p {
                for h in set.ones() {
                    next.insert(t.mul(h as Elem, power) as usize);
                }
                power = t.mul(power, x);
            }
            set = next;
            gens.push(x);
        }
        Ok(Subgroup::from_parts(self.parent.clone(), set, gens))
    }

    /// `O_p(self)`: the intersection of all Sylow `p`-subgroups.
    pub fn p_core(&self, p: u64) -> Subgroup {
        match self.sylow_subgroup(p) {
            Ok(s) => self.core(&s).expect("Sylow subgroup lies in self"),
            Err(_) => Subgroup::from_parts(self.parent.clone(), self.table().trivial_set(), Vec::new()),
        }
    }

    /// Largest normal nilpotent subgroup, as the product of the `p`-cores.
    pub fn fitting_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for p in self.prime_divisors() {
            gens.extend(self.p_core(p).gens.iter().copied());
        }
        Subgroup::from_gens(self.parent.clone(), gens)
    }

    /// `self / n` as a fresh permutation group on the right cosets of `n`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        self.check_contains(n)?;
        if !self.is_normal_subgroup(n) {
            return Err(Error::NotNormal);
        }
        Quotient::build(self, n)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "Subgroup(order {}, <{}>)", self.order, gens.join(", "))
    }
}

/// A quotient `L/K` with its projection from `L`.
#[derive(Clone)]
pub struct Quotient {
    source: Subgroup,
    kernel: Subgroup,
    group: Group,
    projection: Vec<Elem>,
}

impl Quotient {
    fn build(source: &Subgroup, kernel: &Subgroup) -> Result<Quotient> {
        let t = source.table();
        let n = t.len();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<Elem> = Vec::new();
        for x in source.set.ones() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x as Elem);
            for k in kernel.set.ones() {
                coset_of[t.mul(k as Elem, x as Elem) as usize] = c;
            }
        }
        let degree = reps.len();
        let action = |g: Elem| -> Permutation {
            Permutation::from_images_unchecked(
                reps.iter().map(|&r| coset_of[t.mul(r, g) as usize]).collect(),
            )
        };
        let gens: Vec<Permutation> = source.gens.iter().map(|&g| action(g)).collect();
        let config = source.parent().config().internal();
        let group = Group::with_config(degree, &gens, config)?;
        let qt = group.table()?;
        let mut projection = vec![u32::MAX; n];
        for x in source.set.ones() {
            projection[x] = qt.index_of(&action(x as Elem)).expect("image lies in the quotient");
        }
        Ok(Quotient { source: source.clone(), kernel: kernel.clone(), group, projection })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, h: &Subgroup) -> Result<Subgroup> {
        self.source.check_contains(h)?;
        let gens = h.gens.iter().map(|&g| self.projection[g as usize]).collect();
        Ok(Subgroup::from_gens(self.group.clone(), gens))
    }

    /// Full preimage in the source of a subgroup of the quotient.
    pub fn preimage(&self, h: &Subgroup) -> Result<Subgroup> {
        if !h.parent().same_as(&self.group) {
            return Err(Error::ForeignSubgroup);
        }
        let t = self.source.table();
        let mut set = t.empty_set();
        for x in self.source.set.ones() {
            if h.set.contains(self.projection[x] as usize) {
                set.insert(x);
            }
        }
        let mut gens = (*self.kernel.gens).clone();
        for &g in h.gens.iter() {
            let lift = self.source.set.ones().find(|&x| self.projection[x] == g).unwrap();
            gens.push(lift as Elem);
        }
        Ok(Subgroup::from_parts(self.source.parent().clone(), set, gens))
    }

    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        let t = self.source.table();
        let e = t.index_of(g).filter(|&e| self.source.set.contains(e as usize)).ok_or(Error::NotMember)?;
        Ok(self.group.table()?.element(self.projection[e as usize]).clone())
    }
}
