//! Subgroup lattice: every subgroup of a group, grouped into conjugacy
//! classes, plus the derived queries (maximal, normal, primary cyclic,
//! Frattini, Hall, maximal chains).
//!
//! Two enumeration routes are available. Cyclic extension grows each known
//! subgroup `U` by an element `x ∈ N(U)` of prime order modulo `U`; it finds
//! every subgroup of a soluble group, since each non-trivial soluble subgroup
//! has a normal subgroup of prime index. Join closure repeatedly joins known
//! subgroups with cyclic subgroups of prime-power order; it is complete for
//! every group and serves as the reference for small orders.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::classify::ChainWitness;
use crate::error::{Error, Result};
use crate::group::{is_prime, is_prime_power, p_part, Group};
use crate::section::order_mod;
use crate::subgroup::Subgroup;
use crate::table::{canonical_cmp, Elem, ElemSet, Table};

/// Enumeration route for [`subgroup_lattice_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeMethod {
    /// Join closure below order 64 and for insoluble groups, cyclic extension otherwise.
    Auto,
    CyclicExtension,
    JoinClosure,
}

const SMALL_ORDER: u64 = 64;

pub(crate) struct Lattice {
    subgroups: Vec<ElemSet>,
    gens: Vec<Vec<Elem>>,
    orders: Vec<u64>,
    lookup: HashMap<ElemSet, usize>,
    by_order: BTreeMap<u64, Vec<usize>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    maximal: Vec<OnceLock<Vec<usize>>>,
}

impl Lattice {
    fn build(t: &Table, method: LatticeMethod) -> Lattice {
        let raw = match method {
            LatticeMethod::CyclicExtension => cyclic_extension(t),
            LatticeMethod::JoinClosure => join_closure(t),
            LatticeMethod::Auto => {
                let whole = t.full_set();
                let gens = t.generators().to_vec();
                let triv = t.trivial_set();
                let soluble = crate::section::is_soluble(
                    t,
                    &crate::section::Section::new(&whole, &gens, &triv, &[]),
                );
                if (t.len() as u64) < SMALL_ORDER || !soluble {
                    join_closure(t)
                } else {
                    cyclic_extension(t)
                }
            }
        };
        Self::from_raw(t, raw)
    }

    fn from_raw(t: &Table, mut raw: Vec<(ElemSet, Vec<Elem>)>) -> Lattice {
        raw.sort_by(|a, b| {
            a.0.count_ones(..).cmp(&b.0.count_ones(..)).then_with(|| canonical_cmp(&a.0, &b.0))
        });
        let n = raw.len();
        let mut subgroups = Vec::with_capacity(n);
        let mut gens = Vec::with_capacity(n);
        for (s, g) in raw {
            subgroups.push(s);
            gens.push(g);
        }
        let orders: Vec<u64> = subgroups.iter().map(|s| s.count_ones(..) as u64).collect();
        let lookup: HashMap<ElemSet, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut by_order: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (i, &o) in orders.iter().enumerate() {
            by_order.entry(o).or_default().push(i);
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![i];
            class_of[i] = c;
            let mut k = 0;
            while k < members.len() {
                let s = &subgroups[members[k]];
                for &g in t.generators() {
                    let j = lookup[&t.conjugate_set(s, g)];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        let maximal = (0..n).map(|_| OnceLock::new()).collect();
        Lattice { subgroups, gens, orders, lookup, by_order, class_of, classes, maximal }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn set(&self, i: usize) -> &ElemSet {
        &self.subgroups[i]
    }

    pub fn gens(&self, i: usize) -> &[Elem] {
        &self.gens[i]
    }

    pub fn order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Indices of subgroups `S` with `lower ≤ S ≤ upper`, in lattice order.
    pub fn between(&self, lower: usize, upper: usize) -> Vec<usize> {
        let (lo, hi) = (self.orders[lower], self.orders[upper]);
        let mut out = Vec::new();
        for (&o, members) in self.by_order.range(lo..=hi) {
            if o % lo != 0 || hi % o != 0 {
                continue;
            }
            for &i in members {
                if self.subgroups[lower].is_subset(&self.subgroups[i])
                    && self.subgroups[i].is_subset(&self.subgroups[upper])
                {
                    out.push(i);
                }
            }
        }
        out
    }

    /// Maximal subgroups of subgroup `i`.
    pub fn maximal_in(&self, i: usize) -> &[usize] {
        self.maximal[i].get_or_init(|| {
            let triv = 0;
            let mut proper: Vec<usize> = self.between(triv, i).into_iter().filter(|&j| j != i).collect();
            proper.sort_by_key(|&j| std::cmp::Reverse(self.orders[j]));
            let mut maximal: Vec<usize> = Vec::new();
            for j in proper {
                if !maximal.iter().any(|&m| self.subgroups[j].is_subset(&self.subgroups[m])) {
                    maximal.push(j);
                }
            }
            maximal.sort_unstable();
            maximal
        })
    }
}

fn cyclic_extension(t: &Table) -> Vec<(ElemSet, Vec<Elem>)> {
    let mut list: Vec<(ElemSet, Vec<Elem>)> = vec![(t.trivial_set(), Vec::new())];
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(t.trivial_set());
    let mut i = 0;
    while i < list.len() {
        let (u, ugens) = list[i].clone();
        let mut covered = u.clone();
        for x in 0..t.len() as Elem {
            if covered.contains(x as usize) {
                continue;
            }
            if !ugens.iter().all(|&g| u.contains(t.conj(g, x) as usize)) {
                continue;
            }
            let p = order_mod(t, &u, x);
            if !is_prime(p as u64) {
                continue;
            }
            let mut v = u.clone();
            let mut power = x;
            for _ in 1..p {
                for h in u.ones() {
                    v.insert(t.mul(h as Elem, power) as usize);
                }
                power = t.mul(power, x);
            }
            covered.union_with(&v);
            if seen.insert(v.clone()) {
                let mut vgens = ugens.clone();
                vgens.push(x);
                list.push((v, vgens));
            }
        }
        i += 1;
    }
    list
}

/// Cyclic subgroups of prime-power order (including none of order 1), each
/// with a generator, deduplicated.
fn zuppos(t: &Table) -> Vec<(ElemSet, Elem)> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for x in 1..t.len() as Elem {
        if !is_prime_power(t.order_of(x) as u64) {
            continue;
        }
        let c = t.closure(&[x]);
        if seen.insert(c.clone()) {
            out.push((c, x));
        }
    }
    out
}

fn join_closure(t: &Table) -> Vec<(ElemSet, Vec<Elem>)> {
    let zs = zuppos(t);
    let mut list: Vec<(ElemSet, Vec<Elem>)> = vec![(t.trivial_set(), Vec::new())];
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(t.trivial_set());
    let mut i = 0;
    while i < list.len() {
        let (u, ugens) = list[i].clone();
        for (_, z) in &zs {
            if u.contains(*z as usize) {
                continue;
            }
            let mut vgens = ugens.clone();
            vgens.push(*z);
            let v = t.closure(&vgens);
            if seen.insert(v.clone()) {
                list.push((v, vgens));
            }
        }
        i += 1;
    }
    list
}

fn global_cache() -> &'static Mutex<HashMap<String, Arc<Lattice>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Lattice>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The cached lattice of `g`, shared by all groups with the same fingerprint.
pub(crate) fn lattice(g: &Group) -> Result<Arc<Lattice>> {
    g.lattice_cell()
        .get_or_init(|| {
            let t = g.table()?;
            let key = g.fingerprint();
            if let Some(l) = global_cache().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
                return Ok(l.clone());
            }
            let l = Arc::new(Lattice::build(t, LatticeMethod::Auto));
            global_cache().lock().unwrap_or_else(|e| e.into_inner()).insert(key, l.clone());
            Ok(l)
        })
        .clone()
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct ConjugacyClassOfSubgroups {
    pub representative: Subgroup,
    pub class_size: usize,
    pub order: u64,
}

/// All subgroups of a group up to conjugacy, with containment between classes.
#[derive(Clone)]
pub struct LatticeIndex {
    group: Group,
    inner: Arc<Lattice>,
    classes: Vec<ConjugacyClassOfSubgroups>,
}

impl LatticeIndex {
    fn new(group: Group, inner: Arc<Lattice>) -> Self {
        let classes = inner
            .classes()
            .iter()
            .map(|members| {
                let rep = members[0];
                ConjugacyClassOfSubgroups {
                    representative: subgroup_at(&group, &inner, rep),
                    class_size: members.len(),
                    order: inner.order(rep),
                }
            })
            .collect();
        LatticeIndex { group, inner, classes }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClassOfSubgroups] {
        &self.classes
    }

    /// Total number of subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.inner.len()
    }

    /// Every subgroup, ordered by (order, canonical encoding).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        (0..self.inner.len()).map(|i| subgroup_at(&self.group, &self.inner, i)).collect()
    }

    pub fn members(&self, class: usize) -> Vec<Subgroup> {
        self.inner.classes()[class].iter().map(|&i| subgroup_at(&self.group, &self.inner, i)).collect()
    }

    /// Index of the class containing `h`.
    pub fn class_of(&self, h: &Subgroup) -> Result<usize> {
        if !h.parent().same_as(&self.group) {
            return Err(Error::ForeignSubgroup);
        }
        let i = self.inner.index_of(h.set()).ok_or(Error::NotASubgroup)?;
        Ok(self.inner.class_of(i))
    }

    /// `containment()[i][j]` is true when the representative of class `i`
    /// lies in some member of class `j`.
    pub fn containment(&self) -> Vec<Vec<bool>> {
        let l = &self.inner;
        let k = l.classes().len();
        let mut rel = vec![vec![false; k]; k];
        for (i, ci) in l.classes().iter().enumerate() {
            let rep = ci[0];
            for (j, cj) in l.classes().iter().enumerate() {
                if !l.order(cj[0]).is_multiple_of(l.order(rep)) {
                    continue;
                }
                rel[i][j] = cj.iter().any(|&m| l.set(rep).is_subset(l.set(m)));
            }
        }
        rel
    }

    /// `maximality()[i][j]` is true when the representative of class `i` is
    /// maximal in some member of class `j`.
    pub fn maximality(&self) -> Vec<Vec<bool>> {
        let l = &self.inner;
        let k = l.classes().len();
        let mut rel = vec![vec![false; k]; k];
        for (j, cj) in l.classes().iter().enumerate() {
            for &m in cj {
                for &s in l.maximal_in(m) {
                    if l.classes()[l.class_of(s)][0] == s {
                        rel[l.class_of(s)][j] = true;
                    }
                }
            }
        }
        rel
    }
}

pub(crate) fn subgroup_at(group: &Group, l: &Lattice, i: usize) -> Subgroup {
    Subgroup::from_parts(group.clone(), l.set(i).clone(), l.gens(i).to_vec())
}

/// Lattice index of a subgroup of `g`.
pub(crate) fn index_in(l: &Lattice, h: &Subgroup) -> usize {
    l.index_of(h.set()).expect("every subgroup appears in the lattice")
}

fn check_cap(g: &Group) -> Result<()> {
    let cap = g.config().max_lattice_order;
    if g.order() > cap {
        return Err(Error::Resource { what: "lattice order", value: g.order(), cap });
    }
    Ok(())
}

/// The subgroup lattice of `g` up to conjugacy (cached).
pub fn subgroup_lattice(g: &Group) -> Result<LatticeIndex> {
    check_cap(g)?;
    Ok(LatticeIndex::new(g.clone(), lattice(g)?))
}

/// The lattice computed afresh by the requested route, bypassing caches.
pub fn subgroup_lattice_with(g: &Group, method: LatticeMethod) -> Result<LatticeIndex> {
    check_cap(g)?;
    let inner = Arc::new(Lattice::build(g.table()?, method));
    Ok(LatticeIndex::new(g.clone(), inner))
}

/// All subgroups of `ambient`.
pub fn subgroups_of(ambient: &Subgroup) -> Result<Vec<Subgroup>> {
    let l = lattice(ambient.parent())?;
    let top = index_in(&l, ambient);
    Ok(l.between(0, top).into_iter().map(|i| subgroup_at(ambient.parent(), &l, i)).collect())
}

/// Conjugacy classes of subgroups of `ambient` under conjugation by `ambient`.
pub fn subgroup_classes_of(ambient: &Subgroup) -> Result<Vec<Vec<Subgroup>>> {
    let g = ambient.parent();
    let l = lattice(g)?;
    let top = index_in(&l, ambient);
    if ambient.is_whole() {
        return Ok(l
            .classes()
            .iter()
            .map(|c| c.iter().map(|&i| subgroup_at(g, &l, i)).collect())
            .collect());
    }
    let t = g.table()?;
    let inside = l.between(0, top);
    let mut assigned: HashSet<usize> = HashSet::new();
    let mut out = Vec::new();
    for &i in &inside {
        if assigned.contains(&i) {
            continue;
        }
        let mut members = vec![i];
        assigned.insert(i);
        let mut k = 0;
        while k < members.len() {
            for &a in ambient.gen_indices() {
                let j = l.index_of(&t.conjugate_set(l.set(members[k]), a)).unwrap();
                if assigned.insert(j) {
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|m| subgroup_at(g, &l, m)).collect());
    }
    Ok(out)
}

/// Representatives of the conjugacy classes of subgroups of `ambient`.
pub fn subgroup_class_representatives(ambient: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(subgroup_classes_of(ambient)?.into_iter().map(|mut c| c.swap_remove(0)).collect())
}

/// Maximal subgroups of `g`, one per conjugacy class.
pub fn maximal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let l = lattice(g)?;
    let top = l.len() - 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &m in l.maximal_in(top) {
        if seen.insert(l.class_of(m)) {
            out.push(subgroup_at(g, &l, l.classes()[l.class_of(m)][0]));
        }
    }
    Ok(out)
}

/// Maximal subgroups of `ambient` containing `h`, as actual subgroups.
pub fn maximal_subgroups_containing(ambient: &Subgroup, h: &Subgroup) -> Result<Vec<Subgroup>> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice(g)?;
    let top = index_in(&l, ambient);
    Ok(l.maximal_in(top)
        .iter()
        .filter(|&&m| h.set().is_subset(l.set(m)))
        .map(|&m| subgroup_at(g, &l, m))
        .collect())
}

/// Normal subgroups of `ambient`, including the trivial group and `ambient`.
pub fn normal_subgroups(ambient: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(subgroups_of(ambient)?.into_iter().filter(|s| ambient.is_normal_subgroup(s)).collect())
}

/// Normal subgroups of `ambient` containing `bottom` (which must be normal),
/// found without the lattice by joining normal closures of single elements.
pub fn normal_subgroups_above(ambient: &Subgroup, bottom: &Subgroup) -> Result<Vec<Subgroup>> {
    ambient.check_contains(bottom)?;
    if !ambient.is_normal_subgroup(bottom) {
        return Err(Error::NotNormal);
    }
    let sets = normal_sections(ambient, bottom);
    Ok(sets.iter().map(|s| Subgroup::from_set(ambient.parent().clone(), s.clone())).collect())
}

/// Element sets of the normal subgroups of `top` containing `bottom`,
/// sorted by (order, canonical encoding). Memoized per parent group.
pub(crate) fn normal_sections(top: &Subgroup, bottom: &Subgroup) -> Arc<Vec<ElemSet>> {
    let key = (top.set().clone(), bottom.set().clone());
    let cached = top.parent().memo().normal_sections.get(&key).cloned();
    if let Some(v) = cached {
        return v;
    }
    let t = top.table();
    if let Some(Ok(l)) = top.parent().lattice_cell().get() {
        if let (Some(ti), Some(bi)) = (l.index_of(top.set()), l.index_of(bottom.set())) {
            let sets: Vec<ElemSet> = l
                .between(bi, ti)
                .into_iter()
                .filter(|&i| t.normalized_by(l.set(i), l.gens(i), top.gen_indices()))
                .map(|i| l.set(i).clone())
                .collect();
            let sets = Arc::new(sets);
            top.parent().memo().normal_sections.insert(key, sets.clone());
            return sets;
        }
    }
    let mut list: Vec<(ElemSet, Vec<Elem>)> = vec![(bottom.set().clone(), bottom.gen_indices().to_vec())];
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(bottom.set().clone());
    let mut i = 0;
    while i < list.len() {
        let (n, ngens) = list[i].clone();
        for x in top.set().ones() {
            if n.contains(x) {
                continue;
            }
            let mut seed = ngens.clone();
            seed.push(x as Elem);
            let (m, mgens) = t.normal_closure(top.gen_indices(), &seed);
            if seen.insert(m.clone()) {
                list.push((m, mgens));
            }
        }
        i += 1;
    }
    let mut sets: Vec<ElemSet> = list.into_iter().map(|(s, _)| s).collect();
    sets.sort_by(|a, b| a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| canonical_cmp(a, b)));
    let sets = Arc::new(sets);
    top.parent().memo().normal_sections.insert(key, sets.clone());
    sets
}

/// A Sylow `p`-subgroup of `g`.
pub fn sylow_subgroup(g: &Subgroup, p: u64) -> Result<Subgroup> {
    g.sylow_subgroup(p)
}

/// A subgroup of order `|G|/p^a` (`p^a` the full `p`-part), if one exists;
/// the first in lattice order.
pub fn hall_pprime_subgroup(ambient: &Subgroup, p: u64) -> Result<Option<Subgroup>> {
    let target = ambient.order() / p_part(ambient.order(), p);
    Ok(subgroups_of(ambient)?.into_iter().find(|s| s.order() == target))
}

/// Class representatives of the non-trivial cyclic subgroups of prime-power
/// order, under conjugation by `ambient`.
pub fn primary_cyclic_subgroups(ambient: &Subgroup) -> Result<Vec<Subgroup>> {
    let t = ambient.table();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    let mut candidates: Vec<Elem> = ambient
        .set()
        .ones()
        .map(|x| x as Elem)
        .filter(|&x| x != 0 && is_prime_power(t.order_of(x) as u64))
        .collect();
    candidates.sort_by_key(|&x| (t.order_of(x), x));
    for x in candidates {
        let c = t.closure(&[x]);
        if seen.contains(&c) {
            continue;
        }
        let h = Subgroup::from_parts(ambient.parent().clone(), c, vec![x]);
        for conj in ambient.conjugates_of_set(h.set()) {
            seen.insert(conj);
        }
        out.push(h);
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| canonical_cmp(a.set(), b.set())));
    Ok(out)
}

/// Intersection of all maximal subgroups of `ambient`.
pub fn frattini_subgroup(ambient: &Subgroup) -> Result<Subgroup> {
    let g = ambient.parent();
    let l = lattice(g)?;
    let top = index_in(&l, ambient);
    let mut set = l.set(top).clone();
    for &m in l.maximal_in(top) {
        set.intersect_with(l.set(m));
    }
    Ok(Subgroup::from_set(g.clone(), set))
}

/// Every maximal chain `h = H₀ <· H₁ <· … <· Hₙ = ambient`.
pub fn all_maximal_chains(ambient: &Subgroup, h: &Subgroup, cap: usize) -> Result<Vec<ChainWitness>> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice(g)?;
    let top = index_in(&l, ambient);
    let bottom = index_in(&l, h);
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![top];
    fn walk(
        l: &Lattice,
        bottom: usize,
        stack: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let cur = *stack.last().unwrap();
        if cur == bottom {
            if chains.len() >= cap {
                return Err(Error::Resource { what: "maximal chain count", value: cap as u64 + 1, cap: cap as u64 });
            }
            chains.push(stack.iter().rev().copied().collect());
            return Ok(());
        }
        for &m in l.maximal_in(cur) {
            if l.set(bottom).is_subset(l.set(m)) {
                stack.push(m);
                walk(l, bottom, stack, chains, cap)?;
                stack.pop();
            }
        }
        Ok(())
    }
    walk(&l, bottom, &mut stack, &mut chains, cap)?;
    Ok(chains
        .into_iter()
        .map(|c| ChainWitness { links: c.into_iter().map(|i| subgroup_at(g, &l, i)).collect() })
        .collect())
}
