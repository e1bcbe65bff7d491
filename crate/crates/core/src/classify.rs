//! Subgroup classification relative to a formation: 𝔉-subnormality (with a
//! chain witness), 𝔉-abnormality, self-normalizing subgroups, Carter
//! subgroups, 𝔉-projectors and minimal non-𝔉 groups.
//!
//! Every predicate has a `_in` form that works inside an arbitrary subgroup
//! of the parent group, so statements like "K is 𝔉-subnormal in H" can be
//! checked without rebuilding H as a separate group.

use serde::Serialize;

use crate::error::Result;
use crate::formations::{belongs_subgroup, residual_of, section_belongs, Formation};
use crate::group::Group;
use crate::lattice::{self, index_in, subgroup_at, subgroup_class_representatives, Lattice};
use crate::subgroup::Subgroup;

/// A maximal chain `H = H₀ <· H₁ <· … <· Hₙ = G` with `Hᵢ^𝔉 ≤ Hᵢ₋₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub links: Vec<Subgroup>,
}

impl ChainWitness {
    /// Orders of the links, bottom first.
    pub fn orders(&self) -> Vec<u64> {
        self.links.iter().map(Subgroup::order).collect()
    }

    /// Re-checks maximality of every step and the residual condition.
    pub fn is_valid_for(&self, f: &Formation) -> Result<bool> {
        for pair in self.links.windows(2) {
            let (lower, upper) = (&pair[0], &pair[1]);
            let maxes = lattice::maximal_subgroups_containing(upper, lower)?;
            if !maxes.iter().any(|m| m == lower) {
                return Ok(false);
            }
            if !residual_of(f, upper).is_subgroup_of(lower) {
                return Ok(false);
            }
        }
        Ok(!self.links.is_empty())
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClassification {
    pub subgroup: Subgroup,
    pub f_subnormal: bool,
    pub witness: Option<ChainWitness>,
    pub f_abnormal: bool,
    pub self_normalizing: bool,
}

/// Flat view of a classification for reports.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRow {
    pub order: u64,
    pub generators: Vec<String>,
    pub f_subnormal: bool,
    pub chain_orders: Option<Vec<u64>>,
    pub f_abnormal: bool,
    pub self_normalizing: bool,
}

impl SubgroupClassification {
    pub fn row(&self) -> ClassificationRow {
        ClassificationRow {
            order: self.subgroup.order(),
            generators: self.subgroup.generators().iter().map(|g| g.to_string()).collect(),
            f_subnormal: self.f_subnormal,
            chain_orders: self.witness.as_ref().map(ChainWitness::orders),
            f_abnormal: self.f_abnormal,
            self_normalizing: self.self_normalizing,
        }
    }
}

/// `N_G(H) = H`.
pub fn is_self_normalizing(g: &Group, h: &Subgroup) -> Result<bool> {
    self_normalizing_in(&g.whole()?, h)
}

pub fn self_normalizing_in(ambient: &Subgroup, h: &Subgroup) -> Result<bool> {
    Ok(ambient.normalizer(h)? == *h)
}

/// 𝔉-subnormality of `h` in `g`, with a witness chain when true.
pub fn is_f_subnormal(f: &Formation, g: &Group, h: &Subgroup) -> Result<(bool, Option<ChainWitness>)> {
    let w = f_subnormal_witness_in(f, &g.whole()?, h)?;
    Ok((w.is_some(), w))
}

pub fn f_subnormal_in(f: &Formation, ambient: &Subgroup, h: &Subgroup) -> Result<bool> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice::lattice(g)?;
    Ok(descend(f, g, &l, index_in(&l, h), index_in(&l, ambient)))
}

pub fn f_subnormal_witness_in(f: &Formation, ambient: &Subgroup, h: &Subgroup) -> Result<Option<ChainWitness>> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice::lattice(g)?;
    let (hi, top) = (index_in(&l, h), index_in(&l, ambient));
    if !descend(f, g, &l, hi, top) {
        return Ok(None);
    }
    let mut links = vec![top];
    let mut cur = top;
    while cur != hi {
        let key = (f.key(), hi, cur);
        cur = g.memo().subnormal[&key].expect("chain recorded on success");
        links.push(cur);
    }
    links.reverse();
    Ok(Some(ChainWitness { links: links.into_iter().map(|i| subgroup_at(g, &l, i)).collect() }))
}

/// Is lattice subgroup `h` 𝔉-subnormal in lattice subgroup `m`? Records the
/// next link below `m` on success.
fn descend(f: &Formation, g: &Group, l: &Lattice, h: usize, m: usize) -> bool {
    if h == m {
        return true;
    }
    let key = (f.key(), h, m);
    let cached = g.memo().subnormal.get(&key).copied();
    if let Some(r) = cached {
        return r.is_some();
    }
    let res = residual_of(f, &subgroup_at(g, l, m));
    let mut next = None;
    for &k in l.maximal_in(m) {
        if l.set(h).is_subset(l.set(k)) && res.set().is_subset(l.set(k)) && descend(f, g, l, h, k) {
            next = Some(k);
            break;
        }
    }
    g.memo().subnormal.insert(key, next);
    next.is_some()
}

/// 𝔉-subnormality straight from the definition: some maximal chain from `h`
/// to `ambient` has every `Hᵢ/(Hᵢ₋₁)_{Hᵢ}` in 𝔉. Exponential; for testing.
pub fn f_subnormal_by_chains(f: &Formation, ambient: &Subgroup, h: &Subgroup, cap: usize) -> Result<bool> {
    if h == ambient {
        ambient.check_contains(h)?;
        return Ok(true);
    }
    for chain in lattice::all_maximal_chains(ambient, h, cap)? {
        let mut ok = true;
        for pair in chain.links.windows(2) {
            let core = pair[1].core(&pair[0])?;
            if !section_belongs(f, &pair[1], &core) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `L/K_L ∉ 𝔉` whenever `H ≤ K <· L ≤ G`.
pub fn is_f_abnormal(f: &Formation, g: &Group, h: &Subgroup) -> Result<bool> {
    f_abnormal_in(f, &g.whole()?, h)
}

pub fn f_abnormal_in(f: &Formation, ambient: &Subgroup, h: &Subgroup) -> Result<bool> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice::lattice(g)?;
    let (hi, top) = (index_in(&l, h), index_in(&l, ambient));
    for li in l.between(hi, top) {
        let upper = subgroup_at(g, &l, li);
        for &ki in l.maximal_in(li) {
            if !l.set(hi).is_subset(l.set(ki)) {
                continue;
            }
            let core = upper.core(&subgroup_at(g, &l, ki))?;
            if section_belongs(f, &upper, &core) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Conjugacy class representatives of nilpotent self-normalizing subgroups.
pub fn carter_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    carter_subgroups_in(&g.whole()?)
}

pub fn carter_subgroups_in(ambient: &Subgroup) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for s in subgroup_class_representatives(ambient)? {
        if s.is_nilpotent() && self_normalizing_in(ambient, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// `HN/N` is 𝔉-maximal in `G/N` for every normal `N`.
pub fn is_f_projector(f: &Formation, g: &Group, h: &Subgroup) -> Result<bool> {
    f_projector_in(f, &g.whole()?, h)
}

pub fn f_projector_in(f: &Formation, ambient: &Subgroup, h: &Subgroup) -> Result<bool> {
    ambient.check_contains(h)?;
    let g = ambient.parent();
    let l = lattice::lattice(g)?;
    let top = index_in(&l, ambient);
    for n in lattice::normal_subgroups(ambient)? {
        let hn = h.join(&n)?;
        if !section_belongs(f, &hn, &n) {
            return Ok(false);
        }
        for ti in l.between(index_in(&l, &hn), top) {
            if l.set(ti) == hn.set() {
                continue;
            }
            if section_belongs(f, &subgroup_at(g, &l, ti), &n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimal non-nilpotent group.
pub fn is_schmidt_group(g: &Group) -> Result<bool> {
    is_minimal_non_f(&Formation::nilpotent(), g)
}

/// `G ∉ 𝔉` while every maximal subgroup lies in 𝔉.
pub fn is_minimal_non_f(f: &Formation, g: &Group) -> Result<bool> {
    minimal_non_f_in(f, &g.whole()?)
}

pub fn minimal_non_f_in(f: &Formation, ambient: &Subgroup) -> Result<bool> {
    if belongs_subgroup(f, ambient) {
        return Ok(false);
    }
    let triv = ambient.parent().trivial()?;
    for m in lattice::maximal_subgroups_containing(ambient, &triv)? {
        if !belongs_subgroup(f, &m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classification of one representative per conjugacy class of subgroups.
pub fn classify_subgroups(f: &Formation, g: &Group) -> Result<Vec<SubgroupClassification>> {
    let whole = g.whole()?;
    let mut out = Vec::new();
    for s in subgroup_class_representatives(&whole)? {
        let witness = f_subnormal_witness_in(f, &whole, &s)?;
        out.push(SubgroupClassification {
            f_subnormal: witness.is_some(),
            witness,
            f_abnormal: f_abnormal_in(f, &whole, &s)?,
            self_normalizing: self_normalizing_in(&whole, &s)?,
            subgroup: s,
        });
    }
    Ok(out)
}
