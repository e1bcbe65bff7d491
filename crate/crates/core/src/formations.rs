//! Formations: group classes given by a membership predicate, together with
//! declared closure properties.
//!
//! The closure flags are metadata asserted by whoever defines the formation.
//! Saturation and superradicality cannot be decided from a predicate, so the
//! verifier only reads them to decide which statements apply.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{is_prime, prime_factors, Group};
use crate::lattice::normal_sections;
use crate::perm::Permutation;
use crate::section;
use crate::subgroup::Subgroup;
use crate::table::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormationFlags {
    pub subgroup_closed: bool,
    pub saturated: bool,
    pub superradical: bool,
    pub contains_nilpotent: bool,
}

impl FormationFlags {
    /// All four hypotheses of the main equivalence.
    pub fn meets_theorem_hypotheses(&self) -> bool {
        self.subgroup_closed && self.saturated && self.superradical && self.contains_nilpotent
    }
}

type Predicate = dyn Fn(&Group) -> bool + Send + Sync;

#[derive(Clone)]
enum Kind {
    Abelian,
    Nilpotent,
    Supersoluble,
    NilpotentByAbelian,
    Soluble,
    Product(Box<Formation>, Box<Formation>),
    Custom(Arc<Predicate>),
}

#[derive(Clone)]
pub struct Formation {
    name: Arc<str>,
    kind: Kind,
    flags: FormationFlags,
}

impl fmt::Debug for Formation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Formation").field("name", &self.name).field("flags", &self.flags).finish()
    }
}

impl Formation {
    fn builtin(name: &str, kind: Kind, flags: FormationFlags) -> Self {
        Formation { name: name.into(), kind, flags }
    }

    /// 𝔄, abelian groups.
    pub fn abelian() -> Self {
        Self::builtin(
            "A",
            Kind::Abelian,
            FormationFlags { subgroup_closed: true, saturated: false, superradical: false, contains_nilpotent: false },
        )
    }

    /// 𝔑, nilpotent groups.
    pub fn nilpotent() -> Self {
        Self::builtin(
            "N",
            Kind::Nilpotent,
            FormationFlags { subgroup_closed: true, saturated: true, superradical: true, contains_nilpotent: true },
        )
    }

    /// 𝔘, supersoluble groups.
    pub fn supersoluble() -> Self {
        Self::builtin(
            "U",
            Kind::Supersoluble,
            FormationFlags { subgroup_closed: true, saturated: true, superradical: false, contains_nilpotent: true },
        )
    }

    /// 𝔑𝔄, groups with nilpotent derived subgroup.
    pub fn nilpotent_by_abelian() -> Self {
        Self::builtin(
            "NA",
            Kind::NilpotentByAbelian,
            FormationFlags { subgroup_closed: true, saturated: true, superradical: true, contains_nilpotent: true },
        )
    }

    /// 𝔖, soluble groups.
    pub fn soluble() -> Self {
        Self::builtin(
            "S",
            Kind::Soluble,
            FormationFlags { subgroup_closed: true, saturated: true, superradical: true, contains_nilpotent: true },
        )
    }

    /// The product class `XF = {G : G^F ∈ X}`. Both factors must be
    /// subgroup-closed; the result is flagged subgroup-closed and nothing else.
    pub fn product(x: &Formation, f: &Formation) -> Result<Self> {
        if !x.flags.subgroup_closed || !f.flags.subgroup_closed {
            return Err(Error::InvalidFormation(format!(
                "product {}*{} needs subgroup-closed factors",
                x.name, f.name
            )));
        }
        Ok(Formation {
            name: format!("{}*{}", x.name, f.name).into(),
            kind: Kind::Product(Box::new(x.clone()), Box::new(f.clone())),
            flags: FormationFlags { subgroup_closed: true, saturated: false, superradical: false, contains_nilpotent: false },
        })
    }

    /// A user-defined class. The predicate must be isomorphism-invariant;
    /// the flags are taken on trust. Names identify formations in caches.
    pub fn custom<F>(name: &str, flags: FormationFlags, predicate: F) -> Self
    where
        F: Fn(&Group) -> bool + Send + Sync + 'static,
    {
        Formation { name: name.into(), kind: Kind::Custom(Arc::new(predicate)), flags }
    }

    /// Parses `A`, `N`, `U`, `NA`, `S` or a product `X*F` (right-nested:
    /// `N*N*A` is `N*(N*A)`).
    pub fn by_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if let Some((x, f)) = name.split_once('*') {
            return Self::product(&Self::by_name(x)?, &Self::by_name(f)?);
        }
        match name {
            "A" => Ok(Self::abelian()),
            "N" => Ok(Self::nilpotent()),
            "U" => Ok(Self::supersoluble()),
            "NA" => Ok(Self::nilpotent_by_abelian()),
            "S" => Ok(Self::soluble()),
            other => Err(Error::InvalidFormation(format!("unknown formation '{other}'"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flags(&self) -> FormationFlags {
        self.flags
    }

    /// Overrides the declared flags.
    pub fn with_flags(mut self, flags: FormationFlags) -> Self {
        self.flags = flags;
        self
    }

    pub(crate) fn key(&self) -> Arc<str> {
        self.name.clone()
    }
}

/// `G ∈ F`.
pub fn belongs(f: &Formation, g: &Group) -> Result<bool> {
    if let Kind::Custom(pred) = &f.kind {
        return Ok(pred(g));
    }
    Ok(belongs_subgroup(f, &g.whole()?))
}

/// `H ∈ F`, treating the subgroup as a group in its own right.
pub fn belongs_subgroup(f: &Formation, h: &Subgroup) -> bool {
    let triv = h.parent().trivial().expect("table exists for subgroups");
    section_belongs(f, h, &triv)
}

/// `L/K ∈ F` for `K` normal in `L`.
pub fn quotient_belongs(f: &Formation, l: &Subgroup, k: &Subgroup) -> Result<bool> {
    l.check_contains(k)?;
    if !l.is_normal_subgroup(k) {
        return Err(Error::NotNormal);
    }
    Ok(section_belongs(f, l, k))
}

pub(crate) fn section_belongs(f: &Formation, top: &Subgroup, bottom: &Subgroup) -> bool {
    let key = (f.key(), top.set().clone(), bottom.set().clone());
    if let Some(&v) = top.parent().memo().section_member.get(&key) {
        return v;
    }
    let t = top.table();
    let s = top.section_over(bottom);
    let result = if s.is_trivial() {
        match &f.kind {
            Kind::Custom(pred) => pred(&trivial_group()),
            _ => true,
        }
    } else {
        match &f.kind {
            Kind::Abelian => section::is_abelian(t, &s),
            Kind::Nilpotent => section::is_nilpotent(t, &s),
            Kind::Soluble => section::is_soluble(t, &s),
            Kind::NilpotentByAbelian => section::is_nilpotent_by_abelian(t, &s),
            Kind::Supersoluble => section::is_supersoluble(t, &s),
            Kind::Product(x, inner) => {
                let r = residual_section(inner, top, bottom);
                section_belongs(x, &r, bottom)
            }
            Kind::Custom(pred) => {
                let q = top.quotient(bottom).expect("section bottom is normal");
                pred(q.group())
            }
        }
    };
    top.parent().memo().section_member.insert(key, result);
    result
}

fn trivial_group() -> Group {
    Group::with_config(1, &[], Config::default()).expect("trivial group")
}

/// `G^F = ∩{N ⊲ G : G/N ∈ F}`.
pub fn residual(f: &Formation, g: &Group) -> Result<Subgroup> {
    Ok(residual_of(f, &g.whole()?))
}

/// Residual of a subgroup regarded as a group.
pub fn residual_of(f: &Formation, h: &Subgroup) -> Subgroup {
    let triv = h.parent().trivial().expect("table exists for subgroups");
    residual_section(f, h, &triv)
}

/// The smallest normal subgroup `R` of `top` containing `bottom` with
/// `top/R ∈ F`, found by scanning all such normal subgroups. Panics if the
/// successful candidates are not closed under intersection, which means the
/// predicate is not a formation.
pub(crate) fn residual_section(f: &Formation, top: &Subgroup, bottom: &Subgroup) -> Subgroup {
    let key = (f.key(), top.set().clone(), bottom.set().clone());
    if let Some(r) = top.parent().memo().residual.get(&key).cloned() {
        return Subgroup::from_set(top.parent().clone(), r);
    }
    let parent = top.parent().clone();
    let candidates = normal_sections(top, bottom);
    let mut smallest: Option<ElemSet> = None;
    let mut meet: Option<ElemSet> = None;
    for n in candidates.iter() {
        let ns = Subgroup::from_set(parent.clone(), n.clone());
        if !section_belongs(f, top, &ns) {
            continue;
        }
        if smallest.as_ref().is_none_or(|s| s.count_ones(..) > n.count_ones(..)) {
            smallest = Some(n.clone());
        }
        match meet.as_mut() {
            Some(m) => m.intersect_with(n),
            None => meet = Some(n.clone()),
        }
    }
    let smallest = smallest.expect("the whole group always has quotient in a formation");
    assert!(
        meet.as_ref() == Some(&smallest),
        "formation '{}' is not closed under subdirect products on this section",
        f.name
    );
    top.parent().memo().residual.insert(key, smallest.clone());
    Subgroup::from_set(parent, smallest)
}

/// Primes `p ≤ bound` whose cyclic group of order `p` belongs to `F`.
pub fn formation_pi(f: &Formation, bound: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for p in 2..=bound {
        if !is_prime(p) {
            continue;
        }
        let cycle: Vec<u32> = (0..p as u32).collect();
        let gen = Permutation::from_cycles(p as usize, &[&cycle]).expect("valid cycle");
        let config = Config { max_lattice_order: u64::MAX, ..Config::default().internal() };
        let c = Group::with_config(p as usize, &[gen], config).expect("cyclic group");
        if belongs(f, &c).unwrap_or(false) {
            out.insert(p);
        }
    }
    out
}

/// `π(G)`, the primes dividing the order.
pub fn pi_of_group(g: &Group) -> BTreeSet<u64> {
    prime_factors(g.order()).into_iter().map(|(p, _)| p).collect()
}
