//! Finite permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bsgs::Bsgs;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::perm::Permutation;
use crate::subgroup::Subgroup;
use crate::table::{ElemSet, Table};

/// Memo tables shared by every subgroup of one group. Keys use formation
/// names; two formations with the same name are assumed to be the same class.
#[derive(Default)]
pub(crate) struct Memo {
    pub section_member: HashMap<(Arc<str>, ElemSet, ElemSet), bool>,
    pub residual: HashMap<(Arc<str>, ElemSet, ElemSet), ElemSet>,
    pub subnormal: HashMap<(Arc<str>, usize, usize), Option<usize>>,
    pub normal_sections: HashMap<(ElemSet, ElemSet), Arc<Vec<ElemSet>>>,
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    config: Config,
    chain: Bsgs,
    order: u64,
    table: OnceLock<Result<Table>>,
    lattice: OnceLock<Result<Arc<Lattice>>>,
    memo: Mutex<Memo>,
}

/// A finite permutation group with exact order and membership test.
///
/// Cloning is cheap: clones share the membership structure, the element
/// table and every cache.
#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

impl Group {
    /// Group generated by `gens` acting on `degree` points, with default caps.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Group> {
        Self::with_config(degree, gens, Config::default())
    }

    pub fn with_config(degree: usize, gens: &[Permutation], config: Config) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if degree > config.max_degree {
            return Err(Error::Resource {
                what: "degree",
                value: degree as u64,
                cap: config.max_degree as u64,
            });
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let chain = Bsgs::build(degree, gens, &config)?;
        let order = chain.order();
        Ok(Group(Arc::new(GroupInner {
            degree,
            generators: gens.to_vec(),
            config,
            chain,
            order,
            table: OnceLock::new(),
            lattice: OnceLock::new(),
            memo: Mutex::new(Memo::default()),
        })))
    }

    /// Parses generators in cycle notation.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Group> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, &perms)
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn config(&self) -> &Config {
        &self.0.config
    }

    pub fn base(&self) -> Vec<usize> {
        self.0.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.0.chain.strong_generators()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
        }
        Ok(self.0.chain.contains(g))
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(self.table()?.elements())
    }

    pub(crate) fn table(&self) -> Result<&Table> {
        let cap = self.0.config.max_lattice_order;
        let order = self.order();
        self.0
            .table
            .get_or_init(|| {
                if order > cap {
                    return Err(Error::Resource { what: "lattice order", value: order, cap });
                }
                Ok(Table::build(self.0.chain.elements(), &self.0.generators))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub(crate) fn lattice_cell(&self) -> &OnceLock<Result<Arc<Lattice>>> {
        &self.0.lattice
    }

    pub(crate) fn memo(&self) -> std::sync::MutexGuard<'_, Memo> {
        self.0.memo.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Result<Subgroup> {
        let t = self.table()?;
        Ok(Subgroup::from_parts(self.clone(), t.full_set(), t.generators().to_vec()))
    }

    pub fn trivial(&self) -> Result<Subgroup> {
        let t = self.table()?;
        Ok(Subgroup::from_parts(self.clone(), t.trivial_set(), Vec::new()))
    }

    /// Subgroup generated by the given permutations, which must lie in the group.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let t = self.table()?;
        let mut idx = Vec::with_capacity(gens.len());
        for g in gens {
            if g.degree() != self.degree() {
                return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
            }
            idx.push(t.index_of(g).ok_or(Error::NotMember)?);
        }
        Ok(Subgroup::from_gens(self.clone(), idx))
    }

    pub fn subgroup_from_cycles(&self, gens: &[&str]) -> Result<Subgroup> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse_cycles(self.degree(), s))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup(&perms)
    }

    /// Order computed by breadth-first closure over permutations, without
    /// the stabilizer chain or the element table.
    pub fn closure_order(&self) -> u64 {
        let mut seen = std::collections::HashSet::new();
        let id = Permutation::identity(self.degree());
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in self.generators() {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len() as u64
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.whole()?.normalizer(h)
    }

    pub fn core(&self, h: &Subgroup) -> Result<Subgroup> {
        self.whole()?.core(h)
    }

    pub fn derived_subgroup(&self) -> Result<Subgroup> {
        Ok(self.whole()?.derived_subgroup())
    }

    pub fn derived_series(&self) -> Result<Vec<Subgroup>> {
        Ok(self.whole()?.derived_series())
    }

    pub fn fitting_subgroup(&self) -> Result<Subgroup> {
        Ok(self.whole()?.fitting_subgroup())
    }

    pub fn is_soluble(&self) -> Result<bool> {
        Ok(self.whole()?.is_soluble())
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|a| g.iter().all(|b| a * b == b * a))
    }

    /// `G/N` as a fresh permutation group acting on the right cosets of `N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Group> {
        Ok(self.whole()?.quotient(n)?.group().clone())
    }

    /// Prime divisors of the order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_factors(self.order()).into_iter().map(|(p, _)| p).collect()
    }

    /// Census of element orders: `(order, count)` sorted by order.
    pub fn element_order_census(&self) -> Result<Vec<(u32, usize)>> {
        let t = self.table()?;
        let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
        for e in 0..t.len() {
            *counts.entry(t.order_of(e as u32)).or_default() += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// Fingerprint used to key cached lattices: order, element-order census
    /// and the generator encoding.
    pub fn fingerprint(&self) -> String {
        let census = self
            .element_order_census()
            .map(|c| c.iter().map(|(o, n)| format!("{o}^{n}")).collect::<Vec<_>>().join(","))
            .unwrap_or_default();
        let gens: Vec<String> = self.generators().iter().map(|g| format!("{:?}", g.images())).collect();
        format!("{}|{}|{}|{}", self.degree(), self.order(), census, gens.join(";"))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

/// Prime factorization by trial division.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![(n, 1)]
}

pub fn is_prime_power(n: u64) -> bool {
    prime_factors(n).len() == 1
}

/// The `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}
