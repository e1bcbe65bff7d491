//! Statement checkers for the primary-cyclic equivalence and its abnormal
//! variant, lemma property suites, and corpus sweeps.
//!
//! Statements quantify over conjugacy-class representatives; every predicate
//! involved is invariant under conjugation.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    f_abnormal_in, f_projector_in, f_subnormal_in, minimal_non_f_in, self_normalizing_in,
};
use crate::error::{Error, Result};
use crate::formations::{belongs_subgroup, formation_pi, pi_of_group, residual_of, Formation, FormationFlags};
use crate::group::{is_prime, Group};
use crate::lattice::{primary_cyclic_subgroups, subgroup_class_representatives, subgroups_of};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Verified,
    Counterexample,
    SkippedInF,
    SkippedInsoluble,
    SkippedFlags,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::SkippedInF => "SKIPPED_IN_F",
            Status::SkippedInsoluble => "SKIPPED_INSOLUBLE",
            Status::SkippedFlags => "SKIPPED_FLAGS",
        }
    }
}

/// Which alternative to self-normalizing is paired with 𝔉-subnormality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// "self-normalizing or 𝔉-subnormal"
    Theorem,
    /// "𝔉-subnormal or 𝔉-abnormal"
    Corollary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupWitness {
    pub order: u64,
    pub generators: Vec<String>,
}

impl SubgroupWitness {
    pub fn of(h: &Subgroup) -> Self {
        SubgroupWitness { order: h.order(), generators: h.generators().iter().map(|g| g.to_string()).collect() }
    }
}

/// Data of a decomposition `G = G' ⋊ ⟨x⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionWitness {
    pub p: u64,
    pub x: String,
    pub x_order: u64,
    pub derived_order: u64,
    pub derived_xp_order: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub s1: Option<SubgroupWitness>,
    pub s2: Option<SubgroupWitness>,
    pub s3: Option<DecompositionWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatementVector {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub witnesses: Witnesses,
}

impl StatementVector {
    pub fn as_tuple(&self) -> (bool, bool, bool) {
        (self.s1, self.s2, self.s3)
    }

    pub fn all_equal(&self) -> bool {
        self.s1 == self.s2 && self.s2 == self.s3
    }
}

/// Outcome of a quantified statement; `failing` is a subgroup violating it.
#[derive(Debug, Clone)]
pub struct StatementCheck {
    pub holds: bool,
    pub failing: Option<Subgroup>,
}

/// A decomposition found by the third statement.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub p: u64,
    pub x: Permutation,
    pub cyclic: Subgroup,
    pub derived: Subgroup,
    pub derived_xp: Subgroup,
}

impl Decomposition {
    pub fn witness(&self) -> DecompositionWitness {
        DecompositionWitness {
            p: self.p,
            x: self.x.to_string(),
            x_order: self.cyclic.order(),
            derived_order: self.derived.order(),
            derived_xp_order: self.derived_xp.order(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionCheck {
    pub holds: bool,
    pub decomposition: Option<Decomposition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub order: u64,
    pub formation: String,
    pub flags: FormationFlags,
    pub check: Variant,
    pub status: Status,
    pub statements: Option<StatementVector>,
    pub elapsed_ms: u64,
}

fn alternative_holds(variant: Variant, f: &Formation, whole: &Subgroup, h: &Subgroup) -> Result<bool> {
    if f_subnormal_in(f, whole, h)? {
        return Ok(true);
    }
    match variant {
        Variant::Theorem => self_normalizing_in(whole, h),
        Variant::Corollary => f_abnormal_in(f, whole, h),
    }
}

fn quantify(variant: Variant, f: &Formation, whole: &Subgroup, subs: Vec<Subgroup>) -> Result<StatementCheck> {
    for h in subs {
        if !alternative_holds(variant, f, whole, &h)? {
            return Ok(StatementCheck { holds: false, failing: Some(h) });
        }
    }
    Ok(StatementCheck { holds: true, failing: None })
}

fn proper_class_reps(whole: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(subgroup_class_representatives(whole)?.into_iter().filter(|h| h != whole).collect())
}

/// Every primary cyclic subgroup is self-normalizing or 𝔉-subnormal.
pub fn check_statement1(f: &Formation, g: &Group) -> Result<StatementCheck> {
    let whole = g.whole()?;
    quantify(Variant::Theorem, f, &whole, primary_cyclic_subgroups(&whole)?)
}

/// Every proper subgroup (the trivial one included) is self-normalizing or
/// 𝔉-subnormal.
pub fn check_statement2(f: &Formation, g: &Group) -> Result<StatementCheck> {
    let whole = g.whole()?;
    quantify(Variant::Theorem, f, &whole, proper_class_reps(&whole)?)
}

/// `G = G' ⋊ ⟨x⟩` with `⟨x⟩` a cyclic Sylow `p`-subgroup that is a Carter
/// subgroup, and `G'⟨x^p⟩ ∈ 𝔉`.
pub fn check_statement3(f: &Formation, g: &Group) -> Result<DecompositionCheck> {
    decompose(f, g, false)
}

/// Every primary cyclic subgroup is 𝔉-subnormal or 𝔉-abnormal.
pub fn check_corollary1(f: &Formation, g: &Group) -> Result<StatementCheck> {
    let whole = g.whole()?;
    quantify(Variant::Corollary, f, &whole, primary_cyclic_subgroups(&whole)?)
}

/// Every proper subgroup is 𝔉-subnormal or 𝔉-abnormal.
pub fn check_corollary2(f: &Formation, g: &Group) -> Result<StatementCheck> {
    let whole = g.whole()?;
    quantify(Variant::Corollary, f, &whole, proper_class_reps(&whole)?)
}

/// As [`check_statement3`], with `⟨x⟩` an 𝔉-projector and `G' = G^𝔉`.
/// False for `G ∈ 𝔉`.
pub fn check_corollary3(f: &Formation, g: &Group) -> Result<DecompositionCheck> {
    if belongs_subgroup(f, &g.whole()?) {
        return Ok(DecompositionCheck { holds: false, decomposition: None });
    }
    decompose(f, g, true)
}

fn decompose(f: &Formation, g: &Group, projector: bool) -> Result<DecompositionCheck> {
    let whole = g.whole()?;
    let derived = whole.derived_subgroup();
    let triv = g.trivial()?;
    for p in whole.prime_divisors() {
        let sylow = whole.sylow_subgroup(p)?;
        if !sylow.is_cyclic() || derived.order() * sylow.order() != g.order() {
            continue;
        }
        if derived.intersection(&sylow)? != triv || !self_normalizing_in(&whole, &sylow)? {
            continue;
        }
        let x = sylow
            .elements()
            .into_iter()
            .filter(|e| e.order() == sylow.order())
            .min()
            .expect("cyclic group has a generator");
        let xp = g.subgroup(&[x.pow(p)])?;
        let derived_xp = derived.join(&xp)?;
        if !belongs_subgroup(f, &derived_xp) {
            continue;
        }
        if projector && (!f_projector_in(f, &whole, &sylow)? || residual_of(f, &whole) != derived) {
            continue;
        }
        return Ok(DecompositionCheck {
            holds: true,
            decomposition: Some(Decomposition { p, x, cyclic: sylow, derived, derived_xp }),
        });
    }
    Ok(DecompositionCheck { holds: false, decomposition: None })
}

fn gate(f: &Formation, g: &Group) -> Result<Option<Status>> {
    if !f.flags().meets_theorem_hypotheses() {
        return Ok(Some(Status::SkippedFlags));
    }
    if !g.is_soluble()? {
        return Ok(Some(Status::SkippedInsoluble));
    }
    if belongs_subgroup(f, &g.whole()?) {
        return Ok(Some(Status::SkippedInF));
    }
    Ok(None)
}

/// Runs all three statements of the chosen variant and compares them.
pub fn verify(variant: Variant, f: &Formation, g: &Group) -> Result<VerificationReport> {
    let start = Instant::now();
    let gated = gate(f, g)?;
    let (status, statements) = match gated {
        Some(s) => (s, None),
        None => {
            let (c1, c2, c3) = match variant {
                Variant::Theorem => (check_statement1(f, g)?, check_statement2(f, g)?, check_statement3(f, g)?),
                Variant::Corollary => (check_corollary1(f, g)?, check_corollary2(f, g)?, check_corollary3(f, g)?),
            };
            debug_assert!(!c2.holds || c1.holds, "statement (2) must imply statement (1)");
            let v = StatementVector {
                s1: c1.holds,
                s2: c2.holds,
                s3: c3.holds,
                witnesses: Witnesses {
                    s1: c1.failing.as_ref().map(SubgroupWitness::of),
                    s2: c2.failing.as_ref().map(SubgroupWitness::of),
                    s3: c3.decomposition.as_ref().map(Decomposition::witness),
                },
            };
            let status = if v.all_equal() { Status::Verified } else { Status::Counterexample };
            (status, Some(v))
        }
    };
    Ok(VerificationReport {
        group: format!("order {} degree {}", g.order(), g.degree()),
        order: g.order(),
        formation: f.name().to_string(),
        flags: f.flags(),
        check: variant,
        status,
        statements,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn verify_theorem(f: &Formation, g: &Group) -> Result<VerificationReport> {
    verify(Variant::Theorem, f, g)
}

pub fn verify_corollary(f: &Formation, g: &Group) -> Result<VerificationReport> {
    verify(Variant::Corollary, f, g)
}

/// Soluble `G`: `G ∈ 𝔉` iff every primary cyclic subgroup is 𝔉-subnormal.
/// `None` when the hypotheses do not apply.
pub fn verify_lemma_in_f(f: &Formation, g: &Group) -> Result<Option<bool>> {
    let fl = f.flags();
    if !(fl.subgroup_closed && fl.saturated && fl.contains_nilpotent) || !g.is_soluble()? {
        return Ok(None);
    }
    let whole = g.whole()?;
    let mut all_sn = true;
    for c in primary_cyclic_subgroups(&whole)? {
        if !f_subnormal_in(f, &whole, &c)? {
            all_sn = false;
            break;
        }
    }
    Ok(Some(belongs_subgroup(f, &whole) == all_sn))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// K 𝔉-subnormal in H, H in G ⇒ K in G.
    SubnormalTransitive,
    /// K/N 𝔉-subnormal in G/N ⇒ K in G.
    SubnormalFromQuotient,
    /// H 𝔉-subnormal in G ⇒ HN/N in G/N.
    SubnormalToQuotient,
    /// G^𝔉 ≤ H ⇒ H 𝔉-subnormal.
    ResidualAboveSubnormal,
    /// K ≤ H ∈ 𝔉, H 𝔉-subnormal ⇒ K 𝔉-subnormal.
    SubnormalHereditaryInF,
    /// A 𝔉-abnormal, A ≤ B ⇒ A abnormal in B and self-normalizing.
    AbnormalDownward,
    /// A 𝔉-abnormal, A ≤ B ⇒ B abnormal in G and self-normalizing.
    AbnormalUpward,
    /// Soluble G, saturated 𝔉: projectors are the abnormal members of 𝔉.
    ProjectorCharacterization,
    /// Soluble minimal non-𝔉 groups have prime order outside π(𝔉) or are Schmidt groups.
    MinimalNonF,
    /// Soluble G ∈ 𝔉 iff all primary cyclic subgroups are 𝔉-subnormal.
    MembershipByPrimaryCyclic,
}

impl Lemma {
    pub const ALL: [Lemma; 10] = [
        Lemma::SubnormalTransitive,
        Lemma::SubnormalFromQuotient,
        Lemma::SubnormalToQuotient,
        Lemma::ResidualAboveSubnormal,
        Lemma::SubnormalHereditaryInF,
        Lemma::AbnormalDownward,
        Lemma::AbnormalUpward,
        Lemma::ProjectorCharacterization,
        Lemma::MinimalNonF,
        Lemma::MembershipByPrimaryCyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::SubnormalTransitive => "subnormal-transitive",
            Lemma::SubnormalFromQuotient => "subnormal-from-quotient",
            Lemma::SubnormalToQuotient => "subnormal-to-quotient",
            Lemma::ResidualAboveSubnormal => "residual-above-subnormal",
            Lemma::SubnormalHereditaryInF => "subnormal-hereditary-in-f",
            Lemma::AbnormalDownward => "abnormal-downward",
            Lemma::AbnormalUpward => "abnormal-upward",
            Lemma::ProjectorCharacterization => "projector-characterization",
            Lemma::MinimalNonF => "minimal-non-f",
            Lemma::MembershipByPrimaryCyclic => "membership-by-primary-cyclic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaStatus {
    Holds,
    Violated,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub status: LemmaStatus,
    /// Number of instances examined.
    pub instances: usize,
    pub violations: Vec<String>,
}

struct Tally {
    instances: usize,
    violations: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { instances: 0, violations: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(describe());
        }
    }

    fn finish(self, lemma: Lemma) -> LemmaReport {
        let status = if self.violations.is_empty() { LemmaStatus::Holds } else { LemmaStatus::Violated };
        LemmaReport { lemma, status, instances: self.instances, violations: self.violations }
    }
}

fn skipped(lemma: Lemma) -> LemmaReport {
    LemmaReport { lemma, status: LemmaStatus::Skipped, instances: 0, violations: Vec::new() }
}

fn orders(a: &Subgroup, b: &Subgroup) -> String {
    format!("subgroups of orders {} and {}", a.order(), b.order())
}

/// Runs one lemma on one group, honouring the lemma's hypotheses.
pub fn check_lemma(lemma: Lemma, f: &Formation, g: &Group) -> Result<LemmaReport> {
    let fl = f.flags();
    let whole = g.whole()?;
    let soluble = g.is_soluble()?;
    let mut t = Tally::new();
    match lemma {
        Lemma::SubnormalTransitive => {
            let subs = subgroups_of(&whole)?;
            for h in proper_class_reps(&whole)? {
                if !f_subnormal_in(f, &whole, &h)? {
                    continue;
                }
                for k in subs.iter().filter(|k| k.is_subgroup_of(&h)) {
                    if f_subnormal_in(f, &h, k)? {
                        let ok = f_subnormal_in(f, &whole, k)?;
                        t.check(ok, || orders(k, &h));
                    }
                }
            }
        }
        Lemma::SubnormalFromQuotient | Lemma::SubnormalToQuotient => {
            let normals = crate::lattice::normal_subgroups(&whole)?;
            for n in normals.iter().filter(|n| !n.is_trivial() && *n != &whole) {
                let q = whole.quotient(n)?;
                let qwhole = q.group().whole()?;
                if lemma == Lemma::SubnormalFromQuotient {
                    for kq in subgroup_class_representatives(&qwhole)? {
                        if f_subnormal_in(f, &qwhole, &kq)? {
                            let k = q.preimage(&kq)?;
                            let ok = f_subnormal_in(f, &whole, &k)?;
                            t.check(ok, || orders(&k, n));
                        }
                    }
                } else {
                    for h in proper_class_reps(&whole)? {
                        if f_subnormal_in(f, &whole, &h)? {
                            let img = q.image(&h)?;
                            let ok = f_subnormal_in(f, &qwhole, &img)?;
                            t.check(ok, || orders(&h, n));
                        }
                    }
                }
            }
        }
        Lemma::ResidualAboveSubnormal => {
            if !fl.subgroup_closed {
                return Ok(skipped(lemma));
            }
            let res = residual_of(f, &whole);
            for h in subgroup_class_representatives(&whole)? {
                if res.is_subgroup_of(&h) {
                    let ok = f_subnormal_in(f, &whole, &h)?;
                    t.check(ok, || orders(&h, &res));
                }
            }
        }
        Lemma::SubnormalHereditaryInF => {
            if !fl.subgroup_closed {
                return Ok(skipped(lemma));
            }
            let subs = subgroups_of(&whole)?;
            for h in subgroup_class_representatives(&whole)? {
                if !belongs_subgroup(f, &h) || !f_subnormal_in(f, &whole, &h)? {
                    continue;
                }
                for k in subs.iter().filter(|k| k.is_subgroup_of(&h)) {
                    let ok = f_subnormal_in(f, &whole, k)?;
                    t.check(ok, || orders(k, &h));
                }
            }
        }
        Lemma::AbnormalDownward | Lemma::AbnormalUpward => {
            let pi = formation_pi(f, g.order());
            let all_primes = pi_of_group(g).iter().all(|p| pi.contains(p));
            if !fl.subgroup_closed || !all_primes {
                return Ok(skipped(lemma));
            }
            let subs = subgroups_of(&whole)?;
            for a in subgroup_class_representatives(&whole)? {
                if !f_abnormal_in(f, &whole, &a)? {
                    continue;
                }
                for b in subs.iter().filter(|b| a.is_subgroup_of(b)) {
                    let ok = if lemma == Lemma::AbnormalDownward {
                        f_abnormal_in(f, b, &a)? && self_normalizing_in(&whole, &a)?
                    } else {
                        f_abnormal_in(f, &whole, b)? && self_normalizing_in(&whole, b)?
                    };
                    t.check(ok, || orders(&a, b));
                }
            }
        }
        Lemma::ProjectorCharacterization => {
            if !fl.saturated || !soluble {
                return Ok(skipped(lemma));
            }
            for h in subgroup_class_representatives(&whole)? {
                let lhs = f_projector_in(f, &whole, &h)?;
                let rhs = belongs_subgroup(f, &h) && f_abnormal_in(f, &whole, &h)?;
                t.check(lhs == rhs, || format!("subgroup of order {}: projector {lhs}, in F and abnormal {rhs}", h.order()));
            }
        }
        Lemma::MinimalNonF => {
            if !(fl.subgroup_closed && fl.saturated) || !soluble {
                return Ok(skipped(lemma));
            }
            if minimal_non_f_in(f, &whole)? {
                let prime_outside = is_prime(g.order()) && !formation_pi(f, g.order()).contains(&g.order());
                let schmidt = minimal_non_f_in(&Formation::nilpotent(), &whole)?;
                t.check(prime_outside || schmidt, || format!("minimal non-F group of order {}", g.order()));
            } else {
                t.instances += 1;
            }
        }
        Lemma::MembershipByPrimaryCyclic => match verify_lemma_in_f(f, g)? {
            None => return Ok(skipped(lemma)),
            Some(ok) => t.check(ok, || format!("group of order {}", g.order())),
        },
    }
    Ok(t.finish(lemma))
}

/// Every lemma on one group.
pub fn check_lemmas(f: &Formation, g: &Group) -> Result<Vec<LemmaReport>> {
    Lemma::ALL.iter().map(|&l| check_lemma(l, f, g)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Theorem,
    Corollary,
    Lemmas,
    All,
}

/// One corpus member, possibly unreadable.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub group: std::result::Result<Group, Error>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, group: Group) -> Self {
        CorpusEntry { name: name.into(), group: Ok(group) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub order: Option<u64>,
    pub reports: Vec<VerificationReport>,
    pub lemmas: Vec<LemmaReport>,
    pub error: Option<String>,
    pub resource_error: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Totals {
    pub by_status: BTreeMap<&'static str, usize>,
    pub lemma_violations: usize,
    pub errors: usize,
    pub resource_errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub formation: String,
    pub flags: FormationFlags,
    pub mode: Mode,
    pub entries: Vec<EntryReport>,
    pub totals: Totals,
}

impl CorpusReport {
    pub fn counterexamples(&self) -> usize {
        self.totals.by_status.get(Status::Counterexample.label()).copied().unwrap_or(0)
    }

    /// 1 on any counterexample or lemma violation, 3 when only resource caps
    /// were hit, 2 on other per-entry errors, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.counterexamples() > 0 || self.totals.lemma_violations > 0 {
            1
        } else if self.totals.errors > self.totals.resource_errors {
            2
        } else if self.totals.resource_errors > 0 {
            3
        } else {
            0
        }
    }
}

fn run_entry(entry: &CorpusEntry, f: &Formation, mode: Mode) -> EntryReport {
    let mut out = EntryReport {
        name: entry.name.clone(),
        order: None,
        reports: Vec::new(),
        lemmas: Vec::new(),
        error: None,
        resource_error: false,
    };
    let g = match &entry.group {
        Ok(g) => g,
        Err(e) => {
            out.resource_error = e.is_resource();
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.order = Some(g.order());
    let result = (|| -> Result<()> {
        if matches!(mode, Mode::Theorem | Mode::All) {
            out.reports.push(verify_theorem(f, g)?);
        }
        if matches!(mode, Mode::Corollary | Mode::All) {
            out.reports.push(verify_corollary(f, g)?);
        }
        if matches!(mode, Mode::Lemmas | Mode::All) {
            out.lemmas = check_lemmas(f, g)?;
        }
        Ok(())
    })();
    for r in &mut out.reports {
        r.group = entry.name.clone();
    }
    if let Err(e) = result {
        out.resource_error = e.is_resource();
        out.error = Some(e.to_string());
    }
    out
}

/// Sweeps a corpus in parallel; the report lists entries in corpus order.
pub fn run_corpus(corpus: &[CorpusEntry], f: &Formation, mode: Mode) -> CorpusReport {
    let entries: Vec<EntryReport> = corpus.par_iter().map(|e| run_entry(e, f, mode)).collect();
    let mut totals = Totals::default();
    for s in [Status::Verified, Status::Counterexample, Status::SkippedInF, Status::SkippedInsoluble, Status::SkippedFlags] {
        totals.by_status.insert(s.label(), 0);
    }
    for e in &entries {
        for r in &e.reports {
            *totals.by_status.entry(r.status.label()).or_default() += 1;
        }
        totals.lemma_violations += e.lemmas.iter().map(|l| l.violations.len()).sum::<usize>();
        if e.error.is_some() {
            totals.errors += 1;
            if e.resource_error {
                totals.resource_errors += 1;
            }
        }
    }
    CorpusReport { formation: f.name().to_string(), flags: f.flags(), mode, entries, totals }
}
