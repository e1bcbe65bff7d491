//! The order-864 group `(S₃ × S₃ × A₄) ⋊ Z₂` used as the 𝔑𝔄 showcase.
//!
//! The group is pinned down by structural facts rather than by a generator
//! list. The base `S₃ × S₃ × A₄` acts on points 0–9, and the involution
//! swaps the two `S₃` factors, acts on the `A₄` points by an element of `S₄`
//! of order at most 2, and moves the two extra points 10 and 11. Every
//! candidate is evaluated against the fact list; the lexicographically first
//! survivor is the group.

use serde::Serialize;

use crate::classify::{f_abnormal_in, f_subnormal_in, is_f_subnormal};
use crate::error::{Error, Result};
use crate::formations::{residual, Formation};
use crate::group::Group;
use crate::classify::self_normalizing_in;
use crate::group::is_prime_power;
use crate::lattice::{normal_subgroups, subgroup_class_representatives, subgroups_of};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;
use crate::verify::{check_corollary1, check_statement1};

pub const DEGREE: usize = 12;

const BASE: [&str; 6] = ["(0 1 2)", "(0 1)", "(3 4 5)", "(3 4)", "(6 7 8)", "(7 8 9)"];
const SWAP: &str = "(0 3)(1 4)(2 5)";
const A4_TWISTS: [&str; 10] =
    ["", "(6 7)(8 9)", "(6 8)(7 9)", "(6 9)(7 8)", "(6 7)", "(6 8)", "(6 9)", "(7 8)", "(7 9)", "(8 9)"];

#[derive(Debug, Clone, Serialize)]
pub struct Fact {
    pub name: &'static str,
    pub holds: bool,
    pub observed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    /// Cycle notation of the involution.
    pub involution: String,
    pub facts: Vec<Fact>,
}

impl Candidate {
    pub fn satisfied(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Selection {
    pub candidates: Vec<Candidate>,
    /// Involutions of every candidate meeting all facts, in candidate order.
    pub survivors: Vec<String>,
    pub chosen: String,
}

fn base_generators() -> Vec<Permutation> {
    BASE.iter().map(|s| Permutation::parse_cycles(DEGREE, s).expect("valid base cycle")).collect()
}

/// Candidate involutions in lexicographic order of their image lists.
pub fn candidate_involutions() -> Vec<Permutation> {
    let swap = Permutation::parse_cycles(DEGREE, SWAP).expect("valid swap");
    let extra = Permutation::parse_cycles(DEGREE, "(10 11)").expect("valid transposition");
    let mut out: Vec<Permutation> = A4_TWISTS
        .iter()
        .map(|t| &(&swap * &Permutation::parse_cycles(DEGREE, t).expect("valid twist")) * &extra)
        .collect();
    out.sort();
    out
}

pub fn group_for(involution: &Permutation) -> Result<Group> {
    let mut gens = base_generators();
    gens.push(involution.clone());
    Group::from_generators(DEGREE, &gens)
}

/// Evaluates the fact list on a candidate group.
pub fn evaluate_facts(g: &Group) -> Result<Vec<Fact>> {
    let na = Formation::nilpotent_by_abelian();
    let mut facts = Vec::new();
    let mut push = |name: &'static str, holds: bool, observed: String| facts.push(Fact { name, holds, observed });

    push("order is 864", g.order() == 864, g.order().to_string());

    let r_na = residual(&na, g)?;
    let fit = g.fitting_subgroup()?;
    push("|G^NA| = 36", r_na.order() == 36, r_na.order().to_string());
    push("G^NA = F(G)", r_na == fit, format!("|F(G)| = {}", fit.order()));
    let exp = exponent(&r_na);
    push(
        "G^NA is E9 x E4",
        r_na.is_abelian() && 6 % exp == 0 && r_na.order() == 36,
        format!("abelian {}, exponent {}", r_na.is_abelian(), exp),
    );

    let r_n = residual(&Formation::nilpotent(), g)?;
    let r_n_derived = r_n.derived_subgroup();
    let cube_in_derived = r_n.elements().iter().all(|x| r_n_derived.contains(&x.pow(3)));
    push("|G^N| = 108", r_n.order() == 108, r_n.order().to_string());
    push(
        "G^N is E9 x A4",
        r_n.order() == 108 && r_n_derived.order() == 4 && r_n_derived.is_elementary_abelian() && cube_in_derived,
        format!("derived order {}, cubes in derived {}", r_n_derived.order(), cube_in_derived),
    );

    let derived = g.derived_subgroup()?;
    push("|G'| = 216", derived.order() == 216, derived.order().to_string());

    let whole = g.whole()?;
    let p2 = whole.sylow_subgroup(2)?;
    let p2_normalizer = whole.normalizer(&p2)?;
    let (e16, outside) = sylow2_shape(&p2)?;
    push("Sylow 2 has order 32", p2.order() == 32, p2.order().to_string());
    push(
        "Sylow 2 is E16 x| Z2",
        e16 && outside && !p2.is_abelian(),
        format!("normal E16 {e16}, involution outside {outside}, abelian {}", p2.is_abelian()),
    );
    push("Sylow 2 is self-normalizing", p2_normalizer == p2, format!("|N(P)| = {}", p2_normalizer.order()));

    let p3 = whole.sylow_subgroup(3)?;
    push(
        "Sylow 3 is E27",
        p3.order() == 27 && p3.is_elementary_abelian(),
        format!("order {}, elementary abelian {}", p3.order(), p3.is_elementary_abelian()),
    );
    let (p3_sn, _) = is_f_subnormal(&na, g, &p3)?;
    push("Sylow 3 is NA-subnormal", p3_sn, p3_sn.to_string());
    Ok(facts)
}

fn exponent(h: &Subgroup) -> u64 {
    h.elements().iter().fold(1, |acc, x| crate::perm::lcm(acc, x.order()))
}

/// Looks for a normal elementary abelian subgroup of order 16 in the Sylow
/// 2-subgroup and an involution outside it, working in the Sylow subgroup
/// as a group of its own.
fn sylow2_shape(p2: &Subgroup) -> Result<(bool, bool)> {
    let own = Group::from_generators(p2.parent().degree(), &p2.generators())?;
    let whole = own.whole()?;
    let normals = normal_subgroups(&whole)?;
    for e in normals.iter().filter(|e| e.order() == 16 && e.is_elementary_abelian()) {
        let outside = whole.elements().iter().any(|x| x.order() == 2 && !e.contains(x));
        if outside {
            return Ok((true, true));
        }
    }
    let any_e16 = normals.iter().any(|e| e.order() == 16 && e.is_elementary_abelian());
    Ok((any_e16, false))
}

/// Evaluates every candidate and reports the survivors. Computed once per
/// process.
pub fn select_example_864() -> Result<Selection> {
    static SELECTION: std::sync::OnceLock<Result<Selection>> = std::sync::OnceLock::new();
    SELECTION.get_or_init(select_uncached).clone()
}

fn select_uncached() -> Result<Selection> {
    let mut candidates = Vec::new();
    let mut evaluated: Vec<(Vec<Permutation>, Vec<Fact>)> = Vec::new();
    for inv in candidate_involutions() {
        let g = group_for(&inv)?;
        let elements = g.elements()?.to_vec();
        let facts = match evaluated.iter().find(|(e, _)| *e == elements) {
            Some((_, f)) => f.clone(),
            None => {
                let f = evaluate_facts(&g)?;
                evaluated.push((elements, f.clone()));
                f
            }
        };
        candidates.push(Candidate { involution: inv.to_string(), facts });
    }
    let survivors: Vec<String> =
        candidates.iter().filter(|c| c.satisfied()).map(|c| c.involution.clone()).collect();
    let chosen = survivors.first().cloned().ok_or_else(|| {
        let diff: Vec<String> = candidates
            .iter()
            .map(|c| {
                let failed: Vec<&str> = c.facts.iter().filter(|f| !f.holds).map(|f| f.name).collect();
                format!("{}: {}", c.involution, failed.join(", "))
            })
            .collect();
        Error::Construction(format!("no candidate action meets the fact list [{}]", diff.join("; ")))
    })?;
    Ok(Selection { candidates, survivors, chosen })
}

/// The order-864 group, built from the first candidate meeting every fact.
pub fn build_example_864() -> Result<Group> {
    let sel = select_example_864()?;
    group_for(&Permutation::parse_cycles(DEGREE, &sel.chosen)?)
}

/// The selection together with further properties of the chosen group:
/// 𝔑𝔄-classification of the Sylow 2-subgroup and its proper subgroups, and
/// the first statement of each equivalence.
#[derive(Debug, Clone, Serialize)]
pub struct Example864Report {
    pub selection: Selection,
    pub order: u64,
    pub facts: Vec<Fact>,
    pub properties: Vec<Fact>,
}

impl Example864Report {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().chain(&self.properties).all(|f| f.holds)
    }
}

pub fn analyze_example_864() -> Result<Example864Report> {
    let selection = select_example_864()?;
    let g = build_example_864()?;
    let facts = evaluate_facts(&g)?;
    let na = Formation::nilpotent_by_abelian();
    let whole = g.whole()?;
    let p2 = whole.sylow_subgroup(2)?;
    let mut properties = Vec::new();

    let p2_sn = f_subnormal_in(&na, &whole, &p2)?;
    properties.push(Fact { name: "Sylow 2 is not NA-subnormal", holds: !p2_sn, observed: p2_sn.to_string() });
    let p2_abn = f_abnormal_in(&na, &whole, &p2)?;
    properties.push(Fact { name: "Sylow 2 is not NA-abnormal", holds: !p2_abn, observed: p2_abn.to_string() });

    let mut proper = 0;
    let mut failing = Vec::new();
    for h in subgroups_of(&p2)?.into_iter().filter(|h| *h != p2) {
        proper += 1;
        if !f_subnormal_in(&na, &whole, &h)? {
            failing.push(h.order());
        }
    }
    failing.sort_unstable();
    properties.push(Fact {
        name: "every proper subgroup of Sylow 2 is NA-subnormal",
        holds: failing.is_empty(),
        observed: format!("{} of {proper} are not, of orders {failing:?}", failing.len()),
    });

    let s1 = check_statement1(&na, &g)?.holds;
    properties.push(Fact { name: "statement 1 holds", holds: s1, observed: s1.to_string() });
    let c1 = check_corollary1(&na, &g)?.holds;
    properties.push(Fact { name: "corollary statement 1 fails", holds: !c1, observed: c1.to_string() });

    // The same two alternatives over all primary subgroups, cyclic or not.
    let mut neither_sn_nor_self_normalizing = Vec::new();
    let mut neither_sn_nor_abnormal = Vec::new();
    for h in subgroup_class_representatives(&whole)? {
        if h.order() == 1 || !is_prime_power(h.order()) {
            continue;
        }
        if f_subnormal_in(&na, &whole, &h)? {
            continue;
        }
        if !self_normalizing_in(&whole, &h)? {
            neither_sn_nor_self_normalizing.push(h.order());
        }
        if !f_abnormal_in(&na, &whole, &h)? {
            neither_sn_nor_abnormal.push(h.order());
        }
    }
    properties.push(Fact {
        name: "every primary subgroup is NA-subnormal or self-normalizing",
        holds: neither_sn_nor_self_normalizing.is_empty(),
        observed: format!("classes failing, by order: {neither_sn_nor_self_normalizing:?}"),
    });
    properties.push(Fact {
        name: "some primary subgroup is neither NA-subnormal nor NA-abnormal",
        holds: !neither_sn_nor_abnormal.is_empty(),
        observed: format!("such classes, by order: {neither_sn_nor_abnormal:?}"),
    });

    Ok(Example864Report { selection, order: g.order(), facts, properties })
}
