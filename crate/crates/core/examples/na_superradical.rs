//! In S4 the subgroups A4 and D8 are both 𝔑𝔄-subnormal and lie in 𝔑𝔄, yet
//! they generate S4, which does not.

use formgroups::classify::is_f_subnormal;
use formgroups::construct::{make_standard, StandardKind};
use formgroups::formations::{belongs, belongs_subgroup};
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let na = Formation::nilpotent_by_abelian();
    let s4 = make_standard(StandardKind::Symmetric(4))?;
    let a4 = s4.subgroup_from_cycles(&["(0 1 2)", "(1 2 3)"])?;
    let d8 = s4.subgroup_from_cycles(&["(0 1 2 3)", "(0 2)"])?;
    for (name, h) in [("A4", &a4), ("D8", &d8)] {
        let (sn, chain) = is_f_subnormal(&na, &s4, h)?;
        println!(
            "{name}: in NA {}, NA-subnormal {sn}, chain {:?}",
            belongs_subgroup(&na, h),
            chain.map(|c| c.orders())
        );
    }
    println!("A4 D8 has order {}", a4.join(&d8)?.order());
    println!("S4 in NA: {}", belongs(&na, &s4)?);
    Ok(())
}
