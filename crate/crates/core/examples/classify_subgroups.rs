//! 𝔑𝔄-subnormal, 𝔑𝔄-abnormal and self-normalizing subgroups of S4, with
//! maximal chains as witnesses.

use formgroups::classify::classify_subgroups;
use formgroups::construct::{make_standard, StandardKind};
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let g = make_standard(StandardKind::Symmetric(4))?;
    for name in ["N", "NA"] {
        let f = Formation::by_name(name)?;
        println!("formation {name}");
        for c in classify_subgroups(&f, &g)? {
            let chain = c.witness.as_ref().map(|w| format!("{:?}", w.orders())).unwrap_or_else(|| "-".into());
            println!(
                "  order {:>2}  subnormal {:<5}  abnormal {:<5}  self-normalizing {:<5}  chain {chain}",
                c.subgroup.order(),
                c.f_subnormal,
                c.f_abnormal,
                c.self_normalizing
            );
        }
    }
    Ok(())
}
