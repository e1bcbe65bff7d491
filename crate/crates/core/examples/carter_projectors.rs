//! Carter subgroups and 𝔉-projectors.

use formgroups::catalog::small_groups;
use formgroups::classify::{carter_subgroups, is_f_projector};
use formgroups::lattice::subgroups_of;
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let n = Formation::nilpotent();
    let u = Formation::supersoluble();
    for e in small_groups()?.iter().filter(|e| ["S3", "A4", "S4", "SL(2,3)", "C3:C8"].contains(&e.name.as_str())) {
        let carter: Vec<u64> = carter_subgroups(&e.group)?.iter().map(|c| c.order()).collect();
        let whole = e.group.whole()?;
        let mut u_proj = Vec::new();
        for h in subgroups_of(&whole)? {
            if is_f_projector(&u, &e.group, &h)? {
                u_proj.push(h.order());
            }
        }
        let n_proj =
            subgroups_of(&whole)?.iter().filter(|h| is_f_projector(&n, &e.group, h).unwrap_or(false)).count();
        println!("{:<8} Carter orders {carter:?}  N-projectors {n_proj}  U-projector orders {u_proj:?}", e.name);
    }
    Ok(())
}
