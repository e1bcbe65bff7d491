//! Lemma property suites for one group and three formations.

use formgroups::catalog::small_groups;
use formgroups::verify::check_lemmas;
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let groups = small_groups()?;
    let g = &groups.iter().find(|e| e.name == "S4").expect("S4 in catalog").group;
    for f in [Formation::nilpotent(), Formation::supersoluble(), Formation::nilpotent_by_abelian()] {
        println!("formation {}", f.name());
        for r in check_lemmas(&f, g)? {
            println!("  {:<30} {:?} over {} instances {:?}", r.lemma.name(), r.status, r.instances, r.violations);
        }
    }
    Ok(())
}
