//! The primary-cyclic equivalence on single groups, with witnesses.

use formgroups::catalog::small_groups;
use formgroups::verify::{verify_corollary, verify_theorem};
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let n = Formation::nilpotent();
    for e in small_groups()?.iter().filter(|e| ["S3", "A4", "SL(2,3)", "C7:C3", "C3:C8", "S4"].contains(&e.name.as_str())) {
        for report in [verify_theorem(&n, &e.group)?, verify_corollary(&n, &e.group)?] {
            let vector = report.statements.as_ref().map(|s| format!("{:?}", s.as_tuple())).unwrap_or_default();
            println!("{:<8} {:<10} {:<15} {vector}", e.name, format!("{:?}", report.check), report.status.label());
            if let Some(d) = report.statements.as_ref().and_then(|s| s.witnesses.s3.as_ref()) {
                println!("         p = {}, x = {} of order {}, |G'| = {}", d.p, d.x, d.x_order, d.derived_order);
            }
        }
    }
    Ok(())
}
