//! Residuals of the built-in formations on a few groups.

use formgroups::catalog::small_groups;
use formgroups::formations::{belongs, residual};
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let formations = ["A", "N", "U", "NA", "S", "N*A"]
        .iter()
        .map(|n| Formation::by_name(n))
        .collect::<formgroups::Result<Vec<_>>>()?;
    print!("{:<12}", "group");
    for f in &formations {
        print!("{:>8}", f.name());
    }
    println!();
    for e in small_groups()?.iter().filter(|e| ["S3", "A4", "S4", "SL(2,3)", "D8", "C3:D8"].contains(&e.name.as_str())) {
        print!("{:<12}", e.name);
        for f in &formations {
            let r = residual(f, &e.group)?;
            let mark = if belongs(f, &e.group)? { "*" } else { "" };
            print!("{:>8}", format!("{}{mark}", r.order()));
        }
        println!();
    }
    println!("(residual orders; * marks membership)");
    Ok(())
}
