//! Invariants and brute-force isomorphism between small groups.

use formgroups::catalog::small_groups;
use formgroups::construct::{dihedral, make_standard, StandardKind};
use formgroups::iso::{are_isomorphic, find_isomorphism, invariants};

fn main() -> formgroups::Result<()> {
    let s3 = make_standard(StandardKind::Symmetric(3))?;
    let d6 = dihedral(3)?;
    if let Some(map) = find_isomorphism(&s3, &d6)? {
        for (x, y) in map {
            println!("{x} -> {y}");
        }
    }
    let small = small_groups()?;
    let order16: Vec<_> = small.iter().filter(|e| e.group.order() == 16).collect();
    let mut pairs = 0;
    for (i, a) in order16.iter().enumerate() {
        for b in &order16[..i] {
            pairs += usize::from(are_isomorphic(&a.group, &b.group)?);
        }
    }
    println!("{} groups of order 16, {pairs} isomorphic pairs", order16.len());
    println!("{:?}", invariants(&order16[0].group)?);
    Ok(())
}
