//! Subgroup lattice of S4 up to conjugacy, with the two construction routes
//! compared.

use formgroups::construct::{make_standard, StandardKind};
use formgroups::lattice::{maximal_subgroups, normal_subgroups, subgroup_lattice, subgroup_lattice_with, LatticeMethod};

fn main() -> formgroups::Result<()> {
    let g = make_standard(StandardKind::Symmetric(4))?;
    let l = subgroup_lattice(&g)?;
    println!("S4: {} subgroups in {} classes", l.subgroup_count(), l.classes().len());
    for c in l.classes() {
        let gens: Vec<String> = c.representative.generators().iter().map(|x| x.to_string()).collect();
        println!("  order {:>2} x{:<2} <{}>", c.order, c.class_size, gens.join(", "));
    }
    let normals: Vec<u64> = normal_subgroups(&g.whole()?)?.iter().map(|n| n.order()).collect();
    let maximals: Vec<u64> = maximal_subgroups(&g)?.iter().map(|m| m.order()).collect();
    println!("normal subgroup orders {normals:?}");
    println!("maximal subgroup orders {maximals:?}");

    let ce = subgroup_lattice_with(&g, LatticeMethod::CyclicExtension)?;
    let jc = subgroup_lattice_with(&g, LatticeMethod::JoinClosure)?;
    println!("cyclic extension {} / join closure {}", ce.subgroup_count(), jc.subgroup_count());
    Ok(())
}
