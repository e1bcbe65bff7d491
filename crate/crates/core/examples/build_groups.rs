//! Standard families, direct products and semidirect products.

use formgroups::construct::{cyclic, direct_product, make_standard, semidirect_product, ActionSpec, StandardKind};
use formgroups::Group;

fn describe(name: &str, g: &Group) -> formgroups::Result<()> {
    println!(
        "{name:<12} order {:>4}  degree {:>3}  soluble {}  census {:?}",
        g.order(),
        g.degree(),
        g.is_soluble()?,
        g.element_order_census()?
    );
    Ok(())
}

fn main() -> formgroups::Result<()> {
    let s3 = make_standard(StandardKind::Symmetric(3))?;
    let a4 = make_standard(StandardKind::Alternating(4))?;
    describe("S3", &s3)?;
    describe("A4", &a4)?;
    describe("E9", &make_standard(StandardKind::ElementaryAbelian { p: 3, n: 2 })?)?;
    describe("Q8", &make_standard(StandardKind::Quaternion8)?)?;
    describe("S3 x S3", &direct_product(&s3, &s3)?)?;

    // C7 ⋊ C3 with the generator of C3 acting as a ↦ a^2.
    let c7 = cyclic(7)?;
    let c3 = cyclic(3)?;
    let a = c7.generators()[0].clone();
    let action = ActionSpec { images: vec![vec![a.pow(2)]] };
    describe("C7 : C3", &semidirect_product(&c7, &c3, &action)?)?;

    // An action that is not an automorphism is rejected.
    let bad = ActionSpec { images: vec![vec![a.pow(0)]] };
    match semidirect_product(&c7, &c3, &bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
