//! Cycle notation, composition order and conjugation.

use formgroups::Permutation;

fn main() -> formgroups::Result<()> {
    let a = Permutation::parse_cycles(4, "(0 1 2)")?;
    let b = Permutation::parse_cycles(4, "(0 1)")?;

    // Products act left to right: `a * b` applies `a` first.
    println!("a = {a}, b = {b}");
    println!("a * b = {}", &a * &b);
    println!("b * a = {}", &b * &a);
    println!("a^b = {}", a.conjugate_by(&b));
    println!("[a, b] = {}", Permutation::commutator(&a, &b));
    println!("order of a * b: {}", (&a * &b).order());
    println!("a^-1 = {}", a.inverse());
    Ok(())
}
