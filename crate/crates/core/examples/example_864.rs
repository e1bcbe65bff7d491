//! Reconstruction of the order-864 group from its structural facts.

use formgroups::example864::analyze_example_864;

fn main() -> formgroups::Result<()> {
    let report = analyze_example_864()?;
    println!("candidates meeting every fact: {}", report.selection.survivors.len());
    println!("chosen involution {}", report.selection.chosen);
    for f in report.facts.iter().chain(&report.properties) {
        println!("  [{}] {} ({})", if f.holds { "ok" } else { "FAIL" }, f.name, f.observed);
    }
    Ok(())
}
