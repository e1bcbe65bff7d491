//! Writing, parsing and rebuilding group files.

use formgroups::construct::{make_standard, StandardKind};
use formgroups::io::{parse_spec, render_spec, GroupSpecFile};

fn main() -> formgroups::Result<()> {
    let g = make_standard(StandardKind::Symmetric(3))?;
    let spec = GroupSpecFile::describe("S3", &g, &["soluble"]);
    let text = render_spec(&spec);
    print!("{text}");
    let back = parse_spec(&text)?;
    assert_eq!(back, spec);
    println!("rebuilt order {}", back.build()?.order());

    let broken = "{\"name\": \"bad\", \"degree\": 3, \"generators\": [\"(0 1\"]}";
    match parse_spec(broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("{e}"),
    }
    let wrong = GroupSpecFile { expected_order: Some(7), ..spec };
    if let Err(e) = wrong.build() {
        println!("{e}");
    }
    Ok(())
}
