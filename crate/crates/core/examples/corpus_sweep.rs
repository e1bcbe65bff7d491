//! A sweep over the built-in corpus for one formation.

use formgroups::catalog::full_corpus;
use formgroups::verify::{run_corpus, CorpusEntry, Mode, Status};
use formgroups::Formation;

fn main() -> formgroups::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "N".into());
    let f = Formation::by_name(&name)?;
    let corpus: Vec<CorpusEntry> = full_corpus()?.into_iter().map(|e| CorpusEntry::new(e.id, e.group)).collect();
    let report = run_corpus(&corpus, &f, Mode::Theorem);
    println!("formation {} over {} groups: {:?}", f.name(), corpus.len(), report.totals.by_status);
    for e in &report.entries {
        for r in e.reports.iter().filter(|r| r.status == Status::Counterexample) {
            println!("  counterexample {} {:?}", e.name, r.statements.as_ref().map(|s| s.as_tuple()));
        }
    }
    println!("exit code {}", report.exit_code());
    Ok(())
}
