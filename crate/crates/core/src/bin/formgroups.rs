use clap::Parser;

fn main() {
    let code = formgroups::cli::run(formgroups::cli::Cli::parse());
    std::process::exit(code);
}
