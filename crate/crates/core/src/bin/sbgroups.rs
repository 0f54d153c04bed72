use clap::Parser;

fn main() {
    std::process::exit(sbgroups::cli::run(sbgroups::cli::Cli::parse()));
}
