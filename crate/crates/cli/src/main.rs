use clap::Parser;

fn main() {
    let cli = hypoly_cli::args::Cli::parse();
    std::process::exit(hypoly_cli::run(cli));
}
