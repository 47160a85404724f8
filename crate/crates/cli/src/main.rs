use clap::Parser;

use homnambu_cli::run::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = execute(cli);
    print!("{}", outcome.output);
    std::process::exit(outcome.exit_code);
}
