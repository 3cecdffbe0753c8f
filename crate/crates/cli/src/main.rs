use clap::Parser;
use plusc::{exit_code, render, run, Cli};

fn main() {
    let cli = Cli::parse();
    let reports = run(&cli);
    print!("{}", render(&reports, cli.format));
    std::process::exit(exit_code(&reports));
}
