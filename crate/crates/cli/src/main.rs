use clap::Parser;
use cylhook_cli::{run, RunConfig, EXIT_USAGE};

fn main() {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            std::process::exit(outcome.code);
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
