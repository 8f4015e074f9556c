use clap::Parser;
use penta_cli::{run, Cli};

fn main() {
    match run(Cli::parse()) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
