use clap::Parser;
use nbstab::cli::{run, CommandRequest};

fn main() {
    let req = CommandRequest::parse();
    let outcome = run(&req);
    print!("{}", outcome.report);
    std::process::exit(outcome.exit_code);
}
