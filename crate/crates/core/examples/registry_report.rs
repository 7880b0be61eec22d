//! Runs selected checks (all by default) and prints the text report.
//!
//! `cargo run --release --example registry_report -- [ORDER] [NAME]...`

use darboux::cli::{execute, render_text, RunConfig, VariantPolicy};

fn main() {
    let mut args = std::env::args().skip(1).peekable();
    let order = args.peek().and_then(|a| a.parse::<usize>().ok());
    if order.is_some() {
        args.next();
    }
    let config = RunConfig {
        checks: args.collect(),
        order,
        variant: VariantPolicy::Both,
        ..RunConfig::default()
    };
    match execute(&config) {
        Ok(report) => print!("{}", render_text(&report)),
        Err(e) => eprintln!("error: {e}"),
    }
}
