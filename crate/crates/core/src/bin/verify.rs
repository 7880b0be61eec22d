use clap::{Parser, Subcommand};
use darboux::cli::{list_checks, run, Format, RunConfig, VariantPolicy};

#[derive(Parser)]
#[command(name = "verify", about = "Exact series verification of Darboux evaluations")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered checks.
    List,
    /// Run checks and print a report.
    Run {
        /// Check to run (repeatable); defaults to all.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        /// Coefficients compared per series.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value = "text", value_name = "text|json")]
        format: Format,
        #[arg(long, default_value = "corrected", value_name = "corrected|paper-literal|both")]
        variant: VariantPolicy,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match args.command {
        Command::List => print!("{}", list_checks()),
        Command::Run {
            checks,
            order,
            format,
            variant,
            jobs,
        } => {
            let config = RunConfig {
                checks,
                order,
                format,
                jobs,
                variant,
            };
            let code = run(&config, &mut std::io::stdout(), &mut std::io::stderr());
            std::process::exit(code);
        }
    }
}
