use clap::Parser;

fn main() {
    let cli = nilcayley_cli::Cli::parse();
    let outcome = nilcayley_cli::run(cli);
    if !outcome.stdout.is_empty() {
        println!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
