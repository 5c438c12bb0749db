use clap::Parser;

fn main() {
    let cli = favkit_cli::Cli::parse();
    match favkit_cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
