use clap::Parser;

fn main() {
    let cli = semiflag::cli::Cli::parse();
    let (out, code) = semiflag::cli::execute(&cli);
    print!("{out}");
    std::process::exit(code);
}
