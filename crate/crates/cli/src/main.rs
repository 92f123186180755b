fn main() {
    std::process::exit(wsat_cli::run(std::env::args_os()));
}
