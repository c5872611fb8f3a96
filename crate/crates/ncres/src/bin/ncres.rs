fn main() {
    std::process::exit(ncres::cli::run_cli(std::env::args_os()));
}
