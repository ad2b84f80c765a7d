fn main() {
    std::process::exit(dcsurf_cli::run(std::env::args_os()));
}
