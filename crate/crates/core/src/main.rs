fn main() {
    std::process::exit(tilinggate::cli::run(std::env::args_os()));
}
