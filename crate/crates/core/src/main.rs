fn main() {
    std::process::exit(qrank::cli::run(std::env::args_os()));
}
