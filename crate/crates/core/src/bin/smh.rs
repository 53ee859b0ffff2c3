fn main() {
    std::process::exit(smh::cli::run(std::env::args_os()));
}
