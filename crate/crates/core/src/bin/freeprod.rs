fn main() {
    std::process::exit(freeprod::cli::run(std::env::args_os()));
}
