fn main() {
    std::process::exit(hyperforge::cli::run(std::env::args_os()));
}
