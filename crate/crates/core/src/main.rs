fn main() {
    std::process::exit(hyperf::cli::run(std::env::args_os()));
}
