fn main() {
    std::process::exit(nuinv::cli::run(std::env::args_os()));
}
