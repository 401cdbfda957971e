fn main() {
    std::process::exit(csring::cli::run(std::env::args_os()));
}
