fn main() {
    std::process::exit(gr3937::cli::run(std::env::args_os()));
}
