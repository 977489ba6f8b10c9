fn main() {
    std::process::exit(conchoid_cli::run(std::env::args_os()));
}
