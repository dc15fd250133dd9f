fn main() {
    std::process::exit(amalg::cli::main_with_args(std::env::args_os()));
}
