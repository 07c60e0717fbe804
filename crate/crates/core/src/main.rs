fn main() {
    std::process::exit(csta::cli::main_with_args(std::env::args_os()));
}
