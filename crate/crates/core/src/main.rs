fn main() {
    std::process::exit(loopcoh::cli::main_with_args(std::env::args_os()));
}
