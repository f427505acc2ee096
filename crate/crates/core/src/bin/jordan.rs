fn main() {
    std::process::exit(jordan_cgc::cli::main_from(std::env::args_os()));
}
