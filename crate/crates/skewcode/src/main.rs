fn main() {
    std::process::exit(skewcode::cli::run(std::env::args_os()));
}
