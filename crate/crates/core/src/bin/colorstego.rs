fn main() {
    std::process::exit(colorstego::cli::run(std::env::args_os()));
}
