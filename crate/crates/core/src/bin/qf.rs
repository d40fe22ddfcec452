fn main() {
    std::process::exit(quandle_forge::cli::run(std::env::args_os()));
}
