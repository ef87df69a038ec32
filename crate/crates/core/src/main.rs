fn main() {
    std::process::exit(edgering::cli::run(std::env::args_os()));
}
