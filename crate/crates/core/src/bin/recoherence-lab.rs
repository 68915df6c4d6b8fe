fn main() {
    std::process::exit(recoherence_lab::cli::run(std::env::args_os()));
}
