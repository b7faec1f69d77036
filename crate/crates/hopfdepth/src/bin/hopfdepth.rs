fn main() {
    std::process::exit(hopfdepth::cli::main_with_args(std::env::args_os()));
}
