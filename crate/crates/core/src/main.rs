fn main() {
    std::process::exit(standing_wave::cli::main_with_args(std::env::args_os()));
}
