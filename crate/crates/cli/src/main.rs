fn main() {
    std::process::exit(morlicz_cli::run(std::env::args_os()));
}
