fn main() {
    std::process::exit(dias::cli::main_from_env());
}
