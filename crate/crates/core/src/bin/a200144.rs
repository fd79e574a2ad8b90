fn main() {
    std::process::exit(a200144::cli::main_with_env());
}
