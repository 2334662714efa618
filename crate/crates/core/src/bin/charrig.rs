fn main() {
    std::process::exit(charrig::cli::main());
}
