fn main() {
    std::process::exit(majorder_cli::run());
}
