fn main() {
    std::process::exit(schatten::cli::run());
}
