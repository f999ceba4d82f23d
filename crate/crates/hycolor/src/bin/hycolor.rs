fn main() {
    std::process::exit(hycolor::cli::main());
}
