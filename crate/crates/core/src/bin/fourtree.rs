fn main() {
    std::process::exit(fourtree::cli::main());
}
