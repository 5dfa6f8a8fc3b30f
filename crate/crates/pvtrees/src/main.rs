fn main() {
    std::process::exit(pvtrees::cli::main_with(std::env::args()));
}
