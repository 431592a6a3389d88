fn main() {
    std::process::exit(nilmult::cli::run());
}
