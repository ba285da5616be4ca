fn main() {
    std::process::exit(tverberg_pm::cli::main());
}
