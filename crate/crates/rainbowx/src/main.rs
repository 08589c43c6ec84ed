fn main() {
    std::process::exit(rainbowx::cli::run(std::env::args()));
}
