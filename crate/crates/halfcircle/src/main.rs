fn main() {
    std::process::exit(halfcircle::cli::run());
}
