fn main() {
    std::process::exit(spincrit::cli::run());
}
