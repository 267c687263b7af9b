fn main() {
    std::process::exit(modquad_cli::run());
}
