fn main() {
    std::process::exit(homlift::cli::run());
}
