fn main() -> std::process::ExitCode {
    hfree::cli::run(std::env::args())
}
