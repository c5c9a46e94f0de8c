fn main() -> std::process::ExitCode {
    leibniz::cli::main()
}
