fn main() -> std::process::ExitCode {
    lcbass::cli::main()
}
