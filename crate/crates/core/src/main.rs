fn main() -> std::process::ExitCode {
    qhverma::cli::run(std::env::args_os())
}
