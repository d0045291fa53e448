fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli::run(std::env::args_os(), &mut out) {
        Ok(()) | Err(cli::CliError::Closed) => {}
        Err(e) => {
            eprintln!("{}", e.line());
            std::process::exit(e.exit_code());
        }
    }
}
