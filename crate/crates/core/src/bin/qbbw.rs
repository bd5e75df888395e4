fn main() {
    let code = qbbw::cli::parse_and_run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
