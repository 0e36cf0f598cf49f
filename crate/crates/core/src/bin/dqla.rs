use std::io;

fn main() {
    let code = dq_linalg::cli::run_command(std::env::args_os(), &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
