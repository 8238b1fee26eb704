use std::io::Write;

fn main() {
    let outcome = extremal_core::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    // a closed pipe on stdout is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
