use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    // a set path of "-" reads one JSON document from stdin
    let stdin_text = if args.iter().any(|a| a == "-") && !std::io::stdin().is_terminal() {
        let mut buf = String::new();
        let _ = std::io::stdin().read_to_string(&mut buf);
        Some(buf)
    } else {
        None
    };
    let outcome = polyface::cli::run_with_stdin(&args, stdin_text.as_deref());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
