use std::io::Write;

fn main() {
    let out = falcert::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.text.as_bytes());
    std::process::exit(out.code);
}
