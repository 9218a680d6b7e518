use std::io::Write;

fn main() {
    let out = tiso::cli::run_args(std::env::args_os());
    if out.code == 0 {
        print!("{}", out.output);
        std::io::stdout().flush().ok();
    } else {
        eprint!("{}", out.output);
    }
    std::process::exit(out.code);
}
