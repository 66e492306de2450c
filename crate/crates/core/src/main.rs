use std::io;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = smalldeg::cli::run(&args, &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
