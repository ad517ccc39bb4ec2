use std::io;

fn main() {
    let code = ccc_forge::app::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
