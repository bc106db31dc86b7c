fn main() {
    let code = tbk::cli::run(std::env::args_os(), &mut std::io::stdin(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
