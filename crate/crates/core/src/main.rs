use std::io::IsTerminal;

fn main() {
    let color =
        std::env::var("GAUSS_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal();
    let code = signed_gauss::cli::run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        color,
    );
    std::process::exit(code);
}
