use sturmian::cli;

fn main() {
    let result = cli::dispatch(std::env::args().skip(1));
    let text = result.printable();
    if !text.is_empty() {
        println!("{text}");
    }
    std::process::exit(result.exit_code());
}
