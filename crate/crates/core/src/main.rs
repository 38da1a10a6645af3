fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(padic_linv::cli::run(&args));
}
