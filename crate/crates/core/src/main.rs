fn main() {
    std::process::exit(braided_sl2::cli::run(std::env::args_os()));
}
