fn main() {
    std::process::exit(young_updown::cli::cli_main(std::env::args().skip(1)));
}
