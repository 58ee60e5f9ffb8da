fn main() {
    std::process::exit(ratbez::cli::run(std::env::args_os()));
}
