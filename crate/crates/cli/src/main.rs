fn main() {
    std::process::exit(crcodes_cli::run(std::env::args_os()));
}
