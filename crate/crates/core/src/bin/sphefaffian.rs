fn main() {
    std::process::exit(sphefaffian::cli::run(std::env::args_os()));
}
