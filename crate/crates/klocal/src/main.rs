fn main() {
    std::process::exit(klocal::run(std::env::args_os()));
}
