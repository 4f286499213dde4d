fn main() {
    std::process::exit(prodform::main_with_args(std::env::args_os()));
}
