fn main() {
    std::process::exit(classcover::run(std::env::args_os()));
}
