fn main() {
    std::process::exit(posetlab::commands::cli_main());
}
