fn main() {
    effalg_cli::run(effalg_cli::Tool::Demo, std::env::args_os()).emit()
}
