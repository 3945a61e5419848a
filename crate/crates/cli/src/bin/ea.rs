fn main() {
    effalg_cli::run(effalg_cli::Tool::Ea, std::env::args_os()).emit()
}
