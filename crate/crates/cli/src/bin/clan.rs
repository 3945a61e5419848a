fn main() {
    effalg_cli::run(effalg_cli::Tool::Clan, std::env::args_os()).emit()
}
