fn main() {
    std::process::exit(mods::cli::main_entry());
}
