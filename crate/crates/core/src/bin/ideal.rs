fn main() {
    std::process::exit(ideal_automata::cli::run(std::env::args_os()));
}
