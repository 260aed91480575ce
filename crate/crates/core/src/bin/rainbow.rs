fn main() { std::process::exit(rainbow_graphs::cli::main()) }
