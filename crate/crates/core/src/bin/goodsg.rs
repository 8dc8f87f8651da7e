fn main() {
    std::process::exit(good_semigroups::cli::main());
}
