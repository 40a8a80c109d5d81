fn main() {
    let out = matroid_forge::cli::run(std::env::args_os());
    if out.code == 2 {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
    }
    std::process::exit(out.code);
}
