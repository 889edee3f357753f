//! Drive the command-line front end in-process.

fn main() {
    let calls: &[&[&str]] = &[
        &["s1", "mul", "y", "x"],
        &["s1", "regdeg", "x^3 + E[0,1]"],
        &["i1", "reg", "d - 2"],
        &["a1", "theta", "E[1,2]"],
        &["a1", "reg", "H - 2", "--json"],
        &["s1", "orewitness", "x^2", "y^3", "--bound", "8"],
        &["s1", "eval", "x +* y"],
    ];
    for args in calls {
        let out = regloc::cli::run(args.iter().copied());
        println!("$ regloc {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})", out.code);
    }
}
