use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regloc::cli::{parse, run, A1Algebra, Algebra, I1Algebra, SnAlgebra};
use regloc::jacobian::{a1_equal, a1_normalize};
use regloc::Error;
use std::path::Path;
use std::process::Command;

struct Case {
    args: Vec<String>,
    exit: i32,
    stdout: String,
}

fn load(path: &Path) -> Case {
    let text = std::fs::read_to_string(path).unwrap();
    let (head, stdout) = text.split_once("---\n").expect("separator");
    let mut args = Vec::new();
    let mut exit = None;
    for line in head.lines() {
        if let Some(a) = line.strip_prefix("arg ") {
            args.push(a.to_string());
        } else if let Some(e) = line.strip_prefix("exit ") {
            exit = Some(e.parse().unwrap());
        }
    }
    Case {
        args,
        exit: exit.expect("exit line"),
        stdout: stdout.to_string(),
    }
}

#[test]
fn golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    assert_eq!(paths.len(), 20);
    for p in paths {
        let case = load(&p);
        let out = Command::new(env!("CARGO_BIN_EXE_regloc"))
            .args(&case.args)
            .output()
            .unwrap();
        let name = p.file_name().unwrap().to_string_lossy();
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            case.stdout,
            "{name}"
        );
        assert_eq!(out.status.code(), Some(case.exit), "{name}");
        // in-process run gives identical bytes
        let again = run(case.args.iter().cloned());
        assert_eq!(again.stdout, case.stdout, "{name}");
        assert_eq!(again.code, case.exit, "{name}");
    }
}

const TOKENS: &[&str] = &[
    "x",
    "y",
    "d",
    "i",
    "H",
    "Hinv",
    "int",
    "∂",
    "∫",
    "x1",
    "y2",
    "rho",
    "E",
    "e",
    "q",
    "+",
    "-",
    "*",
    "^",
    "/",
    "(",
    ")",
    "[",
    "]",
    ",",
    "0",
    "1",
    "2",
    "3",
    "1/2",
    "99999999999",
    " ",
    "$",
    "Hinv[1]",
    "E[0,1]",
    "rho[1,1]",
];

fn random_stream(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(0..10);
    (0..n)
        .map(|_| TOKENS[rng.gen_range(0..TOKENS.len())])
        .collect::<Vec<_>>()
        .join("")
}

fn acceptable(r: &Result<impl Sized, Error>) -> bool {
    matches!(
        r,
        Ok(_) | Err(Error::Syntax { .. }) | Err(Error::UnknownGenerator(_))
    )
}

#[test]
fn parser_fuzz_never_panics() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut values = 0;
    for _ in 0..10_000 {
        let src = random_stream(&mut rng);
        let Ok(expr) = parse(&src) else {
            assert!(acceptable(&parse(&src)), "{src:?}");
            continue;
        };
        let results = [
            SnAlgebra { n: 1 }.eval(&expr).map(|_| ()),
            SnAlgebra { n: 2 }.eval(&expr).map(|_| ()),
            I1Algebra.eval(&expr).map(|_| ()),
            A1Algebra.eval(&expr).map(|_| ()),
        ];
        for r in &results {
            assert!(acceptable(r), "{src:?}: {r:?}");
            values += r.is_ok() as usize;
        }
    }
    assert!(values > 1000);
}

#[test]
fn rendering_round_trips() {
    let inputs = ["x^2*y + 3/2*E[0,1] - y^3", "E[3,1]*x*y + 2", "-x*y^2*x"];
    for src in inputs {
        let a = SnAlgebra { n: 1 }.eval(&parse(src).unwrap()).unwrap();
        let b = SnAlgebra { n: 1 }
            .eval(&parse(&a.to_string()).unwrap())
            .unwrap();
        assert_eq!(a, b);
    }
    for src in [
        "x*d*i + e[1,2] - 3*H^2*i^2",
        "d^3*x^2 - i*H",
        "(H-2)*d + E[0,0]",
    ] {
        let a = I1Algebra.eval(&parse(src).unwrap()).unwrap();
        let b = I1Algebra.eval(&parse(&a.to_string()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
    for src in [
        "x*(H-2)^2*Hinv[1]*d + 3*H^2 - 1/2",
        "E[1,2] + rho[2,1]*d",
        "int^2*d - x*Hinv*d^3",
        "(2-H)*Hinv",
    ] {
        let a = a1_normalize(&A1Algebra.eval(&parse(src).unwrap()).unwrap());
        let b = A1Algebra.eval(&parse(&a.to_string()).unwrap()).unwrap();
        assert!(a1_equal(&a, &b), "{src}");
        assert_eq!(a1_normalize(&b), a);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["a1", "dencheck", "--samples", "8", "--seed", "7", "--json"];
    assert_eq!(run(args), run(args));
    let args = ["s1", "paircheck", "--samples", "15", "--seed", "3"];
    assert_eq!(run(args), run(args));
}
