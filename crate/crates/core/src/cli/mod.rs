//! Command-line front end: `regloc <algebra> <verb> [exprs..] [flags]`.
//!
//! Exit codes: 0 success, 2 syntax or usage error, 3 domain error,
//! 4 a bounded search ended without an answer.

mod eval;
mod parse;

pub use eval::{as_lfraction, A1Algebra, Algebra, I1Algebra, PolyAlgebra, SnAlgebra};
pub use parse::{parse, Expr, MAX_EXPONENT};

use crate::error::Error;
use crate::exactnum::{MultiPoly, UniPoly, Var};
use crate::intdiff::{
    act_on_kx, act_right_on_pprime_i1, i1_regularity, is_right_regular_i1, star, I1Element,
};
use crate::jacobian::{
    a1_act_poly, a1_normalize, a1_regularity, grade_decompose, is_left_regular_a1,
    is_right_regular_a1, l_is_regular, regularity_degree_a1, skew_laurent_image, theta, A1Element,
};
use crate::onesided::{
    act_left_on_p, act_right_on_pprime, decompose_s1, eta, laurent_image, SnElement,
};
use crate::orekit::{
    ass_member, denominator_check, localization_pair_check, ore_witness, A1Ring, I1Ring, OreRing,
    PairSets, SnRing,
};
use crate::s1reg::{
    fraction_image, in_set, is_left_regular_s1, is_right_regular_s1, localize,
    regularity_degree_s1, size_s1, xi_of, xi_preimage, y_names, Membership, SetDescriptor,
};
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "regloc",
    version,
    about = "Exact arithmetic and regularity tests in S_n, I_1 and A_1"
)]
struct Cli {
    /// s1, sn:<k>, i1 or a1
    algebra: String,
    verb: String,
    #[arg(allow_hyphen_values = true)]
    args: Vec<String>,
    #[arg(long, default_value_t = 12)]
    bound: u32,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Outcome {
    Done(String),
    Unknown(String),
}

type VerbResult = Result<Outcome, Error>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::UnknownGenerator(_) | Error::Usage(_) => 2,
        _ => 3,
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let cli = match Cli::try_parse_from(hoist_flags(args.into_iter().map(Into::into).collect())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Outcome::Done(s)) => Output {
            stdout: s + "\n",
            stderr: String::new(),
            code: 0,
        },
        Ok(Outcome::Unknown(s)) => Output {
            stdout: s + "\n",
            stderr: String::new(),
            code: 4,
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

/// Expressions may start with `-`, so known flags are moved in front of a
/// `--` separator before clap sees them.
fn hoist_flags(args: Vec<String>) -> Vec<String> {
    let mut flags = vec!["regloc".to_string()];
    let mut rest = Vec::new();
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let name = a.split('=').next().unwrap_or("");
        match name {
            "--" => {
                rest.extend(it.by_ref());
            }
            "--bound" | "--samples" | "--seed" => {
                let has_value = a.contains('=');
                flags.push(a);
                if !has_value {
                    flags.extend(it.next());
                }
            }
            "--json" | "--help" | "-h" | "--version" | "-V" => flags.push(a),
            _ => rest.push(a),
        }
    }
    flags.push("--".into());
    flags.extend(rest);
    flags
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn arity(cli: &Cli, n: usize) -> Result<(), Error> {
    if cli.args.len() == n {
        Ok(())
    } else {
        Err(usage(format!(
            "`{}` takes {n} argument(s), got {}",
            cli.verb,
            cli.args.len()
        )))
    }
}

fn read<A: Algebra>(alg: &A, src: &str) -> Result<A::Elem, Error> {
    alg.eval(&parse(src)?)
}

fn done(cli: &Cli, text: String, value: Value) -> VerbResult {
    Ok(Outcome::Done(if cli.json {
        value.to_string()
    } else {
        text
    }))
}

fn element(cli: &Cli, text: String, value: Value) -> VerbResult {
    let v = json!({ "result": text, "element": value });
    done(cli, text, v)
}

fn boolean(cli: &Cli, b: bool, report: Value) -> VerbResult {
    done(cli, b.to_string(), report)
}

fn dispatch(cli: &Cli) -> VerbResult {
    match cli.algebra.as_str() {
        "s1" => sn_verbs(cli, 1),
        "i1" => i1_verbs(cli),
        "a1" => a1_verbs(cli),
        other => match other.strip_prefix("sn:").map(str::parse::<usize>) {
            Some(Ok(n)) if (1..=8).contains(&n) => sn_verbs(cli, n),
            _ => Err(usage(format!(
                "unknown algebra `{other}` (expected s1, sn:<k>, i1, a1)"
            ))),
        },
    }
}

/// Verbs shared by every algebra: products and the bounded Ore checks.
fn common_verbs<R, A>(
    cli: &Cli,
    ring: &R,
    alg: &A,
    show: impl Fn(&R::Elem) -> String,
) -> Option<VerbResult>
where
    R: OreRing + PairSets,
    A: Algebra<Elem = R::Elem>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut run = || -> VerbResult {
        match cli.verb.as_str() {
            "eval" => {
                arity(cli, 1)?;
                let a = read(alg, &cli.args[0])?;
                element(cli, show(&a), ring.to_json(&a))
            }
            "mul" => {
                if cli.args.is_empty() {
                    return Err(usage("`mul` needs at least one argument"));
                }
                let mut acc = ring.one();
                for s in &cli.args {
                    acc = ring.mul(&acc, &read(alg, s)?);
                }
                element(cli, show(&acc), ring.to_json(&acc))
            }
            "orewitness" => {
                arity(cli, 2)?;
                let (r, s) = (read(alg, &cli.args[0])?, read(alg, &cli.args[1])?);
                match ore_witness(ring, &r, &s, cli.bound)? {
                    Some(w) => {
                        let text = format!("s' = {}\nr' = {}", show(&w.s_prime), show(&w.r_prime));
                        let v = json!({"sPrime": show(&w.s_prime), "rPrime": show(&w.r_prime), "verified": w.verified});
                        done(cli, text, v)
                    }
                    None => Ok(Outcome::Unknown("unknown".into())),
                }
            }
            "assmember" => {
                arity(cli, 1)?;
                let r = read(alg, &cli.args[0])?;
                match ass_member(ring, &r, cli.bound) {
                    Some(s) => done(cli, show(&s), json!({ "s": show(&s) })),
                    None => Ok(Outcome::Unknown("unknown".into())),
                }
            }
            "dencheck" => {
                arity(cli, 0)?;
                let rep = denominator_check(ring, cli.samples, cli.bound, &mut rng);
                let text = format!(
                    "samples: {}\nzero-divisor pairs: {}\nresolved: {}\nunresolved: {}",
                    rep.samples, rep.zero_divisor_pairs, rep.resolved, rep.unresolved
                );
                let out = if cli.json {
                    serde_json::to_string(&rep).expect("serializable")
                } else {
                    text
                };
                Ok(if rep.unresolved == 0 {
                    Outcome::Done(out)
                } else {
                    Outcome::Unknown(out)
                })
            }
            "paircheck" => {
                arity(cli, 0)?;
                let rep = localization_pair_check(ring, cli.samples, cli.bound, &mut rng)?;
                let text = format!(
                    "samples: {}\nmembers: {}\ncovered: {}\nuncovered: {}",
                    rep.samples, rep.members, rep.covered, rep.uncovered
                );
                let out = if cli.json {
                    serde_json::to_string(&rep).expect("serializable")
                } else {
                    text
                };
                Ok(if rep.uncovered == 0 {
                    Outcome::Done(out)
                } else {
                    Outcome::Unknown(out)
                })
            }
            v => Err(usage(format!("unknown verb `{v}` for {}", cli.algebra))),
        }
    };
    match cli.verb.as_str() {
        "eval" | "mul" | "orewitness" | "assmember" | "dencheck" | "paircheck" => Some(run()),
        _ => None,
    }
}

fn to_multi(p: &UniPoly) -> MultiPoly {
    let mut m = MultiPoly::zero(1);
    for (k, c) in p.coeffs().iter().enumerate() {
        m.add_term(vec![k as u32], c.clone());
    }
    m
}

fn sn_verbs(cli: &Cli, n: usize) -> VerbResult {
    let alg = SnAlgebra { n };
    if let Some(r) = common_verbs(cli, &SnRing { n }, &alg, |a: &SnElement| a.to_string()) {
        return r;
    }
    let one = |cli: &Cli| -> Result<SnElement, Error> {
        arity(cli, 1)?;
        read(&alg, &cli.args[0])
    };
    let need_n1 = || {
        if n == 1 {
            Ok(())
        } else {
            Err(Error::RequiresN1)
        }
    };
    match cli.verb.as_str() {
        "eta" => {
            let b = eta(&one(cli)?);
            element(cli, b.to_string(), b.to_json())
        }
        "laurent" => {
            let img = laurent_image(&one(cli)?);
            done(cli, img.to_string(), json!(img.to_string()))
        }
        "decompose" => {
            let a = one(cli)?;
            need_n1()?;
            let d = decompose_s1(&a)?;
            let fpart: Vec<_> = d
                .fpart
                .iter()
                .map(|((i, j), c)| (c.clone(), format!("E[{i},{j}]")))
                .collect();
            let text = format!(
                "constant: {}\nxpart: {}\nypart: {}\nfpart: {}",
                d.constant,
                d.xpart,
                d.ypart,
                crate::exactnum::unipoly::join_terms(&fpart)
            );
            let v = json!({
                "constant": d.constant.to_string(),
                "xpart": d.xpart.to_string(),
                "ypart": d.ypart.to_string(),
                "fpart": d.fpart.iter().map(|((i, j), c)| json!({"i": i, "j": j, "c": c.to_string()})).collect::<Vec<_>>(),
                "size": d.size(),
            });
            done(cli, text, v)
        }
        "act" => {
            arity(cli, 2)?;
            need_n1()?;
            let a = read(&alg, &cli.args[0])?;
            let p = read(&PolyAlgebra { var: Var::X }, &cli.args[1])?;
            let q = act_left_on_p(&a, &to_multi(&p)).render(&["x".to_string()]);
            done(cli, q.clone(), json!(q))
        }
        "actright" => {
            arity(cli, 2)?;
            need_n1()?;
            let p = read(&PolyAlgebra { var: Var::Y }, &cli.args[0])?;
            let a = read(&alg, &cli.args[1])?;
            let q = act_right_on_pprime(&to_multi(&p), &a).render(&["y".to_string()]);
            done(cli, q.clone(), json!(q))
        }
        "isleftreg" => {
            let r = is_left_regular_s1(&one(cli)?)?;
            boolean(cli, r.verdict, r.to_json())
        }
        "isrightreg" => {
            let r = is_right_regular_s1(&one(cli)?)?;
            boolean(cli, r.verdict, r.to_json())
        }
        "regdeg" => {
            let d = regularity_degree_s1(&one(cli)?)?;
            done(cli, d.to_string(), json!(d))
        }
        "size" => {
            let s = size_s1(&one(cli)?)?;
            done(cli, s.to_string(), json!(s))
        }
        "localize" => {
            let q = localize(&one(cli)?).render(&y_names(n));
            done(cli, q.clone(), json!(q))
        }
        "frac" => {
            arity(cli, 2)?;
            let (s, r) = (read(&alg, &cli.args[0])?, read(&alg, &cli.args[1])?);
            let q = fraction_image(&s, &r)?.render(&y_names(n));
            done(cli, q.clone(), json!(q))
        }
        "inset" => {
            arity(cli, 2)?;
            let tag = SetDescriptor::parse(&cli.args[0]).ok_or_else(|| {
                usage(format!(
                    "unknown set `{}` (powers, yreg, tildey, splus, reg)",
                    cli.args[0]
                ))
            })?;
            let m = in_set(&read(&alg, &cli.args[1])?, tag);
            let text = m.as_str().to_string();
            match m {
                Membership::Unknown => Ok(Outcome::Unknown(if cli.json {
                    json!(m).to_string()
                } else {
                    text
                })),
                _ => done(cli, text, json!(m)),
            }
        }
        "xi" => {
            let b = xi_of(&one(cli)?)?;
            element(cli, b.to_string(), b.to_json())
        }
        v => Err(usage(format!("unknown verb `{v}` for {}", cli.algebra))),
    }
}

fn i1_verbs(cli: &Cli) -> VerbResult {
    let alg = I1Algebra;
    if let Some(r) = common_verbs(cli, &I1Ring, &alg, |a: &I1Element| a.to_string()) {
        return r;
    }
    let one = |cli: &Cli| -> Result<I1Element, Error> {
        arity(cli, 1)?;
        read(&alg, &cli.args[0])
    };
    match cli.verb.as_str() {
        "star" => {
            let b = star(&one(cli)?);
            element(cli, b.to_string(), b.to_json())
        }
        "reg" => Ok(Outcome::Done(
            i1_regularity(&one(cli)?).to_json().to_string(),
        )),
        "isleftreg" => {
            let r = i1_regularity(&one(cli)?);
            boolean(cli, r.verdict, r.to_json())
        }
        "isrightreg" => {
            let b = is_right_regular_i1(&one(cli)?);
            boolean(cli, b, json!({ "verdict": b }))
        }
        "act" => {
            arity(cli, 2)?;
            let a = read(&alg, &cli.args[0])?;
            let p = read(&PolyAlgebra { var: Var::X }, &cli.args[1])?;
            let q = act_on_kx(&a, &p).to_string();
            done(cli, q.clone(), json!(q))
        }
        "actright" => {
            arity(cli, 2)?;
            let p = read(&PolyAlgebra { var: Var::D }, &cli.args[0])?;
            let a = read(&alg, &cli.args[1])?;
            let q = act_right_on_pprime_i1(&p, &a).to_string();
            done(cli, q.clone(), json!(q))
        }
        "xipre" => {
            let b = xi_preimage(&one(cli)?)?;
            element(cli, b.to_string(), b.to_json())
        }
        v => Err(usage(format!("unknown verb `{v}` for i1"))),
    }
}

fn show_a1(a: &A1Element) -> String {
    a1_normalize(a).to_string()
}

fn a1_verbs(cli: &Cli) -> VerbResult {
    let alg = A1Algebra;
    if let Some(r) = common_verbs(cli, &A1Ring, &alg, show_a1) {
        return r;
    }
    let one = |cli: &Cli| -> Result<A1Element, Error> {
        arity(cli, 1)?;
        read(&alg, &cli.args[0])
    };
    match cli.verb.as_str() {
        "theta" => {
            let b = a1_normalize(&theta(&one(cli)?));
            element(cli, b.to_string(), b.to_json())
        }
        "reg" => Ok(Outcome::Done(
            a1_regularity(&one(cli)?)?.to_json().to_string(),
        )),
        "isleftreg" => {
            let r = a1_regularity(&one(cli)?)?;
            boolean(cli, r.verdict, r.to_json())
        }
        "isrightreg" => {
            let b = is_right_regular_a1(&one(cli)?)?;
            boolean(cli, b, json!({ "verdict": b }))
        }
        "regdeg" => {
            let d = regularity_degree_a1(&one(cli)?)?;
            done(cli, d.to_string(), json!(d))
        }
        "lreg" => {
            let phi = as_lfraction(&one(cli)?)?;
            let b = l_is_regular(&phi)?;
            debug_assert_eq!(b, is_left_regular_a1(&A1Element::l(phi)).unwrap_or(b));
            boolean(cli, b, json!({ "verdict": b }))
        }
        "skewimage" => {
            let s = skew_laurent_image(&one(cli)?);
            done(cli, s.to_string(), s.to_json())
        }
        "grade" => {
            let view = grade_decompose(&one(cli)?)?;
            let mut lines = Vec::new();
            let mut v = serde_json::Map::new();
            for (g, c) in &view.components {
                let mut perp = A1Element::zero();
                for (&(i, j), lam) in &c.perp {
                    perp.add_term(
                        i,
                        crate::exactnum::LFraction::inv_linear(0, j).scale(lam),
                        i,
                    );
                }
                let kind = if c.in_f() { "finite" } else { "infinite" };
                lines.push(format!(
                    "grade {g}: l = {}; perp = {}; support {kind}",
                    c.l, perp
                ));
                v.insert(
                    g.to_string(),
                    json!({
                        "l": c.l.to_json(),
                        "perp": c.perp.iter().map(|((i, j), x)| json!({"i": i, "j": j, "c": x.to_string()})).collect::<Vec<_>>(),
                        "delta": c.delta(),
                        "finite": c.in_f(),
                    }),
                );
            }
            let text = if lines.is_empty() {
                "0".to_string()
            } else {
                lines.join("\n")
            };
            done(cli, text, Value::Object(v))
        }
        "act" => {
            arity(cli, 2)?;
            let a = read(&alg, &cli.args[0])?;
            let p = read(&PolyAlgebra { var: Var::X }, &cli.args[1])?;
            let q = a1_act_poly(&a, &p).to_string();
            done(cli, q.clone(), json!(q))
        }
        v => Err(usage(format!("unknown verb `{v}` for a1"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Output {
        run(args.iter().copied())
    }

    #[test]
    fn spec_commands() {
        assert_eq!(out(&["s1", "mul", "y", "x"]).stdout, "1\n");
        assert_eq!(out(&["a1", "regdeg", "x"]).stdout, "1\n");
        let o = out(&["i1", "reg", "(H-2)*d + E[0,0]"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["inPsi"], json!(false));
        assert_eq!(v["size"], json!(0));
        assert_eq!(v["mu"], json!(2));
        assert_eq!(v["nu"], json!(2));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(out(&["s1", "mul", "y +"]).code, 2);
        assert_eq!(out(&["s1", "mul", "z"]).code, 2);
        assert_eq!(out(&["q9", "mul", "x"]).code, 2);
        assert_eq!(out(&["s1", "regdeg", "E[0,0]"]).code, 3);
        assert_eq!(out(&["s1", "assmember", "x"]).code, 4);
        assert_eq!(out(&["s1", "mul", "-x", "--json"]).code, 0);
    }
}
