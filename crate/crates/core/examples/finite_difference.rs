//! The leading coefficient survives a mixed finite difference, scaled by k! step^k.

use regloc::exactnum::scalar::{frac, int};
use regloc::exactnum::{finite_difference, lex_leading, Direction, MultiPoly, ShiftSpec};

fn main() {
    // p = 3 x0^2 x1 - x0 x1^3 + 7
    let mut p = MultiPoly::zero(2);
    p.add_term(vec![2, 1], int(3));
    p.add_term(vec![1, 3], int(-1));
    p.add_term(vec![0, 0], int(7));

    let (lam, d) = lex_leading(&p).unwrap();
    println!("leading {lam} at {d:?}");

    for dir in [Direction::Forward, Direction::Backward] {
        let spec = ShiftSpec::new(vec![int(2), frac(1, 2)], dir).unwrap();
        let out = finite_difference(&p, &d, &spec).unwrap();
        println!("{dir:?}: {}", out.render(&["x0".into(), "x1".into()]));
    }
}
