//! Left regularity in S_1, checked against a truncated kernel search.

use regloc::exactnum::scalar::int;
use regloc::onesided::{e1, SnElement};
use regloc::s1reg::{is_left_regular_s1, regularity_degree_s1, right_kernel_s1};

fn main() {
    let x = SnElement::x(1, 0);
    let y = SnElement::y(1, 0);
    let candidates = [
        ("x", x.clone()),
        ("y", y.clone()),
        ("1 - x y", SnElement::one(1).sub(&x.mul(&y))),
        ("x + E00", x.add(&e1(0, 0))),
        ("x^2 - 2 E11", x.pow(2).sub(&e1(1, 1).scale(&int(2)))),
    ];

    for (name, a) in candidates {
        let rep = is_left_regular_s1(&a).unwrap();
        let oracle = right_kernel_s1(&a, rep.size + rep.deg_y as i64 + 8);
        print!("{name:<12} regular={:<5} size={:<3}", rep.verdict, rep.size);
        match regularity_degree_s1(&a) {
            Ok(d) => print!(" degree={d}"),
            Err(e) => print!(" degree: {e}"),
        }
        if let Some(k) = oracle {
            print!(", kernel witness {k}");
        }
        println!();
    }
}
