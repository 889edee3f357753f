//! The first Jacobian algebra: grade view, regularity data and degree.

use regloc::exactnum::{LFraction, UniPoly, Var};
use regloc::jacobian::{
    a1_normalize, a1_regularity, grade_decompose, matrix_unit_a1, regularity_degree_a1,
    skew_laurent_image, theta, A1Element,
};

fn main() {
    let x = A1Element::x();
    let d = A1Element::d();
    let h_minus_2 = A1Element::l(LFraction::from_poly(UniPoly::from_ints(&[-2, 1], Var::H)));

    println!("d x     = {}", a1_normalize(&d.mul(&x)));
    println!("x d     = {}", a1_normalize(&x.mul(&d)));
    println!("E12     = {}", matrix_unit_a1(1, 2));
    println!("theta   = {}", a1_normalize(&theta(&matrix_unit_a1(1, 2))));

    let a = x
        .mul(&A1Element::hinv(1))
        .add(&h_minus_2)
        .sub(&matrix_unit_a1(0, 1));
    println!("a       = {}", a1_normalize(&a));
    for (r, c) in grade_decompose(&a).unwrap().components {
        println!("  grade {r:>2}: R = {}", c.l);
    }
    println!("skew    = {}", skew_laurent_image(&a));

    for (name, e) in [("x", x), ("H - 2", h_minus_2), ("a", a)] {
        let data = a1_regularity(&e).unwrap();
        let deg = regularity_degree_a1(&e).map_or_else(|err| err.to_string(), |k| k.to_string());
        println!(
            "{name:<6} verdict={} degree={deg} {}",
            data.verdict,
            data.to_json()
        );
    }
}
