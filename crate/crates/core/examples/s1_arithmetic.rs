//! Normal forms in the bicyclic algebra S_1 and its Laurent image.

use regloc::onesided::{decompose_s1, e1, eta, laurent_image, SnElement};

fn main() {
    let x = SnElement::x(1, 0);
    let y = SnElement::y(1, 0);

    println!("y x     = {}", y.mul(&x));
    println!("x y     = {}", x.mul(&y));
    println!("E00 E00 = {}", e1(0, 0).mul(&e1(0, 0)));

    let a = x.pow(2).mul(&y).add(&y.pow(3)).sub(&e1(1, 2));
    println!("a       = {a}");
    println!("eta(a)  = {}", eta(&a));
    println!("image   = {}", laurent_image(&a));

    let parts = decompose_s1(&a).unwrap();
    for ((i, j), c) in &parts.fpart {
        println!("F part  : {c} E{i}{j}");
    }
    println!("size    = {}", parts.size());
    assert_eq!(parts.reassemble(), a);
}
