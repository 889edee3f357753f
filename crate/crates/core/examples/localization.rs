//! Fractions in the localization of S_1 at powers of y, seen as rational functions.

use regloc::onesided::SnElement;
use regloc::s1reg::{fraction_image, localize, xi_of};

fn main() {
    let x = SnElement::x(1, 0);
    let y = SnElement::y(1, 0);
    let names = ["y".to_string()];

    println!("x        -> {}", localize(&x).render(&names));
    println!("x^2 + y  -> {}", localize(&x.pow(2).add(&y)).render(&names));

    let s = y.pow(2);
    let r = x.add(&SnElement::one(1));
    println!(
        "s^-1 r   = {}",
        fraction_image(&s, &r).unwrap().render(&names)
    );

    // the same elements transported into the integro-differential algebra
    println!("xi(x)    = {}", xi_of(&x).unwrap());
    println!("xi(y)    = {}", xi_of(&y).unwrap());
}
