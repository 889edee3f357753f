//! Integro-differential operators: normal form, involution and action on K[x].

use regloc::exactnum::scalar::int;
use regloc::exactnum::{UniPoly, Var};
use regloc::intdiff::{act_on_kx, i1_regularity, star, I1Element};

fn main() {
    let d = I1Element::d();
    let integral = I1Element::int();
    let h = I1Element::h();

    println!("d int       = {}", d.mul(&integral));
    println!("int d       = {}", integral.mul(&d));
    println!("d H         = {}", d.mul(&h));
    let a = integral.mul(&h).add(&d.pow(2)).sub(&I1Element::e(2, 1));
    println!("a           = {a}");
    println!("star(a)     = {}", star(&a));

    let p = UniPoly::from_ints(&[1, 0, 3, 1], Var::X);
    println!("a . ({p}) = {}", act_on_kx(&a, &p));

    let rep = i1_regularity(&d.sub(&I1Element::constant(int(2))).mul(&h));
    println!("regularity  = {}", rep.to_json());
}
