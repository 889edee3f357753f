//! Ore conditions for powers of the left generator, in all three algebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regloc::orekit::{ass_member, denominator_check, ore_witness, A1Ring, I1Ring, OreRing, SnRing};

fn demo<R: OreRing>(name: &str, ring: &R) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = ring.random(&mut rng);
    let (s, _) = ring.powers(2).pop().unwrap();
    println!("[{name}] r = {r}, s = {s}");
    match ore_witness(ring, &r, &s, 12) {
        Ok(Some(w)) => println!("  s' = {}, r' = {}", w.s_prime, w.r_prime),
        Ok(None) => println!("  no witness within bound"),
        Err(e) => println!("  {e}"),
    }

    let f = ring.random_f(&mut rng);
    if let Some(k) = ass_member(ring, &f, 12) {
        println!("  {f} is killed by {k}");
    }
    let rep = denominator_check(ring, 20, 12, &mut rng);
    println!(
        "  denominator check: {} failures over {} samples",
        rep.failures(),
        rep.samples
    );
}

fn main() {
    demo("s1", &SnRing { n: 1 });
    demo("i1", &I1Ring);
    demo("a1", &A1Ring);
}
