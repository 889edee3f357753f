//! Bounded checks of the Ore and denominator-set conditions for the
//! multiplicative sets of powers of the lowering generators (`y` in `S_n`,
//! `d` in `I_1` and `A_1`), plus localization-pair coverage.
//!
//! Everything here is a semi-decision: a positive answer always comes with a
//! witness re-verified by exact arithmetic, a negative search yields `None`.

use crate::exactnum::scalar::{self, Scalar};
use crate::intdiff::{i1_regularity, random_i1, I1Element, I1Sample};
use crate::jacobian::{
    a1_act, a1_zero_test, grade_decompose, is_left_regular_a1, matrix_unit_a1, random_a1,
    A1Element, A1Sample,
};
use crate::linalg;
use crate::onesided::{matrix_unit, SnElement, SnMonomial};
use crate::s1reg::{in_set, random_s1, Membership, S1Sample, SetDescriptor};
use crate::{Error, Result};
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Coords = BTreeMap<Vec<i64>, Scalar>;

/// What the checks need from a ring.
pub trait OreRing {
    type Elem: Clone + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Scalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Members of the power set of total degree `<= bound`, in increasing
    /// degree, each paired with a right inverse (`s h = 1`).
    fn powers(&self, bound: u32) -> Vec<(Self::Elem, Self::Elem)>;
    /// A spanning set of the elements of degree `<= bound`.
    fn slice(&self, bound: u32) -> Vec<Self::Elem>;
    /// Linear coordinates, faithful at least on the elements that occur for `bound`.
    fn coords(&self, a: &Self::Elem, bound: u32) -> Coords;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::Elem;
    fn random_f<R: Rng>(&self, rng: &mut R) -> Self::Elem;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }
}

fn exponent_vectors(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for k in 0..=bound - used {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
    out
}

/// `S_n` with the set `S_y = {y^alpha}`.
#[derive(Debug, Clone, Copy)]
pub struct SnRing {
    pub n: usize,
}

impl OreRing for SnRing {
    type Elem = SnElement;

    fn zero(&self) -> SnElement {
        SnElement::zero(self.n)
    }
    fn scale(&self, a: &SnElement, c: &Scalar) -> SnElement {
        a.scale(c)
    }
    fn add(&self, a: &SnElement, b: &SnElement) -> SnElement {
        a.add(b)
    }
    fn one(&self) -> SnElement {
        SnElement::one(self.n)
    }
    fn mul(&self, a: &SnElement, b: &SnElement) -> SnElement {
        a.mul(b)
    }
    fn sub(&self, a: &SnElement, b: &SnElement) -> SnElement {
        a.sub(b)
    }
    fn is_zero(&self, a: &SnElement) -> bool {
        a.is_zero()
    }
    fn powers(&self, bound: u32) -> Vec<(SnElement, SnElement)> {
        let zero = vec![0; self.n];
        exponent_vectors(self.n, bound)
            .into_iter()
            .map(|a| {
                let y =
                    SnElement::monomial(SnMonomial::new(zero.clone(), a.clone()), scalar::one());
                let x = SnElement::monomial(SnMonomial::new(a, zero.clone()), scalar::one());
                (y, x)
            })
            .collect()
    }
    fn slice(&self, bound: u32) -> Vec<SnElement> {
        exponent_vectors(2 * self.n, bound)
            .into_iter()
            .map(|v| {
                let m = SnMonomial::new(v[..self.n].to_vec(), v[self.n..].to_vec());
                SnElement::monomial(m, scalar::one())
            })
            .collect()
    }
    fn coords(&self, a: &SnElement, _bound: u32) -> Coords {
        a.terms()
            .iter()
            .map(|(m, c)| {
                (
                    m.alpha.iter().chain(&m.beta).map(|&k| k as i64).collect(),
                    c.clone(),
                )
            })
            .collect()
    }
    fn random<R: Rng>(&self, rng: &mut R) -> SnElement {
        if self.n == 1 {
            return random_s1(
                rng,
                S1Sample {
                    degree: 4,
                    terms: 4,
                },
            );
        }
        let mut e = SnElement::zero(self.n);
        for _ in 0..rng.gen_range(1..=4) {
            let a = (0..self.n).map(|_| rng.gen_range(0..=2)).collect();
            let b = (0..self.n).map(|_| rng.gen_range(0..=2)).collect();
            e.add_term(SnMonomial::new(a, b), scalar::int(rng.gen_range(-2..=2)));
        }
        e
    }
    fn random_f<R: Rng>(&self, rng: &mut R) -> SnElement {
        let mut e = SnElement::zero(self.n);
        for _ in 0..rng.gen_range(1..=3) {
            let a: Vec<u32> = (0..self.n).map(|_| rng.gen_range(0..=3)).collect();
            let b: Vec<u32> = (0..self.n).map(|_| rng.gen_range(0..=3)).collect();
            e = e.add(&matrix_unit(&a, &b).scale(&scalar::int(rng.gen_range(1..=3))));
        }
        e
    }
    fn to_json(&self, a: &SnElement) -> serde_json::Value {
        a.to_json()
    }
}

/// `I_1` with the set `S_d = {d^k}`.
#[derive(Debug, Clone, Copy)]
pub struct I1Ring;

impl OreRing for I1Ring {
    type Elem = I1Element;

    fn zero(&self) -> I1Element {
        I1Element::zero()
    }
    fn scale(&self, a: &I1Element, c: &Scalar) -> I1Element {
        a.scale(c)
    }
    fn add(&self, a: &I1Element, b: &I1Element) -> I1Element {
        a.add(b)
    }
    fn one(&self) -> I1Element {
        I1Element::one()
    }
    fn mul(&self, a: &I1Element, b: &I1Element) -> I1Element {
        a.mul(b)
    }
    fn sub(&self, a: &I1Element, b: &I1Element) -> I1Element {
        a.sub(b)
    }
    fn is_zero(&self, a: &I1Element) -> bool {
        a.is_zero()
    }
    fn powers(&self, bound: u32) -> Vec<(I1Element, I1Element)> {
        (0..=bound)
            .map(|k| (I1Element::d().pow(k), I1Element::int().pow(k)))
            .collect()
    }
    fn slice(&self, bound: u32) -> Vec<I1Element> {
        let mut v = Vec::new();
        for g in -(bound as i64)..=bound as i64 {
            for k in 0..=bound - g.unsigned_abs() as u32 {
                let p = crate::exactnum::UniPoly::monomial(
                    scalar::one(),
                    k as usize,
                    crate::exactnum::Var::H,
                );
                v.push(I1Element::graded(g, p));
            }
        }
        for k in 0..=bound {
            for l in 0..=bound {
                v.push(I1Element::e(k, l));
            }
        }
        v
    }
    fn coords(&self, a: &I1Element, _bound: u32) -> Coords {
        let mut c = Coords::new();
        for (g, p) in a.graded_parts() {
            for (k, x) in p.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    c.insert(vec![0, g, k as i64], x.clone());
                }
            }
        }
        for (&(k, l), x) in &a.fpart {
            c.insert(vec![1, k as i64, l as i64], x.clone());
        }
        c
    }
    fn random<R: Rng>(&self, rng: &mut R) -> I1Element {
        random_i1(rng, I1Sample::default())
    }
    fn random_f<R: Rng>(&self, rng: &mut R) -> I1Element {
        let mut e = I1Element::zero();
        for _ in 0..rng.gen_range(1..=3) {
            e.add_e(
                rng.gen_range(0..=3),
                rng.gen_range(0..=3),
                scalar::int(rng.gen_range(1..=3)),
            );
        }
        e
    }
    fn to_json(&self, a: &I1Element) -> serde_json::Value {
        a.to_json()
    }
}

/// `A_1` with the set `S_d = {d^k}`; coordinates come from the action on `K[x]`.
#[derive(Debug, Clone, Copy)]
pub struct A1Ring;

impl OreRing for A1Ring {
    type Elem = A1Element;

    fn zero(&self) -> A1Element {
        A1Element::zero()
    }
    fn scale(&self, a: &A1Element, c: &Scalar) -> A1Element {
        a.scale(c)
    }
    fn add(&self, a: &A1Element, b: &A1Element) -> A1Element {
        a.add(b)
    }
    fn one(&self) -> A1Element {
        A1Element::one()
    }
    fn mul(&self, a: &A1Element, b: &A1Element) -> A1Element {
        a.mul(b)
    }
    fn sub(&self, a: &A1Element, b: &A1Element) -> A1Element {
        a.sub(b)
    }
    fn is_zero(&self, a: &A1Element) -> bool {
        a1_zero_test(a)
    }
    fn powers(&self, bound: u32) -> Vec<(A1Element, A1Element)> {
        (0..=bound)
            .map(|k| (A1Element::d().pow(k), A1Element::int().pow(k)))
            .collect()
    }
    fn slice(&self, bound: u32) -> Vec<A1Element> {
        let mut v = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound - a {
                for j in 0..=1 {
                    v.push(A1Element::term(
                        a,
                        crate::exactnum::LFraction::inv_linear(0, j),
                        b,
                    ));
                }
            }
        }
        v
    }
    fn coords(&self, a: &A1Element, bound: u32) -> Coords {
        let top = 3 * bound + a.degree() + 8;
        let mut c = Coords::new();
        for m in 0..=top {
            let v = [(m, scalar::one())].into_iter().collect();
            for (k, x) in a1_act(a, &v) {
                c.insert(vec![m as i64, k as i64], x);
            }
        }
        c
    }
    fn random<R: Rng>(&self, rng: &mut R) -> A1Element {
        random_a1(rng, A1Sample::default())
    }
    fn random_f<R: Rng>(&self, rng: &mut R) -> A1Element {
        let mut e = A1Element::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let u = matrix_unit_a1(rng.gen_range(0..=3), rng.gen_range(0..=3));
            e = e.add(&u.scale(&scalar::int(rng.gen_range(1..=3))));
        }
        e
    }
    fn to_json(&self, a: &A1Element) -> serde_json::Value {
        a.to_json()
    }
}

/// `s' r = r' s`, verified.
#[derive(Debug, Clone)]
pub struct OreWitness<E> {
    pub s_prime: E,
    pub r_prime: E,
    pub verified: bool,
}

/// Solve `(sum c_i b_i) s = target` over the slice `b_i`.
fn solve_left_factor<R: OreRing>(
    ring: &R,
    s: &R::Elem,
    target: &R::Elem,
    bound: u32,
) -> Option<R::Elem> {
    let basis = ring.slice(bound);
    let images: Vec<Coords> = basis
        .iter()
        .map(|b| ring.coords(&ring.mul(b, s), bound))
        .collect();
    let t = ring.coords(target, bound);
    let keys: BTreeSet<&Vec<i64>> = images
        .iter()
        .flat_map(|c| c.keys())
        .chain(t.keys())
        .collect();
    let column = |c: &Coords| {
        keys.iter()
            .map(|k| c.get(*k).cloned().unwrap_or_else(scalar::zero))
            .collect::<Vec<_>>()
    };
    let cols: Vec<Vec<Scalar>> = images.iter().map(column).collect();
    let sol = linalg::solve(&cols, &column(&t))?;
    let mut acc = ring.zero();
    for (b, c) in basis.iter().zip(sol) {
        if !c.is_zero() {
            acc = ring.add(&acc, &ring.scale(b, &c));
        }
    }
    Some(acc)
}

/// Is `s` one of the powers of degree `<= bound`?
pub fn power_member<R: OreRing>(ring: &R, s: &R::Elem, bound: u32) -> Option<(R::Elem, R::Elem)> {
    ring.powers(bound).into_iter().find(|(p, _)| ring.eq(p, s))
}

/// Left Ore condition for one pair: `s' r = r' s` with `s'` a power of degree `<= bound`.
pub fn ore_witness<R: OreRing>(
    ring: &R,
    r: &R::Elem,
    s: &R::Elem,
    bound: u32,
) -> Result<Option<OreWitness<R::Elem>>> {
    let (_, h) = power_member(ring, s, bound.max(16)).ok_or(Error::NotADenominator)?;
    let pows = ring.powers(bound);
    // r' = s' r h is exact as soon as s' r annihilates the defect 1 - h s.
    for (sp, _) in &pows {
        let lhs = ring.mul(sp, r);
        let guess = ring.mul(&lhs, &h);
        if ring.eq(&ring.mul(&guess, s), &lhs) {
            return Ok(Some(OreWitness {
                s_prime: sp.clone(),
                r_prime: guess,
                verified: true,
            }));
        }
    }
    for (sp, _) in &pows {
        let lhs = ring.mul(sp, r);
        if let Some(rp) = solve_left_factor(ring, s, &lhs, bound) {
            if ring.eq(&ring.mul(&rp, s), &lhs) {
                return Ok(Some(OreWitness {
                    s_prime: sp.clone(),
                    r_prime: rp,
                    verified: true,
                }));
            }
        }
    }
    Ok(None)
}

/// A power `s` with `s r = 0`: `r` lies in `ass(S)`.
pub fn ass_member<R: OreRing>(ring: &R, r: &R::Elem, bound: u32) -> Option<R::Elem> {
    ring.powers(bound)
        .into_iter()
        .map(|(s, _)| s)
        .find(|s| ring.is_zero(&ring.mul(s, r)))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DenominatorReport {
    pub samples: usize,
    /// pairs with `r s = 0`
    pub zero_divisor_pairs: usize,
    /// of those, resolved by some `t` with `t r = 0`
    pub resolved: usize,
    pub unresolved: usize,
}

impl DenominatorReport {
    pub fn failures(&self) -> usize {
        self.unresolved
    }
}

/// For sampled `r` (half of them in `F`) and powers `s`, whenever `r s = 0`
/// look for a power `t` with `t r = 0`.
pub fn denominator_check<R: OreRing, G: Rng>(
    ring: &R,
    samples: usize,
    bound: u32,
    rng: &mut G,
) -> DenominatorReport {
    let mut rep = DenominatorReport {
        samples,
        ..Default::default()
    };
    let pows = ring.powers(bound.min(4));
    for k in 0..samples {
        let r = if k % 2 == 0 {
            ring.random(rng)
        } else {
            ring.random_f(rng)
        };
        for (s, _) in &pows {
            if !ring.is_zero(&ring.mul(&r, s)) {
                continue;
            }
            rep.zero_divisor_pairs += 1;
            if ass_member(ring, &r, bound).is_some() {
                rep.resolved += 1;
            } else {
                rep.unresolved += 1;
            }
        }
    }
    rep
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub samples: usize,
    /// sampled elements confirmed to lie in `T`
    pub members: usize,
    /// members `t` with a power `r` such that `r t` lies in `S + ass`
    pub covered: usize,
    pub uncovered: usize,
}

/// Localization pairs known to the checker.
pub trait PairSets: OreRing {
    /// Membership in the large set `T` (left regular elements).
    fn in_t(&self, t: &Self::Elem) -> Result<Membership>;
    /// Membership in `S + ass(S)` for the small set `S`.
    fn in_s_plus_ass(&self, a: &Self::Elem) -> Result<Membership>;
}

impl PairSets for SnRing {
    fn in_t(&self, t: &SnElement) -> Result<Membership> {
        if self.n != 1 {
            return Err(Error::Unsupported("localization pairs need n = 1".into()));
        }
        Ok(in_set(t, SetDescriptor::FullLeftRegular))
    }
    fn in_s_plus_ass(&self, a: &SnElement) -> Result<Membership> {
        Ok(in_set(a, SetDescriptor::SPlusIdeal))
    }
}

impl PairSets for A1Ring {
    fn in_t(&self, t: &A1Element) -> Result<Membership> {
        Ok(Membership::from_bool(is_left_regular_a1(t)?))
    }
    /// Left regular, `F` in positive grades, coefficients in `L` in the others.
    fn in_s_plus_ass(&self, a: &A1Element) -> Result<Membership> {
        let view = grade_decompose(a)?;
        let shape = view
            .components
            .iter()
            .all(|(&g, c)| if g > 0 { c.in_f() } else { c.r.in_l() });
        Ok(Membership::from_bool(
            shape && !view.is_zero() && is_left_regular_a1(a)?,
        ))
    }
}

impl PairSets for I1Ring {
    fn in_t(&self, t: &I1Element) -> Result<Membership> {
        Ok(Membership::from_bool(i1_regularity(t).verdict))
    }
    fn in_s_plus_ass(&self, _: &I1Element) -> Result<Membership> {
        Err(Error::Unsupported(
            "no localization pair registered for i1".into(),
        ))
    }
}

/// Samples `t`, keeps those in `T`, and searches a power `r` with `r t` in `S + ass`.
pub fn localization_pair_check<R: PairSets, G: Rng>(
    ring: &R,
    samples: usize,
    bound: u32,
    rng: &mut G,
) -> Result<PairReport> {
    let mut rep = PairReport {
        samples,
        ..Default::default()
    };
    let pows = ring.powers(bound);
    for _ in 0..samples {
        let t = ring.random(rng);
        if ring.in_t(&t)? != Membership::Yes {
            continue;
        }
        rep.members += 1;
        let mut hit = false;
        for (r, _) in &pows {
            if ring.in_s_plus_ass(&ring.mul(r, &t))? == Membership::Yes {
                hit = true;
                break;
            }
        }
        if hit {
            rep.covered += 1;
        } else {
            rep.uncovered += 1;
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::onesided::e1;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_witness<R: OreRing>(ring: &R, r: &R::Elem, s: &R::Elem, w: &OreWitness<R::Elem>) {
        assert!(w.verified);
        assert!(ring.eq(&ring.mul(&w.s_prime, r), &ring.mul(&w.r_prime, s)));
    }

    #[test]
    fn s1_examples() {
        let ring = SnRing { n: 1 };
        let (x, y) = (SnElement::x(1, 0), SnElement::y(1, 0));
        let w = ore_witness(&ring, &x, &y, 12).unwrap().unwrap();
        check_witness(&ring, &x, &y, &w);
        let w = ore_witness(&ring, &ring.one(), &y, 12).unwrap().unwrap();
        check_witness(&ring, &ring.one(), &y, &w);
        assert!(ore_witness(&ring, &x, &x, 12).is_err());

        assert_eq!(ass_member(&ring, &e1(0, 0), 12), Some(y));
        assert_eq!(ass_member(&ring, &x, 12), None);
    }

    #[test]
    fn i1_examples() {
        let ring = I1Ring;
        let (d, i) = (I1Element::d(), I1Element::int());
        let w = ore_witness(&ring, &i, &d, 12).unwrap().unwrap();
        check_witness(&ring, &i, &d, &w);
        assert_eq!(ass_member(&ring, &I1Element::e(0, 3), 12), Some(d));
    }

    fn random_pairs<R: OreRing>(ring: &R, seed: u64, n: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n {
            let r = ring.random(&mut rng);
            let k = rng.gen_range(0..=3);
            let (s, _) = ring.powers(k).pop().unwrap();
            let w = ore_witness(ring, &r, &s, 12)
                .unwrap()
                .expect("witness within bound");
            check_witness(ring, &r, &s, &w);
        }
    }

    #[test]
    fn ore_witnesses_on_random_pairs() {
        random_pairs(&SnRing { n: 1 }, 1, 40);
        random_pairs(&SnRing { n: 2 }, 2, 15);
        random_pairs(&I1Ring, 3, 40);
        random_pairs(&A1Ring, 4, 25);
    }

    #[test]
    fn ass_and_denominators() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = SnRing { n: 1 }.random_f(&mut rng);
            assert!(ass_member(&SnRing { n: 1 }, &f, 12).is_some());
            let f = I1Ring.random_f(&mut rng);
            assert!(ass_member(&I1Ring, &f, 12).is_some());
            let f = A1Ring.random_f(&mut rng);
            assert!(ass_member(&A1Ring, &f, 12).is_some());
        }
        let rep = denominator_check(&SnRing { n: 1 }, 30, 12, &mut rng);
        assert_eq!(rep.failures(), 0);
        let rep = denominator_check(&I1Ring, 30, 12, &mut rng);
        assert_eq!(rep.failures(), 0);
    }

    #[test]
    fn pairs_are_covered() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let rep = localization_pair_check(&SnRing { n: 1 }, 60, 12, &mut rng).unwrap();
        assert!(rep.members > 5);
        assert_eq!(rep.uncovered, 0);
        let rep = localization_pair_check(&A1Ring, 40, 12, &mut rng).unwrap();
        assert!(rep.members > 3);
        assert_eq!(rep.uncovered, 0);
    }

    #[test]
    fn larger_bound_keeps_witness() {
        let ring = SnRing { n: 1 };
        let r = SnElement::x(1, 0).pow(3);
        let s = SnElement::y(1, 0).pow(2);
        assert!(ore_witness(&ring, &r, &s, 4).unwrap().is_none());
        for b in 5..8 {
            let w = ore_witness(&ring, &r, &s, b).unwrap().unwrap();
            assert_eq!(w.s_prime, SnElement::y(1, 0).pow(5));
        }
    }
}
