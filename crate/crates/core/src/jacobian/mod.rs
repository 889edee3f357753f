//! The Jacobian algebra `A_1`, generated by `x`, `d` and `H^{-1}` with
//! `H = d x`, in the spanning form `sum x^a g(H) d^b`, `g` in `L`.

mod grade;
mod regularity;
mod skew;

pub use grade::{grade_decompose, D1Component, GradeView};
pub use regularity::{
    a1_regularity, is_left_regular_a1, is_right_regular_a1, l_is_regular, regularity_degree_a1,
    regularity_degree_a1_capped, right_images_a1, right_kernel_a1, A1RegularityData,
};
pub use skew::{skew_laurent_image, SkewLaurent};

use crate::exactnum::scalar::{self, Scalar};
use crate::exactnum::unipoly::join_terms;
use crate::exactnum::{LFraction, UniPoly, Var};
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// `sum x^a g d^b`, keyed by `(a, b)`; not a normal form, see [`a1_normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct A1Element {
    terms: BTreeMap<(u32, u32), LFraction>,
}

impl A1Element {
    pub fn zero() -> Self {
        A1Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(a: u32, g: LFraction, b: u32) -> Self {
        let mut e = Self::zero();
        e.add_term(a, g, b);
        e
    }

    pub fn one() -> Self {
        Self::term(0, LFraction::one(), 0)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(0, LFraction::constant(c), 0)
    }

    pub fn l(g: LFraction) -> Self {
        Self::term(0, g, 0)
    }

    pub fn x() -> Self {
        Self::term(1, LFraction::one(), 0)
    }

    pub fn d() -> Self {
        Self::term(0, LFraction::one(), 1)
    }

    pub fn h() -> Self {
        Self::l(LFraction::h())
    }

    /// `(H+k)^{-1}`.
    pub fn hinv(k: u32) -> Self {
        Self::l(LFraction::inv_linear(k, 1))
    }

    /// `int = x H^{-1}`.
    pub fn int() -> Self {
        Self::term(1, LFraction::inv_linear(0, 1), 0)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), LFraction> {
        &self.terms
    }

    pub fn add_term(&mut self, a: u32, g: LFraction, b: u32) {
        if g.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(LFraction::zero);
        *slot = slot.add(&g);
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_trivially_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for (&(a, b), g) in &o.terms {
            e.add_term(a, g.clone(), b);
        }
        e
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero();
        for (&(a, b), g) in &self.terms {
            e.add_term(a, g.scale(c), b);
        }
        e
    }

    pub fn neg(&self) -> Self {
        self.scale(&-scalar::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        a1_mul(self, o)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest `a + b` over stored terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let t: Vec<_> = self
            .terms
            .iter()
            .map(|(&(a, b), g)| serde_json::json!({"a": a, "g": g.to_json(), "b": b}))
            .collect();
        serde_json::json!({ "terms": t })
    }
}

impl fmt::Display for A1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (&(a, b), g) in self.terms.iter().rev() {
            let mono = |k: usize, rest: Option<String>| {
                let mut parts = Vec::new();
                match a {
                    0 => {}
                    1 => parts.push("x".to_string()),
                    _ => parts.push(format!("x^{a}")),
                }
                match k {
                    0 => {}
                    1 => parts.push("H".to_string()),
                    _ => parts.push(format!("H^{k}")),
                }
                parts.extend(rest);
                match b {
                    0 => {}
                    1 => parts.push("d".to_string()),
                    _ => parts.push(format!("d^{b}")),
                }
                parts.join("*")
            };
            let r = g.inner();
            if r.is_poly() {
                // x^a (sum c_k H^k) d^b, expanded
                for (k, c) in r.num().coeffs().iter().enumerate().rev() {
                    if !c.is_zero() {
                        terms.push((c.clone(), mono(k, None)));
                    }
                }
            } else {
                let num = r.num();
                let single = num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
                let lc = if single {
                    num.leading()
                } else if num.leading() < scalar::zero() {
                    -scalar::one()
                } else {
                    scalar::one()
                };
                let rest = g.scale(&(scalar::one() / &lc));
                terms.push((lc, mono(0, Some(rest.to_string()))));
            }
        }
        write!(f, "{}", join_terms(&terms))
    }
}

/// `prod_{s=1}^{n} (H + c - s)`.
fn shifted_product(c: i64, n: u32) -> LFraction {
    let mut p = UniPoly::one(Var::H);
    for s in 1..=n as i64 {
        p = p.mul(&UniPoly::linear(scalar::int(c - s), Var::H));
    }
    LFraction::from_poly(p)
}

/// Product in spanning form; only forward shifts are used.
pub fn a1_mul(u: &A1Element, v: &A1Element) -> A1Element {
    let mut out = A1Element::zero();
    for (&(a, b), g) in &u.terms {
        for (&(c, e), h) in &v.terms {
            if b <= c {
                // d^b x^c = x^{c-b} prod_{s=1}^{b} (H + c - s)
                let k = c - b;
                let coeff = g.shift(k as u64).mul(&shifted_product(c as i64, b)).mul(h);
                out.add_term(a + k, coeff, e);
            } else {
                // d^b x^c = prod_{s=1}^{c} (H + b - s) d^{b-c}
                let k = b - c;
                let coeff = g.mul(&shifted_product(b as i64, c)).mul(&h.shift(k as u64));
                out.add_term(a, coeff, k + e);
            }
        }
    }
    out
}

/// The involution `x <-> d` fixing `L`.
pub fn theta(u: &A1Element) -> A1Element {
    let mut out = A1Element::zero();
    for (&(a, b), g) in &u.terms {
        out.add_term(b, g.clone(), a);
    }
    out
}

/// `prod_{k<j} (H+k)^{-1} = 1 / (d^j x^j)`.
fn inv_rising(j: u32) -> LFraction {
    let mut g = LFraction::one();
    for k in 0..j {
        g = g.mul(&LFraction::inv_linear(k, 1));
    }
    g
}

/// Matrix unit with `E_ij x^j = x^i` on `K[x]`.
pub fn matrix_unit_a1(i: u32, j: u32) -> A1Element {
    let mut proj = A1Element::term(j, inv_rising(j), j);
    proj = proj.sub(&A1Element::term(j + 1, inv_rising(j + 1), j + 1));
    if i >= j {
        A1Element::x().pow(i - j).mul(&proj)
    } else {
        A1Element::hinv(0)
            .mul(&A1Element::d())
            .pow(j - i)
            .mul(&proj)
    }
}

/// `rho_{ji} = x^i (1 / (H^j d^i x^i)) d^i`.
pub fn rho(j: u32, i: u32) -> A1Element {
    A1Element::term(i, LFraction::inv_linear(0, j).mul(&inv_rising(i)), i)
}

/// Vector in the monomial basis of `K[x]`.
pub type KxVector = BTreeMap<u32, Scalar>;

/// Action on `K[x]`: `x^m -> fall(m,b) g(m-b+1) x^{m-b+a}`.
pub fn a1_act(u: &A1Element, v: &KxVector) -> KxVector {
    let mut out = KxVector::new();
    for (&m, c) in v {
        for (&(a, b), g) in &u.terms {
            if m < b {
                continue;
            }
            let val = g
                .eval_i64((m - b) as i64 + 1)
                .expect("L has no poles at positive arguments");
            let w = c * scalar::falling(m as i64, b as u64) * val;
            if w.is_zero() {
                continue;
            }
            let k = m - b + a;
            let slot = out.entry(k).or_insert_with(scalar::zero);
            *slot += w;
            if slot.is_zero() {
                out.remove(&k);
            }
        }
    }
    out
}

pub fn a1_act_poly(u: &A1Element, p: &UniPoly) -> UniPoly {
    let v: KxVector = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, c.clone()))
        .collect();
    let w = a1_act(u, &v);
    let top = w.keys().last().copied().unwrap_or(0) as usize;
    let mut c = vec![scalar::zero(); top + 1];
    for (&k, x) in &w {
        c[k as usize] = x.clone();
    }
    UniPoly::new(c, Var::X)
}

pub fn a1_zero_test(u: &A1Element) -> bool {
    grade_decompose(u).map(|g| g.is_zero()).unwrap_or(false)
}

pub fn a1_equal(u: &A1Element, v: &A1Element) -> bool {
    a1_zero_test(&u.sub(v))
}

/// Canonical spanning form: per grade, `x^g (l + sum lambda x^i H^{-j} d^i)`
/// or `(l + sum lambda x^i H^{-j} d^i) d^n`.
pub fn a1_normalize(u: &A1Element) -> A1Element {
    grade_decompose(u)
        .expect("grading always splits")
        .reassemble()
}

/// Whether the element lies in the ideal `F` (every graded eigenfunction has finite support).
pub fn a1_in_f(u: &A1Element) -> bool {
    grade_decompose(u)
        .expect("grading always splits")
        .components
        .values()
        .all(|c| c.r.is_zero())
}

/// Bounds for [`random_a1`].
#[derive(Debug, Clone, Copy)]
pub struct A1Sample {
    pub max_exp: u32,
    pub l_degree: u32,
    pub fsize: u32,
    pub terms: usize,
}

impl Default for A1Sample {
    fn default() -> Self {
        A1Sample {
            max_exp: 3,
            l_degree: 3,
            fsize: 3,
            terms: 3,
        }
    }
}

pub fn random_lfraction<R: Rng>(rng: &mut R, deg: u32) -> LFraction {
    let nd = rng.gen_range(0..=deg);
    let c: Vec<Scalar> = (0..=nd)
        .map(|_| scalar::int(rng.gen_range(-2..=2)))
        .collect();
    let mut g = LFraction::from_poly(UniPoly::new(c, Var::H));
    if g.is_zero() {
        g = LFraction::one();
    }
    let dd = rng.gen_range(0..=deg.saturating_sub(nd));
    for _ in 0..dd {
        g = g.mul(&LFraction::inv_linear(rng.gen_range(0..=2), 1));
    }
    g
}

pub fn random_a1<R: Rng>(rng: &mut R, s: A1Sample) -> A1Element {
    let mut e = A1Element::zero();
    for _ in 0..rng.gen_range(1..=s.terms) {
        if rng.gen_bool(0.2) {
            let (i, j) = (rng.gen_range(0..=s.fsize), rng.gen_range(0..=s.fsize));
            e = e.add(&matrix_unit_a1(i, j).scale(&scalar::int(rng.gen_range(-2..=2))));
        } else {
            let a = rng.gen_range(0..=s.max_exp);
            let b = rng.gen_range(0..=s.max_exp);
            e.add_term(a, random_lfraction(rng, s.l_degree), b);
        }
    }
    e
}
