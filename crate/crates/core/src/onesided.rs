//! The algebra of one-sided inverses `S_n = K<x_i, y_i | y_i x_i = 1>` on the
//! monomial basis `x^a y^b`.

use crate::error::{Error, Result};
use crate::exactnum::scalar::{self, Scalar};
use crate::exactnum::unipoly::join_terms;
use crate::exactnum::{LaurentPoly, MultiPoly, UniPoly, Var};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SnMonomial {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl SnMonomial {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        assert_eq!(alpha.len(), beta.len());
        SnMonomial { alpha, beta }
    }

    pub fn one(n: usize) -> Self {
        SnMonomial {
            alpha: vec![0; n],
            beta: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn degree(&self) -> u32 {
        self.alpha.iter().chain(&self.beta).sum()
    }
}

impl Ord for SnMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.alpha.cmp(&o.alpha))
            .then_with(|| self.beta.cmp(&o.beta))
    }
}

impl PartialOrd for SnMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Componentwise `(a,b)(c,d) = (a+c-m, b+d-m)` with `m = min(b,c)`.
pub fn mono_mul(m1: &SnMonomial, m2: &SnMonomial) -> Result<SnMonomial> {
    if m1.n() != m2.n() {
        return Err(Error::DimensionMismatch(m1.n(), m2.n()));
    }
    let mut alpha = Vec::with_capacity(m1.n());
    let mut beta = Vec::with_capacity(m1.n());
    for i in 0..m1.n() {
        let m = m1.beta[i].min(m2.alpha[i]);
        alpha.push(m1.alpha[i] + m2.alpha[i] - m);
        beta.push(m1.beta[i] + m2.beta[i] - m);
    }
    Ok(SnMonomial { alpha, beta })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SnElement {
    n: usize,
    terms: BTreeMap<SnMonomial, Scalar>,
}

impl SnElement {
    pub fn zero(n: usize) -> Self {
        SnElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(SnMonomial::one(n), scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::monomial(SnMonomial::one(n), c)
    }

    pub fn monomial(m: SnMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(m.n());
        e.add_term(m, c);
        e
    }

    /// `x_i` (0-based component index).
    pub fn x(n: usize, i: usize) -> Self {
        let mut m = SnMonomial::one(n);
        m.alpha[i] = 1;
        Self::monomial(m, scalar::one())
    }

    pub fn y(n: usize, i: usize) -> Self {
        let mut m = SnMonomial::one(n);
        m.beta[i] = 1;
        Self::monomial(m, scalar::one())
    }

    /// `x^i y^j` in `S_1`.
    pub fn xy1(i: u32, j: u32) -> Self {
        Self::monomial(SnMonomial::new(vec![i], vec![j]), scalar::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SnMonomial, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, m: SnMonomial, c: Scalar) {
        assert_eq!(m.n(), self.n, "monomial dimension");
        let slot = self.terms.entry(m.clone()).or_insert_with(scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(SnMonomial::degree).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut e = self.clone();
        for (m, c) in &o.terms {
            e.add_term(m.clone(), c.clone());
        }
        e
    }

    pub fn neg(&self) -> Self {
        self.scale(&-scalar::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero(self.n);
        for (m, a) in &self.terms {
            e.add_term(m.clone(), a * c);
        }
        e
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch(self.n, o.n));
        }
        let mut e = Self::zero(self.n);
        for (m1, a) in &self.terms {
            for (m2, b) in &o.terms {
                e.add_term(mono_mul(m1, m2)?, a * b);
            }
        }
        Ok(e)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("dimension mismatch")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(
                |(m, c)| serde_json::json!({"a": m.alpha, "b": m.beta, "c": scalar::fmt_scalar(c)}),
            )
            .collect();
        serde_json::json!({"n": self.n, "terms": terms})
    }

    fn names(&self) -> (Vec<String>, Vec<String>) {
        if self.n == 1 {
            (vec!["x".into()], vec!["y".into()])
        } else {
            (
                (1..=self.n).map(|i| format!("x{i}")).collect(),
                (1..=self.n).map(|i| format!("y{i}")).collect(),
            )
        }
    }
}

impl fmt::Display for SnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xs, ys) = self.names();
        let terms: Vec<(Scalar, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut parts = Vec::new();
                for (names, exps) in [(&xs, &m.alpha), (&ys, &m.beta)] {
                    for (name, &k) in names.iter().zip(exps) {
                        match k {
                            0 => {}
                            1 => parts.push(name.clone()),
                            _ => parts.push(format!("{name}^{k}")),
                        }
                    }
                }
                (c.clone(), parts.join("*"))
            })
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

/// `E_{ab} = prod_i (x_i^{a_i} y_i^{b_i} - x_i^{a_i+1} y_i^{b_i+1})`.
pub fn matrix_unit(alpha: &[u32], beta: &[u32]) -> SnElement {
    let n = alpha.len();
    assert_eq!(n, beta.len());
    let mut acc = SnElement::one(n);
    for i in 0..n {
        let mut m0 = SnMonomial::one(n);
        m0.alpha[i] = alpha[i];
        m0.beta[i] = beta[i];
        let mut m1 = SnMonomial::one(n);
        m1.alpha[i] = alpha[i] + 1;
        m1.beta[i] = beta[i] + 1;
        let mut f = SnElement::monomial(m0, scalar::one());
        f.add_term(m1, -scalar::one());
        acc = acc.mul(&f);
    }
    acc
}

/// `E_{ij}` in `S_1`.
pub fn e1(i: u32, j: u32) -> SnElement {
    matrix_unit(&[i], &[j])
}

/// The involution swapping `x_i` and `y_i`.
pub fn eta(a: &SnElement) -> SnElement {
    let mut e = SnElement::zero(a.n);
    for (m, c) in &a.terms {
        e.add_term(SnMonomial::new(m.beta.clone(), m.alpha.clone()), c.clone());
    }
    e
}

/// `x_i -> t_i`, `y_i -> t_i^{-1}`.
pub fn laurent_image(a: &SnElement) -> LaurentPoly {
    let mut p = LaurentPoly::zero(a.n);
    for (m, c) in &a.terms {
        let e = m
            .alpha
            .iter()
            .zip(&m.beta)
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect();
        p.add_term(e, c.clone());
    }
    p
}

pub fn in_f(a: &SnElement) -> bool {
    laurent_image(a).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S1Decomposition {
    pub constant: Scalar,
    /// Polynomial in `x` without constant term.
    pub xpart: UniPoly,
    /// Polynomial in `y` without constant term.
    pub ypart: UniPoly,
    pub fpart: BTreeMap<(u32, u32), Scalar>,
}

impl S1Decomposition {
    pub fn reassemble(&self) -> SnElement {
        let mut e = SnElement::constant(1, self.constant.clone());
        for (k, c) in self.xpart.coeffs().iter().enumerate().skip(1) {
            e.add_term(SnMonomial::new(vec![k as u32], vec![0]), c.clone());
        }
        for (k, c) in self.ypart.coeffs().iter().enumerate().skip(1) {
            e.add_term(SnMonomial::new(vec![0], vec![k as u32]), c.clone());
        }
        for (&(i, j), c) in &self.fpart {
            e = e.add(&e1(i, j).scale(c));
        }
        e
    }

    /// −1 without F-part, else the least `N` with support in `[0,N]^2`.
    pub fn size(&self) -> i64 {
        self.fpart
            .keys()
            .map(|&(i, j)| i.max(j) as i64)
            .max()
            .unwrap_or(-1)
    }
}

pub fn decompose_s1(a: &SnElement) -> Result<S1Decomposition> {
    if a.n != 1 {
        return Err(Error::RequiresN1);
    }
    let img = laurent_image(a);
    let mut constant = scalar::zero();
    let mut xs = vec![scalar::zero()];
    let mut ys = vec![scalar::zero()];
    let mut lift = SnElement::zero(1);
    for (e, c) in img.terms() {
        let k = e[0];
        let m = match k.cmp(&0) {
            Ordering::Equal => {
                constant = c.clone();
                SnMonomial::one(1)
            }
            Ordering::Greater => {
                set_coeff(&mut xs, k as usize, c.clone());
                SnMonomial::new(vec![k as u32], vec![0])
            }
            Ordering::Less => {
                set_coeff(&mut ys, (-k) as usize, c.clone());
                SnMonomial::new(vec![0], vec![(-k) as u32])
            }
        };
        lift.add_term(m, c.clone());
    }
    let residual = a.sub(&lift);
    debug_assert!(laurent_image(&residual).is_zero());
    // Telescope each diagonal: x^i y^j = E_ij + x^{i+1} y^{j+1}.
    let mut diagonals: BTreeMap<i64, BTreeMap<u32, Scalar>> = BTreeMap::new();
    for (m, c) in residual.terms() {
        let d = m.alpha[0] as i64 - m.beta[0] as i64;
        diagonals
            .entry(d)
            .or_default()
            .insert(m.alpha[0], c.clone());
    }
    let mut fpart = BTreeMap::new();
    for (d, coeffs) in diagonals {
        let lo = *coeffs.keys().next().unwrap();
        let hi = *coeffs.keys().last().unwrap();
        let mut carry = scalar::zero();
        for i in lo..hi {
            carry += coeffs.get(&i).cloned().unwrap_or_else(scalar::zero);
            if !carry.is_zero() {
                let j = (i as i64 - d) as u32;
                fpart.insert((i, j), carry.clone());
            }
        }
        debug_assert!((carry + &coeffs[&hi]).is_zero());
    }
    Ok(S1Decomposition {
        constant,
        xpart: UniPoly::new(xs, Var::X),
        ypart: UniPoly::new(ys, Var::Y),
        fpart,
    })
}

fn set_coeff(v: &mut Vec<Scalar>, k: usize, c: Scalar) {
    if v.len() <= k {
        v.resize(k + 1, scalar::zero());
    }
    v[k] = c;
}

/// Left action on `P_n = K[x_1..x_n]`: `x` raises, `y` lowers or kills.
pub fn act_left_on_p(a: &SnElement, p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(a.n);
    for (m, c) in &a.terms {
        for (g, pc) in p.terms() {
            if g.iter().zip(&m.beta).all(|(gi, bi)| gi >= bi) {
                let e = (0..a.n).map(|i| g[i] - m.beta[i] + m.alpha[i]).collect();
                out.add_term(e, c * pc);
            }
        }
    }
    out
}

/// Right action on `P'_n = K[y_1..y_n]`: `y^g * x^a y^b = y^{g-a+b}` when `g >= a`.
pub fn act_right_on_pprime(p: &MultiPoly, a: &SnElement) -> MultiPoly {
    let mut out = MultiPoly::zero(a.n);
    for (g, pc) in p.terms() {
        for (m, c) in &a.terms {
            if g.iter().zip(&m.alpha).all(|(gi, ai)| gi >= ai) {
                let e = (0..a.n).map(|i| g[i] - m.alpha[i] + m.beta[i]).collect();
                out.add_term(e, pc * c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(a: u32, b: u32) -> SnMonomial {
        SnMonomial::new(vec![a], vec![b])
    }

    #[test]
    fn monomial_products() {
        assert_eq!(mono_mul(&mono(1, 2), &mono(3, 1)).unwrap(), mono(2, 1));
        assert_eq!(mono_mul(&mono(0, 1), &mono(1, 0)).unwrap(), mono(0, 0));
        assert!(mono_mul(&mono(0, 1), &SnMonomial::one(2)).is_err());
    }

    #[test]
    fn relations() {
        let (x, y) = (SnElement::x(1, 0), SnElement::y(1, 0));
        assert_eq!(y.mul(&x), SnElement::one(1));
        assert_eq!(x.mul(&y), SnElement::one(1).sub(&e1(0, 0)));
        assert_eq!(e1(0, 1).mul(&e1(1, 2)), e1(0, 2));
        assert_eq!(x.mul(&e1(0, 0)), e1(1, 0));
        assert_eq!(matrix_unit(&[0, 0], &[0, 0]).terms().len(), 4);
        assert_eq!(e1(2, 3).to_string(), "-x^3*y^4 + x^2*y^3");
    }

    #[test]
    fn eta_and_laurent() {
        assert_eq!(eta(&SnElement::xy1(2, 1)), SnElement::xy1(1, 2));
        assert_eq!(eta(&e1(0, 1)), e1(1, 0));
        assert_eq!(laurent_image(&SnElement::xy1(2, 3)).to_string(), "t^-1");
        assert!(laurent_image(&e1(3, 1)).is_zero());
        let a = SnElement::y(2, 0).mul(&SnElement::x(2, 1));
        assert_eq!(laurent_image(&a).to_string(), "t1^-1*t2");
    }

    #[test]
    fn decompositions() {
        let d = decompose_s1(&SnElement::xy1(1, 1)).unwrap();
        assert_eq!(d.constant, scalar::one());
        assert_eq!(d.fpart, BTreeMap::from([((0, 0), -scalar::one())]));
        let d = decompose_s1(&SnElement::xy1(2, 2)).unwrap();
        assert_eq!(
            d.fpart,
            BTreeMap::from([((0, 0), -scalar::one()), ((1, 1), -scalar::one())])
        );
        assert_eq!(d.size(), 1);
        let a = SnElement::xy1(0, 3).add(&e1(0, 0));
        let d = decompose_s1(&a).unwrap();
        assert_eq!(d.ypart, UniPoly::monomial(scalar::one(), 3, Var::Y));
        assert_eq!(d.fpart, BTreeMap::from([((0, 0), scalar::one())]));
    }

    #[test]
    fn actions() {
        let x3 = MultiPoly::monomial(vec![3], scalar::one());
        let y = SnElement::y(1, 0);
        assert_eq!(
            act_left_on_p(&y, &x3),
            MultiPoly::monomial(vec![2], scalar::one())
        );
        assert!(act_left_on_p(&y, &MultiPoly::one(1)).is_zero());
        let x1 = MultiPoly::monomial(vec![1], scalar::one());
        assert_eq!(
            act_left_on_p(&e1(2, 1), &x1),
            MultiPoly::monomial(vec![2], scalar::one())
        );
        let y2 = MultiPoly::monomial(vec![2], scalar::one());
        let x = SnElement::x(1, 0);
        assert_eq!(act_right_on_pprime(&y2, &x), x1);
        assert!(act_right_on_pprime(&MultiPoly::one(1), &x).is_zero());
        assert_eq!(
            act_right_on_pprime(&MultiPoly::one(1), &e1(0, 0)),
            MultiPoly::one(1)
        );
    }

    pub(crate) fn arb_sn(n: usize, deg: u32) -> impl Strategy<Value = SnElement> {
        prop::collection::vec(
            (
                prop::collection::vec(0..=deg, n),
                prop::collection::vec(0..=deg, n),
                -2i64..=2,
            ),
            0..5,
        )
        .prop_map(move |ts| {
            let mut e = SnElement::zero(n);
            for (a, b, c) in ts {
                e.add_term(SnMonomial::new(a, b), scalar::int(c));
            }
            e
        })
    }

    fn arb_p(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..=4, n), -3i64..=3), 0..4).prop_map(
            move |ts| {
                let mut p = MultiPoly::zero(n);
                for (e, c) in ts {
                    p.add_term(e, scalar::int(c));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn associative(a in arb_sn(2, 3), b in arb_sn(2, 3), c in arb_sn(2, 3)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn eta_anti(a in arb_sn(1, 4), b in arb_sn(1, 4)) {
            prop_assert_eq!(eta(&a.mul(&b)), eta(&b).mul(&eta(&a)));
            prop_assert_eq!(eta(&eta(&a)), a);
        }

        #[test]
        fn laurent_hom(a in arb_sn(2, 3), b in arb_sn(2, 3)) {
            prop_assert_eq!(laurent_image(&a.mul(&b)), laurent_image(&a).mul(&laurent_image(&b)));
        }

        #[test]
        fn decomposition_round_trip(a in arb_sn(1, 5)) {
            let d = decompose_s1(&a).unwrap();
            prop_assert_eq!(d.reassemble(), a);
        }

        #[test]
        fn actions_compose(a in arb_sn(1, 3), b in arb_sn(1, 3), p in arb_p(1)) {
            let ab = a.mul(&b);
            prop_assert_eq!(act_left_on_p(&ab, &p), act_left_on_p(&a, &act_left_on_p(&b, &p)));
            prop_assert_eq!(act_right_on_pprime(&p, &ab), act_right_on_pprime(&act_right_on_pprime(&p, &a), &b));
        }

        #[test]
        fn right_action_is_transported_left_action(a in arb_sn(2, 3), p in arb_p(2)) {
            // Exponent vectors do not record the variable name, so relabeling y <-> x is the identity here.
            prop_assert_eq!(act_right_on_pprime(&p, &a), act_left_on_p(&eta(&a), &p));
        }
    }
}
