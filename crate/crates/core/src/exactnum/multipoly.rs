//! Multivariate polynomials, rational functions and Laurent polynomials.

use super::scalar::{self, Scalar};
use super::unipoly::{join_terms, UniPoly, Var};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, scalar::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Scalar) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        assert_eq!(exps.len(), self.nvars);
        let slot = self.terms.entry(exps.clone()).or_insert_with(scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        self.scale(&-scalar::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            p.add_term(e.clone(), a * c);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &o.terms {
                let e = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                p.add_term(e, a * b);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `H_i -> H_i + c`.
    pub fn shift_var(&self, i: usize, c: &Scalar) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            let k = e[i];
            // (H + c)^k = sum_j binom(k,j) c^{k-j} H^j
            let mut binom = scalar::one();
            for j in (0..=k).rev() {
                let mut ne = e.clone();
                ne[i] = j;
                let cp = pow_scalar(c, k - j);
                out.add_term(ne, a * &binom * cp);
                // binom(k, j-1) = binom(k, j) * j / (k - j + 1)
                binom = binom * scalar::int(j as i64) / scalar::int((k - j + 1) as i64);
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, at: &[Scalar]) -> Scalar {
        let mut acc = scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in at.iter().zip(e) {
                t *= pow_scalar(x, k);
            }
            acc += t;
        }
        acc
    }

    fn min_exponents(&self) -> Vec<u32> {
        let mut m = vec![u32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        if self.terms.is_empty() {
            vec![0; self.nvars]
        } else {
            m
        }
    }

    fn divide_monomial(&self, m: &[u32]) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone());
        }
        p
    }

    fn to_unipoly(&self) -> UniPoly {
        assert_eq!(self.nvars, 1);
        let d = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut v = vec![scalar::zero(); d + 1];
        for (e, c) in &self.terms {
            v[e[0] as usize] = c.clone();
        }
        UniPoly::new(v, Var::Y)
    }

    fn from_unipoly(p: &UniPoly) -> Self {
        let mut q = Self::zero(1);
        for (k, c) in p.coeffs().iter().enumerate() {
            q.add_term(vec![k as u32], c.clone());
        }
        q
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| lex_cmp(b.0, a.0));
        let terms: Vec<(Scalar, String)> = items
            .into_iter()
            .map(|(e, c)| {
                let m: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{k}", names[i])
                        }
                    })
                    .collect();
                (c.clone(), m.join("*"))
            })
            .collect();
        join_terms(&terms)
    }
}

fn pow_scalar(c: &Scalar, k: u32) -> Scalar {
    let mut acc = scalar::one();
    for _ in 0..k {
        acc *= c;
    }
    acc
}

/// Lex comparison with the last variable most significant.
pub fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Leading coefficient and multidegree under `H_1 < ... < H_n`.
pub fn lex_leading(p: &MultiPoly) -> Result<(Scalar, Vec<u32>)> {
    p.terms
        .iter()
        .max_by(|a, b| lex_cmp(a.0, b.0))
        .map(|(e, c)| (c.clone(), e.clone()))
        .ok_or(Error::ZeroPolynomial)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `sigma_i(H_i) = H_i - mu_i`
    Backward,
    /// `tau_i(H_i) = H_i + mu_i`
    Forward,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftSpec {
    steps: Vec<Scalar>,
    direction: Direction,
}

impl ShiftSpec {
    pub fn new(steps: Vec<Scalar>, direction: Direction) -> Result<Self> {
        if steps.iter().any(|s| s.is_zero()) {
            return Err(Error::Usage("shift steps must be nonzero".into()));
        }
        Ok(ShiftSpec { steps, direction })
    }

    pub fn unit(n: usize) -> Self {
        ShiftSpec {
            steps: vec![scalar::one(); n],
            direction: Direction::Backward,
        }
    }

    pub fn steps(&self) -> &[Scalar] {
        &self.steps
    }

    fn offset(&self, i: usize) -> Scalar {
        match self.direction {
            Direction::Backward => -self.steps[i].clone(),
            Direction::Forward => self.steps[i].clone(),
        }
    }

    pub fn apply(&self, p: &MultiPoly, i: usize) -> MultiPoly {
        p.shift_var(i, &self.offset(i))
    }
}

/// `prod_i (1 - sigma_i)^{d_i} phi`.
pub fn finite_difference(phi: &MultiPoly, d: &[u32], spec: &ShiftSpec) -> Result<MultiPoly> {
    if d.len() != phi.nvars() {
        return Err(Error::DimensionMismatch(d.len(), phi.nvars()));
    }
    if spec.steps.len() != phi.nvars() {
        return Err(Error::DimensionMismatch(spec.steps.len(), phi.nvars()));
    }
    let mut p = phi.clone();
    for (i, &k) in d.iter().enumerate() {
        for _ in 0..k {
            p = p.sub(&spec.apply(&p, i));
        }
    }
    Ok(p)
}

/// `num/den` in `K(y_1..y_n)`. Denominators are made monic at their lex-leading
/// term and common monomial factors are cancelled; for one variable the pair is
/// fully reduced by a polynomial gcd. Equality is cross-multiplication.
#[derive(Debug, Clone)]
pub struct MultiRational {
    num: MultiPoly,
    den: MultiPoly,
}

impl MultiRational {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroImage);
        }
        let mut r = MultiRational { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        MultiRational::new(p, MultiPoly::one(n)).unwrap()
    }

    fn normalize(&mut self) {
        let n = self.num.nvars();
        if self.num.is_zero() {
            self.den = MultiPoly::one(n);
            return;
        }
        let a = self.num.min_exponents();
        let b = self.den.min_exponents();
        let m: Vec<u32> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
        self.num = self.num.divide_monomial(&m);
        self.den = self.den.divide_monomial(&m);
        if n == 1 {
            let (pn, pd) = (self.num.to_unipoly(), self.den.to_unipoly());
            let g = pn.gcd(&pd);
            self.num = MultiPoly::from_unipoly(&pn.div_rem(&g).0);
            self.den = MultiPoly::from_unipoly(&pd.div_rem(&g).0);
        }
        let lead = lex_leading(&self.den).unwrap().0;
        let inv = scalar::one() / lead;
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        MultiRational::new(num, self.den.mul(&o.den)).unwrap()
    }

    pub fn mul(&self, o: &Self) -> Self {
        MultiRational::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn inv(&self) -> Result<Self> {
        MultiRational::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn render(&self, names: &[String]) -> String {
        let n = self.num.render(names);
        if self.den == MultiPoly::one(self.den.nvars()) {
            return n;
        }
        let wrap = |p: &MultiPoly, s: String| {
            if p.terms().len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(&self.num, n),
            wrap(&self.den, self.den.render(names))
        )
    }
}

impl PartialEq for MultiRational {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

/// Laurent polynomial in `t_1..t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: Scalar) {
        let slot = self.terms.entry(e.clone()).or_insert_with(scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &o.terms {
                p.add_term(e1.iter().zip(e2).map(|(x, y)| x + y).collect(), a * b);
            }
        }
        p
    }

    /// Substitute `t_i -> y_i^{-1}`, giving an element of `K(y)`.
    pub fn to_rational_in_inverse(&self) -> MultiRational {
        let n = self.nvars;
        if self.is_zero() {
            return MultiRational::from_poly(MultiPoly::zero(n));
        }
        // t^e = y^{-e}; multiply through by y^{max e}
        let mut top = vec![0i64; n];
        for e in self.terms.keys() {
            for (m, &k) in top.iter_mut().zip(e) {
                *m = (*m).max(k);
            }
        }
        let mut num = MultiPoly::zero(n);
        for (e, c) in &self.terms {
            num.add_term(
                e.iter().zip(&top).map(|(k, m)| (m - k) as u32).collect(),
                c.clone(),
            );
        }
        let den = MultiPoly::monomial(top.iter().map(|&m| m as u32).collect(), scalar::one());
        MultiRational::new(num, den).unwrap()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = if self.nvars == 1 {
            vec!["t".into()]
        } else {
            (1..=self.nvars).map(|i| format!("t{i}")).collect()
        };
        let terms: Vec<(Scalar, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{k}", names[i])
                        }
                    })
                    .collect();
                (c.clone(), m.join("*"))
            })
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

pub fn is_one(p: &MultiPoly) -> bool {
    p.terms().len() == 1
        && p.terms()
            .get(&vec![0; p.nvars()])
            .is_some_and(|c| c.is_one())
}
