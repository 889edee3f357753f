//! Dense univariate polynomials with rational coefficients.

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Var {
    H,
    X,
    Y,
    D,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::H => "H",
            Var::X => "x",
            Var::Y => "y",
            Var::D => "d",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
    var: Var,
}

impl UniPoly {
    pub fn zero(var: Var) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn constant(c: Scalar, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    pub fn one(var: Var) -> Self {
        Self::constant(scalar::one(), var)
    }

    /// The variable itself.
    pub fn x(var: Var) -> Self {
        Self::new(vec![scalar::zero(), scalar::one()], var)
    }

    pub fn monomial(c: Scalar, k: usize, var: Var) -> Self {
        let mut v = vec![scalar::zero(); k + 1];
        v[k] = c;
        Self::new(v, var)
    }

    /// `H + c`.
    pub fn linear(c: Scalar, var: Var) -> Self {
        Self::new(vec![c, scalar::one()], var)
    }

    pub fn new(mut coeffs: Vec<Scalar>, var: Var) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, var }
    }

    pub fn from_ints(c: &[i64], var: Var) -> Self {
        Self::new(c.iter().map(|&k| scalar::int(k)).collect(), var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(scalar::zero)
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn eval_i64(&self, at: i64) -> Scalar {
        self.eval(&scalar::int(at))
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect();
        UniPoly::new(v, self.var)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k) - o.coeff(k)).collect();
        UniPoly::new(v, self.var)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect(), self.var)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut v = vec![scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v, self.var)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `p(X + c)`.
    pub fn shift_by(&self, c: &Scalar) -> UniPoly {
        let lin = UniPoly::linear(c.clone(), self.var);
        let mut acc = UniPoly::zero(self.var);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UniPoly::constant(a.clone(), self.var));
        }
        acc
    }

    /// `p(X + i)`.
    pub fn shift(&self, i: i64) -> UniPoly {
        self.shift_by(&scalar::int(i))
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.var), self.clone());
        }
        let mut q = vec![scalar::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(q, self.var), UniPoly::new(rem, self.var))
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let l = a.leading();
            a.scale(&(scalar::one() / l))
        }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(scalar::one() / self.leading()))
    }

    pub fn derivative(&self) -> UniPoly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * scalar::int(k as i64))
            .collect();
        UniPoly::new(v, self.var)
    }

    /// Integer multiple with coprime integer coefficients.
    fn integerized(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        self.coeffs.iter().map(|c| (c * &l).to_integer()).collect()
    }

    /// All integer roots, ascending.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ints = self.integerized();
        let mut out = BTreeSet::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            out.insert(0i64);
        }
        let trailing = ints[low].abs();
        let lead = ints.last().unwrap().abs();
        // Cauchy bound on the magnitude of any root.
        let mut bound = BigInt::zero();
        for c in &ints[low..ints.len() - 1] {
            let q = (c.abs() + &lead - BigInt::one()) / &lead;
            if q > bound {
                bound = q;
            }
        }
        bound += 1;
        let cap = if bound < trailing {
            bound
        } else {
            trailing.clone()
        };
        let cap: i64 = num_traits::ToPrimitive::to_i64(&cap)
            .unwrap_or(i64::MAX)
            .min(1 << 24);
        for d in 1..=cap {
            if !(&trailing % BigInt::from(d)).is_zero() {
                continue;
            }
            for r in [d, -d] {
                if self.eval_i64(r).is_zero() {
                    out.insert(r);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Roots in {1, 2, 3, ...}.
    pub fn natplus_roots(&self) -> Result<Vec<i64>> {
        Ok(self
            .integer_roots()?
            .into_iter()
            .filter(|&r| r >= 1)
            .collect())
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Scalar, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let v = self.var.symbol();
                let m = match k {
                    0 => String::new(),
                    1 => v.to_string(),
                    _ => format!("{v}^{k}"),
                };
                (c.clone(), m)
            })
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

/// Renders `c1*m1 + c2*m2 - ...`; an empty monomial string means a constant.
pub fn join_terms(terms: &[(Scalar, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (c, m)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(m);
        } else {
            s.push_str(&format!("{a}*{m}"));
        }
    }
    s
}

pub fn poly_shift(p: &UniPoly, i: i64) -> UniPoly {
    p.shift(i)
}

pub fn natplus_roots(p: &UniPoly) -> Result<Vec<i64>> {
    p.natplus_roots()
}

/// Least `i >= 0` such that `p(H+i)` has no root in {1, 2, ...}.
pub fn mu_of_poly(p: &UniPoly) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut i = 0u64;
    loop {
        if p.shift(i as i64).natplus_roots()?.is_empty() {
            return Ok(i);
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::H)
    }

    #[test]
    fn shift_examples() {
        assert_eq!(poly_shift(&h(&[-3, 1]), 1), h(&[-2, 1]));
        assert_eq!(poly_shift(&h(&[0, 0, 1]), 0), h(&[0, 0, 1]));
        assert_eq!(poly_shift(&h(&[-1, 0, 1]), 2), h(&[3, 4, 1]));
    }

    #[test]
    fn root_examples() {
        assert_eq!(natplus_roots(&h(&[-3, 1])).unwrap(), vec![3]);
        assert!(natplus_roots(&h(&[2, 1])).unwrap().is_empty());
        let p = h(&[-1, 1]).mul(&h(&[-4, 1]));
        assert_eq!(natplus_roots(&p).unwrap(), vec![1, 4]);
        assert_eq!(
            natplus_roots(&UniPoly::zero(Var::H)),
            Err(Error::ZeroPolynomial)
        );
        // rational coefficients
        let q = UniPoly::new(vec![scalar::frac(-3, 2), scalar::frac(1, 2)], Var::H);
        assert_eq!(natplus_roots(&q).unwrap(), vec![3]);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_of_poly(&h(&[-3, 1])).unwrap(), 3);
        assert_eq!(mu_of_poly(&h(&[5, 1])).unwrap(), 0);
        assert_eq!(mu_of_poly(&h(&[-1, 1]).mul(&h(&[-4, 1]))).unwrap(), 4);
    }

    #[test]
    fn display() {
        assert_eq!(h(&[1, -3, 1]).to_string(), "H^2 - 3*H + 1");
        assert_eq!(h(&[]).to_string(), "0");
        assert_eq!(h(&[0, -1]).to_string(), "-H");
    }

    #[test]
    fn division() {
        let a = h(&[-1, 0, 1]);
        let (q, r) = a.div_rem(&h(&[1, 1]));
        assert_eq!(q, h(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&h(&[-1, 1])), h(&[-1, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|v| h(&v))
    }

    proptest! {
        #[test]
        fn shift_composes(p in arb_poly(), i in -4i64..5, j in -4i64..5) {
            prop_assert_eq!(p.shift(i).shift(j), p.shift(i + j));
        }

        #[test]
        fn mu_zero_iff_no_roots(p in arb_poly()) {
            prop_assume!(!p.is_zero());
            let mu = mu_of_poly(&p).unwrap();
            let roots = natplus_roots(&p).unwrap();
            prop_assert_eq!(mu == 0, roots.is_empty());
            prop_assert_eq!(mu, roots.last().copied().unwrap_or(0) as u64);
        }

        #[test]
        fn roots_are_roots(p in arb_poly(), r in 1i64..6) {
            let q = p.mul(&h(&[-r, 1]));
            prop_assume!(!q.is_zero());
            prop_assert!(natplus_roots(&q).unwrap().contains(&r));
        }
    }
}
