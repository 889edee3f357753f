//! Rational functions in H whose denominators are products of shifted
//! linear factors `(H+k)`. `LFraction` is the subring with all `k >= 0`.

use super::scalar::{self, Scalar};
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// `num / prod_k (H+k)^{den[k]}`, reduced: no `(H+k)` in `den` divides `num`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalH {
    num: UniPoly,
    den: BTreeMap<i64, u32>,
}

impl RationalH {
    pub fn new(num: UniPoly, den: BTreeMap<i64, u32>) -> Self {
        let mut r = RationalH {
            num: num.with_var(Var::H),
            den,
        };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero(Var::H))
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one(Var::H))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(UniPoly::constant(c, Var::H))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalH {
            num: p.with_var(Var::H),
            den: BTreeMap::new(),
        }
    }

    /// `(H+k)^{-e}`.
    pub fn inv_linear(k: i64, e: u32) -> Self {
        let mut den = BTreeMap::new();
        if e > 0 {
            den.insert(k, e);
        }
        RationalH {
            num: UniPoly::one(Var::H),
            den,
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<i64> = self.den.keys().copied().collect();
        for k in keys {
            let lin = UniPoly::linear(scalar::int(k), Var::H);
            let e = self.den.get_mut(&k).unwrap();
            while *e > 0 && self.num.eval_i64(-k).is_zero() {
                self.num = self.num.div_rem(&lin).0;
                *e -= 1;
            }
            if *e == 0 {
                self.den.remove(&k);
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &BTreeMap<i64, u32> {
        &self.den
    }

    pub fn den_poly(&self) -> UniPoly {
        let mut p = UniPoly::one(Var::H);
        for (&k, &e) in &self.den {
            p = p.mul(&UniPoly::linear(scalar::int(k), Var::H).pow(e));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.den.is_empty() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// True when every denominator factor is `(H+k)` with `k >= 0`.
    pub fn in_l(&self) -> bool {
        self.den.keys().all(|&k| k >= 0)
    }

    pub fn add(&self, o: &RationalH) -> RationalH {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&k, &e) in &o.den {
            let slot = den.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |r: &RationalH| {
            let mut p = r.num.clone();
            for (&k, &e) in &den {
                let have = r.den.get(&k).copied().unwrap_or(0);
                if e > have {
                    p = p.mul(&UniPoly::linear(scalar::int(k), Var::H).pow(e - have));
                }
            }
            p
        };
        RationalH::new(lift(self).add(&lift(o)), den)
    }

    pub fn neg(&self) -> RationalH {
        RationalH {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &RationalH) -> RationalH {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> RationalH {
        RationalH::new(self.num.scale(c), self.den.clone())
    }

    pub fn mul(&self, o: &RationalH) -> RationalH {
        if self.is_zero() || o.is_zero() {
            return RationalH::zero();
        }
        let mut den = self.den.clone();
        for (&k, &e) in &o.den {
            *den.entry(k).or_insert(0) += e;
        }
        RationalH::new(self.num.mul(&o.num), den)
    }

    pub fn mul_poly(&self, p: &UniPoly) -> RationalH {
        self.mul(&RationalH::from_poly(p.clone()))
    }

    /// `r(H + i)`.
    pub fn shift(&self, i: i64) -> RationalH {
        let den = self.den.iter().map(|(&k, &e)| (k + i, e)).collect();
        RationalH {
            num: self.num.shift(i),
            den,
        }
    }

    /// Value at a point, `None` at a pole.
    pub fn eval(&self, at: &Scalar) -> Option<Scalar> {
        let d = self.den_poly().eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }

    pub fn eval_i64(&self, at: i64) -> Option<Scalar> {
        self.eval(&scalar::int(at))
    }

    /// Inverse, provided the numerator splits into integer-rooted linear factors.
    pub fn invert(&self) -> Result<RationalH> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut rest = self.num.clone();
        let mut factors: BTreeMap<i64, u32> = BTreeMap::new();
        while rest.degree().unwrap() > 0 {
            let roots = rest.integer_roots()?;
            let Some(&r) = roots.first() else {
                return Err(Error::NotInvertibleInL);
            };
            rest = rest.div_rem(&UniPoly::linear(scalar::int(-r), Var::H)).0;
            *factors.entry(-r).or_insert(0) += 1;
        }
        let c = rest.coeff(0);
        let mut num = UniPoly::constant(scalar::one() / c, Var::H);
        for (&k, &e) in &self.den {
            num = num.mul(&UniPoly::linear(scalar::int(k), Var::H).pow(e));
        }
        Ok(RationalH::new(num, factors))
    }

    /// Coefficients `c_1..c_e` of the principal part at the pole `H = p`,
    /// i.e. `r = sum_r c_r / (H-p)^r + (regular at p)`.
    pub fn principal_part(&self, p: i64) -> Vec<Scalar> {
        let e = self.den.get(&(-p)).copied().unwrap_or(0) as usize;
        if e == 0 {
            return Vec::new();
        }
        // Series in t = H - p, truncated at order e.
        let mut series: Vec<Scalar> = (0..e).map(|s| self.num.shift(p).coeff(s)).collect();
        for (&k, &m) in &self.den {
            if k == -p {
                continue;
            }
            let a = scalar::int(p + k);
            // (a + t)^{-1} = sum_s (-1)^s t^s / a^{s+1}
            let mut inv = Vec::with_capacity(e);
            let mut term = scalar::one() / &a;
            for _ in 0..e {
                inv.push(term.clone());
                term = -term / &a;
            }
            for _ in 0..m {
                series = series_mul(&series, &inv, e);
            }
        }
        (1..=e).map(|r| series[e - r].clone()).collect()
    }

    /// Split into the principal parts at poles `H >= 1` and a remainder whose
    /// poles all lie at `H <= 0`.
    pub fn split_positive_poles(&self) -> (RationalH, RationalH) {
        let mut pos = RationalH::zero();
        for &k in self.den.keys() {
            if k < 0 {
                let p = -k;
                for (r, c) in self.principal_part(p).into_iter().enumerate() {
                    if !c.is_zero() {
                        pos = pos.add(&RationalH::inv_linear(k, r as u32 + 1).scale(&c));
                    }
                }
            }
        }
        let rest = self.sub(&pos);
        (pos, rest)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let num: Vec<String> = self.num.coeffs().iter().map(scalar::fmt_scalar).collect();
        let den: serde_json::Map<String, serde_json::Value> = self
            .den
            .iter()
            .map(|(k, e)| (k.to_string(), (*e).into()))
            .collect();
        serde_json::json!({ "num": num, "den": den })
    }
}

fn series_mul(a: &[Scalar], b: &[Scalar], n: usize) -> Vec<Scalar> {
    let mut out = vec![scalar::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

impl fmt::Display for RationalH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let n = &self.num;
        let nterms = n.coeffs().iter().filter(|c| !c.is_zero()).count();
        let mut s = if n.is_constant() && n.coeff(0).is_one() {
            String::new()
        } else if nterms > 1 || n.coeff(n.degree().unwrap()) < scalar::zero() {
            format!("({n})")
        } else {
            n.to_string()
        };
        for (&k, &e) in &self.den {
            if !s.is_empty() {
                s.push('*');
            }
            if k == 0 {
                s.push_str("Hinv");
            } else {
                s.push_str(&format!("Hinv[{k}]"));
            }
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        write!(f, "{s}")
    }
}

/// Element of `L = K[H^{±1}, (H+1)^{-1}, (H+2)^{-1}, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LFraction(RationalH);

impl LFraction {
    pub fn new(r: RationalH) -> Result<Self> {
        if r.in_l() {
            Ok(LFraction(r))
        } else {
            Err(Error::BackwardShiftOutOfL)
        }
    }

    pub fn zero() -> Self {
        LFraction(RationalH::zero())
    }

    pub fn one() -> Self {
        LFraction(RationalH::one())
    }

    pub fn constant(c: Scalar) -> Self {
        LFraction(RationalH::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        LFraction(RationalH::from_poly(p))
    }

    /// `(H+k)^{-e}`, `k >= 0`.
    pub fn inv_linear(k: u32, e: u32) -> Self {
        LFraction(RationalH::inv_linear(k as i64, e))
    }

    pub fn h() -> Self {
        Self::from_poly(UniPoly::x(Var::H))
    }

    pub fn inner(&self) -> &RationalH {
        &self.0
    }

    pub fn into_inner(self) -> RationalH {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        LFraction(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        LFraction(self.0.sub(&o.0))
    }

    pub fn neg(&self) -> Self {
        LFraction(self.0.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        LFraction(self.0.mul(&o.0))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LFraction(self.0.scale(c))
    }

    /// `a(H + i)`; any `i >= 0` stays in L.
    pub fn shift(&self, i: u64) -> Self {
        LFraction(self.0.shift(i as i64))
    }

    /// `a(H + i)` for any integer `i`, failing when the result leaves L.
    pub fn shift_signed(&self, i: i64) -> Result<Self> {
        LFraction::new(self.0.shift(i))
    }

    pub fn invert(&self) -> Result<Self> {
        let r = self.0.invert().map_err(|e| match e {
            Error::ZeroElement => Error::ZeroElement,
            _ => Error::NotInvertibleInL,
        })?;
        LFraction::new(r).map_err(|_| Error::NotInvertibleInL)
    }

    pub fn eval_i64(&self, at: i64) -> Option<Scalar> {
        self.0.eval_i64(at)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0.to_json()
    }
}

impl fmt::Display for LFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn lfrac_mul(a: &LFraction, b: &LFraction) -> LFraction {
    a.mul(b)
}

pub fn lfrac_add(a: &LFraction, b: &LFraction) -> LFraction {
    a.add(b)
}

pub fn lfrac_shift(a: &LFraction, i: i64) -> Result<LFraction> {
    a.shift_signed(i)
}

pub fn lfrac_invert(a: &LFraction) -> Result<LFraction> {
    a.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hp(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::H)
    }

    #[test]
    fn examples() {
        let a = LFraction::inv_linear(1, 1).mul(&LFraction::from_poly(hp(&[1, 1])));
        assert_eq!(a, LFraction::one());
        assert_eq!(
            lfrac_shift(&LFraction::inv_linear(0, 1), 1).unwrap(),
            LFraction::inv_linear(1, 1)
        );
        assert_eq!(
            lfrac_invert(&LFraction::from_poly(hp(&[-2, 1]))),
            Err(Error::NotInvertibleInL)
        );
        assert_eq!(
            lfrac_shift(&LFraction::inv_linear(0, 1), -1),
            Err(Error::BackwardShiftOutOfL)
        );
        // (H^2+3H+2)/2 inverts to 2 H^{-1}... no: 2 (H+1)^{-1}(H+2)^{-1}
        let p = LFraction::from_poly(hp(&[2, 3, 1]).scale(&scalar::frac(1, 2)));
        let inv = p.invert().unwrap();
        assert_eq!(inv.mul(&p), LFraction::one());
        assert_eq!(inv.to_string(), "2*Hinv[1]*Hinv[2]");
    }

    #[test]
    fn reduced_form() {
        let r = RationalH::new(hp(&[0, 1]), BTreeMap::from([(0, 2)]));
        assert_eq!(r, RationalH::inv_linear(0, 1));
        assert_eq!(
            LFraction::constant(scalar::int(3)).sub(&LFraction::constant(scalar::int(3))),
            LFraction::zero()
        );
        assert!(LFraction::zero().inner().den().is_empty());
    }

    #[test]
    fn principal_parts() {
        // 1/((H-2)^2 (H+1)) near H=2: t = H-2, 1/(t^2 (3+t)) = 1/(3t^2) - 1/(9t) + ...
        let r = RationalH::new(hp(&[1]), BTreeMap::from([(-2, 2), (1, 1)]));
        assert_eq!(
            r.principal_part(2),
            vec![scalar::frac(-1, 9), scalar::frac(1, 3)]
        );
        let (pos, rest) = r.split_positive_poles();
        assert!(rest.in_l());
        assert_eq!(pos.add(&rest), r);
        assert!(!rest.den().contains_key(&-2));
    }

    #[test]
    fn json_and_display() {
        let a = LFraction::from_poly(hp(&[-2, 1])).mul(&LFraction::inv_linear(0, 2));
        assert_eq!(a.to_string(), "(H - 2)*Hinv^2");
        assert_eq!(
            a.to_json().to_string(),
            r#"{"den":{"0":2},"num":["-2","1"]}"#
        );
    }

    fn arb_l() -> impl Strategy<Value = LFraction> {
        (
            prop::collection::vec(-3i64..=3, 0..4),
            prop::collection::vec((0u32..4, 0u32..3), 0..3),
        )
            .prop_map(|(n, d)| {
                let mut a = LFraction::from_poly(hp(&n));
                for (k, e) in d {
                    a = a.mul(&LFraction::inv_linear(k, e));
                }
                a
            })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_l(), b in arb_l(), c in arb_l()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        }

        #[test]
        fn shift_is_endomorphism(a in arb_l(), b in arb_l(), i in 0u64..4) {
            prop_assert_eq!(a.mul(&b).shift(i), a.shift(i).mul(&b.shift(i)));
            prop_assert_eq!(a.add(&b).shift(i), a.shift(i).add(&b.shift(i)));
        }

        #[test]
        fn split_reassembles(a in arb_l(), p in 1i64..4, e in 1u32..3) {
            let r = a.inner().mul(&RationalH::inv_linear(-p, e));
            let (pos, rest) = r.split_positive_poles();
            prop_assert_eq!(pos.add(&rest), r);
            prop_assert!(rest.in_l());
        }
    }
}
