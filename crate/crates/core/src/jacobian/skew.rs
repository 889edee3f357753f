//! Image in the skew Laurent algebra `Frac-coefficients[d, d^{-1}]`, with
//! `d c(H) = c(H+1) d` and `x = d^{-1} H`; the kernel is `F`.

use super::A1Element;
use crate::exactnum::scalar;
use crate::exactnum::{RationalH, UniPoly, Var};
use std::collections::BTreeMap;
use std::fmt;

/// `sum c_k(H) d^k`, keyed by the exponent `k` of `d` (grade `-k`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkewLaurent {
    pub terms: BTreeMap<i64, RationalH>,
}

impl SkewLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: i64, c: RationalH) {
        let slot = self.terms.entry(k).or_insert_with(RationalH::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (&k, c) in &o.terms {
            s.add_term(k, c.clone());
        }
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut s = Self::zero();
        for (&k, c) in &self.terms {
            for (&l, e) in &o.terms {
                s.add_term(k + l, c.mul(&e.shift(k)));
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: serde_json::Map<_, _> = self
            .terms
            .iter()
            .map(|(k, c)| ((-k).to_string(), c.to_json()))
            .collect();
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for SkewLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&k, c)| {
                let cs = format!("({c})");
                match k {
                    0 => cs,
                    1 => format!("{cs}*d"),
                    _ => format!("{cs}*d^{k}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `x^a g d^b -> (H-a)...(H-1) g(H-a) d^{b-a}`.
pub fn skew_laurent_image(u: &A1Element) -> SkewLaurent {
    let mut s = SkewLaurent::zero();
    for (&(a, b), g) in u.terms() {
        let mut p = UniPoly::one(Var::H);
        for t in 1..=a as i64 {
            p = p.mul(&UniPoly::linear(scalar::int(-t), Var::H));
        }
        s.add_term(
            b as i64 - a as i64,
            g.inner().shift(-(a as i64)).mul_poly(&p),
        );
    }
    s
}
