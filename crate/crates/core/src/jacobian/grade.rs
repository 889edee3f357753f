//! Grade decomposition: every graded component acts diagonally up to a
//! power of `x` or `d`, so it is described by one function `f(m)` on `N`.

use super::A1Element;
use crate::error::{Error, Result};
use crate::exactnum::scalar::{self, Scalar};
use crate::exactnum::{LFraction, RationalH, UniPoly, Var};
use num_traits::Zero;
use std::collections::BTreeMap;

/// `(H-1)(H-2)...(H-e)`, i.e. `fall(m, e)` at `H = m + 1`.
pub(crate) fn fall_poly(e: u32) -> UniPoly {
    let mut p = UniPoly::one(Var::H);
    for s in 1..=e as i64 {
        p = p.mul(&UniPoly::linear(scalar::int(-s), Var::H));
    }
    p
}

/// `(H-1)...(H-p+1)`.
fn p_poly(p: u32) -> UniPoly {
    fall_poly(p.saturating_sub(1))
}

/// `(H-1)...(H-i+1) / (H-i)^{j-1}`: the eigenfunction of `x^i H^{-j} d^i` for `m >= i`.
pub(crate) fn perp_function(i: u32, j: u32) -> RationalH {
    RationalH::from_poly(p_poly(i)).mul(&RationalH::inv_linear(-(i as i64), j - 1))
}

/// Value of `x^i H^{-j} d^i` on `x^m`.
fn perp_value(i: u32, j: u32, m: u32) -> Scalar {
    if m < i {
        return scalar::zero();
    }
    let base = scalar::int((m - i) as i64 + 1);
    let mut v = scalar::falling(m as i64, i as u64);
    for _ in 0..j {
        v /= &base;
    }
    v
}

/// One graded component `x^g D` (g >= 0) or `D d^{-g}` (g < 0) with `D` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1Component {
    /// `f(m) = r(m + 1)` for `m >= early.len()`.
    pub r: RationalH,
    /// `f(0), ..., f(start - 1)`, trimmed to where `r` disagrees.
    pub early: Vec<Scalar>,
    /// `L`-part of the split `D = l + sum lambda_ij x^i H^{-j} d^i`.
    pub l: LFraction,
    /// `lambda_ij`, keyed `(i, j)`.
    pub perp: BTreeMap<(u32, u32), Scalar>,
}

impl D1Component {
    fn from_terms(terms: &[(u32, &LFraction)]) -> Result<Self> {
        let mut r = RationalH::zero();
        let start = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        for (e, g) in terms {
            let shifted = g.inner().shift(-(*e as i64));
            r = r.add(&shifted.mul_poly(&fall_poly(*e)));
        }
        let mut early = Vec::with_capacity(start as usize);
        for m in 0..start {
            let mut v = scalar::zero();
            for (e, g) in terms {
                if m >= *e {
                    let gv = g
                        .eval_i64((m - e) as i64 + 1)
                        .expect("no poles at positive arguments");
                    v += scalar::falling(m as i64, *e as u64) * gv;
                }
            }
            early.push(v);
        }
        while let Some(last) = early.last() {
            match r.eval_i64(early.len() as i64) {
                Some(v) if &v == last => {
                    early.pop();
                }
                _ => break,
            }
        }
        let (l, perp) = split_d1(&r, &early)?;
        Ok(D1Component { r, early, l, perp })
    }

    /// `f(m)`.
    pub fn value(&self, m: u32) -> Scalar {
        match self.early.get(m as usize) {
            Some(v) => v.clone(),
            None => self
                .r
                .eval_i64(m as i64 + 1)
                .expect("no poles beyond the exception range"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.early.iter().all(|v| v.is_zero())
    }

    /// Finite support (the component lies in `F`).
    pub fn in_f(&self) -> bool {
        self.r.is_zero()
    }

    /// Support of `f` when it is finite.
    pub fn finite_support(&self) -> Option<Vec<u32>> {
        self.in_f().then(|| {
            (0..self.early.len() as u32)
                .filter(|&m| !self.early[m as usize].is_zero())
                .collect()
        })
    }

    /// `delta(l^perp)`: largest `i` with some `lambda_ij != 0`.
    pub fn delta(&self) -> u32 {
        self.perp.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `phi(l^perp) = sum lambda_ij (H-1)...(H-i+1)/(H-i)^{j-1}`.
    pub fn phi(&self) -> RationalH {
        let mut acc = RationalH::zero();
        for (&(i, j), c) in &self.perp {
            acc = acc.add(&perp_function(i, j).scale(c));
        }
        acc
    }
}

/// Split `f` into `l` in `L` and `sum lambda_ij x^i H^{-j} d^i`.
type Perp = BTreeMap<(u32, u32), Scalar>;

fn split_d1(r: &RationalH, early: &[Scalar]) -> Result<(LFraction, Perp)> {
    let mut perp: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
    let mut rest = r.clone();
    for (&k, _) in r.den().iter().filter(|(k, _)| **k < 0) {
        let p = (-k) as u32;
        let mut c = r.principal_part(p as i64);
        // Taylor coefficients of P_p at H = p.
        let pi = p_poly(p).shift(p as i64);
        for order in (1..=c.len()).rev() {
            let lead = c[order - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let lam = lead / pi.coeff(0);
            for q in 1..=order {
                c[q - 1] -= &lam * pi.coeff(order - q);
            }
            perp.insert((p, order as u32 + 1), lam);
        }
    }
    for (&(i, j), c) in &perp {
        rest = rest.sub(&perp_function(i, j).scale(c));
    }
    if !rest.in_l() {
        return Err(Error::UnsplittableComponent(rest.to_string()));
    }
    let mut l = rest.clone();
    for (m, v) in early.iter().enumerate() {
        let m = m as u32;
        let mut fm = v.clone();
        for (&(i, j), c) in perp.iter().filter(|((_, j), _)| *j >= 2) {
            fm -= c * perp_value(i, j, m);
        }
        let exc = fm
            - rest
                .eval_i64(m as i64 + 1)
                .expect("L has no poles at positive arguments");
        if !exc.is_zero() {
            let lam = -exc / scalar::factorial(m as u64);
            l = l.sub(&RationalH::from_poly(p_poly(m + 1)).scale(&lam));
            perp.insert((m + 1, 1), lam);
        }
    }
    Ok((LFraction::new(l)?, perp))
}

/// Components keyed by grade `a - b`; zero components are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeView {
    pub components: BTreeMap<i64, D1Component>,
}

pub fn grade_decompose(u: &A1Element) -> Result<GradeView> {
    let mut by_grade: BTreeMap<i64, Vec<(u32, &LFraction)>> = BTreeMap::new();
    for (&(a, b), g) in u.terms() {
        by_grade
            .entry(a as i64 - b as i64)
            .or_default()
            .push((a.min(b), g));
    }
    let mut components = BTreeMap::new();
    for (grade, terms) in by_grade {
        let c = D1Component::from_terms(&terms)?;
        if !c.is_zero() {
            components.insert(grade, c);
        }
    }
    Ok(GradeView { components })
}

impl GradeView {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, grade: i64) -> Option<&D1Component> {
        self.components.get(&grade)
    }

    /// Canonical spanning form.
    pub fn reassemble(&self) -> A1Element {
        let mut out = A1Element::zero();
        for (&g, c) in &self.components {
            let (up, down) = if g >= 0 {
                (g as u32, 0)
            } else {
                (0, (-g) as u32)
            };
            out.add_term(up, c.l.clone(), down);
            for (&(i, j), lam) in &c.perp {
                out.add_term(up + i, LFraction::inv_linear(0, j).scale(lam), i + down);
            }
        }
        out
    }

    /// Largest `n >= 0` whose grade `-n` component is not in `F`.
    pub fn top_nonf_negative(&self) -> Option<u32> {
        self.components
            .iter()
            .filter(|(g, c)| **g <= 0 && !c.in_f())
            .map(|(g, _)| (-g) as u32)
            .max()
    }

    /// Size of the pure `F` components at grades `-r`, `r > above`.
    pub fn f_size_below(&self, above: Option<u32>) -> i64 {
        let mut s = -1i64;
        for (&g, c) in &self.components {
            let r = -g;
            if r < 0 || above.is_some_and(|n| r <= n as i64) {
                continue;
            }
            if let Some(sup) = c.finite_support() {
                for t in sup {
                    s = s.max(t as i64 + r);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::{matrix_unit_a1, rho};

    #[test]
    fn simple_components() {
        let v = grade_decompose(&A1Element::hinv(0)).unwrap();
        let c = v.component(0).unwrap();
        assert_eq!(c.l, LFraction::inv_linear(0, 1));
        assert!(c.perp.is_empty());

        let v = grade_decompose(&A1Element::term(1, LFraction::inv_linear(0, 1), 1)).unwrap();
        let c = v.component(0).unwrap();
        assert!(c.l.is_zero());
        assert_eq!(c.perp.keys().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(c.delta(), 1);

        let u = A1Element::term(2, LFraction::inv_linear(0, 1), 0);
        let v = grade_decompose(&u).unwrap();
        assert_eq!(v.components.keys().copied().collect::<Vec<_>>(), vec![2]);

        // rho_{11} = x H^{-2} d: the L-part of its grade-0 function vanishes
        let c = grade_decompose(&rho(1, 1)).unwrap().components[&0].clone();
        assert!(c.l.is_zero());
        assert_eq!(c.perp.keys().copied().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn perp_split_matches_coordinates() {
        for i in 1..=3 {
            for j in 1..=3 {
                let v =
                    grade_decompose(&A1Element::term(i, LFraction::inv_linear(0, j), i)).unwrap();
                let c = v.component(0).unwrap();
                assert!(c.l.is_zero(), "({i},{j})");
                assert_eq!(c.perp.len(), 1);
                assert_eq!(c.perp.get(&(i, j)), Some(&scalar::one()));
            }
        }
    }

    #[test]
    fn matrix_units_are_finite() {
        for i in 0..4 {
            for j in 0..4 {
                let v = grade_decompose(&matrix_unit_a1(i, j)).unwrap();
                assert_eq!(v.components.len(), 1);
                let c = v.component(i as i64 - j as i64).unwrap();
                assert!(c.in_f());
                assert_eq!(c.finite_support(), Some(vec![i.min(j)]));
            }
        }
    }
}
