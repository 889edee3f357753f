//! Evaluation of parsed expressions in each algebra.

use super::parse::Expr;
use crate::error::{Error, Result};
use crate::exactnum::scalar::{self, Scalar};
use crate::exactnum::{LFraction, UniPoly, Var};
use crate::intdiff::I1Element;
use crate::jacobian::{matrix_unit_a1, rho, A1Element};
use crate::onesided::{matrix_unit, SnElement};

pub trait Algebra {
    type Elem: Clone;

    fn scalar(&self, c: Scalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn generator(&self, name: &str, index: &[u32]) -> Option<Self::Elem>;

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.scalar(scalar::one());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn eval(&self, e: &Expr) -> Result<Self::Elem> {
        Ok(match e {
            Expr::Num(c) => self.scalar(c.clone()),
            Expr::Gen {
                name,
                index,
                offset,
            } => self.generator(name, index).ok_or_else(|| {
                if index.is_empty() {
                    Error::UnknownGenerator(name.clone())
                } else {
                    Error::Syntax {
                        offset: *offset,
                        msg: format!("`{name}` does not take {} indices", index.len()),
                    }
                }
            })?,
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.add(&self.eval(a)?, &self.neg(&self.eval(b)?)),
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Pow(a, k) => self.pow(&self.eval(a)?, *k),
        })
    }
}

/// `S_n`: `x`, `y` (n = 1), `x1..xn`, `y1..yn`, `E[alpha.., beta..]`.
pub struct SnAlgebra {
    pub n: usize,
}

fn indexed(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let i: usize = rest.parse().ok()?;
    (i >= 1 && rest == i.to_string()).then_some(i)
}

impl Algebra for SnAlgebra {
    type Elem = SnElement;

    fn scalar(&self, c: Scalar) -> SnElement {
        SnElement::constant(self.n, c)
    }
    fn add(&self, a: &SnElement, b: &SnElement) -> SnElement {
        a.add(b)
    }
    fn neg(&self, a: &SnElement) -> SnElement {
        a.neg()
    }
    fn mul(&self, a: &SnElement, b: &SnElement) -> SnElement {
        a.mul(b)
    }
    fn generator(&self, name: &str, index: &[u32]) -> Option<SnElement> {
        let n = self.n;
        match (name, index.len()) {
            ("x", 0) if n == 1 => Some(SnElement::x(1, 0)),
            ("y", 0) if n == 1 => Some(SnElement::y(1, 0)),
            ("E", k) if k == 2 * n => Some(matrix_unit(&index[..n], &index[n..])),
            (_, 0) => {
                if let Some(i) = indexed(name, 'x').filter(|&i| i <= n) {
                    Some(SnElement::x(n, i - 1))
                } else {
                    indexed(name, 'y')
                        .filter(|&i| i <= n)
                        .map(|i| SnElement::y(n, i - 1))
                }
            }
            _ => None,
        }
    }
}

/// `I_1`: `d`/`∂`, `i`/`int`/`∫`, `H`, `x`, `e[k,l]` (alias `E[k,l]`).
pub struct I1Algebra;

impl Algebra for I1Algebra {
    type Elem = I1Element;

    fn scalar(&self, c: Scalar) -> I1Element {
        I1Element::constant(c)
    }
    fn add(&self, a: &I1Element, b: &I1Element) -> I1Element {
        a.add(b)
    }
    fn neg(&self, a: &I1Element) -> I1Element {
        a.neg()
    }
    fn mul(&self, a: &I1Element, b: &I1Element) -> I1Element {
        a.mul(b)
    }
    fn generator(&self, name: &str, index: &[u32]) -> Option<I1Element> {
        match (name, index) {
            ("d" | "∂", []) => Some(I1Element::d()),
            ("i" | "int" | "∫", []) => Some(I1Element::int()),
            ("H", []) => Some(I1Element::h()),
            ("x", []) => Some(I1Element::x()),
            ("e" | "E", [k, l]) => Some(I1Element::e(*k, *l)),
            _ => None,
        }
    }
}

/// `A_1`: `x`, `d`/`∂`, `H`, `Hinv`, `Hinv[k]` = `(H+k)^{-1}`, `int`/`∫`, `E[i,j]`, `rho[j,i]`.
pub struct A1Algebra;

impl Algebra for A1Algebra {
    type Elem = A1Element;

    fn scalar(&self, c: Scalar) -> A1Element {
        A1Element::constant(c)
    }
    fn add(&self, a: &A1Element, b: &A1Element) -> A1Element {
        a.add(b)
    }
    fn neg(&self, a: &A1Element) -> A1Element {
        a.neg()
    }
    fn mul(&self, a: &A1Element, b: &A1Element) -> A1Element {
        a.mul(b)
    }
    fn generator(&self, name: &str, index: &[u32]) -> Option<A1Element> {
        match (name, index) {
            ("x", []) => Some(A1Element::x()),
            ("d" | "∂", []) => Some(A1Element::d()),
            ("H", []) => Some(A1Element::h()),
            ("Hinv", []) => Some(A1Element::hinv(0)),
            ("Hinv", [k]) => Some(A1Element::hinv(*k)),
            ("int" | "∫", []) => Some(A1Element::int()),
            ("E" | "e", [i, j]) => Some(matrix_unit_a1(*i, *j)),
            ("rho", [j, i]) => Some(rho(*j, *i)),
            _ => None,
        }
    }
}

/// Polynomials in one variable, for module arguments (`x` or `d`).
pub struct PolyAlgebra {
    pub var: Var,
}

impl Algebra for PolyAlgebra {
    type Elem = UniPoly;

    fn scalar(&self, c: Scalar) -> UniPoly {
        UniPoly::constant(c, self.var)
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.add(b)
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        a.neg()
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.mul(b)
    }
    fn generator(&self, name: &str, index: &[u32]) -> Option<UniPoly> {
        (index.is_empty() && name == self.var.symbol()).then(|| UniPoly::x(self.var))
    }
}

/// An element of `L`, read through the `A_1` grammar.
pub fn as_lfraction(u: &A1Element) -> Result<LFraction> {
    match u.terms().iter().collect::<Vec<_>>().as_slice() {
        [] => Ok(LFraction::zero()),
        [(&(0, 0), g)] => Ok((*g).clone()),
        _ => Err(Error::Usage(
            "expected an element of L (built from H, Hinv, Hinv[k])".into(),
        )),
    }
}
