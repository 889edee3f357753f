//! Left regularity in `A_1`, decided on a finite truncation of the right
//! module `K[d]`, plus the regularity degree function.

use super::grade::grade_decompose;
use super::{a1_act_poly, a1_in_f, theta, A1Element};
use crate::error::{Error, Result};
use crate::exactnum::{LFraction, RationalH, UniPoly, Var};
use crate::intdiff::kernel_of_images;
use serde_json::json;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A1RegularityData {
    pub in_xi: bool,
    pub size: i64,
    /// `n` with `d_{-n}` the top component outside `F`.
    pub n: Option<u32>,
    pub delta: u32,
    pub l: Option<LFraction>,
    /// Not in `L` in general: it has poles at `H = i` for the `lambda_ij` used.
    pub phi: Option<RationalH>,
    pub mu: Option<u64>,
    pub nu: Option<u64>,
    pub verdict: bool,
    pub kernel: Option<UniPoly>,
}

impl A1RegularityData {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "inXi": self.in_xi,
            "size": self.size,
            "n": self.n,
            "delta": self.delta,
            "l": self.l.as_ref().map(|l| l.to_string()),
            "phi": self.phi.as_ref().map(|p| p.to_string()),
            "mu": self.mu,
            "nu": self.nu,
            "verdict": self.verdict,
            "kernel": self.kernel.as_ref().map(|k| k.to_string()),
        })
    }
}

/// Images `d^k . u` for `k <= top`, where `p . u := theta(u) p` under `d^k <-> x^k`.
pub fn right_images_a1(u: &A1Element, top: u64) -> Vec<UniPoly> {
    let t = theta(u);
    (0..=top)
        .map(|k| {
            a1_act_poly(
                &t,
                &UniPoly::monomial(crate::exactnum::scalar::one(), k as usize, Var::X),
            )
            .with_var(Var::D)
        })
        .collect()
}

/// A nonzero `p` of degree `<= top` with `p . u = 0`, if any.
pub fn right_kernel_a1(u: &A1Element, top: u64) -> Option<UniPoly> {
    kernel_of_images(&right_images_a1(u, top), Var::D)
}

pub fn a1_regularity(u: &A1Element) -> Result<A1RegularityData> {
    let view = grade_decompose(u)?;
    let Some(n) = view.top_nonf_negative() else {
        // Only positive grades and F survive: a map from dimension s+2 to s+1.
        let size = view.f_size_below(None);
        return Ok(in_xi(size, right_kernel_a1(u, (size + 1).max(0) as u64)));
    };
    let nonpositive_l_zero = view
        .components
        .iter()
        .filter(|(g, _)| **g <= 0)
        .all(|(_, c)| c.l.is_zero());
    if nonpositive_l_zero {
        let size = view.f_size_below(None);
        return Ok(in_xi(size, Some(UniPoly::one(Var::D))));
    }
    let d = view.component(-(n as i64)).expect("top component present");
    let delta = d.delta();
    let phi = d.phi();
    let lead = d.l.inner().add(&phi);
    let mut mu = delta as u64;
    loop {
        let shifted = lead.shift(mu as i64);
        if shifted.in_l() && shifted.num().natplus_roots()?.is_empty() {
            break;
        }
        mu += 1;
    }
    let size = view.f_size_below(Some(n));
    let nu = mu.max(size.max(0) as u64);
    let kernel = right_kernel_a1(u, nu);
    Ok(A1RegularityData {
        in_xi: false,
        size,
        n: Some(n),
        delta,
        l: Some(d.l.clone()),
        phi: Some(phi),
        mu: Some(mu),
        nu: Some(nu),
        verdict: kernel.is_none(),
        kernel,
    })
}

fn in_xi(size: i64, kernel: Option<UniPoly>) -> A1RegularityData {
    A1RegularityData {
        in_xi: true,
        size,
        n: None,
        delta: 0,
        l: None,
        phi: None,
        mu: None,
        nu: None,
        verdict: false,
        kernel,
    }
}

pub fn is_left_regular_a1(u: &A1Element) -> Result<bool> {
    Ok(a1_regularity(u)?.verdict)
}

pub fn is_right_regular_a1(u: &A1Element) -> Result<bool> {
    is_left_regular_a1(&theta(u))
}

/// Whether a nonzero `phi` in `L` is left regular: no root in `N_+`.
pub fn l_is_regular(phi: &LFraction) -> Result<bool> {
    if phi.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(phi.inner().num().natplus_roots()?.is_empty())
}

const DEFAULT_DEGREE_CAP: u32 = 64;

/// Least `i` with `d^i u` left regular.
pub fn regularity_degree_a1(u: &A1Element) -> Result<u32> {
    regularity_degree_a1_capped(u, DEFAULT_DEGREE_CAP)
}

pub fn regularity_degree_a1_capped(u: &A1Element, cap: u32) -> Result<u32> {
    if a1_in_f(u) {
        return Err(Error::ElementInF);
    }
    let d = A1Element::d();
    let mut b = u.clone();
    for i in 0..=cap {
        if is_left_regular_a1(&b)? {
            return Ok(i);
        }
        b = d.mul(&b);
    }
    Err(Error::NoDegreeFound(cap as usize))
}
