//! Regularity in `S_1`, the regularity degree, set predicates, the
//! localization map into `K(y_1..y_n)` and transport to `I_1`.

use crate::error::{Error, Result};
use crate::exactnum::scalar::{self, Scalar};
use crate::exactnum::{MultiPoly, MultiRational, UniPoly, Var};
use crate::intdiff::{self, I1Element};
use crate::onesided::{
    act_right_on_pprime, decompose_s1, e1, eta, in_f, laurent_image, SnElement, SnMonomial,
};
use num_traits::Zero;

pub const DEFAULT_DEGREE_CAP: u32 = 64;
pub const DEFAULT_TILDE_BOUND: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub verdict: bool,
    pub size: i64,
    pub deg_y: u32,
    /// `a` lies in `xK[x] + F`.
    pub excluded: bool,
    /// Rank of `·a` on the tested truncation, when the rank test ran.
    pub rank: Option<usize>,
    pub kernel: Option<UniPoly>,
}

impl RegularityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.verdict,
            "size": self.size,
            "degY": self.deg_y,
            "excluded": self.excluded,
            "rank": self.rank,
            "kernel": self.kernel.as_ref().map(|p| p.to_string()),
        })
    }
}

pub fn size_s1(a: &SnElement) -> Result<i64> {
    Ok(decompose_s1(a)?.size())
}

/// Images of `y^0..y^top` under `·a`, as polynomials in `y`.
pub fn right_images_s1(a: &SnElement, top: i64) -> Vec<UniPoly> {
    (0..=top)
        .map(|k| {
            let p = MultiPoly::monomial(vec![k as u32], scalar::one());
            let img = act_right_on_pprime(&p, a);
            let deg = img.terms().keys().map(|e| e[0]).max().unwrap_or(0) as usize;
            let mut c = vec![scalar::zero(); deg + 1];
            for (e, v) in img.terms() {
                c[e[0] as usize] = v.clone();
            }
            UniPoly::new(c, Var::Y)
        })
        .collect()
}

/// Kernel of `·a` on `K[y]_{<= top}`; `None` when injective there.
pub fn right_kernel_s1(a: &SnElement, top: i64) -> Option<UniPoly> {
    if top < 0 {
        return None;
    }
    intdiff::kernel_of_images(&right_images_s1(a, top), Var::Y)
}

pub fn is_left_regular_s1(a: &SnElement) -> Result<RegularityReport> {
    let d = decompose_s1(a)?;
    let size = d.size();
    let deg_y = d.ypart.degree().unwrap_or(0) as u32;
    let excluded = d.constant.is_zero() && d.ypart.is_zero();
    if excluded {
        // ·a maps K[y]_{<= s+1} into K[y]_{<= s}.
        let kernel = right_kernel_s1(a, size + 1);
        return Ok(RegularityReport {
            verdict: false,
            size,
            deg_y,
            excluded,
            rank: None,
            kernel,
        });
    }
    let images = right_images_s1(a, size);
    let rank = if size < 0 {
        0
    } else {
        let rows = images.iter().map(|p| p.coeffs().len()).max().unwrap_or(1);
        let m: Vec<Vec<Scalar>> = images
            .iter()
            .map(|p| (0..rows).map(|r| p.coeff(r)).collect())
            .collect();
        crate::linalg::rank(&m)
    };
    let kernel = right_kernel_s1(a, size);
    Ok(RegularityReport {
        verdict: kernel.is_none(),
        size,
        deg_y,
        excluded,
        rank: Some(rank),
        kernel,
    })
}

pub fn is_right_regular_s1(a: &SnElement) -> Result<RegularityReport> {
    is_left_regular_s1(&eta(a))
}

/// Least `i` with `y^i a` left regular.
pub fn regularity_degree_s1(a: &SnElement) -> Result<u32> {
    regularity_degree_s1_capped(a, DEFAULT_DEGREE_CAP)
}

pub fn regularity_degree_s1_capped(a: &SnElement, cap: u32) -> Result<u32> {
    if a.n() != 1 {
        return Err(Error::RequiresN1);
    }
    if in_f(a) {
        return Err(Error::ElementInF);
    }
    let y = SnElement::y(1, 0);
    let mut b = a.clone();
    for i in 0..=cap {
        if is_left_regular_s1(&b)?.verdict {
            return Ok(i);
        }
        b = y.mul(&b);
    }
    Err(Error::NoDegreeFound(cap as usize))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetDescriptor {
    /// `{y^a}`
    PowersOfY,
    /// nonzero left regular polynomials in `y`
    LeftRegularYPolys,
    /// `y`-polynomials `c` with `y^a c` left regular for some `|a| <= bound`
    TildeY { bound: u32 },
    /// left regular `y`-polynomials plus the kernel of the Laurent map
    SPlusIdeal,
    /// all left regular elements
    FullLeftRegular,
}

impl SetDescriptor {
    pub fn parse(tag: &str) -> Option<Self> {
        Some(match tag {
            "powers" | "PowersOfY" => SetDescriptor::PowersOfY,
            "yreg" | "LeftRegularYPolys" => SetDescriptor::LeftRegularYPolys,
            "tildey" | "TildeY" => SetDescriptor::TildeY {
                bound: DEFAULT_TILDE_BOUND,
            },
            "splus" | "SPlusIdeal" => SetDescriptor::SPlusIdeal,
            "reg" | "FullLeftRegular" => SetDescriptor::FullLeftRegular,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl Membership {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Membership::Yes
        } else {
            Membership::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Yes => "true",
            Membership::No => "false",
            Membership::Unknown => "unknown",
        }
    }
}

fn is_y_poly(a: &SnElement) -> bool {
    a.terms().keys().all(|m| m.alpha.iter().all(|&k| k == 0))
}

/// Laurent image nonzero with no positive exponent: `a` is a nonzero `y`-polynomial modulo the ideal.
fn y_poly_mod_ideal(a: &SnElement) -> bool {
    let img = laurent_image(a);
    !img.is_zero() && img.terms().keys().all(|e| e.iter().all(|&k| k <= 0))
}

pub fn in_set(a: &SnElement, s: SetDescriptor) -> Membership {
    let n1 = a.n() == 1;
    let regular = |b: &SnElement| {
        Membership::from_bool(is_left_regular_s1(b).map(|r| r.verdict).unwrap_or(false))
    };
    match s {
        SetDescriptor::PowersOfY => Membership::from_bool(
            a.terms().len() == 1
                && a.terms()
                    .iter()
                    .all(|(m, c)| m.alpha.iter().all(|&k| k == 0) && *c == scalar::one()),
        ),
        SetDescriptor::LeftRegularYPolys => {
            if a.is_zero() || !is_y_poly(a) {
                Membership::No
            } else if n1 {
                regular(a)
            } else {
                Membership::Unknown
            }
        }
        SetDescriptor::TildeY { bound } => {
            if a.is_zero() || !is_y_poly(a) {
                return Membership::No;
            }
            if !n1 {
                return Membership::Unknown;
            }
            let y = SnElement::y(1, 0);
            let mut b = a.clone();
            for _ in 0..=bound {
                if regular(&b) == Membership::Yes {
                    return Membership::Yes;
                }
                b = y.mul(&b);
            }
            Membership::Unknown
        }
        SetDescriptor::SPlusIdeal => {
            if !y_poly_mod_ideal(a) {
                Membership::No
            } else if n1 {
                let d = decompose_s1(a).expect("n = 1");
                let mut lift = SnElement::constant(1, d.constant.clone());
                for (k, c) in d.ypart.coeffs().iter().enumerate().skip(1) {
                    lift.add_term(SnMonomial::new(vec![0], vec![k as u32]), c.clone());
                }
                regular(&lift)
            } else {
                Membership::Unknown
            }
        }
        SetDescriptor::FullLeftRegular => {
            if n1 {
                regular(a)
            } else {
                Membership::Unknown
            }
        }
    }
}

pub fn y_names(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["y".into()]
    } else {
        (1..=n).map(|i| format!("y{i}")).collect()
    }
}

/// The homomorphism `x_i -> y_i^{-1}`, `y_i -> y_i` into `K(y_1..y_n)`; kills `F`.
pub fn localize(a: &SnElement) -> MultiRational {
    laurent_image(a).to_rational_in_inverse()
}

/// `localize(s)^{-1} localize(r)`.
pub fn fraction_image(s: &SnElement, r: &SnElement) -> Result<MultiRational> {
    let ok = if s.n() == 1 {
        is_left_regular_s1(s)?.verdict
    } else {
        in_set(s, SetDescriptor::PowersOfY) == Membership::Yes
    };
    if !ok {
        return Err(Error::NotADenominator);
    }
    let ls = localize(s);
    if ls.is_zero() {
        return Err(Error::DivisionByZeroImage);
    }
    ls.inv()?
        .div(&MultiRational::from_poly(MultiPoly::one(s.n())))?
        .mul(&localize(r))
        .div(&MultiRational::from_poly(MultiPoly::one(s.n())))
}

/// `x -> int`, `y -> d`.
pub fn xi_of(a: &SnElement) -> Result<I1Element> {
    if a.n() != 1 {
        return Err(Error::RequiresN1);
    }
    let (d, i) = (I1Element::d(), I1Element::int());
    let mut out = I1Element::zero();
    for (m, c) in a.terms() {
        out = out.add(&i.pow(m.alpha[0]).mul(&d.pow(m.beta[0])).scale(c));
    }
    Ok(out)
}

/// Preimage under `xi` of an element of the scalar subalgebra.
pub fn xi_preimage(a: &I1Element) -> Result<SnElement> {
    if !intdiff::is_in_scalar_subalgebra(a) {
        return Err(Error::NotInScalarSubalgebra);
    }
    let mut out = SnElement::zero(1);
    for (g, p) in a.graded_parts() {
        let m = if g >= 0 {
            SnMonomial::new(vec![g as u32], vec![0])
        } else {
            SnMonomial::new(vec![0], vec![(-g) as u32])
        };
        out.add_term(m, p.coeff(0));
    }
    for (&(k, l), c) in &a.fpart {
        out = out.add(&e1(k, l).scale(c));
    }
    Ok(out)
}

/// Left regularity of an element of the scalar subalgebra of `I_1`, decided in `S_1`.
pub fn is_left_regular_scalar_i1(a: &I1Element) -> Result<bool> {
    Ok(is_left_regular_s1(&xi_preimage(a)?)?.verdict)
}

/// Bounds for [`random_s1`].
#[derive(Debug, Clone, Copy)]
pub struct S1Sample {
    pub degree: u32,
    pub terms: usize,
}

pub fn random_s1<R: rand::Rng>(rng: &mut R, s: S1Sample) -> SnElement {
    let mut e = SnElement::zero(1);
    for _ in 0..rng.gen_range(1..=s.terms) {
        let i = rng.gen_range(0..=s.degree);
        let j = rng.gen_range(0..=s.degree - i);
        e.add_term(
            SnMonomial::new(vec![i], vec![j]),
            scalar::int(rng.gen_range(-2..=2)),
        );
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xy(i: u32, j: u32) -> SnElement {
        SnElement::xy1(i, j)
    }

    #[test]
    fn sizes() {
        assert_eq!(size_s1(&xy(0, 3)).unwrap(), -1);
        assert_eq!(size_s1(&e1(0, 0).add(&e1(2, 3))).unwrap(), 3);
        assert_eq!(size_s1(&xy(2, 2)).unwrap(), 1);
    }

    #[test]
    fn regularity_examples() {
        assert!(is_left_regular_s1(&xy(0, 1)).unwrap().verdict);
        let r = is_left_regular_s1(&xy(1, 0)).unwrap();
        assert!(!r.verdict && r.excluded);
        let k = r.kernel.unwrap();
        assert!(right_kernel_s1(&xy(1, 0), 0).is_some());
        assert_eq!(k.degree(), Some(0));
        assert!(
            is_left_regular_s1(&xy(0, 3).add(&e1(0, 0)))
                .unwrap()
                .verdict
        );
        assert!(is_right_regular_s1(&xy(1, 0)).unwrap().verdict);
        assert!(!is_right_regular_s1(&xy(0, 1)).unwrap().verdict);
        assert!(is_right_regular_s1(&SnElement::one(1)).unwrap().verdict);
        for i in 0..5 {
            for j in 0..5 {
                assert!(!is_left_regular_s1(&e1(i, j)).unwrap().verdict);
            }
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(regularity_degree_s1(&xy(1, 0)).unwrap(), 1);
        assert_eq!(regularity_degree_s1(&xy(0, 1)).unwrap(), 0);
        assert_eq!(regularity_degree_s1(&xy(2, 0).add(&e1(0, 0))).unwrap(), 2);
        assert_eq!(regularity_degree_s1(&e1(1, 1)), Err(Error::ElementInF));
    }

    #[test]
    fn sets() {
        assert_eq!(in_set(&xy(0, 5), SetDescriptor::PowersOfY), Membership::Yes);
        let a = xy(0, 2).add(&SnElement::one(1));
        assert_eq!(
            in_set(&a, SetDescriptor::LeftRegularYPolys),
            Membership::Yes
        );
        assert_eq!(in_set(&xy(1, 0), SetDescriptor::PowersOfY), Membership::No);
        assert_eq!(
            in_set(&a.add(&e1(1, 0)), SetDescriptor::SPlusIdeal),
            Membership::Yes
        );
        assert_eq!(in_set(&xy(1, 0), SetDescriptor::SPlusIdeal), Membership::No);
        assert_eq!(
            in_set(&a, SetDescriptor::TildeY { bound: 4 }),
            Membership::Yes
        );
    }

    #[test]
    fn localization() {
        let names = y_names(1);
        assert_eq!(localize(&xy(1, 0)).render(&names), "1/y");
        assert!(localize(&e1(0, 0)).is_zero());
        let f = fraction_image(&xy(0, 2), &xy(1, 0).add(&xy(0, 1))).unwrap();
        assert_eq!(f.render(&names), "(y^2 + 1)/y^3");
        assert_eq!(
            fraction_image(&xy(1, 0), &xy(0, 1)),
            Err(Error::NotADenominator)
        );
    }

    #[test]
    fn xi() {
        assert_eq!(xi_of(&xy(1, 0)).unwrap(), I1Element::int());
        assert_eq!(xi_of(&xy(0, 1)).unwrap(), I1Element::d());
        assert_eq!(
            xi_of(&xy(1, 1)).unwrap(),
            I1Element::one().sub(&I1Element::e(0, 0))
        );
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(xi_of(&e1(i, j)).unwrap(), I1Element::e(i, j));
            }
        }
        assert_eq!(
            xi_preimage(&I1Element::x()),
            Err(Error::NotInScalarSubalgebra)
        );
    }

    #[test]
    fn criterion_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let a = random_s1(
                &mut rng,
                S1Sample {
                    degree: 4,
                    terms: 5,
                },
            );
            let r = is_left_regular_s1(&a).unwrap();
            let n = r.size + r.deg_y as i64 + 6;
            let o1 = right_kernel_s1(&a, n).is_none();
            let o2 = right_kernel_s1(&a, n + 5).is_none();
            assert_eq!(o1, o2);
            assert_eq!(r.verdict, o1, "{a}");
            assert_eq!(
                r.verdict,
                intdiff::i1_regularity(&xi_of(&a).unwrap()).verdict,
                "{a}"
            );
            if let Some(k) = &r.kernel {
                let img: Vec<_> = right_images_s1(&a, k.degree().unwrap() as i64);
                let mut acc = UniPoly::zero(Var::Y);
                for (i, c) in k.coeffs().iter().enumerate() {
                    acc = acc.add(&img[i].scale(c));
                }
                assert!(acc.is_zero());
            }
        }
    }
}
