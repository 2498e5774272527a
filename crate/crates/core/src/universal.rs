//! The universal quantum dimension `X(x, k, n, α, β, γ)` and related formulas.
//!
//! `X` is a product of thirteen factors, each a ratio of sinh products whose
//! arguments are linear forms in `(α, β, γ)` divided by four. At table points
//! some of these forms vanish. A vanishing numerator form that is a multiple
//! `c·m` of a vanishing denominator form `m` contributes the constant `c`
//! from every direction of approach; such pairs are resolved symbolically
//! before the point is classified. What remains either evaluates directly or
//! needs a limit along a line (see [`crate::vogel::line_limit`]).

use serde::{Deserialize, Serialize};

use crate::error::{FormulaError, LimitError, TermError};
use crate::exact::{LinForm3, Rational, Triple};
use crate::sinhprod::{make_term, SinhProduct, TermClass};
use crate::vogel::{Permutation, VogelPoint};

/// Powers `k` of `X₂` and `n` of the adjoint in the Cartan product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanPowerIndex {
    pub k: u32,
    pub n: u32,
}

impl CartanPowerIndex {
    pub fn new(k: u32, n: u32) -> Self {
        CartanPowerIndex { k, n }
    }
}

/// One of the thirteen factors, before evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicFactor {
    pub name: &'static str,
    pub numer: Vec<LinForm3>,
    pub denom: Vec<LinForm3>,
}

impl SymbolicFactor {
    pub fn form_product(&self) -> FormProduct {
        FormProduct {
            coeff: Rational::one(),
            numer: self.numer.clone(),
            denom: self.denom.clone(),
        }
    }
}

pub const FACTOR_NAMES: [&str; 13] = [
    "L31", "L32", "L21s1", "L21s2", "L21s3", "L10s1", "L10s2", "L10s3", "L11s1", "L11s2", "L11s3", "L01", "Lc2",
];

/// A form `(c_α, c_β, c_γ)`, already divided by four.
fn quarter(a: i64, b: i64, g: i64) -> LinForm3 {
    LinForm3::new(Rational::new(a, 4), Rational::new(b, 4), Rational::new(g, 4))
}

type FormFn = fn(i64, i64, i64) -> (LinForm3, LinForm3);
type LengthFn = fn(i64, i64) -> i64;

/// `(name, length of the product in terms of (k, n), numerator/denominator at (k, n, i))`.
const L_TERMS: [(&str, LengthFn, FormFn); 13] = [
    (
        "L31",
        |_, _| 1,
        |k, n, _| (quarter(-4 + 3 * k + n, -2, -2), quarter(4, 2, 2)),
    ),
    (
        "L32",
        |_, _| 1,
        |k, n, _| (quarter(-3 + 3 * k + 2 * n, -2, -2), quarter(3, 2, 2)),
    ),
    (
        "L21s1",
        |k, n| 2 * k + n,
        |_, _, i| (quarter(-5 + i, -2, -2), quarter(i - 2, -2, 0)),
    ),
    (
        "L21s2",
        |k, n| 2 * k + n,
        |_, _, i| (quarter(3 - i, 1, 2), quarter(2 - i, 1, 1)),
    ),
    (
        "L21s3",
        |_, _| 1,
        |k, n, _| (quarter(3 - 2 * k - n, 2, 1), quarter(3, 2, 1)),
    ),
    ("L10s1", |k, _| k, |_, _, i| (quarter(3 - i, 0, 2), quarter(-i, 0, 0))),
    (
        "L10s2",
        |k, _| k,
        |_, _, i| (quarter(3 - i, 1, 1), quarter(2 - i, 1, 0)),
    ),
    (
        "L10s3",
        |k, _| k,
        |_, _, i| (quarter(i - 3, -2, 0), quarter(2 - i, 0, 1)),
    ),
    (
        "L11s1",
        |k, n| k + n,
        |_, _, i| (quarter(4 - i, 2, 1), quarter(i + 1, 0, 0)),
    ),
    (
        "L11s2",
        |k, n| k + n,
        |_, _, i| (quarter(2 - i, 1, 1), quarter(1 - i, 1, 0)),
    ),
    (
        "L11s3",
        |k, n| k + n,
        |_, _, i| (quarter(i - 2, -2, 0), quarter(1 - i, 0, 1)),
    ),
    ("L01", |_, _| 1, |_, n, _| (quarter(1 + n, 0, 0), quarter(1, 0, 0))),
    (
        "Lc2",
        |k, _| k,
        |k, n, i| (quarter(4 - i - k - n, 2, 1), quarter(i + k + n - 2, 0, -2)),
    ),
];

/// The thirteen factors of `X` for the given powers.
pub fn l_terms(idx: CartanPowerIndex) -> Vec<SymbolicFactor> {
    let (k, n) = (idx.k as i64, idx.n as i64);
    L_TERMS
        .iter()
        .map(|(name, len, forms)| {
            let (numer, denom) = (1..=len(k, n)).map(|i| forms(k, n, i)).unzip();
            SymbolicFactor { name, numer, denom }
        })
        .collect()
}

/// `coeff · Π sinh(x·fᵢ(p)) / Π sinh(x·gⱼ(p))` with linear forms `f`, `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormProduct {
    pub coeff: Rational,
    pub numer: Vec<LinForm3>,
    pub denom: Vec<LinForm3>,
}

/// A form product at a point, split into nonvanishing values and the
/// vanishing forms left after removing proportional pairs.
struct Resolved {
    coeff: Rational,
    numer_values: Vec<Rational>,
    denom_values: Vec<Rational>,
    numer_vanishing: Vec<LinForm3>,
    denom_vanishing: Vec<LinForm3>,
}

impl FormProduct {
    pub fn one() -> Self {
        FormProduct {
            coeff: Rational::one(),
            numer: Vec::new(),
            denom: Vec::new(),
        }
    }

    pub fn extend(&mut self, factor: &SymbolicFactor) {
        self.numer.extend(factor.numer.iter().cloned());
        self.denom.extend(factor.denom.iter().cloned());
    }

    fn resolve(&self, p: &Triple) -> Resolved {
        let mut coeff = self.coeff.clone();
        let mut numer_values = Vec::new();
        let mut denom_values = Vec::new();
        let mut numer_vanishing = Vec::new();
        let mut denom_vanishing: Vec<LinForm3> = Vec::new();
        for f in &self.denom {
            let v = f.eval(p);
            if v.is_zero() {
                denom_vanishing.push(f.clone());
            } else {
                denom_values.push(v);
            }
        }
        for f in &self.numer {
            let v = f.eval(p);
            if !v.is_zero() {
                numer_values.push(v);
                continue;
            }
            let partner = denom_vanishing
                .iter()
                .enumerate()
                .find_map(|(j, m)| f.ratio_to(m).filter(|c| !c.is_zero()).map(|c| (j, c)));
            match partner {
                Some((j, c)) => {
                    denom_vanishing.swap_remove(j);
                    coeff *= c;
                }
                None => numer_vanishing.push(f.clone()),
            }
        }
        Resolved {
            coeff,
            numer_values,
            denom_values,
            numer_vanishing,
            denom_vanishing,
        }
    }

    /// Value at `p` after removing proportional vanishing pairs.
    pub fn evaluate(&self, p: &Triple) -> Result<(TermClass, SinhProduct), TermError> {
        let r = self.resolve(p);
        match (r.numer_vanishing.len(), r.denom_vanishing.len()) {
            (0, 0) => make_term(r.coeff, &r.numer_values, &r.denom_values),
            (_, 0) => Ok((TermClass::Zero, SinhProduct::zero())),
            (0, _) => Err(TermError::Singular {
                argument: r.denom_vanishing[0].to_string(),
            }),
            (a, m) => Err(TermError::Indeterminate { numer: a, denom: m }),
        }
    }

    /// Limit at `p` along `s ↦ p + s·direction`.
    ///
    /// Each remaining vanishing form `f` equals `s·f(direction)` on the path,
    /// so when the counts agree the vanishing part tends to
    /// `Π f(direction) / Π g(direction)`.
    pub fn limit_along(&self, p: &Triple, direction: &Triple) -> Result<SinhProduct, LimitError> {
        let r = self.resolve(p);
        let slopes = |forms: &[LinForm3]| forms.iter().map(|f| f.eval(direction)).collect::<Vec<_>>();
        let numer_slopes = slopes(&r.numer_vanishing);
        let denom_slopes = slopes(&r.denom_vanishing);
        if let Some(j) = denom_slopes.iter().position(Rational::is_zero) {
            return Err(LimitError::SingularOnLine {
                argument: r.denom_vanishing[j].to_string(),
            });
        }
        if numer_slopes.iter().any(Rational::is_zero) {
            return Ok(SinhProduct::zero());
        }
        if numer_slopes.len() != denom_slopes.len() {
            return Err(LimitError::OrderMismatch {
                numer: numer_slopes.len(),
                denom: denom_slopes.len(),
            });
        }
        let mut coeff = r.coeff;
        for s in &numer_slopes {
            coeff *= s;
        }
        for s in &denom_slopes {
            coeff = coeff / s;
        }
        let (_, value) =
            make_term(coeff, &r.numer_values, &r.denom_values).expect("nonvanishing values form a regular term");
        Ok(value)
    }
}

/// All thirteen factors as one form product.
pub fn form_product(idx: CartanPowerIndex) -> FormProduct {
    let mut fp = FormProduct::one();
    for f in l_terms(idx) {
        fp.extend(&f);
    }
    fp
}

/// `X(x, k, n, α, β, γ)` at a point, or why it cannot be evaluated directly.
pub fn universal_x(idx: CartanPowerIndex, p: &VogelPoint) -> Result<(TermClass, SinhProduct), TermError> {
    form_product(idx).evaluate(&p.triple())
}

/// `X` with its arguments permuted, e.g. `bag` gives `X(x, k, n, β, α, γ)`.
pub fn universal_x_permuted(
    idx: CartanPowerIndex,
    perm: Permutation,
    p: &VogelPoint,
) -> Result<(TermClass, SinhProduct), TermError> {
    universal_x(idx, &p.permute(perm))
}

/// Casimir eigenvalue `α(3k - 3k² + n - n² - 3kn) + t(4k + 2n)`.
pub fn universal_casimir(idx: CartanPowerIndex, p: &VogelPoint) -> Rational {
    let (k, n) = (idx.k as i64, idx.n as i64);
    let a = Rational::from(3 * k - 3 * k * k + n - n * n - 3 * k * n);
    &p.alpha * a + p.t() * Rational::from(4 * k + 2 * n)
}

/// `-(2t - α)(2t - β)(2t - γ) / (αβγ)`.
pub fn adjoint_dim(p: &VogelPoint) -> Result<Rational, FormulaError> {
    for (v, name) in [(&p.alpha, "alpha"), (&p.beta, "beta"), (&p.gamma, "gamma")] {
        if v.is_zero() {
            return Err(FormulaError::ZeroParameter(name));
        }
    }
    let two_t = Rational::from(2) * p.t();
    let num = (&two_t - &p.alpha) * (&two_t - &p.beta) * (&two_t - &p.gamma);
    Ok(-num / (&p.alpha * &p.beta * &p.gamma))
}

/// Which parameter plays the distinguished role in `Y₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Alpha,
    Beta,
    Gamma,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Alpha, Slot::Beta, Slot::Gamma];
}

/// `dim Y₂(α) = (2t-3α)(β-2t)(γ-2t) t (β+t)(γ+t) / (α²(α-β) β (α-γ) γ)`.
pub fn y2_dim(p: &VogelPoint) -> Result<Rational, FormulaError> {
    let (a, b, g) = (&p.alpha, &p.beta, &p.gamma);
    let t = p.t();
    let two_t = Rational::from(2) * &t;
    let den_factors: [(Rational, &'static str); 5] = [
        (a * a, "alpha^2"),
        (a - b, "alpha-beta"),
        (b.clone(), "beta"),
        (a - g, "alpha-gamma"),
        (g.clone(), "gamma"),
    ];
    if let Some((_, name)) = den_factors.iter().find(|(v, _)| v.is_zero()) {
        return Err(FormulaError::Singular(name));
    }
    let num = (&two_t - Rational::from(3) * a) * (b - &two_t) * (g - &two_t) * &t * (b + &t) * (g + &t);
    let den: Rational = den_factors.into_iter().map(|(v, _)| v).product();
    Ok(num / den)
}

/// `dim Y₂` for the given slot, evaluated at the permuted point.
pub fn y2_dim_slot(p: &VogelPoint, slot: Slot) -> Result<Rational, FormulaError> {
    let perm = match slot {
        Slot::Alpha => Permutation::IDENTITY,
        Slot::Beta => "bag".parse().expect("valid permutation"),
        Slot::Gamma => "gba".parse().expect("valid permutation"),
    };
    y2_dim(&p.permute(perm))
}
