//! Formal products `c · Π sinh(x·aᵢ) / Π sinh(x·mⱼ)` in canonical form.
//!
//! An argument `r` always stands for `sinh(x·r)`. Canonical values keep every
//! argument strictly positive (the sign of a negative argument moves into the
//! coefficient) and never hold the same argument on both sides. Two canonical
//! products are equal as functions of `x` exactly when they are equal as data,
//! since the positive arguments are read off from the zeros and poles on the
//! imaginary axis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{DimensionError, TermError};
use crate::exact::Rational;

mod sum;

pub use sum::{ExpansionStats, SinhSum};

/// Argument multiset: argument → multiplicity.
pub type ArgMultiset = BTreeMap<Rational, u32>;

/// Classification of a raw factor list before canonicalisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermClass {
    Zero,
    Regular,
    Singular,
    Indeterminate,
}

impl fmt::Display for TermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TermClass::Zero => "zero",
            TermClass::Regular => "regular",
            TermClass::Singular => "singular",
            TermClass::Indeterminate => "indeterminate",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SinhProduct {
    coeff: Rational,
    num: ArgMultiset,
    den: ArgMultiset,
}

impl SinhProduct {
    pub fn zero() -> Self {
        SinhProduct::constant(Rational::zero())
    }

    pub fn one() -> Self {
        SinhProduct::constant(Rational::one())
    }

    pub fn constant(coeff: Rational) -> Self {
        SinhProduct {
            coeff,
            num: ArgMultiset::new(),
            den: ArgMultiset::new(),
        }
    }

    /// Builds a canonical product from nonzero arguments of either sign.
    ///
    /// Panics on a zero argument; use [`make_term`] for raw data.
    pub fn from_args(coeff: Rational, numer: &[Rational], denom: &[Rational]) -> Self {
        match make_term(coeff, numer, denom) {
            Ok((_, p)) => p,
            Err(e) => panic!("SinhProduct::from_args: {e}"),
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn numer_args(&self) -> &ArgMultiset {
        &self.num
    }

    pub fn denom_args(&self) -> &ArgMultiset {
        &self.den
    }

    pub fn numer_len(&self) -> usize {
        self.num.values().map(|&m| m as usize).sum()
    }

    pub fn denom_len(&self) -> usize {
        self.den.values().map(|&m| m as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.numer_len() == self.denom_len()
    }

    /// True when both products carry the same argument multisets.
    pub fn same_shape(&self, other: &SinhProduct) -> bool {
        self.num == other.num && self.den == other.den
    }

    pub fn with_coeff(&self, coeff: Rational) -> SinhProduct {
        if coeff.is_zero() {
            return SinhProduct::zero();
        }
        SinhProduct {
            coeff,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SinhProduct {
        self.with_coeff(&self.coeff * c)
    }

    pub fn multiply(&self, other: &SinhProduct) -> SinhProduct {
        if self.is_zero() || other.is_zero() {
            return SinhProduct::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (a, m) in &other.num {
            *num.entry(a.clone()).or_default() += m;
        }
        for (a, m) in &other.den {
            *den.entry(a.clone()).or_default() += m;
        }
        cancel(&mut num, &mut den);
        SinhProduct {
            coeff: &self.coeff * &other.coeff,
            num,
            den,
        }
    }

    /// Swaps numerator and denominator; `None` for the zero product.
    pub fn recip(&self) -> Option<SinhProduct> {
        Some(SinhProduct {
            coeff: self.coeff.recip()?,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// Multiplies every argument by `s > 0`.
    pub fn rescale_args(&self, s: &Rational) -> SinhProduct {
        assert!(s.is_positive(), "argument rescaling needs a positive factor");
        let map = |m: &ArgMultiset| m.iter().map(|(a, k)| (a * s, *k)).collect();
        SinhProduct {
            coeff: self.coeff.clone(),
            num: map(&self.num),
            den: map(&self.den),
        }
    }

    /// The `x → 0⁺` limit, i.e. the ordinary dimension for a quantum dimension.
    pub fn dimension_limit(&self) -> Result<Rational, DimensionError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if !self.is_balanced() {
            return Err(DimensionError::Unbalanced {
                numer: self.numer_len(),
                denom: self.denom_len(),
            });
        }
        let mut value = self.coeff.clone();
        for (a, m) in &self.num {
            value *= a.pow(*m as i32);
        }
        for (a, m) in &self.den {
            value = value / a.pow(*m as i32);
        }
        Ok(value)
    }

    /// Floating-point value at `x > 0`. Debugging aid only.
    pub fn eval_numeric(&self, x: f64) -> f64 {
        let (sign, ln) = self.eval_ln(x);
        sign as f64 * ln.exp()
    }

    /// `(sign, ln |value|)` at `x > 0`; stays finite where `eval_numeric` overflows.
    pub fn eval_ln(&self, x: f64) -> (i32, f64) {
        let sign = self.coeff.signum();
        if sign == 0 {
            return (0, f64::NEG_INFINITY);
        }
        let mut ln = self.coeff.abs().to_f64().ln();
        for (a, m) in &self.num {
            ln += *m as f64 * ln_sinh(x * a.to_f64());
        }
        for (a, m) in &self.den {
            ln -= *m as f64 * ln_sinh(x * a.to_f64());
        }
        (sign, ln)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing a SinhProduct cannot fail")
    }
}

/// `ln sinh(y)` for `y > 0` without overflow.
pub(crate) fn ln_sinh(y: f64) -> f64 {
    if y > 20.0 {
        y - std::f64::consts::LN_2 + (-(-2.0 * y).exp()).ln_1p()
    } else {
        y.sinh().ln()
    }
}

fn cancel(num: &mut ArgMultiset, den: &mut ArgMultiset) {
    let common: Vec<Rational> = num.keys().filter(|a| den.contains_key(*a)).cloned().collect();
    for a in common {
        let n = num[&a];
        let d = den[&a];
        let c = n.min(d);
        if n == c {
            num.remove(&a);
        } else {
            num.insert(a.clone(), n - c);
        }
        if d == c {
            den.remove(&a);
        } else {
            den.insert(a, d - c);
        }
    }
}

/// Classifies a raw factor list by where zero arguments occur.
pub fn classify(numer: &[Rational], denom: &[Rational]) -> TermClass {
    let zn = numer.iter().any(Rational::is_zero);
    let zd = denom.iter().any(Rational::is_zero);
    match (zn, zd) {
        (true, true) => TermClass::Indeterminate,
        (false, true) => TermClass::Singular,
        (true, false) => TermClass::Zero,
        (false, false) => TermClass::Regular,
    }
}

/// Canonicalises `coeff · Π sinh(x·numer) / Π sinh(x·denom)`.
///
/// Zero and negative arguments are allowed. A zero numerator argument alone
/// gives the zero product; a zero denominator argument is an error.
pub fn make_term(
    coeff: Rational,
    numer: &[Rational],
    denom: &[Rational],
) -> Result<(TermClass, SinhProduct), TermError> {
    let class = classify(numer, denom);
    match class {
        TermClass::Indeterminate => {
            return Err(TermError::Indeterminate {
                numer: numer.iter().filter(|a| a.is_zero()).count(),
                denom: denom.iter().filter(|a| a.is_zero()).count(),
            })
        }
        TermClass::Singular => {
            let pos = denom.iter().position(Rational::is_zero).unwrap_or_default();
            return Err(TermError::Singular {
                argument: format!("#{pos} of the denominator"),
            });
        }
        TermClass::Zero => return Ok((class, SinhProduct::zero())),
        TermClass::Regular => {}
    }
    if coeff.is_zero() {
        return Ok((TermClass::Zero, SinhProduct::zero()));
    }
    let mut coeff = coeff;
    let mut collect = |args: &[Rational]| {
        let mut map = ArgMultiset::new();
        for a in args {
            let a = if a.is_negative() {
                coeff = -&coeff;
                -a
            } else {
                a.clone()
            };
            *map.entry(a).or_default() += 1;
        }
        map
    };
    let mut num = collect(numer);
    let mut den = collect(denom);
    cancel(&mut num, &mut den);
    Ok((class, SinhProduct { coeff, num, den }))
}

pub fn multiply(a: &SinhProduct, b: &SinhProduct) -> SinhProduct {
    a.multiply(b)
}

pub fn equals(a: &SinhProduct, b: &SinhProduct) -> bool {
    a == b
}

impl fmt::Display for SinhProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.is_constant() {
            return Ok(());
        }
        let side = |m: &ArgMultiset| {
            if m.is_empty() {
                return "1".to_string();
            }
            m.iter()
                .map(|(a, k)| if *k == 1 { a.to_string() } else { format!("({a})^{k}") })
                .collect::<Vec<_>>()
                .join("·")
        };
        write!(f, " sinh[x: {} / {}]", side(&self.num), side(&self.den))
    }
}

#[derive(Serialize, Deserialize)]
struct WireProduct {
    coeff: Rational,
    num: Vec<Rational>,
    den: Vec<Rational>,
}

fn expand(m: &ArgMultiset) -> Vec<Rational> {
    m.iter()
        .flat_map(|(a, k)| std::iter::repeat_n(a.clone(), *k as usize))
        .collect()
}

impl Serialize for SinhProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WireProduct {
            coeff: self.coeff.clone(),
            num: expand(&self.num),
            den: expand(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SinhProduct {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = WireProduct::deserialize(deserializer)?;
        match make_term(wire.coeff, &wire.num, &wire.den) {
            Ok((_, p)) => Ok(p),
            Err(e) => Err(serde::de::Error::custom(e)),
        }
    }
}
