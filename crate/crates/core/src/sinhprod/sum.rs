//! Finite sums of sinh products.
//!
//! Sums have no multiset canonical form, so exact equality is decided by
//! clearing denominators and comparing the resulting exponential polynomials
//! `Σ c·e^{x·e}` coefficient by coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ArgMultiset, SinhProduct};
use crate::error::DimensionError;
use crate::exact::Rational;

/// `Σ termᵢ`, with terms of identical shape merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SinhSum {
    terms: Vec<SinhProduct>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpansionStats {
    /// Sinh factors left after removing those common to every term.
    pub factors: usize,
    /// Length of the dense exponent grid.
    pub grid: usize,
}

impl SinhSum {
    pub fn new() -> Self {
        SinhSum::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = SinhProduct>) -> Self {
        let mut s = SinhSum::new();
        for t in terms {
            s.push(t);
        }
        s
    }

    pub fn push(&mut self, term: SinhProduct) {
        if term.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|t| t.same_shape(&term)) {
            let merged = self.terms[pos].coeff() + term.coeff();
            if merged.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos] = term.with_coeff(merged);
            }
        } else {
            self.terms.push(term);
        }
    }

    pub fn add_scaled(&mut self, term: &SinhProduct, c: &Rational) {
        self.push(term.scale(c));
    }

    pub fn terms(&self) -> &[SinhProduct] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single product this sum collapses to, if any.
    pub fn as_single(&self) -> Option<SinhProduct> {
        match self.terms.as_slice() {
            [] => Some(SinhProduct::zero()),
            [t] => Some(t.clone()),
            _ => None,
        }
    }

    pub fn dimension_limit(&self) -> Result<Rational, DimensionError> {
        self.terms.iter().map(SinhProduct::dimension_limit).sum()
    }

    pub fn eval_numeric(&self, x: f64) -> f64 {
        let (sign, ln) = self.eval_ln(x);
        sign as f64 * ln.exp()
    }

    /// `(sign, ln |value|)` via a signed log-sum-exp.
    pub fn eval_ln(&self, x: f64) -> (i32, f64) {
        let parts: Vec<(i32, f64)> = self.terms.iter().map(|t| t.eval_ln(x)).collect();
        let Some(max) = parts.iter().map(|p| p.1).reduce(f64::max) else {
            return (0, f64::NEG_INFINITY);
        };
        let total: f64 = parts.iter().map(|(s, l)| *s as f64 * (l - max).exp()).sum();
        if total == 0.0 {
            return (0, f64::NEG_INFINITY);
        }
        (if total > 0.0 { 1 } else { -1 }, max + total.abs().ln())
    }

    /// Exact equality as functions of `x`.
    pub fn exactly_equals(&self, other: &SinhSum) -> bool {
        let mut diff = self.clone();
        for t in &other.terms {
            diff.push(t.scale(&Rational::from(-1)));
        }
        diff.is_identically_zero().0
    }

    /// Whether the sum vanishes identically, with the size of the expansion used.
    pub fn is_identically_zero(&self) -> (bool, ExpansionStats) {
        match self.terms.len() {
            0 => return (true, ExpansionStats::default()),
            // A nonzero canonical product never vanishes identically.
            1 => return (false, ExpansionStats::default()),
            _ => {}
        }
        // Common denominator: per argument, the largest multiplicity in any term.
        let mut lcm = ArgMultiset::new();
        for t in &self.terms {
            for (a, m) in t.denom_args() {
                let e = lcm.entry(a.clone()).or_default();
                *e = (*e).max(*m);
            }
        }
        let cleared: Vec<ArgMultiset> = self
            .terms
            .iter()
            .map(|t| {
                let mut factors = t.numer_args().clone();
                for (a, m) in &lcm {
                    let own = t.denom_args().get(a).copied().unwrap_or(0);
                    if m > &own {
                        *factors.entry(a.clone()).or_default() += m - own;
                    }
                }
                factors
            })
            .collect();
        // Factors shared by every term do not affect vanishing.
        let mut common = cleared[0].clone();
        for c in &cleared[1..] {
            common.retain(|a, m| {
                let other = c.get(a).copied().unwrap_or(0);
                *m = (*m).min(other);
                *m > 0
            });
        }
        let reduced: Vec<ArgMultiset> = cleared
            .into_iter()
            .map(|mut c| {
                for (a, m) in &common {
                    let e = c.get_mut(a).expect("common factor present");
                    *e -= m;
                    if *e == 0 {
                        c.remove(a);
                    }
                }
                c
            })
            .collect();

        // Integer exponent grid: scale every argument by the lcm of denominators.
        let mut scale = BigInt::one();
        for c in &reduced {
            for a in c.keys() {
                scale = scale.lcm(a.denom());
            }
        }
        let scale = Rational::from_bigint(scale);
        let to_int = |a: &Rational| -> usize {
            let v = (a * &scale).to_integer().expect("scaled argument is integral");
            usize::try_from(v).expect("argument fits the exponent grid")
        };
        let half_span: Vec<usize> = reduced
            .iter()
            .map(|c| c.iter().map(|(a, m)| to_int(a) * *m as usize).sum())
            .collect();
        let span = half_span.iter().copied().max().unwrap_or(0);
        let grid = 2 * span + 1;

        let mut acc: Vec<Rational> = vec![Rational::zero(); grid];
        let mut max_factors = 0;
        for (term, factors) in self.terms.iter().zip(&reduced) {
            let count: usize = factors.values().map(|m| *m as usize).sum();
            max_factors = max_factors.max(count);
            // Π (e^{a} - e^{-a}) on the integer grid, offset by `span`.
            let mut poly: Vec<BigInt> = vec![BigInt::zero(); grid];
            poly[span] = BigInt::one();
            let mut reach = 0usize;
            for (a, m) in factors {
                let step = to_int(a);
                for _ in 0..*m {
                    let mut next = vec![BigInt::zero(); grid];
                    for (i, c) in poly.iter().enumerate().skip(span - reach).take(2 * reach + 1) {
                        if c.is_zero() {
                            continue;
                        }
                        next[i + step] += c;
                        next[i - step] -= c;
                    }
                    poly = next;
                    reach += step;
                }
            }
            // sinh = (e^{a} - e^{-a}) / 2
            let weight = term.coeff() / Rational::from(2).pow(count as i32);
            for (slot, c) in acc.iter_mut().zip(poly) {
                if !c.is_zero() {
                    *slot += &weight * Rational::from_bigint(c);
                }
            }
        }
        let stats = ExpansionStats {
            factors: max_factors,
            grid,
        };
        (acc.iter().all(Rational::is_zero), stats)
    }
}

impl From<SinhProduct> for SinhSum {
    fn from(p: SinhProduct) -> Self {
        SinhSum::from_terms([p])
    }
}

impl std::fmt::Display for SinhSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}
