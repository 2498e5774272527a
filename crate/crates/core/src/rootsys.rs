//! Explicit root systems and the Weyl formula on the line `xρ`.
//!
//! Inner products are normalised so long roots have squared length 2, which
//! makes `(θ, θ + 2ρ) = 2h∨ = 2t` at the `α = -2` table points.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{AlgebraError, ParseError};
use crate::exact::Rational;
use crate::sinhprod::{SinhProduct, SinhSum};
use crate::vogel::AlgebraId;

/// Coordinates in the ambient space of a realization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    fn add_scaled(&mut self, other: &WeightVector, c: &Rational) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }
}

/// Dynkin labels of a weight in the committed numbering.
pub type DynkinLabels = Vec<i64>;

#[derive(Deserialize)]
struct ExceptionalEntry {
    simple_roots: Vec<Vec<String>>,
    adjoint: Vec<i64>,
    x2: Vec<i64>,
}

type NumberingTable = BTreeMap<String, ExceptionalEntry>;

const NUMBERING_TOML: &str = include_str!("../data/numbering.toml");

fn parse_numbering(src: &str) -> Result<NumberingTable, ParseError> {
    toml::from_str(src).map_err(|e| ParseError::Data(e.to_string()))
}

fn numbering() -> &'static NumberingTable {
    static TABLE: OnceLock<NumberingTable> = OnceLock::new();
    TABLE.get_or_init(|| parse_numbering(NUMBERING_TOML).expect("shipped numbering table parses"))
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

fn simple_roots(algebra: AlgebraId) -> Vec<WeightVector> {
    let chain = |dim: usize, len: usize| -> Vec<Vec<Rational>> {
        (0..len)
            .map(|i| {
                let mut v = unit(dim, i);
                v[i + 1] = Rational::from(-1);
                v
            })
            .collect()
    };
    let roots = match algebra {
        AlgebraId::A(n) => chain(n as usize + 1, n as usize),
        AlgebraId::B(n) | AlgebraId::C(n) | AlgebraId::D(n) => {
            let n = n as usize;
            let mut roots = chain(n, n - 1);
            let last = match algebra {
                AlgebraId::B(_) => unit(n, n - 1),
                AlgebraId::C(_) => unit(n, n - 1).into_iter().map(|x| x * Rational::from(2)).collect(),
                _ => {
                    let mut v = unit(n, n - 1);
                    v[n - 2] = Rational::one();
                    v
                }
            };
            roots.push(last);
            roots
        }
        _ => numbering()[&algebra.to_string()]
            .simple_roots
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse().expect("rational in numbering table"))
                    .collect()
            })
            .collect(),
    };
    roots.into_iter().map(WeightVector).collect()
}

/// Highest weights of the adjoint and of `X₂`; the A series has two `X₂` weights.
pub fn table1_weights(algebra: AlgebraId) -> Result<(DynkinLabels, Vec<DynkinLabels>), AlgebraError> {
    let algebra = algebra.validate()?;
    let r = algebra.rank();
    let w = |pairs: &[(usize, i64)]| -> DynkinLabels {
        let mut v = vec![0; r];
        for &(i, c) in pairs {
            v[i - 1] += c;
        }
        v
    };
    Ok(match algebra {
        // A1 has no X₂.
        AlgebraId::A(1) => (w(&[(1, 2)]), Vec::new()),
        AlgebraId::A(_) => (
            w(&[(1, 1), (r, 1)]),
            vec![w(&[(1, 2), (r - 1, 1)]), w(&[(2, 1), (r, 2)])],
        ),
        AlgebraId::B(2) => (w(&[(2, 2)]), vec![w(&[(1, 1), (2, 2)])]),
        AlgebraId::B(3) => (w(&[(2, 1)]), vec![w(&[(1, 1), (3, 2)])]),
        AlgebraId::B(_) => (w(&[(2, 1)]), vec![w(&[(1, 1), (3, 1)])]),
        AlgebraId::C(_) => (w(&[(1, 2)]), vec![w(&[(1, 2), (2, 1)])]),
        AlgebraId::D(4) => (w(&[(2, 1)]), vec![w(&[(1, 1), (3, 1), (4, 1)])]),
        AlgebraId::D(_) => (w(&[(2, 1)]), vec![w(&[(1, 1), (3, 1)])]),
        _ => {
            let e = &numbering()[&algebra.to_string()];
            (e.adjoint.clone(), vec![e.x2.clone()])
        }
    })
}

/// The highest weights of the Cartan power `k·λ_{X₂} + n·λ_ad`: two for the
/// A series with `k > 0`, none for A1 with `k > 0`.
pub fn cartan_power_weights(algebra: AlgebraId, k: u32, n: u32) -> Result<Vec<DynkinLabels>, AlgebraError> {
    let (ad, x2) = table1_weights(algebra)?;
    let combine =
        |x: &DynkinLabels| -> DynkinLabels { x.iter().zip(&ad).map(|(a, b)| k as i64 * a + n as i64 * b).collect() };
    if k == 0 {
        return Ok(vec![ad.iter().map(|a| n as i64 * a).collect()]);
    }
    Ok(x2.iter().map(combine).collect())
}

/// `Σ coeffᵢ · V(λᵢ) + constant`, as printed in the tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepSpec {
    pub constant: Rational,
    pub terms: Vec<(i64, DynkinLabels)>,
}

impl RepSpec {
    pub fn zero() -> Self {
        RepSpec::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        RepSpec {
            constant: c.into(),
            terms: Vec::new(),
        }
    }

    pub fn weight(labels: DynkinLabels) -> Self {
        RepSpec {
            constant: Rational::zero(),
            terms: vec![(1, labels)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.iter().all(|(c, _)| *c == 0)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub algebra: AlgebraId,
    pub rank: usize,
    simple_roots: Vec<WeightVector>,
    /// Multiplier of the Euclidean product in the ambient space.
    scale: Rational,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    fundamental_weights: Vec<WeightVector>,
    /// `(μ_r, ω_j)` for positive roots `μ_r`.
    root_pairing: Vec<Vec<Rational>>,
    /// `(ω_i, ω_j)`.
    weight_gram: Vec<Vec<Rational>>,
}

fn euclid(a: &WeightVector, b: &WeightVector) -> Rational {
    a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum()
}

/// Inverse by Gauss-Jordan elimination; `m` must be nonsingular.
fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().cloned().chain(unit(n, i)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular matrix");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                *x -= &(&f * y);
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Positive roots in simple-root coordinates, by root strings.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    seen.extend(layer.iter().cloned());
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                // ⟨β, αᵢ∨⟩ = Σⱼ cⱼ Aⱼᵢ
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

impl RootSystem {
    pub fn build(algebra: AlgebraId) -> Result<RootSystem, AlgebraError> {
        let algebra = algebra.validate()?;
        let simple = simple_roots(algebra);
        let rank = simple.len();
        let raw: Vec<Vec<Rational>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| euclid(a, b)).collect())
            .collect();
        let longest = (0..rank).map(|i| raw[i][i].clone()).max().expect("nonempty");
        let scale = Rational::from(2) / &longest;
        let gram: Vec<Vec<Rational>> = raw.iter().map(|row| row.iter().map(|x| x * &scale).collect()).collect();
        let half_len: Vec<Rational> = (0..rank).map(|i| &gram[i][i] / Rational::from(2)).collect();

        // Aᵢⱼ = 2(αᵢ, αⱼ)/(αⱼ, αⱼ)
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = &gram[i][j] / &half_len[j];
                        i64::try_from(v.to_integer().expect("integral Cartan entry")).expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        let roots = positive_roots(&cartan);

        // ωⱼ = (αⱼ, αⱼ)/2 · Σₖ (G⁻¹)ⱼₖ αₖ
        let ginv = invert(&gram);
        let dim = simple[0].0.len();
        let fundamental_weights: Vec<WeightVector> = (0..rank)
            .map(|j| {
                let mut w = WeightVector::zero(dim);
                for (k, a) in simple.iter().enumerate() {
                    w.add_scaled(a, &(&half_len[j] * &ginv[j][k]));
                }
                w
            })
            .collect();
        let weight_gram = (0..rank)
            .map(|i| (0..rank).map(|j| &half_len[i] * &half_len[j] * &ginv[i][j]).collect())
            .collect();
        // (μ, ωⱼ) = cⱼ (αⱼ, αⱼ)/2 for μ = Σ cᵢ αᵢ
        let root_pairing = roots
            .iter()
            .map(|c| (0..rank).map(|j| Rational::from(c[j]) * &half_len[j]).collect())
            .collect();

        Ok(RootSystem {
            algebra,
            rank,
            simple_roots: simple,
            scale,
            cartan,
            positive_roots: roots,
            fundamental_weights,
            root_pairing,
            weight_gram,
        })
    }

    pub fn inner(&self, a: &WeightVector, b: &WeightVector) -> Rational {
        euclid(a, b) * &self.scale
    }

    pub fn simple_roots(&self) -> &[WeightVector] {
        &self.simple_roots
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_roots(&self) -> Vec<WeightVector> {
        self.positive_roots.iter().map(|c| self.root_vector(c)).collect()
    }

    fn root_vector(&self, coeffs: &[i64]) -> WeightVector {
        let mut v = WeightVector::zero(self.simple_roots[0].0.len());
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            v.add_scaled(a, &Rational::from(*c));
        }
        v
    }

    pub fn fundamental_weights(&self) -> &[WeightVector] {
        &self.fundamental_weights
    }

    pub fn weight_vector(&self, labels: &[i64]) -> Result<WeightVector, AlgebraError> {
        self.check_length(labels)?;
        let mut v = WeightVector::zero(self.simple_roots[0].0.len());
        for (l, w) in labels.iter().zip(&self.fundamental_weights) {
            v.add_scaled(w, &Rational::from(*l));
        }
        Ok(v)
    }

    pub fn weyl_vector(&self) -> WeightVector {
        self.weight_vector(&vec![1; self.rank]).expect("rank-length labels")
    }

    /// Dynkin labels `⟨v, αᵢ∨⟩`.
    pub fn dynkin_labels(&self, v: &WeightVector) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|a| Rational::from(2) * self.inner(v, a) / self.inner(a, a))
            .collect()
    }

    /// The highest root, of greatest height.
    pub fn highest_root(&self) -> WeightVector {
        let top = self
            .positive_roots
            .iter()
            .max_by_key(|c| c.iter().sum::<i64>())
            .expect("nonempty root system");
        self.root_vector(top)
    }

    /// Dual Coxeter number `(θ, θ + 2ρ)/2`.
    pub fn dual_coxeter(&self) -> Rational {
        let theta = self.highest_root();
        let mut shifted = self.weyl_vector();
        shifted.add_scaled(&self.weyl_vector(), &Rational::one());
        shifted.add_scaled(&theta, &Rational::one());
        self.inner(&theta, &shifted) / Rational::from(2)
    }

    fn check_length(&self, labels: &[i64]) -> Result<(), AlgebraError> {
        if labels.len() != self.rank {
            return Err(AlgebraError::WrongLength(labels.to_vec()));
        }
        Ok(())
    }

    fn check_dominant(&self, labels: &[i64]) -> Result<(), AlgebraError> {
        self.check_length(labels)?;
        if labels.iter().any(|l| *l < 0) {
            return Err(AlgebraError::NotDominant(labels.to_vec()));
        }
        Ok(())
    }

    /// `Π_{μ>0} sinh(x(μ, λ+ρ)/2) / sinh(x(μ, ρ)/2)`.
    pub fn weyl_qdim(&self, labels: &[i64]) -> Result<SinhProduct, AlgebraError> {
        self.check_dominant(labels)?;
        let half = Rational::new(1, 2);
        let mut numer = Vec::with_capacity(self.root_pairing.len());
        let mut denom = Vec::with_capacity(self.root_pairing.len());
        for row in &self.root_pairing {
            let mut shifted = Rational::zero();
            let mut rho = Rational::zero();
            for (p, l) in row.iter().zip(labels) {
                shifted += p * Rational::from(l + 1);
                rho += p;
            }
            numer.push(shifted * &half);
            denom.push(rho * &half);
        }
        Ok(SinhProduct::from_args(Rational::one(), &numer, &denom))
    }

    pub fn weyl_dim(&self, labels: &[i64]) -> Result<BigInt, AlgebraError> {
        let d = self
            .weyl_qdim(labels)?
            .dimension_limit()
            .expect("Weyl quotient is balanced");
        Ok(d.to_integer().expect("Weyl dimension is an integer"))
    }

    /// `(λ, λ + 2ρ)`.
    pub fn casimir(&self, labels: &[i64]) -> Result<Rational, AlgebraError> {
        self.check_dominant(labels)?;
        let mut total = Rational::zero();
        for (i, li) in labels.iter().enumerate() {
            for (j, lj) in labels.iter().enumerate() {
                total += &self.weight_gram[i][j] * Rational::from(li * (lj + 2));
            }
        }
        Ok(total)
    }

    /// The quantum dimension of a table entry as a formal sum.
    pub fn qdim_of_spec(&self, spec: &RepSpec) -> Result<SinhSum, AlgebraError> {
        let mut sum = SinhSum::from(SinhProduct::constant(spec.constant.clone()));
        for (c, labels) in &spec.terms {
            sum.add_scaled(&self.weyl_qdim(labels)?, &Rational::from(*c));
        }
        Ok(sum)
    }

    pub fn dim_of_spec(&self, spec: &RepSpec) -> Result<Rational, AlgebraError> {
        let mut total = spec.constant.clone();
        for (c, labels) in &spec.terms {
            total += Rational::from(*c) * Rational::from_bigint(self.weyl_dim(labels)?);
        }
        Ok(total)
    }

    /// Generators of the Dynkin diagram automorphism group, as label permutations.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.rank;
        let reversal: Vec<usize> = (0..r).rev().collect();
        match self.algebra {
            AlgebraId::A(n) if n >= 2 => vec![reversal],
            AlgebraId::D(4) => vec![vec![2, 1, 0, 3], vec![3, 1, 2, 0]],
            AlgebraId::D(_) => {
                let mut swap: Vec<usize> = (0..r).collect();
                swap.swap(r - 2, r - 1);
                vec![swap]
            }
            AlgebraId::E6 => vec![vec![4, 3, 2, 1, 0, 5]],
            _ => Vec::new(),
        }
    }
}

/// Relabels a weight under a diagram automorphism.
pub fn permute_labels(labels: &[i64], sigma: &[usize]) -> DynkinLabels {
    let mut out = vec![0; labels.len()];
    for (i, l) in labels.iter().enumerate() {
        out[sigma[i]] = *l;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::adjoint_dim;
    use crate::vogel::vogel_point;

    fn rs(id: AlgebraId) -> RootSystem {
        RootSystem::build(id).unwrap()
    }

    #[test]
    fn numbering_table_parses() {
        let t = parse_numbering(NUMBERING_TOML).unwrap();
        assert_eq!(t.len(), 5);
        assert!(parse_numbering("G2 = 3").is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs(AlgebraId::G2).positive_roots().len(), 6);
        assert_eq!(rs(AlgebraId::F4).positive_roots().len(), 24);
        assert_eq!(rs(AlgebraId::E6).positive_roots().len(), 36);
        assert_eq!(rs(AlgebraId::E7).positive_roots().len(), 63);
        assert_eq!(rs(AlgebraId::E8).positive_roots().len(), 120);
        assert_eq!(rs(AlgebraId::A(5)).positive_roots().len(), 15);
        assert_eq!(rs(AlgebraId::C(4)).positive_roots().len(), 16);
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for id in [
            AlgebraId::G2,
            AlgebraId::F4,
            AlgebraId::E6,
            AlgebraId::B(4),
            AlgebraId::C(3),
            AlgebraId::A(3),
        ] {
            let s = rs(id);
            for (j, w) in s.fundamental_weights().iter().enumerate() {
                let labels = s.dynkin_labels(w);
                for (i, l) in labels.iter().enumerate() {
                    assert_eq!(*l, Rational::from((i == j) as i64), "{id} ω{}", j + 1);
                }
            }
        }
    }

    #[test]
    fn dual_coxeter_matches_t() {
        for id in AlgebraId::EXCEPTIONAL.into_iter().chain([
            AlgebraId::A(4),
            AlgebraId::B(5),
            AlgebraId::C(4),
            AlgebraId::D(6),
        ]) {
            assert_eq!(rs(id).dual_coxeter(), vogel_point(id).unwrap().t(), "{id}");
        }
    }

    #[test]
    fn a1_adjoint() {
        let s = rs(AlgebraId::A(1));
        let q = s.weyl_qdim(&[2]).unwrap();
        assert_eq!(
            q,
            SinhProduct::from_args(Rational::one(), &[Rational::new(3, 2)], &[Rational::new(1, 2)])
        );
        assert_eq!(s.weyl_dim(&[2]).unwrap(), BigInt::from(3));
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(rs(AlgebraId::D(4)).weyl_dim(&[0, 1, 0, 0]).unwrap(), BigInt::from(28));
        assert_eq!(rs(AlgebraId::F4).weyl_dim(&[0, 1, 0, 0]).unwrap(), BigInt::from(1274));
        assert_eq!(rs(AlgebraId::F4).weyl_dim(&[0, 0, 0, 1]).unwrap(), BigInt::from(26));
        assert_eq!(
            rs(AlgebraId::E8).weyl_dim(&[0, 0, 0, 0, 0, 1, 0, 0]).unwrap(),
            BigInt::from(30380)
        );
        assert_eq!(
            rs(AlgebraId::E8).weyl_dim(&[1, 0, 0, 0, 0, 0, 0, 0]).unwrap(),
            BigInt::from(3875)
        );
        assert_eq!(
            rs(AlgebraId::E7).weyl_dim(&[0, 0, 0, 0, 0, 1, 0]).unwrap(),
            BigInt::from(56)
        );
        assert_eq!(
            rs(AlgebraId::E6).weyl_dim(&[1, 0, 0, 0, 0, 0]).unwrap(),
            BigInt::from(27)
        );
        assert_eq!(rs(AlgebraId::G2).weyl_dim(&[1, 0]).unwrap(), BigInt::from(7));
        assert_eq!(rs(AlgebraId::G2).weyl_dim(&[3, 0]).unwrap(), BigInt::from(77));
    }

    #[test]
    fn table1_is_consistent() {
        let mut ids = AlgebraId::EXCEPTIONAL.to_vec();
        ids.extend((1..=6).map(AlgebraId::A));
        ids.extend((2..=6).map(AlgebraId::B));
        ids.extend((3..=6).map(AlgebraId::C));
        ids.extend((4..=7).map(AlgebraId::D));
        for id in ids {
            let s = rs(id);
            let p = vogel_point(id).unwrap();
            let d = adjoint_dim(&p).unwrap();
            let (ad, x2) = table1_weights(id).unwrap();
            assert_eq!(Rational::from_bigint(s.weyl_dim(&ad).unwrap()), d, "{id} adjoint");
            let x2_dim: Rational = x2.iter().map(|w| Rational::from_bigint(s.weyl_dim(w).unwrap())).sum();
            assert_eq!(x2_dim, &d * (&d - Rational::from(3)) / Rational::from(2), "{id} X2");
            assert_eq!(
                s.casimir(&ad).unwrap(),
                Rational::from(2) * p.t(),
                "{id} adjoint Casimir"
            );
            if id != AlgebraId::A(1) {
                for w in &x2 {
                    assert_eq!(s.casimir(w).unwrap(), Rational::from(4) * p.t(), "{id} X2 Casimir");
                }
            }
        }
    }

    #[test]
    fn automorphisms_preserve_cartan_matrix() {
        for id in [AlgebraId::A(5), AlgebraId::D(4), AlgebraId::D(6), AlgebraId::E6] {
            let s = rs(id);
            let a = s.cartan_matrix();
            for sigma in s.diagram_automorphisms() {
                for i in 0..s.rank {
                    for j in 0..s.rank {
                        assert_eq!(a[i][j], a[sigma[i]][sigma[j]], "{id}");
                    }
                }
            }
        }
    }

    #[test]
    fn triality() {
        let s = rs(AlgebraId::D(4));
        let q1 = s.weyl_qdim(&[1, 0, 0, 0]).unwrap();
        assert_eq!(q1, s.weyl_qdim(&[0, 0, 1, 0]).unwrap());
        assert_eq!(q1, s.weyl_qdim(&[0, 0, 0, 1]).unwrap());
        assert_eq!(q1.dimension_limit().unwrap(), Rational::from(8));
    }

    #[test]
    fn specs() {
        let s = rs(AlgebraId::D(4));
        let spec = RepSpec {
            constant: Rational::zero(),
            terms: vec![(1, vec![1, 0, 0, 0]), (1, vec![0, 0, 1, 0]), (1, vec![0, 0, 0, 1])],
        };
        let sum = s.qdim_of_spec(&spec).unwrap();
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.dimension_limit().unwrap(), Rational::from(24));
        assert_eq!(s.dim_of_spec(&RepSpec::constant(-1)).unwrap(), Rational::from(-1));
        assert!(s.weyl_qdim(&[1, -1, 0, 0]).is_err());
        assert!(s.weyl_qdim(&[1, 0, 0]).is_err());
    }
}
