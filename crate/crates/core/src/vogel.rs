//! Points, permutations and distinguished lines of Vogel's plane.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, LimitError, ParseError};
use crate::exact::{q, LinForm3, Rational, Triple};
use crate::sinhprod::SinhProduct;
use crate::universal::{self, CartanPowerIndex};

/// A simple Lie algebra by Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl AlgebraId {
    pub const EXCEPTIONAL: [AlgebraId; 5] = [
        AlgebraId::G2,
        AlgebraId::F4,
        AlgebraId::E6,
        AlgebraId::E7,
        AlgebraId::E8,
    ];

    /// Checks the rank bounds used throughout (A≥1, B≥2, C≥3, D≥4).
    pub fn validate(self) -> Result<AlgebraId, AlgebraError> {
        let (family, rank, min) = match self {
            AlgebraId::A(r) => ('A', r, 1),
            AlgebraId::B(r) => ('B', r, 2),
            AlgebraId::C(r) => ('C', r, 3),
            AlgebraId::D(r) => ('D', r, 4),
            _ => return Ok(self),
        };
        if rank < min {
            Err(AlgebraError::UnsupportedRank { family, rank })
        } else {
            Ok(self)
        }
    }

    pub fn rank(self) -> usize {
        match self {
            AlgebraId::A(r) | AlgebraId::B(r) | AlgebraId::C(r) | AlgebraId::D(r) => r as usize,
            AlgebraId::G2 => 2,
            AlgebraId::F4 => 4,
            AlgebraId::E6 => 6,
            AlgebraId::E7 => 7,
            AlgebraId::E8 => 8,
        }
    }

    pub fn family(self) -> char {
        match self {
            AlgebraId::A(_) => 'A',
            AlgebraId::B(_) => 'B',
            AlgebraId::C(_) => 'C',
            AlgebraId::D(_) => 'D',
            AlgebraId::G2 => 'G',
            AlgebraId::F4 => 'F',
            AlgebraId::E6 | AlgebraId::E7 | AlgebraId::E8 => 'E',
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            AlgebraId::G2 | AlgebraId::F4 | AlgebraId::E6 | AlgebraId::E7 | AlgebraId::E8
        )
    }

    /// The line of Vogel's plane this algebra's table point lies on.
    pub fn natural_line(self) -> VogelLine {
        match self {
            AlgebraId::A(_) => VogelLine::Sl,
            AlgebraId::B(_) | AlgebraId::D(_) => VogelLine::So,
            AlgebraId::C(_) => VogelLine::Sp,
            _ => VogelLine::Exc,
        }
    }

    pub fn from_family(family: char, rank: u32) -> Result<AlgebraId, AlgebraError> {
        let id = match family {
            'A' => AlgebraId::A(rank),
            'B' => AlgebraId::B(rank),
            'C' => AlgebraId::C(rank),
            'D' => AlgebraId::D(rank),
            _ => return Err(AlgebraError::UnsupportedRank { family, rank }),
        };
        id.validate()
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::A(r) => write!(f, "A{r}"),
            AlgebraId::B(r) => write!(f, "B{r}"),
            AlgebraId::C(r) => write!(f, "C{r}"),
            AlgebraId::D(r) => write!(f, "D{r}"),
            AlgebraId::G2 => f.write_str("G2"),
            AlgebraId::F4 => f.write_str("F4"),
            AlgebraId::E6 => f.write_str("E6"),
            AlgebraId::E7 => f.write_str("E7"),
            AlgebraId::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Algebra(s.to_string());
        let t = s.trim();
        if t.eq_ignore_ascii_case("so8") {
            return Ok(AlgebraId::D(4));
        }
        let mut chars = t.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        let id = match (family, rank) {
            ('A', r) => AlgebraId::A(r),
            ('B', r) => AlgebraId::B(r),
            ('C', r) => AlgebraId::C(r),
            ('D', r) => AlgebraId::D(r),
            ('G', 2) => AlgebraId::G2,
            ('F', 4) => AlgebraId::F4,
            ('E', 6) => AlgebraId::E6,
            ('E', 7) => AlgebraId::E7,
            ('E', 8) => AlgebraId::E8,
            _ => return Err(bad()),
        };
        id.validate().map_err(|_| bad())
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(α, β, γ)`; `t = α + β + γ` is derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VogelPoint {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl VogelPoint {
    pub fn new(alpha: impl Into<Rational>, beta: impl Into<Rational>, gamma: impl Into<Rational>) -> Self {
        VogelPoint {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
        }
    }

    pub fn from_triple([alpha, beta, gamma]: Triple) -> Self {
        VogelPoint { alpha, beta, gamma }
    }

    pub fn triple(&self) -> Triple {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn t(&self) -> Rational {
        &self.alpha + &self.beta + &self.gamma
    }

    pub fn permute(&self, perm: Permutation) -> VogelPoint {
        VogelPoint::from_triple(perm.apply(&self.triple()))
    }

    pub fn scale(&self, s: &Rational) -> VogelPoint {
        VogelPoint::new(&self.alpha * s, &self.beta * s, &self.gamma * s)
    }
}

impl fmt::Display for VogelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Position of `n` on the exceptional line `(-2, n+4, 2n+4)`.
fn exceptional_parameter(id: AlgebraId) -> Option<Rational> {
    Some(match id {
        AlgebraId::G2 => q(-2, 3),
        AlgebraId::D(4) => Rational::zero(),
        AlgebraId::F4 => 1.into(),
        AlgebraId::E6 => 2.into(),
        AlgebraId::E7 => 4.into(),
        AlgebraId::E8 => 8.into(),
        _ => return None,
    })
}

/// The table point of an algebra, normalised to `α = -2`.
///
/// Exceptional algebras use the representative `(-2, n+4, 2n+4)`, which lies
/// on the exceptional line `γ = 2(α+β)`; so(8) sits at `(-2, 4, 4)` on both
/// the orthogonal and exceptional lines.
pub fn vogel_point(id: AlgebraId) -> Result<VogelPoint, AlgebraError> {
    let id = id.validate()?;
    let r = |v: u32| Rational::from(v as i64);
    Ok(match id {
        AlgebraId::A(n) => VogelPoint::new(-2, 2, r(n + 1)),
        AlgebraId::B(n) => VogelPoint::new(-2, 4, r(2 * n) - r(3)),
        AlgebraId::C(n) => VogelPoint::new(-2, 1, r(n + 2)),
        AlgebraId::D(n) => VogelPoint::new(-2, 4, r(2 * n) - r(4)),
        _ => {
            let n = exceptional_parameter(id).expect("exceptional algebra");
            VogelPoint::new(-2, &n + Rational::from(4), Rational::from(2) * &n + Rational::from(4))
        }
    })
}

/// Where each slot of `X(α, β, γ)` takes its value from.
///
/// Written as three letters over `a`, `b`, `g`: `bag` is `X(β, α, γ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([usize; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2]);
    pub const BAG: Permutation = Permutation([1, 0, 2]);
    pub const GAB: Permutation = Permutation([2, 0, 1]);

    pub fn all() -> [Permutation; 6] {
        [
            Permutation([0, 1, 2]),
            Permutation([0, 2, 1]),
            Permutation([1, 0, 2]),
            Permutation([1, 2, 0]),
            Permutation([2, 0, 1]),
            Permutation([2, 1, 0]),
        ]
    }

    pub fn apply(&self, p: &Triple) -> Triple {
        [p[self.0[0]].clone(), p[self.0[1]].clone(), p[self.0[2]].clone()]
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation::IDENTITY
    }
}

impl Default for Permutation {
    fn default() -> Self {
        Permutation::IDENTITY
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.0 {
            f.write_str(["a", "b", "g"][i])?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Permutation(s.to_string());
        let idx: Vec<usize> = s
            .trim()
            .chars()
            .map(|c| match c {
                'a' => Ok(0),
                'b' => Ok(1),
                'g' => Ok(2),
                _ => Err(bad()),
            })
            .collect::<Result<_, _>>()?;
        let [a, b, c] = idx[..] else { return Err(bad()) };
        if a == b || b == c || a == c {
            return Err(bad());
        }
        Ok(Permutation([a, b, c]))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The four distinguished lines through the table points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VogelLine {
    Sl,
    So,
    Sp,
    Exc,
}

impl VogelLine {
    pub const ALL: [VogelLine; 4] = [VogelLine::Sl, VogelLine::So, VogelLine::Sp, VogelLine::Exc];

    /// The linear form vanishing on the line.
    pub fn constraint(self) -> LinForm3 {
        match self {
            VogelLine::Sl => LinForm3::new(1, 1, 0),
            VogelLine::So => LinForm3::new(2, 1, 0),
            VogelLine::Sp => LinForm3::new(1, 2, 0),
            VogelLine::Exc => LinForm3::new(2, 2, -1),
        }
    }

    pub fn contains(self, p: &VogelPoint) -> bool {
        self.constraint().eval(&p.triple()).is_zero()
    }
}

impl fmt::Display for VogelLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VogelLine::Sl => "sl",
            VogelLine::So => "so",
            VogelLine::Sp => "sp",
            VogelLine::Exc => "exc",
        })
    }
}

impl FromStr for VogelLine {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(VogelLine::Sl),
            "so" => Ok(VogelLine::So),
            "sp" => Ok(VogelLine::Sp),
            "exc" => Ok(VogelLine::Exc),
            _ => Err(ParseError::Line(s.to_string())),
        }
    }
}

impl Serialize for VogelLine {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VogelLine {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The path `s ↦ base + s·direction`, kept inside one line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePath {
    pub line: VogelLine,
    pub base: VogelPoint,
    pub direction: Triple,
}

impl LinePath {
    /// The canonical path through `base`: the cross product of the line's
    /// constraint with `base`, scaled so its first nonzero entry is `+1`.
    ///
    /// It lies in the line and is never parallel to `base`, so it leaves the
    /// projective point instead of merely rescaling it.
    pub fn canonical(line: VogelLine, base: &VogelPoint) -> Result<LinePath, LimitError> {
        let c = line.constraint();
        let [c0, c1, c2] = c.coeffs();
        let [p0, p1, p2] = base.triple();
        let d = [c1 * &p2 - c2 * &p1, c2 * &p0 - c0 * &p2, c0 * &p1 - c1 * &p0];
        let lead = d
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("constraint not parallel to a point on the line");
        let direction = d.map(|x| x / &lead);
        LinePath::new(line, base.clone(), direction)
    }

    pub fn new(line: VogelLine, base: VogelPoint, direction: Triple) -> Result<LinePath, LimitError> {
        let c = line.constraint();
        let value = c.eval(&base.triple());
        if !value.is_zero() {
            return Err(LimitError::NotOnLine {
                line: line.to_string(),
                value,
            });
        }
        let drift = c.eval(&direction);
        assert!(drift.is_zero(), "direction leaves the {line} line");
        assert!(direction.iter().any(|x| !x.is_zero()), "zero direction");
        Ok(LinePath { line, base, direction })
    }

    pub fn at(&self, s: &Rational) -> VogelPoint {
        let b = self.base.triple();
        VogelPoint::from_triple([0, 1, 2].map(|i| &b[i] + s * &self.direction[i]))
    }
}

/// Value of the permuted universal function at `target`, approached along `line`.
pub fn line_limit(
    idx: CartanPowerIndex,
    perm: Permutation,
    line: VogelLine,
    target: &VogelPoint,
) -> Result<SinhProduct, LimitError> {
    let path = LinePath::canonical(line, target)?;
    line_limit_along(idx, perm, &path)
}

/// As [`line_limit`], along an explicit path.
pub fn line_limit_along(idx: CartanPowerIndex, perm: Permutation, path: &LinePath) -> Result<SinhProduct, LimitError> {
    let point = perm.apply(&path.base.triple());
    let direction = perm.apply(&path.direction);
    universal::form_product(idx).limit_along(&point, &direction)
}
