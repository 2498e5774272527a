//! Printed closed forms from the proof appendix, as test oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use serde::Deserialize;
use vogel_qdim::exact::{LinForm3, Rational, Triple};
use vogel_qdim::sinhprod::{make_term, SinhProduct};
use vogel_qdim::universal::{l_terms, CartanPowerIndex};

pub const APPENDIX_TOML: &str = include_str!("../data/appendix_b.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct Printed {
    #[serde(default = "one")]
    pub coeff: String,
    pub numer: String,
    pub denom: String,
}

fn one() -> String {
    "1".into()
}

#[derive(Clone, Debug, Deserialize)]
pub struct Erratum {
    #[serde(flatten)]
    pub form: Printed,
    pub note: String,
    #[serde(default)]
    pub applies_to: usize,
    /// Overrides for the reading: factor names, range of `k`, sinh scale.
    pub factors: Option<Vec<String>>,
    pub k: Option<[u32; 2]>,
    pub scale: Option<String>,
}

impl Erratum {
    fn check(&self, section: &Section, factors: &[String], allow_sign: bool) -> Tally {
        let mut s = section.clone();
        if let Some(k) = self.k {
            s.k = k;
        }
        if let Some(scale) = &self.scale {
            s.scale = scale.clone();
        }
        check_form(&s, self.factors.as_deref().unwrap_or(factors), &self.form, allow_sign)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Term {
    pub factors: Vec<String>,
    pub forms: Vec<Printed>,
    pub erratum: Option<Erratum>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Product {
    #[serde(flatten)]
    pub form: Printed,
    pub erratum: Option<Erratum>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Section {
    pub name: String,
    pub point: [String; 3],
    #[serde(default)]
    pub ranks: Vec<i64>,
    #[serde(default = "full")]
    pub k: [u32; 2],
    #[serde(default = "full")]
    pub n: [u32; 2],
    pub scale: String,
    pub term: Vec<Term>,
    pub product: Product,
}

fn full() -> [u32; 2] {
    [0, 4]
}

#[derive(Debug, Deserialize)]
pub struct Appendix {
    pub section: Vec<Section>,
}

pub fn appendix() -> Appendix {
    toml::from_str(APPENDIX_TOML).expect("appendix data parses")
}

/// `c + a·α + b·β + g·γ` with the integer variables already substituted.
#[derive(Clone, Debug, PartialEq)]
struct Affine([Rational; 4]);

impl Affine {
    fn constant(c: Rational) -> Self {
        Affine([c, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    fn is_constant(&self) -> bool {
        self.0[1..].iter().all(Rational::is_zero)
    }

    fn add(&self, o: &Affine, sign: i64) -> Affine {
        let s = Rational::from(sign);
        Affine(std::array::from_fn(|i| &self.0[i] + &(&o.0[i] * &s)))
    }

    fn scale(&self, c: &Rational) -> Affine {
        Affine(std::array::from_fn(|i| &self.0[i] * c))
    }
}

/// Values of `k`, `n`, `N` in printed expressions.
#[derive(Clone, Copy, Debug)]
pub struct Env {
    pub k: i64,
    pub n: i64,
    pub rank: i64,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    env: Env,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.s.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        let hit = self.peek() == Some(c);
        self.pos += hit as usize;
        hit
    }

    fn expr(&mut self) -> Affine {
        let mut acc = if self.eat(b'-') {
            self.term().scale(&(-1).into())
        } else {
            self.term()
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term(), 1);
            } else if self.peek() == Some(b'-') {
                self.pos += 1;
                acc = acc.add(&self.term(), -1);
            } else {
                return acc;
            }
        }
    }

    fn term(&mut self) -> Affine {
        let mut acc = self.factor();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = mul(&acc, &self.factor());
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor();
                    assert!(d.is_constant(), "division by a form");
                    acc = acc.scale(&d.0[0].recip().expect("nonzero divisor"));
                }
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => acc = mul(&acc, &self.factor()),
                _ => return acc,
            }
        }
    }

    fn factor(&mut self) -> Affine {
        let c = self.peek().expect("unexpected end of expression");
        self.pos += 1;
        let var = |v: i64| Affine::constant(v.into());
        let sym = |i: usize| {
            let mut a = Affine::constant(Rational::zero());
            a.0[i] = Rational::one();
            a
        };
        match c {
            b'(' => {
                let e = self.expr();
                assert!(self.eat(b')'), "unbalanced parentheses");
                e
            }
            b'k' => var(self.env.k),
            b'n' => var(self.env.n),
            b'N' => var(self.env.rank),
            b'a' => sym(1),
            b'b' => sym(2),
            b'g' => sym(3),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let v: i64 = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                var(v)
            }
            _ => panic!("unexpected `{}`", c as char),
        }
    }
}

fn mul(a: &Affine, b: &Affine) -> Affine {
    if a.is_constant() {
        b.scale(&a.0[0])
    } else {
        assert!(b.is_constant(), "product of two forms");
        a.scale(&b.0[0])
    }
}

fn parse_expr(src: &str, env: Env) -> Affine {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
        env,
    };
    let e = p.expr();
    assert!(p.peek().is_none(), "trailing input in `{src}`");
    e
}

/// Items of a printed list: `expr`, `[lo .. hi]` (step one), each with an
/// optional `^p`, separated by `;`.
fn parse_items(src: &str, env: Env) -> Vec<Affine> {
    let mut out = Vec::new();
    for item in src.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (base, power) = match item.rsplit_once('^') {
            Some((b, p)) if !p.contains(')') && !p.contains(']') => (b.trim(), p.trim().parse::<usize>().unwrap()),
            _ => (item, 1),
        };
        let values = if let Some(inner) = base.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let (lo, hi) = inner.split_once("..").expect("range");
            let (lo, hi) = (parse_expr(lo, env), parse_expr(hi, env));
            assert!(lo.is_constant() && hi.is_constant(), "symbolic range");
            let mut v = lo.0[0].clone();
            let mut vs = Vec::new();
            while v <= hi.0[0] {
                vs.push(Affine::constant(v.clone()));
                v += Rational::one();
            }
            vs
        } else {
            vec![parse_expr(base, env)]
        };
        for _ in 0..power {
            out.extend(values.iter().cloned());
        }
    }
    out
}

/// A product at a point: nonvanishing arguments, vanishing forms, and hard zeros.
#[derive(Clone, Debug, Default)]
pub struct Partial {
    coeff: Option<Rational>,
    numer: Vec<Rational>,
    denom: Vec<Rational>,
    numer_vanishing: Vec<LinForm3>,
    denom_vanishing: Vec<LinForm3>,
    zero_numer: bool,
    zero_denom: bool,
}

/// The outcome of a comparison-ready product.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Product(SinhProduct),
    /// Vanishing forms left over, as sorted strings.
    Unresolved {
        product: SinhProduct,
        numer: Vec<String>,
        denom: Vec<String>,
    },
    Singular,
}

impl Value {
    pub fn negate(&self) -> Value {
        match self {
            Value::Product(p) => Value::Product(p.scale(&(-1).into())),
            Value::Unresolved { product, numer, denom } => Value::Unresolved {
                product: product.scale(&(-1).into()),
                numer: numer.clone(),
                denom: denom.clone(),
            },
            Value::Singular => Value::Singular,
        }
    }
}

impl Partial {
    fn push(&mut self, form: LinForm3, p: &Triple, numer: bool) {
        let v = form.eval(p);
        match (v.is_zero(), numer) {
            (false, true) => self.numer.push(v),
            (false, false) => self.denom.push(v),
            (true, true) => self.numer_vanishing.push(form),
            (true, false) => self.denom_vanishing.push(form),
        }
    }

    pub fn times(&mut self, other: Partial) {
        self.coeff = match (self.coeff.take(), other.coeff) {
            (Some(a), Some(b)) => Some(a * b),
            (a, b) => a.or(b),
        };
        self.numer.extend(other.numer);
        self.denom.extend(other.denom);
        self.numer_vanishing.extend(other.numer_vanishing);
        self.denom_vanishing.extend(other.denom_vanishing);
        self.zero_numer |= other.zero_numer;
        self.zero_denom |= other.zero_denom;
    }

    pub fn value(mut self) -> Value {
        if self.zero_denom {
            return Value::Singular;
        }
        let mut coeff = self.coeff.take().unwrap_or_else(Rational::one);
        let mut left = Vec::new();
        for f in std::mem::take(&mut self.numer_vanishing) {
            let j = self
                .denom_vanishing
                .iter()
                .position(|m| f.ratio_to(m).is_some_and(|c| !c.is_zero()));
            match j {
                Some(j) => {
                    let m = self.denom_vanishing.swap_remove(j);
                    coeff *= f.ratio_to(&m).unwrap();
                }
                None => left.push(f),
            }
        }
        if self.zero_numer || (!left.is_empty() && self.denom_vanishing.is_empty()) {
            return Value::Product(SinhProduct::zero());
        }
        let product = make_term(coeff, &self.numer, &self.denom)
            .map(|(_, v)| v)
            .expect("nonvanishing arguments");
        if left.is_empty() && self.denom_vanishing.is_empty() {
            return Value::Product(product);
        }
        let strings = |v: &[LinForm3]| {
            let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
            s.sort();
            s
        };
        Value::Unresolved {
            product,
            numer: strings(&left),
            denom: strings(&self.denom_vanishing),
        }
    }
}

pub fn point(section: &Section, rank: i64) -> Triple {
    let env = Env { k: 0, n: 0, rank };
    section.point.clone().map(|s| {
        let a = parse_expr(&s, env);
        assert!(a.is_constant());
        a.0[0].clone()
    })
}

/// A printed form in `sinh[x·scale: …]` notation, at a point.
pub fn printed(form: &Printed, scale: &Rational, env: Env, p: &Triple) -> Partial {
    let mut out = Partial {
        coeff: Some(parse_expr(&form.coeff, env).0[0].clone()),
        ..Partial::default()
    };
    for (src, numer) in [(&form.numer, true), (&form.denom, false)] {
        for item in parse_items(src, env) {
            let item = item.scale(scale);
            if item.is_constant() {
                match (item.0[0].is_zero(), numer) {
                    (true, true) => out.zero_numer = true,
                    (true, false) => out.zero_denom = true,
                    (false, true) => out.numer.push(item.0[0].clone()),
                    (false, false) => out.denom.push(item.0[0].clone()),
                }
            } else {
                let [c, a, b, g] = item.0.clone();
                assert!(c.is_zero(), "affine symbolic factor");
                out.push(LinForm3::from_coeffs([a, b, g]), p, numer);
            }
        }
    }
    out
}

/// The engine's factors of the given names at a point.
pub fn engine(names: &[String], idx: CartanPowerIndex, p: &Triple) -> Partial {
    let mut out = Partial::default();
    for f in l_terms(idx).into_iter().filter(|f| names.iter().any(|n| n == f.name)) {
        for form in f.numer {
            out.push(form, p, true);
        }
        for form in f.denom {
            out.push(form, p, false);
        }
    }
    out
}

pub fn all_factors() -> Vec<String> {
    vogel_qdim::universal::FACTOR_NAMES
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Cases of a section: `(rank, k, n)`.
pub fn cases(section: &Section) -> Vec<(i64, u32, u32)> {
    let ranks = if section.ranks.is_empty() {
        vec![0]
    } else {
        section.ranks.clone()
    };
    let mut out = Vec::new();
    for &r in &ranks {
        for k in section.k[0]..=section.k[1] {
            for n in section.n[0]..=section.n[1] {
                out.push((r, k, n));
            }
        }
    }
    out
}

/// How a printed item fares against the engine.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checked: usize,
    /// Equal only after flipping the sign.
    pub sign_flips: usize,
    pub failures: Vec<String>,
}

/// Checks one printed form over all cases. Terms may differ in sign; products may not.
pub fn check_form(section: &Section, factors: &[String], form: &Printed, allow_sign: bool) -> Tally {
    let scale: Rational = section.scale.parse().unwrap();
    let mut tally = Tally::default();
    for (rank, k, n) in cases(section) {
        let p = point(section, rank);
        let env = Env {
            k: k as i64,
            n: n as i64,
            rank,
        };
        let idx = CartanPowerIndex::new(k, n);
        let want = engine(factors, idx, &p).value();
        let got = printed(form, &scale, env, &p).value();
        tally.checked += 1;
        if want == got {
            continue;
        }
        if allow_sign && want == got.negate() {
            tally.sign_flips += 1;
            continue;
        }
        let at = if section.ranks.is_empty() {
            String::new()
        } else {
            format!("N={rank} ")
        };
        tally
            .failures
            .push(format!("{at}k={k} n={n}: engine {want:?}, printed {got:?}"));
    }
    tally
}

/// One row of the appendix audit.
#[derive(Clone, Debug)]
pub struct AuditRow {
    pub section: String,
    pub item: String,
    pub tally: Tally,
    pub erratum: Option<(String, Tally)>,
}

pub fn audit() -> Vec<AuditRow> {
    let mut rows = Vec::new();
    for s in appendix().section {
        for t in &s.term {
            for (i, form) in t.forms.iter().enumerate() {
                let item = format!("{}{}", t.factors.join("·"), if i > 0 { " (short)" } else { "" });
                let tally = check_form(&s, &t.factors, form, true);
                let erratum = t
                    .erratum
                    .as_ref()
                    .filter(|e| e.applies_to == i)
                    .map(|e| (e.note.clone(), e.check(&s, &t.factors, true)));
                rows.push(AuditRow {
                    section: s.name.clone(),
                    item,
                    tally,
                    erratum,
                });
            }
        }
        let all = all_factors();
        rows.push(AuditRow {
            section: s.name.clone(),
            item: "product".into(),
            tally: check_form(&s, &all, &s.product.form, false),
            erratum: s
                .product
                .erratum
                .as_ref()
                .map(|e| (e.note.clone(), e.check(&s, &all, false))),
        });
    }
    rows
}

/// Failures per section, for summaries.
pub fn failures_by_section(rows: &[AuditRow]) -> BTreeMap<String, Vec<String>> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in rows.iter().filter(|r| !r.tally.failures.is_empty()) {
        out.entry(r.section.clone()).or_default().push(r.item.clone());
    }
    out
}
