//! The cell notation of the data file.
//!
//! ```text
//! spec     := summand ('⊕' summand)*        "0" is the empty sum
//! summand  := sign? (int '*')? weight | sign? int
//! weight   := '(' atoms ')' | atoms
//! atoms    := atom ('+' atom)*
//! atom     := int? ('w' index | 'lad' | 'lx2') | 'cartan'
//! index    := digits | '{' affine expression in i, k, n '}'
//! ```
//!
//! `2w6` is the weight 2ω₆; `2*w6` is two copies of ω₆. `lx2` expands to
//! both conjugate weights on the A series, and `cartan` is `k·lx2 + n·lad`.
//! A leading `-` on a summand negates it; `-w1-w5` is not valid, write
//! `-w1 ⊕ -w5` or `-(w1+w5)`.

use crate::error::ParseError;
use crate::rootsys::DynkinLabels;

/// Values of the free variables: `i` is the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vars {
    pub i: i64,
    pub k: i64,
    pub n: i64,
}

/// An integer expression over `i`, `k`, `n` with `+`, `-`, `*` and parentheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexExpr {
    Const(i64),
    Var(char),
    Add(Box<IndexExpr>, Box<IndexExpr>),
    Sub(Box<IndexExpr>, Box<IndexExpr>),
    Mul(Box<IndexExpr>, Box<IndexExpr>),
    Neg(Box<IndexExpr>),
}

impl IndexExpr {
    pub fn eval(&self, v: Vars) -> i64 {
        match self {
            IndexExpr::Const(c) => *c,
            IndexExpr::Var('i') => v.i,
            IndexExpr::Var('k') => v.k,
            IndexExpr::Var(_) => v.n,
            IndexExpr::Add(a, b) => a.eval(v) + b.eval(v),
            IndexExpr::Sub(a, b) => a.eval(v) - b.eval(v),
            IndexExpr::Mul(a, b) => a.eval(v) * b.eval(v),
            IndexExpr::Neg(a) => -a.eval(v),
        }
    }

    pub fn parse(src: &str) -> Result<IndexExpr, ParseError> {
        let mut p = Parser::new(src);
        let e = p.index_sum()?;
        p.skip_ws();
        if !p.done() {
            return Err(p.error("trailing input in index expression"));
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Omega { mult: i64, index: IndexExpr },
    Adjoint(i64),
    X2(i64),
    Cartan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    Constant(i64),
    /// `multiplicity · V(Σ atoms)`.
    Weight {
        multiplicity: i64,
        atoms: Vec<Atom>,
    },
}

/// A parsed cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecExpr {
    pub source: String,
    pub summands: Vec<Summand>,
}

/// What the data file needs from an algebra to instantiate a cell.
pub struct WeightContext<'a> {
    pub rank: usize,
    pub adjoint: &'a DynkinLabels,
    pub x2: &'a [DynkinLabels],
}

/// A weight index that falls outside `1..=rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexOutOfRange(pub i64);

impl SpecExpr {
    pub fn parse(src: &str) -> Result<SpecExpr, ParseError> {
        let mut p = Parser::new(src);
        let mut summands = Vec::new();
        p.skip_ws();
        if p.eat_str("0") {
            p.skip_ws();
            if p.done() {
                return Ok(SpecExpr {
                    source: src.to_string(),
                    summands,
                });
            }
            p.pos = 0;
        }
        loop {
            summands.push(p.summand()?);
            p.skip_ws();
            if p.done() {
                break;
            }
            if !p.eat_str("⊕") {
                return Err(p.error("expected `⊕` between summands"));
            }
        }
        Ok(SpecExpr {
            source: src.to_string(),
            summands,
        })
    }

    /// Every `w{…}` index used, for rank checks.
    pub fn indices(&self) -> impl Iterator<Item = &IndexExpr> {
        self.summands.iter().flat_map(|s| match s {
            Summand::Weight { atoms, .. } => atoms
                .iter()
                .filter_map(|a| match a {
                    Atom::Omega { index, .. } => Some(index),
                    _ => None,
                })
                .collect::<Vec<_>>(),
            Summand::Constant(_) => Vec::new(),
        })
    }

    /// `(constant, [(multiplicity, labels)])` at the given rank and powers.
    pub fn instantiate(
        &self,
        ctx: &WeightContext<'_>,
        vars: Vars,
    ) -> Result<(i64, Vec<(i64, DynkinLabels)>), IndexOutOfRange> {
        let mut constant = 0;
        let mut terms = Vec::new();
        for s in &self.summands {
            match s {
                Summand::Constant(c) => constant += c,
                Summand::Weight { multiplicity, atoms } => {
                    // A weight is a set of alternatives only through `lx2` on the A series.
                    let mut weights: Vec<DynkinLabels> = vec![vec![0; ctx.rank]];
                    for atom in atoms {
                        let choices: Vec<DynkinLabels> = match atom {
                            Atom::Omega { mult, index } => {
                                let j = index.eval(vars);
                                if j < 1 || j > ctx.rank as i64 {
                                    return Err(IndexOutOfRange(j));
                                }
                                let mut w = vec![0; ctx.rank];
                                w[(j - 1) as usize] = *mult;
                                vec![w]
                            }
                            Atom::Adjoint(m) => vec![ctx.adjoint.iter().map(|a| a * m).collect()],
                            Atom::X2(m) => ctx.x2.iter().map(|w| w.iter().map(|a| a * m).collect()).collect(),
                            Atom::Cartan => {
                                if vars.k == 0 {
                                    vec![ctx.adjoint.iter().map(|a| a * vars.n).collect()]
                                } else {
                                    ctx.x2
                                        .iter()
                                        .map(|w| {
                                            w.iter()
                                                .zip(ctx.adjoint)
                                                .map(|(x, a)| vars.k * x + vars.n * a)
                                                .collect()
                                        })
                                        .collect()
                                }
                            }
                        };
                        weights = match (weights.len(), choices.len()) {
                            (_, 1) => weights.into_iter().map(|w| add(&w, &choices[0])).collect(),
                            (1, _) => choices.iter().map(|c| add(&weights[0], c)).collect(),
                            // Two couples pair up conjugate with conjugate.
                            _ => weights.iter().zip(&choices).map(|(w, c)| add(w, c)).collect(),
                        };
                    }
                    terms.extend(weights.into_iter().map(|w| (*multiplicity, w)));
                }
            }
        }
        Ok((constant, terms))
    }
}

fn add(a: &[i64], b: &[i64]) -> DynkinLabels {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn done(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, reason: &str) -> ParseError {
        ParseError::Expression {
            expr: self.src.to_string(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<i64> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        let v = self.rest()[..digits].parse().ok()?;
        self.pos += digits;
        Some(v)
    }

    fn summand(&mut self) -> Result<Summand, ParseError> {
        let sign = if self.eat('-') { -1 } else { 1 };
        let start = self.pos;
        if let Some(c) = self.int() {
            if self.eat('*') {
                let atoms = self.weight()?;
                return Ok(Summand::Weight {
                    multiplicity: sign * c,
                    atoms,
                });
            }
            self.skip_ws();
            if self.done() || self.rest().starts_with("⊕") {
                return Ok(Summand::Constant(sign * c));
            }
            self.pos = start;
        }
        let atoms = self.weight()?;
        Ok(Summand::Weight {
            multiplicity: sign,
            atoms,
        })
    }

    fn weight(&mut self) -> Result<Vec<Atom>, ParseError> {
        let paren = self.eat('(');
        let mut atoms = vec![self.atom()?];
        while self.eat('+') {
            atoms.push(self.atom()?);
        }
        if paren && !self.eat(')') {
            return Err(self.error("expected `)`"));
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let mult = self.int().unwrap_or(1);
        self.skip_ws();
        if self.eat_str("cartan") {
            return Ok(Atom::Cartan);
        }
        if self.eat_str("lad") {
            return Ok(Atom::Adjoint(mult));
        }
        if self.eat_str("lx2") {
            return Ok(Atom::X2(mult));
        }
        if self.eat_str("w") {
            let index = if self.eat('{') {
                let e = self.index_sum()?;
                if !self.eat('}') {
                    return Err(self.error("expected `}`"));
                }
                e
            } else {
                IndexExpr::Const(self.int().ok_or_else(|| self.error("expected a weight index"))?)
            };
            return Ok(Atom::Omega { mult, index });
        }
        Err(self.error("expected `w`, `lad`, `lx2` or `cartan`"))
    }

    fn index_sum(&mut self) -> Result<IndexExpr, ParseError> {
        let mut e = if self.eat('-') {
            IndexExpr::Neg(Box::new(self.index_product()?))
        } else {
            self.index_product()?
        };
        loop {
            if self.eat('+') {
                e = IndexExpr::Add(Box::new(e), Box::new(self.index_product()?));
            } else if self.eat('-') {
                e = IndexExpr::Sub(Box::new(e), Box::new(self.index_product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn index_product(&mut self) -> Result<IndexExpr, ParseError> {
        let mut e = self.index_factor()?;
        loop {
            self.skip_ws();
            // `2k` is `2*k`.
            let implicit = matches!(self.peek(), Some('i' | 'k' | 'n' | '('));
            if self.eat('*') || implicit {
                e = IndexExpr::Mul(Box::new(e), Box::new(self.index_factor()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn index_factor(&mut self) -> Result<IndexExpr, ParseError> {
        if let Some(c) = self.int() {
            return Ok(IndexExpr::Const(c));
        }
        if self.eat('(') {
            let e = self.index_sum()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(e);
        }
        match self.peek() {
            Some(c @ ('i' | 'k' | 'n')) => {
                self.pos += 1;
                Ok(IndexExpr::Var(c))
            }
            _ => Err(self.error("expected an integer, `i`, `k`, `n` or `(`")),
        }
    }
}
