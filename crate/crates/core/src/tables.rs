//! Tables 2–8 as data, and their verification against the Weyl formula.

mod expr;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use expr::{IndexExpr, SpecExpr, Vars};

use crate::error::{LimitError, ParseError, TermError};
use crate::exact::Rational;
use crate::rootsys::{table1_weights, RepSpec, RootSystem};
use crate::sinhprod::{SinhProduct, SinhSum};
use crate::universal::{form_product, CartanPowerIndex};
use crate::vogel::{line_limit, vogel_point, AlgebraId, Permutation, VogelLine};

const TABLES_TOML: &str = include_str!("../data/tables.toml");

/// A range of `k` or `n`: `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Range {
    fn parse(s: &str) -> Result<Range, ParseError> {
        let bad = || ParseError::Data(format!("invalid range `{s}`"));
        let s = s.trim();
        if s == "*" {
            return Ok(Range { lo: 0, hi: None });
        }
        if let Some(rest) = s.strip_prefix(">=") {
            return Ok(Range {
                lo: rest.trim().parse().map_err(|_| bad())?,
                hi: None,
            });
        }
        let v = s.parse().map_err(|_| bad())?;
        Ok(Range { lo: v, hi: Some(v) })
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }

    /// Values in the range that are at most `cap`.
    pub fn values(&self, cap: u32) -> impl Iterator<Item = u32> {
        self.lo..=self.hi.unwrap_or(cap).min(cap)
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            None if self.lo == 0 => f.write_str("*"),
            None => write!(f, ">={}", self.lo),
            Some(h) if h == self.lo => write!(f, "{h}"),
            Some(h) => write!(f, "{}..={h}", self.lo),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellKind {
    /// Tables 2 and 3, proved case by case.
    Proposition,
    /// Tables 4–8, checked only at random in the source.
    Conjecture,
    /// Not printed anywhere; zero by the "zero elsewhere" rule.
    DefaultZero,
}

#[derive(Deserialize)]
struct CellRecord {
    table: u8,
    row: String,
    column: String,
    algebra: Vec<String>,
    min_rank: Option<u32>,
    max_rank: Option<u32>,
    k: String,
    n: String,
    perm: Permutation,
    line: Option<VogelLine>,
    expected: String,
    alternative: Option<String>,
    stable: Option<String>,
    note: Option<String>,
}

#[derive(Deserialize)]
struct TablesFile {
    version: u32,
    cell: Vec<CellRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum AlgebraPattern {
    Exact(AlgebraId),
    Family(char),
}

/// One printed cell of Tables 2–8.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub table: u8,
    pub row: String,
    pub column: String,
    algebras: Vec<AlgebraPattern>,
    pub min_rank: Option<u32>,
    pub max_rank: Option<u32>,
    pub k: Range,
    pub n: Range,
    pub perm: Permutation,
    pub line: Option<VogelLine>,
    pub expected: SpecExpr,
    pub alternative: Option<SpecExpr>,
    pub stable: Option<IndexExpr>,
    pub note: Option<String>,
}

impl TableCell {
    pub fn kind(&self) -> CellKind {
        if self.table <= 3 {
            CellKind::Proposition
        } else {
            CellKind::Conjecture
        }
    }

    pub fn label(&self) -> String {
        format!("T{} [{}] [{}]", self.table, self.row, self.column)
    }

    pub fn matches_algebra(&self, id: AlgebraId) -> bool {
        let rank = id.rank() as u32;
        self.algebras.iter().any(|p| match p {
            AlgebraPattern::Exact(a) => *a == id,
            AlgebraPattern::Family(f) => {
                !id.is_exceptional()
                    && id.family() == *f
                    && self.min_rank.is_none_or(|m| rank >= m)
                    && self.max_rank.is_none_or(|m| rank <= m)
            }
        })
    }

    pub fn matches(&self, id: AlgebraId, idx: CartanPowerIndex, perm: Permutation) -> bool {
        self.perm == perm && self.k.contains(idx.k) && self.n.contains(idx.n) && self.matches_algebra(id)
    }

    /// The algebras as written in the data, with any rank bounds.
    pub fn algebra_pattern(&self) -> String {
        let mut parts: Vec<String> = self
            .algebras
            .iter()
            .map(|p| match p {
                AlgebraPattern::Exact(a) => a.to_string(),
                AlgebraPattern::Family(f) => format!("{f}_i"),
            })
            .collect();
        match (self.min_rank, self.max_rank) {
            (Some(lo), Some(hi)) => parts.push(format!("{lo}<=i<={hi}")),
            (Some(lo), None) => parts.push(format!("i>={lo}")),
            (None, Some(hi)) => parts.push(format!("i<={hi}")),
            (None, None) => {}
        }
        parts.join(" ")
    }

    /// Exact algebras named by the cell, or the families it ranges over.
    pub fn exact_algebras(&self) -> Vec<AlgebraId> {
        self.algebras
            .iter()
            .filter_map(|p| match p {
                AlgebraPattern::Exact(a) => Some(*a),
                AlgebraPattern::Family(_) => None,
            })
            .collect()
    }

    pub fn families(&self) -> Vec<char> {
        self.algebras
            .iter()
            .filter_map(|p| match p {
                AlgebraPattern::Family(f) => Some(*f),
                AlgebraPattern::Exact(_) => None,
            })
            .collect()
    }

    /// The smallest rank at which the cell's pattern is claimed, if any.
    pub fn stable_rank(&self, idx: CartanPowerIndex) -> Option<i64> {
        self.stable.as_ref().map(|e| {
            e.eval(Vars {
                i: 0,
                k: idx.k as i64,
                n: idx.n as i64,
            })
        })
    }
}

fn parse_algebra_pattern(s: &str) -> Result<AlgebraPattern, ParseError> {
    match s {
        "A" | "B" | "C" | "D" => Ok(AlgebraPattern::Family(s.chars().next().expect("one letter"))),
        _ => s.parse().map(AlgebraPattern::Exact),
    }
}

fn parse_tables(src: &str) -> Result<Vec<TableCell>, ParseError> {
    let file: TablesFile = toml::from_str(src).map_err(|e| ParseError::Data(e.to_string()))?;
    if file.version != 1 {
        return Err(ParseError::Data(format!("unsupported tables version {}", file.version)));
    }
    file.cell
        .into_iter()
        .map(|r| {
            Ok(TableCell {
                table: r.table,
                row: r.row,
                column: r.column,
                algebras: r
                    .algebra
                    .iter()
                    .map(|a| parse_algebra_pattern(a))
                    .collect::<Result<_, _>>()?,
                min_rank: r.min_rank,
                max_rank: r.max_rank,
                k: Range::parse(&r.k)?,
                n: Range::parse(&r.n)?,
                perm: r.perm,
                line: r.line,
                expected: SpecExpr::parse(&r.expected)?,
                alternative: r.alternative.as_deref().map(SpecExpr::parse).transpose()?,
                stable: r.stable.as_deref().map(IndexExpr::parse).transpose()?,
                note: r.note,
            })
        })
        .collect()
}

/// Every printed cell, in data-file order.
pub fn cells() -> &'static [TableCell] {
    static CELLS: OnceLock<Vec<TableCell>> = OnceLock::new();
    CELLS.get_or_init(|| parse_tables(TABLES_TOML).expect("shipped tables parse"))
}

/// The verification case for a single computation, when the tables say
/// anything about it. Uncovered cases count only for exceptional algebras.
pub fn table_entry(
    id: AlgebraId,
    idx: CartanPowerIndex,
    perm: Permutation,
    line: Option<VogelLine>,
) -> Option<TableEntry> {
    let cell = match expected_rep(id, idx, perm, line) {
        Expected::Rep { cell, .. } | Expected::BelowStableRank { cell, .. } => Some(cell),
        Expected::NotCovered if id.is_exceptional() => None,
        Expected::NotCovered => return None,
    };
    Some(entry(cell, id, idx.k, idx.n, perm, line))
}

/// What the tables claim for a case.
#[derive(Clone, Debug)]
pub enum Expected {
    Rep {
        spec: RepSpec,
        cell: &'static TableCell,
    },
    BelowStableRank {
        cell: &'static TableCell,
        stable_rank: i64,
    },
    /// No cell covers the case; the value should be zero.
    NotCovered,
}

fn instantiate(cell: &TableCell, spec: &SpecExpr, id: AlgebraId, idx: CartanPowerIndex) -> Option<RepSpec> {
    let (adjoint, x2) = table1_weights(id).ok()?;
    let ctx = expr::WeightContext {
        rank: id.rank(),
        adjoint: &adjoint,
        x2: &x2,
    };
    let vars = Vars {
        i: id.rank() as i64,
        k: idx.k as i64,
        n: idx.n as i64,
    };
    let _ = cell;
    let (constant, terms) = spec.instantiate(&ctx, vars).ok()?;
    Some(RepSpec {
        constant: Rational::from(constant),
        terms,
    })
}

/// The table entry for a case.
///
/// Cells tagged with a line match only that line, where no line means the
/// algebra's own. Untagged cells match any line; a matching tagged cell wins.
pub fn expected_rep(id: AlgebraId, idx: CartanPowerIndex, perm: Permutation, line: Option<VogelLine>) -> Expected {
    let candidates = cells().iter().filter(|c| c.matches(id, idx, perm));
    let mut tagged = None;
    let mut untagged = None;
    for c in candidates {
        match c.line {
            Some(l) if l == line.unwrap_or(id.natural_line()) => tagged = tagged.or(Some(c)),
            Some(_) => {}
            None => untagged = untagged.or(Some(c)),
        }
    }
    let Some(cell) = tagged.or(untagged) else {
        return Expected::NotCovered;
    };
    if let Some(stable_rank) = cell.stable_rank(idx) {
        if (id.rank() as i64) < stable_rank {
            return Expected::BelowStableRank { cell, stable_rank };
        }
    }
    match instantiate(cell, &cell.expected, id, idx) {
        Some(spec) => Expected::Rep { spec, cell },
        // An index outside 1..=rank is a below-threshold instance of a pattern.
        None => Expected::BelowStableRank {
            cell,
            stable_rank: cell.stable_rank(idx).unwrap_or(id.rank() as i64 + 1),
        },
    }
}

/// One case to verify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub table: Option<u8>,
    pub cell: Option<String>,
    pub algebra: AlgebraId,
    pub k: u32,
    pub n: u32,
    pub perm: Permutation,
    pub line: Option<VogelLine>,
    pub kind: CellKind,
}

impl TableEntry {
    pub fn idx(&self) -> CartanPowerIndex {
        CartanPowerIndex::new(self.k, self.n)
    }

    fn sort_key(&self) -> impl Ord {
        (
            self.table.unwrap_or(u8::MAX),
            self.algebra,
            self.perm,
            self.line,
            self.k,
            self.n,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    SkippedBelowStableRank,
    /// The value could not be computed: a singular point, or a line limit
    /// whose vanishing orders do not balance.
    LimitCountMismatch,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::SkippedBelowStableRank => "skipped-below-stable-rank",
            Status::LimitCountMismatch => "limit-count-mismatch",
        })
    }
}

/// How the universal value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evaluation {
    Direct,
    Limit(VogelLine),
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub entry: TableEntry,
    pub status: Status,
    pub evaluation: Option<Evaluation>,
    pub expected: Option<String>,
    pub expected_dimension: Option<Rational>,
    pub computed: Option<SinhProduct>,
    pub computed_dimension: Option<Rational>,
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

/// `X` for the entry, directly or through a line limit.
///
/// An explicit line always uses the limit. Otherwise an indeterminate point
/// is approached along the algebra's own line.
pub fn universal_value(
    id: AlgebraId,
    idx: CartanPowerIndex,
    perm: Permutation,
    line: Option<VogelLine>,
) -> Result<(SinhProduct, Evaluation), String> {
    let p = vogel_point(id).map_err(|e| e.to_string())?;
    let limit = |l: VogelLine| -> Result<(SinhProduct, Evaluation), String> {
        line_limit(idx, perm, l, &p)
            .map(|v| (v, Evaluation::Limit(l)))
            .map_err(|e: LimitError| format!("{l} line: {e}"))
    };
    if let Some(l) = line {
        return limit(l);
    }
    match form_product(idx).evaluate(&p.permute(perm).triple()) {
        Ok((_, v)) => Ok((v, Evaluation::Direct)),
        Err(TermError::Indeterminate { .. }) => limit(id.natural_line()),
        Err(e) => Err(e.to_string()),
    }
}

/// Exact comparison of a universal value with a table entry.
pub fn compare(rs: &RootSystem, computed: &SinhProduct, spec: &RepSpec) -> Result<bool, String> {
    let expected = rs.qdim_of_spec(spec).map_err(|e| e.to_string())?;
    let want = expected.dimension_limit().map_err(|e| e.to_string())?;
    let got = computed.dimension_limit().map_err(|e| e.to_string())?;
    Ok(want == got && SinhSum::from(computed.clone()).exactly_equals(&expected))
}

fn root_system(id: AlgebraId) -> RootSystem {
    RootSystem::build(id).expect("validated algebra")
}

pub fn verify_case(entry: &TableEntry) -> VerdictRecord {
    verify_case_with(entry, &root_system(entry.algebra))
}

fn verify_case_with(entry: &TableEntry, rs: &RootSystem) -> VerdictRecord {
    let start = Instant::now();
    let mut record = VerdictRecord {
        entry: entry.clone(),
        status: Status::Match,
        evaluation: None,
        expected: None,
        expected_dimension: None,
        computed: None,
        computed_dimension: None,
        detail: None,
        micros: None,
    };
    let mut alternative = None;
    let spec = match expected_rep(entry.algebra, entry.idx(), entry.perm, entry.line) {
        Expected::Rep { spec, cell } => {
            record.expected = Some(cell.expected.source.clone());
            alternative = cell
                .alternative
                .as_ref()
                .and_then(|a| Some((a.source.clone(), instantiate(cell, a, entry.algebra, entry.idx())?)));
            spec
        }
        Expected::BelowStableRank { cell, stable_rank } => {
            record.status = Status::SkippedBelowStableRank;
            record.expected = Some(cell.expected.source.clone());
            record.detail = Some(format!("stable from rank {stable_rank}"));
            return record;
        }
        Expected::NotCovered => {
            record.expected = Some("0".into());
            RepSpec::zero()
        }
    };
    record.expected_dimension = rs.dim_of_spec(&spec).ok();
    match universal_value(entry.algebra, entry.idx(), entry.perm, entry.line) {
        Ok((value, evaluation)) => {
            record.evaluation = Some(evaluation);
            record.computed_dimension = value.dimension_limit().ok();
            match compare(rs, &value, &spec) {
                Ok(true) => {}
                Ok(false) => {
                    record.status = Status::Mismatch;
                    if let Some((source, alt)) = &alternative {
                        if compare(rs, &value, alt) == Ok(true) {
                            record.detail = Some(format!("matches alternative reading `{source}`"));
                        }
                    }
                }
                Err(e) => {
                    record.status = Status::Mismatch;
                    record.detail = Some(e);
                }
            }
            record.computed = Some(value);
        }
        Err(e) => {
            record.status = Status::LimitCountMismatch;
            record.detail = Some(e);
        }
    }
    record.micros = Some(start.elapsed().as_micros() as u64);
    record
}

/// Which cases a sweep covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub tables: Vec<u8>,
    pub max_k: u32,
    pub max_n: u32,
    /// Classical ranks for Tables 2 and 7.
    pub min_rank: u32,
    pub max_rank: u32,
    /// Ranks checked at and above each Table 6 stable threshold.
    pub stable_ranks: u32,
    /// Also check uncovered exceptional cases against the zero default.
    pub default_zero: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            tables: vec![2, 3, 4, 5, 6, 7, 8],
            max_k: 4,
            max_n: 4,
            min_rank: 1,
            max_rank: 12,
            stable_ranks: 3,
            default_zero: false,
        }
    }
}

fn classical(family: char, lo: u32, hi: u32) -> Vec<AlgebraId> {
    (lo..=hi)
        .filter_map(|r| AlgebraId::from_family(family, r).ok())
        .collect()
}

fn entry(
    cell: Option<&TableCell>,
    algebra: AlgebraId,
    k: u32,
    n: u32,
    perm: Permutation,
    line: Option<VogelLine>,
) -> TableEntry {
    TableEntry {
        table: cell.map(|c| c.table),
        cell: cell.map(TableCell::label),
        algebra,
        k,
        n,
        perm,
        line,
        kind: cell.map_or(CellKind::DefaultZero, TableCell::kind),
    }
}

/// All cases of a sweep, in report order.
pub fn instantiate_sweep(config: &SweepConfig) -> Vec<TableEntry> {
    let mut out = Vec::new();
    for cell in cells().iter().filter(|c| config.tables.contains(&c.table)) {
        let ks: Vec<u32> = cell.k.values(config.max_k).collect();
        let ns: Vec<u32> = cell.n.values(config.max_n).collect();
        let mut algebras = cell.exact_algebras();
        for f in cell.families() {
            let lo = cell.min_rank.unwrap_or(0).max(config.min_rank);
            let hi = cell.max_rank.unwrap_or(u32::MAX).min(config.max_rank);
            algebras.extend(classical(f, lo, hi));
        }
        for &k in &ks {
            for &n in &ns {
                let idx = CartanPowerIndex::new(k, n);
                let ids = match cell.stable_rank(idx) {
                    // Patterns in the rank are checked at their first stable ranks only.
                    Some(s) => {
                        let s = s.max(1) as u32;
                        cell.families()
                            .into_iter()
                            .flat_map(|f| classical(f, s, s + config.stable_ranks.saturating_sub(1)))
                            .filter(|a| cell.matches_algebra(*a))
                            .collect()
                    }
                    None => algebras.clone(),
                };
                for id in ids {
                    out.push(entry(Some(cell), id, k, n, cell.perm, cell.line));
                }
            }
        }
    }
    if config.default_zero {
        for id in AlgebraId::EXCEPTIONAL {
            for perm in [Permutation::BAG, Permutation::GAB] {
                for k in 1..=config.max_k {
                    // (k, 0) with gab is the previously known series.
                    for n in (perm == Permutation::GAB) as u32..=config.max_n {
                        let idx = CartanPowerIndex::new(k, n);
                        if matches!(expected_rep(id, idx, perm, None), Expected::NotCovered) {
                            out.push(entry(None, id, k, n, perm, None));
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(TableEntry::sort_key);
    out.dedup();
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub by_status: BTreeMap<String, usize>,
    pub mismatches_by_kind: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: SweepConfig,
    pub summary: Summary,
    pub records: Vec<VerdictRecord>,
}

impl Report {
    pub fn has_mismatch(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Mismatch)
    }

    pub fn has_failure(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::LimitCountMismatch)
    }

    /// JSON; per-case timings are dropped unless asked for, so output is reproducible.
    pub fn to_json(&self, timing: bool) -> String {
        let mut copy = self.clone();
        if !timing {
            for r in &mut copy.records {
                r.micros = None;
            }
        }
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let e = &r.entry;
            let line = e.line.map(|l| format!(" {l}")).unwrap_or_default();
            let dims = match (&r.computed_dimension, &r.expected_dimension) {
                (Some(c), Some(x)) => format!("dim {c} vs {x}"),
                _ => String::new(),
            };
            out.push_str(&format!(
                "{:<26} {:<4} k={} n={} {}{:<5} {:<26} {:<22} {}\n",
                e.cell.as_deref().unwrap_or("default-zero"),
                e.algebra.to_string(),
                e.k,
                e.n,
                e.perm,
                line,
                r.status.to_string(),
                r.expected.as_deref().unwrap_or(""),
                r.detail.as_deref().unwrap_or(&dims),
            ));
        }
        out.push_str(&format!("total {}", self.summary.total));
        for (s, c) in &self.summary.by_status {
            out.push_str(&format!(", {s} {c}"));
        }
        out.push('\n');
        out
    }
}

/// Verifies every case of the sweep. Record order depends only on the config.
pub fn verify_sweep(config: &SweepConfig) -> Report {
    let entries = instantiate_sweep(config);
    let mut systems: BTreeMap<AlgebraId, RootSystem> = BTreeMap::new();
    for e in &entries {
        systems.entry(e.algebra).or_insert_with(|| root_system(e.algebra));
    }
    let records: Vec<VerdictRecord> = entries
        .par_iter()
        .map(|e| verify_case_with(e, &systems[&e.algebra]))
        .collect();
    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        *summary.by_status.entry(r.status.to_string()).or_default() += 1;
        if r.status == Status::Mismatch {
            let kind = serde_json::to_value(r.entry.kind).expect("kind serializes");
            *summary
                .mismatches_by_kind
                .entry(kind.as_str().unwrap_or_default().to_string())
                .or_default() += 1;
        }
    }
    Report {
        config: config.clone(),
        summary,
        records,
    }
}
