//! Batch jobs behind the `qcatalan` binary: sweeps, the verification suite,
//! figure tables and single-polynomial inspection. Each job returns data;
//! printing and exit codes are left to the caller.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bounce_table, maj_table};
use crate::error::Error;
use crate::genfun::golden::{check_library, load_library, parse_name};
use crate::genfun::operators::{negative_terms, numerator_from_series};
use crate::genfun::parse::{parse_expression, FormLibrary};
use crate::genfun::{f_direct, f_product, g_series, h_series, nonneg_check, q_slice, series_equal, x_section, Window};
use crate::laurent::{LaurentPoly, UnimodalityReport};
use crate::qseries::{self, cbar, k_poly, mod3_difference_identity, q_catalan, rational_q_catalan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub m_range: RangeInclusive<u32>,
    pub n_range: RangeInclusive<u32>,
    pub x_order: usize,
    /// `None` uses the per-series default ceiling.
    pub q_ceiling: Option<i64>,
    /// `None` uses every available core.
    pub jobs: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub resume: bool,
    /// Closed-form data file; `None` uses the shipped one.
    pub data: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m_range: 1..=20,
            n_range: 1..=20,
            x_order: 30,
            q_ceiling: None,
            jobs: None,
            format: Format::Text,
            out: None,
            resume: false,
            data: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), RunError> {
        if self.m_range.is_empty() || self.n_range.is_empty() {
            return Err(RunError::Usage("empty m or n range".into()));
        }
        if *self.m_range.start() == 0 || *self.n_range.start() == 0 {
            return Err(RunError::Usage("ranges start at 1".into()));
        }
        if self.x_order == 0 {
            return Err(RunError::Usage("--x-order must be at least 1".into()));
        }
        if self.q_ceiling.is_some_and(|q| q <= 0) {
            return Err(RunError::Usage("--q-ceiling must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(RunError::Usage("--jobs must be at least 1".into()));
        }
        if self.resume && (self.out.is_none() || self.format != Format::Csv) {
            return Err(RunError::Usage("--resume needs --format csv and --out".into()));
        }
        Ok(())
    }

    fn window(&self, m: u32, x_order: usize) -> Window {
        let w = Window::for_m(m, x_order);
        Window::new(x_order, self.q_ceiling.unwrap_or(w.q_ceiling))
    }

    fn pool(&self) -> Result<rayon::ThreadPool, RunError> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            b = b.num_threads(j);
        }
        b.build().map_err(|e| RunError::Config(e.to_string()))
    }
}

/// Parses `A..B` (inclusive); `A` alone means `A..A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?}: {e}"));
    let r = num(a)?..=num(b)?;
    if r.is_empty() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Compute(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Compute(Error::InvalidArgument(_) | Error::NonCoprimePair { .. }) => 2,
            RunError::Config(_) | RunError::Compute(Error::Parse { .. }) => 3,
            RunError::Compute(_) | RunError::Io(_) => 1,
        }
    }
}

impl From<csv::Error> for RunError {
    fn from(e: csv::Error) -> Self {
        RunError::Io(std::io::Error::other(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl CaseResult {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CaseResult {
            id: id.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(id: impl Into<String>, r: crate::Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => CaseResult::new(id, passed, detail),
            Err(e) => CaseResult::new(id, false, format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub elapsed_ms: u64,
    pub version: String,
}

impl VerificationReport {
    fn new(suite: &str, cases: Vec<CaseResult>, started: Instant) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            cases,
            elapsed_ms: started.elapsed().as_millis() as u64,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out += &format!("{mark} {} {}\n", c.id, c.detail);
        }
        let passed = self.cases.iter().filter(|c| c.passed).count();
        out += &format!(
            "{}: {passed}/{} passed in {} ms\n",
            self.suite,
            self.cases.len(),
            self.elapsed_ms
        );
        out
    }
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: u32,
    pub n: u32,
    pub gcd: u32,
    pub degree: Option<i64>,
    pub parity_unimodal: bool,
    pub first_violation: Option<i64>,
}

impl SweepRow {
    fn from_report(r: &UnimodalityReport) -> Self {
        let (m, n) = r.pair().expect("sweep reports are about pairs");
        SweepRow {
            m,
            n,
            gcd: r.gcd,
            degree: r.degree,
            parity_unimodal: r.parity_unimodal,
            first_violation: r.first_violation,
        }
    }

    fn case(&self) -> CaseResult {
        let fmt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
        CaseResult::new(
            format!("m={},n={}", self.m, self.n),
            self.parity_unimodal,
            format!(
                "gcd={} degree={} first_violation={}",
                self.gcd,
                fmt(self.degree),
                fmt(self.first_violation)
            ),
        )
    }
}

fn read_done(path: &Path) -> Result<Vec<SweepRow>, RunError> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut rdr = csv::Reader::from_path(path)?;
    rdr.deserialize().map(|r| r.map_err(RunError::from)).collect()
}

/// Parity-unimodality sweep of `C̄_{m,n}` over the configured ranges.
///
/// With `--format csv --out PATH` rows are appended and flushed after every
/// batch of `m` values, so an interrupted run can continue with `--resume`.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<Sweep, RunError> {
    cfg.validate()?;
    let started = Instant::now();
    let pool = cfg.pool()?;
    let incremental = cfg.format == Format::Csv && cfg.out.is_some();

    let mut rows: Vec<SweepRow> = Vec::new();
    let mut done = BTreeSet::new();
    if cfg.resume {
        for r in read_done(cfg.out.as_deref().expect("validated"))? {
            done.insert((r.m, r.n));
            rows.push(r);
        }
    }
    let mut writer = match (&cfg.out, incremental) {
        (Some(p), true) => {
            let fresh = !cfg.resume || !p.exists() || std::fs::metadata(p)?.len() == 0;
            let file = if cfg.resume {
                OpenOptions::new().create(true).append(true).open(p)?
            } else {
                File::create(p)?
            };
            Some(
                csv::WriterBuilder::new()
                    .has_headers(fresh)
                    .from_writer(file),
            )
        }
        _ => None,
    };

    let pending: Vec<u32> = cfg
        .m_range
        .clone()
        .filter(|m| cfg.n_range.clone().any(|n| !done.contains(&(*m, n))))
        .collect();
    let batch = pool.current_num_threads().max(1);
    for chunk in pending.chunks(batch) {
        let ms = chunk[0]..=chunk[chunk.len() - 1];
        let reports = pool.install(|| qseries::sweep_ranges(ms, cfg.n_range.clone()))?;
        for r in &reports {
            let row = SweepRow::from_report(r);
            if !chunk.contains(&row.m) || done.contains(&(row.m, row.n)) {
                continue;
            }
            if let Some(w) = writer.as_mut() {
                w.serialize(&row)?;
            }
            rows.push(row);
        }
        if let Some(w) = writer.as_mut() {
            w.flush()?;
        }
    }

    rows.retain(|r| cfg.m_range.contains(&r.m) && cfg.n_range.contains(&r.n));
    rows.sort_by_key(|r| (r.m, r.n));
    rows.dedup_by_key(|r| (r.m, r.n));
    let cases = rows.iter().map(SweepRow::case).collect();
    let report = VerificationReport::new("sweep", cases, started);
    Ok(Sweep { rows, report })
}

/// Sweep output: the per-pair rows and the report built from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub report: VerificationReport,
}

impl Sweep {
    pub fn render(&self, format: Format) -> Result<String, RunError> {
        Ok(match format {
            Format::Json => self.report.to_json(),
            Format::Text => self.report.to_text(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in &self.rows {
                    w.serialize(r)?;
                }
                String::from_utf8(w.into_inner().map_err(|e| RunError::Io(e.into_error()))?)
                    .expect("csv output is utf-8")
            }
        })
    }
}

/// `f_direct(m) = f_product(m)` on `x^1..=x^x_order`, q-window `window`.
pub fn check_direct_vs_product(m: u32, x_order: usize, window: (i64, i64)) -> CaseResult {
    let ceiling = Window::for_m(m, x_order).q_ceiling.max(window.1 + 1);
    let w = Window::new(x_order, ceiling);
    let r = (|| {
        let a = f_direct(m, w)?;
        let b = f_product(m, w)?;
        let cmp = series_equal(&a, &b, 1..=x_order, Some(window))?;
        let detail = match cmp.first_mismatch {
            None => format!("x^1..x^{x_order}, q^{}..q^{}", window.0, window.1),
            Some(mm) => format!("x^{} q^{}: direct {} vs product {}", mm.x, mm.q, mm.left, mm.right),
        };
        Ok((cmp.equal, detail))
    })();
    CaseResult::from_result(format!("direct = product m={m}"), r)
}

/// The closed expansion of `(q²-1)C_{3,3k+r}` for `k = 0..=k_max`.
pub fn check_mod3_identity(k_max: u32, r: u32) -> CaseResult {
    let res = (|| {
        for k in 0..=k_max {
            if !mod3_difference_identity(k, r)? {
                return Ok((false, format!("fails at k={k}")));
            }
        }
        Ok((true, format!("k=0..{k_max}")))
    })();
    CaseResult::from_result(format!("mod-3 identity r={r}"), res)
}

/// Every form in `lib` against its computed series.
pub fn check_golden(lib: &FormLibrary, x_order: usize) -> Vec<CaseResult> {
    check_library(lib, x_order)
        .into_iter()
        .map(|(name, r)| {
            let r = r.map(|o| match o.first_mismatch {
                None => (true, format!("equal through x^{x_order}")),
                Some(mm) => (
                    false,
                    format!("x^{} q^{}: computed {}, closed form {}", mm.x, mm.q, mm.left, mm.right),
                ),
            });
            CaseResult::from_result(format!("golden {name}"), r)
        })
        .collect()
}

/// `[q^0]G_m = 0` through `x^x_order`.
pub fn check_q0_slice(m: u32, x_order: usize) -> CaseResult {
    let r = g_series(m, Window::for_m(m, x_order)).and_then(|g| q_slice(&g, 0)).map(|s| {
        let detail = if s.is_zero() { "0".to_string() } else { s.display_in("x") };
        (s.is_zero(), detail)
    });
    CaseResult::from_result(format!("[q^0]G_{m}"), r)
}

/// `[q^1]G_4 = -(x^4 + x^8 + x^12 + ...)` through `x^x_order`.
pub fn check_q1_g4(x_order: usize) -> CaseResult {
    let expected = LaurentPoly::from_terms((1..=x_order as i64 / 4).map(|k| (4 * k, -1)));
    let r = g_series(4, Window::for_m(4, x_order)).and_then(|g| q_slice(&g, 1)).map(|s| {
        if s == expected {
            (true, format!("-(x^4 + x^8 + ...) through x^{x_order}"))
        } else {
            let diff = &s - &expected;
            let first = diff.terms().next().map(|(e, _)| e).unwrap_or(0);
            (
                false,
                format!(
                    "expected -(x^4 + x^8 + ...), computed {} (first difference at x^{first})",
                    s.display_in("x")
                ),
            )
        }
    });
    CaseResult::from_result("[q^1]G_4", r)
}

/// The negative part of `[q^1]G_m` through `x^x_order` equals `expected`.
pub fn check_q1_negatives(m: u32, x_order: usize, expected: &LaurentPoly) -> CaseResult {
    let r = g_series(m, Window::for_m(m, x_order)).and_then(|g| q_slice(&g, 1)).map(|s| {
        let neg = negative_terms(&s);
        (&neg == expected, format!("negative terms {}", neg.display_in("x")))
    });
    CaseResult::from_result(format!("[q^1]G_{m} negatives"), r)
}

/// `[q^i]G_m` has nonnegative coefficients for every `i` in `is`.
pub fn check_higher_slices(m: u32, is: RangeInclusive<i64>, x_order: usize) -> CaseResult {
    let label = format!("[q^{}..q^{}]G_{m} >= 0", is.start(), is.end());
    let r = g_series(m, Window::for_m(m, x_order)).and_then(|g| {
        for i in is.clone() {
            let s = q_slice(&g, i)?;
            let neg = s.terms().find(|(_, c)| c.sign() == num_bigint::Sign::Minus).map(|(e, c)| (e, c.clone()));
            if let Some((e, c)) = neg {
                return Ok((false, format!("q^{i} x^{e} has coefficient {c}")));
            }
        }
        Ok((true, format!("through x^{x_order}")))
    });
    CaseResult::from_result(label, r)
}

/// Nonnegativity of `X_{m,r}` applied to `G_m` (coprime residues) or to
/// `PT′([d]F_m)` with `d = gcd(m,r)`.
pub fn check_positivity(m: u32, r: u32, x_order: usize) -> CaseResult {
    let d = m.gcd(&r);
    let base_order = x_order * m as usize + r as usize;
    let res = h_series(m, d, Window::for_m(m, base_order))
        .and_then(|h| x_section(m, r, &h))
        .map(|s| match nonneg_check(&s, x_order) {
            (true, _) => (true, format!("through x^{x_order}")),
            (false, Some(neg)) => (false, format!("x^{} q^{} has coefficient {}", neg.x, neg.q, neg.value)),
            (false, None) => (false, "negative coefficient".into()),
        });
    let base = if d == 1 { format!("G_{m}") } else { format!("H_{m}^{r}") };
    CaseResult::from_result(format!("X_{{{m},{r}}}{base} >= 0"), res)
}

/// The numerator of `X_{5,0}H_5^0` over `(1-x²)(1-x³)(1-q¹⁰x)(1-q²⁰x)`,
/// after removing `q²`: a polynomial with 64 nonnegative terms.
pub fn check_p50() -> CaseResult {
    let r = (|| {
        let s = parse_name("X_{5,0}H_5^0").expect("valid name").compute(12)?;
        let den = parse_expression("(1 - x^2)*(1 - x^3)*(1 - q^10*x)*(1 - q^20*x)").map_err(Error::InvalidArgument)?;
        let p = numerator_from_series(&s, &den, 2)?;
        let polynomial = p.max_x().is_some_and(|x| x < 12);
        let ok = polynomial && p.len() == 64 && p.has_nonnegative_coeffs();
        Ok((
            ok,
            format!(
                "{} terms, x-degree {}, nonnegative: {}",
                p.len(),
                p.max_x().unwrap_or(0),
                p.has_nonnegative_coeffs()
            ),
        ))
    })();
    CaseResult::from_result("P_{5,0} numerator", r)
}

/// The expected negative terms of the `q^1` slices of `G_6` (order 60) and
/// `G_10` (order 40).
pub fn expected_q1_negatives(m: u32) -> Option<LaurentPoly> {
    match m {
        6 => Some(LaurentPoly::from_terms([
            (6, -1),
            (10, -1),
            (18, -2),
            (22, -1),
            (30, -2),
            (34, -1),
            (42, -2),
            (54, -1),
        ])),
        10 => Some(LaurentPoly::from_terms([(6, -1), (10, -1)])),
        _ => None,
    }
}

/// Product formula, small-m identities, closed-form goldens, slice data and
/// positivity of the sections.
pub fn cmd_verify_paper(cfg: &RunConfig) -> Result<VerificationReport, RunError> {
    if cfg.x_order == 0 {
        return Err(RunError::Usage("--x-order must be at least 1".into()));
    }
    if let Some(p) = &cfg.data {
        if !p.exists() {
            return Err(RunError::Config(format!("closed-form data file {} not found", p.display())));
        }
    }
    let lib = load_library(cfg.data.as_deref()).map_err(|e| match e {
        Error::Parse { .. } => RunError::Compute(e),
        other => RunError::Config(other.to_string()),
    })?;
    let started = Instant::now();
    let pool = cfg.pool()?;
    let n = cfg.x_order;
    type Job<'a> = Box<dyn Fn() -> Vec<CaseResult> + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    for m in 1..=8 {
        let top = cfg.window(m, n).q_ceiling.min(301) - 1;
        jobs.push(Box::new(move || vec![check_direct_vs_product(m, n, (-top, top))]));
    }
    jobs.push(Box::new(|| vec![check_mod3_identity(30, 1), check_mod3_identity(30, 2)]));
    jobs.push(Box::new(|| check_golden(&lib, n)));
    for m in 3..=8 {
        jobs.push(Box::new(move || vec![check_q0_slice(m, n)]));
    }
    jobs.push(Box::new(move || vec![check_q1_g4(n)]));
    for (m, order) in [(6, n.max(60)), (10, n.max(40))] {
        let expected = expected_q1_negatives(m).expect("listed");
        jobs.push(Box::new(move || vec![check_q1_negatives(m, order, &expected)]));
    }
    for m in 3..=8 {
        jobs.push(Box::new(move || vec![check_higher_slices(m, 2..=10, n)]));
    }
    for m in 1..=5 {
        for r in 0..m {
            jobs.push(Box::new(move || vec![check_positivity(m, r, n)]));
        }
    }
    jobs.push(Box::new(|| vec![check_p50()]));
    let cases: Vec<CaseResult> = pool.install(|| jobs.par_iter().flat_map_iter(|job| job()).collect());
    Ok(VerificationReport::new("verify-paper", cases, started))
}

/// Figure tables for size `n`: the coarea/bounce table, a blank line, then
/// the maj table.
pub fn cmd_figures(n: u32) -> Result<String, RunError> {
    if !(1..=6).contains(&n) {
        return Err(RunError::Usage(format!("figures need 1 <= n <= 6, got {n}")));
    }
    Ok(format!("{}\n{}", bounce_table(n)?, maj_table(n)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyQuery {
    Catalan(u32),
    Rational(u32, u32),
    Cbar(u32, u32),
    K(u32),
}

impl PolyQuery {
    /// Parses `catalan N`, `rational M N`, `cbar M N` or `k N`.
    pub fn parse(args: &[String]) -> Result<Self, RunError> {
        let nums: Result<Vec<u32>, _> = args.iter().skip(1).map(|a| a.parse::<u32>()).collect();
        let nums = nums.map_err(|e| RunError::Usage(format!("bad number: {e}")))?;
        match (args.first().map(String::as_str), nums.as_slice()) {
            (Some("catalan"), [n]) => Ok(PolyQuery::Catalan(*n)),
            (Some("rational"), [m, n]) => Ok(PolyQuery::Rational(*m, *n)),
            (Some("cbar"), [m, n]) => Ok(PolyQuery::Cbar(*m, *n)),
            (Some("k"), [n]) => Ok(PolyQuery::K(*n)),
            _ => Err(RunError::Usage(
                "expected `catalan N`, `rational M N`, `cbar M N` or `k N`".into(),
            )),
        }
    }
}

/// The requested polynomial and its parity-unimodality verdict, as
/// `"<poly> ; parity-unimodal: yes"`.
pub fn cmd_poly(q: PolyQuery) -> Result<String, RunError> {
    let p = match q {
        PolyQuery::Catalan(n) => q_catalan(n),
        PolyQuery::Rational(m, n) => {
            if m == 0 || n == 0 {
                return Err(RunError::Usage("m and n must be positive".into()));
            }
            let g = m.gcd(&n);
            if g > 1 {
                return Err(RunError::Usage(format!(
                    "gcd({m}, {n}) = {g}, so C_{{{m},{n}}} is not a polynomial; try `poly cbar {m} {n}`"
                )));
            }
            rational_q_catalan(m, n)?
        }
        PolyQuery::Cbar(m, n) => {
            if m == 0 {
                return Err(RunError::Usage("m must be positive".into()));
            }
            cbar(m, n)?.polynomial
        }
        PolyQuery::K(n) => k_poly(n)?,
    };
    let verdict = p.is_parity_unimodal()?;
    Ok(format!("{p} ; parity-unimodal: {}", if verdict.holds { "yes" } else { "no" }))
}
