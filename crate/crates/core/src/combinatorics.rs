//! Dyck paths in an `m × n` rectangle and the two-row tableau model of the
//! ordinary q-Catalan numbers.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

/// Lattice path from `(0,0)` to `(m,n)` staying weakly above `y = nx/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    m: u32,
    n: u32,
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(m: u32, n: u32, steps: Vec<Step>) -> Result<Self> {
        if steps.len() != (m + n) as usize {
            return Err(Error::InvalidArgument(format!(
                "a path in the {m}x{n} rectangle has {} steps, got {}",
                m + n,
                steps.len()
            )));
        }
        let (mut x, mut y) = (0u64, 0u64);
        for s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if m as u64 * y < n as u64 * x {
                return Err(Error::InvalidArgument("path goes below the diagonal".into()));
            }
        }
        if x != m as u64 || y != n as u64 {
            return Err(Error::InvalidArgument(format!("path does not end at ({m},{n})")));
        }
        Ok(DyckPath { m, n, steps })
    }

    /// Parses a word such as `"NNENEE"`; the rectangle is read off the counts.
    pub fn parse(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::InvalidArgument(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let n = steps.iter().filter(|s| **s == Step::N).count() as u32;
        let m = steps.len() as u32 - n;
        Self::new(m, n, steps)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_char(if *s == Step::N { 'N' } else { 'E' })?;
        }
        Ok(())
    }
}

/// All paths of the `m × n` rectangle, in lexicographic order of the step
/// word with `N < E`.
pub fn enumerate_paths(m: u32, n: u32) -> Result<Vec<DyckPath>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("m and n must be positive, got ({m}, {n})")));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity((m + n) as usize);
    extend(m, n, 0, 0, &mut word, &mut out);
    Ok(out)
}

fn extend(m: u32, n: u32, x: u32, y: u32, word: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if x == m && y == n {
        out.push(DyckPath {
            m,
            n,
            steps: word.clone(),
        });
        return;
    }
    if y < n {
        word.push(Step::N);
        extend(m, n, x, y + 1, word, out);
        word.pop();
    }
    if x < m && m as u64 * y as u64 >= n as u64 * (x as u64 + 1) {
        word.push(Step::E);
        extend(m, n, x + 1, y, word, out);
        word.pop();
    }
}

/// Number of whole cells between the path and the diagonal.
pub fn area(d: &DyckPath) -> u64 {
    let (m, n) = (d.m as u64, d.n as u64);
    let mut total = 0;
    let (mut col, mut height) = (0u64, 0u64);
    for s in &d.steps {
        match s {
            Step::N => height += 1,
            Step::E => {
                let floor = (n * (col + 1)).div_ceil(m);
                total += height.saturating_sub(floor);
                col += 1;
            }
        }
    }
    total
}

/// `Σ_{D} q^{area(D)}` over the `m × n` rectangle.
pub fn area_polynomial(m: u32, n: u32) -> Result<LaurentPoly> {
    let paths = enumerate_paths(m, n)?;
    Ok(tally(paths.par_iter().map(area).collect()))
}

/// Standard Young tableau of shape `(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRowSyt {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

impl TwoRowSyt {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        let n = row1.len();
        if row2.len() != n {
            return Err(Error::InvalidArgument("rows differ in length".into()));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &v in row1.iter().chain(&row2) {
            let v = v as usize;
            if v == 0 || v > 2 * n || seen[v] {
                return Err(Error::InvalidArgument(format!("entries must be 1..={} once each", 2 * n)));
            }
            seen[v] = true;
        }
        let increasing = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&row1) || !increasing(&row2) || row1.iter().zip(&row2).any(|(a, b)| a >= b) {
            return Err(Error::InvalidArgument("rows and columns must increase".into()));
        }
        Ok(TwoRowSyt { row1, row2 })
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    pub fn n(&self) -> usize {
        self.row1.len()
    }

    /// `(row, column)` of every entry, indexed by entry - 1.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); 2 * self.n()];
        for (row, cells) in [&self.row1, &self.row2].into_iter().enumerate() {
            for (col, &v) in cells.iter().enumerate() {
                pos[v as usize - 1] = (row, col);
            }
        }
        pos
    }
}

/// Step `i` goes to the first row when it is `N`, the second when `E`.
pub fn path_to_syt(d: &DyckPath) -> Result<TwoRowSyt> {
    if d.m != d.n {
        return Err(Error::InvalidArgument(format!(
            "tableaux need a square rectangle, got {}x{}",
            d.m, d.n
        )));
    }
    let (mut row1, mut row2) = (Vec::new(), Vec::new());
    for (i, s) in d.steps.iter().enumerate() {
        match s {
            Step::N => row1.push(i as u32 + 1),
            Step::E => row2.push(i as u32 + 1),
        }
    }
    Ok(TwoRowSyt { row1, row2 })
}

pub fn coarea(t: &TwoRowSyt) -> u64 {
    let n = t.n() as u64;
    t.row1.iter().map(|&v| v as u64).sum::<u64>() - n * (n + 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTableau {
    pub row1: Vec<u32>,
    pub row2: Vec<u32>,
}

pub fn rank_tableau(t: &TwoRowSyt) -> RankTableau {
    let pos = t.positions();
    let mut rank = vec![0u32; pos.len()];
    for i in 1..pos.len() {
        let (row, col) = pos[i];
        rank[i] = if row == 0 {
            rank[i - 1]
        } else {
            rank[t.row1[col] as usize - 1] + 1
        };
    }
    let pick = |r: &[u32]| r.iter().map(|&v| rank[v as usize - 1]).collect();
    RankTableau {
        row1: pick(&t.row1),
        row2: pick(&t.row2),
    }
}

pub fn bounce(t: &TwoRowSyt) -> u64 {
    rank_tableau(t).row1.iter().map(|&r| r as u64).sum()
}

/// Sum of the `i` whose successor `i+1` sits in a column strictly to the
/// left of `i`.
pub fn maj(t: &TwoRowSyt) -> u64 {
    let pos = t.positions();
    (0..pos.len().saturating_sub(1))
        .filter(|&i| pos[i + 1].1 < pos[i].1)
        .map(|i| i as u64 + 1)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Statistic {
    Maj,
    CoareaPlusBounce,
}

impl Statistic {
    pub fn eval(self, t: &TwoRowSyt) -> u64 {
        match self {
            Statistic::Maj => maj(t),
            Statistic::CoareaPlusBounce => coarea(t) + bounce(t),
        }
    }
}

/// `Σ q^{stat}` over the `n × n` paths.
pub fn statistic_polynomial(n: u32, stat: Statistic) -> Result<LaurentPoly> {
    let paths = enumerate_paths(n, n)?;
    let values = paths
        .par_iter()
        .map(|d| path_to_syt(d).map(|t| stat.eval(&t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(tally(values))
}

fn tally(values: Vec<u64>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for v in values {
        p.add_term(v as i64, BigInt::from(1));
    }
    p
}

fn join(cells: &[u32]) -> String {
    cells.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn table_row(label: &str, cells: impl IntoIterator<Item = String>) -> String {
    let mut line = label.to_string();
    for c in cells {
        line.push('\t');
        line.push_str(&c);
    }
    line.push('\n');
    line
}

/// Tableaux, first-row sums, coarea, rank tableaux, bounce and
/// `q^{coarea+bounce}` for every path of size `n`, one column per path.
pub fn bounce_table(n: u32) -> Result<String> {
    let tabs = syts(n)?;
    let mut out = String::new();
    out += &table_row("", tabs.iter().map(|t| join(&t.row1)));
    out += &table_row("", tabs.iter().map(|t| join(&t.row2)));
    out += &table_row(
        "",
        tabs.iter().map(|t| {
            let sum: u32 = t.row1.iter().sum();
            let parts: Vec<String> = t.row1.iter().map(u32::to_string).collect();
            format!("{sum}={}", parts.join("+"))
        }),
    );
    out += &table_row("coarea", tabs.iter().map(|t| coarea(t).to_string()));
    let ranks: Vec<RankTableau> = tabs.iter().map(rank_tableau).collect();
    out += &table_row("", ranks.iter().map(|r| join(&r.row1)));
    out += &table_row("", ranks.iter().map(|r| join(&r.row2)));
    out += &table_row("bounce", tabs.iter().map(|t| bounce(t).to_string()));
    out += &table_row(
        "q^(coarea+bounce)",
        tabs.iter().map(|t| format!("q^{}", coarea(t) + bounce(t))),
    );
    out += &catalan_line(n, Statistic::CoareaPlusBounce)?;
    Ok(out)
}

/// Tableaux with `q^{maj}` underneath, one column per path of size `n`.
pub fn maj_table(n: u32) -> Result<String> {
    let tabs = syts(n)?;
    let mut out = String::new();
    out += &table_row("", tabs.iter().map(|t| join(&t.row1)));
    out += &table_row("", tabs.iter().map(|t| join(&t.row2)));
    out += &table_row("", tabs.iter().map(|t| format!("q^{}", maj(t))));
    out += &catalan_line(n, Statistic::Maj)?;
    Ok(out)
}

fn syts(n: u32) -> Result<Vec<TwoRowSyt>> {
    enumerate_paths(n, n)?.iter().map(path_to_syt).collect()
}

fn catalan_line(n: u32, stat: Statistic) -> Result<String> {
    Ok(format!("\nC_{n}(q) = {}\n", statistic_polynomial(n, stat)?))
}
