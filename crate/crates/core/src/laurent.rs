//! Sparse Laurent polynomials in one variable `q` with arbitrary-precision
//! integer coefficients, the part-extraction operators, normalization and the
//! unimodality predicates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sum `Σ c_e q^e` with `e ∈ ℤ`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// Which exponents [`LaurentPoly::extract`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Positive,
    Zero,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryClass {
    Symmetric,
    Antisymmetric,
    Neither,
}

/// Outcome of a unimodality test. `first_violation` is the exponent at which
/// the coefficient sequence rises again after having fallen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub first_violation: Option<i64>,
}

impl Verdict {
    fn from_violation(first_violation: Option<i64>) -> Self {
        Verdict {
            holds: first_violation.is_none(),
            first_violation,
        }
    }
}

/// What a [`UnimodalityReport`] is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Pair { m: u32, n: u32 },
    Single { n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityReport {
    pub subject: Subject,
    pub gcd: u32,
    /// `None` only for the zero polynomial.
    pub degree: Option<i64>,
    pub symmetric: bool,
    pub parity_unimodal: bool,
    pub first_violation: Option<i64>,
}

impl UnimodalityReport {
    pub fn pair(&self) -> Option<(u32, u32)> {
        match self.subject {
            Subject::Pair { m, n } => Some((m, n)),
            Subject::Single { .. } => None,
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds `Σ coeffs[i] q^i`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::from_dense(0, coeffs.iter().cloned().map(Into::into))
    }

    /// Builds `Σ coeffs[i] q^(offset+i)`.
    pub fn from_dense(offset: i64, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (i64, BigInt)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// `p(q^k)` for `k ≠ 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "q -> q^0 is not a substitution on Laurent polynomials");
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// `p(1)`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Dense coefficient vector `a_0..=a_deg` including internal zeros.
    /// The zero polynomial gives an empty vector.
    pub fn coefficient_vector(&self) -> Result<Vec<BigInt>> {
        match (self.low_degree(), self.degree()) {
            (None, _) | (_, None) => Ok(Vec::new()),
            (Some(lo), _) if lo < 0 => Err(Error::NegativeSupport(lo)),
            (Some(_), Some(hi)) => Ok(self.dense_range(0, hi)),
        }
    }

    /// Coefficients for exponents `lo..=hi`.
    pub(crate) fn dense_range(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (e, c) in self.terms.range(lo..=hi) {
            out[(e - lo) as usize] = c.clone();
        }
        out
    }

    pub fn extract(&self, region: Region) -> Self {
        let terms = match region {
            Region::Positive => self.terms.range(1..).map(|(e, c)| (*e, c.clone())).collect(),
            Region::Zero => self.terms.range(0..=0).map(|(e, c)| (*e, c.clone())).collect(),
            Region::Negative => self.terms.range(..0).map(|(e, c)| (*e, c.clone())).collect(),
        };
        LaurentPoly { terms }
    }

    /// `p(q^{-1})`.
    pub fn reciprocal_subst(&self) -> Self {
        self.substitute_power(-1)
    }

    /// `p(q²)·q^{-deg p}`, with `𝒩(0) = 0`.
    pub fn normalize(&self) -> Result<Self> {
        match (self.low_degree(), self.degree()) {
            (Some(lo), _) if lo < 0 => Err(Error::NegativeSupport(lo)),
            (Some(_), Some(deg)) => Ok(self.substitute_power(2).shift(-deg)),
            _ => Ok(Self::zero()),
        }
    }

    pub fn symmetry_class(&self) -> SymmetryClass {
        let r = self.reciprocal_subst();
        if r == *self {
            SymmetryClass::Symmetric
        } else if r == -self {
            SymmetryClass::Antisymmetric
        } else {
            SymmetryClass::Neither
        }
    }

    /// `a_i = a_{n-i}` for the coefficient sequence of a genuine polynomial.
    pub fn is_palindromic(&self) -> Result<bool> {
        Ok(self.normalize()?.symmetry_class() == SymmetryClass::Symmetric)
    }

    pub fn is_unimodal(&self) -> Result<Verdict> {
        let seq = self.coefficient_vector()?;
        Ok(Verdict::from_violation(
            first_unimodal_violation(&seq).map(|i| i as i64),
        ))
    }

    pub fn is_parity_unimodal(&self) -> Result<Verdict> {
        let seq = self.coefficient_vector()?;
        Ok(Verdict::from_violation(parity_violation(&seq)))
    }

    /// The two Laurent polynomials whose positive parts decide unimodality
    /// and parity unimodality of a palindromic polynomial:
    /// `PT 𝒩((q-1)p)` and `PT (q²-q⁻²)𝒩p`.
    pub fn lemma5_witnesses(&self) -> Result<(Self, Self)> {
        if !self.is_palindromic()? {
            return Err(Error::NotSymmetric);
        }
        let q_minus_one = LaurentPoly::from_terms([(1, 1), (0, -1)]);
        let w1 = (&q_minus_one * self).normalize()?.extract(Region::Positive);
        let q2_minus_qm2 = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
        let w2 = (&q2_minus_qm2 * &self.normalize()?).extract(Region::Positive);
        Ok((w1, w2))
    }

    /// Exact quotient `self / den`, or [`Error::InexactDivision`].
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (den_lo, den_hi) = match (den.low_degree(), den.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::DivisionByZero),
        };
        let (num_lo, num_hi) = match (self.low_degree(), self.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(Self::zero()),
        };
        if num_hi - num_lo < den_hi - den_lo {
            return Err(Error::InexactDivision);
        }
        let lead = &den.terms[&den_hi];
        // divisor offsets measured down from its leading term
        let tail: Vec<(usize, &BigInt)> = den
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(e, c)| ((den_hi - e) as usize, c))
            .collect();
        let mut rem = self.dense_range(num_lo, num_hi);
        let width = (den_hi - den_lo) as usize;
        let mut quot = vec![BigInt::zero(); rem.len() - width];
        for top in (width..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let (c, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (off, dc) in &tail {
                rem[top - off] -= &c * *dc;
            }
            rem[top] = BigInt::zero();
            quot[top - width] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LaurentPoly::from_dense(num_lo - den_lo, quot))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Renders with the given variable name, ascending exponents.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let monomial = match *e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        out
    }
}

/// Smallest index `i` with `seq[i] > seq[i-1]` after the sequence has
/// already strictly descended somewhere before `i`.
pub fn first_unimodal_violation(seq: &[BigInt]) -> Option<usize> {
    let mut descended = false;
    for i in 1..seq.len() {
        match seq[i].cmp(&seq[i - 1]) {
            std::cmp::Ordering::Less => descended = true,
            std::cmp::Ordering::Greater if descended => return Some(i),
            _ => {}
        }
    }
    None
}

/// Unimodality of the even- and odd-indexed subsequences. Returns the
/// smallest exponent witnessing a violation in either.
pub fn parity_violation(seq: &[BigInt]) -> Option<i64> {
    let even: Vec<BigInt> = seq.iter().step_by(2).cloned().collect();
    let odd: Vec<BigInt> = seq.iter().skip(1).step_by(2).cloned().collect();
    let e = first_unimodal_violation(&even).map(|j| 2 * j as i64);
    let o = first_unimodal_violation(&odd).map(|j| 2 * j as i64 + 1);
    match (e, o) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) =
            (self.low_degree(), self.degree(), rhs.low_degree(), rhs.degree())
        else {
            return LaurentPoly::zero();
        };
        let lo = a_lo + b_lo;
        let span = (a_hi + b_hi - lo + 1) as usize;
        let pairs = self.len().saturating_mul(rhs.len());
        if span <= pairs.saturating_mul(4).max(64) {
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            LaurentPoly::from_dense(lo, acc)
        } else {
            let mut out = LaurentPoly::zero();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    out.add_term(ea + eb, ca * cb);
                }
            }
            out
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
