use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Laurent series in `q` bounded below. Every exponent below `ceiling` is
/// known exactly; `ceiling == None` means the series is a Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    terms: BTreeMap<i64, BigInt>,
    ceiling: Option<i64>,
}

impl QSeries {
    pub fn zero() -> Self {
        QSeries {
            terms: BTreeMap::new(),
            ceiling: None,
        }
    }

    pub fn exact(p: LaurentPoly) -> Self {
        QSeries {
            terms: p.into_terms().collect(),
            ceiling: None,
        }
    }

    /// Keeps the terms of `p` below `ceiling`.
    pub fn truncated(p: LaurentPoly, ceiling: i64) -> Self {
        QSeries {
            terms: p.into_terms().filter(|(e, _)| *e < ceiling).collect(),
            ceiling: Some(ceiling),
        }
    }

    pub(crate) fn from_dense_truncated(offset: i64, coeffs: Vec<BigInt>, ceiling: i64) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (offset + i as i64, c))
            .filter(|(e, c)| !c.is_zero() && *e < ceiling)
            .collect();
        QSeries {
            terms,
            ceiling: Some(ceiling),
        }
    }

    pub fn ceiling(&self) -> Option<i64> {
        self.ceiling
    }

    pub fn is_exact(&self) -> bool {
        self.ceiling.is_none()
    }

    /// Lowest exponent that may carry a nonzero coefficient. `None` only for
    /// the exact zero series.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied().or(self.ceiling)
    }

    /// Known terms in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_known(&self, e: i64) -> bool {
        self.ceiling.is_none_or(|c| e < c)
    }

    /// Coefficient of `q^e`, `None` when `e` is at or past the ceiling.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        self.is_known(e)
            .then(|| self.terms.get(&e).cloned().unwrap_or_default())
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_exact()
            .then(|| LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone()))))
    }

    /// Known terms as a Laurent polynomial, regardless of exactness.
    pub fn known_part(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }

    /// All known coefficients nonnegative; returns the first negative one.
    pub fn first_negative(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative()).map(|(e, c)| (*e, c))
    }

    /// Lowers the ceiling to `min(ceiling, c)`.
    pub fn truncate(&self, c: i64) -> Self {
        let top = self.ceiling.map_or(c, |old| old.min(c));
        QSeries {
            terms: self.terms.range(..top).map(|(e, v)| (*e, v.clone())).collect(),
            ceiling: Some(top),
        }
    }

    /// The exponent-`< 0` part as a Laurent polynomial; requires the
    /// negative range to be fully known.
    pub fn negative_part(&self) -> std::result::Result<LaurentPoly, i64> {
        match self.ceiling {
            Some(c) if c < 0 => Err(c),
            _ => Ok(LaurentPoly::from_terms(
                self.terms.range(..0).map(|(e, c)| (*e, c.clone())),
            )),
        }
    }

    pub fn add(&self, rhs: &QSeries) -> QSeries {
        let ceiling = min_ceiling(self.ceiling, rhs.ceiling);
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(rhs.terms.iter()) {
            if ceiling.is_some_and(|top| *e >= top) {
                continue;
            }
            *terms.entry(*e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        QSeries { terms, ceiling }
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            ceiling: self.ceiling,
        }
    }

    pub fn sub(&self, rhs: &QSeries) -> QSeries {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        // exact zero annihilates truncation
        if (self.is_exact() && self.terms.is_empty()) || (rhs.is_exact() && rhs.terms.is_empty()) {
            return QSeries::zero();
        }
        let ceiling = match (self.ceiling, rhs.ceiling) {
            (None, None) => None,
            (Some(c), None) => Some(c + rhs.min_exponent().unwrap()),
            (None, Some(c)) => Some(c + self.min_exponent().unwrap()),
            (Some(a), Some(b)) => {
                Some((a + rhs.min_exponent().unwrap()).min(b + self.min_exponent().unwrap()))
            }
        };
        let (Some(lo_a), Some(lo_b)) = (self.terms.keys().next(), rhs.terms.keys().next()) else {
            return QSeries {
                terms: BTreeMap::new(),
                ceiling,
            };
        };
        let lo = lo_a + lo_b;
        let hi_a = *self.terms.keys().next_back().unwrap();
        let hi_b = *rhs.terms.keys().next_back().unwrap();
        let mut hi = hi_a + hi_b;
        if let Some(c) = ceiling {
            hi = hi.min(c - 1);
        }
        if hi < lo {
            return QSeries {
                terms: BTreeMap::new(),
                ceiling,
            };
        }
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea + eb;
                if e > hi {
                    break;
                }
                acc[(e - lo) as usize] += ca * cb;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        QSeries { terms, ceiling }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> QSeries {
        self.mul(&QSeries::exact(p.clone()))
    }
}

fn min_ceiling(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.known_part().to_string();
        match self.ceiling {
            None => f.write_str(&body),
            Some(c) if self.terms.is_empty() => write!(f, "O(q^{c})"),
            Some(c) => write!(f, "{body} + O(q^{c})"),
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

/// Power series in `x` truncated after `x^order`, with [`QSeries`]
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<QSeries>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![QSeries::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<QSeries>) -> Self {
        assert!(!coeffs.is_empty(), "an x-series keeps at least the x^0 coefficient");
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &QSeries {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.coeffs
    }

    pub fn map(&self, f: impl Fn(&QSeries) -> QSeries) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order).map(|n| self.coeffs[n].add(&rhs.coeffs[n])).collect(),
        }
    }

    pub fn truncate_order(&self, order: usize) -> XSeries {
        XSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Checked coefficient access: `Err` when `e` is past the ceiling at `x^n`.
    pub fn get(&self, n: usize, e: i64) -> Result<BigInt> {
        let c = &self.coeffs[n];
        c.coeff(e).ok_or(Error::BeyondCeiling {
            x: n,
            exponent: e,
            ceiling: c.ceiling().unwrap_or(i64::MAX),
        })
    }
}
