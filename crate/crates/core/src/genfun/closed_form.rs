//! Elliott-rational closed forms and their unique expansion under the
//! monomial order `0 < x ≪ q ≪ 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::series::{QSeries, XSeries};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `coeff · x^x · q^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub x: i64,
    pub q: i64,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, x: i64, q: i64) -> Self {
        Monomial {
            coeff: coeff.into(),
            x,
            q,
        }
    }
}

/// Whether `a` is larger than `b` in the working field: smaller x-exponent,
/// or equal x-exponent and smaller q-exponent. Coefficients are ignored.
pub fn monomial_dominates(a: &Monomial, b: &Monomial) -> Result<bool> {
    match (a.x, a.q).cmp(&(b.x, b.q)) {
        std::cmp::Ordering::Equal => Err(Error::Incomparable),
        ord => Ok(ord == std::cmp::Ordering::Less),
    }
}

/// Laurent polynomial in `x` and `q`, keyed by `(x-exponent, q-exponent)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::new(1, 0, 0))
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m.x, m.q, m.coeff);
        p
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero();
        for m in ms {
            p.add_term(m.x, m.q, m.coeff);
        }
        p
    }

    pub fn add_term(&mut self, x: i64, q: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((x, q)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(x, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms
            .iter()
            .map(|((x, q), c)| Monomial::new(c.clone(), *x, *q))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((x, q), c) in &rhs.terms {
            out.add_term(*x, *q, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((xa, qa), ca) in &self.terms {
            for ((xb, qb), cb) in &rhs.terms {
                out.add_term(xa + xb, qa + qb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        (0..k).fold(BiPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn shift(&self, dx: i64, dq: i64) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|((x, q), c)| ((x + dx, q + dq), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `x^n` as a Laurent polynomial in `q`.
    pub fn x_coeff(&self, n: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .range((n, i64::MIN)..=(n, i64::MAX))
                .map(|((_, q), c)| (*q, c.clone())),
        )
    }

    pub fn min_x(&self) -> Option<i64> {
        self.terms.keys().next().map(|(x, _)| *x)
    }

    pub fn max_x(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|(x, _)| *x)
    }

    /// Truncates an x-series times this polynomial: `Σ_n s_n x^n · self`,
    /// keeping `x^0..=x^order`.
    pub fn mul_series(&self, s: &XSeries) -> XSeries {
        let order = s.order();
        let mut out = vec![QSeries::zero(); order + 1];
        for ((dx, dq), c) in &self.terms {
            let poly = LaurentPoly::monomial(c.clone(), *dq);
            for (n, coeff) in s.coeffs().iter().enumerate() {
                let target = n as i64 + dx;
                if target < 0 || target > order as i64 {
                    continue;
                }
                out[target as usize] = out[target as usize].add(&coeff.mul_poly(&poly));
            }
        }
        XSeries::from_coeffs(out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((x, q), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (*x == 0 && *q == 0) {
                parts.push(mag.to_string());
            }
            for (var, e) in [("x", *x), ("q", *q)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    e => parts.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// A two-term denominator factor `a - b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub a: Monomial,
    pub b: Monomial,
}

impl Binomial {
    pub fn new(a: Monomial, b: Monomial) -> Result<Self> {
        if (a.x, a.q) == (b.x, b.q) {
            return Err(Error::Incomparable);
        }
        Ok(Binomial { a, b })
    }

    /// `1 - c·x^x·q^q`.
    pub fn one_minus(c: impl Into<BigInt>, x: i64, q: i64) -> Self {
        Binomial {
            a: Monomial::new(1, 0, 0),
            b: Monomial::new(c, x, q),
        }
    }

    pub fn as_poly(&self) -> BiPoly {
        BiPoly::from_monomials([
            self.a.clone(),
            Monomial::new(-&self.b.coeff, self.b.x, self.b.q),
        ])
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.as_poly())
    }
}

/// Numerator over a product of binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub numerator: BiPoly,
    pub denominator: Vec<Binomial>,
}

/// How a single factor `1/(u + v)` expands once `u` is known to dominate:
/// `u⁻¹ Σ_k t^k` with `t = -v/u`.
struct Geometric {
    coeff: BigInt,
    x: i64,
    q: i64,
}

impl ClosedForm {
    pub fn new(numerator: BiPoly, denominator: Vec<Binomial>) -> Self {
        ClosedForm {
            numerator,
            denominator,
        }
    }

    pub fn denominator_poly(&self) -> BiPoly {
        self.denominator
            .iter()
            .fold(BiPoly::one(), |acc, f| acc.mul(&f.as_poly()))
    }

    /// Expansion in `ℚ((q))((x))` truncated after `x^x_order`; every
    /// coefficient is exact below `q^q_ceiling` (and exact outright when no
    /// factor needs a q-geometric series).
    pub fn expand(&self, x_order: usize, q_ceiling: i64) -> Result<XSeries> {
        let one = BigInt::one();
        let mut shift_x = 0i64;
        let mut shift_q = 0i64;
        let mut sign = BigInt::one();
        let mut x_ratios = Vec::new();
        let mut q_ratios = Vec::new();
        for factor in &self.denominator {
            let u = factor.a.clone();
            let v = Monomial::new(-&factor.b.coeff, factor.b.x, factor.b.q);
            let (u, v) = if monomial_dominates(&u, &v)? { (u, v) } else { (v, u) };
            if u.coeff.abs() != one {
                return Err(Error::NonUnitDominant);
            }
            shift_x -= u.x;
            shift_q -= u.q;
            sign *= &u.coeff;
            let t = Geometric {
                coeff: -(&v.coeff * &u.coeff),
                x: v.x - u.x,
                q: v.q - u.q,
            };
            if t.x > 0 {
                x_ratios.push(t);
            } else {
                q_ratios.push(t);
            }
        }

        let num = self.numerator.shift(shift_x, shift_q);
        if num.min_x().is_some_and(|x| x < 0) {
            return Err(Error::NotPowerSeries);
        }
        let mut exact: Vec<LaurentPoly> = (0..=x_order as i64)
            .map(|n| num.x_coeff(n).scale(&sign))
            .collect();
        for t in &x_ratios {
            // R_n = P_n + t·R_{n-a}
            let step = LaurentPoly::monomial(t.coeff.clone(), t.q);
            let a = t.x as usize;
            for n in a..=x_order {
                let add = &exact[n - a] * &step;
                exact[n] += &add;
            }
        }

        if q_ratios.is_empty() {
            return Ok(XSeries::from_coeffs(exact.into_iter().map(QSeries::exact).collect()));
        }
        let floor = exact.iter().filter_map(LaurentPoly::low_degree).min();
        let Some(floor) = floor else {
            return Ok(XSeries::zero(x_order));
        };
        // Π 1/(1 - t) as a power series in q, long enough that every product
        // with an x-coefficient is known below q_ceiling.
        let len = (q_ceiling - floor).max(1) as usize;
        let mut geo = vec![BigInt::zero(); len];
        geo[0] = BigInt::one();
        for t in &q_ratios {
            let step = t.q as usize;
            for e in step..len {
                let prev = &geo[e - step] * &t.coeff;
                geo[e] += prev;
            }
        }
        let geo = QSeries::from_dense_truncated(0, geo, len as i64);
        let coeffs = exact
            .into_iter()
            .map(|p| QSeries::exact(p).mul(&geo).truncate(q_ceiling))
            .collect();
        Ok(XSeries::from_coeffs(coeffs))
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if !self.denominator.is_empty() {
            f.write_str(" / ")?;
            let parts: Vec<String> = self.denominator.iter().map(|b| b.to_string()).collect();
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: i64, x: i64, q: i64) -> Monomial {
        Monomial::new(c, x, q)
    }

    #[test]
    fn dominance_examples() {
        assert!(monomial_dominates(&m(1, 0, 0), &m(1, 1, 0)).unwrap());
        assert!(monomial_dominates(&m(1, 0, 3), &m(1, 1, 0)).unwrap());
        assert!(monomial_dominates(&m(1, 0, 0), &m(1, 1, -3)).unwrap());
        assert!(monomial_dominates(&m(1, 0, -2), &m(1, 0, 5)).unwrap());
        assert!(!monomial_dominates(&m(1, 1, 0), &m(1, 0, 9)).unwrap());
        assert_eq!(monomial_dominates(&m(2, 1, 1), &m(-1, 1, 1)), Err(Error::Incomparable));
    }

    #[test]
    fn geometric_in_x() {
        let cf = ClosedForm::new(BiPoly::one(), vec![Binomial::one_minus(1, 1, 0)]);
        let s = cf.expand(6, 10).unwrap();
        for n in 0..=6 {
            assert_eq!(s.coeff(n).to_laurent().unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn negative_and_positive_partial_fractions() {
        // q^2 / ((q^3 - x)(x - 1))
        let first = ClosedForm::new(
            BiPoly::monomial(m(1, 0, 2)),
            vec![
                Binomial::new(m(1, 0, 3), m(1, 1, 0)).unwrap(),
                Binomial::new(m(1, 1, 0), m(1, 0, 0)).unwrap(),
            ],
        );
        let s = first.expand(12, 50).unwrap();
        for n in 0..=12 {
            let p = s.coeff(n).to_laurent().unwrap();
            assert!(p.degree().unwrap() <= -1);
            // -q^{-1} Σ_{i+j=n} q^{-3j}
            let expected =
                LaurentPoly::from_terms((0..=n as i64).map(|j| (-1 - 3 * j, -1)));
            assert_eq!(p, expected);
        }
        // q / ((q^3 x - 1)(x - 1))
        let second = ClosedForm::new(
            BiPoly::monomial(m(1, 0, 1)),
            vec![
                Binomial::new(m(1, 1, 3), m(1, 0, 0)).unwrap(),
                Binomial::new(m(1, 1, 0), m(1, 0, 0)).unwrap(),
            ],
        );
        let s = second.expand(12, 50).unwrap();
        for n in 0..=12 {
            let p = s.coeff(n).to_laurent().unwrap();
            assert!(p.low_degree().unwrap() >= 1);
        }
    }

    #[test]
    fn q_only_factor_is_truncated() {
        // 1/(1 - q^2) = 1 + q^2 + q^4 + ...
        let cf = ClosedForm::new(BiPoly::one(), vec![Binomial::one_minus(1, 0, 2)]);
        let s = cf.expand(0, 7).unwrap();
        assert_eq!(s.coeff(0).ceiling(), Some(7));
        assert_eq!(s.coeff(0).known_part(), LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1), (6, 1)]));
        // 1/(q^2 - q^-2): dominant q^-2, so -q^2/(1 - q^4)
        let cf = ClosedForm::new(
            BiPoly::one(),
            vec![Binomial::new(m(1, 0, 2), m(1, 0, -2)).unwrap()],
        );
        let s = cf.expand(0, 12).unwrap();
        assert_eq!(
            s.coeff(0).known_part(),
            LaurentPoly::from_terms([(2, -1), (6, -1), (10, -1)])
        );
    }

    #[test]
    fn truncated_coefficients_reach_the_ceiling() {
        // q^-5 x / ((1 - x)(1 - q^3)): low q-exponents must not eat the ceiling
        let cf = ClosedForm::new(
            BiPoly::monomial(m(1, 1, -5)),
            vec![Binomial::one_minus(1, 1, 0), Binomial::one_minus(1, 0, 3)],
        );
        let s = cf.expand(3, 20).unwrap();
        assert!(s.coeff(0).known_part().is_zero());
        let c1 = s.coeff(1);
        assert_eq!(c1.ceiling(), Some(20));
        assert_eq!(c1.known_part(), LaurentPoly::from_terms((0..9).map(|k| (-5 + 3 * k, 1))));
    }

    #[test]
    fn rejects_non_unit_and_non_series() {
        let cf = ClosedForm::new(BiPoly::one(), vec![Binomial::new(m(2, 0, 0), m(1, 1, 0)).unwrap()]);
        assert_eq!(cf.expand(3, 10), Err(Error::NonUnitDominant));
        let cf = ClosedForm::new(BiPoly::one(), vec![Binomial::new(m(1, 1, 0), m(1, 2, 0)).unwrap()]);
        assert_eq!(cf.expand(3, 10), Err(Error::NotPowerSeries));
        assert_eq!(Binomial::new(m(1, 1, 1), m(3, 1, 1)), Err(Error::Incomparable));
    }

    #[test]
    fn expansion_inverts_denominator() {
        // multiplying back by the denominator recovers the numerator
        let num = BiPoly::from_monomials([m(1, 0, 2), m(-3, 1, -1), m(2, 2, 4)]);
        let den = vec![
            Binomial::new(m(1, 1, 0), m(1, 0, 2)).unwrap(),
            Binomial::one_minus(1, 1, 3),
            Binomial::one_minus(-1, 2, -1),
        ];
        let cf = ClosedForm::new(num.clone(), den);
        let s = cf.expand(10, 60).unwrap();
        let back = cf.denominator_poly().mul_series(&s);
        for n in 0..=10 {
            assert_eq!(back.coeff(n).to_laurent().unwrap(), num.x_coeff(n as i64));
        }
    }
}
