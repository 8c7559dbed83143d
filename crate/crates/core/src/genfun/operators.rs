use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::closed_form::{BiPoly, Binomial, ClosedForm, Monomial};
use super::series::{QSeries, XSeries};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qseries::cbar;

/// Truncation of a bivariate expansion: `x^0..=x^x_order`, q-exponents
/// known below `q_ceiling`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub x_order: usize,
    pub q_ceiling: i64,
}

impl Window {
    pub fn new(x_order: usize, q_ceiling: i64) -> Self {
        Window { x_order, q_ceiling }
    }

    /// Default ceiling `4·x_order·m + 8`.
    pub fn for_m(m: u32, x_order: usize) -> Self {
        Window {
            x_order,
            q_ceiling: 4 * x_order as i64 * m as i64 + 8,
        }
    }
}

/// `(q²-q⁻²)(q-q⁻¹)`.
fn antisymmetric_prefactor() -> BiPoly {
    BiPoly::from_monomials([
        Monomial::new(1, 0, 3),
        Monomial::new(-1, 0, 1),
        Monomial::new(-1, 0, -1),
        Monomial::new(1, 0, -3),
    ])
}

/// `F_m = (q²-q⁻²)(q-q⁻¹)/(q^m-q^{-m}) · Π_{i<m} 1/(1 - x q^{1-m+2i})`.
pub fn product_formula(m: u32) -> ClosedForm {
    let m = m as i64;
    let mut denominator = vec![Binomial::new(Monomial::new(1, 0, m), Monomial::new(1, 0, -m))
        .expect("m >= 1 gives distinct exponents")];
    for i in 0..m {
        denominator.push(Binomial::one_minus(1, 1, 1 - m + 2 * i));
    }
    ClosedForm::new(antisymmetric_prefactor(), denominator)
}

pub fn f_product(m: u32, window: Window) -> Result<XSeries> {
    check_m(m)?;
    product_formula(m).expand(window.x_order, window.q_ceiling)
}

/// `F_m` built coefficient by coefficient from `(q²-q⁻²)𝒩C_{m,n}(q)`.
/// For `d = gcd(m,n) > 1` the coefficient is the positive-q expansion of
/// `(q²-q⁻²)(1-q²) C̄_{m,n}(q²) q^{-(m-1)(n-1)} / (1-q^{2d})`. The `x⁰`
/// coefficient comes from the product formula.
pub fn f_direct(m: u32, window: Window) -> Result<XSeries> {
    check_m(m)?;
    let head = ClosedForm::new(antisymmetric_prefactor(), vec![product_formula(m).denominator[0].clone()])
        .expand(0, window.q_ceiling)?;
    let mut coeffs = vec![head.coeff(0).clone()];
    let q2_minus_qm2 = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
    for n in 1..=window.x_order as u32 {
        let fam = cbar(m, n)?;
        let shift = -((m as i64 - 1) * (n as i64 - 1));
        let lifted = &q2_minus_qm2 * &fam.polynomial.substitute_power(2).shift(shift);
        if fam.is_coprime_case {
            coeffs.push(QSeries::exact(lifted));
            continue;
        }
        let d = fam.gcd as usize;
        let num = &lifted * &LaurentPoly::from_terms([(0, 1), (2, -1)]);
        coeffs.push(divide_by_one_minus_q_power(&num, 2 * d, window.q_ceiling));
    }
    Ok(XSeries::from_coeffs(coeffs))
}

/// `p / (1 - q^k)` expanded in positive powers of `q`, known below `ceiling`.
fn divide_by_one_minus_q_power(p: &LaurentPoly, k: usize, ceiling: i64) -> QSeries {
    let Some(lo) = p.low_degree() else {
        return QSeries::truncated(LaurentPoly::zero(), ceiling);
    };
    if lo >= ceiling {
        return QSeries::truncated(LaurentPoly::zero(), ceiling);
    }
    let mut acc = p.dense_range(lo, ceiling - 1);
    for i in k..acc.len() {
        let prev = acc[i - k].clone();
        acc[i] += prev;
    }
    QSeries::from_dense_truncated(lo, acc, ceiling)
}

/// `PT′_q s = -NT_q s |_{q→q⁻¹}`, applied coefficientwise.
pub fn pt_prime(s: &XSeries) -> Result<XSeries> {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(x, c)| {
            let neg = c
                .negative_part()
                .map_err(|ceiling| Error::NegativePartTruncated { x, ceiling })?;
            Ok(QSeries::exact(-neg.reciprocal_subst()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(XSeries::from_coeffs(coeffs))
}

/// `X_{m,r} Σ a_n x^n = Σ a_{km+r} x^k`.
pub fn x_section(m: u32, r: u32, s: &XSeries) -> Result<XSeries> {
    if m == 0 || r >= m {
        return Err(Error::InvalidArgument(format!("need 0 <= r < m, got m={m}, r={r}")));
    }
    if (r as usize) > s.order() {
        return Err(Error::InvalidArgument(format!(
            "series of order {} has no x^{r} coefficient",
            s.order()
        )));
    }
    let coeffs = s
        .coeffs()
        .iter()
        .skip(r as usize)
        .step_by(m as usize)
        .cloned()
        .collect();
    Ok(XSeries::from_coeffs(coeffs))
}

/// `(q^d - q^{-d})/(q - q^{-1}) = q^{d-1} + q^{d-3} + ... + q^{1-d}`.
pub fn q_symmetric_integer(d: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..d as i64).map(|j| (d as i64 - 1 - 2 * j, 1)))
}

/// `PT′ ([d]-prefactor · F_m)`; `d` must divide `m`.
pub fn h_series(m: u32, d: u32, window: Window) -> Result<XSeries> {
    check_m(m)?;
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!("d={d} must divide m={m}")));
    }
    let f = f_product(m, window)?;
    let pre = q_symmetric_integer(d);
    pt_prime(&f.map(|c| c.mul_poly(&pre)))
}

/// `G_m = PT′ F_m`.
pub fn g_series(m: u32, window: Window) -> Result<XSeries> {
    pt_prime(&f_product(m, window)?)
}

/// The coefficient of `q^i`, as a polynomial in `x` (rendered with the `q`
/// machinery; exponent = power of `x`).
pub fn q_slice(s: &XSeries, i: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for n in 0..=s.order() {
        out.add_term(n as i64, s.get(n, i)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub x: usize,
    pub q: i64,
    pub left: BigInt,
    pub right: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Compares `a` and `b` on `x^lo_x..=x^hi_x` and q-exponents in
/// `q_window` (inclusive). With `q_window = None` the whole region where
/// both sides are exact is compared.
pub fn series_equal(
    a: &XSeries,
    b: &XSeries,
    x_range: std::ops::RangeInclusive<usize>,
    q_window: Option<(i64, i64)>,
) -> Result<Comparison> {
    let top = a.order().min(b.order());
    if *x_range.end() > top {
        return Err(Error::InvalidArgument(format!(
            "x range ends at {} but the series stop at order {top}",
            x_range.end()
        )));
    }
    for x in x_range {
        let (ca, cb) = (a.coeff(x), b.coeff(x));
        let ceiling = match (ca.ceiling(), cb.ceiling()) {
            (Some(p), Some(r)) => Some(p.min(r)),
            (p, r) => p.or(r),
        };
        let (lo, hi) = match q_window {
            Some((lo, hi)) => {
                if let Some(c) = ceiling.filter(|c| hi >= *c) {
                    return Err(Error::WindowExceedsExactness { x, hi, ceiling: c });
                }
                (lo, hi)
            }
            None => (i64::MIN, ceiling.map_or(i64::MAX, |c| c - 1)),
        };
        let diff = &ca.known_part() - &cb.known_part();
        let hit = diff.terms().map(|(e, _)| e).find(|e| (lo..=hi).contains(e));
        if let Some(q) = hit {
            return Ok(Comparison {
                equal: false,
                first_mismatch: Some(Mismatch {
                    x,
                    q,
                    left: ca.known_part().coeff(q),
                    right: cb.known_part().coeff(q),
                }),
            });
        }
    }
    Ok(Comparison {
        equal: true,
        first_mismatch: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeEntry {
    pub x: usize,
    pub q: i64,
    pub value: BigInt,
}

/// Every known coefficient at `x^0..=x^x_order` is nonnegative.
pub fn nonneg_check(s: &XSeries, x_order: usize) -> (bool, Option<NegativeEntry>) {
    for (x, c) in s.coeffs().iter().enumerate().take(x_order + 1) {
        if let Some((q, v)) = c.first_negative() {
            return (
                false,
                Some(NegativeEntry {
                    x,
                    q,
                    value: v.clone(),
                }),
            );
        }
    }
    (true, None)
}

/// Sum of the expansions of several closed forms.
pub fn expand_sum(forms: &[ClosedForm], window: Window) -> Result<XSeries> {
    let mut acc = XSeries::zero(window.x_order);
    for f in forms {
        acc = acc.add(&f.expand(window.x_order, window.q_ceiling)?);
    }
    Ok(acc)
}

/// Recovers the numerator `P` of `s = q^shift·P / D` from a truncated
/// expansion: returns `D·s·q^{-shift}` through `x^order`. Terms vanish above
/// the numerator's x-degree when `s` really has that shape.
pub fn numerator_from_series(s: &XSeries, denominator: &BiPoly, q_shift: i64) -> Result<BiPoly> {
    let prod = denominator.mul_series(s);
    let mut out = BiPoly::zero();
    for (n, c) in prod.coeffs().iter().enumerate() {
        let p = c.to_laurent().ok_or_else(|| {
            Error::InvalidArgument(format!("x^{n} coefficient is truncated, numerator needs exact input"))
        })?;
        for (e, v) in p.terms() {
            out.add_term(n as i64, e - q_shift, v.clone());
        }
    }
    Ok(out)
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    Ok(())
}

/// The denominator `gcd`, exposed for section bookkeeping: `d = gcd(m, r)`
/// with `gcd(m, 0) = m`.
pub fn section_gcd(m: u32, r: u32) -> u32 {
    m.gcd(&r)
}

/// Whether every coefficient of the `q^1` slice is nonpositive except on
/// the listed x-exponents; helper for negative-term reports.
pub fn negative_terms(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().filter(|(_, c)| c.is_negative()).map(|(e, c)| (e, c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_direct_small_coefficients() {
        let f = f_direct(3, Window::for_m(3, 4)).unwrap();
        assert_eq!(f.coeff(1).to_laurent().unwrap(), LaurentPoly::from_terms([(2, 1), (-2, -1)]));
        assert_eq!(f.coeff(2).to_laurent().unwrap(), LaurentPoly::from_terms([(4, 1), (-4, -1)]));
        let f1 = f_direct(1, Window::for_m(1, 5)).unwrap();
        for n in 1..=5 {
            assert_eq!(f1.coeff(n).to_laurent().unwrap(), LaurentPoly::from_terms([(2, 1), (-2, -1)]));
        }
    }

    #[test]
    fn product_m1() {
        let f = f_product(1, Window::for_m(1, 6)).unwrap();
        for n in 0..=6 {
            let c = f.coeff(n);
            assert_eq!(c.known_part(), LaurentPoly::from_terms([(2, 1), (-2, -1)]));
        }
    }

    #[test]
    fn pt_prime_basics() {
        let s = XSeries::from_coeffs(vec![
            QSeries::zero(),
            QSeries::exact(LaurentPoly::from_terms([(1, 1), (-1, -1)])),
        ]);
        let g = pt_prime(&s).unwrap();
        assert!(g.coeff(0).to_laurent().unwrap().is_zero());
        assert_eq!(g.coeff(1).to_laurent().unwrap(), LaurentPoly::monomial(1, 1));
        let positive = XSeries::from_coeffs(vec![QSeries::truncated(LaurentPoly::monomial(3, 4), 9)]);
        assert!(pt_prime(&positive).unwrap().coeff(0).to_laurent().unwrap().is_zero());
        let bad = XSeries::from_coeffs(vec![QSeries::truncated(LaurentPoly::monomial(1, -4), -2)]);
        assert_eq!(pt_prime(&bad), Err(Error::NegativePartTruncated { x: 0, ceiling: -2 }));
    }

    #[test]
    fn section_identity_and_bounds() {
        let f = f_product(3, Window::for_m(3, 9)).unwrap();
        assert_eq!(x_section(1, 0, &f).unwrap(), f);
        let s = x_section(3, 1, &f).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.coeff(2), f.coeff(7));
        assert!(x_section(3, 3, &f).is_err());
    }

    #[test]
    fn prefactor() {
        assert_eq!(q_symmetric_integer(1), LaurentPoly::one());
        assert_eq!(q_symmetric_integer(3), LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]));
        let w = Window::for_m(4, 6);
        assert_eq!(h_series(4, 1, w).unwrap(), pt_prime(&f_product(4, w).unwrap()).unwrap());
        assert!(h_series(4, 3, w).is_err());
    }

    #[test]
    fn comparison_window_errors() {
        let w = Window::new(3, 20);
        let f = f_product(3, w).unwrap();
        assert!(series_equal(&f, &f, 0..=3, Some((-50, 19))).unwrap().equal);
        assert!(matches!(
            series_equal(&f, &f, 0..=3, Some((-50, 20))),
            Err(Error::WindowExceedsExactness { x: 0, .. })
        ));
        let g = g_series(3, w).unwrap();
        let c = series_equal(&f, &g, 1..=3, None).unwrap();
        assert!(!c.equal);
        assert_eq!(c.first_mismatch.unwrap().x, 1);
    }
}
