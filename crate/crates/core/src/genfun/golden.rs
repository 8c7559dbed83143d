//! Checking named closed forms against series computed from scratch.
//!
//! A form's name says how to compute the series it should equal:
//! `F_4` is the product expansion, `G_4` its `PT′`, `H_4^2` the `PT′` of
//! `[gcd(4,2)]·F_4`, and a leading `X_{m,r}` takes a section. Anything in
//! square brackets after the name is a label and does not change the target.

use std::path::Path;

use num_integer::Integer;
use rayon::prelude::*;

use super::closed_form::ClosedForm;
use super::operators::{expand_sum, f_product, g_series, h_series, series_equal, x_section, Mismatch, Window};
use super::parse::FormLibrary;
use super::series::XSeries;
use crate::error::{Error, Result};

/// The closed-form data shipped with the crate.
pub const BUILTIN_FORMS: &str = include_str!("../../data/closed_forms.txt");

pub fn builtin_library() -> FormLibrary {
    FormLibrary::parse(BUILTIN_FORMS).expect("shipped closed-form data parses")
}

pub fn load_library(path: Option<&Path>) -> Result<FormLibrary> {
    match path {
        None => Ok(builtin_library()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))?;
            FormLibrary::parse(&text)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    F(u32),
    G(u32),
    /// `H_m^r`, built with `d = gcd(m, r)` (`r = 0` gives `d = m`).
    H { m: u32, r: u32 },
}

impl Base {
    pub fn m(self) -> u32 {
        match self {
            Base::F(m) | Base::G(m) | Base::H { m, .. } => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Target {
    pub section: Option<(u32, u32)>,
    pub base: Base,
}

impl Target {
    /// Computes the target series through `x^x_order`.
    pub fn compute(&self, x_order: usize) -> Result<XSeries> {
        let base_order = match self.section {
            Some((m, r)) => x_order * m as usize + r as usize,
            None => x_order,
        };
        let window = Window::for_m(self.base.m(), base_order);
        let base = match self.base {
            Base::F(m) => f_product(m, window)?,
            Base::G(m) => g_series(m, window)?,
            Base::H { m, r } => h_series(m, m.gcd(&r), window)?,
        };
        match self.section {
            Some((m, r)) => x_section(m, r, &base),
            None => Ok(base),
        }
    }
}

/// Reads a form name such as `X_{4,2}H_4^2` or `G_4 [decomposition]`.
pub fn parse_name(name: &str) -> Option<Target> {
    let name = name.split('[').next()?.trim();
    let (section, rest) = match name.strip_prefix("X_{") {
        Some(tail) => {
            let (inner, rest) = tail.split_once('}')?;
            let (m, r) = inner.split_once(',')?;
            (Some((m.trim().parse().ok()?, r.trim().parse().ok()?)), rest)
        }
        None => (None, name),
    };
    let mut chars = rest.chars();
    let kind = chars.next()?;
    let rest = chars.as_str().strip_prefix('_')?;
    let base = match kind {
        'F' => Base::F(rest.parse().ok()?),
        'G' => Base::G(rest.parse().ok()?),
        'H' => {
            let (m, r) = rest.split_once('^')?;
            let (m, r): (u32, u32) = (m.parse().ok()?, r.parse().ok()?);
            if r >= m {
                return None;
            }
            Base::H { m, r }
        }
        _ => return None,
    };
    if base.m() == 0 || section.is_some_and(|(m, r)| m == 0 || r >= m) {
        return None;
    }
    Some(Target { section, base })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenOutcome {
    pub name: String,
    pub x_order: usize,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Expands the forms filed under `name` and compares them with the computed
/// target on `x^0..=x^x_order`, wherever both sides are exact.
pub fn check_form(name: &str, forms: &[ClosedForm], x_order: usize) -> Result<GoldenOutcome> {
    let target = parse_name(name)
        .ok_or_else(|| Error::InvalidArgument(format!("cannot derive a series from the name {name:?}")))?;
    let computed = target.compute(x_order)?;
    let ceiling = computed
        .coeffs()
        .iter()
        .filter_map(|c| c.ceiling())
        .min()
        .unwrap_or(Window::for_m(target.base.m(), x_order).q_ceiling);
    let expanded = expand_sum(forms, Window::new(x_order, ceiling))?;
    let cmp = series_equal(&computed, &expanded, 0..=x_order, None)?;
    Ok(GoldenOutcome {
        name: name.to_string(),
        x_order,
        equal: cmp.equal,
        first_mismatch: cmp.first_mismatch,
    })
}

/// Checks every form in the library, in file order.
pub fn check_library(lib: &FormLibrary, x_order: usize) -> Vec<(String, Result<GoldenOutcome>)> {
    let entries: Vec<_> = lib.iter().collect();
    entries
        .par_iter()
        .map(|(name, forms)| (name.to_string(), check_form(name, forms, x_order)))
        .collect()
}
