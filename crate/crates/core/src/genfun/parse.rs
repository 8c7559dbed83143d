//! Text format for closed forms.
//!
//! One form per line: `name | numerator | denominator`. The numerator is an
//! integer polynomial expression in `x` and `q` (`+ - * ^`, parentheses,
//! negative exponents on `x`/`q`). The denominator is a `*`-separated list of
//! two-term factors, each optionally raised to a positive power. Blank lines
//! and lines starting with `#` are ignored. Lines that share a name are
//! summed.

use num_bigint::BigInt;
use num_traits::One;

use super::closed_form::{BiPoly, Binomial, ClosedForm, Monomial};
use crate::error::{Error, Result};

/// Named closed forms in file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FormLibrary {
    entries: Vec<(String, Vec<ClosedForm>)>,
}

impl FormLibrary {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lib = FormLibrary::default();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [name, num, den] = fields[..] else {
                return Err(err(format!("expected 3 '|'-separated fields, found {}", fields.len())));
            };
            if name.is_empty() {
                return Err(err("empty name".into()));
            }
            let numerator = parse_expression(num).map_err(err)?;
            let denominator = parse_denominator(den).map_err(err)?;
            lib.push(name, ClosedForm::new(numerator, denominator));
        }
        Ok(lib)
    }

    fn push(&mut self, name: &str, form: ClosedForm) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some((_, forms)) => forms.push(form),
            None => self.entries.push((name.to_string(), vec![form])),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&[ClosedForm]> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f.as_slice())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[ClosedForm])> {
        self.entries.iter().map(|(n, f)| (n.as_str(), f.as_slice()))
    }
}

/// Parses an integer polynomial expression in `x` and `q`.
pub fn parse_expression(src: &str) -> std::result::Result<BiPoly, String> {
    let mut p = Parser::new(src);
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(format!("unexpected '{}' at column {}", p.chars[p.pos], p.pos + 1));
    }
    Ok(v)
}

/// Parses `(a - b)*(c - d)^2*...` into binomial factors; `1` means none.
pub fn parse_denominator(src: &str) -> std::result::Result<Vec<Binomial>, String> {
    let mut p = Parser::new(src);
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.eat('1') {
            // lone constant 1
        } else {
            if !p.eat('(') {
                return Err(format!("expected '(' at column {}", p.pos + 1));
            }
            let inner = p.sum()?;
            if !p.eat(')') {
                return Err(format!("expected ')' at column {}", p.pos + 1));
            }
            let power = if p.eat('^') { p.integer()? } else { 1 };
            if power == 0 {
                return Err("zero power in denominator".into());
            }
            let ms: Vec<Monomial> = inner.monomials().collect();
            let [a, b] = &ms[..] else {
                return Err(format!("denominator factor ({inner}) is not a binomial"));
            };
            let factor = Binomial::new(a.clone(), Monomial::new(-&b.coeff, b.x, b.q))
                .map_err(|e| e.to_string())?;
            for _ in 0..power {
                out.push(factor.clone());
            }
        }
        p.skip_ws();
        if p.pos == p.chars.len() {
            return Ok(out);
        }
        if !p.eat('*') {
            return Err(format!("expected '*' between factors at column {}", p.pos + 1));
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> std::result::Result<BiPoly, String> {
        let mut acc = if self.eat('-') {
            self.product()?.neg()
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> std::result::Result<BiPoly, String> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> std::result::Result<BiPoly, String> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(format!("expected ')' at column {}", self.pos + 1));
                }
                if self.eat('^') {
                    let k = self.integer()?;
                    Ok(inner.pow(k as u32))
                } else {
                    Ok(inner)
                }
            }
            Some(v @ ('x' | 'q')) => {
                self.pos += 1;
                let e = if self.eat('^') { self.signed_integer()? } else { 1 };
                let (x, q) = if v == 'x' { (e, 0) } else { (0, e) };
                Ok(BiPoly::monomial(Monomial::new(BigInt::one(), x, q)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let c: BigInt = digits.parse().map_err(|e| format!("{e}"))?;
                Ok(BiPoly::monomial(Monomial::new(c, 0, 0)))
            }
            Some(c) => Err(format!("unexpected '{c}' at column {}", self.pos + 1)),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn integer(&mut self) -> std::result::Result<i64, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected an integer at column {}", self.pos + 1));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|e| format!("{e}"))
    }

    fn signed_integer(&mut self) -> std::result::Result<i64, String> {
        if self.eat('-') {
            Ok(-self.integer()?)
        } else {
            self.integer()
        }
    }
}
