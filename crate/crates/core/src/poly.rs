//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored constant-first: `coeffs[i]` is the coefficient of
//! `x^i`. The highest stored coefficient is always nonzero, so the zero
//! polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponents beyond this are rejected by the parser to keep the dense
/// representation bounded.
const MAX_PARSED_EXPONENT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: &BigInt) -> Self {
        Polynomial {
            coeffs: vec![-root, BigInt::one()],
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Smallest index holding a nonzero coefficient.
    pub fn lowest_nonzero_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Smallest `i >= 1` with `a_i != 0`; this is the `m` of the criteria.
    pub fn lowest_nonconstant_index(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .ok_or(Error::NoNonconstantTerm)
    }

    /// `|a_m| + |a_{m+1}| + ... + |a_n|`.
    pub fn abs_coeff_sum_above(&self, m: usize) -> BigInt {
        self.coeffs.iter().skip(m).map(|c| c.abs()).sum()
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_i64(&self, x: i64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// Returns `f` or `-f`, whichever has a positive constant term.
    pub fn normalize_sign(&self) -> SignNormalized {
        let constant = self.constant_term();
        if constant.is_zero() {
            SignNormalized {
                poly: self.clone(),
                negated: false,
                zero_constant: true,
            }
        } else if constant.is_negative() {
            SignNormalized {
                poly: -self,
                negated: true,
                zero_constant: false,
            }
        } else {
            SignNormalized {
                poly: self.clone(),
                negated: false,
                zero_constant: false,
            }
        }
    }

    /// Divides out `x^k` where `k` is the lowest nonzero index.
    pub fn strip_x_power(&self) -> (usize, Polynomial) {
        match self.lowest_nonzero_index() {
            Some(k) => (k, Polynomial::new(self.coeffs[k..].to_vec())),
            None => (0, Polynomial::zero()),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Canonical ordering used for sorted factor lists: by degree, then
    /// lexicographically by coefficients from the constant term upward.
    pub fn canonical_cmp(&self, other: &Polynomial) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Parses the JSON coefficient-array form `[a0, a1, ..., an]`, where
    /// entries are integers or decimal strings.
    pub fn from_json_array(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::CoefficientArray(e.to_string()))
    }

    pub fn to_json_array(&self) -> String {
        serde_json::to_string(self).expect("coefficient arrays always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignNormalized {
    pub poly: Polynomial,
    pub negated: bool,
    /// Set when the constant term is zero and no normalization was possible.
    pub zero_constant: bool,
}

pub fn multiply(f: &Polynomial, g: &Polynomial) -> Polynomial {
    f * g
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

/// Parses signed terms `[+|-] [coef] [x [^ exp]]`. Whitespace is ignored,
/// an optional `*` may separate coefficient and `x`, and repeated exponents
/// are summed.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    Parser::new(text).parse()
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or(self.text.len())
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let mut out = String::new();
        // Digit groups may be split by whitespace ("1 000") since the
        // grammar is whitespace-insensitive.
        loop {
            match self.chars.get(self.pos) {
                Some(&(_, c)) if c.is_ascii_digit() => {
                    out.push(c);
                    self.pos += 1;
                }
                Some(&(_, c)) if c.is_whitespace() && !out.is_empty() => {
                    let save = self.pos;
                    self.skip_ws();
                    if !self
                        .chars
                        .get(self.pos)
                        .is_some_and(|(_, c)| c.is_ascii_digit())
                    {
                        self.pos = save;
                        break;
                    }
                }
                _ => break,
            }
        }
        (!out.is_empty()).then_some(out)
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        if self.peek().is_none() {
            return self.syntax("empty input");
        }
        let mut first = true;
        while let Some(c) = self.peek() {
            let negative = match c {
                '+' => {
                    self.pos += 1;
                    false
                }
                '-' => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return self.syntax(format!("expected '+' or '-', found '{c}'")),
            };
            first = false;
            let (coef, exp) = self.term()?;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            if negative {
                coeffs[exp] -= coef;
            } else {
                coeffs[exp] += coef;
            }
        }
        Ok(Polynomial::new(coeffs))
    }

    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coef_digits = self.digits();
        if self.peek() == Some('.') {
            return self.syntax("floating-point literals are not accepted");
        }
        let mut has_star = false;
        if coef_digits.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            has_star = true;
        }
        let has_x = self.peek() == Some('x');
        if has_star && !has_x {
            return self.syntax("expected 'x' after '*'");
        }
        if coef_digits.is_none() && !has_x {
            return match self.peek() {
                Some(c) => self.syntax(format!("expected coefficient or 'x', found '{c}'")),
                None => self.syntax("expected coefficient or 'x', found end of input"),
            };
        }
        let coef = match coef_digits {
            Some(d) => d.parse::<BigInt>().expect("ascii digits"),
            None => BigInt::one(),
        };
        if !has_x {
            return Ok((coef, 0));
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok((coef, 1));
        }
        self.pos += 1;
        match self.peek() {
            Some('-') => {
                return Err(Error::NegativeExponent {
                    position: self.offset(),
                })
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let Some(exp_digits) = self.digits() else {
            return self.syntax("expected exponent after '^'");
        };
        match exp_digits.parse::<usize>() {
            Ok(e) if e <= MAX_PARSED_EXPONENT => Ok((coef, e)),
            _ => self.syntax(format!("exponent {exp_digits} is too large")),
        }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_seq(CoeffArrayVisitor)
    }
}

struct CoeffArrayVisitor;

impl<'de> Visitor<'de> for CoeffArrayVisitor {
    type Value = Polynomial;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an array of integers or decimal strings, constant term first")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Polynomial, A::Error> {
        let mut coeffs = Vec::new();
        while let Some(entry) = seq.next_element::<serde_json::Value>()? {
            let parsed = match &entry {
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => {
                    n.to_string().parse::<BigInt>().ok()
                }
                serde_json::Value::String(s) => s.trim().parse::<BigInt>().ok(),
                _ => None,
            };
            match parsed {
                Some(c) => coeffs.push(c),
                None => {
                    return Err(de::Error::custom(format!(
                        "coefficient {entry} is not an integer"
                    )))
                }
            }
        }
        Ok(Polynomial::new(coeffs))
    }
}
