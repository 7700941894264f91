//! Sparse Laurent polynomials in a single variable `q`.
//!
//! Terms are kept in a `BTreeMap` from exponent to coefficient with zero
//! coefficients never stored, so structural equality is mathematical
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficient ring for [`LaurentPoly`].
pub trait Coefficient: Clone + Eq + Zero + One + Signed + fmt::Display + FromStr + Send + Sync {}

impl<T> Coefficient for T where T: Clone + Eq + Zero + One + Signed + fmt::Display + FromStr + Send + Sync {}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Coefficient> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c q^e`.
    pub fn monomial(c: T, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(T::one(), e)
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// The quantum integer `[m] = (q^m - q^-m) / (q - q^-1)`.
    pub fn quantum_integer(m: i64) -> Self {
        let sign = if m < 0 { -T::one() } else { T::one() };
        let m = m.abs();
        Self::from_terms((0..m).map(|i| (m - 1 - 2 * i, sign.clone())))
    }

    fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                v.is_zero()
            }
            None => {
                self.terms.insert(e, c);
                false
            }
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<T: Coefficient> Add<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Coefficient> Add for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(mut self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        self += &rhs;
        self
    }
}

impl<T: Coefficient> AddAssign<&LaurentPoly<T>> for LaurentPoly<T> {
    fn add_assign(&mut self, rhs: &LaurentPoly<T>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<T: Coefficient> AddAssign for LaurentPoly<T> {
    fn add_assign(&mut self, rhs: LaurentPoly<T>) {
        *self += &rhs;
    }
}

impl<T: Coefficient> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<T: Coefficient> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Coefficient> Sub<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Coefficient> Sub for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(mut self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        self -= &rhs;
        self
    }
}

impl<T: Coefficient> SubAssign<&LaurentPoly<T>> for LaurentPoly<T> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<T>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<T: Coefficient> SubAssign for LaurentPoly<T> {
    fn sub_assign(&mut self, rhs: LaurentPoly<T>) {
        *self -= &rhs;
    }
}

impl<T: Coefficient> Mul<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Coefficient> Mul for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        &self * &rhs
    }
}

impl<T: Coefficient> Sum for LaurentPoly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<T: Coefficient> fmt::Display for LaurentPoly<T> {
    /// Renders as `q^4 - 2 + 3q^-2`, exponents descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Laurent polynomial {input:?}: {reason}")]
pub struct ParsePolyError {
    pub input: String,
    pub reason: &'static str,
}

impl<T: Coefficient> FromStr for LaurentPoly<T> {
    type Err = ParsePolyError;

    /// Parses the rendering produced by `Display`; whitespace is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParsePolyError { input: s.to_string(), reason };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms, keeping the minus in `q^-2` attached
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = Self::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff, exp) = match body.find('q') {
                None => (body, 0),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| err("expected '^' after q"))?
                            .parse::<i64>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (&body[..pos], exp)
                }
            };
            let mut c =
                if coeff.is_empty() { T::one() } else { coeff.parse::<T>().map_err(|_| err("bad coefficient"))? };
            if neg {
                c = -c;
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

impl<T: Coefficient> Serialize for LaurentPoly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
