//! Laurent polynomials over the integers in a single variable `v`.
//!
//! This is the coefficient ring for everything on the Hecke side: structure
//! constants, Kazhdan-Lusztig polynomials, graded hom ranks. Coefficients are
//! arbitrary-precision integers and all arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_k v^k` with integer coefficients.
///
/// Stored sparsely as exponent -> coefficient, with no zero coefficients
/// (canonical form). The map is ordered so printing is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The monomial `c * v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// The variable `v`.
    pub fn v() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i32) -> Self {
        LaurentPoly::monomial(1, k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `v^k` (zero if absent).
    pub fn coeff(&self, k: i32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterator over `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Substitutes `v -> v^-1`. A ring involution over the integers.
    pub fn bar(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&k, c)| (-k, c.clone())).collect();
        LaurentPoly { coeffs }
    }

    /// Multiplies by the monomial `v^k`.
    pub fn shifted(&self, k: i32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e + k, c.clone()))
            .collect();
        LaurentPoly { coeffs }
    }

    fn insert_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True if every coefficient is nonnegative and every exponent positive.
    pub fn in_v_npos(&self) -> bool {
        self.coeffs.iter().all(|(&k, c)| k > 0 && c.is_positive())
    }

    /// Parses the textual format produced by `Display`.
    ///
    /// Grammar: signed terms joined by `+`/`-`; a term is `c`, `v`, `v^k`,
    /// `c v^k` or `c*v^k` with integer `c` and integer `k` (possibly negative).
    pub fn parse(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut poly = LaurentPoly::zero();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coef = if start == i {
                BigInt::one()
            } else {
                s[start..i]
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(e.to_string()))?
            };
            coef *= sign;
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == b'v' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if estart == i {
                        return Err(Error::Parse(format!("missing exponent in `{input}`")));
                    }
                    exp = s[estart..i]
                        .parse::<i32>()
                        .map_err(|e| Error::Parse(e.to_string()))?;
                }
            } else if start == i {
                return Err(Error::Parse(format!("bad term in `{input}`")));
            }
            poly.insert_term(exp, coef);
        }
        Ok(poly)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.insert_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.insert_term(k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let coeffs = self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect();
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&j, a) in &self.coeffs {
            for (&k, b) in &rhs.coeffs {
                out.insert_term(j + k, a * b);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.insert_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.insert_term(k, -c.clone());
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first, e.g. `v^3 + v` or `v^5 + v^3`.
        let mut first = true;
        for (&k, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                if k == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{k}")?;
                }
            }
        }
        Ok(())
    }
}
