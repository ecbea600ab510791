//! Sparse Laurent polynomials in one indeterminate over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Exponent to coefficient; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPolyQ {
    coeffs: BTreeMap<i64, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPolyQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    /// `c·x^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPolyQ { coeffs }
    }

    /// The indeterminate `x`.
    pub fn var() -> Self {
        Self::monomial(rat(1), 1)
    }

    /// Builds from `(exponent, integer coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, rat(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<Rational> {
        self.coeffs.values().next_back().cloned()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolyQ {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolyQ {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x ↦ -x`.
    pub fn negate_var(&self) -> Self {
        LaurentPolyQ {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e, if e % 2 == 0 { v.clone() } else { -v.clone() }))
                .collect(),
        }
    }

    /// Substitutes `x ↦ 1/x`.
    pub fn invert_var(&self) -> Self {
        LaurentPolyQ {
            coeffs: self.coeffs.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Whether every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 0)
    }

    /// The constant term as an `i64`, if this is an integer constant.
    pub fn as_int(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => {
                let (&e, c) = self.coeffs.iter().next()?;
                if e == 0 && c.is_integer() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Renders with the given variable name, descending exponents and
    /// explicit signs, e.g. `q^3+q^2-q-1`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            let mag = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("({}/{})", a.numer(), a.denom())
            };
            if e == 0 {
                out.push_str(&mag);
                continue;
            }
            if !a.is_one() {
                out.push_str(&mag);
            }
            out.push_str(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl Add<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn add(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn add(mut self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn add_assign(&mut self, rhs: &LaurentPolyQ) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn sub_assign(&mut self, rhs: &LaurentPolyQ) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c.clone());
        }
    }
}

impl Sub<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn sub(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn sub(mut self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(self) -> LaurentPolyQ {
        self.scale(&rat(-1))
    }
}

impl Neg for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(self) -> LaurentPolyQ {
        -&self
    }
}

impl Mul<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = LaurentPolyQ::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        &self * &rhs
    }
}
