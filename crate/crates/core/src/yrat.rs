//! Coefficient ring for characteristic-class computations: polynomials in
//! `y` over the rationals, with denominators tracked as powers of `(1+y)`.
//!
//! The only division the normalized Hirzebruch classes need is by `(1+y)`,
//! so instead of general rational functions a [`YRat`] stores a numerator
//! polynomial and a `(1+y)`-power. Reduction cancels common `(1+y)` factors
//! and is confluent.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::GenusPolynomial;

/// Polynomial in `y` over `BigRational`, sparse canonical form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl YPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn variable() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `1 + y`.
    pub fn one_plus_y() -> Self {
        let mut p = Self::one();
        p.add_term(1, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == 0)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
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

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (*e, k * c)).collect();
        Self { terms }
    }

    pub fn evaluate(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            assert!(*e >= 0, "negative exponent in YPoly evaluation");
            let mut p = BigRational::one();
            for _ in 0..*e {
                p *= at;
            }
            acc += c * p;
        }
        acc
    }

    /// Quotient by `(1+y)` if exact, else `None`.
    pub fn div_one_plus_y(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lo = *self.terms.keys().next().unwrap();
        let hi = *self.terms.keys().next_back().unwrap();
        // synthetic division, ascending: q_e = c_e - q_{e-1}
        let mut q = Self::zero();
        let mut carry = BigRational::zero();
        for e in lo..hi {
            let qe = self.coeff(e) - &carry;
            carry = qe.clone();
            q.add_term(e, qe);
        }
        // remainder must vanish: c_hi == q_{hi-1}
        if self.coeff(hi) == carry {
            Some(q)
        } else {
            None
        }
    }

    pub fn mul_one_plus_y(&self) -> Self {
        let mut out = self.clone();
        for (e, c) in &self.terms {
            out.add_term(e + 1, c.clone());
        }
        out
    }

    /// Conversion to an integer Laurent polynomial; fails on a fractional
    /// coefficient.
    pub fn to_genus_polynomial(&self) -> Result<GenusPolynomial, String> {
        let mut p = GenusPolynomial::zero();
        for (e, c) in &self.terms {
            if !c.denom().is_one() {
                return Err(format!(
                    "coefficient of y^{e} is non-integral: {c}"
                ));
            }
            p.add_term(*e, c.numer().clone());
        }
        Ok(p)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            let m = match e {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{e}"),
            };
            let body = if m.is_empty() {
                format!("{abs}")
            } else if abs.is_one() {
                m
            } else {
                format!("{abs}*{m}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl From<GenusPolynomial> for YPoly {
    fn from(p: GenusPolynomial) -> Self {
        let mut out = YPoly::zero();
        for (e, c) in p.iter() {
            out.add_term(e, BigRational::from_integer(c.clone()));
        }
        out
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({})", self.render())
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        YPoly { terms }
    }
}

/// `num / (1+y)^denom_pow`, kept reduced: `denom_pow == 0` or `(1+y)` does
/// not divide `num`.
#[derive(Clone, PartialEq, Eq)]
pub struct YRat {
    num: YPoly,
    denom_pow: u32,
}

impl YRat {
    pub fn new(num: YPoly, denom_pow: u32) -> Self {
        Self { num, denom_pow }.reduced()
    }

    pub fn zero() -> Self {
        Self { num: YPoly::zero(), denom_pow: 0 }
    }

    pub fn one() -> Self {
        Self { num: YPoly::one(), denom_pow: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: YPoly::from_int(n), denom_pow: 0 }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self { num: YPoly::constant(c), denom_pow: 0 }
    }

    pub fn variable() -> Self {
        Self { num: YPoly::variable(), denom_pow: 0 }
    }

    pub fn one_plus_y() -> Self {
        Self { num: YPoly::one_plus_y(), denom_pow: 0 }
    }

    /// `(1+y)^k` for `k` of either sign.
    pub fn one_plus_y_pow(k: i64) -> Self {
        if k >= 0 {
            let mut p = YPoly::one();
            for _ in 0..k {
                p = p.mul_one_plus_y();
            }
            Self { num: p, denom_pow: 0 }
        } else {
            Self { num: YPoly::one(), denom_pow: (-k) as u32 }
        }
    }

    pub fn numerator(&self) -> &YPoly {
        &self.num
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced form carries no `(1+y)` denominator.
    pub fn is_polynomial(&self) -> bool {
        self.denom_pow == 0
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.denom_pow = 0;
            return self;
        }
        while self.denom_pow > 0 {
            match self.num.div_one_plus_y() {
                Some(q) => {
                    self.num = q;
                    self.denom_pow -= 1;
                }
                None => break,
            }
        }
        self
    }

    pub fn reduce(&self) -> Self {
        self.clone().reduced()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { num: self.num.scale(c), denom_pow: self.denom_pow }.reduced()
    }

    /// Multiplicative inverse when the value is a unit, i.e. a nonzero
    /// rational times a power of `(1+y)`.
    pub fn try_unit_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        // in reduced form a unit numerator is c * (1+y)^j
        let mut j: u32 = 0;
        let mut body = self.num.clone();
        while !body.is_constant() {
            body = body.div_one_plus_y()?;
            j += 1;
        }
        let c = body.coeff(0);
        if c.is_zero() {
            return None;
        }
        let inv_c = c.recip();
        // inverse of c (1+y)^{j-k} is (1/c) (1+y)^{k-j}
        let pow = self.denom_pow as i64 - j as i64;
        Some(Self::one_plus_y_pow(pow).scale(&inv_c))
    }

    pub fn evaluate(&self, at: &BigRational) -> Option<BigRational> {
        let denom_base = BigRational::one() + at;
        if denom_base.is_zero() && self.denom_pow > 0 {
            return None;
        }
        let mut v = self.num.evaluate(at);
        for _ in 0..self.denom_pow {
            v /= denom_base.clone();
        }
        Some(v)
    }

    /// The numerator as an integer polynomial, failing if a `(1+y)`
    /// denominator or a fractional coefficient remains.
    pub fn to_genus_polynomial(&self) -> Result<GenusPolynomial, String> {
        let r = self.reduce();
        if r.denom_pow != 0 {
            return Err(format!(
                "residual (1+y)^{} denominator in {}",
                r.denom_pow,
                r.render()
            ));
        }
        r.num.to_genus_polynomial()
    }

    pub fn render(&self) -> String {
        if self.denom_pow == 0 {
            self.num.render()
        } else if self.denom_pow == 1 {
            format!("({}) / (1+y)", self.num.render())
        } else {
            format!("({}) / (1+y)^{}", self.num.render(), self.denom_pow)
        }
    }
}

impl fmt::Debug for YRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YRat({})", self.render())
    }
}

impl fmt::Display for YRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &YRat {
    type Output = YRat;
    fn add(self, rhs: &YRat) -> YRat {
        let k = self.denom_pow.max(rhs.denom_pow);
        let mut a = self.num.clone();
        for _ in self.denom_pow..k {
            a = a.mul_one_plus_y();
        }
        let mut b = rhs.num.clone();
        for _ in rhs.denom_pow..k {
            b = b.mul_one_plus_y();
        }
        YRat::new(&a + &b, k)
    }
}

impl Sub for &YRat {
    type Output = YRat;
    fn sub(self, rhs: &YRat) -> YRat {
        self + &-rhs
    }
}

impl Mul for &YRat {
    type Output = YRat;
    fn mul(self, rhs: &YRat) -> YRat {
        YRat::new(&self.num * &rhs.num, self.denom_pow + rhs.denom_pow)
    }
}

impl Neg for &YRat {
    type Output = YRat;
    fn neg(self) -> YRat {
        YRat { num: -&self.num, denom_pow: self.denom_pow }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $trait:ident, $m:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(YPoly, Add, add);
forward_owned_binop!(YPoly, Sub, sub);
forward_owned_binop!(YPoly, Mul, mul);
forward_owned_binop!(YRat, Add, add);
forward_owned_binop!(YRat, Sub, sub);
forward_owned_binop!(YRat, Mul, mul);

/// Convenience rational constructor.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_one_plus_y() {
        // (1 - y^2) = (1+y)(1-y)
        let mut p = YPoly::one();
        p.add_term(2, rational(-1, 1));
        let q = p.div_one_plus_y().unwrap();
        let mut expect = YPoly::one();
        expect.add_term(1, rational(-1, 1));
        assert_eq!(q, expect);
        // 1 + y^2 is not divisible
        let mut r = YPoly::one();
        r.add_term(2, rational(1, 1));
        assert!(r.div_one_plus_y().is_none());
    }

    #[test]
    fn reduction_cancels() {
        // (1+y)^2 / (1+y)^3 -> 1/(1+y)
        let num = YPoly::one_plus_y().mul_one_plus_y();
        let x = YRat::new(num, 3);
        assert_eq!(x.denom_pow(), 1);
        assert_eq!(x.numerator(), &YPoly::one());
    }

    #[test]
    fn reduction_confluent() {
        let num = &YPoly::one_plus_y() * &YPoly::variable();
        let x = YRat::new(num, 2);
        assert_eq!(x.reduce(), x);
        assert_eq!(x.reduce().reduce(), x.reduce());
    }

    #[test]
    fn unit_inverse() {
        // (2(1+y))^{-1} = 1/(2(1+y))
        let x = YRat::one_plus_y().scale(&rational(2, 1));
        let inv = x.try_unit_inverse().unwrap();
        assert_eq!(&x * &inv, YRat::one());
        // 1 + 2y is not a unit
        let mut p = YPoly::one();
        p.add_term(1, rational(2, 1));
        assert!(YRat::new(p, 0).try_unit_inverse().is_none());
        assert!(YRat::zero().try_unit_inverse().is_none());
    }

    #[test]
    fn arithmetic_common_denominators() {
        let half = YRat::new(YPoly::one(), 1); // 1/(1+y)
        let s = &half + &half;
        assert_eq!(s, YRat::new(YPoly::constant(rational(2, 1)), 1));
        let p = &s * &YRat::one_plus_y();
        assert_eq!(p, YRat::from_int(2));
    }

    #[test]
    fn genus_polynomial_extraction() {
        let mut p = YPoly::one();
        p.add_term(1, rational(-2, 1));
        p.add_term(2, rational(1, 1));
        let x = YRat::new(p, 0);
        let g = x.to_genus_polynomial().unwrap();
        assert_eq!(g.render(), "1 - 2*y + y^2");

        let bad = YRat::new(YPoly::constant(rational(1, 2)), 0);
        assert!(bad.to_genus_polynomial().is_err());
        let resid = YRat::new(YPoly::variable(), 1);
        assert!(resid.to_genus_polynomial().is_err());
    }
}
