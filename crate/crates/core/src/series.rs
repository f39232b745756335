//! Truncated formal power series in one variable over the [`YRat`]
//! coefficient ring, plus the standard generating series of the
//! characteristic-class calculus.
//!
//! A series is a dense coefficient vector `c[0..=order]`; every operation
//! truncates at the fixed order. The named constructors are cached per
//! (kind, order) since every class computation at a given ring top degree
//! reuses the same expansions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::yrat::YRat;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<YRat>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<YRat>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![YRat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = YRat::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &YRat {
        &self.coeffs[m]
    }

    pub fn constant_term(&self) -> &YRat {
        &self.coeffs[0]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }

    pub fn scale(&self, c: &YRat) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self { coeffs }
    }

    /// Reciprocal; the constant term must be a unit (a nonzero rational
    /// times a `(1+y)` power).
    pub fn reciprocal(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].try_unit_inverse()?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = YRat::zero();
            for k in 1..=m {
                acc = &acc + &(&self.coeffs[k] * &out.coeffs[m - k]);
            }
            out.coeffs[m] = (&acc * &inv0).scale(&BigRational::from_integer(BigInt::from(-1)));
        }
        Some(out)
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Self {
        assert!(self.coeffs[0] == YRat::one(), "log needs constant term 1");
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = YRat::zero();
        let mut out = Self::zero(n);
        let mut upow = Self::one(n);
        for m in 1..=n {
            upow = upow.mul(&u);
            let c = BigRational::new(BigInt::from(if m % 2 == 1 { 1 } else { -1 }), BigInt::from(m));
            out = out.add(&upow.scale(&YRat::from_rational(c)));
        }
        out
    }

    /// Substitution `α -> t α`.
    pub fn compose_scale(&self, t: &YRat) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut tp = YRat::one();
        for (m, c) in self.coeffs.iter().enumerate() {
            if m > 0 {
                tp = &tp * t;
            }
            coeffs.push(c * &tp);
        }
        Self { coeffs }
    }
}

fn factorial(m: usize) -> BigRational {
    let mut f = BigInt::one();
    for k in 2..=m {
        f *= BigInt::from(k);
    }
    BigRational::from_integer(f)
}

/// `e^{tα}` with a rational scale `t`.
pub fn exp_series(order: usize, t: &BigRational) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut tp = BigRational::one();
    for m in 0..=order {
        if m > 0 {
            tp *= t;
        }
        coeffs.push(YRat::from_rational(&tp / factorial(m)));
    }
    PowerSeries::from_coeffs(coeffs)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SeriesKind {
    /// `α / (1 - e^{-α})`, the Todd series.
    Todd,
    /// `α (1 + y e^{-α}) / (1 - e^{-α})`, the un-normalized Hirzebruch
    /// series; constant term `1 + y`.
    HirzebruchUnnormalized,
    /// `α(1+y)/(1 - e^{-α(1+y)}) - αy`, the normalized Hirzebruch series.
    HirzebruchNormalized,
    /// `α / tanh(α/2) = α (e^α + 1)/(e^α - 1)`; equals the un-normalized
    /// series at y = 1.
    LSeries,
    /// `1 + y e^{α}`, the per-root factor of `ch(λ_y)`.
    LambdaFactor,
    /// `1 + y e^{-α}`, the dual-root factor.
    LambdaFactorDual,
}

fn build_series(kind: SeriesKind, order: usize) -> PowerSeries {
    match kind {
        SeriesKind::Todd => {
            // (1 - e^{-α})/α = Σ (-1)^m α^m/(m+1)!
            let coeffs = (0..=order)
                .map(|m| {
                    let sign = if m % 2 == 0 { 1 } else { -1 };
                    YRat::from_rational(BigRational::new(BigInt::from(sign), BigInt::one()) / factorial(m + 1))
                })
                .collect();
            PowerSeries::from_coeffs(coeffs).reciprocal().expect("unit constant term")
        }
        SeriesKind::HirzebruchUnnormalized => {
            let todd = build_series(SeriesKind::Todd, order);
            todd.mul(&build_series(SeriesKind::LambdaFactorDual, order))
        }
        SeriesKind::HirzebruchNormalized => {
            // td_k (1+y)^k α^k, minus yα
            let todd = build_series(SeriesKind::Todd, order);
            let mut s = todd.compose_scale(&YRat::one_plus_y());
            if order >= 1 {
                s.coeffs[1] = &s.coeffs[1] - &YRat::variable();
            }
            s
        }
        SeriesKind::LSeries => {
            // α (e^α + 1)/(e^α - 1): numerator e^α + 1, denominator (e^α - 1)/α
            let one = PowerSeries::one(order);
            let e = exp_series(order, &BigRational::one());
            let num = e.add(&one);
            let den_coeffs = (0..=order)
                .map(|m| YRat::from_rational(BigRational::one() / factorial(m + 1)))
                .collect();
            let den = PowerSeries::from_coeffs(den_coeffs);
            num.mul(&den.reciprocal().expect("unit constant term"))
        }
        SeriesKind::LambdaFactor => {
            let mut s = exp_series(order, &BigRational::one()).scale(&YRat::variable());
            s.coeffs[0] = &s.coeffs[0] + &YRat::one();
            s
        }
        SeriesKind::LambdaFactorDual => {
            let minus_one = -BigRational::one();
            let mut s = exp_series(order, &minus_one).scale(&YRat::variable());
            s.coeffs[0] = &s.coeffs[0] + &YRat::one();
            s
        }
    }
}

/// Cached named series at the given truncation order. The cache is only a
/// lookup table; construction happens outside the lock.
pub fn series(kind: SeriesKind, order: usize) -> PowerSeries {
    static CACHE: OnceLock<Mutex<BTreeMap<(SeriesKind, usize), PowerSeries>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(s) = cache.lock().expect("series cache poisoned").get(&(kind, order)) {
        return s.clone();
    }
    let built = build_series(kind, order);
    cache
        .lock()
        .expect("series cache poisoned")
        .entry((kind, order))
        .or_insert(built)
        .clone()
}

/// Evaluates all y-coefficients of a series at a rational `y` value,
/// leaving a series over plain rationals. Used by test oracles.
pub fn evaluate_y(s: &PowerSeries, y: &BigRational) -> Option<Vec<BigRational>> {
    (0..=s.order()).map(|m| s.coeff(m).evaluate(y)).collect()
}
