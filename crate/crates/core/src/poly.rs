//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! Two concrete types live here:
//! - [`GenusPolynomial`]: one variable `y`, Laurent exponents. Values of
//!   χ_y-type invariants.
//! - [`EPolynomial`]: two variables `u`, `v`. Hodge-Deligne polynomials
//!   E(Z;u,v) = Σ e^{k,l} u^k v^l.
//!
//! Both keep a canonical sparse form: no stored zero coefficients, terms
//! ordered by exponent. Equality is coefficient-wise on that form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Laurent polynomial in `y` over arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct GenusPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl GenusPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// The single term `c * y^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `y`.
    pub fn variable() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest and largest exponent with nonzero coefficient.
    pub fn exp_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
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

    /// Exact evaluation at an integer point.
    pub fn evaluate(&self, at: &BigInt) -> BigInt {
        if at.is_zero() {
            // Laurent terms with negative exponent are undefined at 0; the
            // genera we evaluate are honest polynomials there.
            assert!(
                self.terms.keys().all(|e| *e >= 0),
                "evaluation at 0 of a Laurent polynomial with negative exponents"
            );
            return self.coeff(0);
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if *e >= 0 {
                acc += c * at.pow(*e as u32);
            } else {
                let p = at.pow((-e) as u32);
                let (q, r) = num_integer::Integer::div_rem(c, &p);
                assert!(r.is_zero(), "non-integral Laurent evaluation");
                acc += q;
            }
        }
        acc
    }

    /// `y^n * P(1/y)`: sends `c*y^e` to `c*y^{n-e}`.
    pub fn reciprocal_scaled(&self, n: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (n - e, c.clone()))
            .collect();
        Self { terms }
    }

    /// Canonical text form, ascending exponents: `1 - 2*y + y^2`.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(e, c)| {
            let m = match e {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{e}"),
            };
            (c, m)
        }))
    }

    /// JSON form: `{"var":"y","terms":[{"exp":e,"coef":"<decimal>"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({"exp": e, "coef": c.to_string()}))
            .collect();
        serde_json::json!({"var": "y", "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        if v.get("var").and_then(|s| s.as_str()) != Some("y") {
            return Err("expected polynomial object with \"var\":\"y\"".into());
        }
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or("missing \"terms\" array")?;
        let mut p = Self::zero();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(|e| e.as_i64())
                .ok_or("term missing integer \"exp\"")?;
            let coef = t
                .get("coef")
                .and_then(|c| c.as_str())
                .ok_or("term missing string \"coef\"")?;
            let c: BigInt = coef.parse().map_err(|_| format!("bad coefficient {coef:?}"))?;
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenusPolynomial({})", self.render())
    }
}

impl Add for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn add(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn sub(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn mul(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let mut out = GenusPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn neg(self) -> GenusPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        GenusPolynomial { terms }
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

forward_owned_binop!(GenusPolynomial, Add, add);
forward_owned_binop!(GenusPolynomial, Sub, sub);
forward_owned_binop!(GenusPolynomial, Mul, mul);

impl AddAssign<&GenusPolynomial> for GenusPolynomial {
    fn add_assign(&mut self, rhs: &GenusPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&GenusPolynomial> for GenusPolynomial {
    fn sub_assign(&mut self, rhs: &GenusPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

/// Evaluation targets for an E-polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ESpecialization {
    /// `E(-y, 1)`, the χ_y-genus.
    ChiY,
    /// `E(t, t)`, the weight polynomial, returned in the variable `y`.
    Weight,
    /// `E(1, 1)`, the Euler characteristic, as a degree-0 polynomial.
    Euler,
}

/// Polynomial in `u`, `v` over arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct EPolynomial {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, u_exp: i64, v_exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((u_exp, v_exp), c);
        }
        Self { terms }
    }

    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((k, l), c) in it {
            p.add_term(k, l, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, u_exp: i64, v_exp: i64) -> BigInt {
        self.terms.get(&(u_exp, v_exp)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, u_exp: i64, v_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u_exp, v_exp)) {
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

    /// Total specialization; see [`ESpecialization`].
    pub fn specialize(&self, at: ESpecialization) -> GenusPolynomial {
        let mut out = GenusPolynomial::zero();
        for ((k, l), c) in &self.terms {
            match at {
                ESpecialization::ChiY => {
                    // u^k v^l at (u,v)=(-y,1): (-1)^k y^k
                    let sign = if k.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
                    out.add_term(*k, sign);
                }
                ESpecialization::Weight => out.add_term(k + l, c.clone()),
                ESpecialization::Euler => out.add_term(0, c.clone()),
            }
        }
        out
    }

    /// Canonical text form: `1 + u*v - u^2`.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|((k, l), c)| {
            let mut parts = Vec::new();
            match k {
                0 => {}
                1 => parts.push("u".to_string()),
                _ => parts.push(format!("u^{k}")),
            }
            match l {
                0 => {}
                1 => parts.push("v".to_string()),
                _ => parts.push(format!("v^{l}")),
            }
            (c, parts.join("*"))
        }))
    }

    /// JSON form: `{"vars":["u","v"],"terms":[{"exp":[k,l],"coef":"<decimal>"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((k, l), c)| serde_json::json!({"exp": [k, l], "coef": c.to_string()}))
            .collect();
        serde_json::json!({"vars": ["u", "v"], "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or("missing \"terms\" array")?;
        let mut p = Self::zero();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(|e| e.as_array())
                .ok_or("term missing \"exp\" pair")?;
            if exp.len() != 2 {
                return Err("\"exp\" must have two entries".into());
            }
            let k = exp[0].as_i64().ok_or("bad u-exponent")?;
            let l = exp[1].as_i64().ok_or("bad v-exponent")?;
            let coef = t
                .get("coef")
                .and_then(|c| c.as_str())
                .ok_or("term missing string \"coef\"")?;
            let c: BigInt = coef.parse().map_err(|_| format!("bad coefficient {coef:?}"))?;
            p.add_term(k, l, c);
        }
        Ok(p)
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPolynomial({})", self.render())
    }
}

impl Add for &EPolynomial {
    type Output = EPolynomial;
    fn add(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for ((k, l), c) in &rhs.terms {
            out.add_term(*k, *l, c.clone());
        }
        out
    }
}

impl Sub for &EPolynomial {
    type Output = EPolynomial;
    fn sub(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for ((k, l), c) in &rhs.terms {
            out.add_term(*k, *l, -c.clone());
        }
        out
    }
}

impl Mul for &EPolynomial {
    type Output = EPolynomial;
    fn mul(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for ((ka, la), ca) in &self.terms {
            for ((kb, lb), cb) in &rhs.terms {
                out.add_term(ka + kb, la + lb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &EPolynomial {
    type Output = EPolynomial;
    fn neg(self) -> EPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        EPolynomial { terms }
    }
}

forward_owned_binop!(EPolynomial, Add, add);
forward_owned_binop!(EPolynomial, Sub, sub);
forward_owned_binop!(EPolynomial, Mul, mul);

fn render_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (&'a BigInt, String)>,
{
    let mut out = String::new();
    for (c, monomial) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        let body = if monomial.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            monomial
        } else {
            format!("{abs}*{monomial}")
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
    if out.is_empty() {
        out.push('0');
    }
    out
}
