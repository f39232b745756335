//! Mixed-Hodge-structure dimension bookkeeping.
//!
//! Classes in the Grothendieck group of mixed Hodge structures are entered
//! as finitely supported dimension tables indexed by (cohomological degree
//! `i`, Hodge index `p`, weight-complement index `q`). The table stores the
//! uncancelled per-degree data; the alternating sign `(-1)^i` enters only in
//! the genus formulas, and cancellation happens in the output polynomial.
//!
//! Tables missing weight data may omit `q` (χ_y needs only the F-filtration);
//! the E-polynomial rejects such entries.

use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

use crate::poly::{EPolynomial, GenusPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HodgeError {
    #[error("entry (i={i}, p={p}) has no weight index q; the E-polynomial needs the full (p,q) type")]
    MissingWeightIndex { i: i64, p: i64 },
    #[error("pure structure of weight {weight} has an entry of type ({p},{q}) with p+q = {}", p + q)]
    ImpureEntry { weight: i64, p: i64, q: i64 },
    #[error("polarized-real structure fails Hodge symmetry: h^{{{p},{q}}} = {left} but h^{{{q},{p}}} = {right}")]
    AsymmetricHodgeNumbers { p: i64, q: i64, left: u64, right: u64 },
}

/// Finitely supported table (i, p, q) -> dim representing a class
/// `[K•] = Σ_i (-1)^i [K^i]` in `K_0(mhs)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MixedHodgeComplex {
    entries: BTreeMap<(i64, i64, Option<i64>), u64>,
    label: Option<String>,
}

impl MixedHodgeComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Builds a table from `(i, p, q, dim)` rows; dims accumulate.
    pub fn from_entries<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, i64, u64)>,
    {
        let mut t = Self::new();
        for (i, p, q, d) in rows {
            t.add_entry(i, p, Some(q), d);
        }
        t
    }

    pub fn add_entry(&mut self, i: i64, p: i64, q: Option<i64>, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.entries.entry((i, p, q)).or_insert(0) += dim;
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64, Option<i64>), u64)> + '_ {
        self.entries.iter().map(|(k, d)| (*k, *d))
    }

    /// Cohomological degrees with support.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        let mut last = None;
        self.entries.keys().filter_map(move |(i, _, _)| {
            if last == Some(*i) {
                None
            } else {
                last = Some(*i);
                Some(*i)
            }
        })
    }

    /// Entrywise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.label = None;
        for ((i, p, q), d) in other.iter() {
            out.add_entry(i, p, q, d);
        }
        out
    }

    /// Table with all cohomological degrees shifted by `k` (i -> i + k).
    pub fn shifted(&self, k: i64) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, p, q), &d)| ((i + k, p, q), d))
            .collect();
        Self { entries, label: None }
    }

    /// `χ_y([K•]) = Σ_{i,p} (-1)^i dim(i,p,·) (-y)^p`, the q-marginal sum.
    pub fn chi_y(&self) -> GenusPolynomial {
        let mut out = GenusPolynomial::zero();
        for (&(i, p, _), &d) in &self.entries {
            let sign = if (i + p).rem_euclid(2) == 1 { -1i64 } else { 1 };
            out.add_term(p, BigInt::from(sign) * BigInt::from(d));
        }
        out
    }

    /// `e^{k,l} = Σ_i (-1)^i h^{k,l}(K^i)`; rejects entries without a
    /// weight index.
    pub fn e_polynomial(&self) -> Result<EPolynomial, HodgeError> {
        let mut out = EPolynomial::zero();
        for (&(i, p, q), &d) in &self.entries {
            let q = q.ok_or(HodgeError::MissingWeightIndex { i, p })?;
            let sign: i64 = if i.rem_euclid(2) == 1 { -1 } else { 1 };
            out.add_term(p, q, BigInt::from(sign) * BigInt::from(d));
        }
        Ok(out)
    }

    /// JSON mirror of the table with decimal-string dims.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, p, q), &d)| {
                serde_json::json!({
                    "i": i,
                    "p": p,
                    "q": q,
                    "dim": d.to_string(),
                })
            })
            .collect();
        match &self.label {
            Some(l) => serde_json::json!({"label": l, "entries": entries}),
            None => serde_json::json!({"entries": entries}),
        }
    }
}

impl fmt::Debug for MixedHodgeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedHodgeComplex{{")?;
        for (n, (&(i, p, q), &d)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            match q {
                Some(q) => write!(f, "({i},{p},{q}): {d}")?,
                None => write!(f, "({i},{p},?): {d}")?,
            }
        }
        write!(f, "}}")
    }
}

/// Single pure Hodge structure of a fixed weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureHodgeStructure {
    weight: i64,
    hpq: BTreeMap<(i64, i64), u64>,
}

impl PureHodgeStructure {
    /// All entries must satisfy `p + q = weight`. With `polarized_real`
    /// set, Hodge symmetry `h^{p,q} = h^{q,p}` is also enforced.
    pub fn new<I>(weight: i64, entries: I, polarized_real: bool) -> Result<Self, HodgeError>
    where
        I: IntoIterator<Item = ((i64, i64), u64)>,
    {
        let mut hpq: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for ((p, q), d) in entries {
            if p + q != weight {
                return Err(HodgeError::ImpureEntry { weight, p, q });
            }
            if d > 0 {
                *hpq.entry((p, q)).or_insert(0) += d;
            }
        }
        if polarized_real {
            for (&(p, q), &d) in &hpq {
                let mirror = hpq.get(&(q, p)).copied().unwrap_or(0);
                if mirror != d {
                    return Err(HodgeError::AsymmetricHodgeNumbers { p, q, left: d, right: mirror });
                }
            }
        }
        Ok(Self { weight, hpq })
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn hodge_numbers(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.hpq.iter().map(|(k, d)| (*k, *d))
    }

    /// The structure viewed as a one-degree complex.
    pub fn to_complex(&self, degree: i64) -> MixedHodgeComplex {
        let mut t = MixedHodgeComplex::new();
        for (&(p, q), &d) in &self.hpq {
            t.add_entry(degree, p, Some(q), d);
        }
        t
    }

    /// `Σ h^{p,q} (-y)^p`, the genus of the structure itself (no degree sign).
    pub fn chi_y(&self) -> GenusPolynomial {
        self.to_complex(0).chi_y()
    }
}

/// `(-y)^n P(1/y)`: Poincaré duality on genera of smooth n-folds, mapping
/// χ_y to χ_y^c and back.
pub fn poincare_dual(p: &GenusPolynomial, n: i64) -> GenusPolynomial {
    let scaled = p.reciprocal_scaled(n);
    if n.rem_euclid(2) == 1 {
        -&scaled
    } else {
        scaled
    }
}

/// Numeric specializations of a χ_y-type genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusSpecialization {
    /// y = -1: topological Euler characteristic.
    Euler,
    /// y = 0: arithmetic genus.
    Arithmetic,
    /// y = 1: signature.
    Signature,
}

impl GenusSpecialization {
    pub fn point(self) -> i64 {
        match self {
            GenusSpecialization::Euler => -1,
            GenusSpecialization::Arithmetic => 0,
            GenusSpecialization::Signature => 1,
        }
    }
}

pub fn specialize_genus(p: &GenusPolynomial, at: GenusSpecialization) -> BigInt {
    p.evaluate(&BigInt::from(at.point()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Milnor fiber of the cuspidal cubic x^3 - y^2: h^{0,0}(H^0) = 1,
    /// h^{1,0}(H^1) = 1, h^{0,1}(H^1) = 1.
    fn cusp_fiber() -> MixedHodgeComplex {
        MixedHodgeComplex::from_entries([(0, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn chi_y_of_cusp_fiber() {
        assert_eq!(cusp_fiber().chi_y(), GenusPolynomial::monomial(1, 1));
    }

    #[test]
    fn chi_y_trivial_cases() {
        assert!(MixedHodgeComplex::new().chi_y().is_zero());
        // pure Tate class of type (p,p) in degree 0: (-y)^p
        for p in 0..4 {
            let t = MixedHodgeComplex::from_entries([(0, p, p, 1)]);
            let expect = GenusPolynomial::monomial(if p % 2 == 1 { -1 } else { 1 }, p);
            assert_eq!(t.chi_y(), expect);
        }
    }

    #[test]
    fn e_polynomial_examples() {
        // table of P^1
        let p1 = MixedHodgeComplex::from_entries([(0, 0, 0, 1), (2, 1, 1, 1)]);
        assert_eq!(
            p1.e_polynomial().unwrap(),
            EPolynomial::from_terms([((0, 0), 1), ((1, 1), 1)])
        );
        // cusp fiber: 1 - u - v
        assert_eq!(
            cusp_fiber().e_polynomial().unwrap(),
            EPolynomial::from_terms([((0, 0), 1), ((1, 0), -1), ((0, 1), -1)])
        );
        assert!(MixedHodgeComplex::new().e_polynomial().unwrap().is_zero());
    }

    #[test]
    fn e_polynomial_rejects_sentinel() {
        let mut t = MixedHodgeComplex::new();
        t.add_entry(0, 2, None, 1);
        assert_eq!(
            t.e_polynomial(),
            Err(HodgeError::MissingWeightIndex { i: 0, p: 2 })
        );
        // chi_y is still defined
        assert_eq!(t.chi_y(), GenusPolynomial::monomial(1, 2));
    }

    #[test]
    fn consistency_chi_y_from_e() {
        use crate::poly::ESpecialization;
        let t = MixedHodgeComplex::from_entries([(0, 0, 0, 2), (1, 1, 2, 3), (3, 2, 2, 1)]);
        assert_eq!(
            t.chi_y(),
            t.e_polynomial().unwrap().specialize(ESpecialization::ChiY)
        );
    }

    #[test]
    fn duality_examples() {
        // chi_y(C^*) = 1 + y, n = 1 -> chi_y^c(C^*) = -y - 1
        let p = GenusPolynomial::from_terms([(0, 1), (1, 1)]);
        assert_eq!(
            poincare_dual(&p, 1),
            GenusPolynomial::from_terms([(0, -1), (1, -1)])
        );
        // chi_y(F) = y for the cusp Milnor fiber, n = 1 -> -1
        let f = GenusPolynomial::monomial(1, 1);
        assert_eq!(poincare_dual(&f, 1), GenusPolynomial::constant(-1));
        assert!(poincare_dual(&GenusPolynomial::zero(), 7).is_zero());
    }

    #[test]
    fn duality_is_involutive() {
        let p = GenusPolynomial::from_terms([(-2, 5), (0, 1), (3, -4)]);
        for n in -3..4 {
            assert_eq!(poincare_dual(&poincare_dual(&p, n), n), p);
        }
    }

    #[test]
    fn genus_specializations() {
        let p2 = GenusPolynomial::from_terms([(0, 1), (1, -1), (2, 1)]);
        assert_eq!(
            specialize_genus(&p2, GenusSpecialization::Signature),
            BigInt::from(1)
        );
        let p1 = GenusPolynomial::from_terms([(0, 1), (1, -1)]);
        assert_eq!(
            specialize_genus(&p1, GenusSpecialization::Euler),
            BigInt::from(2)
        );
        assert_eq!(
            specialize_genus(&GenusPolynomial::zero(), GenusSpecialization::Arithmetic),
            BigInt::from(0)
        );
    }

    #[test]
    fn additivity_of_direct_sum() {
        let a = MixedHodgeComplex::from_entries([(0, 0, 0, 1), (1, 1, 1, 2)]);
        let b = MixedHodgeComplex::from_entries([(1, 1, 1, 1), (2, 2, 0, 5)]);
        let s = a.direct_sum(&b);
        assert_eq!(s.chi_y(), a.chi_y() + b.chi_y());
    }

    #[test]
    fn degree_shift_negates() {
        let t = cusp_fiber();
        assert_eq!(t.shifted(1).chi_y(), -&t.chi_y());
        assert_eq!(t.shifted(2).chi_y(), t.chi_y());
    }

    #[test]
    fn pure_structure_validation() {
        let ok = PureHodgeStructure::new(2, [((1, 1), 1), ((2, 0), 1), ((0, 2), 1)], true);
        assert!(ok.is_ok());
        let impure = PureHodgeStructure::new(2, [((1, 2), 1)], false);
        assert!(matches!(impure, Err(HodgeError::ImpureEntry { .. })));
        let asym = PureHodgeStructure::new(1, [((1, 0), 2), ((0, 1), 1)], true);
        assert!(matches!(asym, Err(HodgeError::AsymmetricHodgeNumbers { .. })));
        // signature specialization of a polarized structure is an integer
        let s = ok.unwrap();
        let _ = specialize_genus(&s.chi_y(), GenusSpecialization::Signature);
    }
}
