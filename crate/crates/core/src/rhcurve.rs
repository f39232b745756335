//! Riemann-Hurwitz evaluation for projective morphisms onto smooth curves.
//!
//! The total-space genus is the generic-fiber product term corrected by the
//! vanishing-cycle genus at each critical value:
//!
//! ```text
//! χ_y^c(X) = χ_y^c(C)·χ_y(X_t) - Σ_c χ_y([H•(X_c; φ_{f-c})])
//! ```
//!
//! Critical values come in three shapes: a full vanishing-cycle
//! hypercohomology table, isolated singular points with their Milnor-fiber
//! cohomology in middle degree, or a stratified singular locus with
//! per-stratum Milnor tables. The latter two reduce to vanishing-cycle
//! genera; all tables are user-supplied dimension data.
//!
//! Support of a vanishing table is constrained to degrees `[n-s, n+s]`
//! where `s` is the dimension of the singular locus; out-of-range entries
//! are rejected with a structured diagnostic.

use std::fmt;
use thiserror::Error;

use crate::mhs::MixedHodgeComplex;
use crate::poly::GenusPolynomial;
use crate::strata::{stalk_sum_chi, StalkSumDescriptor, StalkStratum};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RhError {
    #[error("vanishing-cycle table has an entry in degree {degree}, outside [{}, {}] (n = {n}, singular locus dimension s = {s})", n - s, n + s)]
    SupportViolation { degree: i64, n: i64, s: i64 },
    #[error("isolated-singularity table has an entry in degree {degree}; reduced Milnor cohomology must sit in degree n = {n} exactly")]
    IsolatedDegree { degree: i64, n: i64 },
    #[error("singular locus dimension s = {0} is negative")]
    NegativeSingDim(i64),
    #[error("total dimension n+1 = {0} must be at least 1")]
    BadTotalDim(i64),
    #[error("monodromy attestation missing: {0}")]
    AttestationMissing(&'static str),
}

/// What the caller attests about monodromy before evaluating the formula.
/// Neither hypothesis is computed from the data; they are declarations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RhAttestation {
    /// The action of π_1 of the punctured curve on generic-fiber
    /// cohomology is trivial.
    pub base_monodromy_trivial: bool,
    /// For stratified critical values: monodromy along each pure stratum
    /// of the singular locus is trivial.
    pub strata_monodromy_trivial: bool,
}

impl RhAttestation {
    pub fn all() -> Self {
        Self { base_monodromy_trivial: true, strata_monodromy_trivial: true }
    }
}

/// One critical value of the fibration.
#[derive(Clone, Debug)]
pub enum CriticalValue {
    /// Hypercohomology of the vanishing-cycle complex on the special
    /// fiber, with the dimension of the singular locus.
    Vanishing { table: MixedHodgeComplex, sing_dim: i64 },
    /// Isolated singular points; each table is the reduced Milnor-fiber
    /// cohomology in middle degree n.
    Isolated { points: Vec<MixedHodgeComplex> },
    /// Stratified singular locus: per-stratum open genus χ_y^c(S) and
    /// reduced Milnor-fiber table of the stratum.
    Stratified { strata: Vec<StalkStratum> },
}

impl CriticalValue {
    /// `χ_y([H•(X_c; φ_{f-c})])` of this critical value, `n + 1` being the
    /// total-space dimension. Validates table support first.
    pub fn vanishing_genus(&self, n: i64) -> Result<GenusPolynomial, RhError> {
        match self {
            CriticalValue::Vanishing { table, sing_dim } => {
                validate_vanishing_support(table, n, *sing_dim)?;
                Ok(table.chi_y())
            }
            CriticalValue::Isolated { points } => {
                let mut total = GenusPolynomial::zero();
                for table in points {
                    for ((i, _, _), _) in table.iter() {
                        if i != n {
                            return Err(RhError::IsolatedDegree { degree: i, n });
                        }
                    }
                    total += &table.chi_y();
                }
                Ok(total)
            }
            CriticalValue::Stratified { strata } => {
                let d = StalkSumDescriptor { strata: strata.clone() };
                Ok(stalk_sum_chi(&d))
            }
        }
    }

    /// The isolated case rewritten as a single vanishing-cycle table
    /// supported in degree n (singular locus of dimension 0).
    pub fn to_vanishing(&self, n: i64) -> Result<CriticalValue, RhError> {
        match self {
            CriticalValue::Isolated { points } => {
                let mut table = MixedHodgeComplex::new();
                for p in points {
                    for ((i, _, _), _) in p.iter() {
                        if i != n {
                            return Err(RhError::IsolatedDegree { degree: i, n });
                        }
                    }
                    table = table.direct_sum(p);
                }
                Ok(CriticalValue::Vanishing { table, sing_dim: 0 })
            }
            other => Ok(other.clone()),
        }
    }
}

/// Projective morphism from a smooth (n+1)-fold onto a smooth curve.
#[derive(Clone, Debug)]
pub struct CurveFibration {
    /// χ_y^c of the base curve.
    pub base_genus_c: GenusPolynomial,
    /// χ_y of the generic (smooth, projective) fiber.
    pub generic_fiber: GenusPolynomial,
    /// n + 1, the dimension of the total space.
    pub total_dim: i64,
    pub critical: Vec<CriticalValue>,
}

impl CurveFibration {
    pub fn fiber_dim(&self) -> i64 {
        self.total_dim - 1
    }
}

/// Accepts iff every supported degree of `table` lies in `[n-s, n+s]`.
pub fn validate_vanishing_support(
    table: &MixedHodgeComplex,
    n: i64,
    s: i64,
) -> Result<(), RhError> {
    if s < 0 {
        return Err(RhError::NegativeSingDim(s));
    }
    for ((i, _, _), _) in table.iter() {
        if i < n - s || i > n + s {
            return Err(RhError::SupportViolation { degree: i, n, s });
        }
    }
    Ok(())
}

/// Genus of the special fiber: `χ_y(X_c) = χ_y(X_t) - χ_y([H•(X_c; φ)])`.
/// The limit mixed Hodge structure makes the nearby-cycle term equal to the
/// generic fiber, so no nearby table is taken as input.
pub fn special_fiber_chi(
    cv: &CriticalValue,
    generic_fiber: &GenusPolynomial,
    n: i64,
) -> Result<GenusPolynomial, RhError> {
    Ok(generic_fiber - &cv.vanishing_genus(n)?)
}

/// The full Riemann-Hurwitz evaluation; requires a monodromy attestation.
pub fn rh_total_chi_c(
    f: &CurveFibration,
    attest: RhAttestation,
) -> Result<GenusPolynomial, RhError> {
    if f.total_dim < 1 {
        return Err(RhError::BadTotalDim(f.total_dim));
    }
    if !attest.base_monodromy_trivial {
        return Err(RhError::AttestationMissing(
            "π_1 of the punctured base acting trivially on generic-fiber cohomology",
        ));
    }
    if !attest.strata_monodromy_trivial
        && f.critical.iter().any(|c| matches!(c, CriticalValue::Stratified { .. }))
    {
        return Err(RhError::AttestationMissing(
            "trivial monodromy along the strata of the singular fibers",
        ));
    }
    let n = f.fiber_dim();
    let mut total = &f.base_genus_c * &f.generic_fiber;
    for cv in &f.critical {
        total -= &cv.vanishing_genus(n)?;
    }
    Ok(total)
}

impl fmt::Display for RhAttestation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "base_monodromy_trivial={}, strata_monodromy_trivial={}",
            self.base_monodromy_trivial, self.strata_monodromy_trivial
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mhs::specialize_genus;
    use crate::mhs::GenusSpecialization;
    use crate::motivic::{blowup_class, VarietyClass};
    use num_bigint::BigInt;

    fn p1_genus() -> GenusPolynomial {
        GenusPolynomial::from_terms([(0, 1), (1, -1)])
    }

    /// Reduced H^1 of a node Milnor fiber {x^2 + y^2 = 1} ~ C^*: one class
    /// of type (1,1) in degree 1.
    fn node_table() -> MixedHodgeComplex {
        MixedHodgeComplex::from_entries([(1, 1, 1, 1)])
    }

    #[test]
    fn support_validator() {
        // isolated case s = 0: only degree n allowed
        let t = MixedHodgeComplex::from_entries([(2, 1, 1, 1)]);
        assert!(validate_vanishing_support(&t, 2, 0).is_ok());
        assert_eq!(
            validate_vanishing_support(&t, 1, 0),
            Err(RhError::SupportViolation { degree: 2, n: 1, s: 0 })
        );
        // empty table accepted
        assert!(validate_vanishing_support(&MixedHodgeComplex::new(), 5, 0).is_ok());
        // boundary: degree n+s+1 rejected
        let t = MixedHodgeComplex::from_entries([(4, 0, 0, 1)]);
        assert!(validate_vanishing_support(&t, 2, 1).is_ok_and(|_| false) == false);
        assert_eq!(
            validate_vanishing_support(&t, 2, 1),
            Err(RhError::SupportViolation { degree: 4, n: 2, s: 1 })
        );
        assert!(validate_vanishing_support(&t, 3, 1).is_ok());
        assert_eq!(validate_vanishing_support(&t, 2, -1), Err(RhError::NegativeSingDim(-1)));
    }

    #[test]
    fn smooth_fiber_is_generic() {
        let cv = CriticalValue::Vanishing { table: MixedHodgeComplex::new(), sing_dim: 0 };
        assert_eq!(special_fiber_chi(&cv, &p1_genus(), 1).unwrap(), p1_genus());
    }

    #[test]
    fn nodal_conic_special_fiber() {
        // pair of distinct lines through a point: 2*chi(P^1) - 1 = 1 - 2y,
        // and the formula gives (1 - y) - chi_y([table]) with
        // chi_y([{(1,1,1):1}]) = (-1)^1 (-y)^1 = y.
        let cv = CriticalValue::Vanishing { table: node_table(), sing_dim: 0 };
        assert_eq!(
            special_fiber_chi(&cv, &p1_genus(), 1).unwrap(),
            GenusPolynomial::from_terms([(0, 1), (1, -2)])
        );
    }

    #[test]
    fn odd_degree_shift_flips_sign() {
        let table = MixedHodgeComplex::from_entries([(1, 1, 1, 3)]);
        let cv = CriticalValue::Vanishing { table: table.clone(), sing_dim: 0 };
        let shifted = CriticalValue::Vanishing { table: table.shifted(1), sing_dim: 1 };
        let a = cv.vanishing_genus(1).unwrap();
        let b = shifted.vanishing_genus(1).unwrap();
        assert_eq!(a, -&b);
    }

    #[test]
    fn pencil_of_conics() {
        // conic pencil on Bl_4 P^2 over P^1: three nodal fibers
        let f = CurveFibration {
            base_genus_c: p1_genus(),
            generic_fiber: p1_genus(),
            total_dim: 2,
            critical: (0..3)
                .map(|_| CriticalValue::Isolated { points: vec![node_table()] })
                .collect(),
        };
        let total = rh_total_chi_c(&f, RhAttestation::all()).unwrap();
        assert_eq!(total, GenusPolynomial::from_terms([(0, 1), (1, -5), (2, 1)]));

        // oracle: blow-up formula on P^2 at four points
        let mut x = VarietyClass::proj_space(2);
        for _ in 0..4 {
            x = blowup_class(&x, &VarietyClass::point(), 1).unwrap();
        }
        assert_eq!(total, x.chi_y_c());

        // Euler specialization: classical Riemann-Hurwitz count
        assert_eq!(
            specialize_genus(&total, GenusSpecialization::Euler),
            BigInt::from(7)
        );
    }

    #[test]
    fn no_critical_values_gives_product() {
        let f = CurveFibration {
            base_genus_c: p1_genus(),
            generic_fiber: GenusPolynomial::from_terms([(0, 1), (1, -1), (2, 1)]),
            total_dim: 3,
            critical: vec![],
        };
        assert_eq!(
            rh_total_chi_c(&f, RhAttestation::all()).unwrap(),
            p1_genus() * GenusPolynomial::from_terms([(0, 1), (1, -1), (2, 1)])
        );
    }

    #[test]
    fn attestation_is_required() {
        let f = CurveFibration {
            base_genus_c: p1_genus(),
            generic_fiber: p1_genus(),
            total_dim: 2,
            critical: vec![],
        };
        assert!(matches!(
            rh_total_chi_c(&f, RhAttestation::default()),
            Err(RhError::AttestationMissing(_))
        ));
        // stratified critical values also need the strata attestation
        let f = CurveFibration {
            critical: vec![CriticalValue::Stratified { strata: vec![] }],
            ..f
        };
        let only_base = RhAttestation { base_monodromy_trivial: true, strata_monodromy_trivial: false };
        assert!(matches!(
            rh_total_chi_c(&f, only_base),
            Err(RhError::AttestationMissing(_))
        ));
    }

    #[test]
    fn isolated_reduces_to_vanishing() {
        let cv = CriticalValue::Isolated { points: vec![node_table(), node_table()] };
        let reduced = cv.to_vanishing(1).unwrap();
        assert_eq!(cv.vanishing_genus(1).unwrap(), reduced.vanishing_genus(1).unwrap());
        // wrong middle degree is rejected
        let bad = CriticalValue::Isolated {
            points: vec![MixedHodgeComplex::from_entries([(2, 1, 1, 1)])],
        };
        assert_eq!(
            bad.vanishing_genus(1),
            Err(RhError::IsolatedDegree { degree: 2, n: 1 })
        );
    }

    #[test]
    fn stratified_critical_value() {
        // one stratum of genus 1 with zero Milnor table: product unchanged
        let f = CurveFibration {
            base_genus_c: p1_genus(),
            generic_fiber: p1_genus(),
            total_dim: 2,
            critical: vec![CriticalValue::Stratified {
                strata: vec![StalkStratum {
                    open_genus_c: GenusPolynomial::one(),
                    stalk: MixedHodgeComplex::new(),
                }],
            }],
        };
        assert_eq!(
            rh_total_chi_c(&f, RhAttestation::all()).unwrap(),
            p1_genus() * p1_genus()
        );
    }
}
