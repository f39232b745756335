//! Multiplicative characteristic classes via symmetric-function reduction.
//!
//! A multiplicative genus with generating series `Q` is evaluated on a
//! bundle `E` as `Π_j Q(α_j)` over the Chern roots `α_j`, without ever
//! materializing the roots: the logarithm of `Q` is paired with the power
//! sums of the roots (Newton's identities on the Chern classes) and
//! re-exponentiated in the ring, truncated at the ring top degree.
//!
//! On top of that sit the Chern character, the Todd class, `ch` of the
//! total λ-class, and the un-normalized/normalized Hirzebruch classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::ring::{BundleData, Element, RingError};
use crate::series::{series, PowerSeries, SeriesKind};
use crate::yrat::YRat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("generating series has a non-unit constant term")]
    NonUnitConstantTerm,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("genus output is not an integer polynomial: {0}")]
    NonIntegerGenus(String),
    #[error("residual (1+y) denominator after cancellation: {0}")]
    ResidualDenominator(String),
    #[error("no standard Hodge numbers for this ring presentation; supply the collection explicitly")]
    NoStandardHodgeNumbers,
}

fn factorial_inv(k: usize) -> BigRational {
    let mut f = BigInt::one();
    for m in 2..=k {
        f *= BigInt::from(m);
    }
    BigRational::new(BigInt::one(), f)
}

/// `Π_j Q(α_j)` over the Chern roots of `E`, truncated at the ring top
/// degree. `Q` must be expanded at that order and have a unit constant
/// term.
pub fn genus_from_series(q: &PowerSeries, e: &BundleData) -> Result<Element, ClassError> {
    let ring = e.ring().clone();
    let top = ring.top_degree();
    assert_eq!(q.order(), top, "series must be expanded at the ring top degree");
    let q0 = q.coeff(0).clone();
    let q0_inv = q0.try_unit_inverse().ok_or(ClassError::NonUnitConstantTerm)?;
    let log_q = q.scale(&q0_inv).log();

    let power_sums = e.power_sums(top);
    let mut x = ring.zero();
    for m in 1..=top {
        if !log_q.coeff(m).is_zero() {
            x = x.add(&power_sums[m - 1].scale(log_q.coeff(m)));
        }
    }

    // exp of the positive-degree element x
    let mut acc = ring.one();
    let mut xpow = ring.one();
    for k in 1..=top {
        xpow = xpow.mul(&x);
        if xpow.is_zero() {
            break;
        }
        acc = acc.add(&xpow.scale_rational(&factorial_inv(k)));
    }

    let mut unit_pow = YRat::one();
    for _ in 0..e.rank() {
        unit_pow = &unit_pow * &q0;
    }
    Ok(acc.scale(&unit_pow))
}

/// Chern character `rank + Σ_m p_m / m!`.
pub fn chern_character(e: &BundleData) -> Element {
    chern_character_scaled(e, &YRat::one())
}

/// `Σ_j e^{β_j t}` for a scalar `t`: the modified Chern character used by
/// the normalized Meyer formula when `t = 1 + y`.
pub fn chern_character_scaled(e: &BundleData, t: &YRat) -> Element {
    let ring = e.ring().clone();
    let top = ring.top_degree();
    let mut acc = ring.scalar(YRat::from_int(e.rank() as i64));
    let mut tpow = YRat::one();
    for (m, p) in e.power_sums(top).iter().enumerate() {
        tpow = &tpow * t;
        if !p.is_zero() {
            acc = acc.add(&p.scale(&tpow).scale_rational(&factorial_inv(m + 1)));
        }
    }
    acc
}

/// Total Todd class of `E`.
pub fn todd_class(e: &BundleData) -> Result<Element, ClassError> {
    genus_from_series(&series(SeriesKind::Todd, e.ring().top_degree()), e)
}

/// `ch(λ_y E) = ch(Σ_p Λ^p E · y^p) = Π_j (1 + y e^{β_j})`.
pub fn lambda_y_class(e: &BundleData) -> Result<Element, ClassError> {
    genus_from_series(&series(SeriesKind::LambdaFactor, e.ring().top_degree()), e)
}

/// Hirzebruch class of a bundle: the un-normalized `T̃_y` from
/// `Q̃_y(α) = α(1+y e^{-α})/(1-e^{-α})`, or the normalized `T_y` from its
/// `(1+y)`-rescaling. In debug builds the factorization
/// `T̃_y(E) = td(E)·ch(λ_y(E^*))` is checked.
pub fn hirzebruch_class(e: &BundleData, normalized: bool) -> Result<Element, ClassError> {
    let kind = if normalized {
        SeriesKind::HirzebruchNormalized
    } else {
        SeriesKind::HirzebruchUnnormalized
    };
    let cls = genus_from_series(&series(kind, e.ring().top_degree()), e)?;
    #[cfg(debug_assertions)]
    if !normalized {
        let factored = todd_class(e)?.mul(&lambda_y_class(&e.dual())?);
        debug_assert!(cls == factored, "T̃_y factorization td·ch(λ_y(dual)) violated");
    }
    Ok(cls)
}

/// Evaluates every coefficient of an element at a rational value of `y`.
/// `None` when a `(1+y)` denominator survives at `y = -1`.
pub fn evaluate_element_at_y(e: &Element, y: &BigRational) -> Option<Vec<BigRational>> {
    e.coords().iter().map(|c| c.evaluate(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CohomRing;
    use crate::yrat::{rational, YPoly};

    fn q(n: i64, d: i64) -> BigRational {
        rational(n, d)
    }

    #[test]
    fn euler_like_series_gives_total_chern() {
        // Q = 1 + α on a rank-2 bundle -> 1 + c1 + c2
        let r = CohomRing::proj(2);
        let t = r.tangent_bundle().unwrap();
        let s = PowerSeries::from_coeffs(vec![YRat::one(), YRat::one(), YRat::zero()]);
        let g = genus_from_series(&s, &t).unwrap();
        assert_eq!(g, t.total_chern());
    }

    #[test]
    fn todd_of_p1_tangent() {
        let r = CohomRing::proj(1);
        let t = r.tangent_bundle().unwrap();
        let td = todd_class(&t).unwrap();
        // 1 + h
        assert_eq!(td, r.one().add(&r.basis_element(1)));
    }

    #[test]
    fn hirzebruch_class_of_p1() {
        let r = CohomRing::proj(1);
        let t = r.tangent_bundle().unwrap();
        let cls = hirzebruch_class(&t, false).unwrap();
        // (1+y) + (1-y) h
        let mut one_minus_y = YPoly::one();
        one_minus_y.add_term(1, q(-1, 1));
        let expect = r
            .scalar(YRat::one_plus_y())
            .add(&r.basis_element(1).scale(&YRat::new(one_minus_y, 0)));
        assert_eq!(cls, expect);
    }

    #[test]
    fn chern_character_of_line_bundles() {
        let r = CohomRing::proj(1);
        let h = r.basis_element(1);
        for d in -3..4i64 {
            let o_d = BundleData::line(&r, h.scale_rational(&q(d, 1))).unwrap();
            let ch = chern_character(&o_d);
            assert_eq!(ch, r.one().add(&h.scale_rational(&q(d, 1))));
        }
        // flat bundles have ch = rank
        let flat = BundleData::trivial(&r, 5);
        assert_eq!(chern_character(&flat), r.scalar(YRat::from_int(5)));
    }

    #[test]
    fn chern_character_is_additive() {
        let r = CohomRing::proj(3);
        let h = r.basis_element(1);
        let a = BundleData::new(&r, 2, vec![h.scale_rational(&q(2, 1)), h.pow(2)]).unwrap();
        let b = BundleData::new(&r, 1, vec![h.scale_rational(&q(-1, 1))]).unwrap();
        let lhs = chern_character(&a.direct_sum(&b).unwrap());
        let rhs = chern_character(&a).add(&chern_character(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_y_of_line_bundles() {
        let r = CohomRing::proj(1);
        let h = r.basis_element(1);
        // cotangent of P^1: c1 = -2h, λ_y = 1 + y(1 - 2h)
        let cot = r.tangent_bundle().unwrap().dual();
        let l = lambda_y_class(&cot).unwrap();
        let y = YRat::variable();
        let expect = r
            .scalar(&YRat::one() + &y)
            .add(&h.scale(&y.scale(&q(-2, 1))));
        assert_eq!(l, expect);
    }

    #[test]
    fn hirzebruch_factorization_on_p2() {
        let r = CohomRing::proj(2);
        let t = r.tangent_bundle().unwrap();
        let lhs = hirzebruch_class(&t, false).unwrap();
        let rhs = todd_class(&t).unwrap().mul(&lambda_y_class(&t.dual()).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn whitney_multiplicativity() {
        let r = CohomRing::proj(3);
        let h = r.basis_element(1);
        let a = BundleData::new(&r, 2, vec![h.clone(), h.pow(2).scale_rational(&q(3, 1))]).unwrap();
        let b = BundleData::new(&r, 2, vec![h.scale_rational(&q(-2, 1))]).unwrap();
        let qs = series(SeriesKind::HirzebruchUnnormalized, r.top_degree());
        let lhs = genus_from_series(&qs, &a.direct_sum(&b).unwrap()).unwrap();
        let rhs = genus_from_series(&qs, &a)
            .unwrap()
            .mul(&genus_from_series(&qs, &b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_unit_constant_term_rejected() {
        let r = CohomRing::proj(1);
        let t = r.tangent_bundle().unwrap();
        // constant term y is not a unit in Q[y][(1+y)^{-1}]
        let s = PowerSeries::from_coeffs(vec![YRat::variable(), YRat::one()]);
        assert_eq!(
            genus_from_series(&s, &t),
            Err(ClassError::NonUnitConstantTerm)
        );
    }

    #[test]
    fn y_specializations_of_hirzebruch() {
        let r = CohomRing::proj(2);
        let t = r.tangent_bundle().unwrap();
        let cls = hirzebruch_class(&t, false).unwrap();
        // y = 0 gives the Todd class
        let td = todd_class(&t).unwrap();
        let y0 = q(0, 1);
        assert_eq!(
            evaluate_element_at_y(&cls, &y0).unwrap(),
            evaluate_element_at_y(&td, &y0).unwrap()
        );
        // y = -1 gives the top Chern class (Euler class) data
        let ym1 = q(-1, 1);
        let at_m1 = evaluate_element_at_y(&cls, &ym1).unwrap();
        let ctop = t.chern_class(2);
        assert_eq!(
            at_m1,
            evaluate_element_at_y(&ctop, &ym1).unwrap()
        );
        // y = 1 equals the α/tanh(α/2) genus
        let l = genus_from_series(&series(SeriesKind::LSeries, 2), &t).unwrap();
        let y1 = q(1, 1);
        assert_eq!(
            evaluate_element_at_y(&cls, &y1).unwrap(),
            evaluate_element_at_y(&l, &y1).unwrap()
        );
    }
}
