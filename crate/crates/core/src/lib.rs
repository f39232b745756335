//! Exact symbolic engine for Hodge-theoretic genera of complex algebraic
//! varieties and the characteristic-class calculus behind them.
//!
//! The crate computes, in exact integer/rational arithmetic:
//!
//! - χ_y and χ_y^c genera and two-variable E-polynomials, from declarative
//!   inputs: Grothendieck-ring expressions ([`motivic`]) or mixed-Hodge
//!   dimension tables ([`mhs`]);
//! - the stratified multiplicative property for proper maps ([`strata`])
//!   and the Riemann-Hurwitz formula for fibrations over curves
//!   ([`rhcurve`]);
//! - Chern characters, Todd and Hirzebruch classes in finitely presented
//!   cohomology rings, with the twisted genus formulas of
//!   Hirzebruch-Riemann-Roch, Meyer and Atiyah-Meyer type ([`ring`],
//!   [`classes`], [`formulas`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.

pub mod classes;
pub mod formulas;
pub mod mhs;
pub mod motivic;
pub mod poly;
pub mod rhcurve;
pub mod ring;
pub mod series;
pub mod strata;
pub mod yrat;

pub use mhs::{poincare_dual, specialize_genus, GenusSpecialization, MixedHodgeComplex, PureHodgeStructure};
pub use motivic::{blowup_class, product_genus_check, VarietyClass};
pub use poly::{EPolynomial, ESpecialization, GenusPolynomial};
pub use ring::{BundleData, CohomRing, Element};
pub use yrat::{YPoly, YRat};
