//! Grothendieck-ring-of-varieties calculus.
//!
//! A [`VarietyClass`] is an expression tree over named motives whose
//! compactly-supported E-polynomial is kept as a cached normal form; the
//! scissor and product relations are the ring operations on that normal
//! form. Genus computation factors through the E-polynomial, so classes with
//! equal E-data are deliberately conflated.
//!
//! χ_y (without compact supports) is not determined by the class alone:
//! it needs a completeness or smoothness assertion, carried here as
//! explicit flags. Flags propagate through sums and products; a formal
//! difference clears them and the caller must re-assert (see
//! [`VarietyClass::declare_smooth`]).

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use crate::mhs::poincare_dual;
use crate::poly::{EPolynomial, ESpecialization, GenusPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MotivicError {
    #[error("χ_y of {0:?} is not determined by its class: flag it complete, or smooth with a pure dimension")]
    ChiYUndefined(String),
    #[error("blow-up center parameter r = {0} is negative")]
    NegativeCodim(i64),
    #[error("blow-up requires smooth data, but {0:?} is not flagged smooth")]
    BlowupNotSmooth(String),
}

#[derive(Clone, Debug)]
enum Expr {
    Point,
    AffineLine,
    ProjSpace(u32),
    Torus,
    Atom(String),
    Sum(Arc<Expr>, Arc<Expr>),
    Diff(Arc<Expr>, Arc<Expr>),
    Prod(Arc<Expr>, Arc<Expr>),
    /// A re-flagged subexpression; keeps renderings honest about assertions.
    Asserted(Arc<Expr>),
}

impl Expr {
    fn render(&self) -> String {
        match self {
            Expr::Point => "pt".into(),
            Expr::AffineLine => "L".into(),
            Expr::ProjSpace(n) => format!("P^{n}"),
            Expr::Torus => "Gm".into(),
            Expr::Atom(name) => name.clone(),
            Expr::Sum(a, b) => format!("({} + {})", a.render(), b.render()),
            Expr::Diff(a, b) => format!("({} - {})", a.render(), b.render()),
            Expr::Prod(a, b) => format!("({} * {})", a.render(), b.render()),
            Expr::Asserted(a) => a.render(),
        }
    }
}

/// Class in the Grothendieck ring of varieties with cached E-polynomial
/// normal form and smooth/complete/dimension attestations.
#[derive(Clone)]
pub struct VarietyClass {
    expr: Arc<Expr>,
    e_c: EPolynomial,
    dim: i64,
    pure_dim: bool,
    smooth: bool,
    complete: bool,
}

impl VarietyClass {
    pub fn point() -> Self {
        Self {
            expr: Arc::new(Expr::Point),
            e_c: EPolynomial::one(),
            dim: 0,
            pure_dim: true,
            smooth: true,
            complete: true,
        }
    }

    /// The affine line `L` (Lefschetz class).
    pub fn affine_line() -> Self {
        Self {
            expr: Arc::new(Expr::AffineLine),
            e_c: EPolynomial::monomial(1, 1, 1),
            dim: 1,
            pure_dim: true,
            smooth: true,
            complete: false,
        }
    }

    pub fn proj_space(n: u32) -> Self {
        let e_c = EPolynomial::from_terms((0..=n).map(|k| ((k as i64, k as i64), 1)));
        Self {
            expr: Arc::new(Expr::ProjSpace(n)),
            e_c,
            dim: n as i64,
            pure_dim: true,
            smooth: true,
            complete: true,
        }
    }

    /// `Gm = L - pt`, the one-dimensional torus `C^*`.
    pub fn torus() -> Self {
        Self {
            expr: Arc::new(Expr::Torus),
            e_c: EPolynomial::from_terms([((1, 1), 1), ((0, 0), -1)]),
            dim: 1,
            pure_dim: true,
            smooth: true,
            complete: false,
        }
    }

    pub fn atom(
        name: impl Into<String>,
        e_c: EPolynomial,
        dim: i64,
        smooth: bool,
        complete: bool,
    ) -> Self {
        Self {
            expr: Arc::new(Expr::Atom(name.into())),
            e_c,
            dim,
            pure_dim: true,
            smooth,
            complete,
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self {
            expr: Arc::new(Expr::Sum(self.expr.clone(), other.expr.clone())),
            e_c: &self.e_c + &other.e_c,
            dim: self.dim.max(other.dim),
            pure_dim: self.pure_dim && other.pure_dim && self.dim == other.dim,
            smooth: self.smooth && other.smooth,
            complete: self.complete && other.complete,
        }
    }

    pub fn diff(&self, other: &Self) -> Self {
        Self {
            expr: Arc::new(Expr::Diff(self.expr.clone(), other.expr.clone())),
            e_c: &self.e_c - &other.e_c,
            dim: self.dim.max(other.dim),
            // a formal difference carries no geometric attestation
            pure_dim: false,
            smooth: false,
            complete: false,
        }
    }

    pub fn prod(&self, other: &Self) -> Self {
        Self {
            expr: Arc::new(Expr::Prod(self.expr.clone(), other.expr.clone())),
            e_c: &self.e_c * &other.e_c,
            dim: self.dim + other.dim,
            pure_dim: self.pure_dim && other.pure_dim,
            smooth: self.smooth && other.smooth,
            complete: self.complete && other.complete,
        }
    }

    /// Asserts the class is represented by a smooth variety of pure
    /// dimension `dim`; enables χ_y via duality.
    pub fn declare_smooth(&self, dim: i64) -> Self {
        let mut out = self.clone();
        out.expr = Arc::new(Expr::Asserted(self.expr.clone()));
        out.smooth = true;
        out.pure_dim = true;
        out.dim = dim;
        out
    }

    /// Asserts the class is represented by a complete variety.
    pub fn declare_complete(&self) -> Self {
        let mut out = self.clone();
        out.expr = Arc::new(Expr::Asserted(self.expr.clone()));
        out.complete = true;
        out
    }

    pub fn e_polynomial_c(&self) -> &EPolynomial {
        &self.e_c
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn has_pure_dim(&self) -> bool {
        self.pure_dim
    }

    /// `χ_y^c`: the E-normal form at `(u,v) = (-y,1)`.
    pub fn chi_y_c(&self) -> GenusPolynomial {
        self.e_c.specialize(ESpecialization::ChiY)
    }

    /// `χ_y`: equals `χ_y^c` for complete classes; for smooth classes of
    /// pure dimension it is the Poincaré dual `(-y)^n χ^c_{1/y}`.
    pub fn chi_y(&self) -> Result<GenusPolynomial, MotivicError> {
        if self.complete {
            Ok(self.chi_y_c())
        } else if self.smooth && self.pure_dim {
            Ok(poincare_dual(&self.chi_y_c(), self.dim))
        } else {
            Err(MotivicError::ChiYUndefined(self.render()))
        }
    }

    pub fn render(&self) -> String {
        self.expr.render()
    }

    /// JSON echo of the cached normal form and flags.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "expr": self.render(),
            "e_c": self.e_c.to_json(),
            "dim": self.dim,
            "pure_dim": self.pure_dim,
            "smooth": self.smooth,
            "complete": self.complete,
        })
    }
}

impl fmt::Debug for VarietyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarietyClass({})", self.render())
    }
}

/// Class of the blow-up of `X` along a smooth center `Y` of codimension
/// `r + 1`: `X + Y * (P^r - pt)`, so that
/// `χ_y^c = χ_y^c(X) + χ_y^c(Y)(-y + ... + (-y)^r)`.
pub fn blowup_class(x: &VarietyClass, y: &VarietyClass, r: i64) -> Result<VarietyClass, MotivicError> {
    if r < 0 {
        return Err(MotivicError::NegativeCodim(r));
    }
    if !x.smooth {
        return Err(MotivicError::BlowupNotSmooth(x.render()));
    }
    if !y.smooth {
        return Err(MotivicError::BlowupNotSmooth(y.render()));
    }
    let fiber_correction = VarietyClass::proj_space(r as u32).diff(&VarietyClass::point());
    let mut out = x.sum(&y.prod(&fiber_correction));
    // blowing up preserves smoothness, properness and dimension
    out.smooth = true;
    out.complete = x.complete;
    out.dim = x.dim;
    out.pure_dim = x.pure_dim;
    Ok(out)
}

/// Both sides of the trivial-monodromy multiplicativity check
/// `χ_y^c(B × F) = χ_y^c(B) χ_y^c(F)`.
pub struct ProductGenusCheck {
    pub lhs: GenusPolynomial,
    pub rhs: GenusPolynomial,
}

pub fn product_genus_check(b: &VarietyClass, f: &VarietyClass) -> ProductGenusCheck {
    ProductGenusCheck {
        lhs: b.prod(f).chi_y_c(),
        rhs: b.chi_y_c() * f.chi_y_c(),
    }
}
