//! Abstract syntax of the input DSL: ordered `let` bindings of declarative
//! mathematical values, followed by queries naming engine operations.

use crate::lexer::Span;

#[derive(Debug, Clone)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Debug, Clone)]
pub enum Statement {
    Let { name: String, value: ValueExpr, span: Span },
    Query { query: Query, span: Span },
}

#[derive(Debug, Clone)]
pub enum ValueExpr {
    Variety(VarietyExpr),
    Poly(PolyExpr),
    Mhs(MhsLiteral),
    Strata(StrataLiteral),
    Stalks(StalksLiteral),
    Fibration(FibrationLiteral),
    Ring(RingExpr),
    Bundle { ring: String, span: Span, tail: BundleTail },
    HodgeColl(HodgeCollLiteral),
}

#[derive(Debug, Clone)]
pub enum VarietyExpr {
    Point,
    AffineLine,
    Torus,
    Proj(u32),
    IntPoints(i64),
    Atom {
        name: String,
        epoly: Vec<((i64, i64), i64)>,
        dim: i64,
        smooth: bool,
        complete: bool,
    },
    Ref(String, Span),
    Sum(Box<VarietyExpr>, Box<VarietyExpr>),
    Diff(Box<VarietyExpr>, Box<VarietyExpr>),
    Prod(Box<VarietyExpr>, Box<VarietyExpr>),
    Pow(Box<VarietyExpr>, u32),
    Smooth(Box<VarietyExpr>, i64),
    Complete(Box<VarietyExpr>),
    Blowup(Box<VarietyExpr>, Box<VarietyExpr>, i64),
}

#[derive(Debug, Clone)]
pub enum PolyExpr {
    Int(i64),
    Y,
    Ref(String, Span),
    Sum(Box<PolyExpr>, Box<PolyExpr>),
    Diff(Box<PolyExpr>, Box<PolyExpr>),
    Prod(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, i64),
    Neg(Box<PolyExpr>),
}

/// `mhs { (i,p,q): dim, (i,p): dim, ... }`; a missing q is the sentinel
/// accepted by χ_y and rejected by the E-polynomial.
#[derive(Debug, Clone)]
pub struct MhsLiteral {
    pub entries: Vec<(i64, i64, Option<i64>, u64)>,
}

/// Reference to genus data: a bound name (variety or polynomial) or an
/// inline polynomial expression.
#[derive(Debug, Clone)]
pub enum GenusRef {
    Named(String, Span),
    Inline(PolyExpr),
}

#[derive(Debug, Clone)]
pub struct StratumLiteral {
    pub id: String,
    pub closure: GenusRef,
    pub fiber: GenusRef,
    pub generic: bool,
    /// strata this one lies under (it is part of their boundary data)
    pub under: Vec<String>,
    pub trivial_monodromy: bool,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct StrataLiteral {
    pub strata: Vec<StratumLiteral>,
}

#[derive(Debug, Clone)]
pub enum MhsRef {
    Named(String, Span),
    Inline(MhsLiteral),
}

#[derive(Debug, Clone)]
pub struct StalksLiteral {
    pub strata: Vec<(GenusRef, MhsRef)>,
}

#[derive(Debug, Clone)]
pub enum CriticalLiteral {
    Isolated(Vec<MhsRef>),
    Vanishing { table: MhsRef, sing_dim: i64 },
    Stratified(Vec<(GenusRef, MhsRef)>),
}

#[derive(Debug, Clone)]
pub struct FibrationLiteral {
    pub base: GenusRef,
    pub fiber: GenusRef,
    pub total_dim: i64,
    pub critical: Vec<CriticalLiteral>,
}

#[derive(Debug, Clone)]
pub enum RingExpr {
    Point,
    Proj(u32),
    Product(Vec<RingExpr>),
    ProjBundle { base: Box<RingExpr>, bundle: BundleTail },
    Ref(String, Span),
}

/// Bundle data relative to an implied ring.
#[derive(Debug, Clone)]
pub enum BundleTail {
    /// `O` or `O(d)`: (twist of) the trivial line bundle by the ring's
    /// degree-1 generator.
    Line(i64),
    /// `[rank r; c1 = ...; c2 = ...]`
    Explicit { rank: usize, chern: Vec<(usize, ElemExpr)> },
    /// the built-in tangent bundle of the ring presentation
    Tangent,
    /// reference to a bound bundle
    Ref(String, Span),
}

#[derive(Debug, Clone)]
pub enum ElemExpr {
    Int(i64),
    Gen(String, Span),
    Sum(Box<ElemExpr>, Box<ElemExpr>),
    Diff(Box<ElemExpr>, Box<ElemExpr>),
    Prod(Box<ElemExpr>, Box<ElemExpr>),
    Pow(Box<ElemExpr>, u32),
    Neg(Box<ElemExpr>),
}

#[derive(Debug, Clone)]
pub struct HodgeCollLiteral {
    pub ring: String,
    pub ring_span: Span,
    pub entries: Vec<((i64, i64), BundleTail)>,
}

#[derive(Debug, Clone)]
pub enum GenusOp {
    ChiYC,
    ChiY,
}

#[derive(Debug, Clone)]
pub enum Query {
    /// `genus chi_y_c X [at n]`
    Genus { op: GenusOp, target: String, target_span: Span, at: Option<i64> },
    /// `epoly X [chi_y|weight|euler]`
    EPoly { target: String, target_span: Span, mode: Option<String> },
    /// `dual X n`: Poincaré duality on a genus value
    Dual { target: String, target_span: Span, dim: i64 },
    /// `strat chi_c D | strat chi D | strat hat D | strat stalks D`
    Strat { mode: StratMode, target: String, target_span: Span },
    /// `rh F`
    Rh { target: String, target_span: Span },
    /// `ghrr R T E`
    Ghrr { ring: String, tangent: String, bundle: String, span: Span },
    /// `meyer R T H [normalized]`
    Meyer { ring: String, tangent: String, coll: String, normalized: bool, span: Span },
    /// `am R T H [derived]`
    AtiyahMeyer { ring: String, tangent: String, coll: String, derived: bool, span: Span },
    /// `higher R T <element expr>`
    Higher { ring: String, tangent: String, alpha: ElemExpr, span: Span },
    /// `log R T <omega bundle> H` or `log R T [B0, B1, ...] H`
    Log { ring: String, tangent: String, omega: LogOmega, coll: String, span: Span },
    /// `class hirzebruch R T` | `class meyer R T H` |
    /// `class amcheck product R F` | `class amcheck projbundle R V`
    Class(ClassQuery),
    /// `verify <suite>`
    Verify { suite: String, span: Span },
}

#[derive(Debug, Clone)]
pub enum LogOmega {
    FromOmega1(String, Span),
    Graded(Vec<(String, Span)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratMode {
    ChiC,
    Chi,
    Hat,
    Stalks,
}

#[derive(Debug, Clone)]
pub enum ClassQuery {
    Hirzebruch { ring: String, tangent: String, span: Span },
    Meyer { ring: String, tangent: String, coll: String, span: Span },
    AmCheckProduct { base: String, fiber: String, span: Span },
    AmCheckProjBundle { base: String, bundle: String, span: Span },
}
