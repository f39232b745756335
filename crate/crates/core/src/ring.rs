//! Finitely presented graded cohomology rings with an integration
//! functional, and vector bundles given by rank and Chern classes.
//!
//! Supported presentations: the point, projective spaces, finite products,
//! projective bundles over supported rings, and fully explicit custom rings
//! with structure constants. Everything is complex-graded (even real
//! degrees), so multiplication is plainly commutative. Products beyond the
//! top degree truncate to zero; the integration functional picks the
//! coefficient of the designated top basis element.
//!
//! Ring elements carry [`YRat`] coefficients so that the same element type
//! serves both y-free Chern data and the polynomial-in-y class computations
//! built on top.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use crate::yrat::YRat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("elements belong to different rings")]
    MixedRings,
    #[error("Chern class c_{index} must be homogeneous of degree {index}")]
    NonHomogeneousChern { index: usize },
    #[error("Chern class c_{index} exceeds the bundle rank {rank}")]
    ChernBeyondRank { index: usize, rank: usize },
    #[error("Chern class c_{index} exceeds the ring top degree {top}")]
    ChernBeyondTop { index: usize, top: usize },
    #[error("expected y-free (rational) Chern data in ring construction")]
    NotYFree,
    #[error("custom ring rejected: {0}")]
    CustomRing(String),
    #[error("pushforward kind does not match the ring presentation: {0}")]
    PushforwardMismatch(&'static str),
    #[error("no built-in tangent bundle for this ring presentation")]
    NoTangent,
}

#[derive(Clone, Debug)]
pub enum Presentation {
    Point,
    Proj(u32),
    Product(Vec<CohomRing>),
    ProjBundle { base: CohomRing, bundle: BundleData },
    Custom,
}

struct RingInner {
    presentation: Presentation,
    names: Vec<String>,
    degrees: Vec<usize>,
    top_degree: usize,
    /// mul[i][j] = sparse combination Σ (k, coeff); truncated at top degree
    mul: Vec<Vec<Vec<(usize, BigRational)>>>,
    /// integration functional on basis elements
    integral: Vec<BigRational>,
    /// published generator names for element expressions
    generators: Vec<(String, usize)>,
    /// factor strides for product rings
    strides: Vec<usize>,
}

/// Graded cohomology ring handle; cheap to clone, compared by identity.
#[derive(Clone)]
pub struct CohomRing {
    inner: Arc<RingInner>,
}

impl fmt::Debug for CohomRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CohomRing({:?}, top {}, basis {})",
            self.describe(),
            self.top_degree(),
            self.basis_len()
        )
    }
}

impl CohomRing {
    pub fn point() -> Self {
        Self {
            inner: Arc::new(RingInner {
                presentation: Presentation::Point,
                names: vec!["1".into()],
                degrees: vec![0],
                top_degree: 0,
                mul: vec![vec![vec![(0, BigRational::one())]]],
                integral: vec![BigRational::one()],
                generators: vec![],
                strides: vec![],
            }),
        }
    }

    /// `Q[h]/(h^{n+1})` with `∫ h^n = 1`.
    pub fn proj(n: u32) -> Self {
        let n = n as usize;
        let names = (0..=n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "h".to_string(),
                _ => format!("h^{k}"),
            })
            .collect();
        let mut mul = vec![vec![Vec::new(); n + 1]; n + 1];
        for i in 0..=n {
            for j in 0..=n {
                if i + j <= n {
                    mul[i][j] = vec![(i + j, BigRational::one())];
                }
            }
        }
        let mut integral = vec![BigRational::zero(); n + 1];
        integral[n] = BigRational::one();
        let generators = if n >= 1 { vec![("h".to_string(), 1)] } else { vec![] };
        Self {
            inner: Arc::new(RingInner {
                presentation: Presentation::Proj(n as u32),
                names,
                degrees: (0..=n).collect(),
                top_degree: n,
                mul,
                integral,
                generators,
                strides: vec![],
            }),
        }
    }

    /// Tensor product of the factors, with generators renamed by factor
    /// position (`h` of the i-th factor becomes `h{i}`, 1-based).
    pub fn product(factors: Vec<CohomRing>) -> Self {
        assert!(!factors.is_empty(), "product of no rings");
        if factors.len() == 1 {
            return factors.into_iter().next().unwrap();
        }
        let sizes: Vec<usize> = factors.iter().map(|f| f.basis_len()).collect();
        let total: usize = sizes.iter().product();
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        let decode = |idx: usize| -> Vec<usize> {
            let mut parts = Vec::with_capacity(factors.len());
            let mut rest = idx;
            for s in &strides {
                parts.push(rest / s);
                rest %= s;
            }
            parts
        };

        // non-unit monomial names get a positional suffix: h of the second
        // factor renders as h2
        let mut names = Vec::with_capacity(total);
        let mut degrees = Vec::with_capacity(total);
        let mut integral = Vec::with_capacity(total);
        let top_degree: usize = factors.iter().map(|f| f.top_degree()).sum();
        for idx in 0..total {
            let parts = decode(idx);
            let mut ps = Vec::new();
            let mut deg = 0;
            let mut itg = BigRational::one();
            for (i, (f, &p)) in factors.iter().zip(&parts).enumerate() {
                let name = &f.inner.names[p];
                if name != "1" {
                    ps.push(suffix_monomial(name, i + 1));
                }
                deg += f.inner.degrees[p];
                itg *= &f.inner.integral[p];
            }
            names.push(if ps.is_empty() { "1".into() } else { ps.join("*") });
            degrees.push(deg);
            integral.push(itg);
        }

        let mut mul = vec![vec![Vec::new(); total]; total];
        for a in 0..total {
            let pa = decode(a);
            for b in 0..total {
                let pb = decode(b);
                // product over factors of the per-factor sparse products
                let mut acc: Vec<(usize, BigRational)> = vec![(0, BigRational::one())];
                let mut dead = false;
                for (i, f) in factors.iter().enumerate() {
                    let part = &f.inner.mul[pa[i]][pb[i]];
                    if part.is_empty() {
                        dead = true;
                        break;
                    }
                    let mut next = Vec::new();
                    for (idx_acc, c_acc) in &acc {
                        for (k, c) in part {
                            next.push((idx_acc + k * strides[i], c_acc * c));
                        }
                    }
                    acc = next;
                }
                if !dead {
                    acc.retain(|(k, _)| degrees[*k] <= top_degree);
                    mul[a][b] = acc;
                }
            }
        }

        let mut generators = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            for (g, idx) in &f.inner.generators {
                generators.push((suffix_monomial(g, i + 1), idx * strides[i]));
            }
        }

        Self {
            inner: Arc::new(RingInner {
                presentation: Presentation::Product(factors),
                names,
                degrees,
                top_degree,
                mul,
                integral,
                generators,
                strides,
            }),
        }
    }

    /// Projective bundle `P(V)` of a rank-r bundle over a supported base:
    /// base classes together with the relative hyperplane class `xi`,
    /// subject to `Σ_i c_i(V) ξ^{r-i} = 0`, fiber `P^{r-1}`.
    pub fn proj_bundle(base: &CohomRing, bundle: &BundleData) -> Result<Self, RingError> {
        if !bundle.ring().same_ring(base) {
            return Err(RingError::MixedRings);
        }
        let r = bundle.rank;
        assert!(r >= 1, "projective bundle of a rank-0 bundle");
        let chern: Vec<Vec<BigRational>> = (1..=r)
            .map(|i| {
                bundle
                    .chern_class(i)
                    .try_rational_coords()
                    .ok_or(RingError::NotYFree)
            })
            .collect::<Result<_, _>>()?;

        let b = base.basis_len();
        let top_degree = base.top_degree() + (r - 1);
        let total = b * r;
        let idx = |bi: usize, k: usize| bi * r + k;
        let degrees: Vec<usize> = (0..total)
            .map(|m| base.inner.degrees[m / r] + m % r)
            .collect();
        let names: Vec<String> = (0..total)
            .map(|m| {
                let bn = &base.inner.names[m / r];
                let k = m % r;
                let xi = match k {
                    0 => String::new(),
                    1 => "xi".into(),
                    _ => format!("xi^{k}"),
                };
                match (bn.as_str(), xi.as_str()) {
                    ("1", "") => "1".into(),
                    ("1", x) => x.into(),
                    (b, "") => b.into(),
                    (b, x) => format!("{b}*{x}"),
                }
            })
            .collect();

        // base element times full vector, acting on the base part
        let base_mul_into = |sparse: &[(usize, BigRational)], v: &[BigRational]| -> Vec<BigRational> {
            let mut out = vec![BigRational::zero(); total];
            for m in 0..total {
                if v[m].is_zero() {
                    continue;
                }
                let (bi, k) = (m / r, m % r);
                for (bj, c) in sparse {
                    for (bk, c2) in &base.inner.mul[bi][*bj] {
                        if degrees[idx(*bk, k)] <= top_degree {
                            out[idx(*bk, k)] += &v[m] * c * c2;
                        }
                    }
                }
            }
            out
        };

        // xi^r = -Σ_{i=1..r} c_i(V) ξ^{r-i}
        let mut xi_r = vec![BigRational::zero(); total];
        for (i, ci) in chern.iter().enumerate() {
            let power = r - (i + 1);
            for (bj, c) in ci.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = idx(bj, power);
                if degrees[m] <= top_degree {
                    xi_r[m] -= c;
                }
            }
        }

        let xi_mul = |v: &[BigRational], base_mul_into: &dyn Fn(&[(usize, BigRational)], &[BigRational]) -> Vec<BigRational>| -> Vec<BigRational> {
            let mut out = vec![BigRational::zero(); total];
            for m in 0..total {
                if v[m].is_zero() {
                    continue;
                }
                let (bi, k) = (m / r, m % r);
                if k + 1 < r {
                    let t = idx(bi, k + 1);
                    if degrees[t] <= top_degree {
                        out[t] += &v[m];
                    }
                } else {
                    let shifted = base_mul_into(&[(bi, v[m].clone())], &xi_r);
                    for (o, s) in out.iter_mut().zip(shifted) {
                        *o += s;
                    }
                }
            }
            out
        };

        let mut mul = vec![vec![Vec::new(); total]; total];
        for a in 0..total {
            let (ba, ka) = (a / r, a % r);
            for bcol in 0..total {
                let (bb, kb) = (bcol / r, bcol % r);
                if degrees[a] + degrees[bcol] > top_degree {
                    continue;
                }
                let mut v = vec![BigRational::zero(); total];
                for (bk, c) in &base.inner.mul[ba][bb] {
                    let m = idx(*bk, 0);
                    if degrees[m] <= top_degree {
                        v[m] += c;
                    }
                }
                for _ in 0..ka + kb {
                    v = xi_mul(&v, &base_mul_into);
                }
                mul[a][bcol] = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }

        // f_*(b ξ^k) = s_{k-r+1}(V)·b; on basis monomials only k = r-1
        // survives, so ∫ (b ξ^{r-1}) = ∫_base b.
        let integral: Vec<BigRational> = (0..total)
            .map(|m| {
                if m % r == r - 1 {
                    base.inner.integral[m / r].clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect();

        let mut generators: Vec<(String, usize)> = base
            .inner
            .generators
            .iter()
            .map(|(g, i)| (g.clone(), idx(*i, 0)))
            .collect();
        generators.push(("xi".into(), idx(0, 1)));

        Ok(Self {
            inner: Arc::new(RingInner {
                presentation: Presentation::ProjBundle { base: base.clone(), bundle: bundle.clone() },
                names,
                degrees,
                top_degree,
                mul,
                integral,
                generators,
                strides: vec![],
            }),
        })
    }

    /// Fully explicit ring. Basis index 0 must be the unit of degree 0;
    /// `mul` lists products of basis pairs (symmetry is filled in);
    /// grading, commutativity, associativity and the support of the
    /// integration functional are all validated.
    pub fn custom(
        names: Vec<String>,
        degrees: Vec<usize>,
        mul_entries: Vec<((usize, usize), Vec<(usize, BigRational)>)>,
        integral: Vec<BigRational>,
        top_degree: usize,
    ) -> Result<Self, RingError> {
        let n = names.len();
        let fail = |msg: String| Err(RingError::CustomRing(msg));
        if n == 0 || degrees.len() != n || integral.len() != n {
            return fail("basis, degrees and integral must have equal nonzero length".into());
        }
        if degrees[0] != 0 {
            return fail("basis element 0 must be the unit of degree 0".into());
        }
        if degrees.iter().any(|d| *d > top_degree) {
            return fail("basis degree exceeds the declared top degree".into());
        }
        for (k, itg) in integral.iter().enumerate() {
            if !itg.is_zero() && degrees[k] != top_degree {
                return fail(format!(
                    "integration functional must vanish below top degree, but ∫ {} ≠ 0",
                    names[k]
                ));
            }
        }

        let mut mul = vec![vec![None::<Vec<(usize, BigRational)>>; n]; n];
        for ((i, j), combo) in mul_entries {
            if i >= n || j >= n {
                return fail(format!("product entry ({i},{j}) out of range"));
            }
            for (k, _) in &combo {
                if *k >= n {
                    return fail(format!("product ({i},{j}) targets basis {k} out of range"));
                }
                if degrees[*k] != degrees[i] + degrees[j] {
                    return fail(format!(
                        "product {}·{} has a component {} violating the grading",
                        names[i], names[j], names[*k]
                    ));
                }
            }
            if let Some(prev) = &mul[i][j] {
                if *prev != combo {
                    return fail(format!("conflicting product entries for ({i},{j})"));
                }
            }
            mul[i][j] = Some(combo.clone());
            match &mul[j][i] {
                Some(prev) if *prev != combo => {
                    return fail(format!(
                        "product not commutative on {}·{}",
                        names[i], names[j]
                    ))
                }
                _ => mul[j][i] = Some(combo),
            }
        }
        // unit row/column and truncation defaults
        for i in 0..n {
            if mul[0][i].is_none() {
                mul[0][i] = Some(vec![(i, BigRational::one())]);
            }
            if mul[i][0].is_none() {
                mul[i][0] = Some(vec![(i, BigRational::one())]);
            }
        }
        let mul: Vec<Vec<Vec<(usize, BigRational)>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut combo = mul[i][j].clone().unwrap_or_default();
                        if degrees[i] + degrees[j] > top_degree {
                            combo.clear();
                        }
                        combo.retain(|(_, c)| !c.is_zero());
                        combo
                    })
                    .collect()
            })
            .collect();
        if mul[0][0] != vec![(0usize, BigRational::one())] {
            return fail("basis element 0 must square to itself".into());
        }

        // associativity on all basis triples
        let compose = |sparse: &[(usize, BigRational)], j: usize| -> Vec<BigRational> {
            let mut acc = vec![BigRational::zero(); n];
            for (k, c) in sparse {
                for (m, c2) in &mul[*k][j] {
                    acc[*m] += c * c2;
                }
            }
            acc
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = compose(&mul[i][j], k);
                    let mut right = vec![BigRational::zero(); n];
                    for (m, c) in &mul[j][k] {
                        for (t, c2) in &mul[i][*m] {
                            right[*t] += c * c2;
                        }
                    }
                    if left != right {
                        return fail(format!(
                            "associativity fails on ({}, {}, {})",
                            names[i], names[j], names[k]
                        ));
                    }
                }
            }
        }

        let generators = names
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(Self {
            inner: Arc::new(RingInner {
                presentation: Presentation::Custom,
                names,
                degrees,
                top_degree,
                mul,
                integral,
                generators,
                strides: vec![],
            }),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.inner.presentation
    }

    fn describe(&self) -> String {
        match &self.inner.presentation {
            Presentation::Point => "point".into(),
            Presentation::Proj(n) => format!("P^{n}"),
            Presentation::Product(f) => format!("product of {} factors", f.len()),
            Presentation::ProjBundle { .. } => "projective bundle".into(),
            Presentation::Custom => "custom".into(),
        }
    }

    pub fn same_ring(&self, other: &CohomRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn basis_len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn top_degree(&self) -> usize {
        self.inner.top_degree
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn basis_degree(&self, i: usize) -> usize {
        self.inner.degrees[i]
    }

    /// Value of the integration functional on the i-th basis element.
    pub fn basis_integral(&self, i: usize) -> BigRational {
        self.inner.integral[i].clone()
    }

    /// Published generator elements, for element expressions.
    pub fn generators(&self) -> Vec<(String, Element)> {
        self.inner
            .generators
            .iter()
            .map(|(name, i)| (name.clone(), self.basis_element(*i)))
            .collect()
    }

    pub fn zero(&self) -> Element {
        Element { ring: self.clone(), coords: vec![YRat::zero(); self.basis_len()] }
    }

    pub fn one(&self) -> Element {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = YRat::one();
        e
    }

    pub fn scalar(&self, c: YRat) -> Element {
        let mut e = self.zero();
        e.coords[0] = c;
        e
    }

    /// Built-in tangent bundle of the presentation, when one exists.
    pub fn tangent_bundle(&self) -> Result<BundleData, RingError> {
        match &self.inner.presentation {
            Presentation::Point => BundleData::new(self, 0, vec![]),
            Presentation::Proj(n) => {
                // c(T_{P^n}) = (1+h)^{n+1}
                let n = *n as usize;
                let h = if n >= 1 { self.basis_element(1) } else { self.zero() };
                let mut chern = Vec::new();
                let mut hpow = self.one();
                for i in 1..=n {
                    hpow = hpow.mul(&h);
                    let b = binomial_rational(n + 1, i);
                    chern.push(hpow.scale_rational(&b));
                }
                BundleData::new(self, n, chern)
            }
            Presentation::Product(factors) => {
                let mut total: Option<BundleData> = None;
                for (i, f) in factors.iter().enumerate() {
                    let t = f.tangent_bundle()?;
                    let pulled = self.pullback_bundle_from_factor(i, &t)?;
                    total = Some(match total {
                        None => pulled,
                        Some(acc) => acc.direct_sum(&pulled)?,
                    });
                }
                Ok(total.expect("product has factors"))
            }
            Presentation::ProjBundle { base, .. } => {
                let tb = base.tangent_bundle()?;
                let pulled_tb = self.pullback_bundle_from_base(&tb)?;
                let t_f = self.relative_tangent()?;
                pulled_tb.direct_sum(&t_f)
            }
            Presentation::Custom => Err(RingError::NoTangent),
        }
    }

    /// Relative tangent bundle of a projective-bundle presentation,
    /// derived from the Euler sequence: `c(T_f) = Π (1 + v_i + ξ)`, i.e.
    /// the Chern classes of `f^*V ⊗ O(1)` in degrees below the fiber rank.
    pub fn relative_tangent(&self) -> Result<BundleData, RingError> {
        let Presentation::ProjBundle { base: _, bundle } = &self.inner.presentation else {
            return Err(RingError::PushforwardMismatch("relative tangent needs a projective bundle"));
        };
        let r = bundle.rank;
        let pulled = self.pullback_bundle_from_base(bundle)?;
        let xi = self.generators().into_iter().find(|(n, _)| n == "xi").unwrap().1;
        let twisted = pulled.tensor_line(&xi)?;
        let chern = (1..r).map(|i| twisted.chern_class(i)).collect();
        BundleData::new(self, r - 1, chern)
    }

    /// Pullback along the projection of a product ring onto its factor.
    pub fn pullback_from_factor(&self, factor: usize, elem: &Element) -> Result<Element, RingError> {
        let Presentation::Product(factors) = &self.inner.presentation else {
            return Err(RingError::PushforwardMismatch("pullback needs a product ring"));
        };
        if !elem.ring.same_ring(&factors[factor]) {
            return Err(RingError::MixedRings);
        }
        let mut out = self.zero();
        for (i, c) in elem.coords.iter().enumerate() {
            if !c.is_zero() {
                out.coords[i * self.inner.strides[factor]] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn pullback_bundle_from_factor(
        &self,
        factor: usize,
        bundle: &BundleData,
    ) -> Result<BundleData, RingError> {
        let chern = (1..=bundle.rank.min(bundle.ring().top_degree()))
            .map(|i| self.pullback_from_factor(factor, &bundle.chern_class(i)))
            .collect::<Result<Vec<_>, _>>()?;
        BundleData::new(self, bundle.rank, chern)
    }

    /// Pullback along the projection of a projective bundle to its base.
    pub fn pullback_from_base(&self, elem: &Element) -> Result<Element, RingError> {
        let Presentation::ProjBundle { base, bundle } = &self.inner.presentation else {
            return Err(RingError::PushforwardMismatch("pullback needs a projective bundle"));
        };
        if !elem.ring.same_ring(base) {
            return Err(RingError::MixedRings);
        }
        let r = bundle.rank;
        let mut out = self.zero();
        for (i, c) in elem.coords.iter().enumerate() {
            if !c.is_zero() {
                out.coords[i * r] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn pullback_bundle_from_base(&self, bundle: &BundleData) -> Result<BundleData, RingError> {
        let chern = (1..=bundle.rank.min(bundle.ring().top_degree()))
            .map(|i| self.pullback_from_base(&bundle.chern_class(i)))
            .collect::<Result<Vec<_>, _>>()?;
        BundleData::new(self, bundle.rank, chern)
    }
}

/// Appends a positional suffix to every variable occurrence in a basis
/// monomial name: `h^2` of factor 1 becomes `h1^2`, `a*b` becomes `a1*b1`.
fn suffix_monomial(name: &str, pos: usize) -> String {
    name.split('*')
        .map(|part| match part.split_once('^') {
            Some((v, e)) => format!("{v}{pos}^{e}"),
            None => format!("{part}{pos}"),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn binomial_rational(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Element of a [`CohomRing`] with [`YRat`] coordinates on the basis.
#[derive(Clone)]
pub struct Element {
    ring: CohomRing,
    coords: Vec<YRat>,
}

impl Element {
    pub fn ring(&self) -> &CohomRing {
        &self.ring
    }

    pub fn coords(&self) -> &[YRat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &YRat {
        &self.coords[i]
    }

    pub fn set_coord(&mut self, i: usize, c: YRat) {
        self.coords[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn assert_same_ring(&self, other: &Element) {
        assert!(
            self.ring.same_ring(&other.ring),
            "ring mismatch in element arithmetic"
        );
    }

    pub fn add(&self, other: &Element) -> Element {
        self.assert_same_ring(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Element { ring: self.ring.clone(), coords }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.assert_same_ring(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Element { ring: self.ring.clone(), coords }
    }

    pub fn neg(&self) -> Element {
        let coords = self.coords.iter().map(|a| -a).collect();
        Element { ring: self.ring.clone(), coords }
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.assert_same_ring(other);
        let table = &self.ring.inner.mul;
        let mut out = self.ring.zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &table[i][j] {
                    out.coords[*k] = &out.coords[*k] + &ab.scale(c);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &YRat) -> Element {
        let coords = self.coords.iter().map(|a| a * c).collect();
        Element { ring: self.ring.clone(), coords }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Element {
        let coords = self.coords.iter().map(|a| a.scale(c)).collect();
        Element { ring: self.ring.clone(), coords }
    }

    /// Component of homogeneous degree `d`.
    pub fn degree_component(&self, d: usize) -> Element {
        let mut out = self.ring.zero();
        for (i, c) in self.coords.iter().enumerate() {
            if self.ring.inner.degrees[i] == d {
                out.coords[i] = c.clone();
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Element {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∫` against the ring's integration functional.
    pub fn integrate(&self) -> YRat {
        let mut acc = YRat::zero();
        for (c, itg) in self.coords.iter().zip(&self.ring.inner.integral) {
            if !itg.is_zero() {
                acc = &acc + &c.scale(itg);
            }
        }
        acc
    }

    /// Rational coordinates, if no coefficient involves `y`.
    pub fn try_rational_coords(&self) -> Option<Vec<BigRational>> {
        self.coords
            .iter()
            .map(|c| {
                let r = c.reduce();
                if r.is_polynomial() && r.numerator().is_constant() {
                    Some(r.numerator().coeff(0))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = self.ring.basis_name(i);
            if name == "1" {
                parts.push(format!("({})", c.render()));
            } else {
                parts.push(format!("({})*{}", c.render(), name));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.render())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coords == other.coords
    }
}

/// Vector bundle as rank plus Chern classes `c_1..c_k` over one ring.
#[derive(Clone)]
pub struct BundleData {
    ring: CohomRing,
    rank: usize,
    /// chern[i] is c_{i+1}; classes beyond the stored length are zero
    chern: Vec<Element>,
}

impl fmt::Debug for BundleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BundleData(rank {}", self.rank)?;
        for (i, c) in self.chern.iter().enumerate() {
            if !c.is_zero() {
                write!(f, ", c{} = {}", i + 1, c.render())?;
            }
        }
        write!(f, ")")
    }
}

impl BundleData {
    /// Validates homogeneity (`c_i` of degree `i`), the rank bound and the
    /// ring top degree.
    pub fn new(ring: &CohomRing, rank: usize, chern: Vec<Element>) -> Result<Self, RingError> {
        for (n, c) in chern.iter().enumerate() {
            let index = n + 1;
            if !c.ring().same_ring(ring) {
                return Err(RingError::MixedRings);
            }
            if index > ring.top_degree() && !c.is_zero() {
                return Err(RingError::ChernBeyondTop { index, top: ring.top_degree() });
            }
            if index > rank && !c.is_zero() {
                return Err(RingError::ChernBeyondRank { index, rank });
            }
            if !c.is_zero() && c.degree_component(index) != *c {
                return Err(RingError::NonHomogeneousChern { index });
            }
        }
        Ok(Self { ring: ring.clone(), rank, chern })
    }

    pub fn trivial(ring: &CohomRing, rank: usize) -> Self {
        Self { ring: ring.clone(), rank, chern: vec![] }
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(ring: &CohomRing, c1: Element) -> Result<Self, RingError> {
        Self::new(ring, 1, vec![c1])
    }

    pub fn ring(&self) -> &CohomRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_i`; zero above the stored classes.
    pub fn chern_class(&self, i: usize) -> Element {
        if i == 0 {
            self.ring.one()
        } else {
            self.chern.get(i - 1).cloned().unwrap_or_else(|| self.ring.zero())
        }
    }

    /// `1 + c_1 + c_2 + ...` up to the ring top degree.
    pub fn total_chern(&self) -> Element {
        let mut acc = self.ring.one();
        for c in &self.chern {
            acc = acc.add(c);
        }
        acc
    }

    pub fn is_flat(&self) -> bool {
        self.chern.iter().all(|c| c.is_zero())
    }

    /// Whitney sum: ranks add, total Chern classes multiply.
    pub fn direct_sum(&self, other: &BundleData) -> Result<Self, RingError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(RingError::MixedRings);
        }
        let total = self.total_chern().mul(&other.total_chern());
        let rank = self.rank + other.rank;
        let top = self.ring.top_degree();
        let chern = (1..=top.min(rank)).map(|i| total.degree_component(i)).collect();
        Self::new(&self.ring, rank, chern)
    }

    /// Dual bundle: `c_i -> (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        let chern = self
            .chern
            .iter()
            .enumerate()
            .map(|(n, c)| if (n + 1) % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        Self { ring: self.ring.clone(), rank: self.rank, chern }
    }

    /// Tensor with a line bundle of first Chern class `l`:
    /// `c_k(E⊗L) = Σ_i C(r-i, k-i) c_i(E) l^{k-i}`.
    pub fn tensor_line(&self, l: &Element) -> Result<Self, RingError> {
        assert!(self.ring.same_ring(l.ring()), "ring mismatch in tensor_line");
        let r = self.rank;
        let top = self.ring.top_degree();
        let mut chern = Vec::new();
        for k in 1..=r.min(top) {
            let mut acc = self.ring.zero();
            for i in 0..=k {
                let ci = self.chern_class(i);
                if ci.is_zero() {
                    continue;
                }
                let b = binomial_rational(r - i, k - i);
                acc = acc.add(&ci.mul(&l.pow(k - i)).scale_rational(&b));
            }
            chern.push(acc);
        }
        Self::new(&self.ring, r, chern)
    }

    /// Power sums of the Chern roots via Newton's identities, degrees
    /// `1..=up_to`.
    pub fn power_sums(&self, up_to: usize) -> Vec<Element> {
        let mut p: Vec<Element> = Vec::with_capacity(up_to);
        for k in 1..=up_to {
            // p_k = Σ_{m=1}^{k-1} (-1)^{m-1} e_m p_{k-m} + (-1)^{k-1} k e_k
            let mut acc = self.ring.zero();
            for m in 1..k {
                let term = self.chern_class(m).mul(&p[k - m - 1]);
                acc = if (m - 1) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            let ek = self
                .chern_class(k)
                .scale_rational(&BigRational::from_integer(BigInt::from(k)));
            acc = if (k - 1) % 2 == 0 { acc.add(&ek) } else { acc.sub(&ek) };
            p.push(acc);
        }
        p
    }

    /// Segre classes `s_0..s_up_to` with `s(V) c(V) = 1`.
    pub fn segre(&self, up_to: usize) -> Vec<Element> {
        let mut s = vec![self.ring.one()];
        for k in 1..=up_to {
            let mut acc = self.ring.zero();
            for i in 1..=k.min(self.rank) {
                acc = acc.add(&self.chern_class(i).mul(&s[k - i]));
            }
            s.push(acc.neg());
        }
        s
    }
}
