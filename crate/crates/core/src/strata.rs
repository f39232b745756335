//! Stratified multiplicative property: genus of the source of a proper map
//! from a stratification of the target.
//!
//! The target's strata form a poset with a unique dense (generic) stratum on
//! top. Each stratum carries the genus of its closure and the genus of the
//! fiber over it; hat-genera are derived by the inclusion–exclusion
//! recursion and the total-space genus is
//!
//! ```text
//! χ(X) = χ(Y)·χ(F) + Σ_{S non-generic} hatχ(S̄)·(χ(F_S) - χ(F))
//! ```
//!
//! Monodromy triviality is a declared flag, never computed; evaluation
//! refuses non-attested strata unless explicitly overridden.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

use crate::mhs::MixedHodgeComplex;
use crate::poly::GenusPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrataError {
    #[error("duplicate stratum id {0:?}")]
    DuplicateStratum(String),
    #[error("stratum {0:?} references unknown stratum {1:?}")]
    UnknownStratum(String, String),
    #[error("generic stratum id {0:?} is not among the strata")]
    UnknownGeneric(String),
    #[error("strata order contains a cycle through {0:?}")]
    CycleDetected(String),
    #[error("stratum {0:?} is not below the generic stratum; the generic stratum must be dense")]
    GenericNotDense(String),
    #[error("generic stratum {0:?} must not lie below another stratum")]
    GenericBelowOther(String),
    #[error("generic stratum fiber differs from the declared generic fiber")]
    GenericFiberMismatch,
    #[error("stratum {0:?} has non-trivial monodromy and no override was given")]
    MonodromyNotAttested(String),
}

/// One stratum record of the target stratification.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub id: String,
    /// χ-genus of the closure of the stratum.
    pub closure_genus: GenusPolynomial,
    /// Ids of strata strictly below this one, i.e. contained in the
    /// closure minus the stratum. Generators suffice; the strict order is
    /// taken transitively.
    pub under: BTreeSet<String>,
    /// χ-genus of the fiber over this stratum.
    pub fiber_genus: GenusPolynomial,
    pub monodromy_trivial: bool,
}

impl Stratum {
    pub fn new(
        id: impl Into<String>,
        closure_genus: GenusPolynomial,
        fiber_genus: GenusPolynomial,
    ) -> Self {
        Self {
            id: id.into(),
            closure_genus,
            under: BTreeSet::new(),
            fiber_genus,
            monodromy_trivial: false,
        }
    }

    pub fn under(mut self, ids: impl IntoIterator<Item = impl Into<String>>) -> Self {
        self.under.extend(ids.into_iter().map(Into::into));
        self
    }

    pub fn trivial_monodromy(mut self) -> Self {
        self.monodromy_trivial = true;
        self
    }
}

/// Validated strata poset of a stratified map.
#[derive(Clone, Debug)]
pub struct StratifiedMapDescriptor {
    strata: Vec<Stratum>,
    index: BTreeMap<String, usize>,
    /// strictly-below sets, transitively closed, by stratum index
    below: Vec<BTreeSet<usize>>,
    generic: usize,
    generic_fiber: GenusPolynomial,
}

impl StratifiedMapDescriptor {
    /// Validates ids, acyclicity and density of the generic stratum.
    pub fn new(
        strata: Vec<Stratum>,
        generic_id: &str,
        generic_fiber: GenusPolynomial,
    ) -> Result<Self, StrataError> {
        let mut index = BTreeMap::new();
        for (k, s) in strata.iter().enumerate() {
            if index.insert(s.id.clone(), k).is_some() {
                return Err(StrataError::DuplicateStratum(s.id.clone()));
            }
        }
        let generic = *index
            .get(generic_id)
            .ok_or_else(|| StrataError::UnknownGeneric(generic_id.to_string()))?;
        if strata[generic].fiber_genus != generic_fiber {
            return Err(StrataError::GenericFiberMismatch);
        }

        let n = strata.len();
        let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (k, s) in strata.iter().enumerate() {
            for w in &s.under {
                let wk = *index
                    .get(w)
                    .ok_or_else(|| StrataError::UnknownStratum(s.id.clone(), w.clone()))?;
                edges[k].insert(wk);
            }
        }

        // transitive closure by DFS; a back edge to an active node is a cycle
        let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut state = vec![0u8; n]; // 0 unvisited, 1 active, 2 done
        fn close(
            k: usize,
            edges: &[BTreeSet<usize>],
            below: &mut Vec<BTreeSet<usize>>,
            state: &mut [u8],
            strata: &[Stratum],
        ) -> Result<(), StrataError> {
            state[k] = 1;
            for &w in &edges[k] {
                if w == k || state[w] == 1 {
                    return Err(StrataError::CycleDetected(strata[w].id.clone()));
                }
                if state[w] == 0 {
                    close(w, edges, below, state, strata)?;
                }
                below[k].insert(w);
                let transitive: Vec<usize> = below[w].iter().copied().collect();
                below[k].extend(transitive);
            }
            state[k] = 2;
            Ok(())
        }
        for k in 0..n {
            if state[k] == 0 {
                close(k, &edges, &mut below, &mut state, &strata)?;
            }
        }

        for k in 0..n {
            if k != generic && !below[generic].contains(&k) {
                return Err(StrataError::GenericNotDense(strata[k].id.clone()));
            }
        }
        if below.iter().any(|b| b.contains(&generic)) {
            return Err(StrataError::GenericBelowOther(strata[generic].id.clone()));
        }

        Ok(Self { strata, index, below, generic, generic_fiber })
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn generic_id(&self) -> &str {
        &self.strata[self.generic].id
    }

    pub fn generic_fiber(&self) -> &GenusPolynomial {
        &self.generic_fiber
    }

    /// Hat-genera of every stratum closure:
    /// `hatχ(S̄) = χ(S̄) - Σ_{W<S} hatχ(W̄)`.
    pub fn hat_genera(&self) -> BTreeMap<String, GenusPolynomial> {
        let mut hat: Vec<Option<GenusPolynomial>> = vec![None; self.strata.len()];
        // process in order of increasing below-set size: all predecessors done
        let mut order: Vec<usize> = (0..self.strata.len()).collect();
        order.sort_by_key(|&k| self.below[k].len());
        for k in order {
            let mut h = self.strata[k].closure_genus.clone();
            for &w in &self.below[k] {
                h -= hat[w].as_ref().expect("order respects the poset");
            }
            hat[k] = Some(h);
        }
        self.strata
            .iter()
            .zip(hat)
            .map(|(s, h)| (s.id.clone(), h.unwrap()))
            .collect()
    }

    pub fn hat_genus(&self, id: &str) -> Option<GenusPolynomial> {
        let _ = self.index.get(id)?;
        self.hat_genera().remove(id)
    }

    /// The stratified multiplicative formula. `override_monodromy` waives
    /// the per-stratum trivial-monodromy attestation.
    pub fn total_space_genus(
        &self,
        override_monodromy: bool,
    ) -> Result<GenusPolynomial, StrataError> {
        if !override_monodromy {
            for (k, s) in self.strata.iter().enumerate() {
                if k != self.generic && !s.monodromy_trivial {
                    return Err(StrataError::MonodromyNotAttested(s.id.clone()));
                }
            }
        }
        let hat = self.hat_genera();
        let mut total = &self.strata[self.generic].closure_genus * &self.generic_fiber;
        for (k, s) in self.strata.iter().enumerate() {
            if k == self.generic {
                continue;
            }
            let correction = &s.fiber_genus - &self.generic_fiber;
            total += &(&hat[&s.id] * &correction);
        }
        Ok(total)
    }
}

/// χ_y^c version of the total-space formula (strata data entered as
/// compactly supported genera).
pub fn total_space_chi_c(
    d: &StratifiedMapDescriptor,
    override_monodromy: bool,
) -> Result<GenusPolynomial, StrataError> {
    d.total_space_genus(override_monodromy)
}

/// χ_y version, for projective strata and fibers (where χ_y = χ_y^c); the
/// inclusion–exclusion is identical, only the meaning of the inputs changes.
pub fn total_space_chi(
    d: &StratifiedMapDescriptor,
    override_monodromy: bool,
) -> Result<GenusPolynomial, StrataError> {
    d.total_space_genus(override_monodromy)
}

/// Per-stratum data for the global-to-local stalk formula.
#[derive(Clone, Debug, Default)]
pub struct StalkSumDescriptor {
    pub strata: Vec<StalkStratum>,
}

#[derive(Clone, Debug)]
pub struct StalkStratum {
    /// χ_y^c of the open stratum.
    pub open_genus_c: GenusPolynomial,
    /// Stalk complex of the constructible sheaf at a point of the stratum.
    pub stalk: MixedHodgeComplex,
}

/// `Σ_S χ_y^c(S) · χ_y([stalk_S])`.
pub fn stalk_sum_chi(d: &StalkSumDescriptor) -> GenusPolynomial {
    let mut total = GenusPolynomial::zero();
    for s in &d.strata {
        total += &(&s.open_genus_c * &s.stalk.chi_y());
    }
    total
}
