//! Randomized invariant batteries. Where the engine has a sparse or
//! structured fast path, the oracle here uses an independent dense or
//! brute-force route.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use hodge_core::mhs::{poincare_dual, MixedHodgeComplex};
use hodge_core::motivic::{product_genus_check, VarietyClass};
use hodge_core::poly::{EPolynomial, ESpecialization, GenusPolynomial};
use hodge_core::strata::{StratifiedMapDescriptor, Stratum};
use hodge_core::yrat::{rational, YPoly, YRat};

/// Dense-array Laurent multiplication, the representation-independent
/// oracle for the sparse engine path.
fn dense_mul(a: &GenusPolynomial, b: &GenusPolynomial) -> GenusPolynomial {
    if a.is_zero() || b.is_zero() {
        return GenusPolynomial::zero();
    }
    let (alo, ahi) = a.exp_range().unwrap();
    let (blo, bhi) = b.exp_range().unwrap();
    let lo = alo + blo;
    let len = (ahi + bhi - lo + 1) as usize;
    let mut dense = vec![BigInt::zero(); len];
    for (ea, ca) in a.iter() {
        for (eb, cb) in b.iter() {
            dense[(ea + eb - lo) as usize] += ca * cb;
        }
    }
    GenusPolynomial::from_terms(
        dense
            .into_iter()
            .enumerate()
            .map(|(k, c)| (lo + k as i64, c)),
    )
}

fn genus_poly() -> impl Strategy<Value = GenusPolynomial> {
    proptest::collection::btree_map(-6i64..=6, -9i64..=9, 0..6)
        .prop_map(GenusPolynomial::from_terms)
}

fn e_poly() -> impl Strategy<Value = EPolynomial> {
    proptest::collection::btree_map((0i64..=4, 0i64..=4), -9i64..=9, 0..6)
        .prop_map(EPolynomial::from_terms)
}

fn mhs_table() -> impl Strategy<Value = MixedHodgeComplex> {
    proptest::collection::vec(((-2i64..=3), (0i64..=3), (0i64..=3), (0u64..=4)), 0..6)
        .prop_map(MixedHodgeComplex::from_entries)
}

proptest! {
    #[test]
    fn sparse_mul_matches_dense_oracle(a in genus_poly(), b in genus_poly()) {
        prop_assert_eq!(&a * &b, dense_mul(&a, &b));
    }

    #[test]
    fn ring_axioms(a in genus_poly(), b in genus_poly(), c in genus_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &GenusPolynomial::zero(), a.clone());
        prop_assert_eq!(&a * &GenusPolynomial::one(), a.clone());
        prop_assert_eq!(&a - &a, GenusPolynomial::zero());
    }

    #[test]
    fn e_specialization_is_ring_homomorphism(a in e_poly(), b in e_poly()) {
        for mode in [ESpecialization::ChiY, ESpecialization::Weight, ESpecialization::Euler] {
            prop_assert_eq!(
                (&a * &b).specialize(mode),
                a.specialize(mode) * b.specialize(mode)
            );
            prop_assert_eq!(
                (&a + &b).specialize(mode),
                a.specialize(mode) + b.specialize(mode)
            );
        }
    }

    #[test]
    fn duality_involution(p in genus_poly(), n in -4i64..=4) {
        prop_assert_eq!(poincare_dual(&poincare_dual(&p, n), n), p);
    }

    #[test]
    fn chi_y_factors_through_e_polynomial(t in mhs_table()) {
        let via_e = t.e_polynomial().unwrap().specialize(ESpecialization::ChiY);
        prop_assert_eq!(t.chi_y(), via_e);
    }

    #[test]
    fn direct_sum_additivity(a in mhs_table(), b in mhs_table()) {
        prop_assert_eq!(a.direct_sum(&b).chi_y(), a.chi_y() + b.chi_y());
    }

    #[test]
    fn yrat_reduction_confluent(
        coeffs in proptest::collection::btree_map(0i64..=5, (-6i64..=6, 1i64..=4), 0..5),
        pow in 0u32..4,
    ) {
        let mut num = YPoly::zero();
        for (e, (n, d)) in coeffs {
            num.add_term(e, rational(n, d));
        }
        let x = YRat::new(num, pow);
        prop_assert_eq!(x.reduce(), x.clone());
        prop_assert_eq!(x.reduce().reduce(), x.reduce());
    }

    #[test]
    fn motivic_product_multiplicativity(a in e_poly(), b in e_poly(), da in 0i64..3, db in 0i64..3) {
        let x = VarietyClass::atom("A", a, da, false, false);
        let y = VarietyClass::atom("B", b, db, false, false);
        let check = product_genus_check(&x, &y);
        prop_assert_eq!(check.lhs, check.rhs);
    }

    #[test]
    fn motivic_sum_additivity(a in e_poly(), b in e_poly()) {
        let x = VarietyClass::atom("A", a, 1, false, false);
        let y = VarietyClass::atom("B", b, 1, false, false);
        prop_assert_eq!(x.sum(&y).chi_y_c(), x.chi_y_c() + y.chi_y_c());
        prop_assert_eq!(x.diff(&y).chi_y_c(), x.chi_y_c() - y.chi_y_c());
    }
}

/// Random consistent strata posets: open genera are drawn first, closures
/// are their downward sums, so hat-genera must reproduce the open data and
/// the total-space formula must equal the brute-force stratum sum.
fn poset_case() -> impl Strategy<Value = (Vec<Vec<bool>>, Vec<GenusPolynomial>, Vec<GenusPolynomial>)> {
    (1usize..=8).prop_flat_map(|n| {
        (
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), n),
            proptest::collection::vec(genus_poly(), n),
            proptest::collection::vec(genus_poly(), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn stratified_total_matches_brute_force((adj, opens, fibers) in poset_case()) {
        let n = opens.len();
        let generic = n - 1;
        // edges i -> j (i strictly below j) only for i < j keeps it acyclic;
        // everything is forced below the generic stratum
        let mut below = vec![std::collections::BTreeSet::new(); n];
        for j in 0..n {
            for i in 0..j {
                if adj[j][i] {
                    below[j].insert(i);
                }
            }
        }
        for i in 0..generic {
            below[generic].insert(i);
        }
        // transitive closure for the closure-genus sums
        let mut closed: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
        for j in 0..n {
            let mut stack: Vec<usize> = below[j].iter().copied().collect();
            while let Some(w) = stack.pop() {
                if closed[j].insert(w) {
                    stack.extend(below[w].iter().copied());
                }
            }
        }

        let closure_of = |j: usize| {
            let mut acc = opens[j].clone();
            for &w in &closed[j] {
                acc += &opens[w];
            }
            acc
        };

        let strata: Vec<Stratum> = (0..n)
            .map(|j| {
                Stratum::new(format!("s{j}"), closure_of(j), fibers[j].clone())
                    .under(below[j].iter().map(|w| format!("s{w}")))
                    .trivial_monodromy()
            })
            .collect();
        let d = StratifiedMapDescriptor::new(strata, &format!("s{generic}"), fibers[generic].clone()).unwrap();

        // hat-genera recover the open genera
        let hat = d.hat_genera();
        for j in 0..n {
            prop_assert_eq!(&hat[&format!("s{j}")], &opens[j]);
        }
        // telescoping: Σ_{W ≤ S} hat(W) = closure(S)
        for j in 0..n {
            let mut acc = hat[&format!("s{j}")].clone();
            for &w in &closed[j] {
                acc += &hat[&format!("s{w}")];
            }
            prop_assert_eq!(acc, closure_of(j));
        }
        // total-space formula equals the brute-force additive sum
        let total = d.total_space_genus(false).unwrap();
        let mut brute = GenusPolynomial::zero();
        for j in 0..n {
            brute += &(&opens[j] * &fibers[j]);
        }
        prop_assert_eq!(total, brute);
    }

    #[test]
    fn single_stratum_reduces_to_multiplication(closure in genus_poly(), fiber in genus_poly()) {
        let s = Stratum::new("only", closure.clone(), fiber.clone());
        let d = StratifiedMapDescriptor::new(vec![s], "only", fiber.clone()).unwrap();
        prop_assert_eq!(d.total_space_genus(false).unwrap(), closure * fiber);
    }
}

#[test]
fn frozen_dense_oracle_example() {
    // (1 + (-y) + (-y)^2)(1 + y) expands to 1 + y^3
    let a = GenusPolynomial::from_terms([(0, 1), (1, -1), (2, 1)]);
    let b = GenusPolynomial::from_terms([(0, 1), (1, 1)]);
    let expect = GenusPolynomial::from_terms([(0, 1), (3, 1)]);
    assert_eq!(dense_mul(&a, &b), expect);
    assert_eq!(&a * &b, expect);
}
