//! Randomized laws of the ideal algebra.
//!
//! Each property here is an algebraic identity that holds for every input
//! in its stated domain, so any counterexample is a kernel bug, not a
//! sampling artifact. The generators keep instances small (at most six
//! variables, exponents at most two) to bound the decomposition boxes.

use std::collections::BTreeSet;

use proptest::prelude::*;

use monoideal::decomp::{
    alexander_dual, ass_witness_oracle, associated_primes, irreducible_decomposition,
    irreducible_decomposition_by_splitting, symbolic_power, IrreducibleComponent, PrimeIdeal,
};
use monoideal::{Monomial, MonomialIdeal};

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::from_exponents)
}

/// A nonzero monomial ideal; may be the unit ideal.
fn any_ideal(nvars: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nvars, max_exp), 1..=6)
        .prop_map(move |gens| MonomialIdeal::from_generators(nvars, gens))
}

/// A proper nonzero monomial ideal.
fn proper_ideal(nvars: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    any_ideal(nvars, max_exp).prop_filter("proper", |ideal| !ideal.is_unit())
}

/// A proper nonzero square-free ideal whose generator supports sit inside
/// `0..support_limit`.
fn squarefree_ideal(nvars: usize, support_limit: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::btree_set(0..support_limit, 1..=support_limit), 1..=6)
        .prop_map(move |supports| {
            MonomialIdeal::from_generators(
                nvars,
                supports.into_iter().map(|s| Monomial::from_support(s, nvars)),
            )
        })
}

/// A prime on a nonempty subset of `0..support_limit`.
fn prime(nvars: usize, support_limit: usize) -> impl Strategy<Value = PrimeIdeal> {
    prop::collection::btree_set(0..support_limit, 1..=support_limit)
        .prop_map(move |vars| PrimeIdeal::new(nvars, vars).expect("nonempty support"))
}

fn components_of(ideal: &MonomialIdeal, route: &str) -> BTreeSet<IrreducibleComponent> {
    let decomposition = match route {
        "corner" => irreducible_decomposition(ideal),
        _ => irreducible_decomposition_by_splitting(ideal),
    }
    .expect("decomposition in budget");
    decomposition.components.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Membership in `(I : v)` is exactly membership of the product in `I`.
    #[test]
    fn colon_membership_matches_multiplication(
        ideal in any_ideal(4, 2),
        v in monomial(4, 2),
        m in monomial(4, 2),
    ) {
        let colon = ideal.colon(&v).unwrap();
        let product = m.mul(&v).unwrap();
        prop_assert_eq!(colon.contains_monomial(&m), ideal.contains_monomial(&product));
    }

    /// Powers multiply additively: `I^a * I^b = I^(a+b)`.
    #[test]
    fn powers_multiply_additively(
        ideal in proper_ideal(3, 2),
        split in prop::sample::select(vec![(1u32, 1u32), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)]),
    ) {
        let (a, b) = split;
        let left = ideal.power(a).unwrap().product(&ideal.power(b).unwrap()).unwrap();
        prop_assert_eq!(left, ideal.power(a + b).unwrap());
    }

    /// The Alexander dual is an involution on proper square-free ideals.
    #[test]
    fn alexander_dual_is_an_involution(ideal in squarefree_ideal(5, 5)) {
        let twice = alexander_dual(&alexander_dual(&ideal).unwrap()).unwrap();
        prop_assert_eq!(twice, ideal);
    }

    /// Intersecting the components of either decomposition route recovers
    /// the ideal, and the two routes produce the same component set.
    #[test]
    fn decompositions_reconstruct_and_agree(ideal in proper_ideal(4, 2)) {
        let corner = components_of(&ideal, "corner");
        let splitting = components_of(&ideal, "splitting");
        prop_assert_eq!(&corner, &splitting);
        let factors: Vec<MonomialIdeal> =
            corner.iter().map(IrreducibleComponent::as_ideal).collect();
        prop_assert_eq!(MonomialIdeal::intersect_many(&factors).unwrap(), ideal);
    }

    /// The decomposition-based associated primes agree with the brute-force
    /// colon-witness oracle, and every reported witness really colons to
    /// its prime.
    #[test]
    fn associated_primes_match_the_witness_oracle(ideal in proper_ideal(4, 2)) {
        let from_decomposition = associated_primes(&ideal).unwrap();
        let witnessed = ass_witness_oracle(&ideal).unwrap();
        let from_oracle: BTreeSet<PrimeIdeal> = witnessed.keys().cloned().collect();
        prop_assert_eq!(&from_decomposition, &from_oracle);
        for (p, v) in &witnessed {
            prop_assert_eq!(ideal.colon(v).unwrap(), p.as_ideal());
        }
    }

    /// Ordinary powers sit inside symbolic powers.
    #[test]
    fn ordinary_powers_sit_inside_symbolic_powers(
        ideal in squarefree_ideal(5, 5),
        k in 1u32..=3,
    ) {
        let symbolic = symbolic_power(&ideal, k).unwrap();
        prop_assert!(symbolic.contains_ideal(&ideal.power(k).unwrap()));
    }

    /// Deletion and contraction at distinct variables commute.
    #[test]
    fn minors_at_distinct_variables_commute(
        ideal in proper_ideal(5, 2),
        i in 0usize..5,
        j in 0usize..5,
    ) {
        prop_assume!(i != j);
        let delete_then_contract = ideal.deletion(i).unwrap().contraction(j).unwrap();
        let contract_then_delete = ideal.contraction(j).unwrap().deletion(i).unwrap();
        prop_assert_eq!(delete_then_contract, contract_then_delete);
    }

    /// For a variable `h` outside the supports of `I` and `q`,
    /// `I ∩ (q + (h)) = (I ∩ q) + h I`.
    #[test]
    fn intersection_with_extended_prime_distributes(
        ideal in squarefree_ideal(6, 5),
        q in prime(6, 5),
    ) {
        let h = MonomialIdeal::principal(Monomial::var(5, 6));
        let left = ideal.intersect(&q.as_ideal().sum(&h).unwrap()).unwrap();
        let right = ideal.intersect(&q.as_ideal()).unwrap().sum(&h.product(&ideal).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Each factor of `I ∩ q` absorbs into `I`:
    /// `I^a (I ∩ q)^b ⊆ I^(a+1) (I ∩ q)^(b-1)`.
    #[test]
    fn intersection_factors_absorb_into_the_ideal(
        ideal in squarefree_ideal(5, 5),
        q in prime(5, 5),
        split in prop::sample::select(vec![(1u32, 1u32), (1, 2), (2, 1)]),
    ) {
        let (a, b) = split;
        let cap = ideal.intersect(&q.as_ideal()).unwrap();
        let lower = ideal.power(a).unwrap().product(&cap.power(b).unwrap()).unwrap();
        let higher = if b == 1 {
            ideal.power(a + 1).unwrap()
        } else {
            ideal.power(a + 1).unwrap().product(&cap.power(b - 1).unwrap()).unwrap()
        };
        prop_assert!(higher.contains_ideal(&lower));
    }
}
