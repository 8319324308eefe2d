//! Fixed instances with independently known answers.
//!
//! Unlike the randomized laws in `properties.rs`, every expected value in
//! this file was worked out by hand, so these tests pin concrete outputs,
//! not just internal consistency.

use std::collections::BTreeSet;

use monoideal::decomp::{
    alexander_dual, associated_primes, symbolic_power, PrimeIdeal,
};
use monoideal::graph::Graph;
use monoideal::ntf::{
    beta1, check_embedded_prime_lift, is_minimally_not_ntf, is_ntf_up_to,
};
use monoideal::{Monomial, MonomialIdeal};

fn squarefree(nvars: usize, supports: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        nvars,
        supports.iter().map(|s| Monomial::from_support(s.iter().copied(), nvars)),
    )
}

fn prime(nvars: usize, vars: &[usize]) -> PrimeIdeal {
    PrimeIdeal::new(nvars, vars.iter().copied()).expect("nonempty prime support")
}

fn primes(nvars: usize, list: &[&[usize]]) -> BTreeSet<PrimeIdeal> {
    list.iter().map(|vars| prime(nvars, vars)).collect()
}

/// The height-three primes whose intersection drives the eight-variable
/// construction, and the twelve generators that intersection works out to.
struct EightVariable {
    ideal: MonomialIdeal,
    primes: BTreeSet<PrimeIdeal>,
    q: PrimeIdeal,
    v: Monomial,
}

fn eight_variable() -> EightVariable {
    let ideal = squarefree(
        8,
        &[
            &[0, 1, 2],
            &[0, 1, 4],
            &[0, 2, 5],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 3],
            &[1, 2, 6],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 5],
            &[3, 4],
            &[3, 5, 6],
        ],
    );
    let primes = primes(
        8,
        &[&[0, 3, 6], &[0, 1, 3], &[1, 3, 5], &[1, 4, 5], &[2, 4, 5], &[2, 4, 6]],
    );
    let q = prime(8, &[0, 2, 6]);
    let v = Monomial::from_support([1, 2, 3, 4, 6], 8);
    EightVariable { ideal, primes, q, v }
}

#[test]
fn eight_variable_ideal_is_the_intersection_of_its_six_primes() {
    let data = eight_variable();
    let factors: Vec<MonomialIdeal> = data.primes.iter().map(PrimeIdeal::as_ideal).collect();
    assert_eq!(MonomialIdeal::intersect_many(&factors).unwrap(), data.ideal);
    assert_eq!(associated_primes(&data.ideal).unwrap(), data.primes);
}

#[test]
fn eight_variable_extension_splits_into_intersection_plus_multiple() {
    let data = eight_variable();
    let h = MonomialIdeal::principal(Monomial::var(7, 8));
    let extended = data.q.as_ideal().sum(&h).unwrap();
    let l = data.ideal.intersect(&extended).unwrap();
    let split =
        data.ideal.intersect(&data.q.as_ideal()).unwrap().sum(&h.product(&data.ideal).unwrap()).unwrap();
    assert_eq!(l, split);
}

#[test]
fn eight_variable_colon_of_the_square_reaches_the_maximal_ideal() {
    let data = eight_variable();
    let h = MonomialIdeal::principal(Monomial::var(7, 8));
    let l = data.ideal.intersect(&data.q.as_ideal().sum(&h).unwrap()).unwrap();
    let colon = l.power(2).unwrap().colon(&data.v).unwrap();
    assert_eq!(colon, prime(8, &[0, 1, 2, 3, 4, 5, 6, 7]).as_ideal());
    let maximal = prime(8, &[0, 1, 2, 3, 4, 5, 6, 7]);
    assert!(associated_primes(&l.power(2).unwrap()).unwrap().contains(&maximal));
}

#[test]
fn eight_variable_embedded_prime_drops_to_the_seven_variable_one() {
    let data = eight_variable();
    // v has no x8 factor, so theta = 0 and the lifted prime loses x8.
    assert!(check_embedded_prime_lift(&data.ideal, &data.q, 7, 2, 0, &data.v).unwrap());
    let squared = data.ideal.intersect(&data.q.as_ideal()).unwrap().power(2).unwrap();
    let seven = prime(8, &[0, 1, 2, 3, 4, 5, 6]);
    assert!(associated_primes(&squared).unwrap().contains(&seven));
}

fn edge_primes_of_cycle(n: usize) -> BTreeSet<PrimeIdeal> {
    (0..n).map(|i| prime(n, &[i, (i + 1) % n])).collect()
}

#[test]
fn odd_cycle_cover_ideals_acquire_only_the_maximal_prime() {
    for n in [3usize, 5, 7] {
        let cover = Graph::cycle(n).unwrap().cover_ideal().unwrap();
        let edge_primes = edge_primes_of_cycle(n);
        assert_eq!(associated_primes(&cover).unwrap(), edge_primes);
        let maximal = prime(n, &(0..n).collect::<Vec<_>>());
        for k in 2u32..=3 {
            let mut expected = edge_primes.clone();
            expected.insert(maximal.clone());
            assert_eq!(
                associated_primes(&cover.power(k).unwrap()).unwrap(),
                expected,
                "Ass of power {k} for the {n}-cycle cover ideal"
            );
        }
    }
}

#[test]
fn odd_cycle_cover_ideals_fail_minimally_with_unit_invariants() {
    for n in [3usize, 5, 7] {
        let cover = Graph::cycle(n).unwrap().cover_ideal().unwrap();
        let profile = is_minimally_not_ntf(&cover, 3).unwrap();
        assert!(profile.verdict.holds(), "{n}-cycle cover ideal");
        assert_eq!(profile.m, Some(1));
        assert_eq!(profile.beta1, 1);
        assert_eq!(beta1(&cover).unwrap(), 1);
    }
}

#[test]
fn five_cycle_cover_ideal_separates_symbolic_from_ordinary_at_two() {
    let cover = Graph::cycle(5).unwrap().cover_ideal().unwrap();
    let all_five = Monomial::from_support(0..5, 5);
    assert!(symbolic_power(&cover, 2).unwrap().contains_monomial(&all_five));
    assert!(!cover.power(2).unwrap().contains_monomial(&all_five));
}

#[test]
fn bipartite_edge_and_cover_ideals_stay_torsion_free() {
    let mut graphs = vec![
        Graph::path(2).unwrap(),
        Graph::path(5).unwrap(),
        Graph::path(7).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::cycle(8).unwrap(),
        Graph::star(4).unwrap(),
        Graph::star(6).unwrap(),
    ];
    for seed in 0..4 {
        graphs.push(Graph::random_tree(7, seed).unwrap());
    }
    for graph in graphs {
        assert!(graph.is_bipartite());
        let edge = graph.edge_ideal();
        assert!(is_ntf_up_to(&edge, 3).unwrap().is_ntf(), "edge ideal of {:?}", graph.edges());
        let cover = graph.cover_ideal().unwrap();
        assert!(is_ntf_up_to(&cover, 3).unwrap().is_ntf(), "cover ideal of {:?}", graph.edges());
    }
}

#[test]
fn dominating_ideal_is_the_dual_of_the_neighborhood_ideal() {
    let mut graphs = Vec::new();
    for n in 2usize..=8 {
        graphs.push(Graph::path(n).unwrap());
        graphs.push(Graph::star(n).unwrap());
        if n >= 3 {
            graphs.push(Graph::cycle(n).unwrap());
        }
        if n >= 2 {
            graphs.push(Graph::random_tree(n, 42 + n as u64).unwrap());
        }
    }
    for graph in graphs {
        let di = graph.dominating_ideal().unwrap();
        assert_eq!(di, alexander_dual(&graph.neighborhood_ideal()).unwrap());
        let gamma = graph.domination_number().unwrap();
        let least_degree =
            di.generators().iter().map(|g| g.degree() as u32).min().expect("nonzero ideal");
        assert_eq!(gamma, least_degree, "domination number of {:?}", graph.edges());
    }
}

#[test]
fn known_domination_numbers_of_small_families() {
    // gamma(P_n) = ceil(n / 3), gamma(C_n) = ceil(n / 3), gamma(star) = 1.
    for n in 2usize..=8 {
        assert_eq!(
            Graph::path(n).unwrap().domination_number().unwrap(),
            (n as u32).div_ceil(3),
            "path on {n}"
        );
        assert_eq!(Graph::star(n).unwrap().domination_number().unwrap(), 1, "star on {n}");
    }
    for n in 3usize..=8 {
        assert_eq!(
            Graph::cycle(n).unwrap().domination_number().unwrap(),
            (n as u32).div_ceil(3),
            "cycle on {n}"
        );
    }
}
