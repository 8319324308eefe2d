//! Seeded rejection samplers for identity-checker instances.
//!
//! Random instances are drawn from pinned distributions and kept only when
//! they satisfy the hypotheses of the checker they are destined for, so a
//! fixed seed always yields the same accepted instances.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::Rng;

use crate::decomp::{associated_primes, PrimeIdeal};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ntf::{build_construction_l, product_hypotheses_hold, ConstructionL};

/// A square-free monomial with nonempty support drawn from the listed
/// variables (each subset equally likely).
pub fn random_squarefree_monomial<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    pool: &[usize],
) -> Monomial {
    assert!(!pool.is_empty() && pool.len() < 32);
    let mask = rng.random_range(1u32..(1u32 << pool.len()));
    Monomial::from_support(
        pool.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v),
        nvars,
    )
}

/// A square-free ideal with `1..=max_gens` random generators on the pool;
/// never zero and never the unit ideal.
pub fn random_squarefree_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    pool: &[usize],
    max_gens: usize,
) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    MonomialIdeal::from_generators(
        nvars,
        (0..count).map(|_| random_squarefree_monomial(rng, nvars, pool)),
    )
}

/// A random prime on a nonempty subset of the pool.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R, nvars: usize, pool: &[usize]) -> PrimeIdeal {
    let support = random_squarefree_monomial(rng, nvars, pool).support();
    PrimeIdeal::new(nvars, support).expect("nonempty support")
}

/// An ideal-and-prime pair accepted for the product identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductInstance {
    pub base: MonomialIdeal,
    pub q: PrimeIdeal,
}

/// Draws pairs `(I, q)` on three to five variables until `count` of them
/// satisfy the product-identity hypotheses at the horizon, or the attempt
/// budget runs out.
pub fn sample_product_instances<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    horizon: u32,
    max_attempts: usize,
) -> Result<Vec<ProductInstance>> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_attempts {
        if out.len() == count {
            break;
        }
        let nvars = rng.random_range(3..=5usize);
        let pool: Vec<usize> = (0..nvars).collect();
        let base = random_squarefree_ideal(rng, nvars, &pool, 4);
        if base.is_unit() {
            continue;
        }
        let q = random_prime(rng, nvars, &pool);
        if product_hypotheses_hold(&base, &q, horizon)? {
            out.push(ProductInstance { base, q });
        }
    }
    Ok(out)
}

/// Draws intersection constructions `L = I ∩ (q, h)` on six variables,
/// with `h` on one or two fresh variables, keeping those whose hypotheses
/// all hold.
pub fn sample_construction_instances<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    horizon: u32,
    max_attempts: usize,
) -> Result<Vec<ConstructionL>> {
    let nvars = 6usize;
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_attempts {
        if out.len() == count {
            break;
        }
        let h_count = rng.random_range(1..=2usize);
        let h_vars: Vec<usize> = (nvars - h_count..nvars).collect();
        let pool: Vec<usize> = (0..nvars - h_count).collect();
        let base = random_squarefree_ideal(rng, nvars, &pool, 4);
        if base.is_unit() {
            continue;
        }
        let q = random_prime(rng, nvars, &pool);
        let h = Monomial::from_support(h_vars.iter().copied(), nvars);
        let construction = build_construction_l(&base, &q, &h, horizon)?;
        if construction.hypotheses.all_pass() {
            out.push(construction);
        }
    }
    Ok(out)
}

/// An instance accepted for the prime-lifting check: a base ideal, a
/// prime, and a fresh variable with
/// `Ass(I ∩ (q, x_r)) = Ass(I) ∪ {(q, x_r)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftInstance {
    pub base: MonomialIdeal,
    pub q: PrimeIdeal,
    pub r: usize,
}

/// Draws five-variable lift instances with `x5` as the fresh variable,
/// keeping those whose associated primes decompose as the lifting check
/// requires.
pub fn sample_lift_instances<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_attempts: usize,
) -> Result<Vec<LiftInstance>> {
    let nvars = 5usize;
    let r = 4usize;
    let pool: Vec<usize> = (0..nvars - 1).collect();
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_attempts {
        if out.len() == count {
            break;
        }
        let base = random_squarefree_ideal(rng, nvars, &pool, 4);
        if base.is_unit() {
            continue;
        }
        let q = random_prime(rng, nvars, &pool);
        let mut qr_vars: BTreeSet<usize> = q.vars().clone();
        qr_vars.insert(r);
        let qr = PrimeIdeal::new(nvars, qr_vars)?;
        let l = base.intersect(&qr.as_ideal())?;
        let mut expected = associated_primes(&base)?;
        expected.insert(qr);
        if associated_primes(&l)? == expected {
            out.push(LiftInstance { base, q, r });
        }
    }
    Ok(out)
}
