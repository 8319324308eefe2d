//! Irreducible decomposition, associated primes, Alexander duality,
//! symbolic powers, and an independent witness oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// How many exponent vectors the witness oracle will scan before giving up.
pub const ORACLE_BUDGET: u128 = 10_000_000;

/// How many exponent vectors the corner scan will visit before giving up.
pub const DECOMPOSITION_BUDGET: u128 = 10_000_000;

/// A monomial prime ideal: the ideal generated by a nonempty set of
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    nvars: usize,
    vars: BTreeSet<usize>,
}

impl PrimeIdeal {
    pub fn new<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        if vars.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = vars.iter().find(|&&v| v >= nvars) {
            return Err(Error::IndexOutOfRange { index: bad, nvars });
        }
        Ok(PrimeIdeal { nvars, vars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.vars.contains(&index)
    }

    /// Set-theoretic comparison: does this prime contain `other` as an
    /// ideal? For monomial primes that is just variable-set containment.
    pub fn contains(&self, other: &PrimeIdeal) -> bool {
        self.vars.is_superset(&other.vars)
    }

    /// The prime as a plain monomial ideal.
    pub fn as_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.nvars,
            self.vars.iter().map(|&v| Monomial::var(v, self.nvars)),
        )
    }

    /// The ordinary power `p^k` written directly: all degree-`k` monomials
    /// in the prime's variables.
    pub fn power_ideal(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let vars: Vec<usize> = self.vars.iter().copied().collect();
        let mut gens = Vec::new();
        let mut exps = alloc::vec![0u32; vars.len()];
        compositions(k, vars.len(), 0, &mut exps, &mut |exps| {
            let mut full = alloc::vec![0u32; self.nvars];
            for (slot, &v) in vars.iter().enumerate() {
                full[v] = exps[slot];
            }
            gens.push(Monomial::from_exponents(full));
        });
        Ok(MonomialIdeal::from_generators(self.nvars, gens))
    }

    /// Removes one variable; `None` when nothing is left.
    pub fn without_var(&self, index: usize) -> Option<PrimeIdeal> {
        if !self.vars.contains(&index) {
            return Some(self.clone());
        }
        let mut vars = self.vars.clone();
        vars.remove(&index);
        if vars.is_empty() {
            None
        } else {
            Some(PrimeIdeal { nvars: self.nvars, vars })
        }
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, ")")
    }
}

/// Writes all weak compositions of `total` into `slots` parts into `exps`
/// and reports each one.
fn compositions(total: u32, slots: usize, at: usize, exps: &mut [u32], emit: &mut dyn FnMut(&[u32])) {
    if at + 1 == slots {
        exps[at] = total;
        emit(exps);
        return;
    }
    for take in 0..=total {
        exps[at] = take;
        compositions(total - take, slots, at + 1, exps, emit);
    }
}

/// An irreducible monomial ideal `(x_{i}^{a_i} : i in S)`, stored as the
/// map from variable index to exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    nvars: usize,
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(nvars: usize, powers: BTreeMap<usize, u32>) -> Result<Self> {
        if powers.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (&v, &e) in &powers {
            if v >= nvars {
                return Err(Error::IndexOutOfRange { index: v, nvars });
            }
            if e == 0 {
                return Err(Error::InvalidArgument("irreducible component exponents must be >= 1"));
            }
        }
        Ok(IrreducibleComponent { nvars, powers })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    /// The radical: the prime on the component's variables.
    pub fn radical(&self) -> PrimeIdeal {
        PrimeIdeal::new(self.nvars, self.powers.keys().copied())
            .expect("component has at least one variable")
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.nvars,
            self.powers.iter().map(|(&v, &e)| Monomial::var_power(v, e, self.nvars)),
        )
    }

    /// Membership without building the ideal: `m` lies in the component
    /// exactly when some `x_i^{a_i}` divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|(&v, &e)| m.exponent(v) >= e)
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&v, &e)) in self.powers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if e == 1 {
                write!(f, "x{}", v + 1)?;
            } else {
                write!(f, "x{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

/// An irredundant irreducible decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Components in canonical order (sorted by their variable/exponent
    /// maps).
    pub components: Vec<IrreducibleComponent>,
    /// Always true for decompositions produced here; recorded so reports
    /// can state it explicitly.
    pub irredundant: bool,
}

/// Computes the unique irredundant irreducible decomposition of a proper
/// nonzero monomial ideal by a corner scan over the exponent box.
///
/// Write `M_i` for the largest exponent of `x_i` among the generators.
/// Every irreducible component `(x_i^{a_i} : i ∈ S)` of the irredundant
/// decomposition has `a_i <= M_i`, and pairs `(S, a)` correspond to the
/// monomials `u` in the box `0 <= u_i <= M_i` via `u_i = a_i - 1` on `S`
/// and `u_j = M_j` off `S`. The component belongs to the irredundant
/// decomposition exactly when `u` lies outside the ideal while every
/// `u * x_i` with `i ∈ S` lies inside:
///
/// * those two facts force every generator into the component and pin the
///   component down as the one a separating monomial escapes, so the
///   component must appear in any irreducible decomposition;
/// * conversely an irredundant component's corner `u` escapes the
///   component (hence the ideal), and a failure of `u * x_i ∈ I` would
///   produce a second component contained in this one, contradicting
///   irredundancy.
///
/// So one pass over the box emits exactly the irredundant components, with
/// no recursion and no pruning. The scan refuses to start when the box
/// holds more than [`DECOMPOSITION_BUDGET`] monomials. The classical
/// splitting recursion is kept alongside as
/// [`irreducible_decomposition_by_splitting`]; the two routes are compared
/// on every desk-scale corpus in the test suites.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let nvars = ideal.nvars();
    let gens: Vec<&[u32]> = ideal.generators().iter().map(Monomial::exponents).collect();
    let mut box_max = alloc::vec![0u32; nvars];
    for g in &gens {
        for (slot, &e) in box_max.iter_mut().zip(g.iter()) {
            *slot = (*slot).max(e);
        }
    }
    let mut candidates: u128 = 1;
    for &b in &box_max {
        candidates = candidates.saturating_mul(u128::from(b) + 1);
    }
    if candidates > DECOMPOSITION_BUDGET {
        return Err(Error::OracleBudget { needed: candidates, cap: DECOMPOSITION_BUDGET });
    }

    fn contains(gens: &[&[u32]], u: &[u32]) -> bool {
        gens.iter().any(|g| g.iter().zip(u).all(|(a, b)| a <= b))
    }

    let mut components: BTreeSet<Vec<(usize, u32)>> = BTreeSet::new();
    let mut u = alloc::vec![0u32; nvars];
    loop {
        if !contains(&gens, &u) {
            let mut corner = true;
            let mut support: Vec<(usize, u32)> = Vec::new();
            for i in 0..nvars {
                if u[i] >= box_max[i] {
                    continue;
                }
                u[i] += 1;
                let inside = contains(&gens, &u);
                u[i] -= 1;
                if !inside {
                    corner = false;
                    break;
                }
                support.push((i, u[i] + 1));
            }
            if corner && !support.is_empty() {
                components.insert(support);
            }
        }
        let mut at = nvars;
        loop {
            if at == 0 {
                let components = components
                    .into_iter()
                    .map(|powers| {
                        IrreducibleComponent::new(nvars, powers.into_iter().collect())
                            .expect("corner components are proper")
                    })
                    .collect();
                return Ok(Decomposition { components, irredundant: true });
            }
            at -= 1;
            if u[at] < box_max[at] {
                u[at] += 1;
                break;
            }
            u[at] = 0;
        }
    }
}

/// The classical splitting recursion for irreducible decomposition, kept
/// as an independent route to cross-check [`irreducible_decomposition`].
///
/// The recursion picks the first generator in canonical order that is not a
/// pure variable power, splits off the power of its lowest variable
/// (`m = m1 * m2` with `m1 = x_i^{a_i}`), and uses
/// `I = (I + (m1)) ∩ (I + (m2))`. Leaves, whose generators are all pure
/// powers, are irreducible. Redundant components are then eliminated by one
/// scan in canonical order; since the irredundant decomposition is unique,
/// the scan order cannot change the result, only how it is reached.
pub fn irreducible_decomposition_by_splitting(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let nvars = ideal.nvars();
    let mut leaves: BTreeSet<Vec<(usize, u32)>> = BTreeSet::new();
    let mut visited: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack: Vec<Vec<Monomial>> = alloc::vec![ideal.generators().to_vec()];

    while let Some(gens) = stack.pop() {
        if !visited.insert(flatten(&gens)) {
            continue;
        }
        match gens.iter().position(|g| g.support().len() > 1) {
            None => {
                leaves.insert(
                    gens.iter()
                        .map(|g| {
                            let v = *g.support().iter().next().expect("pure power has support");
                            (v, g.exponent(v))
                        })
                        .collect(),
                );
            }
            Some(at) => {
                let m = &gens[at];
                let i = *m.support().iter().next().expect("nonunit generator");
                let m1 = Monomial::var_power(i, m.exponent(i), nvars);
                let m2 = m.checked_div(&m1).expect("m1 divides m");
                stack.push(with_generator(&gens, m2));
                stack.push(with_generator(&gens, m1));
            }
        }
    }

    let candidates: Vec<IrreducibleComponent> = leaves
        .into_iter()
        .map(|powers| {
            IrreducibleComponent::new(nvars, powers.into_iter().collect())
                .expect("leaf components are proper")
        })
        .collect();
    let components = prune_redundant(candidates);
    Ok(Decomposition { components, irredundant: true })
}

fn flatten(gens: &[Monomial]) -> Vec<u32> {
    let mut key = Vec::with_capacity(gens.len() * gens.first().map_or(0, Monomial::nvars));
    for g in gens {
        key.extend_from_slice(g.exponents());
    }
    key
}

/// Adds `g` to a canonical minimal generator list, keeping it canonical.
fn with_generator(gens: &[Monomial], g: Monomial) -> Vec<Monomial> {
    if gens.iter().any(|e| e.divides(&g)) {
        return gens.to_vec();
    }
    let mut out: Vec<Monomial> = gens.iter().filter(|e| !g.divides(e)).cloned().collect();
    let at = out.partition_point(|e| e.canonical_cmp(&g) == core::cmp::Ordering::Less);
    out.insert(at, g);
    out
}

/// Deletes the components whose removal does not change the intersection,
/// scanning in canonical order.
///
/// Component `Q_j` is redundant among the survivors exactly when the
/// largest monomial outside `Q_j` (exponent `a_i - 1` on the component's
/// variables, a shared upper bound elsewhere) already escapes some other
/// survivor: that happens iff the intersection of the others is contained
/// in `Q_j`. This tests containment without materializing intersections.
fn prune_redundant(candidates: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    if candidates.len() <= 1 {
        return candidates;
    }
    let nvars = candidates[0].nvars();
    let bound = candidates
        .iter()
        .flat_map(|c| c.powers().values().copied())
        .max()
        .unwrap_or(1);
    let mut alive = alloc::vec![true; candidates.len()];
    for j in 0..candidates.len() {
        let mut escape = alloc::vec![bound; nvars];
        for (&v, &e) in candidates[j].powers() {
            escape[v] = e - 1;
        }
        let escape = Monomial::from_exponents(escape);
        let redundant = (0..candidates.len())
            .any(|i| i != j && alive[i] && !candidates[i].contains_monomial(&escape));
        if redundant {
            alive[j] = false;
        }
    }
    candidates
        .into_iter()
        .zip(alive)
        .filter(|(_, keep)| *keep)
        .map(|(c, _)| c)
        .collect()
}

/// Associated primes: the radicals of the irredundant irreducible
/// components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeIdeal>> {
    let decomposition = irreducible_decomposition(ideal)?;
    Ok(decomposition.components.iter().map(IrreducibleComponent::radical).collect())
}

/// The inclusion-minimal members of the associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeIdeal>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && p.contains(q)))
        .cloned()
        .collect())
}

/// The primes in `Ass` that are not minimal.
pub fn embedded_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeIdeal>> {
    let ass = associated_primes(ideal)?;
    let min: BTreeSet<PrimeIdeal> = ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && p.contains(q)))
        .cloned()
        .collect();
    Ok(ass.difference(&min).cloned().collect())
}

/// The Alexander dual of a proper nonzero square-free ideal: the
/// intersection of the primes on the supports of the generators. Its
/// generators are exactly the minimal transversals of those supports, and
/// the operation is an involution.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let primes: Vec<MonomialIdeal> = ideal
        .generators()
        .iter()
        .map(|g| {
            PrimeIdeal::new(ideal.nvars(), g.support())
                .expect("nonunit generator has support")
                .as_ideal()
        })
        .collect();
    MonomialIdeal::intersect_many(&primes)
}

/// The `k`-th symbolic power of a square-free ideal: the intersection of
/// `p^k` over the minimal primes `p`. Only defined here for square-free
/// ideals, where the minimal primes carry all associated primes of the
/// ideal itself.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let minimal = minimal_primes(ideal)?;
    let powers: Vec<MonomialIdeal> =
        minimal.iter().map(|p| p.power_ideal(k)).collect::<Result<_>>()?;
    MonomialIdeal::intersect_many(&powers)
}

/// Recomputes the associated primes of a proper nonzero ideal from the
/// definition, returning a witness monomial `v` with `(I : v) = p` for each
/// prime found.
///
/// Candidates range over the exponent box of the generator lcm; exponents
/// beyond that box cannot change any colon. The scan refuses to start when
/// the box holds more than [`ORACLE_BUDGET`] candidates.
pub fn ass_witness_oracle(ideal: &MonomialIdeal) -> Result<BTreeMap<PrimeIdeal, Monomial>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let nvars = ideal.nvars();
    let mut box_max = alloc::vec![0u32; nvars];
    for g in ideal.generators() {
        for (slot, &e) in box_max.iter_mut().zip(g.exponents()) {
            *slot = (*slot).max(e);
        }
    }
    let mut needed: u128 = 1;
    for &b in &box_max {
        needed = needed.saturating_mul(u128::from(b) + 1);
    }
    if needed > ORACLE_BUDGET {
        return Err(Error::OracleBudget { needed, cap: ORACLE_BUDGET });
    }

    let mut found: BTreeMap<PrimeIdeal, Monomial> = BTreeMap::new();
    let mut exps = alloc::vec![0u32; nvars];
    loop {
        let v = Monomial::from_exponents(exps.clone());
        if !ideal.contains_monomial(&v) {
            let colon = ideal.colon(&v)?;
            if let Some(prime) = as_prime(&colon) {
                found.entry(prime).or_insert(v);
            }
        }
        // Mixed-radix increment over the box, lexicographic from the last
        // variable.
        let mut at = nvars;
        loop {
            if at == 0 {
                return Ok(found);
            }
            at -= 1;
            if exps[at] < box_max[at] {
                exps[at] += 1;
                break;
            }
            exps[at] = 0;
        }
    }
}

/// Reads a monomial ideal as a prime if it is one: proper, nonzero, and
/// generated by single variables.
pub fn as_prime(ideal: &MonomialIdeal) -> Option<PrimeIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return None;
    }
    let mut vars = BTreeSet::new();
    for g in ideal.generators() {
        if g.degree() != 1 {
            return None;
        }
        vars.extend(g.support());
    }
    Some(PrimeIdeal { nvars: ideal.nvars(), vars })
}

/// Checks that no listed ideal contains the intersection of the others, by
/// direct intersection and containment tests.
pub fn irredundancy_check(components: &[MonomialIdeal]) -> Result<bool> {
    if components.is_empty() {
        return Err(Error::EmptyInput);
    }
    let nvars = components[0].nvars();
    for j in 0..components.len() {
        let mut rest = MonomialIdeal::unit(nvars);
        for (i, other) in components.iter().enumerate() {
            if i != j {
                rest = rest.intersect(other)?;
            }
        }
        if components[j].contains_ideal(&rest) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let nvars = gens.first().map_or(0, |g| g.len());
        MonomialIdeal::from_generators(nvars, gens.iter().map(|g| m(g)))
    }

    fn prime(nvars: usize, vars: &[usize]) -> PrimeIdeal {
        PrimeIdeal::new(nvars, vars.iter().copied()).unwrap()
    }

    #[test]
    fn splits_mixed_generators() {
        // (x1^2, x1*x2) = (x1) ∩ (x1^2, x2)
        let d = irreducible_decomposition(&ideal(&[&[2, 0], &[1, 1]])).unwrap();
        assert!(d.irredundant);
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].powers(), &BTreeMap::from([(0, 1)]));
        assert_eq!(d.components[1].powers(), &BTreeMap::from([(0, 2), (1, 1)]));
    }

    #[test]
    fn decomposes_an_edge_square() {
        // (x1*x2) = (x1) ∩ (x2)
        let d = irreducible_decomposition(&ideal(&[&[1, 1]])).unwrap();
        let radicals: Vec<PrimeIdeal> =
            d.components.iter().map(IrreducibleComponent::radical).collect();
        assert_eq!(radicals, vec![prime(2, &[0]), prime(2, &[1])]);
    }

    #[test]
    fn irreducible_input_is_its_own_decomposition() {
        let d = irreducible_decomposition(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].powers(), &BTreeMap::from([(0, 2), (1, 3)]));
    }

    #[test]
    fn zero_and_unit_are_rejected() {
        assert_eq!(irreducible_decomposition(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn corner_scan_and_splitting_agree() {
        let samples = [
            ideal(&[&[2, 0], &[1, 1]]),
            ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            ideal(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]),
            ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).power(2).unwrap(),
            ideal(&[&[3, 0], &[0, 2]]),
            ideal(&[&[1, 0, 0]]),
        ];
        for i in &samples {
            assert_eq!(
                irreducible_decomposition(i).unwrap(),
                irreducible_decomposition_by_splitting(i).unwrap(),
                "routes disagree on {i}"
            );
        }
    }

    #[test]
    fn decomposition_intersects_back_to_the_ideal() {
        let i = ideal(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]);
        let d = irreducible_decomposition(&i).unwrap();
        let parts: Vec<MonomialIdeal> =
            d.components.iter().map(IrreducibleComponent::as_ideal).collect();
        assert_eq!(MonomialIdeal::intersect_many(&parts).unwrap(), i);
        let as_ideals: Vec<MonomialIdeal> =
            d.components.iter().map(IrreducibleComponent::as_ideal).collect();
        assert!(irredundancy_check(&as_ideals).unwrap());
    }

    #[test]
    fn associated_primes_of_a_power_can_grow() {
        // J = cover ideal of the triangle; (x1, x2, x3) embeds in Ass(J^2).
        let j = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let ass1 = associated_primes(&j).unwrap();
        assert_eq!(
            ass1,
            BTreeSet::from([prime(3, &[0, 1]), prime(3, &[0, 2]), prime(3, &[1, 2])])
        );
        let ass2 = associated_primes(&j.power(2).unwrap()).unwrap();
        let mut expected = ass1.clone();
        expected.insert(prime(3, &[0, 1, 2]));
        assert_eq!(ass2, expected);
        assert_eq!(
            embedded_primes(&j.power(2).unwrap()).unwrap(),
            BTreeSet::from([prime(3, &[0, 1, 2])])
        );
    }

    #[test]
    fn minimal_primes_drop_embedded_ones() {
        let j = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = j.power(2).unwrap();
        assert_eq!(minimal_primes(&sq).unwrap(), associated_primes(&j).unwrap());
    }

    #[test]
    fn dual_of_an_edge_pair() {
        // (x1*x2, x3*x4)^∨ = (x1*x3, x1*x4, x2*x3, x2*x4)
        let i = ideal(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let dual = alexander_dual(&i).unwrap();
        assert_eq!(
            dual.generators(),
            &[m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 1, 0]), m(&[0, 1, 0, 1])]
        );
        assert_eq!(alexander_dual(&dual).unwrap(), i);
    }

    #[test]
    fn dual_requires_squarefree_proper() {
        assert_eq!(alexander_dual(&ideal(&[&[2, 0]])), Err(Error::NotSquareFree));
        assert_eq!(alexander_dual(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        assert_eq!(alexander_dual(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn symbolic_power_of_a_prime_is_its_power() {
        let p = prime(3, &[0, 2]).as_ideal();
        assert_eq!(symbolic_power(&p, 3).unwrap(), p.power(3).unwrap());
    }

    #[test]
    fn symbolic_square_of_triangle_cover_exceeds_the_square() {
        let j = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let symbolic = symbolic_power(&j, 2).unwrap();
        let ordinary = j.power(2).unwrap();
        assert!(symbolic.contains_ideal(&ordinary));
        assert_ne!(symbolic, ordinary);
        assert!(symbolic.contains_monomial(&m(&[1, 1, 1])));
        assert!(!ordinary.contains_monomial(&m(&[1, 1, 1])));
    }

    #[test]
    fn prime_power_ideal_lists_compositions() {
        let p2 = prime(3, &[0, 2]).power_ideal(2).unwrap();
        assert_eq!(p2.generators(), &[m(&[2, 0, 0]), m(&[1, 0, 1]), m(&[0, 0, 2])]);
    }

    #[test]
    fn oracle_agrees_with_decomposition() {
        let j = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = j.power(2).unwrap();
        let from_oracle: BTreeSet<PrimeIdeal> =
            ass_witness_oracle(&sq).unwrap().into_keys().collect();
        assert_eq!(from_oracle, associated_primes(&sq).unwrap());
    }

    #[test]
    fn oracle_witnesses_actually_witness() {
        let i = ideal(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]);
        for (p, v) in ass_witness_oracle(&i).unwrap() {
            assert_eq!(i.colon(&v).unwrap(), p.as_ideal());
        }
    }

    #[test]
    fn oracle_budget_is_enforced() {
        let big = ideal(&[&[200, 0, 0, 0], &[0, 200, 0, 0], &[0, 0, 200, 0], &[0, 0, 0, 200]]);
        match ass_witness_oracle(&big) {
            Err(Error::OracleBudget { needed, cap }) => {
                assert!(needed > cap);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn irredundancy_check_spots_redundant_lists() {
        let p1 = prime(2, &[0]).as_ideal();
        let p2 = prime(2, &[1]).as_ideal();
        let both = prime(2, &[0, 1]).as_ideal();
        assert!(irredundancy_check(&[p1.clone(), p2.clone()]).unwrap());
        assert!(!irredundancy_check(&[p1, p2, both]).unwrap());
        assert_eq!(irredundancy_check(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn component_display_shows_powers() {
        let c = IrreducibleComponent::new(3, BTreeMap::from([(0, 2), (2, 1)])).unwrap();
        assert_eq!(c.to_string(), "x1^2, x3");
        assert_eq!(c.radical(), prime(3, &[0, 2]));
    }
}
