//! Normal torsion-freeness up to a horizon, minimality profiles, and the
//! product, colon-tower, and embedded-prime identity checkers.
//!
//! An ideal is normally torsion-free when the associated primes of every
//! power stay inside the associated primes of the ideal itself. That is a
//! statement about infinitely many powers, so the kernel never claims it
//! outright: every verdict here is explicitly "up to `k`" for the horizon
//! the caller chose.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::decomp::{
    as_prime, associated_primes, minimal_primes, symbolic_power, irredundancy_check, PrimeIdeal,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Associated-prime data for one power of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerAssEntry {
    pub k: u32,
    /// `Ass(I^k)`.
    pub ass: BTreeSet<PrimeIdeal>,
    /// `Ass(I^k) \ Ass(I)`, the primes that disqualify torsion-freeness.
    pub new_primes: BTreeSet<PrimeIdeal>,
    /// For square-free ideals, whether `I^k` equals the `k`-th symbolic
    /// power; `None` otherwise. Always agrees with `new_primes.is_empty()`.
    pub power_eq_symbolic: Option<bool>,
}

/// The outcome of a torsion-freeness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NtfVerdict {
    /// No power up to the horizon acquired a new associated prime.
    NtfUpTo(u32),
    /// The first power whose associated primes leave `Ass(I)`.
    FailsAt(u32),
}

impl fmt::Display for NtfVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NtfVerdict::NtfUpTo(k) => write!(f, "NTF-up-to-{k}"),
            NtfVerdict::FailsAt(k) => write!(f, "fails-at-{k}"),
        }
    }
}

/// Full record of a torsion-freeness scan: the per-power associated primes
/// up to the horizon or the first failure, whichever comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtfReport {
    pub ideal: MonomialIdeal,
    pub horizon: u32,
    pub per_k: Vec<PowerAssEntry>,
    pub verdict: NtfVerdict,
}

impl NtfReport {
    pub fn is_ntf(&self) -> bool {
        matches!(self.verdict, NtfVerdict::NtfUpTo(_))
    }

    /// The entry at the failing power, if the scan failed.
    pub fn failure(&self) -> Option<&PowerAssEntry> {
        match self.verdict {
            NtfVerdict::NtfUpTo(_) => None,
            NtfVerdict::FailsAt(_) => self.per_k.last(),
        }
    }
}

/// Scans `Ass(I^k)` for `k = 1..=horizon`, stopping at the first power that
/// acquires a prime outside `Ass(I)`.
///
/// For square-free ideals the scan also compares each power with the
/// matching symbolic power; the two verdicts are equivalent and both are
/// recorded, so a disagreement is a kernel bug and reported as such.
pub fn is_ntf_up_to(ideal: &MonomialIdeal, horizon: u32) -> Result<NtfReport> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be >= 1"));
    }
    let base_ass = associated_primes(ideal)?;
    let squarefree = ideal.is_squarefree();
    let mut per_k = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=horizon {
        if k > 1 {
            power = power.product(ideal)?;
        }
        let ass = associated_primes(&power)?;
        let new_primes: BTreeSet<PrimeIdeal> = ass.difference(&base_ass).cloned().collect();
        let power_eq_symbolic = if squarefree {
            let symbolic = symbolic_power(ideal, k)?;
            let eq = symbolic == power;
            if eq != new_primes.is_empty() {
                return Err(Error::SelfCheck(
                    "symbolic-power comparison disagrees with associated-prime scan",
                ));
            }
            Some(eq)
        } else {
            None
        };
        let failed = !new_primes.is_empty();
        per_k.push(PowerAssEntry { k, ass, new_primes, power_eq_symbolic });
        if failed {
            return Ok(NtfReport {
                ideal: ideal.clone(),
                horizon,
                per_k,
                verdict: NtfVerdict::FailsAt(k),
            });
        }
    }
    Ok(NtfReport { ideal: ideal.clone(), horizon, per_k, verdict: NtfVerdict::NtfUpTo(horizon) })
}

/// Which single-variable minor was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MinorKind {
    /// `I / x_j`, the variable set to one.
    Contraction,
    /// `I \ x_j`, the variable set to zero.
    Deletion,
}

impl fmt::Display for MinorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorKind::Contraction => write!(f, "contract"),
            MinorKind::Deletion => write!(f, "delete"),
        }
    }
}

/// One labeled single-step minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub kind: MinorKind,
    pub var: usize,
    pub ideal: MonomialIdeal,
}

/// All `2n` single-step minors of an ideal, contraction before deletion for
/// each variable in order. Minors may be the zero or unit ideal; they are
/// returned as-is.
pub fn first_level_minors(ideal: &MonomialIdeal) -> Vec<Minor> {
    let mut out = Vec::with_capacity(2 * ideal.nvars());
    for var in 0..ideal.nvars() {
        let contraction = ideal.contraction(var).expect("index in range");
        out.push(Minor { kind: MinorKind::Contraction, var, ideal: contraction });
        let deletion = ideal.deletion(var).expect("index in range");
        out.push(Minor { kind: MinorKind::Deletion, var, ideal: deletion });
    }
    out
}

/// Torsion-freeness of one minor, with zero and unit minors passing
/// vacuously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorVerdict {
    pub kind: MinorKind,
    pub var: usize,
    /// `None` for zero/unit minors, otherwise the scan verdict.
    pub verdict: Option<NtfVerdict>,
}

impl MinorVerdict {
    pub fn passes(&self) -> bool {
        self.verdict.is_none_or(|v| matches!(v, NtfVerdict::NtfUpTo(_)))
    }
}

/// Verdict of a minimality profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MnntVerdict {
    /// Within the horizon the ideal fails torsion-freeness in exactly the
    /// minimal way: the only new prime is the support maximal ideal, it
    /// stays once it appears, the punctured maximal ideal never associates
    /// to deletions of powers, and every minor is torsion-free.
    MinimallyNotNtfUpTo(u32),
    /// The profile does not match, with the reason.
    No(String),
}

impl MnntVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MnntVerdict::MinimallyNotNtfUpTo(_))
    }
}

impl fmt::Display for MnntVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MnntVerdict::MinimallyNotNtfUpTo(k) => write!(f, "minimally-not-NTF-up-to-{k}"),
            MnntVerdict::No(reason) => write!(f, "no: {reason}"),
        }
    }
}

/// Everything `is_minimally_not_ntf` computed along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnntProfile {
    pub ideal: MonomialIdeal,
    pub horizon: u32,
    /// `Ass(I^k)` for every `k` up to the horizon (no early stop).
    pub per_k: Vec<(u32, BTreeSet<PrimeIdeal>)>,
    /// Last power whose associated primes are still exactly the minimal
    /// ones, when the profile matches.
    pub m: Option<u32>,
    /// Largest pairwise-coprime subset of the minimal generators; when the
    /// verdict holds, `m` is at least this.
    pub beta1: u64,
    pub minor_verdicts: Vec<MinorVerdict>,
    pub verdict: MnntVerdict,
}

/// Decides, up to the horizon, whether a square-free ideal fails normal
/// torsion-freeness minimally.
///
/// The profile requires, with `m` the support maximal ideal: `Ass(I^s)` is
/// exactly `Min(I)` for `s <= m0` and exactly `Min(I) ∪ {m}` for
/// `m0 < s <= horizon` (some `m0 >= 1`); deleting any support variable from
/// `I^s` never leaves the punctured maximal ideal associated; and every
/// contraction and deletion minor at a support variable is
/// torsion-free up to the horizon (zero and unit minors vacuously so).
pub fn is_minimally_not_ntf(ideal: &MonomialIdeal, horizon: u32) -> Result<MnntProfile> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be >= 1"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let support = ideal.support();
    let beta = beta1(ideal)?;
    let minimal = minimal_primes(ideal)?;
    let maximal = PrimeIdeal::new(ideal.nvars(), support.iter().copied())
        .expect("proper nonzero ideal has support");

    let mut per_k = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=horizon {
        if k > 1 {
            power = power.product(ideal)?;
        }
        per_k.push((k, associated_primes(&power)?));
    }

    let mut profile = MnntProfile {
        ideal: ideal.clone(),
        horizon,
        per_k,
        m: None,
        beta1: beta,
        minor_verdicts: Vec::new(),
        verdict: MnntVerdict::No(String::new()),
    };

    if minimal.contains(&maximal) {
        profile.verdict =
            MnntVerdict::No("the support maximal ideal is already a minimal prime".into());
        return Ok(profile);
    }

    let mut with_maximal = minimal.clone();
    with_maximal.insert(maximal.clone());
    let mut first_embedded: Option<u32> = None;
    for (k, ass) in &profile.per_k {
        match first_embedded {
            None => {
                if *ass == minimal {
                    continue;
                }
                if *ass == with_maximal {
                    first_embedded = Some(*k);
                } else {
                    profile.verdict = MnntVerdict::No(format!(
                        "Ass(I^{k}) is not Min(I) or Min(I) with the support maximal ideal"
                    ));
                    return Ok(profile);
                }
            }
            Some(_) => {
                if *ass != with_maximal {
                    profile.verdict = MnntVerdict::No(format!(
                        "Ass(I^{k}) deviates after the support maximal ideal appeared"
                    ));
                    return Ok(profile);
                }
            }
        }
    }
    let Some(first) = first_embedded else {
        profile.verdict = MnntVerdict::No(format!(
            "no power up to {horizon} acquires the support maximal ideal"
        ));
        return Ok(profile);
    };
    profile.m = Some(first - 1);

    // Deleting a support variable from any power must never leave the
    // punctured maximal ideal associated.
    for &j in &support {
        let Some(punctured) = maximal.without_var(j) else {
            profile.verdict =
                MnntVerdict::No("the support has a single variable".into());
            return Ok(profile);
        };
        let mut power = ideal.clone();
        for s in 1..=horizon {
            if s > 1 {
                power = power.product(ideal)?;
            }
            let deleted = power.deletion(j)?;
            if deleted.is_zero() || deleted.is_unit() {
                continue;
            }
            if associated_primes(&deleted)?.contains(&punctured) {
                profile.verdict = MnntVerdict::No(format!(
                    "the punctured maximal ideal stays associated to I^{s} \\ x{}",
                    j + 1
                ));
                return Ok(profile);
            }
        }
    }

    let mut all_minors_pass = true;
    let mut failing = String::new();
    for &var in &support {
        for kind in [MinorKind::Contraction, MinorKind::Deletion] {
            let minor = match kind {
                MinorKind::Contraction => ideal.contraction(var)?,
                MinorKind::Deletion => ideal.deletion(var)?,
            };
            let verdict = if minor.is_zero() || minor.is_unit() {
                None
            } else {
                Some(is_ntf_up_to(&minor, horizon)?.verdict)
            };
            let entry = MinorVerdict { kind, var, verdict };
            if !entry.passes() && all_minors_pass {
                all_minors_pass = false;
                failing = format!("minor {kind} x{} is not torsion-free", var + 1);
            }
            profile.minor_verdicts.push(entry);
        }
    }
    profile.verdict = if all_minors_pass {
        MnntVerdict::MinimallyNotNtfUpTo(horizon)
    } else {
        MnntVerdict::No(failing)
    };
    Ok(profile)
}

/// The monomial grade: the size of the largest pairwise-coprime subset of
/// the minimal generators, found by exhaustive search with pruning.
pub fn beta1(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.generators();
    let supports: Vec<BTreeSet<usize>> = gens.iter().map(Monomial::support).collect();
    fn extend(
        supports: &[BTreeSet<usize>],
        from: usize,
        used: &mut BTreeSet<usize>,
        chosen: u64,
        best: &mut u64,
    ) {
        *best = (*best).max(chosen);
        for i in from..supports.len() {
            if chosen + (supports.len() - i) as u64 <= *best {
                break;
            }
            if supports[i].iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(supports[i].iter().copied());
            extend(supports, i + 1, used, chosen + 1, best);
            for v in &supports[i] {
                used.remove(v);
            }
        }
    }
    let mut best = 0;
    let mut used = BTreeSet::new();
    extend(&supports, 0, &mut used, 0, &mut best);
    Ok(best)
}

/// Which hypotheses of the intersection construction held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisRecord {
    /// `supp(h)` is disjoint from `supp(I) ∪ supp(q)`.
    pub support_disjoint: bool,
    /// The `Ass(I)` primes together with the `(q, x_r)` for `x_r` in
    /// `supp(h)` intersect to `L` irredundantly.
    pub l_primes_decompose: bool,
    /// The `Ass(I)` primes together with `q` intersect to `I ∩ q`
    /// irredundantly.
    pub q_primes_decompose: bool,
    /// `I` is torsion-free up to the horizon.
    pub base_ntf: bool,
    /// `I ∩ q` is torsion-free up to the horizon.
    pub intersection_ntf: bool,
}

impl HypothesisRecord {
    pub fn all_pass(&self) -> bool {
        self.support_disjoint
            && self.l_primes_decompose
            && self.q_primes_decompose
            && self.base_ntf
            && self.intersection_ntf
    }

    /// The first failed hypothesis, named, for refusal messages.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.support_disjoint {
            Some("supp(h) meets supp(I) or supp(q)")
        } else if !self.l_primes_decompose {
            Some("the Ass(I) primes with the (q, x_r) do not decompose L irredundantly")
        } else if !self.q_primes_decompose {
            Some("the Ass(I) primes with q do not decompose I ∩ q irredundantly")
        } else if !self.base_ntf {
            Some("I is not torsion-free up to the horizon")
        } else if !self.intersection_ntf {
            Some("I ∩ q is not torsion-free up to the horizon")
        } else {
            None
        }
    }
}

/// The intersection construction `L = I ∩ (q, h)` with its hypothesis
/// record.
///
/// `I` is a square-free ideal, `q` a prime, and `h` a square-free monomial
/// on fresh variables. When the hypotheses hold, `L` inherits
/// torsion-freeness from `I` and `I ∩ q`, and the colon-tower and
/// embedded-prime checkers accept the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionL {
    pub base: MonomialIdeal,
    pub q: PrimeIdeal,
    pub h: Monomial,
    pub horizon: u32,
    /// `I ∩ (q, h)`.
    pub l: MonomialIdeal,
    /// `I ∩ q`.
    pub base_cap_q: MonomialIdeal,
    pub hypotheses: HypothesisRecord,
}

/// Builds `L = I ∩ (q, h)` and evaluates every hypothesis, without
/// refusing: failed hypotheses are recorded so callers can report them.
/// Structural problems (wrong context, non-square-free input, zero or unit
/// `I`) are hard errors.
pub fn build_construction_l(
    base: &MonomialIdeal,
    q: &PrimeIdeal,
    h: &Monomial,
    horizon: u32,
) -> Result<ConstructionL> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be >= 1"));
    }
    if base.nvars() != q.nvars() {
        return Err(Error::ContextMismatch { left: base.nvars(), right: q.nvars() });
    }
    if base.nvars() != h.nvars() {
        return Err(Error::ContextMismatch { left: base.nvars(), right: h.nvars() });
    }
    if base.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if base.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !base.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if !h.is_squarefree() || h.is_one() {
        return Err(Error::InvalidArgument("h must be a non-unit square-free monomial"));
    }

    let nvars = base.nvars();
    let h_support = h.support();
    let mut occupied = base.support();
    occupied.extend(q.vars().iter().copied());
    let support_disjoint = h_support.is_disjoint(&occupied);

    let q_ideal = q.as_ideal();
    let q_plus_h = q_ideal.sum(&MonomialIdeal::principal(h.clone()))?;
    let l = base.intersect(&q_plus_h)?;
    let base_cap_q = base.intersect(&q_ideal)?;

    let base_ass: Vec<PrimeIdeal> = associated_primes(base)?.into_iter().collect();

    let mut l_list: Vec<MonomialIdeal> = base_ass.iter().map(PrimeIdeal::as_ideal).collect();
    for &r in &h_support {
        let mut vars: BTreeSet<usize> = q.vars().clone();
        vars.insert(r);
        l_list.push(PrimeIdeal::new(nvars, vars)?.as_ideal());
    }
    let l_primes_decompose =
        MonomialIdeal::intersect_many(&l_list)? == l && irredundancy_check(&l_list)?;

    let mut q_list: Vec<MonomialIdeal> = base_ass.iter().map(PrimeIdeal::as_ideal).collect();
    q_list.push(q_ideal);
    let q_primes_decompose =
        MonomialIdeal::intersect_many(&q_list)? == base_cap_q && irredundancy_check(&q_list)?;

    let base_ntf = is_ntf_up_to(base, horizon)?.is_ntf();
    let intersection_ntf = is_ntf_up_to(&base_cap_q, horizon)?.is_ntf();

    Ok(ConstructionL {
        base: base.clone(),
        q: q.clone(),
        h: h.clone(),
        horizon,
        l,
        base_cap_q,
        hypotheses: HypothesisRecord {
            support_disjoint,
            l_primes_decompose,
            q_primes_decompose,
            base_ntf,
            intersection_ntf,
        },
    })
}

fn pow_or_unit(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        Ok(MonomialIdeal::unit(ideal.nvars()))
    } else {
        ideal.power(k)
    }
}

/// Whether the hypotheses of the product identity hold for `I` and `q` at
/// the given horizon: the `Ass(I)` primes with `q` decompose `I ∩ q`
/// irredundantly, and both `I` and `I ∩ q` are torsion-free up to the
/// horizon.
pub fn product_hypotheses_hold(
    base: &MonomialIdeal,
    q: &PrimeIdeal,
    horizon: u32,
) -> Result<bool> {
    if base.nvars() != q.nvars() {
        return Err(Error::ContextMismatch { left: base.nvars(), right: q.nvars() });
    }
    if base.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if base.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !base.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let base_cap_q = base.intersect(&q.as_ideal())?;
    let mut list: Vec<MonomialIdeal> =
        associated_primes(base)?.iter().map(PrimeIdeal::as_ideal).collect();
    list.push(q.as_ideal());
    if MonomialIdeal::intersect_many(&list)? != base_cap_q || !irredundancy_check(&list)? {
        return Ok(false);
    }
    Ok(is_ntf_up_to(base, horizon)?.is_ntf() && is_ntf_up_to(&base_cap_q, horizon)?.is_ntf())
}

/// Verifies the product identity
/// `I^n (I ∩ q)^m = I^{n+m} ∩ q^m`
/// for `n, m >= 1`, refusing when its hypotheses fail at horizon
/// `max(2, n + m)`.
pub fn check_product_identity(
    base: &MonomialIdeal,
    q: &PrimeIdeal,
    n: u32,
    m: u32,
) -> Result<bool> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("product identity exponents must be >= 1"));
    }
    let horizon = (n + m).max(2);
    if !product_hypotheses_hold(base, q, horizon)? {
        return Err(Error::Hypothesis(
            "the Ass(I) primes with q must decompose I ∩ q irredundantly, with I and I ∩ q torsion-free",
        ));
    }
    let base_cap_q = base.intersect(&q.as_ideal())?;
    let lhs = base.power(n)?.product(&base_cap_q.power(m)?)?;
    let rhs = base.power(n + m)?.intersect(&q.power_ideal(m)?)?;
    Ok(lhs == rhs)
}

/// Verifies the colon tower of the construction for one power `s`:
/// for every `1 <= ℓ <= s`,
/// `(L^s : h^ℓ) = I^{ℓ-1} (I ∩ q)^{s-ℓ+1} + I^ℓ L^{s-ℓ}` and
/// `((L^s : h^ℓ), h) = (I^ℓ (I ∩ q)^{s-ℓ}, h)`,
/// together with the terminal case `(L^s : h^s) = I^s`.
///
/// Refuses when the construction's hypotheses failed.
pub fn check_colon_tower(construction: &ConstructionL, s: u32) -> Result<bool> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    if let Some(name) = construction.hypotheses.first_failure() {
        return Err(Error::Hypothesis(name));
    }
    let base = &construction.base;
    let cap = &construction.base_cap_q;
    let l_power = construction.l.power(s)?;
    let h_ideal = MonomialIdeal::principal(construction.h.clone());
    for ell in 1..=s {
        let lhs = l_power.colon(&construction.h.pow(ell)?)?;
        let tail = pow_or_unit(base, ell - 1)?.product(&cap.power(s - ell + 1)?)?;
        let head = base.power(ell)?.product(&pow_or_unit(&construction.l, s - ell)?)?;
        if lhs != tail.sum(&head)? {
            return Ok(false);
        }
        let joined = pow_or_unit(base, ell)?.product(&pow_or_unit(cap, s - ell)?)?;
        if lhs.sum(&h_ideal)? != joined.sum(&h_ideal)? {
            return Ok(false);
        }
    }
    Ok(l_power.colon(&construction.h.pow(s)?)? == base.power(s)?)
}

/// Verifies that every embedded prime of `L^s` strictly contains some
/// `(q, x_r)` with `x_r` in `supp(h)`. Vacuously true when `L^s` has no
/// embedded primes. Refuses when the construction's hypotheses failed.
pub fn check_embedded_prime_containment(construction: &ConstructionL, s: u32) -> Result<bool> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    if let Some(name) = construction.hypotheses.first_failure() {
        return Err(Error::Hypothesis(name));
    }
    let l_power = construction.l.power(s)?;
    let ass = associated_primes(&l_power)?;
    let minimal: BTreeSet<PrimeIdeal> = ass
        .iter()
        .filter(|p| !ass.iter().any(|r| r != *p && p.contains(r)))
        .cloned()
        .collect();
    let h_support = construction.h.support();
    for p in ass.difference(&minimal) {
        let witnessed = h_support.iter().any(|&r| {
            let mut vars: BTreeSet<usize> = construction.q.vars().clone();
            vars.insert(r);
            vars.is_subset(p.vars()) && &vars != p.vars()
        });
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the prime-lifting conclusion: when `(L^s : x_r^θ v)` is a prime
/// `p` for `L = I ∩ (q, x_r)` with `Ass(L) = Ass(I) ∪ {(q, x_r)}`, `x_r`
/// fresh, and `x_r` not dividing `v`, then `p` without `x_r` is associated
/// to `I^θ (I ∩ q)^{s-θ}`.
///
/// Every precondition that fails refuses the check by name.
pub fn check_embedded_prime_lift(
    base: &MonomialIdeal,
    q: &PrimeIdeal,
    r: usize,
    s: u32,
    theta: u32,
    v: &Monomial,
) -> Result<bool> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    if base.nvars() != q.nvars() {
        return Err(Error::ContextMismatch { left: base.nvars(), right: q.nvars() });
    }
    if base.nvars() != v.nvars() {
        return Err(Error::ContextMismatch { left: base.nvars(), right: v.nvars() });
    }
    if r >= base.nvars() {
        return Err(Error::IndexOutOfRange { index: r, nvars: base.nvars() });
    }
    if !base.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if base.support().contains(&r) || q.contains_var(r) {
        return Err(Error::Hypothesis("x_r lies in supp(I) or supp(q)"));
    }
    if v.exponent(r) > 0 {
        return Err(Error::Hypothesis("x_r divides v"));
    }
    if theta > s {
        return Err(Error::Hypothesis("theta exceeds the power s"));
    }

    let nvars = base.nvars();
    let mut qr_vars: BTreeSet<usize> = q.vars().clone();
    qr_vars.insert(r);
    let qr = PrimeIdeal::new(nvars, qr_vars)?;
    let l = base.intersect(&qr.as_ideal())?;
    let mut expected_ass = associated_primes(base)?;
    expected_ass.insert(qr);
    if associated_primes(&l)? != expected_ass {
        return Err(Error::Hypothesis("Ass(L) is not Ass(I) together with (q, x_r)"));
    }

    let w = Monomial::var_power(r, theta, nvars).mul(v)?;
    let colon = l.power(s)?.colon(&w)?;
    let Some(p) = as_prime(&colon) else {
        return Err(Error::Hypothesis("the colon is not a prime"));
    };
    let Some(punctured) = p.without_var(r) else {
        return Err(Error::Hypothesis("the colon prime is (x_r) alone"));
    };
    let target = pow_or_unit(base, theta)?
        .product(&pow_or_unit(&base.intersect(&q.as_ideal())?, s - theta)?)?;
    Ok(associated_primes(&target)?.contains(&punctured))
}
