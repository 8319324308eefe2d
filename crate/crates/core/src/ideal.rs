//! Monomial ideals in canonical form, with the full ideal arithmetic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Substitution};

/// A monomial ideal held as its unique minimal generating set.
///
/// Generators form an antichain under divisibility and are sorted in the
/// canonical order (descending lexicographic on exponent vectors), so two
/// ideals are equal as sets of monomials if and only if they compare equal
/// with `==`. The empty generator list is the zero ideal and `[1]` is the
/// unit ideal; both are first-class values for every operation that is
/// mathematically defined on them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    /// The unit ideal, generated by `1`.
    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: alloc::vec![Monomial::one(nvars)] }
    }

    /// The principal ideal `(m)`.
    pub fn principal(m: Monomial) -> Self {
        let nvars = m.nvars();
        MonomialIdeal { nvars, gens: alloc::vec![m] }
    }

    /// Builds the ideal generated by `gens`, reducing to the canonical
    /// minimal generating set (divisibility-redundant generators and
    /// duplicates are dropped, survivors sorted canonically).
    ///
    /// # Panics
    /// If a generator's variable count differs from `nvars`.
    pub fn from_generators<I: IntoIterator<Item = Monomial>>(nvars: usize, gens: I) -> Self {
        let mut raw: Vec<Monomial> = gens.into_iter().collect();
        for g in &raw {
            assert_eq!(g.nvars(), nvars, "context mismatch");
        }
        // Sorting by (degree, exponents) puts every proper divisor before its
        // multiples, so one forward scan finds the minimal generators.
        raw.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        raw.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
        for g in raw {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable_by(Monomial::canonical_cmp);
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The canonical minimal generating set.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// True when every minimal generator is square-free.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Union of the supports of the minimal generators.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for g in &self.gens {
            out.extend(g.support());
        }
        out
    }

    /// Monomial membership: some minimal generator divides `m`.
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        assert_eq!(self.nvars, m.nvars(), "context mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment: `other` is a subideal of `self`.
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(self.nvars, other.nvars, "context mismatch");
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    fn check_context(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ContextMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    /// The sum `I + J`, generated by the union of the generators.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_context(other)?;
        Ok(MonomialIdeal::from_generators(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    /// The product `I * J`, generated by all pairwise products.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_context(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal::from_generators(self.nvars, gens))
    }

    /// The `k`-th ordinary power, `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The intersection `I ∩ J`.
    ///
    /// For monomial ideals the intersection is generated by the pairwise
    /// least common multiples of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_context(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::from_generators(self.nvars, gens))
    }

    /// Intersection of a nonempty family, folded pairwise with
    /// re-minimization after every step.
    pub fn intersect_many(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let (first, rest) = ideals.split_first().ok_or(Error::EmptyInput)?;
        let mut acc = first.clone();
        for ideal in rest {
            acc = acc.intersect(ideal)?;
        }
        Ok(acc)
    }

    /// The colon ideal `(I : v)` by a single monomial, generated by
    /// `g / gcd(g, v)` over the minimal generators `g`.
    pub fn colon(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if self.nvars != v.nvars() {
            return Err(Error::ContextMismatch { left: self.nvars, right: v.nvars() });
        }
        Ok(MonomialIdeal::from_generators(
            self.nvars,
            self.gens.iter().map(|g| g.quotient_by_gcd(v)),
        ))
    }

    /// The colon ideal `(I : J)`, the intersection of `(I : v)` over the
    /// generators `v` of `J`. Undefined (zero ideal in a zero ring, really)
    /// for zero `J`; reported as [`Error::ZeroIdeal`].
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_context(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let parts: Vec<MonomialIdeal> =
            other.gens.iter().map(|v| self.colon(v)).collect::<Result<_>>()?;
        MonomialIdeal::intersect_many(&parts)
    }

    /// The contraction minor `I / x_j`: substitute `x_j = 1` in every
    /// generator and re-minimize. May be the unit ideal.
    pub fn contraction(&self, index: usize) -> Result<MonomialIdeal> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange { index, nvars: self.nvars });
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if let Some(m) = g.specialize(index, Substitution::One)? {
                gens.push(m);
            }
        }
        Ok(MonomialIdeal::from_generators(self.nvars, gens))
    }

    /// The deletion minor `I \ x_j`: substitute `x_j = 0`, keeping only the
    /// generators not divisible by `x_j`. May be the zero ideal.
    pub fn deletion(&self, index: usize) -> Result<MonomialIdeal> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange { index, nvars: self.nvars });
        }
        let mut gens = Vec::new();
        for g in &self.gens {
            if let Some(m) = g.specialize(index, Substitution::Zero)? {
                gens.push(m);
            }
        }
        Ok(MonomialIdeal::from_generators(self.nvars, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    /// Ideal text syntax with default labels: generators joined by `, `,
    /// `0` for the zero ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
