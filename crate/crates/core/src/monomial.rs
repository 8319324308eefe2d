//! Monomials with explicit exponent vectors.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// What to substitute for a variable when taking minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// Set the variable to `1` (contraction).
    One,
    /// Set the variable to `0` (deletion).
    Zero,
}

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The all-zero vector is the unit monomial `1`. Exponents are `u32`;
/// multiplication checks for overflow instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The unit monomial in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `x_index`.
    ///
    /// # Panics
    /// If `index >= nvars`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    /// A variable raised to a power: `x_index^exp`.
    ///
    /// # Panics
    /// If `index >= nvars`.
    pub fn var_power(index: usize, exp: u32, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Monomial { exps }
    }

    /// Builds a monomial from its exponent vector.
    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The product of the listed variables, each to the first power.
    ///
    /// # Panics
    /// If any index is out of range.
    pub fn from_support<I: IntoIterator<Item = usize>>(vars: I, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        for v in vars {
            assert!(v < nvars, "variable index {v} out of range for {nvars} variables");
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree, i.e. the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices of the variables that occur with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True when no exponent exceeds one.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The product of two monomials.
    ///
    /// Fails with [`Error::ContextMismatch`] if the variable counts differ
    /// and with [`Error::ExponentOverflow`] if an exponent leaves `u32`
    /// range; exponents never wrap silently.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::ContextMismatch { left: self.nvars(), right: other.nvars() });
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// `self^k`, with the same overflow guarantees as [`Monomial::mul`].
    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &a in &self.exps {
            exps.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// Whether `self` divides `other` (componentwise `<=`).
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "context mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Least common multiple (componentwise max).
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "context mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial { exps }
    }

    /// Greatest common divisor (componentwise min).
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "context mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Monomial { exps }
    }

    /// `self / gcd(self, other)`, the factor of `self` left after cancelling
    /// everything `other` can absorb. This is the generator map of the colon
    /// operation.
    ///
    /// # Panics
    /// If the variable counts differ.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "context mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Monomial { exps }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect();
        Some(Monomial { exps })
    }

    /// Substitutes `1` or `0` for one variable.
    ///
    /// Setting a variable to one erases its exponent; setting it to zero
    /// annihilates any monomial that contains the variable, reported as
    /// `None`.
    pub fn specialize(&self, index: usize, sub: Substitution) -> Result<Option<Monomial>> {
        if index >= self.nvars() {
            return Err(Error::IndexOutOfRange { index, nvars: self.nvars() });
        }
        match sub {
            Substitution::One => {
                let mut exps = self.exps.clone();
                exps[index] = 0;
                Ok(Some(Monomial { exps }))
            }
            Substitution::Zero => {
                if self.exps[index] > 0 {
                    Ok(None)
                } else {
                    Ok(Some(self.clone()))
                }
            }
        }
    }

    /// Canonical generator order: descending lexicographic on exponent
    /// vectors, so `x1`-heavy monomials come first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl fmt::Display for Monomial {
    /// Formats with default labels `x1, x2, ...` in ideal text syntax, e.g.
    /// `x1*x3^2`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn unit_is_identity_for_mul() {
        let a = m(&[2, 0, 1]);
        let one = Monomial::one(3);
        assert_eq!(a.mul(&one).unwrap(), a);
        assert!(one.is_one());
        assert_eq!(one.degree(), 0);
    }

    #[test]
    fn mul_adds_exponents() {
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        assert_eq!(a.mul(&b).unwrap(), m(&[1, 3, 3]));
    }

    #[test]
    fn mul_rejects_mismatched_contexts() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn mul_reports_overflow() {
        let a = m(&[u32::MAX]);
        let b = m(&[1]);
        assert_eq!(a.mul(&b), Err(Error::ExponentOverflow));
    }

    #[test]
    fn divisibility_is_componentwise() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[1, 0, 3]).divides(&m(&[1, 1, 2])));
        assert!(Monomial::one(3).divides(&m(&[0, 0, 0])));
    }

    #[test]
    fn divides_iff_lcm_is_the_larger() {
        let a = m(&[1, 0, 2]);
        let b = m(&[1, 1, 2]);
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
    }

    #[test]
    fn support_and_degree() {
        let a = m(&[0, 2, 1, 0]);
        assert_eq!(a.support().into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(a.degree(), 3);
        assert!(!a.is_squarefree());
        assert!(m(&[1, 0, 1, 1]).is_squarefree());
    }

    #[test]
    fn specialize_to_one_erases_the_variable() {
        let a = m(&[2, 3, 1]);
        assert_eq!(a.specialize(1, Substitution::One).unwrap(), Some(m(&[2, 0, 1])));
    }

    #[test]
    fn specialize_to_zero_annihilates_or_keeps() {
        let a = m(&[2, 3, 0]);
        assert_eq!(a.specialize(1, Substitution::Zero).unwrap(), None);
        assert_eq!(a.specialize(2, Substitution::Zero).unwrap(), Some(a.clone()));
        assert_eq!(
            a.specialize(7, Substitution::Zero),
            Err(Error::IndexOutOfRange { index: 7, nvars: 3 })
        );
    }

    #[test]
    fn display_uses_star_and_caret() {
        assert_eq!(m(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::one(4).to_string(), "1");
        assert_eq!(Monomial::var(2, 4).to_string(), "x3");
    }

    #[test]
    fn canonical_order_puts_x1_heavy_first() {
        let a = m(&[2, 0]);
        let b = m(&[1, 1]);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
    }
}
