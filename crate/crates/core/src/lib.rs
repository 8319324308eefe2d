//! Exact arithmetic for monomial ideals in a polynomial ring.
//!
//! Everything here is computed over the integers with no floating point and
//! no randomized shortcuts: minimal generating sets are canonical, ideal
//! equality is decidable, and every decomposition is returned in irredundant
//! form. The crate is `no_std` (it allocates, but performs no IO), so the
//! kernel can be embedded anywhere; parsing, file formats, and the command
//! line live in a companion crate.
//!
//! The main types are [`Monomial`], [`MonomialIdeal`], [`PrimeIdeal`], and
//! [`IrreducibleComponent`]. On top of those sit:
//!
//! * ideal algebra: sums, products, powers, intersections, colons, and the
//!   single-variable minors (deletion and contraction),
//! * [`decomp`]: irreducible decomposition, associated and minimal primes,
//!   Alexander duality, symbolic powers, and a brute-force witness oracle
//!   that recomputes associated primes independently,
//! * [`ntf`]: associated primes of powers up to a horizon, the
//!   normally-torsion-free verdict, minimal-non-torsion-freeness profiles,
//!   and checkers for the product, colon-tower, and embedded-prime
//!   identities that drive them,
//! * [`graph`]: edge, cover, closed-neighborhood, and dominating ideals of
//!   finite simple graphs, with exact minimal-dominating-set enumeration,
//! * [`sample`]: seeded rejection samplers producing random instances that
//!   satisfy the hypotheses of the identity checkers.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod context;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod ntf;
pub mod sample;

pub use context::VarContext;
pub use decomp::{Decomposition, IrreducibleComponent, PrimeIdeal};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, Substitution};
