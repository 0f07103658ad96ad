//! Exact computations with sections, trisections and Mumford representations
//! on elliptic curves `y^2 = x^3 + a1 x^2 + a2 x + a3` over `K(t)`, with
//! `K = Q` or `Q(sqrt d)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: the base field.
//! * [`polyring`]: `K[t]`, `K(t)`, `K(t)[x]`, resultants, squarefree parts.
//! * [`curve`]: Weierstrass curves and the Mordell-Weil group law.
//! * [`mumford`]: semi-reduced divisors, Mumford pairs and trisections.
//! * [`lattice`]: height pairings, intersection numbers and splitting types.
//! * [`planecurves`]: geometric checks on plane curves (contact, smoothness).
//! * [`cli`]: expression parser, config files, JSON command runner.

pub mod cli;
pub mod curve;
pub mod lattice;
pub mod mumford;
pub mod planecurves;
pub mod polyring;
pub mod scalars;
