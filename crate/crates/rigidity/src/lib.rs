//! Exact-arithmetic certifier for the rigidity of quotients of
//! `F^(n-1) x Q` by the non-abelian group of order 21, where `F` is the
//! Fermat cubic (as the torus `C/(Z + Z*e3)`) and `Q` is the Klein quartic.
//!
//! Every quantity is computed over arbitrary-precision rationals or the
//! cyclotomic field of order 21; there is no floating point anywhere.
//! The main entry points are:
//!
//! - [`group`] — the order-21 group, its conjugacy classes and its exact
//!   character table;
//! - [`curves`] — the group actions on both curves, fixed points, orbit
//!   tables and characters on spaces of holomorphic forms;
//! - [`deformation`] — the deformation character, the quotient
//!   singularities with their Reid–Tai ages, and the per-`n` rigidity
//!   certificate;
//! - [`toric`] — exact fans, star subdivisions, the toric blowup and the
//!   Danilov resolution together with the pushforward-reflexivity and
//!   `R^1`-vanishing checks;
//! - [`cli`] — the `certify` / `char-table` / `orbits` / `resolve` /
//!   `lp-check` command surface used by the `rigidity` binary.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod curves;
pub mod deformation;
pub mod exact;
pub mod group;
pub mod report;
pub mod toric;

pub use exact::cyclotomic::Cyclotomic;
pub use exact::rational::Rational;
