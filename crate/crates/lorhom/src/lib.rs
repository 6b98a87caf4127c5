//! Classification engine for minimal admissible homogeneous Lorentzian
//! manifolds `M = G/H` of semisimple Lie groups.
//!
//! The crate re-derives, by exact computation, the classification of
//! homogeneous spaces of a semisimple Lie group `G` that carry an invariant
//! Lorentzian metric and have no larger compact connected stabilizer:
//!
//! * [`rootsys`] — root systems of the simple types `A`–`G` from their Cartan
//!   matrices, with Dynkin-diagram vertex deletion;
//! * [`orbits`] — minimal adjoint orbits `F_α = G/H_α·T¹` of a compact simple
//!   group, the level grading of their isotropy modules, and the invariant
//!   metric parameter families;
//! * [`matrixlie`] — explicit matrix realizations of the classical real
//!   forms over exact rationals: brackets, Killing forms, reductive
//!   decompositions `g = h + m`, and fixed subspaces `m^H`;
//! * [`noncompact`] — duality between `G/H` and its compact partner,
//!   the class I / class II dichotomy (`n^H ≠ 0` vs `p^H ≠ 0`), and the
//!   low-dimensional class II enumeration;
//! * [`catalog`] — reference tables, verification reports, serialization;
//! * [`cli`] — command-line front end.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! every dimension claim in the output is a theorem of linear algebra, not a
//! numerical observation.

pub mod book;
pub mod catalog;
pub mod cli;
pub mod linalg;
pub mod matrixlie;
pub mod noncompact;
pub mod orbits;
pub mod rootsys;
