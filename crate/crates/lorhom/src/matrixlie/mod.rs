//! Exact-rational matrix Lie algebras.
//!
//! Structure constants, Killing forms, reductive complements and fixed
//! subspaces are all computed over `Q` (or `Q(i)` for the unitary and
//! quaternionic families), so every dimension and every eigenvalue that
//! comes out of this module is exact.

pub mod algebra;
pub mod cases;
pub mod scalar;

pub use algebra::{
    central_action_spectrum, fixed_subspace, killing_complement, CMat, LieAlgError,
    MatrixLieAlgebra, Subspace,
};
pub use cases::{
    build_case, build_classical, lorentz_inertia, CaseData, CaseError, CaseId, ClassicalSpec,
};
pub use scalar::CRat;
