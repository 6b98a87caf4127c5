//! Explicit matrix realizations of the classical real forms and the
//! reductive decompositions used by the classification.
//!
//! Supported algebras: `sl(n,R)`, `so(p,q)` (as bivectors `Λ²V` via the
//! basis `M_ij = η_jj E_ij − η_ii E_ji`), `su(p,q)` (complex entries with
//! the reality constraint `X*η + ηX = 0`), and `sp(1,n)` through the
//! standard 2×2 complex embedding of the quaternions.
//!
//! [`build_case`] assembles, for each supported homogeneous space, the
//! subalgebra `h`, the Killing-orthogonal complement `m` (split as
//! `m = n + p` where a maximal compact `k ⊃ h` is in play), the fixed
//! subspaces `m^H`, `n^H`, `p^H`, and the distinguished vectors of the
//! construction (`v`, `b`, `z`, `z'`, `z_0`).

use super::algebra::{
    central_action_spectrum, fixed_subspace, killing_complement, CMat, LieAlgError,
    MatrixLieAlgebra, Subspace,
};
use super::scalar::CRat;
use crate::linalg::{rat, ratio, Mat, Rat};
use num_traits::Zero;

#[derive(Debug, Error)]
pub enum CaseError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] LieAlgError),
}

use thiserror::Error;

/// Which classical matrix algebra to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalSpec {
    /// `sl(n, R)`.
    SlR(usize),
    /// `so(p, q)` with `η = diag(−1_p, 1_q)`.
    SoPQ(usize, usize),
    /// `su(p, q)` with the same `η`.
    SuPQ(usize, usize),
    /// `sp(1, n)` embedded in complex matrices of size `2(n+1)`.
    SpOneN(usize),
}

fn e(n: usize, i: usize, j: usize, v: CRat) -> CMat {
    let mut m = CMat::zeros(n);
    m.set(i, j, v);
    m
}

fn sl_basis(n: usize) -> Vec<CMat> {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(e(n, i, j, CRat::one()));
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = CMat::zeros(n);
        m.set(i, i, CRat::one());
        m.set(i + 1, i + 1, CRat::from_int(-1));
        basis.push(m);
    }
    basis
}

/// Generator `M_ij = η_jj E_ij − η_ii E_ji` of `so(p,q)`, the image of the
/// bivector `x_i ∧ x_j`.
fn so_generator(p: usize, q: usize, i: usize, j: usize) -> CMat {
    let n = p + q;
    let eta = |k: usize| if k < p { -1 } else { 1 };
    let mut m = CMat::zeros(n);
    m.set(i, j, CRat::from_int(eta(j)));
    m.set(j, i, CRat::from_int(-eta(i)));
    m
}

fn so_basis(p: usize, q: usize) -> Vec<CMat> {
    let n = p + q;
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(so_generator(p, q, i, j));
        }
    }
    basis
}

fn su_basis(p: usize, q: usize) -> Vec<CMat> {
    let n = p + q;
    let eps = |k: usize| if k < p { -1i64 } else { 1 };
    let mut basis = Vec::new();
    for i in 0..n - 1 {
        let mut m = CMat::zeros(n);
        m.set(i, i, CRat::i());
        m.set(i + 1, i + 1, CRat::new(Rat::zero(), rat(-1)));
        basis.push(m);
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = eps(i) * eps(j);
            let mut a = CMat::zeros(n);
            a.set(i, j, CRat::one());
            a.set(j, i, CRat::from_int(-s));
            basis.push(a);
            let mut b = CMat::zeros(n);
            b.set(i, j, CRat::i());
            b.set(j, i, CRat::new(rat(0), rat(s)));
            basis.push(b);
        }
    }
    basis
}

/// A quaternion `a + bi + cj + dk` over the rationals.
#[derive(Clone, Debug)]
pub struct Quat(pub Rat, pub Rat, pub Rat, pub Rat);

impl Quat {
    fn unit(idx: usize) -> Quat {
        let mut q = Quat(rat(0), rat(0), rat(0), rat(0));
        match idx {
            0 => q.0 = rat(1),
            1 => q.1 = rat(1),
            2 => q.2 = rat(1),
            _ => q.3 = rat(1),
        }
        q
    }

    fn conj(&self) -> Quat {
        Quat(
            self.0.clone(),
            -self.1.clone(),
            -self.2.clone(),
            -self.3.clone(),
        )
    }

    fn neg(&self) -> Quat {
        Quat(
            -self.0.clone(),
            -self.1.clone(),
            -self.2.clone(),
            -self.3.clone(),
        )
    }
}

/// Writes quaternionic entries into the complex matrix of doubled size via
/// `a + bi + cj + dk ↦ [[a+bi, c+di], [−c+di, a−bi]]`.
fn quat_embed(m: usize, entries: &[(usize, usize, Quat)]) -> CMat {
    let mut out = CMat::zeros(2 * m);
    for (d, ee, q) in entries {
        let (r, c) = (2 * d, 2 * ee);
        out.set(r, c, CRat::new(q.0.clone(), q.1.clone()));
        out.set(r, c + 1, CRat::new(q.2.clone(), q.3.clone()));
        out.set(r + 1, c, CRat::new(-q.2.clone(), q.3.clone()));
        out.set(r + 1, c + 1, CRat::new(q.0.clone(), -q.1.clone()));
    }
    out
}

/// Basis of `sp(1,n)` (quaternionic size `m = n+1`, first index timelike):
/// imaginary units on the diagonal and, for each off-diagonal pair `(d,e)`,
/// the four quaternion units with the mirror entry `x_ed = −ε_d ε_e x̄_de`.
fn sp_basis(n: usize) -> Vec<CMat> {
    let m = n + 1;
    let eps = |k: usize| if k == 0 { -1i64 } else { 1 };
    let mut basis = Vec::new();
    for d in 0..m {
        for u in 1..4 {
            basis.push(quat_embed(m, &[(d, d, Quat::unit(u))]));
        }
    }
    for d in 0..m {
        for ee in d + 1..m {
            for u in 0..4 {
                let q = Quat::unit(u);
                let mirror = if eps(d) * eps(ee) == 1 {
                    q.conj().neg()
                } else {
                    q.conj()
                };
                basis.push(quat_embed(m, &[(d, ee, q), (ee, d, mirror)]));
            }
        }
    }
    basis
}

/// Builds a classical matrix Lie algebra with exact structure constants.
pub fn build_classical(spec: ClassicalSpec) -> Result<MatrixLieAlgebra, CaseError> {
    let (name, size, basis) = match spec {
        ClassicalSpec::SlR(n) => {
            if n < 2 {
                return Err(CaseError::Unsupported(format!("sl({n},R)")));
            }
            (format!("sl({n},R)"), n, sl_basis(n))
        }
        ClassicalSpec::SoPQ(p, q) => {
            if p + q < 3 {
                return Err(CaseError::Unsupported(format!("so({p},{q})")));
            }
            (format!("so({p},{q})"), p + q, so_basis(p, q))
        }
        ClassicalSpec::SuPQ(p, q) => {
            if p + q < 2 {
                return Err(CaseError::Unsupported(format!("su({p},{q})")));
            }
            (format!("su({p},{q})"), p + q, su_basis(p, q))
        }
        ClassicalSpec::SpOneN(n) => {
            if n < 1 {
                return Err(CaseError::Unsupported(format!("sp(1,{n})")));
            }
            (format!("sp(1,{n})"), 2 * (n + 1), sp_basis(n))
        }
    };
    Ok(MatrixLieAlgebra::new(&name, size, basis)?)
}

/// Identifier of an explicitly constructed homogeneous space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    /// `SL(p+q,R) / SO_p × SO_q`.
    SlQuotient { p: usize, q: usize },
    /// `SO(1,n) / SO_{n−1}` (real hyperbolic isotropy).
    RealHyperbolic { n: usize },
    /// `SU(1,n) / U_{n−1}` (complex hyperbolic isotropy).
    ComplexHyperbolic { n: usize },
    /// `Sp(1,2) / Sp_1 × Sp_1`.
    QuaternionHyperbolic,
    /// `SO(p,q)` with diagonal vector `v = e_1 ⊗ f_1`.
    SoDiagonalA { p: usize, q: usize },
    /// `SO(p,q)` with `v = e_1 ⊗ f_1 ± e_2 ⊗ f_2`.
    SoDiagonalB { p: usize, q: usize, plus: bool },
    /// `SO(3,3)` with `v_± = e_1⊗f_1 + e_2⊗f_2 ± e_3⊗f_3`.
    SoDiagonalC { plus: bool },
    /// `SO(p,q)` with `v = Σ_{a ≤ r−minus} e_a⊗f_a − Σ_{a > r−minus} e_a⊗f_a`
    /// (diagonal support `r`, last `minus` coefficients flipped).
    SoTwistedDiagonal {
        p: usize,
        q: usize,
        r: usize,
        minus: usize,
    },
}

impl CaseId {
    pub fn label(&self) -> String {
        match self {
            CaseId::SlQuotient { p, q } => format!("sl({},R)/so({p})+so({q})", p + q),
            CaseId::RealHyperbolic { n } => format!("so(1,{n})/so({})", n - 1),
            CaseId::ComplexHyperbolic { n } => format!("su(1,{n})/u({})", n - 1),
            CaseId::QuaternionHyperbolic => "sp(1,2)/sp(1)+sp(1)".into(),
            CaseId::SoDiagonalA { p, q } => format!("so({p},{q}) rank-1 diagonal"),
            CaseId::SoDiagonalB { p, q, plus } => {
                format!("so({p},{q}) rank-2 diagonal ({})", sign(*plus))
            }
            CaseId::SoDiagonalC { plus } => {
                format!("so(3,3) rank-3 diagonal (v{})", sign(*plus))
            }
            CaseId::SoTwistedDiagonal { p, q, r, minus } => {
                format!("so({p},{q}) rank-{r} diagonal ({minus} flipped)")
            }
        }
    }
}

fn sign(plus: bool) -> &'static str {
    if plus {
        "+"
    } else {
        "-"
    }
}

/// All subspace data of one constructed case.
pub struct CaseData {
    pub id: CaseId,
    pub algebra: MatrixLieAlgebra,
    pub h: Subspace,
    /// Reductive complement, `g = h ⊕ m`.
    pub m: Subspace,
    /// Compact split `m = n + p` when a maximal compact `k ⊃ h` is used.
    pub n_part: Option<Subspace>,
    pub p_part: Option<Subspace>,
    pub m_fixed: Subspace,
    pub n_fixed: Option<Subspace>,
    pub p_fixed: Option<Subspace>,
    /// Named vectors of the construction, as algebra coordinates.
    pub distinguished: Vec<(String, Vec<Rat>)>,
    /// The complex line `Cv` and the module `p'` of the complex hyperbolic
    /// case, with the complex structure on `p'` in `p'`-coordinates.
    pub p_prime: Option<Subspace>,
    pub j_p_prime: Option<Mat>,
    pub notes: Vec<String>,
}

impl CaseData {
    /// Spectrum of a distinguished central element on `p'`, as pairs
    /// `(λ, complex multiplicity)` meaning eigenvalue `λ i`.
    pub fn spectrum_on_p_prime(&self, name: &str) -> Result<Vec<(Rat, usize)>, CaseError> {
        let z = &self
            .distinguished
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| CaseError::Unsupported(format!("no vector named {name}")))?
            .1;
        let w = self
            .p_prime
            .as_ref()
            .ok_or_else(|| CaseError::Unsupported("case has no p' module".into()))?;
        let j = self.j_p_prime.as_ref().unwrap();
        Ok(central_action_spectrum(&self.algebra, z, w, j)?)
    }
}

/// Killing-orthogonal complement of `inner` taken inside `outer`:
/// `{ x ∈ outer : B(x, inner) = 0 }`.
fn complement_within(
    g: &MatrixLieAlgebra,
    outer: &Subspace,
    inner: &Subspace,
) -> Result<Subspace, LieAlgError> {
    if inner.dim() == 0 {
        return Ok(outer.clone());
    }
    let mut rows = Mat::zeros(inner.dim(), outer.dim());
    for (i, y) in inner.basis_coords.iter().enumerate() {
        for (j, x) in outer.basis_coords.iter().enumerate() {
            rows[(i, j)] = g.killing_value(y, x);
        }
    }
    let coeffs = rows.nullspace();
    let basis = coeffs
        .into_iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); g.dim()];
            for (ci, gen) in c.iter().zip(&outer.basis_coords) {
                if ci.is_zero() {
                    continue;
                }
                for (vi, gi) in v.iter_mut().zip(gen) {
                    *vi += ci * gi;
                }
            }
            v
        })
        .collect();
    let out = Subspace::new(g, basis)?;
    if out.dim() + inner.dim() != outer.dim() {
        return Err(LieAlgError::DegenerateRestriction);
    }
    Ok(out)
}

fn span(g: &MatrixLieAlgebra, mats: &[CMat]) -> Result<Subspace, LieAlgError> {
    Subspace::from_matrices(g, mats)
}

/// Union of two subspaces with independent bases.
fn join(g: &MatrixLieAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace, LieAlgError> {
    let mut basis = a.basis_coords.clone();
    basis.extend(b.basis_coords.clone());
    Subspace::new(g, basis)
}

fn build_sl_quotient(p: usize, q: usize) -> Result<CaseData, CaseError> {
    let n = p + q;
    let g = build_classical(ClassicalSpec::SlR(n))?;
    let anti = |i: usize, j: usize| {
        e(n, i, j, CRat::one()).sub(&e(n, j, i, CRat::one()))
    };
    let mut h_mats = Vec::new();
    let mut k_mats = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            k_mats.push(anti(i, j));
            if j < p || i >= p {
                h_mats.push(anti(i, j));
            }
        }
    }
    let h = span(&g, &h_mats)?;
    let k = span(&g, &k_mats)?;
    let m = killing_complement(&g, &h)?;
    let n_part = complement_within(&g, &k, &h)?;
    let p_part = killing_complement(&g, &k)?;
    let m_fixed = fixed_subspace(&g, &h, &m)?;
    let n_fixed = fixed_subspace(&g, &h, &n_part)?;
    let p_fixed = fixed_subspace(&g, &h, &p_part)?;
    // b = q·g0|_U − p·g0|_W, the traceless block-scalar symmetric matrix.
    let mut b = CMat::zeros(n);
    for i in 0..n {
        b.set(
            i,
            i,
            CRat::from_int(if i < p { q as i64 } else { -(p as i64) }),
        );
    }
    let b_coords = g.coords(&b).expect("b is traceless");
    Ok(CaseData {
        id: CaseId::SlQuotient { p, q },
        algebra: g,
        h,
        m,
        n_part: Some(n_part),
        p_part: Some(p_part),
        m_fixed,
        n_fixed: Some(n_fixed),
        p_fixed: Some(p_fixed),
        distinguished: vec![("b".into(), b_coords)],
        p_prime: None,
        j_p_prime: None,
        notes: vec![
            "the U ⊗ W isotropy summand appears with multiplicity 2 (symmetric and \
             antisymmetric off-block parts)"
                .into(),
        ],
    })
}

fn build_real_hyperbolic(n: usize) -> Result<CaseData, CaseError> {
    if n < 2 {
        return Err(CaseError::Unsupported("so(1,n) needs n >= 2".into()));
    }
    let g = build_classical(ClassicalSpec::SoPQ(1, n))?;
    let gen = |i, j| so_generator(1, n, i, j);
    let mut h_mats = Vec::new();
    let mut k_mats = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            k_mats.push(gen(i, j));
            if i >= 2 {
                h_mats.push(gen(i, j));
            }
        }
    }
    let h = span(&g, &h_mats)?;
    let k = span(&g, &k_mats)?;
    let m = killing_complement(&g, &h)?;
    let n_part = complement_within(&g, &k, &h)?;
    let p_part = killing_complement(&g, &k)?;
    let m_fixed = fixed_subspace(&g, &h, &m)?;
    let n_fixed = fixed_subspace(&g, &h, &n_part)?;
    let p_fixed = fixed_subspace(&g, &h, &p_part)?;
    let v = g.coords(&gen(0, 1)).expect("e0 ^ e1 in algebra");
    Ok(CaseData {
        id: CaseId::RealHyperbolic { n },
        algebra: g,
        h,
        m,
        n_part: Some(n_part),
        p_part: Some(p_part),
        m_fixed,
        n_fixed: Some(n_fixed),
        p_fixed: Some(p_fixed),
        distinguished: vec![("e0^e1".into(), v)],
        p_prime: None,
        j_p_prime: None,
        notes: Vec::new(),
    })
}

fn build_complex_hyperbolic(n: usize) -> Result<CaseData, CaseError> {
    if n < 2 {
        return Err(CaseError::Unsupported("su(1,n) needs n >= 2".into()));
    }
    let size = n + 1;
    let g = build_classical(ClassicalSpec::SuPQ(1, n))?;
    let idiag = |entries: &[(usize, Rat)]| {
        let mut m = CMat::zeros(size);
        for (i, r) in entries {
            m.set(*i, *i, CRat::new(Rat::zero(), r.clone()));
        }
        m
    };
    // h = su(W) ⊕ R z with z = i·diag(1, 1, −2/(n−1)·Id_W).
    let mut h_mats = Vec::new();
    for i in 2..size {
        for j in i + 1..size {
            h_mats.push(e(size, i, j, CRat::one()).sub(&e(size, j, i, CRat::one())));
            h_mats.push(e(size, i, j, CRat::i()).add(&e(size, j, i, CRat::i())));
        }
    }
    for i in 2..size - 1 {
        h_mats.push(idiag(&[(i, rat(1)), (i + 1, rat(-1))]));
    }
    let mut z_entries = vec![(0, rat(1)), (1, rat(1))];
    for i in 2..size {
        z_entries.push((i, ratio(-2, n as i64 - 1)));
    }
    let z = idiag(&z_entries);
    h_mats.push(z.clone());
    let h = span(&g, &h_mats)?;
    // k = su(E) ⊕ R z0, the stabilizer of the line C e0.
    let mut k_mats = Vec::new();
    for i in 1..size {
        for j in i + 1..size {
            k_mats.push(e(size, i, j, CRat::one()).sub(&e(size, j, i, CRat::one())));
            k_mats.push(e(size, i, j, CRat::i()).add(&e(size, j, i, CRat::i())));
        }
    }
    for i in 1..size - 1 {
        k_mats.push(idiag(&[(i, rat(1)), (i + 1, rat(-1))]));
    }
    let mut z0_entries = vec![(0, rat(1))];
    for i in 1..size {
        z0_entries.push((i, ratio(-1, n as i64)));
    }
    let z0 = idiag(&z0_entries);
    k_mats.push(z0.clone());
    let k = span(&g, &k_mats)?;
    let m = killing_complement(&g, &h)?;
    let n_part = complement_within(&g, &k, &h)?;
    let p_part = killing_complement(&g, &k)?;
    let m_fixed = fixed_subspace(&g, &h, &m)?;
    let n_fixed = fixed_subspace(&g, &h, &n_part)?;
    let p_fixed = fixed_subspace(&g, &h, &p_part)?;
    // p-basis elements X_w for w = e_m and w = i·e_m:
    //   X_{e_m}  =  E_0m + E_m0,   X_{i e_m} = −i(E_0m − E_m0).
    let a_mat = |m: usize| e(size, 0, m, CRat::one()).add(&e(size, m, 0, CRat::one()));
    let s_mat = |m: usize| e(size, 0, m, CRat::i()).add(&e(size, m, 0, CRat::new(rat(0), rat(-1))));
    let c_v = span(&g, &[a_mat(1), s_mat(1)])?;
    let mut p_prime_mats = Vec::new();
    for m_idx in 2..size {
        p_prime_mats.push(a_mat(m_idx));
        p_prime_mats.push(s_mat(m_idx));
    }
    let p_prime = span(&g, &p_prime_mats)?;
    // Complex structure on p' in the (A, S) basis order: J(A) = −S, J(S) = A.
    let dw = p_prime.dim();
    let mut j = Mat::zeros(dw, dw);
    for pair in 0..dw / 2 {
        j[(2 * pair + 1, 2 * pair)] = -rat(1);
        j[(2 * pair, 2 * pair + 1)] = rat(1);
    }
    let zp = idiag(&[(0, rat(1)), (1, rat(-1))]);
    let distinguished = vec![
        ("v".into(), g.coords(&a_mat(1)).unwrap()),
        ("z".into(), g.coords(&z).unwrap()),
        ("z0".into(), g.coords(&z0).unwrap()),
        ("z'".into(), g.coords(&zp).unwrap()),
    ];
    Ok(CaseData {
        id: CaseId::ComplexHyperbolic { n },
        algebra: g,
        h,
        m,
        n_part: Some(n_part),
        p_part: Some(p_part),
        m_fixed,
        n_fixed: Some(n_fixed),
        p_fixed: Some(p_fixed),
        distinguished,
        p_prime: Some(p_prime),
        j_p_prime: Some(j),
        notes: vec![
            "z' carries the factor i omitted in the source display; without it the \
             matrix would be Hermitian rather than anti-Hermitian"
                .into(),
            format!("extra module: Cv = {}-dimensional fixed part of p", c_v.dim()),
        ],
    })
}

fn build_quaternion_hyperbolic() -> Result<CaseData, CaseError> {
    let n = 2;
    let m_size = n + 1;
    let g = build_classical(ClassicalSpec::SpOneN(n))?;
    // h = { diag(α, α, A) : α ∈ Im H, A ∈ sp(1) }.
    let mut h_mats = Vec::new();
    for u in 1..4 {
        h_mats.push(quat_embed(
            m_size,
            &[(0, 0, Quat::unit(u)), (1, 1, Quat::unit(u))],
        ));
    }
    for u in 1..4 {
        h_mats.push(quat_embed(m_size, &[(2, 2, Quat::unit(u))]));
    }
    let h = span(&g, &h_mats)?;
    // k = sp(1) ⊕ sp(n) block diagonal.
    let mut k_mats = Vec::new();
    for u in 1..4 {
        k_mats.push(quat_embed(m_size, &[(0, 0, Quat::unit(u))]));
    }
    for d in 1..m_size {
        for u in 1..4 {
            k_mats.push(quat_embed(m_size, &[(d, d, Quat::unit(u))]));
        }
    }
    for u in 0..4 {
        let q = Quat::unit(u);
        k_mats.push(quat_embed(m_size, &[(1, 2, q.conj().neg()), (2, 1, Quat::unit(u))]));
    }
    let k = span(&g, &k_mats)?;
    let m = killing_complement(&g, &h)?;
    let n_part = complement_within(&g, &k, &h)?;
    let p_part = killing_complement(&g, &k)?;
    let m_fixed = fixed_subspace(&g, &h, &m)?;
    let n_fixed = fixed_subspace(&g, &h, &n_part)?;
    let p_fixed = fixed_subspace(&g, &h, &p_part)?;
    let v = quat_embed(m_size, &[(0, 1, Quat::unit(0)), (1, 0, Quat::unit(0))]);
    let v_coords = g.coords(&v).expect("v in sp(1,2)");
    Ok(CaseData {
        id: CaseId::QuaternionHyperbolic,
        algebra: g,
        h,
        m,
        n_part: Some(n_part),
        p_part: Some(p_part),
        m_fixed,
        n_fixed: Some(n_fixed),
        p_fixed: Some(p_fixed),
        distinguished: vec![("v".into(), v_coords)],
        p_prime: None,
        j_p_prime: None,
        notes: Vec::new(),
    })
}

fn build_so_diagonal(
    id: CaseId,
    p: usize,
    q: usize,
    v_terms: &[(usize, i64)],
) -> Result<CaseData, CaseError> {
    if p > q || p < 2 {
        return Err(CaseError::Unsupported(format!("so({p},{q}) diagonal")));
    }
    let g = build_classical(ClassicalSpec::SoPQ(p, q))?;
    let gen = |i, j| so_generator(p, q, i, j);
    // v = Σ c_a · e_{a+1} ⊗ f_{a+1}, each e_a ⊗ f_a realized as M_{a, p+a}.
    let mut v = CMat::zeros(p + q);
    for &(a, c) in v_terms {
        let t = gen(a, p + a);
        for i in 0..p + q {
            for j in 0..p + q {
                if !t.at(i, j).is_zero() {
                    let add = &CRat::from_int(c) * t.at(i, j);
                    v.set(i, j, &add + v.at(i, j));
                }
            }
        }
    }
    let mut k_mats = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            k_mats.push(gen(i, j));
        }
    }
    for i in p..p + q {
        for j in i + 1..p + q {
            k_mats.push(gen(i, j));
        }
    }
    let k = span(&g, &k_mats)?;
    let v_coords = g.coords(&v).expect("v in so(p,q)");
    let v_span = Subspace::new(&g, vec![v_coords.clone()])?;
    // Stabilizer subalgebra h = { x ∈ k : [x, v] = 0 }.
    let h = fixed_subspace(&g, &v_span, &k)?;
    let m = killing_complement(&g, &h)?;
    let n_part = complement_within(&g, &k, &h)?;
    let p_part = killing_complement(&g, &k)?;
    let m_fixed = fixed_subspace(&g, &h, &m)?;
    let n_fixed = fixed_subspace(&g, &h, &n_part)?;
    let p_fixed = fixed_subspace(&g, &h, &p_part)?;
    Ok(CaseData {
        id,
        algebra: g,
        h,
        m,
        n_part: Some(n_part),
        p_part: Some(p_part),
        m_fixed,
        n_fixed: Some(n_fixed),
        p_fixed: Some(p_fixed),
        distinguished: vec![("v".into(), v_coords)],
        p_prime: None,
        j_p_prime: None,
        notes: Vec::new(),
    })
}

/// Builds the full subspace data of one supported homogeneous space.
pub fn build_case(id: CaseId) -> Result<CaseData, CaseError> {
    match id {
        CaseId::SlQuotient { p, q } => {
            if p + q > 6 || p == 0 || q == 0 {
                return Err(CaseError::Unsupported(format!("sl quotient ({p},{q})")));
            }
            build_sl_quotient(p, q)
        }
        CaseId::RealHyperbolic { n } => {
            if n > 8 {
                return Err(CaseError::Unsupported(format!("so(1,{n})")));
            }
            build_real_hyperbolic(n)
        }
        CaseId::ComplexHyperbolic { n } => {
            if n > 5 {
                return Err(CaseError::Unsupported(format!("su(1,{n})")));
            }
            build_complex_hyperbolic(n)
        }
        CaseId::QuaternionHyperbolic => build_quaternion_hyperbolic(),
        CaseId::SoDiagonalA { p, q } => {
            build_so_diagonal(id, p, q, &[(0, 1)])
        }
        CaseId::SoDiagonalB { p, q, plus } => {
            build_so_diagonal(id, p, q, &[(0, 1), (1, if plus { 1 } else { -1 })])
        }
        CaseId::SoDiagonalC { plus } => {
            build_so_diagonal(id, 3, 3, &[(0, 1), (1, 1), (2, if plus { 1 } else { -1 })])
        }
        CaseId::SoTwistedDiagonal { p, q, r, minus } => {
            if r == 0 || r > p.min(q) || minus > r || p + q > 8 {
                return Err(CaseError::Unsupported(format!(
                    "so({p},{q}) diagonal support {r}, {minus} flipped"
                )));
            }
            let terms: Vec<(usize, i64)> = (0..r)
                .map(|a| (a, if a < r - minus { 1 } else { -1 }))
                .collect();
            build_so_diagonal(id, p, q, &terms)
        }
    }
}

/// Lorentz-signature check for a constructed case: the scalar product
/// `g₀ = h − λ η ⊗ η` with `h` the positive-definite form `(−B)|_n ⊕ B|_p`
/// and `η = h(u, ·)/√…` the direction of a distinguished vector `u ∈ m^H`,
/// assembled at `λ = 2/h(u,u)` so the `u`-axis flips sign.  Returns the
/// exact inertia `(neg, zero, pos)` of the Gram matrix on `m`.
pub fn lorentz_inertia(case: &CaseData) -> Result<(usize, usize, usize), CaseError> {
    let g = &case.algebra;
    let n_part = case
        .n_part
        .as_ref()
        .ok_or_else(|| CaseError::Unsupported("case lacks an n/p split".into()))?;
    let p_part = case.p_part.as_ref().unwrap();
    let m = join(g, n_part, p_part).map_err(CaseError::Algebra)?;
    let dm = m.dim();
    let dn = n_part.dim();
    // Positive-definite background form: −B on n, +B on p (blockwise).
    let mut h = Mat::zeros(dm, dm);
    for i in 0..dm {
        for j in 0..dm {
            let bij = g.killing_value(&m.basis_coords[i], &m.basis_coords[j]);
            h[(i, j)] = if i < dn && j < dn {
                -bij
            } else if i >= dn && j >= dn {
                bij
            } else {
                // n and p are B-orthogonal; keep the (vanishing) cross term.
                bij
            };
        }
    }
    let (hneg, hzero, _) = h.inertia();
    if hneg + hzero != 0 {
        return Err(CaseError::Unsupported(
            "background form is not positive definite".into(),
        ));
    }
    // Timelike direction: the first basis vector of m^H, in m-coordinates.
    if case.m_fixed.dim() == 0 {
        return Err(CaseError::Unsupported("m^H = 0: not admissible".into()));
    }
    let basis = Mat::from_rows(m.basis_coords.clone()).transpose();
    let u = basis
        .solve(&case.m_fixed.basis_coords[0])
        .ok_or_else(|| CaseError::Unsupported("m^H not inside n + p".into()))?;
    let hu = h.mul_vec(&u);
    let huu: Rat = hu.iter().zip(&u).map(|(a, b)| a * b).sum();
    // g₀ = h − (2/h(u,u)) · (h∘u) ⊗ (h∘u): reflection along u.
    let mut gram = h.clone();
    let factor = rat(2) / huu;
    for i in 0..dm {
        for j in 0..dm {
            let v = &gram[(i, j)] - &(&factor * &hu[i]) * &hu[j];
            gram[(i, j)] = v;
        }
    }
    Ok(gram.inertia())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dimensions() {
        assert_eq!(build_classical(ClassicalSpec::SoPQ(1, 2)).unwrap().dim(), 3);
        assert_eq!(build_classical(ClassicalSpec::SlR(5)).unwrap().dim(), 24);
        assert_eq!(build_classical(ClassicalSpec::SuPQ(1, 2)).unwrap().dim(), 8);
        assert_eq!(build_classical(ClassicalSpec::SpOneN(2)).unwrap().dim(), 21);
    }

    #[test]
    fn killing_form_known_values() {
        // so(1,2): signature (1 negative would be wrong — the form on the
        // split algebra has signature (2,1) with one compact direction).
        let g = build_classical(ClassicalSpec::SoPQ(1, 2)).unwrap();
        let (neg, zero, pos) = g.killing.inertia();
        assert_eq!((neg, zero, pos), (1, 0, 2));

        // sl(2,R): B(H,H) = 8 for H = diag(1,−1).
        let g = build_classical(ClassicalSpec::SlR(2)).unwrap();
        let mut hmat = CMat::zeros(2);
        hmat.set(0, 0, CRat::one());
        hmat.set(1, 1, CRat::from_int(-1));
        let coords = g.coords(&hmat).unwrap();
        assert_eq!(g.killing_value(&coords, &coords), rat(8));
    }

    #[test]
    fn jacobi_and_invariance_hold_for_small_algebras() {
        for spec in [
            ClassicalSpec::SoPQ(1, 3),
            ClassicalSpec::SuPQ(1, 2),
            ClassicalSpec::SlR(3),
        ] {
            let g = build_classical(spec).unwrap();
            assert_eq!(g.jacobi_violation(), None, "{}", g.name);
            assert_eq!(g.killing_invariance_violation(), None, "{}", g.name);
        }
    }

    #[test]
    fn real_hyperbolic_fixed_line() {
        for n in 3..=6 {
            let case = build_case(CaseId::RealHyperbolic { n }).unwrap();
            assert_eq!(case.m.dim(), 2 * n - 1, "m dim for n={n}");
            assert_eq!(case.m_fixed.dim(), 1, "m^H for n={n}");
            let v = &case.distinguished[0].1;
            assert!(case.m_fixed.contains(v), "e0^e1 spans m^H, n={n}");
            assert_eq!(case.n_fixed.as_ref().unwrap().dim(), 0);
            assert_eq!(case.p_fixed.as_ref().unwrap().dim(), 1);
        }
    }

    #[test]
    fn sl_quotient_fixed_line_is_b() {
        let case = build_case(CaseId::SlQuotient { p: 2, q: 3 }).unwrap();
        assert_eq!(case.algebra.dim(), 24);
        assert_eq!(case.h.dim(), 4);
        assert_eq!(case.m.dim(), 20);
        assert_eq!(case.m_fixed.dim(), 1);
        let b = &case.distinguished[0].1;
        assert!(case.m_fixed.contains(b));
    }

    #[test]
    fn complex_hyperbolic_invariants() {
        for n in [2usize, 3] {
            let case = build_case(CaseId::ComplexHyperbolic { n }).unwrap();
            assert_eq!(case.h.dim(), (n - 1) * (n - 1), "h = u(n-1), n={n}");
            assert_eq!(case.p_fixed.as_ref().unwrap().dim(), 2, "p^H = Cv, n={n}");
            assert_eq!(case.n_fixed.as_ref().unwrap().dim(), 1, "n^H = Rz', n={n}");
            let zp = &case
                .distinguished
                .iter()
                .find(|(name, _)| name == "z'")
                .unwrap()
                .1;
            assert!(case.n_fixed.as_ref().unwrap().contains(zp));
        }
    }

    #[test]
    fn complex_hyperbolic_central_spectrum() {
        let case = build_case(CaseId::ComplexHyperbolic { n: 3 }).unwrap();
        // z acts on p' by −(n+1)/(n−1)·i = −2i at n = 3.
        assert_eq!(
            case.spectrum_on_p_prime("z").unwrap(),
            vec![(rat(-2), 2)]
        );
        // z0 acts by a scalar as well; the computed value is −(n+1)/n·i.
        assert_eq!(
            case.spectrum_on_p_prime("z0").unwrap(),
            vec![(ratio(-4, 3), 2)]
        );
    }

    #[test]
    fn quaternion_hyperbolic_fixed_line() {
        let case = build_case(CaseId::QuaternionHyperbolic).unwrap();
        assert_eq!(case.algebra.dim(), 21);
        assert_eq!(case.h.dim(), 6);
        assert_eq!(case.m.dim(), 15);
        assert_eq!(case.m_fixed.dim(), 1);
        assert!(case.m_fixed.contains(&case.distinguished[0].1));
    }

    #[test]
    fn so_diagonal_dimensions() {
        let a = build_case(CaseId::SoDiagonalA { p: 2, q: 3 }).unwrap();
        assert_eq!(a.h.dim(), 1);
        assert_eq!(a.n_fixed.as_ref().unwrap().dim(), 1);
        assert_eq!(a.p_fixed.as_ref().unwrap().dim(), 2);
        assert_eq!(a.m_fixed.dim(), 3);

        for plus in [true, false] {
            let b = build_case(CaseId::SoDiagonalB { p: 2, q: 2, plus }).unwrap();
            assert_eq!(b.h.dim(), 1, "twisted diagonal so(2)");
            assert_eq!(b.n_fixed.as_ref().unwrap().dim(), 1);
            assert_eq!(b.p_fixed.as_ref().unwrap().dim(), 2);
        }

        let c = build_case(CaseId::SoDiagonalC { plus: true }).unwrap();
        assert_eq!(c.h.dim(), 3, "diagonal so(3)");
        assert_eq!(c.n_fixed.as_ref().unwrap().dim(), 0);
        assert_eq!(c.p_fixed.as_ref().unwrap().dim(), 1);
        assert_eq!(c.m_fixed.dim(), 1);
    }

    #[test]
    fn fixed_subspace_matches_iterated_kernel_oracle() {
        // Oracle: intersect the kernels of ad h_i one generator at a time.
        let case = build_case(CaseId::ComplexHyperbolic { n: 2 }).unwrap();
        let g = &case.algebra;
        let mut current = case.m.clone();
        for hgen in case.h.basis_coords.clone() {
            let single = Subspace::new(g, vec![hgen]).unwrap();
            current = fixed_subspace(g, &single, &current).unwrap();
        }
        assert_eq!(current.dim(), case.m_fixed.dim());
        for v in &current.basis_coords {
            assert!(case.m_fixed.contains(v));
        }
    }

    #[test]
    fn fixed_subspace_is_monotone_in_h() {
        // su(n−1) ⊂ su(n−1) ⊕ Rz: a smaller subalgebra fixes at least as
        // much.
        let case = build_case(CaseId::ComplexHyperbolic { n: 3 }).unwrap();
        let g = &case.algebra;
        let smaller = Subspace::new(
            g,
            case.h.basis_coords[..case.h.dim() - 1].to_vec(),
        )
        .unwrap();
        let big = fixed_subspace(g, &case.h, &case.m).unwrap();
        let small = fixed_subspace(g, &smaller, &case.m).unwrap();
        assert!(small.dim() >= big.dim());
        for v in &big.basis_coords {
            assert!(small.contains(v));
        }
    }

    #[test]
    fn lorentz_inertia_is_minkowski() {
        for case in [
            build_case(CaseId::RealHyperbolic { n: 3 }).unwrap(),
            build_case(CaseId::ComplexHyperbolic { n: 2 }).unwrap(),
            build_case(CaseId::SoDiagonalC { plus: true }).unwrap(),
        ] {
            let d = case.m.dim();
            assert_eq!(lorentz_inertia(&case).unwrap(), (1, 0, d - 1));
        }
    }
}
