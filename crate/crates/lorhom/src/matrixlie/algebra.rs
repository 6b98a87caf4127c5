//! Matrix Lie algebras over exact complex rationals.
//!
//! An algebra is a real span of complex matrices `b_1, …, b_d` closed under
//! the commutator; the structure constants `c_{ij}^k` are recovered exactly
//! by solving `[b_i, b_j] = Σ_k c_{ij}^k b_k` in the flattened real
//! coordinate space `R^{2s²}`.  Everything downstream — Killing form,
//! orthogonal complements, fixed subspaces `m^H` — is exact linear algebra
//! over those real coordinates.

use super::scalar::CRat;
use crate::linalg::{Mat, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieAlgError {
    #[error("bracket [b_{0}, b_{1}] is not in the span of the basis")]
    NotClosed(usize, usize),
    #[error("subspace basis is linearly dependent")]
    DependentBasis,
    #[error("Killing form degenerate on the subalgebra")]
    DegenerateRestriction,
    #[error("element does not normalize the subspace")]
    NotInvariant,
    #[error("spectrum is not of the expected form: {0}")]
    BadSpectrum(String),
}

/// Dense square matrix over [`CRat`], row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMat {
    pub n: usize,
    data: Vec<CRat>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat {
            n,
            data: vec![CRat::zero(); n * n],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &CRat {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CRat) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let mut out = CMat::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let v = &(a * b) + out.at(i, j);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        out
    }

    pub fn add(&self, other: &CMat) -> CMat {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        out
    }

    pub fn commutator(&self, other: &CMat) -> CMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CRat::is_zero)
    }

    /// Real flattening: all real parts, then all imaginary parts.
    pub fn flatten(&self) -> Vec<Rat> {
        let mut out: Vec<Rat> = self.data.iter().map(|c| c.re.clone()).collect();
        out.extend(self.data.iter().map(|c| c.im.clone()));
        out
    }
}

/// Solves membership in the real span of a fixed independent family by a
/// precomputed pivot-submatrix inverse: `O(d²)` per query instead of a fresh
/// elimination.
struct SpanSolver {
    /// Flattened generators as columns (2s² × d).
    columns: Mat,
    pivot_rows: Vec<usize>,
    inverse: Mat,
}

impl SpanSolver {
    fn new(flat: &[Vec<Rat>]) -> Result<Self, LieAlgError> {
        let d = flat.len();
        let rows = flat[0].len();
        let mut columns = Mat::zeros(rows, d);
        for (j, v) in flat.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                columns[(i, j)] = x.clone();
            }
        }
        // Pivot rows: the pivot columns of the transpose's echelon form.
        let mut t = columns.transpose();
        let pivot_rows = t.rref();
        if pivot_rows.len() != d {
            return Err(LieAlgError::DependentBasis);
        }
        let mut square = Mat::zeros(d, d);
        for (a, &i) in pivot_rows.iter().enumerate() {
            for j in 0..d {
                square[(a, j)] = columns[(i, j)].clone();
            }
        }
        let inverse = square.inverse().expect("pivot submatrix is invertible");
        Ok(SpanSolver {
            columns,
            pivot_rows,
            inverse,
        })
    }

    /// Coordinates of `v` in the span, or `None` if `v` is outside it.
    fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let restricted: Vec<Rat> = self.pivot_rows.iter().map(|&i| v[i].clone()).collect();
        let x = self.inverse.mul_vec(&restricted);
        let rebuilt = self.columns.mul_vec(&x);
        if rebuilt == v {
            Some(x)
        } else {
            None
        }
    }
}

/// A real matrix Lie algebra with exact structure constants.
pub struct MatrixLieAlgebra {
    pub name: String,
    pub matrix_size: usize,
    pub basis: Vec<CMat>,
    /// `structure[i][j]` holds the coordinates of `[b_i, b_j]`.
    pub structure: Vec<Vec<Vec<Rat>>>,
    /// Killing form Gram matrix `B(b_i, b_j)`.
    pub killing: Mat,
    solver: SpanSolver,
}

impl MatrixLieAlgebra {
    pub fn new(name: &str, matrix_size: usize, basis: Vec<CMat>) -> Result<Self, LieAlgError> {
        let d = basis.len();
        let flat: Vec<Vec<Rat>> = basis.iter().map(CMat::flatten).collect();
        let solver = SpanSolver::new(&flat)?;
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    structure[i][j] = vec![Rat::zero(); d];
                    continue;
                }
                let br = basis[i].commutator(&basis[j]);
                structure[i][j] = solver
                    .coords(&br.flatten())
                    .ok_or(LieAlgError::NotClosed(i, j))?;
            }
        }
        let killing = killing_from_structure(&structure);
        Ok(MatrixLieAlgebra {
            name: name.to_string(),
            matrix_size,
            basis,
            structure,
            killing,
            solver,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a matrix in the algebra basis, if it lies in the span.
    pub fn coords(&self, m: &CMat) -> Option<Vec<Rat>> {
        self.solver.coords(&m.flatten())
    }

    /// The matrix with the given basis coordinates.
    pub fn element(&self, coords: &[Rat]) -> CMat {
        let mut out = CMat::zeros(self.matrix_size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.matrix_size {
                for j in 0..self.matrix_size {
                    let add = &CRat::from_rat(c.clone()) * b.at(i, j);
                    out.set(i, j, &add + out.at(i, j));
                }
            }
        }
        out
    }

    /// Bracket in coordinates, through the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the algebra basis.
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for j in 0..d {
            let mut col = vec![Rat::zero(); d];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (c, s) in col.iter_mut().zip(&self.structure[i][j]) {
                    if !s.is_zero() {
                        *c += xi * s;
                    }
                }
            }
            for i in 0..d {
                m[(i, j)] = std::mem::take(&mut col[i]);
            }
        }
        m
    }

    pub fn killing_value(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.killing[(i, j)].is_zero() {
                    acc += xi * yj * &self.killing[(i, j)];
                }
            }
        }
        acc
    }

    /// Checks the Jacobi identity on all basis triples; returns the first
    /// violating triple, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let a = self.bracket(&self.structure[j][k], &unit(d, i));
                    let b = self.bracket(&self.structure[k][i], &unit(d, j));
                    let c = self.bracket(&self.structure[i][j], &unit(d, k));
                    let sum: Vec<Rat> = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((x, y), z)| x + y + z)
                        .collect();
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Checks `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn killing_invariance_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.killing_value(&self.structure[i][j], &unit(d, k));
                    let rhs = self.killing_value(&unit(d, j), &self.structure[i][k]);
                    if !(lhs + rhs).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

fn unit(d: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); d];
    v[i] = Rat::from_integer(1.into());
    v
}

fn killing_from_structure(structure: &[Vec<Vec<Rat>>]) -> Mat {
    let d = structure.len();
    let mut b = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..=i {
            // trace(ad b_i ∘ ad b_j) = Σ_{k,l} c_{jk}^l c_{il}^k
            let mut acc = Rat::zero();
            for (k, row_jk) in structure[j].iter().enumerate() {
                for (l, cj) in row_jk.iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    let ci = &structure[i][l][k];
                    if !ci.is_zero() {
                        acc += cj * ci;
                    }
                }
            }
            b[(i, j)] = acc.clone();
            b[(j, i)] = acc;
        }
    }
    b
}

/// A real subspace of an algebra, held as coordinate vectors in the algebra
/// basis.  The basis is checked for independence on construction.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis_coords: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn new(algebra: &MatrixLieAlgebra, basis_coords: Vec<Vec<Rat>>) -> Result<Self, LieAlgError> {
        if !basis_coords.is_empty() {
            let m = Mat::from_rows(basis_coords.clone());
            assert_eq!(m.cols, algebra.dim());
            if m.rank() != basis_coords.len() {
                return Err(LieAlgError::DependentBasis);
            }
        }
        Ok(Subspace { basis_coords })
    }

    /// Subspace spanned by explicit matrices.
    pub fn from_matrices(
        algebra: &MatrixLieAlgebra,
        mats: &[CMat],
    ) -> Result<Self, LieAlgError> {
        let coords = mats
            .iter()
            .map(|m| algebra.coords(m).ok_or(LieAlgError::DependentBasis))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::new(algebra, coords)
    }

    pub fn dim(&self) -> usize {
        self.basis_coords.len()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        if self.basis_coords.is_empty() {
            return v.iter().all(Zero::is_zero);
        }
        let mut rows = self.basis_coords.clone();
        rows.push(v.to_vec());
        Mat::from_rows(rows).rank() == self.dim()
    }

    /// Whether `[x, self] ⊆ self` for every generator `x` of `other`.
    pub fn invariant_under(&self, algebra: &MatrixLieAlgebra, other: &Subspace) -> bool {
        other.basis_coords.iter().all(|x| {
            self.basis_coords
                .iter()
                .all(|y| self.contains(&algebra.bracket(x, y)))
        })
    }

    /// Whether the subspace is closed under the bracket.
    pub fn is_subalgebra(&self, algebra: &MatrixLieAlgebra) -> bool {
        self.invariant_under(algebra, self)
    }
}

/// Killing-orthogonal complement of a subalgebra `h`:
/// `m = { x : B(x, h) = 0 }`, with `g = h ⊕ m` verified.  `Ad_H`-invariance
/// of `m` is automatic from the invariance of `B`, and is re-checked.
pub fn killing_complement(
    g: &MatrixLieAlgebra,
    h: &Subspace,
) -> Result<Subspace, LieAlgError> {
    let d = g.dim();
    if h.dim() == 0 {
        return Subspace::new(g, (0..d).map(|i| unit(d, i)).collect());
    }
    let rows: Vec<Vec<Rat>> = h
        .basis_coords
        .iter()
        .map(|y| {
            (0..d)
                .map(|j| g.killing_value(y, &unit(d, j)))
                .collect::<Vec<Rat>>()
        })
        .collect();
    let m = Subspace::new(g, Mat::from_rows(rows).nullspace())?;
    if m.dim() + h.dim() != d {
        return Err(LieAlgError::DegenerateRestriction);
    }
    let mut all = h.basis_coords.clone();
    all.extend(m.basis_coords.clone());
    if Mat::from_rows(all).rank() != d {
        return Err(LieAlgError::DegenerateRestriction);
    }
    if !m.invariant_under(g, h) {
        return Err(LieAlgError::NotInvariant);
    }
    Ok(m)
}

/// Fixed subspace `m^H = { x ∈ m : [h_i, x] = 0 for all generators h_i }`,
/// computed as one exact nullspace of the stacked ad-operators restricted
/// to `m`.
pub fn fixed_subspace(
    g: &MatrixLieAlgebra,
    h: &Subspace,
    m: &Subspace,
) -> Result<Subspace, LieAlgError> {
    let dm = m.dim();
    if dm == 0 {
        return Subspace::new(g, Vec::new());
    }
    if h.dim() == 0 {
        return Ok(m.clone());
    }
    let d = g.dim();
    let mut stacked = Mat::zeros(h.dim() * d, dm);
    for (block, hgen) in h.basis_coords.iter().enumerate() {
        for (col, mgen) in m.basis_coords.iter().enumerate() {
            let br = g.bracket(hgen, mgen);
            for (row, v) in br.into_iter().enumerate() {
                stacked[(block * d + row, col)] = v;
            }
        }
    }
    let coeffs = stacked.nullspace();
    let basis = coeffs
        .into_iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); d];
            for (ci, mgen) in c.iter().zip(&m.basis_coords) {
                if ci.is_zero() {
                    continue;
                }
                for (vi, mi) in v.iter_mut().zip(mgen) {
                    *vi += ci * mi;
                }
            }
            v
        })
        .collect();
    Subspace::new(g, basis)
}

/// Spectrum of `ad z` on an `ad z`-invariant subspace `w` carrying a complex
/// structure `J` (given in `w`-coordinates).  When `ad z` acts as
/// multiplication by `λ i` on a complex submodule, the operator `−J·A`
/// (with `A` the matrix of `ad z` on `w`) has the rational eigenvalue `λ`;
/// the returned multiplicities are complex dimensions.
pub fn central_action_spectrum(
    g: &MatrixLieAlgebra,
    z: &[Rat],
    w: &Subspace,
    j: &Mat,
) -> Result<Vec<(Rat, usize)>, LieAlgError> {
    let dw = w.dim();
    if dw == 0 {
        return Ok(Vec::new());
    }
    // Matrix of ad z on w in w-coordinates.
    let basis = Mat::from_rows(w.basis_coords.clone()).transpose();
    let mut a = Mat::zeros(dw, dw);
    for (col, wgen) in w.basis_coords.iter().enumerate() {
        let br = g.bracket(z, wgen);
        let coords = basis.solve(&br).ok_or(LieAlgError::NotInvariant)?;
        for (row, v) in coords.into_iter().enumerate() {
            a[(row, col)] = v;
        }
    }
    if a.mul(j) != j.mul(&a) {
        return Err(LieAlgError::BadSpectrum(
            "ad z does not commute with the complex structure".into(),
        ));
    }
    let mut m = j.mul(&a);
    for i in 0..dw {
        for k in 0..dw {
            let v = -m[(i, k)].clone();
            m[(i, k)] = v;
        }
    }
    let eig = m
        .rational_eigenvalues()
        .map_err(LieAlgError::BadSpectrum)?;
    Ok(eig
        .into_iter()
        .map(|(lambda, mult)| (lambda, mult / 2))
        .collect())
}
