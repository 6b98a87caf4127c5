//! Exact rational linear algebra.
//!
//! Everything in this crate that touches a matrix goes through this module:
//! Gaussian elimination with first-nonzero pivoting over arbitrary-precision
//! rationals, nullspaces, linear solves, and inertia of symmetric forms.
//! There is no floating point anywhere; every rank and dimension claim is
//! exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix over `Rat`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// In-place reduced row echelon form. Pivot choice is "first nonzero in
    /// column", which is fine over exact rationals. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if consistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if nonsingular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inertia `(negative, zero, positive)` of a symmetric matrix, computed
    /// by exact symmetric (congruence) reduction. Sylvester's law of inertia
    /// makes the count independent of the reduction path.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert_eq!(self.rows, self.cols);
        let mut a = self.clone();
        let n = a.rows;
        let (mut neg, mut zero, mut pos) = (0, 0, 0);
        let mut start = 0;
        while start < n {
            if a[(start, start)].is_zero() {
                // Look for a later nonzero diagonal entry to swap in, or an
                // off-diagonal entry to fold onto the diagonal.
                if let Some(k) = (start + 1..n).find(|&k| !a[(k, k)].is_zero()) {
                    a.congruence_swap(start, k);
                } else if let Some((i, j)) = Self::find_offdiag(&a, start, n) {
                    // row/col i += row/col j creates 2*a_ij on the diagonal
                    a.congruence_add(i, j);
                    a.congruence_swap(start, i);
                } else {
                    zero += n - start;
                    break;
                }
            }
            let d = a[(start, start)].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in start + 1..n {
                if !a[(i, start)].is_zero() {
                    let f = &a[(i, start)] / &d;
                    // row i -= f * row start; col i -= f * col start
                    for j in start..n {
                        let v = &a[(i, j)] - &f * &a[(start, j)];
                        a[(i, j)] = v;
                    }
                    for j in start..n {
                        let v = &a[(j, i)] - &f * &a[(j, start)];
                        a[(j, i)] = v;
                    }
                }
            }
            start += 1;
        }
        (neg, zero, pos)
    }

    fn find_offdiag(a: &Mat, start: usize, n: usize) -> Option<(usize, usize)> {
        for i in start..n {
            for j in i + 1..n {
                if !a[(i, j)].is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn congruence_swap(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn congruence_add(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = &self[(i, c)] + &self[(j, c)];
            self[(i, c)] = v;
        }
        for r in 0..self.rows {
            let v = &self[(r, i)] + &self[(r, j)];
            self[(r, i)] = v;
        }
    }

    /// Rational eigenvalues of a square matrix whose minimal polynomial
    /// splits over the rationals, with the real dimension of each kernel
    /// `ker(M - lambda)` as multiplicity. Errors if the minimal polynomial
    /// has a non-rational root.
    pub fn rational_eigenvalues(&self) -> Result<Vec<(Rat, usize)>, String> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Ok(Vec::new());
        }
        let minpoly = self.minimal_polynomial();
        let roots = rational_roots(&minpoly)?;
        let mut out = Vec::new();
        let mut total = 0;
        for lambda in roots {
            let mut m = self.clone();
            for i in 0..n {
                let v = &m[(i, i)] - &lambda;
                m[(i, i)] = v;
            }
            let mult = n - m.rank();
            if mult > 0 {
                total += mult;
                out.push((lambda, mult));
            }
        }
        if total != n {
            return Err("matrix is not diagonalizable over the rationals".into());
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Monic minimal polynomial, lowest degree first coefficient order
    /// `c_0 + c_1 x + ... + x^k`.
    fn minimal_polynomial(&self) -> Vec<Rat> {
        let n = self.rows;
        let mut powers: Vec<Vec<Rat>> = vec![Mat::identity(n).data];
        let mut cur = Mat::identity(n);
        loop {
            cur = cur.mul(self);
            // Is cur a combination of the previous powers?
            let stack = Mat::from_rows(powers.clone()).transpose();
            if let Some(coeffs) = stack.solve(&cur.data) {
                let mut poly: Vec<Rat> = coeffs.into_iter().map(|c| -c).collect();
                poly.push(Rat::one());
                return poly;
            }
            powers.push(cur.data.clone());
            assert!(powers.len() <= n + 1, "minimal polynomial search overran");
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Rational roots of a rational-coefficient polynomial (low degree first).
/// Errors if the polynomial does not split into rational linear factors.
fn rational_roots(poly: &[Rat]) -> Result<Vec<Rat>, String> {
    // Clear denominators to an integer polynomial.
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut remaining: Vec<BigInt> = ints;
    // Strip x = 0 roots.
    let mut roots = Vec::new();
    while remaining.first().is_some_and(Zero::is_zero) && remaining.len() > 1 {
        roots.push(Rat::zero());
        remaining.remove(0);
    }
    while remaining.len() > 1 {
        let a0 = remaining[0].clone();
        let an = remaining.last().unwrap().clone();
        let cand = candidate_roots(&a0, &an);
        let Some(r) = cand.into_iter().find(|r| eval_int_poly(&remaining, r).is_zero()) else {
            return Err(format!(
                "polynomial has a non-rational root (remaining degree {})",
                remaining.len() - 1
            ));
        };
        remaining = deflate(&remaining, &r);
        roots.push(r);
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn candidate_roots(a0: &BigInt, an: &BigInt) -> Vec<Rat> {
    let ps = divisors(a0);
    let qs = divisors(an);
    let mut out = Vec::new();
    for p in &ps {
        for q in &qs {
            let r = BigRational::new(p.clone(), q.clone());
            out.push(-r.clone());
            out.push(r);
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn eval_int_poly(poly: &[BigInt], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in poly.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Synthetic division of an integer polynomial by `(x - r)`; the quotient is
/// rescaled back to integers.
fn deflate(poly: &[BigInt], r: &Rat) -> Vec<BigInt> {
    let mut quotient: Vec<Rat> = Vec::with_capacity(poly.len() - 1);
    let mut carry = Rat::zero();
    for c in poly.iter().rev() {
        let v = BigRational::from_integer(c.clone()) + &carry * r;
        quotient.push(v.clone());
        carry = v;
    }
    quotient.pop();
    quotient.reverse();
    let lcm = quotient
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    quotient.iter().map(|c| (c * &lcm).to_integer()).collect()
}

/// Formats a rational as `p/q` (or plain `p` when integral).
pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nullspace_of_rank_one() {
        let m = Mat::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let s = Mat::from_rows(vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]]);
        assert!(s.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn inertia_of_diagonal_and_hyperbolic() {
        let d = Mat::from_rows(vec![
            vec![rat(-2), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(5)],
        ]);
        assert_eq!(d.inertia(), (1, 1, 1));
        // Hyperbolic plane: zero diagonal, must fold off-diagonal.
        let h = Mat::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(h.inertia(), (1, 0, 1));
    }

    #[test]
    fn eigenvalues_of_small_matrix() {
        let m = Mat::from_rows(vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(-3)],
        ]);
        let eig = m.rational_eigenvalues().unwrap();
        assert_eq!(eig, vec![(rat(-3), 1), (rat(2), 2)]);
    }

    #[test]
    fn eigenvalue_failure_on_rotation() {
        // x^2 + 1 has no rational roots.
        let m = Mat::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        assert!(m.rational_eigenvalues().is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(rows in proptest::collection::vec(
            proptest::collection::vec(small_rat(), 4), 1..5))
        {
            let mut m = Mat::from_rows(rows);
            m.rref();
            let once = m.clone();
            m.rref();
            prop_assert_eq!(once, m);
        }

        #[test]
        fn nullspace_vectors_annihilate(rows in proptest::collection::vec(
            proptest::collection::vec(small_rat(), 4), 1..5))
        {
            let m = Mat::from_rows(rows);
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.len(), m.cols);
            for v in &ns {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn inertia_counts_sum_to_dimension(diag in proptest::collection::vec(-5i64..=5, 1..5)) {
            let n = diag.len();
            let mut m = Mat::zeros(n, n);
            for (i, &d) in diag.iter().enumerate() {
                m[(i, i)] = rat(d);
            }
            let (neg, zero, pos) = m.inertia();
            prop_assert_eq!(neg + zero + pos, n);
            prop_assert_eq!(neg, diag.iter().filter(|&&d| d < 0).count());
        }
    }
}
