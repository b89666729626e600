use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// A subspace of `F^n`, held as a basis matrix in reduced column-echelon form.
///
/// The form is canonical: two values describe the same subspace exactly when
/// their basis matrices are entry-identical, so derived `Eq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    basis: Matrix<F>,
    /// Pivot row of each basis column; the basis restricted to these rows is the identity.
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Column span of `m`.
    pub fn span(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.transpose().rref_with_pivots();
        let rank = pivots.len();
        let basis = r.row_block(0, rank).transpose();
        Subspace { basis, pivots }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { basis: Matrix::zeros(n, 0), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Canonical basis, `ambient_dim × dim`.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length");
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.basis.mul_vec(&c).as_slice() == v {
            Some(c)
        } else {
            None
        }
    }

    /// Coordinates of every column of `m`, as a `dim × m.cols` matrix.
    pub fn coordinates_of(&self, m: &Matrix<F>) -> Option<Matrix<F>> {
        let mut out = Matrix::zeros(self.dim(), m.cols());
        for j in 0..m.cols() {
            let c = self.coordinates(&m.column(j))?;
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.coordinates_of(&other.basis).is_some()
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::Shape(format!(
                "subspaces of F^{} and F^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let n = self.ambient_dim();
        Ok(Subspace::span(&Matrix::hstack(&[&self.basis, &other.basis], n)))
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let n = self.ambient_dim();
        // (x, y) with S x = T y; the intersection is spanned by S x.
        let stacked = Matrix::hstack(&[&self.basis, &other.basis.scale(&-F::one())], n);
        let ker = stacked.kernel();
        let xs = ker.basis.row_block(0, self.dim());
        Ok(Subspace::span(&self.basis.mul(&xs)))
    }

    /// Rows spanning the annihilator: `A·v = 0` exactly for `v` in the subspace.
    pub fn annihilator(&self) -> Matrix<F> {
        self.basis.transpose().kernel().basis.transpose()
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.cols() != self.ambient_dim() {
            return Err(Error::Shape(format!(
                "map with {} columns applied to a subspace of F^{}",
                m.cols(),
                self.ambient_dim()
            )));
        }
        Ok(Subspace::span(&m.mul(&self.basis)))
    }

    /// `{v : m·v ∈ self}`.
    pub fn preimage(m: &Matrix<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
        if m.rows() != s.ambient_dim() {
            return Err(Error::Shape(format!(
                "preimage under a map with {} rows of a subspace of F^{}",
                m.rows(),
                s.ambient_dim()
            )));
        }
        if s.is_full() {
            return Ok(Subspace::full(m.cols()));
        }
        Ok(s.annihilator().mul(m).kernel())
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in F^{}: {})", self.dim(), self.ambient_dim(), self.basis)
    }
}
