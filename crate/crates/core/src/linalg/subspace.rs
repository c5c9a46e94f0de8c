use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::matrix::{rref_rows, Matrix};
use crate::linalg::Vector;

/// A subspace of `F^n` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            pivots: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(field, ambient, i)).collect();
        Subspace {
            field,
            ambient,
            pivots: (0..ambient).collect(),
            basis,
        }
    }

    pub fn span<I>(field: FieldSpec, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            check_vector(field, ambient, &v)?;
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        let pivots = rref_rows(&mut rows, ambient);
        Ok(Subspace {
            field,
            ambient,
            pivots,
            basis: rows,
        })
    }

    /// Wraps rows the caller guarantees are already in reduced echelon form.
    pub(crate) fn from_rref_unchecked(
        field: FieldSpec,
        ambient: usize,
        pivots: Vec<usize>,
        basis: Vec<Vector>,
    ) -> Self {
        debug_assert_eq!(pivots.len(), basis.len());
        Subspace {
            field,
            ambient,
            pivots,
            basis,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Standard coordinates that are not pivots; they index a basis of the
    /// quotient `F^n / self`.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Subspace::span(self.field, self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Exact intersection from the kernel of `[Uᵀ | -Vᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let du = self.dim();
        let mut columns: Vec<Vector> = self.basis.clone();
        columns.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let relation = Matrix::from_columns(self.field, self.ambient, &columns)?;
        let kernel = relation.null_space();
        let common = kernel.basis().iter().map(|coeffs| {
            let mut v = vec![self.field.zero(); self.ambient];
            for (c, u) in coeffs[..du].iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(u) {
                    *x = &*x + &(c * y);
                }
            }
            v
        });
        Subspace::span(self.field, self.ambient, common.collect::<Vec<_>>())
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        check_vector(self.field, self.ambient, v)?;
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(other.basis.iter().all(|v| self.reduce(v).iter().all(Scalar::is_zero)))
    }

    /// Coordinates of a member with respect to the stored basis. These are
    /// just its entries at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.reduce(v).iter().all(Scalar::is_zero) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear map `F^n → F^n / self`, written in the coordinates of
    /// `complement_indices()`. Its kernel is exactly `self`.
    pub fn quotient_map(&self) -> Matrix {
        let comp = self.complement_indices();
        let mut m = Matrix::zeros(self.field, comp.len(), self.ambient);
        for (r, &c) in comp.iter().enumerate() {
            m.set(r, c, self.field.one());
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                if !row[c].is_zero() {
                    m.set(r, p, -&row[c]);
                }
            }
        }
        m
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let imgs = self.basis.iter().map(|v| m.mul_vec(v)).collect::<Vec<_>>();
        Subspace::span(self.field, m.rows(), imgs).expect("image vectors have row length")
    }

    /// Every element, for finite fields: all linear combinations of the basis.
    pub fn elements(&self) -> Result<Vec<Vector>> {
        let Some(elems) = self.field.elements() else {
            return Err(Error::InfiniteField(self.field));
        };
        let mut out = vec![vec![self.field.zero(); self.ambient]];
        for b in &self.basis {
            let mut next = Vec::with_capacity(out.len() * elems.len());
            for c in &elems {
                for v in &out {
                    next.push(v.iter().zip(b).map(|(x, y)| x + &(c * y)).collect::<Vector>());
                }
            }
            out = next;
        }
        Ok(out)
    }
}

pub(crate) fn unit(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn check_vector(field: FieldSpec, ambient: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: v.len(),
        });
    }
    if let Some(x) = v.iter().find(|x| x.field() != field) {
        return Err(Error::FieldMismatch(field, x.field()));
    }
    Ok(())
}
