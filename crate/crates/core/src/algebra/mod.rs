//! Leibniz algebras given by structure constants, and their subspace
//! calculus: products, central series, centers, normalizers, closures and
//! quotients.

mod series;
mod structure;

pub use series::{Nilpotency, SeriesKind, SeriesReport};
pub use structure::{Quotient, Side};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{unit, Matrix, Subspace, Vector};

/// Finite-dimensional algebra with `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    dim: usize,
    /// `c[i][j][k]` at `(i * dim + j) * dim + k`
    sc: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

impl LeibnizAlgebra {
    /// Builds the algebra and checks the left Leibniz identity on all basis
    /// triples.
    pub fn new(field: FieldSpec, dim: usize, sc: Vec<Scalar>) -> Result<Self> {
        let a = Self::new_unchecked(field, dim, sc)?;
        match a.leibniz_violation() {
            None => Ok(a),
            Some((i, j, k)) => Err(Error::NotLeibniz(i, j, k)),
        }
    }

    /// Builds the table without checking the identity. Used for census
    /// throughput and for replaying counterexample files.
    pub fn new_unchecked(field: FieldSpec, dim: usize, sc: Vec<Scalar>) -> Result<Self> {
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: sc.len(),
            });
        }
        if let Some(x) = sc.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field, x.field()));
        }
        Ok(LeibnizAlgebra {
            field,
            dim,
            sc,
            labels: None,
        })
    }

    /// Table from sparse `(i, j, k, c)` entries, 0-based, meaning
    /// `c[i][j][k] = c`.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut sc = vec![field.zero(); dim * dim * dim];
        for &(i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j).max(k) + 1,
                });
            }
            sc[(i * dim + j) * dim + k] = field.from_i64(c);
        }
        Self::new(field, dim, sc)
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Self::new_unchecked(field, dim, vec![field.zero(); dim * dim * dim]).expect("sized table")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.sc
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn labels(&self) -> Vec<String> {
        self.labels
            .clone()
            .unwrap_or_else(|| (1..=self.dim).map(|i| format!("e{i}")).collect())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(Scalar::is_zero)
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        Ok(())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch(self.field, u.field()));
        }
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, p) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !p.is_zero() {
                        *o = &*o + &(&c * p);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `L_x : y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let columns: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &columns).expect("square")
    }

    /// Matrix of `R_y : x ↦ x·y`.
    pub fn right_mult_matrix(&self, y: &[Scalar]) -> Matrix {
        let columns: Vec<Vector> = (0..self.dim).map(|i| self.mul(&self.basis_vector(i), y)).collect();
        Matrix::from_columns(self.field, self.dim, &columns).expect("square")
    }

    pub fn left_basis_matrices(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.left_mult_matrix(&self.basis_vector(i)))
            .collect()
    }

    pub fn right_basis_matrices(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.right_mult_matrix(&self.basis_vector(i)))
            .collect()
    }

    /// `true` iff `e_i(e_j e_k) = (e_i e_j)e_k + e_j(e_i e_k)` for all basis
    /// triples, which suffices by multilinearity.
    pub fn is_leibniz(&self) -> bool {
        self.leibniz_violation().is_none()
    }

    /// First basis triple `(i, j, k)` violating the identity.
    pub fn leibniz_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let left = self.left_basis_matrices();
        let right = self.right_basis_matrices();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = left[i].mul_vec(self.basis_product(j, k));
                    let a = right[k].mul_vec(self.basis_product(i, j));
                    let b = left[j].mul_vec(self.basis_product(i, k));
                    if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `span{u·v : u ∈ U, v ∈ V}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        Ok(self.product_space_unchecked(u, v))
    }

    pub(crate) fn product_space_unchecked(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut products = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis() {
            for y in v.basis() {
                products.push(self.mul(x, y));
            }
        }
        Subspace::span(self.field, self.dim, products).expect("products live in the algebra")
    }

    /// `A²`.
    pub fn derived(&self) -> Subspace {
        let a = self.whole();
        self.product_space_unchecked(&a, &a)
    }

    /// Renders a vector as a combination of the basis labels, e.g. `a - a^2`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let labels = self.labels();
        let mut out = String::new();
        for (c, l) in v.iter().zip(&labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(l);
            } else {
                out.push_str(&format!("{mag}*{l}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `0` or `span{...}` over the canonical basis.
    pub fn format_subspace(&self, u: &Subspace) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = u.basis().iter().map(|v| self.format_vector(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}
