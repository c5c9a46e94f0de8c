use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `A·U ⊆ U`
    Left,
    /// `U·A ⊆ U`
    Right,
    TwoSided,
}

/// `A / I` on the standard coordinates complementary to the pivots of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    pub ideal: Subspace,
    /// `(dim A − dim I) × dim A` matrix of the projection.
    pub projection: Matrix,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.mul_vec(v)
    }

    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        u.image_under(&self.projection)
    }
}

impl LeibnizAlgebra {
    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.check_subspace(u)?;
        Ok(u.contains(&self.product_space_unchecked(u, u)).unwrap())
    }

    pub fn is_ideal(&self, u: &Subspace, side: Side) -> Result<bool> {
        self.check_subspace(u)?;
        let a = self.whole();
        let left = || u.contains(&self.product_space_unchecked(&a, u)).unwrap();
        let right = || u.contains(&self.product_space_unchecked(u, &a)).unwrap();
        Ok(match side {
            Side::Left => left(),
            Side::Right => right(),
            Side::TwoSided => left() && right(),
        })
    }

    /// `N_A(U) = {x : xU ⊆ U and Ux ⊆ U}`.
    pub fn normalizer(&self, u: &Subspace) -> Result<Subspace> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let q = u.quotient_map();
        let mut blocks = Vec::with_capacity(2 * u.dim());
        for b in u.basis() {
            blocks.push(q.mul(&self.right_mult_matrix(b)));
            blocks.push(q.mul(&self.left_mult_matrix(b)));
        }
        Ok(Matrix::vstack(self.field(), self.dim(), &blocks).null_space())
    }

    /// One-sided normalizer `{x : Ux ⊆ U}`.
    pub fn right_normalizer(&self, u: &Subspace) -> Result<Subspace> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let q = u.quotient_map();
        let blocks: Vec<Matrix> = u.basis().iter().map(|b| q.mul(&self.left_mult_matrix(b))).collect();
        Ok(Matrix::vstack(self.field(), self.dim(), &blocks).null_space())
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn normal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let a = self.whole();
        let mut u = s.clone();
        loop {
            let next = u
                .sum(&self.product_space_unchecked(&a, &u))?
                .sum(&self.product_space_unchecked(&u, &a))?;
            if next == u {
                return Ok(u);
            }
            u = next;
        }
    }

    /// Smallest subalgebra containing every generator.
    pub fn subalgebra_generated(&self, gens: &[Vector]) -> Result<Subspace> {
        for g in gens {
            self.check_vector(g)?;
        }
        let mut u = Subspace::span(self.field(), self.dim(), gens.iter().cloned())?;
        loop {
            let next = u.sum(&self.product_space_unchecked(&u, &u))?;
            if next == u {
                return Ok(u);
            }
            u = next;
        }
    }

    /// Algebra induced on a subalgebra, in the coordinates of its canonical
    /// basis.
    pub fn restrict(&self, u: &Subspace) -> Result<LeibnizAlgebra> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let m = u.dim();
        let mut sc = Vec::with_capacity(m * m * m);
        for x in u.basis() {
            for y in u.basis() {
                let p = self.mul(x, y);
                sc.extend(u.coordinates(&p).expect("closed under products"));
            }
        }
        LeibnizAlgebra::new_unchecked(self.field(), m, sc)
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal, Side::TwoSided)? {
            return Err(Error::NotIdeal);
        }
        let comp = ideal.complement_indices();
        let projection = ideal.quotient_map();
        let m = comp.len();
        let mut sc = Vec::with_capacity(m * m * m);
        for &i in &comp {
            for &j in &comp {
                sc.extend(projection.mul_vec(self.basis_product(i, j)));
            }
        }
        let mut algebra = LeibnizAlgebra::new_unchecked(self.field(), m, sc)?;
        if let Some(labels) = &self.labels {
            algebra = algebra.with_labels(comp.iter().map(|&c| labels[c].clone()).collect());
        }
        Ok(Quotient {
            algebra,
            ideal: ideal.clone(),
            projection,
        })
    }

    /// Nilpotent and self-normalizing.
    pub fn is_cartan(&self, u: &Subspace) -> Result<bool> {
        let sub = self.restrict(u)?;
        if !sub.is_nilpotent() {
            return Ok(false);
        }
        Ok(&self.normalizer(u)? == u)
    }
}
