use std::fmt;

use crate::algebra::LeibnizAlgebra;
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    LowerCentral,
    UpperCentral,
    RSeries,
}

/// Terms of a central-type series. A chain that reaches its end (0 for the
/// lower central series, `A` for the ascending ones) stops there and has
/// `stabilized == false`; a chain that gets stuck repeats its last term once
/// and has `stabilized == true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    /// Nilpotency class (lower/upper central) or length (R-series) when the
    /// chain reaches its end.
    pub class_or_depth: Option<usize>,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, Nilpotency::Class(_))
    }

    pub fn class(&self) -> Option<usize> {
        match self {
            Nilpotency::Class(t) => Some(*t),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(t) => write!(f, "{t}"),
            Nilpotency::NotNilpotent => write!(f, "non-nilpotent"),
        }
    }
}

impl LeibnizAlgebra {
    /// `A¹ = A`, `A^{j+1} = A·A^j`.
    pub fn lower_central_series(&self) -> SeriesReport {
        let whole = self.whole();
        let mut terms = vec![whole.clone()];
        let mut stabilized = false;
        // chain length is bounded by dim + 1; the cap only guards against bugs
        for _ in 0..=self.dim() + 1 {
            let last = terms.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.product_space_unchecked(&whole, last);
            let stuck = &next == last;
            terms.push(next);
            if stuck {
                stabilized = true;
                break;
            }
        }
        let class_or_depth = (!stabilized).then(|| terms.len() - 1);
        SeriesReport {
            kind: SeriesKind::LowerCentral,
            terms,
            stabilized,
            class_or_depth,
        }
    }

    pub fn nilpotency_class(&self) -> Nilpotency {
        let series = self.lower_central_series();
        match series.class_or_depth {
            Some(t) => {
                debug_assert!(
                    t == 0 || self.center().contains(&series.terms[t]).unwrap(),
                    "last nonzero term of the lower central series lies in the center"
                );
                Nilpotency::Class(t)
            }
            None => Nilpotency::NotNilpotent,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_nilpotent()
    }

    /// `{z : Az = 0}`.
    pub fn right_center(&self) -> Subspace {
        Matrix::vstack(self.field(), self.dim(), &self.left_basis_matrices()).null_space()
    }

    /// `{z : zA = 0}`.
    pub fn left_center(&self) -> Subspace {
        Matrix::vstack(self.field(), self.dim(), &self.right_basis_matrices()).null_space()
    }

    /// `{z : zA = Az = 0}`.
    pub fn center(&self) -> Subspace {
        let mut blocks = self.left_basis_matrices();
        blocks.extend(self.right_basis_matrices());
        Matrix::vstack(self.field(), self.dim(), &blocks).null_space()
    }

    /// `{z : Az ⊆ W and zA ⊆ W}`.
    fn central_preimage(&self, w: &Subspace) -> Subspace {
        let q = w.quotient_map();
        let blocks: Vec<Matrix> = self
            .left_basis_matrices()
            .iter()
            .chain(&self.right_basis_matrices())
            .map(|m| q.mul(m))
            .collect();
        Matrix::vstack(self.field(), self.dim(), &blocks).null_space()
    }

    /// `{r : Ar ⊆ W}`.
    fn left_preimage(&self, w: &Subspace) -> Subspace {
        let q = w.quotient_map();
        let blocks: Vec<Matrix> = self.left_basis_matrices().iter().map(|m| q.mul(m)).collect();
        Matrix::vstack(self.field(), self.dim(), &blocks).null_space()
    }

    fn ascending<F>(&self, kind: SeriesKind, first: Subspace, step: F) -> SeriesReport
    where
        F: Fn(&Subspace) -> Subspace,
    {
        let mut terms = vec![first];
        let mut stabilized = false;
        for _ in 0..=self.dim() + 1 {
            let last = terms.last().unwrap();
            if last.is_full() {
                break;
            }
            let next = step(last);
            let stuck = &next == last;
            terms.push(next);
            if stuck {
                stabilized = true;
                break;
            }
        }
        let class_or_depth = if stabilized {
            None
        } else if self.dim() == 0 {
            Some(0)
        } else {
            Some(terms.len())
        };
        SeriesReport {
            kind,
            terms,
            stabilized,
            class_or_depth,
        }
    }

    /// `Z₁ = Z(A)`, `Z_{j+1} = {z : Az, zA ⊆ Z_j}`.
    pub fn upper_central_series(&self) -> SeriesReport {
        self.ascending(SeriesKind::UpperCentral, self.center(), |w| self.central_preimage(w))
    }

    /// `R₁ = {r : Ar = 0}`, `R_{j+1} = {r : Ar ⊆ R_j}`; every term is a left
    /// ideal.
    pub fn r_series(&self) -> SeriesReport {
        let report = self.ascending(SeriesKind::RSeries, self.right_center(), |w| self.left_preimage(w));
        debug_assert!(report
            .terms
            .iter()
            .all(|t| t.contains(&self.product_space_unchecked(&self.whole(), t)).unwrap()));
        report
    }
}
