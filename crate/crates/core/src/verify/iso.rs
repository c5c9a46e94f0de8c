//! Isomorphism testing by backtracking over change-of-basis matrices.

use crate::algebra::{LeibnizAlgebra, Nilpotency};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};

/// Cap on `|GL(n, q)|`.
pub const DEFAULT_GL_BUDGET: u128 = 10_000_000;

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub dim: usize,
    pub nilpotency: Nilpotency,
    pub lower_central: Vec<usize>,
    pub upper_central: Vec<usize>,
    pub r_series: Vec<usize>,
    /// center, left center, right center
    pub centers: (usize, usize, usize),
    pub derived: usize,
}

pub fn invariants(a: &LeibnizAlgebra) -> Invariants {
    Invariants {
        dim: a.dim(),
        nilpotency: a.nilpotency_class(),
        lower_central: a.lower_central_series().dims(),
        upper_central: a.upper_central_series().dims(),
        r_series: a.r_series().dims(),
        centers: (a.center().dim(), a.left_center().dim(), a.right_center().dim()),
        derived: a.derived().dim(),
    }
}

pub fn gl_order(q: u64, n: usize) -> u128 {
    let q = q as u128;
    let qn = q.pow(n as u32);
    (0..n).map(|i| qn - q.pow(i as u32)).product()
}

/// An invertible `P` with `P(x·y) = P(x)·P(y)`, mapping coordinates of `a`
/// to coordinates of `b`, or `None` when the algebras are not isomorphic.
pub fn is_isomorphic(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> Result<Option<Matrix>> {
    is_isomorphic_with_budget(a, b, DEFAULT_GL_BUDGET)
}

pub fn is_isomorphic_with_budget(a: &LeibnizAlgebra, b: &LeibnizAlgebra, budget: u128) -> Result<Option<Matrix>> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::FieldMismatch(field, b.field()));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let q = field.order().ok_or(Error::InfiniteField(field))?;
    let n = a.dim();
    let order = gl_order(q, n);
    if order > budget {
        return Err(Error::BudgetExceeded {
            what: format!("isomorphism search over GL({n}, {q})"),
            required: format!("{order} matrices"),
            limit: budget.to_string(),
        });
    }
    if invariants(a) != invariants(b) {
        return Ok(None);
    }
    let candidates: Vec<Vector> = b
        .whole()
        .elements()?
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let mut search = Search {
        a,
        b,
        candidates: &candidates,
        requirement: requirements(a),
        images: Vec::with_capacity(n),
    };
    if !search.extend() {
        return Ok(None);
    }
    let p = Matrix::from_columns(field, n, &search.images)?;
    debug_assert!(is_homomorphism(a, b, &p));
    Ok(Some(p))
}

/// `req[i][j]`: largest basis index that `e_i`, `e_j` and `e_i·e_j` involve.
fn requirements(a: &LeibnizAlgebra) -> Vec<Vec<usize>> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let top = a.basis_product(i, j).iter().rposition(|c| !c.is_zero()).unwrap_or(0);
                    i.max(j).max(top)
                })
                .collect()
        })
        .collect()
}

struct Search<'a> {
    a: &'a LeibnizAlgebra,
    b: &'a LeibnizAlgebra,
    candidates: &'a [Vector],
    requirement: Vec<Vec<usize>>,
    images: Vec<Vector>,
}

impl Search<'_> {
    fn image_of(&self, coords: &[crate::field::Scalar]) -> Vector {
        let field = self.a.field();
        let mut out = vec![field.zero(); self.b.dim()];
        for (c, img) in coords.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img) {
                *o = &*o + &(c * x);
            }
        }
        out
    }

    /// Pairs whose requirement is the newest column.
    fn consistent(&self) -> bool {
        let d = self.images.len() - 1;
        for i in 0..=d {
            for j in 0..=d {
                if self.requirement[i][j] != d {
                    continue;
                }
                let lhs = self.image_of(self.a.basis_product(i, j));
                let rhs = self.b.multiply(&self.images[i], &self.images[j]).expect("same dim");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self) -> bool {
        let n = self.a.dim();
        if self.images.len() == n {
            return true;
        }
        let span = Subspace::span(self.a.field(), n, self.images.iter().cloned()).expect("sized vectors");
        for v in self.candidates {
            if span.contains_vector(v).expect("sized vector") {
                continue;
            }
            self.images.push(v.clone());
            if self.consistent() && self.extend() {
                return true;
            }
            self.images.pop();
        }
        false
    }
}

/// `P(e_i·e_j) = P(e_i)·P(e_j)` for all basis pairs.
pub fn is_homomorphism(a: &LeibnizAlgebra, b: &LeibnizAlgebra, p: &Matrix) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = p.mul_vec(a.basis_product(i, j));
            let rhs = b.multiply(&p.column(i), &p.column(j));
            rhs.is_ok_and(|r| r == lhs)
        })
    })
}

/// The algebra `b` with `P` as change of basis: `e_i ↦ Σ_k P_{ki} e_k`
/// transported so that `P` becomes an isomorphism from the result to `b`.
pub fn transport(b: &LeibnizAlgebra, p: &Matrix) -> Result<LeibnizAlgebra> {
    let n = b.dim();
    let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let mut sc = Vec::with_capacity(n * n * n);
    let basis = Subspace::span(b.field(), n, cols.iter().cloned())?;
    if basis.dim() != n {
        return Err(Error::Precondition("change of basis is singular".into()));
    }
    let inverse = invert(p)?;
    for x in &cols {
        for y in &cols {
            sc.extend(inverse.mul_vec(&b.multiply(x, y)?));
        }
    }
    LeibnizAlgebra::new(b.field(), n, sc)
}

fn invert(p: &Matrix) -> Result<Matrix> {
    let n = p.rows();
    let field = p.field();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let e: Vector = (0..n)
            .map(|k| if k == i { field.one() } else { field.zero() })
            .collect();
        cols.push(solve(p, &e)?);
    }
    Matrix::from_columns(field, n, &cols)
}

/// The unique `x` with `P x = w` for invertible `P`.
pub(crate) fn solve(p: &Matrix, w: &[crate::field::Scalar]) -> Result<Vector> {
    let n = p.cols();
    let field = p.field();
    let mut cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    cols.push(w.iter().map(|x| -x).collect());
    let kernel = Matrix::from_columns(field, p.rows(), &cols)?.null_space();
    let v = kernel
        .basis()
        .iter()
        .find(|v| !v[n].is_zero())
        .ok_or_else(|| Error::Precondition("system has no solution".into()))?;
    let scale = v[n].inv().expect("nonzero");
    Ok(v[..n].iter().map(|x| x * &scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::field::FieldSpec;

    const GF2: FieldSpec = FieldSpec::Prime(2);

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 3), 168);
        assert_eq!(gl_order(2, 4), 20160);
        assert_eq!(gl_order(3, 2), 48);
    }

    #[test]
    fn self_isomorphism() {
        let h = heisenberg(GF2);
        let p = is_isomorphic(&h, &h).unwrap().unwrap();
        assert!(is_homomorphism(&h, &h, &p));
    }

    #[test]
    fn invariant_precheck_separates_examples() {
        let a = idempotent_cyclic(GF2);
        let b = nilpotent_cyclic(GF2);
        assert_ne!(invariants(&a), invariants(&b));
        assert_eq!(is_isomorphic(&a, &b).unwrap(), None);
    }

    #[test]
    fn relabeled_basis() {
        let f = FieldSpec::Prime(3);
        let b = nilpotent_cyclic(f);
        // swap the basis: e1 ↦ a², e2 ↦ a
        let perm = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        let relabeled = transport(&b, &perm).unwrap();
        assert_eq!(relabeled.basis_product(1, 1), &[f.one(), f.zero()]);
        let w = is_isomorphic(&relabeled, &b).unwrap().unwrap();
        assert!(is_homomorphism(&relabeled, &b, &w));
        assert_eq!(w, perm);
    }

    #[test]
    fn dimension_and_field_errors() {
        let a = heisenberg(GF2);
        assert!(matches!(
            is_isomorphic(&a, &nilpotent_cyclic(GF2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            is_isomorphic(&a, &heisenberg(FieldSpec::Prime(3))),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(
            is_isomorphic_with_budget(&a, &a, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn solve_inverts() {
        let f = FieldSpec::Prime(5);
        let p = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let w = vec![f.from_i64(1), f.from_i64(0)];
        let x = solve(&p, &w).unwrap();
        assert_eq!(p.mul_vec(&x), w);
        let inv = invert(&p).unwrap();
        assert_eq!(p.mul(&inv), Matrix::identity(f, 2));
    }
}
