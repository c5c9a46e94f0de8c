//! Subspace, subalgebra and ideal lattices by exhaustive enumeration.

use crate::algebra::{LeibnizAlgebra, Side};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Subspace, Vector};

/// Cap on the number of subspaces of `F_q^n` enumerated at once.
pub const DEFAULT_LATTICE_BUDGET: u128 = 1_000_000;

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(q: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

pub fn subspace_count(q: u64, n: usize) -> u128 {
    (0..=n).map(|k| gaussian_binomial(q, n, k)).sum()
}

/// Every subspace of `F_q^n`, each exactly once, generated from its reduced
/// echelon profile: a set of pivot columns and arbitrary entries in the
/// non-pivot columns to the right of each pivot. Ordered by dimension, then
/// pivot set, then entries.
pub fn enumerate_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let q = field.order().ok_or(Error::InfiniteField(field))?;
    let total = subspace_count(q, n);
    if total > DEFAULT_LATTICE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: format!("subspaces of {field}^{n}"),
            required: total.to_string(),
            limit: DEFAULT_LATTICE_BUDGET.to_string(),
        });
    }
    let elems = field.elements().expect("finite field");
    let mut out = Vec::with_capacity(total as usize);
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    (p + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let count = (q as usize).pow(free.len() as u32);
            for mut t in 0..count {
                let mut rows: Vec<Vector> = pivots
                    .iter()
                    .map(|&p| {
                        let mut v = vec![field.zero(); n];
                        v[p] = field.one();
                        v
                    })
                    .collect();
                for &(r, c) in free.iter().rev() {
                    rows[r][c] = elems[t % q as usize].clone();
                    t /= q as usize;
                }
                out.push(Subspace::from_rref_unchecked(field, n, pivots.clone(), rows));
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn all_subalgebras(a: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    Ok(enumerate_subspaces(a.field(), a.dim())?
        .into_iter()
        .filter(|u| a.is_subalgebra(u).expect("ambient matches"))
        .collect())
}

/// Maximal elements under inclusion of `family`.
fn maximal_elements(family: &[Subspace]) -> Vec<Subspace> {
    family
        .iter()
        .filter(|u| {
            !family
                .iter()
                .any(|v| v.dim() > u.dim() && v.contains(u).expect("same ambient"))
        })
        .cloned()
        .collect()
}

/// Minimal nonzero elements under inclusion of `family`.
fn minimal_elements(family: &[Subspace]) -> Vec<Subspace> {
    family
        .iter()
        .filter(|u| !u.is_zero())
        .filter(|u| {
            !family
                .iter()
                .any(|v| !v.is_zero() && v.dim() < u.dim() && u.contains(v).expect("same ambient"))
        })
        .cloned()
        .collect()
}

fn proper(family: Vec<Subspace>) -> Vec<Subspace> {
    family.into_iter().filter(|u| !u.is_full()).collect()
}

pub fn maximal_subalgebras_bruteforce(a: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    Ok(maximal_elements(&proper(all_subalgebras(a)?)))
}

/// Intersection of the maximal subalgebras. The zero algebra has none and
/// gets `A` itself.
pub fn frattini_bruteforce(a: &LeibnizAlgebra) -> Result<Subspace> {
    let maxes = maximal_subalgebras_bruteforce(a)?;
    Ok(intersect_all(a, &maxes))
}

fn intersect_all(a: &LeibnizAlgebra, family: &[Subspace]) -> Subspace {
    family
        .iter()
        .fold(a.whole(), |acc, m| acc.intersect(m).expect("same ambient"))
}

pub fn all_ideals(a: &LeibnizAlgebra, side: Side) -> Result<Vec<Subspace>> {
    Ok(enumerate_subspaces(a.field(), a.dim())?
        .into_iter()
        .filter(|u| a.is_ideal(u, side).expect("ambient matches"))
        .collect())
}

pub fn minimal_ideals_bruteforce(a: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    Ok(minimal_elements(&all_ideals(a, Side::TwoSided)?))
}

pub fn maximal_ideals_bruteforce(a: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    Ok(maximal_elements(&proper(all_ideals(a, Side::TwoSided)?)))
}

/// Sum of the minimal ideals.
pub fn socle_bruteforce(a: &LeibnizAlgebra) -> Result<Subspace> {
    Ok(minimal_ideals_bruteforce(a)?
        .iter()
        .fold(a.zero_subspace(), |acc, i| acc.sum(i).expect("same ambient")))
}
