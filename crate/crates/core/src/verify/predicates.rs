//! Lattice-quantified properties, each decided by enumerating subalgebras.

use std::fmt;

use crate::algebra::{LeibnizAlgebra, Side};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::verify::lattice::{all_subalgebras, maximal_subalgebras_bruteforce};

/// Some element generates all of `a`. Decided by trying every element.
pub fn is_one_generated(a: &LeibnizAlgebra) -> Result<bool> {
    if a.dim() == 0 {
        return Ok(true);
    }
    for x in a.whole().elements()? {
        if a.subalgebra_generated(&[x])?.is_full() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn codim_of_square(a: &LeibnizAlgebra) -> usize {
    a.dim() - a.derived().dim()
}

/// Whether one subalgebra `H` meets the S* requirement: abelian, or
/// `dim(H/H²) ≥ 2`, or nilpotent and one-generated.
fn s_star_holds_on(a: &LeibnizAlgebra, h: &Subspace) -> Result<bool> {
    let sub = a.restrict(h)?;
    if sub.is_abelian() || codim_of_square(&sub) >= 2 {
        return Ok(true);
    }
    Ok(sub.is_nilpotent() && is_one_generated(&sub)?)
}

/// First subalgebra, `A` itself included, that breaks the S* requirement.
pub fn s_star_violation(a: &LeibnizAlgebra) -> Result<Option<Subspace>> {
    for h in all_subalgebras(a)? {
        if !s_star_holds_on(a, &h)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// S* with the requirement imposed on every subalgebra including `A`.
///
/// Restricting to subalgebras `H ≠ A` makes the two-dimensional algebra
/// `a·a = a², a·a² = a²` an S* algebra (its proper subalgebras are lines)
/// although it is not nilpotent; see [`is_s_star_strict`].
pub fn is_s_star(a: &LeibnizAlgebra) -> Result<bool> {
    Ok(s_star_violation(a)?.is_none())
}

/// S* quantified over subalgebras `H ≠ A` only.
pub fn is_s_star_strict(a: &LeibnizAlgebra) -> Result<bool> {
    for h in all_subalgebras(a)? {
        if !h.is_full() && !s_star_holds_on(a, &h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A subalgebra `K ≠ A` with `K + A² = A`, if any.
pub fn condition_k_violation(a: &LeibnizAlgebra) -> Result<Option<Subspace>> {
    let a2 = a.derived();
    for k in all_subalgebras(a)? {
        if !k.is_full() && k.sum(&a2)?.is_full() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Every subalgebra `K` with `K + A² = A` is `A`.
pub fn condition_k(a: &LeibnizAlgebra) -> Result<bool> {
    Ok(condition_k_violation(a)?.is_none())
}

/// The five properties of the nilpotency equivalence list, evaluated on one
/// algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equivalences {
    /// (a)
    pub nilpotent: bool,
    /// (b) every proper subalgebra is properly contained in its normalizer
    pub normalizer_condition: bool,
    /// (c) the same with the one-sided normalizer `{x : Ux ⊆ U}`
    pub right_normalizer_condition: bool,
    /// (d) every maximal subalgebra is a two-sided ideal
    pub maximal_are_ideals: bool,
    /// (e) every maximal subalgebra is a right ideal
    pub maximal_are_right_ideals: bool,
}

impl Equivalences {
    pub fn values(&self) -> [bool; 5] {
        [
            self.nilpotent,
            self.normalizer_condition,
            self.right_normalizer_condition,
            self.maximal_are_ideals,
            self.maximal_are_right_ideals,
        ]
    }

    pub fn all_agree(&self) -> bool {
        self.values().iter().all(|&v| v == self.nilpotent)
    }
}

impl fmt::Display for Equivalences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["a", "b", "c", "d", "e"];
        let parts: Vec<String> = names
            .iter()
            .zip(self.values())
            .map(|(n, v)| format!("({n}) {v}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

pub fn nilpotency_equivalences(a: &LeibnizAlgebra) -> Result<Equivalences> {
    let subs = all_subalgebras(a)?;
    let mut normalizer_condition = true;
    let mut right_normalizer_condition = true;
    for u in subs.iter().filter(|u| !u.is_full()) {
        if normalizer_condition && &a.normalizer(u)? == u {
            normalizer_condition = false;
        }
        if right_normalizer_condition && &a.right_normalizer(u)? == u {
            right_normalizer_condition = false;
        }
    }
    let maxes = maximal_subalgebras_bruteforce(a)?;
    let mut maximal_are_ideals = true;
    let mut maximal_are_right_ideals = true;
    for m in &maxes {
        maximal_are_ideals &= a.is_ideal(m, Side::TwoSided)?;
        maximal_are_right_ideals &= a.is_ideal(m, Side::Right)?;
    }
    Ok(Equivalences {
        nilpotent: a.is_nilpotent(),
        normalizer_condition,
        right_normalizer_condition,
        maximal_are_ideals,
        maximal_are_right_ideals,
    })
}

/// Nonzero nilpotent subalgebras whose normal closure is `A`.
pub fn unique_nilpotent_closure(a: &LeibnizAlgebra) -> Result<(usize, Vec<Subspace>)> {
    let mut witnesses = Vec::new();
    for h in all_subalgebras(a)? {
        if h.is_zero() || !a.restrict(&h)?.is_nilpotent() {
            continue;
        }
        if a.normal_closure(&h)?.is_full() {
            witnesses.push(h);
        }
    }
    Ok((witnesses.len(), witnesses))
}

/// Non-abelian nilpotent algebras have `dim(A/A²) ≥ 2` or one generator.
/// `None` when `a` is abelian or not nilpotent.
pub fn lemma_nilpotent_generators(a: &LeibnizAlgebra) -> Result<Option<bool>> {
    if a.is_abelian() || !a.is_nilpotent() {
        return Ok(None);
    }
    Ok(Some(codim_of_square(a) >= 2 || is_one_generated(a)?))
}

/// A non-nilpotent algebra whose proper subalgebras are all nilpotent has
/// `dim(A/A²) ≤ 1`. `None` when the hypothesis fails.
pub fn lemma_minimal_non_nilpotent(a: &LeibnizAlgebra) -> Result<Option<bool>> {
    if a.is_nilpotent() {
        return Ok(None);
    }
    for h in all_subalgebras(a)? {
        if !h.is_full() && !a.restrict(&h)?.is_nilpotent() {
            return Ok(None);
        }
    }
    Ok(Some(codim_of_square(a) <= 1))
}
