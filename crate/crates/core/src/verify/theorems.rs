//! Executable checks of the nilpotency theorems over census universes.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::{LeibnizAlgebra, Side};
use crate::cyclic::{frattini_cyclic, maximal_subalgebras_cyclic, CyclicSpec};
use crate::error::{Error, Result};
use crate::format::print_algebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::verify::census::{
    enumerate_leibniz, sample_leibniz, sample_triangular_nilpotent, triangular_nilpotent, Census, SearchMode,
};
use crate::verify::iso::{is_isomorphic, solve};
use crate::verify::lattice::{all_ideals, frattini_bruteforce, maximal_subalgebras_bruteforce};
use crate::verify::predicates::{
    condition_k_violation, lemma_minimal_non_nilpotent, lemma_nilpotent_generators, nilpotency_equivalences,
    s_star_violation,
};

/// A failing instance, printed in the algebra file format so it can be
/// replayed with `--unchecked`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub algebra: LeibnizAlgebra,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: String,
    pub universe: Vec<String>,
    pub checked: usize,
    /// Instances outside the hypothesis of the statement.
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    /// The universe is known not to cover the statement's full range.
    pub partial: bool,
    pub elapsed: Duration,
}

impl TheoremReport {
    fn new(theorem: &str) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            universe: Vec::new(),
            checked: 0,
            skipped: 0,
            counterexamples: Vec::new(),
            partial: false,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Concatenates universes and adds counts.
    pub fn merge(mut self, other: TheoremReport) -> TheoremReport {
        self.universe.extend(other.universe);
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        self.partial |= other.partial;
        self.elapsed += other.elapsed;
        self
    }
}

/// Deterministic: timing is left out.
impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {}", self.theorem)?;
        for u in &self.universe {
            writeln!(f, "universe: {u}")?;
        }
        if self.partial {
            writeln!(f, "coverage: partial")?;
        }
        writeln!(f, "checked: {}", self.checked)?;
        writeln!(f, "skipped: {}", self.skipped)?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for (i, c) in self.counterexamples.iter().enumerate() {
            writeln!(f, "--- counterexample {}: {}", i + 1, c.detail)?;
            write!(f, "{}", print_algebra(&c.algebra))?;
        }
        Ok(())
    }
}

/// Outcome of evaluating one algebra.
enum Verdict {
    Holds,
    Skipped,
    Fails(String),
}

/// Runs `check` on every census member and collects a report.
fn sweep<F>(theorem: &str, census: &Census, check: F) -> Result<TheoremReport>
where
    F: Fn(&LeibnizAlgebra) -> Result<Verdict> + Sync,
{
    let start = Instant::now();
    let verdicts: Vec<(usize, Verdict)> = (0..census.len())
        .into_par_iter()
        .map(|i| check(&census.algebra(i)).map(|v| (i, v)))
        .collect::<Result<_>>()?;
    let mut report = TheoremReport::new(theorem);
    report.universe.push(census.describe());
    report.partial = matches!(census.mode(), SearchMode::Sampled { .. });
    for (i, v) in verdicts {
        match v {
            Verdict::Holds => report.checked += 1,
            Verdict::Skipped => report.skipped += 1,
            Verdict::Fails(detail) => {
                report.checked += 1;
                report.counterexamples.push(Counterexample {
                    algebra: census.algebra(i),
                    detail,
                });
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

pub const S_STAR: &str = "S* algebras are exactly the nilpotent algebras";
pub const CONDITION_K: &str = "condition k holds exactly for nilpotent algebras";
pub const EQUIVALENCES: &str =
    "nilpotent <=> normalizer condition <=> right normalizer condition <=> maximal subalgebras are ideals <=> maximal subalgebras are right ideals";
pub const QUOTIENT: &str = "A is nilpotent iff A/N^2 is nilpotent, for nilpotent ideals N";
pub const CLASS_BOUND: &str = "class(A) <= C(c+1,2)*d - C(c,2) with c = class(N), d+1 = class(A/N^2)";
pub const CLASS_BOUND_HALL: &str = "class(A) <= C(c+1,2)*d - C(c,2) with c = class(N), d = class(A/N^2)";
pub const CYCLIC_FRATTINI: &str =
    "Frattini subalgebra and maximal subalgebras of cyclic algebras agree with closed forms";
pub const LEMMA_GENERATORS: &str = "non-abelian nilpotent A has dim(A/A^2) >= 2 or one generator";
pub const LEMMA_MINIMAL: &str = "non-nilpotent A with all proper subalgebras nilpotent has dim(A/A^2) <= 1";
pub const NONEMBEDDING_POWER: &str =
    "nilpotent non-abelian A with 1-dimensional center is no N^i, i >= 2, for nilpotent N";
pub const NONEMBEDDING_FRATTINI: &str =
    "nilpotent B with dim R_1(B) = 1, dim B >= 2 is no ideal of A inside Frattini(A)";

pub fn sweep_s_star(census: &Census) -> Result<TheoremReport> {
    sweep(S_STAR, census, |a| {
        let violation = s_star_violation(a)?;
        let nilpotent = a.is_nilpotent();
        Ok(match (violation, nilpotent) {
            (None, true) | (Some(_), false) => Verdict::Holds,
            (None, false) => Verdict::Fails("S* but not nilpotent".into()),
            (Some(h), _) => Verdict::Fails(format!("nilpotent but subalgebra {} breaks S*", a.format_subspace(&h))),
        })
    })
}

pub fn sweep_condition_k(census: &Census) -> Result<TheoremReport> {
    sweep(CONDITION_K, census, |a| {
        let violation = condition_k_violation(a)?;
        Ok(match (violation, a.is_nilpotent()) {
            (None, true) | (Some(_), false) => Verdict::Holds,
            (None, false) => Verdict::Fails("condition k holds but A is not nilpotent".into()),
            (Some(k), true) => Verdict::Fails(format!(
                "nilpotent but K = {} satisfies K + A^2 = A",
                a.format_subspace(&k)
            )),
        })
    })
}

pub fn sweep_equivalences(census: &Census) -> Result<TheoremReport> {
    sweep(EQUIVALENCES, census, |a| {
        let e = nilpotency_equivalences(a)?;
        Ok(if e.all_agree() {
            Verdict::Holds
        } else {
            Verdict::Fails(e.to_string())
        })
    })
}

pub fn sweep_lemma_generators(census: &Census) -> Result<TheoremReport> {
    sweep(LEMMA_GENERATORS, census, |a| {
        Ok(match lemma_nilpotent_generators(a)? {
            None => Verdict::Skipped,
            Some(true) => Verdict::Holds,
            Some(false) => Verdict::Fails("dim(A/A^2) = 1 and no single generator".into()),
        })
    })
}

pub fn sweep_lemma_minimal(census: &Census) -> Result<TheoremReport> {
    sweep(LEMMA_MINIMAL, census, |a| {
        Ok(match lemma_minimal_non_nilpotent(a)? {
            None => Verdict::Skipped,
            Some(true) => Verdict::Holds,
            Some(false) => Verdict::Fails(format!("dim(A/A^2) = {}", a.dim() - a.derived().dim())),
        })
    })
}

fn binomial2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Everything the quotient theorem and its class bound say about one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCheck {
    pub n_squared: Subspace,
    pub a_class: Option<usize>,
    pub quotient_class: Option<usize>,
    /// `class(N)`
    pub c: usize,
}

impl QuotientCheck {
    /// `A` nilpotent exactly when `A/N²` is.
    pub fn biconditional_holds(&self) -> bool {
        self.a_class.is_some() == self.quotient_class.is_some()
    }

    /// `C(c+1,2)·d − C(c,2)` with `d + 1 = class(A/N²)`; `None` when `N = 0`
    /// or the quotient is not nilpotent.
    pub fn stated_bound(&self) -> Option<i64> {
        let k = self.quotient_class? as i64;
        (self.c > 0).then(|| binomial2(self.c as i64 + 1) * (k - 1) - binomial2(self.c as i64))
    }

    /// The same expression with `d = class(A/N²)`.
    pub fn hall_bound(&self) -> Option<i64> {
        let k = self.quotient_class? as i64;
        (self.c > 0).then(|| binomial2(self.c as i64 + 1) * k - binomial2(self.c as i64))
    }

    fn bound_holds(&self, bound: Option<i64>) -> Option<bool> {
        Some(self.a_class? as i64 <= bound?)
    }

    pub fn stated_bound_holds(&self) -> Option<bool> {
        self.bound_holds(self.stated_bound())
    }

    pub fn hall_bound_holds(&self) -> Option<bool> {
        self.bound_holds(self.hall_bound())
    }
}

/// Evaluates the quotient theorem on `(A, N)`. `N` must be a nilpotent
/// two-sided ideal.
pub fn check_quotient_theorem(a: &LeibnizAlgebra, n: &Subspace) -> Result<QuotientCheck> {
    if !a.is_ideal(n, Side::TwoSided)? {
        return Err(Error::NotIdeal);
    }
    let c = a
        .restrict(n)?
        .nilpotency_class()
        .class()
        .ok_or_else(|| Error::Precondition("N is not nilpotent".into()))?;
    let n_squared = a.product_space(n, n)?;
    let quotient = a.quotient(&n_squared)?;
    Ok(QuotientCheck {
        n_squared,
        a_class: a.nilpotency_class().class(),
        quotient_class: quotient.algebra.nilpotency_class().class(),
        c,
    })
}

/// All nilpotent two-sided ideals.
fn nilpotent_ideals(a: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for i in all_ideals(a, Side::TwoSided)? {
        if a.restrict(&i)?.is_nilpotent() {
            out.push(i);
        }
    }
    Ok(out)
}

/// Per-pair sweeps of the quotient theorem and of both readings of the class
/// bound.
pub struct QuotientSweep {
    pub biconditional: TheoremReport,
    pub stated_bound: TheoremReport,
    pub hall_bound: TheoremReport,
}

pub fn sweep_quotient(census: &Census) -> Result<QuotientSweep> {
    let start = Instant::now();
    let per_algebra: Vec<Vec<(Subspace, QuotientCheck)>> = (0..census.len())
        .into_par_iter()
        .map(|i| {
            let a = census.algebra(i);
            nilpotent_ideals(&a)?
                .into_iter()
                .map(|n| check_quotient_theorem(&a, &n).map(|c| (n, c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut reports = [
        TheoremReport::new(QUOTIENT),
        TheoremReport::new(CLASS_BOUND),
        TheoremReport::new(CLASS_BOUND_HALL),
    ];
    for r in reports.iter_mut() {
        r.universe
            .push(format!("{}; all nilpotent ideals N", census.describe()));
        r.partial = matches!(census.mode(), SearchMode::Sampled { .. });
    }
    for (i, pairs) in per_algebra.into_iter().enumerate() {
        let a = census.algebra(i);
        for (n, check) in pairs {
            let label = |extra: String| Counterexample {
                algebra: a.clone(),
                detail: format!("N = {}: {extra}", a.format_subspace(&n)),
            };
            reports[0].checked += 1;
            if !check.biconditional_holds() {
                reports[0].counterexamples.push(label(format!(
                    "A nilpotent: {}, A/N^2 nilpotent: {}",
                    check.a_class.is_some(),
                    check.quotient_class.is_some()
                )));
            }
            for (slot, bound, holds) in [
                (1, check.stated_bound(), check.stated_bound_holds()),
                (2, check.hall_bound(), check.hall_bound_holds()),
            ] {
                match holds {
                    None => reports[slot].skipped += 1,
                    Some(true) => reports[slot].checked += 1,
                    Some(false) => {
                        reports[slot].checked += 1;
                        reports[slot].counterexamples.push(label(format!(
                            "class(A) = {}, c = {}, class(A/N^2) = {}, bound = {}",
                            check.a_class.unwrap(),
                            check.c,
                            check.quotient_class.unwrap(),
                            bound.unwrap()
                        )));
                    }
                }
            }
        }
    }
    let [biconditional, stated_bound, hall_bound] = reports.map(|mut r| {
        r.elapsed = start.elapsed();
        r
    });
    Ok(QuotientSweep {
        biconditional,
        stated_bound,
        hall_bound,
    })
}

/// A generator `x` of `a` with the basis `x, x², …, xⁿ` (`x^{k+1} = x·x^k`),
/// the resulting cyclic coefficients, and the matrix whose columns are the
/// powers. `None` when no element generates `a`.
pub fn cyclic_presentation(a: &LeibnizAlgebra) -> Result<Option<(CyclicSpec, Matrix)>> {
    let n = a.dim();
    if n == 0 {
        return Ok(None);
    }
    for x in a.whole().elements()? {
        let mut powers: Vec<Vector> = vec![x.clone()];
        for _ in 1..n {
            let next = a.multiply(&x, powers.last().unwrap())?;
            powers.push(next);
        }
        if Subspace::span(a.field(), n, powers.iter().cloned())?.dim() < n {
            continue;
        }
        let p = Matrix::from_columns(a.field(), n, &powers)?;
        let top = a.multiply(&x, powers.last().unwrap())?;
        let beta = solve(&p, &top)?;
        if !beta[0].is_zero() {
            return Err(Error::Precondition(
                "generator coefficient on x is nonzero, identity must fail".into(),
            ));
        }
        let spec = CyclicSpec::new(a.field(), beta[1..].to_vec())?;
        return Ok(Some((spec, p)));
    }
    Ok(None)
}

/// On every one-generated census member, the closed-form Frattini
/// subalgebra and maximal subalgebras, moved through the power basis, equal
/// the brute-force ones.
pub fn sweep_cyclic_frattini(census: &Census) -> Result<TheoremReport> {
    sweep(CYCLIC_FRATTINI, census, |a| {
        let Some((spec, p)) = cyclic_presentation(a)? else {
            return Ok(Verdict::Skipped);
        };
        let moved = |u: &Subspace| u.image_under(&p);
        let phi = moved(&frattini_cyclic(&spec));
        let phi_bf = frattini_bruteforce(a)?;
        if phi != phi_bf {
            return Ok(Verdict::Fails(format!(
                "closed form {} vs brute force {} (alphas {spec})",
                a.format_subspace(&phi),
                a.format_subspace(&phi_bf)
            )));
        }
        let mut closed: Vec<Subspace> = maximal_subalgebras_cyclic(&spec).iter().map(moved).collect();
        let mut bf = maximal_subalgebras_bruteforce(a)?;
        closed.sort();
        bf.sort();
        Ok(if closed == bf {
            Verdict::Holds
        } else {
            Verdict::Fails(format!("maximal subalgebras differ (alphas {spec})"))
        })
    })
}

/// How much of each dimension a desk-check sweep covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// Full censuses where the budget allows, the strictly triangular family
    /// in dimension 4.
    Full,
    /// Seeded random samples of every universe.
    Sampled { samples: u64, seed: u64 },
}

/// Universe of nilpotent algebras of dimension `d`.
fn nilpotent_universe(field: crate::field::FieldSpec, d: usize, coverage: Coverage) -> Result<Census> {
    match (coverage, d) {
        (Coverage::Full, 0..=3) => enumerate_leibniz(field, d),
        (Coverage::Full, _) => triangular_nilpotent(field, d),
        (Coverage::Sampled { samples, seed }, _) => sample_triangular_nilpotent(field, d, samples, seed),
    }
}

/// Universe of all algebras of dimension `d`; the flag marks dimensions
/// where only nilpotent algebras are covered.
fn general_universe(field: crate::field::FieldSpec, d: usize, coverage: Coverage) -> Result<(Vec<Census>, bool)> {
    match (coverage, d) {
        (Coverage::Full, 0..=3) => Ok((vec![enumerate_leibniz(field, d)?], false)),
        (Coverage::Full, _) => Ok((vec![triangular_nilpotent(field, d)?], true)),
        (Coverage::Sampled { samples, seed }, 0..=3) => Ok((vec![sample_leibniz(field, d, samples, seed)?], false)),
        (Coverage::Sampled { samples, seed }, _) => Ok((
            vec![
                sample_leibniz(field, d, samples, seed)?,
                sample_triangular_nilpotent(field, d, samples, seed)?,
            ],
            true,
        )),
    }
}

/// No `N^i`, `i ≥ 2`, of a nilpotent `N` of dimension at most
/// `search_dim_max` is isomorphic to `a`.
pub fn nonembedding_power(a: &LeibnizAlgebra, search_dim_max: usize, coverage: Coverage) -> Result<TheoremReport> {
    if !a.is_nilpotent() || a.is_abelian() || a.center().dim() != 1 {
        return Err(Error::Precondition(
            "A must be nilpotent, non-abelian, with one-dimensional center".into(),
        ));
    }
    let field = a.field();
    let mut report = TheoremReport::new(NONEMBEDDING_POWER);
    report.universe.push(format!("target A of dimension {}", a.dim()));
    // N^i ⊊ N for i ≥ 2, so only dim N > dim A matters
    for d in 1..=search_dim_max {
        let census = nilpotent_universe(field, d, coverage)?;
        let part = sweep(NONEMBEDDING_POWER, &census, |n| {
            if !n.is_nilpotent() {
                return Ok(Verdict::Skipped);
            }
            let series = n.lower_central_series();
            for (i, term) in series.terms.iter().enumerate().skip(1) {
                if term.dim() != a.dim() {
                    continue;
                }
                if let Some(p) = is_isomorphic(&n.restrict(term)?, a)? {
                    return Ok(Verdict::Fails(format!(
                        "N^{} = {} is isomorphic to A via {:?}",
                        i + 1,
                        n.format_subspace(term),
                        p.row_vecs()
                    )));
                }
            }
            Ok(Verdict::Holds)
        })?;
        report = report.merge(part);
    }
    Ok(report)
}

/// No two-sided ideal of any `A` of dimension at most `search_dim_max` is
/// isomorphic to `b` and contained in `Φ(A)`.
pub fn nonembedding_frattini(b: &LeibnizAlgebra, search_dim_max: usize, coverage: Coverage) -> Result<TheoremReport> {
    if !b.is_nilpotent() || b.dim() < 2 || b.right_center().dim() != 1 {
        return Err(Error::Precondition(
            "B must be nilpotent with dim R_1(B) = 1 and dim B >= 2".into(),
        ));
    }
    let field = b.field();
    let mut report = TheoremReport::new(NONEMBEDDING_FRATTINI);
    report.universe.push(format!("target B of dimension {}", b.dim()));
    for d in b.dim()..=search_dim_max {
        let (universes, nilpotent_only) = general_universe(field, d, coverage)?;
        for census in universes {
            let mut part = sweep(NONEMBEDDING_FRATTINI, &census, |a| {
                let phi = frattini_bruteforce(a)?;
                if phi.dim() < b.dim() {
                    return Ok(Verdict::Holds);
                }
                for i in all_ideals(a, Side::TwoSided)? {
                    if i.dim() != b.dim() || !phi.contains(&i)? {
                        continue;
                    }
                    if is_isomorphic(&a.restrict(&i)?, b)?.is_some() {
                        return Ok(Verdict::Fails(format!(
                            "ideal {} inside Frattini {} is isomorphic to B",
                            a.format_subspace(&i),
                            a.format_subspace(&phi)
                        )));
                    }
                }
                Ok(Verdict::Holds)
            })?;
            if nilpotent_only {
                part.partial = true;
                part.universe
                    .push(format!("dimension {d}: only nilpotent A are covered"));
            }
            report = report.merge(part);
        }
    }
    Ok(report)
}
