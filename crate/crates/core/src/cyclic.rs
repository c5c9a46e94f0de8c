//! Cyclic Leibniz algebras.
//!
//! A cyclic algebra generated by `a` has basis `a, a², …, aⁿ` with
//! `a·aⁱ = a^{i+1}` for `i < n`, `a·aⁿ = α₂a² + ⋯ + αₙaⁿ`, and every product
//! with a left factor in `A²` equal to zero. The matrix `T` of `L_a` is the
//! companion matrix of `p(x) = xⁿ − αₙx^{n−1} − ⋯ − α₂x`, and every subspace
//! below is the kernel of some divisor of `p` evaluated at `T`.

use std::fmt;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{apply_poly, fitting_components, Matrix, Subspace};
use crate::poly::{factor, Factorization, Polynomial};

/// The coefficients `(α₂, …, αₙ)`; `α₁` is forced to vanish and is not
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSpec {
    field: FieldSpec,
    alphas: Vec<Scalar>,
}

impl CyclicSpec {
    pub fn new(field: FieldSpec, alphas: Vec<Scalar>) -> Result<Self> {
        if let Some(a) = alphas.iter().find(|a| a.field() != field) {
            return Err(Error::FieldMismatch(field, a.field()));
        }
        Ok(CyclicSpec { field, alphas })
    }

    pub fn from_i64(field: FieldSpec, alphas: &[i64]) -> Self {
        CyclicSpec {
            field,
            alphas: alphas.iter().map(|&a| field.from_i64(a)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn alphas(&self) -> &[Scalar] {
        &self.alphas
    }

    pub fn dim(&self) -> usize {
        self.alphas.len() + 1
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.dim())
            .map(|i| if i == 1 { "a".to_string() } else { format!("a^{i}") })
            .collect()
    }

    pub fn algebra(&self) -> LeibnizAlgebra {
        let n = self.dim();
        let f = self.field;
        let mut sc = vec![f.zero(); n * n * n];
        for i in 0..n - 1 {
            sc[i * n + i + 1] = f.one();
        }
        for (idx, alpha) in self.alphas.iter().enumerate() {
            // a · aⁿ has coordinate α_{idx+2} on a^{idx+2}
            sc[(n - 1) * n + idx + 1] = alpha.clone();
        }
        LeibnizAlgebra::new_unchecked(f, n, sc)
            .expect("sized table")
            .with_labels(self.labels())
    }

    /// Matrix of `L_a` in the basis `a, …, aⁿ`.
    pub fn companion(&self) -> Matrix {
        let n = self.dim();
        let mut t = Matrix::zeros(self.field, n, n);
        for i in 0..n - 1 {
            t.set(i + 1, i, self.field.one());
        }
        for (idx, alpha) in self.alphas.iter().enumerate() {
            t.set(idx + 1, n - 1, alpha.clone());
        }
        t
    }

    /// `p(x) = xⁿ − αₙx^{n−1} − ⋯ − α₂x`.
    pub fn p(&self) -> Polynomial {
        let n = self.dim();
        let mut coeffs = vec![self.field.zero(); n + 1];
        coeffs[n] = self.field.one();
        for (idx, alpha) in self.alphas.iter().enumerate() {
            coeffs[idx + 2 - 1] = -alpha;
        }
        Polynomial::new(self.field, coeffs)
    }
}

impl fmt::Display for CyclicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alphas.iter().map(|x| x.to_string()).collect();
        write!(f, "{} ({})", self.field, a.join(","))
    }
}

/// Constructs the cyclic algebra for `(α₂, …, αₙ)`.
pub fn build_cyclic(field: FieldSpec, alphas: Vec<Scalar>) -> Result<(LeibnizAlgebra, CyclicSpec)> {
    let spec = CyclicSpec::new(field, alphas)?;
    Ok((spec.algebra(), spec))
}

pub fn companion_and_p(spec: &CyclicSpec) -> (Matrix, Polynomial) {
    (spec.companion(), spec.p())
}

/// Every spec of dimension `n` over a finite field, alphas in lexicographic
/// residue order.
pub fn all_cyclic_specs(field: FieldSpec, n: usize) -> Result<Vec<CyclicSpec>> {
    let Some(elems) = field.elements() else {
        return Err(Error::InfiniteField(field));
    };
    assert!(n >= 1, "cyclic algebras have dimension at least 1");
    let mut out = vec![Vec::new()];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Scalar>| {
                elems.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|alphas| CyclicSpec { field, alphas }).collect())
}

/// One block `W_j = ker p_j(T)^{n_j}` of the primary decomposition, with its
/// chain `U_{j,i} = ker p_j(T)^i`, `i = 1..n_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryBlock {
    pub factor: Polynomial,
    pub multiplicity: usize,
    pub component: Subspace,
    pub chain: Vec<Subspace>,
}

/// Shared computation: `T`, `p`, and the irreducible factors of `p` with `x`
/// moved to the front.
struct Analysis {
    t: Matrix,
    p: Polynomial,
    factorization: Factorization,
    factors: Vec<(Polynomial, usize)>,
}

impl Analysis {
    fn new(spec: &CyclicSpec) -> Self {
        let (t, p) = companion_and_p(spec);
        let factorization = factor(&p).expect("p is monic of degree n ≥ 1");
        let x = Polynomial::x(spec.field);
        let mut factors = factorization.factors.clone();
        let pos = factors.iter().position(|(f, _)| *f == x).expect("x divides p");
        let first = factors.remove(pos);
        factors.insert(0, first);
        Analysis {
            t,
            p,
            factorization,
            factors,
        }
    }

    fn kernel(&self, f: &Polynomial) -> Subspace {
        apply_poly(&self.t, f).expect("same field").null_space()
    }

    fn n1(&self) -> usize {
        self.factors[0].1
    }

    fn frattini(&self) -> Subspace {
        let q = self
            .factors
            .iter()
            .fold(Polynomial::one(self.p.field()), |acc, (f, m)| &acc * &f.pow(m - 1));
        self.kernel(&q)
    }

    fn maximal_subalgebras(&self) -> Vec<Subspace> {
        self.factors
            .iter()
            .map(|(f, _)| self.kernel(&self.p.exact_div(f)))
            .collect()
    }

    fn minimal_ideals(&self) -> Vec<Subspace> {
        let include_first = self.n1() > 1;
        self.factors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j > 0 || include_first)
            .map(|(_, (f, _))| self.kernel(f))
            .collect()
    }

    fn socle(&self) -> Subspace {
        let include_first = self.n1() > 1;
        let u = self
            .factors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j > 0 || include_first)
            .fold(Polynomial::one(self.p.field()), |acc, (_, (f, _))| &acc * f);
        self.kernel(&u)
    }

    fn maximal_ideal(&self) -> Subspace {
        self.kernel(&self.p.exact_div(&self.factors[0].0))
    }

    fn primary(&self) -> Vec<PrimaryBlock> {
        self.factors
            .iter()
            .map(|(f, m)| {
                let fm = apply_poly(&self.t, f).expect("same field");
                let mut power = fm.clone();
                let mut chain = Vec::with_capacity(*m);
                for i in 1..=*m {
                    if i > 1 {
                        power = power.mul(&fm);
                    }
                    chain.push(power.null_space());
                }
                PrimaryBlock {
                    factor: f.clone(),
                    multiplicity: *m,
                    component: chain.last().cloned().expect("multiplicity ≥ 1"),
                    chain,
                }
            })
            .collect()
    }
}

/// Blocks in the order `p₁ = x` first, then the remaining factors in
/// canonical order.
pub fn primary_decomposition(spec: &CyclicSpec) -> Vec<PrimaryBlock> {
    Analysis::new(spec).primary()
}

/// `Φ(A) = ker q(L_a)`, `q = Π p_j^{n_j − 1}`.
pub fn frattini_cyclic(spec: &CyclicSpec) -> Subspace {
    Analysis::new(spec).frattini()
}

/// `Φ(A) = 0` exactly when `p` is squarefree.
pub fn is_frattini_trivial(spec: &CyclicSpec) -> bool {
    Analysis::new(spec).factorization.is_squarefree()
}

/// `ker r_j(L_a)` with `r_j = p / p_j`, one per distinct irreducible factor.
pub fn maximal_subalgebras_cyclic(spec: &CyclicSpec) -> Vec<Subspace> {
    Analysis::new(spec).maximal_subalgebras()
}

/// Fitting null component of `L_a`.
pub fn cartan_cyclic(spec: &CyclicSpec) -> Subspace {
    fitting_components(&spec.companion()).0
}

/// `ker p_j(L_a)` for `j ≥ 2`, preceded by `ker L_a` when `x²` divides `p`.
pub fn minimal_ideals_cyclic(spec: &CyclicSpec) -> Vec<Subspace> {
    Analysis::new(spec).minimal_ideals()
}

pub fn socle_cyclic(spec: &CyclicSpec) -> Subspace {
    Analysis::new(spec).socle()
}

/// `ker t(L_a)` with `t = p / x`; always equal to `A²`.
pub fn maximal_ideal_cyclic(spec: &CyclicSpec) -> Subspace {
    Analysis::new(spec).maximal_ideal()
}

/// `(A₀, A₁) = (ker Tⁿ, im Tⁿ)`.
pub fn fitting_decomposition_cyclic(spec: &CyclicSpec) -> (Subspace, Subspace) {
    fitting_components(&spec.companion())
}

/// Everything the closed forms give for one spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicReport {
    pub spec: CyclicSpec,
    pub p: Polynomial,
    pub factorization: Factorization,
    pub primary: Vec<PrimaryBlock>,
    pub frattini: Subspace,
    pub maximal_subalgebras: Vec<Subspace>,
    pub cartan: Subspace,
    pub minimal_ideals: Vec<Subspace>,
    pub socle: Subspace,
    pub maximal_ideal: Subspace,
    pub fitting: (Subspace, Subspace),
}

pub fn cyclic_report(spec: &CyclicSpec) -> CyclicReport {
    let an = Analysis::new(spec);
    let fitting = fitting_components(&an.t);
    CyclicReport {
        spec: spec.clone(),
        p: an.p.clone(),
        factorization: an.factorization.clone(),
        primary: an.primary(),
        frattini: an.frattini(),
        maximal_subalgebras: an.maximal_subalgebras(),
        cartan: fitting.0.clone(),
        minimal_ideals: an.minimal_ideals(),
        socle: an.socle(),
        maximal_ideal: an.maximal_ideal(),
        fitting,
    }
}
