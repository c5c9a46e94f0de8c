use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::poly::{finite, rational, Polynomial};

/// `unit · Π factor^multiplicity` with monic irreducible, pairwise distinct
/// factors sorted by degree and then by coefficient sequence (constant term
/// first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.unit.clone()), |acc, (p, m)| &acc * &p.pow(*m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    pub fn multiplicity_of(&self, p: &Polynomial) -> usize {
        self.factors.iter().find(|(f, _)| f == p).map_or(0, |(_, m)| *m)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (p, m) in &self.factors {
            let base = if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            };
            if *m == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{m}"));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

pub(crate) fn canonical_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(f.field(), g.field()));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

pub(crate) fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    poly_gcd(f, g).expect("same field")
}

/// `f = Π g_i^{m_i}` with the `g_i` monic, squarefree and pairwise coprime,
/// sorted by multiplicity. A non-monic input is normalized first.
///
/// Over GF(p) the part whose derivative vanishes is handled by taking p-th
/// roots (the Frobenius is the identity on the prime field).
pub fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = squarefree_monic(&f.monic());
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| canonical_order(&a.0, &b.0)));
    Ok(out)
}

fn squarefree_monic(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        // only possible in characteristic p
        let p = field.characteristic() as usize;
        for (g, m) in squarefree_monic(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = gcd(f, &d);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = gcd(&w, &c);
        let z = w.exact_div(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w);
    }
    if !c.is_constant() {
        let p = field.characteristic() as usize;
        debug_assert!(p > 0, "leftover repeated part only arises in characteristic p");
        for (g, m) in squarefree_monic(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

fn pth_root(f: &Polynomial) -> Polynomial {
    let p = f.field().characteristic() as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    Polynomial::new(f.field(), coeffs)
}

/// Complete factorization into monic irreducibles over the coefficient field.
pub fn factor(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading();
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(f)? {
        let irreducibles = match f.field() {
            FieldSpec::Prime(_) => finite::factor_squarefree(&part),
            FieldSpec::Rationals => rational::factor_squarefree(&part),
        };
        factors.extend(irreducibles.into_iter().map(|g| (g, m)));
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0));
    Ok(Factorization { unit, factors })
}

/// Product of the distinct monic irreducible factors.
pub fn radical(f: &Polynomial) -> Result<Polynomial> {
    let fac = factor(f)?;
    Ok(fac
        .factors
        .iter()
        .fold(Polynomial::one(f.field()), |acc, (p, _)| &acc * p))
}
