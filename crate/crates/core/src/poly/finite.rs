//! Distinct-degree and Cantor-Zassenhaus equal-degree splitting over GF(p).

use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Scalar;
use crate::poly::factor::{canonical_order, gcd};
use crate::poly::Polynomial;

/// Irreducible factors of a monic squarefree polynomial over GF(p).
pub(crate) fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_of(f));
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, &mut rng, &mut out);
    }
    out.sort_by(canonical_order);
    out
}

/// FNV-1a over the residues, so splitting is reproducible run to run.
fn seed_of(f: &Polynomial) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(f.field().characteristic());
    for c in f.coeffs() {
        eat(c.residue().expect("prime field coefficient"));
    }
    h
}

/// Pairs `(g, d)` where `g` is the product of all irreducible factors of
/// degree `d`.
fn distinct_degree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let p = BigUint::from(field.characteristic());
    let x = Polynomial::x(field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = gcd(&rest, &(&h - &x));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Polynomial>) {
    let n = f.degree().expect("nonzero");
    if n == d {
        out.push(f.monic());
        return;
    }
    let field = f.field();
    let p = field.characteristic();
    loop {
        let a = Polynomial::new(
            field,
            (0..n)
                .map(|_| field.element(rng.gen_range(0..p)))
                .collect::<Vec<Scalar>>(),
        );
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1)) mod f
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = (&t * &t).rem(f);
                acc = &acc + &t;
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            &a.pow_mod(&e, f) - &Polynomial::one(field)
        };
        let g = gcd(f, &b);
        let deg = g.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            let other = f.exact_div(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&other, d, rng, out);
            return;
        }
    }
}
