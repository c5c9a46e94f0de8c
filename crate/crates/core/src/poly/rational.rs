//! Factorization over Q.
//!
//! A squarefree rational polynomial is scaled to a primitive integer
//! polynomial `h`. When the Mignotte bound of `h` is small enough, `h` is
//! factored modulo a single prime `p` larger than twice that bound and the
//! modular factors are recombined by subset search; no Hensel lifting is
//! needed because `p` already bounds every integer factor. Oversized inputs
//! fall back to Kronecker's interpolation search.

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::field::{is_prime_u64, FieldSpec};
use crate::poly::factor::{canonical_order, gcd};
use crate::poly::{finite, Polynomial};

type IntPoly = Vec<BigInt>;

/// Largest modulus for the single-prime route; products stay inside `u128`.
const MAX_MODULUS: u64 = 1 << 62;

pub(crate) fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.monic()];
    }
    let h = primitive_integer(f);
    let mut out: Vec<Polynomial> = factor_primitive(&h).iter().map(to_monic_rational).collect();
    out.sort_by(canonical_order);
    out
}

fn factor_primitive(h: &IntPoly) -> Vec<IntPoly> {
    match single_prime_modulus(h) {
        Some(p) => recombine(h, p),
        None => factor_integer_kronecker(h),
    }
}

fn primitive_integer(f: &Polynomial) -> IntPoly {
    let rats: Vec<&BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients"))
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: IntPoly = rats.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    primitive_part(&ints)
}

fn primitive_part(h: &IntPoly) -> IntPoly {
    let content = h.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return h.clone();
    }
    let sign = if h.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    h.iter().map(|c| c / &content * &sign).collect()
}

fn to_rational(h: &IntPoly) -> Polynomial {
    let q = FieldSpec::Rationals;
    Polynomial::new(
        q,
        h.iter()
            .map(|c| q.from_rational(&BigRational::from_integer(c.clone())).unwrap())
            .collect(),
    )
}

fn to_monic_rational(h: &IntPoly) -> Polynomial {
    to_rational(h).monic()
}

fn to_modular(h: &IntPoly, p: u64) -> Polynomial {
    let field = FieldSpec::Prime(p);
    Polynomial::new(
        field,
        h.iter()
            .map(|c| field.from_rational(&BigRational::from_integer(c.clone())).unwrap())
            .collect(),
    )
}

fn degree(h: &IntPoly) -> usize {
    h.len() - 1
}

/// Exact quotient over Z, if `g` divides `h`.
fn divide(h: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let (q, r) = to_rational(h).div_rem(&to_rational(g)).ok()?;
    if !r.is_zero() {
        return None;
    }
    q.coeffs()
        .iter()
        .map(|c| {
            let c = c.as_rational().unwrap();
            c.is_integer().then(|| c.to_integer())
        })
        .collect()
}

/// A prime exceeding `2·|lc|·2^n·‖h‖₂` modulo which `h` keeps its degree and
/// stays squarefree, or `None` if that prime would not fit the fast path.
fn single_prime_modulus(h: &IntPoly) -> Option<u64> {
    let n = degree(h);
    let norm2: BigInt = h.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1u32;
    let lc = h[n].abs();
    let bound: BigInt = BigInt::from(2u32) * &lc * (BigInt::one() << n) * norm;
    let mut p = bound.to_u64().filter(|&b| b < MAX_MODULUS)? + 1;
    loop {
        if p >= MAX_MODULUS {
            return None;
        }
        if is_prime_u64(p) && !(&lc % p).is_zero() {
            let hp = to_modular(h, p);
            if gcd(&hp, &hp.derivative()).is_one() {
                return Some(p);
            }
        }
        p += 1;
    }
}

/// Symmetric lift of a GF(p) polynomial to Z.
fn lift(f: &Polynomial, p: u64) -> IntPoly {
    let half = p / 2;
    f.coeffs()
        .iter()
        .map(|c| {
            let r = c.residue().unwrap();
            if r > half {
                BigInt::from(r) - BigInt::from(p)
            } else {
                BigInt::from(r)
            }
        })
        .collect()
}

fn recombine(h: &IntPoly, p: u64) -> Vec<IntPoly> {
    let field = FieldSpec::Prime(p);
    let mut modular = finite::factor_squarefree(&to_modular(h, p).monic());
    let mut current = h.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= modular.len() {
        for subset in combinations(modular.len(), size) {
            let lc = field
                .from_rational(&BigRational::from_integer(current[degree(&current)].clone()))
                .unwrap();
            let product = subset
                .iter()
                .fold(Polynomial::constant(lc), |acc, &i| &acc * &modular[i]);
            let candidate = primitive_part(&lift(&product, p));
            if let Some(q) = divide(&current, &candidate) {
                found.push(candidate);
                current = q;
                for &i in subset.iter().rev() {
                    modular.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if degree(&current) > 0 {
        found.push(primitive_part(&current));
    }
    found
}

/// Index subsets of `{0..n}` of size `k` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

fn eval_int(h: &IntPoly, x: &BigInt) -> BigInt {
    h.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= v {
        if (&v % &d).is_zero() {
            let e = &v / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in monomial form.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Kronecker's method: search for a factor of each degree `d ≤ n/2` among
/// the interpolants of divisor choices at `d + 1` integer points. Input must
/// be a primitive integer polynomial (index = degree) with positive leading
/// coefficient. Exponential in general; intended for desk-scale inputs.
pub fn factor_integer_kronecker(h: &[BigInt]) -> Vec<Vec<BigInt>> {
    let h: IntPoly = h.to_vec();
    let n = degree(&h);
    if n <= 1 {
        return vec![h];
    }
    // integer points 0, 1, -1, 2, -2, ...
    let mut points = Vec::new();
    let mut k: i64 = 0;
    while points.len() <= n / 2 {
        let x = BigInt::from(k);
        let v = eval_int(&h, &x);
        if v.is_zero() {
            let lin = vec![-x, BigInt::one()];
            let rest = divide(&h, &lin).expect("root gives a linear factor");
            let mut out = vec![lin];
            out.extend(factor_integer_kronecker(&rest));
            return out;
        }
        points.push((x, v));
        k = if k <= 0 { 1 - k } else { -k };
    }
    for d in 1..=n / 2 {
        let xs: Vec<BigInt> = points[..=d].iter().map(|(x, _)| x.clone()).collect();
        let choices: Vec<Vec<BigInt>> = points[..=d]
            .iter()
            .enumerate()
            .map(|(i, (_, v))| {
                let pos = divisors(v);
                if i == 0 {
                    pos
                } else {
                    pos.iter().flat_map(|x| [x.clone(), -x]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; d + 1];
        'search: loop {
            let ys: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            let g = interpolate(&xs, &ys);
            if g[d] != BigRational::zero() && g.iter().all(|c| c.is_integer()) {
                let g: IntPoly = g.iter().map(|c| c.to_integer()).collect();
                let g = primitive_part(&g);
                if let Some(rest) = divide(&h, &g) {
                    let mut out = factor_integer_kronecker(&g);
                    out.extend(factor_integer_kronecker(&primitive_part(&rest)));
                    return out;
                }
            }
            for i in 0..=d {
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    continue 'search;
                }
                idx[i] = 0;
            }
            break;
        }
    }
    vec![h]
}
