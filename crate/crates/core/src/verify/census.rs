//! Exhaustive and sampled enumeration of Leibniz structure-constant tables
//! over small prime fields.
//!
//! A table is stored as the tuple of left multiplications `(L_1, …, L_n)`,
//! `(L_i)_{kj} = c[i][j][k]`. The identity holds on all triples exactly when
//! `[L_i, L_j] = Σ_l c[i][j][l] L_l` for all `i, j`, so enumeration fixes
//! `L_1, L_2, …` in turn and tests a pair `(i, j)` as soon as every `L_l` it
//! mentions is fixed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Hard cap on `q^(n³)` for exhaustive enumeration.
pub const DEFAULT_CENSUS_BUDGET: u128 = 1 << 27;

/// Largest dimension the kernel handles; `2^(5³)` is far beyond any budget.
pub const MAX_CENSUS_DIM: usize = 4;

/// Matrices with at most this many elements get precomputed product tables.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every table of the universe.
    Full,
    /// A named sub-universe, complete for the question asked of it.
    Restricted(String),
    /// Uniform random tables from a seeded generator.
    Sampled { samples: u64, seed: u64 },
}

/// The Leibniz tables found by one enumeration, in lexicographic order of
/// the flattened structure constants.
#[derive(Clone, Debug)]
pub struct Census {
    field: FieldSpec,
    dim: usize,
    mode: SearchMode,
    scanned: u128,
    codes: Vec<u128>,
}

type Dense = [u32; 16];

struct Kernel {
    q: u32,
    n: usize,
    nn: usize,
    /// `q^(n²)`, the number of `n × n` matrices.
    m: usize,
    tables: Option<Tables>,
}

struct Tables {
    mul: Vec<u16>,
    add: Vec<u16>,
    sub: Vec<u16>,
    /// `scale[c * m + a] = c·a`
    scale: Vec<u16>,
    /// `digits[a * nn + pos]`
    digits: Vec<u8>,
}

impl Kernel {
    fn new(q: u32, n: usize) -> Self {
        let nn = n * n;
        let m = (q as usize).pow(nn as u32);
        let mut k = Kernel {
            q,
            n,
            nn,
            m,
            tables: None,
        };
        if m <= TABLE_LIMIT {
            k.tables = Some(k.build_tables());
        }
        k
    }

    fn build_tables(&self) -> Tables {
        let m = self.m;
        let dense: Vec<Dense> = (0..m).map(|a| self.decode(a)).collect();
        let mut mul = vec![0u16; m * m];
        let mut add = vec![0u16; m * m];
        let mut sub = vec![0u16; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = self.encode(&self.dense_mul(&dense[a], &dense[b])) as u16;
                add[a * m + b] = self.encode(&self.dense_add(&dense[a], &dense[b])) as u16;
                sub[a * m + b] = self.encode(&self.dense_sub(&dense[a], &dense[b])) as u16;
            }
        }
        let mut scale = vec![0u16; self.q as usize * m];
        for c in 0..self.q {
            for a in 0..m {
                scale[c as usize * m + a] = self.encode(&self.dense_scale(c, &dense[a])) as u16;
            }
        }
        let mut digits = vec![0u8; m * self.nn];
        for a in 0..m {
            for pos in 0..self.nn {
                digits[a * self.nn + pos] = dense[a][pos] as u8;
            }
        }
        Tables {
            mul,
            add,
            sub,
            scale,
            digits,
        }
    }

    /// Position `pos = j·n + k` holds `L_{kj}`; the first position is the
    /// most significant digit.
    fn decode(&self, mut a: usize) -> Dense {
        let mut d = [0u32; 16];
        for pos in (0..self.nn).rev() {
            d[pos] = (a % self.q as usize) as u32;
            a /= self.q as usize;
        }
        d
    }

    fn encode(&self, d: &Dense) -> usize {
        d[..self.nn]
            .iter()
            .fold(0usize, |acc, &x| acc * self.q as usize + x as usize)
    }

    fn dense_mul(&self, a: &Dense, b: &Dense) -> Dense {
        let (n, q) = (self.n, self.q as u64);
        let mut out = [0u32; 16];
        for j in 0..n {
            for k in 0..n {
                let mut s = 0u64;
                for t in 0..n {
                    s += a[t * n + k] as u64 * b[j * n + t] as u64;
                }
                out[j * n + k] = (s % q) as u32;
            }
        }
        out
    }

    fn dense_sub(&self, a: &Dense, b: &Dense) -> Dense {
        let q = self.q as u64;
        let mut out = [0u32; 16];
        for pos in 0..self.nn {
            out[pos] = ((a[pos] as u64 + q - b[pos] as u64) % q) as u32;
        }
        out
    }

    fn dense_scale(&self, c: u32, a: &Dense) -> Dense {
        let q = self.q as u64;
        let mut out = [0u32; 16];
        for pos in 0..self.nn {
            out[pos] = ((c as u64 * a[pos] as u64) % q) as u32;
        }
        out
    }

    fn dense_add(&self, a: &Dense, b: &Dense) -> Dense {
        let q = self.q as u64;
        let mut out = [0u32; 16];
        for pos in 0..self.nn {
            out[pos] = ((a[pos] as u64 + b[pos] as u64) % q) as u32;
        }
        out
    }

    fn digit(&self, a: usize, pos: usize) -> u32 {
        match &self.tables {
            Some(t) => t.digits[a * self.nn + pos] as u32,
            None => self.decode(a)[pos],
        }
    }

    /// Largest index the pair `(i, j)` depends on.
    fn requirement(&self, ls: &[usize], i: usize, j: usize) -> usize {
        let mut req = i.max(j);
        for l in (req + 1..self.n).rev() {
            if self.digit(ls[i], j * self.n + l) != 0 {
                req = l;
                break;
            }
        }
        req
    }

    fn pair_holds(&self, ls: &[usize], i: usize, j: usize) -> bool {
        let n = self.n;
        match &self.tables {
            Some(t) => {
                let m = self.m;
                let ab = t.mul[ls[i] * m + ls[j]] as usize;
                let ba = t.mul[ls[j] * m + ls[i]] as usize;
                let lhs = t.sub[ab * m + ba] as usize;
                let mut rhs = 0usize;
                for l in 0..n {
                    let c = t.digits[ls[i] * self.nn + j * n + l] as usize;
                    if c != 0 {
                        let term = t.scale[c * m + ls[l]] as usize;
                        rhs = t.add[rhs * m + term] as usize;
                    }
                }
                lhs == rhs
            }
            None => {
                let dense: Vec<Dense> = ls[..n].iter().map(|&a| self.decode(a)).collect();
                self.dense_pair_holds(&dense, i, j)
            }
        }
    }

    fn dense_pair_holds(&self, ls: &[Dense], i: usize, j: usize) -> bool {
        let n = self.n;
        let lhs = self.dense_sub(&self.dense_mul(&ls[i], &ls[j]), &self.dense_mul(&ls[j], &ls[i]));
        let mut rhs = [0u32; 16];
        for l in 0..n {
            let c = ls[i][j * n + l];
            if c != 0 {
                rhs = self.dense_add(&rhs, &self.dense_scale(c, &ls[l]));
            }
        }
        lhs[..self.nn] == rhs[..self.nn]
    }

    fn dense_is_leibniz(&self, ls: &[Dense]) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.dense_pair_holds(ls, i, j)))
    }

    /// Pairs whose requirement is exactly `depth`.
    fn consistent_at(&self, ls: &[usize], depth: usize) -> bool {
        for i in 0..=depth {
            for j in 0..=depth {
                if self.requirement(ls, i, j) == depth && !self.pair_holds(ls, i, j) {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&self, depth: usize, ls: &mut [usize; MAX_CENSUS_DIM], out: &mut Vec<u128>) {
        if depth == self.n {
            out.push(self.table_code(&ls[..self.n]));
            return;
        }
        for a in 0..self.m {
            ls[depth] = a;
            if self.consistent_at(ls, depth) {
                self.descend(depth + 1, ls, out);
            }
        }
    }

    fn table_code(&self, ls: &[usize]) -> u128 {
        ls.iter().fold(0u128, |acc, &a| acc * self.m as u128 + a as u128)
    }

    fn dense_code(&self, ls: &[Dense]) -> u128 {
        ls.iter()
            .fold(0u128, |acc, d| acc * self.m as u128 + self.encode(d) as u128)
    }
}

fn finite_order(field: FieldSpec) -> Result<u32> {
    match field {
        FieldSpec::Rationals => Err(Error::InfiniteField(field)),
        FieldSpec::Prime(p) if p <= u32::MAX as u64 => Ok(p as u32),
        FieldSpec::Prime(p) => Err(Error::BudgetExceeded {
            what: format!("census over GF({p})"),
            required: format!("{p} field elements"),
            limit: format!("{}", u32::MAX),
        }),
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_CENSUS_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("census of dimension {dim}"),
            required: format!("dimension {dim}"),
            limit: format!("dimension {MAX_CENSUS_DIM}"),
        });
    }
    Ok(())
}

/// `q^e`, or `None` on overflow.
fn checked_power(q: u32, e: usize) -> Option<u128> {
    (0..e).try_fold(1u128, |acc, _| acc.checked_mul(q as u128))
}

fn power_string(q: u32, e: usize) -> String {
    match checked_power(q, e) {
        Some(v) => format!("{q}^{e} = {v} tables"),
        None => format!("{q}^{e} tables"),
    }
}

/// Every Leibniz table of dimension `dim` over GF(p), within the default
/// budget.
pub fn enumerate_leibniz(field: FieldSpec, dim: usize) -> Result<Census> {
    enumerate_leibniz_with_budget(field, dim, DEFAULT_CENSUS_BUDGET)
}

pub fn enumerate_leibniz_with_budget(field: FieldSpec, dim: usize, budget: u128) -> Result<Census> {
    let q = finite_order(field)?;
    let total = checked_power(q, dim * dim * dim);
    if total.is_none_or(|t| t > budget) || dim > MAX_CENSUS_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("census of dimension {dim} over {field}"),
            required: power_string(q, dim * dim * dim),
            limit: format!("{budget} tables"),
        });
    }
    let total = total.expect("checked above");
    if dim == 0 {
        return Ok(Census {
            field,
            dim,
            mode: SearchMode::Full,
            scanned: 1,
            codes: vec![0],
        });
    }
    let kernel = Kernel::new(q, dim);
    let chunks: Vec<Vec<u128>> = (0..kernel.m)
        .into_par_iter()
        .map(|a| {
            let mut ls = [0usize; MAX_CENSUS_DIM];
            ls[0] = a;
            let mut out = Vec::new();
            if kernel.consistent_at(&ls, 0) {
                kernel.descend(1, &mut ls, &mut out);
            }
            out
        })
        .collect();
    Ok(Census {
        field,
        dim,
        mode: SearchMode::Full,
        scanned: total,
        codes: chunks.concat(),
    })
}

/// Draws `samples` uniform tables and keeps the distinct Leibniz ones.
pub fn sample_leibniz(field: FieldSpec, dim: usize, samples: u64, seed: u64) -> Result<Census> {
    let q = finite_order(field)?;
    check_dim(dim)?;
    if dim == 0 {
        return Ok(Census {
            field,
            dim,
            mode: SearchMode::Sampled { samples, seed },
            scanned: samples as u128,
            codes: vec![0],
        });
    }
    let kernel = Kernel::new(q, dim);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut codes = Vec::new();
    let mut ls = [0usize; MAX_CENSUS_DIM];
    for _ in 0..samples {
        for slot in ls.iter_mut().take(dim) {
            *slot = rng.gen_range(0..kernel.m);
        }
        let ok = (0..dim).all(|i| (0..dim).all(|j| kernel.pair_holds(&ls, i, j)));
        if ok {
            codes.push(kernel.table_code(&ls[..dim]));
        }
    }
    codes.sort_unstable();
    codes.dedup();
    Ok(Census {
        field,
        dim,
        mode: SearchMode::Sampled { samples, seed },
        scanned: samples as u128,
        codes,
    })
}

/// Positions `(i, j, k)` with `k > max(i, j)`.
fn triangular_positions(dim: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in i.max(j) + 1..dim {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Leibniz tables with `e_i e_j ∈ span{e_k : k > max(i, j)}`.
///
/// Every nilpotent algebra has such a basis: refine the upper central series
/// `0 ⊂ Z_1 ⊂ Z_2 ⊂ ⋯ ⊂ A` to a complete flag and number the basis from the
/// top. Each member is nilpotent, so this universe contains every nilpotent
/// algebra of the dimension up to isomorphism.
pub fn triangular_nilpotent(field: FieldSpec, dim: usize) -> Result<Census> {
    triangular_nilpotent_with_budget(field, dim, DEFAULT_CENSUS_BUDGET)
}

pub fn triangular_nilpotent_with_budget(field: FieldSpec, dim: usize, budget: u128) -> Result<Census> {
    let q = finite_order(field)?;
    check_dim(dim)?;
    let positions = triangular_positions(dim);
    let total = checked_power(q, positions.len());
    if total.is_none_or(|t| t > budget) {
        return Err(Error::BudgetExceeded {
            what: format!("strictly triangular tables of dimension {dim} over {field}"),
            required: power_string(q, positions.len()),
            limit: format!("{budget} tables"),
        });
    }
    let total = total.expect("checked above");
    let mode = SearchMode::Restricted(format!(
        "strictly triangular tables (complete for nilpotent algebras up to isomorphism), {total} scanned"
    ));
    if dim == 0 {
        return Ok(Census {
            field,
            dim,
            mode,
            scanned: 1,
            codes: vec![0],
        });
    }
    let kernel = Kernel::new(q, dim);
    let codes: Vec<u128> = (0..total as u64)
        .into_par_iter()
        .filter_map(|mut t| {
            let mut ls = [[0u32; 16]; MAX_CENSUS_DIM];
            // last position is the least significant digit
            for &(i, j, k) in positions.iter().rev() {
                ls[i][j * dim + k] = (t % q as u64) as u32;
                t /= q as u64;
            }
            kernel
                .dense_is_leibniz(&ls[..dim])
                .then(|| kernel.dense_code(&ls[..dim]))
        })
        .collect();
    let mut codes = codes;
    codes.sort_unstable();
    Ok(Census {
        field,
        dim,
        mode,
        scanned: total,
        codes,
    })
}

/// Uniform sample of strictly triangular tables, for dimensions where the
/// full triangular family is over budget.
pub fn sample_triangular_nilpotent(field: FieldSpec, dim: usize, samples: u64, seed: u64) -> Result<Census> {
    let q = finite_order(field)?;
    check_dim(dim)?;
    let positions = triangular_positions(dim);
    let kernel = Kernel::new(q, dim.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut codes = Vec::new();
    for _ in 0..samples {
        let mut ls = [[0u32; 16]; MAX_CENSUS_DIM];
        for &(i, j, k) in &positions {
            ls[i][j * dim + k] = rng.gen_range(0..q);
        }
        if dim == 0 || kernel.dense_is_leibniz(&ls[..dim]) {
            codes.push(kernel.dense_code(&ls[..dim]));
        }
    }
    codes.sort_unstable();
    codes.dedup();
    Ok(Census {
        field,
        dim,
        mode: SearchMode::Sampled { samples, seed },
        scanned: samples as u128,
        codes,
    })
}

impl Census {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> &SearchMode {
        &self.mode
    }

    /// Tables examined (drawn, in sampled mode).
    pub fn scanned(&self) -> u128 {
        self.scanned
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn algebra(&self, idx: usize) -> LeibnizAlgebra {
        let n = self.dim;
        let q = self.field.order().expect("finite field");
        let mut code = self.codes[idx];
        let mut sc = vec![self.field.zero(); n * n * n];
        // flattened digits are L_1 .. L_n, each in (j, k) order; sc index is (i, j, k)
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                for k in (0..n).rev() {
                    sc[(i * n + j) * n + k] = self.field.element((code % q as u128) as u64);
                    code /= q as u128;
                }
            }
        }
        let a = LeibnizAlgebra::new_unchecked(self.field, n, sc).expect("sized table");
        debug_assert!(a.is_leibniz());
        a
    }

    pub fn iter(&self) -> impl Iterator<Item = LeibnizAlgebra> + '_ {
        (0..self.len()).map(move |i| self.algebra(i))
    }

    /// One-line description of the universe.
    pub fn describe(&self) -> String {
        let base = format!("{} dim {}", self.field, self.dim);
        match &self.mode {
            SearchMode::Full => format!("{base}: all {} tables, {} Leibniz", self.scanned, self.len()),
            SearchMode::Restricted(what) => format!("{base}: {what}, {} Leibniz", self.len()),
            SearchMode::Sampled { samples, seed } => format!(
                "{base}: {samples} sampled tables (seed {seed}), {} distinct Leibniz",
                self.len()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent filter: every table through `LeibnizAlgebra::is_leibniz`.
    fn oracle_count(field: FieldSpec, dim: usize) -> usize {
        let q = field.order().unwrap();
        let total = q.pow((dim * dim * dim) as u32);
        (0..total)
            .filter(|&t| {
                let mut t = t;
                let sc = (0..dim * dim * dim)
                    .map(|_| {
                        let d = t % q;
                        t /= q;
                        field.element(d)
                    })
                    .collect();
                LeibnizAlgebra::new_unchecked(field, dim, sc).unwrap().is_leibniz()
            })
            .count()
    }

    #[test]
    fn dimension_one_over_gf2() {
        // a·a = a needs a = 2a, false over GF(2)
        let c = enumerate_leibniz(FieldSpec::Prime(2), 1).unwrap();
        assert_eq!(c.len(), oracle_count(FieldSpec::Prime(2), 1));
        assert_eq!(c.len(), 1);
        assert!(c.algebra(0).is_abelian());
    }

    #[test]
    fn counts_match_identity_filter() {
        for (p, n) in [(2, 2), (3, 2), (5, 1), (3, 1)] {
            let f = FieldSpec::Prime(p);
            let c = enumerate_leibniz(f, n).unwrap();
            assert_eq!(c.len(), oracle_count(f, n), "GF({p}) dim {n}");
            assert_eq!(c.scanned(), (p as u128).pow((n * n * n) as u32));
        }
    }

    #[test]
    fn members_are_leibniz_distinct_and_ordered() {
        let c = enumerate_leibniz(FieldSpec::Prime(3), 2).unwrap();
        let algebras: Vec<_> = c.iter().collect();
        assert!(algebras.iter().all(|a| a.is_leibniz()));
        let keys: Vec<Vec<u64>> = algebras
            .iter()
            .map(|a| a.structure_constants().iter().map(|s| s.residue().unwrap()).collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn untabled_kernel_agrees() {
        // GF(7) dim 2 has 2401 matrices, above the table limit
        let f = FieldSpec::Prime(7);
        let c = enumerate_leibniz(f, 2).unwrap();
        assert!(c.iter().all(|a| a.is_leibniz()));
        let c5 = enumerate_leibniz(FieldSpec::Prime(5), 2).unwrap();
        assert_eq!(c5.len(), oracle_count(FieldSpec::Prime(5), 2));
    }

    #[test]
    fn budget_refusal() {
        let err = enumerate_leibniz(FieldSpec::Prime(3), 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert!(err.to_string().contains("3^27"));
        assert!(enumerate_leibniz(FieldSpec::Rationals, 2).is_err());
        assert!(enumerate_leibniz_with_budget(FieldSpec::Prime(2), 2, 255).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_sound() {
        let f = FieldSpec::Prime(2);
        let a = sample_leibniz(f, 2, 2000, 7).unwrap();
        let b = sample_leibniz(f, 2, 2000, 7).unwrap();
        assert_eq!(a.codes, b.codes);
        let full = enumerate_leibniz(f, 2).unwrap();
        assert!(a.codes.iter().all(|c| full.codes.binary_search(c).is_ok()));
        // 2000 draws from 256 tables miss none with overwhelming probability
        assert_eq!(a.len(), full.len());
    }

    #[test]
    fn triangular_family() {
        for (p, n) in [(2, 2), (2, 3), (3, 3)] {
            let f = FieldSpec::Prime(p);
            let t = triangular_nilpotent(f, n).unwrap();
            assert!(t.iter().all(|a| a.is_leibniz() && a.is_nilpotent()));
            if n <= 3 && p == 2 {
                let full = enumerate_leibniz(f, n).unwrap();
                assert!(t.codes.iter().all(|c| full.codes.binary_search(c).is_ok()));
            }
        }
        let t = triangular_nilpotent(FieldSpec::Prime(2), 4).unwrap();
        assert_eq!(t.scanned(), 1 << 14);
        assert!(t.iter().all(|a| a.is_nilpotent()));
        let s = sample_triangular_nilpotent(FieldSpec::Prime(2), 4, 500, 1).unwrap();
        assert!(s.codes.iter().all(|c| t.codes.binary_search(c).is_ok()));
    }
}
