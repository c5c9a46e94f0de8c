//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any fails. Pass criterion numbers to run a subset:
//! `cargo test --test acceptance -- 1 6`.

use std::collections::BTreeSet;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leibniz::cyclic::{
    all_cyclic_specs, build_cyclic, cartan_cyclic, frattini_cyclic, maximal_ideal_cyclic, maximal_subalgebras_cyclic,
    minimal_ideals_cyclic, socle_cyclic, CyclicSpec,
};
use leibniz::format::{parse_algebra, print_algebra};
use leibniz::poly::factor;
use leibniz::verify::{
    all_subalgebras, enumerate_leibniz, frattini_bruteforce, maximal_ideals_bruteforce, maximal_subalgebras_bruteforce,
    minimal_ideals_bruteforce, nonembedding_frattini, nonembedding_power, sample_leibniz, socle_bruteforce,
    sweep_condition_k, sweep_quotient, sweep_s_star, unique_nilpotent_closure, Census, Coverage,
};
use leibniz::{FieldSpec, LeibnizAlgebra, Nilpotency, Polynomial, Scalar, Subspace};

const GF2: FieldSpec = FieldSpec::Prime(2);
const GF3: FieldSpec = FieldSpec::Prime(3);
const GF5: FieldSpec = FieldSpec::Prime(5);
const Q: FieldSpec = FieldSpec::Rationals;

const CROSS_CHECK_LIMIT: Duration = Duration::from_secs(10);
const CARTAN_LIMIT: Duration = Duration::from_secs(30);
const FULL_CENSUS_LIMIT: Duration = Duration::from_secs(15 * 60);
const SAMPLED_CENSUS_LIMIT: Duration = Duration::from_secs(10);
const CENSUS_SAMPLES: u64 = 1_000_000;
const POWER_FULL_LIMIT: Duration = Duration::from_secs(30 * 60);
const POWER_SAMPLED_LIMIT: Duration = Duration::from_secs(60);
const POWER_SAMPLES: u64 = 100_000;
const SEED: u64 = 20240601;
const PROPERTY_CASES: usize = 1000;

/// Collects the checks of one criterion.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn within(&mut self, label: &str, elapsed: Duration, limit: Duration) {
        self.note(format!("{label}: {elapsed:.2?} (limit {limit:?})"));
        self.check(elapsed < limit, || {
            format!("{label} took {elapsed:.2?}, limit {limit:?}")
        });
    }
}

fn census_gf2_dim3() -> &'static (Census, Duration) {
    static CELL: OnceLock<(Census, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let c = enumerate_leibniz(GF2, 3).expect("within budget");
        (c, start.elapsed())
    })
}

/// Every cyclic spec of dimension 2, 3, 4 over GF(2) and GF(3).
fn cyclic_universe() -> Vec<CyclicSpec> {
    let mut out = Vec::new();
    for f in [GF2, GF3] {
        for n in 2..=4 {
            out.extend(all_cyclic_specs(f, n).expect("finite field"));
        }
    }
    out
}

fn sorted(mut v: Vec<Subspace>) -> Vec<Subspace> {
    v.sort();
    v
}

fn universe_size_check(out: &mut Outcome, specs: &[CyclicSpec]) {
    let count = |f: FieldSpec| specs.iter().filter(|s| s.field() == f).count();
    out.check(count(GF2) == 2 + 4 + 8, || format!("{} GF(2) specs", count(GF2)));
    out.check(count(GF3) == 3 + 9 + 27, || format!("{} GF(3) specs", count(GF3)));
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::default();
    let specs = cyclic_universe();
    universe_size_check(&mut out, &specs);
    let start = Instant::now();
    for s in &specs {
        let a = s.algebra();
        let closed = frattini_cyclic(s);
        let brute = frattini_bruteforce(&a).expect("lattice within budget");
        out.check(closed == brute, || {
            format!(
                "{s}: closed {} vs brute {}",
                a.format_subspace(&closed),
                a.format_subspace(&brute)
            )
        });
    }
    out.within("runtime", start.elapsed(), CROSS_CHECK_LIMIT);
    out.note(format!("{} specs", specs.len()));
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::default();
    let specs = cyclic_universe();
    let start = Instant::now();
    for s in &specs {
        let closed = sorted(maximal_subalgebras_cyclic(s));
        let brute = sorted(maximal_subalgebras_bruteforce(&s.algebra()).expect("lattice within budget"));
        out.check(closed == brute, || {
            format!("{s}: {} closed vs {} brute", closed.len(), brute.len())
        });
    }
    out.within("runtime", start.elapsed(), CROSS_CHECK_LIMIT);
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::default();
    let specs = cyclic_universe();
    let start = Instant::now();
    for s in &specs {
        let a = s.algebra();
        let h = cartan_cyclic(s);
        out.check(a.is_cartan(&h).unwrap(), || {
            format!("{s}: Fitting null component fails is_cartan")
        });
        let cartans: Vec<Subspace> = all_subalgebras(&a)
            .expect("lattice within budget")
            .into_iter()
            .filter(|u| a.is_cartan(u).unwrap())
            .collect();
        out.check(cartans == vec![h.clone()], || {
            format!("{s}: {} Cartan subalgebras", cartans.len())
        });
    }
    out.within("runtime", start.elapsed(), CARTAN_LIMIT);
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::default();
    for s in &cyclic_universe() {
        let a = s.algebra();
        let minimal = sorted(minimal_ideals_cyclic(s));
        let brute = sorted(minimal_ideals_bruteforce(&a).unwrap());
        out.check(minimal == brute, || format!("{s}: minimal ideals differ"));
        out.check(socle_cyclic(s) == socle_bruteforce(&a).unwrap(), || {
            format!("{s}: socle differs")
        });
        let m = maximal_ideal_cyclic(s);
        out.check(maximal_ideals_bruteforce(&a).unwrap() == vec![m.clone()], || {
            format!("{s}: maximal ideals differ")
        });
        out.check(m == a.derived(), || format!("{s}: maximal ideal is not A^2"));
    }
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::default();
    let span = |f: FieldSpec, vs: &[&[i64]]| {
        Subspace::span(f, 2, vs.iter().map(|v| v.iter().map(|&x| f.from_i64(x)).collect())).unwrap()
    };

    // a·a = a², a·a² = a²
    let (a, spec) = build_cyclic(Q, vec![Q.one()]).unwrap();
    out.check(!a.is_nilpotent(), || "idempotent example is nilpotent".into());
    let a2 = span(Q, &[&[0, 1]]);
    let h = span(Q, &[&[1, -1]]);
    // both lines are subalgebras of a 2-dimensional algebra, hence maximal
    out.check(a.is_subalgebra(&a2).unwrap() && a.is_subalgebra(&h).unwrap(), || {
        "span{a^2} or span{a - a^2} is not a subalgebra".into()
    });
    out.check(
        a2.intersect(&h).unwrap().is_zero() && frattini_cyclic(&spec).is_zero(),
        || "Frattini of the idempotent example is not 0".into(),
    );
    out.check(a.restrict(&h).unwrap().is_nilpotent(), || "H is not nilpotent".into());
    out.check(a.normal_closure(&h).unwrap().is_full(), || "H^A is not A".into());
    for f in [GF2, GF3, GF5] {
        let (af, _) = build_cyclic(f, vec![f.one()]).unwrap();
        let (count, witnesses) = unique_nilpotent_closure(&af).unwrap();
        out.check(count == 1 && witnesses == vec![span(f, &[&[1, -1]])], || {
            format!("{f}: {count} nilpotent subalgebras with closure A")
        });
        out.check(frattini_bruteforce(&af).unwrap().is_zero(), || {
            format!("{f}: Frattini is not 0")
        });
    }

    // a·a = a², a·a² = 0
    let (b, spec) = build_cyclic(Q, vec![Q.zero()]).unwrap();
    out.check(b.nilpotency_class() == Nilpotency::Class(2), || {
        format!("nilpotent example has class {}", b.nilpotency_class())
    });
    out.check(b.dim() - b.derived().dim() == 1, || "dim(A/A^2) is not 1".into());
    out.check(frattini_cyclic(&spec) == b.derived(), || {
        "Frattini is not A^2 over Q".into()
    });
    for f in [GF2, GF3, GF5] {
        let (bf, _) = build_cyclic(f, vec![f.zero()]).unwrap();
        out.check(frattini_bruteforce(&bf).unwrap() == bf.derived(), || {
            format!("{f}: Frattini is not A^2")
        });
    }
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::default();
    let dim2 = enumerate_leibniz(GF2, 2).unwrap();
    out.check(dim2.scanned() == 256, || format!("dim 2 scanned {}", dim2.scanned()));
    let (dim3, census_time) = census_gf2_dim3();
    out.check(dim3.scanned() == 1 << 27, || {
        format!("dim 3 scanned {}", dim3.scanned())
    });

    let start = Instant::now();
    for census in [&dim2, dim3] {
        for report in [sweep_s_star(census).unwrap(), sweep_condition_k(census).unwrap()] {
            out.check(report.passed() && report.checked == census.len(), || report.to_string());
        }
        out.note(census.describe());
    }
    out.within(
        "full dim-3 census and sweeps",
        *census_time + start.elapsed(),
        FULL_CENSUS_LIMIT,
    );

    let start = Instant::now();
    let sample = sample_leibniz(GF2, 3, CENSUS_SAMPLES, SEED).unwrap();
    for report in [sweep_s_star(&sample).unwrap(), sweep_condition_k(&sample).unwrap()] {
        out.check(report.passed(), || report.to_string());
    }
    out.within("sampled dim-3 run", start.elapsed(), SAMPLED_CENSUS_LIMIT);
    out.note(sample.describe());
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::default();
    let mut pairs = 0;
    let mut violations = Vec::new();
    let mut hall_violations = 0;
    for d in 0..=3 {
        let census = if d == 3 {
            census_gf2_dim3().0.clone()
        } else {
            enumerate_leibniz(GF2, d).unwrap()
        };
        let sweep = sweep_quotient(&census).unwrap();
        out.check(sweep.biconditional.passed(), || sweep.biconditional.to_string());
        pairs += sweep.stated_bound.checked;
        hall_violations += sweep.hall_bound.counterexamples.len();
        violations.extend(sweep.stated_bound.counterexamples);
    }
    out.note(format!(
        "{pairs} pairs with A nilpotent and N != 0; {} violate the bound with d+1 = class(A/N^2)",
        violations.len()
    ));
    out.note(format!("with d = class(A/N^2) instead: {hall_violations} violations"));
    if let Some(first) = violations.first() {
        out.note(format!("first violation: {}", first.detail));
        out.note(print_algebra(&first.algebra).trim_end().replace('\n', " | "));
    }
    out.check(violations.is_empty(), || format!("{} violations", violations.len()));
    out
}

fn heisenberg_gf2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(GF2, 3, &[(0, 1, 2, 1), (1, 0, 2, 1)]).unwrap()
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::default();
    let a = heisenberg_gf2();
    let start = Instant::now();
    let full = nonembedding_power(&a, 4, Coverage::Full).unwrap();
    out.within("full sweep", start.elapsed(), POWER_FULL_LIMIT);
    out.check(full.passed(), || full.to_string());
    out.note(format!("full: {} algebras checked", full.checked));

    let start = Instant::now();
    let sampled = nonembedding_power(
        &a,
        4,
        Coverage::Sampled {
            samples: POWER_SAMPLES,
            seed: SEED,
        },
    )
    .unwrap();
    out.within("sampled sweep", start.elapsed(), POWER_SAMPLED_LIMIT);
    out.check(sampled.passed(), || sampled.to_string());
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::default();
    let (b, _) = build_cyclic(GF2, vec![GF2.zero()]).unwrap();
    let report = nonembedding_frattini(&b, 3, Coverage::Full).unwrap();
    out.check(report.passed() && !report.partial, || report.to_string());
    out.note(format!("{} algebras checked", report.checked));
    out
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-9..=9);
    let den = rng.gen_range(1..=5);
    Q.parse_scalar(&format!("{num}/{den}")).unwrap()
}

fn random_scalar(rng: &mut ChaCha8Rng, f: FieldSpec) -> Scalar {
    match f.order() {
        None => random_rational(rng),
        Some(p) => f.element(rng.gen_range(0..p)),
    }
}

fn criterion_10() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let mut exhaustive = 0;
    for (f, max_n) in [(GF2, 6), (GF3, 6), (GF5, 5)] {
        for n in 1..=max_n {
            for s in all_cyclic_specs(f, n).unwrap() {
                exhaustive += 1;
                out.check(s.algebra().is_leibniz(), || format!("{s} fails the identity"));
            }
        }
    }
    for _ in 0..PROPERTY_CASES {
        let n = rng.gen_range(1..=6);
        let alphas: Vec<Scalar> = (1..n).map(|_| random_rational(&mut rng)).collect();
        let (a, s) = build_cyclic(Q, alphas).unwrap();
        out.check(a.is_leibniz(), || format!("{s} fails the identity"));
    }
    out.note(format!(
        "identity: {exhaustive} finite specs, {PROPERTY_CASES} rational specs"
    ));

    for f in [Q, GF2, GF3, GF5] {
        for _ in 0..PROPERTY_CASES {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<Scalar> = (0..deg).map(|_| random_scalar(&mut rng, f)).collect();
            let mut lead = random_scalar(&mut rng, f);
            while lead.is_zero() {
                lead = random_scalar(&mut rng, f);
            }
            coeffs.push(lead);
            let p = Polynomial::new(f, coeffs);
            let fac = factor(&p).unwrap();
            let monic = fac.factors.iter().all(|(g, _)| g.is_monic() && g.degree() >= Some(1));
            out.check(fac.expand() == p && monic, || {
                format!("{f}: factorization of {p} is {fac}")
            });
        }
    }
    out.note(format!(
        "factorization: {PROPERTY_CASES} polynomials each over Q, GF(2), GF(3), GF(5)"
    ));

    for i in 0..PROPERTY_CASES {
        let f = [Q, GF2, GF3, GF5][i % 4];
        let n = rng.gen_range(1..=6);
        let random_space = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(0..=n);
            let vs: Vec<Vec<Scalar>> = (0..k)
                .map(|_| (0..n).map(|_| random_scalar(rng, f)).collect())
                .collect();
            Subspace::span(f, n, vs).unwrap()
        };
        let u = random_space(&mut rng);
        let v = random_space(&mut rng);
        let lhs = u.sum(&v).unwrap().dim() + u.intersect(&v).unwrap().dim();
        out.check(lhs == u.dim() + v.dim(), || format!("{f}: dimension formula fails"));
    }
    out.note(format!("dimension formula: {PROPERTY_CASES} pairs"));

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "alg"))
        .collect();
    files.sort();
    for path in &files {
        let text = std::fs::read_to_string(path).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        match parse_algebra(&text, true) {
            Ok(a) => {
                let printed = print_algebra(&a);
                out.check(printed == text, || format!("{name}: print(parse(file)) differs"));
                out.check(parse_algebra(&printed, true).as_ref() == Ok(&a), || {
                    format!("{name}: parse(print(A)) differs")
                });
            }
            Err(e) => out.check(false, || format!("{name}: {e}")),
        }
    }
    out.check(!files.is_empty(), || "no fixtures found".into());
    out.note(format!("round trip: {} fixtures", files.len()));
    out
}

type Criterion = (usize, &'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    (
        1,
        "Frattini closed form equals brute force on cyclic algebras",
        criterion_1,
    ),
    (2, "maximal subalgebras closed form equals brute force", criterion_2),
    (3, "Fitting null component is the unique Cartan subalgebra", criterion_3),
    (4, "minimal ideals, socle and maximal ideal formulas", criterion_4),
    (5, "two-dimensional cyclic examples", criterion_5),
    (6, "S* and condition k sweeps over GF(2) censuses", criterion_6),
    (7, "class bound for nilpotent ideals over GF(2), dim <= 3", criterion_7),
    (8, "Heisenberg algebra is no N^i over GF(2), dim N <= 4", criterion_8),
    (
        9,
        "nilpotent cyclic algebra is no ideal inside Frattini, dim 3",
        criterion_9,
    ),
    (10, "property suites", criterion_10),
];

fn main() -> ExitCode {
    let selected: BTreeSet<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for (id, title, run) in CRITERIA {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome {
                failures: vec![format!("panicked: {msg}")],
                notes: Vec::new(),
            }
        });
        let verdict = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {verdict}  {title} [{:.2?}]", start.elapsed());
        for n in &outcome.notes {
            println!("        {n}");
        }
        for f in outcome.failures.iter().take(5) {
            println!("        failure: {f}");
        }
        if outcome.failures.len() > 5 {
            println!("        ... {} more failures", outcome.failures.len() - 5);
        }
        if !outcome.failures.is_empty() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
