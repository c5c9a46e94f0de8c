use proptest::prelude::*;

use leibniz::cyclic::{build_cyclic, cyclic_report};
use leibniz::format::{parse_algebra, print_algebra};
use leibniz::poly::factor;
use leibniz::verify::{enumerate_leibniz, invariants, is_homomorphism, is_isomorphic, transport, Census};
use leibniz::{FieldSpec, LeibnizAlgebra, Matrix, Polynomial, Subspace};

const GF2: FieldSpec = FieldSpec::Prime(2);
const GF3: FieldSpec = FieldSpec::Prime(3);

fn census(field: FieldSpec, dim: usize) -> &'static Census {
    use std::sync::OnceLock;
    static GF2_3: OnceLock<Census> = OnceLock::new();
    static GF3_2: OnceLock<Census> = OnceLock::new();
    let cell = match (field, dim) {
        (FieldSpec::Prime(2), 3) => &GF2_3,
        (FieldSpec::Prime(3), 2) => &GF3_2,
        _ => unreachable!(),
    };
    cell.get_or_init(|| enumerate_leibniz(field, dim).unwrap())
}

/// A census algebra and an invertible change of basis over its field.
fn algebra_and_basis() -> impl Strategy<Value = (LeibnizAlgebra, Matrix)> {
    prop_oneof![Just((GF2, 3usize, 2u64)), Just((GF3, 2, 3))].prop_flat_map(|(f, n, q)| {
        let len = census(f, n).len();
        (0..len, proptest::collection::vec(0..q as i64, n * n)).prop_filter_map("singular", move |(i, entries)| {
            let rows: Vec<&[i64]> = entries.chunks(n).collect();
            let p = Matrix::from_i64(f, &rows);
            (p.image().dim() == n).then(|| (census(f, n).algebra(i), p))
        })
    })
}

fn rational_coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), 2..=7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transport_preserves_identity_and_invariants((a, p) in algebra_and_basis()) {
        let b = transport(&a, &p).unwrap();
        prop_assert!(b.is_leibniz());
        prop_assert!(is_homomorphism(&b, &a, &p));
        prop_assert_eq!(invariants(&b), invariants(&a));
    }

    #[test]
    fn isomorphism_is_an_equivalence((a, p) in algebra_and_basis(), (_, r) in algebra_and_basis()) {
        let w = is_isomorphic(&a, &a).unwrap();
        prop_assert!(w.is_some());
        let b = transport(&a, &p).unwrap();
        let there = is_isomorphic(&b, &a).unwrap().expect("b is a relabeling of a");
        let back = is_isomorphic(&a, &b).unwrap().expect("symmetric");
        prop_assert!(is_homomorphism(&b, &a, &there));
        prop_assert!(is_homomorphism(&a, &b, &back));
        if r.rows() == a.dim() && r.field() == a.field() {
            let c = transport(&b, &r).unwrap();
            let w = is_isomorphic(&c, &a).unwrap().expect("transitive");
            prop_assert!(is_homomorphism(&c, &a, &w));
        }
    }

    #[test]
    fn file_round_trip((a, p) in algebra_and_basis()) {
        let b = transport(&a, &p).unwrap();
        let text = print_algebra(&b);
        let parsed = parse_algebra(&text, true).unwrap();
        prop_assert_eq!(print_algebra(&parsed), text);
        prop_assert_eq!(parsed, b);
    }

    #[test]
    fn rational_factorization_expands(coeffs in rational_coeffs()) {
        let f = FieldSpec::Rationals;
        let cs = coeffs.iter().map(|(n, d)| f.parse_scalar(&format!("{n}/{d}")).unwrap()).collect();
        let p = Polynomial::new(f, cs);
        prop_assume!(!p.is_zero());
        let fac = factor(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic());
        }
    }

    #[test]
    fn rational_cyclic_closed_forms(alphas in proptest::collection::vec((-3i64..=3, 1i64..=3), 0..=4)) {
        let f = FieldSpec::Rationals;
        let alphas = alphas.iter().map(|(n, d)| f.parse_scalar(&format!("{n}/{d}")).unwrap()).collect();
        let (a, spec) = build_cyclic(f, alphas).unwrap();
        prop_assert!(a.is_leibniz());
        let r = cyclic_report(&spec);
        prop_assert_eq!(&r.maximal_ideal, &a.derived());
        prop_assert!(a.is_cartan(&r.cartan).unwrap());
        prop_assert_eq!(r.fitting.0.dim() + r.fitting.1.dim(), a.dim());
        prop_assert!(r.fitting.0.intersect(&r.fitting.1).unwrap().is_zero());
        for m in &r.maximal_subalgebras {
            prop_assert!(a.is_subalgebra(m).unwrap());
            prop_assert!(m.contains(&r.frattini).unwrap());
        }
        prop_assert_eq!(r.primary.iter().map(|b| b.component.dim()).sum::<usize>(), a.dim());
    }

    #[test]
    fn subspace_dimension_formula(
        u in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..=5),
        v in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..=5),
    ) {
        for f in [FieldSpec::Rationals, GF2, GF3] {
            let span = |vs: &Vec<Vec<i64>>| {
                Subspace::span(f, 5, vs.iter().map(|x| x.iter().map(|&c| f.from_i64(c)).collect())).unwrap()
            };
            let (su, sv) = (span(&u), span(&v));
            let sum = su.sum(&sv).unwrap();
            let meet = su.intersect(&sv).unwrap();
            prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sv.dim());
            prop_assert!(sum.contains(&su).unwrap() && su.contains(&meet).unwrap());
        }
    }
}
