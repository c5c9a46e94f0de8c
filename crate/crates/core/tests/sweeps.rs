use leibniz::verify::{
    enumerate_leibniz, sample_leibniz, sweep_cyclic_frattini, sweep_equivalences, sweep_lemma_generators,
    sweep_lemma_minimal, sweep_quotient, TheoremReport,
};
use leibniz::FieldSpec;

const GF2: FieldSpec = FieldSpec::Prime(2);
const GF3: FieldSpec = FieldSpec::Prime(3);

fn assert_clean(report: &TheoremReport) {
    assert!(report.passed(), "{report}");
}

#[test]
fn equivalences_and_lemmas_over_gf2() {
    for dim in 1..=3 {
        let census = enumerate_leibniz(GF2, dim).unwrap();
        let eq = sweep_equivalences(&census).unwrap();
        assert_clean(&eq);
        assert_eq!(eq.checked, census.len());
        assert_clean(&sweep_lemma_generators(&census).unwrap());
        assert_clean(&sweep_lemma_minimal(&census).unwrap());
    }
}

#[test]
fn equivalences_and_cyclic_frattini_over_gf3() {
    let census = enumerate_leibniz(GF3, 2).unwrap();
    assert_clean(&sweep_equivalences(&census).unwrap());
    let fr = sweep_cyclic_frattini(&census).unwrap();
    assert_clean(&fr);
    assert_eq!(fr.checked + fr.skipped, census.len());
}

#[test]
fn quotient_biconditional_over_gf3_dim2() {
    let sweep = sweep_quotient(&enumerate_leibniz(GF3, 2).unwrap()).unwrap();
    assert_clean(&sweep.biconditional);
    assert_clean(&sweep.hall_bound);
}

#[test]
fn census_counts() {
    let counts: Vec<usize> = (0..=3).map(|d| enumerate_leibniz(GF2, d).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 13, 806]);
}

#[test]
fn sampled_census_is_a_subset() {
    let full = enumerate_leibniz(GF2, 3).unwrap();
    let sample = sample_leibniz(GF2, 3, 200_000, 11).unwrap();
    assert!(!sample.is_empty());
    for a in sample.iter() {
        assert!(a.is_leibniz());
        assert!(full.iter().any(|b| b == a));
    }
}
