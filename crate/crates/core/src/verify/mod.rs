//! Brute-force oracles over small prime fields: structure-constant censuses,
//! subalgebra and ideal lattices, isomorphism search, and sweeps that check
//! the nilpotency theorems and the cyclic closed forms against them.

pub mod census;
pub mod iso;
pub mod lattice;
pub mod predicates;
pub mod theorems;

pub use census::{
    enumerate_leibniz, enumerate_leibniz_with_budget, sample_leibniz, sample_triangular_nilpotent,
    triangular_nilpotent, Census, SearchMode, DEFAULT_CENSUS_BUDGET,
};
pub use iso::{invariants, is_homomorphism, is_isomorphic, transport, Invariants};
pub use lattice::{
    all_ideals, all_subalgebras, enumerate_subspaces, frattini_bruteforce, maximal_ideals_bruteforce,
    maximal_subalgebras_bruteforce, minimal_ideals_bruteforce, socle_bruteforce,
};
pub use predicates::{
    condition_k, is_one_generated, is_s_star, is_s_star_strict, nilpotency_equivalences, unique_nilpotent_closure,
    Equivalences,
};
pub use theorems::{
    check_quotient_theorem, cyclic_presentation, nonembedding_frattini, nonembedding_power, sweep_condition_k,
    sweep_cyclic_frattini, sweep_equivalences, sweep_lemma_generators, sweep_lemma_minimal, sweep_quotient,
    sweep_s_star, Counterexample, Coverage, QuotientCheck, QuotientSweep, TheoremReport,
};
