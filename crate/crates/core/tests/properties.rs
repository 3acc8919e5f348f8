use gins_core::abf::{betti_poset, enumerate_gins};
use gins_core::betti::KoszulBettiTensor;
use gins_core::corpus::{abf_corpus, moved, random_homogeneous, random_strongly_stable};
use gins_core::groebner::initial_ideal;
use gins_core::koszul::{graded_betti, koszul_tensor_for, recursion_check};
use gins_core::stable::{
    ah_koszul_tensor, ek_betti, hilbert_function, is_strongly_stable, lex_ideal_auto, lex_ideal_from_dims,
    macaulay_bound,
};
use gins_core::{
    gin, Coeff, Error, GinOptions, LinearFormSequence, MonomialIdeal, Polynomial, QuotientRing, TermOrder,
};
use num_traits::Zero;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1, |acc, k| acc * (a - k) / (k + 1))
}

/// Gin with up to three reseeds when the random trials disagree; a
/// disagreement means a non-generic draw, not a wrong answer.
fn gin_reseeded(n: usize, gens: &[Polynomial], order: &TermOrder, seed: u64) -> MonomialIdeal {
    let mut last = None;
    for k in 0..3 {
        match gin(n, gens, order, &GinOptions::with_seed(seed.wrapping_add(k))) {
            Ok(g) => return g,
            Err(e @ Error::GenericityNotReached { .. }) => last = Some(e),
            Err(e) => panic!("{e}"),
        }
    }
    panic!("three seeds disagreed: {last:?}")
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn lex_ideal_is_stable_with_same_hilbert_function(n in 2usize..=4, d in 2u32..=4, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let l = lex_ideal_auto(&i).unwrap();
        prop_assert!(is_strongly_stable(&l));
        let bound = l.max_degree().max(i.max_degree()) + 2;
        prop_assert_eq!(hilbert_function(&i, bound), hilbert_function(&l, bound));
        prop_assert_eq!(lex_ideal_auto(&l).unwrap(), l);
    }

    #[test]
    fn truncated_lex_ideal_matches_dimensions(n in 2usize..=4, d in 2u32..=4, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let h = hilbert_function(&i, d + 1);
        let l = lex_ideal_from_dims(n, h.dims()).unwrap();
        prop_assert_eq!(hilbert_function(&l, d + 1), h);
    }

    #[test]
    fn eliahou_kervaire_matches_koszul_homology(n in 2usize..=3, d in 2u32..=3, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let polys = i.to_polynomials(&TermOrder::Lex);
        prop_assert_eq!(ek_betti(&i).unwrap(), graded_betti(n, &polys).unwrap());
    }

    #[test]
    fn last_variables_reproduce_closed_formula(n in 2usize..=3, d in 2u32..=3, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let ring = QuotientRing::from_monomial_ideal(&i).unwrap();
        let j_bound = i.max_degree() + n as u32;
        let direct: KoszulBettiTensor =
            koszul_tensor_for(&ring, &LinearFormSequence::last_variables(n, n), n, j_bound).unwrap();
        prop_assert_eq!(&direct, &ah_koszul_tensor(&i, n, j_bound).unwrap());
        prop_assert!(recursion_check(&direct));
    }

    #[test]
    fn gin_of_borel_fixed_ideal_is_itself(n in 2usize..=3, d in 2u32..=3, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let polys = i.to_polynomials(&TermOrder::RevLex);
        for order in [TermOrder::RevLex, TermOrder::Lex] {
            prop_assert_eq!(&gin_reseeded(n, &polys, &order, seed), &i);
        }
    }

    #[test]
    fn gin_recovers_moved_stable_ideal(n in 2usize..=3, d in 2u32..=3, seed: u64) {
        let i = random_strongly_stable(n, d, seed);
        let gens = moved(&i, seed ^ 0x5a, 5).unwrap();
        prop_assert_eq!(gin_reseeded(n, &gens, &TermOrder::RevLex, seed), i);
    }

    #[test]
    fn gin_is_stable_and_keeps_hilbert_function(n in 2usize..=3, d in 2u32..=3, seed: u64) {
        let gens = random_homogeneous(n, d, seed);
        let g = gin_reseeded(n, &gens, &TermOrder::RevLex, seed);
        prop_assert!(is_strongly_stable(&g));
        let initial = initial_ideal(n, &gens, &TermOrder::Lex).unwrap();
        let bound = g.max_degree().max(initial.max_degree()) + 1;
        prop_assert_eq!(hilbert_function(&g, bound), hilbert_function(&initial, bound));
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn macaulay_bound_is_sharp(a in 0u64..200, d in 1u32..=5) {
        prop_assert!(macaulay_bound(a, d) >= a);
        // A single-term Macaulay representation.
        let k = d as u64 + 3;
        prop_assert_eq!(macaulay_bound(binomial(k, d as u64), d), binomial(k + 1, d as u64 + 1));
    }
}

#[test]
fn witnesses_realize_their_members() {
    for (seed, c) in abf_corpus(8, 4, 3, 11) {
        let family = enumerate_gins(&c.ideal).unwrap();
        for (k, m) in family.members.iter().enumerate() {
            assert!(m.witness.iter().all(|w| *w > Coeff::zero()), "seed {seed}");
            assert_eq!(family.member_for(&c.ideal, &m.witness_order()), Some(k), "seed {seed}");
        }
        let poset = betti_poset(&family);
        assert_eq!(poset.minimum, Some(family.revlex), "seed {seed}");
    }
}
