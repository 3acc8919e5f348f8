//! Seeded random ideals for property tests and verification campaigns.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abf::{construct, Construction, UpperPart};
use crate::coords::{random_coordinates, MatrixShape};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::{borel_compare, Monomial};
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::stable::borel_closure_set;
use crate::Coeff;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub label: String,
    pub n: usize,
    pub gens: Vec<Polynomial>,
}

/// Per-item seeds derived from a campaign seed.
pub fn item_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.random()).collect()
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let all = Monomial::all_of_degree(n, d);
    all[rng.random_range(0..all.len())].clone()
}

/// Borel closure of 1-3 random monomials with degrees in `1..=maxdeg`
/// (mostly `>= 2`).
pub fn random_strongly_stable(n: usize, maxdeg: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=3);
    let lo = if maxdeg >= 2 { 2 } else { 1 };
    let mut gens = Vec::new();
    for _ in 0..k {
        let d = rng.random_range(lo..=maxdeg.max(lo));
        let m = random_monomial(&mut rng, n, d);
        gens.extend(borel_closure_set(&[m]).expect("single degree"));
    }
    MonomialIdeal::new(n, gens).expect("same ring")
}

/// 1-4 random monomials with degrees in `1..=maxdeg`.
pub fn random_monomial_ideal(n: usize, maxdeg: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=4);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| {
            let d = rng.random_range(1..=maxdeg);
            random_monomial(&mut rng, n, d)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("same ring")
}

/// 1-3 sparse homogeneous polynomials with 1-3 terms, small integer
/// coefficients and degrees in `2..=maxdeg`.
pub fn random_homogeneous(n: usize, maxdeg: u32, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=3);
    random_forms(&mut rng, n, maxdeg, k)
}

fn random_forms(rng: &mut ChaCha8Rng, n: usize, maxdeg: u32, k: usize) -> Vec<Polynomial> {
    (0..k)
        .map(|_| {
            let d = rng.random_range(2.min(maxdeg)..=maxdeg);
            let terms = rng.random_range(1..=3);
            let mut f = Polynomial::zero(n, TermOrder::Lex);
            while f.is_zero() {
                f = Polynomial::from_terms(
                    n,
                    TermOrder::Lex,
                    (0..terms).map(|_| {
                        let c: i64 = [-3, -2, -1, 1, 2, 3][rng.random_range(0..6)];
                        (Coeff::from_integer(c.into()), random_monomial(rng, n, d))
                    }),
                );
            }
            f
        })
        .collect()
}

/// The image of a monomial ideal under a random coordinate change with
/// entries in `[-bound, bound]`.
pub fn moved(i: &MonomialIdeal, seed: u64, bound: i64) -> Result<Vec<Polynomial>> {
    let g = random_coordinates(i.n(), seed, bound, MatrixShape::General)?;
    g.apply_all(&i.to_polynomials(&TermOrder::Lex))
}

/// `(x_1^{a_1}, ..., x_k^{a_k})` for `k = min(n, 2)` and exponents in
/// `2..=maxdeg`, in random coordinates.
pub fn complete_intersection(n: usize, maxdeg: u32, seed: u64) -> Result<Vec<Polynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = n.min(2);
    let gens: Vec<Monomial> = (0..k)
        .map(|v| {
            let mut e = vec![0; n];
            e[v] = rng.random_range(2.min(maxdeg)..=maxdeg);
            Monomial::new(e)
        })
        .collect();
    moved(&MonomialIdeal::new(n, gens)?, rng.random(), 3)
}

/// A random instance of the almost Borel-fixed construction: 2-3 pairwise
/// Borel-incomparable monomials of degree `d`, grouped into sums at random.
pub fn random_abf(n: usize, d: u32, seed: u64) -> Option<Construction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = Monomial::all_of_degree(n, d);
    pool.shuffle(&mut rng);
    let want = rng.random_range(2..=3);
    let mut t: Vec<Monomial> = Vec::new();
    for m in pool {
        if t.iter().all(|u| matches!(borel_compare(u, &m), Ok(None))) {
            t.push(m);
            if t.len() == want {
                break;
            }
        }
    }
    if t.len() < 2 {
        return None;
    }
    let blocks =
        if t.len() == 3 && rng.random_bool(0.5) { vec![vec![0, 1], vec![2]] } else { vec![(0..t.len()).collect()] };
    let upper = if rng.random_bool(0.3) { UpperPart::Full } else { UpperPart::XR1 };
    construct(n, &t, &blocks, upper).ok()
}

/// `count` random constructions with `n` in `3..=max_n` and `d` in
/// `2..=max_d`; seeds that give no incomparable pair are skipped.
pub fn abf_corpus(count: usize, max_n: usize, max_d: u32, seed: u64) -> Vec<(u64, Construction)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let s: u64 = rng.random();
        let n = rng.random_range(3..=max_n.max(3));
        let d = rng.random_range(2..=max_d.max(2));
        if let Some(c) = random_abf(n, d, s) {
            out.push((s, c));
        }
    }
    out
}

/// Mixed corpus for the Koszul equivalence campaigns.
pub fn equivalence_corpus(n: usize, maxdeg: u32, count: usize, seed: u64) -> Result<Vec<CorpusItem>> {
    let seeds = item_seeds(seed, count);
    seeds
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let (label, gens) = match k % 7 {
                0 => {
                    let mut rng = ChaCha8Rng::seed_from_u64(s);
                    let k = rng.random_range(2..=3);
                    ("generic", random_forms(&mut rng, n, maxdeg, k))
                }
                1 => ("stable-moved", moved(&random_strongly_stable(n, maxdeg, s), s ^ 1, 3)?),
                2 => {
                    let l = crate::stable::lex_ideal_auto(&random_strongly_stable(n, maxdeg, s))?;
                    ("lex-moved", moved(&l, s ^ 1, 3)?)
                }
                3 => ("complete-intersection", complete_intersection(n, maxdeg, s)?),
                4 => ("monomial", random_monomial_ideal(n, maxdeg, s).to_polynomials(&TermOrder::Lex)),
                5 => ("stable-pair-moved", moved(&stable_pair(n, maxdeg, s), s ^ 1, 3)?),
                _ => ("gotzmann-moved", moved(&gotzmann_seed(n), s, 3)?),
            };
            Ok(CorpusItem { label: format!("{label}#{k}"), n, gens })
        })
        .collect()
}

/// Borel closure of one monomial of degree 2 and one of degree `maxdeg`,
/// the latter outside the first closure when possible.
pub fn stable_pair(n: usize, maxdeg: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let low = borel_closure_set(&[random_monomial(&mut rng, n, 2)]).expect("one degree");
    let first = MonomialIdeal::new(n, low.clone()).expect("same ring");
    let mut high = random_monomial(&mut rng, n, maxdeg.max(3));
    for _ in 0..20 {
        if !first.contains(&high) {
            break;
        }
        high = random_monomial(&mut rng, n, maxdeg.max(3));
    }
    let gens = low.into_iter().chain(borel_closure_set(&[high]).expect("one degree"));
    MonomialIdeal::new(n, gens).expect("same ring")
}

// A strongly stable Gotzmann ideal that is not lex: the degree-3 Borel
// closure of x2^2 x3 (three variables; padded with further variables).
fn gotzmann_seed(n: usize) -> MonomialIdeal {
    let mut e = vec![0; n.max(3)];
    e[1] = 2;
    e[2] = 1;
    let m = Monomial::new(e);
    MonomialIdeal::new(m.n(), borel_closure_set(&[m]).expect("one degree")).expect("same ring")
}

/// Polynomials `x_i` for the first `k` variables.
pub fn variables(n: usize, k: usize) -> Vec<Polynomial> {
    (0..k).map(|i| Polynomial::from_terms(n, TermOrder::Lex, [(Coeff::one(), Monomial::var(n, i))])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stable::is_strongly_stable;

    #[test]
    fn stable_corpus_is_stable() {
        for s in item_seeds(3, 50) {
            assert!(is_strongly_stable(&random_strongly_stable(4, 4, s)));
        }
    }

    #[test]
    fn generators_are_homogeneous_and_bounded() {
        for s in item_seeds(5, 50) {
            for f in random_homogeneous(3, 3, s) {
                let d = f.check_homogeneous().unwrap();
                assert!((2..=3).contains(&d));
            }
        }
    }

    #[test]
    fn deterministic() {
        let a = random_homogeneous(4, 3, 11);
        let b = random_homogeneous(4, 3, 11);
        assert_eq!(a, b);
        assert_eq!(abf_corpus(3, 4, 3, 1).len(), 3);
    }

    #[test]
    fn gotzmann_seed_is_gotzmann_but_not_lex() {
        let g = gotzmann_seed(3);
        assert_eq!(g.generators().len(), 7);
        assert!(crate::stable::is_gotzmann_stable(&g).unwrap());
        assert_ne!(crate::stable::lex_ideal_auto(&g).unwrap(), g);
    }
}
