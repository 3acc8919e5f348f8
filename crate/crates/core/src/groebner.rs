//! Normal forms, Buchberger's algorithm, initial ideals and generic initial
//! ideals.

use std::borrow::Cow;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coords::{random_coordinates, MatrixShape};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::{Polynomial, Term};
use crate::stable::is_strongly_stable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter_map(Polynomial::leading_monomial)
    }

    pub fn initial_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::new(n, self.leading_monomials().cloned()).expect("arity checked on input")
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, &self.order)
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| self.normal_form(&s_polynomial(&g[i], &g[j])).is_zero()))
    }
}

/// Remainder of `f` on division by `basis` under `order`.
///
/// The largest reducible term is always eliminated first, using the first
/// basis element (in the given order) whose leading monomial divides it.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let basis: Vec<Cow<'_, Polynomial>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| if g.order() == order { Cow::Borrowed(g) } else { Cow::Owned(g.with_order(order)) })
        .collect();
    let refs: Vec<&Polynomial> = basis.iter().map(|g| g.as_ref()).collect();
    reduce(f.with_order(order), &refs)
}

fn reduce(mut p: Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let n = p.n();
    let order = p.order().clone();
    let mut rem: Vec<Term> = Vec::new();
    // Terms already moved to the remainder are skipped by index instead of
    // rebuilding `p` after each irreducible leading term.
    let mut skip = 0;
    while skip < p.len() {
        let lt = &p.terms()[skip];
        let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lt.mono)));
        match divisor {
            None => {
                rem.push(lt.clone());
                skip += 1;
            }
            Some(g) => {
                let glt = g.leading().unwrap();
                let shift = glt.mono.quotient_of(&lt.mono).unwrap();
                let c = -(&lt.coeff / &glt.coeff);
                let tail = Polynomial::from_sorted_unchecked(n, order.clone(), p.terms()[skip..].to_vec());
                let reduced = tail.combine(g, &c, Some(&shift));
                let mut terms = p.into_terms();
                terms.truncate(skip);
                terms.extend(reduced.into_terms());
                p = Polynomial::from_sorted_unchecked(n, order.clone(), terms);
            }
        }
    }
    Polynomial::from_sorted_unchecked(n, order, rem)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (ft, gt) = (f.leading().unwrap(), g.leading().unwrap());
    let lcm = ft.mono.lcm(&gt.mono);
    let sf = ft.mono.quotient_of(&lcm).unwrap();
    let sg = gt.mono.quotient_of(&lcm).unwrap();
    let a = f.mul_monomial(&sf).scale(&ft.coeff.recip());
    a.combine(g, &-gt.coeff.recip(), Some(&sg))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    order: TermOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn lt(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    fn reduce(&self, f: Polynomial) -> Polynomial {
        reduce(f, &self.active_refs())
    }

    /// Gebauer-Moeller update for a new basis element.
    fn insert(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h.monic());
        self.active.push(true);
        let lth = self.lt(hi).clone();

        let mut cands: Vec<Pair> =
            (0..hi).filter(|&g| self.active[g]).map(|g| Pair { i: g, j: hi, lcm: self.lt(g).lcm(&lth) }).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while !cands.is_empty() {
            let p = cands.remove(0);
            let coprime = self.lt(p.i).is_coprime(&lth);
            let dominated = cands.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.lt(p.i).is_coprime(&lth));

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| !lth.divides(&p.lcm) || self.lt(p.i).lcm(&lth) == p.lcm || self.lt(p.j).lcm(&lth) == p.lcm)
            .collect();
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && lth.divides(self.lt(g)) {
                self.active[g] = false;
            }
        }
    }

    /// Index of the next pair under the normal strategy.
    fn next_pair(&self) -> Option<usize> {
        (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            self.order.cmp(&p.lcm, &q.lcm).then((p.i, p.j).cmp(&(q.i, q.j)))
        })
    }
}

/// Reduced Groebner basis of the ideal generated by homogeneous `gens`.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let mut inputs: Vec<Polynomial> = Vec::new();
    let mut n = None;
    for g in gens {
        if g.is_zero() {
            continue;
        }
        g.check_homogeneous()?;
        match n {
            None => n = Some(g.n()),
            Some(k) if k != g.n() => return Err(Error::DimensionMismatch { expected: k, found: g.n() }),
            _ => {}
        }
        inputs.push(g.with_order(order));
    }
    if let Some(k) = n {
        order.check_arity(k)?;
    }
    inputs.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    inputs.reverse();
    // Lowest degree first; stable within a degree.
    inputs.sort_by_key(|p| p.leading_monomial().unwrap().degree());

    let mut b = Builder { order: order.clone(), polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut next_input = 0;
    loop {
        let pair_deg = b.next_pair().map(|k| b.pairs[k].lcm.degree());
        let input_deg = inputs.get(next_input).map(|p| p.leading_monomial().unwrap().degree());
        let candidate = match (input_deg, pair_deg) {
            (None, None) => break,
            (Some(d), Some(e)) if d <= e => {
                next_input += 1;
                inputs[next_input - 1].clone()
            }
            (Some(_), None) => {
                next_input += 1;
                inputs[next_input - 1].clone()
            }
            _ => {
                let k = b.next_pair().unwrap();
                let p = b.pairs.swap_remove(k);
                s_polynomial(&b.polys[p.i], &b.polys[p.j])
            }
        };
        let h = b.reduce(candidate);
        if !h.is_zero() {
            b.insert(h);
        }
    }

    // Minimalize, then tail-reduce.
    let mut minimal: Vec<Polynomial> = Vec::new();
    let active: Vec<Polynomial> = b.active_refs().into_iter().cloned().collect();
    for (i, p) in active.iter().enumerate() {
        let lt = p.leading_monomial().unwrap();
        let redundant = active.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial().unwrap();
            j != i && lq.divides(lt) && (lq != lt || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&Polynomial> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
            reduce(minimal[i].clone(), &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| {
        let (x, y) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        x.degree().cmp(&y.degree()).then_with(|| order.cmp(y, x))
    });
    Ok(GroebnerBasis { generators: reduced, order: order.clone(), reduced: true })
}

/// Minimal generators of the initial ideal of `(gens)` under `order`.
pub fn initial_ideal(n: usize, gens: &[Polynomial], order: &TermOrder) -> Result<MonomialIdeal> {
    Ok(buchberger(gens, order)?.initial_ideal(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub trials: usize,
    /// Entries of the random matrices lie in `[-bound, bound]`.
    pub bound: i64,
    pub seed: u64,
    pub shape: MatrixShape,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { trials: 3, bound: 100, seed: 0, shape: MatrixShape::General }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions { seed, ..GinOptions::default() }
    }

    /// Seeds of the individual coordinate changes.
    pub fn trial_seeds(&self) -> Vec<u64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.trials).map(|_| rng.next_u64()).collect()
    }
}

/// Generic initial ideal: `in(g(I))` for independent random `g`, accepted
/// only when every trial yields the same Borel-fixed ideal.
pub fn gin(n: usize, gens: &[Polynomial], order: &TermOrder, opts: &GinOptions) -> Result<MonomialIdeal> {
    if opts.trials < 2 {
        return Err(Error::OutOfRange(format!("gin needs at least 2 trials, got {}", opts.trials)));
    }
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    let results: Vec<Result<MonomialIdeal>> = opts
        .trial_seeds()
        .into_par_iter()
        .map(|seed| {
            let g = random_coordinates(n, seed, opts.bound, opts.shape)?;
            let moved = g.apply_all(&nonzero)?;
            initial_ideal(n, &moved, order)
        })
        .collect();
    let results: Vec<MonomialIdeal> = results.into_iter().collect::<Result<_>>()?;
    let first = &results[0];
    if results.iter().any(|r| r != first) || !is_strongly_stable(first) {
        let mut candidates: Vec<MonomialIdeal> = Vec::new();
        for r in results {
            if !candidates.contains(&r) {
                candidates.push(r);
            }
        }
        return Err(Error::GenericityNotReached { candidates });
    }
    Ok(first.clone())
}
