//! Strongly stable ideals: Borel closures, Hilbert functions, lex-segment
//! ideals, m-statistics and the Eliahou-Kervaire / Aramova-Herzog formulas.

use std::collections::{BTreeMap, BTreeSet};

use crate::betti::{BettiTable, KoszulBettiTensor};
use crate::error::{Error, Result};
use crate::graded::GradedIdeal;
use crate::groebner::{gin, GinOptions};
use crate::ideal::MonomialIdeal;
use crate::koszul;
use crate::monomial::{binomial_i, count_monomials, Monomial};
use crate::order::TermOrder;
use crate::polynomial::Polynomial;

/// Largest degree the lex-ideal bound search will try.
const MAX_LEX_BOUND: u32 = 4096;

pub fn is_strongly_stable(i: &MonomialIdeal) -> bool {
    stability_witness(i).is_none()
}

/// A Borel move of a generator that falls outside the ideal.
pub fn stability_witness(i: &MonomialIdeal) -> Option<Monomial> {
    i.generators().iter().flat_map(|g| g.borel_moves()).find(|m| !i.contains(m))
}

pub fn require_strongly_stable(i: &MonomialIdeal) -> Result<()> {
    match stability_witness(i) {
        Some(m) => Err(Error::NotStronglyStable(m)),
        None => Ok(()),
    }
}

/// Whether a set of degree-`d` monomials is closed under Borel moves.
pub fn is_borel_fixed_set(set: &[Monomial]) -> bool {
    let s: BTreeSet<&Monomial> = set.iter().collect();
    set.iter().all(|m| m.borel_moves().all(|u| s.contains(&u)))
}

fn check_one_degree(s: &[Monomial]) -> Result<()> {
    if let Some(first) = s.first() {
        if let Some(bad) = s.iter().find(|m| m.degree() != first.degree()) {
            return Err(Error::DegreeMismatch(first.degree(), bad.degree()));
        }
        if let Some(bad) = s.iter().find(|m| m.n() != first.n()) {
            return Err(Error::DimensionMismatch { expected: first.n(), found: bad.n() });
        }
    }
    Ok(())
}

fn close_upwards(seeds: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack: Vec<Monomial> = seeds.into_iter().collect();
    while let Some(m) = stack.pop() {
        if seen.contains(&m) {
            continue;
        }
        stack.extend(m.borel_moves().filter(|u| !seen.contains(u)));
        seen.insert(m);
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| b.exps().cmp(a.exps()));
    out
}

/// `{ u : u >=_Borel m for some m in S }`, in decreasing lex order.
pub fn borel_closure_set(s: &[Monomial]) -> Result<Vec<Monomial>> {
    check_one_degree(s)?;
    Ok(close_upwards(s.iter().cloned()))
}

/// `{ u : u >_Borel m for some m in S }`, in decreasing lex order.
pub fn strict_borel_closure_set(s: &[Monomial]) -> Result<Vec<Monomial>> {
    check_one_degree(s)?;
    Ok(close_upwards(s.iter().flat_map(|m| m.borel_moves().collect::<Vec<_>>())))
}

/// The ideal generated by the Borel closure of `S`.
pub fn borel_closure(n: usize, s: &[Monomial]) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, borel_closure_set(s)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    n: usize,
    dims: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(n: usize, dims: Vec<u64>) -> Self {
        HilbertFunction { n, dims }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.dims.len().saturating_sub(1) as u32
    }

    /// `dim_K I_d`.
    pub fn dim(&self, d: u32) -> u64 {
        self.dims[d as usize]
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// `dim_K (R/I)_d`.
    pub fn quotient_dim(&self, d: u32) -> u64 {
        count_monomials(self.n, d) - self.dim(d)
    }
}

/// `m_{<=k}(I_d)`: monomials of `I_d` involving only `x_1..x_k`.
pub fn m_leq(i: &MonomialIdeal, k: usize, d: u32) -> u64 {
    if is_strongly_stable(i) {
        m_leq_stable(i, k, d)
    } else {
        Monomial::all_of_degree(k, d)
            .into_iter()
            .map(|m| {
                let mut e = m.exps().to_vec();
                e.resize(i.n(), 0);
                Monomial::new(e)
            })
            .filter(|m| i.contains(m))
            .count() as u64
    }
}

// Every monomial of a strongly stable ideal factors uniquely as u*v with u a
// minimal generator and min(v) >= max(u).
fn m_leq_stable(i: &MonomialIdeal, k: usize, d: u32) -> u64 {
    i.generators()
        .iter()
        .filter(|u| u.degree() <= d && u.max_index() <= k)
        .map(|u| match u.max_index() {
            0 => count_monomials(k, d),
            s => count_monomials(k - s + 1, d - u.degree()),
        })
        .sum()
}

/// `dim_K I_d`, by formula for strongly stable ideals and by enumeration
/// otherwise.
pub fn degree_dim(i: &MonomialIdeal, d: u32) -> u64 {
    if is_strongly_stable(i) {
        m_leq_stable(i, i.n(), d)
    } else {
        i.degree_dim(d)
    }
}

pub fn hilbert_function(i: &MonomialIdeal, bound: u32) -> HilbertFunction {
    let stable = is_strongly_stable(i);
    let dims = (0..=bound).map(|d| if stable { m_leq_stable(i, i.n(), d) } else { i.degree_dim(d) }).collect();
    HilbertFunction { n: i.n(), dims }
}

/// Next monomial of the same degree in decreasing lex order.
pub fn lex_successor(m: &Monomial) -> Option<Monomial> {
    let n = m.n();
    let e = m.exps();
    let j = (0..n.saturating_sub(1)).rev().find(|&j| e[j] > 0)?;
    let mut out = vec![0u32; n];
    out[..j].copy_from_slice(&e[..j]);
    out[j] = e[j] - 1;
    out[j + 1] = e[j + 1..].iter().sum::<u32>() + 1;
    Some(Monomial::new(out))
}

/// The `r`-th (0-based) monomial of degree `d` in decreasing lex order.
pub fn lex_unrank(n: usize, d: u32, mut r: u64) -> Option<Monomial> {
    if r >= count_monomials(n, d) {
        return None;
    }
    let mut exps = vec![0u32; n];
    let mut left = d;
    for (k, slot) in exps.iter_mut().enumerate() {
        if k == n - 1 {
            *slot = left;
            break;
        }
        for a in (0..=left).rev() {
            let block = count_monomials(n - k - 1, left - a);
            if r < block {
                *slot = a;
                left -= a;
                break;
            }
            r -= block;
        }
    }
    Some(Monomial::new(exps))
}

/// The `dim` lex-largest monomials of degree `d`.
pub fn lex_segment_space(dim: u64, d: u32, n: usize) -> Result<Vec<Monomial>> {
    let total = count_monomials(n, d);
    if dim > total {
        return Err(Error::OutOfRange(format!("dimension {dim} exceeds {total} monomials of degree {d}")));
    }
    let mut out = Vec::with_capacity(dim as usize);
    let mut cur = lex_unrank(n, d, 0);
    while (out.len() as u64) < dim {
        let m = cur.expect("enough monomials");
        cur = lex_successor(&m);
        out.push(m);
    }
    Ok(out)
}

fn binomial_sat(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(x) => x / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Macaulay's bound `a^<d>`: the largest possible `dim (R/I)_{d+1}` when
/// `dim (R/I)_d = a`, for `d >= 1`.
pub fn macaulay_bound(a: u64, d: u32) -> u64 {
    let mut rest = u128::from(a);
    let mut out: u128 = 0;
    for i in (1..=u64::from(d)).rev() {
        if rest == 0 {
            break;
        }
        // Largest k >= i with C(k, i) <= rest.
        let (mut lo, mut hi) = (i, i + rest as u64);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if binomial_sat(mid, i) <= rest {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rest -= binomial_sat(lo, i);
        out += binomial_sat(lo + 1, i + 1);
    }
    out.min(u128::from(u64::MAX)) as u64
}

/// `dim R_1 L` for the lex segment `L` of dimension `dim` in degree `d`.
fn lex_growth(n: usize, d: u32, dim: u64) -> u64 {
    let total = count_monomials(n, d);
    if d == 0 {
        return if dim == 0 { 0 } else { count_monomials(n, 1) };
    }
    count_monomials(n, d + 1) - macaulay_bound(total - dim, d).min(count_monomials(n, d + 1))
}

/// Lex generators in degree `d`: the lex ranks from `dim R_1 L_{d-1}` up to
/// `target`, which form one consecutive range.
fn lex_generators_in_degree(n: usize, d: u32, below: Option<u64>, target: u64) -> Result<Vec<Monomial>> {
    if target > count_monomials(n, d) {
        return Err(Error::OutOfRange(format!("dimension {target} too large in degree {d}")));
    }
    let have = below.map_or(0, |b| lex_growth(n, d - 1, b));
    if have > target {
        return Err(Error::Invariant(format!(
            "lex closure violated in degree {d}: R_1 L_{} has dimension {have} > {target}",
            d.saturating_sub(1)
        )));
    }
    let mut out = Vec::with_capacity((target - have) as usize);
    let mut cur = if have < target { lex_unrank(n, d, have) } else { None };
    for _ in have..target {
        let m = cur.expect("rank checked");
        cur = lex_successor(&m);
        out.push(m);
    }
    Ok(out)
}

/// The lex ideal with `dim L_d = dims[d]` for `d <= dims.len() - 1`.
///
/// Fails if the values are not the Hilbert function of an ideal in these
/// degrees (the running lex ideal would have to shrink).
pub fn lex_ideal_from_dims(n: usize, dims: &[u64]) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = Vec::new();
    for (d, &target) in dims.iter().enumerate() {
        let below = d.checked_sub(1).map(|e| dims[e]);
        gens.extend(lex_generators_in_degree(n, d as u32, below, target)?);
    }
    MonomialIdeal::new(n, gens)
}

/// `Lex(I)` computed through degree `bound`, which must exceed the largest
/// generator degree and must not carry new lex generators itself.
pub fn lex_ideal(i: &MonomialIdeal, bound: u32) -> Result<MonomialIdeal> {
    if bound < i.max_degree() + 1 {
        return Err(Error::BoundTooSmall {
            bound,
            reason: format!("need at least {} (largest generator degree + 1)", i.max_degree() + 1),
        });
    }
    let hf = hilbert_function(i, bound);
    let l = lex_ideal_from_dims(i.n(), hf.dims())?;
    if l.generators_of_degree(bound).next().is_some() {
        return Err(Error::BoundTooSmall { bound, reason: "lex ideal has new generators at the bound".into() });
    }
    Ok(l)
}

/// `Lex(I)`, built degree by degree. Once `I` has no generators left and
/// the lex ideal gains none in degree `d + 1`, the Hilbert function of `R/I`
/// grows maximally from `d` on (Gotzmann persistence), so the lex ideal
/// gains none afterwards either.
pub fn lex_ideal_auto(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = i.n();
    let stable = is_strongly_stable(i);
    let dim = |d: u32| if stable { m_leq_stable(i, n, d) } else { i.degree_dim(d) };
    let mut gens = Vec::new();
    let mut below: Option<u64> = None;
    for d in 0..=MAX_LEX_BOUND {
        let target = dim(d);
        let new = lex_generators_in_degree(n, d, below, target)?;
        let done = new.is_empty() && d > i.max_degree();
        gens.extend(new);
        if done || target == count_monomials(n, d) && d >= i.max_degree() {
            return MonomialIdeal::new(n, gens);
        }
        below = Some(target);
    }
    Err(Error::BoundTooSmall { bound: MAX_LEX_BOUND, reason: "lex ideal still growing".into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStatistics {
    n: usize,
    bound: u32,
    m_i: Vec<u64>,
    m_ij: BTreeMap<(usize, u32), u64>,
    m_leq: BTreeMap<(usize, u32), u64>,
}

impl MStatistics {
    /// `m_i(I)`: minimal generators with `max(u) = i`.
    pub fn m(&self, i: usize) -> u64 {
        self.m_i.get(i).copied().unwrap_or(0)
    }

    /// `m_ij(I)`: minimal generators of degree `j` with `max(u) = i`.
    pub fn m_ij(&self, i: usize, j: u32) -> u64 {
        self.m_ij.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `m_{<=i}(I_j)` for `j <= bound`.
    pub fn m_leq(&self, i: usize, j: u32) -> u64 {
        assert!(j <= self.bound, "degree {j} beyond bound {}", self.bound);
        self.m_leq.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn m_vector(&self) -> &[u64] {
        &self.m_i
    }
}

pub fn m_statistics(i: &MonomialIdeal, bound: u32) -> MStatistics {
    let n = i.n();
    let mut m_i = vec![0u64; n + 1];
    let mut m_ij = BTreeMap::new();
    for g in i.generators() {
        m_i[g.max_index()] += 1;
        *m_ij.entry((g.max_index(), g.degree())).or_insert(0) += 1;
    }
    let stable = is_strongly_stable(i);
    let mut m_leq_map = BTreeMap::new();
    for j in 0..=bound {
        for k in 0..=n {
            let v = if stable { m_leq_stable(i, k, j) } else { m_leq(i, k, j) };
            if v > 0 {
                m_leq_map.insert((k, j), v);
            }
        }
    }
    MStatistics { n, bound, m_i, m_ij, m_leq: m_leq_map }
}

fn is_unit(i: &MonomialIdeal) -> bool {
    i.generators().iter().any(Monomial::is_one)
}

/// Graded Betti numbers of `R/I` for strongly stable `I`.
pub fn ek_betti(i: &MonomialIdeal) -> Result<BettiTable> {
    require_strongly_stable(i)?;
    let mut t = BettiTable::new();
    if is_unit(i) {
        return Ok(t);
    }
    t.set(0, 0, 1);
    for u in i.generators() {
        let s = u.max_index() as u32;
        for k in 1..=s {
            t.add(k, u.degree() + k - 1, binomial_i(i64::from(s) - 1, i64::from(k) - 1));
        }
    }
    Ok(t)
}

/// Koszul-Betti numbers `beta_ijp(R/I)` for strongly stable `I`, with
/// `j <= max generator degree + n`.
pub fn ah_koszul_betti(i: &MonomialIdeal, p: usize) -> Result<BettiTable> {
    ah_koszul_betti_upto(i, p, i.max_degree() + i.n() as u32)
}

pub fn ah_koszul_betti_upto(i: &MonomialIdeal, p: usize, j_bound: u32) -> Result<BettiTable> {
    require_strongly_stable(i)?;
    let n = i.n();
    if p > n {
        return Err(Error::OutOfRange(format!("p = {p} exceeds n = {n}")));
    }
    let mut t = BettiTable::new();
    if is_unit(i) {
        return Ok(t);
    }
    let free = n - p;
    for j in 0..=j_bound {
        t.set(0, j, count_monomials(free, j) - m_leq_stable(i, free, j));
    }
    for u in i.generators() {
        let s = u.max_index();
        for k in 1..=p {
            if s < k + free {
                break;
            }
            let j = u.degree() + k as u32 - 1;
            if j <= j_bound {
                t.add(k as u32, j, binomial_i((s + p) as i64 - n as i64 - 1, k as i64 - 1));
            }
        }
    }
    Ok(t)
}

pub fn ah_koszul_tensor(i: &MonomialIdeal, p_max: usize, j_bound: u32) -> Result<KoszulBettiTensor> {
    let slices: Vec<BettiTable> = (0..=p_max).map(|p| ah_koszul_betti_upto(i, p, j_bound)).collect::<Result<_>>()?;
    Ok(KoszulBettiTensor::from_slices(i.n(), j_bound, &slices))
}

/// `beta_1j(R/I) = beta_1j(R/Gin_revlex(I))` for all `j`.
pub fn is_componentwise_linear(n: usize, gens: &[Polynomial], opts: &GinOptions) -> Result<bool> {
    let g = gin(n, gens, &TermOrder::RevLex, opts)?;
    let top = g.max_degree().max(gens.iter().filter_map(Polynomial::homogeneous_degree).max().unwrap_or(0));
    let ours = koszul::betti_row(n, gens, 1, top)?;
    let theirs = ek_betti(&g)?;
    Ok((0..=top).all(|j| ours.get(1, j) == theirs.get(1, j)))
}

/// `m_i(Gin_revlex(I)) = m_i(Lex(I))` for all `i`.
pub fn is_gotzmann(n: usize, gens: &[Polynomial], opts: &GinOptions) -> Result<bool> {
    let g = gin(n, gens, &TermOrder::RevLex, opts)?;
    is_gotzmann_stable(&g)
}

/// The m-vector criterion for a strongly stable ideal.
pub fn is_gotzmann_stable(i: &MonomialIdeal) -> Result<bool> {
    require_strongly_stable(i)?;
    let l = lex_ideal_auto(i)?;
    let (a, b) = (m_statistics(i, 0), m_statistics(&l, 0));
    Ok(a.m_vector() == b.m_vector())
}

/// Gotzmann by definition: `dim R_1 I_k` equals the growth of the lex
/// segment of dimension `dim I_k`, for every `k` up to the largest generator
/// degree (persistence covers the rest).
pub fn is_gotzmann_by_growth(n: usize, gens: &[Polynomial]) -> Result<bool> {
    let mut g = GradedIdeal::new(n, gens)?;
    for k in 0..=g.max_generator_degree() {
        let dim = g.dim(k);
        let segment = MonomialIdeal::new(n, lex_segment_space(dim, k, n)?)?;
        if g.product_space(k + 1).dim() != m_leq_stable(&segment, n, k + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macaulay_bounds() {
        assert_eq!(macaulay_bound(3, 2), 4);
        assert_eq!(macaulay_bound(5, 2), 7);
        assert_eq!(macaulay_bound(1, 5), 1);
        assert_eq!(macaulay_bound(0, 3), 0);
        // Full quotient of three variables: 6 quadrics grow to 10 cubics.
        assert_eq!(macaulay_bound(6, 2), 10);
    }

    #[test]
    fn lex_auto_agrees_with_bounded_construction() {
        for s in crate::corpus::item_seeds(9, 40) {
            let i = crate::corpus::random_strongly_stable(4, 4, s);
            let l = lex_ideal_auto(&i).unwrap();
            let bound = l.max_degree() + 2;
            assert_eq!(lex_ideal(&i, bound).unwrap(), l);
            assert_eq!(hilbert_function(&i, bound), hilbert_function(&l, bound));
        }
    }
    use crate::monomial::mono;

    fn ideal(n: usize, gens: &[&[(usize, u32)]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| mono(n, g))).unwrap()
    }

    fn max_ideal_power(n: usize, d: u32) -> MonomialIdeal {
        MonomialIdeal::new(n, Monomial::all_of_degree(n, d)).unwrap()
    }

    #[test]
    fn strong_stability_examples() {
        assert!(is_strongly_stable(&ideal(3, &[&[(1, 2)], &[(1, 1), (2, 1)], &[(2, 2)]])));
        assert!(is_strongly_stable(&ideal(3, &[&[(1, 2)], &[(1, 1), (2, 1)], &[(1, 1), (3, 1)]])));
        let bad = ideal(3, &[&[(1, 1), (3, 1)]]);
        assert!(!is_strongly_stable(&bad));
        assert_eq!(stability_witness(&bad).unwrap().to_string(), "x1^2");
    }

    #[test]
    fn closure_examples() {
        let top = vec![mono(3, &[(1, 3)])];
        assert_eq!(borel_closure_set(&top).unwrap(), top);
        let t = vec![mono(4, &[(1, 1), (3, 2)]), mono(4, &[(2, 2), (4, 1)])];
        let a: Vec<String> = strict_borel_closure_set(&t).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(a, ["x1^3", "x1^2*x2", "x1^2*x3", "x1^2*x4", "x1*x2^2", "x1*x2*x3", "x1*x2*x4", "x2^3", "x2^2*x3"]);
        assert!(borel_closure_set(&[mono(2, &[(1, 1)]), mono(2, &[(1, 2)])]).is_err());
    }

    #[test]
    fn hilbert_of_powers_of_maximal_ideal() {
        let i = max_ideal_power(3, 2);
        let h = hilbert_function(&i, 5);
        assert_eq!(h.dims(), &[0, 0, 6, 10, 15, 21]);
        let z = hilbert_function(&MonomialIdeal::zero(3), 3);
        assert_eq!(z.dims(), &[0, 0, 0, 0]);
    }

    #[test]
    fn lex_segments() {
        assert!(lex_segment_space(0, 2, 3).unwrap().is_empty());
        assert_eq!(lex_segment_space(6, 2, 3).unwrap().len(), 6);
        let s: Vec<String> = lex_segment_space(2, 2, 3).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x1^2", "x1*x2"]);
        let s: Vec<String> = lex_segment_space(7, 3, 3).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3"]);
        assert!(lex_segment_space(11, 3, 3).is_err());
    }

    #[test]
    fn unrank_agrees_with_enumeration() {
        for n in 1..5 {
            for d in 0..5 {
                for (r, m) in Monomial::all_of_degree(n, d).iter().enumerate() {
                    assert_eq!(lex_unrank(n, d, r as u64).as_ref(), Some(m));
                }
            }
        }
    }

    #[test]
    fn lex_of_square_plus_cube() {
        // (x1,x2)^2 + (x1,x2,x3)^3
        let i = ideal(3, &[&[(1, 2)], &[(1, 1), (2, 1)], &[(2, 2)]]).sum(&max_ideal_power(3, 3));
        assert!(is_strongly_stable(&i));
        let l = lex_ideal(&i, 4).unwrap();
        let expected = MonomialIdeal::new(
            3,
            [
                vec![mono(3, &[(1, 2)]), mono(3, &[(1, 1), (2, 1)]), mono(3, &[(1, 1), (3, 1)])],
                Monomial::all_of_degree(3, 3),
            ]
            .concat(),
        )
        .unwrap();
        assert_eq!(l, expected);
        assert_eq!(m_statistics(&i, 3).m_ij(2, 2), 2);
        assert_eq!(m_statistics(&l, 3).m_ij(2, 2), 1);
    }

    #[test]
    fn lex_of_lex_is_itself() {
        let i = ideal(3, &[&[(1, 3)]]);
        assert_eq!(lex_ideal(&i, 4).unwrap(), i);
        assert!(lex_ideal(&i, 3).is_err());
    }

    #[test]
    fn lex_needs_larger_bound_for_complete_intersection() {
        let ci = ideal(3, &[&[(1, 2)], &[(2, 2)]]);
        assert!(lex_ideal(&ci, 3).is_err());
        let l = lex_ideal_auto(&ci).unwrap();
        assert_eq!(hilbert_function(&l, 8), hilbert_function(&ci, 8));
    }

    #[test]
    fn ek_principal() {
        let t = ek_betti(&ideal(3, &[&[(1, 1)]])).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 1), 1)]);
        assert!(ek_betti(&ideal(3, &[&[(1, 1), (3, 1)]])).is_err());
    }

    #[test]
    fn ah_at_full_p_is_ek() {
        let i = ideal(3, &[&[(1, 2)], &[(1, 1), (2, 1)], &[(2, 3)], &[(1, 1), (3, 2)]]);
        let ek = ek_betti(&i).unwrap();
        let ah = ah_koszul_betti(&i, 3).unwrap();
        for ((k, j), v) in ek.entries() {
            assert_eq!(ah.get(k, j), v);
        }
        let p0 = ah_koszul_betti_upto(&i, 0, 6).unwrap();
        let hf = hilbert_function(&i, 6);
        for j in 0..=6 {
            assert_eq!(p0.get(0, j), hf.quotient_dim(j));
            assert_eq!(p0.get(1, j), 0);
        }
    }

    #[test]
    fn gotzmann_but_not_lex() {
        let i = ideal(
            3,
            &[
                &[(1, 3)],
                &[(1, 2), (2, 1)],
                &[(1, 2), (3, 1)],
                &[(1, 1), (2, 2)],
                &[(1, 1), (2, 1), (3, 1)],
                &[(2, 3)],
                &[(2, 2), (3, 1)],
            ],
        );
        let l = lex_ideal_auto(&i).unwrap();
        let want = ideal(
            3,
            &[
                &[(1, 3)],
                &[(1, 2), (2, 1)],
                &[(1, 2), (3, 1)],
                &[(1, 1), (2, 2)],
                &[(1, 1), (2, 1), (3, 1)],
                &[(1, 1), (3, 2)],
                &[(2, 3)],
            ],
        );
        assert_eq!(l, want);
        assert!(is_gotzmann_stable(&i).unwrap());
        // Counting minimal generators by their largest variable index.
        assert_eq!(&m_statistics(&i, 3).m_vector()[1..], &[1, 3, 3]);
        assert_eq!(&m_statistics(&l, 3).m_vector()[1..], &[1, 3, 3]);
    }

    #[test]
    fn growth_definition_agrees_with_m_vector() {
        let b = ideal(
            3,
            &[
                &[(1, 3)],
                &[(1, 2), (2, 1)],
                &[(1, 2), (3, 1)],
                &[(1, 1), (2, 2)],
                &[(1, 1), (2, 1), (3, 1)],
                &[(2, 3)],
                &[(2, 2), (3, 1)],
            ],
        );
        let a = ideal(3, &[&[(1, 2)], &[(1, 1), (2, 1)], &[(2, 2)]]).sum(&max_ideal_power(3, 3));
        for (i, want) in [(&b, true), (&a, false)] {
            assert_eq!(is_gotzmann_stable(i).unwrap(), want);
            assert_eq!(is_gotzmann_by_growth(3, &i.to_polynomials(&TermOrder::RevLex)).unwrap(), want);
        }
        let m = |i: &MonomialIdeal| m_statistics(i, 0).m_vector()[1..].to_vec();
        assert_eq!(m(&a), vec![1, 2, 3]);
        assert_eq!(m(&lex_ideal_auto(&a).unwrap()), vec![1, 2, 4]);
    }
}
