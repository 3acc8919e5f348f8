//! Almost Borel-fixed ideals: degreewise decompositions `I_d = A_d + V_d`
//! with `A_d` Borel-fixed and `V_d` supported on lower neighbors of `A_d`,
//! and the enumeration of all their generic initial ideals.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::fm::{Certificate, Feasibility, WeightCone};
use crate::graded::{DegreeSpace, GradedIdeal};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::{borel_compare, Monomial};
use crate::order::{TermOrder, Tiebreak};
use crate::polynomial::Polynomial;
use crate::stable::{borel_closure_set, ek_betti, is_borel_fixed_set, strict_borel_closure_set};
use crate::Coeff;

/// Hard cap on pivot-set candidates per degree.
const MAX_CANDIDATES: usize = 1 << 16;

/// Monomials of degree `d` outside the Borel-fixed set `a` whose strict
/// Borel majorants all lie in `a`.
pub fn lower_neighbors(n: usize, d: u32, a: &[Monomial]) -> Result<Vec<Monomial>> {
    if !is_borel_fixed_set(a) {
        return Err(Error::NotAlmostBorelFixed { degree: d, reason: "monomial part is not Borel-fixed".into() });
    }
    let set: BTreeSet<&Monomial> = a.iter().collect();
    // Every strict majorant is reached through an elementary move, and `a`
    // is closed upwards, so checking elementary moves suffices.
    Ok(Monomial::all_of_degree(n, d)
        .into_iter()
        .filter(|b| !set.contains(b) && b.borel_moves().all(|u| set.contains(&u)))
        .collect())
}

/// One degree of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbfComponent {
    pub degree: u32,
    /// All monomials of `I_d`, decreasing lex.
    pub a: Vec<Monomial>,
    /// Reduced basis of the non-monomial part, supported on `Ln(A_d)`.
    pub v: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct AlmostBorelFixedIdeal {
    n: usize,
    gens: Vec<Polynomial>,
    components: Vec<AbfComponent>,
    complete: bool,
}

impl AlmostBorelFixedIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn bound(&self) -> u32 {
        self.components.len() as u32 - 1
    }

    pub fn components(&self) -> &[AbfComponent] {
        &self.components
    }

    pub fn component(&self, d: u32) -> Option<&AbfComponent> {
        self.components.get(d as usize)
    }

    /// Whether the decomposition through the bound determines every degree:
    /// the top component is monomial and no generator lies above it.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Degrees with a nonzero `V_d`.
    pub fn non_monomial_degrees(&self) -> impl Iterator<Item = &AbfComponent> {
        self.components.iter().filter(|c| !c.v.is_empty())
    }

    pub fn hilbert_dims(&self) -> Vec<u64> {
        self.components.iter().map(|c| (c.a.len() + c.v.len()) as u64).collect()
    }
}

/// Decompose `I_d` for `d <= bound`.
pub fn recognize(n: usize, gens: &[Polynomial], bound: u32) -> Result<AlmostBorelFixedIdeal> {
    let mut g = GradedIdeal::new(n, gens)?;
    let mut components = Vec::with_capacity(bound as usize + 1);
    for d in 0..=bound {
        components.push(decompose(g.space(d))?);
    }
    let complete = components.last().is_some_and(|c| c.v.is_empty()) && g.max_generator_degree() <= bound;
    Ok(AlmostBorelFixedIdeal { n, gens: g.generators().to_vec(), components, complete })
}

fn decompose(space: &DegreeSpace) -> Result<AbfComponent> {
    let d = space.degree();
    let mut a: Vec<Monomial> = space.monomials().cloned().collect();
    a.sort_by(|x, y| y.exps().cmp(x.exps()));
    let ln: BTreeSet<Monomial> = lower_neighbors(space.n(), d, &a)?.into_iter().collect();
    let v: Vec<Polynomial> = space.remainder().cloned().collect();
    for f in &v {
        if let Some(bad) = f.support().find(|m| !ln.contains(*m)) {
            return Err(Error::NotAlmostBorelFixed {
                degree: d,
                reason: format!("{bad} occurs in {f} but is not a lower neighbor of the monomial part"),
            });
        }
    }
    Ok(AbfComponent { degree: d, a, v })
}

/// The degree-`d+1` part of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperPart {
    /// `B = X R_1`.
    XR1,
    /// `B` = all monomials of degree `d + 1`.
    Full,
    Explicit(Vec<Monomial>),
}

/// Result of the construction, with its intermediate sets.
#[derive(Clone, Debug)]
pub struct Construction {
    pub x: Vec<Monomial>,
    pub a: Vec<Monomial>,
    pub forms: Vec<Polynomial>,
    pub b: Vec<Monomial>,
    /// Monomials of `B` needed as generators beyond `(A) + (f)`.
    pub extra: Vec<Monomial>,
    pub ideal: AlmostBorelFixedIdeal,
}

impl Construction {
    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }
}

/// `I = (A) + (f_1, ..., f_p) + (B)` from pairwise Borel-incomparable
/// monomials `t` of one degree, grouped into `blocks` (indices into `t`,
/// each used once); `f_i` is the sum of block `i`.
pub fn construct(n: usize, t: &[Monomial], blocks: &[Vec<usize>], upper: UpperPart) -> Result<Construction> {
    let Some(first) = t.first() else { return Err(Error::InvalidConstruction("empty monomial set".into())) };
    let d = first.degree();
    if let Some(bad) = t.iter().find(|m| m.n() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.n() });
    }
    for (i, u) in t.iter().enumerate() {
        for v in &t[i + 1..] {
            if borel_compare(u, v)?.is_some() {
                return Err(Error::ComparablePair(u.clone(), v.clone()));
            }
        }
    }
    let mut used = vec![false; t.len()];
    for k in blocks.iter().flatten() {
        if *k >= t.len() || std::mem::replace(&mut used[*k], true) {
            return Err(Error::InvalidConstruction(format!("blocks must partition the monomials (index {k})")));
        }
    }
    if used.iter().any(|u| !u) || blocks.iter().any(Vec::is_empty) {
        return Err(Error::InvalidConstruction("blocks must partition the monomials".into()));
    }
    let x = borel_closure_set(t)?;
    let a = strict_borel_closure_set(t)?;
    let order = TermOrder::Lex;
    let forms: Vec<Polynomial> = blocks
        .iter()
        .map(|blk| Polynomial::from_terms(n, order.clone(), blk.iter().map(|&k| (Coeff::one(), t[k].clone()))))
        .collect();
    let xr1: BTreeSet<Monomial> = x.iter().flat_map(|m| (0..n).map(move |k| m.mul_var(k))).collect();
    let b: Vec<Monomial> = match upper {
        UpperPart::XR1 => xr1.iter().cloned().collect(),
        UpperPart::Full => Monomial::all_of_degree(n, d + 1),
        UpperPart::Explicit(b) => {
            if let Some(bad) = b.iter().find(|m| m.degree() != d + 1 || m.n() != n) {
                return Err(Error::InvalidConstruction(format!("{bad} is not of degree {}", d + 1)));
            }
            if let Some(bad) = xr1.iter().find(|m| !b.contains(m)) {
                return Err(Error::InvalidConstruction(format!("upper part misses {bad} of X R_1")));
            }
            b
        }
    };
    if !is_borel_fixed_set(&b) {
        return Err(Error::InvalidConstruction("upper part is not Borel-fixed".into()));
    }
    // Span of (A) + (f) in degree d + 1, then the monomials of B not yet
    // in it, taken from the revlex-smallest up.
    let mut span = DegreeSpace::empty(n, d + 1);
    span.insert_monomials(a.iter().flat_map(|m| (0..n).map(move |k| m.mul_var(k))));
    span.extend(forms.iter().flat_map(|f| (0..n).map(move |k| f.mul_var(k))));
    let mut sorted_b = b.clone();
    sorted_b.sort_by(|p, q| TermOrder::RevLex.cmp(p, q));
    let mut extra = Vec::new();
    for m in sorted_b {
        if !span.contains_monomial(&m) && !span.contains(&Polynomial::from_monomial(m.clone(), TermOrder::Lex)) {
            span.insert_monomials([m.clone()]);
            extra.push(m);
        }
    }
    let gens: Vec<Polynomial> = a
        .iter()
        .map(|m| Polynomial::from_monomial(m.clone(), order.clone()))
        .chain(forms.iter().cloned())
        .chain(extra.iter().map(|m| Polynomial::from_monomial(m.clone(), order.clone())))
        .collect();
    let ideal = recognize(n, &gens, d + 1)?;
    Ok(Construction { x, a, forms, b, extra, ideal })
}

/// A choice of initial monomials for the `V` parts of every degree.
pub type Selection = Vec<(u32, Vec<Monomial>)>;

/// One feasible pivot set of `V_d` together with the inequalities that make
/// it the initial space.
#[derive(Clone, Debug)]
struct Candidate {
    pivots: Vec<Monomial>,
    // (winner, loser) pairs.
    constraints: Vec<(Monomial, Monomial)>,
}

fn candidates(v: &[Polynomial]) -> Result<Vec<Candidate>> {
    let support: Vec<Monomial> =
        v.iter().flat_map(|f| f.support().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let k = v.len();
    let col: BTreeMap<&Monomial, usize> = support.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let matrix: Vec<Vec<Coeff>> = v
        .iter()
        .map(|f| {
            let mut row = vec![Coeff::zero(); support.len()];
            for t in f.terms() {
                row[col[&t.mono]] = t.coeff.clone();
            }
            row
        })
        .collect();
    let count = crate::monomial::binomial(support.len() as u64, k as u64);
    if count as usize > MAX_CANDIDATES {
        return Err(Error::OutOfRange(format!("{count} pivot sets exceed the enumeration cap")));
    }
    let mut out = Vec::new();
    for subset in k_subsets(support.len(), k) {
        // Reorder columns so the chosen pivots come first, then row-reduce.
        let rest: Vec<usize> = (0..support.len()).filter(|c| !subset.contains(c)).collect();
        let perm: Vec<usize> = subset.iter().chain(&rest).copied().collect();
        let mut m: Vec<Vec<Coeff>> = matrix.iter().map(|r| perm.iter().map(|&c| r[c].clone()).collect()).collect();
        let pivots = linalg::rref(&mut m);
        if pivots != (0..k).collect::<Vec<_>>() {
            continue;
        }
        let mut constraints = Vec::new();
        for (r, row) in m.iter().enumerate() {
            for (j, c) in row.iter().enumerate().skip(k) {
                if !c.is_zero() {
                    constraints.push((support[perm[r]].clone(), support[perm[j]].clone()));
                }
            }
        }
        out.push(Candidate { pivots: subset.iter().map(|&c| support[c].clone()).collect(), constraints });
    }
    Ok(out)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The initial monomials of a space of polynomials under `order`.
pub fn initial_space(v: &[Polynomial], order: &TermOrder) -> Vec<Monomial> {
    let mut lead = Vec::new();
    // Eliminate along the largest remaining leading monomial.
    let mut basis: Vec<Polynomial> = v.iter().map(|f| f.with_order(order)).collect();
    while let Some(pos) = (0..basis.len())
        .max_by(|&i, &j| order.cmp(basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap()))
    {
        let f = basis.swap_remove(pos);
        let lm = f.leading_monomial().unwrap().clone();
        let c = f.leading().unwrap().coeff.clone();
        basis = basis
            .into_iter()
            .map(|g| {
                let gc = g.coeff_of(&lm);
                if gc.is_zero() {
                    g
                } else {
                    g.combine(&f, &-(gc / &c), None)
                }
            })
            .filter(|g| !g.is_zero())
            .collect();
        lead.push(lm);
    }
    lead.sort_by(|a, b| order.cmp(b, a));
    lead
}

#[derive(Clone, Debug)]
pub struct GinMember {
    pub ideal: MonomialIdeal,
    /// Coprime positive integer weights realizing the selection.
    pub witness: Vec<Coeff>,
    pub selection: Selection,
    pub betti: BettiTable,
}

impl GinMember {
    /// The weight order of the witness, refined by revlex.
    pub fn witness_order(&self) -> TermOrder {
        TermOrder::weight(self.witness.clone(), Tiebreak::RevLex).expect("witness lies in the base cone")
    }
}

#[derive(Clone, Debug)]
pub struct InfeasibleSelection {
    pub selection: Selection,
    pub cone: WeightCone,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct GinFamily {
    pub n: usize,
    pub members: Vec<GinMember>,
    pub infeasible: Vec<InfeasibleSelection>,
    /// Whether the members are full gins rather than gins of the
    /// components through the decomposition bound.
    pub complete: bool,
    pub bound: u32,
    pub revlex: usize,
    pub lex: usize,
}

impl GinFamily {
    pub fn revlex_member(&self) -> &GinMember {
        &self.members[self.revlex]
    }

    pub fn lex_member(&self) -> &GinMember {
        &self.members[self.lex]
    }

    /// Index of the member whose selection agrees with `order`.
    pub fn member_for(&self, abf: &AlmostBorelFixedIdeal, order: &TermOrder) -> Option<usize> {
        let sel = selection_for(abf, order);
        self.members.iter().position(|m| m.ideal == member_ideal(abf, &sel))
    }

    pub fn find(&self, ideal: &MonomialIdeal) -> Option<usize> {
        self.members.iter().position(|m| &m.ideal == ideal)
    }
}

fn selection_for(abf: &AlmostBorelFixedIdeal, order: &TermOrder) -> Selection {
    abf.non_monomial_degrees().map(|c| (c.degree, initial_space(&c.v, order))).collect()
}

fn member_ideal(abf: &AlmostBorelFixedIdeal, sel: &Selection) -> MonomialIdeal {
    let chosen = sel.iter().flat_map(|(_, ms)| ms.iter().cloned());
    MonomialIdeal::new(abf.n, abf.components.iter().flat_map(|c| c.a.iter().cloned()).chain(chosen))
        .expect("same ambient ring")
}

/// All gins of an almost Borel-fixed ideal: one member per realizable choice
/// of initial spaces across all degrees, deduplicated.
pub fn enumerate_gins(abf: &AlmostBorelFixedIdeal) -> Result<GinFamily> {
    let n = abf.n;
    let per_degree: Vec<(u32, Vec<Candidate>)> =
        abf.non_monomial_degrees().map(|c| Ok((c.degree, candidates(&c.v)?))).collect::<Result<_>>()?;
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for (_, cands) in &per_degree {
        tuples =
            tuples.into_iter().flat_map(|t| (0..cands.len()).map(move |k| [t.clone(), vec![k]].concat())).collect();
    }
    let outcomes: Vec<(Selection, WeightCone, Feasibility)> = tuples
        .par_iter()
        .map(|tuple| {
            let mut cone = WeightCone::base(n);
            let mut sel = Selection::new();
            for ((d, cands), &k) in per_degree.iter().zip(tuple) {
                let c = &cands[k];
                for (win, lose) in &c.constraints {
                    cone.push_selection(win, lose);
                }
                sel.push((*d, c.pivots.clone()));
            }
            let f = cone.feasibility();
            (sel, cone, f)
        })
        .collect();
    let mut members: Vec<GinMember> = Vec::new();
    let mut infeasible = Vec::new();
    for (selection, cone, f) in outcomes {
        match f {
            Feasibility::Feasible(witness) => {
                let ideal = member_ideal(abf, &selection);
                if members.iter().all(|m| m.ideal != ideal) {
                    let betti = ek_betti(&ideal)?;
                    members.push(GinMember { ideal, witness, selection, betti });
                }
            }
            Feasibility::Infeasible(certificate) => {
                infeasible.push(InfeasibleSelection { selection, cone, certificate })
            }
        }
    }
    let mut family =
        GinFamily { n, members, infeasible, complete: abf.complete, bound: abf.bound(), revlex: 0, lex: 0 };
    family.revlex = family
        .member_for(abf, &TermOrder::RevLex)
        .ok_or_else(|| Error::Invariant("revlex selection is not among the feasible ones".into()))?;
    family.lex = family
        .member_for(abf, &TermOrder::Lex)
        .ok_or_else(|| Error::Invariant("lex selection is not among the feasible ones".into()))?;
    Ok(family)
}

/// Componentwise order on the members' Betti tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiPoset {
    pub minimum: Option<usize>,
    pub maximum: Option<usize>,
    pub maximal: Vec<usize>,
    /// `(a, b)` with `betti(a) <= betti(b)`, `a != b`.
    pub comparabilities: Vec<(usize, usize)>,
    pub incomparable: Vec<(usize, usize)>,
}

pub fn betti_poset(family: &GinFamily) -> BettiPoset {
    let tables: Vec<&BettiTable> = family.members.iter().map(|m| &m.betti).collect();
    let k = tables.len();
    let le = |a: usize, b: usize| tables[a].le(tables[b]);
    let mut comparabilities = Vec::new();
    let mut incomparable = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b && le(a, b) {
                comparabilities.push((a, b));
            }
            if a < b && !le(a, b) && !le(b, a) {
                incomparable.push((a, b));
            }
        }
    }
    let minimum = (0..k).find(|&a| (0..k).all(|b| le(a, b)));
    let maximum = (0..k).find(|&a| (0..k).all(|b| le(b, a)));
    let maximal = (0..k).filter(|&a| (0..k).all(|b| b == a || !le(a, b) || le(b, a))).collect();
    BettiPoset { minimum, maximum, maximal, comparabilities, incomparable }
}

/// `dim (L ∩ member)_j` for `j <= bound`, per member.
pub fn lex_proximity(family: &GinFamily, lex: &MonomialIdeal, bound: u32) -> Vec<Vec<u64>> {
    let parts: Vec<Vec<Monomial>> = (0..=bound).map(|j| lex.degree_part(j)).collect();
    family
        .members
        .iter()
        .map(|m| parts.iter().map(|p| p.iter().filter(|u| m.ideal.contains(u)).count() as u64).collect())
        .collect()
}

/// Whether the lex member's intersections dominate every other member's.
pub fn lex_member_is_closest(family: &GinFamily, proximity: &[Vec<u64>]) -> bool {
    let best = &proximity[family.lex];
    proximity.iter().all(|p| p.iter().zip(best).all(|(a, b)| a <= b))
}
