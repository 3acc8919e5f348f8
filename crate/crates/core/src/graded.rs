//! Homogeneous components `I_d` of a polynomial ideal, computed by linear
//! algebra degree by degree.
//!
//! A component is stored as the set of monomials it contains together with a
//! reduced echelon basis of the remaining (non-monomial) part, taken modulo
//! those monomials.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::{count_monomials, Monomial};
use crate::order::TermOrder;
use crate::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpace {
    n: usize,
    degree: u32,
    monos: BTreeSet<Monomial>,
    // Pivot (lex-leading monomial) -> monic row. No row has a term in
    // `monos`, no row is a single monomial, and each pivot occurs only in
    // its own row.
    rows: BTreeMap<Monomial, Polynomial>,
}

impl DegreeSpace {
    pub fn empty(n: usize, degree: u32) -> Self {
        DegreeSpace { n, degree, monos: BTreeSet::new(), rows: BTreeMap::new() }
    }

    /// The span of the given degree-`degree` polynomials.
    pub fn span(n: usize, degree: u32, polys: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut s = DegreeSpace::empty(n, degree);
        s.extend(polys);
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> u64 {
        (self.monos.len() + self.rows.len()) as u64
    }

    /// Monomials lying in the space, in increasing canonical order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monos.iter()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.monos.contains(m)
    }

    /// Reduced basis of the non-monomial part, in decreasing lex order of
    /// leading monomials.
    pub fn remainder(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.values().rev()
    }

    pub fn basis(&self) -> Vec<Polynomial> {
        self.monos
            .iter()
            .map(|m| Polynomial::from_monomial(m.clone(), TermOrder::Lex))
            .chain(self.remainder().cloned())
            .collect()
    }

    fn strip(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            self.n,
            TermOrder::Lex,
            f.terms().iter().filter(|t| !self.monos.contains(&t.mono)).map(|t| (t.coeff.clone(), t.mono.clone())),
        )
    }

    /// Reduce modulo the monomials and the echelon rows.
    fn reduce(&self, f: &Polynomial) -> Polynomial {
        let mut p = self.strip(&f.with_order(&TermOrder::Lex));
        loop {
            let hit = p.terms().iter().find_map(|t| self.rows.get(&t.mono).map(|r| (t.coeff.clone(), r)));
            match hit {
                None => return p,
                Some((c, r)) => p = p.combine(r, &-c, None),
            }
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn extend(&mut self, polys: impl IntoIterator<Item = Polynomial>) {
        let mut pending: Vec<Polynomial> = Vec::new();
        let mut monos: Vec<Monomial> = Vec::new();
        for f in polys {
            if f.is_zero() {
                continue;
            }
            debug_assert_eq!(f.homogeneous_degree(), Some(self.degree));
            if f.is_monomial() {
                monos.push(f.leading_monomial().unwrap().clone());
            } else {
                pending.push(f.with_order(&TermOrder::Lex));
            }
        }
        self.insert_monomials_and_rows(monos, pending);
    }

    pub fn insert_monomials(&mut self, ms: impl IntoIterator<Item = Monomial>) {
        self.insert_monomials_and_rows(ms.into_iter().collect(), Vec::new());
    }

    fn insert_monomials_and_rows(&mut self, new_monos: Vec<Monomial>, mut pending: Vec<Polynomial>) {
        let before = self.monos.len();
        self.monos.extend(new_monos);
        let mut changed = self.monos.len() > before;
        loop {
            if std::mem::take(&mut changed) {
                // Monomials moved; rows must be re-reduced from scratch.
                pending.extend(std::mem::take(&mut self.rows).into_values());
            }
            let mut singles: Vec<Monomial> = Vec::new();
            for f in pending.drain(..) {
                let r = self.reduce(&f);
                if r.is_zero() {
                    continue;
                }
                if r.is_monomial() {
                    singles.push(r.leading_monomial().unwrap().clone());
                    continue;
                }
                self.insert_row(r.monic());
            }
            if let Some(single) = self.rows.iter().find(|(_, r)| r.is_monomial()).map(|(k, _)| k.clone()) {
                singles.push(single);
            }
            if singles.is_empty() {
                return;
            }
            self.monos.extend(singles);
            changed = true;
        }
    }

    // `r` is reduced and monic; back-substitute into the existing rows.
    fn insert_row(&mut self, r: Polynomial) {
        let pivot = r.leading_monomial().unwrap().clone();
        let keys: Vec<Monomial> = self.rows.keys().cloned().collect();
        for k in keys {
            let row = &self.rows[&k];
            let c = row.coeff_of(&pivot);
            if !c.is_zero() {
                let updated = row.combine(&r, &-c, None);
                self.rows.insert(k, updated);
            }
        }
        self.rows.insert(pivot, r);
    }
}

/// Lazily computed components `I_0, I_1, ...` of a homogeneous ideal.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    n: usize,
    gens: Vec<Polynomial>,
    spaces: Vec<DegreeSpace>,
}

impl GradedIdeal {
    pub fn new(n: usize, gens: &[Polynomial]) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if g.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.n() });
            }
            if !g.is_zero() {
                g.check_homogeneous()?;
                kept.push(g.with_order(&TermOrder::Lex));
            }
        }
        Ok(GradedIdeal { n, gens: kept, spaces: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().filter_map(Polynomial::homogeneous_degree).max().unwrap_or(0)
    }

    fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Polynomial> {
        self.gens.iter().filter(move |g| g.homogeneous_degree() == Some(d))
    }

    /// `R_1 * I_{d-1}` as a subspace of `R_d` (empty for `d = 0`).
    pub fn product_space(&mut self, d: u32) -> DegreeSpace {
        if d == 0 {
            return DegreeSpace::empty(self.n, 0);
        }
        let prev = self.space(d - 1).clone();
        let mut s = DegreeSpace::empty(self.n, d);
        let monos: Vec<Monomial> = prev.monomials().flat_map(|m| (0..self.n).map(move |k| m.mul_var(k))).collect();
        s.insert_monomials(monos);
        let polys: Vec<Polynomial> = prev.remainder().flat_map(|r| (0..self.n).map(move |k| r.mul_var(k))).collect();
        s.extend(polys);
        s
    }

    pub fn space(&mut self, d: u32) -> &DegreeSpace {
        while self.spaces.len() <= d as usize {
            let e = self.spaces.len() as u32;
            let mut s = self.product_space(e);
            let gens: Vec<Polynomial> = self.generators_of_degree(e).cloned().collect();
            s.extend(gens);
            self.spaces.push(s);
        }
        &self.spaces[d as usize]
    }

    pub fn dim(&mut self, d: u32) -> u64 {
        self.space(d).dim()
    }

    pub fn hilbert_dims(&mut self, bound: u32) -> Vec<u64> {
        (0..=bound).map(|d| self.dim(d)).collect()
    }

    /// `dim (R/I)_d`.
    pub fn quotient_dim(&mut self, d: u32) -> u64 {
        count_monomials(self.n, d) - self.dim(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::mono;
    use crate::Coeff;

    fn poly(n: usize, terms: &[(i64, Monomial)]) -> Polynomial {
        Polynomial::from_terms(
            n,
            TermOrder::Lex,
            terms.iter().map(|(c, m)| (Coeff::from_integer((*c).into()), m.clone())),
        )
    }

    #[test]
    fn span_extracts_monomials() {
        let a = poly(3, &[(1, mono(3, &[(1, 1), (3, 1)])), (1, mono(3, &[(2, 2)]))]);
        let b = poly(3, &[(1, mono(3, &[(1, 1), (3, 1)])), (-1, mono(3, &[(2, 2)]))]);
        let s = DegreeSpace::span(3, 2, vec![a.clone(), b]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.remainder().count(), 0);
        let t = DegreeSpace::span(3, 2, vec![a.clone(), a.scale(&Coeff::from_integer(3.into()))]);
        assert_eq!(t.dim(), 1);
        assert!(t.contains(&a));
        assert!(!t.contains(&poly(3, &[(1, mono(3, &[(2, 2)]))])));
    }

    #[test]
    fn components_of_almost_borel_space() {
        // (x1^2, x1*x2, x1*x3 + x2^2)
        let gens = vec![
            poly(3, &[(1, mono(3, &[(1, 2)]))]),
            poly(3, &[(1, mono(3, &[(1, 1), (2, 1)]))]),
            poly(3, &[(1, mono(3, &[(1, 1), (3, 1)])), (1, mono(3, &[(2, 2)]))]),
        ];
        let mut g = GradedIdeal::new(3, &gens).unwrap();
        assert_eq!(g.hilbert_dims(3), vec![0, 0, 3, 7]);
        let s3 = g.space(3).clone();
        assert!(s3.contains_monomial(&mono(3, &[(2, 3)])));
        let rem: Vec<String> = s3.remainder().map(|r| r.to_string()).collect();
        assert_eq!(rem, ["x1*x3^2 + x2^2*x3"]);
        assert_eq!(g.product_space(3).dim(), 7);
    }

    #[test]
    fn complete_intersection_dims() {
        let gens = vec![
            poly(2, &[(1, mono(2, &[(1, 2)])), (1, mono(2, &[(2, 2)]))]),
            poly(2, &[(1, mono(2, &[(1, 1), (2, 1)]))]),
        ];
        let mut g = GradedIdeal::new(2, &gens).unwrap();
        // R/I has Hilbert series 1 + 2t + t^2.
        assert_eq!(g.hilbert_dims(4), vec![0, 0, 2, 4, 5]);
    }

    #[test]
    fn late_monomial_clears_rows() {
        let f = poly(2, &[(1, mono(2, &[(1, 1)])), (1, mono(2, &[(2, 1)]))]);
        let mut s = DegreeSpace::span(2, 1, vec![f]);
        assert_eq!(s.remainder().count(), 1);
        s.extend(vec![poly(2, &[(1, mono(2, &[(2, 1)]))])]);
        assert_eq!(s.remainder().count(), 0);
        assert_eq!(s.monomials().count(), 2);
    }
}
