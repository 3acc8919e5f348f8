//! Monomial ideals stored by their minimal generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;

/// Degree ascending, then lex descending.
fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps()))
}

/// A monomial ideal. The generator list is the unique minimal generating set,
/// sorted canonically, so structural equality is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|m| m.n() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.n() });
        }
        all.sort_by(generator_order);
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            // Divisors have degree <= m, so they are already in `gens`.
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        Ok(MonomialIdeal { n, gens })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// The monomials of `I_d`, in decreasing lex order.
    pub fn degree_part(&self, d: u32) -> Vec<Monomial> {
        if self.gens.is_empty() || self.min_degree().unwrap() > d {
            return Vec::new();
        }
        Monomial::all_of_degree(self.n, d).into_iter().filter(|m| self.contains(m)).collect()
    }

    pub fn degree_dim(&self, d: u32) -> u64 {
        self.degree_part(d).len() as u64
    }

    /// The ideal generated by the given degree-wise monomial sets.
    pub fn from_degree_parts(n: usize, parts: impl IntoIterator<Item = Vec<Monomial>>) -> Result<Self> {
        MonomialIdeal::new(n, parts.into_iter().flatten())
    }

    /// Generators of degree at most `bound`.
    pub fn truncate(&self, bound: u32) -> MonomialIdeal {
        MonomialIdeal { n: self.n, gens: self.gens.iter().filter(|g| g.degree() <= bound).cloned().collect() }
    }

    pub fn to_polynomials(&self, order: &TermOrder) -> Vec<Polynomial> {
        self.gens.iter().map(|g| Polynomial::from_monomial(g.clone(), order.clone())).collect()
    }

    pub fn generator_set(&self) -> BTreeSet<Monomial> {
        self.gens.iter().cloned().collect()
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().chain(&other.gens).cloned()).expect("same arity")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::mono;

    #[test]
    fn minimalizes_and_sorts() {
        let i = MonomialIdeal::new(
            3,
            vec![mono(3, &[(1, 3)]), mono(3, &[(2, 1), (1, 1)]), mono(3, &[(1, 2)]), mono(3, &[(1, 2)])],
        )
        .unwrap();
        assert_eq!(i.to_string(), "(x1^2, x1*x2)");
        assert_eq!(i.degree_dim(2), 2);
        assert_eq!(i.degree_dim(3), 5);
    }

    #[test]
    fn permutation_invariant() {
        let a = vec![mono(3, &[(2, 2)]), mono(3, &[(1, 1), (3, 1)]), mono(3, &[(3, 3)])];
        let mut b = a.clone();
        b.reverse();
        assert_eq!(MonomialIdeal::new(3, a).unwrap(), MonomialIdeal::new(3, b).unwrap());
    }

    #[test]
    fn zero_ideal_is_empty() {
        let z = MonomialIdeal::zero(2);
        assert!(z.degree_part(4).is_empty());
        assert_eq!(z.max_degree(), 0);
    }
}
