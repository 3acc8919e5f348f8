//! Sparse polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A polynomial whose terms are kept sorted descending under `order`,
/// with no zero coefficients and no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    order: TermOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(n: usize, order: TermOrder) -> Self {
        Polynomial { n, order, terms: Vec::new() }
    }

    pub fn from_monomial(m: Monomial, order: TermOrder) -> Self {
        Polynomial { n: m.n(), order, terms: vec![Term { coeff: Coeff::one(), mono: m }] }
    }

    pub fn from_terms(n: usize, order: TermOrder, terms: impl IntoIterator<Item = (Coeff, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.n(), n, "monomial arity differs from polynomial arity");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(mono, coeff)| Term { coeff, mono }).collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { n, order, terms }
    }

    /// Builds from terms already sorted descending, nonzero and distinct.
    pub(crate) fn from_sorted_unchecked(n: usize, order: TermOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { n, order, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.iter().find(|t| &t.mono == m).map(|t| t.coeff.clone()).unwrap_or_else(Coeff::zero)
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.check_homogeneous().ok()
    }

    pub fn check_homogeneous(&self) -> Result<u32> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?.mono.degree();
        for t in &self.terms[1..] {
            if t.mono.degree() != first {
                return Err(Error::Inhomogeneous(first.min(t.mono.degree()), first.max(t.mono.degree())));
            }
        }
        Ok(first)
    }

    pub fn with_order(&self, order: &TermOrder) -> Polynomial {
        if &self.order == order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { n: self.n, order: order.clone(), terms }
    }

    pub fn monic(mut self) -> Polynomial {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                for t in &mut self.terms {
                    t.coeff /= &lc;
                }
            }
        }
        self
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n, self.order.clone());
        }
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() }).collect();
        Polynomial { n: self.n, order: self.order.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(m) }).collect();
        Polynomial { n: self.n, order: self.order.clone(), terms }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &Coeff::one(), None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &-Coeff::one(), None)
    }

    /// `self + c * shift * other`, by a single merge of the sorted term lists.
    pub fn combine(&self, other: &Polynomial, c: &Coeff, shift: Option<&Monomial>) -> Polynomial {
        debug_assert_eq!(self.order, other.order);
        let order = &self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted = |t: &Term| match shift {
            Some(s) => t.mono.mul(s),
            None => t.mono.clone(),
        };
        let mut b = other.terms.iter().map(|t| (shifted(t), &t.coeff)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some((m, _))) => order.cmp(&x.mono, m),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, k) = b.next().unwrap();
                    out.push(Term { coeff: k * c, mono: m });
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let (_, k) = b.next().unwrap();
                    let coeff = &x.coeff + k * c;
                    if !coeff.is_zero() {
                        out.push(Term { coeff, mono: x.mono.clone() });
                    }
                }
            }
        }
        Polynomial { n: self.n, order: self.order.clone(), terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for s in &self.terms {
            for t in &other.terms {
                *acc.entry(s.mono.mul(&t.mono)).or_insert_with(Coeff::zero) += &s.coeff * &t.coeff;
            }
        }
        Polynomial::from_terms(self.n, self.order.clone(), acc.into_iter().map(|(m, c)| (c, m)))
    }

    pub fn mul_var(&self, index: usize) -> Polynomial {
        self.mul_monomial(&Monomial::var(self.n, index))
    }
}

pub(crate) fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, c: &Coeff, m: &Monomial, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if m.is_one() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{abs}*{m}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            fmt_coeff_term(f, &t.coeff, &t.mono, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::mono;

    fn c(x: i64) -> Coeff {
        Coeff::from_integer(x.into())
    }

    #[test]
    fn normalizes_and_sorts() {
        let p = Polynomial::from_terms(
            3,
            TermOrder::RevLex,
            vec![(c(1), mono(3, &[(1, 1), (3, 1)])), (c(2), mono(3, &[(2, 2)])), (c(-1), mono(3, &[(2, 2)]))],
        );
        assert_eq!(p.to_string(), "x2^2 + x1*x3");
        let q = p.with_order(&TermOrder::Lex);
        assert_eq!(q.to_string(), "x1*x3 + x2^2");
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn combine_cancels() {
        let o = TermOrder::Lex;
        let p = Polynomial::from_terms(2, o.clone(), vec![(c(1), mono(2, &[(1, 2)])), (c(3), mono(2, &[(2, 2)]))]);
        let q = Polynomial::from_terms(2, o.clone(), vec![(c(1), mono(2, &[(1, 1)])), (c(1), mono(2, &[(2, 1)]))]);
        let r = p.combine(&q, &c(-1), Some(&mono(2, &[(1, 1)])));
        assert_eq!(r.to_string(), "-x1*x2 + 3*x2^2");
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn inhomogeneous_detected() {
        let p = Polynomial::from_terms(2, TermOrder::Lex, vec![(c(1), mono(2, &[(1, 1)])), (c(1), mono(2, &[(2, 2)]))]);
        assert!(matches!(p.check_homogeneous(), Err(Error::Inhomogeneous(1, 2))));
    }

    #[test]
    fn display_rationals() {
        let p = Polynomial::from_terms(
            2,
            TermOrder::Lex,
            vec![(Coeff::new((-3).into(), 2.into()), mono(2, &[(1, 1)])), (c(-1), mono(2, &[(2, 1)]))],
        );
        assert_eq!(p.to_string(), "-3/2*x1 - x2");
    }
}
