//! Graded term orders refining `x1 > x2 > ... > xn`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    RevLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightOrder {
    weights: Vec<Coeff>,
    // `weights` scaled by the lcm of their denominators.
    scaled: Vec<i128>,
    tiebreak: Tiebreak,
}

impl WeightOrder {
    pub fn weights(&self) -> &[Coeff] {
        &self.weights
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    pub fn dot(&self, m: &Monomial) -> i128 {
        self.scaled.iter().zip(m.exps()).map(|(w, &e)| w * i128::from(e)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    RevLex,
    Weight(Arc<WeightOrder>),
}

impl TermOrder {
    /// A weight order; the weights must be positive and strictly decreasing.
    pub fn weight(weights: Vec<Coeff>, tiebreak: Tiebreak) -> Result<TermOrder> {
        if weights.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        for pair in weights.windows(2) {
            if pair[0] <= pair[1] {
                return Err(Error::InvalidWeight(format!(
                    "weights must be strictly decreasing ({} <= {})",
                    pair[0], pair[1]
                )));
            }
        }
        if !weights.last().unwrap().is_positive() {
            return Err(Error::InvalidWeight("weights must be positive".into()));
        }
        let lcm = weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled = weights
            .iter()
            .map(|w| (w.numer() * (&lcm / w.denom())).to_i128())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidWeight("weights too large".into()))?;
        // Keep headroom for dot products with exponent vectors.
        if scaled.iter().any(|w| w.abs() > (1i128 << 96)) {
            return Err(Error::InvalidWeight("weights too large".into()));
        }
        Ok(TermOrder::Weight(Arc::new(WeightOrder { weights, scaled, tiebreak })))
    }

    pub fn weight_from_ints(weights: &[i64], tiebreak: Tiebreak) -> Result<TermOrder> {
        TermOrder::weight(weights.iter().map(|&w| Coeff::from_integer(w.into())).collect(), tiebreak)
    }

    /// Number of variables this order is tied to, if any.
    pub fn arity(&self) -> Option<usize> {
        match self {
            TermOrder::Weight(w) => Some(w.weights.len()),
            _ => None,
        }
    }

    pub fn check_arity(&self, n: usize) -> Result<()> {
        match self.arity() {
            Some(k) if k != n => Err(Error::DimensionMismatch { expected: k, found: n }),
            _ => Ok(()),
        }
    }

    /// Compare monomials; panics (in debug builds) on mismatched lengths.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.n(), b.n());
        a.degree().cmp(&b.degree()).then_with(|| match self {
            TermOrder::Lex => lex_cmp(a, b),
            TermOrder::RevLex => revlex_cmp(a, b),
            TermOrder::Weight(w) => w.dot(a).cmp(&w.dot(b)).then_with(|| match w.tiebreak {
                Tiebreak::Lex => lex_cmp(a, b),
                Tiebreak::RevLex => revlex_cmp(a, b),
            }),
        })
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
        }
        self.check_arity(a.n())?;
        Ok(self.cmp(a, b))
    }

    /// For weight orders: whether `a` and `b` have equal weight, so the
    /// tiebreak decides between them.
    pub fn is_weight_tie(&self, a: &Monomial, b: &Monomial) -> bool {
        match self {
            TermOrder::Weight(w) => a.degree() == b.degree() && w.dot(a) == w.dot(b),
            _ => false,
        }
    }

    pub fn max<'a>(&self, monos: impl IntoIterator<Item = &'a Monomial>) -> Option<&'a Monomial> {
        monos.into_iter().max_by(|a, b| self.cmp(a, b))
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps().cmp(b.exps())
}

fn revlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::RevLex => f.write_str("revlex"),
            TermOrder::Weight(w) => {
                f.write_str("weight:")?;
                for (i, x) in w.weights.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                if w.tiebreak == Tiebreak::Lex {
                    f.write_str(";lex")?;
                }
                Ok(())
            }
        }
    }
}

/// Exact scalar product of an exponent vector with a rational weight.
pub fn weight_dot(w: &[Coeff], m: &Monomial) -> Coeff {
    w.iter()
        .zip(m.exps())
        .filter(|(_, &e)| e != 0)
        .fold(Coeff::zero(), |acc, (x, &e)| acc + x * Coeff::from_integer(e.into()))
}
