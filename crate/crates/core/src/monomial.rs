//! Monomials in `K[x1, ..., xn]` as dense exponent vectors.
//!
//! Variables are indexed `0..n` internally and displayed as `x1..xn`;
//! `x1` is the largest variable in every term order of this crate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{index+1}`.
    pub fn var(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] += 1;
        Monomial { degree: self.degree + 1, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect(),
        })
    }

    /// Divide by `x_{index+1}`, if it occurs.
    pub fn div_var(&self, index: usize) -> Option<Monomial> {
        if self.exps[index] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] -= 1;
        Some(Monomial { degree: self.degree - 1, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect::<Vec<_>>())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `max(u)`: the largest (1-based) index of a variable occurring in `u`,
    /// or 0 for the constant monomial.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Partial sums `(a1, a1+a2, ..., a1+...+an)`.
    pub fn partial_sums(&self) -> Vec<u32> {
        self.exps
            .iter()
            .scan(0, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }

    /// Elementary Borel moves: `x_j * u / x_i` for every `j < i` with `x_i | u`.
    pub fn borel_moves(&self) -> impl Iterator<Item = Monomial> + '_ {
        (1..self.n()).filter(|&i| self.exps[i] > 0).flat_map(move |i| {
            (0..i).map(move |j| {
                let mut exps = self.exps.clone();
                exps[i] -= 1;
                exps[j] += 1;
                Monomial { degree: self.degree, exps }
            })
        })
    }

    /// All monomials of degree `d` in `n` variables, in decreasing lex order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(count_monomials(n, d) as usize);
        let mut exps = vec![0u32; n];
        fill_degree(&mut exps, 0, d, &mut out);
        out
    }
}

fn fill_degree(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = exps.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if pos == n - 1 {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_degree(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Number of monomials of degree `d` in `n` variables, `C(d+n-1, n-1)`.
pub fn count_monomials(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial(u64::from(d) + n as u64 - 1, n as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// Binomial coefficient with integer arguments; zero outside `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// Compare two monomials of the same degree in the Borel order.
///
/// Returns `None` when they are incomparable.
pub fn borel_compare(a: &Monomial, b: &Monomial) -> Result<Option<Ordering>> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(borel_cmp_unchecked(a, b))
}

pub(crate) fn borel_cmp_unchecked(a: &Monomial, b: &Monomial) -> Option<Ordering> {
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for (x, y) in a.exps().iter().zip(b.exps()) {
        sa += x;
        sb += y;
        ge &= sa >= sb;
        le &= sa <= sb;
        if !ge && !le {
            return None;
        }
    }
    match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}

/// `a >=_Borel b`.
pub fn borel_geq(a: &Monomial, b: &Monomial) -> bool {
    matches!(borel_cmp_unchecked(a, b), Some(Ordering::Greater | Ordering::Equal))
}

/// `a >_Borel b`.
pub fn borel_gt(a: &Monomial, b: &Monomial) -> bool {
    borel_cmp_unchecked(a, b) == Some(Ordering::Greater)
}

/// Successive differences `(w1-w2, ..., w_{n-1}-w_n, w_n)`.
pub fn successive_differences<T>(w: &[T]) -> Vec<T>
where
    T: Clone + std::ops::Sub<Output = T>,
{
    let mut out: Vec<T> = w.windows(2).map(|p| p[0].clone() - p[1].clone()).collect();
    if let Some(last) = w.last() {
        out.push(last.clone());
    }
    out
}

/// Canonical order: degree first, then lex on exponents. Not a term order
/// choice; used for sorting and display only.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Build a monomial from 1-based `(variable, exponent)` pairs.
pub fn mono(n: usize, powers: &[(usize, u32)]) -> Monomial {
    let mut exps = vec![0; n];
    for &(v, e) in powers {
        exps[v - 1] += e;
    }
    Monomial::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::new(vec![2, 0, 3]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.mul_var(1).degree(), 6);
    }

    #[test]
    fn enumerates_degree_in_lex_order() {
        let all = Monomial::all_of_degree(3, 2);
        let shown: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        assert_eq!(Monomial::all_of_degree(4, 3).len() as u64, count_monomials(4, 3));
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert!(Monomial::all_of_degree(0, 2).is_empty());
    }

    #[test]
    fn borel_examples() {
        let x1x1 = mono(3, &[(1, 2)]);
        let x1x2 = mono(3, &[(1, 1), (2, 1)]);
        let x1x3 = mono(3, &[(1, 1), (3, 1)]);
        let x2x2 = mono(3, &[(2, 2)]);
        assert_eq!(borel_compare(&x1x1, &x1x2).unwrap(), Some(Ordering::Greater));
        assert_eq!(borel_compare(&x1x3, &x2x2).unwrap(), None);
        assert_eq!(borel_compare(&x1x3, &x1x3).unwrap(), Some(Ordering::Equal));
        assert!(matches!(borel_compare(&x1x1, &Monomial::var(3, 0)), Err(Error::DegreeMismatch(2, 1))));
    }

    #[test]
    fn max_index_and_moves() {
        let m = mono(4, &[(2, 1), (3, 2)]);
        assert_eq!(m.max_index(), 3);
        assert_eq!(Monomial::one(4).max_index(), 0);
        let moves: Vec<String> = mono(3, &[(2, 1)]).borel_moves().map(|m| m.to_string()).collect();
        assert_eq!(moves, ["x1"]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_i(-1, -1), 0);
        assert_eq!(count_monomials(3, 7), 36);
    }
}
