//! Exact Fourier-Motzkin elimination for homogeneous systems of strict
//! inequalities `a_k . w > 0`, with feasibility witnesses and Farkas-type
//! infeasibility certificates.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::Coeff;

/// Strict homogeneous inequalities `row . w > 0` on weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCone {
    n: usize,
    rows: Vec<Vec<Coeff>>,
}

impl WeightCone {
    pub fn new(n: usize) -> Self {
        WeightCone { n, rows: Vec::new() }
    }

    /// `w_1 > w_2 > ... > w_n > 0`.
    pub fn base(n: usize) -> Self {
        let mut c = WeightCone::new(n);
        for i in 0..n {
            let mut row = vec![Coeff::zero(); n];
            row[i] = Coeff::one();
            if i + 1 < n {
                row[i + 1] = -Coeff::one();
            }
            c.rows.push(row);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    pub fn push(&mut self, row: Vec<Coeff>) {
        assert_eq!(row.len(), self.n, "row length");
        self.rows.push(row);
    }

    /// `w . (a - b) > 0`: `a` must be the initial term rather than `b`.
    pub fn push_selection(&mut self, a: &Monomial, b: &Monomial) {
        let row =
            (0..self.n).map(|k| Coeff::from_integer((i64::from(a.exp(k)) - i64::from(b.exp(k))).into())).collect();
        self.rows.push(row);
    }

    pub fn satisfied_by(&self, w: &[Coeff]) -> bool {
        self.rows.iter().all(|r| dot(r, w).is_positive())
    }

    pub fn feasibility(&self) -> Feasibility {
        fourier_motzkin(self)
    }
}

impl fmt::Display for WeightCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}] . w > 0", cells.join(", "))?;
        }
        Ok(())
    }
}

fn dot(a: &[Coeff], b: &[Coeff]) -> Coeff {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nonnegative multipliers, not all zero, combining the rows of a cone to
/// the zero vector. Such a combination would force `0 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    multipliers: Vec<Coeff>,
}

impl Certificate {
    pub fn multipliers(&self) -> &[Coeff] {
        &self.multipliers
    }

    pub fn verify(&self, cone: &WeightCone) -> bool {
        if self.multipliers.len() != cone.rows.len()
            || self.multipliers.iter().any(Signed::is_negative)
            || self.multipliers.iter().all(Zero::is_zero)
        {
            return false;
        }
        (0..cone.n).all(|k| self.multipliers.iter().zip(&cone.rows).map(|(l, r)| l * &r[k]).sum::<Coeff>().is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A point of the open cone, scaled to coprime integers.
    Feasible(Vec<Coeff>),
    Infeasible(Certificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Coeff>,
    // Combination of the original rows producing `coeffs`.
    mult: Vec<Coeff>,
}

impl Row {
    fn normalize(&mut self) {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Signed::abs) {
            for c in self.coeffs.iter_mut().chain(self.mult.iter_mut()) {
                *c /= &lead;
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn dedupe(rows: Vec<Row>) -> Vec<Row> {
    let mut seen: HashMap<Vec<Coeff>, ()> = HashMap::new();
    rows.into_iter().filter(|r| seen.insert(r.coeffs.clone(), ()).is_none()).collect()
}

fn fourier_motzkin(cone: &WeightCone) -> Feasibility {
    let m = cone.rows.len();
    let mut current: Vec<Row> = cone
        .rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut mult = vec![Coeff::zero(); m];
            mult[k] = Coeff::one();
            let mut row = Row { coeffs: r.clone(), mult };
            row.normalize();
            row
        })
        .collect();
    // stages[v] holds the system before variable v is eliminated.
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(cone.n);
    for v in (0..cone.n).rev() {
        if let Some(bad) = current.iter().find(|r| r.is_zero()) {
            return Feasibility::Infeasible(Certificate { multipliers: bad.mult.clone() });
        }
        current = dedupe(current);
        stages.push(current.clone());
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in current {
            match r.coeffs[v].sign_of() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => next.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[v].clone(), -q.coeffs[v].clone());
                let combine =
                    |x: &[Coeff], y: &[Coeff]| x.iter().zip(y).map(|(s, t)| s * &b + t * &a).collect::<Vec<_>>();
                let mut r = Row { coeffs: combine(&p.coeffs, &q.coeffs), mult: combine(&p.mult, &q.mult) };
                r.coeffs[v] = Coeff::zero();
                r.normalize();
                next.push(r);
            }
        }
        current = next;
    }
    if let Some(bad) = current.first() {
        return Feasibility::Infeasible(Certificate { multipliers: bad.mult.clone() });
    }
    // Back-substitution: variables were eliminated from the last to the first.
    let mut w = vec![Coeff::zero(); cone.n];
    for (stage, v) in stages.iter().rev().zip(0..cone.n) {
        let (mut lo, mut hi): (Option<Coeff>, Option<Coeff>) = (None, None);
        for r in stage {
            let c = &r.coeffs[v];
            if c.is_zero() {
                continue;
            }
            let rest: Coeff = (0..cone.n).filter(|&k| k != v).map(|k| &r.coeffs[k] * &w[k]).sum();
            let bound = -rest / c;
            if c.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        w[v] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / Coeff::from_integer(2.into()),
            (Some(l), None) => l.floor() + Coeff::one(),
            (None, Some(h)) => h.ceil() - Coeff::one(),
            (None, None) => Coeff::zero(),
        };
    }
    let w = to_coprime_integers(w);
    debug_assert!(cone.satisfied_by(&w));
    Feasibility::Feasible(w)
}

trait SignOf {
    fn sign_of(&self) -> i8;
}

impl SignOf for Coeff {
    fn sign_of(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Positive rescaling to coprime integers.
pub fn to_coprime_integers(w: Vec<Coeff>) -> Vec<Coeff> {
    let lcm = w.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = w.iter().map(|c| (c * Coeff::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return w;
    }
    ints.into_iter().map(|x| Coeff::from_integer(x / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::mono;

    fn ints(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&x| Coeff::from_integer(x.into())).collect()
    }

    #[test]
    fn base_cone_is_feasible() {
        for n in 1..6 {
            let c = WeightCone::base(n);
            match c.feasibility() {
                Feasibility::Feasible(w) => assert!(c.satisfied_by(&w)),
                Feasibility::Infeasible(_) => panic!("base cone infeasible"),
            }
        }
    }

    #[test]
    fn selection_forcing_smaller_variable_is_infeasible() {
        let mut c = WeightCone::base(3);
        // x3 > x2 contradicts w2 > w3.
        c.push_selection(&mono(3, &[(3, 1)]), &mono(3, &[(2, 1)]));
        match c.feasibility() {
            Feasibility::Infeasible(cert) => assert!(cert.verify(&c)),
            Feasibility::Feasible(w) => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn witness_found_for_non_lex_selection() {
        // x2^2 x4 > x1 x3^2 needs 2 w2 + w4 > w1 + 2 w3.
        let mut c = WeightCone::base(4);
        c.push_selection(&mono(4, &[(2, 2), (4, 1)]), &mono(4, &[(1, 1), (3, 2)]));
        let Feasibility::Feasible(w) = c.feasibility() else { panic!("infeasible") };
        assert!(c.satisfied_by(&w));
        assert!(c.satisfied_by(&ints(&[6, 5, 2, 1])));
    }

    #[test]
    fn certificate_rejects_wrong_multipliers() {
        let mut c = WeightCone::new(1);
        c.push(ints(&[1]));
        c.push(ints(&[-1]));
        let Feasibility::Infeasible(cert) = c.feasibility() else { panic!("feasible") };
        assert!(cert.verify(&c));
        assert!(!Certificate { multipliers: ints(&[1, 0]) }.verify(&c));
        assert!(!Certificate { multipliers: ints(&[0, 0]) }.verify(&c));
    }

    #[test]
    fn coprime_scaling() {
        let w = vec![Coeff::new(3.into(), 2.into()), Coeff::from_integer(3.into())];
        assert_eq!(to_coprime_integers(w), ints(&[1, 2]));
    }
}
