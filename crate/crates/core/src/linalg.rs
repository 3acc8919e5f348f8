//! Exact linear algebra over the rationals.
//!
//! Ranks and determinants go through fraction-free (Bareiss) elimination on
//! integer matrices obtained by clearing row denominators. A machine-integer
//! pass is attempted first and abandoned on the first overflow, in which case
//! the same elimination is replayed with big integers. Sparse matrices use a
//! leading-column echelon form with primitive rows instead.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Coeff;

pub type SparseRow = Vec<(usize, Coeff)>;

/// Scale a rational row to a primitive-free integer row with the same span.
fn integer_row(row: impl IntoIterator<Item = (usize, Coeff)>, ncols: usize) -> Vec<BigInt> {
    let entries: Vec<(usize, Coeff)> = row.into_iter().collect();
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut out = vec![BigInt::zero(); ncols];
    for (j, c) in entries {
        out[j] += c.numer() * (&lcm / c.denom());
    }
    out
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r.iter().cloned().enumerate(), ncols)).collect();
    integer_rank(ints, ncols)
}

/// Rank of a sparse rational matrix, by fraction-free sparse elimination.
pub fn rank_sparse(rows: &[SparseRow], ncols: usize) -> usize {
    let ints: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .filter(|r| r.iter().any(|(_, c)| !c.is_zero()))
        .map(|r| {
            let dense = integer_row(r.iter().cloned(), ncols);
            dense.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
        })
        .collect();
    let small: Option<Vec<Vec<(usize, i128)>>> = ints
        .iter()
        .map(|r| r.iter().map(|(j, x)| x.to_i128().filter(|v| v.abs() < (1 << 62)).map(|v| (*j, v))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = sparse_echelon(small) {
            return r;
        }
    }
    sparse_echelon(ints).expect("big integers do not overflow")
}

trait Scalar: Clone + PartialEq {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let v = a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)?;
        (v.abs() < (1 << 100)).then_some(v)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
}

fn make_primitive<T: Scalar>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, x) in row.iter().skip(1) {
        g = g.gcd(x);
    }
    if row[0].1.is_negative() {
        g = g.neg();
    }
    for (_, x) in row.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// Row echelon form by leading columns; returns the rank, or `None` on
/// machine-integer overflow.
fn sparse_echelon<T: Scalar>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut r in rows {
        make_primitive(&mut r);
        while let Some((c, lead)) = r.first().cloned() {
            let Some(p) = pivots.get(&c) else {
                pivots.insert(c, r);
                break;
            };
            let g = p[0].1.gcd(&lead);
            let (a, b) = (p[0].1.div_exact(&g), lead.div_exact(&g));
            // r <- a*r - b*p, merged by column.
            let mut out = Vec::with_capacity(r.len() + p.len());
            let (mut i, mut k) = (1, 1);
            while i < r.len() || k < p.len() {
                let ci = r.get(i).map_or(usize::MAX, |e| e.0);
                let ck = p.get(k).map_or(usize::MAX, |e| e.0);
                let (col, v) = if ci < ck {
                    i += 1;
                    (ci, T::mul_sub(&a, &r[i - 1].1, &T::nil(), &T::nil())?)
                } else if ck < ci {
                    k += 1;
                    (ck, T::mul_sub(&T::nil(), &T::nil(), &b, &p[k - 1].1)?)
                } else {
                    i += 1;
                    k += 1;
                    (ci, T::mul_sub(&a, &r[i - 1].1, &b, &p[k - 1].1)?)
                };
                if !v.is_nil() {
                    out.push((col, v));
                }
            }
            make_primitive(&mut out);
            r = out;
        }
    }
    Some(pivots.len())
}

pub fn integer_rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let rows: Vec<Vec<BigInt>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    let small: Option<Vec<Vec<i128>>> =
        rows.iter().map(|r| r.iter().map(|x| x.to_i128().filter(|v| v.abs() < (1 << 62))).collect()).collect();
    if let Some(small) = small {
        if let Some(r) = bareiss_i128(small, ncols) {
            return r;
        }
    }
    bareiss_big(rows, ncols).0
}

fn bareiss_i128(mut a: Vec<Vec<i128>>, ncols: usize) -> Option<usize> {
    let m = a.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| a[i][c] != 0).max_by_key(|&i| a[i][c].unsigned_abs()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = pivot_row[c];
        for row in tail.iter_mut() {
            let f = row[c];
            for j in c + 1..ncols {
                let v = piv.checked_mul(row[j])?.checked_sub(f.checked_mul(pivot_row[j])?)?;
                row[j] = v / prev;
            }
            row[c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

/// Returns the rank and the signed last pivot (the determinant when square
/// and of full rank).
fn bareiss_big(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (usize, BigInt) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = BigInt::one();
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !a[i][c].is_zero()).max_by(|&i, &k| a[i][c].abs().cmp(&a[k][c].abs())) else {
            continue;
        };
        if p != r {
            a.swap(r, p);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            if f.is_zero() {
                if !prev.is_one() || !piv.is_one() {
                    for x in row[c + 1..ncols].iter_mut() {
                        if !x.is_zero() {
                            *x = &piv * &*x / &prev;
                        }
                    }
                }
                continue;
            }
            for j in c + 1..ncols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = piv;
        r += 1;
    }
    (r, sign * prev)
}

pub fn determinant(m: &[Vec<Coeff>]) -> Coeff {
    let n = m.len();
    if n == 0 {
        return Coeff::one();
    }
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| {
            let lcm = r.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &lcm;
            r.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    let (rank, det) = bareiss_big(rows, n);
    if rank < n {
        Coeff::zero()
    } else {
        Coeff::new(det, scale)
    }
}

/// Gauss-Jordan inverse; `None` if singular.
pub fn inverse(m: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = m.len();
    let mut a: Vec<Vec<Coeff>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Reduced row echelon form over the rationals, in place. Returns pivot
/// columns, one per nonzero row (zero rows are dropped).
pub fn rref(rows: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ c : sum_i c_i * rows[i] = 0 }`.
pub fn left_kernel(rows: &[SparseRow], ncols: usize) -> Vec<Vec<Coeff>> {
    let m = rows.len();
    // Transpose: columns of the row matrix become equations in c.
    let mut t = vec![vec![Coeff::zero(); m]; ncols];
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row {
            t[*j][i] += c;
        }
    }
    t.retain(|r| r.iter().any(|x| !x.is_zero()));
    let pivots = if t.is_empty() { Vec::new() } else { rref(&mut t) };
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Coeff::zero(); m];
            v[f] = Coeff::one();
            for (row, &p) in t.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
        rows.iter().map(|r| r.iter().map(|&x| Coeff::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn rank_basic() {
        assert_eq!(rank(&q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn rank_overflow_falls_back() {
        let big = 1i64 << 40;
        let m = q(&[&[big, 1, 3], &[7, big, 1], &[1, 5, big], &[big + 7, big + 1, 4]]);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let dense = q(&[&[1, 2, 0, 3], &[0, 0, 5, 1], &[2, 4, 5, 7], &[0, 1, 0, 0], &[3, 6, 0, 9]]);
        let sparse: Vec<SparseRow> =
            dense.iter().map(|r| r.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect()).collect();
        assert_eq!(rank(&dense), 3);
        assert_eq!(rank_sparse(&sparse, 4), 3);
        let big = Coeff::from_integer(BigInt::from(1i64 << 50));
        let one = Coeff::one();
        let huge: Vec<SparseRow> = vec![
            vec![(0, big.clone()), (1, one.clone())],
            vec![(0, one.clone()), (1, big.clone())],
            vec![(0, &big + &one), (1, &big + &one)],
        ];
        assert_eq!(rank_sparse(&huge, 2), 2);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(determinant(&m), Coeff::from_integer(1.into()));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, q(&[&[4, -1], &[-7, 2]]));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
        let m3 = q(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(determinant(&m3), Coeff::from_integer(7.into()));
    }

    #[test]
    fn left_kernel_relations() {
        let rows: Vec<SparseRow> = vec![
            vec![(0, Coeff::from_integer(1.into())), (1, Coeff::from_integer(1.into()))],
            vec![(1, Coeff::from_integer(2.into()))],
            vec![(0, Coeff::from_integer(2.into()))],
        ];
        let k = left_kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        for col in 0..2 {
            let s: Coeff = rows
                .iter()
                .zip(v)
                .map(|(r, c)| r.iter().filter(|(j, _)| *j == col).map(|(_, x)| x * c).sum::<Coeff>())
                .sum();
            assert!(s.is_zero());
        }
    }
}
