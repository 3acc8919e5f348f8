//! Linear changes of coordinates `g(x_i) = sum_j g[j][i] * x_j`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::Coeff;

/// Hard cap on redraws for a singular random matrix.
pub const MAX_REDRAWS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixShape {
    General,
    UpperTriangular,
    LowerTriangular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOfCoordinates {
    matrix: Vec<Vec<Coeff>>,
    shape: MatrixShape,
}

impl ChangeOfCoordinates {
    pub fn new(matrix: Vec<Vec<Coeff>>, shape: MatrixShape) -> Result<Self> {
        let n = matrix.len();
        if let Some(bad) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let shape_ok = (0..n).all(|i| {
            (0..n).all(|j| match shape {
                MatrixShape::General => true,
                MatrixShape::UpperTriangular => i <= j || matrix[i][j].is_zero(),
                MatrixShape::LowerTriangular => i >= j || matrix[i][j].is_zero(),
            })
        });
        if !shape_ok {
            return Err(Error::OutOfRange(format!("matrix is not {shape:?}")));
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::Singular);
        }
        Ok(ChangeOfCoordinates { matrix, shape })
    }

    pub fn from_ints(rows: &[Vec<i64>], shape: MatrixShape) -> Result<Self> {
        let matrix = rows.iter().map(|r| r.iter().map(|&x| Coeff::from_integer(x.into())).collect()).collect();
        ChangeOfCoordinates::new(matrix, shape)
    }

    pub fn identity(n: usize) -> Self {
        let matrix =
            (0..n).map(|i| (0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }).collect()).collect();
        ChangeOfCoordinates { matrix, shape: MatrixShape::General }
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Coeff>] {
        &self.matrix
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    pub fn determinant(&self) -> Coeff {
        linalg::determinant(&self.matrix)
    }

    pub fn inverse(&self) -> ChangeOfCoordinates {
        let matrix = linalg::inverse(&self.matrix).expect("invertible by construction");
        ChangeOfCoordinates { matrix, shape: self.shape }
    }

    /// Image of `x_{index+1}` as `(coefficient, variable index)` pairs.
    fn image_of_var(&self, index: usize) -> Vec<(Coeff, usize)> {
        (0..self.n())
            .filter(|&j| !self.matrix[j][index].is_zero())
            .map(|j| (self.matrix[j][index].clone(), j))
            .collect()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.n() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: f.n() });
        }
        let mut images = ImageCache::new(self);
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for t in f.terms() {
            for (m, c) in images.monomial(&t.mono) {
                *acc.entry(m.clone()).or_insert_with(Coeff::zero) += &t.coeff * c;
            }
        }
        Ok(Polynomial::from_terms(f.n(), f.order().clone(), acc.into_iter().map(|(m, c)| (c, m))))
    }

    pub fn apply_all(&self, fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
        fs.iter().map(|f| self.apply(f)).collect()
    }
}

/// Memoized images of monomials, built by multiplying in one variable image
/// at a time.
struct ImageCache<'a> {
    g: &'a ChangeOfCoordinates,
    vars: Vec<Vec<(Coeff, usize)>>,
    memo: HashMap<Monomial, HashMap<Monomial, Coeff>>,
}

impl<'a> ImageCache<'a> {
    fn new(g: &'a ChangeOfCoordinates) -> Self {
        let vars = (0..g.n()).map(|i| g.image_of_var(i)).collect();
        ImageCache { g, vars, memo: HashMap::new() }
    }

    fn monomial(&mut self, m: &Monomial) -> &HashMap<Monomial, Coeff> {
        if !self.memo.contains_key(m) {
            let image = match (0..m.n()).find(|&i| m.exp(i) > 0) {
                None => HashMap::from([(Monomial::one(self.g.n()), Coeff::one())]),
                Some(i) => {
                    let rest = m.div_var(i).unwrap();
                    let base = self.monomial(&rest).clone();
                    let mut out: HashMap<Monomial, Coeff> = HashMap::new();
                    for (bm, bc) in &base {
                        for (vc, j) in &self.vars[i] {
                            *out.entry(bm.mul_var(*j)).or_insert_with(Coeff::zero) += bc * vc;
                        }
                    }
                    out.retain(|_, c| !c.is_zero());
                    out
                }
            };
            self.memo.insert(m.clone(), image);
        }
        &self.memo[m]
    }
}

/// Seeded random invertible matrix with integer entries in `[-bound, bound]`.
pub fn random_coordinates(n: usize, seed: u64, bound: i64, shape: MatrixShape) -> Result<ChangeOfCoordinates> {
    if bound < 1 {
        return Err(Error::OutOfRange(format!("entry bound {bound} must be positive")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_REDRAWS {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let allowed = match shape {
                    MatrixShape::General => true,
                    MatrixShape::UpperTriangular => i <= j,
                    MatrixShape::LowerTriangular => i >= j,
                };
                if !allowed {
                    continue;
                }
                *x = rng.random_range(-bound..=bound);
                if i == j && shape != MatrixShape::General {
                    while *x == 0 {
                        *x = rng.random_range(-bound..=bound);
                    }
                }
            }
        }
        match ChangeOfCoordinates::from_ints(&rows, shape) {
            Ok(g) => return Ok(g),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RedrawLimit(MAX_REDRAWS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{borel_gt, mono};
    use crate::order::TermOrder;

    fn poly(n: usize, terms: &[(i64, Monomial)]) -> Polynomial {
        Polynomial::from_terms(
            n,
            TermOrder::Lex,
            terms.iter().map(|(c, m)| (Coeff::from_integer((*c).into()), m.clone())),
        )
    }

    #[test]
    fn identity_fixes_polynomials() {
        let f = poly(3, &[(2, mono(3, &[(1, 1), (3, 1)])), (-1, mono(3, &[(2, 2)]))]);
        assert_eq!(ChangeOfCoordinates::identity(3).apply(&f).unwrap(), f);
    }

    #[test]
    fn action_convention_uses_columns() {
        // g(x1) = x1 + 3*x2 since g[1][0] = 3.
        let g = ChangeOfCoordinates::from_ints(&[vec![1, 0], vec![3, 1]], MatrixShape::LowerTriangular).unwrap();
        let f = poly(2, &[(1, Monomial::var(2, 0))]);
        assert_eq!(g.apply(&f).unwrap().to_string(), "x1 + 3*x2");
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_coordinates(3, 1, 10, MatrixShape::General).unwrap();
        let b = random_coordinates(3, 1, 10, MatrixShape::General).unwrap();
        assert_eq!(a, b);
        let one = random_coordinates(1, 5, 10, MatrixShape::General).unwrap();
        assert!(!one.matrix()[0][0].is_zero());
    }

    #[test]
    fn random_matrices_are_invertible() {
        for seed in 0..100 {
            let g = random_coordinates(3, seed, 2, MatrixShape::General).unwrap();
            // Independent check: cofactor expansion.
            let m = g.matrix();
            let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            assert!(!det.is_zero());
            assert_eq!(det, g.determinant());
        }
    }

    #[test]
    fn lower_triangular_moves_down_in_borel_order() {
        for seed in 0..20 {
            let a = random_coordinates(4, seed, 5, MatrixShape::LowerTriangular).unwrap();
            for m in Monomial::all_of_degree(4, 3) {
                let img = a.apply(&Polynomial::from_monomial(m.clone(), TermOrder::Lex)).unwrap();
                assert!(!img.coeff_of(&m).is_zero());
                for t in img.terms() {
                    assert!(t.mono == m || borel_gt(&m, &t.mono), "{} in image of {m}", t.mono);
                }
            }
        }
    }

    #[test]
    fn shape_is_enforced() {
        assert!(ChangeOfCoordinates::from_ints(&[vec![1, 2], vec![0, 1]], MatrixShape::LowerTriangular).is_err());
        assert!(matches!(
            ChangeOfCoordinates::from_ints(&[vec![1, 2], vec![2, 4]], MatrixShape::General),
            Err(Error::Singular)
        ));
    }
}
