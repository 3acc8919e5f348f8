//! Koszul homology of `R/I` with respect to a sequence of linear forms,
//! computed strand by strand with exact linear algebra.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{BettiTable, KoszulBettiTensor};
use crate::error::{Error, Result};
use crate::graded::GradedIdeal;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::ideal::MonomialIdeal;
use crate::linalg::{self, SparseRow};
use crate::monomial::{binomial, Monomial};
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::Coeff;

/// Coefficient range for random linear forms.
pub const FORM_BOUND: i64 = 1000;

type Vector = Rc<Vec<(usize, Coeff)>>;

/// `R/I` coordinatized by the standard monomials of `in_revlex(I)`.
pub struct QuotientRing {
    n: usize,
    gb: GroebnerBasis,
    lead: MonomialIdeal,
    std: RefCell<HashMap<u32, Rc<StdBasis>>>,
    nf: RefCell<HashMap<Monomial, Vector>>,
}

struct StdBasis {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientRing {
    pub fn new(n: usize, gens: &[Polynomial]) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.n() });
        }
        let gb = buchberger(gens, &TermOrder::RevLex)?;
        let lead = gb.initial_ideal(n);
        Ok(QuotientRing { n, gb, lead, std: RefCell::default(), nf: RefCell::default() })
    }

    pub fn from_monomial_ideal(i: &MonomialIdeal) -> Result<Self> {
        QuotientRing::new(i.n(), &i.to_polynomials(&TermOrder::RevLex))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn initial_ideal(&self) -> &MonomialIdeal {
        &self.lead
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.lead.max_degree()
    }

    fn std_basis(&self, d: u32) -> Rc<StdBasis> {
        if let Some(b) = self.std.borrow().get(&d) {
            return b.clone();
        }
        let monos: Vec<Monomial> =
            Monomial::all_of_degree(self.n, d).into_iter().filter(|m| !self.lead.contains(m)).collect();
        let index = monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let b = Rc::new(StdBasis { monos, index });
        self.std.borrow_mut().insert(d, b.clone());
        b
    }

    /// Standard monomials of degree `d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.std_basis(d).monos.clone()
    }

    /// `dim_K (R/I)_d`.
    pub fn dim(&self, d: u32) -> usize {
        self.std_basis(d).monos.len()
    }

    /// Normal form of a monomial as coordinates over the standard monomials
    /// of its degree.
    fn normal_form(&self, m: &Monomial) -> Vector {
        if let Some(v) = self.nf.borrow().get(m) {
            return v.clone();
        }
        let basis = self.std_basis(m.degree());
        let v: Vector = if let Some(&k) = basis.index.get(m) {
            Rc::new(vec![(k, Coeff::one())])
        } else {
            // m = s * lt(g) and lt(g) = -(tail of g) modulo I.
            let g = self
                .gb
                .generators()
                .iter()
                .find(|g| g.leading_monomial().unwrap().divides(m))
                .expect("m is in the initial ideal");
            let shift = g.leading_monomial().unwrap().quotient_of(m).unwrap();
            let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
            for t in &g.terms()[1..] {
                for (k, c) in self.normal_form(&t.mono.mul(&shift)).iter() {
                    *acc.entry(*k).or_insert_with(Coeff::zero) -= &t.coeff * c;
                }
            }
            Rc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        };
        self.nf.borrow_mut().insert(m.clone(), v.clone());
        v
    }

    /// `z * m` for a standard monomial `m`, over the standard monomials of
    /// the next degree.
    fn multiply(&self, form: &[Coeff], m: &Monomial) -> BTreeMap<usize, Coeff> {
        let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (k, a) in form.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (idx, c) in self.normal_form(&m.mul_var(k)).iter() {
                *acc.entry(*idx).or_insert_with(Coeff::zero) += a * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormProvenance {
    GenericRandom(u64),
    LastVariables,
    Variables,
    Explicit,
}

/// Linearly independent linear forms, each stored as its coefficient vector
/// on `x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormSequence {
    n: usize,
    forms: Vec<Vec<Coeff>>,
    provenance: FormProvenance,
}

impl LinearFormSequence {
    pub fn explicit(n: usize, forms: Vec<Vec<Coeff>>) -> Result<Self> {
        if let Some(bad) = forms.iter().find(|f| f.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        if linalg::rank(&forms) < forms.len() {
            return Err(Error::DependentForms);
        }
        Ok(LinearFormSequence { n, forms, provenance: FormProvenance::Explicit })
    }

    fn unit(n: usize, k: usize) -> Vec<Coeff> {
        (0..n).map(|j| if j == k { Coeff::one() } else { Coeff::zero() }).collect()
    }

    /// `x_1, ..., x_n`.
    pub fn variables(n: usize) -> Self {
        LinearFormSequence {
            n,
            forms: (0..n).map(|k| Self::unit(n, k)).collect(),
            provenance: FormProvenance::Variables,
        }
    }

    /// `x_n, x_{n-1}, ..., x_{n-p+1}`: every prefix is a set of last variables.
    pub fn last_variables(n: usize, p: usize) -> Self {
        let forms = (0..p.min(n)).map(|k| Self::unit(n, n - 1 - k)).collect();
        LinearFormSequence { n, forms, provenance: FormProvenance::LastVariables }
    }

    /// `p` random forms with integer coefficients in `[-FORM_BOUND, FORM_BOUND]`.
    pub fn generic(n: usize, p: usize, seed: u64) -> Result<Self> {
        if p > n {
            return Err(Error::OutOfRange(format!("{p} forms in {n} variables")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..crate::coords::MAX_REDRAWS {
            let forms: Vec<Vec<Coeff>> = (0..p)
                .map(|_| {
                    (0..n).map(|_| Coeff::from_integer(rng.random_range(-FORM_BOUND..=FORM_BOUND).into())).collect()
                })
                .collect();
            if linalg::rank(&forms) == p {
                return Ok(LinearFormSequence { n, forms, provenance: FormProvenance::GenericRandom(seed) });
            }
        }
        Err(Error::RedrawLimit(crate::coords::MAX_REDRAWS))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[Vec<Coeff>] {
        &self.forms
    }

    pub fn provenance(&self) -> &FormProvenance {
        &self.provenance
    }

    /// The first `p` forms.
    pub fn prefix(&self, p: usize) -> LinearFormSequence {
        LinearFormSequence {
            n: self.n,
            forms: self.forms[..p.min(self.len())].to_vec(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_polynomials(&self, order: &TermOrder) -> Vec<Polynomial> {
        self.forms
            .iter()
            .map(|f| {
                Polynomial::from_terms(
                    self.n,
                    order.clone(),
                    f.iter().enumerate().map(|(k, c)| (c.clone(), Monomial::var(self.n, k))),
                )
            })
            .collect()
    }
}

/// The Koszul complex `K(z_1..z_p; R/I)` with its strands and cached ranks.
pub struct KoszulComplex<'a> {
    ring: &'a QuotientRing,
    forms: LinearFormSequence,
    // subsets[i]: bitmasks of the i-subsets of {0..p}, and their positions.
    subsets: Vec<Vec<u32>>,
    positions: Vec<HashMap<u32, usize>>,
    ranks: RefCell<HashMap<(u32, u32), usize>>,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(ring: &'a QuotientRing, forms: LinearFormSequence) -> Result<Self> {
        if forms.n() != ring.n() {
            return Err(Error::DimensionMismatch { expected: ring.n(), found: forms.n() });
        }
        let p = forms.len();
        let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); p + 1];
        for mask in 0u32..(1 << p) {
            subsets[mask.count_ones() as usize].push(mask);
        }
        let positions = subsets.iter().map(|s| s.iter().enumerate().map(|(k, &m)| (m, k)).collect()).collect();
        Ok(KoszulComplex { ring, forms, subsets, positions, ranks: RefCell::default() })
    }

    pub fn p(&self) -> u32 {
        self.forms.len() as u32
    }

    /// `dim K_{i,j}`.
    pub fn strand_dim(&self, i: u32, j: u32) -> usize {
        if i > self.p() || j < i {
            return 0;
        }
        binomial(u64::from(self.p()), u64::from(i)) as usize * self.ring.dim(j - i)
    }

    fn column(&self, i: u32, mask: u32, mono_index: usize, j: u32) -> usize {
        self.positions[i as usize][&mask] * self.ring.dim(j - i) + mono_index
    }

    /// Rows of `phi_i : K_{i,j} -> K_{i-1,j}`, one per basis element
    /// `e_S (x) m`, ordered by subset then standard monomial.
    pub fn differential_rows(&self, i: u32, j: u32) -> Vec<SparseRow> {
        if i == 0 || i > self.p() || j < i {
            return Vec::new();
        }
        let monos = self.ring.std_basis(j - i);
        let mut rows = Vec::with_capacity(self.strand_dim(i, j));
        for &mask in &self.subsets[i as usize] {
            for m in &monos.monos {
                rows.push(self.apply(i, mask, m, j));
            }
        }
        rows
    }

    fn apply(&self, i: u32, mask: u32, m: &Monomial, j: u32) -> SparseRow {
        let mut row: BTreeMap<usize, Coeff> = BTreeMap::new();
        let members: Vec<usize> = (0..self.forms.len()).filter(|&s| mask >> s & 1 == 1).collect();
        for (t, &s) in members.iter().enumerate() {
            let sign = if t % 2 == 0 { Coeff::one() } else { -Coeff::one() };
            for (k, c) in self.ring.multiply(&self.forms.forms()[s], m) {
                let col = self.column(i - 1, mask & !(1 << s), k, j);
                *row.entry(col).or_insert_with(Coeff::zero) += &sign * c;
            }
        }
        row.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Rank of `phi_i` in internal degree `j`.
    pub fn rank(&self, i: u32, j: u32) -> usize {
        if i == 0 || i > self.p() || j < i {
            return 0;
        }
        if let Some(&r) = self.ranks.borrow().get(&(i, j)) {
            return r;
        }
        let rows = self.differential_rows(i, j);
        let r = linalg::rank_sparse(&rows, self.strand_dim(i - 1, j));
        self.ranks.borrow_mut().insert((i, j), r);
        r
    }

    /// `dim H_i(z; R/I)_j`.
    pub fn betti(&self, i: u32, j: u32) -> u64 {
        let dim = self.strand_dim(i, j);
        if dim == 0 {
            return 0;
        }
        (dim - self.rank(i, j) - self.rank(i + 1, j)) as u64
    }

    /// All `beta_ij` for `j <= j_bound`.
    pub fn table(&self, j_bound: u32) -> BettiTable {
        let mut t = BettiTable::new();
        for i in 0..=self.p() {
            for j in i..=j_bound {
                t.set(i, j, self.betti(i, j));
            }
        }
        t
    }

    /// Cycles of `phi_i` in degree `j`, as coordinate vectors on `K_{i,j}`.
    pub fn cycles(&self, i: u32, j: u32) -> Vec<Vec<Coeff>> {
        let dim = self.strand_dim(i, j);
        if dim == 0 {
            return Vec::new();
        }
        if i == 0 {
            return (0..dim)
                .map(|k| (0..dim).map(|c| if c == k { Coeff::one() } else { Coeff::zero() }).collect())
                .collect();
        }
        linalg::left_kernel(&self.differential_rows(i, j), self.strand_dim(i - 1, j))
    }

    /// Multiply a chain in `K_{i,j}` by a linear form; lands in `K_{i,j+1}`.
    fn multiply_chain(&self, form: &[Coeff], i: u32, j: u32, chain: &[Coeff]) -> SparseRow {
        let monos = self.ring.std_basis(j - i);
        let width = monos.monos.len();
        let mut out: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (pos, c) in chain.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (si, mi) = (pos / width, pos % width);
            let mask = self.subsets[i as usize][si];
            for (k, v) in self.ring.multiply(form, &monos.monos[mi]) {
                let col = self.column(i, mask, k, j + 1);
                *out.entry(col).or_insert_with(Coeff::zero) += c * v;
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// `beta_ijp(R/I)` for the given forms (`p` = number of forms).
pub fn koszul_betti(ring: &QuotientRing, forms: &LinearFormSequence, i: u32, j: u32) -> Result<u64> {
    Ok(KoszulComplex::new(ring, forms.clone())?.betti(i, j))
}

/// Tensor for the prefixes `p = 0..=p_max` of one form sequence.
pub fn koszul_tensor_for(
    ring: &QuotientRing,
    forms: &LinearFormSequence,
    p_max: usize,
    j_bound: u32,
) -> Result<KoszulBettiTensor> {
    let slices: Vec<BettiTable> =
        (0..=p_max).map(|p| Ok(KoszulComplex::new(ring, forms.prefix(p))?.table(j_bound))).collect::<Result<_>>()?;
    Ok(KoszulBettiTensor::from_slices(ring.n(), j_bound, &slices))
}

/// Seeds of the two form sequences used by [`koszul_betti_tensor`].
pub fn form_seeds(seed: u64) -> [u64; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b6f_737a_756c);
    [rng.next_u64(), rng.next_u64()]
}

/// Koszul-Betti tensor for generic forms, certified by agreement of two
/// independently seeded form sequences. Nonzero positive homology at
/// `j_bound` is reported as an insufficient bound.
pub fn koszul_betti_tensor(
    n: usize,
    gens: &[Polynomial],
    p_max: usize,
    seed: u64,
    j_bound: u32,
) -> Result<KoszulBettiTensor> {
    if p_max > n {
        return Err(Error::OutOfRange(format!("p_max = {p_max} exceeds n = {n}")));
    }
    let ring = QuotientRing::new(n, gens)?;
    let [s1, s2] = form_seeds(seed);
    let a = koszul_tensor_for(&ring, &LinearFormSequence::generic(n, p_max, s1)?, p_max, j_bound)?;
    let b = koszul_tensor_for(&ring, &LinearFormSequence::generic(n, p_max, s2)?, p_max, j_bound)?;
    if a != b {
        return Err(Error::KoszulGenericity(s1, s2));
    }
    audit_bound(&a)?;
    Ok(a)
}

fn audit_bound(t: &KoszulBettiTensor) -> Result<()> {
    if let Some(((i, j, p), _)) = t.entries().find(|((i, j, _), _)| *i > 0 && *j == t.j_bound()) {
        return Err(Error::BoundTooSmall {
            bound: j,
            reason: format!("beta_{{{i},{j},{p}}} is nonzero at the degree bound"),
        });
    }
    Ok(())
}

/// Default strand bound: largest generator degree + n + 1.
pub fn default_j_bound(n: usize, gens: &[Polynomial]) -> u32 {
    gens.iter().filter_map(Polynomial::homogeneous_degree).max().unwrap_or(0) + n as u32 + 1
}

/// Graded Betti numbers of `R/I` through degree `j_bound`.
pub fn graded_betti_upto(n: usize, gens: &[Polynomial], j_bound: u32) -> Result<BettiTable> {
    let ring = QuotientRing::new(n, gens)?;
    Ok(KoszulComplex::new(&ring, LinearFormSequence::variables(n))?.table(j_bound))
}

/// Graded Betti numbers of `R/I`. The degree range comes from the Taylor
/// bound `j <= n * D` on the revlex initial ideal (generated in degrees
/// `<= D`), whose Betti numbers dominate those of `I`.
pub fn graded_betti(n: usize, gens: &[Polynomial]) -> Result<BettiTable> {
    let ring = QuotientRing::new(n, gens)?;
    let j_bound = (n as u32 * ring.max_generator_degree()).max(1);
    Ok(KoszulComplex::new(&ring, LinearFormSequence::variables(n))?.table(j_bound))
}

/// Row `i` of the graded Betti table, for `j <= j_max`.
pub fn betti_row(n: usize, gens: &[Polynomial], i: u32, j_max: u32) -> Result<BettiTable> {
    let ring = QuotientRing::new(n, gens)?;
    let k = KoszulComplex::new(&ring, LinearFormSequence::variables(n))?;
    let mut t = BettiTable::new();
    for j in 0..=j_max {
        t.set(i, j, k.betti(i, j));
    }
    Ok(t)
}

/// Componentwise linearity by definition: for `k` from the initial degree
/// through `k_max`, the ideal generated by `I_k` has a linear resolution.
/// `k_max` must be at least the regularity of `I` (for instance the largest
/// generator degree of its revlex gin).
pub fn is_componentwise_linear_by_definition(n: usize, gens: &[Polynomial], k_max: u32) -> Result<bool> {
    let mut g = GradedIdeal::new(n, gens)?;
    for k in 0..=k_max {
        let basis = g.space(k).basis();
        if basis.is_empty() {
            continue;
        }
        let t = graded_betti(n, &basis)?;
        if t.entries().any(|((i, j), _)| i >= 1 && j != i + k - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `z_{q+1}` kills `H_i(z_1..z_q; R/I)` for every `q < p` and
/// `i > 0`, checked in degrees `<= j_bound`.
pub fn is_proper_sequence(ring: &QuotientRing, forms: &LinearFormSequence, j_bound: u32) -> Result<bool> {
    Ok(first_improper(ring, forms, j_bound)?.is_none())
}

/// The first `(q, i, j)` where `z_{q+1} H_i(z_1..z_q)_j != 0`.
pub fn first_improper(
    ring: &QuotientRing,
    forms: &LinearFormSequence,
    j_bound: u32,
) -> Result<Option<(usize, u32, u32)>> {
    for q in 1..forms.len() {
        let k = KoszulComplex::new(ring, forms.prefix(q))?;
        let next = &forms.forms()[q];
        for i in 1..=q as u32 {
            for j in i..j_bound {
                if k.betti(i, j) == 0 {
                    continue;
                }
                let boundaries = k.differential_rows(i + 1, j + 1);
                let width = k.strand_dim(i, j + 1);
                let base = linalg::rank_sparse(&boundaries, width);
                let mut all = boundaries;
                all.extend(k.cycles(i, j).iter().map(|c| k.multiply_chain(next, i, j, c)));
                if linalg::rank_sparse(&all, width) != base {
                    return Ok(Some((q, i, j)));
                }
            }
        }
    }
    Ok(None)
}

/// The splitting recursions satisfied by the tensor of a proper sequence:
/// `b_1jp = b_1j(p-1) + b_0(j-1)(p-1) - b_0j(p-1) + b_0jp` and
/// `b_ijp = b_ij(p-1) + b_(i-1)(j-1)(p-1)` for `i > 1`.
pub fn recursion_check(t: &KoszulBettiTensor) -> bool {
    recursion_violation(t).is_none()
}

pub fn recursion_violation(t: &KoszulBettiTensor) -> Option<(u32, u32, u32)> {
    for p in 1..=t.p_max() {
        for j in 1..=t.j_bound() {
            let lhs = t.get(1, j, p) as i128;
            let rhs = t.get(1, j, p - 1) as i128 + t.get(0, j - 1, p - 1) as i128 - t.get(0, j, p - 1) as i128
                + t.get(0, j, p) as i128;
            if lhs != rhs {
                return Some((1, j, p));
            }
            for i in 2..=p {
                if t.get(i, j, p) != t.get(i, j, p - 1) + t.get(i - 1, j - 1, p - 1) {
                    return Some((i, j, p));
                }
            }
        }
    }
    None
}
