//! Worked examples rebuilt from their inputs and compared against pinned
//! data. Every comparison is a `check` line; any failure makes the record
//! fail.

use clap::ValueEnum;
use gins_core::abf::{
    betti_poset, construct, enumerate_gins, lex_member_is_closest, lex_proximity, recognize, Construction, GinFamily,
    UpperPart,
};
use gins_core::monomial::mono;
use gins_core::stable::{
    hilbert_function, is_gotzmann_by_growth, is_gotzmann_stable, is_strongly_stable, lex_ideal_auto,
    lex_ideal_from_dims, m_statistics,
};
use gins_core::{gin, Error, GinOptions, Monomial, MonomialIdeal, Polynomial, TermOrder, Tiebreak};

use crate::commands::{family_fields, monomial_block};
use crate::parse::{format_ideal, parse_ideal, IdealFile};
use crate::record::Record;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleId {
    /// Borel-fixed ideal whose m_ij exceed those of its lex ideal.
    #[value(name = "4.6a")]
    MijExceedsLex,
    /// Borel-fixed Gotzmann ideal that is not lex.
    #[value(name = "4.6b")]
    GotzmannNotLex,
    /// Degree-two almost Borel-fixed space with two gins.
    #[value(name = "5.5")]
    DegreeTwoSpace,
    /// Four-variable family: the lex gin is not the largest.
    #[value(name = "5.7")]
    FourVariableFamily,
    /// Seven-variable family: no gin with largest Betti numbers.
    #[value(name = "5.8")]
    SevenVariableFamily,
}

pub fn reproduce(id: ExampleId) -> Result<Record, CliError> {
    let name = id.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut r = Record::new(&format!("reproduce {name}"));
    match id {
        ExampleId::MijExceedsLex => mij_exceeds_lex(&mut r)?,
        ExampleId::GotzmannNotLex => gotzmann_not_lex(&mut r)?,
        ExampleId::DegreeTwoSpace => degree_two_space(&mut r)?,
        ExampleId::FourVariableFamily => four_variable_family(&mut r)?,
        ExampleId::SevenVariableFamily => seven_variable_family(&mut r)?,
    }
    r.field("verdict", if r.failed() { "mismatch" } else { "ok" });
    Ok(r)
}

fn vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Monomials written as `x1^2*x3`, one per list entry.
fn monomials(n: usize, list: &[&str]) -> Vec<Monomial> {
    let text = format!("vars: {}\n{}\n", vars(n).join(" "), list.join("\n"));
    parse_ideal(&text)
        .expect("pinned monomials parse")
        .gens
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect()
}

fn input_field(r: &mut Record, n: usize, gens: &[Polynomial]) {
    r.field("input", format_ideal(&IdealFile { vars: vars(n), gens: gens.to_vec() }));
}

fn ideal(n: usize, list: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(n, monomials(n, list)).expect("same ring")
}

fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}

fn rows(t: &gins_core::BettiTable) -> Vec<Vec<u64>> {
    t.diagram().into_iter().map(|(_, r)| r).collect()
}

fn m_prefix(i: &MonomialIdeal) -> Vec<u64> {
    let s = m_statistics(i, 0);
    (1..=i.n()).map(|k| s.m(k)).collect()
}

fn mij_exceeds_lex(r: &mut Record) -> Result<(), CliError> {
    let n = 3;
    let cube: Vec<String> = Monomial::all_of_degree(n, 3).iter().map(|m| m.to_string()).collect();
    let cube: Vec<&str> = cube.iter().map(String::as_str).collect();
    let i = ideal(n, &[&["x1^2", "x1*x2", "x2^2"], cube.as_slice()].concat());
    let want_l = ideal(n, &[&["x1^2", "x1*x2", "x1*x3"], cube.as_slice()].concat());
    let l = lex_ideal_auto(&i)?;
    r.field("ideal", monomial_block(&i, &vars(n))).field("lex", monomial_block(&l, &vars(n)));
    r.check("ideal is strongly stable", is_strongly_stable(&i), "");
    r.check("lex ideal", l == want_l, format!("computed {l}"));
    let bound = l.max_degree().max(i.max_degree()) + 1;
    let (si, sl) = (m_statistics(&i, bound), m_statistics(&l, bound));
    r.field("m22(I)", si.m_ij(2, 2)).field("m22(L)", sl.m_ij(2, 2));
    r.check("m22(I) = 2", si.m_ij(2, 2) == 2, "");
    r.check("m22(L) = 1", sl.m_ij(2, 2) == 1, "");
    let dominated = (0..=n).all(|k| (0..=bound).all(|j| sl.m_leq(k, j) <= si.m_leq(k, j)));
    r.check("m_leq(L_j) <= m_leq(I_j) for all i, j", dominated, "");
    Ok(())
}

fn gotzmann_not_lex(r: &mut Record) -> Result<(), CliError> {
    let n = 3;
    let i = ideal(n, &["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x2^3", "x2^2*x3"]);
    let want_l = ideal(n, &["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3"]);
    let l = lex_ideal_auto(&i)?;
    r.field("ideal", monomial_block(&i, &vars(n))).field("lex", monomial_block(&l, &vars(n)));
    r.check("ideal is strongly stable", is_strongly_stable(&i), "");
    r.check("lex ideal", l == want_l, format!("computed {l}"));
    r.check("ideal is not lex", i != l, "");
    let (mi, ml) = (m_prefix(&i), m_prefix(&l));
    r.field("m(I)", format!("{mi:?}")).field("m(L)", format!("{ml:?}"));
    r.check("m-vector criterion: Gotzmann", is_gotzmann_stable(&i)?, "");
    r.check("growth definition: Gotzmann", is_gotzmann_by_growth(n, &i.to_polynomials(&TermOrder::Lex))?, "");
    r.check("m_i(I) = m_i(L) for all i", mi == ml, "");
    let printed = vec![1, 2, 4];
    r.check(
        "printed values m = (1, 2, 4) on I and L",
        mi == printed && ml == printed,
        format!("definition gives m(I) = {mi:?}, m(L) = {ml:?}"),
    );
    Ok(())
}

fn gin_cross_check(
    r: &mut Record,
    label: &str,
    n: usize,
    gens: &[Polynomial],
    order: &TermOrder,
    want: &MonomialIdeal,
    through: Option<u32>,
) -> Result<(), CliError> {
    let opts = GinOptions { trials: 3, seed: 1, ..GinOptions::default() };
    let got = gin(n, gens, order, &opts)?;
    let agree = match through {
        Some(d) => (0..=d).all(|j| sorted(got.degree_part(j)) == sorted(want.degree_part(j))),
        None => &got == want,
    };
    r.check(&format!("Buchberger gin under {label} matches"), agree, format!("computed {got}"));
    Ok(())
}

fn degree_two_space(r: &mut Record) -> Result<(), CliError> {
    let n = 3;
    let text = "vars: x1 x2 x3\nx1^2\nx1*x2\nx1*x3 + x2^2\n";
    let gens = parse_ideal(text).expect("pinned input").gens;
    let abf = recognize(n, &gens, 2)?;
    let family = enumerate_gins(&abf)?;
    input_field(r, n, &gens);
    family_fields(r, &family, &vars(n));
    let revlex = ideal(n, &["x1^2", "x1*x2", "x2^2"]);
    let lex = ideal(n, &["x1^2", "x1*x2", "x1*x3"]);
    r.check("exactly two gins", family.members.len() == 2, "");
    r.check("revlex gin", family.revlex_member().ideal == revlex, "");
    r.check("lex gin", family.lex_member().ideal == lex, "");
    for (k, m) in family.members.iter().enumerate() {
        gin_cross_check(r, &format!("witness of gin {k}"), n, &gens, &m.witness_order(), &m.ideal, Some(2))?;
    }
    // One variable more: the degree-three part stops being almost Borel-fixed.
    let wider = parse_ideal("vars: x1 x2 x3 x4\nx1^2\nx1*x2\nx1*x3 + x2^2\n").expect("pinned input").gens;
    let verdict = recognize(4, &wider, 3);
    r.check(
        "with a fourth variable, degree 3 is not almost Borel-fixed",
        matches!(verdict, Err(Error::NotAlmostBorelFixed { degree: 3, .. })),
        "",
    );
    Ok(())
}

fn check_family_members(
    r: &mut Record,
    family: &GinFamily,
    pinned: &[(&str, &MonomialIdeal, Vec<Vec<u64>>)],
) -> Vec<Option<usize>> {
    pinned
        .iter()
        .map(|(label, want, diagram)| {
            let k = family.find(want);
            r.check(&format!("{label} is a gin"), k.is_some(), "");
            if let Some(k) = k {
                let got = rows(&family.members[k].betti);
                r.check(&format!("{label} diagram"), &got == diagram, format!("computed {got:?}"));
            }
            k
        })
        .collect()
}

fn four_variable_family(r: &mut Record) -> Result<(), CliError> {
    let n = 4;
    let t = vec![mono(n, &[(1, 1), (3, 2)]), mono(n, &[(2, 2), (4, 1)])];
    let c = construct(n, &t, &[vec![0, 1]], UpperPart::XR1)?;
    input_field(r, n, c.ideal.generators());
    let a_list = ["x1^3", "x1^2*x2", "x1^2*x3", "x1^2*x4", "x1*x2^2", "x1*x2*x3", "x1*x2*x4", "x2^3", "x2^2*x3"];
    r.check("monomial part A", sorted(c.a.clone()) == sorted(monomials(n, &a_list)), "");
    r.check("extra generators of B", c.extra == monomials(n, &["x2^2*x4^2"]), "");
    let family = enumerate_gins(&c.ideal)?;
    family_fields(r, &family, &vars(n));
    let g1 = ideal(n, &[&a_list[..], &["x1*x3^2", "x2^2*x4^2"]].concat());
    let g2 = ideal(n, &[&a_list[..], &["x2^2*x4", "x1*x3^3", "x1*x3^2*x4"]].concat());
    r.check("exactly two gins", family.members.len() == 2, "");
    let idx = check_family_members(
        r,
        &family,
        &[
            ("G1", &g1, vec![vec![10, 17, 10, 2], vec![1, 3, 3, 1]]),
            ("G2", &g2, vec![vec![10, 18, 12, 3], vec![2, 5, 4, 1]]),
        ],
    );
    r.check("revlex gin is G1", Some(family.revlex) == idx[0], "");
    r.check("lex gin is G1", Some(family.lex) == idx[0], "");
    let w = TermOrder::weight_from_ints(&[6, 5, 2, 1], Tiebreak::RevLex)?;
    r.check("weight (6,5,2,1) selects G2", family.member_for(&c.ideal, &w) == idx[1], "");
    let poset = betti_poset(&family);
    r.check("G1 has the smallest Betti numbers", poset.minimum == idx[0], "");
    r.check("G2 has the largest Betti numbers", poset.maximum == idx[1], "");
    let lex = lex_ideal_auto(&family.lex_member().ideal)?;
    let prox = lex_proximity(&family, &lex, lex.max_degree() + 1);
    r.check("lex gin is closest to the lex ideal", lex_member_is_closest(&family, &prox), "");
    let gens = c.generators().to_vec();
    gin_cross_check(r, "revlex", n, &gens, &TermOrder::RevLex, &g1, None)?;
    gin_cross_check(r, "lex", n, &gens, &TermOrder::Lex, &g1, None)?;
    gin_cross_check(r, "weight (6,5,2,1)", n, &gens, &w, &g2, None)?;
    Ok(())
}

const SEVEN_VARIABLE_A: [&str; 62] = [
    "x1^4",
    "x1^3*x2",
    "x1^3*x3",
    "x1^3*x4",
    "x1^3*x5",
    "x1^3*x6",
    "x1^3*x7",
    "x1^2*x2^2",
    "x1^2*x2*x3",
    "x1^2*x2*x4",
    "x1^2*x2*x5",
    "x1^2*x2*x6",
    "x1^2*x2*x7",
    "x1^2*x3^2",
    "x1^2*x3*x4",
    "x1^2*x3*x5",
    "x1^2*x3*x6",
    "x1^2*x3*x7",
    "x1^2*x4^2",
    "x1^2*x4*x5",
    "x1^2*x4*x6",
    "x1^2*x5^2",
    "x1^2*x5*x6",
    "x1^2*x6^2",
    "x1*x2^3",
    "x1*x2^2*x3",
    "x1*x2^2*x4",
    "x1*x2^2*x5",
    "x1*x2^2*x6",
    "x1*x2^2*x7",
    "x1*x2*x3^2",
    "x1*x2*x3*x4",
    "x1*x2*x3*x5",
    "x1*x2*x3*x6",
    "x1*x2*x3*x7",
    "x1*x2*x4^2",
    "x1*x2*x4*x5",
    "x1*x2*x4*x6",
    "x1*x2*x5^2",
    "x1*x2*x5*x6",
    "x1*x2*x6^2",
    "x1*x3^3",
    "x1*x3^2*x4",
    "x1*x3^2*x5",
    "x1*x3^2*x6",
    "x1*x3*x4^2",
    "x1*x3*x4*x5",
    "x1*x3*x4*x6",
    "x1*x3*x5^2",
    "x1*x3*x5*x6",
    "x1*x4^3",
    "x1*x4^2*x5",
    "x2^4",
    "x2^3*x3",
    "x2^3*x4",
    "x2^3*x5",
    "x2^3*x6",
    "x2^3*x7",
    "x2^2*x3^2",
    "x2^2*x3*x4",
    "x2^2*x3*x5",
    "x2^2*x3*x6",
];

fn seven_variable_family(r: &mut Record) -> Result<(), CliError> {
    let n = 7;
    let t = monomials(n, &["x1*x3*x6^2", "x2^2*x3*x7", "x1*x4^2*x6", "x2^2*x4^2"]);
    let c: Construction = construct(n, &t, &[vec![0, 1], vec![2, 3]], UpperPart::XR1)?;
    input_field(r, n, c.ideal.generators());
    r.check("monomial part A (62 monomials)", sorted(c.a.clone()) == sorted(monomials(n, &SEVEN_VARIABLE_A)), "");
    let extra_list = ["x1*x4^2*x6*x7", "x2^2*x3*x7^2", "x1*x4^2*x6^2"];
    r.check("extra generators of B", sorted(c.extra.clone()) == sorted(monomials(n, &extra_list)), "");
    let family = enumerate_gins(&c.ideal)?;
    family_fields(r, &family, &vars(n));
    let with_a = |more: &[&str]| ideal(n, &[&SEVEN_VARIABLE_A[..], more].concat());
    let g1 = with_a(&["x2^2*x4^2", "x1*x3*x6^2", "x1*x4^2*x6*x7", "x2^2*x3*x7^2", "x1*x4^2*x6^2"]);
    let g2 = with_a(&[
        "x1*x4^2*x6",
        "x1*x3*x6^2",
        "x2^2*x4^2*x7",
        "x2^2*x3*x7^2",
        "x2^2*x4^2*x6",
        "x2^2*x4^2*x5",
        "x2^2*x4^3",
    ]);
    let g3 = with_a(&["x2^2*x4^2", "x2^2*x3*x7", "x1*x4^2*x6*x7", "x1*x3*x6^2*x7", "x1*x4^2*x6^2", "x1*x3*x6^3"]);
    r.check("exactly three gins", family.members.len() == 3, "");
    let idx = check_family_members(
        r,
        &family,
        &[
            ("G1", &g1, vec![vec![64, 240, 397, 363, 190, 53, 6], vec![3, 17, 40, 50, 35, 13, 2]]),
            ("G2", &g2, vec![vec![64, 242, 404, 372, 195, 54, 6], vec![5, 24, 49, 55, 36, 13, 2]]),
            ("G3", &g3, vec![vec![64, 241, 402, 373, 200, 58, 7], vec![4, 22, 50, 60, 40, 14, 2]]),
        ],
    );
    r.check("revlex gin is G1", Some(family.revlex) == idx[0], "");
    r.check("lex gin is G2", Some(family.lex) == idx[1], "");
    let w = TermOrder::weight_from_ints(&[7, 6, 5, 4, 3, 2, 1], Tiebreak::RevLex)?;
    r.check("weight (7,...,1) selects G3", family.member_for(&c.ideal, &w) == idx[2], "");
    let poset = betti_poset(&family);
    let mut maximal = poset.maximal.clone();
    maximal.sort();
    let mut want: Vec<usize> = [idx[1], idx[2]].into_iter().flatten().collect();
    want.sort();
    r.check("G1 has the smallest Betti numbers", poset.minimum == idx[0], "");
    r.check("G2 and G3 are the maximal elements", maximal == want, "");
    let incomparable =
        matches!((idx[1], idx[2]), (Some(a), Some(b)) if poset.incomparable.contains(&(a.min(b), a.max(b))));
    r.check("G2 and G3 are incomparable", incomparable, "");
    r.check("no gin has the largest Betti numbers", poset.maximum.is_none(), "");
    r.field("largest", if poset.maximum.is_none() { "no maximum" } else { "maximum exists" });
    let forbidden = monomials(n, &["x2^2*x3*x7", "x1*x4^2*x6"]);
    let certified =
        family.infeasible.iter().find(|s| forbidden.iter().all(|m| s.selection.iter().any(|(_, ms)| ms.contains(m))));
    match certified {
        Some(s) => {
            r.field("forbidden-cone", s.cone.to_string());
            let mult: Vec<String> = s.certificate.multipliers().iter().map(|c| c.to_string()).collect();
            r.field("forbidden-certificate", mult.join(" "));
            r.check("forbidden selection certified infeasible", s.certificate.verify(&s.cone), "");
        }
        None => {
            r.check("forbidden selection certified infeasible", false, "selection not reported infeasible");
        }
    }
    let bound = family.members.iter().map(|m| m.ideal.max_degree()).max().unwrap_or(0) + 2;
    let lex = lex_ideal_from_dims(n, hilbert_function(&family.lex_member().ideal, bound).dims())?;
    let prox = lex_proximity(&family, &lex, bound);
    r.check(
        &format!("lex gin is closest to the lex ideal through degree {bound}"),
        lex_member_is_closest(&family, &prox),
        "",
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_lists_parse() {
        assert_eq!(monomials(7, &SEVEN_VARIABLE_A).len(), 62);
        assert_eq!(ideal(3, &["x1^2", "x1*x2"]).generators().len(), 2);
    }
}
