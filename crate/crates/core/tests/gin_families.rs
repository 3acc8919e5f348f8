use gins_core::abf::{betti_poset, construct, enumerate_gins, lex_member_is_closest, lex_proximity, UpperPart};
use gins_core::monomial::mono;
use gins_core::stable::lex_ideal_auto;
use gins_core::{Monomial, MonomialIdeal};

fn rows(d: &[(i64, Vec<u64>)]) -> Vec<Vec<u64>> {
    d.iter().map(|(_, r)| r.clone()).collect()
}

fn ideal(n: usize, a: &[Monomial], extra: &[Monomial]) -> MonomialIdeal {
    MonomialIdeal::new(n, a.iter().chain(extra).cloned()).unwrap()
}

#[test]
fn four_variable_family() {
    let n = 4;
    let t = vec![mono(n, &[(1, 1), (3, 2)]), mono(n, &[(2, 2), (4, 1)])];
    let c = construct(n, &t, &[vec![0, 1]], UpperPart::XR1).unwrap();
    let fam = enumerate_gins(&c.ideal).unwrap();
    assert_eq!(fam.members.len(), 2);
    let g1 = ideal(n, &c.a, &[mono(n, &[(1, 1), (3, 2)]), mono(n, &[(2, 2), (4, 2)])]);
    let g2 =
        ideal(n, &c.a, &[mono(n, &[(2, 2), (4, 1)]), mono(n, &[(1, 1), (3, 3)]), mono(n, &[(1, 1), (3, 2), (4, 1)])]);
    let (i1, i2) = (fam.find(&g1).unwrap(), fam.find(&g2).unwrap());
    assert_eq!(fam.revlex, i1);
    assert_eq!(fam.lex, i1);
    assert_eq!(rows(&fam.members[i1].betti.diagram()), vec![vec![10, 17, 10, 2], vec![1, 3, 3, 1]]);
    assert_eq!(rows(&fam.members[i2].betti.diagram()), vec![vec![10, 18, 12, 3], vec![2, 5, 4, 1]]);
    let poset = betti_poset(&fam);
    assert_eq!(poset.minimum, Some(i1));
    assert_eq!(poset.maximum, Some(i2));
    let lex = lex_ideal_auto(&g1).unwrap();
    let prox = lex_proximity(&fam, &lex, 6);
    assert!(lex_member_is_closest(&fam, &prox));
}

#[test]
fn seven_variable_family() {
    let n = 7;
    let t = vec![
        mono(n, &[(1, 1), (3, 1), (6, 2)]),
        mono(n, &[(2, 2), (3, 1), (7, 1)]),
        mono(n, &[(1, 1), (4, 2), (6, 1)]),
        mono(n, &[(2, 2), (4, 2)]),
    ];
    let c = construct(n, &t, &[vec![0, 1], vec![2, 3]], UpperPart::XR1).unwrap();
    assert_eq!(c.a.len(), 62);
    let mut extra: Vec<String> = c.extra.iter().map(|m| m.to_string()).collect();
    extra.sort();
    let mut want = vec!["x1*x4^2*x6*x7", "x2^2*x3*x7^2", "x1*x4^2*x6^2"];
    want.sort();
    assert_eq!(extra, want);
    let fam = enumerate_gins(&c.ideal).unwrap();
    assert_eq!(fam.members.len(), 3);
    let diagrams: Vec<Vec<Vec<u64>>> = fam.members.iter().map(|m| rows(&m.betti.diagram())).collect();
    let g1 = vec![vec![64, 240, 397, 363, 190, 53, 6], vec![3, 17, 40, 50, 35, 13, 2]];
    let g2 = vec![vec![64, 242, 404, 372, 195, 54, 6], vec![5, 24, 49, 55, 36, 13, 2]];
    let g3 = vec![vec![64, 241, 402, 373, 200, 58, 7], vec![4, 22, 50, 60, 40, 14, 2]];
    assert_eq!(diagrams[fam.revlex], g1);
    assert_eq!(diagrams[fam.lex], g2);
    let i3 = diagrams.iter().position(|d| *d == g3).unwrap();
    let poset = betti_poset(&fam);
    assert_eq!(poset.minimum, Some(fam.revlex));
    assert_eq!(poset.maximum, None);
    let mut maximal = poset.maximal.clone();
    maximal.sort();
    let mut want = vec![fam.lex, i3];
    want.sort();
    assert_eq!(maximal, want);
    // in f1 = x2^2 x3 x7 together with in f2 = x1 x4^2 x6 is not realizable.
    let forbidden = [mono(n, &[(2, 2), (3, 1), (7, 1)]), mono(n, &[(1, 1), (4, 2), (6, 1)])];
    let inf = fam
        .infeasible
        .iter()
        .find(|s| forbidden.iter().all(|m| s.selection.iter().any(|(_, ms)| ms.contains(m))))
        .expect("forbidden selection is reported infeasible");
    assert!(inf.certificate.verify(&inf.cone));
}
