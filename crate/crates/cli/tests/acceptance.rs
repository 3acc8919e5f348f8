//! Acceptance suite: one line per criterion; nonzero exit on any failure
//! outside the documented conflicts.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use gins_cli::{run, Cli, Record};
use gins_core::corpus::{item_seeds, random_strongly_stable};
use gins_core::koszul::{graded_betti, koszul_tensor_for};
use gins_core::stable::{ah_koszul_betti_upto, ek_betti, is_strongly_stable};
use gins_core::{LinearFormSequence, QuotientRing, TermOrder};

type Outcome = Result<(), String>;

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn record(args: &[&str]) -> Result<Record, String> {
    let cli = Cli::try_parse_from(std::iter::once("gins").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    run(cli).map_err(|e| format!("{}: {e}", args.join(" ")))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every check line passed, the verdict field agrees, and the named checks
/// are present.
fn all_checks_pass(r: &Record, required: &[&str]) -> Outcome {
    let failed: Vec<&str> = r.checks().filter(|c| !c.contains(": pass")).collect();
    ensure(failed.is_empty() && !r.failed(), || format!("failed checks: {failed:?}"))?;
    for name in required {
        ensure(r.checks().any(|c| c.starts_with(&format!("{name}: pass"))), || format!("missing check `{name}`"))?;
    }
    Ok(())
}

fn field<'a>(r: &'a Record, key: &str) -> Result<&'a str, String> {
    r.get(key).ok_or_else(|| format!("record has no `{key}`"))
}

/// Diagram text whose first row is `j - i = first`.
fn diagram(first: usize, rows: &[&[u64]]) -> String {
    let mut s = String::new();
    for (k, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        s.push_str(&format!("row j-i={}: {}\n", k + first, cells.join(" ")));
    }
    s
}

/// The family record lists exactly the given diagrams, in any order.
fn family_diagrams(r: &Record, expected: &[String]) -> Outcome {
    let count: usize = field(r, "gins")?.parse().map_err(|_| "bad gins count".to_string())?;
    ensure(count == expected.len(), || format!("{count} gins, expected {}", expected.len()))?;
    let mut found: Vec<String> =
        (0..count).map(|k| field(r, &format!("gin {k} diagram")).map(str::to_string)).collect::<Result<_, _>>()?;
    let mut want = expected.to_vec();
    found.sort();
    want.sort();
    ensure(found == want, || format!("diagrams {found:?}"))
}

/// Aggregated campaign checks `name: pass (k/k)` with `k >= min`.
fn campaign(r: &Record, required: &[&str], min: usize) -> Outcome {
    all_checks_pass(r, required)?;
    ensure(field(r, "verdict")? == "pass", || "campaign verdict is not pass".into())?;
    for name in required {
        let line = r.checks().find(|c| c.starts_with(&format!("{name}: "))).expect("checked above");
        let count = line
            .rsplit('(')
            .next()
            .and_then(|t| t.split('/').next())
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| format!("no item count in `{line}`"))?;
        ensure(count >= min, || format!("`{name}` ran on {count} items, need {min}"))?;
    }
    Ok(())
}

fn four_variable() -> Outcome {
    let r = record(&["reproduce", "5.7"])?;
    all_checks_pass(&r, &["exactly two gins", "G1 diagram", "G2 diagram"])?;
    family_diagrams(
        &r,
        &[diagram(2, &[&[10, 17, 10, 2], &[1, 3, 3, 1]]), diagram(2, &[&[10, 18, 12, 3], &[2, 5, 4, 1]])],
    )
}

fn seven_variable() -> Outcome {
    let r = record(&["reproduce", "5.8"])?;
    all_checks_pass(
        &r,
        &[
            "exactly three gins",
            "G2 and G3 are the maximal elements",
            "G2 and G3 are incomparable",
            "no gin has the largest Betti numbers",
            "forbidden selection certified infeasible",
        ],
    )?;
    family_diagrams(
        &r,
        &[
            diagram(3, &[&[64, 240, 397, 363, 190, 53, 6], &[3, 17, 40, 50, 35, 13, 2]]),
            diagram(3, &[&[64, 242, 404, 372, 195, 54, 6], &[5, 24, 49, 55, 36, 13, 2]]),
            diagram(3, &[&[64, 241, 402, 373, 200, 58, 7], &[4, 22, 50, 60, 40, 14, 2]]),
        ],
    )?;
    ensure(field(&r, "maximum")? == "none", || "a maximum was reported".into())?;
    ensure(field(&r, "maximal")?.split(' ').count() == 2, || "expected two maximal gins".into())
}

fn degree_two() -> Outcome {
    let r = record(&["reproduce", "5.5"])?;
    all_checks_pass(
        &r,
        &[
            "exactly two gins",
            "Buchberger gin under witness of gin 0 matches",
            "Buchberger gin under witness of gin 1 matches",
        ],
    )?;
    let mut members: Vec<String> =
        (0..2).map(|k| field(&r, &format!("gin {k} ideal")).map(str::to_string)).collect::<Result<_, _>>()?;
    members.sort();
    let want = ["x1^2\nx1*x2\nx1*x3\n", "x1^2\nx1*x2\nx2^2\n"];
    ensure(members == want, || format!("members {members:?}"))
}

fn m_statistics_examples() -> Outcome {
    let a = record(&["reproduce", "4.6a"])?;
    all_checks_pass(&a, &["m22(I) = 2", "m22(L) = 1"])?;
    ensure(field(&a, "m22(I)")? == "2" && field(&a, "m22(L)")? == "1", || "m22 values".into())?;
    let b = record(&["reproduce", "4.6b"])?;
    let mi = field(&b, "m(I)")?;
    let ml = field(&b, "m(L)")?;
    let gotzmann = b.checks().any(|c| c == "growth definition: Gotzmann: pass");
    ensure(gotzmann, || "stable Gotzmann example fails the growth definition".into())?;
    ensure(mi == "[1, 2, 4]" && ml == "[1, 2, 4]", || {
        format!("stable Gotzmann example: expected m = [1, 2, 4] on I and L, computed m(I) = {mi}, m(L) = {ml}")
    })
}

fn formula_vs_homology() -> Outcome {
    let mut tested = 0;
    for (k, seed) in item_seeds(0xe4, 36).into_iter().enumerate() {
        let n = 2 + k % 3;
        let i = random_strongly_stable(n, 4, seed);
        ensure(is_strongly_stable(&i) && i.max_degree() <= 4, || format!("item {k} out of range"))?;
        let gens = i.to_polynomials(&TermOrder::Lex);
        let direct = graded_betti(n, &gens).map_err(|e| e.to_string())?;
        ensure(ek_betti(&i).map_err(|e| e.to_string())? == direct, || {
            format!("item {k}: closed formula differs from homology for {i}")
        })?;
        let ring = QuotientRing::from_monomial_ideal(&i).map_err(|e| e.to_string())?;
        let j_bound = i.max_degree() + n as u32;
        let tensor = koszul_tensor_for(&ring, &LinearFormSequence::last_variables(n, n), n, j_bound)
            .map_err(|e| e.to_string())?;
        for p in 0..=n {
            let formula = ah_koszul_betti_upto(&i, p, j_bound).map_err(|e| e.to_string())?;
            for ii in 0..=p as u32 {
                for j in 0..=j_bound {
                    let (a, b) = (formula.get(ii, j), tensor.get(ii, j, p as u32));
                    ensure(a == b, || format!("item {k} ({i}): beta_{{{ii},{j},{p}}} formula {a} vs homology {b}"))?;
                }
            }
        }
        tested += 1;
    }
    ensure(tested >= 30, || format!("only {tested} ideals"))
}

fn koszul_bounds() -> Outcome {
    let r = record(&["verify", "T4.2", "--corpus-size", "30", "--n", "3", "--maxdeg", "3"])?;
    campaign(
        &r,
        &[
            "beta_ijp(I) <= beta_ijp(lex gin)",
            "beta_ijp(I) <= beta_ijp(revlex gin)",
            "beta_ijp(I) <= beta_ijp(lex ideal)",
        ],
        30,
    )
}

fn equivalences() -> Outcome {
    let a = record(&["verify", "T4.4"])?;
    campaign(
        &a,
        &[
            "componentwise linear: tensor, beta_1jn, definition, proper sequence agree",
            "recursion holds exactly for proper sequences",
        ],
        24,
    )?;
    let b = record(&["verify", "T4.5"])?;
    campaign(&b, &["Gotzmann: tensor, beta_1jn, growth definition, beta_0jp + linearity agree"], 24)
}

fn m_statistics() -> Outcome {
    let r = record(&["verify", "P4.1", "--corpus-size", "100"])?;
    campaign(
        &r,
        &[
            "m_leq(L_j) <= m_leq(I_j)",
            "beta_ij(I) <= beta_ij(L)",
            "beta_ijp(I) <= beta_ijp(L)",
            "m_i(R_1 B) = m_leq_i(B)",
        ],
        100,
    )
}

fn revlex_minimal() -> Outcome {
    let r = record(&["verify", "T5.1", "--corpus-size", "20"])?;
    campaign(&r, &["revlex gin has the smallest Betti table", "revlex gin has the smallest Koszul-Betti tensor"], 23)
}

fn abf_linear() -> Outcome {
    let r = record(&["verify", "P5.9", "--corpus-size", "20"])?;
    campaign(&r, &["beta_1j(I) = beta_1j(revlex gin)"], 23)
}

/// Criteria whose pinned values contradict the definitions they rest on.
/// They still run and print [FAIL]; only an unlisted failure, or a listed
/// criterion that starts passing, fails the target.
const KNOWN_CONFLICTS: &[(usize, &str)] = &[(
    4,
    "the pinned m-vector (1, 2, 4) disagrees with counting minimal generators by largest variable index, \
     which gives (1, 3, 3) on both ideals; every other part of the criterion holds",
)];

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("four-variable family: two gins with pinned diagrams", Duration::from_secs(10), four_variable),
        ("seven-variable family: three gins, poset, infeasible selection", Duration::from_secs(60), seven_variable),
        ("degree-two space: two gins, Buchberger cross-check", Duration::from_secs(5), degree_two),
        (
            "m-statistics examples: m22 values, Gotzmann non-lex m-vectors",
            Duration::from_secs(5),
            m_statistics_examples,
        ),
        ("closed formulas equal direct Koszul homology", Duration::from_secs(600), formula_vs_homology),
        ("Koszul-Betti bounds under gins and lex", Duration::from_secs(900), koszul_bounds),
        ("componentwise-linear and Gotzmann equivalences", Duration::from_secs(900), equivalences),
        ("m-statistics inequalities on 100 stable ideals", Duration::from_secs(300), m_statistics),
        ("revlex gin is the Betti minimum of each family", Duration::from_secs(600), revlex_minimal),
        ("almost Borel-fixed ideals are componentwise linear", Duration::from_secs(300), abf_linear),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let number = k + 1;
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > *limit {
            outcome = Err(format!("exceeded the {} s budget", limit.as_secs()));
        }
        let conflict = KNOWN_CONFLICTS.iter().find(|(n, _)| *n == number);
        match (outcome, conflict) {
            (Ok(()), None) => {
                passed += 1;
                println!("[PASS] {number:>2} {name} ({:.1} s)", elapsed.as_secs_f64());
            }
            (Ok(()), Some(_)) => {
                passed += 1;
                unexpected += 1;
                println!(
                    "[PASS] {number:>2} {name} ({:.1} s): listed as a known conflict, update the list",
                    elapsed.as_secs_f64()
                );
            }
            (Err(why), conflict) => {
                unexpected += usize::from(conflict.is_none());
                println!("[FAIL] {number:>2} {name} ({:.1} s): {why}", elapsed.as_secs_f64());
                if let Some((_, reason)) = conflict {
                    println!("       known conflict: {reason}");
                }
            }
        }
    }
    println!("{passed} of {} criteria passed", criteria.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
