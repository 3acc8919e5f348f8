use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gins_core::abf::{betti_poset, enumerate_gins, recognize, GinFamily};
use gins_core::groebner::initial_ideal;
use gins_core::koszul::{default_j_bound, form_seeds, graded_betti, koszul_betti_tensor};
use gins_core::stable::{ek_betti, lex_ideal_auto};
use gins_core::{gin, Coeff, GinOptions, Monomial, MonomialIdeal, Polynomial, TermOrder};

use crate::parse::{format_polynomial, parse_ideal, IdealFile};
use crate::record::{betti_triples, sha256_hex, tensor_lines, Record};
use crate::reproduce::{reproduce, ExampleId};
use crate::verify::{verify, Claim, VerifyOptions};
use crate::{parse_order, CliError, SEED_ENV};

#[derive(Debug, Parser)]
#[command(name = "gins", version, about = "Generic initial ideals, lex ideals and Koszul-Betti numbers over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Direct Koszul homology (any homogeneous ideal).
    Koszul,
    /// Closed formula (strongly stable monomial ideals only).
    Ek,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti numbers of R/I.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Koszul)]
        method: Method,
    },
    /// Generic initial ideal under a term order.
    Gin {
        file: PathBuf,
        /// lex, revlex or weight:w1,...,wn
        #[arg(long, default_value = "revlex")]
        order: String,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Entries of the random coordinate changes lie in [-bound, bound].
        #[arg(long, default_value_t = 100)]
        bound: i64,
    },
    /// Lex-segment ideal with the Hilbert function of I.
    Lex { file: PathBuf },
    /// Koszul-Betti numbers beta_ijp for p = 0..=P with generic forms.
    KoszulBetti {
        file: PathBuf,
        /// Largest number of forms (defaults to n).
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        j_bound: Option<u32>,
    },
    /// All gins of an almost Borel-fixed ideal.
    Gins {
        file: PathBuf,
        /// Degree bound for the decomposition (defaults to the largest
        /// generator degree).
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Rebuild a worked example and compare against its pinned data.
    Reproduce {
        #[arg(value_enum)]
        id: ExampleId,
    },
    /// Run a seeded verification campaign.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long)]
        corpus_size: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        maxdeg: Option<u32>,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(cli: Cli) -> Result<Record, CliError> {
    match cli.command {
        Command::Betti { file, method } => cmd_betti(&file, method),
        Command::Gin { file, order, trials, seed, bound } => cmd_gin(&file, &order, trials, seed, bound),
        Command::Lex { file } => cmd_lex(&file),
        Command::KoszulBetti { file, p, seed, j_bound } => cmd_koszul_betti(&file, p, seed, j_bound),
        Command::Gins { file, bound } => cmd_gins(&file, bound),
        Command::Reproduce { id } => reproduce(id),
        Command::Verify { claim, corpus_size, n, maxdeg, seed } => {
            let mut opts = VerifyOptions::defaults(claim, seed);
            opts.corpus_size = corpus_size.unwrap_or(opts.corpus_size);
            opts.n = n.unwrap_or(opts.n);
            opts.maxdeg = maxdeg.unwrap_or(opts.maxdeg);
            verify(claim, &opts)
        }
    }
}

fn load(path: &Path) -> Result<(IdealFile, String), CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let file = parse_ideal(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    Ok((file, sha256_hex(text.as_bytes())))
}

fn header(command: &str, digest: &str, file: &IdealFile) -> Record {
    let mut r = Record::new(command);
    r.field("input-sha256", digest).field("vars", file.vars.join(" ")).field("generators", file.gens.len());
    r
}

pub(crate) fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    format_polynomial(&Polynomial::from_monomial(m.clone(), TermOrder::Lex), vars)
}

pub(crate) fn monomial_block(ideal: &MonomialIdeal, vars: &[String]) -> String {
    ideal.generators().iter().map(|m| format_monomial(m, vars) + "\n").collect()
}

/// Generators as monomials, when every generator is a single term.
fn as_monomial_ideal(file: &IdealFile) -> Result<Option<MonomialIdeal>, CliError> {
    if !file.gens.iter().all(|g| g.is_zero() || g.is_monomial()) {
        return Ok(None);
    }
    let monos = file.gens.iter().filter_map(|g| g.leading_monomial().cloned());
    Ok(Some(MonomialIdeal::new(file.n(), monos)?))
}

fn cmd_betti(path: &Path, method: Method) -> Result<Record, CliError> {
    let (file, digest) = load(path)?;
    let mut r = header("betti", &digest, &file);
    let table = match method {
        Method::Koszul => graded_betti(file.n(), &file.gens)?,
        Method::Ek => {
            let i = as_monomial_ideal(&file)?
                .ok_or_else(|| CliError::Usage("--method ek needs a monomial (strongly stable) ideal".into()))?;
            ek_betti(&i)?
        }
    };
    r.field("method", format!("{method:?}").to_lowercase());
    r.field("betti", betti_triples(&table));
    r.field("diagram", table.diagram_string());
    Ok(r)
}

fn cmd_gin(path: &Path, order: &str, trials: usize, seed: u64, bound: i64) -> Result<Record, CliError> {
    let (file, digest) = load(path)?;
    let n = file.n();
    let order = parse_order(order, n)?;
    let opts = GinOptions { trials, bound, seed, ..GinOptions::default() };
    let g = gin(n, &file.gens, &order, &opts)?;
    let mut r = header("gin", &digest, &file);
    r.field("order", &order).field("seed", seed).field("trials", trials);
    let trial_seeds: Vec<String> = opts.trial_seeds().iter().map(u64::to_string).collect();
    r.field("trial-seeds", trial_seeds.join(" "));
    r.field("gin-generators", g.generators().len());
    r.field("gin", monomial_block(&g, &file.vars));
    Ok(r)
}

fn cmd_lex(path: &Path) -> Result<Record, CliError> {
    let (file, digest) = load(path)?;
    let n = file.n();
    let initial = match as_monomial_ideal(&file)? {
        Some(i) => i,
        None => initial_ideal(n, &file.gens, &TermOrder::RevLex)?,
    };
    let l = lex_ideal_auto(&initial)?;
    let mut r = header("lex", &digest, &file);
    r.field("lex-generators", l.generators().len());
    r.field("lex", monomial_block(&l, &file.vars));
    Ok(r)
}

fn cmd_koszul_betti(path: &Path, p: Option<usize>, seed: u64, j_bound: Option<u32>) -> Result<Record, CliError> {
    let (file, digest) = load(path)?;
    let n = file.n();
    let p = p.unwrap_or(n);
    let j_bound = j_bound.unwrap_or_else(|| default_j_bound(n, &file.gens));
    let t = koszul_betti_tensor(n, &file.gens, p, seed, j_bound)?;
    let mut r = header("koszul-betti", &digest, &file);
    let [a, b] = form_seeds(seed);
    r.field("seed", seed).field("form-seeds", format!("{a} {b}")).field("p", p).field("j-bound", j_bound);
    r.field("tensor", tensor_lines(&t));
    Ok(r)
}

fn weights(w: &[Coeff]) -> String {
    w.iter().map(Coeff::to_string).collect::<Vec<_>>().join(",")
}

pub(crate) fn family_fields(r: &mut Record, family: &GinFamily, vars: &[String]) {
    r.field("complete", family.complete).field("bound", family.bound).field("gins", family.members.len());
    for (k, m) in family.members.iter().enumerate() {
        r.field(&format!("gin {k} witness"), weights(&m.witness));
        r.field(&format!("gin {k} ideal"), monomial_block(&m.ideal, vars));
        r.field(&format!("gin {k} diagram"), m.betti.diagram_string());
    }
    r.field("revlex", family.revlex).field("lex", family.lex);
    let poset = betti_poset(family);
    let show = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |k| k.to_string());
    r.field("minimum", show(poset.minimum)).field("maximum", show(poset.maximum));
    r.field("maximal", poset.maximal.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    r.field("infeasible-selections", family.infeasible.len());
}

fn cmd_gins(path: &Path, bound: Option<u32>) -> Result<Record, CliError> {
    let (file, digest) = load(path)?;
    let n = file.n();
    let bound = bound.unwrap_or_else(|| file.gens.iter().filter_map(Polynomial::homogeneous_degree).max().unwrap_or(0));
    let abf = recognize(n, &file.gens, bound)?;
    let family = enumerate_gins(&abf)?;
    let mut r = header("gins", &digest, &file);
    family_fields(&mut r, &family, &file.vars);
    Ok(r)
}
