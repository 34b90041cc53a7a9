//! Command-line driver. Every subcommand writes one JSON (or CSV) document;
//! exit status is 0 when all checks pass, 1 on an axiom failure, and 2 on a
//! usage error.

mod catalog;
mod census;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use catalog::{field, resolve, resolve_pair, resolve_table, subgroup, Entry, NAMES};
pub use census::{census, CensusEntry, CENSUS_MAX_ORDER, REALIZATION_MAX_Q};

use crate::carrier::FinRing;
use crate::constructs::{tensor_product, DEFAULT_TERM_BUDGET};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::{
    check_hyperfield, check_hypergroup, check_hyperring, check_powerset_weak_distributivity, AxiomReport,
};
use crate::morphisms::iso_search;
use crate::pairs::{
    check_pair_axioms, check_preceq_distributive, check_property_n, check_surpassing, is_uniquely_negated,
    negation_map, SurpassRel,
};
use crate::quotient::{m_hyperring, sampled_quotient, zero_second_column, RationalQuotient, RationalSubgroup};
use crate::skewpoly::{crosscheck_mhyperring, PumpluenAlgebra, SkewRing};
use crate::symbolic::{distributivity_gap, spot_check_axioms};
use crate::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hypergroup,
    Hyperring,
    Hyperfield,
    /// Weak distributivity of the power-set lifting.
    Powerset,
    /// Search for a strict distributivity inclusion (symbolic fields).
    Gap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ideal {
    ZeroSecondColumn,
    Zero,
    Whole,
}

#[derive(Debug, Parser)]
#[command(name = "hyperforge", version, about = "Residue hyperstructures and their axioms")]
pub struct Cli {
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample budget; defaults per command, overridable by HYPERFORGE_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Krasner quotient of GF(q) by a unit subgroup, or sampled Q/G.
    Quotient {
        /// `gf:q` or `rational`.
        #[arg(long)]
        field: String,
        /// `units`, a subgroup order, `{a,b,..}`; for `rational`: `positive` or `units`.
        #[arg(long, default_value = "units")]
        subgroup: String,
    },
    /// Run an axiom suite on a catalog entry or a table file.
    Check {
        #[arg(long)]
        table: String,
        #[arg(long, value_enum, default_value_t = Suite::Hyperfield)]
        suite: Suite,
    },
    /// Search for an isomorphism between two finite tables.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// The m-hyperring of 2x2 matrices over GF(q) modulo a left ideal.
    Mhyper {
        #[arg(long, default_value = "gf:2")]
        field: String,
        #[arg(long, value_enum, default_value_t = Ideal::ZeroSecondColumn)]
        ideal: Ideal,
    },
    /// The remainder algebra of GF(q)[x; σ] modulo a monic polynomial.
    Pumpluen {
        #[arg(long)]
        field: String,
        /// `frob:j` for σ = Frobenius^j, or `id`.
        #[arg(long, default_value = "frob:1")]
        twist: String,
        #[arg(long)]
        modulus: String,
        /// Emit the full multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// Depth-truncated tensor product of two pairs.
    Tensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Pair axioms, surpassing relation and negation for a pair.
    Pairs {
        /// `powerset:<table>`, `infinity:<n>`, `supertropical`, `boolean`, a table name, or a pair file.
        #[arg(long)]
        table: String,
    },
    /// Hyperfields of small order up to isomorphism, with quotient realizations.
    Census {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
}

/// A rendered document and whether every required check passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn json_doc(v: Value, ok: bool) -> Outcome {
    Outcome { text: serde_json::to_string_pretty(&v).expect("json value") + "\n", ok }
}

fn report_json(r: &AxiomReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn report_csv(r: &AxiomReport) -> String {
    let mut s = String::from("axiom,passed,required,checked,witness\n");
    for v in &r.verdicts {
        let w = v.witness.as_ref().map(|w| format!("{:?}: {}", w.tuple, w.detail)).unwrap_or_default();
        s.push_str(&format!("{},{},{},{},\"{}\"\n", v.name, v.passed, v.required, v.checked, w.replace('"', "\"\"")));
    }
    s
}

fn budget(cli: &Cli, fallback: usize) -> usize {
    cli.budget.unwrap_or_else(|| crate::default_budget(fallback))
}

fn json_only(cli: &Cli, what: &str) -> Result<()> {
    if cli.format == Format::Csv {
        return Err(Error::Parse(format!("{what} has no CSV form")));
    }
    Ok(())
}

fn quotient(cli: &Cli, fld: &str, sub: &str) -> Result<Outcome> {
    if fld == "rational" {
        json_only(cli, "a sampled quotient")?;
        let subgroup = match sub {
            "positive" => RationalSubgroup::Positive,
            "units" => RationalSubgroup::Units,
            other => return Err(Error::UnknownName(other.to_string())),
        };
        let sq = sampled_quotient(&RationalQuotient { subgroup }, budget(cli, 200), cli.seed, None)?;
        let n = sq.len();
        let hsum: Vec<Vec<String>> =
            (0..n).map(|a| (0..n).map(|b| show(sq.hsum(a, b), &sq.names)).collect()).collect();
        return Ok(json_doc(
            json!({"schema": SCHEMA, "elements": sq.names, "hsum": hsum, "seed": cli.seed, "summary": sq.summary()}),
            true,
        ));
    }
    let f = field(fld)?;
    let g = subgroup(&f, sub)?;
    let t = crate::quotient::krasner_quotient(&f, &g)?;
    Ok(match cli.format {
        Format::Json => Outcome { text: t.to_json_string() + "\n", ok: true },
        Format::Csv => Outcome { text: t.hsum_csv(), ok: true },
    })
}

fn check(cli: &Cli, table: &str, suite: Suite) -> Result<Outcome> {
    let (report, name) = match resolve(table)? {
        Entry::Symbolic(f) if suite == Suite::Gap => {
            json_only(cli, "a gap search")?;
            let g = distributivity_gap(f, budget(cli, 10_000))?;
            let verified = match &g.witness {
                Some(w) => w.verify()?,
                None => false,
            };
            return Ok(json_doc(json!({"schema": SCHEMA, "table": table, "gap": g, "verified": verified}), true));
        }
        Entry::Symbolic(f) => (spot_check_axioms(f, &f.pool())?, f.name().to_string()),
        Entry::Finite(h) => {
            let r = match suite {
                Suite::Hypergroup => check_hypergroup(&h),
                Suite::Hyperring => check_hyperring(&h),
                Suite::Hyperfield => check_hyperfield(&h),
                Suite::Powerset => check_powerset_weak_distributivity(&h, budget(cli, 10_000), cli.seed),
                Suite::Gap => return Err(Error::Parse("the gap suite needs a symbolic field".into())),
            };
            (r, table.to_string())
        }
    };
    let ok = report.passed();
    Ok(match cli.format {
        Format::Json => json_doc(json!({"schema": SCHEMA, "table": name, "passed": ok, "report": report_json(&report)}), ok),
        Format::Csv => Outcome { text: report_csv(&report), ok },
    })
}

fn iso(cli: &Cli, a: &str, b: &str) -> Result<Outcome> {
    json_only(cli, "an isomorphism search")?;
    let r = iso_search(&resolve_table(a)?, &resolve_table(b)?)?;
    let found = r.iso.is_some();
    Ok(json_doc(json!({"schema": SCHEMA, "iso": r.iso, "nodes_explored": r.nodes_explored}), found))
}

fn mhyper(cli: &Cli, fld: &str, ideal: Ideal) -> Result<Outcome> {
    json_only(cli, "an m-hyperring")?;
    let m2 = FinRing::matrices2(&field(fld)?)?;
    let l = match ideal {
        Ideal::ZeroSecondColumn => zero_second_column(&m2)?,
        Ideal::Zero => ElemSet::singleton(m2.zero()),
        Ideal::Whole => m2.all(),
    };
    let mh = m_hyperring(&m2, l)?;
    let report = mh.check_subset_distributivity();
    let ok = report.passed();
    Ok(json_doc(
        json!({
            "schema": SCHEMA,
            "m_hyperring": mh.to_json(),
            "single_valued": mh.is_single_valued(),
            "report": report_json(&report),
        }),
        ok,
    ))
}

fn twist(s: &str) -> Result<u32> {
    if s == "id" {
        return Ok(0);
    }
    s.strip_prefix("frob:").and_then(|j| j.parse().ok()).ok_or_else(|| Error::Parse(format!("bad twist {s:?}")))
}

fn pumpluen(cli: &Cli, fld: &str, tw: &str, modulus: &str, table: bool) -> Result<Outcome> {
    json_only(cli, "a Pumpluen algebra")?;
    let ring = SkewRing::new(field(fld)?, twist(tw)?)?;
    let f = ring.parse(modulus)?;
    let alg = PumpluenAlgebra::new(ring, f)?;
    if table {
        return Ok(json_doc(serde_json::to_value(alg.to_json())?, true));
    }
    let x_squared = alg.parse("x").ok().map(|x| alg.name(alg.mul(x, x)));
    let witness = alg.nonassociativity_witness();
    let cross = crosscheck_mhyperring(&alg, budget(cli, 50), cli.seed);
    let ok = cross.verdict.passed;
    Ok(json_doc(
        json!({
            "schema": SCHEMA,
            "modulus": modulus,
            "carrier_size": alg.len(),
            "x_times_x": x_squared,
            "nonassociative_triple": witness.map(|t| t.map(|i| alg.name(i))),
            "crosscheck": cross,
            "seed": cli.seed,
        }),
        ok,
    ))
}

fn tensor(cli: &Cli, left: &str, right: &str) -> Result<Outcome> {
    json_only(cli, "a tensor product")?;
    let tp = tensor_product(&resolve_pair(left)?, &resolve_pair(right)?, cli.depth, budget(cli, DEFAULT_TERM_BUDGET))?;
    Ok(json_doc(serde_json::to_value(tp.to_json())?, true))
}

fn pairs(cli: &Cli, table: &str) -> Result<Outcome> {
    json_only(cli, "a pair report")?;
    let p = resolve_pair(table)?;
    let axioms = check_pair_axioms(&p);
    let rel = if p.is_powerset() { SurpassRel::inclusion(&p)? } else { SurpassRel::null(&p) };
    let surpass = check_surpassing(&p, &rel);
    let distributive = p.has_mul().then(|| report_json(&check_preceq_distributive(&p, &rel)));
    let has_t = (0..p.t().len()).all(|t| p.embed(t).is_some());
    let (prop_n, neg, unique) = if has_t {
        (
            Some(serde_json::to_value(check_property_n(&p)?)?),
            Some(serde_json::to_value(negation_map(&p)?)?),
            Some(serde_json::to_value(is_uniquely_negated(&p)?)?),
        )
    } else {
        (None, None, None)
    };
    let ok = axioms.passed() && surpass.passed();
    Ok(json_doc(
        json!({
            "schema": SCHEMA,
            "pair": p.to_json(),
            "relation": rel.kind,
            "axioms": report_json(&axioms),
            "surpassing": report_json(&surpass),
            "preceq_distributive": distributive,
            "property_n": prop_n,
            "negation_map": neg,
            "uniquely_negated": unique,
        }),
        ok,
    ))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Quotient { field, subgroup } => quotient(cli, field, subgroup),
        Command::Check { table, suite } => check(cli, table, *suite),
        Command::Iso { a, b } => iso(cli, a, b),
        Command::Mhyper { field, ideal } => mhyper(cli, field, *ideal),
        Command::Pumpluen { field, twist, modulus, table } => pumpluen(cli, field, twist, modulus, *table),
        Command::Tensor { left, right } => tensor(cli, left, right),
        Command::Pairs { table } => pairs(cli, table),
        Command::Census { max_order } => {
            json_only(cli, "a census")?;
            let entries = census(*max_order)?;
            Ok(json_doc(json!({"schema": SCHEMA, "max_order": max_order, "entries": entries}), true))
        }
    }
}

/// Parse `args` (program name first), run, and write to the given streams.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return 2;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => out.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    i32::from(!outcome.ok)
}

pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["hyperforge"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_krasner() {
        let (code, out, _) = call(&["check", "--table", "krasner", "--suite", "hyperfield"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], true);
    }

    #[test]
    fn iso_gf3_krasner() {
        let (code, out, _) = call(&["iso", "--a", "gf:3/units", "--b", "krasner"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["iso"], json!([0, 1]));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["check", "--table", "nonsense"]).0, 2);
        assert_eq!(call(&["iso", "--a", "krasner", "--b", "signs", "--format", "csv"]).0, 2);
    }

    #[test]
    fn quotient_csv() {
        let (code, out, _) = call(&["quotient", "--field", "gf:5", "--subgroup", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("\"+\""));
    }
}
