//! Command-line front end: ideal files, Betti diagrams, catalog constructions and the
//! verification runner.

mod lexer;
mod parse;
mod render;
mod verify;

pub use parse::{emit_ideal, parse_ideal_file, parse_rope_file, IdealFile, ParseOptions};
pub use render::{betti_json, render_betti};
pub use verify::{verify_paper, CheckResult};

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{ci_two_quadrics, disjoint_linear_spaces, entry, manolache_double, monomial_curve, scroll};
use crate::error::{Error, Result};
use crate::formulas::{
    codim2_classify, curve_constraints, divisor_constraints, general_constraints, predict_acm, predict_min_degree,
    red2_predict, Codim2Type, ConstraintReport, PredictedTable,
};
use crate::groebner::Ideal;
use crate::reductions::{first_reduction_check, generic_section, second_reduction_check};
use crate::resolve::{betti_table, hilbert_series, scheme_report};
use crate::ring::{MonomialOrder, DEFAULT_CHARACTERISTIC};
use crate::ropes::{certify, rope_ideal};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Reduction {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formula {
    MinDegree,
    Acm,
    Curve,
    General,
    Divisor,
    TwoLinearSpaces,
    Codim2,
}

#[derive(Parser, Debug)]
#[command(name = "smalldeg", version, about = "Minimal free resolutions and Betti tables over F_p")]
struct Cli {
    /// Characteristic of the coefficient field; overrides ideal-file headers.
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Monomial order; overrides ideal-file headers.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Seed for every random choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    json: bool,
    /// Do not reject inhomogeneous generators while parsing.
    #[arg(long, global = true)]
    allow_inhomogeneous: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti diagram of R/I; `-` reads standard input.
    Betti { file: String },
    /// Dimension, degree, depth and related invariants.
    Report { file: String },
    /// Hilbert series and function.
    Hilbert {
        file: String,
        /// Largest degree of the printed Hilbert function.
        #[arg(long, default_value_t = 10)]
        up_to: i32,
    },
    /// Build a catalog entry or a parametric family (scroll, monomial-curve,
    /// disjoint-linear-spaces, ci-two-quadrics, manolache-double).
    Construct {
        name: String,
        params: Vec<String>,
        /// Print only the ideal file, without the comment header.
        #[arg(long)]
        emit: bool,
    },
    /// Resolve a rope given by its matrix B.
    Rope {
        #[arg(long)]
        spec: String,
        /// Build G_• explicitly and compare it with the Gröbner resolution.
        #[arg(long)]
        explicit_complex: bool,
    },
    /// General hyperplane section.
    Section {
        file: String,
        #[arg(long, value_enum)]
        check: Option<Reduction>,
    },
    /// Compare a computed table with a closed-form prediction.
    Check {
        #[arg(value_enum)]
        formula: Formula,
        file: String,
    },
    /// Run every golden-table and formula check.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
    },
}

/// A command outcome: output already written, exit status 0 or 1.
type Status = Result<i32>;

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn p(&self) -> u32 {
        self.cli.characteristic.unwrap_or(DEFAULT_CHARACTERISTIC)
    }

    fn read(&mut self, path: &str) -> Result<String> {
        let mut s = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut s).map_err(|e| Error::Io(format!("stdin: {e}")))?;
        } else {
            s = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        }
        Ok(s)
    }

    fn ideal(&mut self, path: &str) -> Result<Ideal> {
        let text = self.read(path)?;
        let opts = ParseOptions {
            allow_inhomogeneous: self.cli.allow_inhomogeneous,
            characteristic: self.cli.characteristic,
            order: self.cli.order.map(|o| match o {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            }),
        };
        parse_ideal_file(&text, &opts)?.ideal()
    }

    fn print(&mut self, s: &str) -> Result<()> {
        self.out.write_all(s.as_bytes()).map_err(|e| Error::Internal(format!("write: {e}")))
    }

    fn print_json(&mut self, v: serde_json::Value) -> Result<()> {
        let s = serde_json::to_string_pretty(&v).expect("serializable");
        self.print(&(s + "\n"))
    }
}

fn numbers(params: &[String]) -> Result<Vec<u32>> {
    params
        .iter()
        .flat_map(|p| p.split(','))
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<u32>().map_err(|_| Error::Argument(format!("'{s}' is not a number"))))
        .collect()
}

fn construct(ctx: &mut Ctx, name: &str, params: &[String], emit: bool) -> Status {
    let p = ctx.p();
    let seed = ctx.cli.seed;
    let nums = numbers(params)?;
    let n = |i: usize| {
        nums.get(i)
            .map(|&v| v as usize)
            .ok_or_else(|| Error::Argument(format!("{name} needs {} numeric parameters", i + 1)))
    };
    let (ideal, header) = match name {
        "scroll" => (scroll(p, &nums)?, format!("scroll {nums:?}")),
        "monomial-curve" => (monomial_curve(p, &nums)?, format!("monomial curve {nums:?}")),
        "disjoint-linear-spaces" => (disjoint_linear_spaces(p, n(0)?)?, format!("two linear spaces in P^{}", n(0)?)),
        "ci-two-quadrics" => (ci_two_quadrics(p, n(0)?, seed.unwrap_or(1))?, format!("two quadrics in P^{}", n(0)?)),
        "manolache-double" => (manolache_double(p, n(0)?, n(1)?)?, format!("(x0^2, x1, ..., x{})", n(0)? - 1)),
        _ => {
            let e = entry(name)?;
            if !params.is_empty() {
                return Err(Error::Argument(format!("catalog entry {name} takes no parameters")));
            }
            let ideal = match seed {
                Some(s) => e.build_with_seed(p, s)?,
                None => e.build(p)?,
            };
            (ideal, format!("{}: {}", e.name, e.params))
        }
    };
    if ctx.cli.json {
        let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
        ctx.print_json(json!({"format": 1, "name": name, "description": header, "vars": ideal.ring().names(), "generators": gens}))?;
    } else {
        if !emit {
            ctx.print(&format!("# {header}\n"))?;
        }
        ctx.print(&emit_ideal(&ideal))?;
    }
    Ok(0)
}

fn rope(ctx: &mut Ctx, path: &str, explicit: bool) -> Status {
    let text = ctx.read(path)?;
    let spec = parse_rope_file(&text, ctx.p())?;
    if !explicit {
        let t = betti_table(&rope_ideal(&spec)?)?;
        if ctx.cli.json {
            ctx.print_json(json!({"format": 1, "betti": t}))?;
        } else {
            ctx.print(&render_betti(&t))?;
        }
        return Ok(0);
    }
    let (_, cert) = certify(&spec)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    if ctx.cli.json {
        ctx.print_json(json!({"format": 1, "certificate": cert}))?;
    } else {
        for (i, term) in cert.terms.iter().enumerate() {
            let parts: Vec<String> = term.iter().map(|&(d, r)| format!("R(-{d})^{r}")).collect();
            ctx.print(&format!("G_{}: {}\n", i + 1, parts.join(" + ")))?;
        }
        ctx.print(&format!(
            "complex: {}, minimal: {}, matches GB resolution: {}\n",
            if cert.complex { "OK" } else { "FAILED" },
            yes(cert.minimal),
            yes(cert.matches_gb)
        ))?;
    }
    Ok(if cert.complex && cert.matches_gb { 0 } else { 1 })
}

fn section(ctx: &mut Ctx, path: &str, check: Option<Reduction>) -> Status {
    let ideal = ctx.ideal(path)?;
    let seed = ctx.cli.seed.unwrap_or(0);
    match check {
        None => {
            let s = generic_section(&ideal, seed)?;
            if ctx.cli.json {
                let gens: Vec<String> = s.section.generators().iter().map(|g| g.to_string()).collect();
                ctx.print_json(json!({"format": 1, "seed": s.seed, "quotient_hf": s.quotient_hf, "section": gens}))?;
            } else {
                ctx.print(&format!("# seed {}, quotient Hilbert function {:?}\n", s.seed, s.quotient_hf))?;
                ctx.print(&emit_ideal(&s.section.reduced()))?;
            }
            Ok(0)
        }
        Some(Reduction::First) => {
            let r = first_reduction_check(&ideal, seed)?;
            let ok = r.equal() && r.stable();
            if ctx.cli.json {
                ctx.print_json(json!({"format": 1, "report": r, "pass": ok}))?;
            } else {
                ctx.print(&render_betti(&r.original))?;
                ctx.print(&format!("seeds {:?}: Betti tables of A/lA {}\n", r.seeds, if ok { "agree" } else { "DIFFER" }))?;
            }
            Ok(if ok { 0 } else { 1 })
        }
        Some(Reduction::Second) => {
            let r = second_reduction_check(&ideal, seed)?;
            if ctx.cli.json {
                ctx.print_json(json!({"format": 1, "report": r, "pass": r.holds()}))?;
            } else {
                ctx.print(&format!("quotient Hilbert function {:?}\n", r.quotient_hf))?;
                ctx.print(&format!("section:\n{}", render_betti(&r.section)))?;
                ctx.print(&format!(
                    "quadric gain {}, Horseshoe violations {:?}: {}\n",
                    r.quadric_gain,
                    r.horseshoe_violations,
                    if r.holds() { "PASS" } else { "FAIL" }
                ))?;
            }
            Ok(if r.holds() { 0 } else { 1 })
        }
    }
}

fn predicted(ctx: &mut Ctx, name: &str, pred: PredictedTable, t: &crate::resolve::BettiTable) -> Status {
    let v = pred.violations(t);
    if ctx.cli.json {
        ctx.print_json(json!({"format": 1, "formula": name, "predicted": pred, "got": t, "violations": v, "pass": v.is_empty()}))?;
    } else {
        ctx.print(&render_betti(t))?;
        ctx.print(&format!("{name}: {}\n", if v.is_empty() { "PASS".into() } else { format!("FAIL at {v:?}") }))?;
    }
    Ok(if v.is_empty() { 0 } else { 1 })
}

fn constraints(ctx: &mut Ctx, name: &str, r: ConstraintReport) -> Status {
    if ctx.cli.json {
        ctx.print_json(json!({"format": 1, "formula": name, "constraints": r.constraints, "pass": r.passed()}))?;
    } else {
        for c in &r.constraints {
            let line = format!("{} {}: expected {}, got {}\n", if c.pass { "ok  " } else { "FAIL" }, c.name, c.expected, c.got);
            ctx.print(&line)?;
        }
        let failed = r.failures().len();
        ctx.print(&format!("{name}: {}/{} constraints hold\n", r.constraints.len() - failed, r.constraints.len()))?;
    }
    Ok(if r.passed() { 0 } else { 1 })
}

fn check(ctx: &mut Ctx, formula: Formula, path: &str) -> Status {
    let ideal = ctx.ideal(path)?;
    let rep = scheme_report(&ideal)?;
    let n = rep.nvars - 1;
    let c = rep.codim as usize;
    let t = &rep.betti;
    match formula {
        Formula::MinDegree => predicted(ctx, "min-degree", predict_min_degree(c)?, t),
        Formula::Acm => predicted(ctx, "acm", predict_acm(c)?, t),
        Formula::TwoLinearSpaces => predicted(ctx, "two-linear-spaces", red2_predict(n)?, t),
        Formula::Curve => constraints(ctx, "curve", curve_constraints(n, t)?),
        Formula::General => constraints(ctx, "general", general_constraints(n, c, rep.depth as usize, t)?),
        Formula::Divisor => constraints(ctx, "divisor", divisor_constraints(n, c, t)?),
        Formula::Codim2 => {
            let k = codim2_classify(t);
            if ctx.cli.json {
                ctx.print_json(json!({"format": 1, "formula": "codim2", "type": k}))?;
            } else {
                ctx.print(&format!("{k}\n"))?;
            }
            Ok(if k == Codim2Type::Unknown { 1 } else { 0 })
        }
    }
}

fn verify(ctx: &mut Ctx, filter: Option<&str>) -> Status {
    let results = verify_paper(ctx.p(), ctx.cli.seed.unwrap_or(0), filter);
    let passed = results.iter().filter(|r| r.pass).count();
    let total = results.len();
    if ctx.cli.json {
        ctx.print_json(json!({"format": 1, "results": results, "passed": passed, "total": total}))?;
    } else {
        for r in &results {
            ctx.print(&format!("{} {}: {}\n", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail))?;
        }
        ctx.print(&format!("{} {passed}/{total}\n", if passed == total { "PASS" } else { "FAIL" }))?;
    }
    Ok(if passed == total && total > 0 { 0 } else { 1 })
}

fn dispatch(ctx: &mut Ctx) -> Status {
    let cli = ctx.cli;
    match &cli.command {
        Command::Betti { file } => {
            let t = betti_table(&ctx.ideal(file)?)?;
            if ctx.cli.json {
                ctx.print(&(betti_json(&t) + "\n"))?;
            } else {
                ctx.print(&render_betti(&t))?;
            }
            Ok(0)
        }
        Command::Report { file } => {
            let rep = scheme_report(&ctx.ideal(file)?)?;
            if ctx.cli.json {
                ctx.print_json(json!({"format": 1, "report": rep}))?;
            } else {
                let mut s = format!(
                    "dim {}\ncodim {}\ndegree {}\ndepth {}\npd {}\nregularity {}\nh-vector {:?}\nACM {}\n",
                    rep.dim, rep.codim, rep.degree, rep.depth, rep.pd, rep.regularity, rep.h_vector, rep.is_acm
                );
                if rep.saturated_input {
                    s.push_str("note: the input was not saturated; invariants are those of its saturation\n");
                }
                s.push_str(&render_betti(&rep.betti));
                ctx.print(&s)?;
            }
            Ok(0)
        }
        Command::Hilbert { file, up_to } => {
            let h = hilbert_series(&ctx.ideal(file)?)?;
            let (num, dim) = h.reduced();
            let hf: Vec<i64> = (0..=*up_to).map(|d| h.function(d)).collect();
            if ctx.cli.json {
                let num: Vec<(i32, i64)> = num.into_iter().collect();
                ctx.print_json(json!({"format": 1, "numerator": num, "krull_dim": dim, "degree": h.degree(), "h_vector": h.h_vector(), "hf": hf}))?;
            } else {
                let terms: Vec<String> = num.iter().map(|(e, c)| format!("{c}*T^{e}")).collect();
                ctx.print(&format!(
                    "({}) / (1-T)^{dim}\ndegree {}\nh-vector {:?}\nHF(0..{up_to}) {:?}\n",
                    terms.join(" + "),
                    h.degree(),
                    h.h_vector(),
                    hf
                ))?;
            }
            Ok(0)
        }
        Command::Construct { name, params, emit } => construct(ctx, name, params, *emit),
        Command::Rope { spec, explicit_complex } => rope(ctx, spec, *explicit_complex),
        Command::Section { file, check } => section(ctx, file, *check),
        Command::Check { formula, file } => check(ctx, *formula, file),
        Command::VerifyPaper { filter } => verify(ctx, filter.as_deref()),
    }
}

/// Exit status 2 for malformed input or arguments, 1 for failures while computing.
fn error_status(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Homogeneity { .. } | Error::Argument(_) | Error::SpecInvalid(_) => 2,
        Error::Precondition(_) => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (including the program name) and returns the exit status.
pub fn run(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, out, stdin };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_status(&e)
        }
    }
}
