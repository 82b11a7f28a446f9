// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit status: 0 on success, 1 on a mathematical negative (not LCP, no
//! equivalence witness, oracle failures) when `--strict` is given, 2 on bad
//! input or any other error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::code::{Ambient, MixedCode, MixedVector, DEFAULT_ENUMERATION_BUDGET};
use crate::error::{Error, Result};
use crate::group::{ideal_generated, verify_equivalence_theorem, DEFAULT_PERMUTATION_BUDGET};
use crate::io::{rows_toml, CodeFile};
use crate::lcp::{is_lcp, lcp_search, security_parameter};
use crate::oracle::{ring_map_report, verify_ambient, OracleReport};
use crate::ring::ChainRingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "chainmix", version, about = "Linear codes over Z_{p^s} x Z_{p^r}")]
pub struct Cli {
    /// Output style; `structured` emits TOML.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Work cap: codewords for enumeration, candidates for `lcp search`,
    /// permutations for `group check-equivalence`.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Exit with status 1 on negative answers.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Code file.
    #[arg(value_name = "FILE", required_unless_present = "input")]
    pub path: Option<PathBuf>,
    #[arg(long, value_name = "FILE", conflicts_with = "path")]
    pub input: Option<PathBuf>,
}

impl InputArg {
    fn load(&self) -> Result<CodeFile> {
        let path = self.input.as_ref().or(self.path.as_ref()).expect("clap requires one");
        CodeFile::load(path)
    }
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub first: PathBuf,
    pub second: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard generator matrix, column permutation and type.
    StandardForm(InputArg),
    /// Type tuple and structural flags.
    Type(InputArg),
    /// Generators of the dual code.
    Dual(InputArg),
    /// Closed-form parity-check matrix (weakly-free codes).
    ParityCheck(InputArg),
    /// Linear complementary pairs: decision, security, search.
    #[command(subcommand)]
    Lcp(LcpCommand),
    /// Group codes over H x K.
    #[command(subcommand)]
    Group(GroupCommand),
    /// List every codeword.
    Enumerate(InputArg),
    /// Minimum Hamming distance.
    MinDistance(InputArg),
    /// Run the brute-force oracle suite.
    Verify {
        #[arg(long, default_value_t = 40)]
        instances: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum LcpCommand {
    /// Decide whether two codes form a linear complementary pair.
    Check(PairArgs),
    /// `min{d(C), d(D⊥)}` of an LCP pair.
    Security(PairArgs),
    /// Seeded random search for LCP pairs.
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Ideal generated by the file's rows under its `[groups]`.
    Ideal(InputArg),
    /// Search block permutations taking the second code's dual to the first.
    CheckEquivalence(PairArgs),
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Positive,
    Negative,
}

struct Ctx {
    format: Format,
    budget: Option<u64>,
    seed: u64,
    out: String,
}

impl Ctx {
    fn structured(&self) -> bool {
        self.format == Format::Structured
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }

    fn rows(&mut self, rows: &[MixedVector]) {
        for v in rows {
            let _ = writeln!(self.out, "{v}");
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn toml_str(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn load_pair(args: &PairArgs) -> Result<(CodeFile, CodeFile)> {
    let a = CodeFile::load(&args.first)?;
    let b = CodeFile::load(&args.second)?;
    if a.code.ambient() != b.code.ambient() {
        return Err(Error::Input {
            path: args.second.display().to_string(),
            message: "ring or block lengths differ from the first file".into(),
        });
    }
    Ok((a, b))
}

fn emit_code(ctx: &mut Ctx, file: CodeFile, meta: &[(&str, String)]) {
    if ctx.structured() {
        let text = file.to_toml(meta);
        ctx.out.push_str(&text);
    } else {
        for (key, value) in meta {
            ctx.line(format!("{key} {value}"));
        }
        let rows = file.code.generators().to_vec();
        ctx.rows(&rows);
    }
}

fn emit_reports(ctx: &mut Ctx, reports: &[OracleReport]) -> Outcome {
    if ctx.structured() {
        for r in reports {
            ctx.line("[[report]]");
            ctx.line(format!("checked = {}", toml_str(&r.checked)));
            ctx.line(format!("instances = {}", r.instances));
            ctx.line(format!("failures = {}", r.failures));
            if let Some(f) = &r.first_failure {
                ctx.line(format!("first_failure = {}", toml_str(f)));
            }
        }
    } else {
        for r in reports {
            ctx.line(r.to_string());
        }
    }
    if reports.iter().all(OracleReport::passed) {
        Outcome::Positive
    } else {
        Outcome::Negative
    }
}

fn execute(ctx: &mut Ctx, command: Command) -> Result<Outcome> {
    match command {
        Command::StandardForm(input) => {
            let file = input.load()?;
            let form = file.code.standard_generator_matrix();
            let (pr, pb) = form.block_permutations();
            let perm = format!("{} | {}", join(&pr), join(&pb));
            let code = MixedCode::new(file.code.ambient(), form.rows.clone())?;
            let meta = [("type", form.code_type.to_string()), ("permutation", perm)];
            emit_code(ctx, CodeFile::new(code, file.groups), &meta);
        }
        Command::Type(input) => {
            let code = input.load()?.code;
            let t = code.code_type();
            let facts = [
                ("type", t.to_string()),
                ("dimension", t.dimension().to_string()),
                ("weakly_free", t.is_weakly_free().to_string()),
                ("free", code.is_free().to_string()),
                ("separable", code.is_separable().to_string()),
            ];
            for (k, v) in facts {
                if ctx.structured() {
                    let value = if k == "type" { toml_str(&v) } else { v };
                    ctx.line(format!("{k} = {value}"));
                } else {
                    ctx.line(format!("{k} {v}"));
                }
            }
        }
        Command::Dual(input) => {
            let file = input.load()?;
            let dual = file.code.dual().reduced();
            let t = dual.code_type().to_string();
            emit_code(ctx, CodeFile::new(dual, file.groups), &[("type", t)]);
        }
        Command::ParityCheck(input) => {
            let file = input.load()?;
            let rows = file.code.parity_check_weakly_free()?;
            let h = MixedCode::new(file.code.ambient(), rows)?;
            emit_code(ctx, CodeFile::new(h, file.groups), &[]);
        }
        Command::Lcp(LcpCommand::Check(pair)) => {
            let (a, b) = load_pair(&pair)?;
            let v = is_lcp(&a.code, &b.code)?;
            if ctx.structured() {
                ctx.line(format!("is_lcp = {}", v.is_lcp));
                ctx.line(format!("reason = {}", toml_str(&v.reason.to_string())));
                ctx.line(format!("stacked_dim = {}", v.stacked_dim));
                ctx.line(format!("ambient_dim = {}", v.ambient_dim));
            } else {
                ctx.line(format!("verdict {}", v.reason));
                ctx.line(format!("dimensions {} + {} = {} (ambient {})", a.code.dimension(), b.code.dimension(), v.stacked_dim, v.ambient_dim));
            }
            return Ok(if v.is_lcp { Outcome::Positive } else { Outcome::Negative });
        }
        Command::Lcp(LcpCommand::Security(pair)) => {
            let (a, b) = load_pair(&pair)?;
            let budget = ctx.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
            match security_parameter(&a.code, &b.code, budget) {
                Err(Error::NotLcp) => {
                    ctx.line(if ctx.structured() { "is_lcp = false" } else { "not an LCP pair" });
                    return Ok(Outcome::Negative);
                }
                Err(e) => return Err(e),
                Ok(d) => {
                    let shown = d.map_or("undefined".to_string(), |d| d.to_string());
                    if ctx.structured() {
                        ctx.line("is_lcp = true");
                        if let Some(d) = d {
                            ctx.line(format!("security = {d}"));
                        }
                    } else {
                        ctx.line(format!("security {shown}"));
                    }
                }
            }
        }
        Command::Lcp(LcpCommand::Search { p, s, r, alpha, beta }) => {
            let spec = ChainRingSpec::new(p, s, r)?;
            let budget = ctx.budget.unwrap_or(200) as usize;
            let found = lcp_search(spec, alpha, beta, budget, ctx.seed)?;
            let amb = Ambient::new(spec, alpha, beta);
            if ctx.structured() {
                ctx.line(format!("p = {p}\ns = {s}\nr = {r}\nalpha = {alpha}\nbeta = {beta}"));
                ctx.line(format!("seed = {}\ncandidates = {budget}\nfound = {}", ctx.seed, found.len()));
                for cand in &found {
                    ctx.line("\n[[pair]]");
                    if let Some(d) = cand.security {
                        ctx.line(format!("security = {d}"));
                    }
                    ctx.line(format!("type_c = {}", toml_str(&cand.c.code_type().to_string())));
                    ctx.line(format!("type_d = {}", toml_str(&cand.d.code_type().to_string())));
                    ctx.out.push_str(&rows_toml("c", cand.c.generators()));
                    ctx.out.push_str(&rows_toml("d", cand.d.generators()));
                }
            } else {
                ctx.line(format!("{} over ({alpha},{beta}): {} LCP pairs from {budget} candidates (seed {})", amb.spec, found.len(), ctx.seed));
                for (i, cand) in found.iter().enumerate() {
                    let sec = cand.security.map_or("undefined".to_string(), |d| d.to_string());
                    ctx.line(format!("\npair {} security {sec}", i + 1));
                    ctx.line(format!("C {}", cand.c.code_type()));
                    ctx.rows(cand.c.generators());
                    ctx.line(format!("D {}", cand.d.code_type()));
                    ctx.rows(cand.d.generators());
                }
            }
        }
        Command::Group(GroupCommand::Ideal(input)) => {
            let file = input.load()?;
            let (h, k) = file.groups.clone().ok_or_else(|| Error::Input {
                path: input.input.as_ref().or(input.path.as_ref()).unwrap().display().to_string(),
                message: "missing [groups] table".into(),
            })?;
            let ideal = ideal_generated(file.code.ambient(), file.code.generators(), &h, &k)?;
            let t = ideal.code_type().to_string();
            emit_code(ctx, CodeFile::new(ideal, Some((h, k))), &[("type", t)]);
        }
        Command::Group(GroupCommand::CheckEquivalence(pair)) => {
            let (a, b) = load_pair(&pair)?;
            let (h, k) = a.groups.clone().or(b.groups.clone()).ok_or_else(|| Error::Input {
                path: pair.first.display().to_string(),
                message: "missing [groups] table".into(),
            })?;
            let budget = ctx.budget.unwrap_or(DEFAULT_PERMUTATION_BUDGET);
            let witness = match verify_equivalence_theorem(&a.code, &b.code, &h, &k, budget) {
                Err(Error::NotLcp) => {
                    ctx.line(if ctx.structured() { "is_lcp = false" } else { "not an LCP pair" });
                    return Ok(Outcome::Negative);
                }
                other => other?,
            };
            match &witness {
                Some((pr, pb)) if ctx.structured() => {
                    ctx.line(format!("witness = true\nperm_r = {pr:?}\nperm_rbar = {pb:?}"));
                }
                Some((pr, pb)) => ctx.line(format!("witness {} | {}", join(pr), join(pb))),
                None if ctx.structured() => ctx.line("witness = false"),
                None => ctx.line("no witness"),
            }
            return Ok(if witness.is_some() { Outcome::Positive } else { Outcome::Negative });
        }
        Command::Enumerate(input) => {
            let code = input.load()?.code;
            let words = code.codewords(ctx.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))?;
            if ctx.structured() {
                ctx.line(format!("count = {}", words.len()));
                ctx.out.push_str(&rows_toml("codewords", &words));
            } else {
                ctx.rows(&words);
            }
        }
        Command::MinDistance(input) => {
            let code = input.load()?.code;
            let d = code.min_distance(ctx.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))?;
            match (d, ctx.structured()) {
                (Some(d), true) => ctx.line(format!("min_distance = {d}")),
                (None, true) => ctx.line("zero_code = true"),
                (Some(d), false) => ctx.line(format!("min-distance {d}")),
                (None, false) => ctx.line("min-distance undefined (zero code)"),
            }
        }
        Command::Verify { instances } => {
            let mut reports = Vec::new();
            for (p, s, r, alpha, beta) in [(2, 2, 1, 3, 2), (2, 3, 2, 2, 2), (3, 2, 1, 2, 2)] {
                let spec = ChainRingSpec::new(p, s, r)?;
                reports.push(ring_map_report(spec));
                reports.extend(verify_ambient(Ambient::new(spec, alpha, beta), instances, ctx.seed)?);
            }
            return Ok(emit_reports(ctx, &reports));
        }
    }
    Ok(Outcome::Positive)
}

/// Parses `args` (program name first) and runs one command, writing to the
/// given streams. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let strict = cli.strict;
    let mut ctx = Ctx {
        format: cli.format,
        budget: cli.budget,
        seed: cli.seed,
        out: String::new(),
    };
    match execute(&mut ctx, cli.command) {
        Ok(outcome) => {
            let _ = stdout.write_all(ctx.out.as_bytes());
            match outcome {
                Outcome::Negative if strict => 1,
                _ => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
