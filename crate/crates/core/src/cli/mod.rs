//! The `dias` command-line tool.
//!
//! Exit codes: 0 success (axioms hold, bounds hold, sequence exact), 1 semantic
//! violation, 2 input error.

pub mod format;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::{all_bounds, check_bound, five_term_report, thm43_report, BoundKind, SequenceReport};
use crate::cohomology::{multiplier_dims, random_nilpotent_in, verify_defining_pair, Category};
use crate::dialg::{DiAlgebra, Variant};
use crate::exactlin::{format_vector, Scalar, Subspace};
use crate::{Error, Rat};

use format::{load, load_defining_pair, parse_ideal, AlgebraFile, GeneratorMeta, Loaded};
use report::ReportFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dias", version, about = "Exact computations with diassociative algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Algebra file (JSON)
    pub path: PathBuf,
    /// Emit a JSON report instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the five axioms on every basis triple
    Validate(InputArgs),
    /// Derived ideal, center, central series and nilpotency class
    Analyze(InputArgs),
    /// Dimensions of Z², B² and the multiplier H²
    Multiplier {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "dias")]
        category: Category,
    },
    /// Every applicable multiplier bound, in each category the algebra belongs to
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// One-dimensional ideal for cor42, as "v1;v2;..." (default: first basis vector of Z(L) ∩ L')
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Five-term sequence for a central ideal, or the class-n tail when no ideal is given
    Sequence {
        #[command(flatten)]
        input: InputArgs,
        /// Central ideal as semicolon-separated vectors, e.g. "0,1" or "1,0,0;0,0,1"
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value = "dias")]
        category: Category,
    },
    /// Check the `defining_pair` block of a cover file
    Cover(InputArgs),
    /// Write a random nilpotent algebra built by central extensions
    Gen {
        #[arg(long)]
        dim_base: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        /// Maximum number of new basis vectors per step
        #[arg(long, default_value_t = 2)]
        max_new: usize,
        #[arg(long, default_value = "dias")]
        category: Category,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}

/// Outcome of one command before it is printed.
struct Outcome {
    code: i32,
    text: String,
    result: Value,
    violations: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, text: String, result: Value, violations: Vec<String>) -> Self {
        Outcome {
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            text,
            result,
            violations,
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let (json, input) = match &cli.command {
        Command::Validate(i) | Command::Analyze(i) | Command::Cover(i) => (i.json, Some(i)),
        Command::Multiplier { input, .. }
        | Command::Bounds { input, .. }
        | Command::Sequence { input, .. } => (input.json, Some(input)),
        Command::Gen { .. } => (false, None),
    };
    let loaded = match input.map(|i| load(&i.path)).transpose() {
        Ok(l) => l,
        Err(e) => {
            let path = input.map(|i| i.path.display().to_string()).unwrap_or_default();
            let _ = writeln!(err, "error: {path}: {e}");
            return EXIT_INPUT;
        }
    };
    let outcome = match dispatch(&cli.command, loaded.as_ref()) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Parse(_) | Error::Io(_) | Error::DimensionMismatch { .. } => EXIT_INPUT,
                _ => EXIT_VIOLATION,
            };
        }
    };
    let printed = if json {
        let report = ReportFile::new(
            echo,
            loaded.as_ref().map(Loaded::sha256),
            outcome.result,
            outcome.violations,
        );
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{}", outcome.text)
    };
    if printed.is_err() {
        return EXIT_INPUT;
    }
    outcome.code
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(command: &Command, loaded: Option<&Loaded>) -> crate::Result<Outcome> {
    let algebra = || -> crate::Result<DiAlgebra<Rat>> {
        loaded.expect("input commands load a file").file.to_algebra()
    };
    match command {
        Command::Validate(_) => cmd_validate(&algebra()?),
        Command::Analyze(_) => cmd_analyze(&algebra()?),
        Command::Multiplier { category, .. } => cmd_multiplier(&algebra()?, *category),
        Command::Bounds { ideal, .. } => cmd_bounds(&algebra()?, ideal.as_deref()),
        Command::Sequence { ideal, category, .. } => {
            cmd_sequence(&algebra()?, ideal.as_deref(), *category)
        }
        Command::Cover(_) => cmd_cover(loaded.expect("cover loads a file")),
        Command::Gen {
            dim_base,
            steps,
            seed,
            max_new,
            category,
            output,
        } => cmd_gen(*dim_base, *steps, *seed, *max_new, *category, output),
    }
}

fn require_valid(a: &DiAlgebra<Rat>) -> crate::Result<()> {
    let v = a.validate_axioms().len();
    if v > 0 {
        return Err(Error::InvalidAlgebra(v));
    }
    Ok(())
}

/// `2*e0 + e1`, or `0`.
fn in_basis<S: Scalar>(v: &[S], names: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| {
            if c.is_one() {
                n.clone()
            } else if (-c.clone()).is_one() {
                format!("-{n}")
            } else {
                format!("{c}*{n}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn span_text<S: Scalar>(u: &Subspace<S>, names: &[String]) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = u.basis().iter().map(|b| in_basis(b, names)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn span_json<S: Scalar>(u: &Subspace<S>) -> Value {
    Value::from(
        u.basis()
            .iter()
            .map(|b| Value::from(b.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn cmd_validate(a: &DiAlgebra<Rat>) -> crate::Result<Outcome> {
    let violations: Vec<String> = a
        .validate_axioms()
        .iter()
        .map(|v| {
            format!(
                "{} at ({}, {}, {}): {} != {}",
                v.axiom,
                v.i,
                v.j,
                v.k,
                format_vector(&v.lhs),
                format_vector(&v.rhs)
            )
        })
        .collect();
    let ok = violations.is_empty();
    let text = if ok {
        format!("ok: dim {}, all axioms hold\n", a.dim())
    } else {
        let mut t = format!("{} axiom violation(s)\n", violations.len());
        for v in &violations {
            t.push_str(&format!("  {v}\n"));
        }
        t
    };
    let result = json!({ "dim": a.dim(), "valid": ok });
    Ok(Outcome::new(ok, text, result, violations))
}

fn cmd_analyze(a: &DiAlgebra<Rat>) -> crate::Result<Outcome> {
    require_valid(a)?;
    let names = a.names();
    let rep = a.series_report();
    let agree = [Variant::LeftIterated, Variant::Full]
        .into_iter()
        .all(|v| a.lower_central(v) == rep.lower);
    let class = match rep.nilpotency_class {
        Some(c) => c.to_string(),
        None => "not nilpotent".into(),
    };
    let mut text = format!("dim {}\nbasis {}\n", a.dim(), names.join(" "));
    text.push_str(&format!("class {class}\n"));
    text.push_str(&format!("derived {}\n", span_text(&rep.derived, names)));
    text.push_str(&format!("center {}\n", span_text(&rep.center, names)));
    for (j, t) in rep.lower.iter().enumerate() {
        text.push_str(&format!("L^{} {}\n", j + 1, span_text(t, names)));
    }
    for (j, t) in rep.upper.iter().enumerate() {
        text.push_str(&format!("Z_{} {}\n", j + 1, span_text(t, names)));
    }
    let mut violations = Vec::new();
    if !agree {
        violations.push("lower central series variants disagree".to_string());
    }
    let result = json!({
        "dim": a.dim(),
        "basis": names,
        "nilpotency_class": rep.nilpotency_class,
        "derived": span_json(&rep.derived),
        "center": span_json(&rep.center),
        "lower_central": rep.lower.iter().map(span_json).collect::<Vec<_>>(),
        "upper_central": rep.upper.iter().map(span_json).collect::<Vec<_>>(),
        "lower_variants_agree": agree,
    });
    Ok(Outcome::new(agree, text, result, violations))
}

fn cmd_multiplier(a: &DiAlgebra<Rat>, category: Category) -> crate::Result<Outcome> {
    require_valid(a)?;
    let d = multiplier_dims(a, category)?;
    let text = format!(
        "category {category}\nZ2 {}\nB2 {}\nH2 {}\n",
        d.cocycles, d.coboundaries, d.multiplier
    );
    let result = json!({
        "category": category,
        "cocycles": d.cocycles,
        "coboundaries": d.coboundaries,
        "multiplier": d.multiplier,
    });
    Ok(Outcome::new(true, text, result, Vec::new()))
}

fn cmd_bounds(a: &DiAlgebra<Rat>, ideal: Option<&str>) -> crate::Result<Outcome> {
    require_valid(a)?;
    let mut reports = all_bounds(a)?;
    if let Some(spec) = ideal {
        let z = parse_ideal(spec, a.dim())?;
        for r in reports.iter_mut().filter(|r| r.name == BoundKind::Cor42) {
            *r = check_bound(a, BoundKind::Cor42, r.category, Some(&z))?;
        }
    }
    let mut text = String::new();
    let mut violations = Vec::new();
    for r in &reports {
        let line = match (r.pair(), r.holds) {
            (Some((l, rhs)), Some(h)) => {
                if !h {
                    violations.push(format!("{} {}: {l} > {rhs}", r.category, r.name));
                }
                format!(
                    "{} {}: {l} <= {rhs} {}",
                    r.category,
                    r.name,
                    if h { "holds" } else { "FAILS" }
                )
            }
            _ => format!("{} {}: not applicable ({})", r.category, r.name, r.reasons.join("; ")),
        };
        text.push_str(&line);
        text.push('\n');
    }
    let ok = violations.is_empty();
    let result = serde_json::to_value(&reports).expect("reports serialize");
    Ok(Outcome::new(ok, text, result, violations))
}

fn sequence_json<S: Scalar>(rep: &SequenceReport<S>) -> Value {
    json!({
        "category": rep.category,
        "nodes": rep.nodes,
        "arrows": rep.arrows,
        "junctions": rep.junctions.iter().map(|j| json!({
            "node": j.node,
            "image_dim": j.image_dim,
            "kernel_dim": j.kernel_dim,
            "exact": j.is_exact(),
        })).collect::<Vec<_>>(),
        "exact_at": rep.exact_at(),
    })
}

fn sequence_text<S: Scalar>(rep: &SequenceReport<S>) -> String {
    let mut t = format!("category {}\n", rep.category);
    let nodes: Vec<String> = rep.nodes.iter().map(|n| format!("{}[{}]", n.name, n.dim)).collect();
    t.push_str(&format!("nodes {}\n", nodes.join(" -> ")));
    for a in &rep.arrows {
        t.push_str(&format!("arrow {}: rank {}, nullity {}\n", a.name, a.rank, a.nullity));
    }
    for j in &rep.junctions {
        t.push_str(&format!(
            "at {}: im {} ker {} {}\n",
            j.node,
            j.image_dim,
            j.kernel_dim,
            if j.is_exact() { "exact" } else { "NOT EXACT" }
        ));
    }
    t
}

fn cmd_sequence(a: &DiAlgebra<Rat>, ideal: Option<&str>, category: Category) -> crate::Result<Outcome> {
    let z = ideal.map(|s| parse_ideal(s, a.dim())).transpose()?;
    require_valid(a)?;
    let rep = match &z {
        Some(z) => five_term_report(a, category, z)?,
        None => thm43_report(a, category)?,
    };
    let violations: Vec<String> = rep
        .junctions
        .iter()
        .filter(|j| !j.is_exact())
        .map(|j| format!("not exact at {}", j.node))
        .collect();
    Ok(Outcome::new(
        rep.is_exact(),
        sequence_text(&rep),
        sequence_json(&rep),
        violations,
    ))
}

fn cmd_cover(loaded: &Loaded) -> crate::Result<Outcome> {
    let pair = load_defining_pair(loaded)?;
    require_valid(&pair.cover)?;
    require_valid(&pair.base)?;
    let ok = verify_defining_pair(&pair.cover, &pair.kernel, &pair.base, &pair.basis_map)?;
    let text = format!(
        "cover dim {}, kernel dim {}, base dim {}: {}\n",
        pair.cover.dim(),
        pair.kernel.dim(),
        pair.base.dim(),
        if ok { "defining pair" } else { "NOT a defining pair" }
    );
    let violations = if ok {
        Vec::new()
    } else {
        vec!["kernel is not in Z(K) ∩ K' or the basis map is not a homomorphism".to_string()]
    };
    let result = json!({
        "cover_dim": pair.cover.dim(),
        "kernel_dim": pair.kernel.dim(),
        "base_dim": pair.base.dim(),
        "defining_pair": ok,
    });
    Ok(Outcome::new(ok, text, result, violations))
}

fn cmd_gen(
    dim_base: usize,
    steps: usize,
    seed: u64,
    max_new: usize,
    category: Category,
    output: &Path,
) -> crate::Result<Outcome> {
    let a: DiAlgebra<Rat> = random_nilpotent_in(category, seed, dim_base, steps, max_new);
    let mut file = AlgebraFile::from_algebra(&a);
    file.generator = Some(GeneratorMeta {
        seed,
        dim_base,
        steps,
        max_new,
        category: category.name().to_string(),
    });
    std::fs::write(output, file.to_canonical_string())?;
    let text = format!(
        "wrote {} (dim {}, class {})\n",
        output.display(),
        a.dim(),
        a.nilpotency_class().map_or("-".into(), |c| c.to_string())
    );
    Ok(Outcome::new(true, text, json!({ "dim": a.dim() }), Vec::new()))
}
