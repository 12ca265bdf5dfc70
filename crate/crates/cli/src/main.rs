//! `vir25` command-line front end. Every subcommand prints one JSON document
//! `{command, inputs, output, status}` unless `--format text|latex` is given.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vir25::bpz::{
    derive_bpz, frobenius_solve_with_free, l21_ode, rigidity_with_normalization, verify_solution,
};
use vir25::category::{braiding_report, monodromy_parity_scan, twist_scalar};
use vir25::fusion::{
    algebra_character, centralizer_fusion, decompose_algebra_named, fuse,
    generic_centralizer_fusion, induce_centralizer, induce_w, AlgebraName,
};
use vir25::scalar::{format_rational, int, parse_rational, Matrix, Rational};
use vir25::suite::reproduction_suite;
use vir25::verma::{
    character, dual_basis, gram_matrix, h_rs, singular_vector, HWModuleDescriptor, PBWVector,
};
use vir25::{Error, Result};

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn triple(s: &str) -> std::result::Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected a,b,c with positive integers, got {s:?}"))
        })
        .collect::<std::result::Result<_, _>>()?;
    match parts.as_slice() {
        [a, b, c] => Ok((*a, *b, *c)),
        _ => Err(format!("expected three comma-separated labels, got {s:?}")),
    }
}

#[derive(Clone, Copy, ValueEnum, Debug, PartialEq)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Parser, Debug)]
#[command(name = "vir25", version, about = "Exact Virasoro c = 25 computations")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Truncation order for series output.
    #[arg(long, env = "VIR25_ORDER", default_value_t = 24, global = true)]
    order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct ModuleArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    h: Rational,
    /// Quotient by the singular vector at this level.
    #[arg(long)]
    quotient_level: Option<u32>,
}

impl ModuleArgs {
    fn build(&self) -> Result<std::sync::Arc<HWModuleDescriptor>> {
        match self.quotient_level {
            Some(l) => HWModuleDescriptor::quotient(self.c.clone(), self.h.clone(), l),
            None => Ok(HWModuleDescriptor::verma(self.c.clone(), self.h.clone())),
        }
    }

    fn inputs(&self) -> Value {
        json!({"c": format_rational(&self.c), "h": format_rational(&self.h), "quotient_level": self.quotient_level})
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h_{r,s}(t)
    Weight {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        t: Rational,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    Gram {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        level: u32,
    },
    Singular {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long)]
        level: u32,
    },
    DualBasis {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        level: u32,
    },
    /// Character of a highest-weight module, or per-summand characters of an algebra.
    Character {
        #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "algebra")]
        c: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "algebra")]
        h: Option<Rational>,
        #[arg(long)]
        quotient_level: Option<u32>,
        #[arg(long, conflicts_with_all = ["c", "h", "quotient_level"])]
        algebra: Option<String>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        weight_floor: Option<Rational>,
        #[arg(long, default_value_t = 4)]
        summands: u32,
    },
    Fuse {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        rp: u32,
    },
    /// `W(-1) ⊠ L_{r,1}`, or the centralizer induction of `(r, r')` when `--rp` is given.
    Induce {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        rp: Option<u32>,
    },
    Decompose {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    CentralizerFusion {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        rp: u32,
    },
    GenericFusion {
        #[arg(long, value_parser = triple)]
        a: (u32, u32, u32),
        #[arg(long, value_parser = triple)]
        b: (u32, u32, u32),
    },
    /// Null-vector ODE and its Frobenius solutions at 0. Defaults to c = 25, h = -5/4.
    Bpz {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h_deg: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h_other: Option<Rational>,
        /// Value of the free coefficient at a resonant exponent.
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        free: Option<Rational>,
    },
    Rigidity {
        #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
        c0_scale: Rational,
    },
    Braiding,
    /// e^{2πi h_{r,1}} at c = 1 or 25.
    Twist {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        r: u32,
    },
    ParityCheck {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 15)]
        range: u32,
    },
    PaperSuite,
}

struct Outcome {
    inputs: Value,
    output: Value,
    text: String,
    latex: Option<String>,
    suite_failed: bool,
}

impl Outcome {
    fn new(inputs: Value, output: Value, text: String) -> Self {
        Self {
            inputs,
            output,
            text,
            latex: None,
            suite_failed: false,
        }
    }

    fn latex(mut self, s: String) -> Self {
        self.latex = Some(s);
        self
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Weight { .. } => "weight",
        Command::Gram { .. } => "gram",
        Command::Singular { .. } => "singular",
        Command::DualBasis { .. } => "dual-basis",
        Command::Character { .. } => "character",
        Command::Fuse { .. } => "fuse",
        Command::Induce { .. } => "induce",
        Command::Decompose { .. } => "decompose",
        Command::CentralizerFusion { .. } => "centralizer-fusion",
        Command::GenericFusion { .. } => "generic-fusion",
        Command::Bpz { .. } => "bpz",
        Command::Rigidity { .. } => "rigidity",
        Command::Braiding => "braiding",
        Command::Twist { .. } => "twist",
        Command::ParityCheck { .. } => "parity-check",
        Command::PaperSuite => "paper-suite",
    }
}

fn vectors(vs: &[PBWVector]) -> (Value, String, String) {
    (
        json!(vs.iter().map(PBWVector::to_json).collect::<Vec<_>>()),
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        vs.iter()
            .map(|v| v.latex())
            .collect::<Vec<_>>()
            .join(",\\quad "),
    )
}

fn pmatrix(m: &Matrix<Rational>) -> String {
    let tex = |q: &Rational| {
        if q.denom() == &1.into() {
            q.numer().to_string()
        } else {
            let sign = if q < &int(0) { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
        }
    };
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(tex).collect::<Vec<_>>().join(" & "))
        .collect();
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        rows.join(" \\\\ ")
    )
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn run(cmd: &Command, order: usize) -> Result<Outcome> {
    Ok(match cmd {
        Command::Weight { t, r, s } => {
            let h = h_rs(t, *r, *s)?;
            Outcome::new(
                json!({"t": format_rational(t), "r": r, "s": s}),
                json!({"h": format_rational(&h)}),
                format!("h({r},{s}) = {}", format_rational(&h)),
            )
        }
        Command::Gram { module, level } => {
            let g = gram_matrix(&*module.build()?, *level);
            let text = g
                .entries
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join("  "))
                .collect::<Vec<_>>()
                .join("\n");
            let mut inputs = module.inputs();
            inputs["level"] = json!(level);
            Outcome::new(inputs, g.to_json(), text).latex(pmatrix(&g.entries))
        }
        Command::Singular { c, h, level } => {
            let m = HWModuleDescriptor::verma(c.clone(), h.clone());
            let (j, t, l) = vectors(&singular_vector(&m, *level)?);
            Outcome::new(
                json!({"c": format_rational(c), "h": format_rational(h), "level": level}),
                j,
                t,
            )
            .latex(l)
        }
        Command::DualBasis { module, level } => {
            let (j, t, l) = vectors(&dual_basis(&module.build()?, *level)?);
            let mut inputs = module.inputs();
            inputs["level"] = json!(level);
            Outcome::new(inputs, j, t).latex(l)
        }
        Command::Character {
            c,
            h,
            quotient_level,
            algebra,
            weight_floor,
            summands,
        } => match algebra {
            Some(name) => {
                let name: AlgebraName = name.parse()?;
                let floor = weight_floor.clone().unwrap_or_else(|| int(i64::MIN / 4));
                let ch = algebra_character(name, &floor, *summands, order)?;
                let text = ch
                    .summands
                    .iter()
                    .map(|(s, series)| {
                        format!(
                            "{:?} h={}: {series}",
                            s.labels,
                            format_rational(&s.lowest_weight)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                Outcome::new(
                    json!({"algebra": name.as_str(), "weight_floor": weight_floor.as_ref().map(format_rational),
                        "summands": summands, "order": order}),
                    ch.to_json(),
                    format!("partial character of {name}\n{text}"),
                )
            }
            None => {
                let (c, h) = (
                    c.clone().expect("required by clap"),
                    h.clone().expect("required by clap"),
                );
                let m = match quotient_level {
                    Some(l) => HWModuleDescriptor::quotient(c.clone(), h.clone(), *l)?,
                    None => HWModuleDescriptor::verma(c.clone(), h.clone()),
                };
                let ch = character(&m, order);
                Outcome::new(
                    json!({"c": format_rational(&c), "h": format_rational(&h), "quotient_level": quotient_level, "order": order}),
                    ch.to_json(),
                    ch.to_string(),
                )
            }
        },
        Command::Fuse { r, rp } => {
            let f = fuse(*r, *rp)?;
            Outcome::new(json!({"r": r, "rp": rp}), f.to_json(), f.to_string())
        }
        Command::Induce { r, rp } => match rp {
            None => {
                let (name, label) = induce_w(*r)?;
                Outcome::new(
                    json!({"r": r}),
                    json!({"module": name.as_str(), "label": label}),
                    format!("W(-1) ⊠ L({r},1) = {name}_{label}"),
                )
            }
            Some(rp) => {
                let f = induce_centralizer(*r, *rp)?;
                let text = f
                    .labels()
                    .iter()
                    .map(|k| format!("W_{k}"))
                    .collect::<Vec<_>>()
                    .join(" ⊕ ");
                Outcome::new(json!({"r": r, "rp": rp}), f.to_json(), text)
            }
        },
        Command::Decompose { algebra, count } => {
            let s = decompose_algebra_named(algebra, *count)?;
            let text = s
                .iter()
                .map(|x| {
                    format!(
                        "{} · {:?}  h = {}",
                        x.multiplicity,
                        x.labels,
                        format_rational(&x.lowest_weight)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(
                json!({"algebra": algebra, "count": count}),
                json!(s.iter().map(|x| x.to_json()).collect::<Vec<_>>()),
                text,
            )
        }
        Command::CentralizerFusion { r, rp } => {
            let f = centralizer_fusion(*r, *rp)?;
            let text = f
                .labels()
                .iter()
                .map(|k| format!("W_{k}"))
                .collect::<Vec<_>>()
                .join(" ⊕ ");
            Outcome::new(json!({"r": r, "rp": rp}), f.to_json(), text)
        }
        Command::GenericFusion { a, b } => {
            let f = generic_centralizer_fusion(*a, *b)?;
            let items: Vec<Value> = f
                .iter()
                .map(|((x, y, z), m)| json!({"labels": [x, y, z], "multiplicity": m}))
                .collect();
            let text = f
                .iter()
                .map(|((x, y, z), m)| format!("{m} · ({x},{y},{z})"))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(
                json!({"a": [a.0, a.1, a.2], "b": [b.0, b.1, b.2]}),
                json!(items),
                text,
            )
        }
        Command::Bpz {
            c,
            h_deg,
            h_other,
            free,
        } => {
            let ode = match (c, h_deg, h_other) {
                (None, None, None) => l21_ode(),
                _ => derive_bpz(
                    &c.clone().unwrap_or_else(|| int(25)),
                    &h_deg.clone().unwrap_or_else(|| int(-5) / int(4)),
                    &h_other.clone().unwrap_or_else(|| int(-5) / int(4)),
                )?,
            };
            let free = free.clone().unwrap_or_default();
            let mut solutions = Vec::new();
            let mut text = format!("{ode}\n");
            for e in ode.indicial_exponents(0)? {
                let s = frobenius_solve_with_free(&ode, 0, &e, order, &free)?;
                let residual_zero = verify_solution(&ode, &s).is_zero();
                text.push_str(&format!("exponent {}: {s}\n", format_rational(&e)));
                solutions.push(json!({"exponent": format_rational(&e), "series": s.to_json(), "residual_zero": residual_zero}));
            }
            Outcome::new(
                json!({"c": c.as_ref().map(format_rational), "h_deg": h_deg.as_ref().map(format_rational),
                    "h_other": h_other.as_ref().map(format_rational), "free": format_rational(&free), "order": order}),
                json!({"ode": ode.to_json(), "solutions": solutions}),
                text.trim_end().to_string(),
            )
        }
        Command::Rigidity { c0_scale } => {
            let r = rigidity_with_normalization(c0_scale, order.clamp(4, 40))?;
            let text = format!(
                "c0 = {}\nc3 = {}\na = {}\nb = {}\nR = {}",
                format_rational(&r.c0),
                format_rational(&r.c3),
                format_rational(&r.a),
                format_rational(&r.b),
                format_rational(&r.rigidity_scalar)
            );
            Outcome::new(
                json!({"c0_scale": format_rational(c0_scale)}),
                r.to_json(),
                text,
            )
        }
        Command::Braiding => {
            let rep = braiding_report()?;
            Outcome::new(json!({}), rep.clone(), pretty(&rep))
        }
        Command::Twist { c, r } => {
            let z = twist_scalar(*c, *r)?;
            Outcome::new(
                json!({"c": c, "r": r}),
                json!({"theta": z.to_json()}),
                format!("theta = {z}"),
            )
        }
        Command::ParityCheck { r, range } => {
            let rep = monodromy_parity_scan(*r, *range)?;
            let text = match &rep.witness {
                None => format!("integral for r = {r}"),
                Some((rp, k, v)) => format!(
                    "not integral: r' = {rp}, k = {k}, value {}",
                    format_rational(v)
                ),
            };
            Outcome::new(json!({"r": r, "range": range}), rep.to_json(), text)
        }
        Command::PaperSuite => {
            let checks = reproduction_suite();
            let failed = checks.iter().any(|c| !c.passed);
            let text = checks
                .iter()
                .map(|c| format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name))
                .collect::<Vec<_>>()
                .join("\n");
            let mut o = Outcome::new(
                json!({}),
                json!({"checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(), "all_passed": !failed}),
                text,
            );
            o.suite_failed = failed;
            o
        }
    })
}

/// Closed pipes are not an error worth a panic.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let name = command_name(&cli.command);
    match run(&cli.command, cli.order) {
        Ok(o) => {
            match cli.format {
                Format::Json => emit(&pretty(
                    &json!({"command": name, "inputs": o.inputs, "output": o.output, "status": "ok"}),
                )),
                Format::Text => emit(&o.text),
                Format::Latex => emit(o.latex.as_ref().unwrap_or(&o.text)),
            }
            if o.suite_failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => emit(&pretty(&json!({
                    "command": name,
                    "inputs": {"argv": std::env::args().skip(1).collect::<Vec<_>>()},
                    "output": Value::Null,
                    "status": {"error": e.to_string()},
                }))),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(match e {
                Error::Parse(_) | Error::UnknownName(_) => 1,
                _ => 2,
            })
        }
    }
}
