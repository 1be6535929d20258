//! `painleve`: classify, analyze and solve `u''' − B u u'' − A u'² + α u'' +
//! β u' + γ u + δ = 0` from the command line.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use painleve_core::catalog::{
    alpha_translation, chazy2_reduction, chazy3_solution, classify, fs_lambda_enumerate, generic_check,
    table1_solutions, weierstrass_b0_solution, CaseTag, FreeChoices, SolutionDescriptor,
};
use painleve_core::ode::{from_cheng_minkowycz, from_falkner_skan};
use painleve_core::painleve::{fuchs_indices, laurent_expand, painleve_test_params};
use painleve_core::verify::verify_descriptor;
use painleve_core::{OdeParams, Rational};

fn rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn free_choice(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let name = name.trim();
    if !["zeta0", "k", "a", "b", "c"].contains(&name) {
        return Err(format!("unknown free parameter {name:?} (expected zeta0, k, a, b or c)"));
    }
    Ok((name.to_string(), rational(value.trim())?))
}

#[derive(Parser)]
#[command(name = "painleve", version, about = "Painlevé analysis and closed-form solutions of u''' − B u u'' − A u'² + α u'' + β u' + γ u + δ = 0")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Genericity conditions and the parameter regime.
    Classify(ParamArgs),
    /// Simple-pole Laurent expansion, resonances and the Painlevé verdict.
    Analyze {
        #[command(flatten)]
        params: ParamArgs,
        /// Expansion order (at least 10).
        #[arg(long = "N", default_value_t = 20)]
        n: i64,
    },
    /// Every closed-form meromorphic solution, each with its verification.
    Solve(SolveArgs),
    /// Falkner–Skan wedge parameters where the genericity conditions fail.
    FsLambda {
        #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
        r_min: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        r_max: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        j_max: i64,
    },
}

/// Rational constants are given as `p/q` or `p`; omitted ones are 0.
#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long = "A", value_parser = rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    gamma: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    delta: Option<Rational>,
    /// Falkner–Skan wedge parameter λ: A = δ = λ, B = −1.
    #[arg(long, value_parser = rational, allow_hyphen_values = true,
          conflicts_with_all = ["a", "b", "alpha", "beta", "gamma", "delta", "cm_a"])]
    fs_lambda: Option<Rational>,
    /// Cheng–Minkowycz parameter a: A = a, B = −(a+1)/2.
    #[arg(long, value_parser = rational, allow_hyphen_values = true,
          conflicts_with_all = ["a", "b", "alpha", "beta", "gamma", "delta"])]
    cm_a: Option<Rational>,
}

impl ParamArgs {
    fn resolve(&self, warnings: &mut Vec<String>) -> OdeParams {
        if let Some(lambda) = &self.fs_lambda {
            return from_falkner_skan(lambda);
        }
        if let Some(a) = &self.cm_a {
            let (p, w) = from_cheng_minkowycz(a);
            warnings.extend(w);
            return p;
        }
        let v = |x: &Option<Rational>| x.clone().unwrap_or_default();
        OdeParams::new(v(&self.a), v(&self.b), v(&self.alpha), v(&self.beta), v(&self.gamma), v(&self.delta))
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Order of the exact series check (at least 10).
    #[arg(long = "N", default_value_t = 20)]
    n: i64,
    /// Zeta-solution constant c and double-pole coefficient.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    c: Rational,
    /// Additive constant of the zeta solution.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    c1: Rational,
    /// First-integral constants of the B = A regime.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    k0: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    k1: Rational,
    /// Initial data w(0), w'(0) of the linearised B = A equation.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    w0: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    w0p: Rational,
    /// Free constants of the generic families: zeta0, k, a, b, c.
    #[arg(long = "free", value_parser = free_choice)]
    free: Vec<(String, Rational)>,
}

struct Report {
    command: &'static str,
    params: Option<OdeParams>,
    result: Json,
    text: String,
    warnings: Vec<String>,
    status: u8,
}

fn params_json(p: &OdeParams) -> Json {
    json!({
        "A": p.a, "B": p.b, "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "delta": p.delta,
    })
}

fn case_name(tag: CaseTag) -> String {
    serde_json::to_value(tag)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn cmd_classify(args: &ParamArgs) -> Report {
    let mut warnings = Vec::new();
    let p = args.resolve(&mut warnings);
    let verdict = generic_check(&p.a, &p.b);
    let tag = classify(&p);
    let mut text = format!("equation: {p}\ncase: {}\n", case_name(tag));
    text += &format!(
        "cond i (AB(A+B) ≠ 0): {}\ncond ii: {}{}\ncond iii: {}{}\ngeneric: {}\n",
        verdict.cond_i,
        verdict.cond_ii,
        if verdict.cond_ii_undefined { " (undefined, A + B = 0)" } else { "" },
        verdict.cond_iii,
        if verdict.cond_iii_undefined { " (undefined, A + 2B = 0)" } else { "" },
        verdict.generic
    );
    let mut result = serde_json::to_value(&verdict).expect("serializable");
    result["case"] = json!(tag);
    Report {
        command: "classify",
        params: Some(p),
        result,
        text,
        warnings,
        status: 0,
    }
}

fn cmd_analyze(args: &ParamArgs, n: i64) -> Result<Report, String> {
    if n < 10 {
        return Err(format!("--N must be at least 10 (got {n})"));
    }
    let mut warnings = Vec::new();
    let p = args.resolve(&mut warnings);
    let test = painleve_test_params(&p);
    let mut text = format!("equation: {p}\ncase: {}\n", case_name(classify(&p)));
    let linear = p.a.is_zero() && p.b.is_zero();
    let mut expansion = Json::Null;
    if linear {
        warnings.push("linear equation with constant coefficients: every solution is entire".into());
    } else if p.pole_sum().is_zero() {
        warnings.push("A + 2B = 0: no simple-pole balance; the generic engine result is reported".into());
    } else {
        let top = fuchs_indices(&p)
            .map(|f| f.positive_integers().last().copied().unwrap_or(0))
            .unwrap_or(0);
        let order = n.max(top);
        if order > n {
            warnings.push(format!("N raised from {n} to {order} to reach the largest resonance"));
        }
        let rep = laurent_expand(&p, order, &BTreeMap::new()).map_err(|e| e.to_string())?;
        let idx: Vec<String> = rep.fuchs.indices.iter().map(|j| j.to_string()).collect();
        text += &format!("simple pole: u ~ {} χ^-1\nFuchs indices: {{{}}}\n", rep.leading.u0, idx.join(", "));
        text += &format!("series: {}\n", rep.series());
        for r in rep.resonances() {
            text += &format!(
                "resonance j = {}: Q_j = {} ({})\n",
                r.j,
                r.q_j,
                if r.compatible { "compatible" } else { "incompatible" }
            );
        }
        expansion = serde_json::to_value(&rep).expect("serializable");
    }
    text += &format!("Painlevé test: {}\n", serde_json::to_value(test.verdict).unwrap().as_str().unwrap_or(""));
    let mut reasons: Vec<&String> = test.reasons.iter().collect();
    let mut notes: Vec<&String> = test.notes.iter().collect();
    for b in &test.branches {
        reasons.extend(&b.reasons);
        notes.extend(&b.notes);
    }
    for r in reasons {
        text += &format!("  reason: {r}\n");
    }
    for r in notes {
        text += &format!("  note: {r}\n");
    }
    Ok(Report {
        command: "analyze",
        params: Some(p.clone()),
        result: json!({ "case": classify(&p), "expansion": expansion, "painleve": test }),
        text,
        warnings,
        status: 0,
    })
}

/// Descriptors of the special regimes, built on the α-free equation and
/// shifted back.
fn special_descriptors(p: &OdeParams, args: &SolveArgs, warnings: &mut Vec<String>) -> Vec<SolutionDescriptor> {
    let mut out = Vec::new();
    match classify(p) {
        CaseTag::WeierstrassB0 => match weierstrass_b0_solution(p, &args.c, &args.c1) {
            Ok(d) => out.push(d),
            Err(e) => warnings.push(e.to_string()),
        },
        CaseTag::ChazyII | CaseTag::ChazyIII => {
            let (shifted, offset) = match alpha_translation(p) {
                Ok(t) => t,
                Err(e) => {
                    warnings.push(e.to_string());
                    return out;
                }
            };
            let built = if classify(p) == CaseTag::ChazyII {
                chazy2_reduction(&shifted, &args.k0, &args.k1, &args.w0, &args.w0p).map(|r| r.descriptors)
            } else {
                chazy3_solution(&shifted, &args.c).map(|d| vec![d])
            };
            match built {
                Ok(ds) => out.extend(ds.into_iter().map(|d| d.with_offset(offset.clone()))),
                Err(e) => warnings.push(e.to_string()),
            }
        }
        CaseTag::Linear => warnings.push(
            "linear equation with constant coefficients: its exponential-polynomial solutions are not enumerated".into(),
        ),
        _ => {}
    }
    out
}

fn cmd_solve(args: &SolveArgs) -> Result<Report, String> {
    if args.n < 10 {
        return Err(format!("--N must be at least 10 (got {})", args.n));
    }
    let mut warnings = Vec::new();
    let p = args.params.resolve(&mut warnings);
    let free: FreeChoices = args.free.iter().cloned().collect();
    let table = table1_solutions(&p, &free);
    warnings.extend(table.warnings.iter().cloned());
    let mut candidates = table.descriptors;
    candidates.extend(special_descriptors(&p, args, &mut warnings));

    let mut seen = Vec::new();
    candidates.retain(|d| {
        let j = d.to_json();
        let fresh = !seen.contains(&j);
        seen.push(j);
        fresh
    });

    let mut solutions = Vec::new();
    let mut text = format!("equation: {p}\ncase: {}\n", case_name(classify(&p)));
    for d in candidates {
        match verify_descriptor(&p, &d, args.n) {
            Ok(r) if r.verified => {
                text += &format!(
                    "{}: {} [{} check passed]\n",
                    d.tag(),
                    serde_json::to_string(&d.to_json()["params"]).unwrap_or_default(),
                    serde_json::to_value(r.mode).unwrap().as_str().unwrap_or("")
                );
                let mut entry = d.to_json();
                entry["verification"] = serde_json::to_value(&r).expect("serializable");
                solutions.push(entry);
            }
            Ok(_) => warnings.push(format!("dropped a {} candidate that failed verification", d.tag())),
            Err(e) => warnings.push(format!("dropped a {} candidate: {e}", d.tag())),
        }
    }
    let status = if solutions.is_empty() {
        text += "no nonconstant meromorphic solution found\n";
        1
    } else {
        0
    };
    Ok(Report {
        command: "solve",
        params: Some(p),
        result: json!({ "solutions": solutions }),
        text,
        warnings,
        status,
    })
}

fn cmd_fs_lambda(r_min: i64, r_max: i64, j_max: i64) -> Result<Report, String> {
    let cat = fs_lambda_enumerate(r_min, r_max, j_max).map_err(|e| e.to_string())?;
    let sorted = cat.sorted_lambdas();
    let mut text = String::from("family   n    lambda\n");
    for (name, entries) in [("1-1/r", &cat.family_ii), ("j", &cat.family_iii)] {
        for e in entries {
            text += &format!("{name:<8} {:<4} {}\n", e.n, e.lambda);
        }
    }
    let all: Vec<String> = sorted.iter().map(|l| l.to_string()).collect();
    text += &format!("sorted: {}\n", all.join(", "));
    Ok(Report {
        command: "fs-lambda",
        params: None,
        result: json!({
            "r_min": r_min, "r_max": r_max, "j_max": j_max,
            "family_ii": cat.family_ii, "family_iii": cat.family_iii, "sorted": sorted,
        }),
        text,
        warnings: Vec::new(),
        status: 0,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Classify(p) => Ok(cmd_classify(p)),
        Command::Analyze { params, n } => cmd_analyze(params, *n),
        Command::Solve(args) => cmd_solve(args),
        Command::FsLambda { r_min, r_max, j_max } => cmd_fs_lambda(*r_min, *r_max, *j_max),
    };
    let report = match report {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if cli.json {
        let doc = json!({
            "command": report.command,
            "params": report.params.as_ref().map(params_json),
            "result": report.result,
            "warnings": report.warnings,
            "status": report.status,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        print!("{}", report.text);
    }
    ExitCode::from(report.status)
}
