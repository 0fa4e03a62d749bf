//! Command-line front end.
//!
//! Every subcommand produces a plain-text report whose first line is a `#`
//! header echoing the request. Exit status: 0 on success, 1 when a
//! verification fails or a computation runs out of budget, 2 on usage and
//! parse errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};

use crate::dense_verifier::{code_check, identity_suite, order_law, Tolerances};
use crate::error::Error;
use crate::finite_field::{FieldCtx, FieldSpec};
use crate::gf_linalg::DEFAULT_BUDGET;
use crate::stabilizer_core::StabilizerGroup;
use crate::symplectic_code::{
    family_params, min_weight_coset, read_code, search_selforthogonal, write_code, ClassicalCode, CodeFamily,
    InnerProductKind, SearchOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    /// Selforthogonality verdicts under all three inner products.
    VerifyClassical,
    /// Quantum code parameters and stabilizer generators.
    Params,
    /// Minimum distance with a witness vector.
    Distance,
    /// Dense matrix verification of the stabilizer code.
    DenseCheck,
    /// Seeded search for a selforthogonal code.
    Search,
    /// Parameter table of the distance-3 families.
    Families,
    /// Symbolic versus dense Pauli group identities.
    IdentitySuite,
}

impl Subcommand {
    fn name(self) -> &'static str {
        match self {
            Subcommand::VerifyClassical => "verify-classical",
            Subcommand::Params => "params",
            Subcommand::Distance => "distance",
            Subcommand::DenseCheck => "dense-check",
            Subcommand::Search => "search",
            Subcommand::Families => "families",
            Subcommand::IdentitySuite => "identity-suite",
        }
    }
}

/// Nonbinary stabilizer code toolkit.
#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "nbstab", version)]
pub struct CommandRequest {
    #[arg(value_enum)]
    pub subcommand: Subcommand,
    /// Field as `p=<int>,m=<int>[,mod=<c0,...,cm>]`.
    #[arg(long = "field")]
    pub field_spec: Option<String>,
    /// Code file to read.
    #[arg(long = "in")]
    pub input_path: Option<PathBuf>,
    /// Code file to write (search).
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Upper bound on enumerated vectors or characters.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Tolerance for exact matrix identities.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Tolerance for `PEP = cP` proportionality.
    #[arg(long)]
    pub tol_detect: Option<f64>,
    #[arg(long)]
    pub target_r: Option<usize>,
    #[arg(long)]
    pub target_d: Option<usize>,
    /// Alphabet size for the family table.
    #[arg(long)]
    pub q: Option<u64>,
    /// Family parameter `r`.
    #[arg(long)]
    pub r: Option<u32>,
    /// Code length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Random pairs tested by the identity suite.
    #[arg(long)]
    pub trials: Option<usize>,
}

impl CommandRequest {
    pub fn new(subcommand: Subcommand) -> Self {
        Self {
            subcommand,
            field_spec: None,
            input_path: None,
            output_path: None,
            seed: None,
            budget: None,
            tol: None,
            tol_detect: None,
            target_r: None,
            target_d: None,
            q: None,
            r: None,
            n: None,
            trials: None,
        }
    }

    fn header(&self) -> String {
        let mut h = format!("# nbstab {}", self.subcommand.name());
        let mut kv = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                let _ = write!(h, " --{k} {v}");
            }
        };
        kv("field", self.field_spec.clone());
        kv("in", self.input_path.as_ref().map(|p| p.display().to_string()));
        kv("out", self.output_path.as_ref().map(|p| p.display().to_string()));
        kv("seed", self.seed.map(|x| x.to_string()));
        kv("budget", self.budget.map(|x| x.to_string()));
        kv("tol", self.tol.map(|x| x.to_string()));
        kv("tol-detect", self.tol_detect.map(|x| x.to_string()));
        kv("target-r", self.target_r.map(|x| x.to_string()));
        kv("target-d", self.target_d.map(|x| x.to_string()));
        kv("q", self.q.map(|x| x.to_string()));
        kv("r", self.r.map(|x| x.to_string()));
        kv("n", self.n.map(|x| x.to_string()));
        kv("trials", self.trials.map(|x| x.to_string()));
        h.push('\n');
        h
    }

    fn budget(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_BUDGET)
    }

    fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(x) = self.tol {
            t.identity = x;
        }
        if let Some(x) = self.tol_detect {
            t.proportional = x;
        }
        t
    }
}

/// Result of a request: the process exit status and the report text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::NotPrime(_)
        | Error::ReducibleModulus { .. }
        | Error::DegreeMismatch { .. }
        | Error::FieldTooLarge { .. }
        | Error::InvalidFamily(_)
        | Error::ParityViolation { .. }
        | Error::InconsistentCharacter { .. } => 2,
        _ => 1,
    }
}

type Step = std::result::Result<i32, Failure>;

/// Executes one request. Never panics on bad input.
pub fn run(req: &CommandRequest) -> Outcome {
    let mut out = req.header();
    let result = match req.subcommand {
        Subcommand::VerifyClassical => verify_classical(req, &mut out),
        Subcommand::Params => params(req, &mut out),
        Subcommand::Distance => distance(req, &mut out),
        Subcommand::DenseCheck => dense_check(req, &mut out),
        Subcommand::Search => search(req, &mut out),
        Subcommand::Families => families(req, &mut out),
        Subcommand::IdentitySuite => run_identity_suite(req, &mut out),
    };
    let exit_code = match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(out, "error: {e}");
            exit_code_for(&e)
        }
    };
    Outcome { exit_code, report: out }
}

fn parse_field(req: &CommandRequest) -> std::result::Result<Option<Arc<FieldCtx>>, Failure> {
    match &req.field_spec {
        None => Ok(None),
        Some(s) => {
            let spec: FieldSpec = s.parse()?;
            Ok(Some(Arc::new(spec.build()?)))
        }
    }
}

fn require_field(req: &CommandRequest) -> std::result::Result<Arc<FieldCtx>, Failure> {
    parse_field(req)?.ok_or_else(|| usage(format!("{} requires --field", req.subcommand.name())))
}

fn load_code(req: &CommandRequest) -> std::result::Result<ClassicalCode, Failure> {
    let path = req
        .input_path
        .as_ref()
        .ok_or_else(|| usage(format!("{} requires --in", req.subcommand.name())))?;
    let code = read_code(path)?;
    if let Some(f) = parse_field(req)? {
        if *f != **code.field() {
            return Err(usage(format!(
                "--field {} does not match the file's field {}",
                f.spec_string(),
                code.field().spec_string()
            )));
        }
    }
    Ok(code)
}

fn describe(code: &ClassicalCode, out: &mut String) {
    let _ = writeln!(
        out,
        "code field={} n={} r={}",
        code.field().spec_string(),
        code.n(),
        code.rank()
    );
}

fn verify_classical(req: &CommandRequest, out: &mut String) -> Step {
    let code = load_code(req)?;
    describe(&code, out);
    let _ = writeln!(out, "fq-linear {}", if code.is_fq_linear() { "yes" } else { "no" });
    for kind in InnerProductKind::ALL {
        match code.selforthogonality_violation(kind) {
            None => {
                let _ = writeln!(out, "{kind} PASS");
            }
            Some((i, j, v)) => {
                let _ = writeln!(out, "{kind} FAIL rows {i},{j} pair to {}", v.0);
            }
        }
    }
    Ok(if code.is_selforthogonal(InnerProductKind::TraceSymplectic) {
        0
    } else {
        1
    })
}

fn params(req: &CommandRequest, out: &mut String) -> Step {
    let code = load_code(req)?;
    describe(&code, out);
    let s = StabilizerGroup::from_code(&code)?;
    let (params, report) = s.params(req.budget());
    let _ = writeln!(out, "{params}");
    let _ = writeln!(out, "generators:");
    for g in s.generators() {
        let _ = writeln!(out, "  {g}");
    }
    let report = report?;
    if let Some(w) = report.dual_min_weight {
        let _ = writeln!(
            out,
            "info: min nonzero weight in C-dual = {w} (informational; differs from the distance convention)"
        );
    }
    Ok(0)
}

fn distance(req: &CommandRequest, out: &mut String) -> Step {
    let code = load_code(req)?;
    describe(&code, out);
    let s = StabilizerGroup::from_code(&code)?;
    let report = min_weight_coset(&code, req.budget())?;
    let mut params = s.params_without_distance();
    params.distance = Some(report.distance);
    let _ = writeln!(out, "{params}");
    let _ = writeln!(out, "distance {}", report.distance);
    match &report.witness {
        Some(w) => {
            let _ = writeln!(out, "witness {w}");
            let _ = writeln!(out, "witness-operator {}", s.lift(w));
        }
        None => {
            let _ = writeln!(out, "witness none");
        }
    }
    let _ = writeln!(out, "enumerated {}", report.enumerated);
    Ok(0)
}

fn dense_check(req: &CommandRequest, out: &mut String) -> Step {
    let code = load_code(req)?;
    describe(&code, out);
    let s = StabilizerGroup::from_code(&code)?;
    let (params, _) = s.params(req.budget());
    let _ = writeln!(out, "{params}");
    let mu = s.default_character();
    let values: Vec<String> = mu.values.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "character [{}]", values.join(","));
    let report = code_check(&s, &mu, &req.tolerances(), req.budget())?;
    out.push_str(&report.to_string());
    let verdict = report.passed();
    let _ = writeln!(out, "{}", if verdict { "PASS" } else { "FAIL" });
    Ok(if verdict { 0 } else { 1 })
}

fn search(req: &CommandRequest, out: &mut String) -> Step {
    let field = require_field(req)?;
    let seed = req.seed.ok_or_else(|| usage("search requires --seed"))?;
    let n = req.n.ok_or_else(|| usage("search requires --n"))?;
    let target_r = req.target_r.ok_or_else(|| usage("search requires --target-r"))?;
    let target_d = req.target_d.unwrap_or(1);
    let opts = SearchOptions {
        budget: req.budget(),
        ..SearchOptions::default()
    };
    let code = search_selforthogonal(field, n, target_r, target_d, seed, &opts)?;
    let s = StabilizerGroup::from_code(&code)?;
    let (params, _) = s.params(req.budget());
    describe(&code, out);
    let _ = writeln!(out, "{params}");
    match &req.output_path {
        Some(path) => {
            write_code(path, &code).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let _ = writeln!(out, "wrote {}", path.display());
        }
        None => out.push_str(&crate::symplectic_code::format_code(&code)),
    }
    Ok(0)
}

fn families(req: &CommandRequest, out: &mut String) -> Step {
    let q = req.q.ok_or_else(|| usage("families requires --q"))?;
    family_params(q, CodeFamily::QuadraticPlusOne, 0)?;
    let _ = writeln!(out, "family r params formula");
    for fam in CodeFamily::ALL {
        let r = match (req.r, fam) {
            (_, CodeFamily::QuadraticPlusOne) => None,
            (Some(r), _) => Some(r),
            (None, CodeFamily::OddProjective) => Some(3),
            (None, _) => Some(2),
        };
        let shown = r.map_or("-".to_string(), |r| r.to_string());
        let row = match family_params(q, fam, r.unwrap_or(0)) {
            Ok(p) => p.to_string(),
            Err(e) => format!("n/a ({e})"),
        };
        let _ = writeln!(out, "{} {} {} {}", fam.id(), shown, row, fam.formula());
    }
    Ok(0)
}

fn run_identity_suite(req: &CommandRequest, out: &mut String) -> Step {
    let field = require_field(req)?;
    let n = req.n.unwrap_or(1);
    let seed = req.seed.unwrap_or(0);
    let trials = req.trials.unwrap_or(200);
    let tol = req.tolerances().identity;
    let p = field.p();
    let mut report = identity_suite(field, n, seed, trials, tol)?;
    for c in order_law(p, tol)?.checks {
        report.push(c);
    }
    out.push_str(&report.to_string());
    let verdict = report.passed();
    let _ = writeln!(out, "{}", if verdict { "PASS" } else { "FAIL" });
    Ok(if verdict { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_table_q2() {
        let mut req = CommandRequest::new(Subcommand::Families);
        req.q = Some(2);
        let o = run(&req);
        assert_eq!(o.exit_code, 0);
        let row2 = o.report.lines().find(|l| l.starts_with("2 ")).unwrap();
        assert!(row2.contains("[[5,1,3]]_2"), "{row2}");
        assert!(o.report.starts_with("# nbstab families --q 2\n"));
    }

    #[test]
    fn families_rejects_bad_q() {
        let mut req = CommandRequest::new(Subcommand::Families);
        req.q = Some(6);
        assert_eq!(run(&req).exit_code, 2);
    }

    #[test]
    fn missing_flags_are_usage_errors() {
        assert_eq!(run(&CommandRequest::new(Subcommand::Params)).exit_code, 2);
        let mut req = CommandRequest::new(Subcommand::Search);
        req.field_spec = Some("p=2,m=1".into());
        req.n = Some(5);
        req.target_r = Some(4);
        assert_eq!(run(&req).exit_code, 2);
        req.field_spec = Some("p=4,m=1".into());
        req.seed = Some(1);
        assert_eq!(run(&req).exit_code, 2);
    }

    #[test]
    fn identity_suite_qutrit() {
        let mut req = CommandRequest::new(Subcommand::IdentitySuite);
        req.field_spec = Some("p=3,m=1".into());
        req.trials = Some(20);
        let o = run(&req);
        assert_eq!(o.exit_code, 0, "{}", o.report);
    }

    #[test]
    fn request_parses_from_args() {
        let req = CommandRequest::try_parse_from([
            "nbstab",
            "search",
            "--field",
            "p=2,m=1",
            "--seed",
            "3",
            "--target-r",
            "4",
        ])
        .unwrap();
        assert_eq!(req.subcommand, Subcommand::Search);
        assert_eq!(req.seed, Some(3));
        assert_eq!(req.target_r, Some(4));
    }
}
