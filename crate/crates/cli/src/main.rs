//! `valdef`: command-line front end. Every command prints one JSON document
//! `{"ok", "detail", "cap_used"?}` on stdout.
//!
//! Exit codes: 0 the property holds, 1 it is violated (witness in the
//! output), 2 malformed input or bad flags, 3 insufficient precision.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use valdef::algebra::{AlgebraKind, CochainTarget};
use valdef::decomp::{decompose_with, recompose, PivotOrder};
use valdef::deformation::{
    find_polynomial_gauge, graded_system, jacobi_residual, max_rank_check, polynomial_form_check,
    transport, Deformation,
};
use valdef::gerstenhaber::cohomology_dim;
use valdef::io::{self, LoadedAlgebra};
use valdef::nonassoc::{dual_identity_check, g_associative_check, tensor_product, SubgroupTag};
use valdef::poisson::{opposite_poisson, poisson_tensor, poisson_verify, PoissonStructure};
use valdef::rigidity::{enveloping_rigidity_report, zero_root_criterion};
use valdef::{AlgebraStructure, Error};

#[derive(Parser)]
#[command(
    name = "valdef",
    version,
    about = "Exact computations with valued deformations of finite-dimensional algebras"
)]
struct Cli {
    /// Working precision: series are known modulo t^(cap+1). Defaults to the input's cap, else 8;
    /// exceeding the input's cap exits with code 3.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a lie, assoc or poisson file.
    Check { file: PathBuf },
    /// Cohomology dimensions of a Lie algebra in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long = "deg")]
        degree: usize,
        #[arg(long, value_enum, default_value = "adjoint")]
        coeff: Coeff,
    },
    /// Flag decomposition of a vector over the maximal ideal.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "lowest")]
        pivot: Pivot,
    },
    /// Deformation commands.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// Roots, zero-root criterion and enveloping-algebra verdict for an algebra with torus data.
    Rigidity {
        file: PathBuf,
        /// Treat the algebra as rigid (never decided by the tool).
        #[arg(long)]
        asserted_rigid: bool,
    },
    /// G-associative identities.
    #[command(subcommand)]
    Gass(GassCommand),
    /// Poisson algebras.
    #[command(subcommand)]
    Poisson(PoissonCommand),
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Whether the deformed bracket satisfies Jacobi at the working cap.
    Verify { file: PathBuf },
    /// Rewrite the deformation in decomposed form.
    Decompose { file: PathBuf },
    /// Span relations of the graded deformation equations and the rank bound.
    Graded { file: PathBuf },
    /// Transport by a gauge `f = Id + h` and back by its inverse.
    Transport {
        file: PathBuf,
        #[arg(long)]
        gauge: PathBuf,
    },
    /// Whether a scalar gauge `P(t) Id` makes the law polynomial of degree <= k.
    Polycheck {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Coefficients of P from t^0, e.g. "1,1/2"; solved for when omitted.
        #[arg(long)]
        poly: Option<String>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Subgroup of S3: Id, T12, T23, T13, A3 or S3.
    #[arg(long)]
    group: String,
    /// Drop permutation signs from the G-sum.
    #[arg(long)]
    unsigned: bool,
}

#[derive(Subcommand)]
enum GassCommand {
    /// Whether an assoc-kind table is G-associative.
    Check {
        file: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Whether an associative table satisfies the dual identity for G.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Tensor product of a G-associative and a G-dual algebra.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Subcommand)]
enum PoissonCommand {
    Verify { file: PathBuf },
    Tensor { left: PathBuf, right: PathBuf },
    Opposite { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeff {
    Adjoint,
    Trivial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pivot {
    Lowest,
    Highest,
}

struct Outcome {
    ok: bool,
    detail: Value,
    cap_used: Option<usize>,
}

impl Outcome {
    fn new(ok: bool, detail: Value) -> Self {
        Self {
            ok,
            detail,
            cap_used: None,
        }
    }

    fn with_cap(mut self, cap: usize) -> Self {
        self.cap_used = Some(cap);
        self
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "ok": self.ok, "detail": self.detail });
        if let Some(cap) = self.cap_used {
            v["cap_used"] = json!(cap);
        }
        v
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    Ok(io::read_text(path)?)
}

fn load_plain(path: &Path) -> anyhow::Result<(AlgebraStructure, Option<valdef::TorusData>)> {
    Ok(io::parse_plain_algebra(&read(path)?)?)
}

fn load_poisson(path: &Path) -> anyhow::Result<PoissonStructure> {
    Ok(io::parse_poisson(&read(path)?)?)
}

fn load_deformation(path: &Path, cap: Option<usize>) -> anyhow::Result<Deformation> {
    Ok(io::parse_deformation(&read(path)?, path.parent(), cap)?)
}

fn group(args: &GroupArgs) -> anyhow::Result<SubgroupTag> {
    Ok(args.group.parse()?)
}

fn check(path: &Path) -> anyhow::Result<Outcome> {
    let detail = match io::parse_algebra(&read(path)?)? {
        LoadedAlgebra::Plain { algebra, .. } => {
            let (axiom, witness) = match algebra.kind() {
                AlgebraKind::Lie => ("jacobi", algebra.is_lie()?.1),
                AlgebraKind::Assoc => ("associativity", algebra.first_nonassociative_triple()),
            };
            json!({
                "kind": algebra.kind().name(),
                "dim": algebra.dim(),
                "holds": witness.is_none(),
                "witness": witness.map(|args| json!({ "axiom": axiom, "args": args })),
            })
        }
        LoadedAlgebra::Poisson(p) => {
            let mut v = report::poisson_witness(&poisson_verify(&p));
            v["kind"] = json!("poisson");
            v["dim"] = json!(p.dim());
            v
        }
    };
    Ok(Outcome::new(detail["holds"] == json!(true), detail))
}

fn cohomology(path: &Path, degree: usize, coeff: Coeff) -> anyhow::Result<Outcome> {
    let (g, _) = load_plain(path)?;
    let target = match coeff {
        Coeff::Adjoint => CochainTarget::Adjoint,
        Coeff::Trivial => CochainTarget::Trivial,
    };
    let r = cohomology_dim(&g, degree, target)?;
    Ok(Outcome::new(true, json!(r)))
}

fn decompose(path: &Path, pivot: Pivot, cap: Option<usize>) -> anyhow::Result<Outcome> {
    let w = io::parse_vector(&read(path)?, cap)?;
    let order = match pivot {
        Pivot::Lowest => PivotOrder::Lowest,
        Pivot::Highest => PivotOrder::Highest,
    };
    let d = decompose_with(&w, order)?;
    let round_trip = recompose(&d, w.cap()) == w;
    let mut detail = report::decomposition(&d);
    detail["round_trip"] = json!(round_trip);
    Ok(Outcome::new(round_trip, detail).with_cap(w.cap()))
}

fn deform(cmd: &DeformCommand, cap: Option<usize>) -> anyhow::Result<Outcome> {
    match cmd {
        DeformCommand::Verify { file } => {
            let d = load_deformation(file, cap)?;
            let res = jacobi_residual(&d);
            let (orders, witness) = report::residuals(&res);
            let detail = json!({
                "dim": d.base().dim(),
                "terms": d.len(),
                "decomposed": d.is_decomposed(),
                "residual_orders": orders,
                "witness": witness,
            });
            Ok(Outcome::new(res.is_empty(), detail).with_cap(d.cap()))
        }
        DeformCommand::Decompose { file } => {
            let d = load_deformation(file, cap)?;
            let nf = d.decomposed()?;
            let detail = json!({ "was_decomposed": d.is_decomposed(), "deformation": report::deformation(&nf) });
            Ok(Outcome::new(true, detail).with_cap(nf.cap()))
        }
        DeformCommand::Graded { file } => {
            let d = load_deformation(file, cap)?;
            let sys = graded_system(&d)?;
            let mut detail = report::graded(&sys);
            detail["max_rank"] = report::max_rank(&max_rank_check(&d)?);
            Ok(Outcome::new(sys.holds(), detail).with_cap(sys.cap))
        }
        DeformCommand::Transport { file, gauge } => {
            let d = load_deformation(file, cap)?;
            let f = io::parse_gauge(&read(gauge)?, cap)?;
            let moved = transport(&d, &f)?;
            let back = transport(&moved, &f.inverse())?;
            let original = d.truncate(moved.cap()).perturbation();
            let round_trip = back.perturbation().orders() == original.orders();
            let (orders, witness) = report::residuals(&jacobi_residual(&moved));
            let valid = orders.is_empty();
            let detail = json!({
                "deformation": report::deformation(&moved),
                "valid": valid,
                "residual_orders": orders,
                "residual_witness": witness,
                "round_trip": round_trip,
                "inverse_gauge": io::gauge_to_file(&f.inverse()),
            });
            Ok(Outcome::new(valid && round_trip, detail).with_cap(moved.cap()))
        }
        DeformCommand::Polycheck { file, k, poly } => {
            let d = load_deformation(file, cap)?;
            let (ok, p) = match poly {
                Some(text) => {
                    let p = io::parse_poly(text)?;
                    (polynomial_form_check(&d, &p, *k)?, Some(p))
                }
                None => match find_polynomial_gauge(&d, *k) {
                    Some(p) => (true, Some(p)),
                    None => (false, None),
                },
            };
            let detail = json!({
                "k": k,
                "poly": p.as_deref().map(report::rationals),
                "solved": poly.is_none(),
                "polynomial_form": ok,
            });
            Ok(Outcome::new(ok, detail).with_cap(d.cap()))
        }
    }
}

fn rigidity(path: &Path, asserted_rigid: bool) -> anyhow::Result<Outcome> {
    let (g, torus) = load_plain(path)?;
    let t =
        torus.ok_or_else(|| Error::InvalidTorus("algebra file has no \"torus\" entry".into()))?;
    let mut detail = report::rigidity(&enveloping_rigidity_report(&g, &t, asserted_rigid)?);
    if t.rank() == 1 {
        let z = zero_root_criterion(&g, &t)?;
        detail["roots"] = report::rationals(&z.roots.roots);
        detail["dim_H2_trivial"] = json!(z.dim_h2_trivial);
        detail["zero_root_criterion"] = report::zero_root(&z);
    }
    Ok(Outcome::new(true, detail))
}

fn gass(cmd: &GassCommand) -> anyhow::Result<Outcome> {
    match cmd {
        GassCommand::Check { file, group: args } => {
            let g = group(args)?;
            let (a, _) = load_plain(file)?;
            let c = g_associative_check(&a, g, !args.unsigned)?;
            let mut detail = report::identity(&c);
            detail["group"] = json!(g.name());
            detail["signed"] = json!(!args.unsigned);
            Ok(Outcome::new(c.holds(), detail))
        }
        GassCommand::Dual { file, group: args } => {
            let g = group(args)?;
            let (b, _) = load_plain(file)?;
            let c = dual_identity_check(&b, g)?;
            let mut detail = report::identity(&c);
            detail["group"] = json!(g.name());
            Ok(Outcome::new(c.holds(), detail))
        }
        GassCommand::Tensor {
            left,
            right,
            group: args,
        } => {
            let g = group(args)?;
            let signed = !args.unsigned;
            let (a, _) = load_plain(left)?;
            let (b, _) = load_plain(right)?;
            let left_check = g_associative_check(&a, g, signed)?;
            let right_check = dual_identity_check(&b, g)?;
            let ab = tensor_product(&a, &b)?;
            let product_check = g_associative_check(&ab, g, signed)?;
            let detail = json!({
                "group": g.name(),
                "signed": signed,
                "left": report::identity(&left_check),
                "right_dual": report::identity(&right_check),
                "product": report::identity(&product_check),
                "table": io::algebra_to_file(&ab, None),
            });
            let ok = left_check.holds() && right_check.holds() && product_check.holds();
            Ok(Outcome::new(ok, detail))
        }
    }
}

fn poisson(cmd: &PoissonCommand) -> anyhow::Result<Outcome> {
    match cmd {
        PoissonCommand::Verify { file } => {
            let w = poisson_verify(&load_poisson(file)?);
            Ok(Outcome::new(w.is_none(), report::poisson_witness(&w)))
        }
        PoissonCommand::Tensor { left, right } => {
            let (p, q) = (load_poisson(left)?, load_poisson(right)?);
            let (wp, wq) = (poisson_verify(&p), poisson_verify(&q));
            if wp.is_some() || wq.is_some() {
                let detail = json!({ "left": report::poisson_witness(&wp), "right": report::poisson_witness(&wq) });
                return Ok(Outcome::new(false, detail));
            }
            let pq = poisson_tensor(&p, &q)?;
            let w = poisson_verify(&pq);
            let detail = json!({ "product": report::poisson_witness(&w), "table": io::poisson_to_file(&pq) });
            Ok(Outcome::new(w.is_none(), detail))
        }
        PoissonCommand::Opposite { file } => {
            let p = load_poisson(file)?;
            if let Some(w) = poisson_verify(&p) {
                return Ok(Outcome::new(
                    false,
                    json!({ "input": report::poisson_witness(&Some(w)) }),
                ));
            }
            let op = opposite_poisson(&p)?;
            let w = poisson_verify(&op);
            let detail = json!({ "opposite": report::poisson_witness(&w), "table": io::poisson_to_file(&op) });
            Ok(Outcome::new(w.is_none(), detail))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Cohomology {
            file,
            degree,
            coeff,
        } => cohomology(file, *degree, *coeff),
        Command::Decompose { file, pivot } => decompose(file, *pivot, cli.cap),
        Command::Deform(cmd) => deform(cmd, cli.cap),
        Command::Rigidity {
            file,
            asserted_rigid,
        } => rigidity(file, *asserted_rigid),
        Command::Gass(cmd) => gass(cmd),
        Command::Poisson(cmd) => poisson(cmd),
    }
}

fn render(v: &Value, pretty: bool) -> anyhow::Result<String> {
    let s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    s.context("serializing output")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match run(&cli) {
        Ok(outcome) => {
            let code = if outcome.ok { 0 } else { 1 };
            (outcome.to_json(), code)
        }
        Err(err) => {
            let lib = err.downcast_ref::<Error>();
            let code = match lib {
                Some(Error::PrecisionExhausted(_)) => 3,
                _ => 2,
            };
            eprintln!("valdef: {err:#}");
            let kind = lib.map_or("input", report::error_kind);
            (
                json!({ "ok": false, "error": { "kind": kind, "message": format!("{err:#}") } }),
                code,
            )
        }
    };
    let text = match render(&doc, cli.pretty) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("valdef: {e:#}");
            return ExitCode::from(2);
        }
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code)
}
