use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use whtors::abgroup::{homology_c2, tate_homology_c2};
use whtors::falg::{moore_homotopy, FAlgElement, FAlgGroup, MAX_FALG_DEGREE};
use whtors::group_ring::wh_class_equal;
use whtors::kapp::{k3_divisibility, literature_facts, tor_pi_r};
use whtors::lens::{inertia_set, theorem_a_report_with_unit};
use whtors::simplicial::{enumerate_contractible_subcomplexes, enumerate_subcomplexes};
use whtors::torsion::{self, HCobordismSymbol, WhValues};
use whtors::{
    GroupRingElement, InvolutiveAbelianGroup, LensSpace, OrientationCharacter, ReportDocument, Stage, StageStatus,
    WhiteheadClass,
};

#[derive(Parser, Debug)]
#[command(name = "whtors", version, about = "Exact Whitehead torsion and C₂-homology checks")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Largest simplex dimension accepted by the F^alg and subcomplex commands.
    #[arg(long, global = true, default_value_t = MAX_FALG_DEGREE)]
    max_p: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Units of Z[Cₙ].
    #[command(subcommand)]
    Unit(UnitCmd),
    /// Whitehead group classes.
    #[command(subcommand)]
    Wh(WhCmd),
    /// H_n(C₂; A).
    Homology(ModuleDegree),
    /// Tate homology Ĥ_n(C₂; A), any integer n.
    Tate {
        #[arg(long)]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    #[command(subcommand)]
    Falg(FalgCmd),
    #[command(subcommand)]
    Subcomplex(SubcomplexCmd),
    /// h-cobordism symbol calculus over Wh(Cₙ).
    #[command(subcommand)]
    Torsion(TorsionCmd),
    #[command(subcommand)]
    Lens(LensCmd),
    #[command(subcommand)]
    Kapp(KappCmd),
}

#[derive(Args, Debug)]
struct ModuleDegree {
    /// Module shorthand (`z2-trivial`, `z2xz2-sign`, `z-trivial`) or a JSON presentation.
    #[arg(long)]
    module: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct Element {
    #[arg(long)]
    order: usize,
    /// Comma-separated coefficients of 1, t, t², ….
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum UnitCmd {
    /// Check that an element is a unit and print its inverse.
    Verify(Element),
}

#[derive(Subcommand, Debug)]
enum WhCmd {
    /// Whether two units define the same class in Wh(Cₙ).
    Eq {
        #[arg(long)]
        order: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum FalgCmd {
    /// π_n of F^alg(A) against H_n(C₂; A).
    Pi {
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: usize,
    },
    /// Order of F^alg_p(A), and membership of an element if one is given.
    Check {
        #[arg(long)]
        target: String,
        #[arg(long)]
        p: usize,
        /// Element JSON, inline or `@path`.
        #[arg(long)]
        element: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SubcomplexCmd {
    /// Subcomplexes of Δᵖ and the contractible ones among them.
    Enum {
        #[arg(long)]
        p: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TorsionCmd {
    Compose {
        #[arg(long)]
        order: usize,
        /// Symbol JSON `{"d", "torsion", "twist"}`, inline or `@path`.
        #[arg(long)]
        w: String,
        #[arg(long)]
        w2: String,
    },
    Reverse {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        w: String,
    },
    Double {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
enum LensCmd {
    /// Inertia classes of the balanced lens space L(p; 1..p−1 repeated k times).
    Inertia {
        #[arg(long, default_value_t = 7)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        unit: Option<Vec<i64>>,
    },
    ReportTheoremA {
        #[arg(long)]
        k: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        unit: Option<Vec<i64>>,
    },
}

#[derive(Subcommand, Debug)]
enum KappCmd {
    /// Tor^{Z[Cₚ]}_i(Z, Z[ζₚ]).
    Tor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: u64,
    },
    /// 3-divisibility of |K₃(Z/p)|.
    K3 {
        #[arg(long)]
        p: u64,
    },
}

fn module(s: &str) -> Result<InvolutiveAbelianGroup> {
    let s = read_arg(s)?;
    s.parse().with_context(|| format!("bad module {s:?}"))
}

/// Inline text, or the contents of a file for `@path`.
fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(s.to_string()),
    }
}

fn json_arg(s: &str) -> Result<Value> {
    let text = read_arg(s)?;
    serde_json::from_str(&text).context("malformed JSON input")
}

fn element(order: usize, coeffs: &[i64]) -> Result<GroupRingElement> {
    Ok(GroupRingElement::from_i64(order, coeffs)?)
}

fn cap(what: &'static str, value: usize, max_p: usize) -> Result<()> {
    let max = max_p.min(MAX_FALG_DEGREE);
    if value > max {
        bail!(whtors::Error::CapExceeded { what, value, max });
    }
    Ok(())
}

/// Accepts `torsion` as a bare coefficient list as well as the emitted form.
fn symbol(g: &WhValues, s: &str) -> Result<HCobordismSymbol<WhValues>> {
    let mut v = json_arg(s)?;
    if let Some(list) = v["torsion"].as_array() {
        let coeffs: Vec<String> = list
            .iter()
            .map(|c| match c {
                Value::Number(n) => Ok(n.to_string()),
                Value::String(s) => Ok(s.clone()),
                other => bail!("bad coefficient {other}"),
            })
            .collect::<Result<_>>()?;
        v["torsion"] = json!({"order": g.order(), "coeffs": coeffs});
    }
    Ok(HCobordismSymbol::from_json(g, &v)?)
}

fn unit_verify(e: &Element) -> Result<ReportDocument> {
    let u = element(e.order, &e.coeffs)?;
    let mut r = ReportDocument::new("unit verify", json!({"order": e.order, "coeffs": u.to_string()}));
    let inv = match u.invert_unit() {
        Ok(inv) => inv,
        Err(err) => {
            r.push(Stage::check("u is a unit", false, json!(err.to_string())));
            return Ok(r);
        }
    };
    r.push(Stage::check(
        "u is a unit",
        true,
        json!({"inverse": inv.to_string(), "coeffs": inv.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()}),
    ));
    r.push(Stage::check("u·u⁻¹ = 1", (&u * &inv).is_one(), json!(inv.to_string())));
    r.push(Stage::new(
        "augmentation",
        StageStatus::Derived,
        json!(u.augmentation().to_string()),
    ));
    Ok(r)
}

fn wh_eq(order: usize, a: &[i64], b: &[i64]) -> Result<ReportDocument> {
    let x = WhiteheadClass::new(element(order, a)?)?;
    let y = WhiteheadClass::new(element(order, b)?)?;
    let mut r = ReportDocument::new(
        "wh eq",
        json!({"order": order, "a": x.representative().to_string(), "b": y.representative().to_string()}),
    );
    let eq = wh_class_equal(&x, &y)?;
    r.push(Stage::check("[a] = [b] in Wh", eq, json!({"equal": eq})));
    Ok(r)
}

fn falg_pi(target: &str, n: usize, max_p: usize) -> Result<ReportDocument> {
    cap("homotopy degree", n, max_p)?;
    let a = module(target)?;
    let mut r = ReportDocument::new("falg pi", json!({"target": target, "n": n}));
    let pi = moore_homotopy(&a, n)?;
    let h = homology_c2(&a, n);
    r.push(Stage::new(format!("π_{n} F^alg(A)"), StageStatus::Derived, json!(pi.to_string())));
    r.push(Stage::new(format!("H_{n}(C₂; A)"), StageStatus::Derived, json!(h.to_string())));
    r.push(Stage::check(format!("π_{n} ≅ H_{n}"), pi == h, json!(pi)));
    Ok(r)
}

fn falg_check(target: &str, p: usize, el: Option<&str>, max_p: usize) -> Result<ReportDocument> {
    cap("simplex dimension", p, max_p)?;
    let a = module(target)?;
    let mut r = ReportDocument::new("falg check", json!({"target": target, "p": p}));
    let g = FAlgGroup::new(&a, p)?;
    let order = g.order().map(|o| o.to_string());
    r.push(Stage::new(
        format!("F^alg_{p}(A)"),
        StageStatus::Derived,
        json!({"group": g.group().to_string(), "order": order}),
    ));
    if let Some(s) = el {
        let v = json_arg(s)?;
        let res = FAlgElement::from_json(&v);
        let ok = matches!(&res, Ok(x) if x.degree() == p && g.contains(x));
        let witness = match res {
            Ok(x) => json!({"psi": x.psi().iter().map(ToString::to_string).collect::<Vec<_>>()}),
            Err(e) => json!(e.to_string()),
        };
        r.push(Stage::check("element lies in F^alg_p(A)", ok, witness));
    }
    Ok(r)
}

fn subcomplex_enum(p: usize, max_p: usize) -> Result<ReportDocument> {
    cap("simplex dimension", p, max_p)?;
    let mut r = ReportDocument::new("subcomplex enum", json!({"p": p}));
    let all = enumerate_subcomplexes(p)?;
    let contractible = enumerate_contractible_subcomplexes(p)?;
    r.push(Stage::new("subcomplexes", StageStatus::Derived, json!(all.len())));
    r.push(Stage::new(
        "contractible subcomplexes",
        StageStatus::Derived,
        json!({
            "count": contractible.len(),
            "complexes": contractible.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    ));
    Ok(r)
}

fn torsion_cmd(cmd: &TorsionCmd) -> Result<ReportDocument> {
    let (name, order) = match cmd {
        TorsionCmd::Compose { order, .. } => ("compose", *order),
        TorsionCmd::Reverse { order, .. } => ("reverse", *order),
        TorsionCmd::Double { order, .. } => ("double", *order),
    };
    let g = WhValues::new(order, OrientationCharacter::TRIVIAL)?;
    let (out, params) = match cmd {
        TorsionCmd::Compose { w, w2, .. } => {
            let (a, b) = (symbol(&g, w)?, symbol(&g, w2)?);
            (torsion::compose(&g, &a, &b)?, json!({"order": order, "w": a.to_json(), "w2": b.to_json()}))
        }
        TorsionCmd::Reverse { w, .. } => {
            let a = symbol(&g, w)?;
            (torsion::reverse(&g, &a)?, json!({"order": order, "w": a.to_json()}))
        }
        TorsionCmd::Double { w, .. } => {
            let a = symbol(&g, w)?;
            (torsion::double(&g, &a)?, json!({"order": order, "w": a.to_json()}))
        }
    };
    let mut r = ReportDocument::new(format!("torsion {name}"), params);
    r.push(Stage::new(name, StageStatus::Derived, out.to_json()));
    Ok(r)
}

fn unit_or_default(p: u64, unit: &Option<Vec<i64>>) -> Result<GroupRingElement> {
    match unit {
        Some(c) => element(p as usize, c),
        None => Ok(whtors::lens::default_unit(p)?),
    }
}

fn lens_inertia(p: u64, k: u64, unit: &Option<Vec<i64>>) -> Result<ReportDocument> {
    let l = LensSpace::balanced(p, k)?;
    let u = unit_or_default(p, unit)?;
    let mut r = ReportDocument::new(
        "lens inertia",
        json!({"p": p, "k": k, "lens": l.to_string(), "unit": u.to_string()}),
    );
    let set = inertia_set(&l, &u)?;
    r.push(Stage::new("I(M)/D(M)", StageStatus::Derived, set.to_json()));
    Ok(r)
}

fn kapp_tor(p: u64, i: u64) -> Result<ReportDocument> {
    let mut r = ReportDocument::new("kapp tor", json!({"p": p, "i": i}));
    let g = tor_pi_r(p, i)?;
    r.push(Stage::new(format!("Tor_{i}"), StageStatus::Derived, json!(g.to_string())));
    Ok(r)
}

fn kapp_k3(p: u64) -> Result<ReportDocument> {
    let mut r = ReportDocument::new("kapp k3", json!({"p": p}));
    let d = k3_divisibility(p)?;
    let facts = literature_facts();
    let fact = facts
        .facts
        .iter()
        .find(|f| f.id == "K3_Fp")
        .context("bundled fact K3_Fp missing")?;
    r.push(Stage::assumed("|K₃(Z/p)| = p² − 1", fact.citation.clone(), json!(d.order)));
    r.push(Stage::check("3 ∣ |K₃(Z/p)|", d.divisible_by_3, serde_json::to_value(&d)?));
    Ok(r)
}

fn dispatch(cli: &Cli) -> Result<ReportDocument> {
    match &cli.command {
        Command::Unit(UnitCmd::Verify(e)) => unit_verify(e),
        Command::Wh(WhCmd::Eq { order, a, b }) => wh_eq(*order, a, b),
        Command::Homology(m) => {
            let a = module(&m.module)?;
            let mut r = ReportDocument::new("homology", json!({"module": m.module, "n": m.n}));
            let h = homology_c2(&a, m.n);
            r.push(Stage::new(format!("H_{}(C₂; A)", m.n), StageStatus::Derived, json!(h.to_string())));
            Ok(r)
        }
        Command::Tate { module: s, n } => {
            let a = module(s)?;
            let mut r = ReportDocument::new("tate", json!({"module": s, "n": n}));
            let h = tate_homology_c2(&a, *n);
            r.push(Stage::new(format!("Ĥ_{n}(C₂; A)"), StageStatus::Derived, json!(h.to_string())));
            Ok(r)
        }
        Command::Falg(FalgCmd::Pi { target, n }) => falg_pi(target, *n, cli.max_p),
        Command::Falg(FalgCmd::Check { target, p, element }) => falg_check(target, *p, element.as_deref(), cli.max_p),
        Command::Subcomplex(SubcomplexCmd::Enum { p }) => subcomplex_enum(*p, cli.max_p),
        Command::Torsion(t) => torsion_cmd(t),
        Command::Lens(LensCmd::Inertia { p, k, unit }) => lens_inertia(*p, *k, unit),
        Command::Lens(LensCmd::ReportTheoremA { k, unit }) => {
            let u = unit_or_default(7, unit)?;
            Ok(theorem_a_report_with_unit(*k, &u)?)
        }
        Command::Kapp(KappCmd::Tor { p, i }) => kapp_tor(*p, *i),
        Command::Kapp(KappCmd::K3 { p }) => kapp_k3(*p),
    }
}

fn emit(cli: &Cli, r: &ReportDocument) -> Result<()> {
    let text = if cli.json { r.to_json() + "\n" } else { r.to_string() };
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
