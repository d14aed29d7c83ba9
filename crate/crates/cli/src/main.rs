use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use singcat_core::fixtures::{self, NAMES};
use singcat_core::homology::{ext, pd_certificate, resolve, stable_hom, syzygy};
use singcat_core::io::{algebra_from_json, algebra_to_json, module_from_json, module_to_json, subcat_from_json, subcat_to_json};
use singcat_core::linalg::Field;
use singcat_core::rep::{check_indecomposable, hom, Algebra, Indecomposability, Representation};
use singcat_core::stab::{gp_intersection_check, is_iwanaga_gorenstein, pd_json, skeleton, GorensteinVerdict};
use singcat_core::tilting::{d_coresolution, d_resolution, standard_angle, verify_cluster_tilting, CtVerdict, Mode, SubcatSpec};
use singcat_core::Error;

#[derive(Parser)]
#[command(name = "singcat", version, about = "Homological computations over bound quiver algebras")]
struct Cli {
    /// Override the coefficient field: a prime such as 101, or Q.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Search depth for syzygy periodicity and colimit stages.
    #[arg(long, global = true, default_value_t = 24)]
    horizon: usize,
    /// Seed for randomized endomorphism probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON report path (a directory for `example`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Algebra presentations.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Module computations.
    #[command(subcommand)]
    Mod(ModCmd),
    /// Cluster tilting subcategories.
    #[command(subcommand)]
    Ct(CtCmd),
    /// Singularity category and Gorenstein checks.
    #[command(subcommand)]
    Sing(SingCmd),
    /// Write the algebra and subcategory fixtures of a named example.
    Example {
        name: String,
        /// Periods kept by the window example.
        #[arg(long, default_value_t = 3)]
        periods: usize,
    },
}

#[derive(Subcommand)]
enum AlgCmd {
    Validate { file: PathBuf },
    Basis { file: PathBuf },
}

#[derive(Args)]
struct TwoModules {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    m: PathBuf,
    #[arg(long)]
    n: PathBuf,
}

#[derive(Subcommand)]
enum ModCmd {
    Hom(TwoModules),
    Ext {
        #[command(flatten)]
        mods: TwoModules,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    Resolve {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        m: PathBuf,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    Syzygy {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        m: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Args)]
struct SubcatArgs {
    /// Defaults to the subcategory file's `algebra` reference.
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(long)]
    subcat: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Certificate,
    Full,
}

#[derive(Subcommand)]
enum CtCmd {
    Verify {
        #[command(flatten)]
        sc: SubcatArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Certificate)]
        mode: ModeArg,
        /// JSON array of indecomposable modules, required in full mode.
        #[arg(long)]
        indecs: Option<PathBuf>,
        /// Skip the dZ closure check even if it is claimed.
        #[arg(long)]
        no_dz: bool,
    },
    Resolution {
        #[command(flatten)]
        sc: SubcatArgs,
        #[arg(long)]
        m: PathBuf,
        /// Build the coresolution instead.
        #[arg(long)]
        co: bool,
    },
    Angle {
        #[command(flatten)]
        sc: SubcatArgs,
        #[arg(long)]
        m: PathBuf,
    },
}

#[derive(Subcommand)]
enum SingCmd {
    Skeleton {
        #[command(flatten)]
        sc: SubcatArgs,
        /// Must agree with the subcategory's d when given.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        all_shifts: bool,
        /// Reference class count to compare against.
        #[arg(long)]
        expected: Option<usize>,
    },
    Gorenstein {
        #[arg(long)]
        algebra: PathBuf,
    },
    Gp {
        #[command(flatten)]
        sc: SubcatArgs,
    },
}

/// Exit statuses.
const OK: u8 = 0;
const REFUTED: u8 = 1;
const UNDETERMINED: u8 = 2;
const INPUT: u8 = 3;

enum Failure {
    Input(String),
    Undetermined(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrbitNotResolved(_) => Failure::Undetermined(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(u8, Value), Failure>;

fn read_json(p: &Path) -> std::result::Result<Value, Failure> {
    let s = fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&s).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
}

fn parse_field(s: &str) -> std::result::Result<Field, Failure> {
    match s {
        "Q" | "q" | "rational" => Ok(Field::rational()),
        _ => {
            let p: u64 = s.parse().map_err(|_| Failure::Input(format!("field {s:?} is neither a prime nor Q")))?;
            Ok(Field::prime(p)?)
        }
    }
}

struct Ctx {
    field: Option<Field>,
    horizon: usize,
    seed: u64,
}

impl Ctx {
    fn algebra(&self, p: &Path) -> std::result::Result<Algebra, Failure> {
        let v = read_json(p)?;
        let alg = algebra_from_json(&v, None)?;
        Ok(Arc::new(match self.field {
            Some(f) if f != alg.field() => alg.with_field(f)?,
            _ => alg,
        }))
    }

    fn module(&self, p: &Path, alg: &Algebra) -> std::result::Result<Representation, Failure> {
        Ok(module_from_json(&read_json(p)?, alg)?)
    }

    fn subcat(&self, sc: &SubcatArgs) -> std::result::Result<SubcatSpec, Failure> {
        let v = read_json(&sc.subcat)?;
        let dir = sc.subcat.parent().map(Path::to_path_buf).unwrap_or_default();
        let alg_path = match &sc.algebra {
            Some(p) => p.clone(),
            None => {
                let r = v
                    .get("algebra")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Failure::Input("no --algebra given and the subcategory has no algebra reference".into()))?;
                dir.join(r)
            }
        };
        let alg = self.algebra(&alg_path)?;
        let load = |r: &str| -> singcat_core::Result<Value> {
            let p = dir.join(r);
            let s = fs::read_to_string(&p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok(serde_json::from_str(&s)?)
        };
        Ok(subcat_from_json(&v, &alg, &load)?)
    }
}

fn dims_str(m: &Representation) -> String {
    format!("{:?}", m.dims())
}

fn print_rows(rows: &[(String, String)]) {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        println!("{k:<w$}  {v}");
    }
}

fn row(k: impl Into<String>, v: impl ToString) -> (String, String) {
    (k.into(), v.to_string())
}

fn alg_cmd(ctx: &Ctx, c: &AlgCmd) -> Outcome {
    match c {
        AlgCmd::Validate { file } => {
            let alg = ctx.algebra(file)?;
            let q = alg.quiver();
            print_rows(&[
                row("check", "validate"),
                row("pass", true),
                row("vertices", q.vertex_count()),
                row("arrows", q.arrows().len()),
                row("dimension", alg.dimension()),
            ]);
            Ok((
                OK,
                json!({"check": "validate", "pass": true, "witness": null, "stage": null,
                       "dims": [q.vertex_count(), q.arrows().len(), alg.dimension()]}),
            ))
        }
        AlgCmd::Basis { file } => {
            let alg = ctx.algebra(file)?;
            let q = alg.quiver();
            let n = q.vertex_count();
            let mut cartan = vec![vec![0usize; n]; n];
            let mut basis = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    let ps = alg.basis(u, v);
                    cartan[u][v] = ps.len();
                    for p in ps {
                        basis.push(json!({"src": q.vertex_name(u), "tgt": q.vertex_name(v), "path": p.display(q)}));
                    }
                }
            }
            println!("dimension {}", alg.dimension());
            for (u, r) in cartan.iter().enumerate() {
                println!("{:>8}  {:?}", q.vertex_name(u), r);
            }
            Ok((OK, json!({"dimension": alg.dimension(), "vertices": q.vertices(), "cartan": cartan, "basis": basis})))
        }
    }
}

fn mod_cmd(ctx: &Ctx, c: &ModCmd) -> Outcome {
    match c {
        ModCmd::Hom(t) => {
            let alg = ctx.algebra(&t.algebra)?;
            let (m, n) = (ctx.module(&t.m, &alg)?, ctx.module(&t.n, &alg)?);
            let h = hom(&m, &n)?.dim();
            let s = stable_hom(&m, &n)?.dim;
            print_rows(&[row("dim Hom", h), row("dim stable Hom", s)]);
            Ok((OK, json!({"check": "hom", "pass": true, "witness": {"hom": h, "stable_hom": s}, "stage": null, "dims": [h, s]})))
        }
        ModCmd::Ext { mods: t, degree } => {
            let alg = ctx.algebra(&t.algebra)?;
            let (m, n) = (ctx.module(&t.m, &alg)?, ctx.module(&t.n, &alg)?);
            let e = ext(&m, &n, *degree);
            print_rows(&[row(format!("dim Ext^{degree}"), e)]);
            Ok((OK, json!({"check": "ext", "pass": true, "witness": {"degree": degree, "dim": e}, "stage": degree, "dims": [e]})))
        }
        ModCmd::Resolve { algebra, m, length } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(m, &alg)?;
            let res = resolve(&m, *length);
            let q = alg.quiver();
            let mut terms = Vec::new();
            for (i, t) in res.terms.iter().enumerate() {
                let tops: Vec<&str> = res.tops[i].iter().map(|&v| q.vertex_name(v)).collect();
                println!("P_{i}  dim {:>4}  tops {:?}", t.dim(), tops);
                terms.push(json!({"degree": i, "dim": t.dim(), "dims": t.dims(), "tops": tops}));
            }
            let pd = pd_certificate(&m, ctx.horizon)?;
            println!("pd  {}", pd_json(&pd.verdict));
            let code = if matches!(pd.verdict, singcat_core::homology::PdVerdict::Undetermined(_)) { UNDETERMINED } else { OK };
            Ok((code, json!({"terms": terms, "pd": pd_json(&pd.verdict), "syzygy_dims": pd.syzygy_dims})))
        }
        ModCmd::Syzygy { algebra, m, k } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(m, &alg)?;
            let s = syzygy(&m, *k);
            print_rows(&[row(format!("Omega^{k} dims"), dims_str(&s)), row("dim", s.dim())]);
            Ok((OK, module_to_json(&s, None)))
        }
    }
}

fn ct_cmd(ctx: &Ctx, c: &CtCmd) -> Outcome {
    match c {
        CtCmd::Verify { sc, mode, indecs, no_dz } => {
            let spec = ctx.subcat(sc)?;
            let mode = match mode {
                ModeArg::Certificate => Mode::Certificate,
                ModeArg::Full => Mode::Full,
            };
            let list = match indecs {
                None => None,
                Some(p) => {
                    let v = read_json(p)?;
                    let arr = v.as_array().ok_or_else(|| Failure::Input("indecomposable list must be an array".into()))?;
                    let mut out = Vec::new();
                    for (i, m) in arr.iter().enumerate() {
                        let name = m.get("name").and_then(Value::as_str).map(str::to_string).unwrap_or(format!("E{i}"));
                        let rep = module_from_json(m, &spec.alg)?;
                        if let Indecomposability::Decomposable(_) = check_indecomposable(&rep, ctx.seed, 32)? {
                            return Err(Failure::Input(format!("listed module {name} is decomposable")));
                        }
                        out.push((name, rep));
                    }
                    Some(out)
                }
            };
            let check_dz = !no_dz && spec.claims("dZ");
            let report = verify_cluster_tilting(&spec, mode, list.as_deref(), check_dz)?;
            let rows: Vec<(String, String)> =
                report.checks.iter().map(|c| row(c.check.clone(), if c.pass { "pass" } else { "FAIL" })).collect();
            print_rows(&rows);
            let code = match report.verdict {
                CtVerdict::Refuted(_) => REFUTED,
                _ => OK,
            };
            Ok((code, serde_json::to_value(&report).expect("report serializes")))
        }
        CtCmd::Resolution { sc, m, co } => {
            let spec = ctx.subcat(sc)?;
            let m = ctx.module(m, &spec.alg)?;
            let r = if *co { d_coresolution(&spec, &m)? } else { d_resolution(&spec, &m)? };
            for (i, t) in r.terms.iter().enumerate() {
                println!("M_{}  dims {}", i + 1, dims_str(t));
            }
            println!("exact  {}", r.exact);
            let terms: Vec<Value> = r.terms.iter().map(|t| module_to_json(t, None)).collect();
            let code = if r.exact { OK } else { REFUTED };
            Ok((code, json!({"check": if *co { "d_coresolution" } else { "d_resolution" }, "pass": r.exact, "witness": terms,
                              "stage": r.terms.len(), "dims": r.terms.iter().map(|t| t.dim()).collect::<Vec<_>>()})))
        }
        CtCmd::Angle { sc, m } => {
            let spec = ctx.subcat(sc)?;
            let m = ctx.module(m, &spec.alg)?;
            let a = standard_angle(&m, spec.d)?;
            let terms = a.terms();
            for (i, t) in terms.iter().enumerate() {
                println!("N_{}  dims {}", terms.len() - i, dims_str(t));
            }
            println!("commutes  {}", a.commutes);
            let code = if a.commutes { OK } else { REFUTED };
            Ok((code, json!({"check": "standard_angle", "pass": a.commutes,
                              "witness": terms.iter().map(|t| module_to_json(t, None)).collect::<Vec<_>>(),
                              "stage": spec.d, "dims": terms.iter().map(|t| t.dim()).collect::<Vec<_>>()})))
        }
    }
}

fn sing_cmd(ctx: &Ctx, c: &SingCmd) -> Outcome {
    match c {
        SingCmd::Skeleton { sc, d, all_shifts, expected } => {
            let spec = ctx.subcat(sc)?;
            if let Some(d) = d {
                if *d != spec.d {
                    return Err(Failure::Input(format!("--d {d} disagrees with the subcategory's d = {}", spec.d)));
                }
            }
            let mut rep = skeleton(&spec, ctx.horizon, *all_shifts)?;
            if let Some(e) = expected {
                rep.compare_count(*e);
            }
            for (i, cl) in rep.classes.iter().enumerate() {
                let homs: Vec<String> =
                    rep.hom_matrix[i].iter().map(|h| h.map_or("?".to_string(), |x| x.to_string())).collect();
                println!("({}, {})  cycle {:?}  hom {}", cl.representative, cl.shift, cl.cycle, homs.join(" "));
            }
            let zeros: Vec<&str> = rep.zero_classes.iter().map(|z| z.generator.as_str()).collect();
            println!("zero classes  {zeros:?}");
            print!("classes  {}", rep.computed_count);
            if let Some(e) = rep.expected_count {
                print!("  expected {e}  {}", if rep.discrepancy == Some(true) { "DISCREPANCY" } else { "agree" });
            }
            println!();
            let undetermined = rep.hom_matrix.iter().flatten().any(Option::is_none);
            Ok((if undetermined { UNDETERMINED } else { OK }, serde_json::to_value(&rep).expect("report serializes")))
        }
        SingCmd::Gorenstein { algebra } => {
            let alg = ctx.algebra(algebra)?;
            let rep = is_iwanaga_gorenstein(&alg, ctx.horizon)?;
            for i in &rep.injectives {
                println!("{:>8} {:>8}  pd {}", i.side, i.vertex, i.pd);
            }
            let (code, label) = match &rep.verdict {
                GorensteinVerdict::Gorenstein { selfinj_dim_bound } => (OK, format!("gorenstein (<= {selfinj_dim_bound})")),
                GorensteinVerdict::NotGorenstein { witness } => {
                    (REFUTED, format!("not_gorenstein, witness {}:{}", witness["side"].as_str().unwrap_or(""), witness["vertex"].as_str().unwrap_or("")))
                }
                GorensteinVerdict::Undetermined { horizon } => (UNDETERMINED, format!("undetermined at horizon {horizon}")),
            };
            println!("verdict  {label}");
            Ok((code, serde_json::to_value(&rep).expect("report serializes")))
        }
        SingCmd::Gp { sc } => {
            let spec = ctx.subcat(sc)?;
            let rep = gp_intersection_check(&spec, ctx.horizon)?;
            print_rows(&[
                row("gp generators", format!("{:?}", rep.gp_generators)),
                row("rigid", rep.rigid.pass),
                row("dZ closure", rep.dz_closure.pass),
                row("omega bijective", rep.omega_bijective),
                row("hypothesis", &rep.hypothesis),
            ]);
            let code = match rep.hypothesis.as_str() {
                "certified" if rep.rigid.pass && rep.dz_closure.pass && rep.omega_bijective => OK,
                "undetermined" => UNDETERMINED,
                _ => REFUTED,
            };
            Ok((code, serde_json::to_value(&rep).expect("report serializes")))
        }
    }
}

fn write_pretty(p: &Path, v: &Value) -> std::result::Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).expect("json serializes");
    fs::write(p, s + "\n").map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
}

fn example_cmd(ctx: &Ctx, name: &str, periods: usize, out: &Path) -> Outcome {
    if !NAMES.contains(&name) {
        return Err(Failure::Input(format!("unknown example {name:?}; expected one of {NAMES:?}")));
    }
    let field = ctx.field.unwrap_or(Field::Prime { p: 101 });
    let fx = fixtures::fixture(name, field, periods)?;
    fs::create_dir_all(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    let alg_file = format!("{name}.algebra.json");
    let sub_file = format!("{name}.subcat.json");
    let mut sub = subcat_to_json(&fx.spec, &alg_file);
    if fx.annotations.as_object().is_some_and(|o| !o.is_empty()) {
        sub["annotations"] = fx.annotations.clone();
    }
    write_pretty(&out.join(&alg_file), &algebra_to_json(&fx.algebra))?;
    write_pretty(&out.join(&sub_file), &sub)?;
    print_rows(&[
        row("example", name),
        row("vertices", fx.algebra.vertex_count()),
        row("dimension", fx.algebra.dimension()),
        row("generators", fx.spec.generators.len()),
        row("d", fx.spec.d),
        row("algebra", out.join(&alg_file).display()),
        row("subcat", out.join(&sub_file).display()),
    ]);
    Ok((OK, json!({"algebra": alg_file, "subcat": sub_file})))
}

fn run(cli: &Cli) -> Outcome {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let ctx = Ctx { field, horizon: cli.horizon, seed: cli.seed };
    match &cli.cmd {
        Cmd::Alg(c) => alg_cmd(&ctx, c),
        Cmd::Mod(c) => mod_cmd(&ctx, c),
        Cmd::Ct(c) => ct_cmd(&ctx, c),
        Cmd::Sing(c) => sing_cmd(&ctx, c),
        Cmd::Example { name, periods } => {
            let out = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            example_cmd(&ctx, name, *periods, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT } else { OK });
        }
    };
    let (code, report) = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(INPUT);
        }
        Err(Failure::Undetermined(msg)) => {
            eprintln!("undetermined: {msg}");
            (UNDETERMINED, json!({"status": "undetermined", "reason": msg}))
        }
    };
    if let (Some(out), false) = (&cli.out, matches!(cli.cmd, Cmd::Example { .. })) {
        if let Err(Failure::Input(msg)) = write_pretty(out, &report) {
            eprintln!("error: {msg}");
            return ExitCode::from(INPUT);
        }
    }
    ExitCode::from(code)
}
