mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cubknot::config::Caps;
use cubknot::diagrams::{enumerate_ordered, AnyDiagram, DiagramJson, PairPattern};
use cubknot::hopf::{check_axioms, Fault};
use cubknot::invariants::{certify_nontrivial, conway, vassiliev_eval_with, Family, InvariantSpec};
use cubknot::knots::SingularKnotDiagram;
use cubknot::linalg::StoredBasis;
use cubknot::quotients::{dim_row_with_basis, dims_tsv, DimRow, QuotientFlavor, GENERATOR_VERSION};
use cubknot::Error;
use serde_json::json;

use cache::{write_atomic, Cache, RunManifest};

#[derive(Parser)]
#[command(name = "cubknot", version, about = "Chord diagram algebras and Vassiliev invariants in exact arithmetic")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Directory for the primary output and its manifest
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Skip the quotient cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, default_value_t = Caps::default().max_degree)]
    cap_degree: usize,
    #[arg(long, global = true, default_value_t = Caps::default().max_double_points)]
    cap_double_points: usize,
    #[arg(long, global = true, default_value_t = Caps::default().max_skein_crossings)]
    cap_skein_crossings: usize,
    #[arg(long, global = true, default_value_t = Caps::default().max_family_n)]
    cap_family_n: usize,
}

impl Global {
    fn caps(&self) -> Caps {
        Caps {
            max_degree: self.cap_degree,
            max_double_points: self.cap_double_points,
            max_skein_crossings: self.cap_skein_crossings,
            max_family_n: self.cap_family_n,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quotient dimensions as a TSV table
    Dims {
        /// a, a0, ab0, aw or al
        #[arg(long)]
        flavor: QuotientFlavor,
        #[arg(long)]
        max_degree: usize,
        /// Also impose the 1T relation
        #[arg(long)]
        with_1t: bool,
    },
    /// Exhaustive Hopf algebra identity checks as a JSON report
    Axioms {
        #[arg(long)]
        max_degree: usize,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Exact value of an invariant on a (singular) knot
    Eval {
        /// c<m>, v2, v2^<k>, const:<p/q>, products joined by *, or conway
        #[arg(long)]
        invariant: String,
        /// Extended Gauss code, or a file holding a code or knot JSON
        #[arg(long)]
        knot: String,
    },
    /// Nontriviality certificate as JSON
    Certify {
        /// v2power or yasuhara
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// One of x (crossed) or p (parallel) per chord; all crossed by default
        #[arg(long)]
        pattern: Option<String>,
        /// Ordered diagram JSON; every degree-n diagram when omitted
        #[arg(long)]
        diagram: Option<String>,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::ResourceCap { .. } => Failure::Cap(e.to_string()),
            Error::Parse { .. }
            | Error::NonPlanar(_)
            | Error::InvalidPairing(_)
            | Error::LabelOutOfRange { .. }
            | Error::NotAPermutation(_)
            | Error::OrderMismatch { .. }
            | Error::SingularInput(_)
            | Error::MissingDoublePoint(_)
            | Error::Unsupported(_)
            | Error::Json(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

/// Primary output plus whether the checks it reports passed.
struct Output {
    name: &'static str,
    body: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = cli.global.caps();
    let (command, parameters) = describe(&cli.command);
    let caps_json = json!({
        "max_degree": caps.max_degree,
        "max_double_points": caps.max_double_points,
        "max_skein_crossings": caps.max_skein_crossings,
        "max_family_n": caps.max_family_n,
    });
    let mut manifest = RunManifest::new(command, parameters, caps_json);
    let result = match &cli.command {
        Command::Dims { flavor, max_degree, with_1t } => {
            dims(*flavor, *max_degree, *with_1t, &caps, !cli.global.no_cache)
        }
        Command::Axioms { max_degree, inject_fault } => axioms(*max_degree, *inject_fault, &caps),
        Command::Eval { invariant, knot } => eval(invariant, knot, &caps),
        Command::Certify { family, n, pattern, diagram } => {
            certify(family, *n, pattern.as_deref(), diagram.as_deref(), &caps)
        }
    };
    let out = match result {
        Ok(out) => out,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(3);
        }
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            return ExitCode::from(1);
        }
    };
    print!("{}", out.body);
    manifest.record(out.name, out.body.as_bytes());
    if let Err(e) = write_outputs(&cli.global, &manifest, &out) {
        eprintln!("error: writing outputs: {e}");
        return ExitCode::from(1);
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("check failed");
        ExitCode::from(1)
    }
}

fn write_outputs(global: &Global, manifest: &RunManifest, out: &Output) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(manifest).expect("manifest") + "\n";
    match &global.out {
        Some(dir) => {
            write_atomic(&dir.join(out.name), out.body.as_bytes())?;
            write_atomic(&dir.join("manifest.json"), text.as_bytes())
        }
        None => {
            let path = Cache::open().root().join("manifests").join(format!("{}.json", manifest.run_key()));
            write_atomic(&path, text.as_bytes())
        }
    }
}

fn describe(c: &Command) -> (&'static str, serde_json::Value) {
    match c {
        Command::Dims { flavor, max_degree, with_1t } => {
            ("dims", json!({ "flavor": flavor.name(), "max_degree": max_degree, "with_1t": with_1t }))
        }
        Command::Axioms { max_degree, inject_fault } => {
            ("axioms", json!({ "max_degree": max_degree, "inject_fault": inject_fault }))
        }
        Command::Eval { invariant, knot } => ("eval", json!({ "invariant": invariant, "knot": knot })),
        Command::Certify { family, n, pattern, diagram } => {
            ("certify", json!({ "family": family, "n": n, "pattern": pattern, "diagram": diagram }))
        }
    }
}

fn dims(
    flavor: QuotientFlavor,
    max_degree: usize,
    with_1t: bool,
    caps: &Caps,
    use_cache: bool,
) -> Result<Output, Failure> {
    Caps::check("degree", max_degree, caps.max_degree)?;
    let cache = Cache::open();
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        let key = format!("{}|{n}|{with_1t}|{GENERATOR_VERSION}", flavor.name());
        let cached: Option<(DimRow, StoredBasis)> = if use_cache { cache.get("quotients", &key) } else { None };
        let row = match cached {
            Some((row, basis)) if basis.dim == row.ambient_dim && basis.rows.len() == row.rank => row,
            _ => {
                let (row, basis) = dim_row_with_basis(flavor, n, with_1t, caps.max_degree)?;
                if use_cache {
                    cache.put("quotients", &key, &(&row, &basis));
                }
                row
            }
        };
        rows.push(row);
    }
    Ok(Output { name: "dims.tsv", body: dims_tsv(&rows), passed: true })
}

fn axioms(max_degree: usize, fault: Option<Fault>, caps: &Caps) -> Result<Output, Failure> {
    let report = check_axioms(max_degree, caps.max_degree, fault)?;
    let body =
        serde_json::to_string_pretty(&json!({ "schema": "cubknot.axioms/1", "report": report })).expect("json") + "\n";
    Ok(Output { name: "axioms.json", body, passed: report.passed })
}

fn read_knot(arg: &str) -> Result<SingularKnotDiagram, Failure> {
    let path = std::path::Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(SingularKnotDiagram::from_json(&v)?)
    } else {
        Ok(SingularKnotDiagram::parse(trimmed)?)
    }
}

fn eval(invariant: &str, knot: &str, caps: &Caps) -> Result<Output, Failure> {
    let k = read_knot(knot)?;
    Caps::check("crossings", k.num_crossings(), caps.max_skein_crossings)?;
    let body = if invariant == "conway" {
        conway(&k)?.to_string()
    } else {
        let spec: InvariantSpec = invariant.parse()?;
        vassiliev_eval_with(&spec, &k, caps)?.to_string()
    };
    Ok(Output { name: "value.txt", body: body + "\n", passed: true })
}

fn certify(
    family: &str,
    n: usize,
    pattern: Option<&str>,
    diagram: Option<&str>,
    caps: &Caps,
) -> Result<Output, Failure> {
    let families = match family {
        "v2power" => {
            if pattern.is_some() || diagram.is_some() {
                return Err(Failure::Usage("--pattern and --diagram apply to the yasuhara family".into()));
            }
            vec![Family::V2Power { n }]
        }
        "yasuhara" => {
            Caps::check("family n", n, caps.max_family_n)?;
            let pattern = match pattern {
                Some(p) => PairPattern::parse_list(p)?,
                None => vec![PairPattern::Crossed; n],
            };
            if pattern.len() != n {
                return Err(Failure::Usage(format!("pattern {:?} needs {n} entries", pattern.len())));
            }
            let diagrams = match diagram {
                Some(text) => match DiagramJson::parse(text)? {
                    AnyDiagram::Ordered(d) if d.degree() == n => vec![d],
                    _ => return Err(Failure::Usage(format!("--diagram must be an ordered diagram of degree {n}"))),
                },
                None => enumerate_ordered(n, caps.max_degree)?,
            };
            diagrams.into_iter().map(|diagram| Family::Yasuhara { diagram, pattern: pattern.clone() }).collect()
        }
        other => return Err(Failure::Usage(format!("unknown family {other:?}; expected v2power or yasuhara"))),
    };
    let certs = families.iter().map(|f| certify_nontrivial(f, caps)).collect::<Result<Vec<_>, _>>()?;
    let passed = certs.iter().all(|c| c.certified);
    let body = serde_json::to_string_pretty(&json!({ "schema": "cubknot.certificates/1", "certificates": certs }))
        .expect("json")
        + "\n";
    Ok(Output { name: "certificates.json", body, passed })
}
