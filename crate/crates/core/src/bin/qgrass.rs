//! Command-line front end. Exit status: 0 when every check passes, 2 on a
//! mathematical mismatch, 3 when a search would exceed the budget, 1 on bad
//! input.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qgrass::ffla::DEFAULT_BUDGET;
use qgrass::grass::{connectivity_check, dual_pairing_check, grassmannian_points, lemma2_transport, TransportMode};
use qgrass::io::{
    read_json, write_json, AlgebraFile, GammaFile, GraphDump, PointSetDump, RepresentationFile, TwoGenModuleFile,
};
use qgrass::meataxe::{simples_of, DimensionVector};
use qgrass::modrep::{Module, Representation};
use qgrass::pipelines::{auslander_pipeline, verify_realization};
use qgrass::polyvar::VarietyFile;
use qgrass::{Error, Result};

#[derive(Parser)]
#[command(name = "qgrass", version, about = "Quiver Grassmannians over finite fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest search space any enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also write the JSON report here.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a projective variety as G_(1,1,1) of a Beilinson injective.
    Realize {
        variety: PathBuf,
        /// Field sizes; defaults to the p of the file.
        #[arg(long, value_delimiter = ',')]
        q: Vec<u64>,
    },
    /// List the submodules of a representation with dimension vector e.
    Grassmannian {
        module: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        e: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u64>,
    },
    /// Line-family graph on G_i(M) for M over a local radical-square-zero algebra.
    Connectivity {
        module: PathBuf,
        /// Submodule dimensions; all when omitted.
        #[arg(long, value_delimiter = ',')]
        i: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u64>,
    },
    /// Compare G_e Hom(D, F(M)) with G_g(M) for a two-generator algebra.
    Auslander {
        gamma: PathBuf,
        module: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u64>,
    },
    /// Match G_{g+c}(N) with G_g(N/ReN) for an idempotent e.
    Lemma2 {
        algebra: PathBuf,
        module: PathBuf,
        /// A vertex label, or coordinates in the path basis.
        #[arg(long)]
        idem: String,
        /// Multiplicities indexed by vertex simples.
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u64>,
        /// Only enumerate the quotient side and lift.
        #[arg(long)]
        forward_only: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(&cli).and_then(|report| {
        let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&report)?);
        if let Some(path) = &cli.global.json_out {
            write_json(path, &report)?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("qgrass: {err}");
            ExitCode::from(match err {
                Error::Mismatch(_) => 2,
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Value> {
    let Global { seed, budget, .. } = cli.global;
    match &cli.command {
        Command::Realize { variety, q } => {
            let file: VarietyFile = read_json(variety)?;
            let polys = file.polys()?;
            let qs = if q.is_empty() { vec![file.p] } else { q.clone() };
            let reports = verify_realization(&polys, file.n, &qs, budget)?;
            for r in &reports {
                eprintln!("q = {}: {} submodules, {} points", r.q, r.grassmannian_points, r.variety_points);
            }
            Ok(serde_json::to_value(reports)?)
        }
        Command::Grassmannian { module, e, q } => {
            let file: RepresentationFile = read_json(module)?;
            let mut out = Vec::new();
            for &q in q {
                let m = file.build(q)?;
                let set = grassmannian_points(&m, e, budget)?;
                eprintln!("q = {q}: {} points", set.len());
                out.push(PointSetDump::new(q, e, &set.points));
            }
            Ok(serde_json::to_value(out)?)
        }
        Command::Connectivity { module, i, q } => {
            let file: RepresentationFile = read_json(module)?;
            let mut out = Vec::new();
            for &q in q {
                let m = file.build(q)?;
                let is: Vec<usize> = if i.is_empty() { (0..=m.dim()).collect() } else { i.clone() };
                for &i in &is {
                    let report = connectivity_check(&m, i, budget)?;
                    let dual_count = dual_pairing_check(&m, i, budget)?;
                    if dual_count != report.nodes.len() {
                        return Err(Error::Mismatch(format!("|G_{i}(M)| differs from the dual count")));
                    }
                    eprintln!(
                        "q = {q}, i = {i}: {} points, {} edges, connected = {}",
                        report.nodes.len(),
                        report.edges.len(),
                        report.connected
                    );
                    if !report.connected {
                        return Err(Error::Mismatch(format!("G_{i}(M) over F_{q} is not connected")));
                    }
                    out.push(GraphDump {
                        q,
                        i,
                        dualized: report.dualized,
                        nodes: report.nodes.len(),
                        edges: report.edges,
                        connected: report.connected,
                    });
                }
            }
            Ok(serde_json::to_value(out)?)
        }
        Command::Auslander { gamma, module, g, q } => {
            let gamma: GammaFile = read_json(gamma)?;
            let module: TwoGenModuleFile = read_json(module)?;
            let mut out = Vec::new();
            for &q in q {
                let pres = gamma.build(q)?;
                let m = module.build(q)?;
                let report = auslander_pipeline(&pres, &m, &DimensionVector(g.clone()), budget, seed)?;
                eprintln!(
                    "q = {q}: |G_e Hom(D,Y)| = {}, |G_g(M)| = {}",
                    report.auslander_count, report.module_count
                );
                out.push(report);
            }
            Ok(serde_json::to_value(out)?)
        }
        Command::Lemma2 {
            algebra,
            module,
            idem,
            g,
            q,
            forward_only,
        } => {
            let alg_file: AlgebraFile = read_json(algebra)?;
            let module: RepresentationFile = read_json(module)?;
            if module.algebra != alg_file {
                return Err(Error::Precondition("the module is over a different algebra".into()));
            }
            let mode = if *forward_only {
                TransportMode::ForwardOnly
            } else {
                TransportMode::Independent
            };
            let mut out = Vec::new();
            for &q in q {
                let n = module.build(q)?;
                let alg = n.algebra().clone();
                let e = parse_idempotent(&n, idem)?;
                let reg = simples_of(alg.sc(), seed)?;
                let nv = alg.quiver().num_vertices();
                if g.len() != nv {
                    return Err(Error::Precondition(format!("g needs {nv} entries, one per vertex")));
                }
                // registry index of each vertex simple
                let slot = (0..nv)
                    .map(|v| {
                        let s = Representation::simple(alg.clone(), v)?.to_sc_module();
                        reg.identify(&s)?
                            .ok_or_else(|| Error::Mismatch("vertex simple not found among the simples".into()))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                let mut g_reg = DimensionVector::zeros(reg.len());
                for (v, &mult) in g.iter().enumerate() {
                    g_reg.0[slot[v]] += mult;
                }
                let by_vertex = |dv: &DimensionVector| -> Vec<usize> { slot.iter().map(|&k| dv.0[k]).collect() };
                let report = lemma2_transport(&reg, &e, &n.to_sc_module(), &g_reg, mode, budget, seed)?;
                eprintln!(
                    "q = {q}: dim ReN = {}, |G_g(N/ReN)| = {}, |G_(g+c)(N)| = {}",
                    report.w_dim,
                    report.quotient_count,
                    report.lifted_count.map_or("not enumerated".to_string(), |c| c.to_string())
                );
                out.push(json!({
                    "q": q,
                    "w_dim": report.w_dim,
                    "c": by_vertex(&report.c),
                    "e": by_vertex(&report.e),
                    "quotient_count": report.quotient_count,
                    "lifted_count": report.lifted_count,
                    "bijection_verified": report.bijection_verified,
                    "points": PointSetDump::new(q, &report.e.0, &report.points).points,
                }));
            }
            Ok(Value::Array(out))
        }
    }
}

fn parse_idempotent(n: &Representation, spec: &str) -> Result<Vec<u64>> {
    let alg = n.algebra();
    if let Ok(v) = alg.quiver().vertex(spec) {
        return Ok(alg.idempotent(v));
    }
    let p = alg.modulus();
    let coords = spec
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map(|c| c.rem_euclid(p as i64) as u64)
                .map_err(|_| Error::Invalid(format!("{spec:?} is neither a vertex nor a coordinate list")))
        })
        .collect::<Result<Vec<u64>>>()?;
    if coords.len() != alg.dim() {
        return Err(Error::Dimension(format!("idempotent needs {} coordinates", alg.dim())));
    }
    Ok(coords)
}
