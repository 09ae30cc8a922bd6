use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use nullcert::dualcolor::{
    dual_colorings, graph_polynomial_normal_form, orientation_coloring, simultaneous_chromatic_number,
};
use nullcert::encodings::{encode, parse_system, write_system, EncodingParams, PolySystem};
use nullcert::graphs::{named, parse_graph, Graph};
use nullcert::nulla::{certificate_at_degree, Attempt, Certificate};
use nullcert::oracle::{decide_with, OracleConfig, DEFAULT_BUDGET};
use nullcert::stablecert::{construct_certificate, reduce_certificate};
use nullcert::Error;

#[derive(Parser)]
#[command(name = "nullcert", version, about = "Nullstellensatz certificates for graph problems")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write a JSON run report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Default)]
struct EncodeArgs {
    /// Graph file (edge list or DIMACS) or a name such as `petersen`, `k4`, `wheel:5`.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    encoding: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long = "R")]
    big_r: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the polynomial system of a graph problem.
    Encode {
        #[command(flatten)]
        enc: EncodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a minimum-degree certificate.
    Certify {
        #[command(flatten)]
        enc: EncodeArgs,
        /// System file instead of --graph/--encoding.
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, default_value_t = 1.0)]
        keep_prob: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Sparsified attempts per degree; attempt t uses seed + t.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate file by exact expansion.
    Verify {
        cert: PathBuf,
    },
    /// Explicit stable-set certificate of degree α(G).
    Stable {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normal form of the graph polynomial and the dual colorings.
    Dual {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        d: u32,
    },
    /// Simultaneous chromatic number with a witness labeling.
    Sigma {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive feasibility check over the declared domains.
    Oracle {
        #[command(flatten)]
        enc: EncodeArgs,
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

struct Outcome {
    code: u8,
    input: String,
    seed: Option<u64>,
    result: Value,
    outputs: Vec<String>,
}

fn usage(msg: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(Usage(msg.to_string()))
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn load_graph(spec: &str) -> anyhow::Result<(Graph, String)> {
    let g = if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        parse_graph(&text)?
    } else {
        named(spec).map_err(|_| usage(format!("`{spec}` is neither a file nor a known graph name")))?
    };
    let text = g.to_edge_list();
    Ok((g, text))
}

fn load_system(enc: &EncodeArgs, file: Option<&Path>) -> anyhow::Result<(PolySystem, String)> {
    if let Some(f) = file {
        let text = std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
        return Ok((parse_system(&text)?, text));
    }
    let graph = enc.graph.as_deref().ok_or_else(|| usage("need --graph or --system"))?;
    let name = enc.encoding.as_deref().ok_or_else(|| usage("need --encoding"))?;
    let (g, _) = load_graph(graph)?;
    let params = EncodingParams { k: enc.k, l: enc.l, big_r: enc.big_r, r: enc.r, d: enc.d };
    let s = encode(name, &g, &params).map_err(|e| match e {
        Error::InvalidParameter(m) => usage(m),
        e => e.into(),
    })?;
    let text = write_system(&s);
    Ok((s, text))
}

fn write_out(path: &Path, text: &str, outputs: &mut Vec<String>) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    outputs.push(path.display().to_string());
    Ok(())
}

fn attempt_json(a: &Attempt, p: f64, seed: u64) -> Value {
    json!({"deg": a.degree, "row": a.rows, "col": a.cols, "nnz": a.nnz, "p": p, "seed": seed,
           "solvable": a.solvable, "millis": a.millis as u64})
}

fn run(cmd: Cmd) -> anyhow::Result<Outcome> {
    let mut outputs = Vec::new();
    match cmd {
        Cmd::Encode { enc, out } => {
            let (s, text) = load_system(&enc, None)?;
            let census = format!("generators {} variables {}", s.len(), s.vars().len());
            match out {
                Some(p) => {
                    write_out(&p, &text, &mut outputs)?;
                    println!("{census}");
                }
                None => {
                    print!("{text}");
                    eprintln!("{census}");
                }
            }
            let result = json!({"generators": s.len(), "variables": s.vars().len()});
            Ok(Outcome { code: 0, input: text, seed: None, result, outputs })
        }
        Cmd::Certify { enc, system, max_degree, keep_prob, seed, trials, out } => {
            if !(keep_prob > 0.0 && keep_prob <= 1.0) {
                return Err(usage("--keep-prob must lie in (0, 1]"));
            }
            if trials == 0 {
                return Err(usage("--trials must be at least 1"));
            }
            if keep_prob < 1.0 && seed.is_none() {
                return Err(usage("sparsified runs need an explicit --seed"));
            }
            let base = seed.unwrap_or(0);
            let (s, text) = load_system(&enc, system.as_deref())?;
            let s = Arc::new(s);
            let per_degree = if keep_prob < 1.0 { trials } else { 1 };
            let mut attempts = Vec::new();
            let mut found = None;
            'outer: for d in 0..=max_degree {
                for t in 0..per_degree as u64 {
                    let sd = base.wrapping_add(t);
                    let (cert, a) = certificate_at_degree(&s, d, keep_prob, sd, None)?;
                    println!("deg {} row {} col {} p {} seed {} {}", a.degree, a.rows, a.cols, keep_prob, sd,
                        if a.solvable { "solved" } else { "inconsistent" });
                    attempts.push(attempt_json(&a, keep_prob, sd));
                    if let Some(c) = cert {
                        found = Some(c);
                        break 'outer;
                    }
                }
            }
            let result = match &found {
                Some(c) => {
                    println!("certificate of degree {}", c.degree);
                    if let Some(p) = &out {
                        write_out(p, &c.to_json(), &mut outputs)?;
                    }
                    json!({"degree": c.degree, "attempts": attempts})
                }
                None => {
                    println!("no certificate up to degree {max_degree}");
                    json!({"degree": null, "attempts": attempts})
                }
            };
            Ok(Outcome { code: if found.is_some() { 0 } else { 1 }, input: text, seed, result, outputs })
        }
        Cmd::Verify { cert } => {
            let text = std::fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let c = Certificate::from_json(&text)?;
            let ok = c.verify()?;
            println!("{}", if ok { "pass" } else { "fail" });
            let result = json!({"pass": ok, "degree": c.degree, "generators": c.system.len()});
            Ok(Outcome { code: if ok { 0 } else { 1 }, input: text, seed: None, result, outputs })
        }
        Cmd::Stable { graph, r, reduced, out } => {
            if r < 1 {
                return Err(usage("--r must be at least 1"));
            }
            let (g, text) = load_graph(&graph)?;
            let mut c = construct_certificate(&g, r)?;
            if reduced {
                c = reduce_certificate(&c)?;
            }
            println!("certificate of degree {} ({} generators)", c.degree, c.system.len());
            if let Some(p) = &out {
                write_out(p, &c.to_json(), &mut outputs)?;
            }
            let result = json!({"degree": c.degree, "reduced": reduced});
            Ok(Outcome { code: 0, input: text, seed: None, result, outputs })
        }
        Cmd::Dual { graph, d } => {
            if d == 0 {
                return Err(usage("--d must be positive"));
            }
            let (g, text) = load_graph(&graph)?;
            let nf = graph_polynomial_normal_form(&g, d)?;
            let duals = dual_colorings(&g, d)?;
            println!("terms {}", nf.num_terms());
            for (lab, coef) in &duals {
                let v: Vec<String> = lab.values.iter().map(u32::to_string).collect();
                println!("{} {}", v.join(" "), coef);
            }
            let result = json!({"terms": nf.num_terms(), "dual_colorings": duals.len()});
            Ok(Outcome { code: 0, input: text, seed: None, result, outputs })
        }
        Cmd::Sigma { graph, budget } => {
            let (g, text) = load_graph(&graph)?;
            let (sigma, lab) = simultaneous_chromatic_number(&g, budget)?;
            let v: Vec<String> = lab.values.iter().map(u32::to_string).collect();
            println!("sigma {sigma}");
            println!("witness {}", v.join(" "));
            let (orient, _) = orientation_coloring(&g, g.max_degree() as u32 + 1)?;
            let result = json!({"sigma": sigma, "witness": lab.values, "orientation_labeling": orient.values});
            Ok(Outcome { code: 0, input: text, seed: None, result, outputs })
        }
        Cmd::Oracle { enc, system, count, budget } => {
            let (s, text) = load_system(&enc, system.as_deref())?;
            let r = decide_with(&s, &OracleConfig { count, budget, ..OracleConfig::default() })?;
            println!("{}", if r.feasible { "feasible" } else { "infeasible" });
            if let Some(c) = &r.count {
                println!("count {c}");
            }
            if let Some(w) = &r.witness {
                let parts: Vec<String> = w.iter().map(|(v, x)| format!("{v}={x}")).collect();
                println!("witness {}", parts.join(" "));
            }
            let result = json!({"feasible": r.feasible, "count": r.count.map(|c| c.to_string()), "nodes": r.nodes});
            Ok(Outcome { code: 0, input: text, seed: None, result, outputs })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    match run(cli.cmd) {
        Ok(o) => {
            if let Some(path) = &cli.report {
                let report = json!({
                    "command": argv,
                    "input_sha256": hex::encode(Sha256::digest(o.input.as_bytes())),
                    "seed": o.seed,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                    "result": o.result,
                    "outputs": o.outputs,
                    "exit_code": o.code,
                });
                let text = serde_json::to_string_pretty(&report).expect("json") + "\n";
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: writing report: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if matches!(e.downcast_ref::<Error>(), Some(Error::BudgetExceeded(_))) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
