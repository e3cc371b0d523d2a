//! `dla` — classify the Lie algebra generated by a set of Pauli strings.
//!
//! Instance files hold one or more whitespace-separated Pauli tokens per
//! line; `#` starts a comment and an optional leading `n=<count>` line fixes
//! the qubit count (shorter tokens are right-padded with identities). `.` is
//! accepted as an alias for `I` on input; output always uses `I`.
//!
//! Exit codes: 1 for unreadable or unparsable input, 2 for invalid
//! generators, 3 when `--verify` finds a disagreement between the classifier
//! and the brute-force closure oracle.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dla_core::{
    cartan_split, catalog_forbidden, classify_opts, closure, commutator_graph,
    connected_components, forbidden_witness, frustration_graph, realize_in_pauli, recognize_root,
    verify_classification, BitVector, Classification, ClassifyError, ClassifyOptions, OracleError,
    PauliError, PauliString, PauliVector, DEFAULT_CLOSURE_CAP,
};

#[derive(Parser)]
#[command(name = "dla", version, about = "Pauli-string Lie algebra classifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the algebra generated by an instance file.
    Classify(ClassifyArgs),
    /// Emit a generator family as an instance file on stdout.
    Generate(GenerateArgs),
    /// Expose individual analyses (closure, roots, witnesses, ...).
    #[command(subcommand)]
    Tools(ToolsCommand),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Instance file path.
    path: String,
    /// Reject Hermitian generators instead of lifting them to i-multiples.
    #[arg(long)]
    strict: bool,
    /// Cross-check the result against the closure oracle when feasible.
    #[arg(long)]
    verify: bool,
    /// Point budget for closure computations.
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    cap: usize,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct FormatArgs {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "plain")]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    plain: bool,
    /// Seed for randomized tools (accepted for interface stability; no
    /// current subcommand draws randomness).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Transverse fields plus nearest-neighbor ZZ couplings on a path.
    QaoaPath {
        #[arg(long)]
        n: usize,
    },
    /// The path family plus the cycle-closing coupling.
    QaoaCycle {
        #[arg(long)]
        n: usize,
    },
    /// Transverse fields plus ZZ couplings along given edges (1-based,
    /// comma-separated pairs like "1-2,2-3").
    QaoaGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: String,
    },
    /// Single-qubit X and Z fields plus one iZ-pattern per subset
    /// (semicolon-separated 1-based lists like "1,2;2,3,4").
    ParityBasis {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        sets: String,
    },
}

#[derive(Subcommand)]
enum ToolsCommand {
    /// Brute-force closure of the generator set under commutators.
    Closure {
        path: String,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        cap: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Root multigraphs of the frustration graph's components.
    RootGraph {
        path: String,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// First 6-subset spanning a nondegenerate minus-type 6-space.
    Witness {
        path: String,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Components of the commutator graph on all points (small n only).
    CommutatorGraph {
        path: String,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Split the closure by a hyperplane functional (a (2n+1)-bit string).
    Cartan {
        path: String,
        #[arg(long)]
        functional: String,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        cap: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// The 32 forbidden 6-vertex graphs as adjacency lists.
    Catalog {
        #[command(flatten)]
        format: FormatArgs,
    },
}

const EXIT_PARSE: u8 = 1;
const EXIT_GENERATOR: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        let code = match &e {
            ClassifyError::Pauli(PauliError::IdentityGenerator)
            | ClassifyError::Pauli(PauliError::HermitianGenerator(_)) => EXIT_GENERATOR,
            _ => EXIT_PARSE,
        };
        fail(code, e.to_string())
    }
}

impl From<PauliError> for Failure {
    fn from(e: PauliError) -> Failure {
        ClassifyError::from(e).into()
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        let code = match &e {
            OracleError::InvalidGenerator => EXIT_GENERATOR,
            _ => EXIT_PARSE,
        };
        fail(code, e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Tools(tool) => cmd_tools(tool),
    }
}

/// Parses an instance file into Pauli strings sharing one qubit count.
fn read_instance(path: &str) -> Result<Vec<PauliString>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {path}: {e}")))?;
    parse_instance(&text)
}

fn parse_instance(text: &str) -> Result<Vec<PauliString>, Failure> {
    let mut header_n: Option<usize> = None;
    let mut tokens: Vec<String> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if tokens.is_empty() && header_n.is_none() {
            if let Some(v) = line.strip_prefix("n=") {
                header_n = Some(
                    v.trim()
                        .parse()
                        .map_err(|_| fail(EXIT_PARSE, format!("bad header line {line:?}")))?,
                );
                continue;
            }
        }
        tokens.extend(line.split_whitespace().map(str::to_string));
    }
    if tokens.is_empty() {
        return Err(fail(EXIT_PARSE, "no generators in instance file"));
    }
    let n = match header_n {
        Some(n) => n,
        None => tokens
            .iter()
            .map(|t| PauliString::parse(t, None).map(|p| p.n()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .max()
            .unwrap(),
    };
    tokens
        .iter()
        .map(|t| PauliString::parse(t, Some(n)).map_err(Into::into))
        .collect()
}

fn component_json(c: &Classification) -> Vec<Value> {
    c.components
        .iter()
        .map(|comp| {
            json!({
                "generators": comp.generator_indices,
                "branch": format!("{:?}", comp.branch),
                "summand": {
                    "kind": format!("{:?}", comp.summand.kind),
                    "k": comp.summand.k,
                    "log2_copies": comp.summand.log2_copies,
                    "label": comp.summand.label(),
                    "dim": comp.summand.total_dim().map(u128_json),
                },
                "diagnostics": serde_json::to_value(&comp.diagnostics).unwrap(),
            })
        })
        .collect()
}

fn u128_json(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn emit(format: &FormatArgs, value: &Value, plain: impl FnOnce() -> String) {
    if format.plain {
        println!("{}", plain());
    } else {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), Failure> {
    let gens = read_instance(&args.path)?;
    let opts = ClassifyOptions {
        strict: args.strict,
        closure_cap: args.cap,
    };
    let c = classify_opts(&gens, &opts)?;

    let mut verified: Option<bool> = None;
    let mut mismatch: Vec<String> = Vec::new();
    if args.verify {
        match verify_classification(&c, args.cap) {
            Ok(rep) => {
                verified = Some(rep.pass);
                mismatch = rep.failures;
            }
            Err(OracleError::CapExceeded { .. }) => verified = None,
            Err(e) => return Err(e.into()),
        }
    }

    let mut report = json!({
        "n": c.n,
        "generators": c.vectors.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
        "lifted": c.lifted,
        "dropped": c.dropped,
        "components": component_json(&c),
        "decomposition": c.decomposition_string(),
        "canonical": c.canonical_string(),
        "total_dim": c.total_dim.map(u128_json),
    });
    if args.verify {
        report["verified"] = json!(verified);
    }

    emit(&args.format, &report, || {
        let mut lines = vec![
            format!("n = {}", c.n),
            format!("generators ({}):", c.vectors.len()),
        ];
        for v in &c.vectors {
            lines.push(format!("  {v:?}"));
        }
        for (i, comp) in c.components.iter().enumerate() {
            lines.push(format!(
                "component {i}: {:?} branch, {} (2^{} copies), generators {:?}",
                comp.branch,
                comp.summand.label(),
                comp.summand.log2_copies,
                comp.generator_indices,
            ));
        }
        lines.push(format!("decomposition: {}", c.decomposition_string()));
        lines.push(format!("canonical:     {}", c.canonical_string()));
        match c.total_dim {
            Some(d) => lines.push(format!("total dim:     {d}")),
            None => lines.push("total dim:     (overflows 128 bits)".to_string()),
        }
        if let Some(ok) = verified {
            lines.push(format!("verified:      {ok}"));
        }
        lines.join("\n")
    });

    if verified == Some(false) {
        return Err(fail(
            EXIT_MISMATCH,
            format!("classification disagrees with oracle: {}", mismatch.join("; ")),
        ));
    }
    Ok(())
}

fn pauli_line(n: usize, letters: &[(usize, char)], anti: bool) -> String {
    let mut word = vec!['I'; n];
    for &(i, ch) in letters {
        word[i] = ch;
    }
    let body: String = word.into_iter().collect();
    if anti {
        format!("i{body}")
    } else {
        body
    }
}

fn parse_indices(part: &str, n: usize) -> Result<Vec<usize>, Failure> {
    part.split(',')
        .map(|s| {
            let i: usize = s
                .trim()
                .parse()
                .map_err(|_| fail(EXIT_PARSE, format!("bad index {s:?}")))?;
            if i < 1 || i > n {
                return Err(fail(EXIT_PARSE, format!("index {i} out of range 1..={n}")));
            }
            Ok(i - 1)
        })
        .collect()
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Failure> {
    let mut lines: Vec<String> = Vec::new();
    match args.family {
        Family::QaoaPath { n } | Family::QaoaCycle { n } => {
            if n < 2 {
                return Err(fail(EXIT_PARSE, "need n >= 2"));
            }
            let cycle = matches!(args.family, Family::QaoaCycle { .. });
            lines.push(format!("n={n}"));
            for i in 0..n {
                lines.push(pauli_line(n, &[(i, 'X')], false));
            }
            for i in 0..n - 1 {
                lines.push(pauli_line(n, &[(i, 'Z'), (i + 1, 'Z')], false));
            }
            if cycle {
                lines.push(pauli_line(n, &[(0, 'Z'), (n - 1, 'Z')], false));
            }
        }
        Family::QaoaGraph { n, edges } => {
            if n < 1 {
                return Err(fail(EXIT_PARSE, "need n >= 1"));
            }
            lines.push(format!("n={n}"));
            for i in 0..n {
                lines.push(pauli_line(n, &[(i, 'X')], false));
            }
            for pair in edges.split(',').filter(|p| !p.trim().is_empty()) {
                let ends: Vec<&str> = pair.split('-').collect();
                if ends.len() != 2 {
                    return Err(fail(EXIT_PARSE, format!("bad edge {pair:?}")));
                }
                let u = parse_indices(ends[0], n)?[0];
                let v = parse_indices(ends[1], n)?[0];
                if u == v {
                    return Err(fail(EXIT_PARSE, format!("loop edge {pair:?}")));
                }
                lines.push(pauli_line(n, &[(u, 'Z'), (v, 'Z')], false));
            }
        }
        Family::ParityBasis { n, sets } => {
            if n < 1 {
                return Err(fail(EXIT_PARSE, "need n >= 1"));
            }
            lines.push(format!("n={n}"));
            for i in 0..n {
                lines.push(pauli_line(n, &[(i, 'X')], false));
            }
            for i in 0..n {
                lines.push(pauli_line(n, &[(i, 'Z')], false));
            }
            for set in sets.split(';').filter(|s| !s.trim().is_empty()) {
                let idx = parse_indices(set, n)?;
                let letters: Vec<(usize, char)> = idx.iter().map(|&i| (i, 'Z')).collect();
                lines.push(pauli_line(n, &letters, true));
            }
        }
    }
    println!("{}", lines.join("\n"));
    Ok(())
}

fn prepared_vectors(path: &str) -> Result<(usize, Vec<PauliVector>), Failure> {
    let gens = read_instance(path)?;
    let n = gens[0].n();
    let prep = dla_core::prepare_generators(&gens, false)?;
    Ok((n, prep.vectors))
}

fn cmd_tools(tool: ToolsCommand) -> Result<(), Failure> {
    match tool {
        ToolsCommand::Closure { path, cap, format } => {
            let (n, vectors) = prepared_vectors(&path)?;
            let s = closure(&vectors, cap)?;
            let points: Vec<String> = s.points.iter().map(|p| format!("{p:?}")).collect();
            let report = json!({ "n": n, "count": s.len(), "points": points });
            emit(&format, &report, || {
                format!("{} points:\n{}", s.len(), points.join("\n"))
            });
        }
        ToolsCommand::RootGraph { path, format } => {
            let (n, vectors) = prepared_vectors(&path)?;
            let g = frustration_graph(&vectors);
            let comps = connected_components(&g);
            let mut out = Vec::new();
            for comp in &comps {
                let sub = g.induced(comp);
                let root = recognize_root(&sub).map(|cert| {
                    json!({
                        "vertices": cert.root.vertex_count(),
                        "edges": cert.root.edges().iter()
                            .map(|&(u, v, m)| json!([u, v, m])).collect::<Vec<_>>(),
                        "vertex_to_edge": comp.iter().zip(&cert.vertex_to_edge)
                            .map(|(&g_i, &(u, v))| json!([g_i, u, v])).collect::<Vec<_>>(),
                    })
                });
                out.push(json!({ "component": comp, "root": root }));
            }
            let report = json!({ "n": n, "components": out });
            emit(&format, &report, || {
                serde_json::to_string_pretty(&report).unwrap()
            });
        }
        ToolsCommand::Witness { path, format } => {
            let (n, vectors) = prepared_vectors(&path)?;
            let w = forbidden_witness(&vectors);
            let tokens = w.as_ref().map(|idx| {
                idx.iter()
                    .map(|&i| format!("{:?}", vectors[i]))
                    .collect::<Vec<_>>()
            });
            let report = json!({ "n": n, "witness": w, "witness_generators": tokens });
            emit(&format, &report, || match &w {
                Some(idx) => format!("witness at indices {idx:?}"),
                None => "no witness".to_string(),
            });
        }
        ToolsCommand::CommutatorGraph { path, format } => {
            let (n, vectors) = prepared_vectors(&path)?;
            let comps = commutator_graph(&vectors, n)?;
            let out: Vec<Value> = comps
                .iter()
                .map(|c| {
                    json!({
                        "size": c.len(),
                        "points": c.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let report = json!({ "n": n, "component_count": comps.len(), "components": out });
            emit(&format, &report, || {
                format!(
                    "{} components with sizes {:?}",
                    comps.len(),
                    comps.iter().map(Vec::len).collect::<Vec<_>>()
                )
            });
        }
        ToolsCommand::Cartan {
            path,
            functional,
            cap,
            format,
        } => {
            let (n, vectors) = prepared_vectors(&path)?;
            let func = BitVector::from_bit_str(functional.trim())
                .ok_or_else(|| fail(EXIT_PARSE, "functional must be a 0/1 string"))?;
            if func.len() != 2 * n + 1 {
                return Err(fail(
                    EXIT_PARSE,
                    format!("functional must have {} bits", 2 * n + 1),
                ));
            }
            let s = closure(&vectors, cap)?;
            let split = cartan_split(&s, &func);
            let report = json!({
                "n": n,
                "closure_size": s.len(),
                "l_size": split.l_part.len(),
                "m_size": split.m_part.len(),
                "l": split.l_part.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>(),
                "m": split.m_part.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>(),
                "verified": split.verified,
                "l_empty_warning": split.l_empty_warning,
            });
            emit(&format, &report, || {
                format!(
                    "|l| = {}, |m| = {}, verified = {}",
                    split.l_part.len(),
                    split.m_part.len(),
                    split.verified
                )
            });
        }
        ToolsCommand::Catalog { format } => {
            let cat = catalog_forbidden();
            let graphs: Vec<Value> = cat
                .iter()
                .map(|f| {
                    json!({
                        "edges": f.graph.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
                        "realization": f.sextuple.iter()
                            .map(|w| format!("{:?}", realize_in_pauli(w)))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let report = json!({ "count": cat.len(), "graphs": graphs });
            emit(&format, &report, || {
                format!("{} forbidden graphs", cat.len())
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_parsing() {
        let gens = parse_instance("# comment\nn=3\nX.. .X.\nZZ.\n").unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].render(), "XII");

        let gens = parse_instance("XX\niZ\n").unwrap();
        assert_eq!(gens[1].render(), "iZI");

        assert!(parse_instance("").is_err());
        assert!(parse_instance("QQ").is_err());
    }
}
