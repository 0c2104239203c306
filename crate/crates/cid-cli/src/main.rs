//! `cid`: deterministic command-line front end for the
//! conclusive-identification toolkit.
//!
//! Every subcommand is a pure function of its inputs, flags, and seed;
//! the only non-content output is a metadata banner, suppressible with
//! `--no-banner`. Exit codes: 0 success, 1 domain error, 2 usage error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

use cid_core::channel::Channel;
use cid_core::combinatorics::{
    chromatic_number, clique_number, fractional_chromatic, independence_number, Coloring,
    ENUMERATION_GUARD,
};
use cid_core::contextuality::{ks_colorable, parity_obstruction, KsColorability, KsSystem};
use cid_core::graph::{Family, Graph};
use cid_core::identification::{
    assisted_ci, ci_unassisted, min_classical_assistance, scheme_from_coloring, simulate_protocol,
    superactivation_gap, verify_scheme, IdentificationScheme,
};
use cid_core::newman::{newman_graph, newman_qa_bound};
use cid_core::quantum::{
    builtin_system, certify_orthogonal_rank, is_orthogonal_representation, quantum_assisted_ci,
    VectorSystem, VectorSystemFile,
};
use cid_core::rational::format_ratio;

#[derive(Parser)]
#[command(
    name = "cid",
    version,
    about = "Exact analysis of conclusive identification over classical channels"
)]
struct Cli {
    /// Suppress the metadata banner (tool version, input digests, seed)
    #[arg(long, global = true)]
    no_banner: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and analyze graphs
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Validate channels and extract their graphs
    Channel {
        #[command(subcommand)]
        cmd: ChannelCmd,
    },
    /// Identification schemes and assisted indices
    Ci {
        #[command(subcommand)]
        cmd: CiCmd,
    },
    /// Orthogonal representations and the quantum protocol
    Quantum {
        #[command(subcommand)]
        cmd: QuantumCmd,
    },
    /// Kochen-Specker system checks
    Ks {
        #[command(subcommand)]
        cmd: KsCmd,
    },
    /// Newman graph construction and the exponential-advantage report
    Newman {
        /// Vector length; a multiple of 4
        #[arg(long)]
        d: usize,
        /// Write the graph JSON here ("-" for stdout)
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Seeded Monte-Carlo run of an identification scheme
    Simulate {
        #[command(flatten)]
        channel: ChannelSource,
        /// Scheme JSON file; defaults to the chromatic coloring scheme
        #[arg(long)]
        scheme: Option<PathBuf>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Diameter, independence, clique, chromatic, fractional chromatic
    Analyze {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Emit a named family as graph JSON
    Family {
        /// e.g. cycle:7, wheel:6, friendship:3, star:5, turan:8,2,
        /// complete:4, pentagon:1, ks18, yo13, yo14, newman:8
        spec: String,
        /// Set the all-self-loops flag on the result
        #[arg(long)]
        with_loops: bool,
    },
    /// Strong or co-normal product of two graph files
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Strong,
    Conormal,
}

#[derive(Subcommand)]
enum ChannelCmd {
    /// SNFC report, support/confusability graphs, indices, gap
    Analyze {
        #[command(flatten)]
        source: ChannelSource,
    },
}

#[derive(Subcommand)]
enum CiCmd {
    /// Build and print the coloring-derived identification scheme
    Scheme {
        #[command(flatten)]
        channel: ChannelSource,
        /// "auto" for the exact chromatic coloring, or a JSON file with
        /// {"partition": {input: color, ...}}
        #[arg(long, default_value = "auto")]
        coloring: String,
        /// Emit the scheme as JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Assisted index with k side-channel symbols
    Assisted {
        #[command(flatten)]
        channel: ChannelSource,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = AssistMode::Oracle)]
        mode: AssistMode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AssistMode {
    /// Brute force over all partitions into at most k classes
    Oracle,
    /// Proper-coloring construction (requires k >= chi)
    Coloring,
}

#[derive(Subcommand)]
enum QuantumCmd {
    /// Check an orthogonal representation and run the assisted protocol
    Verify {
        /// Built-in name (ks18, yo13, yo14, hadamard:8) or a JSON file
        #[arg(long)]
        vectors: String,
        /// Verify against this channel's support graph instead of the
        /// system's own orthogonality graph
        #[command(flatten)]
        channel: OptionalChannelSource,
    },
}

#[derive(Subcommand)]
enum KsCmd {
    /// Colorability, parity, and the two induced graphs
    Check {
        /// Built-in name (ks18, yo13) or a vector-system JSON file with
        /// contexts
        #[arg(long)]
        system: String,
    },
}

/// A channel comes either from a JSON file or as the canonical channel
/// over a named support graph.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChannelSource {
    /// Channel JSON file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Support-graph spec (see `graph family`); loops are added
    #[arg(long)]
    support: Option<String>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalChannelSource {
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    support: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph JSON file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec, e.g. cycle:7 or ks18
    #[arg(long)]
    spec: Option<String>,
}

/// Banner lines accumulated while loading inputs.
struct Banner {
    enabled: bool,
    lines: Vec<String>,
}

impl Banner {
    fn new(enabled: bool) -> Self {
        Banner {
            enabled,
            lines: vec![format!("# cid {}", env!("CARGO_PKG_VERSION"))],
        }
    }

    fn input(&mut self, path: &Path, bytes: &[u8]) {
        let digest = Sha256::digest(bytes);
        self.lines
            .push(format!("# input {} sha256={:x}", path.display(), digest));
    }

    fn note(&mut self, line: String) {
        self.lines.push(format!("# {line}"));
    }

    fn print(&self) {
        if self.enabled {
            for line in &self.lines {
                println!("{line}");
            }
        }
    }
}

fn main() {
    // die quietly when the consumer closes the pipe (cid ... | head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn read_file(banner: &mut Banner, path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    banner.input(path, &bytes);
    String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
}

fn load_json(banner: &mut Banner, path: &Path) -> Result<serde_json::Value> {
    let text = read_file(banner, path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Family specs plus the built-in orthogonality and Newman graphs.
fn graph_from_spec(spec: &str) -> Result<Graph> {
    if let Ok(family) = spec.parse::<Family>() {
        return Ok(family.build()?);
    }
    match spec {
        "ks18" | "yo13" | "yo14" => Ok(builtin_system(spec)?.graph),
        _ => {
            if let Some(arg) = spec.strip_prefix("newman:") {
                let d: usize = arg
                    .parse()
                    .map_err(|_| anyhow!("bad newman spec `{spec}`"))?;
                return Ok(newman_graph(d)?.graph);
            }
            bail!("unknown graph spec `{spec}`")
        }
    }
}

fn load_graph(banner: &mut Banner, source: &GraphSource) -> Result<Graph> {
    match (&source.file, &source.spec) {
        (Some(path), None) => {
            let value = load_json(banner, path)?;
            Ok(serde_json::from_value(value)?)
        }
        (None, Some(spec)) => graph_from_spec(spec),
        _ => unreachable!("clap group enforces exactly one source"),
    }
}

fn load_channel(
    banner: &mut Banner,
    file: &Option<PathBuf>,
    support: &Option<String>,
) -> Result<Channel> {
    match (file, support) {
        (Some(path), None) => {
            let value = load_json(banner, path)?;
            Ok(serde_json::from_value(value)?)
        }
        (None, Some(spec)) => {
            let graph = graph_from_spec(spec)?;
            Ok(Channel::canonical(&graph.with_self_loops(true))?)
        }
        _ => unreachable!("clap group enforces exactly one source"),
    }
}

/// (system, contexts, display name)
type LoadedVectors = (VectorSystem, Option<Vec<Vec<usize>>>, String);

fn load_vectors(banner: &mut Banner, spec: &str) -> Result<LoadedVectors> {
    if Path::new(spec).exists() {
        let value = load_json(banner, Path::new(spec))?;
        let file = VectorSystemFile::from_json(&value)?;
        Ok((file.system, file.contexts, spec.to_string()))
    } else {
        let b = builtin_system(spec)?;
        Ok((b.system, b.contexts, b.name))
    }
}

fn run(cli: Cli) -> Result<()> {
    let mut banner = Banner::new(!cli.no_banner);
    match cli.command {
        Command::Graph { cmd } => graph_cmd(&mut banner, cmd),
        Command::Channel { cmd } => channel_cmd(&mut banner, cmd),
        Command::Ci { cmd } => ci_cmd(&mut banner, cmd),
        Command::Quantum { cmd } => quantum_cmd(&mut banner, cmd),
        Command::Ks { cmd } => ks_cmd(&mut banner, cmd),
        Command::Newman { d, graph_out } => newman_cmd(&mut banner, d, graph_out),
        Command::Simulate {
            channel,
            scheme,
            trials,
            seed,
        } => simulate_cmd(&mut banner, channel, scheme, trials, seed),
    }
}

fn graph_cmd(banner: &mut Banner, cmd: GraphCmd) -> Result<()> {
    match cmd {
        GraphCmd::Analyze { source } => {
            let g = load_graph(banner, &source)?;
            banner.print();
            println!(
                "graph: n={} edges={} self_loops={}",
                g.vertex_count(),
                g.edge_count(),
                g.has_all_self_loops()
            );
            println!("diameter: {}", g.diameter());
            let ind = independence_number(&g);
            println!(
                "independence_number: {}  witness: {:?}",
                ind.size, ind.witness
            );
            let clq = clique_number(&g);
            println!("clique_number: {}  witness: {:?}", clq.size, clq.witness);
            let chrom = chromatic_number(&g);
            println!(
                "chromatic_number: {}  classes: {:?}",
                chrom.number,
                chrom.coloring.classes()
            );
            match fractional_chromatic(&g) {
                Ok(v) => println!("fractional_chromatic: {}", format_ratio(&v)),
                Err(_) => println!(
                    "fractional_chromatic: skipped (n={} above guard {})",
                    g.vertex_count(),
                    ENUMERATION_GUARD
                ),
            }
            Ok(())
        }
        GraphCmd::Family { spec, with_loops } => {
            let g = graph_from_spec(&spec)?;
            // pentagon variants carry the flag already; --with-loops only adds it
            let g = if with_loops {
                g.with_self_loops(true)
            } else {
                g
            };
            banner.print();
            println!("{}", serde_json::to_string_pretty(&g)?);
            Ok(())
        }
        GraphCmd::Product { kind, left, right } => {
            let lv = load_json(banner, &left)?;
            let rv = load_json(banner, &right)?;
            let lg: Graph = serde_json::from_value(lv)?;
            let rg: Graph = serde_json::from_value(rv)?;
            let product = match kind {
                ProductKind::Strong => lg.strong_product(&rg),
                ProductKind::Conormal => lg.conormal_product(&rg),
            };
            banner.print();
            println!("{}", serde_json::to_string_pretty(&product)?);
            Ok(())
        }
    }
}

fn channel_cmd(banner: &mut Banner, cmd: ChannelCmd) -> Result<()> {
    let ChannelCmd::Analyze { source } = cmd;
    let channel = load_channel(banner, &source.file, &source.support)?;
    banner.print();
    println!(
        "channel: inputs={} outputs={}",
        channel.input_count(),
        channel.output_count()
    );
    let report = channel.validate_snfc();
    if !report.passes() {
        println!("snfc: no ({})", report.summary());
        if channel.inputs() == channel.outputs() {
            let ci = ci_unassisted(&channel)?;
            println!("ci_unassisted: {}  witness: {:?}", ci.count, ci.witness);
        }
        return Ok(());
    }
    println!("snfc: yes");
    let support = channel.support_graph()?;
    println!(
        "support: edges={} diameter={}",
        support.edge_count(),
        support.diameter()
    );
    let confusability = channel.confusability_graph()?;
    let n = channel.input_count();
    let complete = confusability.edge_count() == n * (n - 1) / 2;
    println!(
        "confusability: edges={} complete={}",
        confusability.edge_count(),
        if complete { "yes" } else { "no" }
    );
    let zei = cid_core::identification::zero_error_index(&channel)?;
    println!(
        "zero_error_index: alpha={} ({})  witness: {:?}",
        zei.alpha,
        zei.bits_annotation(),
        zei.witness
    );
    let ci = ci_unassisted(&channel)?;
    println!("ci_unassisted: {}  witness: {:?}", ci.count, ci.witness);
    let assist = min_classical_assistance(&channel)?;
    match assist.oracle_beta {
        Some(oracle) => println!(
            "min_classical_assistance: {} (oracle: {})",
            assist.beta, oracle
        ),
        None => println!("min_classical_assistance: {}", assist.beta),
    }
    if ci.count == 0 {
        println!("superactivation_gap: {}", superactivation_gap(&channel)?);
    }
    Ok(())
}

fn load_coloring(
    banner: &mut Banner,
    channel: &Channel,
    spec: &str,
) -> Result<(Coloring, Option<Vec<String>>)> {
    if spec == "auto" {
        let support = channel.support_graph()?;
        return Ok((chromatic_number(&support).coloring, None));
    }
    let value = load_json(banner, Path::new(spec))?;
    let map = value
        .get("partition")
        .and_then(|p| p.as_object())
        .ok_or_else(|| anyhow!("{spec} must contain a \"partition\" object"))?;
    let mut names: Vec<String> = Vec::new();
    let mut assignment = vec![usize::MAX; channel.input_count()];
    for (label, color) in map {
        let x = channel.input_index(label)?;
        let color = color
            .as_str()
            .ok_or_else(|| anyhow!("color for input {label} must be a string"))?;
        let c = names.iter().position(|n| n == color).unwrap_or_else(|| {
            names.push(color.to_string());
            names.len() - 1
        });
        assignment[x] = c;
    }
    if let Some(x) = assignment.iter().position(|&c| c == usize::MAX) {
        bail!("input {} missing from the partition", channel.inputs()[x]);
    }
    Ok((Coloring::new(assignment), Some(names)))
}

fn ci_cmd(banner: &mut Banner, cmd: CiCmd) -> Result<()> {
    match cmd {
        CiCmd::Scheme {
            channel,
            coloring,
            json,
        } => {
            let channel = load_channel(banner, &channel.file, &channel.support)?;
            let (coloring, names) = load_coloring(banner, &channel, &coloring)?;
            let mut scheme = scheme_from_coloring(&channel, &coloring)?;
            if let Some(names) = names {
                scheme = scheme.with_color_names(names)?;
            }
            banner.print();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&scheme.to_json(&channel))?
                );
                return Ok(());
            }
            let partition: Vec<String> = channel
                .inputs()
                .iter()
                .zip(scheme.partition())
                .map(|(label, &c)| format!("{label}->{}", scheme.color_names()[c]))
                .collect();
            println!("partition: {}", partition.join(" "));
            println!("| Input | Output | Message | Identified? |");
            println!("|-------|--------|---------|-------------|");
            for row in scheme.table_rows(&channel) {
                println!(
                    "| {} | {} | {} | {} |",
                    row.input,
                    row.output,
                    row.message,
                    if row.identified { "yes" } else { "x" }
                );
            }
            let report = verify_scheme(&channel, &scheme);
            println!("identified_count: {}", report.identified_count);
            println!("false_accepts: {}", report.false_accepts.len());
            Ok(())
        }
        CiCmd::Assisted { channel, k, mode } => {
            let channel = load_channel(banner, &channel.file, &channel.support)?;
            banner.print();
            match mode {
                AssistMode::Oracle => {
                    let result = assisted_ci(&channel, k)?;
                    println!("assisted_ci: {} of {}", result.count, channel.input_count());
                    println!("partition: {:?}", result.partition.classes());
                }
                AssistMode::Coloring => {
                    let support = channel.support_graph()?;
                    let chrom = chromatic_number(&support);
                    if chrom.number > k {
                        bail!(
                            "support graph needs {} colors, more than k={}",
                            chrom.number,
                            k
                        );
                    }
                    let scheme = scheme_from_coloring(&channel, &chrom.coloring)?;
                    let report = verify_scheme(&channel, &scheme);
                    println!(
                        "assisted_ci: {} of {} (coloring with {} classes)",
                        report.identified_count,
                        channel.input_count(),
                        chrom.number
                    );
                    println!("partition: {:?}", chrom.coloring.classes());
                }
            }
            Ok(())
        }
    }
}

fn quantum_cmd(banner: &mut Banner, cmd: QuantumCmd) -> Result<()> {
    let QuantumCmd::Verify { vectors, channel } = cmd;
    let (system, _, name) = load_vectors(banner, &vectors)?;
    let against_channel = channel.file.is_some() || channel.support.is_some();
    if against_channel {
        let channel = load_channel(banner, &channel.file, &channel.support)?;
        let support = channel.support_graph()?;
        banner.print();
        println!(
            "system: {name} ({} vectors, dim {})",
            system.len(),
            system.dim()
        );
        let rep = is_orthogonal_representation(&system, &support)?;
        if !rep.ok {
            println!(
                "orthogonal_representation: no ({} violations)",
                rep.violations.len()
            );
            for (u, v, ip) in rep.violations.iter().take(10) {
                println!("  edge ({u},{v}): inner product {ip}");
            }
            bail!("system does not represent the support graph");
        }
        println!(
            "orthogonal_representation: yes (support graph, {} edges)",
            support.edge_count()
        );
        let cert = certify_orthogonal_rank(&support, &system)?;
        println!(
            "xi_certificate: lower={} upper={} tight={}",
            cert.lower,
            cert.upper,
            if cert.tight { "yes" } else { "no" }
        );
        let result = quantum_assisted_ci(&channel, &system)?;
        println!(
            "quantum_assisted_ci: {} inputs identified, all support-edge outcomes zero",
            result.identified
        );
    } else {
        let graph = system.orthogonality_graph();
        banner.print();
        println!(
            "system: {name} ({} vectors, dim {})",
            system.len(),
            system.dim()
        );
        println!(
            "orthogonality_graph: {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        );
        let cert = certify_orthogonal_rank(&graph, &system)?;
        println!(
            "xi_certificate: lower={} upper={} tight={}",
            cert.lower,
            cert.upper,
            if cert.tight { "yes" } else { "no" }
        );
    }
    Ok(())
}

fn ks_cmd(banner: &mut Banner, cmd: KsCmd) -> Result<()> {
    let KsCmd::Check { system } = cmd;
    let (vectors, contexts, name) = load_vectors(banner, &system)?;
    let contexts = contexts.ok_or_else(|| anyhow!("system `{name}` has no contexts to check"))?;
    let sys = KsSystem::new(vectors, contexts)?;
    banner.print();
    println!(
        "system: {name} ({} vectors, dim {}, {} contexts)",
        sys.vector_count(),
        sys.system().dim(),
        sys.contexts().len()
    );
    println!(
        "parity_obstruction: {}",
        if parity_obstruction(&sys) {
            "yes"
        } else {
            "no"
        }
    );
    match ks_colorable(&sys) {
        KsColorability::Colorable(witness) => {
            let ones: Vec<usize> = witness
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect();
            println!("ks_colorable: yes  ones: {ones:?}");
        }
        KsColorability::NoColoring { nodes_explored } => {
            println!("ks_colorable: no (search closed after {nodes_explored} nodes)");
        }
    }
    let orth = sys.orthogonality_graph();
    println!(
        "orthogonality_graph: {} edges, chi={}",
        orth.edge_count(),
        chromatic_number(&orth).number
    );
    let cliq = sys.context_clique_graph();
    println!(
        "context_clique_graph: {} edges, chi={}",
        cliq.edge_count(),
        chromatic_number(&cliq).number
    );
    let cert = certify_orthogonal_rank(&orth, sys.system())?;
    println!(
        "xi_certificate: lower={} upper={} tight={}",
        cert.lower,
        cert.upper,
        if cert.tight { "yes" } else { "no" }
    );
    match fractional_chromatic(&orth) {
        Ok(v) => println!("fractional_chromatic: {}", format_ratio(&v)),
        Err(_) => println!("fractional_chromatic: skipped (above enumeration guard)"),
    }
    Ok(())
}

fn newman_cmd(banner: &mut Banner, d: usize, graph_out: Option<PathBuf>) -> Result<()> {
    let newman = newman_graph(d)?;
    banner.print();
    let mut rows: Vec<(String, String)> = vec![
        ("d".into(), d.to_string()),
        ("vertices".into(), newman.graph.vertex_count().to_string()),
        ("edges".into(), newman.graph.edge_count().to_string()),
        ("diameter".into(), newman.graph.diameter().to_string()),
    ];
    if d <= cid_core::newman::NEWMAN_ALPHA_GUARD {
        let report = newman_qa_bound(d)?;
        rows.push(("alpha (exact)".into(), report.alpha.to_string()));
        rows.push((
            "alpha sanity bound".into(),
            report.alpha_sanity_bound.to_string(),
        ));
        rows.push(("chi lower bound".into(), report.chi_lower.to_string()));
        rows.push((
            "xi certificate".into(),
            format!(
                "{{{}, {}, {}}}",
                report.qa.xi.lower,
                report.qa.xi.upper,
                if report.qa.xi.tight { "tight" } else { "loose" }
            ),
        ));
        rows.push(("qa lower bound".into(), format_ratio(&report.qa.qa_ratio)));
        rows.push((
            "exponential bound (1/d)(2/1.99)^d".into(),
            format_ratio(&report.exponential_bound),
        ));
        rows.push((
            "bound holds".into(),
            if report.bound_holds { "yes" } else { "no" }.into(),
        ));
    } else {
        rows.push((
            "alpha".into(),
            format!(
                "skipped (d above exact guard {})",
                cid_core::newman::NEWMAN_ALPHA_GUARD
            ),
        ));
    }
    println!("| quantity | value |");
    println!("|----------|-------|");
    for (k, v) in rows {
        println!("| {k} | {v} |");
    }
    if let Some(path) = graph_out {
        let json = serde_json::to_string_pretty(&newman.graph)?;
        if path.as_os_str() == "-" {
            println!("{json}");
        } else {
            std::fs::write(&path, json + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn simulate_cmd(
    banner: &mut Banner,
    channel: ChannelSource,
    scheme: Option<PathBuf>,
    trials: u64,
    seed: u64,
) -> Result<()> {
    let channel = load_channel(banner, &channel.file, &channel.support)?;
    let scheme = match scheme {
        Some(path) => {
            let value = load_json(banner, &path)?;
            IdentificationScheme::from_json(&value, &channel)?
        }
        None => {
            let support = channel.support_graph()?;
            scheme_from_coloring(&channel, &chromatic_number(&support).coloring)?
        }
    };
    banner.note(format!("trials {trials}"));
    banner.note(format!("seed {seed}"));
    let report = simulate_protocol(&channel, &scheme, trials, seed)?;
    banner.print();
    print!("{}", report.to_csv());
    let rates: Vec<String> = report
        .rows
        .iter()
        .map(|r| format!("{}={}", r.input, format_ratio(&r.expected_rate)))
        .collect();
    if !banner.enabled {
        return Ok(());
    }
    println!("# expected conclusive rates: {}", rates.join(" "));
    Ok(())
}
