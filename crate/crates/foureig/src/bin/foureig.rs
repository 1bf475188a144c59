//! Command-line front end: analyze graphs from graph6 streams, construct
//! the named families, enumerate regular graphs, run feasibility scans,
//! and verify the classification statements over small-order corpora.
//!
//! Exit codes: 0 success / statement verified, 2 usage or input error,
//! 3 a scan or verification found a counterexample.

use clap::{Args, Parser, Subcommand};
use foureig::enumeration::{
    enumerate_regular, verify_theorem, EnumSpec, TheoremId, DEFAULT_ENUMERATION_CAP,
};
use foureig::family::family_spectrum;
use foureig::feasibility::{scan_integer, scan_noninteger, ScanVerdict};
use foureig::graph::{construct, graph6_decode, graph6_encode};
use foureig::report::analyze;
use foureig::spectral::spectrum;
use foureig::FamilyDescriptor;
use std::io::{BufRead, Read};
use std::process::ExitCode;

const EXIT_INPUT: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "foureig",
    about = "Exact spectral analysis of regular graphs with four distinct eigenvalues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graph6 lines from standard input (one report per graph)
    Analyze {
        /// Emit one JSON record per line instead of a readable summary
        #[arg(long)]
        json: bool,
    },
    /// Construct a named family member and print its graph6 form
    Construct {
        /// Family tag: complete | cycle | complete-bipartite |
        /// complete-multipartite | crown | kss-expand | crown-expand |
        /// complement-crown-expand | a-graph | b-graph
        family: String,
        /// Integer parameters of the family
        params: Vec<usize>,
        /// Also print the spectrum (closed form where available, checked
        /// against the computed one)
        #[arg(long)]
        spectrum: bool,
    },
    /// Stream one graph6 line per isomorphism class of k-regular graphs
    Enumerate {
        n: usize,
        k: usize,
        /// Keep connected graphs only
        #[arg(long)]
        connected: bool,
        /// Keep graphs with exactly four distinct eigenvalues
        #[arg(long = "four-eig")]
        four_eig: bool,
        /// Keep graphs whose second least eigenvalue (counted with
        /// multiplicity) is at least this integer
        #[arg(long = "second-least-ge", allow_hyphen_values = true)]
        second_least_ge: Option<i64>,
        /// TOML config file; key `cap` (top level or under
        /// [enumeration]) overrides the default order cap
        #[arg(long)]
        config: Option<String>,
    },
    /// Feasibility scans over putative spectra {[k]¹,[−1]¹,[α]^m,[β]^{n−2−m}}
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
    /// Check a classification statement over all connected regular
    /// graphs up to --nmax vertices
    Verify {
        /// Statement id: thm3.1 | thm3.6 | thm3.9 | thm3.10 | lem2.2
        id: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ScanKind {
    /// Integral α > 0 > β over all even orders up to --nmax
    Integer(ScanArgs),
    /// Irrational conjugate pair, degrees up to --kmax
    Noninteger(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { json } => cmd_analyze(json),
        Command::Construct {
            family,
            params,
            spectrum,
        } => cmd_construct(&family, &params, spectrum),
        Command::Enumerate {
            n,
            k,
            connected,
            four_eig,
            second_least_ge,
            config,
        } => cmd_enumerate(n, k, connected, four_eig, second_least_ge, config.as_deref()),
        Command::Scan { kind } => cmd_scan(kind),
        Command::Verify { id, nmax, json } => cmd_verify(&id, nmax, json),
    }
}

fn cmd_analyze(json: bool) -> ExitCode {
    let stdin = std::io::stdin();
    for (lineno, line) in stdin.lock().lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return ExitCode::from(EXIT_INPUT);
            }
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = match graph6_decode(line) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: line {}: malformed graph6: {e}", lineno + 1);
                return ExitCode::from(EXIT_INPUT);
            }
        };
        let report = analyze(&g);
        if json {
            println!("{}", serde_json::to_string(&report).unwrap());
        } else {
            print_human_report(&report);
        }
    }
    ExitCode::SUCCESS
}

fn print_human_report(r: &foureig::report::AnalysisReport) {
    println!("graph       {}", r.graph6);
    println!("order       {}", r.order);
    match r.degree {
        Some(k) => println!("degree      {k}-regular"),
        None => println!("degree      not regular"),
    }
    println!(
        "structure   {}connected, {}bipartite",
        if r.connected { "" } else { "dis" },
        if r.bipartite { "" } else { "not " },
    );
    let entries: Vec<String> = r
        .spectrum
        .iter()
        .map(|e| {
            let shown = match &e.value {
                foureig::report::EigenvalueRepr::Integer { value, .. } => value.clone(),
                foureig::report::EigenvalueRepr::Quadratic { a, b, plus, .. } => {
                    format!("({a} {} √{b})/2", if *plus { "+" } else { "−" })
                }
                foureig::report::EigenvalueRepr::PolynomialRoot { approx, .. } => {
                    format!("≈{approx}")
                }
            };
            format!("[{shown}]^{}", e.multiplicity)
        })
        .collect();
    println!("spectrum    {{{}}}", entries.join(", "));
    if let Some(t) = &r.taxonomy {
        println!("taxonomy    {t:?}");
    }
    if let Some(w) = r.walk_regular {
        println!("walk-reg.   {w}");
    }
    for p in &r.partitions {
        println!(
            "partition   λ = {}: degrees ({}, {})",
            p.eigenvalue, p.internal_degree, p.external_degree
        );
    }
    for d in &r.divisibility {
        println!(
            "divides     λ = {}: P = {}, Q = {}, n|P+Q: {}, n|P−Q: {}",
            d.eigenvalue, d.p, d.q, d.sum_ok, d.diff_ok
        );
    }
    println!(
        "classes     G(4,2): {}, G(4,2,−1): {}, G(4,2,0): {}, G(4,≥−1): {}",
        r.membership.g42, r.membership.g42_minus_one, r.membership.g42_zero,
        r.membership.g4_ge_minus_one
    );
    if let Some(f) = &r.recognized_family {
        println!("family      {f:?}");
    }
    println!();
}

fn parse_family(family: &str, params: &[usize]) -> Option<FamilyDescriptor> {
    use FamilyDescriptor::*;
    Some(match (family, params) {
        ("complete", [n]) => CompleteK(*n),
        ("cycle", [n]) => CycleC(*n),
        ("complete-bipartite", [m, n]) => CompleteBipartite(*m, *n),
        ("complete-multipartite", parts) if parts.len() >= 2 => {
            CompleteMultipartite(parts.to_vec())
        }
        ("crown", [s]) => Crown(*s),
        ("kss-expand", [s, t]) => KssExpand(*s, *t),
        ("crown-expand", [s, t]) => CrownExpand(*s, *t),
        ("complement-crown-expand", [s, t]) => ComplementCrownExpand(*s, *t),
        ("a-graph", [l, m, n]) => AGraph(*l, *m, *n),
        ("b-graph", [l, m, n, p]) => BGraph(*l, *m, *n, *p),
        _ => return None,
    })
}

fn cmd_construct(family: &str, params: &[usize], show_spectrum: bool) -> ExitCode {
    let Some(desc) = parse_family(family, params) else {
        eprintln!("error: unknown family '{family}' or wrong parameter count");
        return ExitCode::from(EXIT_INPUT);
    };
    let g = match construct(&desc) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    println!("{}", graph6_encode(&g));
    if show_spectrum {
        let closed = family_spectrum(&desc).expect("in range: construction succeeded");
        let computed = spectrum(&g).expect("adjacency spectra split over the reals");
        assert_eq!(closed, computed, "closed-form spectrum mismatch");
        println!("{closed}");
    }
    ExitCode::SUCCESS
}

fn read_cap_config(path: &str) -> Result<usize, String> {
    let mut text = String::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| format!("cannot read {path}: {e}"))?;
    let value: toml::Value = text.parse().map_err(|e| format!("bad TOML in {path}: {e}"))?;
    let cap = value
        .get("enumeration")
        .and_then(|t| t.get("cap"))
        .or_else(|| value.get("cap"))
        .and_then(|v| v.as_integer());
    match cap {
        Some(c) if c > 0 => Ok(c as usize),
        Some(_) => Err(format!("cap in {path} must be positive")),
        None => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn cmd_enumerate(
    n: usize,
    k: usize,
    connected: bool,
    four_eig: bool,
    second_least_ge: Option<i64>,
    config: Option<&str>,
) -> ExitCode {
    let cap = match config {
        Some(path) => match read_cap_config(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
        },
        None => DEFAULT_ENUMERATION_CAP,
    };
    let spec = EnumSpec::new(n, k).connected(connected).with_cap(cap);
    let graphs = match enumerate_regular(&spec) {
        Ok(gs) => gs,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    for g in graphs {
        if four_eig || second_least_ge.is_some() {
            let s = spectrum(&g).expect("adjacency spectra split over the reals");
            if four_eig && s.distinct_count() != 4 {
                continue;
            }
            if let Some(bound) = second_least_ge {
                let ok = s
                    .second_least_with_multiplicity()
                    .map(|v| v.cmp_integer(bound) != std::cmp::Ordering::Less)
                    .unwrap_or(false);
                if !ok {
                    continue;
                }
            }
        }
        println!("{}", graph6_encode(&g));
    }
    ExitCode::SUCCESS
}

fn cmd_scan(kind: ScanKind) -> ExitCode {
    match kind {
        ScanKind::Noninteger(args) => {
            let kmax = args.kmax.unwrap_or(200);
            let reports = scan_noninteger(2..=kmax);
            for r in &reports {
                if args.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "k": r.k,
                            "infeasible": r.infeasible,
                            "certificate": r.certificate,
                        })
                    );
                } else {
                    println!("k = {}: infeasible — {}", r.k, r.certificate);
                }
            }
            if reports.iter().any(|r| !r.infeasible) {
                eprintln!("counterexample: a feasible irrational candidate survived");
                return ExitCode::from(EXIT_COUNTEREXAMPLE);
            }
            println!("all degrees k ≤ {kmax} infeasible");
            ExitCode::SUCCESS
        }
        ScanKind::Integer(args) => {
            let nmax = args.nmax.unwrap_or(60);
            let outcomes = scan_integer(6..=nmax);
            let feasible: Vec<_> = outcomes
                .iter()
                .filter(|o| o.verdict == ScanVerdict::Feasible)
                .collect();
            if args.json {
                for o in &outcomes {
                    let verdict = match &o.verdict {
                        ScanVerdict::Feasible => "feasible".to_string(),
                        ScanVerdict::Infeasible(why) => why.clone(),
                    };
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": o.n, "k": o.k, "alpha": o.alpha,
                            "beta": o.beta, "m": o.m,
                            "c": o.c.as_ref().map(|c| c.to_string()),
                            "feasible": o.verdict == ScanVerdict::Feasible,
                            "verdict": verdict,
                        })
                    );
                }
            }
            println!(
                "{} (n, k, α) triples scanned for even n ≤ {nmax}: {} feasible triples",
                outcomes.len(),
                feasible.len()
            );
            if !feasible.is_empty() {
                for o in feasible {
                    eprintln!(
                        "counterexample candidate: n = {}, k = {}, α = {}",
                        o.n, o.k, o.alpha
                    );
                }
                return ExitCode::from(EXIT_COUNTEREXAMPLE);
            }
            ExitCode::SUCCESS
        }
    }
}

fn parse_theorem_id(id: &str) -> Option<TheoremId> {
    match id {
        "thm3.1" => Some(TheoremId::NoThreeSimple),
        "thm3.6" => Some(TheoremId::SecondLeastFamilies),
        "thm3.9" => Some(TheoremId::MinusOneFamilies),
        "thm3.10" => Some(TheoremId::ZeroFamilies),
        "lem2.2" => Some(TheoremId::WalkRegularity),
        _ => None,
    }
}

fn cmd_verify(id: &str, nmax: usize, json: bool) -> ExitCode {
    let Some(theorem) = parse_theorem_id(id) else {
        eprintln!("error: unknown statement id '{id}' (thm3.1 | thm3.6 | thm3.9 | thm3.10 | lem2.2)");
        return ExitCode::from(EXIT_INPUT);
    };
    let report = match verify_theorem(theorem, nmax) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
    } else {
        println!("checking {id} over {}", report.description);
        let total: usize = report.census.iter().map(|c| c.count).sum();
        println!("corpus: {total} connected regular graphs");
        for m in &report.members {
            match &m.family {
                Some(f) => println!("member {} — {f:?}", m.graph6),
                None => println!("member {} — unrecognized", m.graph6),
            }
        }
        println!("counterexamples: {}", report.counterexamples.len());
    }
    if report.verified() {
        ExitCode::SUCCESS
    } else {
        for c in &report.counterexamples {
            eprintln!("counterexample: {c}");
        }
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    }
}
