//! Command-line front end for the dihedral reconstruction-algebra toolkit.
//!
//! One subcommand per construction stage — expansions, series, quiver,
//! relations, verification, invariants, charts — plus a `sweep` that runs
//! every check over all coprime parameter pairs up to a bound. Exit codes:
//! `0` success, `1` a verification failed, `2` usage or parameter errors
//! (including the out-of-scope range `n >= 2q`).
//!
//! `--format machine` emits line-delimited, tab-separated records behind a
//! versioned header; ordering is deterministic, so output is byte-stable.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use recon_d::{
    build_charts, build_dual_graph, build_quiver, builtin_glue_maps, check_against_cycle,
    check_generating_invariants, check_series_identities, classify, compute_series, dual_expand,
    enumerate_group, invariant_family, jh_expand, relations, stability_data, verify_glue,
    verify_relations, Chart, DualExpansion, Error, GroupParams, InvariantPolys, JhExpansion,
    Presentation, Quiver, SeriesTable,
};

const MACHINE_HEADER: &str = "#recon-d/1";

#[derive(Parser)]
#[command(
    name = "recon-d",
    version,
    about = "Exact toolkit for dihedral reconstruction algebras (n < 2q)",
    after_help = "Sweep parallelism follows rayon's RAYON_NUM_THREADS variable."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PresentationArg {
    Moduli,
    Symmetric,
}

impl From<PresentationArg> for Presentation {
    fn from(value: PresentationArg) -> Self {
        match value {
            PresentationArg::Moduli => Presentation::Moduli,
            PresentationArg::Symmetric => Presentation::Symmetric,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Continued-fraction expansion, dual expansion, and case split
    Expand {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The integer series attached to the expansions
    Series {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Vertices, arrows, and extra-arrow tables of the quiver
    Quiver {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The defining relations in the chosen presentation
    Relations {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "moduli")]
        presentation: PresentationArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check that every relation annihilates the matrix representatives
    Verify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "moduli")]
        presentation: PresentationArg,
    },
    /// Group order and invariance of both generator families
    Invariants {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Moduli charts and glue maps for the built-in examples
    Charts {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// Run every check for all coprime pairs with q < n <= max-n
    Sweep {
        #[arg(long = "max-n")]
        max_n: u64,
    },
}

/// Everything derived from one parameter pair.
struct Instance {
    params: GroupParams,
    jh: JhExpansion,
    dual: DualExpansion,
    series: SeriesTable,
}

impl Instance {
    fn new(n: u64, q: u64) -> Result<Self, Error> {
        let params = classify(n, q)?;
        if let recon_d::CaseTag::OutOfScope = params.case {
            return Err(Error::OutOfScope { n, q });
        }
        let jh = jh_expand(n, q)?;
        let dual = dual_expand(n, q)?;
        let series = compute_series(&params, &jh, &dual)?;
        Ok(Instance {
            params,
            jh,
            dual,
            series,
        })
    }

    fn quiver(&self) -> Result<Quiver, Error> {
        build_quiver(&self.params, &self.jh, &self.series)
    }

    fn invariant_polys(&self) -> InvariantPolys {
        InvariantPolys::new(self.params.q, self.dual.a(2))
    }
}

fn main() {
    // Die silently on a closed pipe (`recon-d series ... | head`), as
    // line-oriented tools do, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::NotCoprime { .. }
                | Error::ParameterRange { .. }
                | Error::OutOfScope { .. }
                | Error::UnsupportedChartParams { .. } => 2,
                _ => 1,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Expand { n, q, format } => expand_cmd(n, q, format),
        Command::Series { n, q, format } => series_cmd(n, q, format),
        Command::Quiver { n, q, format } => quiver_cmd(n, q, format),
        Command::Relations {
            n,
            q,
            presentation,
            format,
        } => relations_cmd(n, q, presentation.into(), format),
        Command::Verify { n, q, presentation } => verify_cmd(n, q, presentation.into()),
        Command::Invariants { n, q, format } => invariants_cmd(n, q, format),
        Command::Charts { n, q } => charts_cmd(n, q),
        Command::Sweep { max_n } => sweep_cmd(max_n),
    }
}

fn machine_header(cmd: &str, n: u64, q: u64) {
    println!("{MACHINE_HEADER}\tcmd={cmd}\tn={n}\tq={q}");
}

fn bracket(values: impl IntoIterator<Item = u64>) -> String {
    let inner: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn expand_cmd(n: u64, q: u64, format: Format) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let alpha = bracket(inst.jh.alphas.iter().copied());
    let dual = bracket(inst.dual.entries.iter().copied());
    match format {
        Format::Text => {
            println!("D({n}, {q})");
            println!("{n}/{q} = {alpha}");
            println!("{n}/{} = {dual}", n - q);
            println!(
                "{} with nu = {}, m = n - q = {}",
                inst.params.case, inst.params.nu, inst.params.m
            );
        }
        Format::Machine => {
            machine_header("expand", n, q);
            println!("alpha\t{alpha}");
            println!("dual\t{dual}");
            println!(
                "case\t{}",
                match inst.params.case {
                    recon_d::CaseTag::A => "A",
                    recon_d::CaseTag::B => "B",
                    recon_d::CaseTag::OutOfScope => "out-of-scope",
                }
            );
            println!("nu\t{}", inst.params.nu);
            println!("m\t{}", inst.params.m);
        }
    }
    Ok(0)
}

fn joined(values: impl IntoIterator<Item = i64>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn series_cmd(n: u64, q: u64, format: Format) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let t = &inst.series;
    let e = t.e();
    let big_n = t.chain_len();
    let js: Vec<usize> = (2..=e).collect();
    let top_b = (t.l(big_n) - 1) as usize;
    match format {
        Format::Text => {
            println!("D({n}, {q}): e = {e}, N = {big_n}");
            println!("j   = {}", joined(js.iter().map(|&j| j as i64)));
            println!("c_j = {}", joined(js.iter().map(|&j| t.c(j))));
            println!("d_j = {}", joined(js.iter().map(|&j| t.d(j))));
            println!("r_j = {}", joined(js.iter().map(|&j| t.r(j))));
            println!(
                "i_t (t = 0..{}) = {}",
                big_n + 1,
                joined((0..=big_n + 1).map(|s| t.i(s)))
            );
            println!(
                "l_t (t = 1..{big_n}) = {}",
                joined((1..=big_n).map(|s| t.l(s)))
            );
            println!(
                "b_t (t = 0..{top_b}) = {}",
                joined((0..=top_b).map(|s| t.b(s)))
            );
            println!(
                "Delta_k (k = {}..{}) = {}",
                inst.params.nu + 1,
                big_n + 1,
                joined((inst.params.nu + 1..=big_n + 1).map(|s| t.delta(s)))
            );
            println!(
                "Gamma_k (k = {}..{}) = {}",
                inst.params.nu + 1,
                big_n + 1,
                joined((inst.params.nu + 1..=big_n + 1).map(|s| t.gamma(s)))
            );
        }
        Format::Machine => {
            machine_header("series", n, q);
            println!("e\t{e}");
            println!("N\t{big_n}");
            println!("c\t{}", joined(js.iter().map(|&j| t.c(j))));
            println!("d\t{}", joined(js.iter().map(|&j| t.d(j))));
            println!("r\t{}", joined(js.iter().map(|&j| t.r(j))));
            println!("i\t{}", joined((0..=big_n + 1).map(|s| t.i(s))));
            println!("l\t{}", joined((1..=big_n).map(|s| t.l(s))));
            println!("b\t{}", joined((0..=top_b).map(|s| t.b(s))));
            println!(
                "delta\t{}",
                joined((inst.params.nu + 1..=big_n + 1).map(|s| t.delta(s)))
            );
            println!(
                "gamma\t{}",
                joined((inst.params.nu + 1..=big_n + 1).map(|s| t.gamma(s)))
            );
        }
    }
    Ok(0)
}

fn quiver_cmd(n: u64, q: u64, format: Format) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let quiver = inst.quiver()?;
    match format {
        Format::Text => print!("{quiver}"),
        Format::Machine => {
            machine_header("quiver", n, q);
            for v in quiver.vertices() {
                println!("vertex\t{}\t{}", v.tag, v.rank);
            }
            for a in quiver.arrows() {
                println!("arrow\t{}\t{}\t{}", a.name, a.source, a.target);
            }
        }
    }
    Ok(0)
}

fn relations_cmd(n: u64, q: u64, presentation: Presentation, format: Format) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let quiver = inst.quiver()?;
    let rels = relations(&quiver, presentation)?;
    match format {
        Format::Text => {
            println!(
                "D({n}, {q}), {presentation} presentation: {} relations",
                rels.len()
            );
            for rel in &rels {
                println!("{rel}");
            }
        }
        Format::Machine => {
            machine_header("relations", n, q);
            println!("presentation\t{presentation}");
            println!("count\t{}", rels.len());
            for rel in &rels {
                println!("relation\t{}\t{}\t{}", rel.label, rel.source, rel.target);
                for (coeff, word) in &rel.terms {
                    println!("term\t{coeff}\t{}", word.arrows.join("*"));
                }
            }
        }
    }
    Ok(0)
}

fn verify_cmd(n: u64, q: u64, presentation: Presentation) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let quiver = inst.quiver()?;
    let total = relations(&quiver, presentation)?.len();
    let inv = inst.invariant_polys();
    let violations = verify_relations(&quiver, &inst.series, &inv, presentation)?;
    for violation in &violations {
        println!("FAIL {violation}");
    }
    println!("{}/{total} relations verified", total - violations.len());
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn invariants_cmd(n: u64, q: u64, format: Format) -> Result<i32, Error> {
    let inst = Instance::new(n, q)?;
    let inv = inst.invariant_polys();
    let group = enumerate_group(&inst.params)?;
    let report = check_generating_invariants(&inst.params, &inst.series, &inv)?;
    match format {
        Format::Text => {
            println!(
                "D({n}, {q}): group order {} (expected 4(n-q)q = {})",
                report.order, report.expected_order
            );
            for presentation in [Presentation::Moduli, Presentation::Symmetric] {
                println!("{presentation} family:");
                for (name, poly) in invariant_family(&inst.params, &inst.series, &inv, presentation)
                {
                    println!("  {name} = {poly}");
                }
            }
            if report.violations.is_empty() {
                println!("all generators invariant under all {} elements", report.order);
            } else {
                for v in &report.violations {
                    println!("FAIL {v}");
                }
            }
        }
        Format::Machine => {
            machine_header("invariants", n, q);
            println!("order\t{}", report.order);
            println!("expected_order\t{}", report.expected_order);
            println!("ambient\t{}", group.ambient);
            for presentation in [Presentation::Moduli, Presentation::Symmetric] {
                for (name, poly) in invariant_family(&inst.params, &inst.series, &inv, presentation)
                {
                    println!("invariant\t{presentation}\t{name}\t{poly}");
                }
            }
            println!("violations\t{}", report.violations.len());
        }
    }
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

fn charts_cmd(n: u64, q: u64) -> Result<i32, Error> {
    let charts = build_charts(n, q)?;
    let inst = Instance::new(n, q)?;
    let quiver = inst.quiver()?;
    let stab = stability_data(&quiver);
    let dims: Vec<String> = stab
        .dims
        .iter()
        .map(|(v, d)| format!("{v}:{d}"))
        .collect();
    let weights: Vec<String> = stab
        .theta
        .iter()
        .map(|(v, w)| format!("{v}:{w}"))
        .collect();
    println!("D({n}, {q}) moduli charts");
    println!("dimension vector {}", dims.join(" "));
    println!("stability weight {} (pairing 0)", weights.join(" "));
    for chart in &charts {
        println!("chart {}", chart.name);
        println!("  coordinates {}", chart.variables.join(", "));
        for eq in &chart.equations {
            println!("  equation {eq} = 0");
        }
        for (var, expr) in &chart.bindings {
            println!("  bound {var} = {expr}");
        }
    }
    let by_name: std::collections::BTreeMap<&str, &Chart> =
        charts.iter().map(|c| (c.name.as_str(), c)).collect();
    let mut failures = 0;
    for map in builtin_glue_maps(n, q)? {
        match verify_glue(by_name[map.from.as_str()], by_name[map.to.as_str()], &map) {
            Ok(unit) => println!("glue {} -> {}: verified, unit {unit}", map.from, map.to),
            Err(err) => {
                failures += 1;
                println!("glue {} -> {}: FAILED ({err})", map.from, map.to);
            }
        }
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

/// All coprime pairs with `q < n < 2q` and `n <= max_n`, smallest first.
fn scope_pairs(max_n: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for n in 3..=max_n {
        for q in (n / 2 + 1)..n {
            if num_integer::gcd(n, q) == 1 {
                pairs.push((n, q));
            }
        }
    }
    pairs
}

/// Every check the modules export, for one pair; returns violations.
fn sweep_pair(n: u64, q: u64) -> Vec<String> {
    let mut violations = Vec::new();
    let inst = match Instance::new(n, q) {
        Ok(inst) => inst,
        Err(err) => return vec![format!("setup: {err}")],
    };
    violations.extend(check_series_identities(&inst.params, &inst.series));

    let quiver = match inst.quiver() {
        Ok(quiver) => quiver,
        Err(err) => return vec![format!("quiver: {err}")],
    };
    let graph = build_dual_graph(&inst.jh);
    match recon_d::fundamental_cycle(&graph) {
        Ok(cycle) => violations.extend(check_against_cycle(&quiver, &graph, &cycle)),
        Err(err) => violations.push(format!("fundamental cycle: {err}")),
    }

    let inv = inst.invariant_polys();
    for presentation in [Presentation::Moduli, Presentation::Symmetric] {
        match verify_relations(&quiver, &inst.series, &inv, presentation) {
            Ok(list) => violations.extend(
                list.into_iter()
                    .map(|v| format!("{presentation}: {v}")),
            ),
            Err(err) => violations.push(format!("{presentation}: {err}")),
        }
    }

    match check_generating_invariants(&inst.params, &inst.series, &inv) {
        Ok(report) => violations.extend(report.violations),
        Err(err) => violations.push(format!("group: {err}")),
    }
    violations
}

fn sweep_cmd(max_n: u64) -> Result<i32, Error> {
    if max_n < 3 {
        eprintln!("error: the sweep bound must be at least 3, got {max_n}");
        return Ok(2);
    }
    let pairs = scope_pairs(max_n);
    let mut results: Vec<(u64, u64, Vec<String>)> = pairs
        .into_par_iter()
        .map(|(n, q)| {
            let violations = sweep_pair(n, q);
            (n, q, violations)
        })
        .collect();
    results.sort();
    let mut failed = 0usize;
    for (n, q, violations) in &results {
        if violations.is_empty() {
            println!("D({n}, {q}): ok");
        } else {
            failed += 1;
            for v in violations {
                println!("D({n}, {q}): FAIL {v}");
            }
        }
    }
    println!(
        "swept {} pairs up to n = {max_n}: {failed} failing",
        results.len()
    );
    Ok(if failed == 0 { 0 } else { 1 })
}
