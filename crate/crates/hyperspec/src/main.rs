use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hyperspec::oracle::oracle_enum;
use hyperspec::script::{apply_step, parse_script};
use hyperspec::{to_csv, verify_bicyclic, verify_unicyclic, OrderingReport};
use hyperspec_core::certificate::{bound_from_certificate, build_certificate, check, dump, Bound, DEFAULT_CERT_TOL};
use hyperspec_core::hypergraph::{parse_hg, write_hg};
use hyperspec_core::multigraph::{parse_mg, write_mg};
use hyperspec_core::tensor::{spectral_radius, spectral_radius_default, DEFAULT_MAX_ITER, DEFAULT_TOL};
use hyperspec_core::{CertificateTag, FamilySpec, Generated};
use rayon::prelude::*;

/// Spectral radii of uniform hypergraphs and checks of their extremal orderings.
#[derive(Parser)]
#[command(name = "hyperspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of the hypergraph in a `.hg` file.
    Radius {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Also print the Perron vector.
        #[arg(long)]
        perron: bool,
    },
    /// Writes a family member, e.g. `U2:k=3,a=6,b=0` or `Gab:m=8,a=4,b=2`.
    Family {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Ranks a candidate pool and checks the ordering claims.
    Verify {
        #[command(subcommand)]
        which: VerifyKind,
    },
    /// Builds and checks one of the explicit weighted incidence certificates.
    Certify {
        /// U31-subnormal, B31-normal, B31-subnormal, B33-subnormal or B4-subnormal.
        tag: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Pendent edges at `u` for U31-subnormal (0 or 1).
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Compares the polynomial radius rho(G)^(2/k) with the solver on G^k.
    PowerCheck {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive structural checks on all small connected k-graphs.
    OracleEnum {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Applies an edge-move script to a `.hg` file.
    Moves {
        file: PathBuf,
        script: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    Unicyclic(GridArgs),
    Bicyclic(GridArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Comma-separated uniformities.
    #[arg(long, value_delimiter = ',', default_values_t = [3, 4])]
    k: Vec<usize>,
    /// Edge counts as `A..B` (inclusive) or a single number.
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    let hi: usize = hi.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    if lo > hi {
        bail!("empty range `{s}`");
    }
    Ok((lo..=hi).collect())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(which: VerifyKind) -> Result<()> {
    let (cyclicity, grid) = match which {
        VerifyKind::Unicyclic(g) => (1, g),
        VerifyKind::Bicyclic(g) => (2, g),
    };
    let default_m = if cyclicity == 1 { "8..14" } else { "5..12" };
    let ms = parse_range(grid.m.as_deref().unwrap_or(default_m))?;
    let mut jobs = Vec::new();
    for &k in &grid.k {
        for &m in &ms {
            jobs.push((k, m));
        }
    }
    let reports: Vec<OrderingReport> = jobs
        .par_iter()
        .map(|&(k, m)| {
            if cyclicity == 1 {
                verify_unicyclic(k, m)
            } else {
                verify_bicyclic(k, m)
            }
        })
        .collect::<Result<_, _>>()?;
    if let Some(first) = reports.first() {
        println!("scope: {}", first.scope);
    }
    for r in &reports {
        print!("{}", r.summary());
    }
    if let Some(path) = &grid.json {
        write_out(Some(path), &serde_json::to_string_pretty(&reports)?)?;
    }
    if let Some(path) = &grid.csv {
        write_out(Some(path), &to_csv(&reports))?;
    }
    let violated: usize = reports.iter().map(|r| r.violations().count()).sum();
    if violated > 0 {
        bail!("{violated} claim(s) violated");
    }
    Ok(())
}

fn cmd_certify(tag: &str, m: usize, k: usize, a: usize, json: Option<PathBuf>) -> Result<()> {
    let tag = tag.parse::<CertificateTag>()?.with_a(a);
    let built = build_certificate(tag, m, k)?;
    let cert = check(&built.hypergraph, &built.weights, built.alpha, DEFAULT_CERT_TOL)?;
    let rho = spectral_radius_default(&built.hypergraph)?.rho;
    println!("certificate {tag} for {} (k={k}, m={m})", built.spec.notation());
    println!("alpha      {:.15}", built.alpha);
    println!("ratio A    {:.15}", built.ratio);
    println!("verdict    {}", cert.verdict);
    println!("consistent {}", cert.consistent);
    let excess: Vec<String> = cert
        .edge_excess
        .iter()
        .enumerate()
        .filter(|(_, x)| x.abs() > cert.tol)
        .map(|(e, x)| format!("e{e}: {x:.3e}"))
        .collect();
    println!("edge excess beyond tol: [{}]", excess.join(", "));
    if let Some(path) = json {
        let d = dump(&built.spec.to_string(), &built.hypergraph, &built.weights, &cert);
        write_out(Some(&path), &serde_json::to_string_pretty(&d)?)?;
    }
    if cert.verdict != tag.expected_verdict() {
        bail!("verdict {} differs from the expected {}", cert.verdict, tag.expected_verdict());
    }
    let bound = bound_from_certificate(&cert, k)?;
    match bound {
        Bound::Exact(v) => {
            println!("bound      rho = {v:.12}");
            println!("solver     rho = {rho:.12} (difference {:.3e})", rho - v);
            if (rho - v).abs() > 1e-6 {
                bail!("solver disagrees with the exact value");
            }
        }
        Bound::StrictUpper(v) => {
            println!("bound      rho < {v:.12}");
            println!("solver     rho = {rho:.12} (margin {:.3e})", v - rho);
            if rho >= v {
                bail!("solver radius does not respect the strict bound");
            }
        }
    }
    Ok(())
}

fn cmd_power_check(file: &Path, k: usize) -> Result<()> {
    let g = parse_mg(&read(file)?)?;
    let poly = g.spectral_radius()?.powf(2.0 / k as f64);
    let solver = spectral_radius_default(&g.kth_power(k)?)?.rho;
    let diff = (poly - solver).abs();
    println!("k={k} polynomial {poly:.12} tensor {solver:.12} difference {diff:.3e}");
    if diff > 1e-6 {
        bail!("power relation off by {diff:e}");
    }
    Ok(())
}

fn cmd_moves(file: &Path, script: &Path, output: Option<PathBuf>) -> Result<()> {
    let mut h = parse_hg(&read(file)?)?;
    let steps = parse_script(&read(script)?)?;
    let mut rho = spectral_radius_default(&h)?.rho;
    println!("start  rho = {rho:.12}");
    for (i, step) in steps.iter().enumerate() {
        let moved = apply_step(&h, step)?;
        h = moved.hypergraph;
        let note = if moved.identity { " (identity)" } else { "" };
        if h.is_connected() {
            let next = spectral_radius_default(&h)?.rho;
            println!("step {} {step:?}: rho = {next:.12} ({:+.3e}){note}", i + 1, next - rho);
            rho = next;
        } else {
            println!("step {} {step:?}: disconnected{note}", i + 1);
        }
    }
    if let Some(path) = output {
        write_out(Some(&path), &write_hg(&h))?;
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Radius {
            file,
            tol,
            max_iter,
            perron,
        } => {
            let h = parse_hg(&read(&file)?)?;
            let est = spectral_radius(&h, tol, max_iter)?;
            println!("rho        {:.15}", est.rho);
            println!("bracket    [{:.15}, {:.15}]", est.lower_bound, est.upper_bound);
            println!("iterations {}", est.iterations);
            println!("residual   {:.3e}", est.residual);
            if perron {
                let x: Vec<String> = est.perron.iter().map(|v| format!("{v:.12}")).collect();
                println!("perron     {}", x.join(" "));
            }
            Ok(())
        }
        Command::Family { spec, output } => {
            let spec: FamilySpec = spec.parse()?;
            let text = match spec.generate()? {
                Generated::Hyper(h) => write_hg(&h),
                Generated::Graph(g) => write_mg(&g),
            };
            write_out(output.as_deref(), &text)
        }
        Command::Verify { which } => cmd_verify(which),
        Command::Certify { tag, m, k, a, json } => cmd_certify(&tag, m, k, a, json),
        Command::PowerCheck { file, k } => cmd_power_check(&file, k),
        Command::OracleEnum { k, m, json } => {
            let table = oracle_enum(k, m)?;
            print!("{}", table.render());
            if let Some(path) = json {
                write_out(Some(&path), &serde_json::to_string_pretty(&table)?)?;
            }
            if !table.counterexamples.is_empty() {
                bail!("{} counterexample(s)", table.counterexamples.len());
            }
            Ok(())
        }
        Command::Moves {
            file,
            script,
            output,
        } => cmd_moves(&file, &script, output),
    }
}
