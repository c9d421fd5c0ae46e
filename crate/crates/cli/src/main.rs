use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use steenrod_core::chain::{Chain, Graded, Tensor};
use steenrod_core::corpus;
use steenrod_core::exec::Exec;
use steenrod_core::format::{load_table, save_table, ComplexDocument, LoadedSpace, DEFAULT_TRUNCATION};
use steenrod_core::homology::{cohomology, homology};
use steenrod_core::ring::{format_scalar, Ring};
use steenrod_core::simplex::Simplex;
use steenrod_core::simplicial::{core, is_degeneracy_free, CellId};
use steenrod_core::steenrod::cup::CupContext;
use steenrod_core::steenrod::DiagonalTable;
use steenrod_core::suite::{diag_of_cell, diag_of_vertices, run_suite, SuiteConfig, CHECKS};

#[derive(Parser, Debug)]
#[command(name = "steenrod-kit", version, about = "Chain-level Steenrod diagonals on simplicial sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Space document (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Shipped corpus entry, instead of --input.
    #[arg(long, global = true, conflicts_with = "input")]
    corpus: Option<String>,
    /// Coefficients: z, q, or fP for a prime P.
    #[arg(long, global = true, default_value = "z")]
    ring: String,
    /// Truncation dimension; defaults to the document's.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    /// Directory holding the persisted diagonal table.
    #[arg(long, global = true, env = "STEENROD_CACHE")]
    cache: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print ξ(e_n ⊗ σ).
    Diag {
        #[arg(long)]
        n: usize,
        /// Comma-separated weakly increasing vertex list in a standard simplex.
        #[arg(long, conflicts_with = "cell")]
        simplex: Option<String>,
        /// Cell of the input space, as DIM:INDEX.
        #[arg(long)]
        cell: Option<String>,
    },
    /// Print the matrices of Sq^i on mod-2 cohomology.
    Sq {
        /// Only this square.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Print homology groups per degree.
    Homology,
    /// Print cell counts, degeneracy-freeness and core size.
    Info,
    /// Run the verification suite.
    Verify {
        /// Run only these checks (repeatable).
        #[arg(long)]
        only: Vec<String>,
        /// Largest standard simplex in the diagonal sweeps.
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        /// Largest bar level in the diagonal sweeps.
        #[arg(long, default_value_t = 4)]
        max_level: usize,
        /// Include slow corpus entries.
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// List the check names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// An error in the user's input rather than a failed check.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl Common {
    fn ring(&self) -> anyhow::Result<Ring> {
        Ok(self.ring.parse::<Ring>()?)
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn space(&self) -> anyhow::Result<LoadedSpace> {
        let doc = match (&self.input, &self.corpus) {
            (Some(path), _) => ComplexDocument::load(path).with_context(|| format!("reading {}", path.display()))?,
            (None, Some(name)) => corpus::document(name)?,
            (None, None) => bail!("this command needs --input FILE or --corpus NAME"),
        };
        Ok(doc.build(self.truncation)?)
    }

    fn table(&self) -> anyhow::Result<DiagonalTable> {
        match &self.cache {
            Some(dir) => load_table(dir).with_context(|| format!("reading the cache in {}", dir.display())),
            None => Ok(DiagonalTable::new()),
        }
    }

    fn save(&self, table: &DiagonalTable) -> anyhow::Result<()> {
        if let Some(dir) = &self.cache {
            save_table(table, dir).with_context(|| format!("writing the cache in {}", dir.display()))?;
        }
        Ok(())
    }

    fn emit(&self, text: String, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
        } else {
            print!("{text}");
        }
    }
}

fn run(cli: &Cli) -> Result<bool, InputError> {
    let c = &cli.common;
    match &cli.command {
        Command::Diag { n, simplex, cell } => diag(c, *n, simplex.as_deref(), cell.as_deref())?,
        Command::Sq { i } => sq(c, *i)?,
        Command::Homology => homology_cmd(c)?,
        Command::Info => info(c)?,
        Command::Verify { only, max_k, max_level, slow, seed, list } => {
            if *list {
                for (name, about, _) in CHECKS {
                    println!("{name:<24} {about}");
                }
                return Ok(true);
            }
            return verify(c, only, *max_k, *max_level, *slow, *seed);
        }
    }
    Ok(true)
}

fn terms_json<B: Ord + Clone + Graded>(chain: &Chain<Tensor<B, B>>, show: impl Fn(&B) -> Value) -> Value {
    Value::Array(chain.iter().map(|(Tensor(a, b), x)| json!({ "left": show(a), "right": show(b), "coefficient": format_scalar(x) })).collect())
}

fn parse_simplex(text: &str) -> anyhow::Result<Simplex> {
    let v = text
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| anyhow!("`{p}` is not a vertex")))
        .collect::<anyhow::Result<Vec<u32>>>()?;
    if v.is_empty() {
        bail!("empty vertex list");
    }
    Ok(Simplex(v))
}

fn parse_cell(text: &str) -> anyhow::Result<CellId> {
    let (d, i) = text.split_once(':').ok_or_else(|| anyhow!("cells are written DIM:INDEX, got `{text}`"))?;
    Ok(CellId::new(d.trim().parse()?, i.trim().parse()?))
}

fn diag(c: &Common, n: usize, simplex: Option<&str>, cell: Option<&str>) -> anyhow::Result<()> {
    let ring = c.ring()?;
    let table = c.table()?;
    match (simplex, cell) {
        (Some(text), _) => {
            let s = parse_simplex(text)?;
            let truncation = c.truncation.unwrap_or(DEFAULT_TRUNCATION);
            if s.0.len() - 1 > truncation {
                bail!("{s} has dimension {} above the truncation {truncation}", s.0.len() - 1);
            }
            let d = diag_of_vertices(n, &s, &table)?.change_ring(ring);
            c.emit(format!("{d}\n"), json!({ "n": n, "simplex": s.0, "ring": ring.to_string(), "terms": terms_json(&d, |x| json!(x.0)) }));
        }
        (None, Some(text)) => {
            let space = c.space()?;
            let id = parse_cell(text)?;
            let d = diag_of_cell(n, &space.set, id, &table)?.change_ring(ring);
            let show = |x: &CellId| json!(x.to_string());
            c.emit(format!("{d}\n"), json!({ "n": n, "cell": id.to_string(), "ring": ring.to_string(), "terms": terms_json(&d, show) }));
        }
        (None, None) => bail!("give --simplex or --cell"),
    }
    c.save(&table)
}

fn matrix_text(columns: &[Vec<steenrod_core::ring::Scalar>], rows: usize) -> String {
    let lines: Vec<String> = (0..rows).map(|r| columns.iter().map(|col| format_scalar(&col[r])).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", lines.join("; "))
}

fn sq(c: &Common, only: Option<usize>) -> anyhow::Result<()> {
    let ring = c.ring()?;
    if ring != Ring::PrimeField(2) {
        bail!("Steenrod squares need --ring f2, got {ring}");
    }
    let space = c.space()?;
    let x = &space.set;
    let table = c.table()?;
    let complex = x.normalized_chains(ring);
    let ctx = CupContext { space: x, complex: &complex, table: &table, exec: c.exec() };
    let mut text = String::new();
    let mut entries = Vec::new();
    let top = x.truncation().saturating_sub(1);
    for p in 0..=top {
        let squares: Vec<usize> = match only {
            Some(i) => vec![i],
            None => (0..=p).collect(),
        };
        for i in squares {
            if p + i > top || cohomology(&complex, p)?.dimension() == 0 || cohomology(&complex, p + i)?.dimension() == 0 {
                continue;
            }
            let m = ctx.sq_matrix(i, p)?;
            text += &format!("Sq^{i}: H^{p} -> H^{} {}\n", p + i, matrix_text(&m.columns, m.rows));
            let columns: Vec<Vec<String>> = m.columns.iter().map(|col| col.iter().map(format_scalar).collect()).collect();
            entries.push(json!({ "i": i, "p": p, "rows": m.rows, "columns": columns }));
        }
    }
    c.emit(text, json!({ "space": space.name, "squares": entries }));
    c.save(&table)
}

fn homology_cmd(c: &Common) -> anyhow::Result<()> {
    let ring = c.ring()?;
    let space = c.space()?;
    let complex = space.set.normalized_chains(ring);
    let mut text = String::new();
    let mut groups = Vec::new();
    for n in (0..space.set.truncation()).take_while(|&n| complex.knows_degree(n + 1)) {
        let h = homology(&complex, n)?;
        text += &format!("H_{n} = {h}\n");
        let torsion: Vec<String> = h.torsion().iter().map(format_scalar).collect();
        groups.push(json!({ "degree": n, "free_rank": h.free_rank(), "torsion": torsion, "display": h.to_string() }));
    }
    c.emit(text, json!({ "space": space.name, "ring": ring.to_string(), "homology": groups }));
    Ok(())
}

fn info(c: &Common) -> anyhow::Result<()> {
    let space = c.space()?;
    let x = &space.set;
    let free = is_degeneracy_free(x);
    let core_counts = core(x).complex.counts();
    let text = format!(
        "name: {}\ntruncation: {}\ncells: {:?}\nnondegenerate: {:?}\ndegeneracy-free: {free}\ncore: {:?} ({} cells)\n",
        space.name,
        x.truncation(),
        x.counts(),
        x.nondegenerate_counts(),
        core_counts,
        core_counts.iter().sum::<usize>(),
    );
    let value = json!({
        "name": space.name,
        "truncation": x.truncation(),
        "cells": x.counts(),
        "nondegenerate": x.nondegenerate_counts(),
        "degeneracy_free": free,
        "core": core_counts,
        "basepoint": x.basepoint(),
    });
    c.emit(text, value);
    Ok(())
}

fn verify(c: &Common, only: &[String], max_k: usize, max_level: usize, slow: bool, seed: u64) -> Result<bool, InputError> {
    if c.input.is_some() || c.corpus.is_some() {
        c.space()?;
    }
    let table = c.table()?;
    let config = SuiteConfig { only: (!only.is_empty()).then(|| only.to_vec()), max_k, max_level, exec: c.exec(), slow, seed };
    let report = run_suite(&config, &table)?;
    let mut text = String::new();
    for r in &report.results {
        text += &format!("{} {:<24} {} ({} ms)\n", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail, r.millis);
        if let Some(ce) = &r.counterexample {
            text += &format!("     counterexample: {ce}\n");
        }
    }
    c.emit(text, serde_json::to_value(&report)?);
    c.save(&table)?;
    Ok(report.all_passed())
}
