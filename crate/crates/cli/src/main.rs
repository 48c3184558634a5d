//! `treeconvex`: recognize tree convex set collections and benchmark the
//! recognizers.
//!
//! Exit status of `check` and `oracle`: 0 convex, 1 not convex, 2 error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treeconvex::bench::{self, BenchInstance, BenchRecord};
use treeconvex::format::{format_witness, parse_cats, parse_collection, write_collection};
use treeconvex::gen::{derive_seed, random_collection, GenConfig};
use treeconvex::{
    brute_force_witness, is_tree_convex, spanning_tree_verdict, Error, SetCollection,
    TreeConvexVerdict,
};

#[derive(Parser)]
#[command(
    name = "treeconvex",
    version,
    about = "Tree convexity recognition for set collections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the sets in a file are tree convex.
    Check(CheckArgs),
    /// Decide by trying every tree on the universe (at most 9 elements).
    Oracle(OracleArgs),
    /// Write random instances in the native format.
    Gen(GenArgs),
    /// Time both recognizers and write one CSV row per instance.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Acyclic,
    Spanning,
    Both,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// CATS when the extension is `.cats` or the file opens with a
    /// `goods`/`bids`/`dummy` header, native otherwise.
    Auto,
    Native,
    Cats,
}

#[derive(Args)]
struct WitnessArgs {
    /// Print the witness edge list when convex.
    #[arg(long)]
    witness: bool,
    /// Join witness components into a single spanning tree.
    #[arg(long)]
    tree: bool,
    /// Write the witness here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "acyclic")]
    algorithm: Algorithm,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    #[command(flatten)]
    witness: WitnessArgs,
}

#[derive(Args)]
struct OracleArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    #[command(flatten)]
    witness: WitnessArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r1: usize,
    #[arg(long)]
    r2: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of instances; instance `i` is seeded from (`seed`, `i`).
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Output file for one instance, directory for several; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance configuration `m,n,r1,r2`; repeat for several batches.
    #[arg(long = "config", value_parser = parse_config)]
    configs: Vec<(usize, usize, usize, usize)>,
    /// The three large configurations ⟨100,100,2,10⟩, ⟨300,300,2,30⟩, ⟨500,500,2,50⟩.
    #[arg(long)]
    table1: bool,
    /// Vary `m` or `r2` of the single `--config` over `--values`.
    #[arg(long, requires = "values")]
    vary: Option<String>,
    #[arg(long, value_delimiter = ',')]
    values: Vec<usize>,
    /// Benchmark every instance file in this directory instead.
    #[arg(long, conflicts_with_all = ["configs", "table1", "vary"])]
    dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    /// Instances generated per configuration.
    #[arg(long, default_value_t = 10)]
    repetitions: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Time instances one at a time on a single thread.
    #[arg(long)]
    serial_timing: bool,
}

fn parse_config(s: &str) -> Result<(usize, usize, usize, usize), String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [m, n, r1, r2] => Ok((m, n, r1, r2)),
        _ => Err(format!("expected m,n,r1,r2, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => check(&args.path, args.algorithm, args.format, &args.witness),
        Command::Oracle(args) => check(&args.path, Algorithm::Oracle, args.format, &args.witness),
        Command::Gen(args) => gen(&args).map(|_| ExitCode::SUCCESS),
        Command::Bench(args) => bench_cmd(&args).map(|_| ExitCode::SUCCESS),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn looks_like_cats(path: &Path, text: &str) -> bool {
    if path.extension().is_some_and(|e| e == "cats") {
        return true;
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('%') && !l.starts_with('#'));
    let Some(first) = first else { return false };
    let mut tokens = first.split_whitespace();
    matches!(tokens.next(), Some("goods" | "bids" | "dummy"))
        && tokens.next().is_some_and(|t| t.parse::<usize>().is_ok())
        && tokens.next().is_none()
}

fn load(path: &Path, format: InputFormat) -> Result<SetCollection, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    let cats = match format {
        InputFormat::Native => false,
        InputFormat::Cats => true,
        InputFormat::Auto => looks_like_cats(path, &text),
    };
    if cats {
        let inst = parse_cats(&text)?;
        for w in &inst.warnings {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok(inst.collection)
    } else {
        parse_collection(&text)
    }
}

fn check(
    path: &Path,
    algorithm: Algorithm,
    format: InputFormat,
    opts: &WitnessArgs,
) -> Result<ExitCode, Error> {
    let s = load(path, format)?;
    let mut verdict = match algorithm {
        Algorithm::Acyclic => is_tree_convex(&s, opts.tree),
        Algorithm::Spanning => spanning_tree_verdict(&s),
        Algorithm::Both => {
            let fast = is_tree_convex(&s, opts.tree);
            let slow = spanning_tree_verdict(&s);
            if fast.convex != slow.convex {
                return Err(Error::VerdictMismatch {
                    id: path.display().to_string(),
                    acyclic: fast.convex,
                    spanning: slow.convex,
                });
            }
            fast
        }
        Algorithm::Oracle => match brute_force_witness(&s)? {
            Some(t) => TreeConvexVerdict::convex(t),
            None => TreeConvexVerdict::not_convex(),
        },
    };
    if opts.tree {
        verdict.witness = verdict.witness.map(|w| w.into_tree());
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if !verdict.convex {
        writeln!(out, "not tree convex")?;
        return Ok(ExitCode::from(1));
    }
    writeln!(out, "tree convex")?;
    if opts.witness {
        let w = verdict
            .witness
            .as_ref()
            .expect("convex verdicts carry a witness");
        let text = format_witness(w, s.symbols());
        match &opts.out {
            Some(p) => fs::write(p, text)?,
            None => out.write_all(text.as_bytes())?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(args: &GenArgs) -> Result<(), Error> {
    let base = GenConfig::new(args.m, args.n, args.r1, args.r2, args.seed)?;
    for i in 0..args.count {
        let c = base.with_seed(derive_seed(args.seed, 0, i));
        let text = write_collection(&random_collection(&c)?)?;
        match &args.out {
            None => io::stdout().write_all(text.as_bytes())?,
            Some(p) if args.count == 1 => fs::write(p, text)?,
            Some(dir) => {
                fs::create_dir_all(dir)?;
                fs::write(dir.join(format!("inst-{i:04}.txt")), text)?;
            }
        }
    }
    Ok(())
}

const TABLE1: [(usize, usize, usize, usize); 3] =
    [(100, 100, 2, 10), (300, 300, 2, 30), (500, 500, 2, 50)];

fn bench_instances(args: &BenchArgs) -> Result<Vec<BenchInstance>, Error> {
    if let Some(dir) = &args.dir {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
            .map(|e| e.map(|e| e.path()))
            .collect::<Result<_, _>>()?;
        paths.retain(|p| p.is_file());
        paths.sort();
        return paths
            .iter()
            .map(|p| {
                let name = p
                    .file_name()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned();
                load(p, args.format).map(|s| BenchInstance::from_file(name, s))
            })
            .collect();
    }

    let mut configs: Vec<GenConfig> = Vec::new();
    if args.table1 {
        for (m, n, r1, r2) in TABLE1 {
            configs.push(GenConfig::new(m, n, r1, r2, args.seed)?);
        }
    }
    let explicit = args
        .configs
        .iter()
        .map(|&(m, n, r1, r2)| GenConfig::new(m, n, r1, r2, args.seed))
        .collect::<Result<Vec<_>, _>>()?;
    match &args.vary {
        Some(param) => {
            let [base] = explicit[..] else {
                return Err(Error::BadConfig("--vary needs exactly one --config".into()));
            };
            let param: treeconvex::gen::SweepParam = param.parse()?;
            for &v in &args.values {
                let c = match param {
                    treeconvex::gen::SweepParam::M => GenConfig { m: v, ..base },
                    treeconvex::gen::SweepParam::R2 => GenConfig { r2: v, ..base },
                };
                c.validate()?;
                configs.push(c);
            }
        }
        None => configs.extend(explicit),
    }
    if configs.is_empty() {
        return Err(Error::BadConfig("give --config, --table1 or --dir".into()));
    }

    let mut out = Vec::new();
    for (batch, c) in configs.iter().enumerate() {
        for i in 0..args.repetitions {
            let c = c.with_seed(derive_seed(args.seed, batch, i));
            let id = format!("{batch}-{i}");
            out.push(BenchInstance::generated(id, &c, random_collection(&c)?));
        }
    }
    Ok(out)
}

fn bench_cmd(args: &BenchArgs) -> Result<(), Error> {
    let instances = bench_instances(args)?;
    let records = bench::run(&instances, args.serial_timing)?;
    match &args.out {
        Some(p) => {
            bench::write_csv(&records, fs::File::create(p)?)?;
            print_summary(&records, &mut io::stdout().lock())?;
        }
        None => {
            bench::write_csv(&records, io::stdout().lock())?;
            print_summary(&records, &mut io::stderr().lock())?;
        }
    }
    Ok(())
}

fn print_summary(records: &[BenchRecord], out: &mut dyn Write) -> io::Result<()> {
    for b in bench::summarize(records) {
        writeln!(
            out,
            "<{},{},{},{}> x{}: convex {}/{}, acyclic {:.6}s, spanning {:.6}s, speedup {:.1}x, ops {:.0} vs {:.0}",
            b.m,
            b.n,
            b.r1,
            b.r2,
            b.instances,
            b.convex,
            b.instances,
            b.mean_acyclic_s,
            b.mean_spanning_s,
            b.speedup(),
            b.mean_acyclic_ops,
            b.mean_spanning_ops,
        )?;
    }
    Ok(())
}
