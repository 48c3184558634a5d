//! Comparison harness for the two recognizers.
//!
//! Every instance is run through both pipelines once with an operation
//! counter (deterministic), then [`TIMING_RUNS`] times under a monotonic
//! wall clock with counting compiled out; the fastest run is reported.
//! Disagreeing verdicts abort the run.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gen::GenConfig;
use crate::meter::OpCount;
use crate::model::SetCollection;
use crate::recognize::{is_tree_convex, is_tree_convex_metered};
use crate::spanning::{spanning_tree_verdict, spanning_tree_verdict_with, MstTies};

pub const TIMING_RUNS: usize = 3;

pub const CSV_HEADER: [&str; 10] = [
    "id",
    "m",
    "n",
    "r1",
    "r2",
    "verdict",
    "acyclic_s",
    "spanning_s",
    "acyclic_ops",
    "spanning_ops",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub id: String,
    pub m: usize,
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub verdict: bool,
    pub acyclic_s: f64,
    pub spanning_s: f64,
    pub acyclic_ops: u64,
    pub spanning_ops: u64,
}

/// A collection plus the parameters reported alongside it.
#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub id: String,
    pub m: usize,
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub collection: SetCollection,
}

impl BenchInstance {
    pub fn generated(id: String, c: &GenConfig, collection: SetCollection) -> Self {
        BenchInstance {
            id,
            m: c.m,
            n: c.n,
            r1: c.r1,
            r2: c.r2,
            collection,
        }
    }

    /// For instances read from files: `n = |U(S)|` and `r1`/`r2` are the
    /// smallest and largest set sizes.
    pub fn from_file(id: String, collection: SetCollection) -> Self {
        let sizes = collection.sets().iter().map(Vec::len);
        BenchInstance {
            id,
            m: collection.len(),
            n: collection.universe_size(),
            r1: sizes.clone().min().unwrap_or(0),
            r2: sizes.max().unwrap_or(0),
            collection,
        }
    }
}

pub fn measure(inst: &BenchInstance) -> Result<BenchRecord> {
    let s = &inst.collection;

    let mut acyclic_ops = OpCount::default();
    let acyclic = is_tree_convex_metered(s, false, &mut acyclic_ops).convex;
    let mut spanning_ops = OpCount::default();
    let spanning = spanning_tree_verdict_with(s, MstTies::Lexicographic, &mut spanning_ops).convex;
    if acyclic != spanning {
        return Err(Error::VerdictMismatch {
            id: inst.id.clone(),
            acyclic,
            spanning,
        });
    }

    let acyclic_s = fastest(|| is_tree_convex(s, false).convex);
    let spanning_s = fastest(|| spanning_tree_verdict(s).convex);

    Ok(BenchRecord {
        id: inst.id.clone(),
        m: inst.m,
        n: inst.n,
        r1: inst.r1,
        r2: inst.r2,
        verdict: acyclic,
        acyclic_s,
        spanning_s,
        acyclic_ops: acyclic_ops.0,
        spanning_ops: spanning_ops.0,
    })
}

fn fastest(mut f: impl FnMut() -> bool) -> f64 {
    (0..TIMING_RUNS)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed().as_secs_f64()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Measures every instance; records come back in instance order. With
/// `serial` the instances run one at a time on the calling thread.
pub fn run(instances: &[BenchInstance], serial: bool) -> Result<Vec<BenchRecord>> {
    if serial {
        instances.iter().map(measure).collect()
    } else {
        instances.par_iter().map(measure).collect()
    }
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchSummary {
    pub m: usize,
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub instances: usize,
    pub convex: usize,
    pub mean_acyclic_s: f64,
    pub mean_spanning_s: f64,
    pub mean_acyclic_ops: f64,
    pub mean_spanning_ops: f64,
}

impl BatchSummary {
    /// Spanning-tree time over acyclicity time.
    pub fn speedup(&self) -> f64 {
        self.mean_spanning_s / self.mean_acyclic_s
    }
}

/// Groups consecutive records with equal `(m, n, r1, r2)`.
pub fn summarize(records: &[BenchRecord]) -> Vec<BatchSummary> {
    let mut out: Vec<BatchSummary> = Vec::new();
    for group in records.chunk_by(|a, b| (a.m, a.n, a.r1, a.r2) == (b.m, b.n, b.r1, b.r2)) {
        let k = group.len() as f64;
        let mean = |f: fn(&BenchRecord) -> f64| group.iter().map(f).sum::<f64>() / k;
        out.push(BatchSummary {
            m: group[0].m,
            n: group[0].n,
            r1: group[0].r1,
            r2: group[0].r2,
            instances: group.len(),
            convex: group.iter().filter(|r| r.verdict).count(),
            mean_acyclic_s: mean(|r| r.acyclic_s),
            mean_spanning_s: mean(|r| r.spanning_s),
            mean_acyclic_ops: mean(|r| r.acyclic_ops as f64),
            mean_spanning_ops: mean(|r| r.spanning_ops as f64),
        });
    }
    out
}
