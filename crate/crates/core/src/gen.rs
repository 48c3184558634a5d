//! Random instances for the `⟨m, n, r1, r2⟩` experimental model.
//!
//! All randomness comes from `ChaCha8Rng` (from `rand_chacha`), whose output
//! is fixed for a given seed across platforms and crate versions. Set sizes
//! are uniform on `[r1, r2]` and elements are drawn uniformly without
//! replacement from `1..=n`; elements are labelled by their number.

use rand::seq::index::sample;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::SetCollection;

/// Instances generated per configuration in a sweep.
pub const INSTANCES_PER_CONFIG: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenConfig {
    pub m: usize,
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(m: usize, n: usize, r1: usize, r2: usize, seed: u64) -> Result<Self> {
        let c = GenConfig { m, n, r1, r2, seed };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::BadConfig("m must be at least 1".into()));
        }
        if !(1 <= self.r1 && self.r1 <= self.r2 && self.r2 <= self.n) {
            return Err(Error::BadConfig(format!(
                "need 1 <= r1 <= r2 <= n, got r1={} r2={} n={}",
                self.r1, self.r2, self.n
            )));
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenConfig { seed, ..self }
    }
}

pub fn random_collection(c: &GenConfig) -> Result<SetCollection> {
    c.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let sets = (0..c.m).map(|_| {
        let size = rng.random_range(c.r1..=c.r2);
        sample(&mut rng, c.n, size)
            .into_iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
    });
    // Collect first: interning must not borrow the generator lazily.
    let sets: Vec<Vec<String>> = sets.collect();
    SetCollection::intern(sets)
}

/// Seed of instance `index` in batch `batch` of a run seeded with `base`:
/// the first output of `base`'s generator on stream `(batch, index)`.
pub fn derive_seed(base: u64, batch: usize, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(((batch as u64) << 32) | index as u64);
    rng.next_u64()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    M,
    R2,
}

impl std::str::FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(SweepParam::M),
            "r2" => Ok(SweepParam::R2),
            other => Err(Error::BadConfig(format!(
                "can only vary m or r2, not {other:?}"
            ))),
        }
    }
}

/// One batch of `per_config` instances per value of the varied parameter.
/// Every config is validated before anything is generated.
pub fn scaling_sweep(
    base: GenConfig,
    vary: SweepParam,
    values: &[usize],
    per_config: usize,
) -> Result<impl Iterator<Item = (GenConfig, SetCollection)>> {
    let configs: Vec<GenConfig> = values
        .iter()
        .map(|&v| {
            let c = match vary {
                SweepParam::M => GenConfig { m: v, ..base },
                SweepParam::R2 => GenConfig { r2: v, ..base },
            };
            c.validate().map(|_| c)
        })
        .collect::<Result<_>>()?;
    Ok(configs.into_iter().enumerate().flat_map(move |(batch, c)| {
        (0..per_config).map(move |i| {
            let c = c.with_seed(derive_seed(base.seed, batch, i));
            let s = random_collection(&c).expect("config validated above");
            (c, s)
        })
    }))
}

/// `m` random integer intervals `[lo, hi]` within `0..n`, labelled by
/// their integer value. Such collections always have the consecutive-ones
/// property.
pub fn random_intervals(m: usize, n: usize, seed: u64) -> Result<SetCollection> {
    if m < 1 || n < 1 {
        return Err(Error::BadConfig("need m >= 1 and n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets: Vec<Vec<String>> = (0..m)
        .map(|_| {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            (a.min(b)..=a.max(b)).map(|v| v.to_string()).collect()
        })
        .collect();
    SetCollection::intern(sets)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn respects_bounds() {
        let c = GenConfig::new(100, 100, 2, 10, 1).unwrap();
        let s = random_collection(&c).unwrap();
        assert_eq!(s.len(), 100);
        for set in s.labelled_sets() {
            assert!((2..=10).contains(&set.len()));
            for l in set {
                let v: usize = l.parse().unwrap();
                assert!((1..=100).contains(&v));
            }
        }
    }

    #[test]
    fn full_universe_single_set() {
        let s = random_collection(&GenConfig::new(1, 7, 7, 7, 3).unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.universe_size(), 7);
    }

    #[test]
    fn same_seed_same_collection() {
        let c = GenConfig::new(50, 40, 1, 9, 42).unwrap();
        assert_eq!(
            random_collection(&c).unwrap(),
            random_collection(&c).unwrap()
        );
    }

    #[test]
    fn distinct_seeds_distinct_collections() {
        let mut seen = HashSet::new();
        for seed in 0..1000 {
            let c = GenConfig::new(100, 100, 2, 10, seed).unwrap();
            assert!(seen.insert(
                random_collection(&c)
                    .unwrap()
                    .labelled_sets()
                    .concat()
                    .join(" ")
            ));
        }
    }

    #[test]
    fn bad_configs() {
        assert!(GenConfig::new(0, 5, 1, 2, 0).is_err());
        assert!(GenConfig::new(1, 5, 0, 2, 0).is_err());
        assert!(GenConfig::new(1, 5, 3, 2, 0).is_err());
        assert!(GenConfig::new(1, 5, 2, 6, 0).is_err());
        let bad = GenConfig {
            m: 3,
            n: 4,
            r1: 2,
            r2: 9,
            seed: 0,
        };
        assert!(matches!(random_collection(&bad), Err(Error::BadConfig(_))));
    }

    #[test]
    fn sweep_batches() {
        let base = GenConfig::new(10, 100, 2, 30, 5).unwrap();
        let values: Vec<usize> = (10..=200).step_by(10).collect();
        let all: Vec<_> = scaling_sweep(base, SweepParam::M, &values, 2)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 20 * 2);
        let batches: HashSet<usize> = all.iter().map(|(c, _)| c.m).collect();
        assert_eq!(batches.len(), 20);
        assert!(all.iter().all(|(c, s)| s.len() == c.m));

        let base = GenConfig::new(50, 100, 2, 20, 5).unwrap();
        let values: Vec<usize> = (20..=90).step_by(10).collect();
        let n = scaling_sweep(base, SweepParam::R2, &values, 1)
            .unwrap()
            .count();
        assert_eq!(n, 8);

        assert_eq!(
            scaling_sweep(base, SweepParam::M, &[], 100)
                .unwrap()
                .count(),
            0
        );
        assert!(scaling_sweep(base, SweepParam::R2, &[1], 1).is_err());
        assert!("n".parse::<SweepParam>().is_err());
    }

    #[test]
    fn sweep_is_deterministic() {
        let base = GenConfig::new(20, 30, 2, 5, 9).unwrap();
        let a: Vec<_> = scaling_sweep(base, SweepParam::M, &[5, 10], 3)
            .unwrap()
            .collect();
        let b: Vec<_> = scaling_sweep(base, SweepParam::M, &[5, 10], 3)
            .unwrap()
            .collect();
        assert_eq!(a, b);
        assert_ne!(a[0].0.seed, a[1].0.seed);
    }
}
