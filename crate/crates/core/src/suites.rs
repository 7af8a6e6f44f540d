//! Verification suites: every prediction made from Steinitz numbers, checked
//! against the brute-force ring oracle or an independent recount.
//!
//! Each instance ends as a match, a mismatch, or skipped because a resource
//! bound was hit. Skips never abort the suite.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::finring::{
    enumerate_subrings, make_gf, predict_and_compare, saturated_chains, Family, RingBounds,
};
use crate::primes;
use crate::supernat::{Exponent, SupernaturalNumber, Universe};

pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Gf,
    Dual,
    Product,
    Chains,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Gf, Suite::Dual, Suite::Product, Suite::Chains];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Gf => "gf",
            Suite::Dual => "dual",
            Suite::Product => "product",
            Suite::Chains => "chains",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub bounds: RingBounds,
    /// Random descriptors drawn by the chains suite.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            bounds: RingBounds::default(),
            samples: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Outcome {
    Match,
    Mismatch { reason: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub name: String,
    pub predicted: String,
    pub observed: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Instance {
    fn compare(name: String, predicted: String, observed: String, extra: Option<String>) -> Self {
        let outcome = match extra {
            None if predicted == observed => Outcome::Match,
            None => Outcome::Mismatch { reason: "predicted and observed differ".into() },
            Some(reason) => Outcome::Mismatch { reason },
        };
        Instance { name, predicted, observed, outcome }
    }

    fn skipped(name: String, err: &Error) -> Self {
        Instance {
            name,
            predicted: String::new(),
            observed: String::new(),
            outcome: Outcome::Skipped { reason: err.to_string() },
        }
    }

    fn from_result(name: String, r: Result<Instance>) -> Self {
        r.unwrap_or_else(|e| Instance::skipped(name, &e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Mismatch,
    BoundExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: Vec<Instance>,
}

impl SuiteReport {
    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.instances.iter().filter(|i| pred(&i.outcome)).count()
    }

    /// A mismatch outranks a skipped instance.
    pub fn status(&self) -> Status {
        if self.count(|o| matches!(o, Outcome::Mismatch { .. })) > 0 {
            Status::Mismatch
        } else if self.count(|o| matches!(o, Outcome::Skipped { .. })) > 0 {
            Status::BoundExceeded
        } else {
            Status::Pass
        }
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let instances = match suite {
        Suite::Gf => gf_suite(config),
        Suite::Dual => family_suite(config, &[2, 3, 4, 5, 8, 9, 16], |p, n| Family::Dual { p, n }),
        Suite::Product => family_suite(config, &[2, 3, 4, 8, 9], |p, n| Family::Product { p, n }),
        Suite::Chains => chains_suite(config),
    };
    SuiteReport { suite, instances }
}

/// `(p, n)` with `p ∈ {2, 3}` and `p^n <= 4096`.
pub fn gf_instances() -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let mut n = 1;
        while p.pow(n) <= 4096 {
            out.push((p, n));
            n += 1;
        }
    }
    out
}

fn divisor_count(n: u64) -> u64 {
    primes::factorize(n).values().map(|&k| k as u64 + 1).product()
}

fn check_family(family: Family, bounds: RingBounds) -> Result<Instance> {
    let c = predict_and_compare(family, bounds)?;
    let predicted = format!("count={}", c.predicted_count());
    let observed = format!("count={}", c.observed_count());
    let extra = if !c.sets_equal() {
        Some("maximal subrings differ as element sets".to_string())
    } else if c.observed_count() != family.formula_count() {
        Some(format!("formula gives {}", family.formula_count()))
    } else {
        None
    };
    Ok(Instance::compare(family.to_string(), predicted, observed, extra))
}

fn gf_suite(config: &SuiteConfig) -> Vec<Instance> {
    gf_instances()
        .into_iter()
        .map(|(p, n)| {
            let family = Family::Gf { p, n };
            Instance::from_result(family.to_string(), gf_instance(p, n, config.bounds))
        })
        .collect()
}

/// Oracle maximal subrings and lattice size against `ω(n)`, `d(n)` and the
/// field-side counts.
fn gf_instance(p: u64, n: u32, bounds: RingBounds) -> Result<Instance> {
    let family = Family::Gf { p, n };
    let c = predict_and_compare(family, bounds)?;
    let field = FieldDescriptor::finite(p, n as u64)?;
    let prime_field = FieldDescriptor::finite(p, 1)?;
    let rgmax = field.rgmax_count();
    let intermediate = field.intermediate_count(&prime_field)?;
    let predicted = format!("count={rgmax}; lattice={intermediate}");
    let observed = format!("count={}; lattice={}", c.observed_count(), c.lattice_size);
    let extra = if !c.sets_equal() {
        Some("maximal subrings are not the Frobenius fixed fields".to_string())
    } else if c.lattice_size as u64 != divisor_count(n as u64) {
        Some(format!("lattice size differs from d({n})"))
    } else {
        None
    };
    Ok(Instance::compare(family.to_string(), predicted, observed, extra))
}

fn family_suite(config: &SuiteConfig, sizes: &[u64], make: fn(u64, u32) -> Family) -> Vec<Instance> {
    sizes
        .iter()
        .map(|&q| {
            let (&p, &n) = primes::factorize(q).iter().next().expect("prime power");
            let family = make(p, n);
            Instance::from_result(family.to_string(), check_family(family, config.bounds))
        })
        .collect()
}

fn chains_suite(config: &SuiteConfig) -> Vec<Instance> {
    let mut out = vec![Instance::from_result(
        "lattice-chains gf(2,12)".into(),
        lattice_chains(2, 12, config.bounds),
    )];
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..config.samples {
        let field = random_chain_field(&mut rng);
        let name = format!("random#{i} {field}");
        out.push(Instance::from_result(name, descriptor_chains(&field)));
    }
    out
}

/// Chains in the oracle lattice of `gf(p, n)` against `chain_stats`.
pub fn lattice_chains(p: u64, n: u32, bounds: RingBounds) -> Result<Instance> {
    let ring = make_gf(p, n, bounds)?;
    let lattice = enumerate_subrings(&ring, bounds)?;
    let chains = saturated_chains(&lattice, &ring);
    let stats = FieldDescriptor::finite(p, n as u64)?.chain_stats(false)?;
    let lengths: Vec<usize> = chains.chains.iter().map(|c| c.len() - 1).collect();
    let observed_len = if chains.uniform == Some(true) {
        lengths[0].to_string()
    } else {
        format!("{lengths:?}")
    };
    Ok(Instance::compare(
        format!("lattice-chains gf({p},{n})"),
        format!("chains={}; length={}", stats.chain_count, stats.length),
        format!("chains={}; length={observed_len}", chains.chains.len()),
        None,
    ))
}

/// Streams every chain of `field`, checking length and terminus, and compares
/// the number seen with the memoized count.
pub fn descriptor_chains(field: &FieldDescriptor) -> Result<Instance> {
    let stats = field.chain_stats(false)?;
    let expected_len: u64 = field
        .content()
        .exceptions()
        .values()
        .filter_map(|e| e.finite())
        .sum();
    let mut bad = None;
    let seen = field.for_each_chain(|chain| {
        let len = chain.len() as u64 - 1;
        if bad.is_none() && (len != expected_len || chain.last() != Some(&stats.terminus)) {
            let end = chain.last().map(ToString::to_string).unwrap_or_default();
            bad = Some(format!("chain of length {len} ending at {end}"));
        }
        Ok(())
    })?;
    Ok(Instance::compare(
        field.to_string(),
        format!("chains={}; length={expected_len}", stats.chain_count),
        format!("chains={seen}; length={}", if bad.is_some() { "varies".into() } else { expected_len.to_string() }),
        bad,
    ))
}

const SMALL_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// A random field with `1..=4` primes of finite exponent in `1..=3`, a few
/// primes of infinite exponent and a default of `0` or `∞`.
pub fn random_chain_field(rng: &mut impl Rng) -> FieldDescriptor {
    let p = *[2u64, 3, 5, 7].choose(rng).expect("nonempty");
    let mut pool = SMALL_PRIMES.to_vec();
    pool.shuffle(rng);
    let finite = rng.gen_range(1..=4);
    let infinite = rng.gen_range(0..=2);
    let mut exceptions = BTreeMap::new();
    for &q in &pool[..finite] {
        exceptions.insert(q, Exponent::Finite(rng.gen_range(1..=3)));
    }
    let default = if rng.gen_bool(0.5) { Exponent::Infinite } else { Exponent::ZERO };
    for &q in &pool[finite..finite + infinite] {
        exceptions.insert(q, if default == Exponent::ZERO { Exponent::Infinite } else { Exponent::ZERO });
    }
    let content = SupernaturalNumber::new(exceptions, default, Universe::AllPrimes).expect("valid primes");
    FieldDescriptor::new(p, content).expect("prime characteristic")
}

/// A random field whose finite part may be infinite: the default exponent is
/// drawn from `0`, `1..=3` or `∞`.
pub fn random_field(rng: &mut impl Rng) -> FieldDescriptor {
    let p = *[2u64, 3, 5, 7].choose(rng).expect("nonempty");
    let draw = |rng: &mut dyn rand::RngCore| match rng.gen_range(0..5) {
        0 => Exponent::ZERO,
        4 => Exponent::Infinite,
        k => Exponent::Finite(k),
    };
    let mut exceptions = BTreeMap::new();
    for &q in &SMALL_PRIMES {
        if rng.gen_bool(0.5) {
            exceptions.insert(q, draw(rng));
        }
    }
    let default = draw(rng);
    let content = SupernaturalNumber::new(exceptions, default, Universe::AllPrimes).expect("valid primes");
    FieldDescriptor::new(p, content).expect("prime characteristic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_instance_list() {
        let list = gf_instances();
        assert_eq!(list.len(), 12 + 7);
        assert!(list.contains(&(2, 12)) && list.contains(&(3, 7)));
    }

    #[test]
    fn random_fields_are_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| random_chain_field(&mut rng).to_string()).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn chain_fields_have_small_finite_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let f = random_chain_field(&mut rng);
            let count = f.rgmax_count().finite().expect("finite");
            assert!((1..=4).contains(&count), "{f}");
        }
    }

    #[test]
    fn small_suites_pass() {
        let config = SuiteConfig { samples: 10, ..SuiteConfig::default() };
        for suite in [Suite::Dual, Suite::Chains] {
            let report = run_suite(suite, &config);
            assert_eq!(report.status(), Status::Pass, "{report:?}");
        }
    }

    #[test]
    fn bounds_skip_instances_without_failing_others() {
        let config = SuiteConfig {
            bounds: RingBounds { max_size: 16, ..RingBounds::default() },
            ..SuiteConfig::default()
        };
        let report = run_suite(Suite::Product, &config);
        assert_eq!(report.status(), Status::BoundExceeded);
        assert_eq!(report.count(|o| *o == Outcome::Match), 3);
    }
}
