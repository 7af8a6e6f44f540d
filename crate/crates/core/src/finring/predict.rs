//! Predicted maximal subrings for the three constructed families, built as
//! explicit element sets and compared against the enumerated lattice.

use std::fmt;

use super::{enumerate_subrings, make_dual, make_gf, make_product, maximal_subrings, ElementSet, FiniteRing, RingBounds};
use crate::error::{Error, Result};
use crate::primes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `F_{p^n}`
    Gf { p: u64, n: u32 },
    /// `F_{p^n}[x]/(x²)`
    Dual { p: u64, n: u32 },
    /// `F_{p^n} × F_{p^n}`
    Product { p: u64, n: u32 },
}

impl Family {
    pub fn p(self) -> u64 {
        match self {
            Family::Gf { p, .. } | Family::Dual { p, .. } | Family::Product { p, .. } => p,
        }
    }

    pub fn n(self) -> u32 {
        match self {
            Family::Gf { n, .. } | Family::Dual { n, .. } | Family::Product { n, .. } => n,
        }
    }

    /// The count the classification gives: `ω(n)`, `1 + ω(n)` or `2ω(n) + n`.
    pub fn formula_count(self) -> usize {
        let n = self.n();
        let omega = primes::prime_divisors(n as u64).len();
        match self {
            Family::Gf { .. } => omega,
            Family::Dual { .. } => 1 + omega,
            Family::Product { .. } => 2 * omega + n as usize,
        }
    }

    pub fn build(self, bounds: RingBounds) -> Result<FiniteRing> {
        let k = make_gf(self.p(), self.n(), bounds_for_field(bounds, self))?;
        match self {
            Family::Gf { .. } => Ok(k),
            Family::Dual { .. } => make_dual(&k, bounds),
            Family::Product { .. } => make_product(&k, &k, bounds),
        }
    }
}

/// The coefficient field only has to respect the bound on the final ring.
fn bounds_for_field(bounds: RingBounds, family: Family) -> RingBounds {
    match family {
        Family::Gf { .. } => bounds,
        _ => RingBounds {
            max_size: RingBounds::HARD_MAX_SIZE,
            ..bounds
        },
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gf { p, n } => write!(f, "gf({p},{n})"),
            Family::Dual { p, n } => write!(f, "dual({p},{n})"),
            Family::Product { p, n } => write!(f, "product({p},{n})"),
        }
    }
}

fn characteristic(ring: &FiniteRing) -> u64 {
    let mut x = ring.one();
    let mut m = 1;
    while x != ring.zero() {
        x = ring.add(x, ring.one());
        m += 1;
    }
    m
}

/// `{x : x^{p^e} = x}` where `p` is the characteristic of `k`.
pub fn frobenius_fixed_set(k: &FiniteRing, e: u32) -> ElementSet {
    let p = characteristic(k);
    let frob = |x: usize| (0..e).fold(x, |y, _| k.pow(y, p));
    ElementSet::from_indices(k.size(), (0..k.size()).filter(|&x| frob(x) == x))
}

fn predicted_sets(family: Family, k: &FiniteRing) -> Vec<ElementSet> {
    let n = family.n();
    let m = k.size();
    let fixed: Vec<ElementSet> = primes::prime_divisors(n as u64)
        .into_iter()
        .map(|q| frobenius_fixed_set(k, n / q as u32))
        .collect();
    let pairs = |f: &dyn Fn(usize, usize) -> bool| {
        ElementSet::from_indices(m * m, (0..m * m).filter(|&x| f(x / m, x % m)))
    };
    match family {
        Family::Gf { .. } => fixed,
        Family::Dual { .. } => {
            let mut out = vec![pairs(&|_, b| b == k.zero())];
            out.extend(fixed.iter().map(|s| pairs(&|a, _| s.contains(a))));
            out
        }
        Family::Product { .. } => {
            let mut out = Vec::new();
            for s in &fixed {
                out.push(pairs(&|a, _| s.contains(a)));
                out.push(pairs(&|_, b| s.contains(b)));
            }
            let p = characteristic(k);
            for i in 0..n {
                let sigma = |x: usize| (0..i).fold(x, |y, _| k.pow(y, p));
                out.push(pairs(&|a, b| sigma(a) == b));
            }
            out
        }
    }
}

fn canonical(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.sort_by_cached_key(|a| (a.len(), a.to_vec()));
    sets.dedup();
    sets
}

/// Predicted against enumerated maximal subrings of one family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub family: Family,
    pub ring_size: usize,
    /// Canonically ordered; duplicates removed.
    pub predicted: Vec<ElementSet>,
    pub observed: Vec<ElementSet>,
    /// Element labels of each observed maximal subring.
    pub observed_labels: Vec<Vec<String>>,
    pub lattice_size: usize,
}

impl Comparison {
    pub fn predicted_count(&self) -> usize {
        self.predicted.len()
    }

    pub fn observed_count(&self) -> usize {
        self.observed.len()
    }

    pub fn sets_equal(&self) -> bool {
        self.predicted == self.observed
    }

    /// Sets agree and their number is the one the classification gives.
    pub fn is_match(&self) -> bool {
        self.sets_equal() && self.observed_count() == self.family.formula_count()
    }
}

pub fn predict_and_compare(family: Family, bounds: RingBounds) -> Result<Comparison> {
    if !primes::is_prime(family.p()) {
        return Err(Error::NotPrime(family.p()));
    }
    let ring = family.build(bounds)?;
    let k = make_gf(family.p(), family.n(), bounds_for_field(bounds, family))?;
    let lattice = enumerate_subrings(&ring, bounds)?;
    let observed = canonical(maximal_subrings(&lattice));
    Ok(Comparison {
        family,
        ring_size: ring.size(),
        predicted: canonical(predicted_sets(family, &k)),
        observed_labels: observed.iter().map(|s| ring.set_labels(s)).collect(),
        observed,
        lattice_size: lattice.len(),
    })
}
