//! Field generating sets: the divisor set `{n : n | S}` of a Steinitz number.
//!
//! An FG-set is never materialized. Membership, orders and the finite and
//! infinite parts are all read off the exponent map of `S`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::primes;
use crate::supernat::{Exponent, SupernaturalNumber, Universe};

/// A count that may be `ℵ₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExtendedCount {
    Finite(u64),
    CountablyInfinite,
}

impl ExtendedCount {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(n) => Some(n),
            ExtendedCount::CountablyInfinite => None,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(n) => write!(f, "{n}"),
            ExtendedCount::CountablyInfinite => f.write_str("countably infinite"),
        }
    }
}

/// A set of primes that is either listed or cofinite (all primes of the
/// universe except the listed ones).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PrimeSet {
    Explicit(BTreeSet<u64>),
    AllExcept(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Explicit(s) => s.contains(&p),
            PrimeSet::AllExcept(s) => primes::is_prime(p) && !s.contains(&p),
        }
    }

    pub fn count(&self) -> ExtendedCount {
        match self {
            PrimeSet::Explicit(s) => ExtendedCount::Finite(s.len() as u64),
            PrimeSet::AllExcept(_) => ExtendedCount::CountablyInfinite,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Explicit(s) if s.is_empty())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Explicit(s) => write!(f, "{{{}}}", list(s)),
            PrimeSet::AllExcept(s) if s.is_empty() => f.write_str("all primes"),
            PrimeSet::AllExcept(s) => write!(f, "all primes except {{{}}}", list(s)),
        }
    }
}

/// `T_f` and `T_∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parts {
    pub finite: PrimeSet,
    pub infinite: PrimeSet,
}

impl Parts {
    pub fn finite_count(&self) -> ExtendedCount {
        self.finite.count()
    }

    pub fn infinite_count(&self) -> ExtendedCount {
        self.infinite.count()
    }
}

/// Which FG-set axiom an explicit set breaks, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    ZeroMember,
    MissingOne,
    NotDivisorClosed { member: u64, divisor: u64 },
    NotLcmClosed { a: u64, b: u64, lcm: u64 },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::ZeroMember => f.write_str("0 is not a natural number >= 1"),
            AxiomViolation::MissingOne => f.write_str("1 is not a member"),
            AxiomViolation::NotDivisorClosed { member, divisor } => {
                write!(f, "{divisor} divides {member} but is not a member")
            }
            AxiomViolation::NotLcmClosed { a, b, lcm } => {
                write!(f, "lcm({a},{b}) = {lcm} is not a member")
            }
        }
    }
}

/// Checks `1 ∈ S`, divisor closure and lcm closure of an explicit finite set.
pub fn verify_axioms(set: &BTreeSet<u64>) -> std::result::Result<(), AxiomViolation> {
    if set.contains(&0) {
        return Err(AxiomViolation::ZeroMember);
    }
    if !set.contains(&1) {
        return Err(AxiomViolation::MissingOne);
    }
    for &n in set {
        if let Some(d) = divisors(n).into_iter().find(|d| !set.contains(d)) {
            return Err(AxiomViolation::NotDivisorClosed { member: n, divisor: d });
        }
    }
    for &a in set {
        for &b in set.range(a..) {
            let l = a / gcd(a, b) * b;
            if !set.contains(&l) {
                return Err(AxiomViolation::NotLcmClosed { a, b, lcm: l });
            }
        }
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in primes::factorize(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// The FG-set `{n ∈ ℕ : n | S}` of a Steinitz number `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgSet {
    steinitz: SupernaturalNumber,
}

impl From<SupernaturalNumber> for FgSet {
    fn from(steinitz: SupernaturalNumber) -> Self {
        FgSet { steinitz }
    }
}

impl fmt::Display for FgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FG({})", self.steinitz)
    }
}

impl FgSet {
    pub fn steinitz(&self) -> &SupernaturalNumber {
        &self.steinitz
    }

    pub fn into_steinitz(self) -> SupernaturalNumber {
        self.steinitz
    }

    pub fn member(&self, n: u64) -> Result<bool> {
        if n == 0 {
            return Err(Error::ZeroNatural);
        }
        let universe = self.steinitz.universe();
        Ok(primes::factorize(n)
            .into_iter()
            .all(|(p, k)| universe.contains(p) && Exponent::Finite(k as u64) <= self.steinitz.exponent(p)))
    }

    /// `o_T(t)`: the largest `n` with `t^n ∈ T`.
    pub fn order(&self, t: u64) -> Result<Exponent> {
        if t < 2 {
            return Err(Error::OrderArgument(t));
        }
        let order = primes::factorize(t)
            .into_iter()
            .map(|(p, k)| match self.steinitz.exponent(p) {
                Exponent::Infinite => Exponent::Infinite,
                Exponent::Finite(e) => Exponent::Finite(e / k as u64),
            })
            .min()
            .expect("t >= 2 has a prime factor");
        Ok(order)
    }

    fn primes_where(&self, pred: impl Fn(Exponent) -> bool) -> PrimeSet {
        let s = &self.steinitz;
        if pred(s.default_exponent()) {
            PrimeSet::AllExcept(s.exceptions().iter().filter(|(_, e)| !pred(**e)).map(|(p, _)| *p).collect())
        } else {
            PrimeSet::Explicit(s.exceptions().iter().filter(|(_, e)| pred(**e)).map(|(p, _)| *p).collect())
        }
    }

    /// `T_f`: primes of finite nonzero order; `T_∞`: primes of infinite order.
    pub fn parts(&self) -> Parts {
        Parts {
            finite: self.primes_where(Exponent::is_finite_positive),
            infinite: self.primes_where(|e| e == Exponent::Infinite),
        }
    }

    pub fn finite_part_count(&self) -> ExtendedCount {
        self.primes_where(Exponent::is_finite_positive).count()
    }

    /// Lowers the order of `q ∈ T_f` by one. `None` when `q ∉ T_f`.
    pub fn decrement(&self, q: u64) -> Option<FgSet> {
        match self.steinitz.exponent(q) {
            Exponent::Finite(k) if k > 0 => self
                .steinitz
                .with_exponent(q, Exponent::Finite(k - 1))
                .ok()
                .map(FgSet::from),
            _ => None,
        }
    }

    /// One maximal FG-subset per prime of `T_f`, or a lazy family when `T_f`
    /// is infinite.
    pub fn maximal_fg_subsets(&self) -> MaximalSubsets {
        match self.parts().finite {
            PrimeSet::Explicit(qs) => MaximalSubsets::Finite(
                qs.into_iter()
                    .map(|q| self.decrement(q).expect("q in T_f"))
                    .collect(),
            ),
            PrimeSet::AllExcept(_) => MaximalSubsets::Infinite(InfiniteFamily { top: self.clone() }),
        }
    }

    /// `self` is a maximal FG-subset of `sup`: they differ at exactly one prime
    /// `q` of finite positive order in `sup`, where the order drops by one.
    pub fn is_maximal_fg_subset_of(&self, sup: &FgSet) -> Result<bool> {
        let (listed, rest, _) = self
            .steinitz
            .where_pointwise(&sup.steinitz, |a, b| a != b)?;
        if rest || listed.len() != 1 {
            return Ok(false);
        }
        let q = listed[0];
        Ok(match (self.steinitz.exponent(q), sup.steinitz.exponent(q)) {
            (Exponent::Finite(a), Exponent::Finite(b)) => b > 0 && a + 1 == b,
            _ => false,
        })
    }

    pub fn is_subset_of(&self, sup: &FgSet) -> Result<bool> {
        self.steinitz.divides(&sup.steinitz)
    }
}

pub enum MaximalSubsets {
    Finite(Vec<FgSet>),
    Infinite(InfiniteFamily),
}

/// The maximal FG-subsets of an FG-set with infinite finite part, produced on
/// demand.
#[derive(Debug, Clone)]
pub struct InfiniteFamily {
    top: FgSet,
}

impl InfiniteFamily {
    pub fn top(&self) -> &FgSet {
        &self.top
    }

    /// The subset obtained by decrementing at `q`, if `q ∈ T_f`.
    pub fn subset_at(&self, q: u64) -> Option<FgSet> {
        self.top.decrement(q)
    }

    /// Primes of `T_f` in ascending order; never ends.
    pub fn finite_part_primes(&self) -> impl Iterator<Item = u64> + '_ {
        let s = self.top.steinitz();
        let universe = s.universe().clone();
        primes::primes()
            .filter(move |&p| universe.contains(p))
            .filter(move |&p| s.exponent(p).is_finite_positive())
    }
}

/// Shorthand used in tests and examples: the FG-set of a descriptor string.
pub fn fg(desc: &str) -> Result<FgSet> {
    desc.parse::<SupernaturalNumber>().map(FgSet::from)
}

/// All FG-sets inside a finite universe with finite exponents up to
/// `max_exp`, in lexicographic exponent order.
pub fn enumerate_window(universe: &BTreeSet<u64>, max_exp: u64) -> Vec<FgSet> {
    let ps: Vec<u64> = universe.iter().copied().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; ps.len()];
    loop {
        let map = ps
            .iter()
            .zip(&exps)
            .map(|(&p, &e)| (p, Exponent::Finite(e)))
            .collect();
        let s = SupernaturalNumber::new(map, Exponent::ZERO, Universe::Finite(universe.clone()))
            .expect("universe primes");
        out.push(FgSet::from(s));
        let mut i = 0;
        loop {
            if i == exps.len() {
                return out;
            }
            if exps[i] < max_exp {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
