//! Supernatural (Steinitz) numbers: formal products `∏ p^e_p` with
//! `e_p ∈ ℕ ∪ {∞}`.
//!
//! A value is stored as a finite map of exceptional exponents over a default
//! exponent that every other prime carries. Divisibility of these numbers is
//! the containment order on subfields of the algebraic closure of `F_p`,
//! `join` is the compositum and `meet` the intersection.
//!
//! The prime universe is either all primes or an explicit finite set. In a
//! finite universe the default is always normalized to 0 and every nonzero
//! exponent is listed, which keeps the representation canonical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::primes;
use crate::syntax;

/// A prime exponent: a natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent::Finite(0);

    pub fn is_zero(self) -> bool {
        self == Exponent::ZERO
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Exponent::Finite(_))
    }

    /// Finite and nonzero: the prime belongs to the finite part of the FG-set.
    pub fn is_finite_positive(self) -> bool {
        matches!(self, Exponent::Finite(k) if k > 0)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Exponent::Finite(k) => Some(k),
            Exponent::Infinite => None,
        }
    }

    /// `self - other` with `∞ - finite = ∞` and `∞ - ∞ = 0`.
    /// Returns `None` when `other > self`.
    pub fn minus(self, other: Exponent) -> Option<Exponent> {
        match (self, other) {
            (Exponent::Infinite, Exponent::Infinite) => Some(Exponent::ZERO),
            (Exponent::Infinite, Exponent::Finite(_)) => Some(Exponent::Infinite),
            (Exponent::Finite(_), Exponent::Infinite) => None,
            (Exponent::Finite(a), Exponent::Finite(b)) => a.checked_sub(b).map(Exponent::Finite),
        }
    }

    /// Finite sum; `None` on overflow. Infinity absorbs.
    pub fn plus(self, other: Exponent) -> Option<Exponent> {
        match (self, other) {
            (Exponent::Finite(a), Exponent::Finite(b)) => a.checked_add(b).map(Exponent::Finite),
            _ => Some(Exponent::Infinite),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(k) => write!(f, "{k}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

/// The set of primes a supernatural number ranges over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Universe {
    AllPrimes,
    Finite(BTreeSet<u64>),
}

impl Universe {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            Universe::AllPrimes => primes::is_prime(p),
            Universe::Finite(set) => set.contains(&p),
        }
    }

    /// Smallest prime of the universe outside `excluded`, if any.
    pub fn smallest_outside(&self, excluded: &BTreeSet<u64>) -> Option<u64> {
        match self {
            Universe::AllPrimes => primes::primes().find(|p| !excluded.contains(p)),
            Universe::Finite(set) => set.iter().copied().find(|p| !excluded.contains(p)),
        }
    }

    /// Whether some prime of the universe lies outside `keys` (assumed a subset).
    fn has_rest(&self, keys: &BTreeSet<u64>) -> bool {
        match self {
            Universe::AllPrimes => true,
            Universe::Finite(set) => set.len() > keys.len(),
        }
    }

    /// The first `k` primes as a finite universe.
    pub fn first_primes(k: usize) -> Universe {
        Universe::Finite(primes::first_primes(k).into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupernaturalNumber {
    exceptions: BTreeMap<u64, Exponent>,
    default: Exponent,
    universe: Universe,
}

impl SupernaturalNumber {
    /// Validates primes against the universe and normalizes.
    pub fn new(
        exceptions: BTreeMap<u64, Exponent>,
        default: Exponent,
        universe: Universe,
    ) -> Result<Self> {
        for &p in exceptions.keys() {
            if !primes::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if !universe.contains(p) {
                return Err(Error::PrimeOutsideUniverse(p));
            }
        }
        Ok(Self::normalized(exceptions, default, universe))
    }

    fn normalized(
        mut exceptions: BTreeMap<u64, Exponent>,
        mut default: Exponent,
        universe: Universe,
    ) -> Self {
        if let Universe::Finite(set) = &universe {
            if !default.is_zero() {
                for &p in set {
                    exceptions.entry(p).or_insert(default);
                }
                default = Exponent::ZERO;
            }
        }
        exceptions.retain(|_, e| *e != default);
        SupernaturalNumber {
            exceptions,
            default,
            universe,
        }
    }

    /// The number 1 over all primes.
    pub fn one() -> Self {
        Self::one_in(Universe::AllPrimes)
    }

    pub fn one_in(universe: Universe) -> Self {
        Self::normalized(BTreeMap::new(), Exponent::ZERO, universe)
    }

    /// `∏ p^∞`, the Steinitz number of the whole algebraic closure.
    pub fn full() -> Self {
        Self::full_in(Universe::AllPrimes)
    }

    pub fn full_in(universe: Universe) -> Self {
        Self::normalized(BTreeMap::new(), Exponent::Infinite, universe)
    }

    pub fn from_natural(n: u64) -> Result<Self> {
        Self::from_natural_in(n, Universe::AllPrimes)
    }

    pub fn from_natural_in(n: u64, universe: Universe) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroNatural);
        }
        let exceptions = primes::factorize(n)
            .into_iter()
            .map(|(p, k)| (p, Exponent::Finite(k as u64)))
            .collect();
        Self::new(exceptions, Exponent::ZERO, universe)
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, Exponent> {
        &self.exceptions
    }

    pub fn default_exponent(&self) -> Exponent {
        self.default
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Exponent at prime `p`; primes outside a finite universe carry 0.
    pub fn exponent(&self, p: u64) -> Exponent {
        if let Some(e) = self.exceptions.get(&p) {
            return *e;
        }
        if self.universe.contains(p) {
            self.default
        } else {
            Exponent::ZERO
        }
    }

    /// Copy with the exponent at `p` replaced.
    pub fn with_exponent(&self, p: u64, e: Exponent) -> Result<Self> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !self.universe.contains(p) {
            return Err(Error::PrimeOutsideUniverse(p));
        }
        let mut exceptions = self.exceptions.clone();
        exceptions.insert(p, e);
        Ok(Self::normalized(exceptions, self.default, self.universe.clone()))
    }

    /// Copy with every exponent passed through `f` (default included).
    pub fn map_exponents(&self, f: impl Fn(Exponent) -> Exponent) -> Self {
        let exceptions = self.exceptions.iter().map(|(&p, &e)| (p, f(e))).collect();
        Self::normalized(exceptions, f(self.default), self.universe.clone())
    }

    pub fn is_normal(&self) -> bool {
        let default_ok = match self.universe {
            Universe::AllPrimes => true,
            Universe::Finite(_) => self.default.is_zero(),
        };
        default_ok && self.exceptions.values().all(|e| *e != self.default)
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn key_union(&self, other: &Self) -> BTreeSet<u64> {
        self.exceptions
            .keys()
            .chain(other.exceptions.keys())
            .copied()
            .collect()
    }

    /// Pointwise combination over the union of exception keys plus the
    /// shared default region.
    fn zip_with(&self, other: &Self, f: impl Fn(Exponent, Exponent) -> Exponent) -> Result<Self> {
        self.check_universe(other)?;
        let exceptions = self
            .key_union(other)
            .into_iter()
            .map(|p| (p, f(self.exponent(p), other.exponent(p))))
            .collect();
        let default = f(self.default, other.default);
        Ok(Self::normalized(exceptions, default, self.universe.clone()))
    }

    /// True when `pred` holds at every prime of the universe.
    pub(crate) fn all_pointwise(
        &self,
        other: &Self,
        pred: impl Fn(Exponent, Exponent) -> bool,
    ) -> Result<bool> {
        self.check_universe(other)?;
        let keys = self.key_union(other);
        if self.universe.has_rest(&keys) && !pred(self.default, other.default) {
            return Ok(false);
        }
        Ok(keys.into_iter().all(|p| pred(self.exponent(p), other.exponent(p))))
    }

    /// Primes where `pred` holds, split into explicitly listed primes and a
    /// flag for the (possibly infinite) default region.
    pub(crate) fn where_pointwise(
        &self,
        other: &Self,
        pred: impl Fn(Exponent, Exponent) -> bool,
    ) -> Result<(Vec<u64>, bool, BTreeSet<u64>)> {
        self.check_universe(other)?;
        let keys = self.key_union(other);
        let listed = keys
            .iter()
            .copied()
            .filter(|&p| pred(self.exponent(p), other.exponent(p)))
            .collect();
        let rest = self.universe.has_rest(&keys) && pred(self.default, other.default);
        Ok((listed, rest, keys))
    }

    /// `self | other`: exponent-wise `≤` at every prime.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.all_pointwise(other, |a, b| a <= b)
    }

    /// Least common multiple (pointwise max).
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Ord::max)
    }

    /// Greatest common divisor (pointwise min).
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Ord::min)
    }

    /// `self / den` with `∞ - ∞ = 0`; requires `den | self`.
    pub fn quotient(&self, den: &Self) -> Result<Self> {
        if !den.divides(self)? {
            return Err(Error::NotDivisible {
                num: self.to_string(),
                den: den.to_string(),
            });
        }
        self.zip_with(den, |a, b| a.minus(b).expect("den divides num"))
    }

    /// True when the number is an ordinary natural number.
    pub fn is_natural(&self) -> bool {
        self.default.is_zero() && self.exceptions.values().all(|e| e.is_finite())
    }

    pub fn natural_value(&self) -> Option<BigUint> {
        if !self.is_natural() {
            return None;
        }
        let mut acc = BigUint::from(1u32);
        for (&p, e) in &self.exceptions {
            let k = e.finite().expect("checked finite");
            acc *= BigUint::from(p).pow(u32::try_from(k).ok()?);
        }
        Some(acc)
    }
}

impl fmt::Display for SupernaturalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exceptions.is_empty() {
            f.write_str("1")?;
        } else {
            let mut first = true;
            for (p, e) in &self.exceptions {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                match e {
                    Exponent::Finite(1) => write!(f, "{p}")?,
                    e => write!(f, "{p}^{e}")?,
                }
            }
        }
        if !self.default.is_zero() {
            write!(f, "; rest={}", self.default)?;
        }
        if let Universe::Finite(set) = &self.universe {
            let list: Vec<String> = set.iter().map(u64::to_string).collect();
            write!(f, "; universe={}", list.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SupernaturalNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        syntax::parse_supernatural(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sn(s: &str) -> SupernaturalNumber {
        s.parse().unwrap()
    }

    fn nat(n: u64) -> SupernaturalNumber {
        SupernaturalNumber::from_natural(n).unwrap()
    }

    #[test]
    fn exponent_order() {
        assert!(Exponent::Finite(0) < Exponent::Finite(1));
        assert!(Exponent::Finite(u64::MAX) < Exponent::Infinite);
        assert_eq!(Exponent::Finite(3).max(Exponent::Infinite), Exponent::Infinite);
        assert_eq!(Exponent::Infinite.minus(Exponent::Infinite), Some(Exponent::ZERO));
        assert_eq!(Exponent::Infinite.minus(Exponent::Finite(4)), Some(Exponent::Infinite));
        assert_eq!(Exponent::Finite(1).minus(Exponent::Finite(2)), None);
    }

    #[test]
    fn from_natural_examples() {
        assert!(nat(1).exceptions().is_empty());
        assert_eq!(nat(1).default_exponent(), Exponent::ZERO);
        let twelve = nat(12);
        assert_eq!(
            twelve.exceptions(),
            &BTreeMap::from([(2, Exponent::Finite(2)), (3, Exponent::Finite(1))])
        );
        let n360 = nat(360);
        assert_eq!(
            n360.exceptions(),
            &BTreeMap::from([
                (2, Exponent::Finite(3)),
                (3, Exponent::Finite(2)),
                (5, Exponent::Finite(1)),
            ])
        );
        assert_eq!(SupernaturalNumber::from_natural(0), Err(Error::ZeroNatural));
    }

    #[test]
    fn divides_examples() {
        assert!(nat(12).divides(&sn("2^2,3^inf,5^2")).unwrap());
        assert!(sn("2^2").divides(&sn("1; rest=inf")).unwrap());
        assert!(!sn("2^3").divides(&sn("2^2,3")).unwrap());
        // Default regions participate without enumerating primes.
        assert!(!sn("1; rest=1").divides(&sn("2^5,3^5")).unwrap());
        assert!(sn("2^5; rest=1").divides(&sn("1; rest=inf")).unwrap());
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(nat(4).join(&nat(6)).unwrap(), nat(12));
        assert_eq!(sn("2^inf").join(&sn("3")).unwrap(), sn("2^inf,3"));
        assert_eq!(nat(4).meet(&nat(6)).unwrap(), nat(2));
        assert_eq!(
            SupernaturalNumber::full().meet(&sn("5^2")).unwrap(),
            sn("5^2")
        );
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(nat(12).quotient(&nat(4)).unwrap(), nat(3));
        assert_eq!(sn("2^2,3^inf").quotient(&sn("3^inf")).unwrap(), nat(4));
        let full = SupernaturalNumber::full();
        assert_eq!(full.quotient(&full).unwrap(), nat(1));
        assert!(matches!(nat(4).quotient(&nat(3)), Err(Error::NotDivisible { .. })));
        assert_eq!(
            sn("2^inf; rest=inf").quotient(&sn("2^3; rest=1")).unwrap(),
            sn("1; rest=inf")
        );
    }

    #[test]
    fn natural_value_examples() {
        assert_eq!(sn("2^2,3").natural_value(), Some(BigUint::from(12u32)));
        assert_eq!(sn("1; rest=inf").natural_value(), None);
        assert_eq!(sn("7; rest=1").natural_value(), None);
        assert_eq!(sn("2^100").natural_value(), Some(BigUint::from(2u32).pow(100)));
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = sn("2; universe=2,3");
        let b = nat(2);
        assert_eq!(a.divides(&b), Err(Error::UniverseMismatch));
        assert_eq!(a.join(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn finite_universe_normalizes_default() {
        let a = sn("2; rest=inf; universe=2,3,5");
        assert_eq!(a.default_exponent(), Exponent::ZERO);
        assert_eq!(a.exponent(2), Exponent::Finite(1));
        assert_eq!(a.exponent(3), Exponent::Infinite);
        assert_eq!(a.exponent(7), Exponent::ZERO);
        assert_eq!(a.to_string(), "2,3^inf,5^inf; universe=2,3,5");
        assert!(a.is_normal());
        assert_eq!(
            SupernaturalNumber::new(BTreeMap::from([(7, Exponent::Finite(1))]), Exponent::ZERO, Universe::first_primes(3)),
            Err(Error::PrimeOutsideUniverse(7))
        );
    }

    #[test]
    fn rejects_composite_keys() {
        assert_eq!(
            SupernaturalNumber::new(BTreeMap::from([(6, Exponent::Finite(1))]), Exponent::ZERO, Universe::AllPrimes),
            Err(Error::NotPrime(6))
        );
    }
}
