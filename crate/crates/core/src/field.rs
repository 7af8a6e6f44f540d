//! Absolutely algebraic fields, i.e. subfields of the algebraic closure of
//! `F_p`, described by characteristic and Steinitz number.
//!
//! The maximal subrings of such a field `E` are the fields obtained by
//! lowering the exponent of one prime of finite positive order by one, so
//! every question below is answered from the exponent map alone.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fgset::{ExtendedCount, FgSet, MaximalSubsets, PrimeSet};
use crate::primes;
use crate::supernat::{Exponent, SupernaturalNumber};
use crate::syntax;

/// Upper bound on saturated chains `chain_stats` will walk.
pub const CHAIN_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    characteristic: u64,
    content: SupernaturalNumber,
}

impl FieldDescriptor {
    pub fn new(characteristic: u64, content: SupernaturalNumber) -> Result<Self> {
        if !primes::is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        Ok(FieldDescriptor {
            characteristic,
            content,
        })
    }

    /// `F_{p^n}`.
    pub fn finite(p: u64, n: u64) -> Result<Self> {
        Self::new(p, SupernaturalNumber::from_natural(n)?)
    }

    /// The algebraic closure of `F_p`.
    pub fn algebraic_closure(p: u64) -> Result<Self> {
        Self::new(p, SupernaturalNumber::full())
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn content(&self) -> &SupernaturalNumber {
        &self.content
    }

    pub fn fg_set(&self) -> FgSet {
        FgSet::from(self.content.clone())
    }

    fn with_content(&self, content: SupernaturalNumber) -> Self {
        FieldDescriptor {
            characteristic: self.characteristic,
            content,
        }
    }

    /// `|F|` when the field is finite.
    pub fn finite_degree(&self) -> Option<u64> {
        self.content.natural_value().and_then(|n| u64::try_from(n).ok())
    }

    pub fn is_finite(&self) -> bool {
        self.content.is_natural()
    }

    /// `self ⊆ sup` as subfields of the same algebraic closure.
    pub fn is_subfield_of(&self, sup: &FieldDescriptor) -> bool {
        self.characteristic == sup.characteristic
            && self.content.divides(&sup.content).unwrap_or(false)
    }

    fn same_char(&self, other: &FieldDescriptor) -> Result<()> {
        if self.characteristic == other.characteristic {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch(self.characteristic, other.characteristic))
        }
    }

    fn require_subfield(&self, sub: &FieldDescriptor) -> Result<()> {
        self.same_char(sub)?;
        if sub.content.divides(&self.content)? {
            Ok(())
        } else {
            Err(Error::NotSubfield {
                sub: sub.to_string(),
                sup: self.to_string(),
            })
        }
    }

    pub fn compositum(&self, other: &FieldDescriptor) -> Result<Self> {
        self.same_char(other)?;
        Ok(self.with_content(self.content.join(&other.content)?))
    }

    pub fn intersection(&self, other: &FieldDescriptor) -> Result<Self> {
        self.same_char(other)?;
        Ok(self.with_content(self.content.meet(&other.content)?))
    }

    /// `|RgMax(E)| = |T_f|`.
    pub fn rgmax_count(&self) -> ExtendedCount {
        self.fg_set().finite_part_count()
    }

    /// The maximal subrings, in ascending order of the decremented prime.
    pub fn rgmax_list(&self) -> Result<Vec<FieldDescriptor>> {
        match self.fg_set().maximal_fg_subsets() {
            MaximalSubsets::Finite(subs) => Ok(subs
                .into_iter()
                .map(|t| self.with_content(t.into_steinitz()))
                .collect()),
            MaximalSubsets::Infinite(_) => Err(Error::InfinitelyManyMaximal(
                self.fg_set().parts().finite.to_string(),
            )),
        }
    }

    /// `L(E)`: drop every finite exponent, keep the infinite ones.
    pub fn largest_nonsubmaximal(&self) -> FieldDescriptor {
        self.with_content(self.content.map_exponents(|e| match e {
            Exponent::Infinite => Exponent::Infinite,
            Exponent::Finite(_) => Exponent::ZERO,
        }))
    }

    /// `[self : sub]` as a supernatural number.
    pub fn degree(&self, sub: &FieldDescriptor) -> Result<SupernaturalNumber> {
        self.require_subfield(sub)?;
        self.content.quotient(&sub.content)
    }

    /// Length, number and (optionally) the list of saturated chains of
    /// maximal subrings from `self` down to `L(self)`.
    pub fn chain_stats(&self, list_chains: bool) -> Result<ChainReport> {
        let count = self.rgmax_count();
        if !count.is_finite() {
            return Err(Error::InfinitelyManyMaximal(
                self.fg_set().parts().finite.to_string(),
            ));
        }
        let length = self
            .content
            .exceptions()
            .values()
            .filter_map(|e| e.finite())
            .sum();
        let terminus = self.largest_nonsubmaximal();

        let (chain_count, chains) = if list_chains {
            let mut chains = Vec::new();
            let n = self.for_each_chain(|chain| {
                chains.push(chain.to_vec());
                Ok(())
            })?;
            (n, Some(chains))
        } else {
            (count_chains(self, &mut HashMap::new())?, None)
        };
        Ok(ChainReport {
            length,
            chain_count,
            chains,
            terminus,
        })
    }

    /// Calls `visit` on every saturated chain from `self` down to `L(self)`,
    /// top first, without keeping them. Each step is checked to be maximal.
    /// Returns the number of chains.
    pub fn for_each_chain(&self, visit: impl FnMut(&[FieldDescriptor]) -> Result<()>) -> Result<u64> {
        if !self.rgmax_count().is_finite() {
            return Err(Error::InfinitelyManyMaximal(
                self.fg_set().parts().finite.to_string(),
            ));
        }
        let mut walk = ChainWalk {
            visit,
            visited: 0,
            path: vec![self.clone()],
        };
        walk.descend(self)?;
        Ok(walk.visited)
    }

    /// Number of intermediate fields `sub ⊆ K ⊆ self` of a finite extension.
    pub fn intermediate_count(&self, sub: &FieldDescriptor) -> Result<ExtendedCount> {
        let degree = self.degree(sub)?;
        if !degree.is_natural() {
            return Err(Error::NonFiniteExtension(degree.to_string()));
        }
        let mut count = 1u64;
        for e in degree.exceptions().values() {
            let k = e.finite().expect("natural degree");
            count = k
                .checked_add(1)
                .and_then(|k1| count.checked_mul(k1))
                .ok_or(Error::CountOverflow)?;
        }
        Ok(ExtendedCount::Finite(count))
    }

    /// Every proper subring embeds in a maximal one iff `T_∞ = ∅`.
    pub fn embeds_all(&self) -> bool {
        self.fg_set().parts().infinite.is_empty()
    }

    /// A maximal subring containing the proper subfield `sub`, or the prime of
    /// infinite order that blocks every such embedding. Among admissible
    /// primes the smallest one is decremented.
    pub fn embed_in_maximal(&self, sub: &FieldDescriptor) -> Result<Embedding> {
        self.require_subfield(sub)?;
        if sub.content == self.content {
            return Err(Error::NotProper);
        }
        let smallest = |(listed, rest, keys): (Vec<u64>, bool, _)| {
            let from_rest = if rest {
                self.content.universe().smallest_outside(&keys)
            } else {
                None
            };
            listed.into_iter().chain(from_rest).min()
        };
        let admissible = sub
            .content
            .where_pointwise(&self.content, |f, e| e.is_finite_positive() && f < e)?;
        if let Some(q) = smallest(admissible) {
            let maximal = self
                .fg_set()
                .decrement(q)
                .expect("admissible prime has finite positive order");
            return Ok(Embedding::Maximal {
                subring: self.with_content(maximal.into_steinitz()),
                prime: q,
            });
        }
        let blocking = sub
            .content
            .where_pointwise(&self.content, |f, e| e == Exponent::Infinite && f < e)?;
        let witness = smallest(blocking).expect("a proper subfield differs somewhere");
        Ok(Embedding::Blocked { witness })
    }

    /// `L(E)` as a subfield together with `[E : L(E)]`.
    pub fn degree_over_largest_nonsubmaximal(&self) -> SupernaturalNumber {
        self.degree(&self.largest_nonsubmaximal())
            .expect("L(E) is a subfield of E")
    }

    pub fn finite_part(&self) -> PrimeSet {
        self.fg_set().parts().finite
    }
}

struct ChainWalk<F> {
    visit: F,
    visited: u64,
    path: Vec<FieldDescriptor>,
}

impl<F: FnMut(&[FieldDescriptor]) -> Result<()>> ChainWalk<F> {
    fn descend(&mut self, field: &FieldDescriptor) -> Result<()> {
        let children = field.rgmax_list()?;
        if children.is_empty() {
            if self.visited >= CHAIN_CAP {
                return Err(Error::ChainLimit(CHAIN_CAP));
            }
            self.visited += 1;
            return (self.visit)(&self.path);
        }
        for child in children {
            assert!(child.fg_set().is_maximal_fg_subset_of(&field.fg_set())?);
            self.path.push(child.clone());
            self.descend(&child)?;
            self.path.pop();
        }
        Ok(())
    }
}

/// Number of saturated chains below `field`, memoized per intermediate field.
fn count_chains(field: &FieldDescriptor, memo: &mut HashMap<FieldDescriptor, u64>) -> Result<u64> {
    if let Some(&n) = memo.get(field) {
        return Ok(n);
    }
    let children = field.rgmax_list()?;
    let mut total = if children.is_empty() { 1 } else { 0 };
    for child in &children {
        total += count_chains(child, memo)?;
        if total > CHAIN_CAP {
            return Err(Error::ChainLimit(CHAIN_CAP));
        }
    }
    memo.insert(field.clone(), total);
    Ok(total)
}

/// Chains `E = R_0 ⊃ R_1 ⊃ ⋯ ⊃ R_m = L(E)` with each step maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub length: u64,
    pub chain_count: u64,
    pub chains: Option<Vec<Vec<FieldDescriptor>>>,
    pub terminus: FieldDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    Maximal { subring: FieldDescriptor, prime: u64 },
    Blocked { witness: u64 },
}

/// For a finite extension `sub ⊆ sup`: `sub` has finitely many maximal
/// subrings iff `sup` does.
pub fn finiteness_transfer(sub: &FieldDescriptor, sup: &FieldDescriptor) -> Result<bool> {
    let degree = sup.degree(sub)?;
    if !degree.is_natural() {
        return Err(Error::NonFiniteExtension(degree.to_string()));
    }
    Ok(sub.rgmax_count().is_finite() == sup.rgmax_count().is_finite())
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "char={}; {}", self.characteristic, self.content)
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        syntax::parse_field(s)
    }
}
