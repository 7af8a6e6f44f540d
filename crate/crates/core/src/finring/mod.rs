//! Explicit finite commutative unital rings given by Cayley tables, and an
//! exhaustive enumerator of their unital subrings.
//!
//! This is the brute-force side of every cross-check: nothing here knows
//! about Steinitz numbers.

mod gf;
mod lattice;
mod predict;

use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use gf::{lex_smallest_irreducible, make_gf};
pub use lattice::{closure, enumerate_subrings, maximal_subrings, saturated_chains, ChainSet, SubringLattice};
pub use predict::{frobenius_fixed_set, predict_and_compare, Comparison, Family};

/// Size limits for constructed rings and their lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingBounds {
    pub max_size: usize,
    pub max_lattice: usize,
}

impl Default for RingBounds {
    fn default() -> Self {
        RingBounds {
            max_size: 4096,
            max_lattice: 100_000,
        }
    }
}

impl RingBounds {
    /// Table entries are stored as `u16`.
    pub const HARD_MAX_SIZE: usize = 1 << 16;

    fn check(&self, size: u64) -> Result<()> {
        let bound = self.max_size.min(Self::HARD_MAX_SIZE) as u64;
        if size > bound {
            Err(Error::BoundExceeded { size, bound })
        } else {
            Ok(())
        }
    }
}

/// How a ring was built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Gf { p: u64, n: u32 },
    Product(Box<Provenance>, Box<Provenance>),
    Dual(Box<Provenance>),
    Table,
}

impl Provenance {
    pub fn is_field(&self) -> bool {
        matches!(self, Provenance::Gf { .. })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Gf { p, n } => write!(f, "gf({p},{n})"),
            Provenance::Product(a, b) => write!(f, "product({a},{b})"),
            Provenance::Dual(k) => write!(f, "dual({k})"),
            Provenance::Table => f.write_str("table"),
        }
    }
}

/// A set of ring elements, keyed by element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(size: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(size))
    }

    pub fn from_indices(size: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(size);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    /// Returns true when `i` was not yet present.
    pub fn insert(&mut self, i: usize) -> bool {
        !self.0.put(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A finite commutative ring with identity, stored as full tables.
#[derive(Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    provenance: Provenance,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("size", &self.size)
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// Triples checked at random for associativity and distributivity once a
/// ring has more than `EXHAUSTIVE_LIMIT` elements.
pub const SAMPLED_TRIPLES: usize = 100_000;
pub const EXHAUSTIVE_LIMIT: usize = 64;

impl FiniteRing {
    /// Builds a ring from `add`/`mul` closures and checks every axiom.
    fn build(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut add_t = vec![0u16; size * size];
        let mut mul_t = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                let s = add(a, b);
                let m = mul(a, b);
                if s >= size || m >= size {
                    return Err(Error::InvalidRing(format!("table entry out of range at ({a},{b})")));
                }
                add_t[a * size + b] = s as u16;
                mul_t[a * size + b] = m as u16;
            }
        }
        Self::from_flat(size, add_t, mul_t, zero, one, labels, provenance)
    }

    fn from_flat(
        size: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        provenance: Provenance,
    ) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidRing(m));
        if size == 0 || zero >= size || one >= size {
            return invalid("zero and one must be elements".into());
        }
        if zero == one {
            return invalid("zero equals one".into());
        }
        if labels.len() != size {
            return invalid("one label per element".into());
        }
        let mut neg = vec![u16::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] as usize == zero {
                    neg[a] = b as u16;
                    break;
                }
            }
            if neg[a] == u16::MAX {
                return invalid(format!("element {a} has no additive inverse"));
            }
        }
        let ring = FiniteRing {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            provenance,
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Ring from explicit tables (`add[a][b]`, `mul[a][b]`).
    pub fn from_tables(
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let size = add.len();
        if size > RingBounds::HARD_MAX_SIZE
            || mul.len() != size
            || add.iter().chain(mul).any(|row| row.len() != size)
        {
            return Err(Error::InvalidRing("tables must be square and of equal size".into()));
        }
        Self::build(size, |a, b| add[a][b], |a, b| mul[a][b], zero, one, labels, Provenance::Table)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let fail = |m: String| Err(Error::InvalidRing(m));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail(format!("zero is not an additive identity for {a}"));
            }
            if self.mul(a, self.one) != a {
                return fail(format!("one is not a multiplicative identity for {a}"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        let triple = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail(format!("addition not associative at ({a},{b},{c})"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail(format!("multiplication not associative at ({a},{b},{c})"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail(format!("not distributive at ({a},{b},{c})"));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let (mut acc, mut base) = (self.one, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Every nonzero element has a multiplicative inverse.
    pub fn is_field(&self) -> bool {
        (0..self.size)
            .filter(|&a| a != self.zero)
            .all(|a| (0..self.size).any(|b| self.mul(a, b) == self.one))
    }

    /// Labels of the elements of `set`, in index order.
    pub fn set_labels(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Index of `(a, b)` in `make_product(r, s)`.
    pub fn pair_index(right_size: usize, a: usize, b: usize) -> usize {
        a * right_size + b
    }
}

/// `R × S` with componentwise operations; `(a, b)` has index `a·|S| + b`.
pub fn make_product(r: &FiniteRing, s: &FiniteRing, bounds: RingBounds) -> Result<FiniteRing> {
    let size = r.size as u64 * s.size as u64;
    bounds.check(size)?;
    let m = s.size;
    let split = |x: usize| (x / m, x % m);
    let labels = (0..size as usize)
        .map(|x| {
            let (a, b) = split(x);
            format!("({},{})", r.labels[a], s.labels[b])
        })
        .collect();
    FiniteRing::build(
        size as usize,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r.add(a, c) * m + s.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r.mul(a, c) * m + s.mul(b, d)
        },
        r.zero * m + s.zero,
        r.one * m + s.one,
        labels,
        Provenance::Product(Box::new(r.provenance.clone()), Box::new(s.provenance.clone())),
    )
}

/// `K[x]/(x²) = K ⊕ Kα`; `a + bα` has index `a·|K| + b`.
pub fn make_dual(k: &FiniteRing, bounds: RingBounds) -> Result<FiniteRing> {
    if !k.is_field() {
        return Err(Error::NotAField);
    }
    let size = k.size as u64 * k.size as u64;
    bounds.check(size)?;
    let m = k.size;
    let split = |x: usize| (x / m, x % m);
    let labels = (0..size as usize)
        .map(|x| {
            let (a, b) = split(x);
            format!("({})+({})α", k.labels[a], k.labels[b])
        })
        .collect();
    FiniteRing::build(
        size as usize,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            k.add(a, c) * m + k.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            let real = k.mul(a, c);
            let nil = k.add(k.mul(a, d), k.mul(b, c));
            real * m + nil
        },
        k.zero * m + k.zero,
        k.one * m + k.zero,
        labels,
        Provenance::Dual(Box::new(k.provenance.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, n: u32) -> FiniteRing {
        make_gf(p, n, RingBounds::default()).unwrap()
    }

    fn zmod(n: usize) -> FiniteRing {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        FiniteRing::from_tables(&add, &mul, 0, 1, (0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    /// Brute-force search for a bijection preserving both tables.
    fn isomorphic(r: &FiniteRing, s: &FiniteRing) -> bool {
        fn extend(r: &FiniteRing, s: &FiniteRing, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == r.size() {
                return (0..i).all(|a| {
                    (0..i).all(|b| {
                        map[r.add(a, b)] == s.add(map[a], map[b]) && map[r.mul(a, b)] == s.mul(map[a], map[b])
                    })
                });
            }
            for j in 0..s.size() {
                if !used[j] {
                    used[j] = true;
                    map.push(j);
                    if extend(r, s, map, used) {
                        return true;
                    }
                    map.pop();
                    used[j] = false;
                }
            }
            false
        }
        r.size() == s.size() && extend(r, s, &mut Vec::new(), &mut vec![false; s.size()])
    }

    #[test]
    fn product_sizes() {
        let b = RingBounds::default();
        assert_eq!(make_product(&gf(2, 1), &gf(2, 1), b).unwrap().size(), 4);
        assert_eq!(make_product(&gf(2, 2), &gf(2, 2), b).unwrap().size(), 16);
        let f2xf3 = make_product(&gf(2, 1), &gf(3, 1), b).unwrap();
        assert_eq!(f2xf3.size(), 6);
        assert!(isomorphic(&f2xf3, &zmod(6)));
        assert!(!isomorphic(&make_product(&gf(2, 1), &gf(2, 1), b).unwrap(), &zmod(4)));
    }

    #[test]
    fn dual_rings() {
        let b = RingBounds::default();
        let d2 = make_dual(&gf(2, 1), b).unwrap();
        assert_eq!(d2.size(), 4);
        let alpha = FiniteRing::pair_index(2, 0, 1);
        assert_eq!(d2.mul(alpha, alpha), d2.zero());
        assert!(!d2.is_field());

        for k in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1), gf(2, 3), gf(3, 2), gf(2, 4)] {
            let d = make_dual(&k, b).unwrap();
            let alpha = FiniteRing::pair_index(k.size(), k.zero(), k.one());
            assert_eq!(d.mul(alpha, alpha), d.zero());
        }

        // F_4[α]: the only maximal ideal is F_4·α, of size 4
        let d4 = make_dual(&gf(2, 2), b).unwrap();
        let ideals = all_ideals(&d4);
        let proper: Vec<&ElementSet> = ideals.iter().filter(|i| !i.contains(d4.one())).collect();
        let maximal: Vec<&&ElementSet> = proper
            .iter()
            .filter(|i| !proper.iter().any(|j| i.is_subset(j) && i != &j))
            .collect();
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].len(), 4);
    }

    fn all_ideals(r: &FiniteRing) -> Vec<ElementSet> {
        // ideals generated by one or two elements cover every ideal of a 16-element ring
        let n = r.size();
        let gen_ideal = |gens: &[usize]| {
            let mut set = ElementSet::from_indices(n, [r.zero()]);
            let mut list = vec![r.zero()];
            for &g in gens {
                for x in 0..n {
                    let y = r.mul(x, g);
                    if set.insert(y) {
                        list.push(y);
                    }
                }
            }
            let mut i = 0;
            while i < list.len() {
                let a = list[i];
                for j in 0..list.len() {
                    let s = r.add(a, list[j]);
                    if set.insert(s) {
                        list.push(s);
                    }
                }
                i += 1;
            }
            set
        };
        let mut out: Vec<ElementSet> = Vec::new();
        for a in 0..n {
            for b in a..n {
                let i = gen_ideal(&[a, b]);
                if !out.contains(&i) {
                    out.push(i);
                }
            }
        }
        out
    }

    #[test]
    fn dual_rejects_non_fields() {
        let b = RingBounds::default();
        let f2xf2 = make_product(&gf(2, 1), &gf(2, 1), b).unwrap();
        assert_eq!(make_dual(&f2xf2, b).unwrap_err(), Error::NotAField);
    }

    #[test]
    fn bounds_are_enforced() {
        let small = RingBounds { max_size: 8, ..RingBounds::default() };
        assert_eq!(
            make_product(&gf(2, 2), &gf(2, 2), small).unwrap_err(),
            Error::BoundExceeded { size: 16, bound: 8 }
        );
        assert_eq!(
            make_dual(&gf(3, 1), small).unwrap_err(),
            Error::BoundExceeded { size: 9, bound: 8 }
        );
    }

    #[test]
    fn from_tables_rejects_bad_tables() {
        // x*y = 0 everywhere: one is not an identity
        let add: Vec<Vec<usize>> = (0..2).map(|a| (0..2).map(|b| (a + b) % 2).collect()).collect();
        let mul = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            FiniteRing::from_tables(&add, &mul, 0, 1, vec!["0".into(), "1".into()]),
            Err(Error::InvalidRing(_))
        ));
        // non-associative multiplication on Z/3
        let add: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let mut mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a * b) % 3).collect()).collect();
        mul[2][2] = 2;
        assert!(FiniteRing::from_tables(&add, &mul, 0, 1, vec!["0".into(), "1".into(), "2".into()]).is_err());
        assert_eq!(zmod(5).size(), 5);
    }

    #[test]
    fn element_set_basics() {
        let mut s = ElementSet::empty(10);
        assert!(s.is_empty());
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(7);
        assert_eq!(s.to_vec(), vec![3, 7]);
        assert!(s.is_subset(&ElementSet::from_indices(10, [1, 3, 7])));
    }
}
