//! `F_{p^n}` as `F_p[x]/(f)` with `f` the lexicographically smallest monic
//! irreducible of degree `n`.
//!
//! Element `Σ c_i x^i` (with `0 <= c_i < p`) has index `Σ c_i p^i`. Monic
//! polynomials of degree `n` are ordered by the same integer encoding of their
//! lower coefficients, i.e. lexicographically from `c_{n-1}` down to `c_0`.

use super::{FiniteRing, Provenance, RingBounds};
use crate::error::{Error, Result};
use crate::primes;

type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn digits(mut x: u64, p: u64, len: usize) -> Poly {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(f: &[u64], p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero mod p")
}

/// Remainder of `f` modulo a nonzero `g` over `F_p`.
fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    let mut r = trim(f.to_vec());
    let g = trim(g.to_vec());
    let lead_inv = inv_mod(*g.last().expect("nonzero divisor"), p);
    while r.len() >= g.len() {
        let shift = r.len() - g.len();
        let c = r.last().unwrap() * lead_inv % p;
        for (i, &gc) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * gc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn monic(code: u64, degree: usize, p: u64) -> Poly {
    let mut f = digits(code, p, degree);
    f.push(1);
    f
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    (1..=n / 2).all(|d| {
        (0..p.pow(d as u32)).all(|code| !rem(f, &monic(code, d, p), p).is_empty())
    })
}

/// The lexicographically smallest monic irreducible of degree `n` over `F_p`,
/// coefficients from `x^0` upward.
pub fn lex_smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    (0..p.pow(n))
        .map(|code| monic(code, n as usize, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Poly {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    rem(&prod, modulus, p)
}

fn poly_label(f: &[u64]) -> String {
    let terms: Vec<String> = f
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// The field with `p^n` elements.
pub fn make_gf(p: u64, n: u32, bounds: RingBounds) -> Result<FiniteRing> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Malformed("extension degree must be >= 1".into()));
    }
    let size = p
        .checked_pow(n)
        .ok_or(Error::BoundExceeded { size: u64::MAX, bound: bounds.max_size as u64 })?;
    bounds.check(size)?;
    let q = size as usize;
    let len = n as usize;
    let modulus = lex_smallest_irreducible(p, n);
    let elems: Vec<Poly> = (0..size).map(|x| digits(x, p, len)).collect();

    // Discrete logarithms relative to a primitive element.
    let order = size - 1;
    let mul_idx = |a: u64, b: u64| -> u64 {
        let mut r = poly_mul_mod(&elems[a as usize], &elems[b as usize], &modulus, p);
        r.resize(len, 0);
        undigits(&r, p)
    };
    let power = |g: u64, mut e: u64| -> u64 {
        let (mut acc, mut base) = (1u64, g);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_idx(acc, base);
            }
            base = mul_idx(base, base);
            e >>= 1;
        }
        acc
    };
    let order_primes = if order > 1 { primes::prime_divisors(order) } else { Vec::new() };
    let generator = (1..size)
        .find(|&g| order_primes.iter().all(|&r| power(g, order / r) != 1))
        .expect("the multiplicative group is cyclic");
    let mut exp = vec![0u16; order as usize];
    let mut log = vec![0u32; q];
    let mut x = 1u64;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x as u16;
        log[x as usize] = i as u32;
        x = mul_idx(x, generator);
    }

    let labels = elems.iter().map(|f| poly_label(f)).collect();
    let order = order as usize;
    FiniteRing::build(
        q,
        |a, b| {
            let (mut x, mut y, mut place, mut sum) = (a as u64, b as u64, 1u64, 0u64);
            for _ in 0..len {
                sum += (x % p + y % p) % p * place;
                x /= p;
                y /= p;
                place *= p;
            }
            sum as usize
        },
        |a, b| {
            if a == 0 || b == 0 {
                0
            } else {
                exp[(log[a] as usize + log[b] as usize) % order] as usize
            }
        },
        0,
        1,
        labels,
        Provenance::Gf { p, n },
    )
}
