//! Text grammar for descriptors.
//!
//! ```text
//! supernatural := FACTORS [; rest=EXPO] [; universe=p1,p2,...]
//! FACTORS      := 1 | prime[^EXPO] (, prime[^EXPO])*
//! EXPO         := decimal | inf
//! field        := char=p; supernatural
//! affine       := [affine:] base=BASE; [gens=GEN,...;] kind=KIND
//! BASE         := field | char0 | nonalg(p) | closed(p) | closed
//! GEN          := alg(k) | transc
//! KIND         := domain | field | reduced(field | field | ...)
//! variety      := [variety:] base=BASE; points=(decimal | inf)
//! ```
//!
//! Error offsets are byte offsets into the whole input.

use std::collections::{BTreeMap, BTreeSet};

use crate::affine::{AffineDescriptor, AlgebraKind, BaseField, ClosedField, Generator};
use crate::error::{Error, Result};
use crate::fgset::ExtendedCount;
use crate::field::FieldDescriptor;
use crate::primes;
use crate::supernat::{Exponent, SupernaturalNumber, Universe};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    /// Consumes `token` after optional whitespace.
    fn eat(&mut self, token: &str) -> bool {
        let save = self.pos;
        self.ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            self.pos = save;
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.ws();
            Err(self.error(format!("expected `{token}`")))
        }
    }

    /// True when the input continues with `; keyword`.
    fn next_clause_is(&self, keyword: &str) -> bool {
        let rest = self.rest().trim_start();
        match rest.strip_prefix(';') {
            Some(after) => after.trim_start().starts_with(keyword),
            None => false,
        }
    }

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.ws();
        let start = self.pos;
        let len = self
            .rest()
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }

    fn number(&mut self) -> Result<u64> {
        let (start, text) = self.digits()?;
        text.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: "number too large".into(),
        })
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat("inf") {
            return Ok(Exponent::Infinite);
        }
        self.ws();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected an exponent (decimal or `inf`)"));
        }
        let (start, text) = self.digits()?;
        text.parse()
            .map(Exponent::Finite)
            .map_err(|_| Error::ExponentOverflow(start))
    }

    fn prime(&mut self) -> Result<u64> {
        self.ws();
        let start = self.pos;
        let p = self.number()?;
        if primes::is_prime(p) {
            Ok(p)
        } else {
            Err(Error::Syntax {
                offset: start,
                message: format!("{p} is not a prime"),
            })
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

fn supernatural(cur: &mut Cursor) -> Result<SupernaturalNumber> {
    let mut factors: Vec<(usize, u64, Option<Exponent>)> = Vec::new();
    loop {
        cur.ws();
        let start = cur.pos;
        let base = cur.number()?;
        let exp = if cur.eat("^") { Some(cur.exponent()?) } else { None };
        factors.push((start, base, exp));
        if !cur.eat(",") {
            break;
        }
    }
    let mut exceptions = BTreeMap::new();
    if !matches!(factors.as_slice(), [(_, 1, None)]) {
        for (start, base, exp) in factors {
            let syntax = |message: String| Error::Syntax { offset: start, message };
            if !primes::is_prime(base) {
                return Err(syntax(format!("{base} is not a prime")));
            }
            if exceptions
                .insert(base, exp.unwrap_or(Exponent::Finite(1)))
                .is_some()
            {
                return Err(syntax(format!("prime {base} listed twice")));
            }
        }
    }

    let mut default = None;
    let mut universe = None;
    loop {
        if default.is_none() && cur.next_clause_is("rest") {
            cur.expect(";")?;
            cur.expect("rest")?;
            cur.expect("=")?;
            default = Some(cur.exponent()?);
        } else if universe.is_none() && cur.next_clause_is("universe") {
            cur.expect(";")?;
            cur.expect("universe")?;
            cur.expect("=")?;
            let mut set = BTreeSet::new();
            loop {
                set.insert(cur.prime()?);
                if !cur.eat(",") {
                    break;
                }
            }
            universe = Some(Universe::Finite(set));
        } else {
            break;
        }
    }
    SupernaturalNumber::new(
        exceptions,
        default.unwrap_or(Exponent::ZERO),
        universe.unwrap_or(Universe::AllPrimes),
    )
}

fn field(cur: &mut Cursor) -> Result<FieldDescriptor> {
    cur.expect("char")?;
    cur.expect("=")?;
    cur.ws();
    let start = cur.pos;
    let p = cur.number()?;
    if p < 2 {
        return Err(Error::Syntax {
            offset: start,
            message: format!("characteristic {p} is not a prime"),
        });
    }
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    cur.expect(";")?;
    FieldDescriptor::new(p, supernatural(cur)?)
}

fn base(cur: &mut Cursor) -> Result<BaseField> {
    if cur.eat("char0") {
        return Ok(BaseField::CharZero);
    }
    if cur.eat("nonalg") {
        cur.expect("(")?;
        let p = cur.prime()?;
        cur.expect(")")?;
        return Ok(BaseField::NotAbsolutelyAlgebraic { characteristic: p });
    }
    if cur.eat("closed") {
        if cur.eat("(") {
            let p = cur.prime()?;
            cur.expect(")")?;
            return Ok(BaseField::AlgebraicallyClosed(ClosedField::ClosureOfPrime(p)));
        }
        return Ok(BaseField::AlgebraicallyClosed(ClosedField::Other));
    }
    field(cur).map(BaseField::Field)
}

fn generators(cur: &mut Cursor) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    cur.ws();
    if cur.peek() == Some(';') || cur.rest().is_empty() {
        return Ok(out);
    }
    loop {
        if cur.eat("alg") {
            cur.expect("(")?;
            let k = cur.number()?;
            if k == 0 {
                return Err(cur.error("algebraic generator needs k >= 1"));
            }
            cur.expect(")")?;
            out.push(Generator::Algebraic(k));
        } else if cur.eat("transc") {
            out.push(Generator::Transcendental);
        } else {
            cur.ws();
            return Err(cur.error("expected `alg(k)` or `transc`"));
        }
        if !cur.eat(",") {
            return Ok(out);
        }
    }
}

fn kind(cur: &mut Cursor) -> Result<AlgebraKind> {
    if cur.eat("domain") {
        return Ok(AlgebraKind::Domain);
    }
    if cur.eat("field") {
        return Ok(AlgebraKind::Field);
    }
    if cur.eat("reduced") {
        cur.expect("(")?;
        let mut comps = vec![field(cur)?];
        while cur.eat("|") {
            comps.push(field(cur)?);
        }
        cur.expect(")")?;
        return Ok(AlgebraKind::ReducedProduct(comps));
    }
    cur.ws();
    Err(cur.error("expected `domain`, `field` or `reduced(...)`"))
}

pub fn parse_supernatural(s: &str) -> Result<SupernaturalNumber> {
    let mut cur = Cursor::new(s);
    let value = supernatural(&mut cur)?;
    cur.finish()?;
    Ok(value)
}

pub fn parse_field(s: &str) -> Result<FieldDescriptor> {
    let mut cur = Cursor::new(s);
    let value = field(&mut cur)?;
    cur.finish()?;
    Ok(value)
}

pub fn parse_base(s: &str) -> Result<BaseField> {
    let mut cur = Cursor::new(s);
    let value = base(&mut cur)?;
    cur.finish()?;
    Ok(value)
}

pub fn parse_affine(s: &str) -> Result<AffineDescriptor> {
    let mut cur = Cursor::new(s);
    cur.eat("affine:");
    cur.expect("base")?;
    cur.expect("=")?;
    let base = base(&mut cur)?;
    cur.expect(";")?;
    let mut gens = Vec::new();
    if cur.eat("gens") {
        cur.expect("=")?;
        gens = generators(&mut cur)?;
        cur.expect(";")?;
    }
    cur.expect("kind")?;
    cur.expect("=")?;
    let kind = kind(&mut cur)?;
    cur.finish()?;
    Ok(AffineDescriptor::new(base, gens, kind))
}

/// `variety: base=BASE; points=N` for the coordinate-ring verdict.
pub fn parse_variety(s: &str) -> Result<(BaseField, ExtendedCount)> {
    let mut cur = Cursor::new(s);
    cur.eat("variety:");
    cur.expect("base")?;
    cur.expect("=")?;
    let base = base(&mut cur)?;
    cur.expect(";")?;
    cur.expect("points")?;
    cur.expect("=")?;
    let points = if cur.eat("inf") {
        ExtendedCount::CountablyInfinite
    } else {
        ExtendedCount::Finite(cur.number()?)
    };
    cur.finish()?;
    Ok((base, points))
}

/// Either kind of descriptor accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Field(FieldDescriptor),
    Affine(AffineDescriptor),
}

pub fn parse_descriptor(s: &str) -> Result<Descriptor> {
    let t = s.trim_start();
    if t.starts_with("affine:") || t.starts_with("base=") {
        parse_affine(s).map(Descriptor::Affine)
    } else {
        parse_field(s).map(Descriptor::Field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_examples() {
        assert_eq!(parse_field("char=2; 2^2,3").unwrap(), FieldDescriptor::finite(2, 12).unwrap());
        assert_eq!(
            parse_field("char=5; 1; rest=inf").unwrap(),
            FieldDescriptor::algebraic_closure(5).unwrap()
        );
        let f = parse_field("char=2; 2^2,3; rest=7").unwrap();
        assert_eq!(f.content().default_exponent(), Exponent::Finite(7));
        assert_eq!(
            parse_field("char=2; 2^x"),
            Err(Error::Syntax { offset: 10, message: "expected an exponent (decimal or `inf`)".into() })
        );
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert_eq!(parse_field("char=6; 1"), Err(Error::NotPrime(6)));
        assert!(matches!(parse_field("char=1; 1"), Err(Error::Syntax { offset: 5, .. })));
    }

    #[test]
    fn factor_errors_carry_offsets() {
        assert!(matches!(parse_supernatural("2,4"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_supernatural("2,2^3"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_supernatural("2;"), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_supernatural(""), Err(Error::Syntax { offset: 0, .. })));
        assert_eq!(
            parse_supernatural("2^99999999999999999999999"),
            Err(Error::ExponentOverflow(2))
        );
    }

    #[test]
    fn options_in_either_order() {
        let a = parse_supernatural("2^3,3^inf,7^inf; rest=0").unwrap();
        let b = parse_supernatural("2^3, 3^inf, 7^inf").unwrap();
        assert_eq!(a, b);
        let c = parse_supernatural("2; universe=2,3; rest=inf").unwrap();
        let d = parse_supernatural("2; rest=inf; universe=2,3").unwrap();
        assert_eq!(c, d);
        assert_eq!(c.to_string(), "2,3^inf; universe=2,3");
    }

    #[test]
    fn canonical_text_round_trips() {
        for text in [
            "1",
            "2^2,3",
            "1; rest=inf",
            "2^3,3^inf,7^inf",
            "2^inf,5^0; rest=1",
            "2,3^inf; universe=2,3,5",
            "char=3; 2^inf; rest=2",
            "affine: base=char=2; 1; gens=alg(4),alg(6); kind=domain",
            "affine: base=closed(2); gens=transc; kind=field",
            "affine: base=char0; gens=; kind=domain",
            "affine: base=char=2; 1; gens=; kind=reduced(char=2; 2 | char=2; 3)",
        ] {
            let rendered = if text.starts_with("affine") {
                parse_affine(text).unwrap().to_string()
            } else if text.starts_with("char") {
                parse_field(text).unwrap().to_string()
            } else {
                parse_supernatural(text).unwrap().to_string()
            };
            assert_eq!(rendered, text);
        }
    }

    #[test]
    fn affine_without_gens_clause() {
        let d = parse_affine("base=char=3; 2; kind=field").unwrap();
        assert!(d.generators.is_empty());
        assert!(parse_affine("affine: base=char=3; 2; gens=alg(0); kind=field").is_err());
        assert!(parse_affine("affine: base=char=3; 2; gens=foo; kind=field").is_err());
    }

    #[test]
    fn variety_syntax() {
        let (b, n) = parse_variety("variety: base=closed(3); points=2").unwrap();
        assert_eq!(b, BaseField::AlgebraicallyClosed(ClosedField::ClosureOfPrime(3)));
        assert_eq!(n, ExtendedCount::Finite(2));
        let (_, n) = parse_variety("variety: base=char=2; 2; points=inf").unwrap();
        assert_eq!(n, ExtendedCount::CountablyInfinite);
    }
}
