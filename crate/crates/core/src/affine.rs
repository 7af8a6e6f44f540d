//! Finiteness of the set of maximal subrings for affine algebras over a
//! described base field.
//!
//! `F[α_1,…,α_n]` (and `F(α_1,…,α_n)`) has finitely many maximal subrings
//! exactly when `F` does and every `α_i` is algebraic over `F`. For an
//! absolutely algebraic base the resulting field is the compositum of `F`
//! with the `F_{p^k}` containing each generator.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fgset::ExtendedCount;
use crate::field::FieldDescriptor;
use crate::supernat::SupernaturalNumber;
use crate::syntax;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseField {
    Field(FieldDescriptor),
    CharZero,
    /// A field of characteristic `p` that is not algebraic over `F_p`.
    NotAbsolutelyAlgebraic { characteristic: u64 },
    AlgebraicallyClosed(ClosedField),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedField {
    /// The algebraic closure of `F_p`.
    ClosureOfPrime(u64),
    /// Any other algebraically closed field (characteristic 0, or not
    /// algebraic over its prime field).
    Other,
}

impl BaseField {
    /// The base as a field descriptor, when it is absolutely algebraic.
    pub fn as_absolutely_algebraic(&self) -> Option<FieldDescriptor> {
        match self {
            BaseField::Field(f) => Some(f.clone()),
            BaseField::AlgebraicallyClosed(ClosedField::ClosureOfPrime(p)) => {
                Some(FieldDescriptor::algebraic_closure(*p).expect("validated prime"))
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// A generator lying in `F_{p^k}`.
    Algebraic(u64),
    Transcendental,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Domain,
    Field,
    ReducedProduct(Vec<FieldDescriptor>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDescriptor {
    pub base: BaseField,
    pub generators: Vec<Generator>,
    pub kind: AlgebraKind,
}

impl AffineDescriptor {
    pub fn new(base: BaseField, generators: Vec<Generator>, kind: AlgebraKind) -> Self {
        AffineDescriptor {
            base,
            generators,
            kind,
        }
    }

    fn validate(&self) -> Result<()> {
        if self
            .generators
            .iter()
            .any(|g| matches!(g, Generator::Algebraic(0)))
        {
            return Err(Error::Malformed("algebraic generator needs k >= 1".into()));
        }
        if let AlgebraKind::ReducedProduct(comps) = &self.kind {
            if comps.is_empty() {
                return Err(Error::Malformed("reduced product needs a component".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Reason {
    CharacteristicZero,
    NotAbsolutelyAlgebraic,
    ClosedNotAbsolutelyAlgebraic,
    TranscendentalGenerator(usize),
    BaseHasInfinitelyMany,
    InfinitePointSet,
    SeveralPointsOverInfiniteField(u64),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::CharacteristicZero => f.write_str("base field has characteristic 0"),
            Reason::NotAbsolutelyAlgebraic => f.write_str("base field is not absolutely algebraic"),
            Reason::ClosedNotAbsolutelyAlgebraic => {
                f.write_str("algebraically closed base other than the closure of F_p")
            }
            Reason::TranscendentalGenerator(i) => write!(f, "generator {i} is transcendental"),
            Reason::BaseHasInfinitelyMany => f.write_str("base field has infinitely many maximal subrings"),
            Reason::InfinitePointSet => f.write_str("variety has infinitely many points"),
            Reason::SeveralPointsOverInfiniteField(m) => {
                write!(f, "{m} points over an infinite field")
            }
        }
    }
}

/// A necessary condition that fails; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    BaseNotAbsolutelyAlgebraic,
    ComponentNotOverBase(usize),
    ComponentNotFiniteOverBase(usize),
    ComponentInfinitelyMany(usize),
    EqualInfiniteComponents(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::BaseNotAbsolutelyAlgebraic => f.write_str("base field is not absolutely algebraic"),
            Witness::ComponentNotOverBase(i) => write!(f, "component {i} does not contain the base"),
            Witness::ComponentNotFiniteOverBase(i) => {
                write!(f, "component {i} is not a finite extension of the base")
            }
            Witness::ComponentInfinitelyMany(i) => {
                write!(f, "component {i} has infinitely many maximal subrings")
            }
            Witness::EqualInfiniteComponents(i, j) => {
                write!(f, "components {i} and {j} are the same infinite field")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    FinitelyMany {
        field: Option<FieldDescriptor>,
        count: Option<ExtendedCount>,
    },
    InfinitelyMany(Reason),
    /// Every known necessary condition holds; sufficiency is not claimed.
    NecessaryConditionsHold,
    Violated(Witness),
}

impl Verdict {
    pub fn is_finitely_many(&self) -> bool {
        matches!(self, Verdict::FinitelyMany { .. })
    }

    pub fn is_infinitely_many(&self) -> bool {
        matches!(self, Verdict::InfinitelyMany(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FinitelyMany { field, count } => {
                f.write_str("finitely many")?;
                if let Some(field) = field {
                    write!(f, "; field {field}")?;
                }
                if let Some(count) = count {
                    write!(f, "; count {count}")?;
                }
                Ok(())
            }
            Verdict::InfinitelyMany(r) => write!(f, "infinitely many ({r})"),
            Verdict::NecessaryConditionsHold => f.write_str("necessary conditions hold"),
            Verdict::Violated(w) => write!(f, "violated ({w})"),
        }
    }
}

fn base_reason(base: &BaseField) -> Option<Reason> {
    match base {
        BaseField::CharZero => Some(Reason::CharacteristicZero),
        BaseField::NotAbsolutelyAlgebraic { .. } => Some(Reason::NotAbsolutelyAlgebraic),
        BaseField::AlgebraicallyClosed(ClosedField::Other) => Some(Reason::ClosedNotAbsolutelyAlgebraic),
        _ => None,
    }
}

/// Shared by the domain and field cases: for an absolutely algebraic base
/// both reduce to the compositum of the base with the generators.
fn decide_generated(base: &BaseField, generators: &[Generator]) -> Result<Verdict> {
    if let Some(reason) = base_reason(base) {
        return Ok(Verdict::InfinitelyMany(reason));
    }
    if let Some(i) = generators
        .iter()
        .position(|g| *g == Generator::Transcendental)
    {
        return Ok(Verdict::InfinitelyMany(Reason::TranscendentalGenerator(i + 1)));
    }
    let base = base.as_absolutely_algebraic().expect("markers handled above");
    if !base.rgmax_count().is_finite() {
        return Ok(Verdict::InfinitelyMany(Reason::BaseHasInfinitelyMany));
    }
    let universe = base.content().universe().clone();
    let mut result = base;
    for g in generators {
        let Generator::Algebraic(k) = *g else {
            unreachable!("transcendental handled above")
        };
        let piece = FieldDescriptor::new(
            result.characteristic(),
            SupernaturalNumber::from_natural_in(k, universe.clone())?,
        )?;
        result = result.compositum(&piece)?;
    }
    let count = result.rgmax_count();
    Ok(Verdict::FinitelyMany {
        field: Some(result),
        count: Some(count),
    })
}

/// Verdict for the domain `F[α_1,…,α_n]`.
pub fn decide_domain(d: &AffineDescriptor) -> Result<Verdict> {
    d.validate()?;
    if d.kind != AlgebraKind::Domain {
        return Err(Error::Malformed("expected kind=domain".into()));
    }
    decide_generated(&d.base, &d.generators)
}

/// Verdict for the field `F(α_1,…,α_n)`.
pub fn decide_field_extension(d: &AffineDescriptor) -> Result<Verdict> {
    d.validate()?;
    if d.kind != AlgebraKind::Field {
        return Err(Error::Malformed("expected kind=field".into()));
    }
    decide_generated(&d.base, &d.generators)
}

/// Necessary conditions for a reduced affine algebra `K_1 × ⋯ × K_m` over the
/// base to have finitely many maximal subrings.
pub fn decide_reduced_product(d: &AffineDescriptor) -> Result<Verdict> {
    d.validate()?;
    let AlgebraKind::ReducedProduct(components) = &d.kind else {
        return Err(Error::Malformed("expected a reduced product".into()));
    };
    let characteristic = components[0].characteristic();
    if components.iter().any(|k| k.characteristic() != characteristic) {
        return Err(Error::MixedCharacteristics);
    }
    let base = match &d.base {
        BaseField::CharZero => return Err(Error::MixedCharacteristics),
        BaseField::NotAbsolutelyAlgebraic { characteristic: c } if *c != characteristic => {
            return Err(Error::MixedCharacteristics)
        }
        other => match other.as_absolutely_algebraic() {
            Some(base) => base,
            None => return Ok(Verdict::Violated(Witness::BaseNotAbsolutelyAlgebraic)),
        },
    };
    if base.characteristic() != characteristic {
        return Err(Error::MixedCharacteristics);
    }

    for (i, k) in components.iter().enumerate() {
        if !base.is_subfield_of(k) {
            return Ok(Verdict::Violated(Witness::ComponentNotOverBase(i + 1)));
        }
        if !k.degree(&base)?.is_natural() {
            return Ok(Verdict::Violated(Witness::ComponentNotFiniteOverBase(i + 1)));
        }
    }
    if let [single] = components.as_slice() {
        let as_field = AffineDescriptor::new(BaseField::Field(single.clone()), Vec::new(), AlgebraKind::Field);
        return decide_field_extension(&as_field);
    }
    for (i, k) in components.iter().enumerate() {
        if !k.rgmax_count().is_finite() {
            return Ok(Verdict::Violated(Witness::ComponentInfinitelyMany(i + 1)));
        }
    }
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate().skip(i + 1) {
            if a == b && !a.is_finite() {
                return Ok(Verdict::Violated(Witness::EqualInfiniteComponents(i + 1, j + 1)));
            }
        }
    }
    Ok(Verdict::NecessaryConditionsHold)
}

/// Dispatches on the descriptor kind.
pub fn decide(d: &AffineDescriptor) -> Result<Verdict> {
    match d.kind {
        AlgebraKind::Domain => decide_domain(d),
        AlgebraKind::Field => decide_field_extension(d),
        AlgebraKind::ReducedProduct(_) => decide_reduced_product(d),
    }
}

/// Verdict for the coordinate ring of a variety with `points` points over `base`.
pub fn decide_variety(base: &BaseField, points: ExtendedCount) -> Result<Verdict> {
    let m = match points {
        ExtendedCount::Finite(0) => return Err(Error::ZeroPoints),
        ExtendedCount::Finite(m) => m,
        ExtendedCount::CountablyInfinite => return Ok(Verdict::InfinitelyMany(Reason::InfinitePointSet)),
    };
    if let Some(reason) = base_reason(base) {
        return Ok(Verdict::InfinitelyMany(reason));
    }
    let field = base.as_absolutely_algebraic().expect("markers handled above");
    if field.is_finite() {
        // a finite coordinate ring
        return Ok(if m == 1 {
            let count = field.rgmax_count();
            Verdict::FinitelyMany { field: Some(field), count: Some(count) }
        } else {
            Verdict::FinitelyMany { field: None, count: None }
        });
    }
    if m > 1 {
        return Ok(Verdict::InfinitelyMany(Reason::SeveralPointsOverInfiniteField(m)));
    }
    let count = field.rgmax_count();
    if !count.is_finite() {
        return Ok(Verdict::InfinitelyMany(Reason::BaseHasInfinitelyMany));
    }
    Ok(Verdict::FinitelyMany { field: Some(field), count: Some(count) })
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Field(field) => write!(f, "{field}"),
            BaseField::CharZero => f.write_str("char0"),
            BaseField::NotAbsolutelyAlgebraic { characteristic } => write!(f, "nonalg({characteristic})"),
            BaseField::AlgebraicallyClosed(ClosedField::ClosureOfPrime(p)) => write!(f, "closed({p})"),
            BaseField::AlgebraicallyClosed(ClosedField::Other) => f.write_str("closed"),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Algebraic(k) => write!(f, "alg({k})"),
            Generator::Transcendental => f.write_str("transc"),
        }
    }
}

impl fmt::Display for AffineDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Generator::to_string).collect();
        write!(f, "affine: base={}; gens={}; kind=", self.base, gens.join(","))?;
        match &self.kind {
            AlgebraKind::Domain => f.write_str("domain"),
            AlgebraKind::Field => f.write_str("field"),
            AlgebraKind::ReducedProduct(comps) => {
                let comps: Vec<String> = comps.iter().map(FieldDescriptor::to_string).collect();
                write!(f, "reduced({})", comps.join(" | "))
            }
        }
    }
}

impl FromStr for AffineDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        syntax::parse_affine(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str) -> FieldDescriptor {
        s.parse().unwrap()
    }

    fn affine(s: &str) -> AffineDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn domain_examples() {
        let v = decide_domain(&affine("affine: base=char=2; 1; gens=alg(4),alg(6); kind=domain")).unwrap();
        assert_eq!(
            v,
            Verdict::FinitelyMany {
                field: Some(FieldDescriptor::finite(2, 12).unwrap()),
                count: Some(ExtendedCount::Finite(2)),
            }
        );
        let v = decide_domain(&affine("affine: base=closed(2); gens=alg(5); kind=domain")).unwrap();
        assert_eq!(
            v,
            Verdict::FinitelyMany {
                field: Some(FieldDescriptor::algebraic_closure(2).unwrap()),
                count: Some(ExtendedCount::Finite(0)),
            }
        );
        let v = decide_domain(&affine("affine: base=char=3; 1; gens=transc; kind=domain")).unwrap();
        assert_eq!(v, Verdict::InfinitelyMany(Reason::TranscendentalGenerator(1)));
        let v = decide_domain(&affine("affine: base=char0; gens=alg(2); kind=domain")).unwrap();
        assert_eq!(v, Verdict::InfinitelyMany(Reason::CharacteristicZero));
        let v = decide_domain(&affine("affine: base=nonalg(5); gens=; kind=domain")).unwrap();
        assert_eq!(v, Verdict::InfinitelyMany(Reason::NotAbsolutelyAlgebraic));
        let v = decide_domain(&affine("affine: base=closed; gens=alg(2); kind=domain")).unwrap();
        assert_eq!(v, Verdict::InfinitelyMany(Reason::ClosedNotAbsolutelyAlgebraic));
    }

    #[test]
    fn field_extension_examples() {
        let v = decide_field_extension(&affine("affine: base=char=2; 1; rest=1; gens=alg(2); kind=field")).unwrap();
        assert_eq!(v, Verdict::InfinitelyMany(Reason::BaseHasInfinitelyMany));
        let v = decide_field_extension(&affine("affine: base=char=5; 1; gens=; kind=field")).unwrap();
        assert_eq!(
            v,
            Verdict::FinitelyMany {
                field: Some(FieldDescriptor::finite(5, 1).unwrap()),
                count: Some(ExtendedCount::Finite(0)),
            }
        );
        // uniform orders on every prime but 2; 2 capped at 3
        let v = decide_field_extension(&affine("affine: base=char=3; 2^3,5^0; rest=1; gens=alg(5),alg(49); kind=field"))
            .unwrap();
        assert!(v.is_infinitely_many());
    }

    #[test]
    fn wrong_kind_is_malformed() {
        let d = affine("affine: base=char=2; 1; gens=; kind=field");
        assert!(matches!(decide_domain(&d), Err(Error::Malformed(_))));
        let d = AffineDescriptor::new(BaseField::CharZero, vec![Generator::Algebraic(0)], AlgebraKind::Domain);
        assert!(matches!(decide_domain(&d), Err(Error::Malformed(_))));
    }

    #[test]
    fn reduced_product_examples() {
        let d = affine("affine: base=char=2; 1; gens=; kind=reduced(char=2; 2 | char=2; 2)");
        assert_eq!(decide_reduced_product(&d).unwrap(), Verdict::NecessaryConditionsHold);

        // E: 2^2 over infinitely many primes of infinite order; finite rgmax
        let e = "char=2; 2^2,3^0; rest=inf";
        let base = "char=2; 2,3^0; rest=inf";
        let d = affine(&format!("affine: base={base}; gens=; kind=reduced({e} | {e})"));
        assert_eq!(
            decide_reduced_product(&d).unwrap(),
            Verdict::Violated(Witness::EqualInfiniteComponents(1, 2))
        );
        let e2 = "char=2; 2,3^0; rest=inf";
        let d = affine(&format!("affine: base={base}; gens=; kind=reduced({e} | {e2})"));
        assert_eq!(decide_reduced_product(&d).unwrap(), Verdict::NecessaryConditionsHold);

        let d = affine("affine: base=char=2; 1; gens=; kind=reduced(char=2; 1; rest=inf | char=2; 2)");
        assert_eq!(
            decide_reduced_product(&d).unwrap(),
            Verdict::Violated(Witness::ComponentNotFiniteOverBase(1))
        );
        let d = affine("affine: base=char=2; 2; gens=; kind=reduced(char=2; 3 | char=2; 2)");
        assert_eq!(
            decide_reduced_product(&d).unwrap(),
            Verdict::Violated(Witness::ComponentNotOverBase(1))
        );
        let d = affine("affine: base=char=2; 1; rest=1; gens=; kind=reduced(char=2; 1; rest=1 | char=2; 2; rest=1)");
        assert_eq!(
            decide_reduced_product(&d).unwrap(),
            Verdict::Violated(Witness::ComponentInfinitelyMany(1))
        );
        let d = affine("affine: base=char=2; 1; gens=; kind=reduced(char=3; 1 | char=2; 2)");
        assert_eq!(decide_reduced_product(&d), Err(Error::MixedCharacteristics));
    }

    #[test]
    fn singleton_product_is_field_case() {
        let k = field("char=2; 2^2,3,5^inf");
        let base = field("char=2; 5^inf");
        let product = AffineDescriptor::new(BaseField::Field(base), vec![], AlgebraKind::ReducedProduct(vec![k.clone()]));
        let as_field = AffineDescriptor::new(BaseField::Field(k), vec![], AlgebraKind::Field);
        assert_eq!(
            decide_reduced_product(&product).unwrap(),
            decide_field_extension(&as_field).unwrap()
        );
    }

    #[test]
    fn variety_examples() {
        let f4 = BaseField::Field(FieldDescriptor::finite(2, 2).unwrap());
        assert!(decide_variety(&f4, ExtendedCount::Finite(3)).unwrap().is_finitely_many());
        let inf = field("char=2; 2^2,3^0; rest=inf");
        let base = BaseField::Field(inf.clone());
        assert_eq!(
            decide_variety(&base, ExtendedCount::Finite(1)).unwrap(),
            Verdict::FinitelyMany { field: Some(inf), count: Some(ExtendedCount::Finite(1)) }
        );
        assert_eq!(
            decide_variety(&base, ExtendedCount::Finite(2)).unwrap(),
            Verdict::InfinitelyMany(Reason::SeveralPointsOverInfiniteField(2))
        );
        assert_eq!(
            decide_variety(&base, ExtendedCount::CountablyInfinite).unwrap(),
            Verdict::InfinitelyMany(Reason::InfinitePointSet)
        );
        assert_eq!(decide_variety(&base, ExtendedCount::Finite(0)), Err(Error::ZeroPoints));
        let closed = BaseField::AlgebraicallyClosed(ClosedField::ClosureOfPrime(3));
        assert!(decide_variety(&closed, ExtendedCount::Finite(1)).unwrap().is_finitely_many());
        assert!(decide_variety(&closed, ExtendedCount::Finite(2)).unwrap().is_infinitely_many());
    }
}
