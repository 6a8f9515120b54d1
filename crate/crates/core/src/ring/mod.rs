//! Computable rings and their elements.
//!
//! A [`Ring`] is a cheap-to-clone handle describing one of the supported
//! backends. Elements are plain values ([`Elem`]) interpreted by the ring
//! that owns them; every arithmetic entry point goes through the ring.

mod literal;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use poly::{CoeffField, MonomialOrder, Poly, PolyRing};

use crate::backend::Basis;
use crate::error::{Error, Result};
use crate::matrix::Mat;

/// An exact ring element. Prime-field residues are stored as `Int` in `[0, p)`;
/// residue-class elements are stored as normalized base-ring representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    Identity,
    /// `x_i -> -x_i` for every flagged variable of a polynomial ring.
    SignFlip(Vec<bool>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Rationals,
    PrimeField(u64),
    Integers,
    Poly(Arc<PolyRing>),
    Residue(Arc<ResidueRing>),
}

pub struct ResidueRing {
    pub base: Ring,
    /// One column; each row is an ideal generator.
    pub ideal: Mat,
    pub(crate) ideal_basis: Basis,
}

impl PartialEq for ResidueRing {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.ideal == other.ideal
    }
}

impl Eq for ResidueRing {}

impl fmt::Debug for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ResidueRing").field("base", &self.base).field("ideal", &self.ideal).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    backend: Backend,
    involution: Involution,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn integers() -> Ring {
        Ring { backend: Backend::Integers, involution: Involution::Identity }
    }

    pub fn rationals() -> Ring {
        Ring { backend: Backend::Rationals, involution: Involution::Identity }
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(Ring { backend: Backend::PrimeField(p), involution: Involution::Identity })
    }

    pub fn polynomial(coeffs: CoeffField, vars: &[&str], order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Invalid("polynomial ring needs at least one variable".into()));
        }
        if let CoeffField::PrimeField(p) = coeffs {
            if !is_prime(p) {
                return Err(Error::Invalid(format!("{p} is not prime")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || vars[..i].contains(v) {
                return Err(Error::Invalid(format!("bad variable name {v:?}")));
            }
        }
        let pr = PolyRing { coeffs, vars: vars.iter().map(|s| s.to_string()).collect(), order };
        Ok(Ring { backend: Backend::Poly(Arc::new(pr)), involution: Involution::Identity })
    }

    /// `Q[vars]` with degrevlex.
    pub fn qpoly(vars: &[&str]) -> Result<Ring> {
        Ring::polynomial(CoeffField::Rationals, vars, MonomialOrder::DegRevLex)
    }

    /// The residue class ring `base / <generators>`.
    pub fn residue_class_ring(base: &Ring, generators: &[Elem]) -> Result<Ring> {
        if matches!(base.backend, Backend::Residue(_)) {
            return Err(Error::Unsupported("nested residue class rings".into()));
        }
        let ideal = Mat::from_rows(base, generators.iter().map(|g| vec![g.clone()]).collect(), 1)?;
        let ideal_basis = Basis::compute(&ideal)?;
        let rr = ResidueRing { base: base.clone(), ideal, ideal_basis };
        Ok(Ring { backend: Backend::Residue(Arc::new(rr)), involution: base.involution.clone() })
    }

    pub fn with_involution(&self, inv: Involution) -> Result<Ring> {
        if let Involution::SignFlip(flags) = &inv {
            match &self.backend {
                Backend::Poly(p) if p.nvars() == flags.len() => {}
                _ => return Err(Error::Invalid("sign-flip involution needs a matching polynomial ring".into())),
            }
        }
        Ok(Ring { backend: self.backend.clone(), involution: inv })
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn is_commutative(&self) -> bool {
        true
    }

    pub fn is_field(&self) -> bool {
        matches!(self.backend, Backend::Rationals | Backend::PrimeField(_))
    }

    /// Integers, fields, and residue rings of those: the rings for which
    /// invariant factors are available.
    pub fn is_pir(&self) -> bool {
        match &self.backend {
            Backend::Rationals | Backend::PrimeField(_) | Backend::Integers => true,
            Backend::Residue(r) => r.base.is_pir(),
            Backend::Poly(_) => false,
        }
    }

    pub fn residue(&self) -> Option<&ResidueRing> {
        match &self.backend {
            Backend::Residue(r) => Some(r),
            _ => None,
        }
    }

    pub fn poly_ring(&self) -> Option<&PolyRing> {
        match &self.backend {
            Backend::Poly(p) => Some(p),
            Backend::Residue(r) => r.base.poly_ring(),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match &self.backend {
            Backend::Integers | Backend::PrimeField(_) => Elem::Int(BigInt::zero()),
            Backend::Rationals => Elem::Rat(BigRational::zero()),
            Backend::Poly(_) => Elem::Poly(Poly::zero()),
            Backend::Residue(r) => r.base.zero(),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_bigint(BigInt::one())
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Elem {
        match &self.backend {
            Backend::Integers => Elem::Int(n),
            Backend::PrimeField(p) => Elem::Int(n.mod_floor(&BigInt::from(*p))),
            Backend::Rationals => Elem::Rat(BigRational::from_integer(n)),
            Backend::Poly(pr) => Elem::Poly(pr.constant(BigRational::from_integer(n))),
            Backend::Residue(r) => self.normalize(r.base.from_bigint(n)),
        }
    }

    /// Canonical representative; identity except for residue class rings.
    pub fn normalize(&self, a: Elem) -> Elem {
        match &self.backend {
            Backend::Residue(r) => {
                let m = Mat::from_rows(&r.base, vec![vec![a]], 1).expect("1x1");
                let red = r.ideal_basis.reduce_full(&m);
                red.get(0, 0).clone()
            }
            _ => a,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.backend, a, b) {
            (Backend::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Backend::PrimeField(p), Elem::Int(x), Elem::Int(y)) => Elem::Int((x + y).mod_floor(&BigInt::from(*p))),
            (Backend::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Backend::Poly(pr), Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(pr.add(x, y)),
            (Backend::Residue(r), _, _) => self.normalize(r.base.add(a, b)),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.backend, a) {
            (Backend::Integers, Elem::Int(x)) => Elem::Int(-x),
            (Backend::PrimeField(p), Elem::Int(x)) => Elem::Int((-x).mod_floor(&BigInt::from(*p))),
            (Backend::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Backend::Poly(pr), Elem::Poly(x)) => Elem::Poly(pr.neg(x)),
            (Backend::Residue(r), _) => self.normalize(r.base.neg(a)),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.backend, a, b) {
            (Backend::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x - y),
            (Backend::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x - y),
            (Backend::Poly(pr), Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(pr.sub(x, y)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.backend, a, b) {
            (Backend::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Backend::PrimeField(p), Elem::Int(x), Elem::Int(y)) => Elem::Int((x * y).mod_floor(&BigInt::from(*p))),
            (Backend::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Backend::Poly(pr), Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(pr.mul(x, y)),
            (Backend::Residue(r), _, _) => self.normalize(r.base.mul(a, b)),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Rat(x) => x.is_zero(),
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn eq(&self, a: &Elem, b: &Elem) -> bool {
        a == b
    }

    /// Two-sided inverse, if `a` is a unit.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (&self.backend, a) {
            (Backend::Integers, Elem::Int(x)) => {
                if x.abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            (Backend::PrimeField(p), Elem::Int(x)) => {
                poly::mod_inverse(x, &BigInt::from(*p)).map(Elem::Int)
            }
            (Backend::Rationals, Elem::Rat(x)) => (!x.is_zero()).then(|| Elem::Rat(x.recip())),
            (Backend::Poly(pr), Elem::Poly(x)) => {
                if x.is_constant() {
                    pr.coeffs.inv(&x.terms[0].1).map(|c| Elem::Poly(pr.constant(c)))
                } else {
                    None
                }
            }
            (Backend::Residue(r), _) => {
                if let Some(inv) = r.base.inverse(a) {
                    return Some(self.normalize(inv));
                }
                // a*x + i = 1 for some ideal element i
                let one = Mat::from_rows(&r.base, vec![vec![r.base.one()]], 1).ok()?;
                let am = Mat::from_rows(&r.base, vec![vec![a.clone()]], 1).ok()?;
                let x = crate::procedures::right_divide(&one, &am, Some(&r.ideal)).ok()??;
                Some(self.normalize(x.get(0, 0).clone()))
            }
            _ => None,
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.inverse(a).is_some()
    }

    pub fn theta(&self, a: &Elem) -> Elem {
        match (&self.involution, a) {
            (Involution::Identity, _) => a.clone(),
            (Involution::SignFlip(flags), Elem::Poly(p)) => {
                let pr = self.poly_ring().expect("sign flip on polynomial ring");
                self.normalize(Elem::Poly(pr.flip_signs(p, flags)))
            }
            (Involution::SignFlip(_), _) => a.clone(),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        literal::parse(self, s)
    }

    pub fn format_elem(&self, a: &Elem) -> String {
        literal::format(self, a)
    }

    /// Euclidean division `a = q*b + r` for integers (remainder in `[0, |b|)`) and
    /// fields (remainder zero). Used by Hermite and Smith normal forms.
    pub(crate) fn div_rem(&self, a: &Elem, b: &Elem) -> (Elem, Elem) {
        match (&self.backend, a, b) {
            (Backend::Integers, Elem::Int(x), Elem::Int(y)) => {
                let (q, r) = if y.is_negative() {
                    let (q, r) = x.div_mod_floor(&-y);
                    (-q, r)
                } else {
                    x.div_mod_floor(y)
                };
                (Elem::Int(q), Elem::Int(r))
            }
            _ if self.is_field() => {
                let inv = self.inverse(b).expect("division by zero");
                (self.mul(a, &inv), self.zero())
            }
            _ => panic!("no Euclidean division over {self}"),
        }
    }

    /// Euclidean size: `|a|` over the integers, 0/1 over fields.
    pub(crate) fn euclid_size(&self, a: &Elem) -> BigInt {
        match a {
            Elem::Int(x) if matches!(self.backend, Backend::Integers) => x.abs(),
            _ => {
                if self.is_zero(a) {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// Unit `u` making `u*a` canonical (positive integer, monic field element).
    pub(crate) fn canonical_unit(&self, a: &Elem) -> Elem {
        match (&self.backend, a) {
            (Backend::Integers, Elem::Int(x)) if x.is_negative() => self.from_int(-1),
            _ if self.is_field() && !self.is_zero(a) => self.inverse(a).unwrap(),
            _ => self.one(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.backend {
            Backend::Integers => write!(f, "Z"),
            Backend::Rationals => write!(f, "Q"),
            Backend::PrimeField(p) => write!(f, "GF({p})"),
            Backend::Poly(pr) => {
                let k = match pr.coeffs {
                    CoeffField::Rationals => "Q".to_string(),
                    CoeffField::PrimeField(p) => format!("GF({p})"),
                };
                write!(f, "{k}[{}]", pr.vars.join(","))
            }
            Backend::Residue(r) => {
                let gens: Vec<String> = (0..r.ideal.rows()).map(|i| r.base.format_elem(r.ideal.get(i, 0))).collect();
                write!(f, "{}/<{}>", r.base, gens.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic_reduces() {
        let z6 = Ring::residue_class_ring(&Ring::integers(), &[Elem::Int(6.into())]).unwrap();
        let a = z6.from_int(9);
        assert_eq!(a, Elem::Int(3.into()));
        assert!(z6.is_unit(&z6.from_int(5)));
        assert!(!z6.is_unit(&z6.from_int(3)));
        assert_eq!(z6.inverse(&z6.from_int(5)), Some(z6.from_int(5)));
        assert!(z6.is_zero(&z6.mul(&z6.from_int(2), &z6.from_int(3))));
    }

    #[test]
    fn prime_must_be_prime() {
        assert!(Ring::prime_field(7).is_ok());
        assert!(Ring::prime_field(8).is_err());
    }

    #[test]
    fn nested_residue_rejected() {
        let z6 = Ring::residue_class_ring(&Ring::integers(), &[Elem::Int(6.into())]).unwrap();
        assert!(Ring::residue_class_ring(&z6, &[z6.from_int(2)]).is_err());
    }

    #[test]
    fn integer_division_remainder_is_nonnegative() {
        let z = Ring::integers();
        let (q, r) = z.div_rem(&z.from_int(-7), &z.from_int(3));
        assert_eq!((q, r), (z.from_int(-3), z.from_int(2)));
        let (q, r) = z.div_rem(&z.from_int(7), &z.from_int(-3));
        assert_eq!((q, r), (z.from_int(-2), z.from_int(1)));
    }
}
