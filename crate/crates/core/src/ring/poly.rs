//! Sparse multivariate polynomials over `Q` or `F_p`.
//!
//! Terms are kept sorted in decreasing order with respect to the ring's
//! monomial order and never carry a zero coefficient, so structural equality
//! is polynomial equality.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Exponents = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffField {
    Rationals,
    PrimeField(u64),
}

impl CoeffField {
    pub fn normalize(&self, c: BigRational) -> BigRational {
        match self {
            CoeffField::Rationals => c,
            CoeffField::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p).expect("denominator divisible by the characteristic");
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn from_int(&self, n: BigInt) -> BigRational {
        self.normalize(BigRational::from_integer(n))
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.normalize(-a)
    }

    pub fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match self {
            CoeffField::Rationals => Some(a.recip()),
            CoeffField::PrimeField(p) => {
                let p = BigInt::from(*p);
                mod_inverse(&a.numer().mod_floor(&p), &p).map(BigRational::from_integer)
            }
        }
    }
}

pub(crate) fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(p);
    if g.gcd.is_one() || (-&g.gcd).is_one() {
        let x = if g.gcd.is_negative() { -g.x } else { g.x };
        Some(x.mod_floor(p))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub coeffs: CoeffField,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub(crate) terms: Vec<(Exponents, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Exponents, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Exponents, BigRational)> {
        self.terms.first()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }
}

impl PolyRing {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn constant(&self, c: BigRational) -> Poly {
        let c = self.coeffs.normalize(c);
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(vec![0; self.nvars()], c)] }
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(BigRational::one())
    }

    pub fn monomial(&self, exps: Exponents, c: BigRational) -> Poly {
        let c = self.coeffs.normalize(c);
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(exps, c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e, BigRational::one())
    }

    /// Builds a polynomial from unsorted terms, merging duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Exponents, BigRational)>) -> Poly {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Exponents, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = self.coeffs.add(lc, &c),
                _ => out.push((e, self.coeffs.normalize(c))),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    fn merge(&self, a: &Poly, b: &Poly, negate_b: bool) -> Poly {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ea, ca) = &a.terms[i];
            let (eb, cb) = &b.terms[j];
            match self.order.cmp(ea, eb) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_b { self.coeffs.neg(cb) } else { cb.clone() };
                    out.push((eb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { self.coeffs.sub(ca, cb) } else { self.coeffs.add(ca, cb) };
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        for (e, c) in &b.terms[j..] {
            let c = if negate_b { self.coeffs.neg(c) } else { c.clone() };
            out.push((e.clone(), c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly { terms: a.terms.iter().map(|(e, c)| (e.clone(), self.coeffs.neg(c))).collect() }
    }

    /// Multiplies by the single term `c * x^exps`; the order is preserved
    /// because monomial orders are compatible with multiplication.
    pub fn mul_term(&self, a: &Poly, exps: &[u32], c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(e, ac)| {
                    let ne: Exponents = e.iter().zip(exps).map(|(x, y)| x + y).collect();
                    (ne, self.coeffs.mul(ac, c))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for (e, c) in &b.terms {
            acc = self.add(&acc, &self.mul_term(a, e, c));
        }
        acc
    }

    pub fn scale(&self, a: &Poly, c: &BigRational) -> Poly {
        self.mul_term(a, &vec![0; self.nvars()], c)
    }

    /// Applies `x_i -> s_i * x_i` with `s_i = -1` where `flip[i]` is set.
    pub fn flip_signs(&self, a: &Poly, flip: &[bool]) -> Poly {
        let terms = a
            .terms
            .iter()
            .map(|(e, c)| {
                let odd = e.iter().zip(flip).filter(|(x, f)| **f && **x % 2 == 1).count();
                let c = if odd % 2 == 1 { self.coeffs.neg(c) } else { c.clone() };
                (e.clone(), c)
            })
            .collect();
        Poly { terms }
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn exp_sub(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> PolyRing {
        PolyRing {
            coeffs: CoeffField::Rationals,
            vars: vec!["x".into(), "y".into()],
            order: MonomialOrder::DegRevLex,
        }
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > x*y > y^2 in degrevlex with x > y
        assert_eq!(o.cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 3], &[2, 0]), Ordering::Greater);
    }

    #[test]
    fn product_of_variables() {
        let r = qxy();
        let p = r.mul(&r.var(0), &r.var(1));
        assert_eq!(p.terms, vec![(vec![1, 1], BigRational::one())]);
        let s = r.sub(&p, &p);
        assert!(s.is_zero());
    }

    #[test]
    fn prime_field_coefficients_wrap() {
        let f = CoeffField::PrimeField(5);
        let a = f.from_int(BigInt::from(7));
        assert_eq!(a, BigRational::from_integer(BigInt::from(2)));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), BigRational::one());
        assert_eq!(f.normalize(BigRational::new(1.into(), 2.into())), BigRational::from_integer(3.into()));
    }
}
