//! Element literals: `-?[0-9]+`, `a/b`, and polynomial sums such as
//! `3*x^2*y-x+1/2` written in the ring's variable names.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Backend, Elem, Ring};
use crate::error::{Error, Result};

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad number literal {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub(super) fn parse(ring: &Ring, s: &str) -> Result<Elem> {
    let s = s.trim();
    match ring.backend() {
        Backend::Integers => {
            let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
            Ok(Elem::Int(n))
        }
        Backend::PrimeField(_) => {
            let q = parse_rational(s)?;
            let Backend::PrimeField(p) = ring.backend() else { unreachable!() };
            let f = super::CoeffField::PrimeField(*p);
            Ok(Elem::Int(f.normalize(q).to_integer()))
        }
        Backend::Rationals => Ok(Elem::Rat(parse_rational(s)?)),
        Backend::Poly(pr) => parse_poly(pr, s).map(Elem::Poly),
        Backend::Residue(r) => Ok(ring.normalize(parse(&r.base, s)?)),
    }
}

fn parse_poly(pr: &super::PolyRing, s: &str) -> Result<super::Poly> {
    let err = |m: &str| Error::Parse(format!("{m} in polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty literal"));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        let is_sign = ch == '+' || ch == '-';
        if is_sign && cur.is_empty() {
            if prev.is_some_and(|p| p == '+' || p == '-') {
                return Err(err("repeated sign"));
            }
            neg ^= ch == '-';
        } else if is_sign && !matches!(prev, Some('^' | '/' | '*')) {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err("dangling sign"));
    }
    terms.push((neg, cur));

    let n = pr.nvars();
    let mut out = Vec::new();
    for (neg, t) in terms {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; n];
        for factor in t.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                coeff *= parse_rational(factor)?;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let idx = pr.vars.iter().position(|v| v == name).ok_or_else(|| err(&format!("unknown variable {name:?}")))?;
            exps[idx] += e;
        }
        if neg {
            coeff = -coeff;
        }
        out.push((exps, coeff));
    }
    Ok(pr.from_terms(out))
}

pub(super) fn format(ring: &Ring, a: &Elem) -> String {
    match a {
        Elem::Int(x) => x.to_string(),
        Elem::Rat(x) => x.to_string(),
        Elem::Poly(p) => {
            let pr = ring.poly_ring().expect("polynomial element outside a polynomial ring");
            if p.is_zero() {
                return "0".into();
            }
            let mut s = String::new();
            for (i, (e, c)) in p.terms().iter().enumerate() {
                let mono: Vec<String> = e
                    .iter()
                    .zip(&pr.vars)
                    .filter(|(x, _)| **x > 0)
                    .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                    .collect();
                let negative = c.is_negative();
                let mag = c.abs();
                if i > 0 {
                    s.push(if negative { '-' } else { '+' });
                } else if negative {
                    s.push('-');
                }
                if mono.is_empty() {
                    s.push_str(&mag.to_string());
                } else {
                    if !mag.is_one() {
                        s.push_str(&mag.to_string());
                        s.push('*');
                    }
                    s.push_str(&mono.join("*"));
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::Ring;

    #[test]
    fn polynomial_round_trip() {
        let r = Ring::qpoly(&["x", "y"]).unwrap();
        for lit in ["x*y", "x^2*y-3*x+1/2", "-x", "0", "-2/3*y^4+x", "7"] {
            let e = r.parse_elem(lit).unwrap();
            let printed = r.format_elem(&e);
            assert_eq!(r.parse_elem(&printed).unwrap(), e, "{lit} -> {printed}");
        }
        assert_eq!(r.format_elem(&r.parse_elem("y + x").unwrap()), "x+y");
        assert_eq!(r.format_elem(&r.parse_elem("x - x").unwrap()), "0");
        assert_eq!(r.format_elem(&r.parse_elem("2 * x * x").unwrap()), "2*x^2");
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Ring::rationals();
        assert_eq!(q.format_elem(&q.parse_elem("4/-6").unwrap()), "-2/3");
        assert!(q.parse_elem("1/0").is_err());
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::qpoly(&["x"]).unwrap();
        assert!(r.parse_elem("z").is_err());
        assert!(r.parse_elem("x+").is_err());
        assert!(Ring::integers().parse_elem("1.5").is_err());
    }
}
