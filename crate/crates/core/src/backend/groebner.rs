//! Buchberger's algorithm for submodules of `R^{1×n}`, `R = k[x_1..x_m]`,
//! with a position-over-term order (lower column index is larger).
//!
//! Every basis element remembers its expression in the input rows, and every
//! processed S-pair leaves behind the syzygy its reduction witnessed. The
//! latter generate the syzygies of the final basis.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_rational::BigRational;

use crate::ring::poly::{divides, exp_lcm, exp_sub, Exponents, Poly, PolyRing};

pub(crate) type Vector = Vec<Poly>;

/// Sparse combination of basis elements.
type Combo = Vec<(usize, Poly)>;

#[derive(Clone, Debug)]
struct Lead {
    pos: usize,
    exps: Exponents,
    coeff: BigRational,
}

fn lead(v: &[Poly]) -> Option<Lead> {
    v.iter().enumerate().find(|(_, p)| !p.is_zero()).map(|(pos, p)| {
        let (e, c) = p.leading().unwrap();
        Lead { pos, exps: e.clone(), coeff: c.clone() }
    })
}

/// Order on module terms: smaller position first, then the monomial order.
fn cmp_terms(ring: &PolyRing, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.order.cmp(a.1, b.1))
}

pub(crate) fn vec_sub(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Vector {
    a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect()
}

pub(crate) fn vec_add(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Vector {
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

fn vec_mul_term(ring: &PolyRing, v: &[Poly], exps: &[u32], c: &BigRational) -> Vector {
    v.iter().map(|p| ring.mul_term(p, exps, c)).collect()
}

pub(crate) fn vec_scale(ring: &PolyRing, v: &[Poly], p: &Poly) -> Vector {
    v.iter().map(|x| ring.mul(x, p)).collect()
}

fn combo_add_term(ring: &PolyRing, combo: &mut Combo, idx: usize, exps: &[u32], c: &BigRational) {
    let t = ring.monomial(exps.to_vec(), c.clone());
    if let Some(entry) = combo.iter_mut().find(|(i, _)| *i == idx) {
        entry.1 = ring.add(&entry.1, &t);
    } else {
        combo.push((idx, t));
    }
}

pub(crate) struct Reduction {
    pub remainder: Vector,
    /// `input = remainder + Σ quotient_i * g_i`
    pub quotient: Vec<(usize, Poly)>,
}

/// Reduces `v` by `basis`. With `full`, irreducible leading terms are moved to
/// the remainder and reduction continues on the rest (a normal form when the
/// basis is a reduced Gröbner basis); otherwise reduction stops at the first
/// irreducible leading term.
pub(crate) fn reduce(ring: &PolyRing, basis: &[Vector], v: &[Poly], full: bool) -> Reduction {
    let leads: Vec<Option<Lead>> = basis.iter().map(|g| lead(g)).collect();
    let mut rest: Vector = v.to_vec();
    let mut remainder: Vector = vec![Poly::zero(); v.len()];
    let mut quotient: Combo = Vec::new();
    while let Some(lt) = lead(&rest) {
        let hit = leads.iter().enumerate().find_map(|(i, l)| {
            l.as_ref().filter(|l| l.pos == lt.pos && divides(&l.exps, &lt.exps)).map(|l| (i, l))
        });
        match hit {
            Some((i, l)) => {
                let shift = exp_sub(&lt.exps, &l.exps);
                let c = ring.coeffs.mul(&lt.coeff, &ring.coeffs.inv(&l.coeff).unwrap());
                rest = vec_sub(ring, &rest, &vec_mul_term(ring, &basis[i], &shift, &c));
                combo_add_term(ring, &mut quotient, i, &shift, &c);
            }
            None => {
                if !full {
                    remainder = vec_add(ring, &remainder, &rest);
                    break;
                }
                let t = ring.monomial(lt.exps.clone(), lt.coeff.clone());
                remainder[lt.pos] = ring.add(&remainder[lt.pos], &t);
                rest[lt.pos] = ring.sub(&rest[lt.pos], &t);
            }
        }
    }
    quotient.retain(|(_, p)| !p.is_zero());
    Reduction { remainder, quotient }
}

pub(crate) struct GroebnerRun {
    /// Reduced Gröbner basis.
    pub basis: Vec<Vector>,
    /// `basis[i] = Σ_j transform[i][j] * input[j]`
    pub transform: Vec<Vector>,
    /// Generators of the syzygies of the input rows.
    pub syzygies: Vec<Vector>,
}

fn dense(ring: &PolyRing, combo: &[(usize, Poly)], len: usize) -> Vector {
    let mut out = vec![Poly::zero(); len];
    for (i, p) in combo {
        out[*i] = ring.add(&out[*i], p);
    }
    out
}

fn combine_reps(ring: &PolyRing, reps: &[Vector], combo: &[(usize, Poly)], k: usize) -> Vector {
    let mut out = vec![Poly::zero(); k];
    for (i, p) in combo {
        out = vec_add(ring, &out, &vec_scale(ring, &reps[*i], p));
    }
    out
}

pub(crate) fn groebner(ring: &PolyRing, input: &[Vector], ncols: usize) -> GroebnerRun {
    let k = input.len();
    let mut g: Vec<Vector> = Vec::new();
    let mut reps: Vec<Vector> = Vec::new();
    for (j, row) in input.iter().enumerate() {
        if row.iter().any(|p| !p.is_zero()) {
            g.push(row.clone());
            let mut r = vec![Poly::zero(); k];
            r[j] = ring.one();
            reps.push(r);
        }
    }
    let mut leads: Vec<Lead> = g.iter().map(|v| lead(v).unwrap()).collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            if leads[i].pos == leads[j].pos {
                pending.push((i, j));
                pending_set.insert((i, j));
            }
        }
    }
    // syzygies over the (growing) basis, as sparse combos
    let mut g_syz: Vec<Combo> = Vec::new();

    while !pending.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                let (i, j) = pending[a];
                let (p, q) = pending[b];
                let la = exp_lcm(&leads[i].exps, &leads[j].exps);
                let lb = exp_lcm(&leads[p].exps, &leads[q].exps);
                cmp_terms(ring, (leads[i].pos, &la), (leads[p].pos, &lb))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(best);
        pending_set.remove(&(i, j));

        let l = exp_lcm(&leads[i].exps, &leads[j].exps);
        let chain = (0..g.len()).any(|m| {
            m != i
                && m != j
                && leads[m].pos == leads[i].pos
                && divides(&leads[m].exps, &l)
                && !pending_set.contains(&(i.min(m), i.max(m)))
                && !pending_set.contains(&(j.min(m), j.max(m)))
        });
        if chain {
            continue;
        }

        let si = exp_sub(&l, &leads[i].exps);
        let sj = exp_sub(&l, &leads[j].exps);
        let ci = ring.coeffs.inv(&leads[i].coeff).unwrap();
        let cj = ring.coeffs.inv(&leads[j].coeff).unwrap();
        let s = vec_sub(ring, &vec_mul_term(ring, &g[i], &si, &ci), &vec_mul_term(ring, &g[j], &sj, &cj));
        let red = reduce(ring, &g, &s, false);

        // s - Σ q g = remainder
        let mut syz: Combo = vec![(i, ring.monomial(si.clone(), ci.clone()))];
        combo_add_term(ring, &mut syz, j, &sj, &ring.coeffs.neg(&cj));
        for (idx, q) in &red.quotient {
            let neg = ring.neg(q);
            if let Some(e) = syz.iter_mut().find(|(x, _)| x == idx) {
                e.1 = ring.add(&e.1, &neg);
            } else {
                syz.push((*idx, neg));
            }
        }

        if red.remainder.iter().any(|p| !p.is_zero()) {
            let new_idx = g.len();
            // rep(new) = rep(s) - Σ q rep(g)
            let mut combo: Combo = vec![(i, ring.monomial(si.clone(), ci.clone())), (j, ring.monomial(sj.clone(), ring.coeffs.neg(&cj)))];
            for (idx, q) in &red.quotient {
                combo.push((*idx, ring.neg(q)));
            }
            let rep = combine_reps(ring, &reps, &combo, k);
            syz.push((new_idx, ring.neg(&ring.one())));
            let nl = lead(&red.remainder).unwrap();
            for m in 0..g.len() {
                if leads[m].pos == nl.pos {
                    pending.push((m, new_idx));
                    pending_set.insert((m, new_idx));
                }
            }
            g.push(red.remainder);
            reps.push(rep);
            leads.push(nl);
        }
        syz.retain(|(_, p)| !p.is_zero());
        if !syz.is_empty() {
            g_syz.push(syz);
        }
    }

    // syzygies of the input: {s * reps} ∪ rows of (I - D * reps)
    let mut syzygies: Vec<Vector> = Vec::new();
    for s in &g_syz {
        let row = combine_reps(ring, &reps, s, k);
        if row.iter().any(|p| !p.is_zero()) {
            syzygies.push(row);
        }
    }
    for (j, row) in input.iter().enumerate() {
        let red = reduce(ring, &g, row, false);
        debug_assert!(red.remainder.iter().all(|p| p.is_zero()));
        let mut v = combine_reps(ring, &reps, &red.quotient, k);
        v = v.iter().map(|p| ring.neg(p)).collect();
        v[j] = ring.add(&v[j], &ring.one());
        if v.iter().any(|p| !p.is_zero()) {
            syzygies.push(v);
        }
    }
    dedup_rows(&mut syzygies);

    let (basis, transform) = reduce_basis(ring, g, reps, k);
    debug_assert!(basis.iter().all(|b| b.len() == ncols));
    GroebnerRun { basis, transform, syzygies }
}

fn dedup_rows(rows: &mut Vec<Vector>) {
    let mut seen = HashSet::new();
    rows.retain(|r| seen.insert(r.clone()));
}

/// Minimalizes and inter-reduces a Gröbner basis, carrying representations.
fn reduce_basis(ring: &PolyRing, g: Vec<Vector>, reps: Vec<Vector>, k: usize) -> (Vec<Vector>, Vec<Vector>) {
    let leads: Vec<Lead> = g.iter().map(|v| lead(v).unwrap()).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..g.len() {
        let redundant = (0..g.len()).any(|j| {
            j != i
                && leads[j].pos == leads[i].pos
                && divides(&leads[j].exps, &leads[i].exps)
                && (leads[j].exps != leads[i].exps || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut basis: Vec<Vector> = keep.iter().map(|&i| g[i].clone()).collect();
    let mut trans: Vec<Vector> = keep.iter().map(|&i| reps[i].clone()).collect();
    // make monic
    for idx in 0..basis.len() {
        let l = lead(&basis[idx]).unwrap();
        let inv = ring.coeffs.inv(&l.coeff).unwrap();
        let c = ring.constant(inv);
        basis[idx] = vec_scale(ring, &basis[idx], &c);
        trans[idx] = vec_scale(ring, &trans[idx], &c);
    }
    // tail-reduce each element by the others
    for idx in 0..basis.len() {
        let others: Vec<Vector> =
            basis.iter().enumerate().map(|(j, b)| if j == idx { vec![Poly::zero(); b.len()] } else { b.clone() }).collect();
        let red = reduce(ring, &others, &basis[idx], true);
        let sub = combine_reps(ring, &trans, &red.quotient, k);
        trans[idx] = vec_sub(ring, &trans[idx], &sub);
        basis[idx] = red.remainder;
    }
    // order by leading term, largest first
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| {
        let la = lead(&basis[a]).unwrap();
        let lb = lead(&basis[b]).unwrap();
        cmp_terms(ring, (lb.pos, &lb.exps), (la.pos, &la.exps))
    });
    let basis = order.iter().map(|&i| basis[i].clone()).collect();
    let trans = order.iter().map(|&i| trans[i].clone()).collect();
    (basis, trans)
}

/// Reduction with quotients expressed densely against `basis`.
pub(crate) fn reduce_dense(ring: &PolyRing, basis: &[Vector], v: &[Poly], full: bool) -> (Vector, Vector) {
    let red = reduce(ring, basis, v, full);
    (red.remainder, dense(ring, &red.quotient, basis.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoeffField, MonomialOrder};

    fn qxy() -> PolyRing {
        PolyRing { coeffs: CoeffField::Rationals, vars: vec!["x".into(), "y".into()], order: MonomialOrder::DegRevLex }
    }

    #[test]
    fn koszul_syzygy() {
        let r = qxy();
        let run = groebner(&r, &[vec![r.var(0)], vec![r.var(1)]], 1);
        assert_eq!(run.basis.len(), 2);
        assert_eq!(run.syzygies.len(), 1);
        let s = &run.syzygies[0];
        // s0*x + s1*y = 0
        let check = r.add(&r.mul(&s[0], &r.var(0)), &r.mul(&s[1], &r.var(1)));
        assert!(check.is_zero());
    }

    #[test]
    fn twisted_cubic_like_ideal() {
        // <x^2 - y, x*y - 1>: contains y^2 - x
        let r = qxy();
        let f = r.sub(&r.mul(&r.var(0), &r.var(0)), &r.var(1));
        let g = r.sub(&r.mul(&r.var(0), &r.var(1)), &r.one());
        let run = groebner(&r, &[vec![f.clone()], vec![g.clone()]], 1);
        let target = r.sub(&r.mul(&r.var(1), &r.var(1)), &r.var(0));
        let red = reduce(&r, &run.basis, &[target], true);
        assert!(red.remainder[0].is_zero());
        // transform certificate
        for (b, t) in run.basis.iter().zip(&run.transform) {
            let lhs = r.add(&r.mul(&t[0], &f), &r.mul(&t[1], &g));
            assert_eq!(lhs, b[0]);
        }
    }
}
