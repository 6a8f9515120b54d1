//! Row echelon forms over Euclidean backends: reduced row echelon form over a
//! field, Hermite normal form (positive pivots, entries above a pivot reduced
//! into `[0, pivot)`) over the integers.

use crate::matrix::Mat;

pub(crate) struct Echelon {
    /// `transform * input = form`
    pub form: Mat,
    pub transform: Mat,
    /// Pivot column of each nonzero row of `form`, in row order.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub(crate) fn echelon(m: &Mat) -> Echelon {
    let ring = m.ring().clone();
    let (k, n) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = Mat::identity(&ring, k);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == k {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..k)
                .filter(|&i| !ring.is_zero(h.get(i, c)))
                .min_by_key(|&i| ring.euclid_size(h.get(i, c)));
            let Some(p) = best else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..k {
                if ring.is_zero(h.get(i, c)) {
                    continue;
                }
                let (q, rem) = ring.div_rem(h.get(i, c), h.get(r, c));
                let nq = ring.neg(&q);
                h.add_row_multiple(i, r, &nq);
                u.add_row_multiple(i, r, &nq);
                if !ring.is_zero(&rem) {
                    clean = false;
                }
            }
            if clean {
                found = true;
                break;
            }
        }
        if !found {
            continue;
        }
        let unit = ring.canonical_unit(h.get(r, c));
        h.scale_row(r, &unit);
        u.scale_row(r, &unit);
        for i in 0..r {
            let (q, _) = ring.div_rem(h.get(i, c), h.get(r, c));
            let nq = ring.neg(&q);
            h.add_row_multiple(i, r, &nq);
            u.add_row_multiple(i, r, &nq);
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { form: h, transform: u, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn hermite_of_gcd_column() {
        let z = Ring::integers();
        let m = Mat::from_ints(&z, &[&[6], &[10]]);
        let e = echelon(&m);
        assert_eq!(e.form, Mat::from_ints(&z, &[&[2], &[0]]));
        assert_eq!(e.transform.mul(&m).unwrap(), e.form);
        assert_eq!(e.pivots, vec![0]);
    }

    #[test]
    fn rref_over_rationals() {
        let q = Ring::rationals();
        let m = Mat::from_ints(&q, &[&[2, 4], &[1, 3]]);
        let e = echelon(&m);
        assert_eq!(e.form, Mat::identity(&q, 2));
        assert_eq!(e.transform.mul(&m).unwrap(), e.form);
    }

    #[test]
    fn hermite_reduces_above_pivots() {
        let z = Ring::integers();
        let m = Mat::from_ints(&z, &[&[1, 5, 3], &[0, 3, -7]]);
        let e = echelon(&m);
        assert_eq!(e.transform.mul(&m).unwrap(), e.form);
        assert_eq!(e.pivots, vec![0, 1]);
        // entry above the second pivot lies in [0, 3)
        let above = e.form.get(0, 1);
        assert!(matches!(above, crate::ring::Elem::Int(x) if *x >= 0.into() && *x < 3.into()));
    }
}
