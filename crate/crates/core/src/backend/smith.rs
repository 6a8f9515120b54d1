//! Smith normal form over the integers and over fields.

use super::SmithResult;
use crate::matrix::Mat;

pub(crate) fn smith(m: &Mat) -> SmithResult {
    let ring = m.ring().clone();
    let (k, n) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Mat::identity(&ring, k);
    let mut v = Mat::identity(&ring, n);
    let mut diag = Vec::new();
    for t in 0..k.min(n) {
        // smallest nonzero entry of the trailing block
        let pick = |a: &Mat| {
            (t..k)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !ring.is_zero(a.get(i, j)))
                .min_by_key(|&(i, j)| ring.euclid_size(a.get(i, j)))
        };
        let Some((pi, pj)) = pick(&a) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..k {
                if ring.is_zero(a.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.get(i, t), a.get(t, t));
                let nq = ring.neg(&q);
                a.add_row_multiple(i, t, &nq);
                u.add_row_multiple(i, t, &nq);
                dirty |= !ring.is_zero(&r);
            }
            for j in t + 1..n {
                if ring.is_zero(a.get(t, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.get(t, j), a.get(t, t));
                let nq = ring.neg(&q);
                a.add_col_multiple(j, t, &nq);
                v.add_col_multiple(j, t, &nq);
                dirty |= !ring.is_zero(&r);
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad = (t + 1..k)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !ring.is_zero(&ring.div_rem(a.get(i, j), a.get(t, t)).1));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = ring.one();
                        a.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                }
            }
            // move the smallest entry of row/column t to the pivot
            let cand = (t..k)
                .map(|i| (i, t))
                .chain((t + 1..n).map(|j| (t, j)))
                .filter(|&(i, j)| !ring.is_zero(a.get(i, j)))
                .min_by_key(|&(i, j)| ring.euclid_size(a.get(i, j)))
                .expect("pivot row is nonzero");
            a.swap_rows(t, cand.0);
            u.swap_rows(t, cand.0);
            a.swap_cols(t, cand.1);
            v.swap_cols(t, cand.1);
        }
        let unit = ring.canonical_unit(a.get(t, t));
        a.scale_row(t, &unit);
        u.scale_row(t, &unit);
        diag.push(a.get(t, t).clone());
    }
    SmithResult { diag, left: u, right: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn check(m: &Mat) -> SmithResult {
        let s = smith(m);
        let d = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { m.ring().zero() };
                assert_eq!(d.get(i, j), &want);
            }
        }
        s
    }

    #[test]
    fn examples() {
        let z = Ring::integers();
        assert_eq!(check(&Mat::from_ints(&z, &[&[4], &[6]])).diag, vec![z.from_int(2)]);
        assert_eq!(check(&Mat::identity(&z, 3)).diag, vec![z.one(); 3]);
        assert_eq!(check(&Mat::from_ints(&z, &[&[2, 0], &[0, 3]])).diag, vec![z.from_int(1), z.from_int(6)]);
        assert_eq!(check(&Mat::from_ints(&z, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).diag, vec![z.from_int(2), z.from_int(6), z.from_int(12)]);
        assert!(check(&Mat::zero(&z, 2, 3)).diag.is_empty());
    }
}
