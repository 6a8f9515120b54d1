//! Smith normal form and the invariant factors of finitely generated abelian groups.

use homcalc::{canonical_decomposition, smith_normal_form, Mat, Presentation, Ring};

fn main() -> homcalc::Result<()> {
    let z = Ring::integers();
    let m = Mat::from_ints(&z, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&m)?;
    let diag: Vec<String> = s.diag.iter().map(|d| z.format_elem(d)).collect();
    println!("diagonal {diag:?}");
    let d = s.left.mul(&m)?.mul(&s.right)?;
    println!("U m V = {:?}", d.to_literals());

    for rows in [&[&[6i64][..]][..], &[&[2, 0], &[0, 4]], &[&[4, 6], &[6, 4]]] {
        let p = Presentation::from_ints(&z, rows[0].len(), rows);
        println!("{:?} presents {}", p.relations().to_literals(), canonical_decomposition(&p)?);
    }
    Ok(())
}
