//! Bases of row modules and membership with certificates over several rings.

use homcalc::{basis_of_module, decide_zero, syzygies_generators, Mat, Ring};

fn show(label: &str, m: &Mat) {
    println!("{label}: {:?}", m.to_literals());
}

fn main() -> homcalc::Result<()> {
    let z = Ring::integers();
    let m = Mat::from_ints(&z, &[&[6], &[10]]);
    let b = basis_of_module(&m)?;
    show("basis of <6, 10>", &b.basis);
    show("  written in the generators", &b.transform);

    let r = decide_zero(&Mat::from_ints(&z, &[&[4], &[5]]), &m, true)?;
    show("4 and 5 reduced modulo <6, 10>", &r.reduced);
    let cert = r.transform.expect("requested");
    assert_eq!(r.reduced, Mat::from_ints(&z, &[&[4], &[5]]).add(&cert.mul(&r.basis)?)?);

    let q = Ring::qpoly(&["x", "y"])?;
    let k = Mat::parse(&q, &[vec!["x".into()], vec!["y".into()]], 1)?;
    show("syzygies of (x, y)", &syzygies_generators(&k, None)?);
    let r = decide_zero(&Mat::parse(&q, &[vec!["x^2*y + 3*y".into()]], 1)?, &k, true)?;
    show("x^2*y + 3*y modulo (x, y)", &r.reduced);

    let qx = Ring::qpoly(&["x"])?;
    let dual = Ring::residue_class_ring(&qx, &[qx.parse_elem("x^2")?])?;
    let r = decide_zero(&Mat::parse(&dual, &[vec!["x^3 + x + 1".into()]], 1)?, &Mat::zero(&dual, 0, 1), false)?;
    show("x^3 + x + 1 in Q[x]/<x^2>", &r.reduced);
    Ok(())
}
