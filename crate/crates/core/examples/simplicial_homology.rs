//! Integral homology and cohomology of a few triangulated surfaces.

use homcalc::simplicial::{surfaces, SimplicialComplex};

fn main() -> homcalc::Result<()> {
    let spaces = [
        ("circle", surfaces::circle()),
        ("torus", surfaces::torus()),
        ("projective plane", surfaces::projective_plane()),
        ("Klein bottle", surfaces::klein_bottle()),
    ];
    for (name, facets) in spaces {
        let c = SimplicialComplex::from_facets(&facets)?;
        let n = c.dim().unwrap_or(0);
        let h: Vec<String> = (0..=n).map(|i| c.homology(i).map(|d| d.to_string())).collect::<homcalc::Result<_>>()?;
        let co: Vec<String> = (0..=n).map(|i| c.cohomology(i).map(|d| d.to_string())).collect::<homcalc::Result<_>>()?;
        println!("{name:<17} euler {:>2}  H_* = {}  H^* = {}", c.euler_characteristic(), h.join("; "), co.join("; "));
    }
    Ok(())
}
