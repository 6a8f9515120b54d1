//! Free resolutions, and the linear algebra procedures they rest on.

use std::sync::Arc;

use homcalc::procedures::{complete_im_sq, leftinverse, resolution_of_module, right_divide};
use homcalc::{Mat, Morphism, Presentation, Ring};

fn main() -> homcalc::Result<()> {
    let q = Ring::qpoly(&["x", "y", "z"])?;
    let max_ideal = Presentation::new(Mat::parse(&q, &[vec!["x".into()], vec!["y".into()], vec!["z".into()]], 1)?);
    let r = resolution_of_module(&max_ideal, 4)?;
    println!("Koszul complex of (x, y, z): ranks {:?}", (0..=4).map(|i| r.rank(i)).collect::<Vec<_>>());
    for (i, m) in r.maps().iter().enumerate() {
        println!("  d{} = {:?}", i + 1, m.to_literals());
    }

    // Z/4 over Z/8 has an infinite periodic resolution
    let z = Ring::integers();
    let z8 = Ring::residue_class_ring(&z, &[z.from_int(8)])?;
    let r = resolution_of_module(&Presentation::new(Mat::from_ints(&z8, &[&[4]])), 4)?;
    println!("Z/4 over Z/8: {:?}, complete: {}", r.maps().iter().map(Mat::to_literals).collect::<Vec<_>>(), r.is_complete());

    let x = right_divide(&Mat::from_ints(&z, &[&[3]]), &Mat::from_ints(&z, &[&[2]]), Some(&Mat::from_ints(&z, &[&[5]])))?;
    println!("3 = 2 X mod 5 with X = {:?}", x.map(|x| x.to_literals()));

    let free = Arc::new(Presentation::free(&z, 1));
    let z4 = Arc::new(Presentation::from_ints(&z, 1, &[&[4]]));
    let gamma = Morphism::new(free.clone(), z4.clone(), Mat::from_ints(&z, &[&[2]]))?;
    let cover = Morphism::new(free.clone(), z4, Mat::from_ints(&z, &[&[1]]))?;
    let lift = complete_im_sq(&Morphism::identity(free), &gamma, &cover)?.expect("free source");
    println!("lift of 2 through Z -> Z/4: {:?}", lift.matrix().to_literals());

    let z2 = Arc::new(Presentation::free(&z, 2));
    let beta = Morphism::new(z2, Arc::new(Presentation::free(&z, 1)), Mat::from_ints(&z, &[&[1], &[0]]))?;
    println!("section of the projection Z^2 -> Z: {:?}", leftinverse(&beta)?.map(|s| s.matrix().to_literals()));
    Ok(())
}
