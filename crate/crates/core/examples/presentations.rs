//! Presentations, morphisms between them, and simplifying generators.

use std::sync::Arc;

use homcalc::{better_generators, morphisms_equal, presentations_equal, Mat, Morphism, Presentation, Ring};

fn main() -> homcalc::Result<()> {
    let z = Ring::integers();
    let z4 = Arc::new(Presentation::from_ints(&z, 1, &[&[4]]));
    let z2 = Arc::new(Presentation::from_ints(&z, 1, &[&[2]]));

    let proj = Morphism::new(z4.clone(), z2.clone(), Mat::from_ints(&z, &[&[1]]))?;
    let times_two = Morphism::new(z2.clone(), z4.clone(), Mat::from_ints(&z, &[&[2]]))?;
    println!("Z/2 -> Z/4 by 2, then projecting back, is zero: {}", times_two.then(&proj)?.is_zero()?);
    println!("x -> x from Z/2 to Z/4 is well defined: {}", Morphism::new(z2.clone(), z4.clone(), Mat::from_ints(&z, &[&[1]])).is_ok());

    let five = Morphism::new(z4.clone(), z4.clone(), Mat::from_ints(&z, &[&[5]]))?;
    println!("5 = 1 on Z/4: {}", morphisms_equal(&five, &Morphism::identity(z4))?);

    // three generators, one of them redundant, another of order 2
    let p = Presentation::from_ints(&z, 3, &[&[1, 2, 0], &[0, 4, 6], &[0, 0, 2]]);
    let r = better_generators(&p)?;
    println!("{:?} simplifies to {:?}", p.relations().to_literals(), r.module.relations().to_literals());
    println!("new generators in old terms: {:?}", r.change.new_to_old.to_literals());
    println!("same relations as <2> twice over: {}", presentations_equal(&z2, &Presentation::from_ints(&z, 1, &[&[2], &[4]])));
    Ok(())
}
