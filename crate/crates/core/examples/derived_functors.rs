//! Derived and composed functors, including ones given as expressions.

use std::sync::Arc;

use homcalc::functor::{hom_functor, instantiate_standard, parse_functor};
use homcalc::{better_generators, canonical_decomposition, right_derived_cofunctor, Mat, Obj, Presentation, Ring};

fn main() -> homcalc::Result<()> {
    let q = Ring::qpoly(&["x", "y"])?;
    let k = Obj::module(Presentation::new(Mat::parse(&q, &[vec!["x".into()], vec!["y".into()]], 1)?));
    let r = Obj::module(Presentation::free(&q, 1));
    for deg in 0..3 {
        let e = right_derived_cofunctor(&hom_functor(), 0, deg)?.obj(&[k.clone(), r.clone()])?;
        let e = better_generators(&e)?.module;
        println!("Ext^{deg}(Q[x,y]/(x,y), Q[x,y]) on {} generators, relations {:?}", e.gens(), e.relations().to_literals());
    }

    let z = Ring::integers();
    let cyclic = |n: i64| Obj::Module(Arc::new(Presentation::from_ints(&z, 1, &[&[n]])));
    let s = instantiate_standard(1);
    let args = [cyclic(12), cyclic(18)];
    println!("Ext1(Z/12, Z/18) = {}", canonical_decomposition(&s.ext.obj(&args)?)?);
    println!("  by the cokernel route = {}", canonical_decomposition(&s.ext_cheap.obj(&args)?)?);
    println!("Tor1(Z/12, Z/18) = {}", canonical_decomposition(&s.tor.obj(&args)?)?);

    let bidual = s.hom_hom.obj(&[cyclic(5), cyclic(5), cyclic(5)])?;
    println!("Hom(Hom(Z/5, Z/5), Z/5) = {}", canonical_decomposition(&bidual)?);

    let f = parse_functor("Compose(RDerived(1, Hom), 0, RDerived(1, Hom))")?;
    let zz = Obj::module(Presentation::free(&z, 1));
    println!("{} at (Z/6, Z, Z) = {}", f.name(), canonical_decomposition(&f.obj(&[cyclic(6), zz.clone(), zz])?)?);
    Ok(())
}
