//! The long exact Tor sequence of 0 -> Z/2 -> Z/4 -> Z/2 -> 0 and the Ext
//! sequence of the same extension.

use std::sync::Arc;

use homcalc::functor::{hom_functor, tensor_functor};
use homcalc::homology::{long_exact_cohomology_seq, long_exact_homology_seq, LongExactSeq, ShortExactSeq};
use homcalc::{canonical_decomposition, Mat, Morphism, Obj, Presentation, Ring};

fn print(les: &LongExactSeq) -> homcalc::Result<()> {
    for t in &les.terms {
        let arrow = match (&t.map, t.is_connecting) {
            (Some(m), true) => format!("  --d {:?}-->", m.matrix().to_literals()),
            (Some(m), false) => format!("  --{:?}-->", m.matrix().to_literals()),
            (None, _) => String::new(),
        };
        println!("  {:<10} {:<8}{arrow}", t.label, canonical_decomposition(&t.module)?.to_string());
    }
    Ok(())
}

fn main() -> homcalc::Result<()> {
    let z = Ring::integers();
    let cyclic = |n: i64| Arc::new(Presentation::from_ints(&z, 1, &[&[n]]));
    let mono = Morphism::new(cyclic(2), cyclic(4), Mat::from_ints(&z, &[&[2]]))?;
    let epi = Morphism::new(cyclic(4), cyclic(2), Mat::from_ints(&z, &[&[1]]))?;
    let s = ShortExactSeq::new(mono, epi)?;

    println!("tensor with Z/2:");
    print(&long_exact_homology_seq(&tensor_functor().fix(1, Obj::Module(cyclic(2)))?, &s, 1)?)?;
    println!("Hom into Z:");
    let dual = hom_functor().fix(1, Obj::module(Presentation::free(&z, 1)))?;
    print(&long_exact_cohomology_seq(&dual, &s, 1)?)?;
    Ok(())
}
