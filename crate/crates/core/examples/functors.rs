//! Hom, tensor products, Ext and Tor of cyclic groups.

use std::sync::Arc;

use homcalc::functor::{ext, hom_functor, tensor_functor, tor};
use homcalc::{canonical_decomposition, functor_obj, Obj, Presentation, Ring};

fn main() -> homcalc::Result<()> {
    let z = Ring::integers();
    let cyclic = |n: i64| Obj::Module(Arc::new(Presentation::from_ints(&z, 1, &[&[n]])));
    let functors = [hom_functor(), tensor_functor(), ext(1), tor(1)];
    println!("{:>10} {}", "", functors.iter().map(|f| format!("{:>8}", f.name())).collect::<String>());
    for (m, n) in [(4, 6), (2, 3), (12, 8), (5, 0)] {
        let args = [cyclic(m), cyclic(n)];
        let row = functors
            .iter()
            .map(|f| Ok(format!("{:>8}", canonical_decomposition(&functor_obj(f, &args)?)?.to_string())))
            .collect::<homcalc::Result<String>>()?;
        println!("{:>10} {row}", format!("Z/{m},Z/{n}"));
    }
    Ok(())
}
