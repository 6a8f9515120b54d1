//! Complexes of finitely presented modules.

use std::sync::Arc;

use super::{functor_map, functor_obj, Functor, Obj, ObjMap, SlotKind, Variance};
use crate::error::{dim, Error, Result};
use crate::presentation::{Morphism, Presentation};

/// `objects[0] -> objects[1] -> …`, with `maps[i]: objects[i] -> objects[i+1]`.
///
/// Read as a chain complex `C_k -> … -> C_1` this is `objects[k-i] = C_i`.
#[derive(Clone, Debug)]
pub struct Complex {
    objects: Vec<Arc<Presentation>>,
    maps: Vec<Morphism>,
}

impl Complex {
    /// Builds a complex from consecutive maps; composability of shapes is
    /// checked, vanishing of composites is not (see [`Complex::is_complex`]).
    pub fn new(maps: Vec<Morphism>) -> Result<Complex> {
        let first = maps.first().ok_or_else(|| Error::Invalid("a complex needs at least one map".into()))?;
        let mut objects = vec![first.source_arc().clone()];
        for (i, m) in maps.iter().enumerate() {
            if **objects.last().unwrap() != *m.source() {
                return Err(dim(format!("map {i} does not start where the previous one ends")));
            }
            objects.push(m.target_arc().clone());
        }
        Ok(Complex { objects, maps })
    }

    /// A single module with no maps.
    pub fn single(p: impl Into<Arc<Presentation>>) -> Complex {
        Complex { objects: vec![p.into()], maps: vec![] }
    }

    pub fn objects(&self) -> &[Arc<Presentation>] {
        &self.objects
    }

    pub fn maps(&self) -> &[Morphism] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// True iff every composite of consecutive maps is zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].then(&w[1])?.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `C_i`, for a complex read as `C_k -> … -> C_1`.
pub fn obj_slice(c: &Complex, i: usize) -> Result<Arc<Presentation>> {
    let k = c.len();
    if i == 0 || i > k {
        return Err(Error::Invalid(format!("no object C_{i} in a complex of length {k}")));
    }
    Ok(c.objects[k - i].clone())
}

/// `d_{i+1}: C_{i+1} -> C_i`.
pub fn mor_slice(c: &Complex, i: usize) -> Result<Morphism> {
    let k = c.len();
    if i == 0 || i + 1 > k {
        return Err(Error::Invalid(format!("no map d_{} in a complex of length {k}", i + 1)));
    }
    Ok(c.maps[k - i - 1].clone())
}

/// Applies a unary functor on modules to every object and map; a
/// contravariant functor reverses the arrows.
pub fn functor_on_complex(f: &Functor, c: &Complex) -> Result<Complex> {
    if f.arity() != 1 || f.slots()[0].kind != SlotKind::Module {
        return Err(Error::Invalid(format!("{} must be a unary functor on modules", f.name())));
    }
    if c.maps.is_empty() {
        return Ok(Complex::single(functor_obj(f, &[Obj::Module(c.objects[0].clone())])?));
    }
    let mut maps = c.maps.iter().map(|m| functor_map(f, 0, &ObjMap::module(m.clone()), &[])).collect::<Result<Vec<_>>>()?;
    if f.variance(0) == Variance::Contra {
        maps.reverse();
    }
    Complex::new(maps)
}
