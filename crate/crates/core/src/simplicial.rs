//! Simplicial homology and cohomology over the integers.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functor::{defect_functor, functor_on_complex, hom_r_functor, Complex, Obj};
use crate::matrix::Mat;
use crate::presentation::{canonical_decomposition, Decomposition, Morphism, Presentation};
use crate::ring::Ring;

/// Facets as lists of vertex indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplicialComplexDoc {
    pub facets: Vec<Vec<u64>>,
}

/// A finite simplicial complex with faces stored as sorted vertex lists.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    /// `faces[k]` are the k-simplices in lexicographic order.
    faces: Vec<Vec<Vec<u64>>>,
}

impl SimplicialComplex {
    pub fn from_facets(facets: &[Vec<u64>]) -> Result<SimplicialComplex> {
        let mut by_dim: BTreeMap<usize, BTreeSet<Vec<u64>>> = BTreeMap::new();
        for (i, f) in facets.iter().enumerate() {
            let mut v = f.clone();
            v.sort_unstable();
            v.dedup();
            if v.is_empty() || v.len() != f.len() {
                return Err(Error::Invalid(format!("facet {i} is empty or repeats a vertex")));
            }
            if v.len() > 16 {
                return Err(Error::Unsupported(format!("facet {i} has more than 16 vertices")));
            }
            // every nonempty subset is a face
            for mask in 1u32..(1 << v.len()) {
                let face: Vec<u64> = (0..v.len()).filter(|b| mask & (1 << b) != 0).map(|b| v[b]).collect();
                by_dim.entry(face.len() - 1).or_default().insert(face);
            }
        }
        let top = by_dim.keys().next_back().copied().map_or(0, |d| d + 1);
        let faces = (0..top).map(|d| by_dim.remove(&d).unwrap_or_default().into_iter().collect()).collect();
        Ok(SimplicialComplex { faces })
    }

    pub fn from_doc(doc: &SimplicialComplexDoc) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(&doc.facets)
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, k: usize) -> &[Vec<u64>] {
        self.faces.get(k).map_or(&[], |f| f.as_slice())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().enumerate().map(|(k, f)| if k % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) }).sum()
    }

    /// `∂_k: C_k -> C_{k-1}`, with the face omitting position `j` weighted by `(-1)^j`.
    pub fn boundary(&self, k: usize) -> Mat {
        let z = Ring::integers();
        let (rows, cols) = (self.faces(k), if k == 0 { &[][..] } else { self.faces(k - 1) });
        let mut m = Mat::zero(&z, rows.len(), cols.len());
        if k == 0 {
            return m;
        }
        let index: BTreeMap<&[u64], usize> = cols.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        for (r, face) in rows.iter().enumerate() {
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                let c = index[sub.as_slice()];
                m.set(r, c, z.from_int(if j % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    }

    fn chain_module(&self, k: isize) -> Arc<Presentation> {
        let n = if k < 0 { 0 } else { self.faces(k as usize).len() };
        Arc::new(Presentation::free(&Ring::integers(), n))
    }

    /// `0 -> C_n -> … -> C_0 -> 0` with zero maps at both ends.
    pub fn chain_complex(&self) -> Result<Complex> {
        let n = self.dim().map_or(0, |d| d as isize);
        let mut maps = vec![Morphism::zero(self.chain_module(-1), self.chain_module(n))];
        for k in (1..=n).rev() {
            let b = self.boundary(k as usize);
            maps.push(Morphism::unchecked(self.chain_module(k), self.chain_module(k - 1), b)?);
        }
        maps.push(Morphism::zero(self.chain_module(0), self.chain_module(-1)));
        Complex::new(maps)
    }

    /// The cochain complex `0 -> C^0 -> … -> C^n -> 0`, by dualizing.
    pub fn cochain_complex(&self) -> Result<Complex> {
        functor_on_complex(&hom_r_functor(), &self.chain_complex()?)
    }

    fn defect_at(c: &Complex, position: usize) -> Result<Decomposition> {
        let maps = c.maps();
        let d = crate::functor::functor_obj(&defect_functor(), &[Obj::Pair(maps[position - 1].clone(), maps[position].clone())])?;
        canonical_decomposition(&d)
    }

    /// `H_i`, as invariant factors and free rank.
    pub fn homology(&self, i: usize) -> Result<Decomposition> {
        let n = self.dim().unwrap_or(0);
        if i > n || self.dim().is_none() {
            return Ok(Decomposition { factors: vec![], rank: 0 });
        }
        // objects: 0, C_n, …, C_0, 0
        Self::defect_at(&self.chain_complex()?, n - i + 1)
    }

    /// `H^i`, computed on the dual complex.
    pub fn cohomology(&self, i: usize) -> Result<Decomposition> {
        let n = self.dim().unwrap_or(0);
        if i > n || self.dim().is_none() {
            return Ok(Decomposition { factors: vec![], rank: 0 });
        }
        // objects: 0, C^0, …, C^n, 0
        Self::defect_at(&self.cochain_complex()?, i + 1)
    }
}

/// Chains of the closure of `doc`, read as `C_n -> … -> C_0`.
pub fn simplicial_chain_complex(doc: &SimplicialComplexDoc) -> Result<Complex> {
    SimplicialComplex::from_doc(doc)?.chain_complex()
}

pub fn simplicial_homology(doc: &SimplicialComplexDoc, i: usize) -> Result<Decomposition> {
    SimplicialComplex::from_doc(doc)?.homology(i)
}

pub fn simplicial_cohomology(doc: &SimplicialComplexDoc, i: usize) -> Result<Decomposition> {
    SimplicialComplex::from_doc(doc)?.cohomology(i)
}

/// Triangulations used by the examples and the self test.
pub mod surfaces {
    /// The boundary of a triangle.
    pub fn circle() -> Vec<Vec<u64>> {
        vec![vec![0, 1], vec![1, 2], vec![0, 2]]
    }

    /// The seven-vertex torus.
    pub fn torus() -> Vec<Vec<u64>> {
        (0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]).collect()
    }

    /// The six-vertex projective plane.
    pub fn projective_plane() -> Vec<Vec<u64>> {
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
            .iter()
            .map(|f| f.to_vec())
            .collect()
    }

    /// A 3×3 grid on the square with the top edge glued to the bottom one
    /// reversed.
    pub fn klein_bottle() -> Vec<Vec<u64>> {
        let v = |i: u64, j: u64| -> u64 {
            let (i, j) = if j == 3 { ((3 - i) % 3, 0) } else { (i % 3, j) };
            3 * j + i
        };
        let mut out = vec![];
        for i in 0..3 {
            for j in 0..3 {
                out.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
                out.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(p: &[Vec<u64>], i: usize) -> (Vec<i64>, usize) {
        let d = SimplicialComplex::from_facets(p).unwrap().homology(i).unwrap();
        (d.factors.iter().map(|f| i64::try_from(f.clone()).unwrap()).collect(), d.rank)
    }

    #[test]
    fn boundaries_square_to_zero() {
        let solid = SimplicialComplex::from_facets(&[vec![0, 1, 2]]).unwrap();
        assert!(solid.boundary(2).mul(&solid.boundary(1)).unwrap().is_zero());
        let circle = SimplicialComplex::from_facets(&surfaces::circle()).unwrap();
        let d1 = circle.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert!(circle.chain_complex().unwrap().is_complex().unwrap());
        let point = SimplicialComplex::from_facets(&[vec![7]]).unwrap();
        assert_eq!(point.faces(0).len(), 1);
        assert_eq!(dec(&[vec![7]], 0), (vec![], 1));
        assert!(SimplicialComplex::from_facets(&[vec![1, 1]]).is_err());
        assert!(SimplicialComplex::from_facets(&[vec![]]).is_err());
    }

    #[test]
    fn surfaces_have_the_expected_homology() {
        assert_eq!(dec(&surfaces::circle(), 1), (vec![], 1));
        assert_eq!(dec(&surfaces::torus(), 1), (vec![], 2));
        assert_eq!(dec(&surfaces::torus(), 2), (vec![], 1));
        assert_eq!(dec(&surfaces::projective_plane(), 1), (vec![2], 0));
        assert_eq!(dec(&surfaces::projective_plane(), 2), (vec![], 0));
        assert_eq!(dec(&surfaces::klein_bottle(), 1), (vec![2], 1));
        assert_eq!(dec(&surfaces::klein_bottle(), 2), (vec![], 0));
        let k = SimplicialComplex::from_facets(&surfaces::klein_bottle()).unwrap();
        assert_eq!(k.euler_characteristic(), 0);
        let h2 = k.cohomology(2).unwrap();
        assert_eq!((h2.factors.len(), h2.rank), (1, 0));
        assert_eq!(k.cohomology(0).unwrap().rank, 1);
    }
}
