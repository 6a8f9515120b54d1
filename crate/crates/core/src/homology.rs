//! Pullbacks, simultaneous resolutions of short exact sequences and the long
//! exact (co)homology sequences they induce.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::functor::{
    defect_functor, functor_map, functor_obj, hull_embedding, kernel_functor, Complex, Functor, Obj, ObjMap, SlotKind,
    Variance,
};
use crate::matrix::Mat;
use crate::presentation::{canonical_decomposition, Decomposition, Morphism, Presentation};
use crate::procedures::{preimage, resolution_of_module, right_divide, Resolution};
use crate::ring::Ring;

/// `A ×_B B'` with its projections to `A` and `B'`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Arc<Presentation>,
    pub to_a: Morphism,
    pub to_b_prime: Morphism,
}

/// Pullback of `β: B' -> B` along `φ: A -> B`, the kernel of `A ⊕ B' -> B`.
pub fn pullback(beta: &Morphism, phi: &Morphism) -> Result<Pullback> {
    if beta.target() != phi.target() {
        return Err(Error::Dimension("pullback: the two maps have different targets".into()));
    }
    let sum = Arc::new(phi.source().direct_sum(beta.source())?);
    let stacked = Morphism::unchecked(sum, phi.target_arc().clone(), phi.matrix().stack(&beta.matrix().neg())?)?;
    let arg = [Obj::Arrow(stacked)];
    let emb = hull_embedding(&kernel_functor(), &arg)?;
    let la = phi.source().gens();
    let object = emb.source_arc().clone();
    let e = emb.matrix();
    Ok(Pullback {
        to_a: Morphism::unchecked(object.clone(), phi.source_arc().clone(), e.col_range(0, la))?,
        to_b_prime: Morphism::unchecked(object.clone(), beta.source_arc().clone(), e.col_range(la, e.cols()))?,
        object,
    })
}

fn zero_module(ring: &Ring) -> Arc<Presentation> {
    Arc::new(Presentation::zero(ring))
}

/// `0 -> M' -mono-> M -epi-> M'' -> 0`, checked on construction.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    mono: Morphism,
    epi: Morphism,
}

impl ShortExactSeq {
    pub fn new(mono: Morphism, epi: Morphism) -> Result<ShortExactSeq> {
        let bad = |what: &str| Err(Error::Invalid(format!("not a short exact sequence: {what}")));
        if mono.target() != epi.source() {
            return bad("the middle modules differ");
        }
        if !mono.is_valid()? || !epi.is_valid()? {
            return bad("a map is not well defined");
        }
        if !functor_obj(&kernel_functor(), &[Obj::Arrow(mono.clone())])?.is_zero_module()? {
            return bad("the first map has a kernel");
        }
        let coker = Presentation::new(epi.matrix().stack(epi.target().relations())?);
        if !coker.is_zero_module()? {
            return bad("the second map is not onto");
        }
        if !mono.then(&epi)?.is_zero()? {
            return bad("the composite is not zero");
        }
        if !functor_obj(&defect_functor(), &[Obj::Pair(mono.clone(), epi.clone())])?.is_zero_module()? {
            return bad("the kernel of the second map is larger than the image of the first");
        }
        Ok(ShortExactSeq { mono, epi })
    }

    /// `0 -> M' -> M' ⊕ M'' -> M'' -> 0`.
    pub fn split(left: Arc<Presentation>, right: Arc<Presentation>) -> Result<ShortExactSeq> {
        let ring = left.ring().clone();
        let (a, b) = (left.gens(), right.gens());
        let sum = Arc::new(left.direct_sum(&right)?);
        let mono = Mat::identity(&ring, a).augment(&Mat::zero(&ring, a, b))?;
        let epi = Mat::zero(&ring, a, b).stack(&Mat::identity(&ring, b))?;
        ShortExactSeq::new(Morphism::unchecked(left, sum.clone(), mono)?, Morphism::unchecked(sum, right, epi)?)
    }

    pub fn mono(&self) -> &Morphism {
        &self.mono
    }

    pub fn epi(&self) -> &Morphism {
        &self.epi
    }
}

/// Free resolutions `P'`, `P`, `P''` of the three terms of a short exact
/// sequence with levelwise split exact columns `0 -> P'_i -> P_i -> P''_i -> 0`,
/// where `P_i = P'_i ⊕ P''_i` and
///
/// ```text
/// d_i = | d'_i   0    |
///       | Y_i    d''_i |
/// ```
#[derive(Clone, Debug)]
pub struct ResolvedSes {
    pub seq: ShortExactSeq,
    pub left: Resolution,
    pub right: Resolution,
    /// `middle[i-1] = d_i`.
    middle: Vec<Mat>,
    /// `P_0 -> M`.
    augmentation: Mat,
}

impl ResolvedSes {
    /// Number of computed differentials.
    pub fn len(&self) -> usize {
        self.middle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.middle.is_empty()
    }

    fn ring(&self) -> &Ring {
        self.seq.mono.ring()
    }

    pub fn left_free(&self, i: usize) -> Arc<Presentation> {
        Arc::new(self.left.free(i))
    }

    pub fn right_free(&self, i: usize) -> Arc<Presentation> {
        Arc::new(self.right.free(i))
    }

    pub fn middle_free(&self, i: usize) -> Arc<Presentation> {
        Arc::new(Presentation::free(self.ring(), self.left.rank(i) + self.right.rank(i)))
    }

    fn left_d(&self, i: usize) -> Result<Morphism> {
        Morphism::unchecked(self.left_free(i), self.left_free(i - 1), self.left.map(i))
    }

    fn right_d(&self, i: usize) -> Result<Morphism> {
        Morphism::unchecked(self.right_free(i), self.right_free(i - 1), self.right.map(i))
    }

    /// `d_i: P_i -> P_{i-1}`, `1 ≤ i ≤ len`.
    pub fn middle_d(&self, i: usize) -> Result<Morphism> {
        Morphism::unchecked(self.middle_free(i), self.middle_free(i - 1), self.middle[i - 1].clone())
    }

    pub fn augmentation(&self) -> Result<Morphism> {
        Morphism::unchecked(self.middle_free(0), self.seq.mono.target_arc().clone(), self.augmentation.clone())
    }

    /// `P'_i -> P_i`.
    pub fn mono(&self, i: usize) -> Result<Morphism> {
        let (a, b) = (self.left.rank(i), self.right.rank(i));
        let m = Mat::identity(self.ring(), a).augment(&Mat::zero(self.ring(), a, b))?;
        Morphism::unchecked(self.left_free(i), self.middle_free(i), m)
    }

    /// `P_i -> P''_i`.
    pub fn epi(&self, i: usize) -> Result<Morphism> {
        let (a, b) = (self.left.rank(i), self.right.rank(i));
        let m = Mat::zero(self.ring(), a, b).stack(&Mat::identity(self.ring(), b))?;
        Morphism::unchecked(self.middle_free(i), self.right_free(i), m)
    }

    fn left_aug(&self) -> Result<Morphism> {
        let m = &self.left;
        Morphism::unchecked(self.left_free(0), m.module.clone(), m.start.change.new_to_old.clone())
    }

    fn right_aug(&self) -> Result<Morphism> {
        let m = &self.right;
        Morphism::unchecked(self.right_free(0), m.module.clone(), m.start.change.new_to_old.clone())
    }

    /// Checks that the diagram commutes, the middle row is a complex
    /// resolving `M`, and the columns are exact.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(format!("resolved sequence: {what}")));
        let eq = |a: &Morphism, b: &Morphism| crate::presentation::morphisms_equal(a, b);
        let aug = self.augmentation()?;
        if !aug.is_valid()? {
            return fail("augmentation is not a morphism".into());
        }
        if !eq(&self.mono(0)?.then(&aug)?, &self.left_aug()?.then(&self.seq.mono)?)? {
            return fail("left augmentation square does not commute".into());
        }
        if !eq(&aug.then(&self.seq.epi)?, &self.epi(0)?.then(&self.right_aug()?)?)? {
            return fail("right augmentation square does not commute".into());
        }
        let mut chain = vec![];
        for i in (1..=self.len()).rev() {
            let d = self.middle_d(i)?;
            if !eq(&self.mono(i)?.then(&d)?, &self.left_d(i)?.then(&self.mono(i - 1)?)?)?
                || !eq(&d.then(&self.epi(i - 1)?)?, &self.epi(i)?.then(&self.right_d(i)?)?)?
            {
                return fail(format!("square at level {i} does not commute"));
            }
            chain.push(d);
        }
        chain.push(aug);
        let coker = Presentation::new(self.augmentation.stack(self.seq.mono.target().relations())?);
        if !coker.is_zero_module()? {
            return fail("augmentation is not onto".into());
        }
        let report = verify_exactness(&Complex::new(chain)?)?;
        if let Some(d) = report.iter().find(|d| !d.is_zero()) {
            return fail(format!("middle row is not exact at position {}", d.position));
        }
        Ok(())
    }
}

/// Resolves `M'` and `M''` and fills in the middle row level by level. The
/// generators of each middle level are those of `P'_i` (mapped through the
/// mono) followed by lifts of those of `P''_i`, i.e. the free cover of the
/// pullback of `P''_i -> Z''_{i-1}` along `P_{i-1} ⊇ Z_{i-1}`; the correction
/// block `Y_i` is found by one division per level.
pub fn resolve_short_exact_seq(s: &ShortExactSeq, length: usize) -> Result<ResolvedSes> {
    let left = resolution_of_module(s.mono.source(), length)?;
    let right = resolution_of_module(s.epi.target(), length)?;
    let ring = s.mono.ring().clone();
    let stuck = |what: &str| Error::Internal(format!("resolving a short exact sequence: {what}"));

    let eps_left = left.start.change.new_to_old.mul(s.mono.matrix())?;
    let eps_right = Morphism::unchecked(
        Arc::new(right.free(0)),
        s.epi.target_arc().clone(),
        right.start.change.new_to_old.clone(),
    )?;
    let lift = right_divide(eps_right.matrix(), s.epi.matrix(), Some(s.epi.target().relations()))?
        .ok_or_else(|| stuck("the second map is not onto"))?;
    let augmentation = eps_left.stack(&lift)?;

    let total = |i: usize| left.rank(i) + right.rank(i);
    let mut middle = Vec::new();
    let mut prev_y: Option<Mat> = None;
    for i in 1..=length + 1 {
        let (dl, dr) = (left.map(i), right.map(i));
        let y = match &prev_y {
            None => {
                let target = dr.mul(&lift)?.neg();
                right_divide(&target, &eps_left, Some(s.mono.target().relations()))?
            }
            Some(py) => right_divide(&dr.mul(py)?.neg(), &left.map(i - 1), None)?,
        }
        .ok_or_else(|| stuck("a correction block has no solution"))?;
        let top = dl.augment(&Mat::zero(&ring, left.rank(i), right.rank(i - 1)))?;
        let bottom = y.augment(&dr)?;
        let d = top.stack(&bottom)?;
        debug_assert_eq!((d.rows(), d.cols()), (total(i), total(i - 1)));
        middle.push(d);
        prev_y = Some(y);
    }
    let out = ResolvedSes { seq: s.clone(), left, right, middle, augmentation };
    out.verify()?;
    Ok(out)
}

/// The defect of one position of a complex.
#[derive(Clone, Debug)]
pub struct PositionDefect {
    /// Index into the complex's objects.
    pub position: usize,
    pub module: Presentation,
    /// Invariant factors, when the ring allows them.
    pub decomposition: Option<Decomposition>,
}

impl PositionDefect {
    pub fn is_zero(&self) -> bool {
        match &self.decomposition {
            Some(d) => d.is_zero(),
            None => self.module.gens() == 0,
        }
    }
}

/// Defects `ker / im` at every interior position of `c`.
pub fn verify_exactness(c: &Complex) -> Result<Vec<PositionDefect>> {
    let mut out = Vec::new();
    for (i, w) in c.maps().windows(2).enumerate() {
        let module = functor_obj(&defect_functor(), &[Obj::Pair(w[0].clone(), w[1].clone())])?;
        let decomposition = if module.ring().is_pir() { Some(canonical_decomposition(&module)?) } else { None };
        out.push(PositionDefect { position: i + 1, module, decomposition });
    }
    Ok(out)
}

/// A complex indexed by degree with differentials `X_k -> X_{k+step}`.
struct Graded {
    ring: Ring,
    objects: BTreeMap<isize, Arc<Presentation>>,
    diffs: BTreeMap<isize, Morphism>,
    step: isize,
}

impl Graded {
    fn object(&self, k: isize) -> Arc<Presentation> {
        self.objects.get(&k).cloned().unwrap_or_else(|| zero_module(&self.ring))
    }

    fn diff(&self, k: isize) -> Morphism {
        self.diffs.get(&k).cloned().unwrap_or_else(|| Morphism::zero(self.object(k), self.object(k + self.step)))
    }

    /// `(X_{k-step} -> X_k, X_k -> X_{k+step})`.
    fn around(&self, k: isize) -> Obj {
        Obj::Pair(self.diff(k - self.step), self.diff(k))
    }
}

/// A short exact sequence of complexes `0 -> A -i-> B -p-> C -> 0`.
struct GradedSes {
    a: Graded,
    b: Graded,
    c: Graded,
    i: BTreeMap<isize, Morphism>,
    p: BTreeMap<isize, Morphism>,
}

fn level(maps: &BTreeMap<isize, Morphism>, from: &Graded, to: &Graded, k: isize) -> Morphism {
    maps.get(&k).cloned().unwrap_or_else(|| Morphism::zero(from.object(k), to.object(k)))
}

impl GradedSes {
    fn homology(&self, x: &Graded, k: isize) -> Result<Arc<Presentation>> {
        Ok(Arc::new(functor_obj(&defect_functor(), &[x.around(k)])?))
    }

    fn induced(&self, maps: &BTreeMap<isize, Morphism>, from: &Graded, to: &Graded, k: isize) -> Result<Morphism> {
        let s = from.step;
        let comps = vec![level(maps, from, to, k - s), level(maps, from, to, k), level(maps, from, to, k + s)];
        let phi = ObjMap::new(from.around(k), to.around(k), comps)?;
        functor_map(&defect_functor(), 0, &phi, &[])
    }

    /// `H_k(C) -> H_{k+step}(A)`: lift through `p`, apply the differential of
    /// `B`, pull back through `i`.
    fn connecting(&self, k: isize) -> Result<Morphism> {
        let s = self.a.step;
        let stuck = |what: &str| Error::Internal(format!("connecting map in degree {k}: {what}"));
        let from = hull_embedding(&defect_functor(), &[self.c.around(k)])?;
        let to = hull_embedding(&defect_functor(), &[self.a.around(k + s)])?;
        let lifted = preimage(from.matrix(), &level(&self.p, &self.b, &self.c, k))?.ok_or_else(|| stuck("no lift"))?;
        let image = lifted.mul(self.b.diff(k).matrix())?;
        let back = preimage(&image, &level(&self.i, &self.a, &self.b, k + s))?.ok_or_else(|| stuck("not in the image"))?;
        let delta = right_divide(&back, to.matrix(), Some(to.target().relations()))?.ok_or_else(|| stuck("not a cycle"))?;
        Morphism::unchecked(from.source_arc().clone(), to.source_arc().clone(), delta)
    }
}

/// One term of a long exact sequence and the map leaving it.
#[derive(Clone, Debug)]
pub struct LongExactTerm {
    /// E.g. `H_1(M')` or `H^0(M'')`.
    pub label: String,
    pub module: Arc<Presentation>,
    /// The map to the next term; `None` for the last term.
    pub map: Option<Morphism>,
    pub is_connecting: bool,
}

/// A long exact sequence, exact at every interior term.
#[derive(Clone, Debug)]
pub struct LongExactSeq {
    pub terms: Vec<LongExactTerm>,
}

impl LongExactSeq {
    pub fn maps(&self) -> Vec<Morphism> {
        self.terms.iter().filter_map(|t| t.map.clone()).collect()
    }

    pub fn as_complex(&self) -> Result<Complex> {
        Complex::new(self.maps())
    }

    pub fn connecting_maps(&self) -> Vec<&Morphism> {
        self.terms.iter().filter(|t| t.is_connecting).filter_map(|t| t.map.as_ref()).collect()
    }
}

fn unary_on_modules(f: &Functor) -> Result<()> {
    if f.arity() != 1 || f.slots()[0].kind != SlotKind::Module {
        return Err(Error::Invalid(format!("{} must be a unary functor on modules", f.name())));
    }
    Ok(())
}

fn apply_levels(
    f: &Functor,
    ring: &Ring,
    n: usize,
    step: isize,
    object: impl Fn(usize) -> Arc<Presentation>,
    d: impl Fn(usize) -> Result<Morphism>,
) -> Result<Graded> {
    let mut objects = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for k in 0..=n {
        objects.insert(k as isize, Arc::new(functor_obj(f, &[Obj::Module(object(k))])?));
    }
    for k in 1..=n {
        let m = functor_map(f, 0, &ObjMap::module(d(k)?), &[])?;
        // covariant: F(P_k) -> F(P_{k-1}); contravariant: F(P_{k-1}) -> F(P_k)
        let key = if step < 0 { k as isize } else { k as isize - 1 };
        diffs.insert(key, m);
    }
    Ok(Graded { ring: ring.clone(), objects, diffs, step })
}

fn apply_chain_map(f: &Functor, n: usize, m: impl Fn(usize) -> Result<Morphism>) -> Result<BTreeMap<isize, Morphism>> {
    (0..=n).map(|k| Ok((k as isize, functor_map(f, 0, &ObjMap::module(m(k)?), &[])?))).collect()
}

/// The long exact sequence of `L_qF` (covariant `f`) or `R^qF` (contravariant
/// `f`) for degrees `0 ..= top`, computed on a simultaneous resolution.
///
/// Covariant: `H_top(M') -> H_top(M) -> H_top(M'') -> H_{top-1}(M') -> … -> H_0(M'') -> 0`.
/// Contravariant: `0 -> H^0(M'') -> H^0(M) -> H^0(M') -> H^1(M'') -> … -> H^top(M')`.
pub fn long_exact_homology_seq(f: &Functor, s: &ShortExactSeq, top: usize) -> Result<LongExactSeq> {
    unary_on_modules(f)?;
    let r = resolve_short_exact_seq(s, top)?;
    let ring = s.mono.ring().clone();
    let n = top + 1;
    let covariant = f.variance(0) == Variance::Co;
    let step = if covariant { -1 } else { 1 };
    let left = apply_levels(f, &ring, n, step, |k| r.left_free(k), |k| r.left_d(k))?;
    let mid = apply_levels(f, &ring, n, step, |k| r.middle_free(k), |k| r.middle_d(k))?;
    let right = apply_levels(f, &ring, n, step, |k| r.right_free(k), |k| r.right_d(k))?;
    let monos = apply_chain_map(f, n, |k| r.mono(k))?;
    let epis = apply_chain_map(f, n, |k| r.epi(k))?;
    let ses = if covariant {
        GradedSes { a: left, b: mid, c: right, i: monos, p: epis }
    } else {
        GradedSes { a: right, b: mid, c: left, i: epis, p: monos }
    };
    let names = if covariant { ["M'", "M", "M''"] } else { ["M''", "M", "M'"] };
    let label = |j: usize, k: isize| {
        if covariant {
            format!("H_{k}({})", names[j])
        } else {
            format!("H^{k}({})", names[j])
        }
    };

    let degrees: Vec<isize> = if covariant { (0..=top as isize).rev().collect() } else { (0..=top as isize).collect() };
    let mut terms = Vec::new();
    if !covariant {
        let first = ses.homology(&ses.a, 0)?;
        terms.push(LongExactTerm {
            label: "0".into(),
            module: zero_module(&ring),
            map: Some(Morphism::zero(zero_module(&ring), first)),
            is_connecting: false,
        });
    }
    for (idx, &k) in degrees.iter().enumerate() {
        let ha = ses.homology(&ses.a, k)?;
        let hb = ses.homology(&ses.b, k)?;
        let hc = ses.homology(&ses.c, k)?;
        terms.push(LongExactTerm { label: label(0, k), module: ha, map: Some(ses.induced(&ses.i, &ses.a, &ses.b, k)?), is_connecting: false });
        terms.push(LongExactTerm { label: label(1, k), module: hb, map: Some(ses.induced(&ses.p, &ses.b, &ses.c, k)?), is_connecting: false });
        let last = idx + 1 == degrees.len();
        let (map, is_connecting) = if !last {
            (Some(ses.connecting(k)?), true)
        } else if covariant {
            (Some(Morphism::zero(hc.clone(), zero_module(&ring))), false)
        } else {
            (None, false)
        };
        terms.push(LongExactTerm { label: label(2, k), module: hc, map, is_connecting });
    }
    if covariant {
        terms.push(LongExactTerm { label: "0".into(), module: zero_module(&ring), map: None, is_connecting: false });
    }

    let les = LongExactSeq { terms };
    for m in les.maps() {
        if !m.is_valid()? {
            return Err(Error::Internal("long exact sequence: a map is not well defined".into()));
        }
    }
    let report = verify_exactness(&les.as_complex()?)?;
    if let Some(d) = report.iter().find(|d| !d.is_zero()) {
        return Err(Error::Internal(format!("long exact sequence is not exact at {}", les.terms[d.position].label)));
    }
    Ok(les)
}

/// The contravariant twin of [`long_exact_homology_seq`].
pub fn long_exact_cohomology_seq(f: &Functor, s: &ShortExactSeq, top: usize) -> Result<LongExactSeq> {
    if f.arity() == 1 && f.variance(0) != Variance::Contra {
        return Err(Error::Invalid(format!("{} is not contravariant", f.name())));
    }
    long_exact_homology_seq(f, s, top)
}
