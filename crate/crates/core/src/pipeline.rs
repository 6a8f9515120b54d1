//! Batch pipelines described as JSON documents.
//!
//! ```json
//! {
//!   "ring": {"type": "integers"},
//!   "defs": {"M": {"module": {"gens": 1, "relations": [[6]]}},
//!            "Z": {"module": {"gens": 1}}},
//!   "steps": [{"op": "functor_obj", "functor": "Ext(1)", "args": ["M", "Z"], "bind": "E"},
//!             {"op": "decompose", "module": "E", "bind": "d"}],
//!   "outputs": ["d"]
//! }
//! ```
//!
//! Faults map to exit code 1. A step whose answer is "no solution" binds an
//! unsolvable value instead of failing; if any output is unsolvable the run
//! exits with code 2.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::functor::{parse_functor, Obj, ObjMap, SlotKind};
use crate::homology::{long_exact_homology_seq, LongExactSeq, ShortExactSeq};
use crate::matrix::Mat;
use crate::presentation::{better_generators, canonical_decomposition, Decomposition, Morphism, Presentation};
use crate::procedures::{preimage, resolution_of_module, Resolution};
use crate::ring::{CoeffField, MonomialOrder, Ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAULT: i32 = 1;
pub const EXIT_UNSOLVABLE: i32 = 2;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn text(&self) -> String {
        match self {
            Entry::Int(n) => n.to_string(),
            Entry::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coefficients {
    Prime(u64),
    Named(String),
}

#[derive(Clone, Copy, Debug, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    #[default]
    Degrevlex,
    Lex,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField { p: u64 },
    Polynomial {
        coefficients: Coefficients,
        vars: Vec<String>,
        #[serde(default)]
        order: Order,
    },
    Residue { base: Box<RingSpec>, ideal: Vec<Entry> },
}

impl RingSpec {
    pub fn build(&self) -> Result<Ring> {
        match self {
            RingSpec::Integers => Ok(Ring::integers()),
            RingSpec::Rationals => Ok(Ring::rationals()),
            RingSpec::PrimeField { p } => Ring::prime_field(*p),
            RingSpec::Polynomial { coefficients, vars, order } => {
                let coeffs = match coefficients {
                    Coefficients::Prime(p) => CoeffField::PrimeField(*p),
                    Coefficients::Named(s) if s == "Q" || s == "rationals" => CoeffField::Rationals,
                    Coefficients::Named(s) => return Err(Error::Parse(format!("unknown coefficient field {s:?}"))),
                };
                let order = match order {
                    Order::Degrevlex => MonomialOrder::DegRevLex,
                    Order::Lex => MonomialOrder::Lex,
                };
                let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
                Ring::polynomial(coeffs, &vars, order)
            }
            RingSpec::Residue { base, ideal } => {
                let base = base.build()?;
                let gens = ideal.iter().map(|e| base.parse_elem(&e.text())).collect::<Result<Vec<_>>>()?;
                Ring::residue_class_ring(&base, &gens)
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Def {
    Module {
        gens: usize,
        #[serde(default)]
        relations: Vec<Vec<Entry>>,
    },
    Morphism { source: String, target: String, matrix: Vec<Vec<Entry>> },
}

/// A functor argument: a module or morphism name, or two morphism names for
/// a composable pair.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Arg {
    Name(String),
    Pair([String; 2]),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Step {
    FunctorObj { functor: String, args: Vec<Arg>, bind: String },
    /// Applies a functor to a morphism in one module slot; `fixed` fills the
    /// other slots in order.
    FunctorMap {
        functor: String,
        #[serde(default)]
        slot: usize,
        map: String,
        #[serde(default)]
        fixed: Vec<Arg>,
        bind: String,
    },
    Decompose { module: String, bind: String },
    BetterGenerators { module: String, bind: String },
    Resolution { module: String, length: usize, bind: String },
    Compose { first: String, second: String, bind: String },
    Preimage { map: String, rows: Vec<Vec<Entry>>, bind: String },
    LongExactSequence { functor: String, mono: String, epi: String, top: usize, bind: String },
}

impl Step {
    fn bind(&self) -> &str {
        match self {
            Step::FunctorObj { bind, .. }
            | Step::FunctorMap { bind, .. }
            | Step::Decompose { bind, .. }
            | Step::BetterGenerators { bind, .. }
            | Step::Resolution { bind, .. }
            | Step::Compose { bind, .. }
            | Step::Preimage { bind, .. }
            | Step::LongExactSequence { bind, .. } => bind,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineDoc {
    pub ring: RingSpec,
    #[serde(default)]
    pub defs: BTreeMap<String, Def>,
    #[serde(default)]
    pub steps: Vec<Step>,
    #[serde(default)]
    pub outputs: Vec<String>,
}

/// JSON pointer of a serde path.
fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { .. } | Segment::Unknown => {}
        }
    }
    if out.is_empty() {
        "/".into()
    } else {
        out
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(src: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(src);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Parse(format!("at {}: {}", pointer(e.path()), e.inner())))
}

pub fn parse_pipeline(src: &str) -> Result<PipelineDoc> {
    parse_json(src)
}

pub fn parse_facets(src: &str) -> Result<crate::simplicial::SimplicialComplexDoc> {
    parse_json(src)
}

#[derive(Clone, Debug)]
pub enum Value {
    Module(Arc<Presentation>),
    Morphism(Morphism),
    Decomposition(Decomposition),
    Resolution(Resolution),
    Sequence(LongExactSeq),
    Matrix(Mat),
    Unsolvable(String),
}

/// The result of a pipeline run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Json,
    pub unsolvable: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.unsolvable {
            EXIT_UNSOLVABLE
        } else {
            EXIT_OK
        }
    }
}

fn matrix(ring: &Ring, rows: &[Vec<Entry>], cols: usize) -> Result<Mat> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(Entry::text).collect()).collect();
    Mat::parse(ring, &text, cols)
}

struct Env {
    ring: Ring,
    values: BTreeMap<String, Value>,
}

impl Env {
    fn get(&self, name: &str) -> Result<&Value> {
        self.values.get(name).ok_or_else(|| Error::Invalid(format!("unknown name {name:?}")))
    }

    fn module(&self, name: &str) -> Result<Arc<Presentation>> {
        match self.get(name)? {
            Value::Module(p) => Ok(p.clone()),
            _ => Err(Error::Invalid(format!("{name:?} is not a module"))),
        }
    }

    fn morphism(&self, name: &str) -> Result<Morphism> {
        match self.get(name)? {
            Value::Morphism(m) => Ok(m.clone()),
            _ => Err(Error::Invalid(format!("{name:?} is not a morphism"))),
        }
    }

    fn obj(&self, arg: &Arg, kind: SlotKind) -> Result<Obj> {
        match (arg, kind) {
            (Arg::Name(n), SlotKind::Module) => Ok(Obj::Module(self.module(n)?)),
            (Arg::Name(n), SlotKind::Arrow) => Ok(Obj::Arrow(self.morphism(n)?)),
            (Arg::Pair([a, b]), SlotKind::Pair) => Ok(Obj::Pair(self.morphism(a)?, self.morphism(b)?)),
            _ => Err(Error::Invalid(format!("argument {arg:?} does not fit a {kind:?} slot"))),
        }
    }

    fn define(&mut self, name: &str, def: &Def) -> Result<()> {
        let v = match def {
            Def::Module { gens, relations } => Value::Module(Arc::new(Presentation::new(matrix(&self.ring, relations, *gens)?))),
            Def::Morphism { source, target, matrix: rows } => {
                let (s, t) = (self.module(source)?, self.module(target)?);
                let m = matrix(&self.ring, rows, t.gens())?;
                Value::Morphism(Morphism::new(s, t, m)?)
            }
        };
        self.values.insert(name.to_string(), v);
        Ok(())
    }

    fn run(&self, step: &Step) -> Result<Value> {
        Ok(match step {
            Step::FunctorObj { functor, args, .. } => {
                let f = parse_functor(functor)?;
                if args.len() != f.arity() {
                    return Err(Error::Invalid(format!("{} takes {} arguments", f.name(), f.arity())));
                }
                let objs = args.iter().zip(f.slots()).map(|(a, s)| self.obj(a, s.kind)).collect::<Result<Vec<_>>>()?;
                Value::Module(Arc::new(f.obj(&objs)?))
            }
            Step::FunctorMap { functor, slot, map, fixed, .. } => {
                let f = parse_functor(functor)?;
                if *slot >= f.arity() || fixed.len() + 1 != f.arity() {
                    return Err(Error::Invalid(format!("{} takes {} arguments", f.name(), f.arity())));
                }
                if f.slots()[*slot].kind != SlotKind::Module {
                    return Err(Error::Unsupported("functor_map only moves module slots".into()));
                }
                let kinds = f.slots().iter().enumerate().filter(|(i, _)| i != slot).map(|(_, s)| s.kind);
                let objs = fixed.iter().zip(kinds).map(|(a, k)| self.obj(a, k)).collect::<Result<Vec<_>>>()?;
                Value::Morphism(crate::functor::functor_map(&f, *slot, &ObjMap::module(self.morphism(map)?), &objs)?)
            }
            Step::Decompose { module, .. } => Value::Decomposition(canonical_decomposition(&*self.module(module)?)?),
            Step::BetterGenerators { module, .. } => Value::Module(better_generators(&*self.module(module)?)?.module),
            Step::Resolution { module, length, .. } => Value::Resolution(resolution_of_module(&*self.module(module)?, *length)?),
            Step::Compose { first, second, .. } => Value::Morphism(self.morphism(first)?.then(&self.morphism(second)?)?),
            Step::Preimage { map, rows, .. } => {
                let m = self.morphism(map)?;
                let b = matrix(&self.ring, rows, m.target().gens())?;
                match preimage(&b, &m)? {
                    Some(x) => Value::Matrix(x),
                    None => Value::Unsolvable(format!("some row is not in the image of {map}")),
                }
            }
            Step::LongExactSequence { functor, mono, epi, top, .. } => {
                let f = parse_functor(functor)?;
                let s = ShortExactSeq::new(self.morphism(mono)?, self.morphism(epi)?)?;
                Value::Sequence(long_exact_homology_seq(&f, &s, *top)?)
            }
        })
    }
}

fn big(n: &BigInt) -> Json {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn decomposition_json(d: &Decomposition) -> Json {
    json!({"factors": d.factors.iter().map(big).collect::<Vec<_>>(), "rank": d.rank})
}

fn matrix_json(m: &Mat) -> Json {
    json!(m.to_literals())
}

pub fn module_json(p: &Presentation) -> Json {
    let mut out = json!({"kind": "module", "gens": p.gens(), "relations": matrix_json(p.relations())});
    if p.ring().is_pir() {
        if let Ok(d) = canonical_decomposition(p) {
            out["decomposition"] = decomposition_json(&d);
        }
    }
    out
}

fn morphism_json(m: &Morphism) -> Json {
    json!({"kind": "morphism", "source": module_json(m.source()), "target": module_json(m.target()), "matrix": matrix_json(m.matrix())})
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Module(p) => module_json(p),
        Value::Morphism(m) => morphism_json(m),
        Value::Decomposition(d) => decomposition_json(d),
        Value::Resolution(r) => json!({
            "kind": "resolution",
            "ranks": (0..=r.maps().len()).map(|i| r.rank(i)).collect::<Vec<_>>(),
            "maps": r.maps().iter().map(matrix_json).collect::<Vec<_>>(),
            "complete": r.is_complete(),
        }),
        Value::Sequence(les) => Json::Array(
            les.terms
                .iter()
                .map(|t| {
                    json!({
                        "label": t.label,
                        "module": module_json(&t.module),
                        "map": t.map.as_ref().map(|m| matrix_json(m.matrix())),
                        "is_connecting": t.is_connecting,
                    })
                })
                .collect(),
        ),
        Value::Matrix(m) => json!({"kind": "matrix", "rows": matrix_json(m)}),
        Value::Unsolvable(why) => json!({"kind": "unsolvable", "reason": why}),
    }
}

/// Runs every step in order. Errors carry the JSON pointer of the offending
/// definition or step.
pub fn run_pipeline(doc: &PipelineDoc) -> Result<Outcome> {
    let at = |p: String| move |e: Error| e.at(&p);
    let ring = doc.ring.build().map_err(at("/ring".into()))?;
    let mut env = Env { ring, values: BTreeMap::new() };
    // modules first so that morphisms can refer to them
    let (modules, morphisms): (Vec<_>, Vec<_>) = doc.defs.iter().partition(|(_, d)| matches!(d, Def::Module { .. }));
    for (name, def) in modules.into_iter().chain(morphisms) {
        env.define(name, def).map_err(at(format!("/defs/{name}")))?;
    }
    for (i, step) in doc.steps.iter().enumerate() {
        let name = step.bind();
        if env.values.contains_key(name) {
            return Err(Error::Invalid(format!("name {name:?} is bound twice")).at(&format!("/steps/{i}/bind")));
        }
        let v = env.run(step).map_err(at(format!("/steps/{i}")))?;
        env.values.insert(name.to_string(), v);
    }
    let mut outputs = serde_json::Map::new();
    let mut unsolvable = false;
    for (i, name) in doc.outputs.iter().enumerate() {
        let v = env.get(name).map_err(at(format!("/outputs/{i}")))?;
        unsolvable |= matches!(v, Value::Unsolvable(_));
        outputs.insert(name.clone(), value_json(v));
    }
    Ok(Outcome { document: json!({"ring": env.ring.to_string(), "outputs": outputs}), unsolvable })
}
