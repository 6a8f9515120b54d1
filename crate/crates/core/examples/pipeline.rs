//! Running a JSON pipeline document from code.

use homcalc::pipeline::{parse_pipeline, run_pipeline};

const DOC: &str = r#"{
  "ring": {"type": "integers"},
  "defs": {
    "A": {"module": {"gens": 1, "relations": [[4]]}},
    "B": {"module": {"gens": 1, "relations": [[6]]}},
    "proj": {"morphism": {"source": "B", "target": "B", "matrix": [[5]]}}
  },
  "steps": [
    {"op": "functor_obj", "functor": "Hom", "args": ["A", "B"], "bind": "H"},
    {"op": "decompose", "module": "H", "bind": "hom"},
    {"op": "functor_map", "functor": "Tensor", "slot": 1, "map": "proj", "fixed": ["A"], "bind": "t"},
    {"op": "resolution", "module": "A", "length": 2, "bind": "res"},
    {"op": "preimage", "map": "proj", "rows": [[1]], "bind": "inverse"}
  ],
  "outputs": ["hom", "t", "res", "inverse"]
}"#;

fn main() -> homcalc::Result<()> {
    let out = run_pipeline(&parse_pipeline(DOC)?)?;
    println!("{}", serde_json::to_string_pretty(&out.document).expect("json"));
    println!("exit code {}", out.exit_code());
    Ok(())
}
