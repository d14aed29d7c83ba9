//! JSON forms of algebras, modules and subcategory specs. Coefficients are
//! decimal strings; key order is fixed so emitted files are canonical.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{default_length_bound, BoundQuiverAlgebra, Path, Quiver, Relation};
use crate::rep::{Algebra, Representation};
use crate::tilting::SubcatSpec;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

fn as_str(v: &Value) -> Result<&str> {
    v.as_str().ok_or_else(|| bad(format!("expected a string, found {v}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

pub fn algebra_to_json(alg: &BoundQuiverAlgebra) -> Value {
    let q = alg.quiver();
    let f = alg.field();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| json!({"id": a.id, "src": q.vertex_name(a.src), "tgt": q.vertex_name(a.tgt)}))
        .collect();
    let relations: Vec<Value> = alg
        .relations()
        .iter()
        .map(|r| {
            Value::Array(
                r.terms
                    .iter()
                    .map(|(c, p)| {
                        let ids: Vec<&str> = p.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect();
                        json!({"coef": f.format_signed(c), "path": ids})
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "field": serde_json::to_value(f).expect("field serializes"),
        "vertices": q.vertices(),
        "arrows": arrows,
        "relations": relations,
    })
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let f: Field = serde_json::from_value(v.clone())?;
    f.validate()?;
    Ok(f)
}

/// Parses an algebra; `length_bound` defaults to [`default_length_bound`].
pub fn algebra_from_json(v: &Value, length_bound: Option<usize>) -> Result<BoundQuiverAlgebra> {
    let field = field_from_json(get(v, "field")?)?;
    let vertices = as_array(get(v, "vertices")?, "vertices")?
        .iter()
        .map(|x| as_str(x).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    let arrows = as_array(get(v, "arrows")?, "arrows")?
        .iter()
        .map(|a| {
            Ok((
                as_str(get(a, "id")?)?.to_string(),
                as_str(get(a, "src")?)?.to_string(),
                as_str(get(a, "tgt")?)?.to_string(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let q = Quiver::new(vertices, arrows)?;
    let rels = match v.get("relations") {
        None => Vec::new(),
        Some(r) => as_array(r, "relations")?
            .iter()
            .map(|rel| {
                let terms = as_array(rel, "relation")?
                    .iter()
                    .map(|t| {
                        let c = field.parse(as_str(get(t, "coef")?)?)?;
                        let ids = as_array(get(t, "path")?, "path")?
                            .iter()
                            .map(|x| q.arrow_by_id(as_str(x)?))
                            .collect::<Result<Vec<_>>>()?;
                        if ids.is_empty() {
                            return Err(Error::InvalidRelation("empty path in a relation".into()));
                        }
                        Ok((c, Path::from_arrows(&q, ids)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Relation::new(field, terms)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let bound = length_bound.unwrap_or_else(|| default_length_bound(&q, &rels));
    BoundQuiverAlgebra::compute_basis(q, rels, field, bound)
}

fn matrix_to_json(f: Field, m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(f.format_signed(x))).collect())).collect(),
    )
}

fn matrix_from_json(f: Field, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    let rs = as_array(v, what)?;
    if rs.len() != rows {
        return Err(Error::DimensionMismatch(format!("{what}: expected {rows} rows, found {}", rs.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for r in rs {
        let r = as_array(r, what)?;
        if r.len() != cols {
            return Err(Error::DimensionMismatch(format!("{what}: expected {cols} columns, found {}", r.len())));
        }
        out.push(r.iter().map(|x| f.parse(as_str(x)?)).collect::<Result<Vec<_>>>()?);
    }
    Ok(Matrix::from_rows(f, cols, out))
}

/// Module object with keys `dims` and `arrows` (plus `algebra` if a reference is given).
pub fn module_to_json(m: &Representation, algebra_ref: Option<&str>) -> Value {
    let q = m.algebra().quiver();
    let f = m.field();
    let mut obj = Map::new();
    if let Some(r) = algebra_ref {
        obj.insert("algebra".into(), Value::String(r.into()));
    }
    let dims: Map<String, Value> = q.vertices().iter().zip(m.dims()).map(|(v, d)| (v.clone(), json!(d))).collect();
    obj.insert("dims".into(), Value::Object(dims));
    let arrows: Map<String, Value> =
        q.arrows().iter().zip(m.maps()).map(|(a, mat)| (a.id.clone(), matrix_to_json(f, mat))).collect();
    obj.insert("arrows".into(), Value::Object(arrows));
    Value::Object(obj)
}

/// Missing vertices default to dimension 0; arrows between nonzero spaces are required.
pub fn module_from_json(v: &Value, alg: &Algebra) -> Result<Representation> {
    let q = alg.quiver();
    let f = alg.field();
    let mut dims = vec![0usize; q.vertex_count()];
    let dv = get(v, "dims")?.as_object().ok_or_else(|| bad("dims must be an object"))?;
    for (name, d) in dv {
        let i = q.vertex(name)?;
        dims[i] = d.as_u64().ok_or_else(|| bad(format!("dimension at {name} must be a count")))? as usize;
    }
    let av = match v.get("arrows") {
        Some(a) => a.as_object().ok_or_else(|| bad("arrows must be an object"))?.clone(),
        None => Map::new(),
    };
    for id in av.keys() {
        q.arrow_by_id(id)?;
    }
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.src], dims[a.tgt]);
            match av.get(&a.id) {
                Some(m) => matrix_from_json(f, m, r, c, &format!("arrow {}", a.id)),
                None if r == 0 || c == 0 => Ok(Matrix::zeros(f, r, c)),
                None => Err(Error::InvalidRepresentation(format!("missing matrix for arrow {}", a.id))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg.clone(), dims, maps)
}

/// Spec with inline generators `{"name": ..., "dims": ..., "arrows": ...}`.
pub fn subcat_to_json(spec: &SubcatSpec, algebra_ref: &str) -> Value {
    let gens: Vec<Value> = spec
        .generators
        .iter()
        .zip(&spec.names)
        .map(|(g, n)| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(n.clone()));
            if let Value::Object(rest) = module_to_json(g, None) {
                m.extend(rest);
            }
            Value::Object(m)
        })
        .collect();
    json!({"algebra": algebra_ref, "d": spec.d, "generators": gens, "claims": spec.claims})
}

/// Generators may be inline objects or strings resolved by `load_ref`.
pub fn subcat_from_json(v: &Value, alg: &Algebra, load_ref: &dyn Fn(&str) -> Result<Value>) -> Result<SubcatSpec> {
    let d = get(v, "d")?.as_u64().ok_or_else(|| bad("d must be a count"))? as usize;
    let mut gens = Vec::new();
    let mut names = Vec::new();
    for (i, g) in as_array(get(v, "generators")?, "generators")?.iter().enumerate() {
        let (obj, default_name) = match g {
            Value::String(r) => (load_ref(r)?, r.clone()),
            other => (other.clone(), format!("G{i}")),
        };
        let name = obj.get("name").and_then(Value::as_str).map(str::to_string).unwrap_or(default_name);
        gens.push(module_from_json(&obj, alg)?);
        names.push(name);
    }
    let claims = match v.get("claims") {
        None => Vec::new(),
        Some(c) => as_array(c, "claims")?.iter().map(|x| as_str(x).map(str::to_string)).collect::<Result<_>>()?,
    };
    SubcatSpec::new(alg.clone(), d, gens, names, claims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::tests::{a2, kx, uniserial};

    #[test]
    fn algebra_round_trip() {
        let f = Field::prime(101).unwrap();
        let q = Quiver::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                ("x".into(), "a".into(), "b".into()),
                ("y".into(), "b".into(), "d".into()),
                ("z".into(), "a".into(), "c".into()),
                ("w".into(), "c".into(), "d".into()),
            ],
        )
        .unwrap();
        let p1 = Path::from_arrows(&q, vec![0, 1]).unwrap();
        let p2 = Path::from_arrows(&q, vec![2, 3]).unwrap();
        let alg = BoundQuiverAlgebra::with_default_bound(q, vec![Relation::commutativity(f, p1, p2).unwrap()], f).unwrap();
        let j = algebra_to_json(&alg);
        assert_eq!(j["relations"][0][1]["coef"], "-1");
        let back = algebra_from_json(&j, None).unwrap();
        assert!(back.same_presentation(&alg));
        assert_eq!(algebra_to_json(&back).to_string(), j.to_string());
    }

    #[test]
    fn module_round_trip() {
        let alg = kx(3, Field::rational());
        let m = uniserial(&alg, 2);
        let j = module_to_json(&m, Some("alg.json"));
        assert_eq!(module_from_json(&j, &alg).unwrap(), m);
        let alg2 = a2(Field::prime(5).unwrap());
        let s = Representation::simple(&alg2, 0);
        let j = module_to_json(&s, None);
        assert_eq!(module_from_json(&j, &alg2).unwrap(), s);
    }

    #[test]
    fn schema_errors() {
        let j = json!({"field": {"kind": "prime", "p": 4}, "vertices": [], "arrows": []});
        assert!(matches!(algebra_from_json(&j, None), Err(Error::NotPrime(4))));
        let j = json!({"field": {"kind": "rational"}, "vertices": ["u"], "arrows": [{"id": "a", "src": "u", "tgt": "w"}]});
        assert!(matches!(algebra_from_json(&j, None), Err(Error::InvalidQuiver(_))));
        let alg = kx(2, Field::rational());
        let j = json!({"dims": {"0": 1}, "arrows": {"nope": [["0"]]}});
        assert!(module_from_json(&j, &alg).is_err());
    }
}
