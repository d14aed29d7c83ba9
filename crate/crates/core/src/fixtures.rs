//! Named example algebras with their subcategory specs.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::nakayama::{nakayama2_tilde, triple_name, truncate, window_module, PeriodicPresentation};
use crate::quiver::{BoundQuiverAlgebra, Path, Quiver, Relation};
use crate::rep::{Algebra, Representation};
use crate::tilting::SubcatSpec;

pub const NAMES: [&str; 4] = ["a2-infty-window", "a2-tilde-3233", "kx2", "hereditary-a2"];

pub const KUPISCH_3233: [usize; 4] = [3, 2, 3, 3];

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub algebra: Algebra,
    pub spec: SubcatSpec,
    /// Extra data stored with the subcategory (safe region, calibration).
    pub annotations: Value,
}

fn all_claims() -> Vec<String> {
    ["rigid", "generating", "cogenerating", "dZ"].iter().map(|s| s.to_string()).collect()
}

/// `k[x]/(x^n)` as a one-vertex loop algebra.
pub fn truncated_polynomial(n: usize, field: Field) -> Result<Algebra> {
    let q = Quiver::new(vec!["0".into()], vec![("x".into(), "0".into(), "0".into())])?;
    let rel = Relation::zero_relation(field, Path::from_arrows(&q, vec![0; n])?)?;
    Ok(Arc::new(BoundQuiverAlgebra::compute_basis(q, vec![rel], field, n + 1)?))
}

/// Uniserial `k[x]/(x^n)`-module of length `m`: basis `x^0 … x^{m-1}`.
pub fn uniserial(alg: &Algebra, m: usize) -> Result<Representation> {
    let f = alg.field();
    let mut x = crate::linalg::Matrix::zeros(f, m, m);
    for i in 0..m.saturating_sub(1) {
        x[(i, i + 1)] = f.one();
    }
    Representation::new(alg.clone(), vec![m], vec![x])
}

/// The quiver `u → v` without relations.
pub fn hereditary_a2(field: Field) -> Result<Algebra> {
    let q = Quiver::new(vec!["u".into(), "v".into()], vec![("a".into(), "u".into(), "v".into())])?;
    Ok(Arc::new(BoundQuiverAlgebra::compute_basis(q, vec![], field, 2)?))
}

/// Every indecomposable `k[x]/(x^n)`-module, as a 1-cluster tilting spec.
pub fn kx_spec(n: usize, field: Field) -> Result<SubcatSpec> {
    let alg = truncated_polynomial(n, field)?;
    let gens = (1..=n).map(|m| uniserial(&alg, m)).collect::<Result<Vec<_>>>()?;
    let names = (1..=n).map(|m| format!("M{m}")).collect();
    SubcatSpec::new(alg, 1, gens, names, all_claims())
}

/// The three indecomposables `S_u`, `P_u`, `S_v = P_v` of `u → v`.
pub fn hereditary_spec(field: Field) -> Result<SubcatSpec> {
    let alg = hereditary_a2(field)?;
    let gens = vec![
        Representation::simple(&alg, 0),
        Representation::projective(&alg, 0),
        Representation::projective(&alg, 1),
    ];
    let names = ["S[u]", "P[u]", "P[v]"].iter().map(|s| s.to_string()).collect();
    SubcatSpec::new(alg, 1, gens, names, all_claims())
}

pub fn fixture(name: &str, field: Field, periods: usize) -> Result<Fixture> {
    match name {
        "kx2" => {
            let spec = kx_spec(2, field)?;
            Ok(Fixture { name: name.into(), algebra: spec.alg.clone(), spec, annotations: json!({}) })
        }
        "hereditary-a2" => {
            let spec = hereditary_spec(field)?;
            Ok(Fixture { name: name.into(), algebra: spec.alg.clone(), spec, annotations: json!({}) })
        }
        "a2-tilde-3233" => {
            let n2 = nakayama2_tilde(&KUPISCH_3233, field)?;
            let annotations = json!({
                "kupisch": KUPISCH_3233,
                "orientation": n2.layout.orientation,
                "support_rule": n2.rule,
                "calibration": n2.calibration,
                "drawn_algebra": crate::io::algebra_to_json(&n2.drawn),
            });
            Ok(Fixture { name: name.into(), algebra: n2.algebra.clone(), spec: n2.spec, annotations })
        }
        "a2-infty-window" => {
            let n2 = nakayama2_tilde(&KUPISCH_3233, field)?;
            let pres = PeriodicPresentation::new(&KUPISCH_3233)?;
            let w = truncate(&pres, n2.layout.orientation, periods, 1, 0, field)?;
            let (lo, hi) = w.safe;
            let mut found = Vec::new();
            for base in pres.triples() {
                for k in 0..periods as i64 {
                    let t = base.map(|x| x + k * pres.period());
                    let supp = n2.rule.support(&w.layout, t);
                    let inside = !supp.is_empty()
                        && supp.iter().all(|&(a, _)| lo <= a && a < hi)
                        && supp.len() == n2.rule.support(&n2.layout, t).len();
                    if inside {
                        found.push(t);
                    }
                }
            }
            found.sort();
            found.dedup();
            let gens = found.iter().map(|&t| window_module(&w, n2.rule, t)).collect::<Result<Vec<_>>>()?;
            let names = found.iter().map(|&t| triple_name(t)).collect();
            let spec = SubcatSpec::new(w.algebra.clone(), 2, gens, names, vec![])?;
            let safe: Vec<&str> = w.safe_vertices().iter().map(|&v| w.algebra.quiver().vertex_name(v)).collect();
            let annotations = json!({
                "kupisch": KUPISCH_3233,
                "periods": periods,
                "safe_region": {"columns": [lo, hi], "vertices": safe},
            });
            Ok(Fixture { name: name.into(), algebra: w.algebra.clone(), spec, annotations })
        }
        other => Err(Error::UnknownExample(other.to_string())),
    }
}
