//! Quivers, relations and finite-dimensional bound quiver algebras.
//!
//! Paths are written diagrammatically: the first arrow of a path is the
//! leftmost one. Modules are right modules, so an arrow `a: u → v` acts on a
//! representation as a linear map `M_u → M_v` and the projective at `v` is
//! `e_v Λ`, spanned by the paths starting at `v`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let mut arrow_index = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (i, (id, s, t)) in arrows.into_iter().enumerate() {
            let src = *vertex_index
                .get(&s)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow {id:?} has unknown source {s:?}")))?;
            let tgt = *vertex_index
                .get(&t)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow {id:?} has unknown target {t:?}")))?;
            if arrow_index.insert(id.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {id:?}")));
            }
            out.push(Arrow { id, src, tgt });
        }
        Ok(Quiver { vertices, arrows: out, vertex_index, arrow_index })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_by_id(&self, id: &str) -> Result<usize> {
        self.arrow_index.get(id).copied().ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    /// Arrows ending at `v`.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.tgt == v).map(|(i, _)| i)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.src == v).map(|(i, _)| i)
    }

    /// Same vertices, every arrow reversed (ids kept).
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.id.clone(), self.vertices[a.tgt].clone(), self.vertices[a.src].clone()))
            .collect();
        Quiver::new(self.vertices.clone(), arrows).expect("opposite of a valid quiver is valid")
    }
}

/// A path: a trivial path at a vertex, or a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidRelation("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).tgt != q.arrow(w[1]).src {
                return Err(Error::InvalidRelation(format!(
                    "arrows {:?} and {:?} do not compose",
                    q.arrow(w[0]).id,
                    q.arrow(w[1]).id
                )));
            }
        }
        let last = *arrows.last().expect("nonempty");
        Ok(Path { src: q.arrow(first).src, tgt: q.arrow(last).tgt, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e[{}]", q.vertex_name(self.src))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(field: Field, terms: Vec<(Scalar, Path)>) -> Result<Relation> {
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| !field.is_zero(c)).collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidRelation("relation has no nonzero term".into()));
        };
        let (s, t) = (first.src, first.tgt);
        for (_, p) in &terms {
            if p.src != s || p.tgt != t {
                return Err(Error::InvalidRelation("relation paths are not parallel".into()));
            }
            if p.len() < 2 {
                return Err(Error::InvalidRelation("relation paths must have length at least 2".into()));
            }
        }
        Ok(Relation { terms })
    }

    pub fn zero_relation(field: Field, path: Path) -> Result<Relation> {
        Relation::new(field, vec![(field.one(), path)])
    }

    /// `p - q` for two parallel paths.
    pub fn commutativity(field: Field, p: Path, q: Path) -> Result<Relation> {
        Relation::new(field, vec![(field.one(), p), (field.neg(&field.one()), q)])
    }

    pub fn src(&self) -> usize {
        self.terms[0].1.src
    }

    pub fn tgt(&self) -> usize {
        self.terms[0].1.tgt
    }

    fn homogeneous_len(&self) -> Option<usize> {
        let l = self.terms[0].1.len();
        self.terms.iter().all(|(_, p)| p.len() == l).then_some(l)
    }

    /// Reversed paths: the matching relation of the opposite quiver.
    pub fn opposite(&self, q_op: &Quiver) -> Relation {
        let terms = self
            .terms
            .iter()
            .map(|(c, p)| {
                let rev: Vec<usize> = p.arrows.iter().rev().copied().collect();
                (c.clone(), Path::from_arrows(q_op, rev).expect("reversed path composes"))
            })
            .collect();
        Relation { terms }
    }
}

/// Normal-form basis of `e_v Λ` together with the right action of arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveData {
    /// Basis paths starting at the vertex, by increasing length.
    pub paths: Vec<Path>,
    /// For each vertex `w`, the indices into `paths` of the paths ending at `w`.
    pub by_target: Vec<Vec<usize>>,
    /// For each arrow `a: u → w`, the action `(e_v Λ e_u) → (e_v Λ e_w)` in the
    /// `by_target` bases, as a `dim_u × dim_w` matrix.
    pub action: Vec<Matrix>,
}

impl ProjectiveData {
    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn dim_at(&self, w: usize) -> usize {
        self.by_target[w].len()
    }

    /// Position of `paths[i]` inside `by_target[tgt]`.
    pub fn local_index(&self, i: usize) -> usize {
        let w = self.paths[i].tgt;
        self.by_target[w].iter().position(|&j| j == i).expect("path is indexed by its target")
    }
}

/// A finite-dimensional quotient `kQ / I` with a computed path basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    projectives: Vec<ProjectiveData>,
}

/// Default bound on path length used when none is supplied.
pub fn default_length_bound(q: &Quiver, relations: &[Relation]) -> usize {
    let maxlen = relations.iter().flat_map(|r| r.terms.iter().map(|(_, p)| p.len())).max().unwrap_or(1);
    q.vertex_count().max(1) * (maxlen + 1)
}

struct Layer {
    /// Paths in this layer (all of the same length), in ascending lex order.
    paths: Vec<Path>,
}

/// Computes the normal-form basis of `e_v kQ / e_v I` by length-graded
/// elimination. Each layer is the span of (previous layer)·(arrows) modulo the
/// images `q·r` of the relations; the lexicographically largest words are
/// eliminated first, the survivors are the normal forms.
fn projective_layers(
    quiver: &Quiver,
    relations: &[(usize, &Relation)],
    field: Field,
    v: usize,
    bound: usize,
) -> Result<ProjectiveData> {
    let n_arrows = quiver.arrows().len();
    let mut layers: Vec<Layer> = vec![Layer { paths: vec![Path::trivial(v)] }];
    // rho[l][a]: for each path index i in layer l with tgt = src(a), its product
    // with arrow a as a sparse combination of layer l+1 paths.
    let mut rho: Vec<Vec<HashMap<usize, Vec<(usize, Scalar)>>>> = Vec::new();

    for len in 1..=bound {
        let prev = &layers[len - 1];
        // candidate words w·a
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for (i, p) in prev.paths.iter().enumerate() {
            for a in quiver.arrows_from(p.tgt) {
                cands.push((i, a));
            }
        }
        let word = |&(i, a): &(usize, usize)| {
            let mut w = prev.paths[i].arrows.clone();
            w.push(a);
            w
        };
        // columns sorted by descending word so RREF pivots on the largest words
        let mut order: Vec<usize> = (0..cands.len()).collect();
        order.sort_by(|&x, &y| word(&cands[y]).cmp(&word(&cands[x])));
        let mut col_of = HashMap::new();
        for (col, &ci) in order.iter().enumerate() {
            col_of.insert(cands[ci], col);
        }

        // relation images in candidate coordinates
        let mut rel_rows: Vec<Vec<Scalar>> = Vec::new();
        for &(m, rel) in relations {
            if m > len {
                continue;
            }
            let base = &layers[len - m];
            for (qi, qp) in base.paths.iter().enumerate() {
                if qp.tgt != rel.src() {
                    continue;
                }
                let mut row = vec![field.zero(); cands.len()];
                for (c, p) in &rel.terms {
                    // q · p[0..m-1] lives in layer len-1
                    let mut vec: Vec<(usize, Scalar)> = vec![(qi, field.one())];
                    for (step, &a) in p.arrows[..m - 1].iter().enumerate() {
                        let layer_rho = &rho[len - m + step];
                        let mut next: HashMap<usize, Scalar> = HashMap::new();
                        for (idx, coef) in &vec {
                            if let Some(img) = layer_rho[a].get(idx) {
                                for (j, s) in img {
                                    let e = next.entry(*j).or_insert_with(|| field.zero());
                                    *e = field.add(e, &field.mul(coef, s));
                                }
                            }
                        }
                        vec = next.into_iter().filter(|(_, s)| !field.is_zero(s)).collect();
                    }
                    let last = *p.arrows.last().expect("length >= 2");
                    for (idx, coef) in vec {
                        let col = col_of[&(idx, last)];
                        row[col] = field.add(&row[col], &field.mul(c, &coef));
                    }
                }
                if row.iter().any(|x| !field.is_zero(x)) {
                    rel_rows.push(row);
                }
            }
        }
        let rel = Matrix::from_rows(field, cands.len(), rel_rows);
        let ech = rel.rref();
        let pivot_cols: Vec<usize> = ech.pivots.clone();
        let is_pivot = {
            let mut v = vec![false; cands.len()];
            for &p in &pivot_cols {
                v[p] = true;
            }
            v
        };
        // survivors in ascending word order
        let mut survivors: Vec<usize> = (0..cands.len()).filter(|&c| !is_pivot[c]).collect();
        survivors.sort_by(|&x, &y| word(&cands[order[x]]).cmp(&word(&cands[order[y]])));
        let mut new_index = HashMap::new();
        let mut paths = Vec::with_capacity(survivors.len());
        for (k, &col) in survivors.iter().enumerate() {
            new_index.insert(col, k);
            let (i, a) = cands[order[col]];
            let mut arrows = prev.paths[i].arrows.clone();
            arrows.push(a);
            paths.push(Path { src: v, tgt: quiver.arrow(a).tgt, arrows });
        }
        let mut layer_rho: Vec<HashMap<usize, Vec<(usize, Scalar)>>> = vec![HashMap::new(); n_arrows];
        for (col, &ci) in order.iter().enumerate() {
            let (i, a) = cands[ci];
            let img = if !is_pivot[col] {
                vec![(new_index[&col], field.one())]
            } else {
                let r = pivot_cols.iter().position(|&p| p == col).expect("pivot row");
                survivors
                    .iter()
                    .filter_map(|&sc| {
                        let e = &ech.matrix[(r, sc)];
                        (!field.is_zero(e)).then(|| (new_index[&sc], field.neg(e)))
                    })
                    .collect()
            };
            layer_rho[a].insert(i, img);
        }
        rho.push(layer_rho);
        let empty = paths.is_empty();
        layers.push(Layer { paths });
        if empty {
            break;
        }
        if len == bound {
            return Err(Error::NotFiniteDimensionalWithinBound { bound });
        }
    }

    // flatten layers into global indices
    let mut offsets = Vec::with_capacity(layers.len());
    let mut all = Vec::new();
    for l in &layers {
        offsets.push(all.len());
        all.extend(l.paths.iter().cloned());
    }
    let nv = quiver.vertex_count();
    let mut by_target = vec![Vec::new(); nv];
    for (i, p) in all.iter().enumerate() {
        by_target[p.tgt].push(i);
    }
    let local: Vec<usize> = (0..all.len())
        .map(|i| by_target[all[i].tgt].iter().position(|&j| j == i).expect("indexed"))
        .collect();
    let mut action: Vec<Matrix> = quiver
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(field, by_target[a.src].len(), by_target[a.tgt].len()))
        .collect();
    for (l, layer_rho) in rho.iter().enumerate() {
        for (a, map) in layer_rho.iter().enumerate() {
            for (&i, img) in map {
                let gi = offsets[l] + i;
                for (j, s) in img {
                    let gj = offsets[l + 1] + j;
                    action[a][(local[gi], local[gj])] = s.clone();
                }
            }
        }
    }
    Ok(ProjectiveData { paths: all, by_target, action })
}

impl BoundQuiverAlgebra {
    /// Builds the algebra and its path basis. Fails if some path of length
    /// `length_bound` is nonzero modulo the relations.
    pub fn compute_basis(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        length_bound: usize,
    ) -> Result<BoundQuiverAlgebra> {
        field.validate()?;
        let mut graded = Vec::with_capacity(relations.len());
        for (i, r) in relations.iter().enumerate() {
            for (_, p) in &r.terms {
                for &a in &p.arrows {
                    if a >= quiver.arrows().len() {
                        return Err(Error::InvalidRelation(format!("relation {i} uses unknown arrow {a}")));
                    }
                }
            }
            let m = r.homogeneous_len().ok_or(Error::NonHomogeneousRelation(i))?;
            graded.push((m, r));
        }
        let projectives = (0..quiver.vertex_count())
            .map(|v| projective_layers(&quiver, &graded, field, v, length_bound.max(1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BoundQuiverAlgebra { quiver, relations, field, projectives })
    }

    pub fn with_default_bound(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<Self> {
        let bound = default_length_bound(&quiver, &relations);
        Self::compute_basis(quiver, relations, field, bound)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn projective_data(&self, v: usize) -> &ProjectiveData {
        &self.projectives[v]
    }

    /// Normal-form paths from `u` to `v`.
    pub fn basis(&self, u: usize, v: usize) -> Vec<&Path> {
        let pd = &self.projectives[u];
        pd.by_target[v].iter().map(|&i| &pd.paths[i]).collect()
    }

    pub fn dimension(&self) -> usize {
        self.projectives.iter().map(|p| p.dim()).sum()
    }

    /// Length of the longest nonzero path (Loewy length minus one).
    pub fn max_path_length(&self) -> usize {
        self.projectives.iter().flat_map(|p| p.paths.iter().map(|q| q.len())).max().unwrap_or(0)
    }

    /// Normal form of an arbitrary path, as coefficients over `basis(src, tgt)`.
    pub fn reduce_path(&self, p: &Path) -> Vec<Scalar> {
        let pd = &self.projectives[p.src];
        let f = self.field;
        let start = pd.local_index(0);
        let mut cur = Matrix::zeros(f, 1, pd.dim_at(p.src));
        cur[(0, start)] = f.one();
        for &a in &p.arrows {
            cur = cur.mul(&pd.action[a]);
        }
        cur.row(0).to_vec()
    }

    /// Product of two basis paths (`p` ends where `q` starts), expanded over
    /// `basis(p.src, q.tgt)`.
    pub fn mul_paths(&self, p: &Path, q: &Path) -> Vec<Scalar> {
        assert_eq!(p.tgt, q.src, "paths do not compose");
        let mut joined = p.arrows.clone();
        joined.extend(q.arrows.iter().copied());
        self.reduce_path(&Path { src: p.src, tgt: q.tgt, arrows: joined })
    }

    /// Multiplies a combination over `basis(u, w)` by a combination over
    /// `basis(w, v)`.
    pub fn mul_elements(&self, u: usize, w: usize, v: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let bx = self.basis(u, w);
        let by = self.basis(w, v);
        let mut out = vec![f.zero(); self.basis(u, v).len()];
        for (i, cx) in x.iter().enumerate() {
            if f.is_zero(cx) {
                continue;
            }
            for (j, cy) in y.iter().enumerate() {
                if f.is_zero(cy) {
                    continue;
                }
                let prod = self.mul_paths(bx[i], by[j]);
                let c = f.mul(cx, cy);
                for (k, s) in prod.iter().enumerate() {
                    out[k] = f.add(&out[k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    /// Opposite algebra: reversed quiver and mirrored relations.
    pub fn opposite(&self) -> Result<BoundQuiverAlgebra> {
        let q = self.quiver.opposite();
        let rels = self.relations.iter().map(|r| r.opposite(&q)).collect();
        BoundQuiverAlgebra::compute_basis(q, rels, self.field, self.max_path_length() + 2)
    }

    /// Same presentation over another field.
    pub fn with_field(&self, field: Field) -> Result<BoundQuiverAlgebra> {
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, p)| Ok((field.parse(&self.field.format_signed(c))?, p.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Relation::new(field, terms)
            })
            .collect::<Result<Vec<_>>>()?;
        BoundQuiverAlgebra::compute_basis(self.quiver.clone(), rels, field, self.max_path_length() + 2)
    }

    /// Presentation equality (used to reject mixing objects of different algebras).
    pub fn same_presentation(&self, other: &BoundQuiverAlgebra) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field && self.quiver == other.quiver && self.relations == other.relations)
    }
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebra over {} with {} vertices, {} arrows, {} relations, dimension {}",
            self.field,
            self.vertex_count(),
            self.quiver.arrows().len(),
            self.relations.len(),
            self.dimension()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    pub(crate) fn kx_mod(n: usize, field: Field) -> BoundQuiverAlgebra {
        let q = Quiver::new(vec!["0".into()], vec![("x".into(), "0".into(), "0".into())]).unwrap();
        let rel = Relation::zero_relation(field, Path::from_arrows(&q, vec![0; n]).unwrap()).unwrap();
        BoundQuiverAlgebra::compute_basis(q, vec![rel], field, n + 1).unwrap()
    }

    #[test]
    fn loop_mod_square() {
        let a = kx_mod(2, f2());
        assert_eq!(a.dimension(), 2);
        let names: Vec<String> = a.basis(0, 0).iter().map(|p| p.display(a.quiver())).collect();
        assert_eq!(names, vec!["e[0]", "x"]);
    }

    #[test]
    fn single_arrow() {
        let q = Quiver::new(vec!["u".into(), "v".into()], vec![("a".into(), "u".into(), "v".into())]).unwrap();
        let a = BoundQuiverAlgebra::compute_basis(q, vec![], f2(), 2).unwrap();
        assert_eq!(a.dimension(), 3);
        assert_eq!(a.basis(0, 1).len(), 1);
        assert_eq!(a.projective_data(0).dim_at(0), 1);
        assert_eq!(a.projective_data(0).dim_at(1), 1);
        assert_eq!(a.projective_data(1).dim(), 1);
    }

    #[test]
    fn unbounded_loop_rejected() {
        let q = Quiver::new(vec!["0".into()], vec![("x".into(), "0".into(), "0".into())]).unwrap();
        let r = BoundQuiverAlgebra::compute_basis(q, vec![], f2(), 5);
        assert_eq!(r, Err(Error::NotFiniteDimensionalWithinBound { bound: 5 }));
    }

    #[test]
    fn dangling_arrow_rejected() {
        let r = Quiver::new(vec!["u".into()], vec![("a".into(), "u".into(), "w".into())]);
        assert!(matches!(r, Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn relation_validation() {
        let f = f2();
        let q = Quiver::new(
            vec!["u".into(), "v".into(), "w".into()],
            vec![("a".into(), "u".into(), "v".into()), ("b".into(), "v".into(), "w".into())],
        )
        .unwrap();
        let a = Path::from_arrows(&q, vec![0]).unwrap();
        assert!(Relation::zero_relation(f, a).is_err());
        assert!(Path::from_arrows(&q, vec![1, 0]).is_err());
        let ab = Path::from_arrows(&q, vec![0, 1]).unwrap();
        assert!(Relation::new(f, vec![(f.zero(), ab.clone())]).is_err());
        let alg = BoundQuiverAlgebra::compute_basis(q, vec![Relation::zero_relation(f, ab).unwrap()], f, 4).unwrap();
        assert_eq!(alg.dimension(), 5);
    }

    #[test]
    fn commutative_square() {
        // u -a-> v -c-> x, u -b-> w -d-> x, ac = bd
        let q = Quiver::new(
            vec!["u".into(), "v".into(), "w".into(), "x".into()],
            vec![
                ("a".into(), "u".into(), "v".into()),
                ("b".into(), "u".into(), "w".into()),
                ("c".into(), "v".into(), "x".into()),
                ("d".into(), "w".into(), "x".into()),
            ],
        )
        .unwrap();
        let f = Field::Rational;
        let p1 = Path::from_arrows(&q, vec![0, 2]).unwrap();
        let p2 = Path::from_arrows(&q, vec![1, 3]).unwrap();
        let r = Relation::commutativity(f, p1.clone(), p2.clone()).unwrap();
        let alg = BoundQuiverAlgebra::compute_basis(q, vec![r], f, 4).unwrap();
        assert_eq!(alg.basis(0, 3).len(), 1);
        assert_eq!(alg.dimension(), 4 + 4 + 1);
        // both composites reduce to the same normal form
        assert_eq!(alg.reduce_path(&p1), alg.reduce_path(&p2));
    }
}
