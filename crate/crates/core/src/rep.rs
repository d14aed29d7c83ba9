//! Right modules as quiver representations and their morphisms.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{complement_basis, Field, Matrix, Scalar};
use crate::quiver::{BoundQuiverAlgebra, Path};

pub type Algebra = Arc<BoundQuiverAlgebra>;

/// A finite-dimensional right module: a vector space per vertex and a matrix
/// `dim(src) × dim(tgt)` per arrow, acting on row vectors.
#[derive(Clone, Debug)]
pub struct Representation {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_presentation(&other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

fn same_alg(a: &Algebra, b: &Algebra) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.same_presentation(b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

impl Representation {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(alg: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertex dimensions, got {}",
                q.vertex_count(),
                dims.len()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} arrow matrices, got {}",
                q.arrows().len(),
                maps.len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.src], dims[a.tgt]) {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {:?} has shape {:?}, expected {:?}",
                    a.id,
                    m.shape(),
                    (dims[a.src], dims[a.tgt])
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::InvalidRepresentation(format!("arrow {:?} is over the wrong field", a.id)));
            }
        }
        let rep = Representation { alg, dims, maps };
        for (i, r) in rep.alg.relations().iter().enumerate() {
            let f = rep.alg.field();
            let mut acc = Matrix::zeros(f, rep.dims[r.src()], rep.dims[r.tgt()]);
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!("relation {i} does not vanish")));
            }
        }
        Ok(rep)
    }

    /// Skips the relation check; for internally constructed modules.
    pub(crate) fn new_unchecked(alg: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        debug_assert!(Representation::new(alg.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { alg, dims, maps }
    }

    pub fn zero(alg: &Algebra) -> Representation {
        let f = alg.field();
        let maps = alg.quiver().arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Representation { alg: alg.clone(), dims: vec![0; alg.vertex_count()], maps }
    }

    pub fn simple(alg: &Algebra, v: usize) -> Representation {
        let f = alg.field();
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        let maps = alg.quiver().arrows().iter().map(|a| Matrix::zeros(f, dims[a.src], dims[a.tgt])).collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// `P_v = e_v Λ`, with basis the normal-form paths starting at `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Representation {
        let pd = alg.projective_data(v);
        let dims = (0..alg.vertex_count()).map(|w| pd.dim_at(w)).collect();
        Representation { alg: alg.clone(), dims, maps: pd.action.clone() }
    }

    /// `I_v = D(Λ e_v)`, the dual of the projective at `v` over the opposite
    /// algebra `op` (which must be `alg.opposite()`).
    pub fn injective(alg: &Algebra, op: &BoundQuiverAlgebra, v: usize) -> Representation {
        let pd = op.projective_data(v);
        let dims = (0..alg.vertex_count()).map(|w| pd.dim_at(w)).collect();
        let maps = pd.action.iter().map(|m| m.transpose()).collect();
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    /// Matrix of a path: the ordered product of its arrow matrices.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.src]);
        for &a in &p.arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        same_alg(&self.alg, &other.alg)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Representation { alg: self.alg.clone(), dims, maps })
    }

    pub fn direct_sum_all(alg: &Algebra, parts: &[Representation]) -> Result<Representation> {
        let mut out = Representation::zero(alg);
        for p in parts {
            out = out.direct_sum(p)?;
        }
        Ok(out)
    }

    /// Radical at `v`: the span of the images of arrows ending at `v`, as rows.
    pub fn radical_at(&self, v: usize) -> Matrix {
        let f = self.field();
        let mut rows = Matrix::zeros(f, 0, self.dims[v]);
        for a in self.alg.quiver().arrows_into(v) {
            rows = rows.vstack(&self.maps[a]);
        }
        rows.row_space()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|v| self.dims[v] - self.radical_at(v).rows()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| {
                let mut outgoing = Matrix::zeros(self.field(), self.dims[v], 0);
                for a in self.alg.quiver().arrows_from(v) {
                    outgoing = outgoing.hstack(&self.maps[a]);
                }
                self.dims[v] - outgoing.rank()
            })
            .collect()
    }

    /// The module transported to another field via canonical scalar strings.
    pub fn with_algebra(&self, alg: &Algebra) -> Result<Representation> {
        let from = self.field();
        let to = alg.field();
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let data = m.entries().iter().map(|x| to.parse(&from.format(x))).collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_vec(to, m.rows(), m.cols(), data))
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(alg.clone(), self.dims.clone(), maps)
    }
}

/// A module homomorphism `M → N`: one matrix `dim M_v × dim N_v` per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMorphism {
    pub src: Representation,
    pub tgt: Representation,
    pub maps: Vec<Matrix>,
}

impl RepMorphism {
    pub fn new(src: Representation, tgt: Representation, maps: Vec<Matrix>) -> Result<RepMorphism> {
        same_alg(&src.alg, &tgt.alg)?;
        let n = src.dims.len();
        if maps.len() != n {
            return Err(Error::InvalidMorphism(format!("expected {n} vertex matrices, got {}", maps.len())));
        }
        for v in 0..n {
            if maps[v].shape() != (src.dims[v], tgt.dims[v]) {
                return Err(Error::InvalidMorphism(format!("wrong shape at vertex {v}")));
            }
        }
        let f = RepMorphism { src, tgt, maps };
        for (i, a) in f.src.alg.quiver().arrows().iter().enumerate() {
            let lhs = f.maps[a.src].mul(&f.tgt.maps[i]);
            let rhs = f.src.maps[i].mul(&f.maps[a.tgt]);
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!("square at arrow {:?} does not commute", a.id)));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(src: Representation, tgt: Representation, maps: Vec<Matrix>) -> RepMorphism {
        debug_assert!(RepMorphism::new(src.clone(), tgt.clone(), maps.clone()).is_ok());
        RepMorphism { src, tgt, maps }
    }

    pub fn zero(src: &Representation, tgt: &Representation) -> RepMorphism {
        let f = src.field();
        let maps = (0..src.dims.len()).map(|v| Matrix::zeros(f, src.dims[v], tgt.dims[v])).collect();
        RepMorphism { src: src.clone(), tgt: tgt.clone(), maps }
    }

    pub fn identity(m: &Representation) -> RepMorphism {
        let f = m.field();
        let maps = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        RepMorphism { src: m.clone(), tgt: m.clone(), maps }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &RepMorphism) -> RepMorphism {
        assert_eq!(self.tgt.dims, g.src.dims, "morphisms do not compose");
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect();
        RepMorphism { src: self.src.clone(), tgt: g.tgt.clone(), maps }
    }

    pub fn add(&self, g: &RepMorphism) -> RepMorphism {
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.add(b)).collect();
        RepMorphism { src: self.src.clone(), tgt: self.tgt.clone(), maps }
    }

    pub fn sub(&self, g: &RepMorphism) -> RepMorphism {
        self.add(&g.scale(&self.src.field().from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> RepMorphism {
        let maps = self.maps.iter().map(|m| m.scale(s)).collect();
        RepMorphism { src: self.src.clone(), tgt: self.tgt.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().zip(&self.tgt.dims).all(|(m, &d)| m.rank() == d)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().zip(&self.src.dims).all(|(m, &d)| m.rank() == d)
    }

    /// All vertex matrices concatenated into one row.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.flatten()).collect()
    }

    fn from_flat(src: &Representation, tgt: &Representation, flat: &[Scalar]) -> RepMorphism {
        let f = src.field();
        let mut maps = Vec::with_capacity(src.dims.len());
        let mut off = 0;
        for v in 0..src.dims.len() {
            let n = src.dims[v] * tgt.dims[v];
            maps.push(Matrix::from_vec(f, src.dims[v], tgt.dims[v], flat[off..off + n].to_vec()));
            off += n;
        }
        RepMorphism { src: src.clone(), tgt: tgt.clone(), maps }
    }

    /// The map `[self; g]: A ⊕ B → C` from `self: A → C`, `g: B → C`.
    pub fn hcat(&self, g: &RepMorphism) -> Result<RepMorphism> {
        let src = self.src.direct_sum(&g.src)?;
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.vstack(b)).collect();
        Ok(RepMorphism { src, tgt: self.tgt.clone(), maps })
    }

    /// The map `(self, g): A → B ⊕ C`.
    pub fn vcat(&self, g: &RepMorphism) -> Result<RepMorphism> {
        let tgt = self.tgt.direct_sum(&g.tgt)?;
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.hstack(b)).collect();
        Ok(RepMorphism { src: self.src.clone(), tgt, maps })
    }

    pub fn direct_sum(&self, g: &RepMorphism) -> Result<RepMorphism> {
        let src = self.src.direct_sum(&g.src)?;
        let tgt = self.tgt.direct_sum(&g.tgt)?;
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(RepMorphism { src, tgt, maps })
    }

    /// Single block matrix over all vertices (used for nilpotency tests).
    fn total_matrix(&self) -> Matrix {
        let f = self.src.field();
        let mut m = Matrix::zeros(f, 0, 0);
        for x in &self.maps {
            m = m.direct_sum(x);
        }
        m
    }
}

/// Morphism from `P_v` determined by the image `x ∈ N_v` of the trivial path.
pub fn from_projective(alg: &Algebra, v: usize, x: &[Scalar], n: &Representation) -> RepMorphism {
    let p = Representation::projective(alg, v);
    let pd = alg.projective_data(v);
    let f = alg.field();
    let xr = Matrix::from_rows(f, n.dims[v], vec![x.to_vec()]);
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let rows = pd.by_target[w]
                .iter()
                .map(|&i| xr.mul(&n.path_action(&pd.paths[i])).row(0).to_vec())
                .collect();
            Matrix::from_rows(f, n.dims[w], rows)
        })
        .collect();
    RepMorphism::new_unchecked(p, n.clone(), maps)
}

/// A basis of `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: Representation,
    pub tgt: Representation,
    pub basis: Vec<RepMorphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis morphisms flattened as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        let n: usize = (0..self.src.dims.len()).map(|v| self.src.dims[v] * self.tgt.dims[v]).sum();
        Matrix::from_rows(self.src.field(), n, self.basis.iter().map(|b| b.flatten()).collect())
    }

    /// Coordinates of `f` in the basis.
    pub fn coords(&self, f: &RepMorphism) -> Option<Vec<Scalar>> {
        let target = Matrix::from_rows(self.src.field(), f.flatten().len(), vec![f.flatten()]);
        self.basis_matrix().coords_in_rows(&target).map(|c| c.row(0).to_vec())
    }

    pub fn combine(&self, coefs: &[Scalar]) -> RepMorphism {
        let mut out = RepMorphism::zero(&self.src, &self.tgt);
        for (b, c) in self.basis.iter().zip(coefs) {
            out = out.add(&b.scale(c));
        }
        out
    }
}

/// Solves the commuting equations `F_u·N(a) = M(a)·F_v` for all arrows.
pub fn hom(m: &Representation, n: &Representation) -> Result<HomSpace> {
    same_alg(&m.alg, &n.alg)?;
    let f = m.field();
    let nv = m.dims.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, i: usize, j: usize| offset[v] + i * n.dims[v] + j;
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in m.alg.quiver().arrows().iter().enumerate() {
        let (u, v) = (a.src, a.tgt);
        let ma = &m.maps[ai];
        let na = &n.maps[ai];
        for i in 0..m.dims[u] {
            for j in 0..n.dims[v] {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..n.dims[u] {
                    let c = &na[(k, j)];
                    if !f.is_zero(c) {
                        let idx = var(u, i, k);
                        row[idx] = f.add(&row[idx], c);
                    }
                }
                for k in 0..m.dims[v] {
                    let c = &ma[(i, k)];
                    if !f.is_zero(c) {
                        let idx = var(v, k, j);
                        row[idx] = f.sub(&row[idx], c);
                    }
                }
                if row.iter().any(|x| !f.is_zero(x)) {
                    eqs.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(f, unknowns, eqs);
    let sols = system.right_kernel();
    let basis = (0..sols.cols())
        .map(|c| {
            let flat: Vec<Scalar> = (0..unknowns).map(|r| sols[(r, c)].clone()).collect();
            RepMorphism::from_flat(m, n, &flat)
        })
        .collect();
    Ok(HomSpace { src: m.clone(), tgt: n.clone(), basis })
}

/// Submodule given by a row basis per vertex (rows must span a submodule).
fn submodule(m: &Representation, rows: Vec<Matrix>) -> RepMorphism {
    let f = m.field();
    let dims: Vec<usize> = rows.iter().map(|r| r.rows()).collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = rows[a.src].mul(&m.maps[ai]);
            if dims[a.src] == 0 || dims[a.tgt] == 0 {
                Matrix::zeros(f, dims[a.src], dims[a.tgt])
            } else {
                rows[a.tgt].coords_in_rows(&img).expect("rows span a submodule")
            }
        })
        .collect();
    let sub = Representation::new_unchecked(m.alg.clone(), dims, maps);
    RepMorphism::new_unchecked(sub, m.clone(), rows)
}

/// Quotient of `m` by the submodule spanned by `rows` per vertex; returns the projection.
fn quotient(m: &Representation, rows: &[Matrix]) -> RepMorphism {
    let f = m.field();
    let nv = m.dims.len();
    let mut comps = Vec::with_capacity(nv);
    let mut projs = Vec::with_capacity(nv);
    for v in 0..nv {
        let sub = rows[v].row_space();
        let comp = complement_basis(&sub);
        let full = sub.vstack(&comp);
        let inv = full.inverse().expect("sub + complement is a basis");
        // coordinates of a vector in the basis [sub; comp], keep the comp part
        projs.push(inv.block(0, sub.rows(), m.dims[v], comp.rows()));
        comps.push(comp);
    }
    let dims: Vec<usize> = comps.iter().map(|c| c.rows()).collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            if dims[a.src] == 0 || dims[a.tgt] == 0 {
                Matrix::zeros(f, dims[a.src], dims[a.tgt])
            } else {
                comps[a.src].mul(&m.maps[ai]).mul(&projs[a.tgt])
            }
        })
        .collect();
    let q = Representation::new_unchecked(m.alg.clone(), dims, maps);
    RepMorphism::new_unchecked(m.clone(), q, projs)
}

/// Kernel with its inclusion.
pub fn kernel(f: &RepMorphism) -> RepMorphism {
    let rows = f.maps.iter().map(|m| m.kernel_basis()).collect();
    submodule(&f.src, rows)
}

/// Image with the factorization `src ↠ im ↪ tgt`.
pub fn image(f: &RepMorphism) -> (RepMorphism, RepMorphism) {
    let rows: Vec<Matrix> = f.maps.iter().map(|m| m.row_space()).collect();
    let incl = submodule(&f.tgt, rows);
    let maps = f
        .maps
        .iter()
        .zip(&incl.maps)
        .map(|(m, r)| {
            if r.rows() == 0 {
                Matrix::zeros(m.field(), m.rows(), 0)
            } else {
                r.coords_in_rows(m).expect("image lies in its row space")
            }
        })
        .collect();
    let onto = RepMorphism::new_unchecked(f.src.clone(), incl.src.clone(), maps);
    (onto, incl)
}

/// Cokernel with its projection.
pub fn cokernel(f: &RepMorphism) -> RepMorphism {
    quotient(&f.tgt, &f.maps)
}

/// Projective cover `P ↠ M` with the vertex of each indecomposable summand.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub tops: Vec<usize>,
    pub epi: RepMorphism,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let alg = m.alg.clone();
    let mut tops = Vec::new();
    let mut parts: Vec<RepMorphism> = Vec::new();
    for v in 0..m.dims.len() {
        let rad = m.radical_at(v);
        let top = complement_basis(&rad);
        for r in 0..top.rows() {
            tops.push(v);
            parts.push(from_projective(&alg, v, top.row(r), m));
        }
    }
    let epi = if parts.is_empty() {
        RepMorphism::zero(&Representation::zero(&alg), m)
    } else {
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = acc.hcat(p).expect("same algebra");
        }
        acc
    };
    ProjectiveCover { tops, epi }
}

/// `⊕ P_{v_i}` for a list of vertices.
pub fn projective_sum(alg: &Algebra, tops: &[usize]) -> Representation {
    let parts: Vec<Representation> = tops.iter().map(|&v| Representation::projective(alg, v)).collect();
    Representation::direct_sum_all(alg, &parts).expect("same algebra")
}

/// Witness for `X ∈ add(G_1, …, G_n)`: the universal map `u` onto `X` and a
/// section `s` with `u ∘ s = id_X`.
#[derive(Clone, Debug)]
pub struct AddWitness {
    pub universal: RepMorphism,
    pub section: RepMorphism,
    /// Generator index of each summand of the universal map's source.
    pub summands: Vec<usize>,
}

/// The universal map `⊕_i G_i^{dim Hom(G_i, X)} → X` and its summand labels.
pub fn universal_map(x: &Representation, gens: &[Representation]) -> Result<(RepMorphism, Vec<usize>, Vec<HomSpace>)> {
    let mut acc: Option<RepMorphism> = None;
    let mut labels = Vec::new();
    let mut spaces = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let h = hom(g, x)?;
        for b in &h.basis {
            labels.push(i);
            acc = Some(match acc {
                None => b.clone(),
                Some(a) => a.hcat(b)?,
            });
        }
        spaces.push(h);
    }
    let u = acc.unwrap_or_else(|| RepMorphism::zero(&Representation::zero(x.algebra()), x));
    Ok((u, labels, spaces))
}

/// Decides whether `x` is a direct summand of a sum of copies of `gens`.
pub fn add_membership(x: &Representation, gens: &[Representation]) -> Result<Option<AddWitness>> {
    for g in gens {
        same_alg(&x.alg, &g.alg)?;
    }
    let f = x.field();
    let (universal, summands, to_x) = universal_map(x, gens)?;
    if x.is_zero() {
        let section = RepMorphism::zero(x, &universal.src);
        return Ok(Some(AddWitness { universal, section, summands }));
    }
    // span of t ∘ g for g: X → G_i, t: G_i → X
    let mut products: Vec<(usize, usize, usize, RepMorphism)> = Vec::new();
    let mut from_x = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let h = hom(x, g)?;
        for (k, gk) in h.basis.iter().enumerate() {
            for (j, tj) in to_x[i].basis.iter().enumerate() {
                products.push((i, j, k, gk.then(tj)));
            }
        }
        from_x.push(h);
    }
    let width = RepMorphism::identity(x).flatten().len();
    let span = Matrix::from_rows(f, width, products.iter().map(|p| p.3.flatten()).collect());
    let id = Matrix::from_rows(f, width, vec![RepMorphism::identity(x).flatten()]);
    let Some(c) = span.solve_left(&id)? else {
        return Ok(None);
    };
    // component (i, j) of the section is Σ_k c_ijk g_ik
    let mut comps: Vec<RepMorphism> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for j in 0..to_x[i].basis.len() {
            let mut s = RepMorphism::zero(x, g);
            for (pi, (gi, pj, k, _)) in products.iter().enumerate() {
                if *gi == i && *pj == j {
                    s = s.add(&from_x[i].basis[*k].scale(&c[(0, pi)]));
                }
            }
            comps.push(s);
        }
    }
    let mut section = RepMorphism::zero(x, &Representation::zero(x.algebra()));
    for (n, s) in comps.iter().enumerate() {
        section = if n == 0 { s.clone() } else { section.vcat(s)? };
    }
    debug_assert!(section.then(&universal) == RepMorphism::identity(x));
    Ok(Some(AddWitness { universal, section, summands }))
}

/// Splits off all projective summands: returns the complement and the vertices
/// of the removed `P_v`.
pub fn strip_projective_summands(x: &Representation) -> Result<(Representation, Vec<usize>)> {
    let alg = x.alg.clone();
    let mut cur = x.clone();
    let mut removed = Vec::new();
    'outer: loop {
        for v in 0..alg.vertex_count() {
            if cur.dims[v] == 0 {
                continue;
            }
            let p = Representation::projective(&alg, v);
            let e_col = alg.projective_data(v).local_index(0);
            let h = hom(&cur, &p)?;
            for g in &h.basis {
                let m = &g.maps[v];
                if (0..m.rows()).any(|r| !alg.field().is_zero(&m[(r, e_col)])) {
                    // g hits the top of P_v, hence is a split epi
                    cur = kernel(g).src;
                    removed.push(v);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok((cur, removed))
}

/// Stable isomorphism of modules whose cores (after removing projective
/// summands) are indecomposable or zero.
pub fn stable_iso(x: &Representation, y: &Representation) -> Result<bool> {
    same_alg(&x.alg, &y.alg)?;
    let (cx, _) = strip_projective_summands(x)?;
    let (cy, _) = strip_projective_summands(y)?;
    iso_of_cores(&cx, &cy)
}

/// Isomorphism test for modules without projective summands, assuming
/// indecomposability.
pub(crate) fn iso_of_cores(cx: &Representation, cy: &Representation) -> Result<bool> {
    if cx.dims != cy.dims {
        return Ok(false);
    }
    if cx.is_zero() {
        return Ok(true);
    }
    let exx = hom(cx, cx)?.dim();
    if hom(cy, cy)?.dim() != exx || hom(cx, cy)?.dim() != exx || hom(cy, cx)?.dim() != exx {
        return Ok(false);
    }
    Ok(add_membership(cx, std::slice::from_ref(cy))?.is_some()
        && add_membership(cy, std::slice::from_ref(cx))?.is_some())
}

/// Full isomorphism test for modules assumed indecomposable (including projectives).
pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool> {
    same_alg(&x.alg, &y.alg)?;
    iso_of_cores(x, y)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Indecomposability {
    Indecomposable,
    /// An endomorphism that is neither invertible nor nilpotent.
    Decomposable(RepMorphism),
    Unknown,
}

/// Local-endomorphism-ring test: probes seeded random endomorphisms, then
/// enumerates `End(X)` exhaustively when it has at most 2^20 elements.
pub fn check_indecomposable(x: &Representation, seed: u64, probes: usize) -> Result<Indecomposability> {
    if x.is_zero() {
        return Ok(Indecomposability::Unknown);
    }
    let end = hom(x, x)?;
    if end.dim() == 1 {
        return Ok(Indecomposability::Indecomposable);
    }
    let f = x.field();
    let n = x.dim();
    let bad = |e: &RepMorphism| !e.is_iso() && !e.total_matrix().pow(n).is_zero();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..probes {
        let coefs: Vec<Scalar> = (0..end.dim())
            .map(|_| match f {
                Field::Prime { p } => f.from_i64(rng.gen_range(0..p) as i64),
                Field::Rational => f.from_i64(rng.gen_range(-5..=5)),
            })
            .collect();
        let e = end.combine(&coefs);
        if bad(&e) {
            return Ok(Indecomposability::Decomposable(e));
        }
    }
    let Some(elements) = f.elements() else {
        return Ok(Indecomposability::Unknown);
    };
    let q = elements.len() as u128;
    if q.checked_pow(end.dim() as u32).is_none_or(|c| c > 1 << 20) {
        return Ok(Indecomposability::Unknown);
    }
    let mut idx = vec![0usize; end.dim()];
    loop {
        let coefs: Vec<Scalar> = idx.iter().map(|&i| elements[i].clone()).collect();
        let e = end.combine(&coefs);
        if bad(&e) {
            return Ok(Indecomposability::Decomposable(e));
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(Indecomposability::Indecomposable);
            }
            idx[k] += 1;
            if idx[k] < elements.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::quiver::{Quiver, Relation};

    pub fn kx(n: usize, field: Field) -> Algebra {
        let q = Quiver::new(vec!["0".into()], vec![("x".into(), "0".into(), "0".into())]).unwrap();
        let rel = Relation::zero_relation(field, Path::from_arrows(&q, vec![0; n]).unwrap()).unwrap();
        Arc::new(BoundQuiverAlgebra::compute_basis(q, vec![rel], field, n + 1).unwrap())
    }

    pub fn a2(field: Field) -> Algebra {
        let q = Quiver::new(vec!["u".into(), "v".into()], vec![("a".into(), "u".into(), "v".into())]).unwrap();
        Arc::new(BoundQuiverAlgebra::compute_basis(q, vec![], field, 2).unwrap())
    }

    /// Uniserial `k[x]/(x^n)`-module of length `m`.
    pub fn uniserial(alg: &Algebra, m: usize) -> Representation {
        let f = alg.field();
        let mut x = Matrix::zeros(f, m, m);
        for i in 0..m.saturating_sub(1) {
            x[(i, i + 1)] = f.one();
        }
        Representation::new(alg.clone(), vec![m], vec![x]).unwrap()
    }

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn projective_shapes() {
        let a = kx(2, f2());
        let p = Representation::projective(&a, 0);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.arrow_map(0).rank(), 1);
        let h = a2(f2());
        assert_eq!(Representation::projective(&h, 0).dims(), &[1, 1]);
        assert_eq!(Representation::projective(&h, 1).dims(), &[0, 1]);
    }

    #[test]
    fn hom_dimensions_kx2() {
        let a = kx(2, f2());
        let p = Representation::projective(&a, 0);
        let s = Representation::simple(&a, 0);
        assert_eq!(hom(&p, &p).unwrap().dim(), 2);
        assert_eq!(hom(&s, &s).unwrap().dim(), 1);
        assert_eq!(hom(&p, &s).unwrap().dim(), 1);
        assert_eq!(hom(&s, &p).unwrap().dim(), 1);
    }

    #[test]
    fn kernel_cokernel_image() {
        let a = kx(2, Field::Rational);
        let p = Representation::projective(&a, 0);
        let id = RepMorphism::identity(&p);
        assert!(kernel(&id).src.is_zero());
        let cover = projective_cover(&Representation::simple(&a, 0));
        assert_eq!(cover.tops, vec![0]);
        let k = kernel(&cover.epi).src;
        assert_eq!(k.dims(), &[1]);
        assert!(is_isomorphic(&k, &Representation::simple(&a, 0)).unwrap());
        let z = RepMorphism::zero(&Representation::zero(&a), &p);
        let c = cokernel(&z);
        assert_eq!(c.tgt.dims(), p.dims());
        assert!(c.is_iso());
        let (onto, incl) = image(&cover.epi);
        assert!(onto.is_epi() && incl.is_mono());
    }

    #[test]
    fn add_membership_cases() {
        let a = kx(2, f2());
        let p = Representation::projective(&a, 0);
        let s = Representation::simple(&a, 0);
        let ps = p.direct_sum(&s).unwrap();
        let w = add_membership(&ps, &[p.clone(), s.clone()]).unwrap().unwrap();
        assert_eq!(w.section.then(&w.universal), RepMorphism::identity(&ps));
        assert!(add_membership(&s, &[p.clone()]).unwrap().is_none());
        assert!(add_membership(&Representation::zero(&a), &[p]).unwrap().is_some());
    }

    #[test]
    fn covers_and_stable_iso() {
        let a = kx(2, f2());
        let p = Representation::projective(&a, 0);
        let s = Representation::simple(&a, 0);
        assert!(kernel(&projective_cover(&p).epi).src.is_zero());
        let c0 = projective_cover(&Representation::zero(&a));
        assert!(c0.tops.is_empty());
        assert!(!stable_iso(&s, &p).unwrap());
        assert!(stable_iso(&s, &s.direct_sum(&p).unwrap()).unwrap());
        assert!(stable_iso(&p, &Representation::zero(&a)).unwrap());
    }

    #[test]
    fn injectives_of_a2() {
        let a = a2(f2());
        let op = a.opposite().unwrap();
        // I_u = S_u, I_v = P_u
        let iu = Representation::injective(&a, &op, 0);
        let iv = Representation::injective(&a, &op, 1);
        assert_eq!(iu.dims(), &[1, 0]);
        assert!(is_isomorphic(&iv, &Representation::projective(&a, 0)).unwrap());
    }

    #[test]
    fn indecomposability_probe() {
        let a = kx(3, f2());
        let u2 = uniserial(&a, 2);
        assert_eq!(check_indecomposable(&u2, 7, 8).unwrap(), Indecomposability::Indecomposable);
        let d = u2.direct_sum(&uniserial(&a, 1)).unwrap();
        assert!(matches!(check_indecomposable(&d, 7, 8).unwrap(), Indecomposability::Decomposable(_)));
    }

    #[test]
    fn relation_violation_rejected() {
        let a = kx(2, f2());
        let m = Matrix::identity(f2(), 1);
        assert!(Representation::new(a, vec![1], vec![m]).is_err());
    }
}
