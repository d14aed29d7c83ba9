//! Minimal projective resolutions, syzygies, Ext and stable Hom.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::linalg::{Matrix, Scalar};
use crate::rep::{
    from_projective, hom, kernel, projective_cover, projective_sum, strip_projective_summands, HomSpace,
    RepMorphism, Representation,
};

/// A minimal projective resolution `… → P_1 → P_0 → M → 0`, computed to a
/// given length.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub module: Representation,
    /// Vertices of the indecomposable summands of each `P_i`.
    pub tops: Vec<Vec<usize>>,
    pub terms: Vec<Representation>,
    /// `covers[i]: P_i ↠ Ω^i M`.
    pub covers: Vec<RepMorphism>,
    /// `inclusions[i]: Ω^{i+1} M ↪ P_i`.
    pub inclusions: Vec<RepMorphism>,
    /// `syzygies[i] = Ω^i M`, for `i` up to `len + 1`.
    pub syzygies: Vec<Representation>,
}

impl ProjectiveResolution {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `d_i: P_i → P_{i-1}` for `i ≥ 1`; `d_0` is the augmentation `P_0 → M`.
    pub fn differential(&self, i: usize) -> RepMorphism {
        if i == 0 {
            self.covers[0].clone()
        } else {
            self.covers[i].then(&self.inclusions[i - 1])
        }
    }

    /// Row of `d_i` giving the image of the generator of summand `t` of `P_i`,
    /// as a vector in `(P_{i-1})_{v_t}` (or in `M_{v_t}` for `i = 0`).
    fn generator_image(&self, i: usize, t: usize) -> Vec<Scalar> {
        let alg = self.module.algebra();
        let v = self.tops[i][t];
        // position of the generator of summand t inside (P_i)_v
        let before: usize = self.tops[i][..t].iter().map(|&w| alg.projective_data(w).dim_at(v)).sum();
        let row = before + alg.projective_data(v).local_index(0);
        self.differential(i).maps[v].row(row).to_vec()
    }
}

/// Minimal resolution with terms `P_0 … P_len`.
pub fn resolve(m: &Representation, len: usize) -> ProjectiveResolution {
    let mut res = ProjectiveResolution {
        module: m.clone(),
        tops: Vec::new(),
        terms: Vec::new(),
        covers: Vec::new(),
        inclusions: Vec::new(),
        syzygies: vec![m.clone()],
    };
    for i in 0..=len {
        let cur = res.syzygies[i].clone();
        let cover = projective_cover(&cur);
        let incl = kernel(&cover.epi);
        res.tops.push(cover.tops);
        res.terms.push(cover.epi.src.clone());
        res.covers.push(cover.epi);
        res.syzygies.push(incl.src.clone());
        res.inclusions.push(incl);
    }
    res
}

/// `Ω^k M` on the nose (kernel of the minimal cover, iterated).
pub fn syzygy(m: &Representation, k: usize) -> Representation {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        cur = kernel(&projective_cover(&cur).epi).src;
    }
    cur
}

/// Lifts `f ∘ cover_M` through `cover_N` summand by summand.
pub fn lift_through_cover(
    f: &RepMorphism,
    cover_src: &RepMorphism,
    tops_src: &[usize],
    cover_tgt: &RepMorphism,
) -> RepMorphism {
    let alg = f.src.algebra().clone();
    let fld = f.src.field();
    let comp = cover_src.then(f);
    let q = &cover_tgt.src;
    let mut acc: Option<RepMorphism> = None;
    let mut offsets = vec![0usize; alg.vertex_count()];
    for &v in tops_src {
        let row = offsets[v] + alg.projective_data(v).local_index(0);
        for w in 0..alg.vertex_count() {
            offsets[w] += alg.projective_data(v).dim_at(w);
        }
        let y = Matrix::from_rows(fld, comp.maps[v].cols(), vec![comp.maps[v].row(row).to_vec()]);
        let x = if q.dims()[v] == 0 {
            Vec::new()
        } else {
            cover_tgt.maps[v].solve_left(&y).expect("shapes agree").expect("cover is surjective").row(0).to_vec()
        };
        let g = from_projective(&alg, v, &x, q);
        acc = Some(match acc {
            None => g,
            Some(a) => a.hcat(&g).expect("same algebra"),
        });
    }
    acc.unwrap_or_else(|| RepMorphism::zero(&cover_src.src, q))
}

/// `Ω(f): Ω M → Ω N`, a lift through the minimal covers restricted to kernels.
/// Well defined modulo maps factoring through projectives.
pub fn syzygy_morphism(f: &RepMorphism) -> RepMorphism {
    let cm = projective_cover(&f.src);
    let cn = projective_cover(&f.tgt);
    let km = kernel(&cm.epi);
    let kn = kernel(&cn.epi);
    let g = lift_through_cover(f, &cm.epi, &cm.tops, &cn.epi);
    restrict_to_kernels(&km, &g, &kn)
}

/// The map `ker → ker'` induced by `g` (which must send `km` into `kn`).
pub(crate) fn restrict_to_kernels(km: &RepMorphism, g: &RepMorphism, kn: &RepMorphism) -> RepMorphism {
    let fld = g.src.field();
    let maps = (0..g.maps.len())
        .map(|v| {
            let img = km.maps[v].mul(&g.maps[v]);
            if kn.maps[v].rows() == 0 {
                Matrix::zeros(fld, km.src.dims()[v], 0)
            } else {
                kn.maps[v].coords_in_rows(&img).expect("lift maps kernel into kernel")
            }
        })
        .collect();
    RepMorphism::new_unchecked(km.src.clone(), kn.src.clone(), maps)
}

/// Matrix of `d_i^*: Hom(P_{i-1}, N) → Hom(P_i, N)` in the bases
/// `Hom(P_j, N) ≅ ⊕_t N_{v_t}`. Rows index `Hom(P_{i-1}, N)`, columns `Hom(P_i, N)`.
fn coboundary(res: &ProjectiveResolution, n: &Representation, i: usize) -> Matrix {
    let alg = res.module.algebra();
    let fld = n.field();
    let dim_hom = |j: usize| -> usize { res.tops[j].iter().map(|&v| n.dims()[v]).sum() };
    let (rows, cols) = (dim_hom(i - 1), dim_hom(i));
    let mut out = Matrix::zeros(fld, rows, cols);
    let mut col = 0;
    for (t, &w) in res.tops[i].iter().enumerate() {
        let img = res.generator_image(i, t); // element of (P_{i-1})_w
        // split img into summands s of P_{i-1}
        let mut off = 0;
        let mut row = 0;
        for &v in &res.tops[i - 1] {
            let pd = alg.projective_data(v);
            let k = pd.dim_at(w);
            // φ_s(e_v) = x ∈ N_v, φ_s(p) = x·N(p); contribute Σ_p c_p N(p)
            let mut acc = Matrix::zeros(fld, n.dims()[v], n.dims()[w]);
            for (j, &pi) in pd.by_target[w].iter().enumerate() {
                let c = &img[off + j];
                if !fld.is_zero(c) {
                    acc = acc.add(&n.path_action(&pd.paths[pi]).scale(c));
                }
            }
            out.set_block(row, col, &acc);
            off += k;
            row += n.dims()[v];
        }
        col += n.dims()[w];
    }
    out
}

/// `dim Ext^i(M, N)` from a resolution with at least `i + 2` terms.
pub fn ext_from_resolution(res: &ProjectiveResolution, n: &Representation, i: usize) -> usize {
    assert!(res.len() > i + 1, "resolution too short for Ext^{i}");
    let dim_hom: usize = res.tops[i].iter().map(|&v| n.dims()[v]).sum();
    let rank_next = coboundary(res, n, i + 1).rank();
    let rank_prev = if i == 0 { 0 } else { coboundary(res, n, i).rank() };
    dim_hom - rank_next - rank_prev
}

/// Cocycles in `Hom(P_i, N)` spanning a complement of the coboundaries.
pub fn ext_cocycles(res: &ProjectiveResolution, n: &Representation, i: usize) -> Vec<Vec<Scalar>> {
    let next = coboundary(res, n, i + 1);
    let cocycles = next.kernel_basis();
    if i == 0 {
        return cocycles.row_list();
    }
    let bdry = coboundary(res, n, i).row_space();
    let mut chosen = bdry.clone();
    let mut out = Vec::new();
    for r in cocycles.row_list() {
        let cand = chosen.vstack(&Matrix::from_rows(n.field(), chosen.cols(), vec![r.clone()]));
        if cand.rank() > chosen.rank() {
            chosen = cand;
            out.push(r);
        }
    }
    out
}

pub fn ext(m: &Representation, n: &Representation, i: usize) -> usize {
    ext_from_resolution(&resolve(m, i + 1), n, i)
}

/// Stable Hom: `Hom(M, N)` modulo maps factoring through projectives.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub hom: HomSpace,
    /// Rows (in `hom` basis coordinates) spanning the factoring subspace.
    pub factoring: Matrix,
    pub dim: usize,
}

impl StableHomSpace {
    /// Basis-coordinates of a complement of the factoring subspace.
    pub fn quotient_basis(&self) -> Matrix {
        crate::linalg::complement_basis(&self.factoring)
    }

    /// Whether `f` factors through a projective.
    pub fn is_stably_zero(&self, f: &RepMorphism) -> bool {
        let c = self.hom.coords(f).expect("f is a morphism M → N");
        let row = Matrix::from_rows(f.src.field(), c.len(), vec![c]);
        self.factoring.vstack(&row).rank() == self.factoring.rank()
    }

    /// Coordinates of `f` in the quotient, w.r.t. `quotient_basis`.
    pub fn stable_coords(&self, f: &RepMorphism) -> Vec<Scalar> {
        let c = self.hom.coords(f).expect("f is a morphism M → N");
        let q = self.quotient_basis();
        let full = self.factoring.vstack(&q);
        let row = Matrix::from_rows(f.src.field(), c.len(), vec![c]);
        let x = full.solve_left(&row).expect("shapes").expect("spans the whole space");
        (self.factoring.rows()..full.rows()).map(|j| x[(0, j)].clone()).collect()
    }
}

pub fn stable_hom(m: &Representation, n: &Representation) -> Result<StableHomSpace> {
    let h = hom(m, n)?;
    let cover = projective_cover(n);
    let to_p = hom(m, &cover.epi.src)?;
    let fld = m.field();
    let rows: Vec<Vec<Scalar>> =
        to_p.basis.iter().map(|g| h.coords(&g.then(&cover.epi)).expect("composite lies in Hom(M, N)")).collect();
    let factoring = Matrix::from_rows(fld, h.dim(), rows).row_space();
    let dim = h.dim() - factoring.rows();
    Ok(StableHomSpace { hom: h, factoring, dim })
}

/// `Ext^1(Ω^k M, P_v) = 0` for every vertex: Ω is fully faithful at `Ω^k M`.
pub fn omega_stabilizes(m: &Representation, k: usize) -> bool {
    let x = syzygy(m, k);
    ext1_vanishes_on_projectives(&x)
}

pub fn ext1_vanishes_on_projectives(x: &Representation) -> bool {
    let alg = x.algebra();
    let res = resolve(x, 2);
    (0..alg.vertex_count()).all(|v| ext_from_resolution(&res, &Representation::projective(alg, v), 1) == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdVerdict {
    Finite(usize),
    InfinitePeriodic { preperiod: usize, period: usize },
    Undetermined(usize),
}

#[derive(Clone, Debug)]
pub struct PdCertificate {
    pub verdict: PdVerdict,
    /// Dimension vectors of `Ω^0 M, Ω^1 M, …` as far as computed.
    pub syzygy_dims: Vec<Vec<usize>>,
}

/// Projective dimension: finite if some `Ω^n M = 0` with `n ≤ horizon`,
/// infinite if `Ω^a M ≅ Ω^b M` stably with `a < b ≤ horizon` and the class nonzero.
pub fn pd_certificate(m: &Representation, horizon: usize) -> Result<PdCertificate> {
    let mut syz = vec![m.clone()];
    let mut cores: Vec<Representation> = Vec::new();
    for b in 0..=horizon {
        let cur = syz[b].clone();
        if cur.is_zero() {
            let dims = syz.iter().map(|s| s.dims().to_vec()).collect();
            return Ok(PdCertificate { verdict: PdVerdict::Finite(b.saturating_sub(1)), syzygy_dims: dims });
        }
        let (core, _) = strip_projective_summands(&cur)?;
        if !core.is_zero() {
            for (a, prev) in cores.iter().enumerate() {
                if !prev.is_zero() && crate::rep::iso_of_cores(prev, &core)? {
                    let dims = syz.iter().map(|s| s.dims().to_vec()).collect();
                    return Ok(PdCertificate {
                        verdict: PdVerdict::InfinitePeriodic { preperiod: a, period: b - a },
                        syzygy_dims: dims,
                    });
                }
            }
        }
        cores.push(core);
        if b < horizon {
            syz.push(syzygy(&cur, 1));
        }
    }
    let dims = syz.iter().map(|s| s.dims().to_vec()).collect();
    Ok(PdCertificate { verdict: PdVerdict::Undetermined(horizon), syzygy_dims: dims })
}

type CacheKey = (usize, Vec<usize>, Vec<Vec<String>>);

/// Memo table for syzygy sequences, keyed by the module's matrices.
#[derive(Default, Clone)]
pub struct SyzygyCache {
    inner: Arc<Mutex<HashMap<CacheKey, Vec<Representation>>>>,
}

impl SyzygyCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(m: &Representation) -> CacheKey {
        let f = m.field();
        let mats = m.maps().iter().map(|x| x.entries().iter().map(|s| f.format(s)).collect()).collect();
        (Arc::as_ptr(m.algebra()) as usize, m.dims().to_vec(), mats)
    }

    /// `[Ω^0 M, …, Ω^k M]`.
    pub fn syzygies(&self, m: &Representation, k: usize) -> Vec<Representation> {
        let key = Self::key(m);
        let mut known = self.inner.lock().expect("cache lock").get(&key).cloned().unwrap_or_else(|| vec![m.clone()]);
        while known.len() <= k {
            let next = syzygy(known.last().expect("nonempty"), 1);
            known.push(next);
        }
        self.inner.lock().expect("cache lock").insert(key, known.clone());
        known.truncate(k + 1);
        known
    }

    pub fn syzygy(&self, m: &Representation, k: usize) -> Representation {
        self.syzygies(m, k).pop().expect("nonempty")
    }
}

/// Sum of projectives covering `M`, re-exported for callers needing the object only.
pub fn cover_object(m: &Representation) -> Representation {
    let c = projective_cover(m);
    projective_sum(m.algebra(), &c.tops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::rep::tests::{a2, kx, uniserial};
    use crate::rep::{is_isomorphic, stable_iso};

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn resolve_projective_and_simple() {
        let a = kx(2, f3());
        let p = Representation::projective(&a, 0);
        let r = resolve(&p, 3);
        assert!(r.syzygies[1].is_zero());
        assert!(r.terms[1].is_zero());
        let s = Representation::simple(&a, 0);
        let r = resolve(&s, 3);
        for i in 0..=3 {
            assert_eq!(r.terms[i].dims(), &[2]);
            assert!(is_isomorphic(&r.syzygies[i + 1], &s).unwrap());
        }
    }

    #[test]
    fn hereditary_resolution() {
        let a = a2(f3());
        let su = Representation::simple(&a, 0);
        let r = resolve(&su, 2);
        assert_eq!(r.tops[0], vec![0]);
        assert_eq!(r.tops[1], vec![1]);
        assert!(r.terms[2].is_zero());
        assert_eq!(ext(&su, &Representation::simple(&a, 1), 1), 1);
        assert_eq!(ext(&su, &Representation::simple(&a, 1), 2), 0);
        assert_eq!(ext(&su, &Representation::projective(&a, 1), 1), 1);
    }

    #[test]
    fn ext_kx2() {
        let a = kx(2, Field::Rational);
        let s = Representation::simple(&a, 0);
        let p = Representation::projective(&a, 0);
        for i in 0..4 {
            assert_eq!(ext(&s, &s, i), 1);
        }
        assert_eq!(ext(&p, &s, 1), 0);
        assert_eq!(ext(&p, &p, 2), 0);
        assert_eq!(ext(&s, &p, 0), 1);
        let res = resolve(&s, 3);
        assert_eq!(ext_cocycles(&res, &s, 2).len(), 1);
    }

    #[test]
    fn stable_hom_values() {
        let a = kx(2, f3());
        let s = Representation::simple(&a, 0);
        let p = Representation::projective(&a, 0);
        assert_eq!(stable_hom(&s, &s).unwrap().dim, 1);
        assert_eq!(stable_hom(&s, &p).unwrap().dim, 0);
        assert_eq!(stable_hom(&p, &p).unwrap().dim, 0);
        let a3 = kx(3, f3());
        // End(M_1) over k[x]/(x^3): the identity does not factor
        let m1 = uniserial(&a3, 1);
        let m2 = uniserial(&a3, 2);
        assert_eq!(stable_hom(&m1, &m1).unwrap().dim, 1);
        assert_eq!(stable_hom(&m2, &m2).unwrap().dim, 1);
        assert_eq!(stable_hom(&m1, &m2).unwrap().dim, 1);
    }

    #[test]
    fn syzygy_morphism_basics() {
        let a = kx(2, f3());
        let s = Representation::simple(&a, 0);
        let id = RepMorphism::identity(&s);
        let om = syzygy_morphism(&id);
        let st = stable_hom(&om.src, &om.tgt).unwrap();
        assert!(!st.is_stably_zero(&om));
        let z = syzygy_morphism(&RepMorphism::zero(&s, &s));
        assert!(z.is_zero());
    }

    #[test]
    fn pd_verdicts() {
        let a = kx(2, f3());
        let p = Representation::projective(&a, 0);
        assert_eq!(pd_certificate(&p, 4).unwrap().verdict, PdVerdict::Finite(0));
        let s = Representation::simple(&a, 0);
        assert_eq!(
            pd_certificate(&s, 4).unwrap().verdict,
            PdVerdict::InfinitePeriodic { preperiod: 0, period: 1 }
        );
        let h = a2(f3());
        assert_eq!(pd_certificate(&Representation::simple(&h, 0), 4).unwrap().verdict, PdVerdict::Finite(1));
    }

    #[test]
    fn omega_stabilizes_cases() {
        let a = kx(2, f3());
        assert!(omega_stabilizes(&Representation::simple(&a, 0), 0));
        assert!(omega_stabilizes(&Representation::simple(&a, 0), 3));
        let h = a2(f3());
        assert!(!omega_stabilizes(&Representation::simple(&h, 0), 0));
        assert!(omega_stabilizes(&Representation::projective(&h, 0), 0));
    }

    #[test]
    fn cache_matches_direct() {
        let a = kx(3, f3());
        let m = uniserial(&a, 1);
        let cache = SyzygyCache::new();
        let s = cache.syzygies(&m, 3);
        assert_eq!(s.len(), 4);
        assert!(stable_iso(&s[2], &m).unwrap());
        assert_eq!(cache.syzygy(&m, 1), syzygy(&m, 1));
    }
}
