#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use singcat_core::fixtures::{hereditary_a2, truncated_polynomial};
use singcat_core::homology::syzygy;
use singcat_core::linalg::{Field, Scalar};
use singcat_core::nakayama::nakayama_cyclic;
use singcat_core::quiver::{BoundQuiverAlgebra, Path, Quiver, Relation};
use singcat_core::rep::{projective_cover, Algebra, Representation};
use singcat_core::tilting::test_modules;

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn linear(n: usize, zero: &[&[usize]], f: Field) -> Algebra {
    let vs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let arrows = (0..n - 1).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
    let q = Quiver::new(vs, arrows).unwrap();
    let rels = zero.iter().map(|p| Relation::zero_relation(f, Path::from_arrows(&q, p.to_vec()).unwrap()).unwrap()).collect();
    Arc::new(BoundQuiverAlgebra::with_default_bound(q, rels, f).unwrap())
}

fn kronecker(f: Field) -> Algebra {
    let q = Quiver::new(
        vec!["u".into(), "v".into()],
        vec![("a".into(), "u".into(), "v".into()), ("b".into(), "u".into(), "v".into())],
    )
    .unwrap();
    Arc::new(BoundQuiverAlgebra::with_default_bound(q, vec![], f).unwrap())
}

/// Small algebras, all of dimension at most 6.
pub fn small_algebras(f: Field) -> Vec<(&'static str, Algebra)> {
    vec![
        ("k[x]/x^2", truncated_polynomial(2, f).unwrap()),
        ("k[x]/x^3", truncated_polynomial(3, f).unwrap()),
        ("k[x]/x^4", truncated_polynomial(4, f).unwrap()),
        ("A2", hereditary_a2(f).unwrap()),
        ("A3", linear(3, &[], f)),
        ("A3/rad^2", linear(3, &[&[0, 1]], f)),
        ("kronecker", kronecker(f)),
        ("nakayama(2,2)", Arc::new(nakayama_cyclic(&[2, 2], f).unwrap())),
        ("nakayama(2,2,2)", Arc::new(nakayama_cyclic(&[2, 2, 2], f).unwrap())),
    ]
}

/// Simples, projectives, injectives and first syzygies of the simples.
pub fn module_pool(alg: &Algebra) -> Vec<(String, Representation)> {
    let mut out = test_modules(alg).unwrap();
    for v in 0..alg.vertex_count() {
        let s = syzygy(&Representation::simple(alg, v), 1);
        if !s.is_zero() {
            out.push((format!("ΩS[{v}]"), s));
        }
    }
    out
}

/// A module over F_2 with matrices stored as row bitmasks.
pub struct Bits {
    pub dims: Vec<usize>,
    /// `(src, tgt, rows)` per arrow.
    pub arrows: Vec<(usize, usize, Vec<u64>)>,
}

fn bit(s: &Scalar) -> u64 {
    match s {
        Scalar::Mod(x) => *x & 1,
        Scalar::Rat(_) => panic!("F_2 only"),
    }
}

pub fn to_bits(m: &Representation) -> Bits {
    let q = m.algebra().quiver();
    let arrows = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mat = m.arrow_map(i);
            let rows = (0..mat.rows())
                .map(|r| mat.row(r).iter().enumerate().fold(0u64, |acc, (c, x)| acc | (bit(x) << c)))
                .collect();
            (a.src, a.tgt, rows)
        })
        .collect();
    Bits { dims: m.dims().to_vec(), arrows }
}

/// Row-bitmask product of an `r × k` and a `k × c` matrix.
fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .map(|&row| {
            let mut acc = 0;
            for (k, &brow) in b.iter().enumerate() {
                if row >> k & 1 == 1 {
                    acc ^= brow;
                }
            }
            acc
        })
        .collect()
}

/// A family of vertex matrices, one per vertex.
pub type BitMorphism = Vec<Vec<u64>>;

/// Number of free bits of a morphism `M → N`.
pub fn hom_bits(m: &Bits, n: &Bits) -> usize {
    m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum()
}

/// Every module morphism `M → N`, by enumerating all vertex matrices.
pub fn brute_hom(m: &Bits, n: &Bits) -> Vec<BitMorphism> {
    let total = hom_bits(m, n);
    assert!(total <= 22, "brute force over 2^{total} candidates");
    let mut out = Vec::new();
    for code in 0u64..(1u64 << total) {
        let mut f = Vec::with_capacity(m.dims.len());
        let mut off = 0;
        for (v, &dm) in m.dims.iter().enumerate() {
            let dn = n.dims[v];
            let mask = (1u64 << dn) - 1;
            f.push((0..dm).map(|r| (code >> (off + r * dn)) & mask).collect::<Vec<u64>>());
            off += dm * dn;
        }
        let ok = m.arrows.iter().zip(&n.arrows).all(|((s, t, ma), (_, _, na))| mul(ma, &f[*t]) == mul(&f[*s], na));
        if ok {
            out.push(f);
        }
    }
    out
}

pub fn compose(f: &BitMorphism, g: &BitMorphism) -> BitMorphism {
    f.iter().zip(g).map(|(a, b)| mul(a, b)).collect()
}

/// `(dim Hom(M,N), dim of the maps factoring through a projective)` by
/// enumeration; a map factors through a projective iff it factors through
/// the projective cover of `N`.
pub fn brute_stable(m: &Representation, n: &Representation) -> Option<(usize, usize)> {
    let cover = projective_cover(n).epi;
    let (bm, bn, bp) = (to_bits(m), to_bits(n), to_bits(&cover.src));
    if hom_bits(&bm, &bn) > 20 || hom_bits(&bm, &bp) > 20 {
        return None;
    }
    let homs = brute_hom(&bm, &bn);
    let pi: BitMorphism = (0..n.dims().len())
        .map(|v| {
            let mat = &cover.maps[v];
            (0..mat.rows()).map(|r| mat.row(r).iter().enumerate().fold(0u64, |acc, (c, x)| acc | (bit(x) << c))).collect()
        })
        .collect();
    let factoring: HashSet<BitMorphism> = brute_hom(&bm, &bp).iter().map(|g| compose(g, &pi)).collect();
    Some((log2(homs.len()), log2(factoring.len())))
}

fn log2(n: usize) -> usize {
    assert!(n.is_power_of_two(), "{n} is not a subspace size");
    n.trailing_zeros() as usize
}
