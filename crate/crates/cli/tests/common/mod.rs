//! Shared fixtures for the CLI integration and acceptance suites: the
//! bundled corpus, seeded unimodular transforms, and the enumeration-based
//! counting oracle.
#![allow(dead_code)] // each test target uses a different subset

use std::path::PathBuf;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use polymirror_cli::parse_vertex_file;
use polymirror_core::{enumerate_lattice_points, Face, LatticePoint, LatticePolytope};

pub fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/corpus.txt")
}

/// The polytopes of the bundled corpus file, in file order.
pub fn corpus_bases() -> Vec<LatticePolytope> {
    let text = std::fs::read_to_string(corpus_path()).expect("bundled corpus present");
    parse_vertex_file(&text).expect("bundled corpus parses")
}

pub type Mat3 = [[i64; 3]; 3];

/// A random unimodular matrix with entries bounded by 6, built from
/// elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> Mat3 {
    let mut m: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..rng.random_range(2..12) {
        let mut next = m;
        match rng.random_range(0..3) {
            0 => {
                let i = rng.random_range(0..3);
                let j = (i + rng.random_range(1..3)) % 3;
                next.swap(i, j);
            }
            1 => {
                let i = rng.random_range(0..3);
                for v in &mut next[i] {
                    *v = -*v;
                }
            }
            _ => {
                let i = rng.random_range(0..3);
                let j = (i + rng.random_range(1..3)) % 3;
                let s = if rng.random_bool(0.5) { 1 } else { -1 };
                let src = next[j];
                for (dst, v) in next[i].iter_mut().zip(src) {
                    *dst += s * v;
                }
            }
        }
        if next.iter().flatten().any(|v| v.abs() > 6) {
            continue;
        }
        m = next;
    }
    m
}

pub fn transform(m: &Mat3, p: &LatticePolytope) -> LatticePolytope {
    let pts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| {
            LatticePoint::new(
                m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
            )
        })
        .collect();
    LatticePolytope::hull_from_points(&pts).expect("unimodular image stays a polytope")
}

/// The corpus extended with polar duals and seeded unimodular images.
pub fn extended_corpus() -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let bases = corpus_bases();
    let mut all = Vec::with_capacity(bases.len() * 3);
    for p in &bases {
        all.push(transform(&random_unimodular(&mut rng), p));
        all.push(p.polar_dual().expect("corpus polytopes are reflexive"));
        all.push(p.clone());
    }
    all
}

/// Per-face counts by filtering enumerated points on active facet sets; the
/// independent oracle for the gcd/Pick fast path.
pub fn brute_face_counts(p: &LatticePolytope, face: &Face) -> (i64, i64) {
    let target: Vec<usize> = p
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            face.vertex_indices()
                .iter()
                .all(|vi| f.vertex_cycle().contains(vi))
        })
        .map(|(i, _)| i)
        .collect();
    let mut l = 0;
    let mut l_star = 0;
    for q in enumerate_lattice_points(p) {
        let active: Vec<usize> = p
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.normal.dot(q) == -f.offset)
            .map(|(i, _)| i)
            .collect();
        if target.iter().all(|t| active.contains(t)) {
            l += 1;
            if active == target {
                l_star += 1;
            }
        }
    }
    (l, l_star)
}
