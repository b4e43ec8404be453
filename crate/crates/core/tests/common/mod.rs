//! Shared fixtures for the property suites: a family of verified reflexive
//! base polytopes and bounded random unimodular transforms.

use polymirror_core::{hull, LatticePoint, LatticePolytope};

pub const BASES: &[&[[i64; 3]]] = &[
    &[[-1, -1, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
    &[[-4, -4, -3], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
    &[
        [-1, -1, -1],
        [-1, -1, 1],
        [-1, 1, -1],
        [-1, 1, 1],
        [1, -1, -1],
        [1, -1, 1],
        [1, 1, -1],
        [1, 1, 1],
    ],
    &[
        [-1, 0, 0],
        [0, -1, 0],
        [0, 0, -1],
        [0, 0, 1],
        [0, 1, 0],
        [1, 0, 0],
    ],
    &[[-1, -2, -4], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
    &[[-2, -3, -6], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
    &[
        [-1, -1, -1],
        [-1, -1, 1],
        [0, 1, -1],
        [0, 1, 1],
        [1, 0, -1],
        [1, 0, 1],
    ],
    &[
        [-1, 0, -1],
        [-1, 0, 1],
        [-1, 1, -1],
        [-1, 1, 1],
        [0, -1, -1],
        [0, -1, 1],
        [0, 1, -1],
        [0, 1, 1],
        [1, -1, -1],
        [1, -1, 1],
        [1, 0, -1],
        [1, 0, 1],
    ],
    &[[-1, -1, 0], [0, 0, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
    &[
        [-1, -1, -1],
        [-1, -1, 1],
        [-1, 1, -1],
        [-1, 1, 1],
        [1, -1, -1],
        [1, -1, 1],
        [1, 1, -1],
    ],
    &[[-1, -1, 1], [-1, 1, 1], [0, 0, -1], [1, -1, 1], [1, 1, 1]],
    // self-dual heptahedron
    &[
        [-1, -1, 1],
        [-1, 0, -1],
        [-1, 0, 1],
        [1, -1, 1],
        [1, 0, -1],
        [1, 0, 1],
        [1, 1, -1],
    ],
];

pub type Mat3 = [[i64; 3]; 3];

pub const IDENTITY: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// One elementary lattice-preserving operation.
#[derive(Clone, Copy, Debug)]
pub enum ElementaryOp {
    SwapRows(usize, usize),
    NegateRow(usize),
    /// row i += sign * row j
    AddRow(usize, usize, i64),
}

pub fn apply_op(m: &mut Mat3, op: ElementaryOp) {
    match op {
        ElementaryOp::SwapRows(i, j) => m.swap(i, j),
        ElementaryOp::NegateRow(i) => {
            for v in &mut m[i] {
                *v = -*v;
            }
        }
        ElementaryOp::AddRow(i, j, s) => {
            let src = m[j];
            for (dst, v) in m[i].iter_mut().zip(src) {
                *dst += s * v;
            }
        }
    }
}

/// Folds elementary ops into a unimodular matrix, stopping before any entry
/// grows past `bound` so transformed hulls stay small.
pub fn unimodular_from_ops(ops: &[ElementaryOp], bound: i64) -> Mat3 {
    let mut m = IDENTITY;
    for &op in ops {
        let mut next = m;
        apply_op(&mut next, op);
        if next.iter().flatten().any(|v| v.abs() > bound) {
            break;
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
    LatticePolytope::hull_from_points(&pts).expect("unimodular image of a polytope is a polytope")
}

pub fn base(index: usize) -> LatticePolytope {
    hull(BASES[index % BASES.len()]).expect("base polytope is valid")
}
