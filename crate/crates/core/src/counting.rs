//! Lattice point counting: full enumeration by bounding-box scan, and
//! closed-form per-face counts (gcd for edges, Pick's theorem for facets).
//!
//! The box scan is the reference oracle; the per-face formulas are the fast
//! path and are checked against faithful enumeration in the test suites.

use crate::point::LatticePoint;
use crate::polytope::{Face, Facet, LatticePolytope};

/// Enumerates every lattice point of the polytope in lexicographic order, by
/// scanning the bounding box and filtering with the facet inequalities.
pub fn enumerate_lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    let vs = p.vertices();
    let min = |f: fn(&LatticePoint) -> i64| vs.iter().map(f).min().unwrap();
    let max = |f: fn(&LatticePoint) -> i64| vs.iter().map(f).max().unwrap();
    let (x0, x1) = (min(|v| v.x), max(|v| v.x));
    let (y0, y1) = (min(|v| v.y), max(|v| v.y));
    let (z0, z1) = (min(|v| v.z), max(|v| v.z));
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            for z in z0..=z1 {
                let q = LatticePoint::new(x, y, z);
                if p.contains(q) {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Counts `(l, l*)` for a face: lattice points on the closed face and in its
/// relative interior. A vertex counts `(1, 1)` — a point is its own relative
/// interior.
pub fn face_point_counts(p: &LatticePolytope, face: &Face) -> (i64, i64) {
    let coords: Vec<LatticePoint> = face
        .vertex_indices()
        .iter()
        .map(|&i| p.vertices()[i])
        .collect();
    match face.dim() {
        0 => (1, 1),
        1 => edge_counts(coords[0], coords[1]),
        2 => {
            // Recover the facet polygon: the face lattice indexes facets the
            // same way the facet list does.
            let idx = p
                .face_lattice()
                .locate(face)
                .expect("face does not belong to the polytope")
                .1;
            let facet = &p.facets()[idx];
            polygon_counts(p.vertices(), facet)
        }
        _ => unreachable!(),
    }
}

fn edge_counts(a: LatticePoint, b: LatticePoint) -> (i64, i64) {
    let g = (b - a).content();
    (g + 1, g - 1)
}

/// Pick's theorem on the facet polygon, in the rank-2 lattice of its plane:
/// with normalized area A and B boundary points, the interior count is
/// `A - B/2 + 1`.
fn polygon_counts(vertices: &[LatticePoint], facet: &Facet) -> (i64, i64) {
    let cyc = facet.vertex_cycle();
    let m = cyc.len();
    let mut boundary: i64 = 0;
    for i in 0..m {
        let a = vertices[cyc[i]];
        let b = vertices[cyc[(i + 1) % m]];
        boundary += (b - a).content();
    }
    // Twice the normalized area: the fan cross products are all integer
    // multiples of the primitive normal; their total is (2A) * normal.
    let v0 = vertices[cyc[0]];
    let mut cross_sum: i128 = 0;
    let nn = facet.normal.dot_wide(facet.normal);
    for i in 1..m - 1 {
        let c = (vertices[cyc[i]] - v0).cross(vertices[cyc[i + 1]] - v0);
        cross_sum += c.dot_wide(facet.normal);
    }
    debug_assert_eq!(cross_sum % nn, 0);
    let twice_area = (cross_sum / nn).unsigned_abs() as i64;
    debug_assert_eq!((twice_area - boundary) % 2, 0);
    let interior = (twice_area - boundary) / 2 + 1;
    (interior + boundary, interior)
}

/// Per-face counts for one dimension, indexed like the face lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceCount {
    pub l: i64,
    pub l_star: i64,
}

/// Every counting invariant of a polytope: the total lattice point count,
/// per-face `l`/`l*` for all proper faces, the f-vector and the normalized
/// volume.
#[derive(Clone, Debug)]
pub struct PolytopeStats {
    pub l_total: i64,
    pub f_vector: (usize, usize, usize),
    pub normalized_volume: i64,
    counts: [Vec<FaceCount>; 3],
}

impl PolytopeStats {
    pub fn compute(p: &LatticePolytope) -> Self {
        let l_total = enumerate_lattice_points(p).len() as i64;
        let counts = [
            vec![FaceCount { l: 1, l_star: 1 }; p.faces(0).len()],
            p.faces(1)
                .iter()
                .map(|f| {
                    let (l, l_star) = face_point_counts(p, f);
                    FaceCount { l, l_star }
                })
                .collect(),
            p.facets()
                .iter()
                .map(|facet| {
                    let (l, l_star) = polygon_counts(p.vertices(), facet);
                    FaceCount { l, l_star }
                })
                .collect(),
        ];
        Self {
            l_total,
            f_vector: p.f_vector(),
            normalized_volume: p.normalized_volume(),
            counts,
        }
    }

    /// Counts for the face of the given dimension and index.
    pub fn face(&self, dim: usize, index: usize) -> FaceCount {
        self.counts[dim][index]
    }

    pub fn faces(&self, dim: usize) -> &[FaceCount] {
        &self.counts[dim]
    }

    /// Sum of `l*` over all faces of one dimension.
    pub fn l_star_sum(&self, dim: usize) -> i64 {
        self.counts[dim].iter().map(|c| c.l_star).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull;

    fn cube() -> LatticePolytope {
        hull(&[
            [-1, -1, -1],
            [-1, -1, 1],
            [-1, 1, -1],
            [-1, 1, 1],
            [1, -1, -1],
            [1, -1, 1],
            [1, 1, -1],
            [1, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn cube_has_27_points() {
        assert_eq!(enumerate_lattice_points(&cube()).len(), 27);
    }

    #[test]
    fn long_simplex_has_9_points() {
        let p = hull(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-4, -4, -3]]).unwrap();
        assert_eq!(enumerate_lattice_points(&p).len(), 9);
    }

    #[test]
    fn simplex_dual_has_35_points() {
        let p = hull(&[[-1, -1, -1], [3, -1, -1], [-1, 3, -1], [-1, -1, 3]]).unwrap();
        assert_eq!(enumerate_lattice_points(&p).len(), 35);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let pts = enumerate_lattice_points(&cube());
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cube_edge_counts() {
        let c = cube();
        let a = c.vertex_index(LatticePoint::new(-1, -1, -1)).unwrap();
        let b = c.vertex_index(LatticePoint::new(-1, -1, 1)).unwrap();
        let e = c.edge_index(a, b).unwrap();
        assert_eq!(face_point_counts(&c, &c.faces(1)[e]), (3, 1));
    }

    #[test]
    fn cube_facet_counts() {
        let c = cube();
        // Facet {x = 1}: a 3x3 grid with one interior point.
        let fi = c
            .facet_index_with_normal(LatticePoint::new(-1, 0, 0))
            .unwrap();
        assert_eq!(face_point_counts(&c, &c.faces(2)[fi]), (9, 1));
    }

    #[test]
    fn long_edge_counts() {
        let p = hull(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-4, -4, -3]]).unwrap();
        let a = p.vertex_index(LatticePoint::new(0, 0, 1)).unwrap();
        let b = p.vertex_index(LatticePoint::new(-4, -4, -3)).unwrap();
        let e = p.edge_index(a, b).unwrap();
        assert_eq!(face_point_counts(&p, &p.faces(1)[e]), (5, 3));
    }

    #[test]
    fn vertex_counts_are_one() {
        let c = cube();
        assert_eq!(face_point_counts(&c, &c.faces(0)[0]), (1, 1));
    }

    #[test]
    fn stats_decomposition_for_cube() {
        let s = PolytopeStats::compute(&cube());
        assert_eq!(s.l_total, 27);
        assert_eq!(s.normalized_volume, 48);
        // l = sum of facet interiors + edge interiors + vertices + origin
        let boundary: i64 = s.l_star_sum(2) + s.l_star_sum(1) + s.f_vector.0 as i64;
        assert_eq!(s.l_total, boundary + 1);
    }
}
