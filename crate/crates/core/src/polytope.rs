//! Exact convex hulls of lattice points in `Z^3`, with facet inequalities,
//! a full face lattice, reflexivity, polar duality and normalized volume.
//!
//! Hulls are built by exhaustive supporting-plane search: every plane spanned
//! by three input points is tested against the whole set. That is cubic in
//! the input size, which is the right trade for this domain — inputs are tiny
//! and exactness is non-negotiable.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::point::{det3_wide, LatticePoint};

/// Input coordinates are bounded so every product taken downstream
/// (facet normals, offsets, pairing matrices, volumes) fits in `i128`
/// intermediates and narrows back to `i64`.
pub const MAX_COORD: i64 = 1 << 20;

/// A facet of a 3-polytope: the inequality `normal · x >= -offset` holds on
/// the polytope with equality exactly on the facet. The normal is primitive
/// and integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: LatticePoint,
    pub offset: i64,
    // Vertex indices in cyclic order around the facet polygon, oriented so
    // that the walk is counterclockwise seen from outside the polytope.
    cycle: Vec<usize>,
}

impl Facet {
    /// Vertex indices of the facet polygon in outward-oriented cyclic order.
    pub fn vertex_cycle(&self) -> &[usize] {
        &self.cycle
    }
}

/// A proper face of a 3-polytope: a vertex, an edge or a facet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    dim: usize,
    vertex_indices: Vec<usize>, // sorted
}

impl Face {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Indices into the parent polytope's vertex list, sorted ascending.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }
}

/// All proper faces of a 3-polytope, grouped by dimension, with the
/// edge-in-facet incidence needed for duality.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: [Vec<Face>; 3],
    edge_facets: Vec<[usize; 2]>,
}

impl FaceLattice {
    /// Faces of dimension `dim` (0, 1 or 2) in canonical order. Faces of
    /// dimension 2 are indexed identically to the polytope's facet list.
    pub fn faces(&self, dim: usize) -> &[Face] {
        &self.faces[dim]
    }

    /// The two facet indices containing the given edge.
    pub fn facets_of_edge(&self, edge_index: usize) -> [usize; 2] {
        self.edge_facets[edge_index]
    }

    /// `(|vertices|, |edges|, |facets|)`.
    pub fn f_vector(&self) -> (usize, usize, usize) {
        (
            self.faces[0].len(),
            self.faces[1].len(),
            self.faces[2].len(),
        )
    }

    /// Locates a face by content, returning `(dim, index)`.
    pub fn locate(&self, face: &Face) -> Option<(usize, usize)> {
        if face.dim > 2 {
            return None;
        }
        self.faces[face.dim]
            .iter()
            .position(|f| f == face)
            .map(|i| (face.dim, i))
    }
}

/// A full-dimensional lattice polytope in `Z^3`.
///
/// Vertices are exactly the extreme points of the hull, listed in
/// lexicographic order; facet normals are primitive and integral.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    face_lattice: FaceLattice,
}

impl LatticePolytope {
    /// Builds the convex hull of the given points.
    ///
    /// Non-extreme points are discarded; the result is deterministic
    /// (vertices sorted lexicographically, facets sorted by normal/offset).
    /// Fails with [`Error::DegenerateInput`] when the points do not span
    /// 3-space.
    pub fn hull_from_points(points: &[LatticePoint]) -> Result<Self> {
        for p in points {
            assert!(
                p.x.abs() <= MAX_COORD && p.y.abs() <= MAX_COORD && p.z.abs() <= MAX_COORD,
                "input coordinate exceeds supported magnitude {MAX_COORD}"
            );
        }
        let mut pts: Vec<LatticePoint> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let dim = affine_dimension(&pts);
        if dim < 3 {
            return Err(Error::DegenerateInput { dim });
        }

        let facet_set = supporting_planes(&pts);
        debug_assert!(facet_set.len() >= 4);

        // A point is a vertex iff its active facet normals span 3-space.
        let mut vertices: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            let active: Vec<LatticePoint> = facet_set
                .iter()
                .filter(|(n, c)| n.dot_wide(p) == -(*c as i128))
                .map(|&(n, _)| n)
                .collect();
            if normal_rank(&active) == 3 {
                vertices.push(p);
            }
        }
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));

        let facets = build_facets(&vertices, &facet_set);
        let face_lattice = build_face_lattice(&vertices, &facets);
        let poly = Self {
            vertices,
            facets,
            face_lattice,
        };
        poly.check_structure();
        Ok(poly)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.face_lattice
    }

    /// Faces of dimension `dim` in canonical order.
    pub fn faces(&self, dim: usize) -> &[Face] {
        self.face_lattice.faces(dim)
    }

    pub fn f_vector(&self) -> (usize, usize, usize) {
        self.face_lattice.f_vector()
    }

    /// Whether `p` satisfies every facet inequality.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.facets
            .iter()
            .all(|f| f.normal.dot_wide(p) >= -(f.offset as i128))
    }

    /// Whether `p` satisfies every facet inequality strictly.
    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        self.facets
            .iter()
            .all(|f| f.normal.dot_wide(p) > -(f.offset as i128))
    }

    /// A polytope is reflexive when the origin is strictly interior and every
    /// facet inequality, with primitive integral normal `u`, is `u · x >= -1`.
    /// Equivalently, the polar dual is again a lattice polytope.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset == 1)
    }

    /// The polar dual `{u : u · v >= -1 for all v}` of a reflexive polytope.
    ///
    /// The dual's vertices are exactly the facet normals; applying
    /// `polar_dual` twice reproduces the original vertex set.
    pub fn polar_dual(&self) -> Result<Self> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let normals: Vec<LatticePoint> = self.facets.iter().map(|f| f.normal).collect();
        let dual = Self::hull_from_points(&normals)?;
        debug_assert_eq!(dual.vertices.len(), self.facets.len());
        Ok(dual)
    }

    /// Exact normalized volume `3! · vol`, computed by fanning each facet
    /// polygon into triangles and summing signed cone determinants. This is
    /// independent of any lattice point count.
    pub fn normalized_volume(&self) -> i64 {
        let mut six_vol: i128 = 0;
        for facet in &self.facets {
            let cyc = &facet.cycle;
            let w0 = self.vertices[cyc[0]];
            for i in 1..cyc.len() - 1 {
                six_vol += det3_wide(w0, self.vertices[cyc[i]], self.vertices[cyc[i + 1]]);
            }
        }
        assert!(six_vol > 0, "outward facet orientation broke down");
        i64::try_from(six_vol).expect("volume overflow")
    }

    /// The dual face map `Γ -> Γ°` onto the polar dual.
    ///
    /// `dual` must be `self.polar_dual()`. The image has dimension
    /// `2 - dim Γ`, the map reverses incidence, and applying it twice is the
    /// identity. Fails with [`Error::FaceNotOfPolytope`] when `face` is not a
    /// face of `self`.
    pub fn dual_face<'a>(&self, face: &Face, dual: &'a Self) -> Result<&'a Face> {
        if !self.is_reflexive() || !dual.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let (dim, index) = self
            .face_lattice
            .locate(face)
            .ok_or(Error::FaceNotOfPolytope)?;
        let dual_index = match dim {
            // A vertex v is dual to the facet of the dual cut out by u·v = -1,
            // i.e. the facet with normal v.
            0 => {
                let v = self.vertices[face.vertex_indices[0]];
                dual.facet_index_with_normal(v)
                    .expect("dual facet of a vertex must exist")
            }
            // An edge maps to the dual edge joining the duals of the two
            // facets containing it.
            1 => {
                let [f1, f2] = self.face_lattice.facets_of_edge(index);
                let d1 = dual
                    .vertex_index(self.facets[f1].normal)
                    .expect("facet normal must be a dual vertex");
                let d2 = dual
                    .vertex_index(self.facets[f2].normal)
                    .expect("facet normal must be a dual vertex");
                dual.edge_index(d1, d2)
                    .expect("dual edge of an edge must exist")
            }
            // A facet with normal u is dual to the vertex u.
            2 => dual
                .vertex_index(self.facets[index].normal)
                .expect("facet normal must be a dual vertex"),
            _ => unreachable!(),
        };
        let dual_dim = 2 - dim;
        Ok(&dual.face_lattice.faces[dual_dim][dual_index])
    }

    /// Index of the vertex equal to `p`, if any.
    pub fn vertex_index(&self, p: LatticePoint) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    /// Index of the edge with the given endpoint indices, if any.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { [a, b] } else { [b, a] };
        self.face_lattice.faces[1]
            .iter()
            .position(|f| f.vertex_indices == key)
    }

    /// Index of the facet with the given normal, if any.
    pub fn facet_index_with_normal(&self, normal: LatticePoint) -> Option<usize> {
        self.facets.iter().position(|f| f.normal == normal)
    }

    fn check_structure(&self) {
        let (v, e, f) = self.f_vector();
        assert!(v >= 4 && f >= 4);
        assert_eq!(v as i64 - e as i64 + f as i64, 2, "Euler formula violated");
        for facet in &self.facets {
            assert!(facet.normal.is_primitive());
            assert!(facet.cycle.len() >= 3);
        }
        // Every vertex lies on at least three facets.
        for (i, _) in self.vertices.iter().enumerate() {
            let n = self.facets.iter().filter(|f| f.cycle.contains(&i)).count();
            assert!(n >= 3, "vertex on fewer than three facets");
        }
    }
}

/// Dimension of the affine span of a deduplicated point set.
fn affine_dimension(pts: &[LatticePoint]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let p0 = pts[0];
    let mut basis: Vec<LatticePoint> = Vec::new();
    for &p in &pts[1..] {
        let d = p - p0;
        let independent = match basis.len() {
            0 => !d.is_zero(),
            1 => !basis[0].cross(d).is_zero(),
            2 => det3_wide(basis[0], basis[1], d) != 0,
            _ => false,
        };
        if independent {
            basis.push(d);
            if basis.len() == 3 {
                return 3;
            }
        }
    }
    basis.len()
}

/// All supporting planes spanned by input triples, as `(primitive normal n,
/// offset c)` with `n · x >= -c` on the whole set and equality on the plane.
fn supporting_planes(pts: &[LatticePoint]) -> Vec<(LatticePoint, i64)> {
    let n = pts.len();
    let mut planes: BTreeSet<(LatticePoint, i64)> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
                if normal.is_zero() {
                    continue;
                }
                let normal = normal.primitive();
                if planes.contains(&(normal, -normal.dot(pts[i])))
                    || planes.contains(&(-normal, normal.dot(pts[i])))
                {
                    continue;
                }
                let d = normal.dot_wide(pts[i]);
                let mut above = false;
                let mut below = false;
                for &p in pts {
                    let s = normal.dot_wide(p) - d;
                    above |= s > 0;
                    below |= s < 0;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                // Orient so the polytope satisfies normal · x >= -offset.
                let (normal, d) = if below { (-normal, -d) } else { (normal, d) };
                let offset = i64::try_from(-d).expect("facet offset overflow");
                planes.insert((normal, offset));
            }
        }
    }
    planes.into_iter().collect()
}

/// Rank of a set of lattice vectors (0..=3), exact.
fn normal_rank(vs: &[LatticePoint]) -> usize {
    let mut first: Option<LatticePoint> = None;
    let mut second: Option<LatticePoint> = None;
    for &v in vs {
        if v.is_zero() {
            continue;
        }
        match (first, second) {
            (None, _) => first = Some(v),
            (Some(a), None) => {
                if !a.cross(v).is_zero() {
                    second = Some(v);
                }
            }
            (Some(a), Some(b)) => {
                if det3_wide(a, b, v) != 0 {
                    return 3;
                }
            }
        }
    }
    match (first, second) {
        (None, _) => 0,
        (Some(_), None) => 1,
        (Some(_), Some(_)) => 2,
    }
}

fn build_facets(vertices: &[LatticePoint], planes: &[(LatticePoint, i64)]) -> Vec<Facet> {
    planes
        .iter()
        .map(|&(normal, offset)| {
            let incident: Vec<usize> = vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| normal.dot_wide(v) == -(offset as i128))
                .map(|(i, _)| i)
                .collect();
            assert!(incident.len() >= 3, "facet with fewer than three vertices");
            let cycle = oriented_cycle(vertices, &incident, normal);
            Facet {
                normal,
                offset,
                cycle,
            }
        })
        .collect()
}

/// Orders coplanar vertices (given by index) cyclically around their polygon,
/// oriented so the cycle is counterclockwise seen from outside (i.e. against
/// the inward facet normal).
fn oriented_cycle(
    vertices: &[LatticePoint],
    incident: &[usize],
    normal: LatticePoint,
) -> Vec<usize> {
    // Project out the largest normal component; the projection is injective
    // on the facet plane, so 2D convex position order is the polygon order.
    let drop = {
        let a = [normal.x.abs(), normal.y.abs(), normal.z.abs()];
        (0..3).max_by_key(|&i| a[i]).unwrap()
    };
    let proj = |p: LatticePoint| -> (i64, i64) {
        match drop {
            0 => (p.y, p.z),
            1 => (p.x, p.z),
            _ => (p.x, p.y),
        }
    };
    let mut pts: Vec<(i64, i64, usize)> = incident
        .iter()
        .map(|&i| {
            let (a, b) = proj(vertices[i]);
            (a, b, i)
        })
        .collect();
    pts.sort_unstable();

    // Monotone chain; every point is extreme here, so the hull visits all.
    let turn = |o: &(i64, i64, usize), a: &(i64, i64, usize), b: &(i64, i64, usize)| -> i128 {
        (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
    };
    let mut lower: Vec<(i64, i64, usize)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<(i64, i64, usize)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    let mut cycle: Vec<usize> = lower.into_iter().chain(upper).map(|(_, _, i)| i).collect();
    assert_eq!(
        cycle.len(),
        incident.len(),
        "facet vertices not in convex position"
    );

    // Fix the 3D orientation: the fan cross products must point outward,
    // i.e. against the inward normal.
    let (v0, v1, v2) = (vertices[cycle[0]], vertices[cycle[1]], vertices[cycle[2]]);
    let s = (v1 - v0).cross(v2 - v0).dot_wide(normal);
    assert_ne!(s, 0);
    if s > 0 {
        cycle.reverse();
    }
    // Canonical rotation: start at the smallest vertex index.
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(start);
    cycle
}

fn build_face_lattice(vertices: &[LatticePoint], facets: &[Facet]) -> FaceLattice {
    let vertex_faces: Vec<Face> = (0..vertices.len())
        .map(|i| Face {
            dim: 0,
            vertex_indices: vec![i],
        })
        .collect();

    // An edge is the 2-vertex intersection of two adjacent facets.
    let mut edge_map: BTreeMap<[usize; 2], [usize; 2]> = BTreeMap::new();
    for f1 in 0..facets.len() {
        for f2 in f1 + 1..facets.len() {
            let common: Vec<usize> = facets[f1]
                .cycle
                .iter()
                .filter(|i| facets[f2].cycle.contains(i))
                .copied()
                .collect();
            assert!(common.len() <= 2, "two facets share more than two vertices");
            if common.len() == 2 {
                let key = if common[0] < common[1] {
                    [common[0], common[1]]
                } else {
                    [common[1], common[0]]
                };
                let prev = edge_map.insert(key, [f1, f2]);
                assert!(prev.is_none(), "edge in more than two facets");
            }
        }
    }
    let mut edge_faces: Vec<Face> = Vec::with_capacity(edge_map.len());
    let mut edge_facets: Vec<[usize; 2]> = Vec::with_capacity(edge_map.len());
    for (key, fs) in edge_map {
        edge_faces.push(Face {
            dim: 1,
            vertex_indices: key.to_vec(),
        });
        edge_facets.push(fs);
    }

    let facet_faces: Vec<Face> = facets
        .iter()
        .map(|f| {
            let mut idx = f.cycle.clone();
            idx.sort_unstable();
            Face {
                dim: 2,
                vertex_indices: idx,
            }
        })
        .collect();

    FaceLattice {
        faces: [vertex_faces, edge_faces, facet_faces],
        edge_facets,
    }
}

/// Convenience constructor used throughout the tests.
pub fn hull(points: &[[i64; 3]]) -> Result<LatticePolytope> {
    let pts: Vec<LatticePoint> = points
        .iter()
        .map(|&[x, y, z]| LatticePoint::new(x, y, z))
        .collect();
    LatticePolytope::hull_from_points(&pts)
}
