//! A reflexive polytope together with its polar dual, their counting data
//! and the face-duality index maps. This is the shared workhorse behind the
//! identity checks and the Hodge number formulas, which all mix counts on a
//! polytope with counts on dual faces.

use std::collections::HashMap;

use crate::counting::PolytopeStats;
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

pub struct DualPair {
    delta: LatticePolytope,
    dual: LatticePolytope,
    stats: PolytopeStats,
    dual_stats: PolytopeStats,
    // vertex i of delta -> index of its dual facet in dual
    vertex_dual_facet: Vec<usize>,
    // edge i of delta -> index of its dual edge in dual
    edge_dual_edge: Vec<usize>,
}

impl DualPair {
    pub fn new(delta: LatticePolytope) -> Result<Self> {
        if !delta.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let dual = delta.polar_dual()?;
        let stats = PolytopeStats::compute(&delta);
        let dual_stats = PolytopeStats::compute(&dual);

        let dual_facet_by_normal: HashMap<_, _> = dual
            .facets()
            .iter()
            .enumerate()
            .map(|(i, f)| (f.normal, i))
            .collect();
        let vertex_dual_facet: Vec<usize> = delta
            .vertices()
            .iter()
            .map(|v| {
                *dual_facet_by_normal
                    .get(v)
                    .expect("every vertex of a reflexive polytope supports a dual facet")
            })
            .collect();

        let dual_edge_by_endpoints: HashMap<[usize; 2], usize> = dual
            .faces(1)
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let vi = e.vertex_indices();
                ([vi[0], vi[1]], i)
            })
            .collect();
        let edge_dual_edge: Vec<usize> = (0..delta.faces(1).len())
            .map(|e| {
                let [f1, f2] = delta.face_lattice().facets_of_edge(e);
                let d1 = dual
                    .vertex_index(delta.facets()[f1].normal)
                    .expect("facet normal is a dual vertex");
                let d2 = dual
                    .vertex_index(delta.facets()[f2].normal)
                    .expect("facet normal is a dual vertex");
                let key = if d1 < d2 { [d1, d2] } else { [d2, d1] };
                *dual_edge_by_endpoints
                    .get(&key)
                    .expect("dual vertices of adjacent facets span a dual edge")
            })
            .collect();

        Ok(Self {
            delta,
            dual,
            stats,
            dual_stats,
            vertex_dual_facet,
            edge_dual_edge,
        })
    }

    pub fn delta(&self) -> &LatticePolytope {
        &self.delta
    }

    pub fn dual(&self) -> &LatticePolytope {
        &self.dual
    }

    pub fn stats(&self) -> &PolytopeStats {
        &self.stats
    }

    pub fn dual_stats(&self) -> &PolytopeStats {
        &self.dual_stats
    }

    /// `l(Δ)`.
    pub fn l(&self) -> i64 {
        self.stats.l_total
    }

    /// `l(Δ°)`.
    pub fn l_dual(&self) -> i64 {
        self.dual_stats.l_total
    }

    /// `l*` of the dual facet of vertex `v`.
    pub fn l_star_dual_of_vertex(&self, v: usize) -> i64 {
        self.dual_stats.face(2, self.vertex_dual_facet[v]).l_star
    }

    /// `l*` of the dual edge of edge `e`.
    pub fn l_star_dual_of_edge(&self, e: usize) -> i64 {
        self.dual_stats.face(1, self.edge_dual_edge[e]).l_star
    }

    /// `Σ_v l*(v°)` over the vertices of Δ.
    pub fn sum_vertex_dual_l_star(&self) -> i64 {
        (0..self.delta.faces(0).len())
            .map(|v| self.l_star_dual_of_vertex(v))
            .sum()
    }

    /// `Σ_θ l*(θ°)` over the edges of Δ.
    pub fn sum_edge_dual_l_star(&self) -> i64 {
        (0..self.delta.faces(1).len())
            .map(|e| self.l_star_dual_of_edge(e))
            .sum()
    }

    /// `Σ_θ l*(θ) · l*(θ°)`.
    pub fn sum_edge_products(&self) -> i64 {
        (0..self.delta.faces(1).len())
            .map(|e| self.stats.face(1, e).l_star * self.l_star_dual_of_edge(e))
            .sum()
    }

    /// `Σ_θ (l*(θ) + 1) · (l*(θ°) + 1)`.
    pub fn sum_edge_products_shifted(&self) -> i64 {
        (0..self.delta.faces(1).len())
            .map(|e| (self.stats.face(1, e).l_star + 1) * (self.l_star_dual_of_edge(e) + 1))
            .sum()
    }
}
