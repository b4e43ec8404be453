//! Batch computation over polytope collections: one record per input with
//! every invariant, plus unimodular classification with self-dual census.
//!
//! Work fans out across a rayon pool; results are collected by input index,
//! so output order is deterministic regardless of scheduling.

use rayon::prelude::*;
use serde::Serialize;

use polymirror_core::{
    curve_blowup_invariants, double_smoothing_hodge, full_blowup_invariants, mirror_check_double,
    mirror_check_mixed, mixed_smoothing_hodge, normal_form, quasi_fano_mirror_predicate,
    verify_identities, LatticePolytope, PolytopeStats,
};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, Serialize)]
pub struct StatsSummary {
    pub l: i64,
    pub f_vector: [usize; 3],
    pub normalized_volume: i64,
    pub l_star_edges: i64,
    pub l_star_facets: i64,
}

impl StatsSummary {
    fn from_stats(s: &PolytopeStats) -> Self {
        Self {
            l: s.l_total,
            f_vector: [s.f_vector.0, s.f_vector.1, s.f_vector.2],
            normalized_volume: s.normalized_volume,
            l_star_edges: s.l_star_sum(1),
            l_star_facets: s.l_star_sum(2),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct InvariantsSummary {
    pub h2: i64,
    pub h3: i64,
    pub alpha: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

/// Everything the pipeline knows about one input polytope.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopeRecord {
    /// 1-based input order.
    pub id: usize,
    pub normal_form_key: String,
    pub dual_normal_form_key: String,
    pub self_dual: bool,
    pub stats: StatsSummary,
    pub dual_stats: StatsSummary,
    pub x_inv: InvariantsSummary,
    pub y_inv: InvariantsSummary,
    pub y_inv_dual: InvariantsSummary,
    /// Double smoothing of the curve blow-up of the polytope.
    pub hodge_x: [i64; 2],
    /// Double smoothing of the full blow-up of the dual.
    pub hodge_y: [i64; 2],
    /// Mixed smoothing of the polytope and of its dual.
    pub hodge_mixed: [i64; 2],
    pub hodge_mixed_dual: [i64; 2],
    pub identity_pass: bool,
    pub mirror_pass: bool,
}

/// A record we could not compute, kept in lenient mode.
#[derive(Clone, Debug, Serialize)]
pub struct SkippedRecord {
    pub id: usize,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum BatchEntry {
    Ok(Box<PolytopeRecord>),
    Skipped(SkippedRecord),
}

impl BatchEntry {
    pub fn record(&self) -> Option<&PolytopeRecord> {
        match self {
            BatchEntry::Ok(r) => Some(r),
            BatchEntry::Skipped(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BatchOptions {
    /// Record non-reflexive inputs and continue instead of aborting.
    pub lenient: bool,
}

/// Computes a record for every polytope. In strict mode the first
/// non-reflexive input aborts the batch; theorem violations always abort.
pub fn batch_compute(
    polytopes: &[LatticePolytope],
    options: BatchOptions,
) -> Result<Vec<BatchEntry>> {
    let entries: Vec<std::result::Result<BatchEntry, CliError>> = polytopes
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let id = i + 1;
            match compute_record(id, p) {
                Ok(record) => Ok(BatchEntry::Ok(Box::new(record))),
                Err(e @ CliError::NotReflexive { .. }) if options.lenient => {
                    Ok(BatchEntry::Skipped(SkippedRecord {
                        id,
                        reason: e.to_string(),
                    }))
                }
                Err(e) => Err(e),
            }
        })
        .collect();
    entries.into_iter().collect()
}

/// Computes every invariant for one polytope, running the identity and
/// mirror checks as it goes.
pub fn compute_record(id: usize, p: &LatticePolytope) -> Result<PolytopeRecord> {
    if !p.is_reflexive() {
        return Err(CliError::NotReflexive { block: id });
    }
    let theorem = |detail: String| CliError::TheoremViolation { block: id, detail };
    let internal = |e: polymirror_core::Error| CliError::TheoremViolation {
        block: id,
        detail: e.to_string(),
    };

    let dual = p.polar_dual().map_err(internal)?;
    let stats = PolytopeStats::compute(p);
    let dual_stats = PolytopeStats::compute(&dual);
    let nf = normal_form(p).map_err(internal)?;
    let nf_dual = normal_form(&dual).map_err(internal)?;

    let x = curve_blowup_invariants(p).map_err(internal)?;
    let y = full_blowup_invariants(p).map_err(internal)?;
    let y_dual = full_blowup_invariants(&dual).map_err(internal)?;
    let hodge_x = double_smoothing_hodge(&x).map_err(internal)?;
    let hodge_y = double_smoothing_hodge(&y_dual).map_err(internal)?;
    let hodge_mixed = mixed_smoothing_hodge(p).map_err(internal)?;
    let hodge_mixed_dual = mixed_smoothing_hodge(&dual).map_err(internal)?;

    let identity = verify_identities(p, &id.to_string()).map_err(internal)?;
    if !identity.all_pass() {
        let fails: Vec<String> = identity
            .failures()
            .map(|c| format!("{} ({} != {})", c.name, c.lhs, c.rhs))
            .collect();
        return Err(theorem(format!(
            "identity checks failed: {}",
            fails.join(", ")
        )));
    }

    let mirror_double = mirror_check_double(p).map_err(internal)?;
    let mirror_mixed = mirror_check_mixed(p).map_err(internal)?;
    let predicate = quasi_fano_mirror_predicate(&x, &y_dual);
    for (which, report) in [
        ("double smoothing", &mirror_double),
        ("mixed smoothing", &mirror_mixed),
        ("rank predicate", &predicate),
    ] {
        if !report.all_pass() {
            let fails: Vec<String> = report
                .failures()
                .map(|c| format!("{} ({} != {})", c.name, c.lhs, c.rhs))
                .collect();
            return Err(theorem(format!(
                "{which} mirror checks failed: {}",
                fails.join(", ")
            )));
        }
    }

    Ok(PolytopeRecord {
        id,
        self_dual: nf == nf_dual,
        normal_form_key: nf.key(),
        dual_normal_form_key: nf_dual.key(),
        stats: StatsSummary::from_stats(&stats),
        dual_stats: StatsSummary::from_stats(&dual_stats),
        x_inv: InvariantsSummary {
            h2: x.h2,
            h3: x.h3,
            alpha: x.alpha,
            k: None,
        },
        y_inv: InvariantsSummary {
            h2: y.h2,
            h3: y.h3,
            alpha: y.alpha,
            k: Some(y.k),
        },
        y_inv_dual: InvariantsSummary {
            h2: y_dual.h2,
            h3: y_dual.h3,
            alpha: y_dual.alpha,
            k: Some(y_dual.k),
        },
        hodge_x: [hodge_x.h11, hodge_x.h12],
        hodge_y: [hodge_y.h11, hodge_y.h12],
        hodge_mixed: [hodge_mixed.h11, hodge_mixed.h12],
        hodge_mixed_dual: [hodge_mixed_dual.h11, hodge_mixed_dual.h12],
        identity_pass: true,
        mirror_pass: true,
    })
}

/// One equivalence class of the classification.
#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub key: String,
    /// Input ids of the members, ascending.
    pub member_ids: Vec<usize>,
    pub self_dual: bool,
    /// Normal form key of the polar dual class.
    pub dual_key: String,
    /// Ids of inputs in the dual class, when any were supplied.
    pub dual_member_ids: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub classes: Vec<ClassInfo>,
    pub num_classes: usize,
    pub duplicate_inputs: usize,
    pub self_dual_classes: usize,
}

/// Groups records by normal form, counts duplicates and self-dual classes,
/// and pairs each class with the class of its polar dual.
pub fn classify(records: &[BatchEntry]) -> Classification {
    use std::collections::BTreeMap;
    let mut by_key: BTreeMap<&str, Vec<&PolytopeRecord>> = BTreeMap::new();
    for r in records.iter().filter_map(BatchEntry::record) {
        by_key.entry(&r.normal_form_key).or_default().push(r);
    }
    let classes: Vec<ClassInfo> = by_key
        .iter()
        .map(|(key, members)| {
            let first = members[0];
            let dual_member_ids = by_key
                .get(first.dual_normal_form_key.as_str())
                .map(|dual_members| dual_members.iter().map(|r| r.id).collect())
                .unwrap_or_default();
            ClassInfo {
                key: key.to_string(),
                member_ids: members.iter().map(|r| r.id).collect(),
                self_dual: first.self_dual,
                dual_key: first.dual_normal_form_key.clone(),
                dual_member_ids,
            }
        })
        .collect();
    let num_classes = classes.len();
    let duplicate_inputs = classes
        .iter()
        .map(|c| c.member_ids.len() - 1)
        .sum::<usize>();
    let self_dual_classes = classes.iter().filter(|c| c.self_dual).count();
    Classification {
        classes,
        num_classes,
        duplicate_inputs,
        self_dual_classes,
    }
}
