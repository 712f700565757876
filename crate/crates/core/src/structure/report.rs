use serde::Serialize;

use crate::code::NodeId;
use crate::polytope::FundamentalPolytope;
use crate::vertexenum::{ClassifiedVertex, VertexKind};

use super::{
    analyze_r, build_active_system, decompose_cycles, fractional_subgraph, fractional_support,
    is_half_integral, is_stopping_set, is_two_regular,
};

/// Outcome of every structural check on one vertex. A check that could not
/// be carried out (for instance the cycle walk on a graph that is not
/// 2-regular) reports `false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertex: Vec<String>,
    pub kind: VertexKind,
    pub half_integral: bool,
    pub two_regular: bool,
    pub cycles: Vec<Vec<NodeId>>,
    pub stopping_set_ok: bool,
    pub r_inverse_half: bool,
    pub det_abs_match: bool,
    /// `|F| = |U|` for the rows of `[Q R]`.
    pub card_match: bool,
    /// The graph of `R` equals the fractional subgraph.
    pub gr_equals_fractional: bool,
    /// No check contributes two rows to `[Q R]`.
    pub row_checks_distinct: bool,
    pub blocks: Vec<usize>,
    /// Set for trivial vertices, where the graph checks hold vacuously.
    pub vacuous: bool,
}

impl StructureReport {
    /// Every flag holds.
    pub fn all_ok(&self) -> bool {
        self.half_integral
            && self.two_regular
            && self.stopping_set_ok
            && self.r_inverse_half
            && self.det_abs_match
            && self.card_match
            && self.gr_equals_fractional
            && self.row_checks_distinct
    }
}

pub fn verify_vertex(p: &FundamentalPolytope, v: &ClassifiedVertex) -> StructureReport {
    let vertex = v.point.to_pq_strings();
    if v.is_trivial() {
        return StructureReport {
            vertex,
            kind: v.kind,
            half_integral: true,
            two_regular: true,
            cycles: Vec::new(),
            stopping_set_ok: true,
            r_inverse_half: true,
            det_abs_match: true,
            card_match: true,
            gr_equals_fractional: true,
            row_checks_distinct: true,
            blocks: Vec::new(),
            vacuous: true,
        };
    }

    let graph = p.graph();
    let gamma = fractional_subgraph(graph, &v.point);
    let two_regular = is_two_regular(&gamma);
    let cycles = decompose_cycles(&gamma).unwrap_or_default();
    let stopping_set_ok = is_stopping_set(graph, fractional_support(&v.point).vars());

    let mut report = StructureReport {
        vertex,
        kind: v.kind,
        half_integral: is_half_integral(&v.point),
        two_regular,
        cycles,
        stopping_set_ok,
        r_inverse_half: false,
        det_abs_match: false,
        card_match: false,
        gr_equals_fractional: false,
        row_checks_distinct: false,
        blocks: Vec::new(),
        vacuous: false,
    };
    let Ok(sys) = build_active_system(p, v) else {
        return report;
    };
    report.det_abs_match = sys.det_abs_match().unwrap_or(false);
    report.row_checks_distinct = sys.row_checks_distinct();
    if let Ok(a) = analyze_r(&sys, graph) {
        report.r_inverse_half = a.inverse_ok;
        report.card_match = a.card_match;
        report.gr_equals_fractional = a.g_r == gamma;
        report.two_regular &= a.two_regular;
        report.blocks = a.blocks;
    }
    report
}
