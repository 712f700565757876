//! Structural checks on polytope points: half-integrality, the fractional
//! subgraph and its cycle decomposition, stopping sets, and the active
//! system `L = [I 0; Q R]` of a vertex.

mod active;
mod report;

pub use active::{
    analyze_r, build_active_system, build_active_system_with_order, ActiveSystem, RAnalysis,
};
pub use report::{verify_vertex, StructureReport};

use std::collections::BTreeSet;

use crate::code::{NodeId, Subgraph, TannerGraph};
use crate::error::{Error, Result};
use crate::ratmath::{RatVector, Rational};

/// Variable nodes with a strictly fractional value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSupport {
    vars: Vec<usize>,
}

impl FractionalSupport {
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn m(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

pub fn fractional_support(f: &RatVector) -> FractionalSupport {
    let one = Rational::one();
    FractionalSupport {
        vars: f
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_positive() && **v < one)
            .map(|(x, _)| x)
            .collect(),
    }
}

/// Every coordinate is one of 0, 1/2, 1.
pub fn is_half_integral(f: &RatVector) -> bool {
    let half = Rational::half();
    f.iter().all(|v| v.is_zero() || v.is_one() || *v == half)
}

/// Subgraph induced by the fractional support and its check neighbourhood.
pub fn fractional_subgraph(graph: &TannerGraph, f: &RatVector) -> Subgraph {
    Subgraph::induced_by_vars(graph, fractional_support(f).vars)
}

/// Every node has degree exactly two; vacuously true for the empty graph.
pub fn is_two_regular(g: &Subgraph) -> bool {
    g.degrees().values().all(|&d| d == 2)
}

/// Splits a 2-regular subgraph into its simple cycles. Each cycle starts at
/// its smallest node and first steps to the smaller of its two neighbours;
/// cycles are listed by starting node.
pub fn decompose_cycles(g: &Subgraph) -> Result<Vec<Vec<NodeId>>> {
    if !is_two_regular(g) {
        return Err(Error::InvalidParameter(
            "cycle decomposition needs a 2-regular subgraph".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in g.nodes() {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut prev = start;
        let mut cur = g.neighbors(start)[0];
        while cur != start {
            seen.insert(cur);
            cycle.push(cur);
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Every check adjacent to `vars` sees at least two of them.
pub fn is_stopping_set(graph: &TannerGraph, vars: &[usize]) -> bool {
    let mut hits = vec![0usize; graph.check_count()];
    let set: BTreeSet<usize> = vars.iter().copied().collect();
    for &x in &set {
        for &u in graph.var_neighbors(x) {
            hits[u] += 1;
        }
    }
    hits.iter().all(|&h| h != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{wiberg9, ParityCheckMatrix};
    use crate::polytope::FundamentalPolytope;
    use crate::vertexenum::enumerate_vertices;
    use proptest::prelude::*;

    fn omega1() -> RatVector {
        let h = Rational::half();
        let (o, z) = (Rational::one(), Rational::zero());
        RatVector::new(vec![
            h.clone(),
            h.clone(),
            h.clone(),
            o,
            z.clone(),
            z,
            h.clone(),
            h.clone(),
            h,
        ])
    }

    #[test]
    fn support_and_half_integrality() {
        let w = omega1();
        let s = fractional_support(&w);
        assert_eq!(s.vars(), &[0, 1, 2, 6, 7, 8]);
        assert_eq!(s.m(), 6);
        assert!(is_half_integral(&w));
        let third = RatVector::new(vec![Rational::new(1, 3), Rational::zero(), Rational::one()]);
        assert_eq!(fractional_support(&third).vars(), &[0]);
        assert!(!is_half_integral(&third));
        let cw = RatVector::from_i64s(&[1, 0, 1]);
        assert!(fractional_support(&cw).is_empty());
        assert!(is_half_integral(&cw));
    }

    #[test]
    fn omega1_fractional_subgraph() {
        let g = wiberg9().tanner_graph();
        let gamma = fractional_subgraph(&g, &omega1());
        assert_eq!(gamma.node_count(), 12);
        assert_eq!(gamma.checks().len(), 6);
        assert!(is_two_regular(&gamma));
        let cycles = decompose_cycles(&gamma).unwrap();
        // traversal oracle: component walk gives the cycle count
        assert_eq!(cycles.len(), gamma.components().len());
        let lens: Vec<usize> = cycles.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![6, 6]);
        let names: Vec<String> = cycles[0].iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x1", "u1", "x2", "u2", "x3", "u3"]);
    }

    #[test]
    fn half_point_of_a_pair_is_a_path() {
        let h = ParityCheckMatrix::from_rows(&[&[1, 1]]).unwrap();
        let half = RatVector::filled(2, Rational::half());
        let gamma = fractional_subgraph(&h.tanner_graph(), &half);
        assert_eq!(gamma.node_count(), 3);
        assert!(!is_two_regular(&gamma));
        assert!(decompose_cycles(&gamma).is_err());
    }

    #[test]
    fn empty_and_small_graphs() {
        let empty = Subgraph::new();
        assert!(is_two_regular(&empty));
        assert!(decompose_cycles(&empty).unwrap().is_empty());
        let edge = Subgraph::from_parts([], [], [(0, 0)]);
        assert!(!is_two_regular(&edge));
        // two disjoint 4-cycles x0 u0 x1 u1 and x2 u2 x3 u3
        let two = Subgraph::from_parts(
            [],
            [],
            [
                (0, 0),
                (1, 0),
                (0, 1),
                (1, 1),
                (2, 2),
                (3, 2),
                (2, 3),
                (3, 3),
            ],
        );
        let cycles = decompose_cycles(&two).unwrap();
        assert_eq!(cycles.len(), 2);
        let covered: usize = cycles.iter().map(Vec::len).sum();
        assert_eq!(covered, two.node_count());
    }

    #[test]
    fn stopping_sets() {
        let g = wiberg9().tanner_graph();
        assert!(is_stopping_set(&g, &[]));
        assert!(!is_stopping_set(&g, &[0]));
        assert!(is_stopping_set(&g, &[0, 1, 2, 6, 7, 8]));
    }

    #[test]
    fn supports_of_vertices_are_stopping_sets() {
        let h = wiberg9();
        let p = FundamentalPolytope::build(&h).unwrap();
        for v in enumerate_vertices(&p).unwrap() {
            let s = fractional_support(&v.point);
            assert!(is_stopping_set(p.graph(), s.vars()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // convex combinations of vertices are members of P
        #[test]
        fn supports_of_members_are_stopping_sets(
            weights in proptest::collection::vec(0u32..5, 20),
        ) {
            let h = wiberg9();
            let p = FundamentalPolytope::build(&h).unwrap();
            let verts = enumerate_vertices(&p).unwrap();
            let total: u32 = weights.iter().sum();
            prop_assume!(total > 0);
            let mut f = RatVector::zeros(9);
            for (v, &w) in verts.iter().zip(&weights) {
                let c = Rational::new(w as i64, total as i64);
                for x in 0..9 {
                    f[x] += &c * &v.point[x];
                }
            }
            prop_assert!(p.contains(&f).unwrap());
            prop_assert!(is_stopping_set(p.graph(), fractional_support(&f).vars()));
        }
    }
}
