use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use super::TannerGraph;

/// A node of a Tanner graph: variable node `x_{i+1}` or check node `u_{j+1}`
/// (stored zero-based, rendered one-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeId {
    Var(usize),
    Check(usize),
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Var(i) => write!(f, "x{}", i + 1),
            NodeId::Check(j) => write!(f, "u{}", j + 1),
        }
    }
}

impl Serialize for NodeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A subgraph of a Tanner graph given by explicit node and edge sets.
/// Edges are `(variable, check)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subgraph {
    vars: BTreeSet<usize>,
    checks: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Subgraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Subgraph with exactly the given nodes and edges. Edge endpoints are
    /// added to the node sets if missing.
    pub fn from_parts<V, C, E>(vars: V, checks: C, edges: E) -> Self
    where
        V: IntoIterator<Item = usize>,
        C: IntoIterator<Item = usize>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Subgraph {
            vars: vars.into_iter().collect(),
            checks: checks.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (x, u) in edges {
            g.add_edge(x, u);
        }
        g
    }

    /// Subgraph of `graph` induced by `vars` together with their check
    /// neighbourhood.
    pub fn induced_by_vars(graph: &TannerGraph, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut g = Subgraph::new();
        for x in vars {
            g.vars.insert(x);
            for &u in graph.var_neighbors(x) {
                g.add_edge(x, u);
            }
        }
        g
    }

    pub fn add_edge(&mut self, x: usize, u: usize) {
        self.vars.insert(x);
        self.checks.insert(u);
        self.edges.insert((x, u));
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn checks(&self) -> &BTreeSet<usize> {
        &self.checks
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.vars.len() + self.checks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.vars
            .iter()
            .map(|&x| NodeId::Var(x))
            .chain(self.checks.iter().map(|&u| NodeId::Check(u)))
    }

    pub fn degrees(&self) -> BTreeMap<NodeId, usize> {
        let mut deg: BTreeMap<NodeId, usize> = self.nodes().map(|v| (v, 0)).collect();
        for &(x, u) in &self.edges {
            *deg.entry(NodeId::Var(x)).or_default() += 1;
            *deg.entry(NodeId::Check(u)).or_default() += 1;
        }
        deg
    }

    pub fn degree(&self, node: NodeId) -> usize {
        match node {
            NodeId::Var(x) => self.edges.range((x, 0)..=(x, usize::MAX)).count(),
            NodeId::Check(u) => self.edges.iter().filter(|e| e.1 == u).count(),
        }
    }

    pub(crate) fn neighbors(&self, node: NodeId) -> Vec<NodeId> {
        match node {
            NodeId::Var(x) => self
                .edges
                .range((x, 0)..=(x, usize::MAX))
                .map(|&(_, u)| NodeId::Check(u))
                .collect(),
            NodeId::Check(u) => self
                .edges
                .iter()
                .filter(|e| e.1 == u)
                .map(|&(x, _)| NodeId::Var(x))
                .collect(),
        }
    }

    /// Disjoint union; node and edge sets are merged.
    pub fn union(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vars: self.vars.union(&other.vars).copied().collect(),
            checks: self.checks.union(&other.checks).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// Connected components, each as its node list in ascending order.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.nodes() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_names_are_one_based() {
        assert_eq!(NodeId::Var(0).to_string(), "x1");
        assert_eq!(NodeId::Check(5).to_string(), "u6");
        assert!(NodeId::Var(9) < NodeId::Check(0));
    }

    #[test]
    fn degrees_and_components() {
        let g = Subgraph::from_parts([], [], [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2)]);
        assert_eq!(g.degree(NodeId::Var(0)), 2);
        assert_eq!(g.degree(NodeId::Check(2)), 1);
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.edge_count(), 5);
    }
}
