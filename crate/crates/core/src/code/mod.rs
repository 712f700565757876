//! Binary linear codes given by a parity-check matrix, their Tanner graphs
//! and codeword enumeration.

pub mod gen;
pub mod gf2;
mod graph;
pub mod io;

use std::fmt;

use serde::Serialize;

pub use graph::{NodeId, Subgraph};

use crate::error::{guard, Error, Result};
use crate::ratmath::{RatVector, Rational};
use gf2::BitRow;

/// Largest code length for which the full codeword list is materialised.
pub const MAX_ENUMERATION_N: usize = 24;

/// An `r x n` binary matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParityCheckMatrix {
    r: usize,
    n: usize,
    bits: Vec<u8>,
}

impl ParityCheckMatrix {
    pub fn new(r: usize, n: usize, bits: Vec<u8>) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "parity-check matrix must be at least 1x1, got {r}x{n}"
            )));
        }
        if bits.len() != r * n {
            return Err(Error::Dimension(format!(
                "{} entries for a {r}x{n} matrix",
                bits.len()
            )));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("non-binary entry {b}")));
        }
        Ok(ParityCheckMatrix { r, n, bits })
    }

    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|row| row.len() != n) {
            return Err(Error::Dimension(format!(
                "ragged rows: {} vs {n}",
                bad.len()
            )));
        }
        Self::new(rows.len(), n, rows.concat())
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut bits = vec![0; n * n];
        for i in 0..n {
            bits[i * n + i] = 1;
        }
        Self::new(n, n, bits)
    }

    /// Row count.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.n + col] == 1
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.bits[row * self.n..(row + 1) * self.n]
    }

    pub fn column_weight(&self, col: usize) -> usize {
        (0..self.r).filter(|&j| self.get(j, col)).count()
    }

    pub fn row_weight(&self, row: usize) -> usize {
        self.row(row).iter().filter(|&&b| b == 1).count()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn packed_rows(&self) -> Vec<BitRow> {
        (0..self.r)
            .map(|j| BitRow::from_bits(self.row(j)))
            .collect()
    }

    pub fn rank_gf2(&self) -> usize {
        gf2::rank(self.packed_rows(), self.n)
    }

    /// Code dimension `n - rank_GF2(H)`.
    pub fn dimension(&self) -> usize {
        self.n - self.rank_gf2()
    }

    /// True iff every column has weight exactly two.
    pub fn is_cycle_code(&self) -> bool {
        (0..self.n).all(|c| self.column_weight(c) == 2)
    }

    /// True iff every check sees an even number of ones in `f`.
    pub fn is_codeword(&self, f: &[u8]) -> Result<bool> {
        self.check_len(f.len())?;
        Ok((0..self.r).all(|j| {
            self.row(j)
                .iter()
                .zip(f)
                .filter(|(&h, &b)| h == 1 && b == 1)
                .count()
                % 2
                == 0
        }))
    }

    /// All codewords in lexicographic order of their bit vectors.
    pub fn enumerate_codewords(&self) -> Result<Vec<Codeword>> {
        self.enumerate_codewords_with_limit(MAX_ENUMERATION_N)
    }

    pub fn enumerate_codewords_with_limit(&self, max_n: usize) -> Result<Vec<Codeword>> {
        guard(
            "code length for codeword enumeration",
            self.n,
            max_n.min(MAX_ENUMERATION_N),
        )?;
        let basis = gf2::nullspace_basis(self.packed_rows(), self.n);
        let k = basis.len();
        // Gray-code walk: step i flips basis vector trailing_zeros(i)
        let mut current = BitRow::zeros(self.n);
        let mut words = Vec::with_capacity(1 << k);
        words.push(Codeword::from_row(&current));
        for i in 1u64..(1u64 << k) {
            current.xor_assign(&basis[i.trailing_zeros() as usize]);
            words.push(Codeword::from_row(&current));
        }
        words.sort();
        Ok(words)
    }

    pub fn tanner_graph(&self) -> TannerGraph {
        TannerGraph::from_matrix(self)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::Dimension(format!(
                "vector of length {len} for code length {}",
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for ParityCheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", io::to_dense(self))
    }
}

/// Bipartite graph with variable nodes x_1..x_n (columns) and check nodes
/// u_1..u_r (rows); x_i ~ u_j iff `H[j][i] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<usize>>,
    check_adj: Vec<Vec<usize>>,
}

impl TannerGraph {
    pub fn from_matrix(h: &ParityCheckMatrix) -> Self {
        let mut var_adj = vec![Vec::new(); h.n()];
        let mut check_adj = vec![Vec::new(); h.r()];
        for (j, nbrs) in check_adj.iter_mut().enumerate() {
            for (i, vars) in var_adj.iter_mut().enumerate() {
                if h.get(j, i) {
                    nbrs.push(i);
                    vars.push(j);
                }
            }
        }
        TannerGraph { var_adj, check_adj }
    }

    pub fn var_count(&self) -> usize {
        self.var_adj.len()
    }

    pub fn check_count(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.check_adj.iter().map(Vec::len).sum()
    }

    /// Checks adjacent to variable `x`, ascending.
    pub fn var_neighbors(&self, x: usize) -> &[usize] {
        &self.var_adj[x]
    }

    /// Variables adjacent to check `u`, ascending.
    pub fn check_neighbors(&self, u: usize) -> &[usize] {
        &self.check_adj[u]
    }

    pub fn var_degree(&self, x: usize) -> usize {
        self.var_adj[x].len()
    }

    pub fn check_degree(&self, u: usize) -> usize {
        self.check_adj[u].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.check_adj
            .iter()
            .enumerate()
            .flat_map(|(u, xs)| xs.iter().map(move |&x| (x, u)))
    }

    /// Recovers the bipartite adjacency matrix.
    pub fn parity_check_matrix(&self) -> Result<ParityCheckMatrix> {
        let (r, n) = (self.check_count(), self.var_count());
        let mut bits = vec![0; r * n];
        for (x, u) in self.edges() {
            bits[u * n + x] = 1;
        }
        ParityCheckMatrix::new(r, n, bits)
    }

    /// Union of the check neighbourhoods of `vars`, ascending.
    pub fn neighborhood(&self, vars: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = vars
            .into_iter()
            .flat_map(|x| self.var_adj[x].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Subgraph induced by `supp(f)` and its neighbourhood.
    pub fn support_subgraph(&self, f: &[u8]) -> Result<Subgraph> {
        if f.len() != self.var_count() {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} variable nodes",
                f.len(),
                self.var_count()
            )));
        }
        let support = f
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, _)| i);
        Ok(Subgraph::induced_by_vars(self, support))
    }
}

/// A codeword as a 0/1 vector. Ordering is lexicographic on the bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Codeword {
    bits: Vec<u8>,
}

impl Codeword {
    /// Wraps `bits` after checking membership in the code.
    pub fn new(h: &ParityCheckMatrix, bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParameter("codeword bits must be 0/1".into()));
        }
        if !h.is_codeword(&bits)? {
            return Err(Error::InvalidParameter(format!(
                "{bits:?} is not in the null space of H"
            )));
        }
        Ok(Codeword { bits })
    }

    pub fn zero(n: usize) -> Self {
        Codeword { bits: vec![0; n] }
    }

    fn from_row(row: &BitRow) -> Self {
        Codeword {
            bits: row.to_bits(),
        }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_zero(&self) -> bool {
        self.weight() == 0
    }

    pub fn xor(&self, other: &Codeword) -> Codeword {
        Codeword {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn to_rat_vector(&self) -> RatVector {
        self.bits
            .iter()
            .map(|&b| Rational::from_integer(b as i64))
            .collect()
    }

    /// The 0/1 vector of an integral point, if it is one.
    pub fn bits_of_integral(f: &RatVector) -> Option<Vec<u8>> {
        f.iter()
            .map(|x| {
                if x.is_zero() {
                    Some(0)
                } else if x.is_one() {
                    Some(1)
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Parity-check matrix of the length-9 cycle code whose Tanner graph has
/// two check triangles joined by three variable nodes (Wiberg's example).
pub fn wiberg9() -> ParityCheckMatrix {
    ParityCheckMatrix::from_rows(&[
        &[1, 1, 0, 1, 0, 0, 0, 0, 0],
        &[0, 1, 1, 0, 1, 0, 0, 0, 0],
        &[1, 0, 1, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 1, 0, 1],
        &[0, 0, 0, 0, 1, 0, 1, 1, 0],
        &[0, 0, 0, 0, 0, 1, 0, 1, 1],
    ])
    .expect("static matrix is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const C1: [u8; 9] = [1, 1, 0, 0, 1, 1, 0, 1, 0];

    #[test]
    fn tanner_graph_of_wiberg9() {
        let g = wiberg9().tanner_graph();
        assert_eq!(g.var_count(), 9);
        assert_eq!(g.check_count(), 6);
        assert_eq!(g.edge_count(), 18);
        assert!((0..9).all(|x| g.var_degree(x) == 2));
        assert!((0..6).all(|u| g.check_degree(u) == 3));
    }

    #[test]
    fn tanner_graph_trivial_cases() {
        let one = ParityCheckMatrix::from_rows(&[&[1]])
            .unwrap()
            .tanner_graph();
        assert_eq!(one.edges().collect::<Vec<_>>(), vec![(0, 0)]);
        let zero = ParityCheckMatrix::from_rows(&[&[0, 0], &[0, 0]])
            .unwrap()
            .tanner_graph();
        assert_eq!(zero.edge_count(), 0);
        assert_eq!(zero.var_count() + zero.check_count(), 4);
    }

    #[test]
    fn cycle_code_recognition() {
        assert!(wiberg9().is_cycle_code());
        let zero_col = ParityCheckMatrix::from_rows(&[&[1, 0], &[1, 0]]).unwrap();
        assert!(!zero_col.is_cycle_code());
        let ones = ParityCheckMatrix::new(3, 4, vec![1; 12]).unwrap();
        assert!(!ones.is_cycle_code());
    }

    #[test]
    fn codeword_membership() {
        let h = wiberg9();
        assert!(h.is_codeword(&C1).unwrap());
        assert!(h.is_codeword(&[0; 9]).unwrap());
        assert!(!h.is_codeword(&[1, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap());
        assert!(h.is_codeword(&[0; 8]).is_err());
    }

    #[test]
    fn codeword_enumeration() {
        let h = wiberg9();
        let words = h.enumerate_codewords().unwrap();
        assert_eq!(words.len(), 16);
        assert_eq!(h.dimension(), 4);
        assert!(words.iter().any(|w| w.bits() == C1));
        let id = ParityCheckMatrix::identity(5).unwrap();
        assert_eq!(id.enumerate_codewords().unwrap(), vec![Codeword::zero(5)]);
        let wide = ParityCheckMatrix::new(1, 30, vec![1; 30]).unwrap();
        assert!(matches!(
            wide.enumerate_codewords(),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn codeword_support_is_single_cycle() {
        let g = wiberg9().tanner_graph();
        let sub = g.support_subgraph(&C1).unwrap();
        let vars: Vec<usize> = sub.vars().iter().copied().collect();
        let checks: Vec<usize> = sub.checks().iter().copied().collect();
        assert_eq!(vars, vec![0, 1, 4, 5, 7]);
        assert_eq!(checks, vec![0, 1, 2, 4, 5]);
        assert_eq!(sub.edge_count(), 10);
        assert!(sub.degrees().values().all(|&d| d == 2));
        assert_eq!(sub.components().len(), 1);
        assert!(g.support_subgraph(&[0; 9]).unwrap().is_empty());
    }

    #[test]
    fn disjoint_codewords_give_disjoint_union_of_cycles() {
        let h = wiberg9();
        let g = h.tanner_graph();
        let words = h.enumerate_codewords().unwrap();
        let mut pairs = 0;
        for a in &words {
            for b in &words {
                if a >= b || a.is_zero() || b.is_zero() {
                    continue;
                }
                let sa = g.support_subgraph(a.bits()).unwrap();
                let sb = g.support_subgraph(b.bits()).unwrap();
                let node_disjoint =
                    sa.vars().is_disjoint(sb.vars()) && sa.checks().is_disjoint(sb.checks());
                if !node_disjoint {
                    continue;
                }
                pairs += 1;
                let sum = g.support_subgraph(a.xor(b).bits()).unwrap();
                assert_eq!(sum, sa.union(&sb));
                assert_eq!(
                    sum.components().len(),
                    sa.components().len() + sb.components().len()
                );
            }
        }
        // brute force over this code finds supports sharing no node at all
        assert_eq!(pairs, 1);
    }

    #[test]
    fn cycle_code_supports_have_even_degrees() {
        let h = wiberg9();
        let g = h.tanner_graph();
        for w in h.enumerate_codewords().unwrap() {
            let sub = g.support_subgraph(w.bits()).unwrap();
            assert!(sub.degrees().values().all(|d| d % 2 == 0), "{w:?}");
        }
    }

    fn arb_matrix() -> impl Strategy<Value = ParityCheckMatrix> {
        (1usize..6, 1usize..10).prop_flat_map(|(r, n)| {
            proptest::collection::vec(0u8..=1, r * n)
                .prop_map(move |bits| ParityCheckMatrix::new(r, n, bits).unwrap())
        })
    }

    proptest! {
        #[test]
        fn tanner_round_trip(h in arb_matrix()) {
            let g = h.tanner_graph();
            prop_assert_eq!(g.edge_count(), h.ones());
            prop_assert_eq!(g.parity_check_matrix().unwrap(), h);
        }

        #[test]
        fn codewords_form_subspace(h in arb_matrix()) {
            let words = h.enumerate_codewords().unwrap();
            prop_assert_eq!(words.len(), 1usize << (h.n() - h.rank_gf2()));
            prop_assert!(words.contains(&Codeword::zero(h.n())));
            let set: std::collections::BTreeSet<_> = words.iter().cloned().collect();
            prop_assert_eq!(set.len(), words.len());
            for a in &words {
                prop_assert!(h.is_codeword(a.bits()).unwrap());
                for b in &words {
                    prop_assert!(set.contains(&a.xor(b)));
                }
            }
        }

        #[test]
        fn enumeration_matches_brute_force(h in arb_matrix()) {
            let brute: Vec<Vec<u8>> = (0u32..1 << h.n())
                .map(|m| (0..h.n()).map(|i| (m >> i & 1) as u8).collect::<Vec<u8>>())
                .filter(|f| h.is_codeword(f).unwrap())
                .collect();
            let mut brute = brute;
            brute.sort();
            let got: Vec<Vec<u8>> = h.enumerate_codewords().unwrap()
                .into_iter().map(|w| w.bits().to_vec()).collect();
            prop_assert_eq!(got, brute);
        }
    }
}
