//! The fundamental polytope of a parity-check matrix as an explicit list of
//! linear inequalities, with membership and activity queries.
//!
//! Constraint order is fixed: all `f_x <= 1`, all `f_x >= 0`, then the
//! check constraints grouped by check in row order. Within a check the odd
//! subsets `S` of `N(u)` are listed by increasing bitmask over the sorted
//! neighbour list, which is lexicographic on the membership vector read from
//! the highest neighbour down. Indices into this list are stable and are
//! what vertex records and active systems refer to.

use std::fmt;
use std::fmt::Write as _;
use std::ops::Deref;

use serde::Serialize;

use crate::code::{ParityCheckMatrix, TannerGraph};
use crate::error::{guard, Error, Result};
use crate::ratmath::{dot_unchecked, RatVector, Rational};

/// Largest check degree accepted by [`FundamentalPolytope::build`].
pub const MAX_CHECK_DEGREE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

/// Where a constraint comes from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintTag {
    /// `f_x <= 1`
    BoxUpper(usize),
    /// `f_x >= 0`
    BoxLower(usize),
    /// `sum_{S} f - sum_{N(u)\S} f <= |S| - 1` for an odd `S` in `N(u)`;
    /// `subset` is sorted.
    CheckOdd { check: usize, subset: Vec<usize> },
}

impl fmt::Display for ConstraintTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintTag::BoxUpper(x) => write!(f, "BoxUpper(x{})", x + 1),
            ConstraintTag::BoxLower(x) => write!(f, "BoxLower(x{})", x + 1),
            ConstraintTag::CheckOdd { check, subset } => {
                let s: Vec<String> = subset.iter().map(|x| format!("x{}", x + 1)).collect();
                write!(f, "CheckOdd(u{},{{{}}})", check + 1, s.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: RatVector,
    pub relation: Relation,
    pub b: Rational,
    pub tag: ConstraintTag,
}

impl Constraint {
    pub fn lhs(&self, f: &RatVector) -> Rational {
        dot_unchecked(self.a.entries(), f.entries())
    }

    pub fn is_satisfied(&self, f: &RatVector) -> bool {
        let v = self.lhs(f);
        match self.relation {
            Relation::Le => v <= self.b,
            Relation::Ge => v >= self.b,
        }
    }

    pub fn is_active(&self, f: &RatVector) -> bool {
        self.lhs(f) == self.b
    }

    /// `b - a.f` for `<=` rows and `a.f - b` for `>=` rows; nonnegative
    /// exactly when satisfied.
    pub fn slack(&self, f: &RatVector) -> Rational {
        let v = self.lhs(f);
        match self.relation {
            Relation::Le => &self.b - v,
            Relation::Ge => v - &self.b,
        }
    }

    /// Normal pointing out of the feasible half-space.
    pub fn outward_normal(&self) -> RatVector {
        match self.relation {
            Relation::Le => self.a.clone(),
            Relation::Ge => self.a.iter().map(|x| -x).collect(),
        }
    }

    /// `tag : a.f <= b`, coefficients and bound as `p/q`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} :", self.tag);
        let mut any = false;
        for (i, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            any = true;
            let sign = if c.is_negative() { '-' } else { '+' };
            let _ = write!(s, " {sign}{}*f{}", c.abs().to_pq(), i + 1);
        }
        if !any {
            s.push_str(" 0/1");
        }
        let rel = match self.relation {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        };
        let _ = write!(s, " {rel} {}", self.b.to_pq());
        s
    }
}

/// `P(H)` as an explicit inequality system.
#[derive(Clone, Debug)]
pub struct FundamentalPolytope {
    n: usize,
    constraints: Vec<Constraint>,
    graph: TannerGraph,
    // first constraint index of each check's block
    check_offsets: Vec<usize>,
}

/// Number of constraints `2n + sum_u 2^(deg(u) - 1)`; degree-0 checks add none.
pub fn constraint_count(h: &ParityCheckMatrix) -> usize {
    let g = h.tanner_graph();
    2 * h.n()
        + (0..h.r())
            .map(|u| match g.check_degree(u) {
                0 => 0,
                d => 1usize << (d - 1),
            })
            .sum::<usize>()
}

impl FundamentalPolytope {
    pub fn build(h: &ParityCheckMatrix) -> Result<Self> {
        Self::build_with_limit(h, MAX_CHECK_DEGREE)
    }

    pub fn build_with_limit(h: &ParityCheckMatrix, max_degree: usize) -> Result<Self> {
        let graph = h.tanner_graph();
        let n = h.n();
        let max_deg = (0..h.r()).map(|u| graph.check_degree(u)).max().unwrap_or(0);
        guard("check degree", max_deg, max_degree.min(MAX_CHECK_DEGREE))?;

        let mut constraints = Vec::with_capacity(constraint_count(h));
        for x in 0..n {
            constraints.push(Constraint {
                a: RatVector::unit(n, x),
                relation: Relation::Le,
                b: Rational::one(),
                tag: ConstraintTag::BoxUpper(x),
            });
        }
        for x in 0..n {
            constraints.push(Constraint {
                a: RatVector::unit(n, x),
                relation: Relation::Ge,
                b: Rational::zero(),
                tag: ConstraintTag::BoxLower(x),
            });
        }
        let mut check_offsets = Vec::with_capacity(h.r());
        for u in 0..h.r() {
            check_offsets.push(constraints.len());
            let nbrs = graph.check_neighbors(u);
            for subset in odd_subsets(nbrs) {
                let mut a = RatVector::zeros(n);
                for &x in nbrs {
                    a[x] = Rational::from_integer(-1);
                }
                for &x in &subset {
                    a[x] = Rational::one();
                }
                constraints.push(Constraint {
                    a,
                    relation: Relation::Le,
                    b: Rational::from(subset.len() - 1),
                    tag: ConstraintTag::CheckOdd { check: u, subset },
                });
            }
        }
        Ok(FundamentalPolytope {
            n,
            constraints,
            graph,
            check_offsets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn constraint(&self, index: usize) -> &Constraint {
        &self.constraints[index]
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    /// Index range of the check constraints belonging to `u`.
    pub fn check_constraint_range(&self, u: usize) -> std::ops::Range<usize> {
        let start = self.check_offsets[u];
        let end = self
            .check_offsets
            .get(u + 1)
            .copied()
            .unwrap_or(self.constraints.len());
        start..end
    }

    pub fn upper_index(&self, x: usize) -> usize {
        x
    }

    pub fn lower_index(&self, x: usize) -> usize {
        self.n + x
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::Dimension(format!(
                "point of length {len} in dimension {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Exact membership test against every constraint.
    pub fn contains(&self, f: &RatVector) -> Result<bool> {
        self.check_len(f.dim())?;
        Ok(self.contains_unchecked(f))
    }

    pub(crate) fn contains_unchecked(&self, f: &RatVector) -> bool {
        // box constraints first: they are the cheapest to reject on
        f.iter().all(|v| !v.is_negative() && *v <= Rational::one())
            && self.constraints[2 * self.n..]
                .iter()
                .all(|c| c.is_satisfied(f))
    }

    /// Certifies membership and wraps `f`.
    pub fn point(&self, f: RatVector) -> Result<PolytopePoint> {
        if self.contains(&f)? {
            Ok(PolytopePoint(f))
        } else {
            Err(Error::InvalidParameter(format!(
                "{f} is not in the fundamental polytope"
            )))
        }
    }

    /// Indices of constraints met with equality, in canonical order.
    pub fn active_indices(&self, f: &RatVector) -> Vec<usize> {
        self.constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_active(f))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn active_constraints(&self, f: &PolytopePoint) -> Vec<&Constraint> {
        self.active_indices(f)
            .into_iter()
            .map(|i| &self.constraints[i])
            .collect()
    }

    /// `kappa_{u,f}(S) = sum_{x in S} f_x + sum_{x in N(u)\S} (1 - f_x)` for
    /// any subset `S` of `N(u)`, odd or not.
    pub fn kappa(&self, u: usize, subset: &[usize], f: &RatVector) -> Result<Rational> {
        self.check_len(f.dim())?;
        let nbrs = self.graph.check_neighbors(u);
        if let Some(x) = subset.iter().find(|x| !nbrs.contains(x)) {
            return Err(Error::InvalidParameter(format!(
                "x{} is not a neighbour of u{}",
                x + 1,
                u + 1
            )));
        }
        Ok(kappa_unchecked(nbrs, subset, f))
    }

    /// Odd subsets `S` of `N(u)` with `kappa(S) = |N(u)| - 1`.
    pub fn active_sets(&self, u: usize, f: &RatVector) -> Vec<Vec<usize>> {
        let nbrs = self.graph.check_neighbors(u);
        let target = Rational::from(nbrs.len()) - Rational::one();
        odd_subsets(nbrs)
            .into_iter()
            .filter(|s| kappa_unchecked(nbrs, s, f) == target)
            .collect()
    }

    /// True if some odd set is active at `u`.
    pub fn is_check_active(&self, u: usize, f: &RatVector) -> bool {
        self.check_constraint_range(u)
            .any(|i| self.constraints[i].is_active(f))
    }

    /// One constraint per line, `tag : a.f <= b`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.constraints {
            s.push_str(&c.to_text());
            s.push('\n');
        }
        s
    }
}

fn kappa_unchecked(nbrs: &[usize], subset: &[usize], f: &RatVector) -> Rational {
    let mut k = Rational::zero();
    for &x in nbrs {
        if subset.contains(&x) {
            k += &f[x];
        } else {
            k += Rational::one() - &f[x];
        }
    }
    k
}

/// Odd-cardinality subsets of `items` in increasing bitmask order.
pub fn odd_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let d = items.len();
    (1u64..(1u64 << d))
        .filter(|m| m.count_ones() % 2 == 1)
        .map(|m| {
            (0..d)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| items[i])
                .collect()
        })
        .collect()
}

/// A point certified to lie in its polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PolytopePoint(RatVector);

impl PolytopePoint {
    /// Wraps a point whose membership the caller has already established.
    pub(crate) fn new_unchecked(f: RatVector) -> Self {
        PolytopePoint(f)
    }

    pub fn into_inner(self) -> RatVector {
        self.0
    }
}

impl Deref for PolytopePoint {
    type Target = RatVector;
    fn deref(&self) -> &RatVector {
        &self.0
    }
}
