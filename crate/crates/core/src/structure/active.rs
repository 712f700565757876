use std::collections::BTreeSet;

use crate::code::{NodeId, Subgraph, TannerGraph};
use crate::error::{Error, Result};
use crate::polytope::{ConstraintTag, FundamentalPolytope};
use crate::ratmath::{RatMatrix, RatVector, Rational, RowSpan};
use crate::vertexenum::ClassifiedVertex;

use super::{fractional_support, is_two_regular};

/// A square, invertible system of tight constraints at a vertex, written in
/// permuted coordinates (integral columns first) as `L = [I 0; Q R]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveSystem {
    pub l: RatMatrix,
    pub z: RatVector,
    pub q: RatMatrix,
    pub r: RatMatrix,
    /// `column_order[j]` is the original coordinate placed in column `j`.
    pub column_order: Vec<usize>,
    /// Constraint index behind each row of `L`.
    pub row_constraints: Vec<usize>,
    /// Check node behind each row of `[Q R]`.
    pub r_row_checks: Vec<usize>,
    /// Number of fractional coordinates.
    pub m: usize,
}

impl ActiveSystem {
    /// Fractional coordinates in column order of `R`.
    pub fn fractional_columns(&self) -> &[usize] {
        &self.column_order[self.column_order.len() - self.m..]
    }

    /// The checks represented in `[Q R]`.
    pub fn u_omega(&self) -> BTreeSet<usize> {
        self.r_row_checks.iter().copied().collect()
    }

    /// No check contributes two rows to `[Q R]`.
    pub fn row_checks_distinct(&self) -> bool {
        self.u_omega().len() == self.r_row_checks.len()
    }

    /// `f` in the permuted coordinates of `L`.
    pub fn permute(&self, f: &RatVector) -> RatVector {
        self.column_order.iter().map(|&x| f[x].clone()).collect()
    }

    /// `|det L| = |det R|`.
    pub fn det_abs_match(&self) -> Result<bool> {
        let dl = self.l.determinant()?.abs();
        let dr = if self.m == 0 {
            Rational::one()
        } else {
            self.r.determinant()?.abs()
        };
        Ok(dl == dr)
    }
}

/// Greedy extension in canonical constraint order.
pub fn build_active_system(p: &FundamentalPolytope, v: &ClassifiedVertex) -> Result<ActiveSystem> {
    let candidates: Vec<usize> = v
        .active
        .iter()
        .copied()
        .filter(|&i| matches!(p.constraint(i).tag, ConstraintTag::CheckOdd { .. }))
        .collect();
    build_active_system_with_order(p, v, &candidates)
}

/// Like [`build_active_system`] but tries the check rows in `order`, which
/// must list active check constraints of `v`.
pub fn build_active_system_with_order(
    p: &FundamentalPolytope,
    v: &ClassifiedVertex,
    order: &[usize],
) -> Result<ActiveSystem> {
    let n = p.n();
    let f = &v.point;
    if f.dim() != n {
        return Err(Error::Dimension(format!(
            "vertex of length {} for code length {n}",
            f.dim()
        )));
    }
    let frac = fractional_support(f).vars().to_vec();
    let m = frac.len();
    let frac_set: BTreeSet<usize> = frac.iter().copied().collect();
    let mut column_order: Vec<usize> = (0..n).filter(|x| !frac_set.contains(x)).collect();
    column_order.extend(&frac);

    let mut span = RowSpan::new(n);
    let mut row_constraints = Vec::with_capacity(n);
    for &x in &column_order[..n - m] {
        let idx = if f[x].is_one() {
            p.upper_index(x)
        } else {
            p.lower_index(x)
        };
        span.insert(p.constraint(idx).a.entries());
        row_constraints.push(idx);
    }
    let mut r_row_checks = Vec::with_capacity(m);
    for &i in order {
        if span.rank() == n {
            break;
        }
        let c = p.constraint(i);
        let ConstraintTag::CheckOdd { check, .. } = c.tag else {
            return Err(Error::InvalidParameter(format!(
                "extension candidate {} is not a check constraint",
                c.tag
            )));
        };
        if !c.is_active(f) {
            return Err(Error::InvalidParameter(format!(
                "extension candidate {} is not active",
                c.tag
            )));
        }
        if span.insert(c.a.entries()) {
            row_constraints.push(i);
            r_row_checks.push(check);
        }
    }
    if span.rank() != n {
        return Err(Error::Contract(format!(
            "active rows reach rank {} of {n}; {} is not a vertex",
            span.rank(),
            **f
        )));
    }

    let rows: Vec<RatVector> = row_constraints
        .iter()
        .map(|&i| {
            let a = &p.constraint(i).a;
            column_order.iter().map(|&x| a[x].clone()).collect()
        })
        .collect();
    let l = RatMatrix::from_rows(&rows, n)?;
    let z: RatVector = row_constraints
        .iter()
        .map(|&i| p.constraint(i).b.clone())
        .collect();
    let top: Vec<usize> = (0..n - m).collect();
    let bottom: Vec<usize> = (n - m..n).collect();
    let q = l.select(&bottom, &top);
    let r = l.select(&bottom, &bottom);
    Ok(ActiveSystem {
        l,
        z,
        q,
        r,
        column_order,
        row_constraints,
        r_row_checks,
        m,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RAnalysis {
    /// Bipartite graph of `R`: fractional variable `x` joined to the check of
    /// row `i` when `R[i, x]` is nonzero.
    pub g_r: Subgraph,
    pub r_inverse: RatMatrix,
    /// Every entry of `R^-1` is in {-1/2, 0, 1/2}.
    pub inverse_ok: bool,
    /// `|F| = |U|`.
    pub card_match: bool,
    pub two_regular: bool,
    /// Sizes of the diagonal blocks of `R` after permuting rows and columns
    /// by connected component of `g_r`, ascending.
    pub blocks: Vec<usize>,
}

pub fn analyze_r(sys: &ActiveSystem, graph: &TannerGraph) -> Result<RAnalysis> {
    let frac = sys.fractional_columns();
    let mut g_r = Subgraph::from_parts(frac.iter().copied(), sys.r_row_checks.iter().copied(), []);
    for (i, &u) in sys.r_row_checks.iter().enumerate() {
        for (j, &x) in frac.iter().enumerate() {
            if !sys.r[(i, j)].is_zero() {
                debug_assert!(graph.var_neighbors(x).contains(&u));
                g_r.add_edge(x, u);
            }
        }
    }
    let r_inverse = if sys.m == 0 {
        RatMatrix::zeros(0, 0)
    } else {
        sys.r
            .inverse()?
            .ok_or_else(|| Error::Contract("R block is singular".into()))?
    };
    let half = Rational::half();
    let inverse_ok = r_inverse
        .entries()
        .iter()
        .all(|e| e.is_zero() || e.abs() == half);

    let mut blocks: Vec<usize> = g_r
        .components()
        .iter()
        .map(|c| c.iter().filter(|v| matches!(v, NodeId::Var(_))).count())
        .collect();
    blocks.sort_unstable();

    Ok(RAnalysis {
        card_match: frac.len() == sys.u_omega().len(),
        two_regular: is_two_regular(&g_r),
        g_r,
        r_inverse,
        inverse_ok,
        blocks,
    })
}
