//! Dense-tableau primal simplex with Bland's rule.
//!
//! Every check and upper-box row `a.f <= b` gets a slack, and the lower box
//! rows become the sign constraints `f >= 0`. All right-hand sides are
//! nonnegative, so the all-slack basis (the origin, i.e. the zero codeword)
//! is feasible and no phase one is needed.

use crate::polytope::{FundamentalPolytope, Relation};
use crate::ratmath::{RatVector, Rational};

pub(crate) struct SimplexOutcome {
    pub(crate) point: RatVector,
    pub(crate) value: Rational,
    pub(crate) pivots: usize,
}

pub(crate) fn minimize(p: &FundamentalPolytope, cost: &RatVector) -> SimplexOutcome {
    let n = p.n();
    // rows: every `<=` constraint; `>=` rows are exactly the sign bounds
    let rows: Vec<usize> = (0..p.constraints().len())
        .filter(|&i| p.constraint(i).relation == Relation::Le)
        .collect();
    let m = rows.len();
    let width = n + m + 1;
    let rhs = width - 1;

    let mut tab: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(r, &ci)| {
            let c = p.constraint(ci);
            debug_assert!(!c.b.is_negative());
            let mut row = vec![Rational::zero(); width];
            row[..n].clone_from_slice(c.a.entries());
            row[n + r] = Rational::one();
            row[rhs] = c.b.clone();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs; the rhs slot is carried along but unused
    let mut reduced = vec![Rational::zero(); width];
    reduced[..n].clone_from_slice(cost.entries());

    let mut pivots = 0;
    while let Some(enter) = (0..n + m).find(|&j| reduced[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (lr, _) = leave.expect("fundamental polytope is bounded");
        pivot(&mut tab, &mut reduced, lr, enter);
        basis[lr] = enter;
        pivots += 1;
    }

    let mut point = RatVector::zeros(n);
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            point[b] = tab[i][rhs].clone();
        }
    }
    let value = crate::ratmath::dot_unchecked(cost.entries(), point.entries());
    SimplexOutcome {
        point,
        value,
        pivots,
    }
}

fn pivot(tab: &mut [Vec<Rational>], reduced: &mut [Rational], lr: usize, col: usize) {
    let inv = tab[lr][col].recip().expect("positive pivot");
    if !inv.is_one() {
        for x in tab[lr].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
    }
    let prow = tab[lr].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == lr || row[col].is_zero() {
            continue;
        }
        let f = row[col].clone();
        for &j in &nz {
            row[j] -= &f * &prow[j];
        }
    }
    if !reduced[col].is_zero() {
        let f = reduced[col].clone();
        for &j in &nz {
            reduced[j] -= &f * &prow[j];
        }
    }
}
