//! Incremental double description over exact rationals.
//!
//! The enumerator starts from the `2^n` vertices of the unit cube (the box
//! constraints) and intersects with one check constraint at a time. Each cut
//! keeps the vertices on the feasible side, and for every edge crossing the
//! hyperplane adds the crossing point. Edges are recognised combinatorially:
//! two vertices span an edge of the current polytope iff no third vertex is
//! tight on every constraint the pair shares.

use crate::error::Result;
use crate::exec::Exec;
use crate::polytope::FundamentalPolytope;
use crate::ratmath::{RatVector, Rational};

/// Constraint-incidence bitset; sized for the vertex-enumeration guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub(crate) struct Mask([u64; 4]);

impl Mask {
    pub(crate) const CAPACITY: usize = 256;

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Mask) -> Mask {
        Mask([
            self.0[0] & other.0[0],
            self.0[1] & other.0[1],
            self.0[2] & other.0[2],
            self.0[3] & other.0[3],
        ])
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset_of(&self, other: &Mask) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn indices(&self) -> Vec<usize> {
        (0..Self::CAPACITY)
            .filter(|&i| self.0[i / 64] >> (i % 64) & 1 == 1)
            .collect()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct DdVertex {
    pub(crate) point: RatVector,
    pub(crate) mask: Mask,
}

pub(crate) fn double_description(p: &FundamentalPolytope, exec: Exec) -> Result<Vec<DdVertex>> {
    let n = p.n();
    debug_assert!(p.constraints().len() <= Mask::CAPACITY);
    let mut verts: Vec<DdVertex> = (0u64..1 << n)
        .map(|m| {
            let mut mask = Mask::default();
            let point = (0..n)
                .map(|x| {
                    if m >> x & 1 == 1 {
                        mask.set(p.upper_index(x));
                        Rational::one()
                    } else {
                        mask.set(p.lower_index(x));
                        Rational::zero()
                    }
                })
                .collect();
            DdVertex { point, mask }
        })
        .collect();

    for k in 2 * n..p.constraints().len() {
        verts = cut(p, k, verts, exec);
    }
    Ok(verts)
}

fn cut(p: &FundamentalPolytope, k: usize, verts: Vec<DdVertex>, exec: Exec) -> Vec<DdVertex> {
    let n = p.n();
    let c = p.constraint(k);
    let slacks: Vec<Rational> = exec.map(verts.len(), |i| c.slack(&verts[i].point));
    let plus: Vec<usize> = (0..verts.len())
        .filter(|&i| slacks[i].is_positive())
        .collect();
    let minus: Vec<usize> = (0..verts.len())
        .filter(|&i| slacks[i].is_negative())
        .collect();

    let crossings: Vec<DdVertex> = if minus.is_empty() {
        Vec::new()
    } else {
        let verts = &verts;
        let slacks = &slacks;
        let plus = &plus;
        exec.flat_map(minus.len(), |mi| {
            let m = minus[mi];
            let mut out = Vec::new();
            for &q in plus {
                let common = verts[q].mask.and(&verts[m].mask);
                if common.count() + 1 < n {
                    continue;
                }
                let blocked = verts
                    .iter()
                    .enumerate()
                    .any(|(w, v)| w != q && w != m && common.is_subset_of(&v.mask));
                if blocked {
                    continue;
                }
                // point on segment q -> m where the slack vanishes
                let t = &slacks[q] / &(&slacks[q] - &slacks[m]);
                let point = verts[q].point.lerp(&verts[m].point, &t);
                let mut mask = common;
                mask.set(k);
                out.push(DdVertex { point, mask });
            }
            out
        })
    };

    let mut next: Vec<DdVertex> = Vec::with_capacity(verts.len() + crossings.len());
    for (i, mut v) in verts.into_iter().enumerate() {
        if slacks[i].is_negative() {
            continue;
        }
        if slacks[i].is_zero() {
            v.mask.set(k);
        }
        next.push(v);
    }
    next.extend(crossings);
    next
}
