//! Extreme points of the fundamental polytope: exact testing, full
//! enumeration, an independent half-grid cross-check, and separating costs.

mod dd;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::exec::Exec;
use crate::limits::{Limits, MAX_VERTEX_N};
use crate::polytope::{FundamentalPolytope, PolytopePoint};
use crate::ratmath::{rank_of_rows, RatVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Integral vertex, i.e. a codeword.
    Trivial,
    /// Fractional vertex: a nontrivial LP pseudocodeword.
    Nontrivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedVertex {
    #[serde(rename = "coords")]
    pub point: PolytopePoint,
    pub kind: VertexKind,
    /// Every constraint index tight at `point`, ascending.
    pub active: Vec<usize>,
}

impl ClassifiedVertex {
    fn new(point: RatVector, active: Vec<usize>) -> Self {
        let kind = if point.is_integral() {
            VertexKind::Trivial
        } else {
            VertexKind::Nontrivial
        };
        ClassifiedVertex {
            point: PolytopePoint::new_unchecked(point),
            kind,
            active,
        }
    }

    /// Classifies `f`, failing unless it is an extreme point of `P`.
    pub fn from_point(p: &FundamentalPolytope, f: RatVector) -> Result<Self> {
        if !is_extreme_point(p, &f)? {
            return Err(Error::InvalidParameter(format!("{f} is not a vertex")));
        }
        let active = p.active_indices(&f);
        Ok(ClassifiedVertex::new(f, active))
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == VertexKind::Trivial
    }
}

/// True iff `f` lies in `P` and its tight constraints span `R^n`.
pub fn is_extreme_point(p: &FundamentalPolytope, f: &RatVector) -> Result<bool> {
    if !p.contains(f)? {
        return Ok(false);
    }
    Ok(active_rank(p, f) == p.n())
}

fn active_rank(p: &FundamentalPolytope, f: &RatVector) -> usize {
    let active = p.active_indices(f);
    rank_of_rows(p.n(), active.iter().map(|&i| p.constraint(i).a.entries()))
}

fn check_guards(p: &FundamentalPolytope, limits: &Limits) -> Result<()> {
    guard(
        "dimension for vertex enumeration",
        p.n(),
        limits.max_vertex_n.min(MAX_VERTEX_N),
    )?;
    guard(
        "constraint count for vertex enumeration",
        p.constraints().len(),
        limits
            .max_vertex_constraints
            .min(crate::limits::MAX_VERTEX_CONSTRAINTS),
    )
}

/// All extreme points of `P`, sorted by coordinates.
pub fn enumerate_vertices(p: &FundamentalPolytope) -> Result<Vec<ClassifiedVertex>> {
    enumerate_vertices_with(p, &Limits::default(), Exec::default())
}

pub fn enumerate_vertices_with(
    p: &FundamentalPolytope,
    limits: &Limits,
    exec: Exec,
) -> Result<Vec<ClassifiedVertex>> {
    check_guards(p, limits)?;
    let raw = dd::double_description(p, exec)?;
    let mut by_point: BTreeMap<RatVector, Vec<usize>> = BTreeMap::new();
    for v in raw {
        by_point.entry(v.point).or_insert_with(|| v.mask.indices());
    }
    Ok(by_point
        .into_iter()
        .map(|(point, active)| ClassifiedVertex::new(point, active))
        .collect())
}

/// Every point of `{0, 1/2, 1}^n` that is an extreme point of `P`, sorted.
/// Complete for cycle codes; for general codes it misses vertices outside
/// the half-grid.
pub fn halfgrid_oracle(p: &FundamentalPolytope) -> Result<Vec<ClassifiedVertex>> {
    halfgrid_oracle_with(p, &Limits::default(), Exec::default())
}

pub fn halfgrid_oracle_with(
    p: &FundamentalPolytope,
    limits: &Limits,
    exec: Exec,
) -> Result<Vec<ClassifiedVertex>> {
    let n = p.n();
    guard(
        "dimension for the half-grid oracle",
        n,
        limits.max_vertex_n.min(MAX_VERTEX_N),
    )?;
    let levels = [Rational::zero(), Rational::half(), Rational::one()];
    let total = 3u64.pow(n as u32);
    let mut found = exec.filter_map_u64(total, |mut idx| {
        let mut f = RatVector::zeros(n);
        for x in 0..n {
            f[x] = levels[(idx % 3) as usize].clone();
            idx /= 3;
        }
        if !p.contains_unchecked(&f) || active_rank(p, &f) != n {
            return None;
        }
        let active = p.active_indices(&f);
        Some(ClassifiedVertex::new(f, active))
    });
    found.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(found)
}

/// A cost vector whose unique minimiser over `P` is the vertex `v`: the
/// negated sum of the outward normals of all constraints tight at `v`.
pub fn separating_cost(p: &FundamentalPolytope, v: &ClassifiedVertex) -> Result<RatVector> {
    if v.active.is_empty() {
        return Err(Error::Contract("vertex without active constraints".into()));
    }
    let mut lambda = RatVector::zeros(p.n());
    for &i in &v.active {
        for (x, c) in p.constraint(i).outward_normal().iter().enumerate() {
            if !c.is_zero() {
                lambda[x] -= c;
            }
        }
    }
    Ok(lambda)
}

/// JSON array of `{coords, kind, active}` records.
pub fn vertices_to_json(vertices: &[ClassifiedVertex]) -> serde_json::Value {
    serde_json::to_value(vertices).expect("vertex records serialise")
}
