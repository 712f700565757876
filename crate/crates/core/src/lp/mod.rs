//! LP decoding over the fundamental polytope and a brute-force ML decoder.

mod simplex;

use std::ops::Deref;

use serde::Serialize;

use crate::code::{Codeword, ParityCheckMatrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polytope::{FundamentalPolytope, PolytopePoint};
use crate::ratmath::{RatVector, Rational};
use crate::vertexenum::is_extreme_point;

/// Per-bit costs `lambda`; positive entries favour bit 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CostVector(RatVector);

impl CostVector {
    pub fn new(lambda: RatVector) -> Self {
        CostVector(lambda)
    }

    pub fn uniform(n: usize, value: i64) -> Self {
        CostVector(RatVector::filled(n, Rational::from_integer(value)))
    }

    /// Whitespace-separated rationals (`p/q` or integers).
    pub fn parse(text: &str) -> Result<Self> {
        let v: RatVector = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Rational>>>()?
            .into_iter()
            .collect();
        if v.dim() == 0 {
            return Err(Error::Parse("empty cost vector".into()));
        }
        Ok(CostVector(v))
    }

    pub fn into_inner(self) -> RatVector {
        self.0
    }
}

impl Deref for CostVector {
    type Target = RatVector;
    fn deref(&self) -> &RatVector {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Integral optimum: a codeword, and ML-optimal.
    MlCodeword,
    NontrivialPseudocodeword,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeResult {
    pub optimum: PolytopePoint,
    pub value: Rational,
    pub certificate: Certificate,
}

impl DecodeResult {
    /// The decoded codeword, when the certificate is ML.
    pub fn codeword(&self) -> Option<Vec<u8>> {
        match self.certificate {
            Certificate::MlCodeword => Codeword::bits_of_integral(&self.optimum),
            Certificate::NontrivialPseudocodeword => None,
        }
    }
}

fn check_cost(p: &FundamentalPolytope, lambda: &RatVector) -> Result<()> {
    if lambda.dim() != p.n() {
        return Err(Error::Dimension(format!(
            "cost vector of length {} for code length {}",
            lambda.dim(),
            p.n()
        )));
    }
    Ok(())
}

/// Minimum of `lambda . f` over `P`, attained at the returned vertex.
pub fn simplex_min(
    p: &FundamentalPolytope,
    lambda: &CostVector,
) -> Result<(Rational, PolytopePoint)> {
    check_cost(p, lambda)?;
    let out = simplex::minimize(p, lambda);
    // a simplex basis maps to a vertex; confirm from the original constraints
    if !is_extreme_point(p, &out.point)? {
        return Err(Error::Contract(format!(
            "simplex terminated at non-vertex {} after {} pivots",
            out.point, out.pivots
        )));
    }
    Ok((out.value, PolytopePoint::new_unchecked(out.point)))
}

pub fn lp_decode_on(p: &FundamentalPolytope, lambda: &CostVector) -> Result<DecodeResult> {
    let (value, optimum) = simplex_min(p, lambda)?;
    let certificate = if optimum.is_integral() {
        Certificate::MlCodeword
    } else {
        Certificate::NontrivialPseudocodeword
    };
    Ok(DecodeResult {
        optimum,
        value,
        certificate,
    })
}

pub fn lp_decode(h: &ParityCheckMatrix, lambda: &CostVector) -> Result<DecodeResult> {
    lp_decode_with(h, lambda, &Limits::default())
}

pub fn lp_decode_with(
    h: &ParityCheckMatrix,
    lambda: &CostVector,
    limits: &Limits,
) -> Result<DecodeResult> {
    let p = FundamentalPolytope::build_with_limit(h, limits.max_check_degree)?;
    lp_decode_on(&p, lambda)
}

/// Codeword minimising `lambda . c`; ties go to the lexicographically least
/// bit vector (so the zero word wins any tie it is part of).
pub fn ml_decode_bruteforce(
    h: &ParityCheckMatrix,
    lambda: &CostVector,
) -> Result<(Rational, Codeword)> {
    ml_decode_bruteforce_with(h, lambda, &Limits::default())
}

pub fn ml_decode_bruteforce_with(
    h: &ParityCheckMatrix,
    lambda: &CostVector,
    limits: &Limits,
) -> Result<(Rational, Codeword)> {
    h.check_len(lambda.dim())?;
    let words = h.enumerate_codewords_with_limit(limits.max_codeword_n)?;
    ml_select(&words, lambda)
}

/// Brute-force ML over a precomputed, lexicographically sorted codeword list.
pub fn ml_select(words: &[Codeword], lambda: &CostVector) -> Result<(Rational, Codeword)> {
    let mut best: Option<(Rational, &Codeword)> = None;
    for w in words {
        let v: Rational = w
            .bits()
            .iter()
            .zip(lambda.iter())
            .filter(|(&b, _)| b == 1)
            .map(|(_, l)| l)
            .sum();
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, w));
        }
    }
    let (v, w) = best.ok_or_else(|| Error::Contract("empty codeword list".into()))?;
    Ok((v, w.clone()))
}
