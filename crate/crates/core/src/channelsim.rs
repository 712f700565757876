//! Seeded channel simulation driving LP-versus-ML decode trials.
//!
//! Every trial transmits the zero codeword. The BSC uses the LLR magnitude
//! `L = 1`: for hard decisions any positive constant gives the same argmin,
//! and it keeps the objective exact. Randomness comes from `ChaCha8Rng`
//! seeded with `seed_from_u64(seed)`; trial `i` of a run uses stream `i`
//! of that seed, so trials are independent of scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::{Codeword, ParityCheckMatrix};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::limits::Limits;
use crate::lp::{lp_decode_on, ml_select, Certificate, CostVector};
use crate::polytope::FundamentalPolytope;
use crate::ratmath::{RatVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChannelModel {
    /// Binary symmetric channel with exact crossover `0 < p < 1/2`.
    Bsc { p: Rational },
    /// Fixed per-bit LLR magnitudes, signed by the transmitted bit. Zero
    /// entries act as erasures. Consumes no randomness.
    ErasureLike { llrs: RatVector },
}

impl ChannelModel {
    pub fn bsc(p: Rational) -> Result<Self> {
        let ch = ChannelModel::Bsc { p };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ChannelModel::Bsc { p } => {
                if !p.is_positive() || *p >= Rational::half() {
                    return Err(Error::InvalidParameter(format!(
                        "crossover probability {p} outside (0, 1/2)"
                    )));
                }
                if p.to_i64_pair().is_none() {
                    return Err(Error::InvalidParameter(format!(
                        "crossover probability {p} has a denominator beyond 64 bits"
                    )));
                }
                Ok(())
            }
            ChannelModel::ErasureLike { .. } => Ok(()),
        }
    }

    fn sample_with(
        &self,
        transmitted: &[u8],
        rng: &mut ChaCha8Rng,
    ) -> Result<(CostVector, Vec<u8>)> {
        match self {
            ChannelModel::Bsc { p } => {
                let (a, b) = p
                    .to_i64_pair()
                    .ok_or_else(|| Error::InvalidParameter("crossover probability".into()))?;
                let mut flips = Vec::with_capacity(transmitted.len());
                let lambda = transmitted
                    .iter()
                    .map(|&c| {
                        let flip = u8::from(rng.gen_range(0..b) < a);
                        flips.push(flip);
                        if c ^ flip == 0 {
                            Rational::one()
                        } else {
                            -Rational::one()
                        }
                    })
                    .collect();
                Ok((CostVector::new(lambda), flips))
            }
            ChannelModel::ErasureLike { llrs } => {
                if llrs.dim() != transmitted.len() {
                    return Err(Error::Dimension(format!(
                        "LLR table of length {} for {} bits",
                        llrs.dim(),
                        transmitted.len()
                    )));
                }
                let lambda: RatVector = transmitted
                    .iter()
                    .zip(llrs.iter())
                    .map(|(&c, l)| if c == 0 { l.clone() } else { -l })
                    .collect();
                let flips = lambda.iter().map(|l| u8::from(l.is_negative())).collect();
                Ok((CostVector::new(lambda), flips))
            }
        }
    }
}

/// One channel realisation for `transmitted`; the same seed always gives
/// the same vector.
pub fn sample_llr(ch: &ChannelModel, transmitted: &Codeword, seed: u64) -> Result<CostVector> {
    ch.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ch.sample_with(transmitted.bits(), &mut rng)?.0)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrialSummary {
    pub trials: usize,
    pub lp_word_errors: usize,
    pub ml_word_errors: usize,
    pub nontrivial_outputs: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    /// Flipped positions as a 0/1 string.
    pub flips: String,
    pub lp_kind: Certificate,
    pub lp_value: Rational,
    pub ml_value: Rational,
    #[serde(skip)]
    pub lp_error: bool,
    #[serde(skip)]
    pub ml_error: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRun {
    pub summary: TrialSummary,
    pub records: Vec<TrialRecord>,
}

pub fn run_trials(
    h: &ParityCheckMatrix,
    ch: &ChannelModel,
    count: usize,
    seed: u64,
) -> Result<TrialSummary> {
    Ok(run_trials_with(h, ch, count, seed, &Limits::default(), Exec::default())?.summary)
}

pub fn run_trials_with(
    h: &ParityCheckMatrix,
    ch: &ChannelModel,
    count: usize,
    seed: u64,
    limits: &Limits,
    exec: Exec,
) -> Result<TrialRun> {
    ch.validate()?;
    let words = h.enumerate_codewords_with_limit(limits.max_codeword_n)?;
    let p = FundamentalPolytope::build_with_limit(h, limits.max_check_degree)?;
    let zero = vec![0u8; h.n()];

    let records = exec
        .map(count, |trial| -> Result<TrialRecord> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let (lambda, flips) = ch.sample_with(&zero, &mut rng)?;
            let lp = lp_decode_on(&p, &lambda)?;
            let (ml_value, ml_word) = ml_select(&words, &lambda)?;
            Ok(TrialRecord {
                trial,
                seed,
                flips: flips.iter().map(|b| char::from(b'0' + b)).collect(),
                lp_kind: lp.certificate,
                lp_error: lp.optimum.iter().any(|v| !v.is_zero()),
                lp_value: lp.value,
                ml_error: !ml_word.is_zero(),
                ml_value,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let summary = records.iter().fold(
        TrialSummary {
            seed,
            ..TrialSummary::default()
        },
        |mut s, r| {
            s.trials += 1;
            s.lp_word_errors += usize::from(r.lp_error);
            s.ml_word_errors += usize::from(r.ml_error);
            s.nontrivial_outputs += usize::from(r.lp_kind == Certificate::NontrivialPseudocodeword);
            s
        },
    );
    Ok(TrialRun { summary, records })
}
