//! Exact rational scalars, vectors and dense matrices.

mod matrix;
mod rational;

pub(crate) use matrix::dot_unchecked;
pub use matrix::{RatMatrix, RatVector, RowSpan};
pub use rational::Rational;

/// `rank(rows)` for a list of equal-length row slices.
pub fn rank_of_rows<'a, I>(dim: usize, rows: I) -> usize
where
    I: IntoIterator<Item = &'a [Rational]>,
{
    let mut span = RowSpan::new(dim);
    for r in rows {
        span.insert(r);
        if span.rank() == dim {
            break;
        }
    }
    span.rank()
}
