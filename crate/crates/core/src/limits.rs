//! Desk-scale size guards. Every default here is a ceiling: callers may
//! lower a guard but never raise it.

use crate::code::MAX_ENUMERATION_N;
use crate::error::{Error, Result};
use crate::polytope::MAX_CHECK_DEGREE;

pub const MAX_VERTEX_N: usize = 12;
pub const MAX_VERTEX_CONSTRAINTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Code length for codeword enumeration and brute-force ML decoding.
    pub max_codeword_n: usize,
    pub max_check_degree: usize,
    /// Dimension for vertex enumeration and the half-grid oracle.
    pub max_vertex_n: usize,
    pub max_vertex_constraints: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_codeword_n: MAX_ENUMERATION_N,
            max_check_degree: MAX_CHECK_DEGREE,
            max_vertex_n: MAX_VERTEX_N,
            max_vertex_constraints: MAX_VERTEX_CONSTRAINTS,
        }
    }
}

impl Limits {
    /// Defaults with optional lower caps on code length and check degree.
    /// Asking for more than a default is rejected.
    pub fn lowered(max_n: Option<usize>, max_degree: Option<usize>) -> Result<Self> {
        let mut l = Limits::default();
        if let Some(n) = max_n {
            if n > l.max_vertex_n.max(l.max_codeword_n) {
                return Err(Error::InvalidParameter(format!(
                    "--max-n {n} exceeds the built-in ceiling {}",
                    l.max_vertex_n.max(l.max_codeword_n)
                )));
            }
            l.max_codeword_n = l.max_codeword_n.min(n);
            l.max_vertex_n = l.max_vertex_n.min(n);
        }
        if let Some(d) = max_degree {
            if d > l.max_check_degree {
                return Err(Error::InvalidParameter(format!(
                    "--max-degree {d} exceeds the built-in ceiling {}",
                    l.max_check_degree
                )));
            }
            l.max_check_degree = d;
        }
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards_only_go_down() {
        let l = Limits::lowered(Some(8), Some(4)).unwrap();
        assert_eq!(l.max_vertex_n, 8);
        assert_eq!(l.max_codeword_n, 8);
        assert_eq!(l.max_check_degree, 4);
        assert_eq!(Limits::lowered(Some(20), None).unwrap().max_vertex_n, 12);
        assert!(Limits::lowered(Some(25), None).is_err());
        assert!(Limits::lowered(None, Some(21)).is_err());
    }
}
