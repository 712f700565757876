//! GF(2) row reduction on packed bit rows.

/// A row of bits packed little-endian into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut r = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                r.set(i);
            }
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

/// Reduced row echelon form over GF(2). Returns the nonzero rows and their
/// pivot columns.
pub fn rref(mut rows: Vec<BitRow>, ncols: usize) -> (Vec<BitRow>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<BitRow>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of the right null space `{v : rows * v = 0}`, one vector per free
/// column (in increasing column order).
pub fn nullspace_basis(rows: Vec<BitRow>, ncols: usize) -> Vec<BitRow> {
    let (reduced, pivots) = rref(rows, ncols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitRow::zeros(ncols);
            v.set(free);
            for (row, &p) in reduced.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p);
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace_of_small_matrix() {
        let rows = vec![
            BitRow::from_bits(&[1, 1, 0]),
            BitRow::from_bits(&[0, 1, 1]),
            BitRow::from_bits(&[1, 0, 1]),
        ];
        assert_eq!(rank(rows.clone(), 3), 2);
        let basis = nullspace_basis(rows, 3);
        assert_eq!(basis, vec![BitRow::from_bits(&[1, 1, 1])]);
    }

    #[test]
    fn wide_rows_span_words() {
        let mut r = BitRow::zeros(130);
        r.set(0);
        r.set(129);
        assert!(r.get(129) && !r.get(64));
        let mut s = r.clone();
        s.xor_assign(&r);
        assert!(s.is_zero());
    }
}
