use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

/// Largest size accepted by the permutation expansion.
pub const MAX_DET_SIZE: usize = 8;

/// A dense matrix of polynomials over a common ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::ArityMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.ring() != entries[0].ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Result<Self> {
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Self::new(rows, cols, entries)
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { ring.one() } else { ring.zero() })
            .expect("identity dimensions are valid")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &PolyRing {
        self.entries[0].ring()
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        PolyMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(self.ring().zero(), |acc, k| &acc + &(self.get(r, k) * other.get(k, c)))
        })
    }

    /// Determinant by signed permutation expansion.
    ///
    /// Permutations are enumerated depth-first so that partial products are
    /// shared between permutations with a common prefix, and branches through
    /// zero entries are pruned.
    pub fn determinant(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(Error::MatrixTooLarge(self.rows));
        }
        let mut terms = Vec::new();
        let mut used = vec![false; self.cols];
        self.expand(0, &mut used, false, self.ring().one(), &mut terms);
        let ring = self.ring();
        Ok(terms.into_iter().fold(ring.zero(), |acc, t| &acc + &t))
    }

    fn expand(&self, row: usize, used: &mut [bool], odd: bool, partial: Poly, out: &mut Vec<Poly>) {
        if row == self.rows {
            out.push(if odd { -partial } else { partial });
            return;
        }
        // columns already taken to the right of `c` count the inversions introduced here
        for c in 0..self.cols {
            if used[c] || self.get(row, c).is_zero() {
                continue;
            }
            let inversions = used[c + 1..].iter().filter(|&&u| u).count();
            used[c] = true;
            let next = &partial * self.get(row, c);
            self.expand(row + 1, used, odd ^ (inversions % 2 == 1), next, out);
            used[c] = false;
        }
    }
}

/// Determinant of the Jacobian matrix `(∂ f_i / ∂ x_{vars[j]})`.
pub fn jacobian_det(fs: &[Poly], vars: &[usize]) -> Result<Poly> {
    if fs.len() != vars.len() || fs.is_empty() {
        return Err(Error::NotSquare {
            rows: fs.len(),
            cols: vars.len(),
        });
    }
    PolyMatrix::from_fn(fs.len(), vars.len(), |r, c| fs[r].partial_derivative(vars[c]))?.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::parse;

    #[test]
    fn small_determinants() {
        let r = PolyRing::numbered(3, "x", 2).unwrap();
        assert!(PolyMatrix::identity(&r, 2).determinant().unwrap().is_one());
        let (x1, x2) = (r.var(0), r.var(1));
        let mut m = PolyMatrix::new(2, 2, vec![x1.clone(), x2.clone(), x1.pow(3), x2.pow(3)]).unwrap();
        let det = m.determinant().unwrap();
        assert_eq!(det, parse(&r, "x1*x2^3 - x1^3*x2").unwrap());
        m.swap_rows(0, 1);
        assert_eq!(m.determinant().unwrap(), -det);
    }

    #[test]
    fn shape_errors() {
        let r = PolyRing::numbered(3, "x", 1).unwrap();
        let m = PolyMatrix::new(1, 2, vec![r.one(), r.one()]).unwrap();
        assert_eq!(m.determinant(), Err(Error::NotSquare { rows: 1, cols: 2 }));
        assert!(PolyMatrix::new(2, 2, vec![r.one()]).is_err());
        assert_eq!(PolyMatrix::identity(&r, 9).determinant(), Err(Error::MatrixTooLarge(9)));
        assert!(jacobian_det(&[r.var(0)], &[0, 0]).is_err());
    }

    #[test]
    fn jacobian_of_identity_map() {
        let r = PolyRing::numbered(5, "x", 2).unwrap();
        assert!(jacobian_det(&[r.var(0), r.var(1)], &[0, 1]).unwrap().is_one());
    }

    #[test]
    fn permutation_matrix_signs() {
        // 3-cycle is even, transposition odd
        let r = PolyRing::numbered(7, "x", 1).unwrap();
        let perm = |sigma: [usize; 3]| {
            PolyMatrix::from_fn(3, 3, |i, j| if sigma[i] == j { r.one() } else { r.zero() }).unwrap()
        };
        assert!(perm([1, 2, 0]).determinant().unwrap().is_one());
        assert_eq!(perm([1, 0, 2]).determinant().unwrap(), r.constant(-1));
    }
}
