//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed 64 bits per word. Addition is XOR (symmetric
//! difference of supports), so every chain group in this crate is a
//! [`BitVector`] over some indexed basis: edges, cells, faces.
//!
//! Row reduction is plain Gauss-Jordan with first-set-bit pivoting.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector in GF(2)^len.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = !0;
        }
        v.mask_tail();
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector from the positions of its set bits. Repeated indices
    /// cancel in pairs.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    /// Parses a string of `0`/`1` characters; character `i` is coordinate `i`.
    pub fn parse(bits: &str) -> Result<Self> {
        let mut v = Self::zeros(bits.len());
        for (i, ch) in bits.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "bit string contains '{other}'"
                    )))
                }
            }
        }
        Ok(v)
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD + b)
                }
            })
        })
    }

    pub fn support(&self) -> Vec<usize> {
        self.ones_iter().collect()
    }

    /// In-place addition. Panics on length mismatch.
    pub fn xor_with(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "adding vectors of different length");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn and_count(&self, other: &BitVector) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        self.and_count(other) % 2 == 1
    }

    /// True when every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Applies an index map `i -> perm[i]` to the support.
    pub fn permuted(&self, perm: &[usize], target_len: usize) -> BitVector {
        BitVector::from_indices(target_len, self.ones_iter().map(|i| perm[i]))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl AddAssign<&BitVector> for BitVector {
    fn add_assign(&mut self, rhs: &BitVector) {
        self.xor_with(rhs);
    }
}

impl Add<&BitVector> for &BitVector {
    type Output = BitVector;
    fn add(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_with(rhs);
        out
    }
}

impl Add for BitVector {
    type Output = BitVector;
    fn add(mut self, rhs: BitVector) -> BitVector {
        self.xor_with(&rhs);
        self
    }
}

/// An ordered list of equal-length row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows written as bit strings, e.g. `["110", "011"]`.
    pub fn parse(cols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| BitVector::parse(r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn push(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zero(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `m · x`: coordinate `i` of the result is `row_i · x`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(BitVector::from_bools(
            &self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>(),
        ))
    }

    /// `Σ coeffs_i · row_i`.
    pub fn combine(&self, coeffs: &BitVector) -> Result<BitVector> {
        if coeffs.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                found: coeffs.len(),
            });
        }
        let mut out = BitVector::zeros(self.cols);
        for i in coeffs.ones_iter() {
            out.xor_with(&self.rows[i]);
        }
        Ok(out)
    }

    /// Reduced row echelon form of the row space (zero rows dropped) and the
    /// pivot column of each remaining row.
    pub fn rref(&self) -> (Vec<BitVector>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.cols {
            if top == rows.len() {
                break;
            }
            let Some(found) = (top..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(top, found);
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != top && row.get(col) {
                    row.xor_with(&pivot_row);
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row.clone());
        }
        basis.rank()
    }

    /// Coefficients `c` with `Σ c_i · row_i = target`, if the target lies in
    /// the row space. Unique when the rows are independent.
    pub fn solve_in_span(&self, target: &BitVector) -> Result<Option<BitVector>> {
        SpanSolver::new(self).solve(target)
    }

    /// Basis of `{x : m · x = 0}`; it has `cols - rank` rows.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = BitMatrix::new(self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = BitVector::unit(self.cols, free);
            for (row, &p) in rref.iter().zip(&pivots) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            kernel.rows.push(x);
        }
        kernel
    }

    /// Basis of `{c : Σ c_i · row_i = 0}`, the linear dependencies among rows.
    pub fn left_kernel(&self) -> BitMatrix {
        self.transpose().kernel_basis()
    }

    /// Basis of the subspace of the row space fixed by a linear map.
    ///
    /// The rows must be independent. Returns vectors `v = Σ c_i row_i` with
    /// `map(v) = v`.
    pub fn fixed_subspace<F>(&self, map: F) -> BitMatrix
    where
        F: Fn(&BitVector) -> BitVector,
    {
        let moved = BitMatrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r + &map(r)).collect(),
        };
        let deps = moved.left_kernel();
        BitMatrix {
            cols: self.cols,
            rows: deps
                .rows
                .iter()
                .map(|c| self.combine(c).expect("coefficient length matches"))
                .collect(),
        }
    }

    /// Stacks the rows of `other` below these rows.
    pub fn stacked(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if other.cols != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            cols: self.cols,
            rows,
        })
    }
}

/// An incrementally built reduced basis of a subspace.
///
/// Rows are kept in reduced form: each pivot column is set in exactly one
/// stored row.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        let mut b = Self::new(m.col_count());
        for r in m.rows() {
            b.insert(r.clone());
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// Remainder of `v` after elimination against the stored pivots.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_with(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.cols, "vector length does not match basis");
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_with(&r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_matrix(self) -> BitMatrix {
        BitMatrix {
            cols: self.cols,
            rows: self.rows,
        }
    }
}

/// Row-space membership with coefficient recovery, reusable across queries.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    cols: usize,
    generators: usize,
    rows: Vec<BitVector>,
    combos: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl SpanSolver {
    pub fn new(m: &BitMatrix) -> Self {
        let k = m.row_count();
        let mut rows: Vec<BitVector> = m.rows().to_vec();
        let mut combos: Vec<BitVector> = (0..k).map(|i| BitVector::unit(k, i)).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..m.col_count() {
            if top == rows.len() {
                break;
            }
            let Some(found) = (top..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(top, found);
            combos.swap(top, found);
            let (pr, pc) = (rows[top].clone(), combos[top].clone());
            for r in 0..rows.len() {
                if r != top && rows[r].get(col) {
                    rows[r].xor_with(&pr);
                    combos[r].xor_with(&pc);
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        combos.truncate(top);
        Self {
            cols: m.col_count(),
            generators: k,
            rows,
            combos,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn solve(&self, target: &BitVector) -> Result<Option<BitVector>> {
        if target.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: target.len(),
            });
        }
        let mut rest = target.clone();
        let mut coeffs = BitVector::zeros(self.generators);
        for ((row, combo), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if rest.get(p) {
                rest.xor_with(row);
                coeffs.xor_with(combo);
            }
        }
        Ok(rest.is_zero().then_some(coeffs))
    }

    pub fn contains(&self, target: &BitVector) -> Result<bool> {
        Ok(self.solve(target)?.is_some())
    }
}
