//! Exact linear algebra over the two-element field.
//!
//! Vectors and matrix rows are bit-packed into single `u64` words, which
//! covers every dimension this crate needs (2g <= 64 for genus up to 32).
//! Elimination works on `u128` scratch rows so a matrix can carry an
//! augmented right-hand side or an identity block without extra storage.
//!
//! Pivoting always selects the lowest available index, so echelon forms,
//! kernel bases and particular solutions are reproducible across runs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension: one machine word per row.
pub const MAX_DIM: usize = 64;

/// A vector over GF(2), bit `i` holding coordinate `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Vec {
    dim: usize,
    bits: u64,
}

impl Gf2Vec {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1 && dim <= MAX_DIM, "dimension {dim} out of 1..={MAX_DIM}");
        Gf2Vec { dim, bits: 0 }
    }

    /// Standard basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.set(i, true);
        v
    }

    /// Build from the low `dim` bits of `bits`.
    pub fn from_bits(dim: usize, bits: u64) -> Self {
        let mut v = Self::zero(dim);
        assert!(dim == MAX_DIM || bits >> dim == 0, "bits exceed dimension {dim}");
        v.bits = bits;
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Mod-2 dot product.
    pub fn dot(&self, other: &Gf2Vec) -> bool {
        assert_eq!(self.dim, other.dim, "dot product dimension mismatch");
        (self.bits & other.bits).count_ones() % 2 == 1
    }
}

impl Add for Gf2Vec {
    type Output = Gf2Vec;
    fn add(mut self, rhs: Gf2Vec) -> Gf2Vec {
        self += rhs;
        self
    }
}

impl AddAssign for Gf2Vec {
    fn add_assign(&mut self, rhs: Gf2Vec) {
        assert_eq!(self.dim, rhs.dim, "vector sum dimension mismatch");
        self.bits ^= rhs.bits;
    }
}

impl PartialOrd for Gf2Vec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by coordinate index, lowest index most significant.
impl Ord for Gf2Vec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl fmt::Display for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vec({self})")
    }
}

impl FromStr for Gf2Vec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_DIM {
            return Err(Error::Syntax {
                offset: 0,
                message: format!("bit string must have 1..={MAX_DIM} characters"),
            });
        }
        let mut v = Gf2Vec::zero(s.len());
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => v.set(i, true),
                _ => {
                    return Err(Error::Syntax {
                        offset: i,
                        message: format!("expected 0 or 1, found `{}`", ch as char),
                    })
                }
            }
        }
        Ok(v)
    }
}

/// A matrix over GF(2) with bit-packed rows. Acts on column vectors:
/// column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Mat {
    rows: usize,
    cols: usize,
    row_bits: Vec<u64>,
}

impl Gf2Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols >= 1 && cols <= MAX_DIM, "column count {cols} out of 1..={MAX_DIM}");
        assert!(rows <= MAX_DIM, "row count {rows} exceeds {MAX_DIM}");
        Gf2Mat { rows, cols, row_bits: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.row_bits[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: &[Gf2Vec]) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].dim();
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.dim(), cols, "row {i} has mismatched dimension");
            m.row_bits[i] = r.bits();
        }
        m
    }

    pub fn from_columns(cols: &[Gf2Vec]) -> Self {
        assert!(!cols.is_empty(), "from_columns needs at least one column");
        let rows = cols[0].dim();
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), rows, "column {j} has mismatched dimension");
            for i in c.support() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Parse semicolon-separated bit rows, e.g. `"01;11"`.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        let mut width = None;
        for part in text.split(';') {
            let row: Gf2Vec = part.trim().parse().map_err(|e| match e {
                Error::Syntax { offset: o, message } => Error::Syntax { offset: offset + o, message },
                other => other,
            })?;
            if let Some(w) = width {
                if row.dim() != w {
                    return Err(Error::Syntax {
                        offset,
                        message: format!("row has {} bits, expected {w}", row.dim()),
                    });
                }
            } else {
                width = Some(row.dim());
            }
            rows.push(row);
            offset += part.len() + 1;
        }
        Ok(Self::from_rows(&rows))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        self.row_bits[r] >> c & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        if value {
            self.row_bits[r] |= 1 << c;
        } else {
            self.row_bits[r] &= !(1 << c);
        }
    }

    pub fn row(&self, r: usize) -> Gf2Vec {
        assert!(r < self.rows, "row {r} out of range");
        Gf2Vec::from_bits(self.cols, self.row_bits[r])
    }

    pub fn column(&self, c: usize) -> Gf2Vec {
        assert!(c < self.cols, "column {c} out of range");
        assert!(self.rows >= 1, "column of an empty matrix");
        let mut v = Gf2Vec::zero(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> Gf2Mat {
        assert!(self.rows >= 1, "transpose of an empty matrix");
        let mut t = Gf2Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).support() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Gf2Vec) -> Gf2Vec {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        assert!(self.rows >= 1, "product with an empty matrix");
        let mut out = Gf2Vec::zero(self.rows);
        for r in 0..self.rows {
            if (self.row_bits[r] & v.bits()).count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Gf2Mat::identity(self.rows)
    }

    pub fn rank(&self) -> usize {
        let mut scratch: Vec<u128> = self.row_bits.iter().map(|&b| b as u128).collect();
        rref(&mut scratch, self.cols).len()
    }

    /// Basis of the right kernel `{v : Av = 0}`, empty for injective maps.
    pub fn kernel(&self) -> Vec<Gf2Vec> {
        let mut scratch: Vec<u128> = self.row_bits.iter().map(|&b| b as u128).collect();
        let pivots = rref(&mut scratch, self.cols);
        kernel_from_rref(&scratch, self.cols, &pivots)
    }

    /// Inverse over GF(2); fails on singular input.
    pub fn inverse(&self) -> Result<Gf2Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.cols;
        let mut scratch: Vec<u128> = (0..n)
            .map(|i| self.row_bits[i] as u128 | 1u128 << (n + i))
            .collect();
        let pivots = rref(&mut scratch, n);
        if pivots.len() < n {
            return Err(Error::NotInvertible);
        }
        // Full rank means the reduced left block is the identity with pivot
        // column i in row i, so the right block is the inverse.
        let mut inv = Gf2Mat::zeros(n, n);
        for i in 0..n {
            inv.row_bits[i] = (scratch[i] >> n) as u64;
        }
        Ok(inv)
    }
}

impl Add for &Gf2Mat {
    type Output = Gf2Mat;
    fn add(self, rhs: &Gf2Mat) -> Gf2Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let mut out = self.clone();
        for (o, r) in out.row_bits.iter_mut().zip(&rhs.row_bits) {
            *o ^= r;
        }
        out
    }
}

impl Mul for &Gf2Mat {
    type Output = Gf2Mat;
    fn mul(self, rhs: &Gf2Mat) -> Gf2Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Gf2Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let mut acc = 0u64;
            let mut row = self.row_bits[i];
            while row != 0 {
                let k = row.trailing_zeros() as usize;
                row &= row - 1;
                acc ^= rhs.row_bits[k];
            }
            out.row_bits[i] = acc;
        }
        out
    }
}

impl fmt::Display for Gf2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Mat[{}x{}; {}]", self.rows, self.cols, self)
    }
}

/// Solution set of an affine system `Ax = b`.
#[derive(Clone, Debug)]
pub struct AffineSolutionSet {
    /// One solution with all free variables zero, or `None` when inconsistent.
    pub particular: Option<Gf2Vec>,
    /// Basis of `ker A`; every solution is `particular + span(kernel_basis)`.
    pub kernel_basis: Vec<Gf2Vec>,
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn dimension(&self) -> usize {
        self.kernel_basis.len()
    }

    /// Iterate all `2^k` solutions. Guarded for test-sized kernels only.
    pub fn iter(&self) -> impl Iterator<Item = Gf2Vec> + '_ {
        let k = self.kernel_basis.len();
        assert!(k < 32, "solution set too large to iterate");
        let base = self.particular;
        (0..1u64 << k).filter_map(move |mask| {
            base.map(|mut v| {
                for (i, kv) in self.kernel_basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v += *kv;
                    }
                }
                v
            })
        })
    }
}

/// Solve `Ax = b` over GF(2).
pub fn solve_affine(a: &Gf2Mat, b: &Gf2Vec) -> AffineSolutionSet {
    assert_eq!(a.rows(), b.dim(), "solve_affine: row count must match rhs dimension");
    let cols = a.cols();
    let mut scratch: Vec<u128> = (0..a.rows())
        .map(|i| a.row_bits[i] as u128 | (u128::from(b.get(i)) << cols))
        .collect();
    let pivots = rref(&mut scratch, cols);

    let mat_mask = (1u128 << cols) - 1;
    let aug_bit = 1u128 << cols;
    let inconsistent = scratch.iter().any(|row| row & mat_mask == 0 && row & aug_bit != 0);

    let kernel_basis = kernel_from_rref(&scratch, cols, &pivots);
    if inconsistent {
        return AffineSolutionSet { particular: None, kernel_basis };
    }
    let mut particular = Gf2Vec::zero(cols);
    for (r, &c) in pivots.iter().enumerate() {
        if scratch[r] & aug_bit != 0 {
            particular.set(c, true);
        }
    }
    AffineSolutionSet { particular: Some(particular), kernel_basis }
}

/// Basis of `{w : w . s = 0 for all s in S}` inside `GF(2)^ambient_dim`.
///
/// Its size is `ambient_dim - rank(S)`; the empty family yields the full
/// standard basis.
pub fn annihilator_basis(family: &[Gf2Vec], ambient_dim: usize) -> Vec<Gf2Vec> {
    assert!(ambient_dim >= 1 && ambient_dim <= MAX_DIM);
    if family.is_empty() {
        return (0..ambient_dim).map(|i| Gf2Vec::basis(ambient_dim, i)).collect();
    }
    for s in family {
        assert_eq!(s.dim(), ambient_dim, "family vector dimension mismatch");
    }
    Gf2Mat::from_rows(family).kernel()
}

/// In-place reduced row echelon form over the low `cols` bits; bits above
/// `cols` ride along as augmentation. Returns the pivot columns in order.
fn rref(rows: &mut [u128], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> c & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row >> c & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(rows: &[u128], cols: usize, pivots: &[usize]) -> Vec<Gf2Vec> {
    let mut basis = Vec::with_capacity(cols - pivots.len());
    let mut is_pivot = [false; MAX_DIM];
    for &c in pivots {
        is_pivot[c] = true;
    }
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = Gf2Vec::zero(cols);
        v.set(free, true);
        for (r, &c) in pivots.iter().enumerate() {
            if rows[r] >> free & 1 == 1 {
                v.set(c, true);
            }
        }
        basis.push(v);
    }
    basis
}
