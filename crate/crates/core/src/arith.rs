//! Exact linear algebra over the rationals.
//!
//! Matrices are dense and small (strands and graded pieces of presentations),
//! so everything here favours exactness and reproducible output over speed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number in lowest terms.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    /// A differential composite `D_{i+1} D_i` is nonzero.
    NotAComplex {
        spot: usize,
    },
    /// Matrix shapes do not line up.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A chain map does not commute with the differentials.
    NotAChainMap {
        spot: usize,
    },
    SpotOutOfRange {
        spot: usize,
        len: usize,
    },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NotAComplex { spot } => {
                write!(f, "differentials at spot {spot} do not compose to zero")
            }
            ArithError::ShapeMismatch { expected, found } => write!(
                f,
                "matrix shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            ArithError::NotAChainMap { spot } => {
                write!(
                    f,
                    "chain map does not commute with differentials at spot {spot}"
                )
            }
            ArithError::SpotOutOfRange { spot, len } => {
                write!(f, "spot {spot} out of range for complex with {len} spots")
            }
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Builds a `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::ShapeMismatch {
                expected: (self.cols, other.cols),
                found: other.shape(),
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        QMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = QMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.small_rows()
            .and_then(rank_i64)
            .unwrap_or_else(|| rank_big(integer_rows(self)))
    }

    /// The entries as machine integers, when they all are.
    fn small_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| {
                        if x.is_integer() {
                            i64::try_from(x.numer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Whether `self * other` vanishes.
    pub fn product_is_zero(&self, other: &QMatrix) -> Result<bool, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::ShapeMismatch {
                expected: (self.cols, other.cols),
                found: other.shape(),
            });
        }
        if let (Some(a), Some(b)) = (self.small_rows(), other.small_rows()) {
            if let Some(z) = product_is_zero_i64(&a, &b, other.cols) {
                return Ok(z);
            }
        }
        Ok(self.mul(other)?.is_zero())
    }

    /// Restriction to the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Restriction to the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|&r| self.row(r).to_vec()).collect())
    }
}

fn content_gcd(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn make_primitive(row: &mut [BigInt]) {
    let g = content_gcd(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn product_is_zero_i64(a: &[Vec<i64>], b: &[Vec<i64>], cols: usize) -> Option<bool> {
    let mut acc = vec![0i64; cols];
    for row in a {
        acc.iter_mut().for_each(|x| *x = 0);
        for (k, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (t, &y) in acc.iter_mut().zip(&b[k]) {
                if y != 0 {
                    *t = t.checked_add(x.checked_mul(y)?)?;
                }
            }
        }
        if acc.iter().any(|&x| x != 0) {
            return Some(false);
        }
    }
    Some(true)
}

/// Rows scaled to primitive integer vectors.
fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            make_primitive(&mut ints);
            ints
        })
        .collect()
}

/// Forward elimination in machine integers; `None` on overflow.
fn rank_i64(mut work: Vec<Vec<i64>>) -> Option<usize> {
    let cols = work.first().map_or(0, Vec::len);
    let mut next = 0;
    for c in 0..cols {
        let Some(p) = (next..work.len()).find(|&r| work[r][c] != 0) else {
            continue;
        };
        work.swap(next, p);
        let (top, rest) = work.split_at_mut(next + 1);
        let prow = &top[next];
        for row in rest.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let g = a.gcd(&prow[c]);
            let (ma, mp) = (prow[c] / g, a / g);
            let mut content = 0i64;
            for (x, &y) in row.iter_mut().zip(prow.iter()).skip(c) {
                *x = x.checked_mul(ma)?.checked_sub(y.checked_mul(mp)?)?;
                content = content.gcd(x);
            }
            if content > 1 {
                row.iter_mut().skip(c).for_each(|x| *x /= content);
            }
        }
        next += 1;
        if next == work.len() {
            break;
        }
    }
    Some(next)
}

fn rank_big(mut work: Vec<Vec<BigInt>>) -> usize {
    let cols = work.first().map_or(0, Vec::len);
    let mut next = 0;
    for c in 0..cols {
        let Some(p) = (next..work.len()).find(|&r| !work[r][c].is_zero()) else {
            continue;
        };
        work.swap(next, p);
        let (top, rest) = work.split_at_mut(next + 1);
        let prow = &top[next];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(c) {
                *x = &*x * &prow[c] - &a * y;
            }
            make_primitive(row);
        }
        next += 1;
        if next == work.len() {
            break;
        }
    }
    next
}

/// Reduced row-echelon form and the pivot columns.
///
/// Rows are cleared of denominators and eliminated fraction-free (with
/// content removal after every row operation); the pivots are normalized to
/// one only at the end.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut work = integer_rows(m);

    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows {
            break;
        }
        let Some(p) = (next..rows).find(|&r| !work[r][c].is_zero()) else {
            continue;
        };
        work.swap(next, p);
        let (top, rest) = work.split_at_mut(next + 1);
        let prow = &top[next];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let p = &prow[c];
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(c) {
                *x = &*x * p - &a * y;
            }
            make_primitive(row);
        }
        pivots.push(c);
        next += 1;
    }

    // back elimination, still fraction-free
    for (i, &c) in pivots.iter().enumerate().rev() {
        let (above, from) = work.split_at_mut(i);
        let prow = &from[0];
        for row in above.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let p = &prow[c];
            for (x, y) in row.iter_mut().zip(prow.iter()) {
                *x = &*x * p - &a * y;
            }
            make_primitive(row);
        }
    }

    let mut out = QMatrix::zeros(rows, cols);
    for (i, &c) in pivots.iter().enumerate() {
        let p = work[i][c].clone();
        for (j, x) in work[i].iter().enumerate() {
            if !x.is_zero() {
                out.set(i, j, Rat::new(x.clone(), p.clone()));
            }
        }
    }
    (out, pivots)
}

/// Basis of the right null space, one vector per non-pivot column.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// A cochain complex of rational vector spaces,
/// `spot 0 -> spot 1 -> ... -> spot k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixComplex {
    dims: Vec<usize>,
    differentials: Vec<QMatrix>,
}

impl MatrixComplex {
    /// `differentials[i]` maps spot `i` to spot `i + 1`, so it has shape
    /// `dims[i + 1] x dims[i]`.
    pub fn new(dims: Vec<usize>, differentials: Vec<QMatrix>) -> Result<Self, ArithError> {
        assert!(!dims.is_empty(), "a complex needs at least one spot");
        assert_eq!(
            differentials.len() + 1,
            dims.len(),
            "one differential between each spot pair"
        );
        for (i, d) in differentials.iter().enumerate() {
            if d.shape() != (dims[i + 1], dims[i]) {
                return Err(ArithError::ShapeMismatch {
                    expected: (dims[i + 1], dims[i]),
                    found: d.shape(),
                });
            }
        }
        for i in 0..differentials.len().saturating_sub(1) {
            if !differentials[i + 1].product_is_zero(&differentials[i])? {
                return Err(ArithError::NotAComplex { spot: i + 1 });
            }
        }
        Ok(MatrixComplex {
            dims,
            differentials,
        })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, i: usize) -> &QMatrix {
        &self.differentials[i]
    }

    pub fn differentials(&self) -> &[QMatrix] {
        &self.differentials
    }

    /// Homology at spot `i`: `ker D_i / im D_{i-1}`.
    pub fn homology(&self, i: usize) -> Result<Homology, ArithError> {
        if i >= self.len() {
            return Err(ArithError::SpotOutOfRange {
                spot: i,
                len: self.len(),
            });
        }
        let dim_here = self.dims[i];
        let cycles = match self.differentials.get(i) {
            Some(d) => kernel_basis(d),
            None => (0..dim_here).map(|k| unit_vector(dim_here, k)).collect(),
        };
        let boundaries: Vec<Vec<Rat>> = match i.checked_sub(1) {
            Some(prev) => {
                let d = &self.differentials[prev];
                // pivot columns of the RREF are independent image vectors
                let (_, colpiv) = rref(d);
                colpiv.into_iter().map(|c| d.column(c)).collect()
            }
            None => Vec::new(),
        };

        // boundaries first, then cycles; homology representatives are the
        // cycles that are pivots of the combined column matrix
        let mut combined = boundaries.clone();
        combined.extend(cycles.iter().cloned());
        let cm = QMatrix::from_columns(dim_here, &combined);
        let (_, pivots) = rref(&cm);
        let nb = boundaries.len();
        let reps: Vec<usize> = pivots
            .iter()
            .filter(|&&p| p >= nb)
            .map(|&p| p - nb)
            .collect();

        let mut basis = boundaries;
        basis.extend(reps.iter().map(|&k| cycles[k].clone()));
        let m = QMatrix::from_columns(dim_here, &basis);
        let aug = m.hstack(&QMatrix::identity(dim_here));
        let (red, _) = rref(&aug);
        // rows nb..nb+reps of the left-inverse block give homology coordinates
        let mut coords = QMatrix::zeros(reps.len(), dim_here);
        for h in 0..reps.len() {
            for c in 0..dim_here {
                coords.set(h, c, red.get(nb + h, basis.len() + c).clone());
            }
        }
        let representatives = reps.iter().map(|&k| cycles[k].clone()).collect();
        Ok(Homology {
            dim: reps.len(),
            cycles,
            representatives,
            coords,
        })
    }

    /// Homology dimensions at every spot.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(QMatrix::rank).collect();
        (0..self.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let im = i.checked_sub(1).map_or(0, |p| ranks[p]);
                self.dims[i] - out - im
            })
            .collect()
    }
}

fn unit_vector(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[k] = Rat::one();
    v
}

/// Homology of a complex at one spot, with the data needed to read off
/// coordinates of arbitrary cycles.
#[derive(Clone, Debug)]
pub struct Homology {
    pub dim: usize,
    /// Basis of the cycles, from the RREF kernel of the outgoing differential.
    pub cycles: Vec<Vec<Rat>>,
    /// Cycles chosen as homology basis representatives.
    pub representatives: Vec<Vec<Rat>>,
    /// `dim x spot_dim` matrix sending a cycle to its homology coordinates.
    pub coords: QMatrix,
}

impl Homology {
    pub fn coordinates(&self, cycle: &[Rat]) -> Vec<Rat> {
        self.coords.mul_vec(cycle)
    }
}

/// Matrix of the map induced on homology at spot `i` by a chain map.
///
/// `chain_maps[j]` maps spot `j` of `src` to spot `j` of `dst`; commutation
/// with the differentials is checked on every square.
pub fn induced_map_on_homology(
    src: &MatrixComplex,
    dst: &MatrixComplex,
    chain_maps: &[QMatrix],
    i: usize,
) -> Result<QMatrix, ArithError> {
    if chain_maps.len() != src.len() || src.len() != dst.len() {
        return Err(ArithError::SpotOutOfRange {
            spot: chain_maps.len(),
            len: src.len(),
        });
    }
    for (j, f) in chain_maps.iter().enumerate() {
        if f.shape() != (dst.dims[j], src.dims[j]) {
            return Err(ArithError::ShapeMismatch {
                expected: (dst.dims[j], src.dims[j]),
                found: f.shape(),
            });
        }
    }
    for j in 0..src.differentials.len() {
        let left = chain_maps[j + 1].mul(&src.differentials[j])?;
        let right = dst.differentials[j].mul(&chain_maps[j])?;
        if left != right {
            return Err(ArithError::NotAChainMap { spot: j });
        }
    }
    let hs = src.homology(i)?;
    let hd = dst.homology(i)?;
    induced_with(&hs, &hd, &chain_maps[i])
}

/// Induced map given precomputed homology data on both sides.
pub fn induced_with(hs: &Homology, hd: &Homology, f: &QMatrix) -> Result<QMatrix, ArithError> {
    let mut out = QMatrix::zeros(hd.dim, hs.dim);
    for (c, z) in hs.representatives.iter().enumerate() {
        let image = f.mul_vec(z);
        for (r, x) in hd.coordinates(&image).into_iter().enumerate() {
            out.set(r, c, x);
        }
    }
    Ok(out)
}

/// True when every entry of `v` is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Sign helper used by alternating differentials.
pub fn sign(neg: bool) -> Rat {
    if neg {
        -Rat::one()
    } else {
        Rat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let m = QMatrix::identity(2);
        let (r, p) = rref(&m);
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rank_overflow_falls_back() {
        let big = i64::MAX / 2;
        let m = QMatrix::from_i64(&[&[big, 3, 1], &[3, big, 1], &[big + 3, big + 3, 2]]);
        assert_eq!(m.rank(), rref(&m).1.len());
        assert_eq!(m.rank(), 2);
        let mut h = QMatrix::identity(2);
        h.set(0, 1, Rat::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn product_zero_check() {
        let d1 = QMatrix::from_i64(&[&[1], &[1]]);
        let d2 = QMatrix::from_i64(&[&[1, -1]]);
        assert!(d2.product_is_zero(&d1).unwrap());
        assert!(!d1.product_is_zero(&d2).unwrap());
        let big = QMatrix::from_i64(&[&[i64::MAX, i64::MAX]]);
        let col = QMatrix::from_i64(&[&[1], &[-1]]);
        assert!(big.product_is_zero(&col).unwrap());
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, p) = rref(&m);
        assert_eq!(r, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_empty() {
        let m = QMatrix::zeros(0, 3);
        let (r, p) = rref(&m);
        assert_eq!(r.shape(), (0, 3));
        assert!(p.is_empty());
    }

    #[test]
    fn rref_with_fractions() {
        let m = QMatrix::from_rows(vec![
            vec![Rat::new(1.into(), 2.into()), rat(1)],
            vec![rat(3), Rat::new(1.into(), 3.into())],
        ]);
        let (r, p) = rref(&m);
        assert_eq!(r, QMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&QMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
        assert!(kernel_basis(&QMatrix::identity(3)).is_empty());
        let k = kernel_basis(&QMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&k[0][0] * rat(-1), &k[0][1] * rat(2));
    }

    #[test]
    fn homology_exact_and_single() {
        let c = MatrixComplex::new(vec![1, 1], vec![QMatrix::identity(1)]).unwrap();
        assert_eq!(c.homology(0).unwrap().dim, 0);
        assert_eq!(c.homology(1).unwrap().dim, 0);
        let c = MatrixComplex::new(vec![1], vec![]).unwrap();
        assert_eq!(c.homology(0).unwrap().dim, 1);
    }

    /// Reduced chain complex of the hollow triangle written as a cochain
    /// complex: spot 0 = edges, spot 1 = vertices, spot 2 = empty face.
    fn hollow_triangle() -> MatrixComplex {
        // edges 01, 02, 12
        let d1 = QMatrix::from_i64(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        let d0 = QMatrix::from_i64(&[&[1, 1, 1]]);
        MatrixComplex::new(vec![3, 3, 1], vec![d1, d0]).unwrap()
    }

    #[test]
    fn hollow_triangle_has_a_loop() {
        let c = hollow_triangle();
        assert_eq!(c.homology(0).unwrap().dim, 1);
        assert_eq!(c.homology(1).unwrap().dim, 0);
        assert_eq!(c.homology(2).unwrap().dim, 0);
        assert_eq!(c.homology_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn rejects_non_complex() {
        let d = QMatrix::identity(1);
        let err = MatrixComplex::new(vec![1, 1, 1], vec![d.clone(), d]).unwrap_err();
        assert_eq!(err, ArithError::NotAComplex { spot: 1 });
    }

    #[test]
    fn induced_identity_and_zero() {
        let c = hollow_triangle();
        let ids: Vec<QMatrix> = c.dims().iter().map(|&d| QMatrix::identity(d)).collect();
        assert_eq!(
            induced_map_on_homology(&c, &c, &ids, 0).unwrap(),
            QMatrix::identity(1)
        );
        let zs: Vec<QMatrix> = c.dims().iter().map(|&d| QMatrix::zeros(d, d)).collect();
        assert!(induced_map_on_homology(&c, &c, &zs, 0).unwrap().is_zero());
    }

    #[test]
    fn point_into_triangle_is_zero_on_loops() {
        // reduced chains of a point: no edges, one vertex, empty face
        let point = MatrixComplex::new(
            vec![0, 1, 1],
            vec![QMatrix::zeros(1, 0), QMatrix::from_i64(&[&[1]])],
        )
        .unwrap();
        let tri = hollow_triangle();
        let maps = vec![
            QMatrix::zeros(3, 0),
            QMatrix::from_i64(&[&[1], &[0], &[0]]),
            QMatrix::identity(1),
        ];
        let m = induced_map_on_homology(&point, &tri, &maps, 0).unwrap();
        assert_eq!(m.shape(), (1, 0));
        assert!(m.is_zero());
    }

    #[test]
    fn rejects_non_chain_map() {
        let c = hollow_triangle();
        let mut maps: Vec<QMatrix> = c.dims().iter().map(|&d| QMatrix::identity(d)).collect();
        maps[1] = QMatrix::zeros(3, 3);
        assert!(matches!(
            induced_map_on_homology(&c, &c, &maps, 0),
            Err(ArithError::NotAChainMap { .. })
        ));
    }
}
