//! Rank-metric linear algebra: matrices over GF(p) and GF(p^n), expansion
//! matrices, rank norm and distance, and brute-force distance oracles.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Brute-force guard for codeword enumeration.
pub const ENUM_GUARD: u128 = 1 << 20;

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Dense matrix over the prime field GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PrimeMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        PrimeMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced mod p.
    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(PrimeMatrix {
            p,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x % p).collect(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &PrimeMatrix) -> Result<Self> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s = (0..self.cols).fold(0u64, |acc, k| {
                    acc + self.get(r, k) as u64 * other.get(k, c) as u64
                });
                out.set(r, c, (s % self.p as u64) as u32);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PrimeMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols || self.p != other.p {
            return Err(Error::Dimension("matrix sum shape".into()));
        }
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = (*x + y) % self.p;
        }
        Ok(out)
    }

    /// Row vector `v` times this matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.cols)
            .map(|c| {
                let s = (0..self.rows).fold(0u64, |a, r| a + v[r] as u64 * self.get(r, c) as u64);
                (s % self.p as u64) as u32
            })
            .collect())
    }

    /// This matrix times column vector `v`.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                let s = (0..self.cols).fold(0u64, |a, c| a + self.get(r, c) as u64 * v[c] as u64);
                (s % self.p as u64) as u32
            })
            .collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (PrimeMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, piv);
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                let v = (m.get(r, j) as u64 * inv as u64 % p as u64) as u32;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && f != 0 {
                    for j in 0..m.cols {
                        let v = (m.get(i, j) + p
                            - (f as u64 * m.get(r, j) as u64 % p as u64) as u32)
                            % p;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column
    /// in increasing column order.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        let (red, piv) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = (p - red.get(r, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Self::zeros(self.p, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let (red, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = red.get(r, self.cols);
        }
        Some(x)
    }

    /// Parses rows separated by `;`. A row is either comma-separated
    /// integers or, when it has no commas, a string of digits.
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                let row = row.trim();
                if row.contains(',') {
                    row.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad entry '{x}'")))
                        })
                        .collect::<Result<Vec<_>>>()
                } else {
                    row.chars()
                        .filter(|c| !c.is_whitespace())
                        .map(|c| {
                            c.to_digit(10)
                                .ok_or_else(|| Error::Parse(format!("bad digit '{c}'")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().flatten().any(|&x| x >= p) {
            return Err(Error::Parse(format!("entry out of range for GF({p})")));
        }
        Self::from_rows(p, &rows)
    }
}

impl fmt::Display for PrimeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Dense matrix over GF(p^n), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl ExtMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        ExtMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|e| e.to_int() >= field.order()) {
            return Err(Error::FieldMismatch);
        }
        Ok(ExtMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Matrix with entries given as discrete logs; `None` is zero.
    pub fn from_logs(field: &Field, rows: &[Vec<Option<i64>>]) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(Elem::ZERO, |k| field.alpha(k)))
                    .collect()
            })
            .collect();
        Self::from_rows(field, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &ExtMatrix) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s = (0..self.cols).fold(Elem::ZERO, |acc, k| {
                    f.add(acc, f.mul(self.get(r, k), other.get(k, c)))
                });
                out.set(r, c, s);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExtMatrix) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix sum shape".into()));
        }
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = self.field.add(*x, y);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExtMatrix) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = self.field.neg(*x);
        }
        out
    }

    /// Row vector `v` times this matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.cols)
            .map(|c| {
                (0..self.rows).fold(Elem::ZERO, |acc, r| f.add(acc, f.mul(v[r], self.get(r, c))))
            })
            .collect())
    }

    /// This matrix times column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.transpose().vec_mul(v)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ExtMatrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, piv);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let fac = m.get(i, c);
                if i != r && !fac.is_zero() {
                    for j in 0..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(fac, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..m.cols {
            let Some(piv) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if piv != c {
                m.swap_rows(c, piv);
                det = f.neg(det);
            }
            let pv = m.get(c, c);
            det = f.mul(det, pv);
            let inv = f.inv(pv)?;
            for i in c + 1..m.rows {
                let fac = f.mul(m.get(i, c), inv);
                if !fac.is_zero() {
                    for j in c..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(fac, m.get(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Some solution of `M x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Self::zeros(&self.field, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let (red, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = red.get(r, self.cols);
        }
        Some(x)
    }

    /// Basis of the right kernel `{v : M v = 0}` over the extension field.
    pub fn null_space(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (red, piv) = self.rref();
        (0..self.cols)
            .filter(|c| !piv.contains(c))
            .map(|fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = f.neg(red.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Text form: rows separated by `;`, entries by `,`.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| field.parse_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, &rows)
    }
}

impl fmt::Display for ExtMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| self.field.fmt_vec(self.row(r)))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// The N x n matrix over GF(p) whose column i holds the coefficients of
/// `x[i]`, coefficient of x^0 in the first row.
pub fn expansion_matrix(field: &Field, x: &[Elem]) -> PrimeMatrix {
    let n = field.n() as usize;
    let mut m = PrimeMatrix::zeros(field.p(), n, x.len());
    for (c, &e) in x.iter().enumerate() {
        for (r, d) in field.coeffs(e).into_iter().enumerate() {
            m.set(r, c, d);
        }
    }
    m
}

/// Rank over GF(p) by Gaussian elimination.
pub fn rank_prime(m: &PrimeMatrix) -> usize {
    m.rank()
}

/// Rank norm: GF(p)-rank of the expansion matrix.
pub fn rank_norm(field: &Field, x: &[Elem]) -> usize {
    expansion_matrix(field, x).rank()
}

/// Rank distance `r(x - y)`.
pub fn rank_distance(field: &Field, x: &[Elem], y: &[Elem]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::Dimension("vectors of different length".into()));
    }
    let d: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect();
    Ok(rank_norm(field, &d))
}

/// Hamming weight of a field vector.
pub fn hamming_weight(x: &[Elem]) -> usize {
    x.iter().filter(|e| !e.is_zero()).count()
}

pub fn ext_mul(a: &ExtMatrix, b: &ExtMatrix) -> Result<ExtMatrix> {
    a.mul(b)
}

pub fn ext_inverse(a: &ExtMatrix) -> Result<ExtMatrix> {
    a.inverse()
}

/// All `q^k` linear combinations of the rows of `g`, in message order
/// (first message coordinate varies slowest). Fails above the guard.
pub fn span_codewords(g: &ExtMatrix) -> Result<Vec<Vec<Elem>>> {
    let f = g.field().clone();
    let q = f.order() as u128;
    let count = q.checked_pow(g.rows() as u32).unwrap_or(u128::MAX);
    if count > ENUM_GUARD {
        return Err(Error::TooLarge(count));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut msg = vec![Elem::ZERO; g.rows()];
    for idx in 0..count {
        let mut v = idx;
        for slot in msg.iter_mut().rev() {
            *slot = f.elem((v % q) as u32)?;
            v /= q;
        }
        out.push(g.vec_mul(&msg)?);
    }
    Ok(out)
}

/// Minimum rank norm over the nonzero words of an enumerated code.
pub fn min_rank_distance_bruteforce<I>(field: &Field, codewords: I) -> Result<usize>
where
    I: IntoIterator<Item = Vec<Elem>>,
{
    let mut best: Option<usize> = None;
    for (count, w) in codewords.into_iter().enumerate() {
        if count as u128 >= ENUM_GUARD {
            return Err(Error::TooLarge(count as u128 + 1));
        }
        let r = rank_norm(field, &w);
        if r > 0 {
            best = Some(best.map_or(r, |b| b.min(r)));
        }
    }
    best.ok_or(Error::NoNonzeroCodeword)
}
