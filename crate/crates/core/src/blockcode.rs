//! Linear block codes over GF(p) in the Hamming metric, decoded through a
//! standard array of coset leaders.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ranklin::{PrimeMatrix, ENUM_GUARD};

/// Largest number of cosets a standard array may hold.
pub const MAX_COSETS: u128 = 1 << 16;

/// An (n, k) linear code over GF(p) with generator and parity-check
/// matrices, `G H^T = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearBlockCode {
    g: PrimeMatrix,
    h: PrimeMatrix,
    info: Vec<usize>,
    systematic: bool,
}

fn count(p: u32, e: usize) -> u128 {
    (p as u128).checked_pow(e as u32).unwrap_or(u128::MAX)
}

/// Vector number `idx` in base p, first coordinate most significant.
fn nth_vector(p: u32, len: usize, mut idx: u128) -> Vec<u32> {
    let mut v = vec![0u32; len];
    for slot in v.iter_mut().rev() {
        *slot = (idx % p as u128) as u32;
        idx /= p as u128;
    }
    v
}

impl LinearBlockCode {
    /// Code defined as the null space of a full-row-rank `H`. Check
    /// positions are taken as far right as possible, so the message sits
    /// in the leading coordinates whenever the matrix allows it, and `G`
    /// is the identity on the message positions.
    pub fn from_parity(h: PrimeMatrix) -> Result<Self> {
        let (p, r, n) = (h.p(), h.rows(), h.cols());
        if r == 0 || r >= n {
            return Err(Error::InvalidParameters(format!(
                "parity matrix must have between 1 and n-1 rows, got {r}x{n}"
            )));
        }
        if h.rank() != r {
            return Err(Error::LinearlyDependent);
        }
        let mut rev = PrimeMatrix::zeros(p, r, n);
        for i in 0..r {
            for j in 0..n {
                rev.set(i, j, h.get(i, n - 1 - j));
            }
        }
        let checks: Vec<usize> = rev.rref().1.iter().map(|&c| n - 1 - c).collect();
        let info: Vec<usize> = (0..n).filter(|c| !checks.contains(c)).collect();
        let kernel = PrimeMatrix::from_rows(p, &h.null_space())?;
        let mut block = PrimeMatrix::zeros(p, info.len(), info.len());
        for i in 0..info.len() {
            for (j, &c) in info.iter().enumerate() {
                block.set(i, j, kernel.get(i, c));
            }
        }
        let g = block.inverse()?.mul(&kernel)?;
        Ok(LinearBlockCode {
            g,
            h,
            info,
            systematic: true,
        })
    }

    /// Code spanned by the rows of a full-row-rank `G`, kept as given.
    pub fn from_generator(g: PrimeMatrix) -> Result<Self> {
        let (p, k, n) = (g.p(), g.rows(), g.cols());
        if k == 0 || k >= n {
            return Err(Error::InvalidParameters(format!(
                "generator must have between 1 and n-1 rows, got {k}x{n}"
            )));
        }
        let (_, info) = g.rref();
        if info.len() != k {
            return Err(Error::LinearlyDependent);
        }
        let h = PrimeMatrix::from_rows(p, &g.null_space())?;
        let systematic = (0..k).all(|i| (0..k).all(|j| g.get(i, info[j]) == u32::from(i == j)));
        Ok(LinearBlockCode {
            g,
            h,
            info,
            systematic,
        })
    }

    /// Binary (n, 1) repetition code, `H = [1 | I_{n-1}]`.
    pub fn repetition(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(
                "repetition length must be at least 2".into(),
            ));
        }
        let mut h = PrimeMatrix::zeros(2, n - 1, n);
        for i in 0..n - 1 {
            h.set(i, 0, 1);
            h.set(i, i + 1, 1);
        }
        Self::from_parity(h)
    }

    /// Binary (n, n-1) single-parity-check code, `H = (1 1 ... 1)`.
    pub fn parity_check(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(
                "parity-check length must be at least 2".into(),
            ));
        }
        Self::from_parity(PrimeMatrix::from_rows(2, &[vec![1; n]])?)
    }

    pub fn p(&self) -> u32 {
        self.g.p()
    }
    pub fn n(&self) -> usize {
        self.g.cols()
    }
    pub fn k(&self) -> usize {
        self.g.rows()
    }
    pub fn generator(&self) -> &PrimeMatrix {
        &self.g
    }
    pub fn parity(&self) -> &PrimeMatrix {
        &self.h
    }
    /// Coordinates carrying the message when `G` is systematic.
    pub fn info_positions(&self) -> &[usize] {
        &self.info
    }
    pub fn is_systematic(&self) -> bool {
        self.systematic
    }

    pub fn encode(&self, msg: &[u32]) -> Result<Vec<u32>> {
        if msg.iter().any(|&m| m >= self.p()) {
            return Err(Error::InvalidParameters(
                "message symbol out of range".into(),
            ));
        }
        self.g.vec_mul(msg)
    }

    /// `S(y) = H y^T`.
    pub fn syndrome(&self, y: &[u32]) -> Result<Vec<u32>> {
        self.h.mul_vec(y)
    }

    pub fn is_codeword(&self, y: &[u32]) -> Result<bool> {
        Ok(self.syndrome(y)?.iter().all(|&s| s == 0))
    }

    /// Message of a codeword: read off the message positions when `G` is
    /// systematic, otherwise solve `m G = c`.
    pub fn message_of(&self, c: &[u32]) -> Result<Vec<u32>> {
        if !self.is_codeword(c)? {
            return Err(Error::InvalidParameters("not a codeword".into()));
        }
        if self.systematic {
            return Ok(self.info.iter().map(|&i| c[i]).collect());
        }
        self.g
            .transpose()
            .solve(c)
            .ok_or_else(|| Error::InvalidParameters("not a codeword".into()))
    }

    /// All `p^k` codewords in message order.
    pub fn codewords(&self) -> Result<Vec<Vec<u32>>> {
        let total = count(self.p(), self.k());
        if total > ENUM_GUARD {
            return Err(Error::TooLarge(total));
        }
        (0..total)
            .map(|i| self.encode(&nth_vector(self.p(), self.k(), i)))
            .collect()
    }

    /// Minimum Hamming weight of a nonzero codeword.
    pub fn min_distance(&self) -> Result<usize> {
        self.codewords()?
            .iter()
            .map(|c| hamming_weight(c))
            .filter(|&w| w > 0)
            .min()
            .ok_or(Error::NoNonzeroCodeword)
    }

    pub fn standard_array(&self) -> Result<StandardArray> {
        StandardArray::build(self)
    }

    /// Coset-leader decoding: returns the codeword and its message.
    pub fn decode(&self, y: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
        self.standard_array()?.decode(self, y)
    }

    /// Erasure-aware nearest-codeword decoding by exhaustive search:
    /// the unique codeword closest on the known positions, or `None` on a
    /// tie.
    pub fn decode_with_erasures(&self, y: &[Option<u32>]) -> Result<Option<Vec<u32>>> {
        if y.len() != self.n() {
            return Err(Error::Dimension("received word length".into()));
        }
        let mut best: Option<(usize, Vec<u32>, bool)> = None;
        for c in self.codewords()? {
            let d = c
                .iter()
                .zip(y)
                .filter(|(a, b)| b.is_some_and(|b| b != **a))
                .count();
            match &mut best {
                Some((bd, _, unique)) if d == *bd => *unique = false,
                Some((bd, _, _)) if d > *bd => {}
                _ => best = Some((d, c, true)),
            }
        }
        Ok(best.and_then(|(_, c, unique)| unique.then_some(c)))
    }
}

impl fmt::Display for LinearBlockCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) code over GF({}) H={}",
            self.n(),
            self.k(),
            self.p(),
            self.h
        )
    }
}

/// Number of nonzero coordinates.
pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Number of coordinates where the words differ.
pub fn hamming_distance(a: &[u32], b: &[u32]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::Dimension("words of different length".into()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// Parses a word written as a digit string (`1010`) or comma list.
pub fn parse_word(p: u32, s: &str) -> Result<Vec<u32>> {
    let m = PrimeMatrix::parse(p, s)?;
    if m.rows() != 1 {
        return Err(Error::Parse("expected a single word".into()));
    }
    Ok(m.row(0).to_vec())
}

/// Digit string for words over GF(p), p < 10; comma list otherwise.
pub fn format_word(p: u32, v: &[u32]) -> String {
    if p < 10 {
        v.iter()
            .map(|d| char::from_digit(*d, 10).unwrap_or('?'))
            .collect()
    } else {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Syndrome table mapping each syndrome to its coset leader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardArray {
    leaders: HashMap<Vec<u32>, Vec<u32>>,
}

/// Advances `c` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl StandardArray {
    /// Enumerates candidate leaders by increasing weight, then by support
    /// (lexicographic on the sorted position list), then by values; the
    /// first vector reaching a syndrome becomes its leader.
    pub fn build(code: &LinearBlockCode) -> Result<Self> {
        let (p, n) = (code.p(), code.n());
        let total = count(p, n - code.k());
        if total > MAX_COSETS {
            return Err(Error::TooLarge(total));
        }
        let mut leaders = HashMap::new();
        let mut visited: u128 = 0;
        for w in 0..=n {
            if leaders.len() as u128 == total {
                break;
            }
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                for vals in 0..count(p - 1, w) {
                    visited += 1;
                    if visited > ENUM_GUARD {
                        return Err(Error::TooLarge(visited));
                    }
                    let digits = nth_vector(p - 1, w, vals);
                    let mut e = vec![0u32; n];
                    for (&pos, &d) in support.iter().zip(&digits) {
                        e[pos] = d + 1;
                    }
                    leaders.entry(code.syndrome(&e)?).or_insert(e);
                }
                if w == 0 || !next_combination(&mut support, n) {
                    break;
                }
            }
        }
        Ok(StandardArray { leaders })
    }

    pub fn len(&self) -> usize {
        self.leaders.len()
    }
    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    pub fn leader(&self, syndrome: &[u32]) -> Option<&[u32]> {
        self.leaders.get(syndrome).map(Vec::as_slice)
    }

    /// Leaders sorted by syndrome.
    pub fn entries(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let mut v: Vec<_> = self
            .leaders
            .iter()
            .map(|(s, e)| (s.clone(), e.clone()))
            .collect();
        v.sort();
        v
    }

    /// `y - e` with `e` the leader of `S(y)`, and its message.
    pub fn decode(&self, code: &LinearBlockCode, y: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
        let p = code.p();
        let e = self
            .leader(&code.syndrome(y)?)
            .ok_or_else(|| Error::InvalidParameters("syndrome missing from the array".into()))?;
        let x: Vec<u32> = y.iter().zip(e).map(|(&a, &b)| (a + p - b) % p).collect();
        let m = code.message_of(&x)?;
        Ok((x, m))
    }
}
