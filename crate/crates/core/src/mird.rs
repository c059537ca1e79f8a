//! Integer rank-distance codes over Z_2m, 2m = 2 p_1 ... p_t with distinct
//! odd primes. Rank is taken over Z_2 through the binary expansion of each
//! coordinate, most significant bit first.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ranklin::{PrimeMatrix, ENUM_GUARD};

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = 1 << 16;

/// The ring Z_2m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2m {
    modulus: u64,
    n0: u32,
    odd_primes: Vec<u64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Z2m {
    /// Validates `modulus = 2m` with m odd and squarefree.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 || !modulus.is_multiple_of(2) || modulus > MAX_MODULUS {
            return Err(Error::InvalidParameters(format!(
                "modulus must be even and at most {MAX_MODULUS}, got {modulus}"
            )));
        }
        let mut m = modulus / 2;
        if m.is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!("{modulus}/2 must be odd")));
        }
        let mut odd_primes = Vec::new();
        let mut d = 3;
        while d * d <= m {
            if m.is_multiple_of(d) {
                m /= d;
                if m.is_multiple_of(d) {
                    return Err(Error::InvalidParameters(format!(
                        "{modulus} is not squarefree"
                    )));
                }
                odd_primes.push(d);
            }
            d += 2;
        }
        if m > 1 {
            odd_primes.push(m);
        }
        let n0 = 64 - (modulus - 1).leading_zeros();
        Ok(Z2m {
            modulus,
            n0,
            odd_primes,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    /// Bit width `ceil(log2(2m))`.
    pub fn n0(&self) -> u32 {
        self.n0
    }
    pub fn odd_primes(&self) -> &[u64] {
        &self.odd_primes
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.modulus
    }
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a % self.modulus + b % self.modulus) % self.modulus
    }
    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a % self.modulus) * (b % self.modulus) % self.modulus
    }
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a % self.modulus, 1 % self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
    /// `a^[j] = a^(2^j)`.
    pub fn frob(&self, a: u64, j: u32) -> u64 {
        (0..j).fold(a % self.modulus, |x, _| self.mul(x, x))
    }
    pub fn is_unit(&self, a: u64) -> bool {
        gcd(a % self.modulus, self.modulus) == 1
    }
    pub fn unit_inv(&self, a: u64) -> Result<u64> {
        let a = a % self.modulus;
        if !self.is_unit(a) {
            return Err(Error::NotAUnit(a, self.modulus));
        }
        let (mut r0, mut r1) = (self.modulus as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.modulus as i128) as u64)
    }
    /// Units in increasing order.
    pub fn units(&self) -> Vec<u64> {
        (1..self.modulus).filter(|&a| self.is_unit(a)).collect()
    }

    /// Combines residues modulo 2 and each odd prime into one element.
    fn crt(&self, residues: &[u64]) -> u64 {
        let primes: Vec<u64> = std::iter::once(2)
            .chain(self.odd_primes.iter().copied())
            .collect();
        let (mut x, mut m) = (residues[0] % 2, 2u64);
        for (&p, &r) in primes.iter().zip(residues).skip(1) {
            let inv = Z2m::mod_inverse(m % p, p);
            let t = ((r + p - x % p) % p) * inv % p;
            x += m * t;
            m *= p;
        }
        x
    }

    fn mod_inverse(a: u64, p: u64) -> u64 {
        (1..p).find(|&b| a * b % p == 1).unwrap_or(0)
    }
}

impl fmt::Display for Z2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.modulus)
    }
}

/// `N0 x n` binary matrix; column i is the binary expansion of `x[i]`,
/// most significant bit in row 0.
pub fn mird_expand(ring: &Z2m, x: &[u64]) -> PrimeMatrix {
    let n0 = ring.n0() as usize;
    let mut m = PrimeMatrix::zeros(2, n0, x.len());
    for (c, &v) in x.iter().enumerate() {
        let v = ring.reduce(v);
        for r in 0..n0 {
            m.set(r, c, ((v >> (n0 - 1 - r)) & 1) as u32);
        }
    }
    m
}

/// Rank over Z_2 of the binary expansion.
pub fn mird_rank(ring: &Z2m, x: &[u64]) -> usize {
    mird_expand(ring, x).rank()
}

/// A code over Z_2m defined by its parity matrix, usually the rows
/// `h_i^(2^j)`, `j < d-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirdCode {
    ring: Z2m,
    h: Vec<u64>,
    d: usize,
    parity: Vec<Vec<u64>>,
}

/// Outcome of [`MirdCode::decode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MirdDecoded {
    Corrected {
        codeword: Vec<u64>,
        error: Vec<u64>,
        /// Unit error magnitudes.
        magnitudes: Vec<u64>,
        /// Binary matrix with `error = magnitudes * n_matrix`.
        n_matrix: PrimeMatrix,
    },
    Detected,
}

impl MirdDecoded {
    pub fn error(&self) -> Option<&[u64]> {
        match self {
            MirdDecoded::Corrected { error, .. } => Some(error),
            MirdDecoded::Detected => None,
        }
    }
    pub fn codeword(&self) -> Option<&[u64]> {
        match self {
            MirdDecoded::Corrected { codeword, .. } => Some(codeword),
            MirdDecoded::Detected => None,
        }
    }
}

impl MirdCode {
    /// Code with parity rows `h^[j]`, `j = 0..d-2`. The `h_i` must be
    /// linearly independent over Z_2 and `n <= N0`.
    pub fn new(ring: &Z2m, h: Vec<u64>, d: usize) -> Result<Self> {
        let n = h.len();
        if n == 0 || n > ring.n0() as usize {
            return Err(Error::InvalidParameters(format!(
                "length must lie in 1..={}, got {n}",
                ring.n0()
            )));
        }
        if d < 2 || d - 1 > n {
            return Err(Error::InvalidParameters(format!(
                "need 2 <= d <= n+1, got d={d}"
            )));
        }
        if h.iter().any(|&x| x >= ring.modulus()) {
            return Err(Error::InvalidParameters("entry out of range".into()));
        }
        if mird_rank(ring, &h) != n {
            return Err(Error::LinearlyDependent);
        }
        let parity = (0..d - 1)
            .map(|j| h.iter().map(|&x| ring.frob(x, j as u32)).collect())
            .collect();
        Ok(MirdCode {
            ring: ring.clone(),
            h,
            d,
            parity,
        })
    }

    /// Code with an explicitly given parity matrix; `d` is taken as the
    /// number of rows plus one.
    pub fn from_parity_rows(ring: &Z2m, rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(
                "parity rows must be nonempty and equal length".into(),
            ));
        }
        if rows.iter().flatten().any(|&x| x >= ring.modulus()) {
            return Err(Error::InvalidParameters("entry out of range".into()));
        }
        Ok(MirdCode {
            ring: ring.clone(),
            h: rows[0].clone(),
            d: rows.len() + 1,
            parity: rows,
        })
    }

    pub fn ring(&self) -> &Z2m {
        &self.ring
    }
    pub fn n(&self) -> usize {
        self.h.len()
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn h(&self) -> &[u64] {
        &self.h
    }
    /// Number of information positions, `n - (d-1)`.
    pub fn k(&self) -> usize {
        self.n() - self.parity.len()
    }
    /// The `(d-1) x n` parity matrix.
    pub fn parity(&self) -> &[Vec<u64>] {
        &self.parity
    }

    /// `s = y H^T`.
    pub fn syndrome(&self, y: &[u64]) -> Result<Vec<u64>> {
        if y.len() != self.n() {
            return Err(Error::Dimension("word length".into()));
        }
        Ok(self
            .parity
            .iter()
            .map(|row| {
                row.iter()
                    .zip(y)
                    .fold(0, |acc, (&a, &b)| self.ring.add(acc, self.ring.mul(a, b)))
            })
            .collect())
    }

    pub fn is_codeword(&self, y: &[u64]) -> Result<bool> {
        Ok(self.syndrome(y)?.iter().all(|&s| s == 0))
    }

    /// Places `info` on the trailing `k` positions and solves the parity
    /// equations for the leading `d-1` check positions, componentwise mod 2
    /// and mod each odd prime. Fails unless every component system has a
    /// unique solution.
    pub fn systematic_encode(&self, info: &[u64]) -> Result<Vec<u64>> {
        let (n, r) = (self.n(), self.parity.len());
        if info.len() != n - r {
            return Err(Error::Dimension(format!(
                "expected {} information symbols",
                n - r
            )));
        }
        let ring = &self.ring;
        let rhs: Vec<u64> = self
            .parity
            .iter()
            .map(|row| {
                let s = row[r..]
                    .iter()
                    .zip(info)
                    .fold(0, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)));
                ring.neg(s)
            })
            .collect();
        let primes: Vec<u64> = std::iter::once(2)
            .chain(ring.odd_primes().iter().copied())
            .collect();
        let mut parts: Vec<Vec<u64>> = Vec::new();
        for &p in &primes {
            let rows: Vec<Vec<u32>> = self
                .parity
                .iter()
                .map(|row| row[..r].iter().map(|&a| (a % p) as u32).collect())
                .collect();
            let a = PrimeMatrix::from_rows(p as u32, &rows)?;
            if a.rank() != r {
                return Err(Error::NoUniqueCompletion);
            }
            let b: Vec<u32> = rhs.iter().map(|&v| (v % p) as u32).collect();
            let x = a.solve(&b).ok_or(Error::NoUniqueCompletion)?;
            parts.push(x.into_iter().map(u64::from).collect());
        }
        let mut word: Vec<u64> = (0..r)
            .map(|i| {
                let residues: Vec<u64> = parts.iter().map(|v| v[i]).collect();
                ring.crt(&residues)
            })
            .collect();
        word.extend(info.iter().map(|&x| ring.reduce(x)));
        debug_assert!(self.is_codeword(&word).unwrap_or(false));
        Ok(word)
    }

    /// All codewords by exhaustive search over Z_2m^n.
    pub fn codewords(&self) -> Result<Vec<Vec<u64>>> {
        let q = self.ring.modulus() as u128;
        let total = q.checked_pow(self.n() as u32).unwrap_or(u128::MAX);
        if total > ENUM_GUARD {
            return Err(Error::TooLarge(total));
        }
        let mut out = Vec::new();
        for idx in 0..total {
            let mut v = idx;
            let mut w = vec![0u64; self.n()];
            for slot in w.iter_mut().rev() {
                *slot = (v % q) as u64;
                v /= q;
            }
            if self.is_codeword(&w)? {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Decodes errors of the form `e = E N`: `E` a set of distinct unit
    /// magnitudes and `N` a binary matrix with nonzero rows. Magnitude sets
    /// of size 1, 2, ... up to `floor((d-1)/2)` are searched exhaustively
    /// against the syndrome equations; the first size with a solution is
    /// kept, and among its candidates the unique one of least rank wins.
    /// Ties and empty searches give `Detected`.
    pub fn decode(&self, y: &[u64]) -> Result<MirdDecoded> {
        let ring = &self.ring;
        let n = self.n();
        let s = self.syndrome(y)?;
        if s.iter().all(|&x| x == 0) {
            return Ok(MirdDecoded::Corrected {
                codeword: y.iter().map(|&x| ring.reduce(x)).collect(),
                error: vec![0; n],
                magnitudes: Vec::new(),
                n_matrix: PrimeMatrix::zeros(2, 0, n),
            });
        }
        let units = ring.units();
        let tmax = (self.d - 1) / 2;
        for m in 1..=tmax {
            let mut found: Vec<(Vec<u64>, Vec<u64>, PrimeMatrix)> = Vec::new();
            let mut seen = BTreeSet::new();
            let budget = (units.len() as u128).pow(m as u32) << (m * n);
            if budget > ENUM_GUARD {
                return Err(Error::TooLarge(budget));
            }
            let mut combo: Vec<usize> = (0..m).collect();
            if m > units.len() {
                break;
            }
            loop {
                let mags: Vec<u64> = combo.iter().map(|&i| units[i]).collect();
                for bits in 0u64..(1 << (m * n)) {
                    let nm = PrimeMatrix::from_rows(
                        2,
                        &(0..m)
                            .map(|j| (0..n).map(|i| ((bits >> (j * n + i)) & 1) as u32).collect())
                            .collect::<Vec<_>>(),
                    )?;
                    if (0..m).any(|j| nm.row(j).iter().all(|&b| b == 0)) {
                        continue;
                    }
                    let e: Vec<u64> = (0..n)
                        .map(|i| {
                            (0..m).fold(0, |acc, j| {
                                if nm.get(j, i) == 1 {
                                    ring.add(acc, mags[j])
                                } else {
                                    acc
                                }
                            })
                        })
                        .collect();
                    if self.syndrome(&e)? == s && seen.insert(e.clone()) {
                        found.push((e, mags.clone(), nm));
                    }
                }
                if !advance(&mut combo, units.len()) {
                    break;
                }
            }
            if found.is_empty() {
                continue;
            }
            let best = found
                .iter()
                .map(|(e, _, _)| mird_rank(ring, e))
                .min()
                .unwrap_or(0);
            let mut winners = found
                .into_iter()
                .filter(|(e, _, _)| mird_rank(ring, e) == best);
            return Ok(match (winners.next(), winners.next()) {
                (Some((error, magnitudes, n_matrix)), None) => MirdDecoded::Corrected {
                    codeword: y
                        .iter()
                        .zip(&error)
                        .map(|(&a, &b)| ring.sub(a, b))
                        .collect(),
                    error,
                    magnitudes,
                    n_matrix,
                },
                _ => MirdDecoded::Detected,
            });
        }
        Ok(MirdDecoded::Detected)
    }
}

/// Next m-subset of `0..n` in lexicographic order.
fn advance(c: &mut [usize], n: usize) -> bool {
    let m = c.len();
    for i in (0..m).rev() {
        if c[i] < n - m + i {
            c[i] += 1;
            for j in i + 1..m {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Parses a comma-separated list of ring elements.
pub fn parse_ring_vec(ring: &Z2m, s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map(|v| ring.reduce(v))
                .map_err(|_| Error::Parse(format!("bad ring element '{t}'")))
        })
        .collect()
}

pub fn format_ring_vec(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
