//! Gabidulin (MRD) codes: parity and generator matrices, encoding, rank-error
//! decoding, erasure guessing and combined error-erasure decoding.
//!
//! Positions are 0-based throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linpoly::{euclid_chain, LinPoly};
use crate::ranklin::{
    expansion_matrix, min_rank_distance_bruteforce, rank_distance, rank_norm, span_codewords,
    ExtMatrix, PrimeMatrix,
};

/// A channel output: each position holds a symbol or an erasure mark.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReceivedWord {
    symbols: Vec<Option<Elem>>,
}

impl ReceivedWord {
    pub fn new(symbols: Vec<Option<Elem>>) -> Self {
        ReceivedWord { symbols }
    }

    /// A word with no erasures.
    pub fn from_symbols(v: &[Elem]) -> Self {
        Self::new(v.iter().map(|&x| Some(x)).collect())
    }

    pub fn symbols(&self) -> &[Option<Elem>] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Erased positions in increasing order.
    pub fn erasures(&self) -> Vec<usize> {
        (0..self.symbols.len())
            .filter(|&i| self.symbols[i].is_none())
            .collect()
    }

    /// Symbols with every erasure replaced by zero.
    pub fn zero_filled(&self) -> Vec<Elem> {
        self.symbols
            .iter()
            .map(|s| s.unwrap_or(Elem::ZERO))
            .collect()
    }

    /// Parses `a^5,*,a^2` with `*` for an erasure.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let symbols = s
            .split(',')
            .map(|t| {
                if t.trim() == "*" {
                    Ok(None)
                } else {
                    field.parse_elem(t).map(Some)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(symbols))
    }

    pub fn format(&self, field: &Field) -> String {
        self.symbols
            .iter()
            .map(|s| s.map_or("*".to_string(), |e| field.fmt_elem(e)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The error description recovered by a decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorSolution {
    /// Rank of the error.
    pub m: usize,
    /// Error basis `E_1..E_m`, independent over GF(q).
    pub e_basis: Vec<Elem>,
    /// `x'_p = sum_j Y_pj h'_j`.
    pub xprime: Vec<Elem>,
    /// m x n matrix over GF(q); columns at erased positions are zero.
    pub y: PrimeMatrix,
    /// Error vector `e = E Y` (zero at erased positions).
    pub e: Vec<Elem>,
    /// Recovered values of the erased positions, in position order.
    pub f: Vec<Elem>,
}

/// Result of a decoding attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Codeword {
        codeword: Vec<Elem>,
        solution: ErrorSolution,
    },
    /// The decoder found the word undecodable (too many errors, or an
    /// inconsistent system).
    Detected,
}

impl Decoded {
    pub fn codeword(&self) -> Option<&[Elem]> {
        match self {
            Decoded::Codeword { codeword, .. } => Some(codeword),
            Decoded::Detected => None,
        }
    }

    pub fn is_detected(&self) -> bool {
        matches!(self, Decoded::Detected)
    }
}

/// Intermediate values of the erasure elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// Multipliers `Z_(0), Z_(1), ...`, one per erased position.
    pub z: Vec<Elem>,
    /// Reduced syndromes `s'_0..s'_{d-2-t}`.
    pub syndromes: Vec<Elem>,
    /// Surviving positions with their reduced `h'` values.
    pub h: Vec<(usize, Elem)>,
}

struct CoreSolution {
    e_basis: Vec<Elem>,
    xprime: Vec<Elem>,
    y: PrimeMatrix,
    e: Vec<Elem>,
}

/// Coefficients of the error span polynomial from the key equation
/// `Delta * S = F_{m+1}` solved triangularly from the first nonzero syndrome.
/// Returns `None` when the needed coefficients fall outside the syndrome range.
pub fn delta_from_remainder(
    field: &Field,
    s: &[Elem],
    remainder: &LinPoly,
    m: usize,
) -> Option<LinPoly> {
    let j = s.iter().position(|x| !x.is_zero())?;
    if j + m >= s.len() {
        return None;
    }
    let mut delta: Vec<Elem> = Vec::with_capacity(m + 1);
    for p in 0..=m {
        let mut acc = remainder.coeff(j + p);
        for (i, &di) in delta.iter().enumerate() {
            acc = field.sub(acc, field.mul(di, field.frob(s[j + p - i], i as i64)));
        }
        delta.push(field.div(acc, field.frob(s[j], p as i64)).ok()?);
    }
    Some(LinPoly::new(field, delta))
}

fn monic(p: &LinPoly) -> Result<LinPoly> {
    let inv = p.field().inv(p.lead())?;
    Ok(p.scale(inv))
}

/// Rank-error decoding for the Gabidulin system `s_j = sum_i e_i h_i^[j]`.
fn decode_core(field: &Field, h: &[Elem], s: &[Elem]) -> Result<Option<CoreSolution>> {
    let n = h.len();
    let r = s.len();
    let q = field.p();
    if s.iter().all(|x| x.is_zero()) {
        return Ok(Some(CoreSolution {
            e_basis: vec![],
            xprime: vec![],
            y: PrimeMatrix::zeros(q, 0, n),
            e: vec![Elem::ZERO; n],
        }));
    }
    if r < 2 {
        return Ok(None);
    }
    let syn = LinPoly::new(field, s.to_vec());
    let f0 = LinPoly::monomial(field, Elem::ONE, r);
    let chain = euclid_chain(&f0, &syn, r.div_ceil(2))?;
    let steps = chain.steps();
    let a_m = chain.a(steps as isize);
    let Some(m) = a_m.degree() else {
        return Ok(None);
    };
    if m == 0 || m > r / 2 {
        return Ok(None);
    }
    let delta = match delta_from_remainder(field, s, chain.last(), m) {
        Some(d) if !d.is_zero() && d.degree() == Some(m) => monic(&d)?,
        _ => monic(a_m)?,
    };
    let roots = delta.root_space()?;
    if roots.len() != m {
        return Ok(None);
    }
    // s_p^[-p] = sum_i E_i^[-p] x_i for p < m
    let mut a = ExtMatrix::zeros(field, m, m);
    let mut b = vec![Elem::ZERO; m];
    for p in 0..m {
        for (i, &ei) in roots.iter().enumerate() {
            a.set(p, i, field.frob(ei, -(p as i64)));
        }
        b[p] = field.frob(s[p], -(p as i64));
    }
    let Some(xprime) = a.solve(&b) else {
        return Ok(None);
    };
    let hx = expansion_matrix(field, h);
    let mut y = PrimeMatrix::zeros(q, m, n);
    for (p, &xp) in xprime.iter().enumerate() {
        let Some(row) = hx.solve(&field.coeffs(xp)) else {
            return Ok(None);
        };
        for (i, v) in row.into_iter().enumerate() {
            y.set(p, i, v);
        }
    }
    let e: Vec<Elem> = (0..n)
        .map(|i| {
            (0..m).fold(Elem::ZERO, |acc, p| {
                field.add(acc, field.mul(field.scalar(y.get(p, i)), roots[p]))
            })
        })
        .collect();
    // the solution must reproduce every syndrome and have rank m
    for (j, &sj) in s.iter().enumerate() {
        let v = e.iter().zip(h).fold(Elem::ZERO, |acc, (&ei, &hi)| {
            field.add(acc, field.mul(ei, field.frob(hi, j as i64)))
        });
        if v != sj {
            return Ok(None);
        }
    }
    if rank_norm(field, &e) != m {
        return Ok(None);
    }
    Ok(Some(CoreSolution {
        e_basis: roots,
        xprime,
        y,
        e,
    }))
}

/// An (n, k, d = n - k + 1) Gabidulin code over GF(q^N) defined by the
/// parity vector `h`, whose entries are linearly independent over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GabidulinCode {
    field: Field,
    k: usize,
    h: Vec<Elem>,
}

impl GabidulinCode {
    pub fn new(field: &Field, k: usize, h: Vec<Elem>) -> Result<Self> {
        let n = h.len();
        if n > field.n() as usize {
            return Err(Error::InvalidParameters(format!(
                "length {n} exceeds extension degree {}",
                field.n()
            )));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k < n, got n={n} k={k}"
            )));
        }
        if !field.is_linearly_independent(&h) {
            return Err(Error::LinearlyDependent);
        }
        Ok(GabidulinCode {
            field: field.clone(),
            k,
            h,
        })
    }

    /// Code with `h = (1, a, a^2, ..., a^{n-1})`.
    pub fn with_power_basis(field: &Field, n: usize, k: usize) -> Result<Self> {
        Self::new(field, k, (0..n as i64).map(|i| field.alpha(i)).collect())
    }

    /// Parses a code file: a field line followed by `n=.. k=.. h=..`.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let field: Field = lines
            .next()
            .ok_or_else(|| Error::Parse("missing field line".into()))?
            .parse()?;
        let spec = lines
            .next()
            .ok_or_else(|| Error::Parse("missing code line".into()))?;
        let (mut n, mut k, mut h) = (None, None, None);
        for tok in spec.split_whitespace() {
            match tok.split_once('=') {
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                Some(("k", v)) => k = v.parse::<usize>().ok(),
                Some(("h", v)) => h = Some(field.parse_vec(v)?),
                _ => return Err(Error::Parse(format!("unexpected token '{tok}'"))),
            }
        }
        let (Some(n), Some(k), Some(h)) = (n, k, h) else {
            return Err(Error::Parse("code line needs n=, k= and h=".into()));
        };
        if h.len() != n {
            return Err(Error::Parse(format!("h has {} entries, n={n}", h.len())));
        }
        Self::new(&field, k, h)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.h.len()
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Minimum rank distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }
    pub fn h(&self) -> &[Elem] {
        &self.h
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.n() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "word length {len}, code length {}",
                self.n()
            )))
        }
    }

    /// (d-1) x n matrix with row j equal to `(h_1^[j], ..., h_n^[j])`.
    pub fn parity_matrix(&self) -> ExtMatrix {
        let rows: Vec<Vec<Elem>> = (0..self.d() - 1)
            .map(|j| {
                self.h
                    .iter()
                    .map(|&x| self.field.frob(x, j as i64))
                    .collect()
            })
            .collect();
        ExtMatrix::from_rows(&self.field, &rows).expect("rows have equal length")
    }

    /// k x n generator matrix with rows `g^[0], ..., g^[k-1]`, where `g`
    /// comes from the solution `f` of `sum f_i h_i^[s] = 0`, `s = 0..n-2`
    /// (normalized so its last entry is 1), via `g = f^[-(k-1)]`.
    pub fn generator_matrix(&self) -> Result<ExtMatrix> {
        let f = &self.field;
        let n = self.n();
        let moore: Vec<Vec<Elem>> = (0..n - 1)
            .map(|s| self.h.iter().map(|&x| f.frob(x, s as i64)).collect())
            .collect();
        let kernel = ExtMatrix::from_rows(f, &moore)?.null_space();
        let [v] = kernel.as_slice() else {
            return Err(Error::LinearlyDependent);
        };
        let last = *v
            .iter()
            .rev()
            .find(|x| !x.is_zero())
            .ok_or(Error::Singular)?;
        let inv = f.inv(last)?;
        let g: Vec<Elem> = v
            .iter()
            .map(|&x| f.frob(f.mul(x, inv), -(self.k as i64 - 1)))
            .collect();
        let rows: Vec<Vec<Elem>> = (0..self.k)
            .map(|i| g.iter().map(|&x| f.frob(x, i as i64)).collect())
            .collect();
        let gm = ExtMatrix::from_rows(f, &rows)?;
        if !gm.mul(&self.parity_matrix().transpose())?.is_zero() || gm.rank() != self.k {
            return Err(Error::Singular);
        }
        Ok(gm)
    }

    /// `msg * G`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k {
            return Err(Error::Dimension(format!(
                "message length {}, k={}",
                msg.len(),
                self.k
            )));
        }
        self.generator_matrix()?.vec_mul(msg)
    }

    /// Codeword carrying `msg` at `positions`, the rest solved from
    /// `H x^T = 0`.
    pub fn encode_systematic_via_parity(
        &self,
        msg: &[Elem],
        positions: &[usize],
    ) -> Result<Vec<Elem>> {
        let n = self.n();
        if msg.len() != self.k || positions.len() != self.k {
            return Err(Error::Dimension(
                "need k message symbols and k positions".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in positions {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameters(
                    "positions must be distinct and < n".into(),
                ));
            }
            seen[p] = true;
        }
        let f = &self.field;
        let hm = self.parity_matrix();
        let unknown: Vec<usize> = (0..n).filter(|&i| !seen[i]).collect();
        let mut a = ExtMatrix::zeros(f, hm.rows(), unknown.len());
        let mut b = vec![Elem::ZERO; hm.rows()];
        for (j, bj) in b.iter_mut().enumerate() {
            for (c, &u) in unknown.iter().enumerate() {
                a.set(j, c, hm.get(j, u));
            }
            *bj = positions.iter().zip(msg).fold(Elem::ZERO, |acc, (&p, &m)| {
                f.sub(acc, f.mul(hm.get(j, p), m))
            });
        }
        let sol = a.inverse()?.mul_vec(&b)?;
        let mut x = vec![Elem::ZERO; n];
        for (&p, &m) in positions.iter().zip(msg) {
            x[p] = m;
        }
        for (&u, &v) in unknown.iter().zip(&sol) {
            x[u] = v;
        }
        Ok(x)
    }

    /// `s = y H^T`, d-1 values.
    pub fn syndrome(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(y.len())?;
        self.parity_matrix().mul_vec(y)
    }

    pub fn is_codeword(&self, y: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(y)?.iter().all(|s| s.is_zero()))
    }

    /// Message m with `m G = x`, or `None` when x is not a codeword.
    pub fn message_of(&self, x: &[Elem]) -> Result<Option<Vec<Elem>>> {
        self.check_len(x.len())?;
        Ok(self.generator_matrix()?.transpose().solve(x))
    }

    /// Rank-error decoding of a fully known word.
    pub fn decode_errors(&self, y: &[Elem]) -> Result<Decoded> {
        self.decode_error_erasure(&ReceivedWord::from_symbols(y))
    }

    /// Fills erased slots in increasing position order, each with the
    /// nonzero element of smallest integer encoding that lies outside the
    /// GF(q)-span of the known symbols and the values filled so far.
    pub fn guess_erasures(&self, y: &ReceivedWord) -> Result<Vec<Elem>> {
        self.check_len(y.len())?;
        let f = &self.field;
        let mut span: Vec<Elem> = y.symbols().iter().flatten().copied().collect();
        let mut out = y.zero_filled();
        for pos in y.erasures() {
            let base = rank_norm(f, &span);
            let pick = f
                .elements()
                .skip(1)
                .find(|&c| {
                    span.push(c);
                    let grows = rank_norm(f, &span) > base;
                    span.pop();
                    grows
                })
                .ok_or(Error::GuessExhausted)?;
            span.push(pick);
            out[pos] = pick;
        }
        Ok(out)
    }

    /// Erasure decoding by guessing: the erased slots take the values in
    /// `fill` (in position order), the filled word is rank-decoded, and the
    /// result is rejected as `Detected` when the correction touches a
    /// position that was not erased.
    pub fn decode_guessed(&self, y: &ReceivedWord, fill: &[Elem]) -> Result<Decoded> {
        self.check_len(y.len())?;
        let er = y.erasures();
        if fill.len() != er.len() {
            return Err(Error::Dimension("one fill value per erasure".into()));
        }
        let mut word = y.zero_filled();
        for (&p, &v) in er.iter().zip(fill) {
            word[p] = v;
        }
        let res = self.decode_errors(&word)?;
        if let Decoded::Codeword { codeword, .. } = &res {
            let touched = y
                .symbols()
                .iter()
                .zip(codeword)
                .any(|(s, c)| s.is_some_and(|s| s != *c));
            if touched {
                return Ok(Decoded::Detected);
            }
        }
        Ok(res)
    }

    /// [`guess_erasures`](Self::guess_erasures) followed by
    /// [`decode_guessed`](Self::decode_guessed).
    pub fn decode_by_guessing(&self, y: &ReceivedWord) -> Result<Decoded> {
        let filled = match self.guess_erasures(y) {
            Ok(w) => w,
            Err(Error::GuessExhausted) => return Ok(Decoded::Detected),
            Err(e) => return Err(e),
        };
        let fill: Vec<Elem> = y.erasures().iter().map(|&p| filled[p]).collect();
        self.decode_guessed(y, &fill)
    }

    /// Eliminates the given positions one after another from `(h, s)` with
    /// `Z = h_l^[1] / h_l`, `s'_j = s_j Z^[j] - s_{j+1}` and
    /// `h'_i = h_i Z - h_i^[1]`.
    fn eliminate(&self, positions: &[usize], s: &[Elem]) -> Result<Elimination> {
        let f = &self.field;
        let mut h: Vec<(usize, Elem)> = self.h.iter().copied().enumerate().collect();
        let mut s = s.to_vec();
        let mut zs = Vec::new();
        for &l in positions {
            let idx = h.iter().position(|&(i, _)| i == l).ok_or_else(|| {
                Error::InvalidParameters(format!("position {l} repeated or out of range"))
            })?;
            let hl = h[idx].1;
            let z = f.div(f.frob(hl, 1), hl)?;
            zs.push(z);
            s = (0..s.len().saturating_sub(1))
                .map(|j| f.sub(f.mul(s[j], f.frob(z, j as i64)), s[j + 1]))
                .collect();
            h.remove(idx);
            for entry in h.iter_mut() {
                entry.1 = f.sub(f.mul(entry.1, z), f.frob(entry.1, 1));
            }
        }
        Ok(Elimination {
            z: zs,
            syndromes: s,
            h,
        })
    }

    /// Parity matrix after deleting `positions`: (d-1-m) x (n-m), again in
    /// Gabidulin form with the reduced `h'` as first row.
    pub fn deleted_parity_matrix(&self, positions: &[usize]) -> Result<ExtMatrix> {
        if positions.len() >= self.d() - 1 {
            return Err(Error::InvalidParameters(
                "need fewer than d-1 deletions".into(),
            ));
        }
        let el = self.eliminate(positions, &vec![Elem::ZERO; self.d() - 1])?;
        let rows: Vec<Vec<Elem>> = (0..self.d() - 1 - positions.len())
            .map(|j| {
                el.h.iter()
                    .map(|&(_, x)| self.field.frob(x, j as i64))
                    .collect()
            })
            .collect();
        ExtMatrix::from_rows(&self.field, &rows)
    }

    /// Multipliers and reduced syndromes for a received word.
    pub fn erasure_elimination(&self, y: &ReceivedWord) -> Result<Elimination> {
        self.check_len(y.len())?;
        let s = self.syndrome(&y.zero_filled())?;
        self.eliminate(&y.erasures(), &s)
    }

    /// Combined error-erasure decoding; succeeds when `2 rank(e) + t < d`.
    pub fn decode_error_erasure(&self, y: &ReceivedWord) -> Result<Decoded> {
        self.check_len(y.len())?;
        let f = &self.field;
        let n = self.n();
        let er = y.erasures();
        let t = er.len();
        if t >= self.d() {
            return Ok(Decoded::Detected);
        }
        let el = self.erasure_elimination(y)?;
        let hred: Vec<Elem> = el.h.iter().map(|&(_, x)| x).collect();
        let Some(core) = decode_core(f, &hred, &el.syndromes)? else {
            return Ok(Decoded::Detected);
        };
        let m = core.e_basis.len();
        let mut e = vec![Elem::ZERO; n];
        let mut ymat = PrimeMatrix::zeros(f.p(), m, n);
        for (c, &(pos, _)) in el.h.iter().enumerate() {
            e[pos] = core.e[c];
            for p in 0..m {
                ymat.set(p, pos, core.y.get(p, c));
            }
        }
        let known = y.zero_filled();
        let mut x: Vec<Elem> = known.iter().zip(&e).map(|(&a, &b)| f.sub(a, b)).collect();
        // sum_l f_l h_l^[j] = -sum_{i not erased} x_i h_i^[j], j < t
        let mut fvals = Vec::new();
        if t > 0 {
            let mut a = ExtMatrix::zeros(f, t, t);
            let mut b = vec![Elem::ZERO; t];
            for (j, bj) in b.iter_mut().enumerate() {
                for (c, &l) in er.iter().enumerate() {
                    a.set(j, c, f.frob(self.h[l], j as i64));
                }
                *bj = f.neg((0..n).fold(Elem::ZERO, |acc, i| {
                    f.add(acc, f.mul(x[i], f.frob(self.h[i], j as i64)))
                }));
            }
            let Some(sol) = a.solve(&b) else {
                return Ok(Decoded::Detected);
            };
            for (&l, &v) in er.iter().zip(&sol) {
                x[l] = v;
            }
            fvals = sol;
        }
        if !self.is_codeword(&x)? {
            return Ok(Decoded::Detected);
        }
        Ok(Decoded::Codeword {
            codeword: x,
            solution: ErrorSolution {
                m,
                e_basis: core.e_basis,
                xprime: core.xprime,
                y: ymat,
                e,
                f: fvals,
            },
        })
    }
}

impl fmt::Display for GabidulinCode {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "{}", self.field)?;
        write!(
            fm,
            "n={} k={} h={}",
            self.n(),
            self.k,
            self.field.fmt_vec(&self.h)
        )
    }
}

/// Number of admissible values for guess number `s + 1` when `t` of the `n`
/// coordinates of a GF(2^n) word are erased: `2^(n-t+s) (2^(t-s) - 1)`.
pub fn erasure_choice_count(n: u32, t: u32, s: u32) -> Result<u128> {
    if !(s < t && t <= n) || n > 100 {
        return Err(Error::InvalidParameters(format!(
            "need 0 <= s < t <= n, got n={n} t={t} s={s}"
        )));
    }
    Ok((1u128 << (n - t + s)) * ((1u128 << (t - s)) - 1))
}

/// A linear rank-metric code given by a generator matrix, decoded by
/// exhaustive nearest-codeword search. Used where the code is not MRD.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRankCode {
    g: ExtMatrix,
    h: ExtMatrix,
}

impl LinearRankCode {
    pub fn from_generator(g: ExtMatrix) -> Result<Self> {
        if g.rows() == 0 || g.rank() != g.rows() {
            return Err(Error::LinearlyDependent);
        }
        let kernel = g.null_space();
        let h = if kernel.is_empty() {
            ExtMatrix::zeros(g.field(), 0, g.cols())
        } else {
            ExtMatrix::from_rows(g.field(), &kernel)?
        };
        Ok(LinearRankCode { g, h })
    }

    pub fn generator(&self) -> &ExtMatrix {
        &self.g
    }
    /// Rows span the dual code.
    pub fn parity(&self) -> &ExtMatrix {
        &self.h
    }
    pub fn field(&self) -> &Field {
        self.g.field()
    }
    pub fn n(&self) -> usize {
        self.g.cols()
    }
    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        self.g.vec_mul(msg)
    }

    pub fn codewords(&self) -> Result<Vec<Vec<Elem>>> {
        span_codewords(&self.g)
    }

    pub fn min_distance(&self) -> Result<usize> {
        min_rank_distance_bruteforce(self.field(), self.codewords()?)
    }

    /// Unique nearest codeword in rank distance, or `None` on a tie.
    pub fn decode_nearest(&self, y: &[Elem]) -> Result<Option<Vec<Elem>>> {
        let mut best: Option<(usize, Vec<Elem>, bool)> = None;
        for c in self.codewords()? {
            let d = rank_distance(self.field(), y, &c)?;
            match &mut best {
                Some((bd, _, unique)) if d == *bd => *unique = false,
                Some((bd, _, _)) if d > *bd => {}
                _ => best = Some((d, c, true)),
            }
        }
        Ok(best.and_then(|(_, c, unique)| unique.then_some(c)))
    }

    pub fn message_of(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        self.g.transpose().solve(x)
    }
}

/// The outer code of a concatenation: a Gabidulin code with its algebraic
/// decoder, or a general linear rank code decoded exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankCode {
    Gabidulin(GabidulinCode),
    Linear(LinearRankCode),
}

impl RankCode {
    pub fn field(&self) -> &Field {
        match self {
            RankCode::Gabidulin(c) => c.field(),
            RankCode::Linear(c) => c.field(),
        }
    }
    pub fn n(&self) -> usize {
        match self {
            RankCode::Gabidulin(c) => c.n(),
            RankCode::Linear(c) => c.n(),
        }
    }
    pub fn k(&self) -> usize {
        match self {
            RankCode::Gabidulin(c) => c.k(),
            RankCode::Linear(c) => c.k(),
        }
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        match self {
            RankCode::Gabidulin(c) => c.encode(msg),
            RankCode::Linear(c) => c.encode(msg),
        }
    }

    /// Minimum rank distance: `n - k + 1` for Gabidulin codes, brute force
    /// otherwise.
    pub fn min_distance(&self) -> Result<usize> {
        match self {
            RankCode::Gabidulin(c) => Ok(c.d()),
            RankCode::Linear(c) => c.min_distance(),
        }
    }

    pub fn codewords(&self) -> Result<Vec<Vec<Elem>>> {
        match self {
            RankCode::Gabidulin(c) => span_codewords(&c.generator_matrix()?),
            RankCode::Linear(c) => c.codewords(),
        }
    }

    /// Decodes to a message, `None` when the decoder gives up.
    pub fn decode_message(&self, y: &[Elem]) -> Result<Option<Vec<Elem>>> {
        match self {
            RankCode::Gabidulin(c) => match c.decode_errors(y)? {
                Decoded::Codeword { codeword, .. } => c.message_of(&codeword),
                Decoded::Detected => Ok(None),
            },
            RankCode::Linear(c) => Ok(c.decode_nearest(y)?.and_then(|x| c.message_of(&x))),
        }
    }
}
