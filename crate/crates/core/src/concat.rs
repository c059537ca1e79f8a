//! Concatenated codes: CRM codes (outer rank code over GF(2^kb), binary
//! inner block code) with the CR-metric, super-code concatenation and
//! special-blank interleaving of several streams.

use crate::blockcode::{hamming_distance, LinearBlockCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::mrd::RankCode;
use crate::ranklin::{span_codewords, ExtMatrix, PrimeMatrix};

/// Largest number of CC matrices enumerated by the brute-force routines.
pub const MAX_CC_WORDS: u128 = 1 << 16;

/// Binary matrix whose rows are inner encodings of the bit expansions of
/// an outer codeword.
pub type CcMatrix = PrimeMatrix;

/// Concatenation of an outer rank code over GF(2^kb) with a binary
/// (nb, kb) inner code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrmCode {
    outer: RankCode,
    inner: LinearBlockCode,
}

impl CrmCode {
    pub fn new(outer: RankCode, inner: LinearBlockCode) -> Result<Self> {
        let f = outer.field();
        if f.p() != 2 || inner.p() != 2 {
            return Err(Error::InvalidParameters("CRM codes are binary".into()));
        }
        if inner.k() != f.n() as usize {
            return Err(Error::InvalidParameters(format!(
                "inner dimension {} must equal the outer extension degree {}",
                inner.k(),
                f.n()
            )));
        }
        Ok(CrmCode { outer, inner })
    }

    pub fn outer(&self) -> &RankCode {
        &self.outer
    }
    pub fn inner(&self) -> &LinearBlockCode {
        &self.inner
    }
    pub fn field(&self) -> &Field {
        self.outer.field()
    }

    /// Symbol map: coefficient bits of `a`, highest power of x first.
    pub fn symbol_bits(&self, a: Elem) -> Vec<u32> {
        let mut c = self.field().coeffs(a);
        c.reverse();
        c
    }

    /// Inverse of [`CrmCode::symbol_bits`].
    pub fn bits_symbol(&self, bits: &[u32]) -> Result<Elem> {
        let mut c = bits.to_vec();
        c.reverse();
        self.field().from_coeffs(&c)
    }

    /// Bit expansion of an outer word, one row per symbol, before inner
    /// encoding.
    pub fn expand(&self, word: &[Elem]) -> Result<PrimeMatrix> {
        let rows: Vec<Vec<u32>> = word.iter().map(|&a| self.symbol_bits(a)).collect();
        PrimeMatrix::from_rows(2, &rows)
    }

    /// Outer-encodes `m`, expands each symbol and inner-encodes each row.
    pub fn encode(&self, m: &[Elem]) -> Result<CcMatrix> {
        if m.len() != self.outer.k() {
            return Err(Error::Dimension(format!(
                "message has {} symbols, outer k={}",
                m.len(),
                self.outer.k()
            )));
        }
        let word = self.outer.encode(m)?;
        let rows = word
            .iter()
            .map(|&a| self.inner.encode(&self.symbol_bits(a)))
            .collect::<Result<Vec<_>>>()?;
        PrimeMatrix::from_rows(2, &rows)
    }

    /// Every CC matrix of the code, in message order.
    pub fn codewords(&self) -> Result<Vec<CcMatrix>> {
        let f = self.field();
        let total = (f.order() as u128)
            .checked_pow(self.outer.k() as u32)
            .unwrap_or(u128::MAX);
        if total > MAX_CC_WORDS {
            return Err(Error::TooLarge(total));
        }
        let id = ExtMatrix::identity(f, self.outer.k());
        span_codewords(&id)?
            .iter()
            .map(|m| self.encode(m))
            .collect()
    }

    /// Minimum rank over the nonzero CC matrices.
    pub fn min_distance(&self) -> Result<usize> {
        self.codewords()?
            .iter()
            .map(PrimeMatrix::rank)
            .filter(|&r| r > 0)
            .min()
            .ok_or(Error::NoNonzeroCodeword)
    }

    fn check_shape(&self, y: &CcMatrix) -> Result<()> {
        if y.rows() != self.outer.n() || y.cols() != self.inner.n() || y.p() != 2 {
            return Err(Error::Dimension(format!(
                "expected a binary {}x{} matrix",
                self.outer.n(),
                self.inner.n()
            )));
        }
        Ok(())
    }

    /// True iff `0 < rank(Y) < d_a`. A rank of at least `d_a` proves
    /// nothing.
    pub fn detect(&self, y: &CcMatrix) -> Result<bool> {
        self.check_shape(y)?;
        let r = y.rank();
        Ok(r > 0 && r < self.outer.min_distance()?)
    }

    /// Sequential decoding: inner-decode each row, map bits back to
    /// symbols, then outer-decode. `None` when the outer decoder gives up.
    pub fn decode(&self, y: &CcMatrix) -> Result<Option<Vec<Elem>>> {
        self.check_shape(y)?;
        let array = self.inner.standard_array()?;
        let word = (0..y.rows())
            .map(|r| {
                let (_, bits) = array.decode(&self.inner, y.row(r))?;
                self.bits_symbol(&bits)
            })
            .collect::<Result<Vec<_>>>()?;
        self.outer.decode_message(&word)
    }
}

/// CR-metric: GF(2) rank of `X + Y`.
pub fn cr_distance(x: &CcMatrix, y: &CcMatrix) -> Result<usize> {
    Ok(x.add(y)?.rank())
}

/// Block-wise concatenation of several inner codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperCode {
    codes: Vec<LinearBlockCode>,
}

impl SuperCode {
    pub fn new(codes: Vec<LinearBlockCode>) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::InvalidParameters(
                "super code needs at least one block".into(),
            ));
        }
        Ok(SuperCode { codes })
    }

    pub fn codes(&self) -> &[LinearBlockCode] {
        &self.codes
    }
    pub fn n(&self) -> usize {
        self.codes.iter().map(LinearBlockCode::n).sum()
    }
    pub fn k(&self) -> usize {
        self.codes.iter().map(LinearBlockCode::k).sum()
    }

    /// `(x_1 | ... | x_t)` with `x_i` the encoding of message i.
    pub fn encode(&self, messages: &[Vec<u32>]) -> Result<Vec<u32>> {
        if messages.len() != self.codes.len() {
            return Err(Error::Dimension("one message per block".into()));
        }
        let mut out = Vec::with_capacity(self.n());
        for (c, m) in self.codes.iter().zip(messages) {
            out.extend(c.encode(m)?);
        }
        Ok(out)
    }

    fn blocks<'a>(&self, x: &'a [u32]) -> Result<Vec<&'a [u32]>> {
        if x.len() != self.n() {
            return Err(Error::Dimension("word length".into()));
        }
        let mut rest = x;
        Ok(self
            .codes
            .iter()
            .map(|c| {
                let (head, tail) = rest.split_at(c.n());
                rest = tail;
                head
            })
            .collect())
    }

    /// Sum of the block-wise Hamming distances.
    pub fn distance(&self, x: &[u32], y: &[u32]) -> Result<usize> {
        self.blocks(x)?
            .iter()
            .zip(self.blocks(y)?)
            .map(|(a, b)| hamming_distance(a, b))
            .sum()
    }

    /// Per-block correction capabilities summed, and the capability
    /// computed from the summed distances: `(sum floor((d_i-1)/2),
    /// floor(sum (d_i-1) / 2))`.
    pub fn capability_report(&self) -> Result<(usize, usize)> {
        let ds = self
            .codes
            .iter()
            .map(LinearBlockCode::min_distance)
            .collect::<Result<Vec<_>>>()?;
        let blockwise = ds.iter().map(|d| (d - 1) / 2).sum();
        let pooled = ds.iter().map(|d| d - 1).sum::<usize>() / 2;
        Ok((blockwise, pooled))
    }
}

/// A slot of a split stream: a symbol or a special blank. Special blanks
/// mark positions owned by another stream and are never erasures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot<T> {
    Symbol(T),
    Blank,
}

/// Stream lengths of an interleaved word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    lengths: Vec<usize>,
}

impl Layout {
    pub fn new(lengths: Vec<usize>) -> Self {
        Layout { lengths }
    }
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
    pub fn total(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Stream index of each position of the interleaved word.
    pub fn owners(&self) -> Vec<usize> {
        let longest = self.lengths.iter().copied().max().unwrap_or(0);
        (0..longest)
            .flat_map(|round| {
                self.lengths
                    .iter()
                    .enumerate()
                    .filter(move |(_, &len)| round < len)
                    .map(|(s, _)| s)
            })
            .collect()
    }
}

/// Alternating interleave: one symbol from each stream in turn, skipping
/// streams that are exhausted.
pub fn interleave<T: Clone>(streams: &[Vec<T>]) -> (Vec<T>, Layout) {
    let layout = Layout::new(streams.iter().map(Vec::len).collect());
    let mut pos = vec![0usize; streams.len()];
    let word = layout
        .owners()
        .into_iter()
        .map(|s| {
            pos[s] += 1;
            streams[s][pos[s] - 1].clone()
        })
        .collect();
    (word, layout)
}

/// Inverse of [`interleave`].
pub fn deinterleave<T: Clone>(word: &[T], layout: &Layout) -> Result<Vec<Vec<T>>> {
    if word.len() != layout.total() {
        return Err(Error::Dimension(format!(
            "word length {} does not match layout total {}",
            word.len(),
            layout.total()
        )));
    }
    let mut out: Vec<Vec<T>> = layout
        .lengths()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    for (x, s) in word.iter().zip(layout.owners()) {
        out[s].push(x.clone());
    }
    Ok(out)
}

/// Splits an interleaved word into one full-length unit per stream, with
/// special blanks at the positions owned by other streams.
pub fn split_with_blanks<T: Clone>(word: &[T], layout: &Layout) -> Result<Vec<Vec<Slot<T>>>> {
    if word.len() != layout.total() {
        return Err(Error::Dimension("word length does not match layout".into()));
    }
    let owners = layout.owners();
    Ok((0..layout.lengths().len())
        .map(|s| {
            word.iter()
                .zip(&owners)
                .map(|(x, &o)| {
                    if o == s {
                        Slot::Symbol(x.clone())
                    } else {
                        Slot::Blank
                    }
                })
                .collect()
        })
        .collect())
}

/// Drops the special blanks of a unit.
pub fn strip_blanks<T: Clone>(unit: &[Slot<T>]) -> Vec<T> {
    unit.iter()
        .filter_map(|s| match s {
            Slot::Symbol(x) => Some(x.clone()),
            Slot::Blank => None,
        })
        .collect()
}

/// Merges blank-padded units back into the interleaved word. Each
/// position must hold a symbol in exactly one unit.
pub fn merge_units<T: Clone>(units: &[Vec<Slot<T>>]) -> Result<Vec<T>> {
    let len = units.first().map_or(0, Vec::len);
    if units.iter().any(|u| u.len() != len) {
        return Err(Error::Dimension("units of different length".into()));
    }
    (0..len)
        .map(|i| {
            let mut found = units.iter().filter_map(|u| match &u[i] {
                Slot::Symbol(x) => Some(x.clone()),
                Slot::Blank => None,
            });
            match (found.next(), found.next()) {
                (Some(x), None) => Ok(x),
                _ => Err(Error::InvalidParameters(format!(
                    "position {i} must be filled by exactly one unit"
                ))),
            }
        })
        .collect()
}
