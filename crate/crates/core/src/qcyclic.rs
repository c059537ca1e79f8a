//! q-cyclic rank-distance codes of length n over GF(q^n): systematic
//! encoding, systematic matrices, shortening and parity inversion.
//!
//! Coordinate i of a word is the coefficient of `z^[i]` of its polynomial.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linpoly::LinPoly;
use crate::ranklin::ExtMatrix;

/// Code generated by a right divisor `G(z)` of `z^[n] - z`, n the extension
/// degree of the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCyclicCode {
    field: Field,
    g: LinPoly,
    h: LinPoly,
}

impl QCyclicCode {
    /// Validates `g` as a right divisor of `z^[n] - z`.
    pub fn new(field: &Field, g: LinPoly) -> Result<Self> {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        let n = field.n() as usize;
        match g.degree() {
            None => return Err(Error::InvalidParameters("zero generator".into())),
            Some(d) if d == 0 || d >= n => {
                return Err(Error::InvalidParameters(format!(
                    "generator top index {d} must lie in 1..{n}"
                )))
            }
            _ => {}
        }
        match g.is_right_divisor(n)? {
            (true, Some(h)) => Ok(QCyclicCode {
                field: field.clone(),
                g,
                h,
            }),
            _ => Err(Error::NotADivisor),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.field.n() as usize
    }
    pub fn k(&self) -> usize {
        self.n() - self.g.degree().expect("generator is nonzero")
    }
    pub fn generator(&self) -> &LinPoly {
        &self.g
    }
    /// Check polynomial with `z^[n] - z = H * G`.
    pub fn check_poly(&self) -> &LinPoly {
        &self.h
    }

    /// Message polynomial `sum m_i z^[n-k+i]`.
    pub fn message_poly(&self, msg: &[Elem]) -> Result<LinPoly> {
        if msg.len() > self.k() {
            return Err(Error::Dimension(format!(
                "{} message symbols, k={}",
                msg.len(),
                self.k()
            )));
        }
        let r = self.n() - self.k();
        let terms: Vec<(usize, Elem)> = msg.iter().enumerate().map(|(i, &m)| (r + i, m)).collect();
        Ok(LinPoly::from_terms(&self.field, &terms))
    }

    fn check_message(&self, u: &LinPoly) -> Result<()> {
        let r = self.n() - self.k();
        if u.degree().is_some_and(|d| d >= self.n()) || (0..r).any(|i| !u.coeff(i).is_zero()) {
            return Err(Error::InvalidParameters(format!(
                "message must be supported on indices {r}..{}",
                self.n() - 1
            )));
        }
        Ok(())
    }

    /// Parity polynomial `f = u mod G` (right remainder).
    pub fn parity(&self, u: &LinPoly) -> Result<LinPoly> {
        self.check_message(u)?;
        Ok(u.right_divmod(&self.g)?.1)
    }

    /// Systematic codeword polynomial `g = u - (u mod G)`.
    pub fn systematic_encode(&self, u: &LinPoly) -> Result<LinPoly> {
        u.sub(&self.parity(u)?)
    }

    pub fn is_codeword(&self, word: &[Elem]) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::Dimension("word length".into()));
        }
        let p = LinPoly::new(&self.field, word.to_vec());
        Ok(p.right_divmod(&self.g)?.1.is_zero())
    }

    /// `(G_sys, H_sys)`: `G_sys = [F | I_k]` with row i the negated
    /// remainder of `z^[n-k+i]` mod G, and `H_sys = [I_{n-k} | -F^T]`.
    pub fn systematic_matrices(&self) -> Result<(ExtMatrix, ExtMatrix)> {
        let f = &self.field;
        let (n, k) = (self.n(), self.k());
        let r = n - k;
        let mut gs = ExtMatrix::zeros(f, k, n);
        let mut hs = ExtMatrix::zeros(f, r, n);
        for j in 0..r {
            hs.set(j, j, Elem::ONE);
        }
        for i in 0..k {
            let rem = LinPoly::monomial(f, Elem::ONE, r + i)
                .right_divmod(&self.g)?
                .1;
            for j in 0..r {
                let fij = f.neg(rem.coeff(j));
                gs.set(i, j, fij);
                hs.set(j, r + i, f.neg(fij));
            }
            gs.set(i, r + i, Elem::ONE);
        }
        Ok((gs, hs))
    }

    /// Message-to-parity map: row i holds `z^[n-k+i] mod G`.
    fn parity_map(&self, info: usize) -> Result<ExtMatrix> {
        let f = &self.field;
        let r = self.n() - self.k();
        let rows = (0..info)
            .map(|i| {
                let rem = LinPoly::monomial(f, Elem::ONE, r + i)
                    .right_divmod(&self.g)?
                    .1;
                Ok((0..r).map(|j| rem.coeff(j)).collect())
            })
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        ExtMatrix::from_rows(f, &rows)
    }

    /// Basis of the nonzero messages with zero parity among messages whose
    /// `t0` leading symbols vanish. Each vector is normalized to end in 1
    /// and padded to length k. Empty iff the configuration is invertible.
    pub fn parity_kernel(&self, t0: usize) -> Result<Vec<Vec<Elem>>> {
        if t0 >= self.k() {
            return Err(Error::InvalidParameters("t0 must be below k".into()));
        }
        let info = self.k() - t0;
        let map = self.parity_map(info)?;
        let mut out = Vec::new();
        for mut v in map.transpose().null_space() {
            let last = *v
                .iter()
                .rev()
                .find(|x| !x.is_zero())
                .expect("kernel vectors are nonzero");
            let inv = self.field.inv(last)?;
            v.iter_mut().for_each(|x| *x = self.field.mul(*x, inv));
            v.resize(self.k(), Elem::ZERO);
            out.push(v);
        }
        Ok(out)
    }

    /// Recovers the message polynomial from its parity polynomial `f`:
    /// `u' = (z^[k] * f) mod G`, `u = z^[n-k] * u'`. With `t0` the code is
    /// taken as shortened by `t0` leading information symbols.
    pub fn invert(&self, f: &LinPoly, t0: Option<usize>) -> Result<LinPoly> {
        if !is_invertible(self.n(), self.k(), t0) {
            return Err(Error::NotInvertible);
        }
        let fld = &self.field;
        let (n, k) = (self.n(), self.k());
        let r = n - k;
        if f.degree().is_some_and(|d| d >= r) {
            return Err(Error::InvalidParameters(
                "parity polynomial too long".into(),
            ));
        }
        let shifted = LinPoly::monomial(fld, Elem::ONE, k).symb_mul(f)?;
        let uprime = shifted.right_divmod(&self.g)?.1;
        let u = LinPoly::monomial(fld, Elem::ONE, r).symb_mul(&uprime)?;
        Ok(u)
    }

    pub fn shorten(&self, t0: usize) -> Result<ShortenedCode> {
        if t0 >= self.k() {
            return Err(Error::InvalidParameters(format!(
                "cannot shorten by {t0} with k={}",
                self.k()
            )));
        }
        Ok(ShortenedCode {
            base: self.clone(),
            t0,
        })
    }
}

/// A q-cyclic code with its `t0` leading information symbols fixed to zero
/// and deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortenedCode {
    base: QCyclicCode,
    t0: usize,
}

impl ShortenedCode {
    pub fn base(&self) -> &QCyclicCode {
        &self.base
    }
    pub fn t0(&self) -> usize {
        self.t0
    }
    pub fn n(&self) -> usize {
        self.base.n() - self.t0
    }
    pub fn k(&self) -> usize {
        self.base.k() - self.t0
    }

    /// Encodes `k - t0` message symbols into a word of length `n - t0`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k() {
            return Err(Error::Dimension("shortened message length".into()));
        }
        let u = self.base.message_poly(msg)?;
        let g = self.base.systematic_encode(&u)?;
        Ok((0..self.n()).map(|i| g.coeff(i)).collect())
    }

    /// Deletes the trailing `t0` coordinates of a base codeword; they must
    /// be zero.
    pub fn shorten_word(&self, word: &[Elem]) -> Result<Vec<Elem>> {
        if word.len() != self.base.n() || word[self.n()..].iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidParameters(
                "word is not in the shortened subcode".into(),
            ));
        }
        Ok(word[..self.n()].to_vec())
    }

    /// Re-inserts the deleted zero coordinates.
    pub fn lengthen(&self, word: &[Elem]) -> Vec<Elem> {
        let mut w = word.to_vec();
        w.resize(self.base.n(), Elem::ZERO);
        w
    }

    pub fn is_codeword(&self, word: &[Elem]) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::Dimension("word length".into()));
        }
        self.base.is_codeword(&self.lengthen(word))
    }

    pub fn invert(&self, f: &LinPoly) -> Result<LinPoly> {
        self.base.invert(f, Some(self.t0))
    }
}

/// Invertibility condition: `n - k >= k` for the full code, or
/// `2k - n <= t0 < k` when shortened by `t0`.
pub fn is_invertible(n: usize, k: usize, t0: Option<usize>) -> bool {
    match t0 {
        None | Some(0) => n >= 2 * k,
        Some(t) => t < k && 2 * k <= n + t,
    }
}

/// The q-cyclic shift `(g_{n-1}^[1], g_0^[1], ..., g_{n-2}^[1])`.
pub fn qc_shift(field: &Field, word: &[Elem]) -> Vec<Elem> {
    let n = word.len();
    (0..n)
        .map(|i| field.frob(word[(i + n - 1) % n], 1))
        .collect()
}

/// Word of length `n` from a polynomial (coefficient i at coordinate i).
pub fn poly_to_word(p: &LinPoly, n: usize) -> Vec<Elem> {
    (0..n).map(|i| p.coeff(i)).collect()
}
