//! Linear codes with complementary duals, their orthogonal projector and
//! the noiseless two-user adder channel.
//!
//! Codewords are row vectors; the projector acts on the right (`r * P`).

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::ranklin::ExtMatrix;

/// An LCD code given by a full-rank generator matrix, with its projector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcdCode {
    g: ExtMatrix,
    projector: ExtMatrix,
}

fn gram(g: &ExtMatrix) -> Result<ExtMatrix> {
    g.mul(&g.transpose())
}

/// True iff `G G^T` is nonsingular. `G` must have full row rank.
pub fn is_lcd(g: &ExtMatrix) -> Result<bool> {
    if g.rows() == 0 || g.rank() != g.rows() {
        return Err(Error::LinearlyDependent);
    }
    Ok(!gram(g)?.det()?.is_zero())
}

/// Orthogonal projector `G^T (G G^T)^-1 G` onto the row space of `G`.
pub fn projector(g: &ExtMatrix) -> Result<ExtMatrix> {
    if !is_lcd(g)? {
        return Err(Error::NotLcd);
    }
    g.transpose().mul(&gram(g)?.inverse()?)?.mul(g)
}

/// Generator of the dual code: a basis of the right kernel of `G`.
pub fn dual_generator(g: &ExtMatrix) -> Result<ExtMatrix> {
    let kernel = g.null_space();
    if kernel.is_empty() {
        return Err(Error::InvalidParameters("code has a trivial dual".into()));
    }
    ExtMatrix::from_rows(g.field(), &kernel)
}

impl LcdCode {
    pub fn new(g: ExtMatrix) -> Result<Self> {
        let projector = projector(&g)?;
        Ok(LcdCode { g, projector })
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }
    pub fn generator(&self) -> &ExtMatrix {
        &self.g
    }
    pub fn projector(&self) -> &ExtMatrix {
        &self.projector
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

    /// `r * P`: the component of `r` in the code.
    pub fn project(&self, r: &[Elem]) -> Result<Vec<Elem>> {
        self.projector.vec_mul(r)
    }

    /// True iff `v` is orthogonal to every row of `G`.
    pub fn in_dual(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.g.mul_vec(v)?.iter().all(|x| x.is_zero()))
    }
}

/// GF(2^n) code whose generator rows are the Frobenius powers
/// `b_j^[i]`, `i < k`, of a trace-orthogonal basis. Its Gram matrix is the
/// identity.
pub fn trace_orthogonal_mrd(field: &Field, k: usize) -> Result<LcdCode> {
    let n = field.n() as usize;
    if field.p() != 2 || k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need GF(2^n) and 1 <= k <= n, got p={} n={n} k={k}",
            field.p()
        )));
    }
    let basis = field.trace_orthogonal_basis()?;
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| basis.iter().map(|&b| field.frob(b, i as i64)).collect())
        .collect();
    LcdCode::new(ExtMatrix::from_rows(field, &rows)?)
}

/// Output of the noiseless adder channel: the componentwise field sum.
pub fn adder_combine(field: &Field, g1: &[Elem], g2: &[Elem]) -> Result<Vec<Elem>> {
    if g1.len() != g2.len() {
        return Err(Error::Dimension("inputs of different length".into()));
    }
    Ok(g1.iter().zip(g2).map(|(&a, &b)| field.add(a, b)).collect())
}

/// Splits `r = g1 + g2` with `g1` in the code and `g2` in its dual:
/// `g1 = r P`, `g2 = r - g1`. Inputs violating the noiseless contract are
/// split all the same.
pub fn adder_split(r: &[Elem], code: &LcdCode) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let f = code.field();
    let g1 = code.project(r)?;
    let g2 = r.iter().zip(&g1).map(|(&a, &b)| f.sub(a, b)).collect();
    Ok((g1, g2))
}
