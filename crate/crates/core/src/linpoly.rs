//! Linearized polynomials `F(z) = sum f_i z^[i]` with `[i] = p^i`.
//!
//! Multiplication is composition (the symbolic product), division is right
//! division, and the Euclidean chain carries the auxiliary sequences used by
//! the rank decoders.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::ranklin::PrimeMatrix;

/// A linearized polynomial over GF(p^n). Coefficients are dense, index i
/// holding the coefficient of `z^[i]`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl LinPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LinPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    /// The identity map `z = z^[0]`.
    pub fn identity(field: &Field) -> Self {
        Self::monomial(field, Elem::ONE, 0)
    }

    /// `c z^[i]`.
    pub fn monomial(field: &Field, c: Elem, i: usize) -> Self {
        let mut v = vec![Elem::ZERO; i + 1];
        v[i] = c;
        Self::new(field, v)
    }

    /// Sum of terms `(index, coefficient)`; repeated indices add up.
    pub fn from_terms(field: &Field, terms: &[(usize, Elem)]) -> Self {
        let top = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let mut v = vec![Elem::ZERO; top];
        for &(i, c) in terms {
            v[i] = field.add(v[i], c);
        }
        Self::new(field, v)
    }

    /// Terms given as `(index, log of coefficient)`.
    pub fn from_log_terms(field: &Field, terms: &[(usize, i64)]) -> Self {
        let t: Vec<(usize, Elem)> = terms.iter().map(|&(i, k)| (i, field.alpha(k))).collect();
        Self::from_terms(field, &t)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `z^[i]` (zero beyond the top index).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Top index i with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    fn check(&self, other: &LinPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &LinPoly) -> Result<LinPoly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(&self.field, v))
    }

    pub fn neg(&self) -> LinPoly {
        let v = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Self::new(&self.field, v)
    }

    pub fn sub(&self, other: &LinPoly) -> Result<LinPoly> {
        self.add(&other.neg())
    }

    /// `c * F`, i.e. every coefficient multiplied by c on the left.
    pub fn scale(&self, c: Elem) -> LinPoly {
        let v = self.coeffs.iter().map(|&x| self.field.mul(c, x)).collect();
        Self::new(&self.field, v)
    }

    /// Symbolic product `self * other = self(other(z))`; the coefficient of
    /// `z^[k]` is `sum_{i+j=k} f_i g_j^[i]`.
    pub fn symb_mul(&self, other: &LinPoly) -> Result<LinPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut v = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, &gj) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(fi, f.frob(gj, i as i64)));
            }
        }
        Ok(Self::new(f, v))
    }

    /// `F(a) = sum f_i a^[i]`.
    pub fn eval(&self, a: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .enumerate()
            .fold(Elem::ZERO, |acc, (i, &c)| {
                f.add(acc, f.mul(c, f.frob(a, i as i64)))
            })
    }

    /// Right division: returns `(Q, R)` with `self = Q * g + R` and
    /// `deg R < deg g`.
    pub fn right_divmod(&self, g: &LinPoly) -> Result<(LinPoly, LinPoly)> {
        self.check(g)?;
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let lg = g.lead();
        let mut q = vec![Elem::ZERO; self.coeffs.len().saturating_sub(dg)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let s = dr - dg;
            let c = f.div(r.lead(), f.frob(lg, s as i64))?;
            q[s] = f.add(q[s], c);
            let term = Self::monomial(f, c, s).symb_mul(g)?;
            r = r.sub(&term)?;
        }
        Ok((Self::new(f, q), r))
    }

    /// Basis over GF(p) of the roots of `self` in GF(p^n), computed as the
    /// kernel of the evaluation map written as an n x n matrix over GF(p).
    pub fn root_space(&self) -> Result<Vec<Elem>> {
        if self.is_zero() {
            return Err(Error::InvalidParameters(
                "root space of the zero polynomial".into(),
            ));
        }
        let f = &self.field;
        let n = f.n() as usize;
        let mut m = PrimeMatrix::zeros(f.p(), n, n);
        let mut basis = Elem::ONE;
        let x = f.alpha(1);
        for j in 0..n {
            for (r, d) in f.coeffs(self.eval(basis)).into_iter().enumerate() {
                m.set(r, j, d);
            }
            basis = f.mul(basis, x);
        }
        m.null_space()
            .into_iter()
            .map(|v| f.from_coeffs(&v))
            .collect()
    }

    /// Divides `z^[n] - z` on the right by `self`; returns whether the
    /// remainder vanishes, together with the quotient H when it does.
    pub fn is_right_divisor(&self, n: usize) -> Result<(bool, Option<LinPoly>)> {
        let f = &self.field;
        let target = Self::monomial(f, Elem::ONE, n).sub(&Self::identity(f))?;
        let (q, r) = target.right_divmod(self)?;
        Ok(if r.is_zero() {
            (true, Some(q))
        } else {
            (false, None)
        })
    }

    /// Parses `a^24*z[0] + a^3*z[1] + z[2]`. A bare `z` means `z[0]`, and
    /// `0` is the zero polynomial.
    pub fn parse(field: &Field, s: &str) -> Result<LinPoly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(field));
        }
        let mut terms = Vec::new();
        for t in s.split('+') {
            let t = t.trim();
            let (c, zpart) = match t.rsplit_once('*') {
                Some((c, z)) => (field.parse_elem(c)?, z.trim()),
                None => (Elem::ONE, t),
            };
            let idx = if zpart == "z" {
                0
            } else {
                zpart
                    .strip_prefix("z[")
                    .or_else(|| zpart.strip_prefix("z^["))
                    .and_then(|x| x.strip_suffix(']'))
                    .and_then(|x| x.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad term '{t}'")))?
            };
            terms.push((idx, c));
        }
        Ok(Self::from_terms(field, &terms))
    }
}

impl fmt::Display for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| format!("{}*z[{i}]", self.field.fmt_elem(c)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Which auxiliary-sequence recursion satisfied the reconstruction identity
/// `F_i = (-1)^i (B_{i-1} * F_0 - A_{i-1} * F_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxInit {
    /// `B_0 = B_{-1} = z` with `B_i = B_{i-1} * G_i + B_{i-2}`.
    Printed,
    /// `B_{-1} = z`, `B_0 = 0` with `B_i = G_i * B_{i-1} + B_{i-2}`.
    Standard,
}

/// Output of the right Euclidean chain
/// `F_{i-1} = G_i * F_i + F_{i+1}`.
#[derive(Clone, Debug)]
pub struct EuclidChain {
    /// `F_0, F_1, ..., F_{m+1}`.
    pub remainders: Vec<LinPoly>,
    /// `G_1, ..., G_m`.
    pub quotients: Vec<LinPoly>,
    a: Vec<LinPoly>,
    b: Vec<LinPoly>,
    /// Recursion that passed the reconstruction check.
    pub aux_init: AuxInit,
}

impl EuclidChain {
    /// Number of division steps m.
    pub fn steps(&self) -> usize {
        self.quotients.len()
    }

    /// `F_i` for `0 <= i <= m + 1`.
    pub fn f(&self, i: usize) -> &LinPoly {
        &self.remainders[i]
    }

    /// `A_i` for `-1 <= i <= m`.
    pub fn a(&self, i: isize) -> &LinPoly {
        &self.a[(i + 1) as usize]
    }

    /// `B_i` for `-1 <= i <= m`.
    pub fn b(&self, i: isize) -> &LinPoly {
        &self.b[(i + 1) as usize]
    }

    /// The last remainder `F_{m+1}`.
    pub fn last(&self) -> &LinPoly {
        self.remainders.last().expect("chain holds F_0 and F_1")
    }
}

fn aux_sequences(
    field: &Field,
    quotients: &[LinPoly],
    init: AuxInit,
) -> Result<(Vec<LinPoly>, Vec<LinPoly>)> {
    let z = LinPoly::identity(field);
    let zero = LinPoly::zero(field);
    let mut a = vec![zero.clone(), z.clone()];
    let mut b = match init {
        AuxInit::Printed => vec![z.clone(), z.clone()],
        AuxInit::Standard => vec![z.clone(), zero.clone()],
    };
    for g in quotients {
        let l = a.len();
        let next_a = g.symb_mul(&a[l - 1])?.add(&a[l - 2])?;
        let prod = match init {
            AuxInit::Printed => b[l - 1].symb_mul(g)?,
            AuxInit::Standard => g.symb_mul(&b[l - 1])?,
        };
        let next_b = prod.add(&b[l - 2])?;
        a.push(next_a);
        b.push(next_b);
    }
    Ok((a, b))
}

fn aux_identity_holds(rem: &[LinPoly], a: &[LinPoly], b: &[LinPoly]) -> Result<bool> {
    let (f0, f1) = (&rem[0], &rem[1]);
    for (i, fi) in rem.iter().enumerate().skip(1) {
        // index i-1 sits at position i in the offset vectors
        let mut rhs = b[i].symb_mul(f0)?.sub(&a[i].symb_mul(f1)?)?;
        if i % 2 == 1 {
            rhs = rhs.neg();
        }
        if &rhs != fi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the right Euclidean chain on `(f0, f1)` until the top index of the
/// newest remainder drops below `stop_degree` (or the remainder vanishes).
pub fn euclid_chain(f0: &LinPoly, f1: &LinPoly, stop_degree: usize) -> Result<EuclidChain> {
    f0.check(f1)?;
    let Some(d1) = f1.degree() else {
        return Err(Error::DivisionByZero);
    };
    if f0.degree().is_none_or(|d0| d0 <= d1) {
        return Err(Error::InvalidParameters(
            "Euclid chain needs deg F1 < deg F0".into(),
        ));
    }
    let field = f0.field().clone();
    let mut remainders = vec![f0.clone(), f1.clone()];
    let mut quotients = Vec::new();
    loop {
        let cur = &remainders[remainders.len() - 1];
        if cur.is_zero() || cur.degree().is_some_and(|d| d < stop_degree) {
            break;
        }
        let prev = &remainders[remainders.len() - 2];
        let (q, r) = prev.right_divmod(cur)?;
        quotients.push(q);
        remainders.push(r);
    }
    for init in [AuxInit::Printed, AuxInit::Standard] {
        let (a, b) = aux_sequences(&field, &quotients, init)?;
        if aux_identity_holds(&remainders, &a, &b)? {
            return Ok(EuclidChain {
                remainders,
                quotients,
                a,
                b,
                aux_init: init,
            });
        }
    }
    unreachable!("the standard recursion always satisfies the reconstruction identity")
}
