//! Arithmetic in GF(p^n) backed by log/antilog tables.
//!
//! Elements are stored by their integer encoding: the coefficient vector
//! `(c_0, ..., c_{n-1})` of `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` read as a
//! base-p number with `c_0` least significant. All arithmetic goes through a
//! [`Field`] handle, which is cheap to clone and safe to share across threads.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ranklin::PrimeMatrix;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// A field element in integer encoding. Only meaningful together with the
/// [`Field`] that produced it.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Integer encoding (coefficient of x^0 least significant, base p).
    pub fn to_int(self) -> u32 {
        self.0
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// GF(p^n) defined by a primitive polynomial. Cloning shares the tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.poly == other.0.poly)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly: Vec<String> = self.0.poly.iter().map(|c| c.to_string()).collect();
        write!(f, "p={} n={} poly={}", self.0.p, self.0.n, poly.join(","))
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p), both
/// constant-first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Irreducibility by trial division against every monic polynomial of degree
/// at most deg/2.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let n = poly.len() - 1;
    for deg in 1..=n / 2 {
        let count = (p as u64).pow(deg as u32);
        for v in 0..count {
            let mut m = Vec::with_capacity(deg + 1);
            let mut x = v;
            for _ in 0..deg {
                m.push((x % p as u64) as u32);
                x /= p as u64;
            }
            m.push(1);
            if poly_rem(poly, &m, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^n) from a monic primitive polynomial given constant term
    /// first. Fails if p is not prime, the order exceeds 2^16, or the
    /// polynomial is not monic, irreducible and primitive.
    pub fn new(p: u32, n: u32, poly: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidPolynomial(
                "extension degree must be positive".into(),
            ));
        }
        let q64 = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER {
            return Err(Error::FieldTooLarge { p, n });
        }
        if poly.len() != n as usize + 1 {
            return Err(Error::InvalidPolynomial(format!(
                "expected {} coefficients, got {}",
                n + 1,
                poly.len()
            )));
        }
        if poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidPolynomial("coefficient out of range".into()));
        }
        if poly[n as usize] != 1 {
            return Err(Error::InvalidPolynomial("polynomial must be monic".into()));
        }
        if !is_irreducible(poly, p) {
            return Err(Error::NotIrreducible(p));
        }
        let q = q64 as u32;
        let top = q / p;
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for k in 0..(q - 1) {
            if cur == 0 || log[cur as usize] != u32::MAX {
                return Err(Error::NotPrimitive);
            }
            exp[k as usize] = cur;
            log[cur as usize] = k;
            // multiply by x and reduce by the monic polynomial
            let lead = cur / top;
            let shifted = (cur % top) * p;
            let mut next = 0u32;
            let mut place = 1u32;
            let mut s = shifted;
            for &c in poly.iter().take(n as usize) {
                let d = s % p;
                s /= p;
                next += ((d + p - (lead * c) % p) % p) * place;
                place *= p;
            }
            cur = next;
        }
        if cur != 1 {
            return Err(Error::NotPrimitive);
        }
        for k in 0..(q as usize - 1) {
            exp[k + q as usize - 1] = exp[k];
        }
        Ok(Field(Arc::new(Inner {
            p,
            n,
            q,
            poly: poly.to_vec(),
            exp,
            log,
        })))
    }

    fn fixture(p: u32, n: u32, poly: &[u32]) -> Field {
        Field::new(p, n, poly).expect("built-in field fixture is primitive")
    }

    /// GF(2) with x + 1.
    pub fn gf2() -> Field {
        Self::fixture(2, 1, &[1, 1])
    }
    /// GF(2^2) with x^2 + x + 1.
    pub fn gf4() -> Field {
        Self::fixture(2, 2, &[1, 1, 1])
    }
    /// GF(2^3) with x^3 + x + 1.
    pub fn gf8() -> Field {
        Self::fixture(2, 3, &[1, 1, 0, 1])
    }
    /// GF(2^5) with x^5 + x^2 + 1.
    pub fn gf32() -> Field {
        Self::fixture(2, 5, &[1, 0, 1, 0, 0, 1])
    }
    /// GF(2^8) with x^8 + x^6 + x^5 + x + 1.
    pub fn gf256() -> Field {
        Self::fixture(2, 8, &[1, 1, 0, 0, 0, 1, 1, 0, 1])
    }
    /// GF(3^3) with x^3 + 2x + 1.
    pub fn gf27() -> Field {
        Self::fixture(3, 3, &[1, 2, 0, 1])
    }
    /// GF(3^4) with x^4 + x + 2.
    pub fn gf81() -> Field {
        Self::fixture(3, 4, &[2, 1, 0, 0, 1])
    }

    /// Looks up a built-in field by name (`gf2`, `gf4`, `gf8`, `gf32`,
    /// `gf256`, `gf27`, `gf81`).
    pub fn named(name: &str) -> Option<Field> {
        Some(match name {
            "gf2" => Self::gf2(),
            "gf4" => Self::gf4(),
            "gf8" => Self::gf8(),
            "gf32" => Self::gf32(),
            "gf256" => Self::gf256(),
            "gf27" => Self::gf27(),
            "gf81" => Self::gf81(),
            _ => return None,
        })
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn n(&self) -> u32 {
        self.0.n
    }
    /// Number of field elements p^n.
    pub fn order(&self) -> u32 {
        self.0.q
    }
    /// Defining polynomial, constant term first.
    pub fn poly(&self) -> &[u32] {
        &self.0.poly
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Element from its integer encoding.
    pub fn elem(&self, v: u32) -> Result<Elem> {
        if v < self.0.q {
            Ok(Elem(v))
        } else {
            Err(Error::Parse(format!(
                "{v} is not an element of GF({})",
                self.0.q
            )))
        }
    }

    /// Prime-subfield element c mod p.
    pub fn scalar(&self, c: u32) -> Elem {
        Elem(c % self.0.p)
    }

    /// alpha^k for any integer k.
    pub fn alpha(&self, k: i64) -> Elem {
        let m = (self.0.q - 1) as i64;
        Elem(self.0.exp[k.rem_euclid(m) as usize])
    }

    /// Discrete log of a nonzero element, in `0..q-1`.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.0.log[a.0 as usize])
        }
    }

    /// Iterator over all elements in integer order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    /// Coefficient vector, x^0 first.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.0.n)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Elem> {
        if c.len() != self.0.n as usize || c.iter().any(|&d| d >= self.0.p) {
            return Err(Error::Dimension(format!(
                "need {} coefficients below {}",
                self.0.n, self.0.p
            )));
        }
        Ok(Elem(c.iter().rev().fold(0, |acc, &d| acc * self.0.p + d)))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let la = self.0.log[a.0 as usize] as usize;
        let lb = self.0.log[b.0 as usize] as usize;
        Elem(self.0.exp[la + lb])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match self.log(a) {
            None => Err(Error::DivisionByZero),
            Some(0) => Ok(Elem::ONE),
            Some(l) => Ok(Elem(self.0.exp[(self.0.q - 1 - l) as usize])),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e for a non-negative exponent.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        match self.log(a) {
            None => Elem::ZERO,
            Some(l) => {
                let m = (self.0.q - 1) as u64;
                Elem(self.0.exp[((l as u64 * (e % m)) % m) as usize])
            }
        }
    }

    /// Frobenius power a^[i] = a^(p^i); negative i is taken mod n.
    pub fn frob(&self, a: Elem, i: i64) -> Elem {
        let Some(l) = self.log(a) else {
            return Elem::ZERO;
        };
        let n = self.0.n as i64;
        let m = (self.0.q - 1) as u64;
        let mut e = l as u64;
        for _ in 0..i.rem_euclid(n) {
            e = (e * self.0.p as u64) % m;
        }
        Elem(self.0.exp[e as usize])
    }

    /// Absolute trace to GF(p), returned as an integer in `0..p`.
    pub fn trace(&self, a: Elem) -> u32 {
        let mut acc = Elem::ZERO;
        for j in 0..self.0.n as i64 {
            acc = self.add(acc, self.frob(a, j));
        }
        debug_assert!(acc.0 < self.0.p, "trace must land in the prime field");
        acc.0
    }

    /// Canonical text form: `0` or `a^k`.
    pub fn fmt_elem(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(k) => format!("a^{k}"),
        }
    }

    /// Parses `0`, `1`, `a`, `a^k` (k may be negative).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let t = s.trim();
        match t {
            "0" => return Ok(Elem::ZERO),
            "1" => return Ok(Elem::ONE),
            "a" => return Ok(self.alpha(1)),
            _ => {}
        }
        let k = t
            .strip_prefix("a^")
            .and_then(|k| k.trim().parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("bad field element '{t}'")))?;
        Ok(self.alpha(k))
    }

    /// Comma-separated element list.
    pub fn fmt_vec(&self, v: &[Elem]) -> String {
        v.iter()
            .map(|&a| self.fmt_elem(a))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_vec(&self, s: &str) -> Result<Vec<Elem>> {
        s.split(',').map(|x| self.parse_elem(x)).collect()
    }

    /// True iff the elements are linearly independent over GF(p).
    pub fn is_linearly_independent(&self, v: &[Elem]) -> bool {
        if v.len() > self.0.n as usize {
            return false;
        }
        crate::ranklin::expansion_matrix(self, v).rank() == v.len()
    }

    /// Dual basis under the trace form: `tr(b_i d_j) = delta_ij`.
    pub fn dual_basis(&self, b: &[Elem]) -> Result<Vec<Elem>> {
        let n = self.0.n as usize;
        if b.len() != n || !self.is_linearly_independent(b) {
            return Err(Error::LinearlyDependent);
        }
        let mut gram = PrimeMatrix::zeros(self.0.p, n, n);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, self.trace(self.mul(b[i], b[j])));
            }
        }
        let ginv = gram.inverse()?;
        Ok((0..n)
            .map(|j| {
                (0..n).fold(Elem::ZERO, |acc, k| {
                    self.add(acc, self.mul(self.scalar(ginv.get(j, k)), b[k]))
                })
            })
            .collect())
    }

    /// A trace-orthogonal (self-dual) basis of GF(2^n) over GF(2): the
    /// lexicographically first orthonormal set found by depth-first search
    /// over elements in integer order.
    pub fn trace_orthogonal_basis(&self) -> Result<Vec<Elem>> {
        if self.0.p != 2 {
            return Err(Error::InvalidParameters(
                "trace-orthogonal basis search needs characteristic 2".into(),
            ));
        }
        // tr(c^2) = tr(c) in characteristic 2
        let candidates: Vec<Elem> = self.elements().filter(|&c| self.trace(c) == 1).collect();
        let mut chosen = Vec::new();
        if self.search_orthonormal(&candidates, 0, &mut chosen) {
            Ok(chosen)
        } else {
            Err(Error::InvalidParameters(
                "no trace-orthogonal basis found".into(),
            ))
        }
    }

    fn search_orthonormal(&self, cand: &[Elem], start: usize, chosen: &mut Vec<Elem>) -> bool {
        if chosen.len() == self.0.n as usize {
            return true;
        }
        for idx in start..cand.len() {
            let c = cand[idx];
            if chosen.iter().all(|&b| self.trace(self.mul(b, c)) == 0) {
                chosen.push(c);
                if self.search_orthonormal(cand, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses `p=2 n=8 poly=1,1,0,0,0,1,1,0,1` or a built-in name.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if let Some(f) = Field::named(s) {
            return Ok(f);
        }
        let (mut p, mut n, mut poly) = (None, None, None);
        for tok in s.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{tok}'")))?;
            let num = |v: &str| {
                v.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad number '{v}'")))
            };
            match k {
                "p" => p = Some(num(v)?),
                "n" => n = Some(num(v)?),
                "poly" => poly = Some(v.split(',').map(num).collect::<Result<Vec<_>>>()?),
                _ => return Err(Error::Parse(format!("unknown field key '{k}'"))),
            }
        }
        match (p, n, poly) {
            (Some(p), Some(n), Some(poly)) => Field::new(p, n, &poly),
            _ => Err(Error::Parse("field spec needs p=, n= and poly=".into())),
        }
    }
}
