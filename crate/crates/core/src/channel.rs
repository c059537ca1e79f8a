//! Channel models and a reproducible trial runner.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`; trial
//! `i` runs on stream `i` of that generator, so reports are identical on
//! every platform and independent of trial scheduling.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blockcode::LinearBlockCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::mrd::{Decoded, GabidulinCode, ReceivedWord};
use crate::ranklin::PrimeMatrix;

/// Channel applied to a transmitted word.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelModel {
    /// Binary symmetric channel with flip probability `p_err`.
    Bsc { p_err: f64 },
    /// Binary symmetric erasure channel: flip with `p_err`, erase with
    /// `q_erase`.
    Bsec { p_err: f64, q_erase: f64 },
    /// Adds an error of rank exactly `t`.
    RankError { t: usize },
    /// Erases exactly `s` positions chosen uniformly.
    SymbolErase { s: usize },
}

impl ChannelModel {
    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| (0.0..=1.0).contains(&x);
        match *self {
            ChannelModel::Bsc { p_err } if !ok(p_err) => {}
            ChannelModel::Bsec { p_err, q_erase }
                if !ok(p_err) || !ok(q_erase) || p_err + q_erase > 1.0 => {}
            _ => return Ok(()),
        }
        Err(Error::InvalidParameters(format!(
            "bad channel probabilities in {self}"
        )))
    }

    /// Parses `bsc:P`, `bsec:P,Q`, `rank:T` or `erase:S`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad channel '{s}'"));
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<&str> = args.split(',').map(str::trim).collect();
        let f =
            |i: usize| -> Result<f64> { nums.get(i).and_then(|x| x.parse().ok()).ok_or_else(bad) };
        let u = |i: usize| -> Result<usize> {
            nums.get(i).and_then(|x| x.parse().ok()).ok_or_else(bad)
        };
        let model = match kind {
            "bsc" => ChannelModel::Bsc { p_err: f(0)? },
            "bsec" => ChannelModel::Bsec {
                p_err: f(0)?,
                q_erase: f(1)?,
            },
            "rank" => ChannelModel::RankError { t: u(0)? },
            "erase" => ChannelModel::SymbolErase { s: u(0)? },
            _ => return Err(bad()),
        };
        model.validate()?;
        Ok(model)
    }
}

impl fmt::Display for ChannelModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelModel::Bsc { p_err } => write!(f, "bsc:{p_err}"),
            ChannelModel::Bsec { p_err, q_erase } => write!(f, "bsec:{p_err},{q_erase}"),
            ChannelModel::RankError { t } => write!(f, "rank:{t}"),
            ChannelModel::SymbolErase { s } => write!(f, "erase:{s}"),
        }
    }
}

/// Generator for trial `stream` under `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_elem<R: Rng>(field: &Field, rng: &mut R) -> Elem {
    field
        .elem(rng.gen_range(0..field.order()))
        .expect("sampled below the field order")
}

/// Random error of rank exactly `t`: `E Y` with `E` a random set of `t`
/// linearly independent field elements and `Y` a random full-rank binary
/// `t x n` matrix.
pub fn random_rank_error<R: Rng>(
    field: &Field,
    n: usize,
    t: usize,
    rng: &mut R,
) -> Result<Vec<Elem>> {
    if t > n || t > field.n() as usize {
        return Err(Error::InvalidParameters(format!(
            "rank {t} exceeds min(n, N) = {}",
            n.min(field.n() as usize)
        )));
    }
    if t == 0 {
        return Ok(vec![Elem::ZERO; n]);
    }
    let mut e = Vec::with_capacity(t);
    while e.len() < t {
        e.push(random_elem(field, rng));
        if !field.is_linearly_independent(&e) {
            e.pop();
        }
    }
    let p = field.p();
    let y = loop {
        let rows: Vec<Vec<u32>> = (0..t)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let m = PrimeMatrix::from_rows(p, &rows)?;
        if m.rank() == t {
            break m;
        }
    };
    Ok((0..n)
        .map(|i| {
            (0..t).fold(Elem::ZERO, |acc, j| {
                field.add(acc, field.mul(e[j], field.scalar(y.get(j, i))))
            })
        })
        .collect())
}

/// Passes `word` through the channel, drawing from `rng`.
pub fn transmit_with<R: Rng>(
    model: &ChannelModel,
    field: &Field,
    word: &[Elem],
    rng: &mut R,
) -> Result<ReceivedWord> {
    model.validate()?;
    let binary = || {
        if field.order() == 2 {
            Ok(())
        } else {
            Err(Error::InvalidParameters(
                "binary channel needs a GF(2) word".into(),
            ))
        }
    };
    let flip = |x: Elem| field.add(x, Elem::ONE);
    Ok(match *model {
        ChannelModel::Bsc { p_err } => {
            binary()?;
            ReceivedWord::from_symbols(
                &word
                    .iter()
                    .map(|&x| if rng.gen_bool(p_err) { flip(x) } else { x })
                    .collect::<Vec<_>>(),
            )
        }
        ChannelModel::Bsec { p_err, q_erase } => {
            binary()?;
            ReceivedWord::new(
                word.iter()
                    .map(|&x| {
                        let u: f64 = rng.gen();
                        if u < q_erase {
                            None
                        } else if u < q_erase + p_err {
                            Some(flip(x))
                        } else {
                            Some(x)
                        }
                    })
                    .collect(),
            )
        }
        ChannelModel::RankError { t } => {
            let e = random_rank_error(field, word.len(), t, rng)?;
            ReceivedWord::from_symbols(
                &word
                    .iter()
                    .zip(&e)
                    .map(|(&a, &b)| field.add(a, b))
                    .collect::<Vec<_>>(),
            )
        }
        ChannelModel::SymbolErase { s } => {
            if s > word.len() {
                return Err(Error::InvalidParameters(
                    "more erasures than symbols".into(),
                ));
            }
            let mut out: Vec<Option<Elem>> = word.iter().copied().map(Some).collect();
            for i in sample(rng, word.len(), s).iter() {
                out[i] = None;
            }
            ReceivedWord::new(out)
        }
    })
}

/// Deterministic transmission: stream 0 of the generator seeded by `seed`.
pub fn channel_transmit(
    model: &ChannelModel,
    field: &Field,
    word: &[Elem],
    seed: u64,
) -> Result<ReceivedWord> {
    transmit_with(model, field, word, &mut trial_rng(seed, 0))
}

/// A code the trial runner can drive.
pub trait SimCode {
    fn field(&self) -> Field;
    fn n(&self) -> usize;
    fn k(&self) -> usize;
    fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>>;
    /// Decoded codeword, or `None` when the decoder declines.
    fn decode(&self, y: &ReceivedWord) -> Result<Option<Vec<Elem>>>;
}

impl SimCode for GabidulinCode {
    fn field(&self) -> Field {
        GabidulinCode::field(self).clone()
    }
    fn n(&self) -> usize {
        GabidulinCode::n(self)
    }
    fn k(&self) -> usize {
        GabidulinCode::k(self)
    }
    fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        GabidulinCode::encode(self, msg)
    }
    fn decode(&self, y: &ReceivedWord) -> Result<Option<Vec<Elem>>> {
        let out = if y.erasures().is_empty() {
            self.decode_errors(&y.zero_filled())?
        } else if y.erasures().len() >= self.d() {
            Decoded::Detected
        } else {
            self.decode_error_erasure(y)?
        };
        Ok(out.codeword().map(<[Elem]>::to_vec))
    }
}

impl SimCode for LinearBlockCode {
    fn field(&self) -> Field {
        Field::gf2()
    }
    fn n(&self) -> usize {
        LinearBlockCode::n(self)
    }
    fn k(&self) -> usize {
        LinearBlockCode::k(self)
    }
    fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if self.p() != 2 {
            return Err(Error::InvalidParameters(
                "simulation supports binary block codes".into(),
            ));
        }
        let m: Vec<u32> = msg.iter().map(|x| x.to_int()).collect();
        Ok(LinearBlockCode::encode(self, &m)?
            .into_iter()
            .map(|b| if b == 1 { Elem::ONE } else { Elem::ZERO })
            .collect())
    }
    fn decode(&self, y: &ReceivedWord) -> Result<Option<Vec<Elem>>> {
        let bits: Vec<Option<u32>> = y.symbols().iter().map(|s| s.map(Elem::to_int)).collect();
        let c = if bits.iter().all(Option::is_some) {
            let full: Vec<u32> = bits.iter().map(|b| b.unwrap_or(0)).collect();
            Some(LinearBlockCode::decode(self, &full)?.0)
        } else {
            self.decode_with_erasures(&bits)?
        };
        Ok(c.map(|v| {
            v.into_iter()
                .map(|b| if b == 1 { Elem::ONE } else { Elem::ZERO })
                .collect()
        }))
    }
}

/// Tally of a simulation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialReport {
    pub trials: u64,
    pub successes: u64,
    pub detections: u64,
    pub miscorrections: u64,
    /// Entry `i` counts the trials whose received word had `i` erasures.
    pub erasure_histogram: Vec<u64>,
    pub seed: u64,
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist: Vec<String> = self.erasure_histogram.iter().map(u64::to_string).collect();
        writeln!(f, "seed={}", self.seed)?;
        writeln!(f, "trials={}", self.trials)?;
        writeln!(f, "successes={}", self.successes)?;
        writeln!(f, "detections={}", self.detections)?;
        writeln!(f, "miscorrections={}", self.miscorrections)?;
        write!(f, "erasure_histogram={}", hist.join(","))
    }
}

/// Sends `trials` random messages through the channel and decodes them.
pub fn simulate<C: SimCode>(
    code: &C,
    model: &ChannelModel,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    model.validate()?;
    let field = code.field();
    let mut report = TrialReport {
        trials,
        successes: 0,
        detections: 0,
        miscorrections: 0,
        erasure_histogram: vec![0; code.n() + 1],
        seed,
    };
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let msg: Vec<Elem> = (0..code.k())
            .map(|_| random_elem(&field, &mut rng))
            .collect();
        let x = code.encode(&msg)?;
        let y = transmit_with(model, &field, &x, &mut rng)?;
        report.erasure_histogram[y.erasures().len()] += 1;
        match code.decode(&y)? {
            Some(c) if c == x => report.successes += 1,
            Some(_) => report.miscorrections += 1,
            None => report.detections += 1,
        }
    }
    Ok(report)
}
