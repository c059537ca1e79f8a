//! Worked-example catalog replayed by `rankcode paper-examples`.
//!
//! Each entry rebuilds a small published example from scratch and compares
//! the library output with the published values.

use std::collections::BTreeSet;

use anyhow::{anyhow, ensure, Result};
use rankcode::blockcode::{parse_word, LinearBlockCode};
use rankcode::concat::{interleave, CrmCode};
use rankcode::lcd::{adder_combine, adder_split, is_lcd, LcdCode};
use rankcode::linpoly::{euclid_chain, LinPoly};
use rankcode::mird::{mird_expand, mird_rank, MirdCode, Z2m};
use rankcode::mrd::{
    erasure_choice_count, Decoded, GabidulinCode, LinearRankCode, RankCode, ReceivedWord,
};
use rankcode::qcyclic::{is_invertible, poly_to_word, QCyclicCode};
use rankcode::ranklin::{
    min_rank_distance_bruteforce, rank_norm, span_codewords, ExtMatrix, PrimeMatrix,
};
use rankcode::{Elem, Field};

/// A named example check.
pub struct Example {
    pub name: &'static str,
    pub check: fn() -> Result<()>,
}

/// Outcome of one example.
pub struct Outcome {
    pub name: &'static str,
    pub result: Result<()>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

/// Runs every example in catalog order.
pub fn run_all() -> Vec<Outcome> {
    examples()
        .into_iter()
        .map(|e| Outcome {
            name: e.name,
            result: (e.check)(),
        })
        .collect()
}

pub fn examples() -> Vec<Example> {
    macro_rules! ex {
        ($name:expr, $f:ident) => {
            Example {
                name: $name,
                check: $f,
            }
        };
    }
    vec![
        ex!(
            "block: (7,3) generator times check transpose is zero",
            block_gh_zero
        ),
        ex!(
            "block: check 1110/0101 gives {0000,1010,0111,1101}",
            block_small_code
        ),
        ex!(
            "block: check 1010/1101 gives {0000,0101,1011,1110}",
            block_inner_code
        ),
        ex!(
            "block: all-ones check of length 6 gives a (6,5) code",
            block_parity_check
        ),
        ex!("block: repetition code of length 5", block_repetition),
        ex!(
            "block: 1111 has syndrome 10 and decodes to 0111",
            block_decode_1111
        ),
        ex!("block: 1000 decodes to message 00", block_decode_1000),
        ex!(
            "rank: GF(4) code generated by (1 0) has distance 1",
            rank_outer_distance
        ),
        ex!(
            "linpoly: a^29 z * G + a z^2 + a^22 z = z^4 over GF(32)",
            linpoly_product
        ),
        ex!("linpoly: z^8 divided by G over GF(32)", linpoly_divide_z8),
        ex!(
            "linpoly: message remainder modulo G over GF(32)",
            linpoly_divide_u1
        ),
        ex!("linpoly: Euclid remainders over GF(256)", linpoly_euclid),
        ex!(
            "linpoly: a^2 z + z^2 has root a^2 over GF(8)",
            linpoly_small_root
        ),
        ex!(
            "linpoly: error locator roots over GF(256)",
            linpoly_locator_roots
        ),
        ex!("linpoly: generators divide z^[n] - z", linpoly_divisors),
        ex!("mrd: (3,1,3) parity matrix", mrd_parity_313),
        ex!("mrd: [7,1,7] parity matrix over GF(256)", mrd_parity_717),
        ex!(
            "mrd: GF(81) generator annihilated by its parity matrix",
            mrd_gf81_generator
        ),
        ex!("mrd: systematic encodings of a^5 and a^3", mrd_encodings),
        ex!("mrd: syndromes of the two guessed words", mrd_syndromes),
        ex!(
            "mrd: rank-1 corrections of the guessed words",
            mrd_corrections
        ),
        ex!(
            "mrd: four admissible guesses for (a^5,*,a^2)",
            mrd_guess_set
        ),
        ex!(
            "mrd: (a^5,*,a^2) decodes to (a^5,a^6,a^2) for every guess",
            mrd_every_guess
        ),
        ex!("mrd: (a^3,*,*) decodes to (a^3,a^4,1)", mrd_two_erasures),
        ex!(
            "mrd: guessing (a^6,a^2) for (a^3,*,*) is detected",
            mrd_guess_detected
        ),
        ex!(
            "mrd: erasure choice count n=3 t=1 s=0 is 4",
            mrd_choice_count
        ),
        ex!(
            "mrd: deleted coordinates keep codewords in the deleted code",
            mrd_deleted_parity
        ),
        ex!("mrd: [7,1,7] error-erasure decoding", mrd_error_erasure_717),
        ex!("qcyclic: [5,3] code over GF(32)", qc_53_params),
        ex!(
            "qcyclic: systematic G and H of the [5,3] code",
            qc_53_matrices
        ),
        ex!("qcyclic: encodings g1 and g2", qc_53_encodings),
        ex!(
            "qcyclic: shortened words of the [5,3] code",
            qc_53_shortening
        ),
        ex!("qcyclic: [5,2,4] code and its systematic G", qc_52_matrices),
        ex!("qcyclic: inversion of f1 and f2", qc_52_inversion),
        ex!(
            "qcyclic: invertibility of [5,2] and [3,2]",
            qc_invertibility
        ),
        ex!(
            "qcyclic: [3,2] code over GF(27) has a parity collision",
            qc_32_collision
        ),
        ex!("lcd: GF(8) generator has singular Gram matrix", lcd_not_lcd),
        ex!("lcd: GF(81) generator is LCD", lcd_is_lcd),
        ex!("lcd: orthogonal projector over GF(81)", lcd_projector),
        ex!("lcd: adder output", lcd_adder_sum),
        ex!("lcd: adder split", lcd_adder_split),
        ex!("crm: CC matrices for messages 1 and a^2", crm_rows),
        ex!("crm: CC code has minimum distance 1", crm_distance),
        ex!("crm: received matrix decodes to a^2", crm_decode),
        ex!("concat: 5/6/5 interleave has length 16", concat_interleave),
        ex!("mird: binary expansion of (3,5,2) over Z6", mird_expansion),
        ex!("mird: rank of (3,5,2) over Z6 is 3", mird_rank_352),
        ex!(
            "mird: Z6 decoding of (3,2,1) is rank-optimal",
            mird_worked_decode
        ),
    ]
}

fn bits(s: &str) -> Result<PrimeMatrix> {
    Ok(PrimeMatrix::parse(2, s)?)
}

fn bcode(h: &str) -> Result<LinearBlockCode> {
    Ok(LinearBlockCode::from_parity(bits(h)?)?)
}

fn word_set(words: &[&str]) -> Result<BTreeSet<Vec<u32>>> {
    words.iter().map(|w| Ok(parse_word(2, w)?)).collect()
}

fn code_set(c: &LinearBlockCode) -> Result<BTreeSet<Vec<u32>>> {
    Ok(c.codewords()?.into_iter().collect())
}

fn vecf(f: &Field, s: &str) -> Result<Vec<Elem>> {
    Ok(f.parse_vec(s)?)
}

fn block_gh_zero() -> Result<()> {
    let g = bits("1001010;0100111;0011110")?;
    let h = bits("1011000;0110100;1110010;0100001")?;
    ensure!(g.mul(&h.transpose())?.is_zero());
    ensure!(bcode("1011000;0110100;1110010;0100001")?.generator() == &g);
    Ok(())
}

fn block_small_code() -> Result<()> {
    ensure!(code_set(&bcode("1110;0101")?)? == word_set(&["0000", "1010", "0111", "1101"])?);
    Ok(())
}

fn block_inner_code() -> Result<()> {
    ensure!(code_set(&bcode("1010;1101")?)? == word_set(&["0000", "0101", "1011", "1110"])?);
    Ok(())
}

fn block_parity_check() -> Result<()> {
    let c = LinearBlockCode::parity_check(6)?;
    ensure!((c.n(), c.k()) == (6, 5));
    ensure!(c.codewords()?.len() == 32);
    ensure!(c.parity() == &bits("111111")?);
    Ok(())
}

fn block_repetition() -> Result<()> {
    let c = LinearBlockCode::repetition(5)?;
    ensure!(code_set(&c)? == word_set(&["00000", "11111"])?);
    Ok(())
}

fn block_decode_1111() -> Result<()> {
    let c = bcode("1110;0101")?;
    let y = parse_word(2, "1111")?;
    ensure!(c.syndrome(&y)? == vec![1, 0]);
    let sa = c.standard_array()?;
    ensure!(sa.leader(&[1, 0]) == Some(&[1, 0, 0, 0][..]));
    let (x, m) = c.decode(&y)?;
    ensure!(x == parse_word(2, "0111")? && m == vec![0, 1]);
    Ok(())
}

fn block_decode_1000() -> Result<()> {
    let (x, m) = bcode("1010;1101")?.decode(&[1, 0, 0, 0])?;
    ensure!(x == vec![0; 4] && m == vec![0, 0]);
    Ok(())
}

fn rank_outer_distance() -> Result<()> {
    let f = Field::gf4();
    let g = ExtMatrix::parse(&f, "1,0")?;
    ensure!(min_rank_distance_bruteforce(&f, span_codewords(&g)?)? == 1);
    Ok(())
}

fn g53(f: &Field) -> LinPoly {
    LinPoly::from_log_terms(f, &[(0, 24), (1, 3), (2, 2)])
}

fn linpoly_product() -> Result<()> {
    let f = Field::gf32();
    let lhs = LinPoly::from_log_terms(&f, &[(0, 29)])
        .symb_mul(&g53(&f))?
        .add(&LinPoly::from_log_terms(&f, &[(0, 22), (1, 1)]))?;
    ensure!(lhs == LinPoly::monomial(&f, Elem::ONE, 2), "got {lhs}");
    Ok(())
}

fn linpoly_divide_z8() -> Result<()> {
    let f = Field::gf32();
    let (q, r) = LinPoly::monomial(&f, Elem::ONE, 3).right_divmod(&g53(&f))?;
    ensure!(
        q == LinPoly::from_log_terms(&f, &[(0, 0), (1, 27)]),
        "Q = {q}"
    );
    ensure!(
        r == LinPoly::from_log_terms(&f, &[(0, 24), (1, 7)]),
        "R = {r}"
    );
    Ok(())
}

fn linpoly_divide_u1() -> Result<()> {
    let f = Field::gf32();
    let u1 = LinPoly::from_log_terms(&f, &[(2, 23), (3, 0), (4, 5)]);
    let (_, r) = u1.right_divmod(&g53(&f))?;
    ensure!(
        r == LinPoly::from_log_terms(&f, &[(0, 30), (1, 17)]),
        "R = {r}"
    );
    Ok(())
}

fn linpoly_euclid() -> Result<()> {
    let f = Field::gf256();
    let f0 = LinPoly::monomial(&f, Elem::ONE, 4);
    let f1 = LinPoly::from_log_terms(&f, &[(0, 95), (1, 68), (2, 44), (3, 48)]);
    let ch = euclid_chain(&f0, &f1, 2)?;
    ensure!(
        ch.f(2) == &LinPoly::from_log_terms(&f, &[(0, 39), (1, 136), (2, 103)]),
        "F2 = {}",
        ch.f(2)
    );
    ensure!(
        ch.f(3) == &LinPoly::from_log_terms(&f, &[(0, 72), (1, 48)]),
        "F3 = {}",
        ch.f(3)
    );
    Ok(())
}

/// Every root of a linearized polynomial: the GF(p)-span of its root basis.
fn root_set(poly: &LinPoly) -> Result<BTreeSet<Elem>> {
    let f = poly.field();
    let mut roots = BTreeSet::from([Elem::ZERO]);
    for b in poly.root_space()? {
        let layer: Vec<Elem> = roots.iter().copied().collect();
        for c in 1..f.p() {
            let step = f.mul(f.scalar(c), b);
            roots.extend(layer.iter().map(|&r| f.add(r, step)));
        }
    }
    Ok(roots)
}

fn linpoly_small_root() -> Result<()> {
    let f = Field::gf8();
    let delta = LinPoly::from_log_terms(&f, &[(0, 2), (1, 0)]);
    ensure!(delta.eval(f.alpha(2)).is_zero());
    let roots = root_set(&delta)?;
    ensure!(
        roots
            == [Elem::ZERO, f.alpha(2)]
                .into_iter()
                .collect::<BTreeSet<_>>()
    );
    Ok(())
}

fn linpoly_locator_roots() -> Result<()> {
    let f = Field::gf256();
    let delta = LinPoly::from_log_terms(&f, &[(0, 232), (1, 160), (2, 160)]);
    let roots = root_set(&delta)?;
    let want: BTreeSet<Elem> = [Elem::ZERO, f.alpha(31), f.alpha(147), f.alpha(149)]
        .into_iter()
        .collect();
    ensure!(
        roots == want,
        "roots {:?}",
        roots.iter().map(|&r| f.fmt_elem(r)).collect::<Vec<_>>()
    );
    Ok(())
}

fn linpoly_divisors() -> Result<()> {
    let f = Field::gf32();
    ensure!(g53(&f).is_right_divisor(5)?.0);
    let f8 = Field::gf8();
    ensure!(
        LinPoly::from_log_terms(&f8, &[(0, 1), (1, 0)])
            .is_right_divisor(3)?
            .0
    );
    Ok(())
}

fn c313() -> Result<GabidulinCode> {
    Ok(GabidulinCode::with_power_basis(&Field::gf8(), 3, 1)?)
}

fn mrd_parity_313() -> Result<()> {
    let c = c313()?;
    ensure!(c.parity_matrix() == ExtMatrix::parse(c.field(), "1,a,a^2;1,a^2,a^4")?);
    Ok(())
}

fn mrd_parity_717() -> Result<()> {
    let f = Field::gf256();
    let c = GabidulinCode::with_power_basis(&f, 7, 1)?;
    let h = c.parity_matrix();
    ensure!((h.rows(), h.cols()) == (6, 7));
    for j in 0..6 {
        for i in 0..7 {
            ensure!(h.get(j, i) == f.alpha((i as i64) << j));
        }
    }
    Ok(())
}

fn mrd_gf81_generator() -> Result<()> {
    let f = Field::gf81();
    let g = ExtMatrix::parse(&f, "a^4,a^65,1")?;
    let h = ExtMatrix::parse(&f, "1,a,a^2;1,a^3,a^6")?;
    ensure!(g.mul(&h.transpose())?.is_zero());
    Ok(())
}

fn mrd_encodings() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    ensure!(c.encode_systematic_via_parity(&[f.alpha(5)], &[0])? == vecf(f, "a^5,a^6,a^2")?);
    ensure!(c.encode_systematic_via_parity(&[f.alpha(3)], &[0])? == vecf(f, "a^3,a^4,1")?);
    Ok(())
}

fn mrd_syndromes() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    ensure!(c.syndrome(&vecf(f, "a^5,1,a^2")?)? == vecf(f, "a^3,a^4")?);
    ensure!(c.syndrome(&vecf(f, "a^5,a,a^2")?)? == vecf(f, "a^6,1")?);
    Ok(())
}

fn mrd_corrections() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    for (y, e) in [("a^5,1,a^2", "0,a^2,0"), ("a^5,a,a^2", "0,a^5,0")] {
        let Decoded::Codeword { codeword, solution } = c.decode_errors(&vecf(f, y)?)? else {
            return Err(anyhow!("{y} was not corrected"));
        };
        ensure!(codeword == vecf(f, "a^5,a^6,a^2")?);
        ensure!(solution.e == vecf(f, e)?, "e = {}", f.fmt_vec(&solution.e));
    }
    Ok(())
}

fn mrd_guess_set() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    let known = [f.alpha(5), f.alpha(2)];
    let admissible: BTreeSet<Elem> = f
        .elements()
        .filter(|&g| rank_norm(f, &[known[0], known[1], g]) == 3)
        .collect();
    ensure!(admissible == vecf(f, "1,a,a^4,a^6")?.into_iter().collect());
    let y = ReceivedWord::parse(f, "a^5,*,a^2")?;
    ensure!(c.guess_erasures(&y)? == vecf(f, "a^5,1,a^2")?);
    Ok(())
}

fn mrd_every_guess() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    let y = ReceivedWord::parse(f, "a^5,*,a^2")?;
    let want = vecf(f, "a^5,a^6,a^2")?;
    for g in vecf(f, "1,a,a^4,a^6")? {
        ensure!(c.decode_guessed(&y, &[g])?.codeword() == Some(want.as_slice()));
    }
    ensure!(c.decode_by_guessing(&y)?.codeword() == Some(want.as_slice()));
    Ok(())
}

fn mrd_two_erasures() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    let y = ReceivedWord::parse(f, "a^3,*,*")?;
    ensure!(c.decode_error_erasure(&y)?.codeword() == Some(vecf(f, "a^3,a^4,1")?.as_slice()));
    Ok(())
}

fn mrd_guess_detected() -> Result<()> {
    let c = c313()?;
    let f = c.field();
    let y = ReceivedWord::parse(f, "a^3,*,*")?;
    ensure!(c.decode_guessed(&y, &vecf(f, "a^6,a^2")?)?.is_detected());
    Ok(())
}

fn mrd_choice_count() -> Result<()> {
    ensure!(erasure_choice_count(3, 1, 0)? == 4);
    Ok(())
}

fn mrd_deleted_parity() -> Result<()> {
    let f = Field::gf256();
    let c = GabidulinCode::with_power_basis(&f, 7, 1)?;
    let positions = [4usize, 6];
    let hd = c.deleted_parity_matrix(&positions)?;
    for a in f.elements() {
        let x = c.encode(&[a])?;
        let el = c.erasure_elimination(&ReceivedWord::new(
            x.iter()
                .enumerate()
                .map(|(i, &v)| (!positions.contains(&i)).then_some(v))
                .collect(),
        ))?;
        let kept: Vec<Elem> = (0..7)
            .filter(|i| !positions.contains(i))
            .map(|i| x[i])
            .collect();
        ensure!(hd.mul_vec(&kept)?.iter().all(|s| s.is_zero()));
        ensure!(el.syndromes.iter().all(|s| s.is_zero()));
    }
    Ok(())
}

fn mrd_error_erasure_717() -> Result<()> {
    let f = Field::gf256();
    let c = GabidulinCode::with_power_basis(&f, 7, 1)?;
    let y = ReceivedWord::parse(&f, "a^31,a^147,0,0,*,0,*")?;
    let Decoded::Codeword { codeword, solution } = c.decode_error_erasure(&y)? else {
        return Err(anyhow!("decoder declined"));
    };
    ensure!(codeword == vec![Elem::ZERO; 7]);
    ensure!(solution.e == vecf(&f, "a^31,a^147,0,0,0,0,0")?);
    ensure!(solution.f == vec![Elem::ZERO; 2]);
    Ok(())
}

fn code53() -> Result<QCyclicCode> {
    let f = Field::gf32();
    Ok(QCyclicCode::new(&f, g53(&f))?)
}

fn code52() -> Result<QCyclicCode> {
    let f = Field::gf32();
    Ok(QCyclicCode::new(
        &f,
        LinPoly::from_log_terms(&f, &[(0, 13), (1, 17), (2, 10), (3, 0)]),
    )?)
}

fn qc_53_params() -> Result<()> {
    let c = code53()?;
    ensure!((c.n(), c.k()) == (5, 3));
    Ok(())
}

fn qc_53_matrices() -> Result<()> {
    let c = code53()?;
    let f = c.field();
    let (g, h) = c.systematic_matrices()?;
    ensure!(g == ExtMatrix::parse(f, "a^22,a,1,0,0;a^24,a^7,0,1,0;a^5,a^20,0,0,1")?);
    ensure!(h == ExtMatrix::parse(f, "1,0,a^22,a^24,a^5;0,1,a,a^7,a^20")?);
    Ok(())
}

fn qc_53_encodings() -> Result<()> {
    let c = code53()?;
    let f = c.field();
    let (_, h) = c.systematic_matrices()?;
    for (msg, want) in [
        ("a^23,1,a^5", "a^30,a^17,a^23,1,a^5"),
        ("a^9,a^21,0", "a^13,a^11,a^9,a^21,0"),
    ] {
        let u = c.message_poly(&vecf(f, msg)?)?;
        let g = poly_to_word(&c.systematic_encode(&u)?, 5);
        ensure!(g == vecf(f, want)?, "got {}", f.fmt_vec(&g));
        ensure!(h.mul_vec(&g)?.iter().all(|s| s.is_zero()));
    }
    Ok(())
}

fn qc_53_shortening() -> Result<()> {
    let c = code53()?;
    let f = c.field();
    let word = vecf(f, "a^24,a^3,a^2,0,0")?;
    let s1 = c.shorten(1)?;
    let w1 = s1.shorten_word(&word)?;
    ensure!((s1.n(), s1.k()) == (4, 2) && w1 == vecf(f, "a^24,a^3,a^2,0")? && s1.is_codeword(&w1)?);
    let s2 = c.shorten(2)?;
    let w2 = s2.shorten_word(&word)?;
    ensure!((s2.n(), s2.k()) == (3, 1) && w2 == vecf(f, "a^24,a^3,a^2")? && s2.is_codeword(&w2)?);
    Ok(())
}

fn qc_52_matrices() -> Result<()> {
    let c = code52()?;
    ensure!((c.n(), c.k()) == (5, 2));
    let (g, _) = c.systematic_matrices()?;
    ensure!(g == ExtMatrix::parse(c.field(), "a^13,a^17,a^10,1,0;a^2,a^14,a^9,0,1")?);
    let words = span_codewords(&g)?;
    ensure!(min_rank_distance_bruteforce(c.field(), words)? == 4);
    Ok(())
}

fn qc_52_inversion() -> Result<()> {
    let c = code52()?;
    let f = c.field();
    let f1 = LinPoly::from_log_terms(f, &[(0, 25), (1, 24), (2, 14)]);
    ensure!(c.invert(&f1, None)? == LinPoly::from_log_terms(f, &[(3, 1), (4, 0)]));
    let f2 = LinPoly::from_log_terms(f, &[(0, 13), (1, 17), (2, 10)]);
    ensure!(c.invert(&f2, None)? == LinPoly::monomial(f, Elem::ONE, 3));
    Ok(())
}

fn qc_invertibility() -> Result<()> {
    ensure!(is_invertible(5, 2, None));
    ensure!(!is_invertible(3, 2, None));
    Ok(())
}

fn qc_32_collision() -> Result<()> {
    let f = Field::gf27();
    let c = QCyclicCode::new(&f, LinPoly::from_log_terms(&f, &[(0, 21), (1, 0)]))?;
    let zero = c.message_poly(&[Elem::ZERO, Elem::ZERO])?;
    let other = c.message_poly(&vecf(&f, "a^7,a^22")?)?;
    ensure!(c.parity(&zero)? == c.parity(&other)?);
    ensure!(c.invert(&c.parity(&other)?, None).is_err());
    Ok(())
}

fn lcd_not_lcd() -> Result<()> {
    let f = Field::gf8();
    let g = ExtMatrix::parse(&f, "a,1,0;0,a^2,1")?;
    ensure!(!is_lcd(&g)?);
    ensure!(g.mul(&g.transpose())?.det()?.is_zero());
    Ok(())
}

fn ternary_lcd() -> Result<LcdCode> {
    let f = Field::gf81();
    Ok(LcdCode::new(ExtMatrix::parse(&f, "a^4,a^65,1")?)?)
}

fn lcd_is_lcd() -> Result<()> {
    let f = Field::gf81();
    ensure!(is_lcd(&ExtMatrix::parse(&f, "a^4,a^65,1")?)?);
    Ok(())
}

fn lcd_projector() -> Result<()> {
    let c = ternary_lcd()?;
    let want = ExtMatrix::parse(c.field(), "a^41,a^22,a^37;a^22,a^3,a^18;a^37,a^18,a^33")?;
    ensure!(c.projector() == &want, "got {}", c.projector());
    Ok(())
}

fn lcd_adder_sum() -> Result<()> {
    let f = Field::gf81();
    let r = adder_combine(&f, &vecf(&f, "1,a^61,a^76")?, &vecf(&f, "a^2,a^5,a^8")?)?;
    ensure!(r == vecf(&f, "a^24,a^78,a^35")?);
    Ok(())
}

fn lcd_adder_split() -> Result<()> {
    let c = ternary_lcd()?;
    let f = c.field();
    let (g1, g2) = adder_split(&vecf(f, "a^24,a^78,a^35")?, &c)?;
    ensure!(g1 == vecf(f, "1,a^61,a^76")? && g2 == vecf(f, "a^2,a^5,a^8")?);
    Ok(())
}

fn small_crm() -> Result<CrmCode> {
    let f = Field::gf4();
    let outer = LinearRankCode::from_generator(ExtMatrix::parse(&f, "1,0")?)?;
    Ok(CrmCode::new(RankCode::Linear(outer), bcode("1010;1101")?)?)
}

fn crm_rows() -> Result<()> {
    let c = small_crm()?;
    let f = c.field().clone();
    ensure!(c.encode(&[Elem::ONE])? == bits("0101;0000")?);
    ensure!(c.encode(&[f.alpha(2)])? == bits("1110;0000")?);
    Ok(())
}

fn crm_distance() -> Result<()> {
    ensure!(small_crm()?.min_distance()? == 1);
    Ok(())
}

fn crm_decode() -> Result<()> {
    let c = small_crm()?;
    let f = c.field().clone();
    ensure!(c.decode(&bits("1110;1000")?)? == Some(vec![f.alpha(2)]));
    Ok(())
}

fn concat_interleave() -> Result<()> {
    let streams: Vec<Vec<char>> = ["abcde", "FGHIJK", "vwxyz"]
        .iter()
        .map(|s| s.chars().collect())
        .collect();
    let (word, _) = interleave(&streams);
    ensure!(word.iter().collect::<String>() == "aFvbGwcHxdIyeJzK");
    Ok(())
}

fn mird_expansion() -> Result<()> {
    let ring = Z2m::new(6)?;
    ensure!(mird_expand(&ring, &[3, 5, 2]) == bits("010;101;110")?);
    Ok(())
}

fn mird_rank_352() -> Result<()> {
    ensure!(mird_rank(&Z2m::new(6)?, &[3, 5, 2]) == 3);
    Ok(())
}

/// The decoder's answer for (3,2,1) must be a nearest codeword in integer
/// rank distance and the only nearest one with a single unit magnitude.
fn mird_worked_decode() -> Result<()> {
    let ring = Z2m::new(6)?;
    let code = MirdCode::new(&ring, vec![1, 4, 2], 3)?;
    let y = [3u64, 2, 1];
    let got = code.decode(&y)?;
    let (Some(c), Some(e)) = (got.codeword(), got.error()) else {
        return Err(anyhow!("decoder declined"));
    };
    let diff = |c: &[u64]| -> Vec<u64> { y.iter().zip(c).map(|(&a, &b)| ring.sub(a, b)).collect() };
    let words = code.codewords()?;
    let best = words
        .iter()
        .map(|w| mird_rank(&ring, &diff(w)))
        .min()
        .unwrap_or(usize::MAX);
    ensure!(code.is_codeword(c)? && mird_rank(&ring, e) == best);
    let unit_form: Vec<Vec<u64>> = words
        .iter()
        .map(|w| diff(w))
        .filter(|d| mird_rank(&ring, d) == best)
        .filter(|d| {
            let vals: BTreeSet<u64> = d.iter().copied().filter(|&v| v != 0).collect();
            vals.len() == 1 && vals.iter().all(|&v| ring.is_unit(v))
        })
        .collect();
    ensure!(unit_form == vec![e.to_vec()]);
    Ok(())
}
