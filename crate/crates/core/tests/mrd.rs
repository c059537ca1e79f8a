use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::gf::{Elem, Field};
use rankcode::linpoly::{euclid_chain, LinPoly};
use rankcode::mrd::*;
use rankcode::ranklin::{rank_norm, span_codewords, ExtMatrix};
use rankcode::Error;

fn c313() -> GabidulinCode {
    GabidulinCode::with_power_basis(&Field::gf8(), 3, 1).unwrap()
}

fn c717() -> GabidulinCode {
    GabidulinCode::with_power_basis(&Field::gf256(), 7, 1).unwrap()
}

fn v(f: &Field, s: &str) -> Vec<Elem> {
    f.parse_vec(s).unwrap()
}

/// Every rank-1 vector `E b` with E a nonzero field element and b a
/// nonzero binary vector.
fn rank_one_errors(f: &Field, n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for e in f.elements().skip(1) {
        for bits in 1u32..(1 << n) {
            out.push(
                (0..n)
                    .map(|i| if bits >> i & 1 == 1 { e } else { Elem::ZERO })
                    .collect(),
            );
        }
    }
    out
}

fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

#[test]
fn parity_and_generator_of_313() {
    let c = c313();
    let f = c.field().clone();
    assert_eq!((c.n(), c.k(), c.d()), (3, 1, 3));
    assert_eq!(c.parity_matrix().to_string(), "a^0,a^1,a^2;a^0,a^2,a^4");
    assert_eq!(
        c.generator_matrix().unwrap(),
        ExtMatrix::parse(&f, "a^3,a^4,1").unwrap()
    );
    let g = c.generator_matrix().unwrap();
    assert!(g.mul(&c.parity_matrix().transpose()).unwrap().is_zero());
    assert_eq!(c.syndrome(&v(&f, "a^5,1,a^2")).unwrap(), v(&f, "a^3,a^4"));
}

#[test]
fn code_parsing_and_display() {
    let text = "# the (3,1,3) code\np=2 n=3 poly=1,1,0,1\nn=3 k=1 h=a^0,a^1,a^2\n";
    let c = GabidulinCode::parse(text).unwrap();
    assert_eq!(c, c313());
    assert_eq!(GabidulinCode::parse(&c.to_string()).unwrap(), c);
}

#[test]
fn construction_errors() {
    let f = Field::gf8();
    let dep = v(&f, "1,a,a^3");
    assert_eq!(
        GabidulinCode::new(&f, 1, dep).unwrap_err(),
        Error::LinearlyDependent
    );
    assert!(GabidulinCode::with_power_basis(&f, 4, 1).is_err());
    assert!(GabidulinCode::with_power_basis(&f, 3, 3).is_err());
}

#[test]
fn single_erasure_every_admissible_guess() {
    let c = c313();
    let f = c.field().clone();
    let y = ReceivedWord::parse(&f, "a^5,*,a^2").unwrap();
    assert_eq!(c.guess_erasures(&y).unwrap(), v(&f, "a^5,1,a^2"));
    let known = [f.alpha(5), f.alpha(2)];
    let admissible: HashSet<Elem> = f
        .elements()
        .filter(|&g| rank_norm(&f, &[known[0], known[1], g]) == 3)
        .collect();
    assert_eq!(admissible, v(&f, "1,a,a^4,a^6").into_iter().collect());
    for g in admissible {
        let out = c.decode_guessed(&y, &[g]).unwrap();
        assert_eq!(out.codeword().unwrap(), v(&f, "a^5,a^6,a^2"));
    }
    assert_eq!(
        c.decode_by_guessing(&y).unwrap().codeword().unwrap(),
        v(&f, "a^5,a^6,a^2")
    );
}

#[test]
fn two_erasures_direct_solve_and_over_capability_guess() {
    let c = c313();
    let f = c.field().clone();
    let y = ReceivedWord::parse(&f, "a^3,*,*").unwrap();
    let out = c.decode_error_erasure(&y).unwrap();
    assert_eq!(out.codeword().unwrap(), v(&f, "a^3,a^4,1"));
    // guessing both blanks turns the erasures into a rank-2 error
    assert!(c
        .decode_guessed(&y, &v(&f, "a^6,a^2"))
        .unwrap()
        .is_detected());
}

#[test]
fn rank_error_decoding_of_313_example_word() {
    let c = c313();
    let f = c.field().clone();
    let out = c.decode_errors(&v(&f, "a^3,a^6,a^2")).unwrap();
    assert_eq!(out.codeword().unwrap(), v(&f, "a^5,a^6,a^2"));
}

#[test]
fn error_erasure_decoding_717() {
    let c = c717();
    let f = c.field().clone();
    let y = ReceivedWord::parse(&f, "a^31,a^147,0,0,*,0,*").unwrap();
    let el = c.erasure_elimination(&y).unwrap();
    assert_eq!(el.z, v(&f, "a^4,a^149"));
    assert_eq!(el.syndromes, v(&f, "a^95,a^68,a^44,a^48"));

    let s = LinPoly::new(&f, el.syndromes.clone());
    let ch = euclid_chain(&LinPoly::monomial(&f, Elem::ONE, 4), &s, 2).unwrap();
    assert_eq!(
        ch.f(2),
        &LinPoly::parse(&f, "a^39*z[0] + a^136*z[1] + a^103*z[2]").unwrap()
    );
    assert_eq!(
        ch.f(3),
        &LinPoly::parse(&f, "a^72*z[0] + a^48*z[1]").unwrap()
    );

    let Decoded::Codeword { codeword, solution } = c.decode_error_erasure(&y).unwrap() else {
        panic!("decoder gave up");
    };
    assert_eq!(codeword, vec![Elem::ZERO; 7]);
    assert_eq!(solution.e, v(&f, "a^31,a^147,0,0,0,0,0"));
    assert_eq!(solution.f, vec![Elem::ZERO; 2]);
    assert_eq!(solution.m, 2);
}

#[test]
fn exhaustive_rank_one_correction_313() {
    let c = c313();
    let f = c.field().clone();
    let words = span_codewords(&c.generator_matrix().unwrap()).unwrap();
    assert_eq!(words.len(), 8);
    let errors = rank_one_errors(&f, 3);
    assert_eq!(errors.len(), 49);
    for x in &words {
        for e in &errors {
            let y = add(&f, x, e);
            assert_eq!(c.decode_errors(&y).unwrap().codeword(), Some(x.as_slice()));
        }
    }
}

#[test]
fn exhaustive_single_and_double_erasures_313() {
    let c = c313();
    let words = span_codewords(&c.generator_matrix().unwrap()).unwrap();
    for x in &words {
        for mask in 1u32..8 {
            let sym: Vec<Option<Elem>> = (0..3)
                .map(|i| if mask >> i & 1 == 1 { None } else { Some(x[i]) })
                .collect();
            let y = ReceivedWord::new(sym);
            let out = c.decode_error_erasure(&y).unwrap();
            match mask.count_ones() {
                1 | 2 => assert_eq!(out.codeword(), Some(x.as_slice())),
                _ => assert!(out.is_detected()),
            }
            if mask.count_ones() == 1 {
                assert_eq!(
                    c.decode_by_guessing(&y).unwrap().codeword(),
                    Some(x.as_slice())
                );
            }
        }
    }
}

#[test]
fn guess_choice_never_changes_the_single_erasure_result() {
    let c = c313();
    let f = c.field().clone();
    let words = span_codewords(&c.generator_matrix().unwrap()).unwrap();
    for x in &words {
        for pos in 0..3 {
            let mut sym: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
            sym[pos] = None;
            let y = ReceivedWord::new(sym);
            let known: Vec<Elem> = y.symbols().iter().flatten().copied().collect();
            let base = rank_norm(&f, &known);
            for g in f.elements().skip(1) {
                let mut span = known.clone();
                span.push(g);
                if rank_norm(&f, &span) == base {
                    continue;
                }
                let out = c.decode_guessed(&y, &[g]).unwrap();
                assert_eq!(out.codeword(), Some(x.as_slice()), "guess {g:?} at {pos}");
            }
        }
    }
}

#[test]
fn erasure_choice_count_formula_and_enumeration() {
    assert_eq!(erasure_choice_count(3, 1, 0).unwrap(), 4);
    let f = Field::gf8();
    let known = [f.alpha(5), f.alpha(2)];
    let count = f
        .elements()
        .filter(|&g| rank_norm(&f, &[known[0], known[1], g]) == 3)
        .count();
    assert_eq!(count, 4);

    let fields = [
        Field::gf2(),
        Field::gf4(),
        Field::gf8(),
        Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap(),
        Field::gf32(),
        Field::new(2, 6, &[1, 1, 0, 0, 0, 0, 1]).unwrap(),
        Field::new(2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]).unwrap(),
    ];
    for f in &fields {
        let n = f.n();
        for t in 1..=n.min(3) {
            // n - t known symbols spanning an (n - t)-dimensional space
            let known: Vec<Elem> = (0..(n - t) as i64).map(|i| f.alpha(i)).collect();
            let mut span = known.clone();
            for s in 0..t {
                let cur = rank_norm(f, &span);
                let admissible: Vec<Elem> = f
                    .elements()
                    .filter(|&g| {
                        let mut w = span.clone();
                        w.push(g);
                        rank_norm(f, &w) > cur
                    })
                    .collect();
                assert_eq!(
                    admissible.len() as u128,
                    erasure_choice_count(n, t, s).unwrap()
                );
                span.push(admissible[0]);
            }
        }
    }
    assert!(erasure_choice_count(3, 1, 1).is_err());
}

#[test]
fn deleted_parity_matrix_keeps_gabidulin_shape() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let f = Field::gf256();
    let c = GabidulinCode::with_power_basis(&f, 7, 2).unwrap();
    for _ in 0..50 {
        let t = rng.gen_range(1..c.d() - 1);
        let mut pos: Vec<usize> = (0..7).collect();
        for i in (1..7).rev() {
            pos.swap(i, rng.gen_range(0..=i));
        }
        pos.truncate(t);
        pos.sort();
        let hd = c.deleted_parity_matrix(&pos).unwrap();
        assert_eq!((hd.rows(), hd.cols()), (c.d() - 1 - t, 7 - t));
        let first: Vec<Elem> = hd.row(0).to_vec();
        assert_eq!(rank_norm(&f, &first), 7 - t);
        for j in 1..hd.rows() {
            let frob: Vec<Elem> = first.iter().map(|&x| f.frob(x, j as i64)).collect();
            assert_eq!(hd.row(j), frob.as_slice());
        }
        // reduced syndromes ignore erased values and equal the deleted-word syndrome
        let word: Vec<Elem> = (0..7)
            .map(|_| f.elem(rng.gen_range(0..256)).unwrap())
            .collect();
        let sym: Vec<Option<Elem>> = (0..7)
            .map(|i| {
                if pos.contains(&i) {
                    None
                } else {
                    Some(word[i])
                }
            })
            .collect();
        let el = c.erasure_elimination(&ReceivedWord::new(sym)).unwrap();
        let kept: Vec<Elem> = (0..7)
            .filter(|i| !pos.contains(i))
            .map(|i| word[i])
            .collect();
        assert_eq!(hd.mul_vec(&kept).unwrap(), el.syndromes);
    }
}

#[test]
fn mrd_singleton_equality_by_enumeration() {
    let fields = [
        Field::gf2(),
        Field::gf4(),
        Field::gf8(),
        Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap(),
        Field::gf32(),
        Field::new(2, 6, &[1, 1, 0, 0, 0, 0, 1]).unwrap(),
    ];
    let mut checked = 0;
    for f in &fields {
        let big_n = f.n() as usize;
        for k in 1..=2usize {
            for n in (k + 1).max(2)..=big_n {
                let c = GabidulinCode::with_power_basis(f, n, k).unwrap();
                let words = span_codewords(&c.generator_matrix().unwrap()).unwrap();
                let d = words
                    .iter()
                    .map(|w| rank_norm(f, w))
                    .filter(|&r| r > 0)
                    .min()
                    .unwrap();
                assert_eq!(d, n - k + 1, "{f} n={n} k={k}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 15);
}

#[test]
fn random_errors_within_capability_gf32() {
    let f = Field::gf32();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (k, t) in [(3usize, 1usize), (1, 2)] {
        let c = GabidulinCode::with_power_basis(&f, 5, k).unwrap();
        for _ in 0..300 {
            let msg: Vec<Elem> = (0..k)
                .map(|_| f.elem(rng.gen_range(0..32)).unwrap())
                .collect();
            let x = c.encode(&msg).unwrap();
            let e = rankcode::channel::random_rank_error(&f, 5, t, &mut rng).unwrap();
            assert_eq!(rank_norm(&f, &e), t);
            let out = c.decode_errors(&add(&f, &x, &e)).unwrap();
            assert_eq!(out.codeword(), Some(x.as_slice()));
            assert_eq!(c.message_of(&x).unwrap(), Some(msg));
        }
    }
}

#[test]
fn systematic_encoding_through_parity_equations() {
    let f = Field::gf32();
    let c = GabidulinCode::with_power_basis(&f, 5, 2).unwrap();
    let msg = v(&f, "a^3,a^17");
    let x = c.encode_systematic_via_parity(&msg, &[3, 4]).unwrap();
    assert!(c.is_codeword(&x).unwrap());
    assert_eq!(&x[3..], msg.as_slice());
}

#[test]
fn linear_rank_code_nearest_decoding() {
    let f = Field::gf4();
    let code = LinearRankCode::from_generator(ExtMatrix::parse(&f, "1,0").unwrap()).unwrap();
    assert_eq!(code.min_distance().unwrap(), 1);
    let y = v(&f, "a^2,0");
    assert_eq!(code.decode_nearest(&y).unwrap(), Some(y.clone()));
    let wrapped = RankCode::Linear(code);
    assert_eq!(wrapped.decode_message(&y).unwrap(), Some(v(&f, "a^2")));
    let g = RankCode::Gabidulin(c313());
    assert_eq!(g.min_distance().unwrap(), 3);
}
