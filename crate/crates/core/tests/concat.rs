use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::blockcode::{hamming_weight, LinearBlockCode};
use rankcode::concat::*;
use rankcode::gf::{Elem, Field};
use rankcode::mrd::{GabidulinCode, LinearRankCode, RankCode};
use rankcode::ranklin::{ExtMatrix, PrimeMatrix};
use rankcode::Error;

fn inner_4_2() -> LinearBlockCode {
    LinearBlockCode::from_parity(PrimeMatrix::parse(2, "1010;1101").unwrap()).unwrap()
}

fn inner_7_3() -> LinearBlockCode {
    LinearBlockCode::from_parity(PrimeMatrix::parse(2, "1011000;0110100;1110010;0100001").unwrap())
        .unwrap()
}

fn inner_6_3() -> LinearBlockCode {
    LinearBlockCode::from_parity(PrimeMatrix::parse(2, "110100;011010;101001").unwrap()).unwrap()
}

fn small_crm() -> CrmCode {
    let f = Field::gf4();
    let outer = LinearRankCode::from_generator(ExtMatrix::parse(&f, "1,0").unwrap()).unwrap();
    CrmCode::new(RankCode::Linear(outer), inner_4_2()).unwrap()
}

fn gabidulin_crm(inner: LinearBlockCode) -> CrmCode {
    let f = Field::gf8();
    let outer = GabidulinCode::new(&f, 1, f.parse_vec("1,a,a^2").unwrap()).unwrap();
    CrmCode::new(RankCode::Gabidulin(outer), inner).unwrap()
}

fn mat(s: &str) -> PrimeMatrix {
    PrimeMatrix::parse(2, s).unwrap()
}

#[test]
fn symbol_map_on_gf4() {
    let c = small_crm();
    let f = c.field().clone();
    let expect = [
        (Elem::ZERO, [0, 0]),
        (Elem::ONE, [0, 1]),
        (f.alpha(1), [1, 0]),
        (f.alpha(2), [1, 1]),
    ];
    for (a, bits) in expect {
        assert_eq!(c.symbol_bits(a), bits.to_vec());
        assert_eq!(c.bits_symbol(&bits).unwrap(), a);
    }
}

#[test]
fn cc_matrix_set_and_distance() {
    let c = small_crm();
    let got: BTreeSet<String> = c
        .codewords()
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    let want: BTreeSet<String> = ["0000;0000", "0101;0000", "1011;0000", "1110;0000"]
        .iter()
        .map(|s| mat(s).to_string())
        .collect();
    assert_eq!(got, want);
    assert_eq!(c.min_distance().unwrap(), 1);
    assert_eq!(c.outer().min_distance().unwrap(), 1);
}

#[test]
fn sequential_decoding_of_the_small_code() {
    let c = small_crm();
    let f = c.field().clone();
    let y = mat("1110;1000");
    assert_eq!(c.inner().decode(&[1, 1, 1, 0]).unwrap().1, vec![1, 1]);
    assert_eq!(c.inner().decode(&[1, 0, 0, 0]).unwrap().1, vec![0, 0]);
    assert_eq!(c.decode(&y).unwrap(), Some(vec![f.alpha(2)]));
    assert!(c.decode(&mat("111;100")).is_err());
}

#[test]
fn minimum_distance_ignores_the_inner_code() {
    for inner in [inner_7_3(), inner_6_3()] {
        let c = gabidulin_crm(inner);
        assert_eq!(c.min_distance().unwrap(), 3);
        for x in c.codewords().unwrap() {
            assert!(x.rank() == 0 || x.rank() >= 3);
        }
    }
    let f = Field::gf4();
    let outer = GabidulinCode::new(&f, 1, f.parse_vec("1,a").unwrap()).unwrap();
    let c = CrmCode::new(RankCode::Gabidulin(outer), inner_4_2()).unwrap();
    assert_eq!(c.min_distance().unwrap(), 2);
}

#[test]
fn cc_rank_equals_outer_rank() {
    let c = gabidulin_crm(inner_6_3());
    let f = c.field().clone();
    for a in f.elements() {
        let word = c.outer().encode(&[a]).unwrap();
        let x = c.encode(&[a]).unwrap();
        assert_eq!(x.rank(), rankcode::ranklin::rank_norm(&f, &word));
        assert_eq!(c.expand(&word).unwrap().rank(), x.rank());
    }
}

#[test]
fn low_rank_received_matrices_are_flagged() {
    let c = gabidulin_crm(inner_7_3());
    assert!(c.detect(&mat("1001010;0000000;0000000")).unwrap());
    assert!(!c.detect(&mat("0000000;0000000;0000000")).unwrap());
    let x = c.encode(&[c.field().alpha(3)]).unwrap();
    assert!(!c.detect(&x).unwrap());
}

#[test]
fn single_bit_flips_are_corrected() {
    let c = gabidulin_crm(inner_7_3());
    let f = c.field().clone();
    for a in f.elements() {
        let x = c.encode(&[a]).unwrap();
        assert_eq!(c.decode(&x).unwrap(), Some(vec![a]));
        for r in 0..x.rows() {
            for col in 0..x.cols() {
                let mut y = x.clone();
                y.set(r, col, 1 - y.get(r, col));
                assert_eq!(
                    c.decode(&y).unwrap(),
                    Some(vec![a]),
                    "a={a:?} r={r} c={col}"
                );
            }
        }
        // one flip in every row at once
        let mut y = x.clone();
        for r in 0..x.rows() {
            y.set(r, (2 * r + 1) % 7, 1 - y.get(r, (2 * r + 1) % 7));
        }
        assert_eq!(c.decode(&y).unwrap(), Some(vec![a]));
    }
}

#[test]
fn cr_metric_axioms() {
    let c = gabidulin_crm(inner_6_3());
    let words = c.codewords().unwrap();
    for x in &words {
        for y in &words {
            let d = cr_distance(x, y).unwrap();
            assert_eq!(d == 0, x == y);
            assert_eq!(d, cr_distance(y, x).unwrap());
            for z in words.iter().step_by(3) {
                assert!(d <= cr_distance(x, z).unwrap() + cr_distance(z, y).unwrap());
            }
        }
    }
}

#[test]
fn construction_checks() {
    let f = Field::gf8();
    let outer = GabidulinCode::new(&f, 1, f.parse_vec("1,a,a^2").unwrap()).unwrap();
    assert!(matches!(
        CrmCode::new(RankCode::Gabidulin(outer), inner_4_2()),
        Err(Error::InvalidParameters(_))
    ));
}

#[test]
fn super_code_blocks() {
    let codes = vec![
        inner_6_3(),
        inner_4_2(),
        inner_7_3(),
        LinearBlockCode::repetition(5).unwrap(),
    ];
    let s = SuperCode::new(codes.clone()).unwrap();
    assert_eq!((s.n(), s.k()), (22, 9));
    let msgs = vec![vec![1, 0, 1], vec![1, 1], vec![0, 1, 1], vec![1]];
    let x = s.encode(&msgs).unwrap();
    let mut start = 0;
    for (c, m) in codes.iter().zip(&msgs) {
        assert_eq!(&x[start..start + c.n()], c.encode(m).unwrap().as_slice());
        start += c.n();
    }
    let zero = vec![0u32; 22];
    assert_eq!(s.distance(&x, &zero).unwrap(), hamming_weight(&x));
    let (blockwise, pooled) = s.capability_report().unwrap();
    assert!(blockwise <= pooled);
    let ds: Vec<usize> = codes.iter().map(|c| c.min_distance().unwrap()).collect();
    assert_eq!(blockwise, ds.iter().map(|d| (d - 1) / 2).sum::<usize>());
    assert!(s.encode(&msgs[..2]).is_err());
    assert!(SuperCode::new(vec![]).is_err());
}

#[test]
fn three_stream_interleave() {
    let a: Vec<char> = "abcde".chars().collect();
    let b: Vec<char> = "FGHIJK".chars().collect();
    let c: Vec<char> = "vwxyz".chars().collect();
    let (word, layout) = interleave(&[a.clone(), b.clone(), c.clone()]);
    assert_eq!(word.len(), 16);
    assert_eq!(word.iter().collect::<String>(), "aFvbGwcHxdIyeJzK");
    assert_eq!(
        deinterleave(&word, &layout).unwrap(),
        vec![a.clone(), b.clone(), c.clone()]
    );

    let units = split_with_blanks(&word, &layout).unwrap();
    assert_eq!(units.len(), 3);
    assert!(units.iter().all(|u| u.len() == 16));
    assert_eq!(units[1][0], Slot::Blank);
    assert_eq!(units[1][1], Slot::Symbol('F'));
    assert_eq!(units[1][15], Slot::Symbol('K'));
    assert_eq!(strip_blanks(&units[0]), a);
    assert_eq!(strip_blanks(&units[1]), b);
    assert_eq!(strip_blanks(&units[2]), c);
    assert_eq!(merge_units(&units).unwrap(), word);
    assert!(deinterleave(&word[..15], &layout).is_err());

    let mut clash = units.clone();
    clash[0][1] = Slot::Symbol('q');
    assert!(merge_units(&clash).is_err());
}

proptest! {
    #[test]
    fn interleave_round_trips(lens in proptest::collection::vec(0usize..8, 1..5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let streams: Vec<Vec<u32>> = lens.iter().map(|&l| (0..l).map(|_| rng.gen_range(0..2)).collect()).collect();
        let (word, layout) = interleave(&streams);
        prop_assert_eq!(word.len(), lens.iter().sum::<usize>());
        prop_assert_eq!(&deinterleave(&word, &layout).unwrap(), &streams);
        let units = split_with_blanks(&word, &layout).unwrap();
        for (u, s) in units.iter().zip(&streams) {
            prop_assert_eq!(&strip_blanks(u), s);
        }
        if !word.is_empty() {
            prop_assert_eq!(merge_units(&units).unwrap(), word);
        }
    }

    #[test]
    fn crm_round_trip(a in 0u32..8) {
        let c = gabidulin_crm(inner_6_3());
        let a = c.field().elem(a).unwrap();
        let x = c.encode(&[a]).unwrap();
        prop_assert!(!c.detect(&x).unwrap());
        prop_assert_eq!(c.decode(&x).unwrap(), Some(vec![a]));
    }
}
