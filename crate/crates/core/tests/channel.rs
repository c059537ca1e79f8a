use proptest::prelude::*;
use rankcode::blockcode::LinearBlockCode;
use rankcode::channel::*;
use rankcode::gf::{Elem, Field};
use rankcode::mrd::GabidulinCode;
use rankcode::ranklin::{rank_norm, PrimeMatrix};

fn c313() -> GabidulinCode {
    let f = Field::gf8();
    GabidulinCode::new(&f, 1, f.parse_vec("1,a,a^2").unwrap()).unwrap()
}

fn hamming_7_3() -> LinearBlockCode {
    LinearBlockCode::from_parity(PrimeMatrix::parse(2, "1011000;0110100;1110010;0100001").unwrap())
        .unwrap()
}

fn zeros(n: usize) -> Vec<Elem> {
    vec![Elem::ZERO; n]
}

#[test]
fn noiseless_and_fully_erasing_channels() {
    let f = Field::gf2();
    let word: Vec<Elem> = [1, 0, 1, 1, 0].iter().map(|&b| f.scalar(b)).collect();
    let y = channel_transmit(
        &ChannelModel::Bsec {
            p_err: 0.0,
            q_erase: 0.0,
        },
        &f,
        &word,
        5,
    )
    .unwrap();
    assert_eq!(
        y.symbols(),
        word.iter()
            .copied()
            .map(Some)
            .collect::<Vec<_>>()
            .as_slice()
    );
    let y = channel_transmit(&ChannelModel::Bsc { p_err: 0.0 }, &f, &word, 5).unwrap();
    assert!(y.erasures().is_empty());
    let y = channel_transmit(
        &ChannelModel::Bsec {
            p_err: 0.0,
            q_erase: 1.0,
        },
        &f,
        &word,
        5,
    )
    .unwrap();
    assert_eq!(y.erasures().len(), 5);
    let y = channel_transmit(&ChannelModel::Bsc { p_err: 1.0 }, &f, &word, 5).unwrap();
    let flipped: Vec<Option<Elem>> = word.iter().map(|&x| Some(f.add(x, Elem::ONE))).collect();
    assert_eq!(y.symbols(), flipped.as_slice());
}

#[test]
fn binary_channels_need_binary_words() {
    let f = Field::gf8();
    assert!(channel_transmit(&ChannelModel::Bsc { p_err: 0.1 }, &f, &zeros(3), 0).is_err());
    assert!(channel_transmit(&ChannelModel::SymbolErase { s: 4 }, &f, &zeros(3), 0).is_err());
    assert!(channel_transmit(&ChannelModel::RankError { t: 4 }, &f, &zeros(3), 0).is_err());
}

#[test]
fn rank_errors_have_exact_rank() {
    let f = Field::gf8();
    for seed in 0..200 {
        for t in 0..=3 {
            let y = channel_transmit(&ChannelModel::RankError { t }, &f, &zeros(3), seed).unwrap();
            assert_eq!(rank_norm(&f, &y.zero_filled()), t);
        }
    }
    let f = Field::gf32();
    for seed in 0..50 {
        let y = channel_transmit(&ChannelModel::RankError { t: 2 }, &f, &zeros(5), seed).unwrap();
        assert_eq!(rank_norm(&f, &y.zero_filled()), 2);
    }
}

#[test]
fn symbol_erasure_count_is_exact() {
    let f = Field::gf8();
    let word = f.parse_vec("a^3,a^4,1,a,0").unwrap();
    for seed in 0..100 {
        for s in 0..=5 {
            let y = channel_transmit(&ChannelModel::SymbolErase { s }, &f, &word, seed).unwrap();
            assert_eq!(y.erasures().len(), s);
            for (i, v) in y.symbols().iter().enumerate() {
                assert!(v.is_none() || *v == Some(word[i]));
            }
        }
    }
}

#[test]
fn same_seed_same_output() {
    let f = Field::gf2();
    let model = ChannelModel::Bsec {
        p_err: 0.2,
        q_erase: 0.3,
    };
    let a = channel_transmit(&model, &f, &zeros(64), 99).unwrap();
    let b = channel_transmit(&model, &f, &zeros(64), 99).unwrap();
    let c = channel_transmit(&model, &f, &zeros(64), 100).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    let code = c313();
    let r1 = simulate(&code, &ChannelModel::RankError { t: 2 }, 200, 7).unwrap();
    let r2 = simulate(&code, &ChannelModel::RankError { t: 2 }, 200, 7).unwrap();
    assert_eq!(r1, r2);
    assert_eq!(r1.to_string(), r2.to_string());
}

#[test]
fn erasure_positions_spread_evenly_across_seeds() {
    let f = Field::gf8();
    let n = 7;
    let runs = 7000u64;
    let mut counts = vec![0f64; n];
    for seed in 0..runs {
        let y = channel_transmit(&ChannelModel::SymbolErase { s: 1 }, &f, &zeros(n), seed).unwrap();
        counts[y.erasures()[0]] += 1.0;
    }
    let expect = runs as f64 / n as f64;
    let chi2: f64 = counts.iter().map(|c| (c - expect).powi(2) / expect).sum();
    // 0.999 quantile of chi-square with 6 degrees of freedom
    assert!(chi2 < 22.46, "chi2={chi2}");
}

#[test]
fn bsec_rates_match_nominal() {
    let f = Field::gf2();
    let (p, q, n) = (0.1, 0.2, 100_000usize);
    let y = channel_transmit(
        &ChannelModel::Bsec {
            p_err: p,
            q_erase: q,
        },
        &f,
        &zeros(n),
        2024,
    )
    .unwrap();
    let erased = y.erasures().len() as f64;
    let flipped = y
        .symbols()
        .iter()
        .filter(|s| **s == Some(Elem::ONE))
        .count() as f64;
    let nf = n as f64;
    for (count, rate) in [(flipped, p), (erased, q)] {
        let sigma = (nf * rate * (1.0 - rate)).sqrt();
        assert!(
            (count - nf * rate).abs() <= 3.0 * sigma,
            "count={count} rate={rate}"
        );
    }
    let y = channel_transmit(&ChannelModel::Bsc { p_err: p }, &f, &zeros(n), 2024).unwrap();
    let flipped = y
        .symbols()
        .iter()
        .filter(|s| **s == Some(Elem::ONE))
        .count() as f64;
    assert!((flipped - nf * p).abs() <= 3.0 * (nf * p * (1.0 - p)).sqrt());
}

#[test]
fn gabidulin_trials() {
    let code = c313();
    let r = simulate(&code, &ChannelModel::SymbolErase { s: 1 }, 1000, 1).unwrap();
    assert_eq!(r.successes, 1000);
    assert_eq!(r.erasure_histogram, vec![0, 1000, 0, 0]);

    let r = simulate(&code, &ChannelModel::RankError { t: 1 }, 500, 2).unwrap();
    assert_eq!(r.successes, 500);

    let r = simulate(&code, &ChannelModel::SymbolErase { s: 2 }, 300, 3).unwrap();
    assert_eq!(r.successes, 300);

    let r = simulate(&code, &ChannelModel::RankError { t: 2 }, 400, 4).unwrap();
    assert_eq!(r.successes + r.detections + r.miscorrections, 400);
    assert!(r.successes < 400);

    let r = simulate(&code, &ChannelModel::RankError { t: 0 }, 50, 4).unwrap();
    assert_eq!(r.successes, 50);

    let f = Field::gf32();
    let code = GabidulinCode::new(&f, 1, f.parse_vec("1,a,a^2,a^3,a^4").unwrap()).unwrap();
    let r = simulate(&code, &ChannelModel::RankError { t: 1 }, 300, 5).unwrap();
    assert_eq!(r.successes, 300);
    let r = simulate(&code, &ChannelModel::RankError { t: 2 }, 300, 6).unwrap();
    assert_eq!(r.successes, 300);
}

#[test]
fn block_code_trials() {
    let code = hamming_7_3();
    let r = simulate(&code, &ChannelModel::Bsc { p_err: 0.0 }, 100, 1).unwrap();
    assert_eq!(r.successes, 100);
    let r = simulate(&code, &ChannelModel::SymbolErase { s: 2 }, 200, 1).unwrap();
    assert_eq!(r.successes, 200);
    let r = simulate(
        &code,
        &ChannelModel::Bsec {
            p_err: 0.05,
            q_erase: 0.1,
        },
        500,
        3,
    )
    .unwrap();
    assert_eq!(r.successes + r.detections + r.miscorrections, 500);
    assert_eq!(r.erasure_histogram.iter().sum::<u64>(), 500);
    assert!(r.successes > 250);
    let ternary =
        LinearBlockCode::from_parity(PrimeMatrix::parse(3, "1,2,1,0;0,1,2,1").unwrap()).unwrap();
    assert!(simulate(&ternary, &ChannelModel::Bsc { p_err: 0.1 }, 10, 0).is_err());
}

#[test]
fn report_text_and_guards() {
    let code = c313();
    assert!(simulate(&code, &ChannelModel::RankError { t: 1 }, 0, 0).is_err());
    let r = simulate(&code, &ChannelModel::SymbolErase { s: 1 }, 3, 11).unwrap();
    let text = r.to_string();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "seed=11",
            "trials=3",
            "successes=3",
            "detections=0",
            "miscorrections=0",
            "erasure_histogram=0,3,0,0"
        ]
    );
}

#[test]
fn channel_text() {
    for s in ["bsc:0.05", "bsec:0.1,0.2", "rank:2", "erase:1"] {
        let m = ChannelModel::parse(s).unwrap();
        assert_eq!(m.to_string(), s);
        assert_eq!(ChannelModel::parse(&m.to_string()).unwrap(), m);
    }
    assert_eq!(
        ChannelModel::parse("bsec:0.05, 0.1").unwrap(),
        ChannelModel::Bsec {
            p_err: 0.05,
            q_erase: 0.1
        }
    );
    for bad in [
        "bsc:1.5",
        "bsc:-0.1",
        "bsec:0.6,0.5",
        "bsec:0.1",
        "rank:x",
        "gauss:1",
        "bsc",
        "rank:-1",
    ] {
        assert!(ChannelModel::parse(bad).is_err(), "{bad}");
    }
    assert!(ChannelModel::Bsc { p_err: f64::NAN }.validate().is_err());
}

proptest! {
    #[test]
    fn reports_always_balance(seed in any::<u64>(), t in 0usize..=3) {
        let r = simulate(&c313(), &ChannelModel::RankError { t }, 20, seed).unwrap();
        prop_assert_eq!(r.successes + r.detections + r.miscorrections, 20);
        prop_assert_eq!(r.erasure_histogram[0], 20);
        if t <= 1 {
            prop_assert_eq!(r.successes, 20);
        }
    }

    #[test]
    fn bsec_never_invents_symbols(seed in any::<u64>(), p in 0.0f64..0.5, q in 0.0f64..0.5) {
        let f = Field::gf2();
        let y = channel_transmit(&ChannelModel::Bsec { p_err: p, q_erase: q }, &f, &zeros(40), seed).unwrap();
        prop_assert_eq!(y.symbols().len(), 40);
        let again = channel_transmit(&ChannelModel::Bsec { p_err: p, q_erase: q }, &f, &zeros(40), seed).unwrap();
        prop_assert_eq!(y, again);
    }
}
