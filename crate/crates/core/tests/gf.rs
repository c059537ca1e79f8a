use proptest::prelude::*;
use rankcode::gf::{Elem, Field};
use rankcode::Error;

/// Schoolbook product of two field elements as polynomials over GF(p),
/// reduced by the defining polynomial. Independent of the log tables.
fn slow_mul(f: &Field, a: Elem, b: Elem) -> Elem {
    let (p, n) = (f.p(), f.n() as usize);
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0u32; 2 * n];
    for i in 0..n {
        for j in 0..n {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
    }
    let poly = f.poly();
    for top in (n..2 * n).rev() {
        let lead = prod[top];
        if lead != 0 {
            for (k, &c) in poly.iter().enumerate() {
                let idx = top - n + k;
                prod[idx] = (prod[idx] + p * p - lead * c % p) % p;
            }
        }
    }
    f.from_coeffs(&prod[..n]).unwrap()
}

fn fields() -> Vec<Field> {
    vec![
        Field::gf2(),
        Field::gf4(),
        Field::gf8(),
        Field::gf32(),
        Field::gf256(),
        Field::gf27(),
        Field::gf81(),
    ]
}

#[test]
fn fixture_orders() {
    let orders: Vec<u32> = fields().iter().map(Field::order).collect();
    assert_eq!(orders, vec![2, 4, 8, 32, 256, 27, 81]);
}

#[test]
fn multiplication_matches_polynomial_product_exhaustively_on_small_fields() {
    for f in [Field::gf4(), Field::gf8(), Field::gf27(), Field::gf32()] {
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), slow_mul(&f, a, b), "{f}: {a:?} * {b:?}");
            }
        }
    }
}

#[test]
fn alpha_powers_cycle() {
    for f in fields() {
        let m = f.order() as i64 - 1;
        assert_eq!(f.alpha(0), Elem::ONE);
        assert_eq!(f.alpha(m), Elem::ONE);
        assert_eq!(f.alpha(-1), f.inv(f.alpha(1)).unwrap());
        let distinct: std::collections::HashSet<_> = (0..m).map(|k| f.alpha(k)).collect();
        assert_eq!(distinct.len() as i64, m);
    }
}

#[test]
fn element_text_round_trip() {
    let f = Field::gf256();
    assert_eq!(f.fmt_elem(Elem::ZERO), "0");
    assert_eq!(f.fmt_elem(Elem::ONE), "a^0");
    assert_eq!(f.parse_elem("1").unwrap(), Elem::ONE);
    assert_eq!(f.parse_elem("a").unwrap(), f.alpha(1));
    assert_eq!(f.parse_elem("a^-1").unwrap(), f.alpha(254));
    for a in f.elements() {
        assert_eq!(f.parse_elem(&f.fmt_elem(a)).unwrap(), a);
    }
    assert!(matches!(f.parse_elem("b^2"), Err(Error::Parse(_))));
    let v = f.parse_vec("a^3, 0, a^7").unwrap();
    assert_eq!(f.fmt_vec(&v), "a^3,0,a^7");
}

#[test]
fn construction_errors() {
    assert_eq!(
        Field::new(4, 2, &[1, 1, 1]).unwrap_err(),
        Error::NotPrime(4)
    );
    assert_eq!(
        Field::new(2, 17, &[0; 18]).unwrap_err(),
        Error::FieldTooLarge { p: 2, n: 17 }
    );
    // x^2 + 1 = (x + 1)^2 over GF(2)
    assert_eq!(
        Field::new(2, 2, &[1, 0, 1]).unwrap_err(),
        Error::NotIrreducible(2)
    );
    // x^4 + x^3 + x^2 + x + 1 is irreducible but alpha has order 5
    assert_eq!(
        Field::new(2, 4, &[1, 1, 1, 1, 1]).unwrap_err(),
        Error::NotPrimitive
    );
    assert!(matches!(
        Field::new(2, 3, &[1, 1, 0, 0]),
        Err(Error::InvalidPolynomial(_))
    ));
}

#[test]
fn field_spec_parsing() {
    let f: Field = "p=2 n=3 poly=1,1,0,1".parse().unwrap();
    assert_eq!(f, Field::gf8());
    assert_eq!("gf81".parse::<Field>().unwrap(), Field::gf81());
    assert_eq!(Field::gf27().to_string(), "p=3 n=3 poly=1,2,0,1");
    assert!("p=2 n=3".parse::<Field>().is_err());
}

#[test]
fn division_by_zero() {
    let f = Field::gf8();
    assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
    assert_eq!(f.div(Elem::ONE, Elem::ZERO), Err(Error::DivisionByZero));
}

#[test]
fn trace_lands_in_prime_field_and_is_balanced() {
    for f in fields() {
        let mut counts = vec![0u32; f.p() as usize];
        for a in f.elements() {
            counts[f.trace(a) as usize] += 1;
        }
        let per = f.order() / f.p();
        assert!(counts.iter().all(|&c| c == per), "{f}: {counts:?}");
    }
}

/// Brute-force dual basis: for each j the unique element d with
/// tr(b_i d) = [i == j].
fn dual_by_search(f: &Field, b: &[Elem]) -> Vec<Elem> {
    (0..b.len())
        .map(|j| {
            let hits: Vec<Elem> = f
                .elements()
                .filter(|&d| {
                    b.iter()
                        .enumerate()
                        .all(|(i, &bi)| f.trace(f.mul(bi, d)) == u32::from(i == j))
                })
                .collect();
            assert_eq!(hits.len(), 1);
            hits[0]
        })
        .collect()
}

#[test]
fn dual_of_gf4_standard_basis() {
    let f = Field::gf4();
    let b = vec![Elem::ONE, f.alpha(1)];
    let d = f.dual_basis(&b).unwrap();
    assert_eq!(d, dual_by_search(&f, &b));
    assert_eq!(d, vec![f.alpha(2), Elem::ONE]);
}

#[test]
fn dual_basis_matches_search() {
    for f in [Field::gf8(), Field::gf32(), Field::gf27(), Field::gf81()] {
        let n = f.n() as i64;
        for shift in [0i64, 3, 11] {
            let b: Vec<Elem> = (0..n).map(|i| f.alpha(i + shift)).collect();
            assert_eq!(f.dual_basis(&b).unwrap(), dual_by_search(&f, &b));
        }
    }
}

#[test]
fn dual_basis_rejects_dependent_input() {
    let f = Field::gf8();
    let b = vec![Elem::ONE, f.alpha(1), f.add(Elem::ONE, f.alpha(1))];
    assert_eq!(f.dual_basis(&b), Err(Error::LinearlyDependent));
    assert!(!f.is_linearly_independent(&b));
}

#[test]
fn trace_orthogonal_bases_are_orthonormal() {
    for n in 1..=8u32 {
        let f = match n {
            1 => Field::gf2(),
            2 => Field::gf4(),
            3 => Field::gf8(),
            4 => Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap(),
            5 => Field::gf32(),
            6 => Field::new(2, 6, &[1, 1, 0, 0, 0, 0, 1]).unwrap(),
            7 => Field::new(2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]).unwrap(),
            _ => Field::gf256(),
        };
        let b = f.trace_orthogonal_basis().unwrap();
        assert_eq!(b.len(), n as usize);
        assert!(f.is_linearly_independent(&b));
        for i in 0..b.len() {
            for j in 0..b.len() {
                assert_eq!(f.trace(f.mul(b[i], b[j])), u32::from(i == j));
            }
        }
        assert_eq!(f.dual_basis(&b).unwrap(), b);
    }
    assert!(Field::gf27().trace_orthogonal_basis().is_err());
}

fn field_and_two() -> impl Strategy<Value = (usize, u32, u32, u32)> {
    (0usize..7, any::<u32>(), any::<u32>(), any::<u32>())
}

proptest! {
    #[test]
    fn field_axioms((fi, x, y, z) in field_and_two()) {
        let f = &fields()[fi];
        let q = f.order();
        let (a, b, c) = (f.elem(x % q).unwrap(), f.elem(y % q).unwrap(), f.elem(z % q).unwrap());
        prop_assert_eq!(f.mul(a, b), slow_mul(f, a, b));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn frobenius_is_additive_and_periodic((fi, x, y, i) in field_and_two()) {
        let f = &fields()[fi];
        let q = f.order();
        let (a, b) = (f.elem(x % q).unwrap(), f.elem(y % q).unwrap());
        let i = (i % 9) as i64;
        prop_assert_eq!(f.frob(f.add(a, b), i), f.add(f.frob(a, i), f.frob(b, i)));
        prop_assert_eq!(f.frob(f.mul(a, b), i), f.mul(f.frob(a, i), f.frob(b, i)));
        prop_assert_eq!(f.frob(f.frob(a, i), -i), a);
        prop_assert_eq!(f.frob(a, f.n() as i64), a);
        prop_assert_eq!(f.frob(a, 1), f.pow(a, f.p() as u64));
    }

    #[test]
    fn trace_is_linear((fi, x, y, _z) in field_and_two()) {
        let f = &fields()[fi];
        let q = f.order();
        let (a, b) = (f.elem(x % q).unwrap(), f.elem(y % q).unwrap());
        prop_assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % f.p());
    }
}
