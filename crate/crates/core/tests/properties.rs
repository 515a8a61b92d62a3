use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use incidence_qk::coefficients::{Exponents, Laurent};
use incidence_qk::combinatorics::{bruhat_leq, enumerate_wp, i_set, Degree, TildeIndex, WpIndex};
use incidence_qk::format::{element_from_json, element_to_json, format_element, parse_element};
use incidence_qk::projective::{proj_mult, ProjElement};
use incidence_qk::verify::{run_suite, Suite, SuiteConfig};
use incidence_qk::{EquivariantRing, QkElement};

type L = Laurent<BigInt>;

fn laurent(vars: usize, lo: i32) -> impl Strategy<Value = L> {
    prop::collection::vec((prop::collection::vec(lo..=2, vars), -4i64..=4), 0..4).prop_map(
        |terms| {
            terms.into_iter().fold(L::zero(), |acc, (e, c)| {
                acc + L::monomial(Exponents::new(e), BigInt::from(c))
            })
        },
    )
}

fn tilde() -> impl Strategy<Value = TildeIndex> {
    (3i64..=6, -20i64..=20, -20i64..=20)
        .prop_filter("i and j distinct mod n", |(n, i, j)| (i - j).rem_euclid(*n) != 0)
        .prop_map(|(n, i, j)| TildeIndex::new(i, j, n).unwrap())
}

fn wp_triple() -> impl Strategy<Value = (WpIndex, WpIndex, WpIndex)> {
    (3i64..=6).prop_flat_map(|n| {
        let all = enumerate_wp(n).unwrap();
        let pick = prop::sample::select(all);
        (pick.clone(), pick.clone(), pick)
    })
}

/// Elements of rank `n` with effective degrees at most (1,1).
fn element(n: i64) -> impl Strategy<Value = QkElement> {
    let all = enumerate_wp(n).unwrap();
    prop::collection::vec(
        (prop::sample::select(all), 0i64..=1, 0i64..=1, laurent(n as usize - 1, -1)),
        0..3,
    )
    .prop_map(move |terms| {
        let mut e = QkElement::zero(n as u32);
        for (u, d1, d2, c) in terms {
            e.add_term(u.q_shift(Degree::new(d1, d2)), c);
        }
        e
    })
}

fn ring(n: i64) -> &'static EquivariantRing {
    static R3: OnceLock<EquivariantRing> = OnceLock::new();
    static R4: OnceLock<EquivariantRing> = OnceLock::new();
    let cell = if n == 3 { &R3 } else { &R4 };
    cell.get_or_init(|| EquivariantRing::new(n).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(3, -2), b in laurent(3, -2), c in laurent(3, -2)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, L::zero());
        prop_assert_eq!(&a * &L::one(), a.clone());
    }

    #[test]
    fn specialization_is_multiplicative(a in laurent(3, -2), b in laurent(3, -2)) {
        prop_assert_eq!((&a * &b).specialize_one(), a.specialize_one() * b.specialize_one());
    }

    #[test]
    fn positivity_basis_inverts(p in laurent(3, 0)) {
        prop_assert_eq!(p.to_positivity_basis().unwrap().to_torus(), p);
    }

    #[test]
    fn characters_compose(n in 3usize..=7, a in 1usize..=7, b in 1usize..=7, c in 1usize..=7) {
        prop_assume!(a <= n && b <= n && c <= n);
        let ab = L::char_monomial(a, b);
        prop_assert_eq!(&ab * &L::char_monomial(b, c), L::char_monomial(a, c));
        prop_assert_eq!(ab.phi_twist(n as u32), L::char_monomial(n + 1 - b, n + 1 - a));
    }

    #[test]
    fn normalize_roundtrip(w in tilde()) {
        let (b, d) = w.normalize();
        prop_assert_eq!(b.q_shift(d), w);
        let n = w.n() as i64;
        let l = b.length() + (n - 1) * d.total();
        prop_assert_eq!(w.length(), l);
        prop_assert_eq!(w.iota().iota(), w);
    }

    #[test]
    fn bruhat_is_a_partial_order((u, v, w) in wp_triple()) {
        let n = u.n();
        prop_assert!(bruhat_leq(u, u).unwrap());
        prop_assert!(bruhat_leq(WpIndex::unit(n), u).unwrap());
        prop_assert!(bruhat_leq(u, WpIndex::top(n)).unwrap());
        if bruhat_leq(u, v).unwrap() && bruhat_leq(v, u).unwrap() {
            prop_assert_eq!(u, v);
        }
        if bruhat_leq(u, v).unwrap() && bruhat_leq(v, w).unwrap() {
            prop_assert!(bruhat_leq(u, w).unwrap());
        }
    }

    #[test]
    fn i_set_is_an_upper_interval((u, mid, v) in wp_triple()) {
        let s = i_set(v);
        prop_assert!(s.iter().all(|x| bruhat_leq(*x, v).unwrap()));
        if s.contains(&u) && bruhat_leq(u, mid).unwrap() && bruhat_leq(mid, v).unwrap() {
            prop_assert!(s.contains(&mid));
        }
    }

    #[test]
    fn text_and_json_roundtrip((n, e) in (3i64..=5).prop_flat_map(|n| (Just(n), element(n)))) {
        prop_assert_eq!(parse_element(&format_element(&e), n).unwrap(), e.clone());
        prop_assert_eq!(element_from_json(&element_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn projective_product_is_associative(
        a in prop::collection::vec((0i64..8, -3i64..=3), 0..3),
        b in prop::collection::vec((0i64..8, -3i64..=3), 0..3),
        c in prop::collection::vec((0i64..8, -3i64..=3), 0..3),
    ) {
        let build = |v: &[(i64, i64)]| {
            let mut p = ProjElement::<BigInt>::zero(4);
            for &(k, x) in v {
                p.add_term(k, BigInt::from(x));
            }
            p
        };
        let (a, b, c) = (build(&a), build(&b), build(&c));
        let left = proj_mult(&proj_mult(&a, &b, false).unwrap(), &c, false).unwrap();
        let right = proj_mult(&a, &proj_mult(&b, &c, false).unwrap(), false).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quantum_ring_axioms(
        (n, a, b, c) in (3i64..=4).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
    ) {
        let r = ring(n);
        let ab = r.mult(&a, &b).unwrap();
        prop_assert_eq!(&ab, &r.mult(&b, &a).unwrap());
        prop_assert_eq!(
            r.mult(&ab, &c).unwrap(),
            r.mult(&a, &r.mult(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            r.mult(&a, &(b.clone() + c.clone())).unwrap(),
            ab + r.mult(&a, &c).unwrap()
        );
        prop_assert_eq!(r.mult(&a, &QkElement::one(n as u32)).unwrap(), a);
    }

    #[test]
    fn products_print_canonically(
        (n, a, b) in (3i64..=4).prop_flat_map(|n| (Just(n), element(n), element(n)))
    ) {
        let p = ring(n).mult(&a, &b).unwrap();
        let text = format_element(&p);
        prop_assert_eq!(parse_element(&text, n).unwrap(), p.clone());
        prop_assert_eq!(format_element(&parse_element(&text, n).unwrap()), text);
        let plain = p.specialize();
        prop_assert_eq!(parse_element(&format_element(&plain), n).unwrap().specialize(), plain);
    }
}

#[test]
fn reports_are_reproducible() {
    for suite in [Suite::GenusZero, Suite::QInterval, Suite::LrVsAlgorithm, Suite::EquivariantPositivityConjecture] {
        let cfg = SuiteConfig::new(4).cutoff(Degree::new(2, 2));
        let a = run_suite(suite, cfg).unwrap();
        let b = run_suite(suite, cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{}", suite.name());
        assert_eq!(a.to_text(), b.to_text(), "{}", suite.name());
    }
}
