//! Curve neighborhoods, the automorphism `Psi`, and divisor and 3-point Gromov-Witten
//! invariants.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{i_set, Degree, Divisor, TildeIndex, WpIndex};
use crate::error::Result;
use crate::qkring::{classical_divisor_mult, euler_pair, lr_mult, Element};
use crate::scalar::{Coefficient, Scalar};

/// Schubert label of the curve neighborhood `Gamma_d(X_u)`.
pub fn gamma_schubert(u: WpIndex, d: Degree) -> Result<WpIndex> {
    d.require_effective()?;
    let (i, j, n) = (u.i(), u.j(), u.n());
    let m = n as i64;
    let (a, b) = match (d.d1 > 0, d.d2 > 0) {
        (false, false) => (i, j),
        (true, false) if j < m => (m, j),
        (true, false) => (m - 1, m),
        (false, true) if i > 1 => (i, 1),
        (false, true) => (1, 2),
        (true, true) => (m, 1),
    };
    Ok(WpIndex::new_unchecked(a, b, n))
}

/// Opposite-Schubert label of the curve neighborhood `Gamma_d(X^u)`.
pub fn gamma_opposite(u: WpIndex, d: Degree) -> Result<WpIndex> {
    d.require_effective()?;
    let (i, j, n) = (u.i(), u.j(), u.n());
    let m = n as i64;
    let (a, b) = match (d.d1 > 0, d.d2 > 0) {
        (false, false) => (i, j),
        (true, false) if j > 1 => (1, j),
        (true, false) => (2, 1),
        (false, true) if i < m => (i, m),
        (false, true) => (m, m - 1),
        (true, true) => (1, m),
    };
    Ok(WpIndex::new_unchecked(a, b, n))
}

/// `Gamma_d(X_u)`, cut by the divisor `D^{[k]}` when `d_k = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RichardsonDescriptor {
    pub base: WpIndex,
    pub divisor_cut: Option<Divisor>,
}

pub fn gamma_divisor(u: WpIndex, d: Degree, k: Divisor) -> Result<RichardsonDescriptor> {
    let base = gamma_schubert(u, d)?;
    let divisor_cut = (d.component(k) == 0).then_some(k);
    Ok(RichardsonDescriptor { base, divisor_cut })
}

/// An element known exactly in all degrees `<= cutoff`, with nothing stored beyond.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    pub element: Element<R>,
    pub cutoff: Degree,
}

impl<R: Coefficient> TruncatedSeries<R> {
    pub fn new(element: &Element<R>, cutoff: Degree) -> Result<Self> {
        cutoff.require_effective()?;
        Ok(TruncatedSeries {
            element: element.truncate(cutoff),
            cutoff,
        })
    }
}

/// `Psi(O^u) = sum over d >= 0 of q^{d(u)+d} O^{Gamma_d(X^{bar u})}`, truncated.
pub fn psi<R: Coefficient>(e: &Element<R>, cutoff: Degree) -> Result<TruncatedSeries<R>> {
    cutoff.require_effective()?;
    let mut out = Element::zero(e.n());
    for (u, c) in e.terms() {
        let (ub, du) = u.normalize();
        let room = cutoff - du;
        if !room.is_effective() {
            continue;
        }
        for d in Degree::effective_up_to(room) {
            let target = gamma_opposite(ub, d)?.q_shift(du + d);
            out.add_term(target, c.clone());
        }
    }
    Ok(TruncatedSeries {
        element: out,
        cutoff,
    })
}

/// Inverts `Psi` below the cutoff by unitriangular elimination, lowest degree first.
pub fn psi_inverse<R: Coefficient>(s: &TruncatedSeries<R>) -> Result<Element<R>> {
    let n = s.element.n();
    let mut rest = s.element.truncate(s.cutoff);
    let mut out = Element::zero(n);
    loop {
        let Some((w, c)) = rest.terms().next().map(|(w, c)| (*w, c.clone())) else {
            break;
        };
        let image = psi(&Element::term(w, c.clone()), s.cutoff)?.element;
        rest = rest - image;
        out.add_term(w, c);
    }
    Ok(out)
}

/// `I^T(O^u, O^{[k]}; O_w)` by the closed form, compared on raw tilde integers.
///
/// Zero when `d(w)` is not effective.
pub fn gw_divisor_closed<R: Coefficient>(u: WpIndex, k: Divisor, w: TildeIndex) -> R {
    if !w.degree().is_effective() {
        return R::zero();
    }
    let n = u.n();
    let (i, j, a, b) = (u.i(), u.j(), w.i(), w.j());
    match k {
        Divisor::First if i == a && j >= b => R::one() - R::character(n, a, 1),
        Divisor::First if i < a && j >= b => R::one(),
        Divisor::Second if i <= a && j == b => R::one() - R::character(n, n as i64, b),
        Divisor::Second if i <= a && j > b => R::one(),
        _ => R::zero(),
    }
}

/// The same invariant as a classical pairing against a curve neighborhood:
/// `chi(sigma . O_{Gamma_d(X_w)})` if `d_k > 0`, else `chi(sigma . O^{[k]} . O_{Gamma_d(X_w)})`.
pub fn gw_divisor_qclassical<R: Coefficient>(
    sigma: &Element<R>,
    k: Divisor,
    w: WpIndex,
    d: Degree,
) -> Result<R> {
    sigma.require_classical()?;
    let target = gamma_schubert(w, d)?;
    if d.component(k) > 0 {
        euler_pair(sigma, target)
    } else {
        euler_pair(&classical_divisor_mult(sigma, k), target)
    }
}

/// `I^T(O^u, O^{[k]}; O_w^vee)`: the dual expansion of `O_{bar w}` paired term by term,
/// each term shifted to the degree of `w`. These are the coefficients of `O^u (.) O^{[k]}`.
pub fn gw_divisor_dual<R: Coefficient>(u: WpIndex, k: Divisor, w: TildeIndex) -> R {
    let (wb, d) = w.normalize();
    let mut out = R::zero();
    for z in i_set(wb) {
        let v = gw_divisor_closed::<R>(u, k, z.q_shift(d));
        if (z.length() + wb.length()) % 2 == 0 {
            out = out + v;
        } else {
            out = out - v;
        }
    }
    out
}

/// `O^u (.) O^{[k]}` truncated at `cutoff`, assembled from [`gw_divisor_dual`].
pub fn odot_divisor<R: Coefficient>(
    u: WpIndex,
    k: Divisor,
    cutoff: Degree,
) -> Result<TruncatedSeries<R>> {
    cutoff.require_effective()?;
    let n = u.n();
    let mut out = Element::zero(n);
    for d in Degree::effective_up_to(cutoff) {
        for w in crate::combinatorics::enumerate_wp(n as i64)? {
            let wd = w.q_shift(d);
            out.add_term(wd, gw_divisor_dual::<R>(u, k, wd));
        }
    }
    Ok(TruncatedSeries {
        element: out,
        cutoff,
    })
}

/// Non-equivariant `I_d(O^u, O^v, O_w)`, read off `Psi(O^u * O^v)` in degree `d`.
pub fn three_point<S: Scalar>(u: WpIndex, v: WpIndex, w: WpIndex, d: Degree) -> Result<S> {
    d.require_effective()?;
    let prod = lr_mult::<S>(u.tilde(), v.tilde())?;
    let series = psi(&prod, d)?;
    let mut out = S::zero();
    for (z, c) in series.element.degree_part(d).terms() {
        let zb = z.bar();
        if zb.i() <= w.i() && zb.j() >= w.j() {
            out = out + c.clone();
        }
    }
    Ok(out)
}

/// Degrees occurring in `O^u * O^v` and whether they fill the box between their
/// componentwise minimum and maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QIntervalReport {
    pub holds: bool,
    pub degrees: BTreeSet<Degree>,
}

pub fn q_interval_check(u: WpIndex, v: WpIndex) -> Result<QIntervalReport> {
    let degrees = lr_mult::<i64>(u.tilde(), v.tilde())?.degrees();
    let holds = degrees.is_empty() || {
        let lo = Degree::new(
            degrees.iter().map(|d| d.d1).min().unwrap(),
            degrees.iter().map(|d| d.d2).min().unwrap(),
        );
        let hi = Degree::new(
            degrees.iter().map(|d| d.d1).max().unwrap(),
            degrees.iter().map(|d| d.d2).max().unwrap(),
        );
        let boxed: BTreeSet<Degree> = Degree::effective_up_to(hi - lo).map(|d| d + lo).collect();
        boxed == degrees
    };
    Ok(QIntervalReport { holds, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Laurent;
    use crate::qkring::chevalley_mult;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    type L = Laurent<BigInt>;

    fn wp(i: i64, j: i64) -> WpIndex {
        WpIndex::new(i, j, 5).unwrap()
    }

    fn t(i: i64, j: i64) -> TildeIndex {
        TildeIndex::new(i, j, 5).unwrap()
    }

    const D10: Degree = Degree::new(1, 0);
    const D01: Degree = Degree::new(0, 1);
    const D11: Degree = Degree::new(1, 1);

    #[test]
    fn neighborhoods() {
        assert_eq!(gamma_schubert(wp(2, 3), D10), Ok(wp(5, 3)));
        assert_eq!(gamma_schubert(wp(2, 3), Degree::ZERO), Ok(wp(2, 3)));
        assert_eq!(gamma_schubert(wp(1, 3), Degree::new(2, 1)), Ok(wp(5, 1)));
        assert_eq!(gamma_opposite(wp(3, 4), D10), Ok(wp(1, 4)));
        assert_eq!(gamma_opposite(wp(3, 1), D10), Ok(wp(2, 1)));
        assert_eq!(gamma_opposite(wp(3, 4), Degree::ZERO), Ok(wp(3, 4)));
        assert!(gamma_schubert(wp(2, 3), Degree::new(-1, 0)).is_err());
        assert!(gamma_opposite(wp(2, 3), Degree::new(0, -1)).is_err());
    }

    #[test]
    fn divisor_cuts() {
        let g = |d, k| gamma_divisor(wp(2, 3), d, k).unwrap();
        assert_eq!(
            g(D10, Divisor::First),
            RichardsonDescriptor { base: wp(5, 3), divisor_cut: None }
        );
        assert_eq!(
            g(D10, Divisor::Second),
            RichardsonDescriptor { base: wp(5, 3), divisor_cut: Some(Divisor::Second) }
        );
        assert_eq!(
            g(Degree::ZERO, Divisor::First),
            RichardsonDescriptor { base: wp(2, 3), divisor_cut: Some(Divisor::First) }
        );
    }

    #[test]
    fn psi_examples() {
        let one = Element::<L>::one(5);
        let s = psi(&one, D11).unwrap();
        let expect = Element::from_terms(
            5,
            [Degree::ZERO, D10, D01, D11].map(|d| (t(1, 5).q_shift(d), L::one())),
        )
        .unwrap();
        assert_eq!(s.element, expect);
        assert_eq!(psi_inverse(&s).unwrap(), one);

        let top = Element::<L>::basis(t(5, 1));
        let s = psi(&top, D11).unwrap();
        let expect = Element::from_terms(
            5,
            [
                (t(5, 1), L::one()),
                (t(2, 1).q_shift(D10), L::one()),
                (t(5, 4).q_shift(D01), L::one()),
                (t(1, 5).q_shift(D11), L::one()),
            ],
        )
        .unwrap();
        assert_eq!(s.element, expect);
        assert_eq!(psi_inverse(&s).unwrap(), top);
    }

    #[test]
    fn closed_forms() {
        let c = |u, k, w| gw_divisor_closed::<L>(u, k, w);
        assert_eq!(c(wp(2, 3), Divisor::First, t(2, 1)), L::one() - L::var(1));
        assert_eq!(c(wp(2, 3), Divisor::First, t(7, 1)), L::one());
        assert_eq!(c(wp(2, 3), Divisor::First, t(1, 2)), L::zero());
        assert_eq!(c(wp(2, 3), Divisor::First, t(2, 6)), L::zero());
    }

    #[test]
    fn quantum_equals_classical_examples() {
        let s = Element::<L>::basis(t(2, 3));
        let q = |e: &Element<L>, w, d| gw_divisor_qclassical(e, Divisor::First, w, d).unwrap();
        assert_eq!(q(&s, wp(2, 1), Degree::ZERO), L::one() - L::var(1));
        assert_eq!(q(&Element::one(5), wp(5, 1), Degree::ZERO), L::one());
        assert_eq!(q(&s, wp(2, 1), D10), L::one());
        let quantum = Element::<L>::basis(t(7, 1));
        assert!(gw_divisor_qclassical(&quantum, Divisor::First, wp(2, 1), D10).is_err());
    }

    #[test]
    fn dual_invariants() {
        let g = |u, w| gw_divisor_dual::<L>(u, Divisor::First, w);
        assert_eq!(g(wp(2, 3), t(3, 2)), L::var(1));
        assert_eq!(g(wp(2, 3), t(2, 3)), L::one() - L::var(1));
        assert_eq!(g(wp(1, 5), t(2, 5)), L::one());
    }

    #[test]
    fn odot_is_psi_of_chevalley() {
        let cutoff = Degree::new(2, 2);
        for u in crate::combinatorics::enumerate_wp(5).unwrap() {
            for k in Divisor::BOTH {
                let lhs = odot_divisor::<L>(u, k, cutoff).unwrap();
                let rhs = psi(&chevalley_mult(&Element::basis(u.tilde()), k), cutoff).unwrap();
                assert_eq!(lhs, rhs, "{u} {k:?}");
            }
        }
    }

    #[test]
    fn three_point_examples() {
        let tp = |u, v, w, d| three_point::<BigInt>(u, v, w, d).unwrap();
        assert_eq!(tp(wp(2, 1), wp(5, 1), wp(5, 1), D11), BigInt::one());
        assert_eq!(tp(wp(1, 2), wp(3, 5), wp(4, 1), Degree::ZERO), BigInt::one());
        assert_eq!(tp(wp(1, 2), wp(3, 5), wp(3, 2), Degree::ZERO), BigInt::from(0));
        assert!(three_point::<i64>(wp(1, 2), wp(3, 5), wp(3, 2), Degree::new(0, -1)).is_err());
    }

    #[test]
    fn q_intervals() {
        let r = q_interval_check(wp(1, 2), wp(2, 1)).unwrap();
        assert!(r.holds);
        assert_eq!(r.degrees, BTreeSet::from([D01]));
        let r = q_interval_check(wp(2, 3), wp(4, 5)).unwrap();
        assert!(r.holds);
        assert_eq!(r.degrees, BTreeSet::from([Degree::ZERO, D10]));
        assert!(q_interval_check(wp(1, 2), wp(1, 2)).unwrap().holds);
    }
}
