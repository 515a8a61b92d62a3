//! Quantum multiplication by the Schubert divisors, and the non-equivariant
//! Littlewood-Richardson rule.

use crate::combinatorics::{chi, Divisor, TildeIndex};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

use super::Element;

/// `O^w * O^{[k]}` for a single tilde index, as at most four terms.
pub fn chevalley_basis<R: Coefficient>(w: TildeIndex, k: Divisor) -> Vec<(TildeIndex, R)> {
    let n = w.n();
    let c = match k {
        Divisor::First => R::character(n, w.i(), 1),
        Divisor::Second => R::character(n, n as i64, w.j()),
    };
    let mut out = vec![(w, R::one() - c.clone())];
    match (k, w.is_adjacent()) {
        (Divisor::First, false) => out.push((w.offset(1, 0), c)),
        (Divisor::Second, false) => out.push((w.offset(0, -1), c)),
        (Divisor::First, true) => out.extend([
            (w.offset(1, -1), c.clone()),
            (w.offset(2, 0), c.clone()),
            (w.offset(2, -1), -c),
        ]),
        (Divisor::Second, true) => out.extend([
            (w.offset(1, -1), c.clone()),
            (w.offset(0, -2), c.clone()),
            (w.offset(1, -2), -c),
        ]),
    }
    out
}

/// `e * O^{[k]}` in `QK_T(X)_q`.
pub fn chevalley_mult<R: Coefficient>(e: &Element<R>, k: Divisor) -> Element<R> {
    let mut out = Element::zero(e.n());
    for (w, c) in e.terms() {
        for (v, a) in chevalley_basis::<R>(*w, k) {
            out.add_term(v, c.clone() * a);
        }
    }
    out
}

/// Product by `O^{[k]}` in ordinary K-theory: the Chevalley rule with every term that
/// raises the q-degree of its source term discarded.
pub fn classical_divisor_mult<R: Coefficient>(e: &Element<R>, k: Divisor) -> Element<R> {
    let mut out = Element::zero(e.n());
    for (w, c) in e.terms() {
        let d = w.degree();
        for (v, a) in chevalley_basis::<R>(*w, k) {
            if v.degree().le(d) {
                out.add_term(v, c.clone() * a);
            }
        }
    }
    out
}

/// Non-equivariant product `O^u * O^v` of two tilde indices.
///
/// With `x = u.i + v.i - 1` and `y = u.j + v.j - n` the product is the single class
/// `O^{[x,y]}` when the reduced labels satisfy
/// `bar(u.i) - bar(u.j) + bar(v.i) - bar(v.j) + n - 1 < n (chi(u) + chi(v))`,
/// and `O^{[x,y-1]} + O^{[x+1,y]} - O^{[x+1,y-1]}` otherwise.
pub fn lr_mult<R: Coefficient>(u: TildeIndex, v: TildeIndex) -> Result<Element<R>> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch(u.n(), v.n()));
    }
    let n = u.n();
    let nn = n as i64;
    let (ub, vb) = (u.bar(), v.bar());
    let lhs = ub.i() - ub.j() + vb.i() - vb.j() + nn - 1;
    let rhs = nn * (chi(ub.i(), ub.j()) + chi(vb.i(), vb.j()));
    let (x, y) = (u.i() + v.i() - 1, u.j() + v.j() - nn);
    let mut out = Element::zero(n);
    if lhs < rhs {
        out.add_term(TildeIndex::new_unchecked(x, y, n), R::one());
    } else {
        out.add_term(TildeIndex::new_unchecked(x, y - 1, n), R::one());
        out.add_term(TildeIndex::new_unchecked(x + 1, y, n), R::one());
        out.add_term(TildeIndex::new_unchecked(x + 1, y - 1, n), -R::one());
    }
    Ok(out)
}
