//! Schubert labels of `Fl(1, n-1; n)`: the set `W^P`, its extension by quantum degrees,
//! lengths, the Bruhat order and the sets `I(v)`.
//!
//! A [`TildeIndex`] `[i,j]` with `i != j (mod n)` stands for `q^{d(w)} O^{[bar i, bar j]}`,
//! where `bar` reduces into `1..=n` and `d(w) = ((i - bar i)/n, (bar j - j)/n)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces `x` into `1..=n`.
pub fn bar(x: i64, n: u32) -> i64 {
    (x - 1).rem_euclid(n as i64) + 1
}

/// `1` if `a > b`, else `0`.
pub fn chi(a: i64, b: i64) -> i64 {
    (a > b) as i64
}

pub(crate) fn check_rank(n: i64) -> Result<u32> {
    if n < 3 || n > u32::MAX as i64 {
        Err(Error::RankTooSmall(n))
    } else {
        Ok(n as u32)
    }
}

/// A curve class `(d1, d2)` in `H_2(X)`; also the exponent of `q_1^{d1} q_2^{d2}`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct Degree {
    pub d1: i64,
    pub d2: i64,
}

impl Degree {
    pub const ZERO: Degree = Degree { d1: 0, d2: 0 };

    pub const fn new(d1: i64, d2: i64) -> Self {
        Degree { d1, d2 }
    }

    pub fn is_effective(self) -> bool {
        self.d1 >= 0 && self.d2 >= 0
    }

    pub fn require_effective(self) -> Result<Self> {
        if self.is_effective() {
            Ok(self)
        } else {
            Err(Error::NegativeDegree(self.d1, self.d2))
        }
    }

    /// Componentwise `self <= other`.
    pub fn le(self, other: Degree) -> bool {
        self.d1 <= other.d1 && self.d2 <= other.d2
    }

    pub fn swap(self) -> Degree {
        Degree::new(self.d2, self.d1)
    }

    pub fn component(self, k: Divisor) -> i64 {
        match k {
            Divisor::First => self.d1,
            Divisor::Second => self.d2,
        }
    }

    pub fn total(self) -> i64 {
        self.d1 + self.d2
    }

    /// Effective degrees `d` with `d <= bound`, in lexicographic order.
    pub fn effective_up_to(bound: Degree) -> impl Iterator<Item = Degree> {
        (0..=bound.d1).flat_map(move |d1| (0..=bound.d2).map(move |d2| Degree::new(d1, d2)))
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree::new(self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, o: Degree) -> Degree {
        Degree::new(self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(-self.d1, -self.d2)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// One of the two Schubert divisors `O^{[1]} = O^{[2,n]}` and `O^{[2]} = O^{[1,n-1]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Divisor {
    First,
    Second,
}

impl Divisor {
    pub const BOTH: [Divisor; 2] = [Divisor::First, Divisor::Second];

    pub fn from_k(k: i64) -> Result<Self> {
        match k {
            1 => Ok(Divisor::First),
            2 => Ok(Divisor::Second),
            _ => Err(Error::BadDivisor(k)),
        }
    }

    pub fn k(self) -> u8 {
        match self {
            Divisor::First => 1,
            Divisor::Second => 2,
        }
    }

    pub fn other(self) -> Divisor {
        match self {
            Divisor::First => Divisor::Second,
            Divisor::Second => Divisor::First,
        }
    }

    /// The divisor as a Schubert label.
    pub fn index(self, n: u32) -> WpIndex {
        let n = n as i64;
        let (i, j) = match self {
            Divisor::First => (2, n),
            Divisor::Second => (1, n - 1),
        };
        WpIndex(TildeIndex { i, j, n: n as u32 })
    }
}

/// Extended Schubert label `[i,j]`, `i != j (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TildeIndex {
    i: i64,
    j: i64,
    n: u32,
}

impl TildeIndex {
    pub fn new(i: i64, j: i64, n: i64) -> Result<Self> {
        let n = check_rank(n)?;
        if (i - j).rem_euclid(n as i64) == 0 {
            return Err(Error::MalformedIndex { i, j, n });
        }
        Ok(TildeIndex { i, j, n })
    }

    pub(crate) fn new_unchecked(i: i64, j: i64, n: u32) -> Self {
        debug_assert!((i - j).rem_euclid(n as i64) != 0);
        TildeIndex { i, j, n }
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bar(&self) -> WpIndex {
        WpIndex(TildeIndex {
            i: bar(self.i, self.n),
            j: bar(self.j, self.n),
            n: self.n,
        })
    }

    /// `d(w) = ((i - bar i)/n, (bar j - j)/n)`.
    pub fn degree(&self) -> Degree {
        let n = self.n as i64;
        Degree::new(
            (self.i - bar(self.i, self.n)) / n,
            (bar(self.j, self.n) - self.j) / n,
        )
    }

    pub fn normalize(&self) -> (WpIndex, Degree) {
        (self.bar(), self.degree())
    }

    /// Multiplies by `q^d`: `[i,j] -> [i + d1 n, j - d2 n]`.
    pub fn q_shift(&self, d: Degree) -> TildeIndex {
        let n = self.n as i64;
        TildeIndex {
            i: self.i + d.d1 * n,
            j: self.j - d.d2 * n,
            n: self.n,
        }
    }

    pub fn is_wp(&self) -> bool {
        self.degree() == Degree::ZERO
    }

    pub fn to_wp(&self) -> Result<WpIndex> {
        if self.is_wp() {
            Ok(WpIndex(*self))
        } else {
            Err(Error::NotInWp {
                i: self.i,
                j: self.j,
                n: self.n,
            })
        }
    }

    /// `l(w) = l(bar w) + (n-1)(d1 + d2)`.
    pub fn length(&self) -> i64 {
        let (b, d) = self.normalize();
        b.length() + (self.n as i64 - 1) * d.total()
    }

    /// `iota[i,j] = [n+1-j, n+1-i]`; on tilde indices this swaps the two degree components.
    pub fn iota(&self) -> TildeIndex {
        let n = self.n as i64;
        TildeIndex {
            i: n + 1 - self.j,
            j: n + 1 - self.i,
            n: self.n,
        }
    }

    /// `i + 1 = j (mod n)`, the branch condition of the Chevalley rule.
    pub fn is_adjacent(&self) -> bool {
        (self.i + 1 - self.j).rem_euclid(self.n as i64) == 0
    }

    pub(crate) fn offset(&self, di: i64, dj: i64) -> TildeIndex {
        TildeIndex::new_unchecked(self.i + di, self.j + dj, self.n)
    }
}

/// Canonical order: rank, then degree, then the reduced label.
impl Ord for TildeIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |w: &TildeIndex| {
            let b = w.bar();
            (w.n, w.degree(), b.0.i, b.0.j)
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for TildeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TildeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// A label in `W^P`: both entries in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WpIndex(TildeIndex);

impl WpIndex {
    pub fn new(i: i64, j: i64, n: i64) -> Result<Self> {
        TildeIndex::new(i, j, n)?.to_wp()
    }

    pub(crate) fn new_unchecked(i: i64, j: i64, n: u32) -> Self {
        debug_assert!((1..=n as i64).contains(&i) && (1..=n as i64).contains(&j) && i != j);
        WpIndex(TildeIndex { i, j, n })
    }

    /// Like `new`, returning `None` outside `W^P` instead of an error.
    pub fn checked(i: i64, j: i64, n: u32) -> Option<Self> {
        let r = 1..=n as i64;
        (r.contains(&i) && r.contains(&j) && i != j).then_some(WpIndex(TildeIndex { i, j, n }))
    }

    /// The unit class `[1,n]`, minimum of the Bruhat order.
    pub fn unit(n: u32) -> Self {
        WpIndex(TildeIndex { i: 1, j: n as i64, n })
    }

    /// The point class `[n,1]`, maximum of the Bruhat order.
    pub fn top(n: u32) -> Self {
        WpIndex(TildeIndex { i: n as i64, j: 1, n })
    }

    pub fn i(&self) -> i64 {
        self.0.i
    }

    pub fn j(&self) -> i64 {
        self.0.j
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn tilde(&self) -> TildeIndex {
        self.0
    }

    /// `codim X^{[i,j]} = (i-1) + (n-j) - chi(i>j)`.
    pub fn length(&self) -> i64 {
        (self.0.i - 1) + (self.0.n as i64 - self.0.j) - chi(self.0.i, self.0.j)
    }

    pub fn iota(&self) -> WpIndex {
        WpIndex(self.0.iota())
    }

    pub fn q_shift(&self, d: Degree) -> TildeIndex {
        self.0.q_shift(d)
    }

    /// The minimal coset representative: `w(1) = i`, `w(n) = j`, the middle increasing.
    pub fn permutation(&self) -> Vec<usize> {
        let (i, j) = (self.0.i as usize, self.0.j as usize);
        let mut w = Vec::with_capacity(self.0.n as usize);
        w.push(i);
        w.extend((1..=self.0.n as usize).filter(|&x| x != i && x != j));
        w.push(j);
        w
    }
}

impl From<WpIndex> for TildeIndex {
    fn from(w: WpIndex) -> TildeIndex {
        w.0
    }
}

impl fmt::Display for WpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn normalize(w: TildeIndex) -> (WpIndex, Degree) {
    w.normalize()
}

pub fn q_shift(w: TildeIndex, d: Degree) -> TildeIndex {
    w.q_shift(d)
}

pub fn length(w: TildeIndex) -> i64 {
    w.length()
}

pub fn iota(w: TildeIndex) -> TildeIndex {
    w.iota()
}

/// Bruhat order on `W^P`: `[a',b'] <= [a,b]` iff `a' <= a` and `b' >= b`.
pub fn bruhat_leq(u: WpIndex, v: WpIndex) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch(u.n(), v.n()));
    }
    Ok(u.i() <= v.i() && u.j() >= v.j())
}

/// All of `W^P` in lexicographic order of `(i, j)`.
pub fn enumerate_wp(n: i64) -> Result<Vec<WpIndex>> {
    let n = check_rank(n)?;
    let m = n as i64;
    Ok((1..=m)
        .flat_map(|i| (1..=m).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| WpIndex::new_unchecked(i, j, n))
        .collect())
}

/// `I(v)`: labels `u <= v` whose full Bruhat interval `[u, v]` in `S_n` stays inside `W^P`.
pub fn i_set(v: WpIndex) -> BTreeSet<WpIndex> {
    let (a, b, n) = (v.i(), v.j(), v.n());
    let pick = |pairs: &[(i64, i64)]| {
        pairs
            .iter()
            .filter_map(|&(k, l)| WpIndex::checked(k, l, n))
            .collect::<BTreeSet<_>>()
    };
    match a - b {
        1 => pick(&[
            (a, b),
            (b - 1, b),
            (b, a),
            (a, a + 1),
            (b - 1, a),
            (b, a + 1),
        ]),
        2 => (b..=a)
            .flat_map(|k| (b..=a).map(move |l| (k, l)))
            .filter_map(|(k, l)| WpIndex::checked(k, l, n))
            .collect(),
        _ => pick(&[(a, b), (a - 1, b), (a, b + 1), (a - 1, b + 1)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: i64, j: i64, n: i64) -> TildeIndex {
        TildeIndex::new(i, j, n).unwrap()
    }

    fn wp(i: i64, j: i64, n: i64) -> WpIndex {
        WpIndex::new(i, j, n).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(t(6, -3, 5).normalize(), (wp(1, 2, 5), Degree::new(1, 1)));
        assert_eq!(t(2, 3, 5).normalize(), (wp(2, 3, 5), Degree::ZERO));
        assert_eq!(t(2, -2, 5).normalize(), (wp(2, 3, 5), Degree::new(0, 1)));
    }

    #[test]
    fn malformed_rejected() {
        assert!(matches!(
            TildeIndex::new(2, 7, 5),
            Err(Error::MalformedIndex { .. })
        ));
        assert!(matches!(TildeIndex::new(1, 2, 2), Err(Error::RankTooSmall(2))));
    }

    #[test]
    fn q_shift_examples() {
        assert_eq!(wp(1, 2, 5).q_shift(Degree::new(1, 1)), t(6, -3, 5));
        assert_eq!(t(4, 1, 5).q_shift(Degree::ZERO), t(4, 1, 5));
        assert_eq!(wp(2, 3, 5).q_shift(Degree::new(0, 1)), t(2, -2, 5));
    }

    #[test]
    fn length_examples() {
        assert_eq!(t(1, 5, 5).length(), 0);
        assert_eq!(t(5, 1, 5).length(), 7);
        assert_eq!(t(6, -3, 5).length(), 11);
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(wp(3, 4, 5), wp(4, 2, 5)).unwrap());
        assert!(!bruhat_leq(wp(2, 1, 5), wp(1, 2, 5)).unwrap());
        for w in enumerate_wp(5).unwrap() {
            assert!(bruhat_leq(WpIndex::unit(5), w).unwrap());
            assert!(bruhat_leq(w, WpIndex::top(5)).unwrap());
        }
        assert_eq!(
            bruhat_leq(wp(1, 2, 4), wp(1, 2, 5)),
            Err(Error::RankMismatch(4, 5))
        );
    }

    #[test]
    fn iota_examples() {
        assert_eq!(t(2, 5, 5).iota(), t(1, 4, 5));
        assert_eq!(t(1, 5, 5).iota(), t(1, 5, 5));
        let shifted = wp(3, 1, 5).q_shift(Degree::new(1, 0));
        assert_eq!(shifted.iota(), wp(5, 3, 5).q_shift(Degree::new(0, 1)));
    }

    #[test]
    fn i_set_reference_sets() {
        let set = |v: WpIndex| i_set(v).into_iter().collect::<BTreeSet<_>>();
        let of = |xs: &[(i64, i64)]| xs.iter().map(|&(i, j)| wp(i, j, 5)).collect::<BTreeSet<_>>();
        assert_eq!(set(wp(4, 1, 5)), of(&[(4, 1), (3, 1), (4, 2), (3, 2)]));
        assert_eq!(set(wp(1, 2, 5)), of(&[(1, 2), (1, 3)]));
        assert_eq!(
            set(wp(3, 1, 5)),
            of(&[(3, 1), (2, 1), (3, 2), (1, 2), (2, 3), (1, 3)])
        );
        assert_eq!(
            set(wp(3, 2, 5)),
            of(&[(3, 2), (1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])
        );
    }

    #[test]
    fn enumerate_counts_and_order() {
        assert_eq!(enumerate_wp(3).unwrap().len(), 6);
        assert_eq!(enumerate_wp(5).unwrap().len(), 20);
        assert_eq!(enumerate_wp(4).unwrap()[0], wp(1, 2, 4));
        assert!(enumerate_wp(2).is_err());
        let all = enumerate_wp(6).unwrap();
        assert!(all.windows(2).all(|p| (p[0].i(), p[0].j()) < (p[1].i(), p[1].j())));
    }

    #[test]
    fn bar_handles_negatives() {
        assert_eq!(bar(0, 5), 5);
        assert_eq!(bar(-3, 5), 2);
        assert_eq!(bar(5, 5), 5);
        assert_eq!(bar(6, 5), 1);
        assert_eq!(bar(-5, 5), 5);
    }

    #[test]
    fn permutation_embedding() {
        assert_eq!(wp(3, 1, 5).permutation(), vec![3, 2, 4, 5, 1]);
        assert_eq!(WpIndex::unit(4).permutation(), vec![1, 2, 3, 4]);
    }
}
