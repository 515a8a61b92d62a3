use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::combinatorics::{Degree, TildeIndex, WpIndex};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// An element of `QK_T(X)_q`: a finite combination of classes `O^w`, `w` a tilde index.
///
/// Quantum parameters live inside the indices, so `q_1 O^{[1,2]}` is stored as `O^{[1+n,2]}`.
/// Keys iterate in canonical order (degree, then reduced label).
#[derive(Debug, Clone, PartialEq)]
pub struct Element<R> {
    n: u32,
    terms: BTreeMap<TildeIndex, R>,
}

impl<R: Coefficient> Element<R> {
    pub fn zero(n: u32) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `O^{[1,n]}`.
    pub fn one(n: u32) -> Self {
        Self::basis(WpIndex::unit(n).tilde())
    }

    pub fn basis(w: TildeIndex) -> Self {
        Self::term(w, R::one())
    }

    pub fn term(w: TildeIndex, c: R) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, c);
        e
    }

    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (TildeIndex, R)>) -> Result<Self> {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::RankMismatch(n, w.n()));
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TildeIndex, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &TildeIndex) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    /// All indices have degree `(0,0)`: the element lies in ordinary K-theory.
    pub fn is_classical(&self) -> bool {
        self.terms.keys().all(TildeIndex::is_wp)
    }

    pub fn require_classical(&self) -> Result<()> {
        if self.is_classical() {
            Ok(())
        } else {
            Err(Error::NotClassical)
        }
    }

    /// The single basis label, if the element is exactly `O^w` for some `w`.
    pub fn as_basis(&self) -> Option<TildeIndex> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && *c == R::one() => Some(*w),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: TildeIndex, c: R) {
        debug_assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element<R>, c: &R) {
        for (w, v) in &other.terms {
            self.add_term(*w, c.clone() * v.clone());
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Multiplication by `q^d`.
    pub fn q_shift(&self, d: Degree) -> Self {
        Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.q_shift(d), c.clone()))
                .collect(),
        }
    }

    /// The terms of degree exactly `d`.
    pub fn degree_part(&self, d: Degree) -> Self {
        self.filter(|w| w.degree() == d)
    }

    /// The terms of degree componentwise `<= bound`.
    pub fn truncate(&self, bound: Degree) -> Self {
        self.filter(|w| w.degree().le(bound))
    }

    pub fn filter(&self, keep: impl Fn(&TildeIndex) -> bool) -> Self {
        Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> std::collections::BTreeSet<Degree> {
        self.terms.keys().map(TildeIndex::degree).collect()
    }

    pub fn map_coeffs<T: Coefficient>(&self, f: impl Fn(&R) -> T) -> Element<T> {
        let mut out = Element::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(*w, f(c));
        }
        out
    }

    pub fn map_indices(&self, f: impl Fn(&TildeIndex) -> TildeIndex) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Non-equivariant specialization: every torus character set to `1`.
    pub fn specialize(&self) -> Element<R::Scalar> {
        self.map_coeffs(|c| c.specialize_one())
    }

    /// Embeds an element with scalar coefficients.
    pub fn from_scalar_element(e: &Element<R::Scalar>) -> Self {
        e.map_coeffs(|c| R::from_scalar(c.clone()))
    }
}

impl<R: Coefficient> Add for Element<R> {
    type Output = Element<R>;
    fn add(mut self, rhs: Element<R>) -> Element<R> {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<R: Coefficient> Sub for Element<R> {
    type Output = Element<R>;
    fn sub(self, rhs: Element<R>) -> Element<R> {
        self + (-rhs)
    }
}

impl<R: Coefficient> Neg for Element<R> {
    type Output = Element<R>;
    fn neg(self) -> Element<R> {
        Element {
            n: self.n,
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}
