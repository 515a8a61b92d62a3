//! Equivariant coefficients: Laurent polynomials in the simple-root characters
//! `z_r = [C_{e_{r+1} - e_r}]`, `r = 1..n-1`, with exact scalar coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::combinatorics::bar;
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Scalar, Sign};

/// Exponent vector with trailing zeros trimmed. Missing entries read as zero, so the
/// order below agrees with the lexicographic order of the zero-padded vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Exponents(Vec<i32>);

impl Exponents {
    pub fn new(mut v: Vec<i32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Exponents(v)
    }

    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    /// Exponent of `z_r` (1-based).
    pub fn get(&self, r: usize) -> i32 {
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn padded(&self, len: usize) -> Vec<i32> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Highest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn combine(&self, other: &Exponents) -> Exponents {
        let len = self.0.len().max(other.0.len());
        Exponents::new(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&0) + other.0.get(k).unwrap_or(&0))
                .collect(),
        )
    }

    fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for k in 0..len {
            let (a, b) = (self.0.get(k).unwrap_or(&0), other.0.get(k).unwrap_or(&0));
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Laurent<S> {
    terms: BTreeMap<Exponents, S>,
}

impl<S: Scalar> Laurent<S> {
    pub fn constant(c: S) -> Self {
        Self::monomial(Exponents::one(), c)
    }

    pub fn monomial(e: Exponents, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// `z_r^e`.
    pub fn var_pow(r: usize, e: i32) -> Self {
        assert!(r >= 1, "variables are 1-based");
        let mut v = vec![0; r];
        v[r - 1] = e;
        Self::monomial(Exponents::new(v), S::one())
    }

    pub fn var(r: usize) -> Self {
        Self::var_pow(r, 1)
    }

    /// `[C_{e_a - e_b}]` for `a, b` in `1..=n`: the product of `z_r`, `b <= r < a`,
    /// or its inverse when `a < b`.
    pub fn char_monomial(a: usize, b: usize) -> Self {
        let top = a.max(b);
        let mut v = vec![0; top];
        if a > b {
            v[b - 1..a - 1].iter_mut().for_each(|e| *e = 1);
        } else {
            v[a - 1..b - 1].iter_mut().for_each(|e| *e = -1);
        }
        Self::monomial(Exponents::new(v), S::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponents) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Exponents::one()).cloned(),
            _ => None,
        }
    }

    /// Largest variable index occurring in any monomial.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Exponents::num_vars).max().unwrap_or(0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(Exponents::has_negative)
    }

    fn add_term(&mut self, e: Exponents, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Evaluation at `z_1 = ... = z_{n-1} = 1`.
    pub fn specialize_one(&self) -> S {
        self.terms.values().fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// Applies `z_r -> z_{n-r}`.
    pub fn phi_twist(&self, n: u32) -> Self {
        let m = n as usize - 1;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            assert!(e.num_vars() <= m, "variable index exceeds n-1");
            let mut v = vec![0; m];
            for r in 1..=e.num_vars() {
                v[m - r] = e.get(r);
            }
            out.add_term(Exponents::new(v), c.clone());
        }
        out
    }

    /// Rewrites a polynomial in the `z_r` in the variables `y_r = z_r - 1`.
    pub fn to_positivity_basis(&self) -> Result<PositivityPoly<S>> {
        if self.has_negative_exponents() {
            return Err(Error::NotPolynomial);
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            // z^e = prod_r (1 + y_r)^{e_r}
            let mut expansion = Self::constant(c.clone());
            for r in 1..=e.num_vars() {
                let one_plus_y = Self::var(r) + Self::one();
                for _ in 0..e.get(r) {
                    expansion = &expansion * &one_plus_y;
                }
            }
            out = out + expansion;
        }
        Ok(PositivityPoly(out))
    }
}

/// A polynomial in `y_r = [C_{e_{r+1} - e_r}] - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityPoly<S>(Laurent<S>);

impl<S: Scalar> PositivityPoly<S> {
    pub fn as_laurent(&self) -> &Laurent<S> {
        &self.0
    }

    /// All coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.0.terms().all(|(_, c)| !c.is_negative())
    }

    /// Substitutes `y_r = z_r - 1` back.
    pub fn to_torus(&self) -> Laurent<S> {
        let mut out = Laurent::zero();
        for (e, c) in self.0.terms() {
            let mut t = Laurent::constant(c.clone());
            for r in 1..=e.num_vars() {
                let y = Laurent::<S>::var(r) - Laurent::one();
                for _ in 0..e.get(r) {
                    t = &t * &y;
                }
            }
            out = out + t;
        }
        out
    }
}

impl<S: Scalar> fmt::Display for PositivityPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.0, 'y')
    }
}

impl<S: Scalar> Zero for Laurent<S> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for Laurent<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Scalar> Add<&Laurent<S>> for &Laurent<S> {
    type Output = Laurent<S>;
    fn add(self, rhs: &Laurent<S>) -> Laurent<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub<&Laurent<S>> for &Laurent<S> {
    type Output = Laurent<S>;
    fn sub(self, rhs: &Laurent<S>) -> Laurent<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul<&Laurent<S>> for &Laurent<S> {
    type Output = Laurent<S>;
    fn mul(self, rhs: &Laurent<S>) -> Laurent<S> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.combine(e2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Add for Laurent<S> {
    type Output = Laurent<S>;
    fn add(self, rhs: Laurent<S>) -> Laurent<S> {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (e, c) in small.terms {
            big.add_term(e, c);
        }
        big
    }
}

impl<S: Scalar> Sub for Laurent<S> {
    type Output = Laurent<S>;
    fn sub(self, rhs: Laurent<S>) -> Laurent<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Laurent<S> {
    type Output = Laurent<S>;
    fn mul(self, rhs: Laurent<S>) -> Laurent<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Laurent<S> {
    type Output = Laurent<S>;
    fn neg(self) -> Laurent<S> {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

fn write_monomial(e: &Exponents, var: char) -> String {
    let mut parts = Vec::new();
    for r in 1..=e.num_vars() {
        match e.get(r) {
            0 => {}
            1 => parts.push(format!("{var}{r}")),
            p => parts.push(format!("{var}{r}^{p}")),
        }
    }
    parts.join("*")
}

fn write_poly<S: Scalar>(f: &mut fmt::Formatter<'_>, p: &Laurent<S>, var: char) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mono = write_monomial(e, var);
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    Ok(())
}

impl<S: Scalar> fmt::Display for Laurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, 'z')
    }
}

impl<S: Scalar> Coefficient for Laurent<S> {
    type Scalar = S;

    fn character(n: u32, a: i64, b: i64) -> Self {
        Laurent::char_monomial(bar(a, n) as usize, bar(b, n) as usize)
    }

    fn phi_twist(&self, n: u32) -> Self {
        Laurent::phi_twist(self, n)
    }

    fn specialize_one(&self) -> S {
        Laurent::specialize_one(self)
    }

    fn from_scalar(s: S) -> Self {
        Laurent::constant(s)
    }

    fn monomials(&self) -> Vec<(Vec<i32>, S)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.as_slice().to_vec(), c.clone()))
            .collect()
    }

    fn print_factor(&self) -> (Sign, Option<String>) {
        if self.terms.len() != 1 {
            return (Sign::Plus, Some(format!("({self})")));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let sign = if c.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        };
        let mag = c.abs();
        let mono = write_monomial(e, 'z');
        let text = match (mono.is_empty(), mag.is_one()) {
            (true, true) => None,
            (true, false) => Some(mag.to_string()),
            (false, true) => Some(mono),
            (false, false) => Some(format!("{mag}*{mono}")),
        };
        (sign, text)
    }
}
