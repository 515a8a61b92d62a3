//! Quantum K-theory of `P^{n-1}` and the projection from `X` that forgets the hyperplane.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{bar, check_rank};
use crate::error::{Error, Result};
use crate::qkring::Element;
use crate::scalar::{Coefficient, Sign};

/// `O^k` for any integer `k`, meaning `q^{floor(k/n)} O^{k mod n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjIndex {
    k: i64,
    n: u32,
}

impl ProjIndex {
    pub fn new(k: i64, n: i64) -> Result<Self> {
        Ok(ProjIndex {
            k,
            n: check_rank(n)?,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The power of `q`.
    pub fn degree(&self) -> i64 {
        self.k.div_euclid(self.n as i64)
    }

    /// The class `O^r`, `0 <= r < n`.
    pub fn residue(&self) -> i64 {
        self.k.rem_euclid(self.n as i64)
    }
}

impl fmt::Display for ProjIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            0 => {}
            1 => write!(f, "q*")?,
            d => write!(f, "q^{d}*")?,
        }
        write!(f, "O^{}", self.residue())
    }
}

/// An element of `QK_T(P^{n-1})_q`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjElement<R> {
    n: u32,
    terms: BTreeMap<i64, R>,
}

impl<R: Coefficient> ProjElement<R> {
    pub fn zero(n: u32) -> Self {
        ProjElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: ProjIndex) -> Self {
        let mut e = Self::zero(k.n);
        e.add_term(k.k, R::one());
        e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (ProjIndex, &R)> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| (ProjIndex { k: *k, n: self.n }, c))
    }

    pub fn coeff(&self, k: i64) -> R {
        self.terms.get(&k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: i64, c: R) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    /// Only `O^0` and `O^1` occur.
    pub fn is_divisor_combination(&self) -> bool {
        self.terms.keys().all(|k| *k == 0 || *k == 1)
    }

    /// `e * O^1`: `O^m * O^1 = (1 - [C_{e_{m+1} - e_1}]) O^m + [C_{e_{m+1} - e_1}] O^{m+1}`.
    pub fn times_hyperplane(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for (k, c) in &self.terms {
            let ch = R::character(n, bar(k + 1, n), 1);
            out.add_term(*k, c.clone() * (R::one() - ch.clone()));
            out.add_term(k + 1, c.clone() * ch);
        }
        out
    }
}

impl<R: Coefficient> fmt::Display for ProjElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms().enumerate() {
            let (sign, factor) = c.print_factor();
            let body = match factor {
                Some(fac) => format!("{fac}*{k}"),
                None => k.to_string(),
            };
            match (idx, sign) {
                (0, Sign::Plus) => write!(f, "{body}")?,
                (0, Sign::Minus) => write!(f, "-{body}")?,
                (_, Sign::Plus) => write!(f, " + {body}")?,
                (_, Sign::Minus) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// `O^{[i,j]} -> O^{i-1}`: the class `q^{(d1,d2)} O^{[bar i, bar j]}` goes to
/// `q^{d1} O^{bar i - 1}`, so `q_2` becomes `1`.
pub fn project<R: Coefficient>(e: &Element<R>) -> ProjElement<R> {
    let mut out = ProjElement::zero(e.n());
    for (w, c) in e.terms() {
        out.add_term(w.i() - 1, c.clone());
    }
    out
}

/// Product in `QK_T(P^{n-1})`.
///
/// Non-equivariantly `O^a * O^b = O^{a+b}`, with coefficients specialized at `z = 1`.
/// Equivariantly only products with a factor supported on `O^0, O^1` are available.
pub fn proj_mult<R: Coefficient>(
    a: &ProjElement<R>,
    b: &ProjElement<R>,
    equivariant: bool,
) -> Result<ProjElement<R>> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    let mut out = ProjElement::zero(a.n);
    if !equivariant {
        for (k, x) in &a.terms {
            for (l, y) in &b.terms {
                let c = (x.clone() * y.clone()).specialize_one();
                out.add_term(k + l, R::from_scalar(c));
            }
        }
        return Ok(out);
    }
    let (other, divisor) = if b.is_divisor_combination() {
        (a, b)
    } else if a.is_divisor_combination() {
        (b, a)
    } else {
        return Err(Error::EquivariantNonDivisor);
    };
    let c0 = divisor.coeff(0);
    let c1 = divisor.coeff(1);
    for (k, x) in &other.terms {
        out.add_term(*k, x.clone() * c0.clone());
    }
    for (k, x) in &other.times_hyperplane().terms {
        out.add_term(*k, x.clone() * c1.clone());
    }
    Ok(out)
}
