use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Degree, Divisor};
use crate::scalar::{Coefficient, Sign};

use super::chevalley::chevalley_mult;
use super::Element;

/// A monomial `q^d M1^m1 M2^m2`, where `Mk` is multiplication by `O^{[k]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OpMonomial {
    pub m1: u32,
    pub m2: u32,
    pub q: Degree,
}

impl OpMonomial {
    pub const ONE: OpMonomial = OpMonomial {
        m1: 0,
        m2: 0,
        q: Degree::ZERO,
    };

    fn times(self, other: OpMonomial) -> OpMonomial {
        OpMonomial {
            m1: self.m1 + other.m1,
            m2: self.m2 + other.m2,
            q: self.q + other.q,
        }
    }
}

/// A polynomial in the commuting operators `M1`, `M2` with coefficients in `R[q^{+-1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorPolynomial<R> {
    terms: BTreeMap<OpMonomial, R>,
}

impl<R: Coefficient> DivisorPolynomial<R> {
    pub fn zero() -> Self {
        DivisorPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(OpMonomial::ONE, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    /// The operator `Mk`.
    pub fn op(k: Divisor) -> Self {
        let (m1, m2) = match k {
            Divisor::First => (1, 0),
            Divisor::Second => (0, 1),
        };
        let mut p = Self::zero();
        p.add_term(
            OpMonomial {
                m1,
                m2,
                q: Degree::ZERO,
            },
            R::one(),
        );
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpMonomial, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: OpMonomial, c: R) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, c.clone() * v.clone());
        }
        out
    }

    pub fn q_shift(&self, d: Degree) -> Self {
        DivisorPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = *m;
                    m.q = m.q + d;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates the operator polynomial on `e` using iterated Chevalley products.
    pub fn apply(&self, e: &Element<R>) -> Element<R> {
        let max1 = self.terms.keys().map(|m| m.m1).max().unwrap_or(0);
        let mut column = e.clone();
        let mut out = Element::zero(e.n());
        for a in 0..=max1 {
            let row: Vec<_> = self.terms.iter().filter(|(m, _)| m.m1 == a).collect();
            if !row.is_empty() {
                let max2 = row.iter().map(|(m, _)| m.m2).max().unwrap_or(0);
                let mut cur = column.clone();
                for b in 0..=max2 {
                    for (m, c) in row.iter().filter(|(m, _)| m.m2 == b) {
                        out.add_scaled(&cur.q_shift(m.q), c);
                    }
                    if b < max2 {
                        cur = chevalley_mult(&cur, Divisor::Second);
                    }
                }
            }
            if a < max1 {
                column = chevalley_mult(&column, Divisor::First);
            }
        }
        out
    }
}

impl<R: Coefficient> Add for DivisorPolynomial<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<R: Coefficient> Neg for DivisorPolynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        DivisorPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<R: Coefficient> Sub for DivisorPolynomial<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Coefficient> Mul for &DivisorPolynomial<R> {
    type Output = DivisorPolynomial<R>;
    fn mul(self, rhs: &DivisorPolynomial<R>) -> DivisorPolynomial<R> {
        let mut out = DivisorPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.times(*b), x.clone() * y.clone());
            }
        }
        out
    }
}

fn write_op_monomial(m: &OpMonomial) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q1", m.q.d1), ("q2", m.q.d2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    for (name, e) in [("M1", m.m1), ("M2", m.m2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl<R: Coefficient> fmt::Display for DivisorPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (sign, factor) = c.print_factor();
            let mono = write_op_monomial(m);
            let body = match (factor, mono.is_empty()) {
                (None, true) => "1".to_string(),
                (None, false) => mono,
                (Some(fac), true) => fac,
                (Some(fac), false) => format!("{fac}*{mono}"),
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
