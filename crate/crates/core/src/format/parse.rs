use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coefficients::{Exponents, Laurent};
use crate::combinatorics::{check_rank, Degree, TildeIndex, WpIndex};
use crate::error::{Error, Result};
use crate::qkring::Element;

type L = Laurent<BigInt>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos] as char;
        if ch.is_ascii_whitespace() {
            pos += 1;
        } else if ch.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let v: BigInt = text[start..pos].parse().expect("digits");
            out.push((start, Tok::Int(v)));
        } else if ch.is_ascii_alphabetic() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            out.push((start, Tok::Ident(text[start..pos].to_string())));
        } else if "+-*^()[],".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            pos += 1;
        } else {
            return Err(Error::parse(pos, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

/// Intermediate value: `scalar` holds `q^d * c` terms with no class attached.
#[derive(Debug, Clone)]
struct Value {
    scalar: BTreeMap<Degree, L>,
    classes: Element<L>,
}

impl Value {
    fn scalar(n: u32, d: Degree, c: L) -> Self {
        let mut scalar = BTreeMap::new();
        if !c.is_zero() {
            scalar.insert(d, c);
        }
        Value {
            scalar,
            classes: Element::zero(n),
        }
    }

    fn add(mut self, other: Value) -> Self {
        for (d, c) in other.scalar {
            add_scalar(&mut self.scalar, d, c);
        }
        self.classes = self.classes + other.classes;
        self
    }

    fn neg(self) -> Self {
        Value {
            scalar: self.scalar.into_iter().map(|(d, c)| (d, -c)).collect(),
            classes: -self.classes,
        }
    }

    fn mul(self, other: Value, pos: usize) -> Result<Self> {
        if !self.classes.is_zero() && !other.classes.is_zero() {
            return Err(Error::parse(pos, "product of two classes is not a linear term"));
        }
        let n = self.classes.n();
        let mut scalar = BTreeMap::new();
        for (d, c) in &self.scalar {
            for (e, x) in &other.scalar {
                add_scalar(&mut scalar, *d + *e, c * x);
            }
        }
        let mut classes = Element::zero(n);
        for (s, e) in [(&self.scalar, &other.classes), (&other.scalar, &self.classes)] {
            for (d, c) in s {
                classes.add_scaled(&e.q_shift(*d), c);
            }
        }
        Ok(Value { scalar, classes })
    }

    fn inverse(&self, pos: usize) -> Result<Self> {
        let mut it = self.scalar.iter();
        if let (Some((d, c)), None, true) = (it.next(), it.next(), self.classes.is_zero()) {
            let mut terms = c.terms();
            if let (Some((e, x)), None) = (terms.next(), terms.next()) {
                if x.abs().is_one() {
                    let inv = Exponents::new(e.as_slice().iter().map(|v| -v).collect());
                    return Ok(Value::scalar(self.classes.n(), -*d, L::monomial(inv, x.clone())));
                }
            }
        }
        Err(Error::parse(pos, "negative power of a non-monomial"))
    }
}

fn add_scalar(map: &mut BTreeMap<Degree, L>, d: Degree, c: L) {
    let sum = match map.remove(&d) {
        Some(old) => old + c,
        None => c,
    };
    if !sum.is_zero() {
        map.insert(d, sum);
    }
}

/// Largest accepted `|k|` in `x^k`; keeps hostile input from blowing up.
const MAX_EXPONENT: i64 = 4096;

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    n: u32,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos(), format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Sym('*')) {
            let pos = self.pos();
            self.at += 1;
            acc = acc.mul(self.power()?, pos)?;
        }
        Ok(acc)
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Error::parse(pos, "expected an integer")),
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let pos = self.pos();
        let v = self.signed_int()?;
        i64::try_from(&v).map_err(|_| Error::parse(pos, "integer out of range"))
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let e = self.small_int()?;
        if e.abs() > MAX_EXPONENT {
            return Err(Error::parse(pos, format!("exponent {e} exceeds {MAX_EXPONENT}")));
        }
        let (mut base, mut e) = if e < 0 {
            (base.inverse(pos)?, -e)
        } else {
            (base, e)
        };
        let mut acc = Value::scalar(self.n, Degree::ZERO, L::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base.clone(), pos)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone().mul(base, pos)?;
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Value> {
        let pos = self.pos();
        let n = self.n;
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(Value::scalar(n, Degree::ZERO, L::constant(v)))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                self.ident(&name, pos)
            }
            Some(_) => Err(Error::parse(pos, "unexpected token")),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }

    fn ident(&mut self, name: &str, pos: usize) -> Result<Value> {
        let n = self.n;
        match name {
            "q1" => Ok(Value::scalar(n, Degree::new(1, 0), L::one())),
            "q2" => Ok(Value::scalar(n, Degree::new(0, 1), L::one())),
            "O" => {
                self.expect('[')?;
                let ipos = self.pos();
                let i = self.small_int()?;
                self.expect(',')?;
                let j = self.small_int()?;
                self.expect(']')?;
                let w = TildeIndex::new(i, j, n as i64)
                    .map_err(|e| Error::parse(ipos, e.to_string()))?;
                let mut v = Value::scalar(n, Degree::ZERO, L::zero());
                v.classes = Element::basis(w);
                Ok(v)
            }
            _ => {
                let r = name
                    .strip_prefix('z')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|_| name.len() > 1 && !name[1..].starts_with('0'))
                    .ok_or_else(|| Error::parse(pos, format!("unknown symbol `{name}`")))?;
                if r == 0 || r >= n as usize {
                    return Err(Error::parse(
                        pos,
                        format!("variable z{r} out of range 1..{}", n - 1),
                    ));
                }
                Ok(Value::scalar(n, Degree::ZERO, L::var(r)))
            }
        }
    }
}

/// Parses an element of `QK_T(X)_q` in the text grammar.
///
/// Terms are `[coeff '*'] [q1['^'k]] ['*'] [q2['^'k]] '*' O[i,j]`, joined by `+` and `-`;
/// coefficients are Laurent expressions in `z1..z{n-1}` with `+ - * ^` and parentheses.
/// A scalar summand stands for that multiple of the unit `O[1,n]`.
pub fn parse_element(text: &str, n: i64) -> Result<Element<L>> {
    let n = check_rank(n)?;
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        n,
    };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    let mut out = v.classes;
    let unit = WpIndex::unit(n).tilde();
    for (d, c) in v.scalar {
        out.add_term(unit.q_shift(d), c);
    }
    Ok(out)
}

/// Parses `d1,d2`.
pub fn parse_degree(text: &str) -> Result<Degree> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::parse(0, "expected `d1,d2`"))?;
    let num = |s: &str, pos: usize| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| Error::parse(pos, format!("bad integer `{}`", s.trim())))
    };
    Ok(Degree::new(num(a, 0)?, num(b, a.len() + 1)?))
}

/// Parses an index literal `[i,j]`, brackets optional.
pub fn parse_index(text: &str, n: i64) -> Result<TildeIndex> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(t);
    let d = parse_degree(inner)?;
    TildeIndex::new(d.d1, d.d2, n)
}
