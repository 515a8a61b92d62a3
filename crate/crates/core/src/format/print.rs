use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coefficients::{Exponents, Laurent};
use crate::combinatorics::{check_rank, Degree, TildeIndex};
use crate::error::{Error, Result};
use crate::projective::ProjElement;
use crate::qkring::Element;
use crate::scalar::{Coefficient, Sign};

fn q_factor(d: Degree) -> Option<String> {
    let mut parts = Vec::new();
    for (name, e) in [("q1", d.d1), ("q2", d.d2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    (!parts.is_empty()).then(|| parts.join("*"))
}

/// Canonical text form: `(1 - z1)*O[2,3] + z1*q1*O[1,3]`, terms ordered by degree then label.
pub fn format_element<R: Coefficient>(e: &Element<R>) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (w, c)) in e.terms().enumerate() {
        let (sign, factor) = c.print_factor();
        let (b, d) = w.normalize();
        let body = [factor, q_factor(d), Some(format!("O[{},{}]", b.i(), b.j()))]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join("*");
        out.push_str(match (idx, sign) {
            (0, Sign::Plus) => "",
            (0, Sign::Minus) => "-",
            (_, Sign::Plus) => " + ",
            (_, Sign::Minus) => " - ",
        });
        out.push_str(&body);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMonomial {
    pub exp: Vec<i32>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub i: i64,
    pub j: i64,
    pub bar: [i64; 2],
    pub degree: [i64; 2],
    pub coeff: Vec<JsonMonomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonElement {
    pub n: u32,
    pub terms: Vec<JsonTerm>,
}

fn json_coeff<R: Coefficient>(c: &R, n: u32) -> Vec<JsonMonomial> {
    c.monomials()
        .into_iter()
        .map(|(e, s)| JsonMonomial {
            exp: Exponents::new(e).padded(n as usize - 1),
            c: s.to_string(),
        })
        .collect()
}

pub fn element_to_json_value<R: Coefficient>(e: &Element<R>) -> JsonElement {
    let n = e.n();
    JsonElement {
        n,
        terms: e
            .terms()
            .map(|(w, c)| {
                let (b, d) = w.normalize();
                JsonTerm {
                    i: w.i(),
                    j: w.j(),
                    bar: [b.i(), b.j()],
                    degree: [d.d1, d.d2],
                    coeff: json_coeff(c, n),
                }
            })
            .collect(),
    }
}

/// Compact JSON with a fixed key order; coefficients are decimal strings.
pub fn element_to_json<R: Coefficient>(e: &Element<R>) -> String {
    serde_json::to_string(&element_to_json_value(e)).expect("plain data serializes")
}

/// Reads the JSON form back, checking that every redundant field is consistent.
pub fn element_from_json(text: &str) -> Result<Element<Laurent<BigInt>>> {
    let raw: JsonElement = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
    let n = check_rank(raw.n as i64)?;
    let mut out = Element::zero(n);
    for t in raw.terms {
        let w = TildeIndex::new(t.i, t.j, n as i64)?;
        let (b, d) = w.normalize();
        if t.bar != [b.i(), b.j()] || t.degree != [d.d1, d.d2] {
            return Err(Error::parse(0, format!("inconsistent bar/degree for {w}")));
        }
        let mut c = Laurent::<BigInt>::constant(BigInt::from(0));
        for m in t.coeff {
            if m.exp.len() != n as usize - 1 {
                return Err(Error::parse(0, format!("exponent vector of length {}", m.exp.len())));
            }
            let v: BigInt = m
                .c
                .parse()
                .map_err(|_| Error::parse(0, format!("bad integer `{}`", m.c)))?;
            c = c + Laurent::monomial(Exponents::new(m.exp), v);
        }
        out.add_term(w, c);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonProjTerm {
    pub k: i64,
    pub residue: i64,
    pub degree: i64,
    pub coeff: Vec<JsonMonomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonProjElement {
    pub n: u32,
    pub terms: Vec<JsonProjTerm>,
}

pub fn proj_to_json<R: Coefficient>(e: &ProjElement<R>) -> String {
    let n = e.n();
    let v = JsonProjElement {
        n,
        terms: e
            .terms()
            .map(|(k, c)| JsonProjTerm {
                k: k.k(),
                residue: k.residue(),
                degree: k.degree(),
                coeff: json_coeff(c, n),
            })
            .collect(),
    };
    serde_json::to_string(&v).expect("plain data serializes")
}
