//! Exhaustive verification suites cross-checking the rules against each other.

mod oracle;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use oracle::PermutationOracle;

use crate::coefficients::Laurent;
use crate::combinatorics::{
    bar, bruhat_leq, check_rank, chi, enumerate_wp, i_set, Degree, Divisor, TildeIndex, WpIndex,
};
use crate::error::{Error, Result};
use crate::format::format_element;
use crate::gromov_witten::{
    gamma_opposite, gw_divisor_closed, gw_divisor_qclassical, odot_divisor, psi, psi_inverse,
    q_interval_check, three_point,
};
use crate::projective::{proj_mult, project, ProjElement, ProjIndex};
use crate::qkring::{
    chevalley_mult, classical_divisor_mult, lr_mult, phi_map, Element, QkRing,
};
use crate::scalar::Coefficient;

type Torus = Laurent<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Associativity,
    LrVsAlgorithm,
    ChevalleyPositivity,
    LrPositivity,
    PhiSymmetry,
    QuantumClassical,
    PsiRoundtrip,
    OdotCheck,
    GenusZero,
    QInterval,
    ProjectionHom,
    IsetOracle,
    BruhatOracle,
    LemmaChi,
    EquivariantPositivityConjecture,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Associativity,
        Suite::LrVsAlgorithm,
        Suite::ChevalleyPositivity,
        Suite::LrPositivity,
        Suite::PhiSymmetry,
        Suite::QuantumClassical,
        Suite::PsiRoundtrip,
        Suite::OdotCheck,
        Suite::GenusZero,
        Suite::QInterval,
        Suite::ProjectionHom,
        Suite::IsetOracle,
        Suite::BruhatOracle,
        Suite::LemmaChi,
        Suite::EquivariantPositivityConjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Associativity => "associativity",
            Suite::LrVsAlgorithm => "lr-vs-algorithm",
            Suite::ChevalleyPositivity => "chevalley-positivity",
            Suite::LrPositivity => "lr-positivity",
            Suite::PhiSymmetry => "phi-symmetry",
            Suite::QuantumClassical => "quantum-classical",
            Suite::PsiRoundtrip => "psi-roundtrip",
            Suite::OdotCheck => "odot-check",
            Suite::GenusZero => "genus-zero",
            Suite::QInterval => "q-interval",
            Suite::ProjectionHom => "projection-hom",
            Suite::IsetOracle => "iset-oracle",
            Suite::BruhatOracle => "bruhat-oracle",
            Suite::LemmaChi => "lemma-chi",
            Suite::EquivariantPositivityConjecture => "equivariant-positivity-conjecture",
        }
    }

    /// Report-only suites surface violations as observations and never fail.
    pub fn report_only(self) -> bool {
        self == Suite::EquivariantPositivityConjecture
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

fn fail(inputs: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Failure {
    Failure {
        inputs: inputs.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: i64,
    pub cutoff: Degree,
    /// Overrides the suite's default coefficient ring where it has a choice.
    pub equivariant: Option<bool>,
}

impl SuiteConfig {
    pub fn new(n: i64) -> Self {
        SuiteConfig {
            n,
            cutoff: Degree::new(3, 3),
            equivariant: None,
        }
    }

    pub fn cutoff(mut self, cutoff: Degree) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn equivariant(mut self, eq: bool) -> Self {
        self.equivariant = Some(eq);
        self
    }
}

/// Outcome of one suite. Everything except `elapsed` is reproducible byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: u32,
    pub cutoff: [i64; 2],
    pub equivariant: bool,
    pub cases_run: usize,
    pub passed: bool,
    pub report_only: bool,
    pub failures: Vec<Failure>,
    pub observations: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = match (self.passed, self.report_only) {
            (_, true) => "REPORT",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        let _ = writeln!(s, "suite: {}", self.suite);
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "cutoff: ({},{})", self.cutoff[0], self.cutoff[1]);
        let _ = writeln!(s, "equivariant: {}", self.equivariant);
        let _ = writeln!(s, "cases: {}", self.cases_run);
        let _ = writeln!(s, "status: {status}");
        for f in &self.failures {
            let _ = writeln!(
                s,
                "failure: {} | expected {} | actual {}",
                f.inputs, f.expected, f.actual
            );
        }
        for o in &self.observations {
            let _ = writeln!(s, "note: {o}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
    observations: Vec<String>,
}

impl Tally {
    /// Runs `check` on every case in parallel, keeping results in case order.
    fn sweep<T, F>(&mut self, items: &[T], check: F) -> Result<()>
    where
        T: Sync,
        F: Fn(&T) -> Result<Vec<Failure>> + Sync + Send,
    {
        self.cases += items.len();
        self.sweep_aux(items, check)
    }

    /// Like [`Tally::sweep`] but the cases do not count towards `cases_run`.
    fn sweep_aux<T, F>(&mut self, items: &[T], check: F) -> Result<()>
    where
        T: Sync,
        F: Fn(&T) -> Result<Vec<Failure>> + Sync + Send,
    {
        let results: Vec<Result<Vec<Failure>>> = items.par_iter().map(check).collect();
        for r in results {
            self.failures.extend(r?);
        }
        Ok(())
    }
}

fn check_eq<T: PartialEq>(inputs: impl FnOnce() -> String, expected: T, actual: T, show: impl Fn(&T) -> String) -> Vec<Failure> {
    if expected == actual {
        Vec::new()
    } else {
        vec![fail(inputs(), show(&expected), show(&actual))]
    }
}

fn shifted_basis(n: u32, cutoff: Degree) -> Result<Vec<TildeIndex>> {
    let wp = enumerate_wp(n as i64)?;
    Ok(Degree::effective_up_to(cutoff)
        .flat_map(|d| wp.iter().map(move |u| u.q_shift(d)))
        .collect())
}

fn pairs(all: &[WpIndex]) -> Vec<(WpIndex, WpIndex)> {
    all.iter()
        .flat_map(|&u| all.iter().map(move |&v| (u, v)))
        .collect()
}

fn sign(parity: i64) -> i64 {
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn run_suite(suite: Suite, cfg: SuiteConfig) -> Result<VerificationReport> {
    let n = check_rank(cfg.n)?;
    cfg.cutoff.require_effective()?;
    let start = Instant::now();
    let mut t = Tally::default();
    let mut equivariant = true;
    match suite {
        Suite::Associativity => {
            equivariant = cfg.equivariant.unwrap_or(n <= 4);
            if equivariant {
                associativity::<Torus>(&mut t, n)?
            } else {
                associativity::<BigInt>(&mut t, n)?
            }
        }
        Suite::LrVsAlgorithm => lr_vs_algorithm(&mut t, n)?,
        Suite::ChevalleyPositivity => chevalley_positivity(&mut t, n)?,
        Suite::LrPositivity => {
            equivariant = false;
            lr_positivity(&mut t, n)?
        }
        Suite::PhiSymmetry => phi_symmetry(&mut t, n, cfg.cutoff)?,
        Suite::QuantumClassical => quantum_classical(&mut t, n, cfg.cutoff)?,
        Suite::PsiRoundtrip => psi_roundtrip(&mut t, n, cfg.cutoff)?,
        Suite::OdotCheck => odot_check(&mut t, n, cfg.cutoff)?,
        Suite::GenusZero => {
            equivariant = false;
            genus_zero(&mut t, n, cfg.cutoff)?
        }
        Suite::QInterval => {
            equivariant = false;
            q_interval(&mut t, n)?
        }
        Suite::ProjectionHom => projection_hom(&mut t, n)?,
        Suite::IsetOracle => {
            equivariant = false;
            iset_oracle(&mut t, n)?
        }
        Suite::BruhatOracle => {
            equivariant = false;
            bruhat_oracle(&mut t, n)?
        }
        Suite::LemmaChi => {
            equivariant = false;
            lemma_chi(&mut t, n)?
        }
        Suite::EquivariantPositivityConjecture => positivity_conjecture(&mut t, n)?,
    }
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        n,
        cutoff: [cfg.cutoff.d1, cfg.cutoff.d2],
        equivariant,
        cases_run: t.cases,
        passed: t.failures.is_empty(),
        report_only: suite.report_only(),
        failures: t.failures,
        observations: t.observations,
        elapsed: start.elapsed(),
    })
}

fn associativity<R: Coefficient>(t: &mut Tally, n: u32) -> Result<()> {
    let ring = QkRing::<R>::new(n as i64)?;
    let all = enumerate_wp(n as i64)?;
    let triples: Vec<_> = pairs(&all)
        .into_iter()
        .flat_map(|(u, v)| all.iter().map(move |&w| (u, v, w)))
        .collect();
    t.sweep(&triples, |&(u, v, w)| {
        let (a, b, c) = (
            Element::<R>::basis(u.tilde()),
            Element::basis(v.tilde()),
            Element::basis(w.tilde()),
        );
        let lhs = ring.mult(&ring.mult(&a, &b)?, &c)?;
        let rhs = ring.mult(&a, &ring.mult(&b, &c)?)?;
        Ok(check_eq(|| format!("(O{u}*O{v})*O{w}"), rhs, lhs, format_element))
    })
}

fn lr_vs_algorithm(t: &mut Tally, n: u32) -> Result<()> {
    let ring = QkRing::<Torus>::new(n as i64)?;
    let all = enumerate_wp(n as i64)?;
    t.sweep(&pairs(&all), |&(u, v)| {
        let p = ring.basis_product(u, v)?;
        let mut out = check_eq(
            || format!("O{u}*O{v} at z=1"),
            lr_mult::<BigInt>(u.tilde(), v.tilde())?,
            p.specialize(),
            format_element,
        );
        out.extend(check_eq(
            || format!("O{u}*O{v} vs O{v}*O{u}"),
            (*ring.basis_product(v, u)?).clone(),
            (*p).clone(),
            format_element,
        ));
        for k in Divisor::BOTH {
            if v == k.index(n) {
                out.extend(check_eq(
                    || format!("O{u}*O{v} vs Chevalley k={}", k.k()),
                    chevalley_mult(&Element::basis(u.tilde()), k),
                    (*p).clone(),
                    format_element,
                ));
            }
        }
        Ok(out)
    })
}

fn positive_after_sign(c: &Torus, s: i64) -> std::result::Result<(), String> {
    let signed = if s > 0 { c.clone() } else { -c.clone() };
    match signed.to_positivity_basis() {
        Ok(p) if p.is_nonnegative() => Ok(()),
        Ok(p) => Err(format!("negative coefficient in {p}")),
        Err(e) => Err(e.to_string()),
    }
}

fn chevalley_positivity(t: &mut Tally, n: u32) -> Result<()> {
    let cases: Vec<_> = enumerate_wp(n as i64)?
        .into_iter()
        .flat_map(|u| Divisor::BOTH.map(|k| (u, k)))
        .collect();
    t.sweep(&cases, |&(u, k)| {
        let e = Element::<Torus>::basis(u.tilde());
        let prod = chevalley_mult(&e, k);
        let mut out = Vec::new();
        if prod.len() > 4 {
            out.push(fail(format!("O{u}*O^[{}]", k.k()), "at most 4 terms", prod.len()));
        }
        for (w, c) in prod.terms() {
            if let Err(msg) = positive_after_sign(c, sign(u.length() + 1 + w.length())) {
                out.push(fail(
                    format!("coefficient of O{w} in O{u}*O^[{}]", k.k()),
                    "nonnegative in y",
                    msg,
                ));
            }
        }
        out.extend(check_eq(
            || format!("classical O{u}.O^[{}]", k.k()),
            prod.degree_part(Degree::ZERO),
            classical_divisor_mult(&e, k),
            format_element,
        ));
        Ok(out)
    })
}

fn lr_positivity(t: &mut Tally, n: u32) -> Result<()> {
    let all = enumerate_wp(n as i64)?;
    t.sweep(&pairs(&all), |&(u, v)| {
        let prod = lr_mult::<i64>(u.tilde(), v.tilde())?;
        let mut out = Vec::new();
        if prod.len() != 1 && prod.len() != 3 {
            out.push(fail(format!("O{u}*O{v}"), "1 or 3 terms", prod.len()));
        }
        for (w, c) in prod.terms() {
            let s = sign(u.length() + v.length() + w.length()) * c;
            if s < 0 {
                out.push(fail(format!("coefficient of O{w} in O{u}*O{v}"), ">= 0", s));
            }
        }
        Ok(out)
    })
}

fn phi_symmetry(t: &mut Tally, n: u32, cutoff: Degree) -> Result<()> {
    let basis = shifted_basis(n, cutoff)?;
    t.sweep(&basis, |&w| {
        let e = Element::<Torus>::basis(w);
        let mut out = Vec::new();
        for k in Divisor::BOTH {
            out.extend(check_eq(
                || format!("phi(O{w}*O^[{}])", k.k()),
                chevalley_mult(&phi_map(&e), k.other()),
                phi_map(&chevalley_mult(&e, k)),
                format_element,
            ));
        }
        out.extend(check_eq(|| format!("phi(phi(O{w}))"), e.clone(), phi_map(&phi_map(&e)), format_element));
        Ok(out)
    })?;
    let all = enumerate_wp(n as i64)?;
    let cases: Vec<_> = all
        .iter()
        .flat_map(|&u| basis.iter().map(move |&w| (u, w)))
        .collect();
    t.sweep(&cases, |&(u, w)| {
        let lhs = gw_divisor_closed::<Torus>(u, Divisor::First, w).phi_twist(n);
        let rhs = gw_divisor_closed::<Torus>(u.iota(), Divisor::Second, w.iota());
        Ok(check_eq(
            || format!("twisted I(O{u},O^[1];O_{w}) vs I(O{},O^[2];O_{})", u.iota(), w.iota()),
            rhs,
            lhs,
            |c| c.to_string(),
        ))
    })
}

fn quantum_classical(t: &mut Tally, n: u32, cutoff: Degree) -> Result<()> {
    let all = enumerate_wp(n as i64)?;
    let cases: Vec<_> = pairs(&all)
        .into_iter()
        .flat_map(|(u, w)| {
            Divisor::BOTH
                .into_iter()
                .flat_map(move |k| Degree::effective_up_to(cutoff).map(move |d| (u, k, w, d)))
        })
        .collect();
    t.sweep(&cases, |&(u, k, w, d)| {
        let closed = gw_divisor_closed::<Torus>(u, k, w.q_shift(d));
        let classical = gw_divisor_qclassical(&Element::<Torus>::basis(u.tilde()), k, w, d)?;
        Ok(check_eq(
            || format!("I_{d}(O{u},O^[{}];O_{w})", k.k()),
            classical,
            closed,
            |c| c.to_string(),
        ))
    })
}

fn psi_roundtrip(t: &mut Tally, n: u32, cutoff: Degree) -> Result<()> {
    let basis = shifted_basis(n, cutoff)?;
    t.sweep(&basis, |&w| {
        let e = Element::<Torus>::basis(w);
        let s = psi(&e, cutoff)?;
        let mut out = check_eq(
            || format!("degree {} part of Psi(O{w})", w.degree()),
            e.clone(),
            s.element.degree_part(w.degree()),
            format_element,
        );
        out.extend(check_eq(
            || format!("Psi^-1(Psi(O{w}))"),
            e.clone(),
            psi_inverse(&s)?,
            format_element,
        ));
        Ok(out)
    })
}

fn odot_check(t: &mut Tally, n: u32, cutoff: Degree) -> Result<()> {
    let cases: Vec<_> = enumerate_wp(n as i64)?
        .into_iter()
        .flat_map(|u| Divisor::BOTH.map(|k| (u, k)))
        .collect();
    t.sweep(&cases, |&(u, k)| {
        let lhs = odot_divisor::<Torus>(u, k, cutoff)?.element;
        let rhs = psi(&chevalley_mult(&Element::basis(u.tilde()), k), cutoff)?.element;
        Ok(check_eq(
            || format!("O{u} (.) O^[{}]", k.k()),
            rhs,
            lhs,
            format_element,
        ))
    })
}

fn genus_zero(t: &mut Tally, n: u32, cutoff: Degree) -> Result<()> {
    let all = enumerate_wp(n as i64)?;
    let cases: Vec<_> = pairs(&all)
        .into_iter()
        .flat_map(|(u, v)| {
            all.iter().flat_map(move |&w| {
                Degree::effective_up_to(cutoff).map(move |d| (u, v, w, d))
            })
        })
        .collect();
    t.sweep(&cases, |&(u, v, w, d)| {
        let x = three_point::<BigInt>(u, v, w, d)?;
        if x.is_zero() || x.is_one() {
            Ok(Vec::new())
        } else {
            Ok(vec![fail(format!("I_{d}(O{u},O{v},O_{w})"), "0 or 1", x)])
        }
    })?;

    // Curve-neighborhood criterion and monotonicity of neighborhoods; `cases_run`
    // counts only the triple sweep above.
    let wp = &all;
    let cases: Vec<(Degree, TildeIndex)> = Degree::effective_up_to(cutoff)
        .flat_map(|d| {
            Degree::effective_up_to(d)
                .flat_map(move |d0| wp.iter().map(move |xy| (d, xy.q_shift(d0))))
        })
        .collect();
    t.sweep_aux(&cases, |&(d, xy)| {
        let z = gamma_opposite(xy.bar(), d - xy.degree())?;
        let m = n as i64;
        let mut out = Vec::new();
        for &ab in wp {
            let lhs = bruhat_leq(z, ab)?;
            let rhs = xy.i() <= ab.i() + d.d1 * m && xy.j() >= ab.j() - d.d2 * m;
            if lhs != rhs {
                out.push(fail(format!("Gamma_{d}(X^{xy}) = X^{z} vs {ab}"), rhs, lhs));
            }
        }
        Ok(out)
    })?;
    let cases: Vec<_> = all
        .iter()
        .flat_map(|&u| {
            Degree::effective_up_to(cutoff)
                .flat_map(move |d| Degree::effective_up_to(cutoff).map(move |e| (u, d, e)))
        })
        .filter(|&(_, d, e)| d.le(e))
        .collect();
    t.sweep_aux(&cases, |&(u, d, e)| {
        let small = gamma_opposite(u, d)?;
        let big = gamma_opposite(u, e)?;
        if bruhat_leq(big, small)? {
            Ok(Vec::new())
        } else {
            Ok(vec![fail(format!("Gamma_{e}(X^{u}) contains Gamma_{d}(X^{u})"), small, big)])
        }
    })
}

fn q_interval(t: &mut Tally, n: u32) -> Result<()> {
    let all = enumerate_wp(n as i64)?;
    let cases = pairs(&all);
    let reports: Vec<_> = cases
        .par_iter()
        .map(|&(u, v)| q_interval_check(u, v).map(|r| (u, v, r)))
        .collect::<Result<_>>()?;
    let mut shapes: BTreeMap<String, usize> = BTreeMap::new();
    for (u, v, r) in &reports {
        let lo = Degree::new(
            r.degrees.iter().map(|d| d.d1).min().unwrap_or(0),
            r.degrees.iter().map(|d| d.d2).min().unwrap_or(0),
        );
        let shape = r
            .degrees
            .iter()
            .map(|d| (*d - lo).to_string())
            .collect::<Vec<_>>()
            .join(",");
        *shapes.entry(format!("{{{shape}}}")).or_default() += 1;
        if !r.holds {
            let raw = r.degrees.iter().map(Degree::to_string).collect::<Vec<_>>().join(",");
            t.failures.push(fail(format!("degrees of O{u}*O{v}"), "a box", format!("{{{raw}}}")));
        }
    }
    t.cases += cases.len();
    for (shape, count) in shapes {
        t.observations.push(format!("degree-set shape {shape} occurs {count} times"));
    }
    Ok(())
}

fn projection_hom(t: &mut Tally, n: u32) -> Result<()> {
    let all = enumerate_wp(n as i64)?;
    t.sweep(&pairs(&all), |&(u, v)| {
        let lhs = project(&lr_mult::<BigInt>(u.tilde(), v.tilde())?);
        let rhs = proj_mult(
            &project(&Element::<BigInt>::basis(u.tilde())),
            &project(&Element::basis(v.tilde())),
            false,
        )?;
        Ok(check_eq(|| format!("p(O{u}*O{v})"), rhs, lhs, |e| e.to_string()))
    })?;
    let h = ProjElement::<Torus>::basis(ProjIndex::new(1, n as i64)?);
    let basis = shifted_basis(n, Degree::new(1, 1))?;
    t.sweep(&basis, |&w| {
        let e = Element::<Torus>::basis(w);
        let lhs = project(&chevalley_mult(&e, Divisor::First));
        let rhs = proj_mult(&project(&e), &h, true)?;
        Ok(check_eq(|| format!("p(O{w}*O^[1])"), rhs, lhs, |e| e.to_string()))
    })?;
    let m = n as i64;
    let cases: Vec<_> = (0..2 * m).flat_map(|a| (0..2 * m).map(move |b| (a, b))).collect();
    t.sweep(&cases, |&(a, b)| {
        let pa = ProjElement::<BigInt>::basis(ProjIndex::new(a, m)?);
        let pb = ProjElement::basis(ProjIndex::new(b, m)?);
        let expect = ProjElement::basis(ProjIndex::new(a + b, m)?);
        Ok(check_eq(
            || format!("O^{a}*O^{b}"),
            expect,
            proj_mult(&pa, &pb, false)?,
            |e| e.to_string(),
        ))
    })?;
    let one = project(&Element::<Torus>::one(n));
    let expect = ProjElement::basis(ProjIndex::new(0, m)?);
    t.cases += 1;
    t.failures
        .extend(check_eq(|| "p(1)".to_string(), expect, one, |e| e.to_string()));
    Ok(())
}

fn show_set(s: &std::collections::BTreeSet<WpIndex>) -> String {
    let items: Vec<_> = s.iter().map(WpIndex::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn iset_oracle(t: &mut Tally, n: u32) -> Result<()> {
    let oracle = PermutationOracle::new(n as i64)?;
    let all = enumerate_wp(n as i64)?;
    t.sweep(&all, |&v| {
        let fast = i_set(v);
        let mut out = check_eq(|| format!("I({v})"), oracle.i_set(v)?, fast.clone(), show_set);
        for &u in &fast {
            if !bruhat_leq(u, v)? {
                out.push(fail(format!("{u} in I({v})"), "u <= v", "not below"));
            }
            for &w in &all {
                if bruhat_leq(u, w)? && bruhat_leq(w, v)? && !fast.contains(&w) {
                    out.push(fail(format!("{u} <= {w} <= {v}"), "in I(v)", "missing"));
                }
            }
        }
        Ok(out)
    })
}

fn bruhat_oracle(t: &mut Tally, n: u32) -> Result<()> {
    let oracle = PermutationOracle::new(n as i64)?;
    let all = enumerate_wp(n as i64)?;
    t.sweep(&pairs(&all), |&(u, v)| {
        let fast = bruhat_leq(u, v)?;
        let slow = oracle.sn_bruhat_leq(&u.permutation(), &v.permutation())?;
        Ok(check_eq(|| format!("{u} <= {v}"), slow, fast, |b| b.to_string()))
    })
}

fn lemma_chi(t: &mut Tally, n: u32) -> Result<()> {
    let m = n as i64;
    let b_ = |x: i64| bar(x, n);
    t.sweep(&enumerate_wp(m)?, |&w| {
        let (a, b) = (w.i(), w.j());
        let mut out = Vec::new();
        let mut claim = |name: &str, ok: bool| {
            if !ok {
                out.push(fail(format!("{name} at [{a},{b}]"), true, false));
            }
        };
        if !w.tilde().is_adjacent() {
            let x = a - b - m * chi(a, b);
            claim("-n < a-b-n chi(a>b) < -1", -m < x && x < -1);
            claim(
                "bar(a+1) - n chi(bar(a+1)>b) = a+1 - n chi(a>b)",
                b_(a + 1) - m * chi(b_(a + 1), b) == a + 1 - m * chi(a, b),
            );
        } else {
            claim("a+1-b = n chi(a>b)", a + 1 - b == m * chi(a, b));
            claim(
                "bar(a+1) - bar(b-1) + n-1 = n chi",
                b_(a + 1) - b_(b - 1) + m - 1 == m * chi(b_(a + 1), b_(b - 1)),
            );
            claim(
                "bar(a+2) - b + n-1 = n chi",
                b_(a + 2) - b + m - 1 == m * chi(b_(a + 2), b),
            );
            claim(
                "bar(a+2) - bar(b-1) + n-2 = n chi",
                b_(a + 2) - b_(b - 1) + m - 2 == m * chi(b_(a + 2), b_(b - 1)),
            );
        }
        Ok(out)
    })?;
    let cases: Vec<_> = (-3 * m..=3 * m)
        .flat_map(|i| (-3 * m..=3 * m).map(move |j| (i, j)))
        .filter(|(i, j)| (i - j).rem_euclid(m) != 0)
        .collect();
    t.sweep(&cases, |&(x, y)| {
        let w = TildeIndex::new(x, y, m)?;
        let b = w.bar();
        let lhs = m * w.length();
        let rhs = m * b.length() + (m - 1) * (x - b.i() - y + b.j());
        Ok(check_eq(|| format!("n*l({w})"), rhs, lhs, |v| v.to_string()))
    })
}

fn positivity_conjecture(t: &mut Tally, n: u32) -> Result<()> {
    let ring = QkRing::<Torus>::new(n as i64)?;
    let all = enumerate_wp(n as i64)?;
    let cases = pairs(&all);
    let found: Vec<Vec<String>> = cases
        .par_iter()
        .map(|&(u, v)| {
            let p = ring.basis_product(u, v)?;
            let mut notes = Vec::new();
            for (w, c) in p.terms() {
                if let Err(msg) = positive_after_sign(c, sign(u.length() + v.length() + w.length())) {
                    notes.push(format!("coefficient of O{w} in O{u}*O{v}: {msg}"));
                }
            }
            Ok(notes)
        })
        .collect::<Result<_>>()?;
    t.cases += cases.len();
    let violations: Vec<String> = found.into_iter().flatten().collect();
    t.observations.push(format!("sign-rule violations: {}", violations.len()));
    t.observations.extend(violations);
    Ok(())
}
