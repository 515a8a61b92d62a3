use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use incidence_qk::combinatorics::{i_set, Degree, Divisor, WpIndex};
use incidence_qk::format::{
    element_to_json, format_element, parse_degree, parse_element, parse_index, proj_to_json,
};
use incidence_qk::gromov_witten::{
    gamma_divisor, gamma_opposite, gamma_schubert, gw_divisor_closed, gw_divisor_dual,
    gw_divisor_qclassical, psi, psi_inverse, three_point, TruncatedSeries,
};
use incidence_qk::projective::project;
use incidence_qk::qkring::{
    chevalley_mult, classical_divisor_mult, dual_expand, lr_mult, Element, QkRing,
};
use incidence_qk::scalar::Coefficient;
use incidence_qk::verify::{run_suite, Suite, SuiteConfig, VerificationReport};
use incidence_qk::{Error, PlainElement, QkElement, TorusCoefficient};

#[derive(Parser)]
#[command(name = "qkfl", version, about = "Quantum K-theory of Fl(1,n-1;n)")]
struct Cli {
    /// Rank: X = Fl(1, n-1; n), n >= 3.
    #[arg(long, global = true, default_value_t = 5)]
    n: i64,

    /// Degree cutoff `d1,d2` for truncated series and sweeps.
    #[arg(long, global = true, default_value = "3,3")]
    cutoff: String,

    /// Keep torus characters; otherwise coefficients are specialized at z = 1.
    #[arg(long, global = true)]
    equivariant: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Schubert,
    Opposite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GwMode {
    Closed,
    Qclassical,
    Dual,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of two elements.
    Mult { a: String, b: String },
    /// Quantum product with the divisor O^[k].
    Chev {
        #[arg(long)]
        k: i64,
        e: String,
    },
    /// Non-equivariant product of two basis labels by the three-term rule.
    Lr { u: String, v: String },
    /// Product with O^[k] in ordinary K-theory.
    Classical {
        #[arg(long)]
        k: i64,
        e: String,
    },
    /// Genus-zero 3-point invariant I_d(O^u, O^v, O_w).
    Invariant {
        #[arg(long)]
        d: String,
        u: String,
        v: String,
        w: String,
    },
    /// Divisor invariant I(O^u, O^[k]; O_w) with w a tilde label.
    Gwdiv {
        #[arg(long, value_enum, default_value_t = GwMode::Closed)]
        mode: GwMode,
        #[arg(long)]
        k: i64,
        u: String,
        w: String,
    },
    /// Curve neighborhood label of X_u or X^u.
    Nbhd {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        d: String,
        /// Also report the cut by D^[k] (Schubert side only).
        #[arg(long)]
        k: Option<i64>,
        u: String,
    },
    /// The set I(v).
    Iset { v: String },
    /// Signed expansion of the dual class of O_v.
    Dual { v: String },
    /// Psi (or its inverse) truncated at the cutoff.
    Psi {
        #[arg(long)]
        inverse: bool,
        e: String,
    },
    /// Image in QK_T(P^{n-1}).
    Project { e: String },
    /// Operator polynomial P_u in M1, M2.
    Divpoly { u: String },
    /// Full multiplication table of the Schubert basis.
    Table,
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

enum Outcome {
    Ok(String),
    SuiteFailed(String),
}

fn wp(s: &str, n: i64) -> Result<WpIndex, Error> {
    parse_index(s, n)?.to_wp()
}

fn coeff_json<R: Coefficient>(c: &R, n: i64) -> Value {
    let monos: Vec<Value> = c
        .monomials()
        .into_iter()
        .map(|(mut e, s)| {
            e.resize(n as usize - 1, 0);
            json!({"exp": e, "c": s.to_string()})
        })
        .collect();
    json!({"n": n, "coeff": monos})
}

struct Ctx {
    n: i64,
    cutoff: Degree,
    equivariant: bool,
    json: bool,
}

impl Ctx {
    fn element(&self, s: &str) -> Result<QkElement, Error> {
        parse_element(s, self.n)
    }

    fn show<R: Coefficient>(&self, e: &Element<R>) -> String {
        if self.json {
            element_to_json(e)
        } else {
            format_element(e)
        }
    }

    fn show_torus(&self, e: &QkElement) -> String {
        if self.equivariant {
            self.show(e)
        } else {
            self.show(&e.specialize())
        }
    }

    fn show_coeff(&self, c: &TorusCoefficient) -> String {
        match (self.json, self.equivariant) {
            (true, true) => coeff_json(c, self.n).to_string(),
            (true, false) => coeff_json(&c.specialize_one(), self.n).to_string(),
            (false, true) => c.to_string(),
            (false, false) => c.specialize_one().to_string(),
        }
    }

    fn show_label(&self, w: WpIndex) -> String {
        if self.json {
            json!({"label": [w.i(), w.j()]}).to_string()
        } else {
            w.to_string()
        }
    }

    fn product<R: Coefficient>(&self, a: &Element<R>, b: &Element<R>) -> Result<String, Error> {
        let ring = QkRing::<R>::new(self.n)?;
        Ok(self.show(&ring.mult(a, b)?))
    }

    fn table<R: Coefficient>(&self) -> Result<String, Error> {
        let ring = QkRing::<R>::new(self.n)?;
        let all = incidence_qk::combinatorics::enumerate_wp(self.n)?;
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for &u in &all {
            for &v in &all {
                let p = ring.basis_product(u, v)?;
                if self.json {
                    let prod: Value = serde_json::from_str(&element_to_json(&*p)).expect("valid");
                    rows.push(json!({"u": [u.i(), u.j()], "v": [v.i(), v.j()], "product": prod}));
                } else {
                    lines.push(format!("O{u} * O{v} = {}", format_element(&*p)));
                }
            }
        }
        Ok(if self.json {
            json!({"n": self.n, "table": rows}).to_string()
        } else {
            lines.join("\n")
        })
    }

    fn report(&self, r: &VerificationReport) -> String {
        eprintln!("{}: {:.3}s", r.suite, r.elapsed.as_secs_f64());
        if self.json {
            r.to_json()
        } else {
            r.to_text().trim_end().to_string()
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cx = Ctx {
        n: cli.n,
        cutoff: parse_degree(&cli.cutoff)?.require_effective()?,
        equivariant: cli.equivariant,
        json: cli.format == Format::Json,
    };
    let n = cx.n;
    let text = match &cli.cmd {
        Cmd::Mult { a, b } => {
            let (a, b) = (cx.element(a)?, cx.element(b)?);
            if cx.equivariant {
                cx.product(&a, &b)?
            } else {
                cx.product(&a.specialize(), &b.specialize())?
            }
        }
        Cmd::Chev { k, e } => cx.show_torus(&chevalley_mult(&cx.element(e)?, Divisor::from_k(*k)?)),
        Cmd::Classical { k, e } => {
            cx.show_torus(&classical_divisor_mult(&cx.element(e)?, Divisor::from_k(*k)?))
        }
        Cmd::Lr { u, v } => {
            let p: PlainElement = lr_mult(parse_index(u, n)?, parse_index(v, n)?)?;
            cx.show(&p)
        }
        Cmd::Invariant { d, u, v, w } => {
            let d = parse_degree(d)?;
            let x: BigInt = three_point(wp(u, n)?, wp(v, n)?, wp(w, n)?, d)?;
            if cx.json {
                json!({"value": x.to_string()}).to_string()
            } else {
                x.to_string()
            }
        }
        Cmd::Gwdiv { mode, k, u, w } => {
            let (u, k, w) = (wp(u, n)?, Divisor::from_k(*k)?, parse_index(w, n)?);
            let c: TorusCoefficient = match mode {
                GwMode::Closed => gw_divisor_closed(u, k, w),
                GwMode::Dual => gw_divisor_dual(u, k, w),
                GwMode::Qclassical => {
                    let (wb, d) = w.normalize();
                    gw_divisor_qclassical(&Element::basis(u.tilde()), k, wb, d.require_effective()?)?
                }
            };
            cx.show_coeff(&c)
        }
        Cmd::Nbhd { side, d, k, u } => {
            let (u, d) = (wp(u, n)?, parse_degree(d)?);
            match (side, k) {
                (Side::Schubert, Some(k)) => {
                    let r = gamma_divisor(u, d, Divisor::from_k(*k)?)?;
                    let cut = r.divisor_cut.map(|k| k.k());
                    if cx.json {
                        json!({"label": [r.base.i(), r.base.j()], "divisor_cut": cut}).to_string()
                    } else {
                        match cut {
                            Some(k) => format!("{} cut by D^[{k}]", r.base),
                            None => r.base.to_string(),
                        }
                    }
                }
                (Side::Schubert, None) => cx.show_label(gamma_schubert(u, d)?),
                (Side::Opposite, _) => cx.show_label(gamma_opposite(u, d)?),
            }
        }
        Cmd::Iset { v } => {
            let s = i_set(wp(v, n)?);
            if cx.json {
                let items: Vec<_> = s.iter().map(|u| json!([u.i(), u.j()])).collect();
                json!({"n": n, "set": items}).to_string()
            } else {
                let items: Vec<_> = s.iter().map(WpIndex::to_string).collect();
                format!("{{{}}}", items.join(", "))
            }
        }
        Cmd::Dual { v } => {
            let d = dual_expand(wp(v, n)?);
            if cx.json {
                let items: Vec<_> = d
                    .iter()
                    .map(|(u, s)| json!({"label": [u.i(), u.j()], "sign": s}))
                    .collect();
                json!({"n": n, "terms": items}).to_string()
            } else {
                let mut s = String::new();
                for (idx, (u, sg)) in d.iter().enumerate() {
                    match (idx, *sg > 0) {
                        (0, true) => {}
                        (0, false) => s.push('-'),
                        (_, true) => s.push_str(" + "),
                        (_, false) => s.push_str(" - "),
                    }
                    s.push_str(&format!("O_{u}"));
                }
                s
            }
        }
        Cmd::Psi { inverse, e } => {
            let e = cx.element(e)?;
            let out = if *inverse {
                psi_inverse(&TruncatedSeries::new(&e, cx.cutoff)?)?
            } else {
                psi(&e, cx.cutoff)?.element
            };
            cx.show_torus(&out)
        }
        Cmd::Project { e } => {
            let e = cx.element(e)?;
            match (cx.json, cx.equivariant) {
                (true, true) => proj_to_json(&project(&e)),
                (true, false) => proj_to_json(&project(&e.specialize())),
                (false, true) => project(&e).to_string(),
                (false, false) => project(&e.specialize()).to_string(),
            }
        }
        Cmd::Divpoly { u } => {
            let ring = QkRing::<TorusCoefficient>::new(n)?;
            let p = ring.divisor_polynomial(wp(u, n)?)?;
            if cx.json {
                json!({"n": n, "polynomial": p.to_string()}).to_string()
            } else {
                p.to_string()
            }
        }
        Cmd::Table => {
            if cx.equivariant {
                cx.table::<TorusCoefficient>()?
            } else {
                cx.table::<BigInt>()?
            }
        }
        Cmd::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut cfg = SuiteConfig::new(n).cutoff(cx.cutoff);
            if cli.equivariant {
                cfg = cfg.equivariant(true);
            }
            let mut outs = Vec::new();
            let mut failed = false;
            for s in suites {
                let r = run_suite(s, cfg)?;
                failed |= !r.passed;
                outs.push(cx.report(&r));
            }
            let body = outs.join("\n");
            return Ok(if failed {
                Outcome::SuiteFailed(body)
            } else {
                Outcome::Ok(body)
            });
        }
    };
    Ok(Outcome::Ok(text))
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| format!("{path}: {e}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Outcome::Ok(t)) => (t, 0),
        Ok(Outcome::SuiteFailed(t)) => (t, 1),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_internal() { 3 } else { 2 });
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
