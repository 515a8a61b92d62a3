//! The ring `QK_T(X)_q` and its products.

mod chevalley;
mod divisor;
mod element;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub use chevalley::{chevalley_basis, chevalley_mult, classical_divisor_mult, lr_mult};
pub use divisor::{DivisorPolynomial, OpMonomial};
pub use element::Element;

use crate::combinatorics::{check_rank, i_set, Divisor, TildeIndex, WpIndex};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Product context for one rank `n`, holding the memo tables of the divisor-polynomial
/// recursion and of basis products.
///
/// Caches behave as pure memoization: concurrent callers may compute the same entry and
/// the results are identical.
#[derive(Debug)]
pub struct QkRing<R> {
    n: u32,
    polys: RwLock<HashMap<WpIndex, Arc<DivisorPolynomial<R>>>>,
    products: RwLock<ProductCache<R>>,
}

type ProductCache<R> = HashMap<(WpIndex, WpIndex), Arc<Element<R>>>;

impl<R: Coefficient> QkRing<R> {
    pub fn new(n: i64) -> Result<Self> {
        Ok(QkRing {
            n: check_rank(n)?,
            polys: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn check(&self, n: u32) -> Result<()> {
        if n == self.n {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n, n))
        }
    }

    /// The operator polynomial `P_u` with `P_u(O^{[1,n]}) = O^u`.
    pub fn divisor_polynomial(&self, u: WpIndex) -> Result<Arc<DivisorPolynomial<R>>> {
        self.check(u.n())?;
        self.poly_at(u, 0)
    }

    fn poly_at(&self, u: WpIndex, depth: u32) -> Result<Arc<DivisorPolynomial<R>>> {
        if let Some(p) = self.polys.read().expect("cache lock").get(&u) {
            return Ok(p.clone());
        }
        if depth > 4 * self.n {
            return Err(Error::Internal(format!(
                "divisor polynomial recursion exceeded depth {} at {u}",
                4 * self.n
            )));
        }
        let p = Arc::new(self.compute_poly(u, depth + 1)?);
        self.polys
            .write()
            .expect("cache lock")
            .entry(u)
            .or_insert_with(|| p.clone());
        Ok(p)
    }

    fn tilde_poly(&self, w: TildeIndex, depth: u32) -> Result<DivisorPolynomial<R>> {
        let (b, d) = w.normalize();
        Ok(self.poly_at(b, depth)?.q_shift(d))
    }

    fn compute_poly(&self, u: WpIndex, depth: u32) -> Result<DivisorPolynomial<R>> {
        let n = self.n;
        let m = n as i64;
        let (i, j) = (u.i(), u.j());
        let step = |prev: &DivisorPolynomial<R>, k: Divisor, c: R| {
            // c (Mk - 1) P + P
            let lin = DivisorPolynomial::op(k).scale(&c) + DivisorPolynomial::constant(R::one() - c);
            &lin * prev
        };
        if i == 1 && j == m {
            Ok(DivisorPolynomial::one())
        } else if (i < j && j == m) || i > j + 1 {
            let prev = self.poly_at(WpIndex::new_unchecked(i - 1, j, n), depth)?;
            Ok(step(&prev, Divisor::First, R::character(n, 1, i - 1)))
        } else if i < j {
            let prev = self.poly_at(WpIndex::new_unchecked(i, j + 1, n), depth)?;
            Ok(step(&prev, Divisor::Second, R::character(n, j + 1, m)))
        } else {
            let base = self.poly_at(WpIndex::new_unchecked(j, i, n), depth)?;
            let lower = self.tilde_poly(TildeIndex::new_unchecked(j, j - 1, n), depth)?;
            let side = self.tilde_poly(TildeIndex::new_unchecked(i, j - 1, n), depth)?;
            Ok(step(&base, Divisor::Second, R::character(n, i, m)) - lower + side)
        }
    }

    /// `O^u * O^v` for `u, v` in `W^P`.
    pub fn basis_product(&self, u: WpIndex, v: WpIndex) -> Result<Arc<Element<R>>> {
        self.check(u.n())?;
        self.check(v.n())?;
        if let Some(p) = self.products.read().expect("cache lock").get(&(u, v)) {
            return Ok(p.clone());
        }
        let p = self
            .divisor_polynomial(u)?
            .apply(&Element::basis(v.tilde()));
        if let Some(bad) = p.degrees().into_iter().find(|d| !d.is_effective()) {
            return Err(Error::Internal(format!(
                "product of {u} and {v} has negative q-degree {bad}"
            )));
        }
        let p = Arc::new(p);
        self.products
            .write()
            .expect("cache lock")
            .entry((u, v))
            .or_insert_with(|| p.clone());
        Ok(p)
    }

    /// `O^u * O^v` for tilde indices.
    pub fn basis_mult(&self, u: TildeIndex, v: TildeIndex) -> Result<Element<R>> {
        let (ub, du) = u.normalize();
        let (vb, dv) = v.normalize();
        Ok(self.basis_product(ub, vb)?.q_shift(du + dv))
    }

    pub fn mult(&self, a: &Element<R>, b: &Element<R>) -> Result<Element<R>> {
        self.check(a.n())?;
        self.check(b.n())?;
        let mut out = Element::zero(self.n);
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                out.add_scaled(&self.basis_mult(*u, *v)?, &(x.clone() * y.clone()));
            }
        }
        Ok(out)
    }
}

/// `O_v^vee = sum over u in I(v) of (-1)^{l(u)+l(v)} O_u`, as Schubert labels with signs.
pub fn dual_expand(v: WpIndex) -> BTreeMap<WpIndex, i64> {
    i_set(v)
        .into_iter()
        .map(|u| {
            let s = if (u.length() + v.length()) % 2 == 0 { 1 } else { -1 };
            (u, s)
        })
        .collect()
}

/// `chi(e . O_w)`: each class `O^{[x,y]}` pairs to `1` with `O_{[a,b]}` iff `a >= x` and `b <= y`.
pub fn euler_pair<R: Coefficient>(e: &Element<R>, w: WpIndex) -> Result<R> {
    e.require_classical()?;
    if e.n() != w.n() {
        return Err(Error::RankMismatch(e.n(), w.n()));
    }
    let mut out = R::zero();
    for (u, c) in e.terms() {
        if w.i() >= u.i() && w.j() <= u.j() {
            out = out + c.clone();
        }
    }
    Ok(out)
}

/// The ring involution induced by `iota`: indices through `iota`, coefficients through
/// `z_r -> z_{n-r}`.
pub fn phi_map<R: Coefficient>(e: &Element<R>) -> Element<R> {
    let n = e.n();
    let mut out = Element::zero(n);
    for (w, c) in e.terms() {
        out.add_term(w.iota(), c.phi_twist(n));
    }
    out
}
