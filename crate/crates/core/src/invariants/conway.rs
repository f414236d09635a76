//! Conway polynomial from the Alexander matrix of the Wirtinger presentation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knots::SingularKnotDiagram;
use crate::linalg::Rational;

/// `c_0 + c_1 z + c_2 z^2 + ...`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConwayPolynomial {
    pub coeffs: Vec<BigInt>,
}

impl ConwayPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn coefficient(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (m, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{m}")?,
                (_, false) => write!(f, "{mag}z^{m}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Alexander matrix rows as `(column, a, b)` meaning `a + b t`.
fn alexander_rows(k: &SingularKnotDiagram) -> Vec<Vec<(usize, i64, i64)>> {
    let w = k.word();
    let len = w.len();
    let unders: Vec<usize> = (0..len).filter(|&t| k.is_over_at(t) == Some(false)).collect();
    let c = unders.len();
    // arc j starts just after the j-th under passage
    let mut arc = vec![0; len];
    let mut cur = c - 1;
    for t in 0..len {
        arc[t] = cur;
        if k.is_over_at(t) == Some(false) {
            cur = unders.iter().position(|&u| u == t).expect("under passage");
        }
    }
    let mut rows = vec![Vec::new(); c];
    let mut over_arc = vec![0; k.vertices().len()];
    for t in 0..len {
        if k.is_over_at(t) == Some(true) {
            over_arc[w[t]] = arc[t];
        }
    }
    for (j, &t) in unders.iter().enumerate() {
        let v = w[t];
        let incoming = arc[t];
        let outgoing = j;
        let sign = k.vertices()[v].sign().expect("classical");
        let row = &mut rows[j];
        row.push((over_arc[v], 1, -1));
        if sign > 0 {
            row.push((incoming, 0, 1));
            row.push((outgoing, -1, 0));
        } else {
            row.push((incoming, -1, 0));
            row.push((outgoing, 0, 1));
        }
    }
    rows
}

/// Bareiss fraction-free determinant.
fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients of the polynomial of degree `< xs.len()` through the points.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Vec<Rational> {
    let n = xs.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in (0..n).filter(|&j| j != i) {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * Rational::from_integer(xs[j].into());
            }
            basis = next;
            denom *= Rational::from_integer((xs[i] - xs[j]).into());
        }
        let scale = Rational::from_integer(ys[i].clone()) / denom;
        for (d, b) in basis.iter().enumerate() {
            out[d] += b * &scale;
        }
    }
    out
}

fn alexander_symmetric(k: &SingularKnotDiagram) -> Result<Vec<BigInt>> {
    let rows = alexander_rows(k);
    let c = rows.len();
    let m = c - 1;
    let xs: Vec<i64> = (2..2 + c as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| {
            let mut mat = vec![vec![BigInt::zero(); m]; m];
            for (i, row) in rows.iter().take(m).enumerate() {
                for &(col, a, b) in row {
                    if col < m {
                        mat[i][col] += BigInt::from(a + b * t);
                    }
                }
            }
            det(mat)
        })
        .collect();
    let poly = interpolate(&xs, &ys);
    let mut ints = Vec::with_capacity(poly.len());
    for p in &poly {
        if !p.is_integer() {
            return Err(Error::EngineDisagreement(format!("non-integral Alexander coefficient {p}")));
        }
        ints.push(p.to_integer());
    }
    let lo = ints.iter().position(|x| !x.is_zero());
    let hi = ints.iter().rposition(|x| !x.is_zero());
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::EngineDisagreement("vanishing Alexander polynomial".into()));
    };
    let mut a: Vec<BigInt> = ints[lo..=hi].to_vec();
    let at_one: BigInt = a.iter().sum();
    if at_one.abs() != BigInt::one() || a.len().is_multiple_of(2) {
        return Err(Error::EngineDisagreement(format!("Alexander polynomial {a:?} is not a knot polynomial")));
    }
    if at_one.is_negative() {
        a.iter_mut().for_each(|x| *x = -x.clone());
    }
    let d = a.len() / 2;
    if (0..d).any(|i| a[i] != a[a.len() - 1 - i]) {
        return Err(Error::EngineDisagreement(format!("Alexander polynomial {a:?} is not symmetric")));
    }
    Ok(a[d..].to_vec())
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[BigInt], b: &[BigInt], scale_b: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y * scale_b;
    }
    out
}

/// `b_0 + sum_i b_i (t^i + t^-i)` rewritten in `z` with `t + 1/t = z^2 + 2`.
fn symmetric_to_conway(b: &[BigInt]) -> ConwayPolynomial {
    // p_i(s) = t^i + t^-i as a polynomial in s = t + 1/t, s itself in w = z^2
    let s: Vec<BigInt> = vec![BigInt::from(2), BigInt::one()];
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur = s.clone();
    let mut total: Vec<BigInt> = vec![b[0].clone()];
    for (i, bi) in b.iter().enumerate().skip(1) {
        if i > 1 {
            let next = poly_add(&poly_mul(&s, &cur), &prev, &-BigInt::one());
            prev = std::mem::replace(&mut cur, next);
        }
        total = poly_add(&total, &cur, bi);
    }
    let mut z = vec![BigInt::zero(); 2 * total.len()];
    for (i, c) in total.into_iter().enumerate() {
        z[2 * i] = c;
    }
    ConwayPolynomial::new(z)
}

/// Conway polynomial of a nonsingular diagram.
pub fn conway(k: &SingularKnotDiagram) -> Result<ConwayPolynomial> {
    let n = k.singular_degree();
    if n > 0 {
        return Err(Error::SingularInput(n));
    }
    if !crate::knots::is_planar(k) {
        return Err(Error::NonPlanar(k.to_gauss()));
    }
    if k.num_crossings() == 0 {
        return Ok(ConwayPolynomial::one());
    }
    Ok(symmetric_to_conway(&alexander_symmetric(k)?))
}

/// The arrow-diagram count: pairs of crossings `(a, b)` met along the based
/// word as under `a`, over `b`, over `a`, under `b`, weighted by the product
/// of their signs.
pub fn v2_arrow(k: &SingularKnotDiagram) -> Result<i64> {
    let n = k.singular_degree();
    if n > 0 {
        return Err(Error::SingularInput(n));
    }
    let pos = k.positions();
    let ends: Vec<(usize, usize, i64)> = pos
        .iter()
        .enumerate()
        .map(|(v, &(p, q))| {
            let x = k.vertices()[v];
            let over_first = k.is_over_at(p) == Some(true);
            let (o, u) = if over_first { (p, q) } else { (q, p) };
            (o, u, x.sign().expect("classical") as i64)
        })
        .collect();
    let mut total = 0;
    for &(oa, ua, sa) in &ends {
        for &(ob, ub, sb) in &ends {
            if ua < ob && ob < oa && oa < ub {
                total += sa * sb;
            }
        }
    }
    Ok(total)
}
