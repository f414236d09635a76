//! Finite-type invariants of singular knots: skein evaluation, weight
//! systems, cup and dot products, cocycle and mirror checks, and
//! nontriviality certificates.

mod certify;
mod conway;
mod cup;
mod equality;
mod spec;

#[cfg(test)]
mod tests;

pub use certify::{certify_nontrivial, Certificate, Family, InvariantValue, PairCertificate, Tier};
pub use conway::{conway, v2_arrow, ConwayPolynomial};
pub use cup::{cup_eval, dot_eval, verify_wcup, CupReport, CupTerm, WcupFailure, WcupReport};
pub use equality::{resolution_conway, stratified_equal, Equality};
pub use spec::InvariantSpec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::diagrams::OrderedChordDiagram;
use crate::error::{Error, Result};
use crate::knots::{boundary_chain, mirror_chain, realize_with_rule, OverRule, SingularKnotDiagram};
use crate::linalg::Rational;

/// `v_2` of a nonsingular knot; the Conway coefficient and the arrow count
/// must agree.
pub fn v2(k: &SingularKnotDiagram) -> Result<BigInt> {
    let c2 = conway(k)?.coefficient(2);
    check_v2(k, c2)
}

fn check_v2(k: &SingularKnotDiagram, c2: BigInt) -> Result<BigInt> {
    let arrow = v2_arrow(k)?;
    if c2 != BigInt::from(arrow) {
        return Err(Error::EngineDisagreement(format!(
            "v2 of {}: Conway c2 = {c2}, arrow count = {arrow}",
            k.to_gauss()
        )));
    }
    Ok(c2)
}

/// Value of `v` on a nonsingular knot.
pub fn knot_value(v: &InvariantSpec, k: &SingularKnotDiagram) -> Result<Rational> {
    let n = k.singular_degree();
    if n > 0 {
        return Err(Error::SingularInput(n));
    }
    let mut cache: Option<ConwayPolynomial> = None;
    knot_value_cached(v, k, &mut cache)
}

fn knot_value_cached(
    v: &InvariantSpec,
    k: &SingularKnotDiagram,
    cache: &mut Option<ConwayPolynomial>,
) -> Result<Rational> {
    let poly = |cache: &mut Option<ConwayPolynomial>| -> Result<ConwayPolynomial> {
        if cache.is_none() {
            *cache = Some(conway(k)?);
        }
        Ok(cache.clone().expect("filled"))
    };
    Ok(match v {
        InvariantSpec::Constant(c) => c.clone(),
        InvariantSpec::Conway(m) => Rational::from_integer(poly(cache)?.coefficient(*m)),
        InvariantSpec::V2 => Rational::from_integer(check_v2(k, poly(cache)?.coefficient(2))?),
        InvariantSpec::V2Power(e) => {
            let x = check_v2(k, poly(cache)?.coefficient(2))?;
            Rational::from_integer(num_traits::pow(x, *e))
        }
        InvariantSpec::Product(fs) => {
            let mut acc = Rational::one();
            for f in fs {
                acc *= knot_value_cached(f, k, cache)?;
            }
            acc
        }
    })
}

/// Skein extension: `sum over eps of (prod eps_i) v(K_eps)`.
pub fn vassiliev_eval(v: &InvariantSpec, k: &SingularKnotDiagram) -> Result<Rational> {
    vassiliev_eval_with(v, k, &Caps::default())
}

pub fn vassiliev_eval_with(v: &InvariantSpec, k: &SingularKnotDiagram, caps: &Caps) -> Result<Rational> {
    let n = k.singular_degree();
    Caps::check("double points", n, caps.max_double_points)?;
    let terms: Vec<Result<Rational>> = (0..1u32 << n)
        .into_par_iter()
        .map(|mask| {
            let signs: Vec<i8> = (0..n).map(|i| if mask & (1 << i) == 0 { 1 } else { -1 }).collect();
            let value = knot_value(v, &k.resolve_with(&signs)?)?;
            Ok(if mask.count_ones() % 2 == 0 { value } else { -value })
        })
        .collect();
    let mut total = Rational::zero();
    for t in terms {
        total += t?;
    }
    Ok(total)
}

/// `W_m(v)(D) = v(K_D)` for the realization of `D`.
pub fn weight_system(v: &InvariantSpec, d: &OrderedChordDiagram) -> Result<Rational> {
    weight_system_with_rule(v, d, OverRule::Descending)
}

pub fn weight_system_with_rule(v: &InvariantSpec, d: &OrderedChordDiagram, rule: OverRule) -> Result<Rational> {
    if v.order() != d.degree() {
        return Err(Error::OrderMismatch { order: v.order(), degree: d.degree() });
    }
    vassiliev_eval(v, &realize_with_rule(d, rule))
}

/// Weight system of the degree-`m` Conway coefficient.
pub fn conway_weight_system(d: &OrderedChordDiagram) -> Result<Rational> {
    Caps::check("degree", d.degree(), Caps::default().max_double_points)?;
    weight_system(&InvariantSpec::Conway(d.degree()), d)
}

/// `v(∂K)`; vanishes when `v` has order `n` and `K` is `(n+1)`-singular.
pub fn cocycle_check(v: &InvariantSpec, k: &SingularKnotDiagram) -> Result<Rational> {
    let m = k.singular_degree();
    if m != v.order() + 1 {
        return Err(Error::OrderMismatch { order: v.order(), degree: m });
    }
    let chain = boundary_chain(k);
    let mut total = Rational::zero();
    for (key, c) in chain.iter() {
        total += c * vassiliev_eval(v, key)?;
    }
    Ok(total)
}

/// `v(d_i K) = v(K_{i+}) - v(K_{i-})` for each label `i`.
pub fn face_values(v: &InvariantSpec, k: &SingularKnotDiagram) -> Result<Vec<Rational>> {
    (1..=k.singular_degree())
        .map(|i| Ok(vassiliev_eval(v, &k.resolve(i, 1)?)? - vassiliev_eval(v, &k.resolve(i, -1)?)?))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorReport {
    pub invariant: String,
    pub order: usize,
    pub singular_degree: usize,
    pub value: String,
    pub mirror_value: String,
    /// `(-1)^(order + singular degree)`
    pub expected_sign: i32,
    pub passed: bool,
    /// `∂(K*) = -(∂K)*`; vacuous for nonsingular input
    pub chain_law: bool,
}

/// `v(K*) = (-1)^(n+m) v(K)` for a canonical invariant of order `n` on an
/// `m`-singular knot.
pub fn mirror_sign_check(v: &InvariantSpec, k: &SingularKnotDiagram) -> Result<MirrorReport> {
    if !v.is_canonical() {
        return Err(Error::Unsupported(format!("{v} is not a canonical invariant")));
    }
    let m = k.singular_degree();
    let value = vassiliev_eval(v, k)?;
    let mirror_value = vassiliev_eval(v, &k.mirror())?;
    let sign = if (v.order() + m).is_multiple_of(2) { 1 } else { -1 };
    let expected = if sign == 1 { value.clone() } else { -value.clone() };
    let chain_law = m == 0 || boundary_chain(&k.mirror()) == mirror_chain(&boundary_chain(k)).neg();
    Ok(MirrorReport {
        invariant: v.to_string(),
        order: v.order(),
        singular_degree: m,
        value: value.to_string(),
        mirror_value: mirror_value.to_string(),
        expected_sign: sign,
        passed: mirror_value == expected && chain_law,
        chain_law,
    })
}
