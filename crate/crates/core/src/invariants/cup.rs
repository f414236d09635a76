use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{vassiliev_eval, weight_system, InvariantSpec};
use crate::diagrams::{enumerate_ordered, DiagramJson, OrderedChordDiagram, ToJson};
use crate::error::{Error, Result};
use crate::hopf::coproduct0_terms;
use crate::knots::{realize, SingularKnotDiagram};
use crate::linalg::{rat, Rational};
use crate::perm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupTerm {
    pub h: Vec<usize>,
    pub k: Vec<usize>,
    pub rho: i32,
    /// resolution pattern of `d_K^- K`, `x` for a kept double point
    pub left: String,
    /// resolution pattern of `d_H^+ K`
    pub right: String,
    pub left_value: String,
    pub right_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupReport {
    pub left_invariant: String,
    pub right_invariant: String,
    /// false for the dot product, which drops the shuffle signs
    pub signed: bool,
    pub terms: Vec<CupTerm>,
    pub value: String,
}

fn subsets_of_size(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        (0..1u32 << n).filter(|m| m.count_ones() as usize == p).map(|m| perm::subset_from_mask(m, n)).collect();
    out.sort();
    out
}

fn pattern(n: usize, kept: &[usize], c: char) -> String {
    (1..=n).map(|i| if kept.contains(&i) { 'x' } else { c }).collect()
}

fn product_eval(v1: &InvariantSpec, v2: &InvariantSpec, k: &SingularKnotDiagram, signed: bool) -> Result<CupReport> {
    let n = k.singular_degree();
    let (p, q) = (v1.order(), v2.order());
    if p + q != n {
        return Err(Error::OrderMismatch { order: p + q, degree: n });
    }
    // subsets with |H| != p vanish by order
    let terms: Vec<Result<(CupTerm, Rational)>> = subsets_of_size(n, p)
        .into_par_iter()
        .map(|h| {
            let kc = perm::complement(&h, n);
            let rho = perm::shuffle_sign(&h, n);
            let lv = vassiliev_eval(v1, &k.resolve_labels(&kc, -1)?)?;
            let rv = vassiliev_eval(v2, &k.resolve_labels(&h, 1)?)?;
            let sign = if signed { rho } else { 1 };
            let contribution = rat(sign as i64) * &lv * &rv;
            let term = CupTerm {
                left: pattern(n, &h, '-'),
                right: pattern(n, &kc, '+'),
                h,
                k: kc,
                rho,
                left_value: lv.to_string(),
                right_value: rv.to_string(),
            };
            Ok((term, contribution))
        })
        .collect();
    let mut total = Rational::zero();
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let (term, c) = t?;
        total += c;
        out.push(term);
    }
    Ok(CupReport {
        left_invariant: v1.to_string(),
        right_invariant: v2.to_string(),
        signed,
        terms: out,
        value: total.to_string(),
    })
}

/// `u ∪ v(K) = sum_H rho_(HK) u(d_K^- K) v(d_H^+ K)`.
pub fn cup_eval(v1: &InvariantSpec, v2: &InvariantSpec, k: &SingularKnotDiagram) -> Result<CupReport> {
    product_eval(v1, v2, k, true)
}

/// The same sum without the shuffle signs.
pub fn dot_eval(v1: &InvariantSpec, v2: &InvariantSpec, k: &SingularKnotDiagram) -> Result<CupReport> {
    product_eval(v1, v2, k, false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WcupFailure {
    pub diagram: DiagramJson,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WcupReport {
    pub p: usize,
    pub q: usize,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<WcupFailure>,
    pub passed: bool,
}

fn weight_table(v: &InvariantSpec, cap: usize) -> Result<BTreeMap<OrderedChordDiagram, Rational>> {
    let ds = enumerate_ordered(v.order(), cap)?;
    let values: Vec<Result<Rational>> = ds.par_iter().map(|d| weight_system(v, d)).collect();
    ds.into_iter().zip(values).map(|(d, x)| Ok((d, x?))).collect()
}

/// `W_{p+q}(v1 ∪ v2) = (-1)^(pq) (W_p(v1) ⊗ W_q(v2)) ∘ Δ⁰` on every ordered
/// diagram of degree `p + q`. The tensor of maps acts with the Koszul sign
/// `(f ⊗ g)(a ⊗ b) = (-1)^(|g||a|) f(a) g(b)`.
pub fn verify_wcup(v1: &InvariantSpec, v2: &InvariantSpec, cap: usize) -> Result<WcupReport> {
    let (p, q) = (v1.order(), v2.order());
    let n = p + q;
    let diagrams = enumerate_ordered(n, cap)?;
    let w1 = weight_table(v1, cap)?;
    let w2 = weight_table(v2, cap)?;
    let global = if (p * q) % 2 == 0 { 1 } else { -1 };
    let results: Vec<Result<(Rational, Rational)>> = diagrams
        .par_iter()
        .map(|d| {
            let lhs: Rational = cup_eval(v1, v2, &realize(d))?.value.parse().expect("rational");
            let mut rhs = Rational::zero();
            for (h, rho, left, right) in coproduct0_terms(d) {
                if h.len() != p {
                    continue;
                }
                let koszul = if (q * left.degree()) % 2 == 0 { 1 } else { -1 };
                rhs += rat((global * koszul * rho) as i64) * &w1[&left] * &w2[&right];
            }
            Ok((lhs, rhs))
        })
        .collect();
    let mut failures = 0;
    let mut first_failure = None;
    for (d, r) in diagrams.iter().zip(results) {
        let (lhs, rhs) = r?;
        if lhs != rhs {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(WcupFailure { diagram: d.to_json(), lhs: lhs.to_string(), rhs: rhs.to_string() });
            }
        }
    }
    Ok(WcupReport { p, q, checked: diagrams.len(), failures, first_failure, passed: failures == 0 })
}
