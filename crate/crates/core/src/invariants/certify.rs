//! Certificates that an invariant is not a coboundary: a singular knot with
//! vanishing boundary on which the invariant is nonzero.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{conway_weight_system, cup_eval, dot_eval, stratified_equal, vassiliev_eval, Equality, InvariantSpec};
use crate::config::Caps;
use crate::diagrams::{perturb, OrderedChordDiagram, PairPattern, ToJson};
use crate::error::{Error, Result};
use crate::knots::{boundary_chain, v2_power_family, yasuhara_family, SearchLimits, SingularKnotDiagram};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Yasuhara { diagram: OrderedChordDiagram, pattern: Vec<PairPattern> },
    V2Power { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "tier")]
pub enum Tier {
    Canonical,
    MovePath { depth: usize },
    Failed { reason: String },
}

/// `d_i K` and `d_{i+1} K` compared for one resolution sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub labels: [usize; 2],
    pub sign: i8,
    #[serde(flatten)]
    pub tier: Tier,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub invariant: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: String,
    pub parameters: serde_json::Value,
    pub code: String,
    pub singular_degree: usize,
    pub pairs: Vec<PairCertificate>,
    /// every pair certified, hence `∂K = 0`
    pub boundary_zero: bool,
    /// terms left in the boundary chain after canonicalization
    pub chain_terms: usize,
    pub values: Vec<InvariantValue>,
    /// the primary invariant (first entry of `values`) is nonzero
    pub nonzero: bool,
    pub certified: bool,
}

fn certify_pairs(k: &SingularKnotDiagram) -> Result<Vec<PairCertificate>> {
    let n = k.singular_degree();
    let mut out = Vec::new();
    for i in (1..n).step_by(2) {
        for sign in [1i8, -1] {
            let a = k.resolve(i, sign)?;
            let b = k.resolve(i + 1, sign)?;
            let tier = match stratified_equal(&a, &b, SearchLimits::default())? {
                Equality::Equal { depth: 0 } => Tier::Canonical,
                Equality::Equal { depth } => Tier::MovePath { depth },
                Equality::Distinct { signs } => Tier::Failed { reason: format!("resolutions {signs:?} differ") },
                Equality::Unknown => Tier::Failed { reason: "not found within search limits".into() },
            };
            out.push(PairCertificate { labels: [i, i + 1], sign, tier });
        }
    }
    Ok(out)
}

fn value(invariant: &str, x: &Rational) -> InvariantValue {
    InvariantValue { invariant: invariant.to_string(), value: x.to_string() }
}

pub fn certify_nontrivial(family: &Family, caps: &Caps) -> Result<Certificate> {
    let (name, parameters, k, values) = match family {
        Family::V2Power { n } => {
            Caps::check("family n", *n, caps.max_family_n)?;
            let k = v2_power_family(*n)?;
            let mut values = vec![value(&format!("v2^{n}"), &vassiliev_eval(&InvariantSpec::V2Power(*n), &k)?)];
            if *n == 2 {
                let cup: Rational =
                    cup_eval(&InvariantSpec::V2, &InvariantSpec::V2, &k)?.value.parse().expect("rational");
                let dot: Rational =
                    dot_eval(&InvariantSpec::V2, &InvariantSpec::V2, &k)?.value.parse().expect("rational");
                values.push(value("v2 cup v2", &cup));
                values.push(value("v2 dot v2", &dot));
            }
            ("v2power", serde_json::json!({ "n": n }), k, values)
        }
        Family::Yasuhara { diagram, pattern } => {
            let n = diagram.degree();
            Caps::check("family n", n, caps.max_family_n)?;
            if n == 0 {
                return Err(Error::Unsupported("the perturbation of the empty diagram has no double points".into()));
            }
            let k = yasuhara_family(diagram, pattern)?;
            let spec = InvariantSpec::Conway(2 * n);
            let mut values = vec![value(&spec.to_string(), &vassiliev_eval(&spec, &k)?)];
            values.push(value("W_C(D')", &conway_weight_system(&perturb(diagram, pattern)?)?));
            let code: String = pattern.iter().map(|p| p.code()).collect();
            (
                "yasuhara",
                serde_json::json!({ "diagram": serde_json::to_value(diagram.to_json()).map_err(|e| Error::Json(e.to_string()))?, "pattern": code }),
                k,
                values,
            )
        }
    };
    let pairs = certify_pairs(&k)?;
    let boundary_zero = pairs.iter().all(|p| !matches!(p.tier, Tier::Failed { .. }));
    let chain_terms = boundary_chain(&k).len();
    let primary: Rational = values[0].value.parse().expect("rational");
    let nonzero = !primary.is_zero();
    Ok(Certificate {
        family: name.to_string(),
        parameters,
        code: k.to_gauss(),
        singular_degree: k.singular_degree(),
        pairs,
        boundary_zero,
        chain_terms,
        values,
        nonzero,
        certified: boundary_zero && nonzero,
    })
}
