//! Three-valued equality of singular knots: canonical forms, then a bounded
//! move search, then the Conway polynomials of all resolutions as refuter.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{conway, ConwayPolynomial};
use crate::config::Caps;
use crate::error::Result;
use crate::knots::{canonical_form, equivalent_bounded, resolve_all, Bounded, SearchLimits, SingularKnotDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum Equality {
    /// `depth` 0 means identical canonical forms
    Equal {
        depth: usize,
    },
    /// the resolutions with these signs have different Conway polynomials
    Distinct {
        signs: Vec<i8>,
    },
    Unknown,
}

/// Conway polynomials of the `2^n` resolutions, in sign-mask order.
pub fn resolution_conway(k: &SingularKnotDiagram) -> Result<Vec<(Vec<i8>, ConwayPolynomial)>> {
    Caps::check("double points", k.singular_degree(), Caps::default().max_double_points)?;
    resolve_all(k).into_par_iter().map(|(s, r)| Ok((s, conway(&r)?))).collect()
}

pub fn stratified_equal(a: &SingularKnotDiagram, b: &SingularKnotDiagram, limits: SearchLimits) -> Result<Equality> {
    if a.singular_degree() != b.singular_degree() {
        return Ok(Equality::Distinct { signs: Vec::new() });
    }
    if canonical_form(&a.with_base(false)) == canonical_form(&b.with_base(false)) {
        return Ok(Equality::Equal { depth: 0 });
    }
    if let Bounded::Equal { depth } = equivalent_bounded(a, b, limits) {
        return Ok(Equality::Equal { depth });
    }
    let (ra, rb) = (resolution_conway(a)?, resolution_conway(b)?);
    for ((s, x), (_, y)) in ra.into_iter().zip(rb) {
        if x != y {
            return Ok(Equality::Distinct { signs: s });
        }
    }
    Ok(Equality::Unknown)
}
