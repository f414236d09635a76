use super::{canonical_form, SingularKnotDiagram};
use crate::formal::FormalSum;
use crate::linalg::rat;

/// Chains of singular knots; keys are unbased canonical forms.
pub type KnotChain = FormalSum<SingularKnotDiagram>;

fn key(k: &SingularKnotDiagram) -> SingularKnotDiagram {
    canonical_form(&k.with_base(false))
}

/// `∂K = sum_i (-1)^{i+1} (K_{i+} - K_{i-})`.
pub fn boundary_chain(k: &SingularKnotDiagram) -> KnotChain {
    let mut out = FormalSum::zero();
    for i in 1..=k.singular_degree() {
        let s: i64 = if i % 2 == 1 { 1 } else { -1 };
        out.add_term(key(&k.resolve(i, 1).expect("label exists")), rat(s));
        out.add_term(key(&k.resolve(i, -1).expect("label exists")), rat(-s));
    }
    out
}

pub fn boundary_of_chain(c: &KnotChain) -> KnotChain {
    c.map_linear(boundary_chain)
}

pub fn mirror_chain(c: &KnotChain) -> KnotChain {
    c.map_linear(|k| FormalSum::basis(key(&k.mirror())))
}

/// All `2^n` full resolutions with their sign vectors (indexed by label - 1).
pub fn resolve_all(k: &SingularKnotDiagram) -> Vec<(Vec<i8>, SingularKnotDiagram)> {
    let n = k.singular_degree();
    (0..1u32 << n)
        .map(|mask| {
            let signs: Vec<i8> = (0..n).map(|i| if mask & (1 << i) == 0 { 1 } else { -1 }).collect();
            let r = k.resolve_with(&signs).expect("length matches");
            (signs, r)
        })
        .collect()
}
