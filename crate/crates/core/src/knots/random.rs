//! Seeded random singular knots: a random ordered chord diagram with a few
//! spare chords is realized, classical crossings are switched at random and
//! the spare double points are resolved with random signs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{realize_with_rule, OverRule, SingularKnotDiagram};
use crate::diagrams::OrderedChordDiagram;

pub fn random_singular_knot(seed: u64, n: usize, max_extra: usize) -> SingularKnotDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = n + rng.gen_range(0..=max_extra);
    let mut points: Vec<usize> = (0..2 * total).collect();
    points.shuffle(&mut rng);
    let pairs: Vec<[usize; 2]> = points.chunks(2).map(|c| [c[0], c[1]]).collect();
    let mut labels: Vec<usize> = (1..=total).collect();
    labels.shuffle(&mut rng);
    let d = OrderedChordDiagram::from_pairs(&pairs, &labels).expect("random matching");
    let rule = if rng.gen_bool(0.5) { OverRule::Descending } else { OverRule::Ascending };
    let mut k = realize_with_rule(&d, rule);
    for v in 0..k.vertices().len() {
        if !k.vertices()[v].is_double() && rng.gen_bool(0.5) {
            k = k.switched(v).expect("classical vertex");
        }
    }
    let mut extra: Vec<usize> = (1..=total).collect();
    extra.shuffle(&mut rng);
    extra.truncate(total - n);
    extra.sort_unstable();
    for &l in extra.iter().rev() {
        let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
        k = k.resolve(l, eps).expect("label present");
    }
    k
}
