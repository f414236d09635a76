mod common;

use cubknot::diagrams::{enumerate_ordered, enumerate_plain};
use cubknot::quotients::{aw_dim_via_quotient, build_a, build_a0, build_aw, four_t, omega_vectors, ordered_four_t};

use common::{brute_force_ordered_count, dense_rank, dense_rows};

#[test]
fn diagram_counts() {
    // circular chord diagrams up to rotation
    let plain = [1, 1, 2, 5, 18, 105];
    for (n, want) in plain.iter().enumerate() {
        assert_eq!(enumerate_plain(n, 6).unwrap().len(), *want, "n = {n}");
    }
    for n in 0..=4 {
        assert_eq!(enumerate_ordered(n, 6).unwrap().len(), brute_force_ordered_count(n), "n = {n}");
    }
}

#[test]
fn plain_and_ordered_ranks_match_dense_elimination() {
    for n in 2..=4 {
        let q = build_a(n, false, 6).unwrap();
        let sums: Vec<_> = four_t(n, 6)
            .unwrap()
            .relations
            .iter()
            .map(|r| r.sum().iter().map(|(b, c)| (b.clone(), c.clone())).collect())
            .collect();
        assert_eq!(dense_rank(&dense_rows(q.ambient(), &sums)), q.rank(), "A_{n}");

        let q = build_a0(n, false, 6).unwrap();
        let sums: Vec<_> = ordered_four_t(n, 6)
            .unwrap()
            .relations
            .iter()
            .map(|r| r.sum().iter().map(|(b, c)| (b.clone(), c.clone())).collect())
            .collect();
        assert_eq!(dense_rank(&dense_rows(q.ambient(), &sums)), q.rank(), "A0_{n}");
    }
}

#[test]
fn aw_dense_and_two_routes_agree() {
    for n in 0..=4 {
        let q = build_aw(n, false, 6).unwrap();
        let mut sums: Vec<Vec<_>> = Vec::new();
        if n >= 2 {
            sums.extend(
                ordered_four_t(n, 6)
                    .unwrap()
                    .relations
                    .iter()
                    .map(|r| r.sum().iter().map(|(b, c)| (b.clone(), c.clone())).collect()),
            );
        }
        sums.extend(
            omega_vectors(n, 6).unwrap().iter().map(|v| v.iter().map(|(b, c)| (b.clone(), c.clone())).collect()),
        );
        let rank = dense_rank(&dense_rows(q.ambient(), &sums));
        assert_eq!(q.ambient().len() - rank, q.dim(), "Aw_{n}");
        assert_eq!(aw_dim_via_quotient(n, false, 6).unwrap(), q.dim(), "Aw_{n}");
    }
}
