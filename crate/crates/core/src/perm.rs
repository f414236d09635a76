//! Small permutation helpers. Permutations are 1-based images: `p[k-1] = p(k)`.

pub fn is_permutation(p: &[usize]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    for &x in p {
        if x == 0 || x > n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Sign of an arbitrary sequence of distinct integers: (-1)^inversions.
pub fn sequence_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn sign(p: &[usize]) -> i32 {
    sequence_sign(p)
}

pub fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x - 1] = i + 1;
    }
    inv
}

/// `(a ∘ b)(k) = a(b(k))`
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x - 1]).collect()
}

/// Adjacent transposition (k, k+1), 1-based k in 1..n.
pub fn adjacent_transposition(n: usize, k: usize) -> Vec<usize> {
    let mut p = identity(n);
    p.swap(k - 1, k);
    p
}

/// All permutations of 1..=n in lexicographic order.
pub fn all(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p = identity(n);
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Sign of the shuffle that sorts the concatenation (H, K), with H and K
/// each in increasing order and K the complement of H in 1..=n.
pub fn shuffle_sign(h: &[usize], n: usize) -> i32 {
    let k = complement(h, n);
    let mut seq: Vec<usize> = h.to_vec();
    seq.extend(k);
    sequence_sign(&seq)
}

pub fn complement(h: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|x| !h.contains(x)).collect()
}

/// Subsets of 1..=n as sorted vectors, indexed by bitmask.
pub fn subset_from_mask(mask: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        assert_eq!(all(0).len(), 1);
        assert_eq!(all(4).len(), 24);
        let evens = all(4).iter().filter(|p| sign(p) == 1).count();
        assert_eq!(evens, 12);
        assert_eq!(sign(&[2, 1, 3]), -1);
    }

    #[test]
    fn compose_and_inverse() {
        let a = vec![2, 3, 1];
        let b = vec![1, 3, 2];
        assert_eq!(compose(&a, &inverse(&a)), identity(3));
        assert_eq!(sign(&compose(&a, &b)), sign(&a) * sign(&b));
    }

    #[test]
    fn shuffle_signs_match_worked_table() {
        assert_eq!(shuffle_sign(&[1, 2], 4), 1);
        assert_eq!(shuffle_sign(&[1, 3], 4), -1);
        assert_eq!(shuffle_sign(&[1, 4], 4), 1);
        assert_eq!(shuffle_sign(&[2, 3], 4), 1);
        assert_eq!(shuffle_sign(&[2, 4], 4), -1);
        assert_eq!(shuffle_sign(&[3, 4], 4), 1);
        assert_eq!(shuffle_sign(&[], 4), 1);
        assert_eq!(shuffle_sign(&[1, 2, 3, 4], 4), 1);
    }
}
