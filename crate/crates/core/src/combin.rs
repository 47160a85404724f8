//! Small enumeration helpers shared by the checkers and solvers.
//!
//! Enumeration order is fixed everywhere (row-major, last index fastest) so
//! that reported witnesses are reproducible.

/// Visit every length-`len` tuple over `0..dim` in row-major order.
pub fn for_each_index_tuple(dim: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if dim == 0 && len > 0 {
        return;
    }
    let mut tuple = vec![0usize; len];
    loop {
        f(&tuple);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < dim {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Advance `t` to its next lexicographic permutation; false when exhausted.
/// Handles repeated entries (visits each distinct permutation once).
pub fn next_permutation(t: &mut [usize]) -> bool {
    if t.len() < 2 {
        return false;
    }
    let mut i = t.len() - 1;
    while i > 0 && t[i - 1] >= t[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = t.len() - 1;
    while t[j] <= t[i - 1] {
        j -= 1;
    }
    t.swap(i - 1, j);
    t[i..].reverse();
    true
}

/// Visit every distinct permutation of `start` (which must be sorted) in
/// lexicographic order.
pub fn for_each_permutation(start: &[usize], mut f: impl FnMut(&[usize])) {
    let mut t = start.to_vec();
    debug_assert!(t.windows(2).all(|w| w[0] <= w[1]), "input must be sorted");
    loop {
        f(&t);
        if !next_permutation(&mut t) {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_tuples_row_major() {
        let mut seen = Vec::new();
        for_each_index_tuple(2, 2, |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn permutations_with_repeats() {
        let mut seen = Vec::new();
        for_each_permutation(&[0, 1, 1], |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn empty_tuple_visited_once() {
        let mut count = 0;
        for_each_index_tuple(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
