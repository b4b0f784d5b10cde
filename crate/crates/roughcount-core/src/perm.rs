//! Lexicographic permutation enumeration used by the brute-force modules.

use alloc::vec::Vec;

/// Iterator over all permutations of `0..n` in lexicographic order.
pub struct LexPermutations {
    current: Option<Vec<usize>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        LexPermutations {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut p = out.clone();
        if next_permutation(&mut p) {
            self.current = Some(p);
        } else {
            self.current = None;
        }
        Some(out)
    }
}

/// Advances `p` to its lexicographic successor in place. Returns false when
/// `p` is already the last permutation.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Composition `(x * y)(i) = x(y(i))`.
pub fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}
