//! Binomials, lexicographic subset ranking and permutation enumeration.

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Rank of a sorted `k`-subset of `{0, .., n-1}` in lexicographic order.
pub fn subset_rank(n: usize, subset: &[usize]) -> u64 {
    let k = subset.len();
    let mut rank = 0u64;
    let mut next = 0usize;
    for (j, &s) in subset.iter().enumerate() {
        for x in next..s {
            rank += binomial((n - 1 - x) as u64, (k - 1 - j) as u64);
        }
        next = s + 1;
    }
    rank
}

/// Inverse of [`subset_rank`].
pub fn subset_unrank(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0usize;
    for j in 0..k {
        loop {
            let block = binomial((n - 1 - x) as u64, (k - 1 - j) as u64);
            if rank < block {
                break;
            }
            rank -= block;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Lexicographic iterator over the `k`-subsets of `{0, .., n-1}`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

/// All permutations of `0..r` in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..r).collect();
    let mut out = vec![perm.clone()];
    while next_permutation(&mut perm) {
        out.push(perm.clone());
    }
    out
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn factorial(r: usize) -> u64 {
    (1..=r as u64).fold(1u64, |acc, x| acc.saturating_mul(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(12, 6), 924);
    }

    #[test]
    fn rank_matches_iteration_order() {
        for n in 0..9 {
            for k in 0..=n {
                for (i, s) in Combinations::new(n, k).enumerate() {
                    assert_eq!(subset_rank(n, &s), i as u64);
                    assert_eq!(subset_unrank(n, k, i as u64), s);
                }
                assert_eq!(Combinations::new(n, k).count() as u64, binomial(n as u64, k as u64));
            }
        }
    }

    #[test]
    fn permutations_lex() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[1], vec![0, 2, 1]);
        assert_eq!(p[5], vec![2, 1, 0]);
        assert_eq!(permutations(1), vec![vec![0]]);
    }
}
