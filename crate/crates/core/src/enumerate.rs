//! Exhaustive enumeration helpers shared by the brute-force solvers.

/// Rearranges `v` into the next lexicographic permutation.
///
/// Returns `false` (leaving `v` sorted ascending) once the last permutation
/// has been passed.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `visit` with every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        visit(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// Number of injective maps from `k` items into `n` slots, `n! / (n-k)!`.
pub fn falling_factorial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    ((n - k + 1)..=n).try_fold(1u64, |acc, x| acc.checked_mul(x as u64))
}

/// Calls `visit` with every `k`-subset of `0..n`, in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        if idx[i] == i + n - k {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
