//! Reference implementations that share no code with the library.
#![allow(dead_code)]

/// Number of standard Young tableaux of a shape by the hook-length formula.
pub fn hook_length_count(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let conj = |j: usize| parts.iter().filter(|&&p| p > j).count();
    let mut hooks: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj(j) - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n as u128).product::<u128>() / hooks
}

/// Longest increasing subsequence by the quadratic DP.
pub fn lis_dp(word: &[usize]) -> usize {
    let mut best = vec![1; word.len()];
    for i in 0..word.len() {
        for j in 0..i {
            if word[j] < word[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn lds_dp(word: &[usize]) -> usize {
    let reversed: Vec<usize> = word.iter().rev().copied().collect();
    lis_dp(&reversed)
}

/// p(n) by the standard coin-change recurrence.
pub fn partition_count(n: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Involutions in S_n: a(n) = a(n-1) + (n-1) a(n-2).
pub fn involution_count(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for k in 2..=n {
        (a, b) = (b, b + (k - 1) * a);
    }
    if n == 0 {
        1
    } else {
        b
    }
}

/// +1 or -1 from the cycle count, without counting inversions.
pub fn sign_by_cycles(word: &[usize]) -> i64 {
    let n = word.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if !seen[start] {
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = word[i] - 1;
            }
        }
    }
    if (n - cycles).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Largest number of disjoint vertical dominoes in a Young diagram,
/// by exhaustive search over the cells.
pub fn max_vertical_dominoes(parts: &[usize]) -> usize {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut used = vec![vec![false; parts.first().copied().unwrap_or(0)]; parts.len()];

    fn go(k: usize, cells: &[(usize, usize)], parts: &[usize], used: &mut Vec<Vec<bool>>) -> usize {
        if k == cells.len() {
            return 0;
        }
        let (i, j) = cells[k];
        let mut best = go(k + 1, cells, parts, used);
        let below = i + 1 < parts.len() && parts[i + 1] > j;
        if !used[i][j] && below && !used[i + 1][j] {
            used[i][j] = true;
            used[i + 1][j] = true;
            best = best.max(1 + go(k + 1, cells, parts, used));
            used[i][j] = false;
            used[i + 1][j] = false;
        }
        best
    }
    go(0, &cells, parts, &mut used)
}

/// Whether the subsequence at some three positions has the given relative
/// order, checked by plain triple loops.
pub fn contains_length_three(word: &[usize], pat: [usize; 3]) -> bool {
    let n = word.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let w = [word[a], word[b], word[c]];
                let ok = (0..3).all(|x| (0..3).all(|y| (w[x] < w[y]) == (pat[x] < pat[y])));
                if ok {
                    return true;
                }
            }
        }
    }
    false
}
