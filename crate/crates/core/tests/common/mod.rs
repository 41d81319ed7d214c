//! Brute-force reference matchers shared by the integration tests.
//!
//! These walk every index subset and test each condition literally, so
//! they share no code with the library matcher.

#![allow(dead_code)]

/// All increasing `k`-tuples of 1-based indices into `1..=n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every permutation of `1..=n` as a plain vector.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in perms(n - 1) {
        for slot in 0..n {
            let mut w = smaller.clone();
            w.insert(slot, n);
            out.push(w);
        }
    }
    out.sort();
    out
}

fn same_order(pattern: &[usize], word: &[usize]) -> bool {
    (0..pattern.len())
        .all(|a| (0..pattern.len()).all(|b| (pattern[a] < pattern[b]) == (word[a] < word[b])))
}

/// Position tuples of bivincular occurrences of `(p, xs, ys)` in `w`.
pub fn bivincular_occurrences(p: &[usize], xs: &[usize], ys: &[usize], w: &[usize]) -> Vec<Vec<usize>> {
    let (n, k) = (w.len(), p.len());
    subsets(n, k)
        .into_iter()
        .filter(|idx| {
            let word: Vec<usize> = idx.iter().map(|&i| w[i - 1]).collect();
            if !same_order(p, &word) {
                return false;
            }
            let mut pos = vec![0];
            pos.extend(idx);
            pos.push(n + 1);
            let mut vals = vec![0];
            let mut sorted = word.clone();
            sorted.sort();
            vals.extend(sorted);
            vals.push(n + 1);
            xs.iter().all(|&x| pos[x + 1] == pos[x] + 1) && ys.iter().all(|&y| vals[y + 1] == vals[y] + 1)
        })
        .collect()
}

pub fn contains_bivincular(p: &[usize], xs: &[usize], ys: &[usize], w: &[usize]) -> bool {
    !bivincular_occurrences(p, xs, ys, w).is_empty()
}

pub fn contains_classical(p: &[usize], w: &[usize]) -> bool {
    contains_bivincular(p, &[], &[], w)
}

/// Mesh containment: some classical occurrence leaves every shaded box
/// `(col,row)` empty.
pub fn contains_mesh(p: &[usize], shaded: &[(usize, usize)], w: &[usize]) -> bool {
    let n = w.len();
    bivincular_occurrences(p, &[], &[], w).into_iter().any(|idx| {
        let mut pos = vec![0];
        pos.extend(&idx);
        pos.push(n + 1);
        let mut vals: Vec<usize> = idx.iter().map(|&i| w[i - 1]).collect();
        vals.sort();
        vals.insert(0, 0);
        vals.push(n + 1);
        shaded.iter().all(|&(c, r)| {
            !(1..=n).any(|i| pos[c] < i && i < pos[c + 1] && vals[r] < w[i - 1] && w[i - 1] < vals[r + 1])
        })
    })
}

/// Barred avoidance: every occurrence of the unbarred letters extends to
/// an occurrence of the whole word. `bars` are 1-based indices into `full`.
pub fn avoids_barred(full: &[usize], bars: &[usize], w: &[usize]) -> bool {
    let kept: Vec<usize> = (1..=full.len()).filter(|i| !bars.contains(i)).collect();
    let reduced: Vec<usize> = kept.iter().map(|&i| full[i - 1]).collect();
    let fulls = bivincular_occurrences(full, &[], &[], w);
    bivincular_occurrences(&reduced, &[], &[], w).into_iter().all(|occ| {
        fulls.iter().any(|f| kept.iter().zip(&occ).all(|(&i, &pos)| f[i - 1] == pos))
    })
}

pub fn digits(s: &str) -> Vec<usize> {
    s.chars().map(|c| c.to_digit(10).expect("digit") as usize).collect()
}
