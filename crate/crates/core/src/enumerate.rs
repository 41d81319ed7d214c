//! Exhaustive enumeration of `S_n` in lexicographic order, split into the
//! `n` blocks sharing a first letter so that sweeps can run in parallel and
//! still merge deterministically.

use rayon::prelude::*;

use crate::perm::{PermError, Permutation};

/// Largest rank accepted for exhaustive enumeration.
pub const ENUMERATION_RANK_CAP: usize = 12;

fn check_rank(n: usize) -> Result<(), PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    if n > ENUMERATION_RANK_CAP {
        return Err(PermError::RankCap { rank: n, cap: ENUMERATION_RANK_CAP });
    }
    Ok(())
}

/// Lexicographic iterator over a contiguous range of `S_n`.
#[derive(Debug, Clone)]
pub struct Lexicographic {
    current: Option<Vec<usize>>,
    // Stop once the first letter changes (block mode).
    first: Option<usize>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        if let Some(f) = self.first {
            if cur[0] != f {
                self.current = None;
                return None;
            }
        }
        let out = Permutation::from_vec_unchecked(cur.clone());
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `S_n`, lexicographically.
pub fn all(n: usize) -> Result<Lexicographic, PermError> {
    check_rank(n)?;
    Ok(Lexicographic { current: Some((1..=n).collect()), first: None })
}

/// The permutations of `S_n` starting with `first`, lexicographically.
pub fn block(n: usize, first: usize) -> Result<Lexicographic, PermError> {
    check_rank(n)?;
    if first == 0 || first > n {
        return Err(PermError::OutOfRange { value: first as i64, rank: n });
    }
    let mut start = vec![first];
    start.extend((1..=n).filter(|&v| v != first));
    Ok(Lexicographic { current: Some(start), first: Some(first) })
}

/// All permutations of ranks `1..=max_rank`, rank by rank.
pub fn up_to(max_rank: usize) -> Result<impl Iterator<Item = Permutation>, PermError> {
    check_rank(max_rank)?;
    Ok((1..=max_rank).flat_map(|n| all(n).expect("rank checked")))
}

/// Maps `f` over `S_n` in parallel (one task per block), keeping the
/// `Some` results in lexicographic order of their inputs.
///
/// The worker count is whatever rayon pool the call runs in.
pub fn par_filter_map<T, F>(n: usize, f: F) -> Result<Vec<T>, PermError>
where
    T: Send,
    F: Fn(&Permutation) -> Option<T> + Sync,
{
    check_rank(n)?;
    let blocks: Vec<Vec<T>> = (1..=n)
        .into_par_iter()
        .map(|first| block(n, first).expect("rank checked").filter_map(|p| f(&p)).collect())
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}

/// Number of permutations in `S_n` satisfying `pred`.
pub fn par_count<F>(n: usize, pred: F) -> Result<usize, PermError>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    check_rank(n)?;
    Ok((1..=n)
        .into_par_iter()
        .map(|first| block(n, first).expect("rank checked").filter(|p| pred(p)).count())
        .sum())
}

/// First permutation of `S_n` (lexicographically) satisfying `pred`.
pub fn par_find_first<F>(n: usize, pred: F) -> Result<Option<Permutation>, PermError>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    check_rank(n)?;
    let hits: Vec<Option<Permutation>> = (1..=n)
        .into_par_iter()
        .map(|first| block(n, first).expect("rank checked").find(|p| pred(p)))
        .collect();
    Ok(hits.into_iter().flatten().next())
}
