//! Permutations in one-line notation and the structural operations the
//! pattern machinery is built on: symmetries, descents, non-inversions, the
//! `⊕` insertion operator, Bruhat covers and comparison, the ascent graph
//! and cycle decomposition.
//!
//! Every interface is 1-based: position `i` runs over `1..=n` and so do the
//! values.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("a permutation must have rank at least 1")]
    Empty,
    #[error("value {value} appears more than once")]
    Duplicate { value: i64 },
    #[error("value {value} is outside 1..={rank}")]
    OutOfRange { value: i64, rank: usize },
    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("transposition needs 1 <= a < b, got ({a},{b})")]
    BadTransposition { a: usize, b: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {rank} exceeds the enumeration cap of {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("cannot parse permutation {text:?}: {reason}")]
    Syntax { text: String, reason: String },
}

/// The three basic symmetries of the square acting on permutation diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse];
}

/// A bijection of `{1,…,n}` written as the word `π(1)π(2)…π(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

/// The transposition `t(a,b)` of positions, `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self, PermError> {
        if a == 0 || a >= b {
            return Err(PermError::BadTransposition { a, b });
        }
        Ok(Transposition { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.a, self.b)
    }
}

impl Permutation {
    /// Validates that `values` is a bijection of `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { value: v as i64, rank: n });
            }
            if seen[v] {
                return Err(PermError::Duplicate { value: v as i64 });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a bijection of `1..=n`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        Ok(Permutation { values: (1..=n).collect() })
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `π(i)` for `1 <= i <= n`. Panics when `i` is out of range.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The one-line word.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Position of value `v`, i.e. `π⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).map(|i| i + 1).expect("value in range")
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn reverse(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.rank();
        Permutation { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0; self.rank()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    pub fn apply_symmetry(&self, op: Symmetry) -> Permutation {
        match op {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// Positions `d` with `π(d) > π(d+1)`, ascending.
    pub fn descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// A permutation with exactly one descent.
    pub fn is_grassmannian(&self) -> bool {
        self.values.windows(2).filter(|w| w[0] > w[1]).count() == 1
    }

    /// Number of pairs `i < j` with `π(i) < π(j)`: the rank function of the
    /// reversed Bruhat order.
    pub fn non_inversions(&self) -> usize {
        let v = &self.values;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] < v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inversions(&self) -> usize {
        let n = self.rank();
        n * (n - 1) / 2 - self.non_inversions()
    }

    /// `π ⊕_j k`: put the value `k` at position `j`, shifting every existing
    /// value `>= k` up by one.
    pub fn insert(&self, j: usize, k: usize) -> Result<Permutation, PermError> {
        let n = self.rank();
        if j == 0 || j > n + 1 {
            return Err(PermError::IndexOutOfRange { index: j, max: n + 1 });
        }
        if k == 0 || k > n + 1 {
            return Err(PermError::OutOfRange { value: k as i64, rank: n + 1 });
        }
        let bump = |v: usize| if v >= k { v + 1 } else { v };
        let mut values = Vec::with_capacity(n + 1);
        values.extend(self.values[..j - 1].iter().map(|&v| bump(v)));
        values.push(k);
        values.extend(self.values[j - 1..].iter().map(|&v| bump(v)));
        Ok(Permutation { values })
    }

    fn check_transposition(&self, t: Transposition) -> Result<(), PermError> {
        if t.b > self.rank() {
            return Err(PermError::IndexOutOfRange { index: t.b, max: self.rank() });
        }
        Ok(())
    }

    /// `π·t(a,b)`: swap the entries at positions `a` and `b`.
    pub fn swap(&self, t: Transposition) -> Result<Permutation, PermError> {
        self.check_transposition(t)?;
        let mut values = self.values.clone();
        values.swap(t.a - 1, t.b - 1);
        Ok(Permutation { values })
    }

    /// Whether `π·t(a,b)` covers `π`: `π(a) < π(b)` and no entry strictly
    /// between the two positions has a value strictly between theirs.
    pub fn covers(&self, t: Transposition) -> Result<bool, PermError> {
        self.check_transposition(t)?;
        Ok(covers_at(&self.values, t.a - 1, t.b - 1))
    }

    /// Reversed Bruhat comparison `self <= other`: `other` is reachable from
    /// `self` by steps that each add one non-inversion.
    ///
    /// Decided with the prefix-sorting (tableau) criterion, which holds for
    /// any rank; [`Permutation::bruhat_leq_by_chain`] searches cover chains
    /// directly and is kept for cross-checking.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.rank() != other.rank() {
            return Err(PermError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        // Going up in the reversed order removes inversions, so `self <= other`
        // here is `other <= self` in the usual inversion-graded order, where
        // every sorted prefix of `other` is dominated by that of `self`.
        Ok(tableau_dominates(&self.values, &other.values))
    }

    /// Breadth-first search over single cover steps from `self` towards
    /// `other`, each step increasing the non-inversion count by exactly one.
    pub fn bruhat_leq_by_chain(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.rank() != other.rank() {
            return Err(PermError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        let target_len = other.non_inversions();
        let start_len = self.non_inversions();
        if start_len > target_len {
            return Ok(false);
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.values.clone());
        queue.push_back((self.values.clone(), start_len));
        while let Some((cur, len)) = queue.pop_front() {
            if len == target_len {
                if cur == other.values {
                    return Ok(true);
                }
                continue;
            }
            let n = cur.len();
            for a in 0..n {
                for b in a + 1..n {
                    // A step up undoes a cover: the swapped word must have an
                    // ascent at (a,b) with an empty value window.
                    if cur[a] > cur[b] && (a + 1..b).all(|m| cur[m] < cur[b] || cur[m] > cur[a]) {
                        let mut next = cur.clone();
                        next.swap(a, b);
                        if seen.insert(next.clone()) {
                            queue.push_back((next, len + 1));
                        }
                    }
                }
            }
        }
        Ok(false)
    }

    /// Edges `{i,j}` of the ascent graph `G_π`: `i < j`, `π(i) < π(j)` and no
    /// position between them carries a value between theirs.
    pub fn edge_graph(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if covers_at(&self.values, a, b) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        edges
    }

    /// Whether the ascent graph is acyclic.
    pub fn is_forest_like(&self) -> bool {
        let n = self.rank();
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, j) in self.edge_graph() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
        true
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut visited = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.at(i) == i).collect()
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// The standardization of the subsequence at the given 1-based positions.
    pub fn pattern_at(&self, positions: &[usize]) -> Permutation {
        let word: Vec<usize> = positions.iter().map(|&i| self.at(i)).collect();
        flatten(&word).expect("distinct entries of a permutation")
    }
}

/// Whether swapping 0-based positions `a < b` of `w` is a Bruhat cover step.
pub(crate) fn covers_at(w: &[usize], a: usize, b: usize) -> bool {
    let (lo, hi) = (w[a], w[b]);
    lo < hi && w[a + 1..b].iter().all(|&m| m < lo || m > hi)
}

/// Every sorted prefix of `big` dominates the sorted prefix of `small`
/// entrywise.
fn tableau_dominates(big: &[usize], small: &[usize]) -> bool {
    let n = big.len();
    // Prefix domination is equivalent to counting: for every prefix length i
    // and threshold v, #{entries >= v} in big's prefix >= that in small's.
    let mut count_big = vec![0usize; n + 2];
    let mut count_small = vec![0usize; n + 2];
    for i in 0..n {
        count_big[big[i]] += 1;
        count_small[small[i]] += 1;
        let (mut sb, mut ss) = (0, 0);
        for v in (1..=n).rev() {
            sb += count_big[v];
            ss += count_small[v];
            if sb < ss {
                return false;
            }
        }
    }
    true
}

/// The permutation whose letters are in the same relative order as `word`.
pub fn flatten<T: Ord>(word: &[T]) -> Result<Permutation, PermError> {
    if word.is_empty() {
        return Err(PermError::Empty);
    }
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by(|&a, &b| word[a].cmp(&word[b]));
    let mut values = vec![0; word.len()];
    for (rank, w) in idx.windows(2).enumerate() {
        if word[w[0]] == word[w[1]] {
            return Err(PermError::Duplicate { value: rank as i64 + 1 });
        }
    }
    for (rank, &i) in idx.iter().enumerate() {
        values[i] = rank + 1;
    }
    Ok(Permutation { values })
}

impl fmt::Display for Permutation {
    /// Compact digits for rank <= 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `"31524"` (one digit per letter) or `"11,6,12,9"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |reason: &str| PermError::Syntax { text: s.to_string(), reason: reason.to_string() };
        if text.is_empty() {
            return Err(PermError::Empty);
        }
        let values: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|part| part.parse::<usize>().map_err(|_| syntax("expected comma-separated integers")))
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| syntax("expected digits")))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn construction_rejects_bad_words() {
        assert_eq!(Permutation::new(vec![]), Err(PermError::Empty));
        assert!(matches!(Permutation::new(vec![1, 1]), Err(PermError::Duplicate { .. })));
        assert!(matches!(Permutation::new(vec![1, 3]), Err(PermError::OutOfRange { .. })));
        assert!("".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(flatten(&[6, 9, 4, 5, 7, 8, 10]).unwrap(), p("3612457"));
        assert_eq!(flatten(&[3, 2, 1]).unwrap(), p("321"));
        assert_eq!(flatten(&[42, 7, 99]).unwrap(), p("213"));
        assert!(flatten::<i32>(&[]).is_err());
        assert!(flatten(&[4, 2, 4]).is_err());
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("2143").reverse(), p("3412"));
        assert_eq!(p("31524").complement(), p("35142"));
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(5).unwrap().descents().is_empty());
        assert_eq!(p("32415").descents(), vec![1, 3]);
        assert_eq!(p("11,6,12,9,4,1,5,3,7,2,8,10").descents(), vec![1, 3, 4, 5, 7, 9]);
    }

    #[test]
    fn non_inversion_examples() {
        assert_eq!(Permutation::identity(4).unwrap().non_inversions(), 6);
        assert_eq!(p("4321").non_inversions(), 0);
        assert_eq!(p("31524").non_inversions(), 6);
    }

    #[test]
    fn insert_examples() {
        assert_eq!(p("34125").insert(3, 4).unwrap(), p("354126"));
        assert_eq!(p("2143").insert(2, 4).unwrap(), p("24153"));
        assert_eq!(p("2143").insert(4, 2).unwrap(), p("31524"));
        assert_eq!(p("312").insert(4, 4).unwrap(), p("3124"));
        assert!(p("312").insert(5, 1).is_err());
        assert!(p("312").insert(1, 0).is_err());
    }

    #[test]
    fn cover_examples() {
        assert!(!p("24153").covers(t(1, 4)).unwrap());
        assert_eq!(p("24153").swap(t(1, 4)).unwrap(), p("54123"));
        assert!(p("21543").covers(t(1, 5)).unwrap());
        let q = p("13524");
        for d in 1..q.rank() {
            if q.at(d) < q.at(d + 1) {
                assert!(q.covers(t(d, d + 1)).unwrap());
            }
        }
        assert!(p("12").covers(t(1, 3)).is_err());
        assert!(Transposition::new(2, 2).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let x = p("31524");
        assert!(x.bruhat_leq(&x).unwrap());
        assert!(p("41523").bruhat_leq(&x).unwrap());
        assert!(p("45123").bruhat_leq(&x).unwrap());
        assert!(!x.bruhat_leq(&p("45123")).unwrap());
        assert!(p("45123").bruhat_leq_by_chain(&x).unwrap());
        assert!(p("41523").bruhat_leq_by_chain(&x).unwrap());
        assert!(p("12").bruhat_leq(&p("123")).is_err());
    }

    #[test]
    fn edge_graph_examples() {
        let id = Permutation::identity(5).unwrap();
        assert_eq!(id.edge_graph(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(id.is_forest_like());
        assert_eq!(p("1324").edge_graph(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(!p("1324").is_forest_like());
        assert!(p("4257613").is_forest_like());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(Permutation::identity(3).unwrap().fixed_points(), vec![1, 2, 3]);
        assert_eq!(p("21").cycles(), vec![vec![1, 2]]);
        assert_eq!(p("312").cycles(), vec![vec![1, 3, 2]]);
        assert_eq!(p("312").cycle_type(), vec![3]);
    }

    #[test]
    fn display_switches_to_commas_above_rank_nine() {
        assert_eq!(p("31524").to_string(), "31524");
        let big = p("1,3,4,8,9,2,5,6,7,10");
        assert_eq!(big.to_string(), "1,3,4,8,9,2,5,6,7,10");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
