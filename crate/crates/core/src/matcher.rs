//! Occurrence search and containment for every pattern formalism.
//!
//! All kinds share one backtracking search over position vectors. It fixes
//! positions left to right, checks each new letter against its nearest
//! already-placed neighbours in value, and prunes on remaining length and
//! value room. The kind-specific constraints (adjacencies, empty boxes,
//! region counts, cover conditions, length criterion) are then checked on
//! each complete embedding.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, IntervalPattern, MarkedMeshPattern,
    MarkedRegion, MeshPattern, Pattern,
};
use crate::perm::{covers_at, Permutation};

/// An embedding of a pattern of rank `k`: positions `i₁ < … < i_k` and the
/// entries found there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    positions: Vec<usize>,
    values: Vec<usize>,
}

impl Occurrence {
    fn from_zero_based(text: &[usize], positions: &[usize]) -> Self {
        Occurrence {
            positions: positions.iter().map(|&i| i + 1).collect(),
            values: positions.iter().map(|&i| text[i]).collect(),
        }
    }

    /// 1-based positions, strictly increasing.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// `π(i₁)…π(i_k)`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The values in increasing order, `j₁ < … < j_k`.
    pub fn sorted_values(&self) -> Vec<usize> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }
}

/// Precomputed search plan for a pattern word.
struct Plan<'p> {
    pattern: &'p [usize],
    // For letter t, the earlier letter with the largest smaller value and the
    // one with the smallest larger value.
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    // adjacent[x]: i_{x+1} = i_x + 1 with the boundary conventions
    // i_0 = 0, i_{k+1} = n + 1.
    adjacent: Vec<bool>,
}

impl<'p> Plan<'p> {
    fn new(pattern: &'p [usize]) -> Self {
        let k = pattern.len();
        let mut below = Vec::with_capacity(k);
        let mut above = Vec::with_capacity(k);
        for t in 0..k {
            let v = pattern[t];
            below.push((0..t).filter(|&s| pattern[s] < v).max_by_key(|&s| pattern[s]));
            above.push((0..t).filter(|&s| pattern[s] > v).min_by_key(|&s| pattern[s]));
        }
        Plan { pattern, below, above, adjacent: vec![false; k + 1] }
    }

    fn with_adjacencies<'a>(mut self, xs: impl IntoIterator<Item = &'a usize>) -> Self {
        for &x in xs {
            self.adjacent[x] = true;
        }
        self
    }
}

/// Runs the backtracking search, handing each embedding (0-based positions)
/// to `visit` in lexicographic order.
fn search<F>(plan: &Plan<'_>, text: &[usize], mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = plan.pattern.len();
    let n = text.len();
    if k == 0 || k > n {
        return;
    }
    let mut chosen = Vec::with_capacity(k);
    let _ = extend(plan, text, &mut chosen, &mut visit);
}

fn extend<F>(plan: &Plan<'_>, text: &[usize], chosen: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = plan.pattern.len();
    let n = text.len();
    let t = chosen.len();
    if t == k {
        return visit(chosen);
    }
    let start = chosen.last().map_or(0, |&m| m + 1);
    let stop = n - (k - t);
    let (lo, hi) = if t == 0 && plan.adjacent[0] {
        (0, 0)
    } else if t > 0 && plan.adjacent[t] {
        (start, start)
    } else {
        (start, stop)
    };
    // The last letter may also be pinned to the end; `hi` is already at most n-1.
    let lo = if t == k - 1 && plan.adjacent[k] { lo.max(n - 1) } else { lo };
    if lo > hi || hi > stop {
        return ControlFlow::Continue(());
    }
    let want = plan.pattern[t];
    for m in lo..=hi {
        let v = text[m];
        // Room for the letters smaller and larger than this one.
        if v < want || n - v < k - want {
            continue;
        }
        if let Some(s) = plan.below[t] {
            if text[chosen[s]] > v {
                continue;
            }
        }
        if let Some(s) = plan.above[t] {
            if text[chosen[s]] < v {
                continue;
            }
        }
        chosen.push(m);
        let flow = extend(plan, text, chosen, visit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Collects embeddings accepted by `accept`; stops at the first when
/// `first_only` is set.
fn collect<A>(plan: &Plan<'_>, perm: &Permutation, first_only: bool, mut accept: A) -> Vec<Occurrence>
where
    A: FnMut(&[usize]) -> bool,
{
    let text = perm.values();
    let mut out = Vec::new();
    search(plan, text, |pos| {
        if accept(pos) {
            out.push(Occurrence::from_zero_based(text, pos));
            if first_only {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    out
}

/// Point counts of the `(k+1)²` boxes around an embedding, indexed
/// `col * (k+1) + row`. Points of the embedding itself lie on grid lines and
/// are not counted.
pub(crate) fn cell_counts(text: &[usize], positions: &[usize]) -> Vec<usize> {
    let k = positions.len();
    let mut sorted: Vec<usize> = positions.iter().map(|&i| text[i]).collect();
    sorted.sort_unstable();
    let mut counts = vec![0; (k + 1) * (k + 1)];
    let mut col = 0;
    for (m, &v) in text.iter().enumerate() {
        if col < k && positions[col] == m {
            col += 1;
            continue;
        }
        let row = sorted.partition_point(|&s| s < v);
        counts[col * (k + 1) + row] += 1;
    }
    counts
}

fn cell_index(c: &Cell, k: usize) -> usize {
    c.col * (k + 1) + c.row
}

fn value_adjacencies_hold(text: &[usize], positions: &[usize], ys: &std::collections::BTreeSet<usize>) -> bool {
    if ys.is_empty() {
        return true;
    }
    let n = text.len();
    let k = positions.len();
    let mut j: Vec<usize> = Vec::with_capacity(k + 2);
    j.push(0);
    j.extend(positions.iter().map(|&i| text[i]));
    j[1..].sort_unstable();
    j.push(n + 1);
    ys.iter().all(|&y| j[y + 1] == j[y] + 1)
}

fn shading_holds(counts: &[usize], shaded: &std::collections::BTreeSet<Cell>, k: usize) -> bool {
    shaded.iter().all(|c| counts[cell_index(c, k)] == 0)
}

fn region_holds(counts: &[usize], region: &MarkedRegion, k: usize) -> bool {
    // Boxes are disjoint, so the count of the union is the sum.
    let total: usize = region.cells().iter().map(|c| counts[cell_index(c, k)]).sum();
    region.cmp().holds(total, region.threshold())
}

/// Whether the embedding at 0-based `positions` satisfies every region.
pub(crate) fn marked_mesh_holds(pat: &MarkedMeshPattern, text: &[usize], positions: &[usize]) -> bool {
    let k = pat.rank();
    let counts = cell_counts(text, positions);
    pat.regions().iter().all(|r| region_holds(&counts, r, k))
}

// ---------------------------------------------------------------------------
// classical

pub fn occurrences_classical(pattern: &Permutation, perm: &Permutation) -> Vec<Occurrence> {
    collect(&Plan::new(pattern.values()), perm, false, |_| true)
}

pub fn contains_classical(pattern: &Permutation, perm: &Permutation) -> bool {
    !collect(&Plan::new(pattern.values()), perm, true, |_| true).is_empty()
}

// ---------------------------------------------------------------------------
// bivincular

fn bivincular_search(pat: &BivincularPattern, perm: &Permutation, first_only: bool) -> Vec<Occurrence> {
    let plan = Plan::new(pat.perm().values()).with_adjacencies(pat.position_adjacencies());
    let text = perm.values();
    collect(&plan, perm, first_only, |pos| value_adjacencies_hold(text, pos, pat.value_adjacencies()))
}

pub fn occurrences_bivincular(pat: &BivincularPattern, perm: &Permutation) -> Vec<Occurrence> {
    bivincular_search(pat, perm, false)
}

pub fn contains_bivincular(pat: &BivincularPattern, perm: &Permutation) -> bool {
    !bivincular_search(pat, perm, true).is_empty()
}

// ---------------------------------------------------------------------------
// mesh

fn mesh_search(pat: &MeshPattern, perm: &Permutation, first_only: bool) -> Vec<Occurrence> {
    let k = pat.rank();
    let text = perm.values();
    collect(&Plan::new(pat.perm().values()), perm, first_only, |pos| {
        shading_holds(&cell_counts(text, pos), pat.shaded(), k)
    })
}

pub fn occurrences_mesh(pat: &MeshPattern, perm: &Permutation) -> Vec<Occurrence> {
    mesh_search(pat, perm, false)
}

pub fn contains_mesh(pat: &MeshPattern, perm: &Permutation) -> bool {
    !mesh_search(pat, perm, true).is_empty()
}

// ---------------------------------------------------------------------------
// marked mesh

fn marked_mesh_search(pat: &MarkedMeshPattern, perm: &Permutation, first_only: bool) -> Vec<Occurrence> {
    let text = perm.values();
    collect(&Plan::new(pat.perm().values()), perm, first_only, |pos| marked_mesh_holds(pat, text, pos))
}

pub fn occurrences_marked_mesh(pat: &MarkedMeshPattern, perm: &Permutation) -> Vec<Occurrence> {
    marked_mesh_search(pat, perm, false)
}

pub fn contains_marked_mesh(pat: &MarkedMeshPattern, perm: &Permutation) -> bool {
    !marked_mesh_search(pat, perm, true).is_empty()
}

/// Whether the entries at the given 1-based positions form an occurrence of
/// `pat`.
pub fn marked_mesh_occurs_at(pat: &MarkedMeshPattern, perm: &Permutation, positions: &[usize]) -> bool {
    if positions.len() != pat.rank()
        || positions.windows(2).any(|w| w[0] >= w[1])
        || positions.iter().any(|&i| i == 0 || i > perm.rank())
    {
        return false;
    }
    if &perm.pattern_at(positions) != pat.perm() {
        return false;
    }
    let zero: Vec<usize> = positions.iter().map(|&i| i - 1).collect();
    marked_mesh_holds(pat, perm.values(), &zero)
}

// ---------------------------------------------------------------------------
// barred

/// Occurrences of the reduced pattern that do not extend to the full one.
pub fn non_extendable_occurrences(pat: &BarredPattern, perm: &Permutation) -> Vec<Occurrence> {
    let kept: Vec<usize> = (0..pat.full().rank()).filter(|i| !pat.barred().contains(&(i + 1))).collect();
    let text = perm.values();
    let mut extendable: HashSet<Vec<usize>> = HashSet::new();
    search(&Plan::new(pat.full().values()), text, |pos| {
        extendable.insert(kept.iter().map(|&t| pos[t]).collect());
        ControlFlow::Continue(())
    });
    collect(&Plan::new(pat.reduced().values()), perm, false, |pos| !extendable.contains(pos))
}

/// Every occurrence of the reduced pattern extends to an occurrence of the
/// full pattern.
pub fn avoids_barred(pat: &BarredPattern, perm: &Permutation) -> bool {
    let kept: Vec<usize> = (0..pat.full().rank()).filter(|i| !pat.barred().contains(&(i + 1))).collect();
    let text = perm.values();
    let mut extendable: HashSet<Vec<usize>> = HashSet::new();
    search(&Plan::new(pat.full().values()), text, |pos| {
        extendable.insert(kept.iter().map(|&t| pos[t]).collect());
        ControlFlow::Continue(())
    });
    collect(&Plan::new(pat.reduced().values()), perm, true, |pos| !extendable.contains(pos)).is_empty()
}

// ---------------------------------------------------------------------------
// Bruhat-restricted

fn bruhat_search(pat: &BruhatRestrictedPattern, perm: &Permutation, first_only: bool) -> Vec<Occurrence> {
    let text = perm.values();
    collect(&Plan::new(pat.perm().values()), perm, first_only, |pos| {
        pat.restrictions().iter().all(|t| covers_at(text, pos[t.a() - 1], pos[t.b() - 1]))
    })
}

pub fn occurrences_bruhat_restricted(pat: &BruhatRestrictedPattern, perm: &Permutation) -> Vec<Occurrence> {
    bruhat_search(pat, perm, false)
}

pub fn contains_bruhat_restricted(pat: &BruhatRestrictedPattern, perm: &Permutation) -> bool {
    !bruhat_search(pat, perm, true).is_empty()
}

// ---------------------------------------------------------------------------
// interval

fn interval_search(pat: &IntervalPattern, perm: &Permutation, first_only: bool) -> Vec<Occurrence> {
    let text = perm.values();
    let gap = pat.upper().non_inversions() - pat.lower().non_inversions();
    let perm_len = perm.non_inversions();
    let lower = pat.lower().values();
    collect(&Plan::new(pat.upper().values()), perm, first_only, |pos| {
        let mut sorted: Vec<usize> = pos.iter().map(|&i| text[i]).collect();
        sorted.sort_unstable();
        let mut rho = text.to_vec();
        for (t, &i) in pos.iter().enumerate() {
            rho[i] = sorted[lower[t] - 1];
        }
        let rho = Permutation::from_vec_unchecked(rho);
        let rho_len = rho.non_inversions();
        rho_len <= perm_len
            && perm_len - rho_len == gap
            && rho.bruhat_leq(perm).expect("equal ranks")
    })
}

pub fn occurrences_interval(pat: &IntervalPattern, perm: &Permutation) -> Vec<Occurrence> {
    interval_search(pat, perm, false)
}

pub fn contains_interval(pat: &IntervalPattern, perm: &Permutation) -> bool {
    !interval_search(pat, perm, true).is_empty()
}

// ---------------------------------------------------------------------------
// dispatch

/// Occurrences of any pattern kind. For a barred pattern these are the
/// occurrences of the reduced pattern that fail to extend.
pub fn occurrences(pat: &Pattern, perm: &Permutation) -> Vec<Occurrence> {
    match pat {
        Pattern::Classical(p) => occurrences_classical(p, perm),
        Pattern::Bivincular(b) => occurrences_bivincular(b, perm),
        Pattern::Mesh(m) => occurrences_mesh(m, perm),
        Pattern::MarkedMesh(m) => occurrences_marked_mesh(m, perm),
        Pattern::Barred(b) => non_extendable_occurrences(b, perm),
        Pattern::BruhatRestricted(b) => occurrences_bruhat_restricted(b, perm),
        Pattern::Interval(i) => occurrences_interval(i, perm),
    }
}

pub fn contains(pat: &Pattern, perm: &Permutation) -> bool {
    match pat {
        Pattern::Classical(p) => contains_classical(p, perm),
        Pattern::Bivincular(b) => contains_bivincular(b, perm),
        Pattern::Mesh(m) => contains_mesh(m, perm),
        Pattern::MarkedMesh(m) => contains_marked_mesh(m, perm),
        Pattern::Barred(b) => !avoids_barred(b, perm),
        Pattern::BruhatRestricted(b) => contains_bruhat_restricted(b, perm),
        Pattern::Interval(i) => contains_interval(i, perm),
    }
}

pub fn avoids(pat: &Pattern, perm: &Permutation) -> bool {
    !contains(pat, perm)
}

pub fn count_occurrences(pat: &Pattern, perm: &Permutation) -> usize {
    occurrences(pat, perm).len()
}
