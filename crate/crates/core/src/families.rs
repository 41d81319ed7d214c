//! Special permutation families, each with a direct definition next to
//! its pattern encoding.

use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::matcher::{
    avoids_barred, cell_counts, contains_bivincular, contains_classical, contains_marked_mesh, contains_mesh,
    marked_mesh_occurs_at, occurrences_marked_mesh,
};
use crate::pattern::{
    column_strip, BarredPattern, BivincularPattern, Cell, Comparison, MarkedMeshPattern, MarkedRegion, MeshPattern,
};
use crate::perm::{flatten, PermError, Permutation};
use crate::schubert::methods;

methods!(BaxterMethod { Vincular => "vincular", Bivincular => "bivincular", Barred => "barred" });
methods!(SimsunMethod { Direct => "direct", Mesh => "mesh" });
methods!(DumontMethod { Direct => "direct", MarkedMesh => "marked_mesh" });
methods!(FreelyBraidedMethod { Classical => "classical", MarkedMesh => "marked_mesh" });

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn region(cells: impl IntoIterator<Item = (usize, usize)>, cmp: Comparison, threshold: usize) -> MarkedRegion {
    MarkedRegion::new(cells.into_iter().map(|(c, r)| Cell::new(c, r)), cmp, threshold).expect("nonempty region")
}

// ---------------------------------------------------------------------------
// Baxter

pub fn is_baxter(pi: &Permutation, method: BaxterMethod) -> bool {
    match method {
        BaxterMethod::Vincular => {
            static PATS: OnceLock<[BivincularPattern; 2]> = OnceLock::new();
            let pats = PATS.get_or_init(|| {
                [
                    BivincularPattern::vincular(perm("3142"), [2]).expect("valid"),
                    BivincularPattern::vincular(perm("2413"), [2]).expect("valid"),
                ]
            });
            pats.iter().all(|b| !contains_bivincular(b, pi))
        }
        BaxterMethod::Bivincular => {
            static PATS: OnceLock<[BivincularPattern; 2]> = OnceLock::new();
            let pats = PATS.get_or_init(|| {
                [
                    BivincularPattern::new(perm("3142"), [], [2]).expect("valid"),
                    BivincularPattern::new(perm("2413"), [], [2]).expect("valid"),
                ]
            });
            pats.iter().all(|b| !contains_bivincular(b, pi))
        }
        BaxterMethod::Barred => {
            static PATS: OnceLock<[BarredPattern; 2]> = OnceLock::new();
            let pats = PATS.get_or_init(|| {
                [
                    BarredPattern::new(perm("41352"), [3]).expect("valid"),
                    BarredPattern::new(perm("25314"), [3]).expect("valid"),
                ]
            });
            pats.iter().all(|b| avoids_barred(b, pi))
        }
    }
}

// ---------------------------------------------------------------------------
// simsun

fn has_double_descent(w: &[usize]) -> bool {
    w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
}

pub fn is_simsun(pi: &Permutation, method: SimsunMethod) -> bool {
    match method {
        SimsunMethod::Direct => (1..=pi.rank()).all(|k| {
            let restricted: Vec<usize> = pi.values().iter().copied().filter(|&v| v <= k).collect();
            !has_double_descent(&restricted)
        }),
        SimsunMethod::Mesh => {
            static PAT: OnceLock<MeshPattern> = OnceLock::new();
            let pat = PAT.get_or_init(|| {
                let boxes = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)].map(|(c, r)| Cell::new(c, r));
                MeshPattern::new(perm("321"), boxes).expect("valid")
            });
            !contains_mesh(pat, pi)
        }
    }
}

// ---------------------------------------------------------------------------
// Dumont, first kind

/// Readings of the third marked mesh pattern for the first kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DumontFirstThird {
    /// 21 with row 1 shaded and `{(0,0),(0,2)} = k`.
    RowShaded,
    /// 21 with column 1 shaded and `{(0,0),(0,1),(2,0),(2,1)} = k`.
    ColumnShaded,
}

impl DumontFirstThird {
    pub const ALL: [DumontFirstThird; 2] = [DumontFirstThird::RowShaded, DumontFirstThird::ColumnShaded];
}

/// The reading used by the marked mesh method.
pub const DUMONT_FIRST_THIRD: DumontFirstThird = DumontFirstThird::ColumnShaded;

/// The three patterns for threshold `k`.
pub fn dumont_first_patterns(k: usize, third: DumontFirstThird) -> [MarkedMeshPattern; 3] {
    let eq = Comparison::Exactly;
    let even_last = MarkedMeshPattern::with_shading(perm("1"), column_strip(1, 1), vec![region([(0, 0)], eq, k)]);
    let even_then_larger =
        MarkedMeshPattern::with_shading(perm("12"), column_strip(1, 2), vec![region([(0, 0), (2, 0)], eq, k)]);
    let odd_then_smaller = match third {
        DumontFirstThird::RowShaded => MarkedMeshPattern::with_shading(
            perm("21"),
            crate::pattern::row_strip(1, 2),
            vec![region([(0, 0), (0, 2)], eq, k)],
        ),
        DumontFirstThird::ColumnShaded => MarkedMeshPattern::with_shading(
            perm("21"),
            column_strip(1, 2),
            vec![region([(0, 0), (0, 1), (2, 0), (2, 1)], eq, k)],
        ),
    };
    [even_last, even_then_larger, odd_then_smaller].map(|p| p.expect("valid"))
}

fn dumont_first_direct(pi: &Permutation) -> bool {
    let w = pi.values();
    pi.rank().is_multiple_of(2)
        && w.iter().enumerate().all(|(i, &v)| match w.get(i + 1) {
            Some(&next) => (v % 2 == 0) == (next < v),
            None => v % 2 == 1,
        })
}

pub fn is_dumont_first_with(pi: &Permutation, third: DumontFirstThird) -> bool {
    let n = pi.rank();
    n.is_multiple_of(2)
        && (1..=n)
            .step_by(2)
            .all(|k| dumont_first_patterns(k, third).iter().all(|p| !contains_marked_mesh(p, pi)))
}

pub fn is_dumont_first(pi: &Permutation, method: DumontMethod) -> bool {
    match method {
        DumontMethod::Direct => dumont_first_direct(pi),
        DumontMethod::MarkedMesh => is_dumont_first_with(pi, DUMONT_FIRST_THIRD),
    }
}

// ---------------------------------------------------------------------------
// Dumont, second kind

/// Readings of the two rank-1 patterns for the second kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DumontSecondReading {
    /// Single boxes: left-above `= k`, right-below compared with `k`.
    Boxes,
    /// Strips: everything left `= k`, everything below compared with `k`.
    Strips,
}

impl DumontSecondReading {
    pub const ALL: [DumontSecondReading; 2] = [DumontSecondReading::Boxes, DumontSecondReading::Strips];
}

/// The reading used by the marked mesh method.
pub const DUMONT_SECOND_READING: DumontSecondReading = DumontSecondReading::Strips;

/// Pattern for odd `k` (`cmp = ≥ k`) or even `ℓ ≥ 2` (`cmp = ≤ ℓ−1`).
pub fn dumont_second_pattern(reading: DumontSecondReading, k: usize) -> MarkedMeshPattern {
    let boxes = |b: &[(usize, usize)]| b.to_vec();
    let (left, below) = match reading {
        DumontSecondReading::Boxes => (boxes(&[(0, 1)]), boxes(&[(1, 0)])),
        DumontSecondReading::Strips => (boxes(&[(0, 0), (0, 1)]), boxes(&[(0, 0), (1, 0)])),
    };
    let second = if k % 2 == 1 {
        region(below, Comparison::AtLeast, k)
    } else {
        region(below, Comparison::AtMost, k - 1)
    };
    MarkedMeshPattern::new(perm("1"), vec![region(left, Comparison::Exactly, k), second]).expect("valid")
}

fn dumont_second_direct(pi: &Permutation) -> bool {
    pi.rank().is_multiple_of(2) && (1..=pi.rank()).all(|i| if i % 2 == 0 { pi.at(i) < i } else { pi.at(i) >= i })
}

pub fn is_dumont_second_with(pi: &Permutation, reading: DumontSecondReading) -> bool {
    let n = pi.rank();
    n.is_multiple_of(2) && (1..=n).all(|k| !contains_marked_mesh(&dumont_second_pattern(reading, k), pi))
}

pub fn is_dumont_second(pi: &Permutation, method: DumontMethod) -> bool {
    match method {
        DumontMethod::Direct => dumont_second_direct(pi),
        DumontMethod::MarkedMesh => is_dumont_second_with(pi, DUMONT_SECOND_READING),
    }
}

// ---------------------------------------------------------------------------
// freely braided

pub fn is_freely_braided(pi: &Permutation, method: FreelyBraidedMethod) -> bool {
    match method {
        FreelyBraidedMethod::Classical => {
            static SET: OnceLock<Vec<Permutation>> = OnceLock::new();
            let set = SET.get_or_init(|| ["3421", "4231", "4312", "4321"].map(perm).to_vec());
            set.iter().all(|p| !contains_classical(p, pi))
        }
        FreelyBraidedMethod::MarkedMesh => {
            static PAT: OnceLock<MarkedMeshPattern> = OnceLock::new();
            let pat = PAT.get_or_init(|| {
                let cells = [(2, 0), (3, 0), (1, 1), (3, 1), (0, 2), (2, 2)];
                MarkedMeshPattern::new(perm("321"), vec![region(cells, Comparison::AtLeast, 1)]).expect("valid")
            });
            !contains_marked_mesh(pat, pi)
        }
    }
}

// ---------------------------------------------------------------------------
// fixed points and cycles

fn check_index(pi: &Permutation, i: usize) -> Result<(), PermError> {
    if i == 0 || i > pi.rank() {
        return Err(PermError::IndexOutOfRange { index: i, max: pi.rank() });
    }
    Ok(())
}

/// Whether position `i` is an occurrence of the rank-1 pattern with as many
/// points left-above as right-below, for some count `k`.
pub fn fixed_point_marked_mesh(pi: &Permutation, i: usize) -> Result<bool, PermError> {
    check_index(pi, i)?;
    Ok((0..pi.rank()).any(|k| {
        let pat = MarkedMeshPattern::new(
            perm("1"),
            vec![region([(0, 1)], Comparison::Exactly, k), region([(1, 0)], Comparison::Exactly, k)],
        )
        .expect("valid");
        marked_mesh_occurs_at(&pat, pi, &[i])
    }))
}

/// Whether the entries at the given 1-based positions form exactly one
/// cycle of `π`.
///
/// The encoding: the entries form a cyclic pattern and, for each `t`, the
/// points in columns `0..t` equal in number the points in rows `0..t`.
pub fn cycle_check(pi: &Permutation, positions: &[usize]) -> Result<bool, PermError> {
    for &i in positions {
        check_index(pi, i)?;
    }
    let m = positions.len();
    if m == 0 || positions.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(false);
    }
    let pattern = pi.pattern_at(positions);
    if pattern.cycles().len() != 1 {
        return Ok(false);
    }
    let zero: Vec<usize> = positions.iter().map(|&i| i - 1).collect();
    let counts = cell_counts(pi.values(), &zero);
    let at = |c: usize, r: usize| counts[c * (m + 1) + r];
    Ok((1..=m).all(|t| {
        let cols: usize = (0..t).flat_map(|c| (0..=m).map(move |r| (c, r))).map(|(c, r)| at(c, r)).sum();
        let rows: usize = (0..t).flat_map(|r| (0..=m).map(move |c| (c, r))).map(|(c, r)| at(c, r)).sum();
        cols == rows
    }))
}

// ---------------------------------------------------------------------------
// statistics

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialStatistics {
    pub j: usize,
    pub inversions_of_kind_j: usize,
    pub pop_121_occurrences: usize,
    pub hou_mansour_avoider: bool,
}

pub fn inversions_of_kind(pi: &Permutation, j: usize) -> usize {
    assert!(j >= 1, "kind must be at least 1");
    let pat =
        MarkedMeshPattern::new(perm("21"), vec![region([(2, 0)], Comparison::AtMost, j - 1)]).expect("valid");
    occurrences_marked_mesh(&pat, pi).len()
}

pub fn pop_121_occurrences(pi: &Permutation) -> usize {
    static PAT: OnceLock<MarkedMeshPattern> = OnceLock::new();
    let pat = PAT.get_or_init(|| {
        MarkedMeshPattern::new(
            perm("1"),
            vec![region([(0, 0)], Comparison::AtLeast, 1), region([(1, 0)], Comparison::AtLeast, 1)],
        )
        .expect("valid")
    });
    occurrences_marked_mesh(pat, pi).len()
}

pub fn is_hou_mansour_avoider(pi: &Permutation) -> bool {
    static PAT: OnceLock<MarkedMeshPattern> = OnceLock::new();
    let pat = PAT.get_or_init(|| {
        MarkedMeshPattern::with_shading(
            perm("123"),
            column_strip(2, 3),
            vec![region([(1, 0), (1, 1), (1, 2), (1, 3)], Comparison::AtLeast, 1)],
        )
        .expect("valid")
    });
    !contains_marked_mesh(pat, pi)
}

pub fn special_statistics(pi: &Permutation, j: usize) -> SpecialStatistics {
    SpecialStatistics {
        j,
        inversions_of_kind_j: inversions_of_kind(pi, j),
        pop_121_occurrences: pop_121_occurrences(pi),
        hou_mansour_avoider: is_hou_mansour_avoider(pi),
    }
}

/// Flattening of the entries with values `≤ k`.
pub fn restrict_to_values(pi: &Permutation, k: usize) -> Result<Permutation, PermError> {
    let kept: Vec<usize> = pi.values().iter().copied().filter(|&v| v <= k).collect();
    flatten(&kept)
}
