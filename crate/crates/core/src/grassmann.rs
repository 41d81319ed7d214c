//! Associated Grassmannian permutations, their lattice paths and partitions,
//! corner classification and the balanced predicate.

use serde::Serialize;
use thiserror::Error;

use crate::matcher::contains_bivincular;
use crate::pattern::BivincularPattern;
use crate::perm::{flatten, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error("{d} is not a descent of {perm}")]
    NotADescent { d: usize, perm: Permutation },
    #[error("{perm} has {descents} descents, expected exactly one")]
    NotGrassmannian { perm: Permutation, descents: usize },
    #[error("family index must be at least 1")]
    ZeroIndex,
    #[error("partition {partition:?} does not fit a {rows} x {cols} box")]
    PartitionDoesNotFit { partition: Vec<usize>, rows: usize, cols: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Right-to-left minima of `π(1..d)` followed by left-to-right maxima of
/// `π(d+1..n)`.
pub fn gamma_word(perm: &Permutation, d: usize) -> Result<Vec<usize>, GrassmannError> {
    if !perm.descents().contains(&d) {
        return Err(GrassmannError::NotADescent { d, perm: perm.clone() });
    }
    let w = perm.values();
    let mut left = Vec::new();
    let mut min = usize::MAX;
    for &v in w[..d].iter().rev() {
        if v < min {
            left.push(v);
            min = v;
        }
    }
    left.reverse();
    let mut max = 0;
    for &v in &w[d..] {
        if v > max {
            left.push(v);
            max = v;
        }
    }
    Ok(left)
}

pub fn associated_grassmannian(perm: &Permutation, d: usize) -> Result<Permutation, GrassmannError> {
    Ok(flatten(&gamma_word(perm, d)?)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Step {
    V,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerTag {
    TooWide,
    TooDeep,
    Balanced,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InnerCorner {
    pub x: usize,
    pub y: usize,
    /// `x + (d - y)`: inner corners share this value iff they lie on one
    /// anti-diagonal.
    pub distance: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OuterCorner {
    pub x: usize,
    pub y: usize,
    pub tag: CornerTag,
}

/// The lattice path of a Grassmannian permutation inside its `d × (n−d)`
/// box. Step `i` goes up (V) when value `i` sits left of the descent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerReport {
    pub box_rows: usize,
    pub box_cols: usize,
    pub path: Vec<Step>,
    /// Nonzero row lengths, top row first.
    pub partition: Vec<usize>,
    pub inner_corners: Vec<InnerCorner>,
    pub outer_corners: Vec<OuterCorner>,
}

impl CornerReport {
    pub fn too_wide(&self) -> bool {
        self.outer_corners.iter().any(|c| c.tag == CornerTag::TooWide)
    }

    pub fn too_deep(&self) -> bool {
        self.outer_corners.iter().any(|c| c.tag == CornerTag::TooDeep)
    }

    pub fn is_balanced(&self) -> bool {
        self.inner_corners.windows(2).all(|w| w[0].distance == w[1].distance)
    }
}

fn unique_descent(perm: &Permutation) -> Result<usize, GrassmannError> {
    match perm.descents()[..] {
        [d] => Ok(d),
        ref ds => Err(GrassmannError::NotGrassmannian { perm: perm.clone(), descents: ds.len() }),
    }
}

pub fn corner_report(rho: &Permutation) -> Result<CornerReport, GrassmannError> {
    let d = unique_descent(rho)?;
    let n = rho.rank();
    let path: Vec<Step> = (1..=n).map(|v| if rho.position_of(v) <= d { Step::V } else { Step::H }).collect();

    // Lattice point reached after each step.
    let mut points = Vec::with_capacity(n);
    let (mut x, mut y) = (0, 0);
    let mut rows = Vec::with_capacity(d);
    for s in &path {
        match s {
            Step::V => {
                y += 1;
                rows.push(x);
            }
            Step::H => x += 1,
        }
        points.push((x, y));
    }
    let partition: Vec<usize> = rows.into_iter().rev().filter(|&r| r > 0).collect();

    let mut inner_corners = Vec::new();
    // Outer corners with the index of the inner corner preceding them.
    let mut pending = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let (x, y) = points[i];
        match (path[i], path[i + 1]) {
            (Step::V, Step::H) => inner_corners.push(InnerCorner { x, y, distance: x + (d - y) }),
            (Step::H, Step::V) => pending.push((x, y, inner_corners.len())),
            _ => {}
        }
    }
    let outer_corners = pending
        .into_iter()
        .map(|(x, y, after)| {
            let tag = if after == 0 || after == inner_corners.len() {
                CornerTag::Boundary
            } else {
                let (c1, c2) = (inner_corners[after - 1], inner_corners[after]);
                let (dy, dx) = (c2.y - c1.y, c2.x - c1.x);
                match dy.cmp(&dx) {
                    std::cmp::Ordering::Less => CornerTag::TooWide,
                    std::cmp::Ordering::Greater => CornerTag::TooDeep,
                    std::cmp::Ordering::Equal => CornerTag::Balanced,
                }
            };
            OuterCorner { x, y, tag }
        })
        .collect();

    Ok(CornerReport { box_rows: d, box_cols: n - d, path, partition, inner_corners, outer_corners })
}

/// Rebuilds the permutation whose values `≤ n` left of position `d` are the
/// up-steps of the path bounding `partition` (top row first).
pub fn grassmannian_from_partition(d: usize, cols: usize, partition: &[usize]) -> Result<Permutation, GrassmannError> {
    let fits = partition.len() <= d && partition.iter().all(|&r| r <= cols) && partition.windows(2).all(|w| w[0] >= w[1]);
    if !fits || d + cols == 0 {
        return Err(GrassmannError::PartitionDoesNotFit { partition: partition.to_vec(), rows: d, cols });
    }
    let row_len = |y: usize| partition.get(d - y).copied().unwrap_or(0);
    let (mut left, mut right) = (Vec::with_capacity(d), Vec::with_capacity(cols));
    let mut x = 0;
    let mut value = 0;
    for y in 1..=d {
        while x < row_len(y) {
            value += 1;
            right.push(value);
            x += 1;
        }
        value += 1;
        left.push(value);
    }
    while x < cols {
        value += 1;
        right.push(value);
        x += 1;
    }
    left.extend(right);
    Ok(Permutation::new(left)?)
}

/// True iff every associated Grassmannian has its inner corners on one
/// anti-diagonal. Permutations without descents are balanced.
pub fn is_balanced(perm: &Permutation) -> bool {
    perm.descents().into_iter().all(|d| {
        let rho = associated_grassmannian(perm, d).expect("d is a descent");
        corner_report(&rho).expect("associated permutation is Grassmannian").is_balanced()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    F,
    G,
}

/// Member `index` of the F or G family, of rank `2·index + 3`.
pub fn family_member(which: Family, index: usize) -> Result<BivincularPattern, GrassmannError> {
    if index == 0 {
        return Err(GrassmannError::ZeroIndex);
    }
    let k = 2 * index + 3;
    let l = match which {
        Family::F => k.div_ceil(2),
        Family::G => (k - 1) / 2,
    };
    let mut word = vec![1];
    word.extend(l + 1..k);
    word.extend(2..=l);
    word.push(k);
    let ys: Vec<usize> = match which {
        Family::F => (2..k).collect(),
        Family::G => (1..k - 1).collect(),
    };
    let perm = Permutation::new(word)?;
    Ok(BivincularPattern::new(perm, [], ys).expect("adjacencies in range"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Unbalance {
    pub too_wide: bool,
    pub too_deep: bool,
}

/// Family containment for a Grassmannian `ρ`: too wide iff some F member of
/// rank at most `rank_cap` occurs, too deep likewise with G.
pub fn unbalance_via_families(rho: &Permutation, rank_cap: usize) -> Result<Unbalance, GrassmannError> {
    unique_descent(rho)?;
    let cap = rank_cap.min(rho.rank());
    let hit = |which| {
        (1..)
            .take_while(|i| 2 * i + 3 <= cap)
            .any(|i| contains_bivincular(&family_member(which, i).expect("index ≥ 1"), rho))
    };
    Ok(Unbalance { too_wide: hit(Family::F), too_deep: hit(Family::G) })
}
