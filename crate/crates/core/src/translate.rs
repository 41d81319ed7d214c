//! Translations of the other formalisms into mesh patterns.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, Comparison, IntervalPattern, MeshPattern,
    Pattern,
};
use crate::perm::{covers_at, Permutation, Transposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    /// Such a restriction can never hold, and no mesh pattern is unsatisfiable.
    #[error("restriction {t} is not a cover inside the pattern {perm}")]
    NotACover { t: Transposition, perm: Permutation },
    #[error("marked mesh patterns translate only when every region must be empty")]
    CountingRegion,
}

/// Position adjacencies become full column strips, value adjacencies full
/// row strips.
pub fn bivincular_to_mesh(pat: &BivincularPattern) -> MeshPattern {
    let k = pat.rank();
    let mut shaded = BTreeSet::new();
    for &x in pat.position_adjacencies() {
        shaded.extend((0..=k).map(|r| Cell::new(x, r)));
    }
    for &y in pat.value_adjacencies() {
        shaded.extend((0..=k).map(|c| Cell::new(c, y)));
    }
    MeshPattern::new(pat.perm().clone(), shaded).expect("strips lie inside the grid")
}

/// One single-box mesh pattern per barred letter. A permutation contains
/// the barred pattern iff it contains at least one of them.
pub fn barred_to_meshes(pat: &BarredPattern) -> Vec<MeshPattern> {
    let full = pat.full();
    let kept: Vec<usize> = (1..=full.rank()).filter(|i| !pat.barred().contains(i)).collect();
    pat.barred()
        .iter()
        .map(|&i| {
            let v = full.at(i);
            let col = kept.iter().filter(|&&j| j < i).count();
            let row = kept.iter().filter(|&&j| full.at(j) < v).count();
            MeshPattern::new(pat.reduced().clone(), [Cell::new(col, row)]).expect("box inside the grid")
        })
        .collect()
}

/// Each restriction `t(a,b)` shades the rectangle spanned by the two
/// letters; the results are superposed. Every restriction must be a cover
/// of the pattern itself.
pub fn bruhat_to_mesh(pat: &BruhatRestrictedPattern) -> Result<MeshPattern, TranslateError> {
    let p = pat.perm();
    let mut shaded = BTreeSet::new();
    for t in pat.restrictions() {
        let (a, b) = (t.a(), t.b());
        if !covers_at(p.values(), a - 1, b - 1) {
            return Err(TranslateError::NotACover { t: *t, perm: p.clone() });
        }
        for col in a..b {
            for row in p.at(a)..p.at(b) {
                shaded.insert(Cell::new(col, row));
            }
        }
    }
    Ok(MeshPattern::new(p.clone(), shaded).expect("rectangles lie inside the grid"))
}

/// Shades the boxes where inserting a point changes the length difference
/// between the two ends of the interval.
pub fn interval_to_mesh(pat: &IntervalPattern) -> MeshPattern {
    let (p, q) = (pat.lower(), pat.upper());
    let len = |w: &Permutation| w.non_inversions() as i64;
    let gap = len(q) - len(p);
    let k = pat.rank();
    let mut shaded = BTreeSet::new();
    for col in 0..=k {
        for row in 0..=k {
            let qi = q.insert(col + 1, row + 1).expect("insertion inside range");
            let pi = p.insert(col + 1, row + 1).expect("insertion inside range");
            if len(&qi) - len(&pi) != gap {
                shaded.insert(Cell::new(col, row));
            }
        }
    }
    MeshPattern::new(q.clone(), shaded).expect("boxes inside the grid")
}

/// Mesh patterns equivalent to `pat` under disjunction: a permutation
/// contains `pat` iff it contains one of the returned patterns. Marked mesh
/// patterns translate only when every region is an emptiness condition.
pub fn to_meshes(pat: &Pattern) -> Result<Vec<MeshPattern>, TranslateError> {
    Ok(match pat {
        Pattern::Classical(p) => vec![MeshPattern::new(p.clone(), []).expect("no boxes")],
        Pattern::Bivincular(b) => vec![bivincular_to_mesh(b)],
        Pattern::Mesh(m) => vec![m.clone()],
        Pattern::MarkedMesh(mm) => {
            let mut shaded = BTreeSet::new();
            for r in mm.regions() {
                let empty = r.threshold() == 0 && matches!(r.cmp(), Comparison::Exactly | Comparison::AtMost);
                if !empty {
                    return Err(TranslateError::CountingRegion);
                }
                shaded.extend(r.cells().iter().copied());
            }
            vec![MeshPattern::new(mm.perm().clone(), shaded).expect("boxes inside the grid")]
        }
        Pattern::Barred(b) => barred_to_meshes(b),
        Pattern::BruhatRestricted(b) => vec![bruhat_to_mesh(b)?],
        Pattern::Interval(i) => vec![interval_to_mesh(i)],
    })
}
