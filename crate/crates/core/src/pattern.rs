//! The pattern formalisms as plain data.
//!
//! Boxes of a pattern of rank `k` are addressed as `(column, row)` with both
//! coordinates in `0..=k`. Column `c` is the gap strictly between the `c`-th
//! and `(c+1)`-th positions of an occurrence (column 0 is everything to the
//! left, column `k` everything to the right); rows are the same for values.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::perm::{flatten, PermError, Permutation, Symmetry, Transposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("adjacency index {index} is outside 0..={rank}")]
    AdjacencyOutOfRange { index: usize, rank: usize },
    #[error("box ({col},{row}) is outside 0..={rank} x 0..={rank}")]
    CellOutOfRange { col: usize, row: usize, rank: usize },
    #[error("marked region has no boxes")]
    EmptyRegion,
    #[error("barred pattern needs at least one barred letter")]
    NoBars,
    #[error("barred position {position} is outside 1..={rank}")]
    BarOutOfRange { position: usize, rank: usize },
    #[error("barring every letter leaves an empty pattern")]
    AllBarred,
    #[error("barred letters at positions {first} and {second} are adjacent in position")]
    BarsAdjacentInPosition { first: usize, second: usize },
    #[error("barred letters {first} and {second} are adjacent in value")]
    BarsAdjacentInValue { first: usize, second: usize },
    #[error("restriction {t} needs p(a) < p(b) in {perm}")]
    NotAnAscent { t: Transposition, perm: Permutation },
    #[error("restriction {t} does not fit a pattern of rank {rank}")]
    RestrictionOutOfRange { t: Transposition, rank: usize },
    #[error("interval components have ranks {lower} and {upper}")]
    IntervalRankMismatch { lower: usize, upper: usize },
    #[error("interval lower end {lower} is not below {upper} in Bruhat order")]
    IntervalNotOrdered { lower: Permutation, upper: Permutation },
    #[error("{family}({a},{b}) is outside the family: {reason}")]
    FamilyParameters { family: &'static str, a: usize, b: usize, reason: &'static str },
}

/// A box `(column, row)` of a pattern diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

fn check_cells<'a>(cells: impl IntoIterator<Item = &'a Cell>, rank: usize) -> Result<(), PatternError> {
    for c in cells {
        if c.col > rank || c.row > rank {
            return Err(PatternError::CellOutOfRange { col: c.col, row: c.row, rank });
        }
    }
    Ok(())
}

/// Full column strip `col` of a rank-`rank` diagram.
pub fn column_strip(col: usize, rank: usize) -> impl Iterator<Item = Cell> {
    (0..=rank).map(move |row| Cell::new(col, row))
}

/// Full row strip `row` of a rank-`rank` diagram.
pub fn row_strip(row: usize, rank: usize) -> impl Iterator<Item = Cell> {
    (0..=rank).map(move |col| Cell::new(col, row))
}

/// `(p, X, Y)`: occurrences must be adjacent in position at every `x ∈ X`
/// and adjacent in value at every `y ∈ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivincularPattern {
    perm: Permutation,
    positions: BTreeSet<usize>,
    values: BTreeSet<usize>,
}

impl BivincularPattern {
    pub fn new(
        perm: Permutation,
        positions: impl IntoIterator<Item = usize>,
        values: impl IntoIterator<Item = usize>,
    ) -> Result<Self, PatternError> {
        let rank = perm.rank();
        let positions: BTreeSet<usize> = positions.into_iter().collect();
        let values: BTreeSet<usize> = values.into_iter().collect();
        if let Some(&index) = positions.iter().chain(values.iter()).find(|&&i| i > rank) {
            return Err(PatternError::AdjacencyOutOfRange { index, rank });
        }
        Ok(BivincularPattern { perm, positions, values })
    }

    pub fn vincular(perm: Permutation, positions: impl IntoIterator<Item = usize>) -> Result<Self, PatternError> {
        Self::new(perm, positions, [])
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    /// The set `X`.
    pub fn position_adjacencies(&self) -> &BTreeSet<usize> {
        &self.positions
    }

    /// The set `Y`.
    pub fn value_adjacencies(&self) -> &BTreeSet<usize> {
        &self.values
    }

    /// Image under reverse, complement or inverse:
    /// `(p^r, k−X, Y)`, `(p^c, X, k−Y)`, `(p^i, Y, X)`.
    pub fn symmetry(&self, op: Symmetry) -> BivincularPattern {
        let k = self.rank();
        let mirror = |set: &BTreeSet<usize>| set.iter().map(|&m| k - m).collect::<BTreeSet<_>>();
        let (positions, values) = match op {
            Symmetry::Reverse => (mirror(&self.positions), self.values.clone()),
            Symmetry::Complement => (self.positions.clone(), mirror(&self.values)),
            Symmetry::Inverse => (self.values.clone(), self.positions.clone()),
        };
        BivincularPattern { perm: self.perm.apply_symmetry(op), positions, values }
    }
}

/// `(p, R)`: every shaded box must be free of points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeshPattern {
    perm: Permutation,
    shaded: BTreeSet<Cell>,
}

impl MeshPattern {
    pub fn new(perm: Permutation, shaded: impl IntoIterator<Item = Cell>) -> Result<Self, PatternError> {
        let shaded: BTreeSet<Cell> = shaded.into_iter().collect();
        check_cells(&shaded, perm.rank())?;
        Ok(MeshPattern { perm, shaded })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    pub fn shaded(&self) -> &BTreeSet<Cell> {
        &self.shaded
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Comparison {
    AtMost,
    Exactly,
    AtLeast,
}

impl Comparison {
    pub fn holds(self, count: usize, threshold: usize) -> bool {
        match self {
            Comparison::AtMost => count <= threshold,
            Comparison::Exactly => count == threshold,
            Comparison::AtLeast => count >= threshold,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::AtMost => "<=",
            Comparison::Exactly => "=",
            Comparison::AtLeast => ">=",
        }
    }
}

/// A set of boxes whose combined point count must satisfy `cmp threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedRegion {
    cells: BTreeSet<Cell>,
    cmp: Comparison,
    threshold: usize,
}

impl MarkedRegion {
    pub fn new(cells: impl IntoIterator<Item = Cell>, cmp: Comparison, threshold: usize) -> Result<Self, PatternError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(PatternError::EmptyRegion);
        }
        Ok(MarkedRegion { cells, cmp, threshold })
    }

    /// Shorthand for the common `(C, >= j)` region.
    pub fn at_least(cells: impl IntoIterator<Item = Cell>, threshold: usize) -> Result<Self, PatternError> {
        Self::new(cells, Comparison::AtLeast, threshold)
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn cmp(&self) -> Comparison {
        self.cmp
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }
}

/// `(p, C)`: every region's point count must satisfy its comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedMeshPattern {
    perm: Permutation,
    regions: Vec<MarkedRegion>,
}

impl MarkedMeshPattern {
    pub fn new(perm: Permutation, regions: Vec<MarkedRegion>) -> Result<Self, PatternError> {
        for r in &regions {
            check_cells(&r.cells, perm.rank())?;
        }
        Ok(MarkedMeshPattern { perm, regions })
    }

    /// Shaded boxes become one leading `= 0` region (omitted when empty).
    pub fn with_shading(
        perm: Permutation,
        shaded: impl IntoIterator<Item = Cell>,
        marks: Vec<MarkedRegion>,
    ) -> Result<Self, PatternError> {
        let shaded: BTreeSet<Cell> = shaded.into_iter().collect();
        let mut regions = Vec::with_capacity(marks.len() + 1);
        if !shaded.is_empty() {
            regions.push(MarkedRegion::new(shaded, Comparison::Exactly, 0)?);
        }
        regions.extend(marks);
        Self::new(perm, regions)
    }

    pub fn from_mesh(mesh: &MeshPattern) -> Self {
        Self::with_shading(mesh.perm.clone(), mesh.shaded.iter().copied(), Vec::new())
            .expect("mesh boxes already validated")
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    pub fn regions(&self) -> &[MarkedRegion] {
        &self.regions
    }
}

/// A barred pattern: the letters at `barred` positions of `full` are barred.
///
/// Only patterns whose barred letters are pairwise non-adjacent in both
/// position and value are accepted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarredPattern {
    full: Permutation,
    barred: BTreeSet<usize>,
    reduced: Permutation,
}

impl BarredPattern {
    pub fn new(full: Permutation, barred: impl IntoIterator<Item = usize>) -> Result<Self, PatternError> {
        let rank = full.rank();
        let barred: BTreeSet<usize> = barred.into_iter().collect();
        if barred.is_empty() {
            return Err(PatternError::NoBars);
        }
        if let Some(&position) = barred.iter().find(|&&i| i == 0 || i > rank) {
            return Err(PatternError::BarOutOfRange { position, rank });
        }
        if barred.len() == rank {
            return Err(PatternError::AllBarred);
        }
        let bars: Vec<usize> = barred.iter().copied().collect();
        for w in bars.windows(2) {
            if w[1] == w[0] + 1 {
                return Err(PatternError::BarsAdjacentInPosition { first: w[0], second: w[1] });
            }
        }
        let mut bar_values: Vec<usize> = bars.iter().map(|&i| full.at(i)).collect();
        bar_values.sort_unstable();
        for w in bar_values.windows(2) {
            if w[1] == w[0] + 1 {
                return Err(PatternError::BarsAdjacentInValue { first: w[0], second: w[1] });
            }
        }
        let kept: Vec<usize> = (1..=rank).filter(|i| !barred.contains(i)).map(|i| full.at(i)).collect();
        let reduced = flatten(&kept)?;
        Ok(BarredPattern { full, barred, reduced })
    }

    pub fn full(&self) -> &Permutation {
        &self.full
    }

    pub fn barred(&self) -> &BTreeSet<usize> {
        &self.barred
    }

    /// The unbarred letters, standardized.
    pub fn reduced(&self) -> &Permutation {
        &self.reduced
    }
}

/// A pattern with Bruhat restrictions `t(a,b)`, each requiring `p(a) < p(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BruhatRestrictedPattern {
    perm: Permutation,
    restrictions: BTreeSet<Transposition>,
}

impl BruhatRestrictedPattern {
    pub fn new(perm: Permutation, restrictions: impl IntoIterator<Item = Transposition>) -> Result<Self, PatternError> {
        let restrictions: BTreeSet<Transposition> = restrictions.into_iter().collect();
        for &t in &restrictions {
            if t.b() > perm.rank() {
                return Err(PatternError::RestrictionOutOfRange { t, rank: perm.rank() });
            }
            if perm.at(t.a()) > perm.at(t.b()) {
                return Err(PatternError::NotAnAscent { t, perm: perm.clone() });
            }
        }
        Ok(BruhatRestrictedPattern { perm, restrictions })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    pub fn restrictions(&self) -> &BTreeSet<Transposition> {
        &self.restrictions
    }
}

/// The interval `[lower, upper]` in reversed Bruhat order (`upper` has at
/// least as many non-inversions).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPattern {
    lower: Permutation,
    upper: Permutation,
}

impl IntervalPattern {
    pub fn new(lower: Permutation, upper: Permutation) -> Result<Self, PatternError> {
        if lower.rank() != upper.rank() {
            return Err(PatternError::IntervalRankMismatch { lower: lower.rank(), upper: upper.rank() });
        }
        if !lower.bruhat_leq(&upper)? {
            return Err(PatternError::IntervalNotOrdered { lower, upper });
        }
        Ok(IntervalPattern { lower, upper })
    }

    pub fn lower(&self) -> &Permutation {
        &self.lower
    }

    pub fn upper(&self) -> &Permutation {
        &self.upper
    }

    pub fn rank(&self) -> usize {
        self.upper.rank()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Classical,
    Bivincular,
    Mesh,
    MarkedMesh,
    Barred,
    BruhatRestricted,
    Interval,
}

/// Any of the supported pattern formalisms. Vincular patterns are the
/// bivincular ones with no value adjacencies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Pattern {
    Classical(Permutation),
    Bivincular(BivincularPattern),
    Mesh(MeshPattern),
    MarkedMesh(MarkedMeshPattern),
    Barred(BarredPattern),
    BruhatRestricted(BruhatRestrictedPattern),
    Interval(IntervalPattern),
}

impl Pattern {
    pub fn kind(&self) -> PatternKind {
        match self {
            Pattern::Classical(_) => PatternKind::Classical,
            Pattern::Bivincular(_) => PatternKind::Bivincular,
            Pattern::Mesh(_) => PatternKind::Mesh,
            Pattern::MarkedMesh(_) => PatternKind::MarkedMesh,
            Pattern::Barred(_) => PatternKind::Barred,
            Pattern::BruhatRestricted(_) => PatternKind::BruhatRestricted,
            Pattern::Interval(_) => PatternKind::Interval,
        }
    }

    /// The permutation an occurrence is an embedding of (the reduced word
    /// for barred patterns, the upper end for intervals).
    pub fn base(&self) -> &Permutation {
        match self {
            Pattern::Classical(p) => p,
            Pattern::Bivincular(b) => b.perm(),
            Pattern::Mesh(m) => m.perm(),
            Pattern::MarkedMesh(m) => m.perm(),
            Pattern::Barred(b) => b.reduced(),
            Pattern::BruhatRestricted(b) => b.perm(),
            Pattern::Interval(i) => i.upper(),
        }
    }
}

impl From<Permutation> for Pattern {
    fn from(p: Permutation) -> Self {
        Pattern::Classical(p)
    }
}

impl From<BivincularPattern> for Pattern {
    fn from(p: BivincularPattern) -> Self {
        Pattern::Bivincular(p)
    }
}

impl From<MeshPattern> for Pattern {
    fn from(p: MeshPattern) -> Self {
        Pattern::Mesh(p)
    }
}

impl From<MarkedMeshPattern> for Pattern {
    fn from(p: MarkedMeshPattern) -> Self {
        Pattern::MarkedMesh(p)
    }
}

impl From<BarredPattern> for Pattern {
    fn from(p: BarredPattern) -> Self {
        Pattern::Barred(p)
    }
}

impl From<BruhatRestrictedPattern> for Pattern {
    fn from(p: BruhatRestrictedPattern) -> Self {
        Pattern::BruhatRestricted(p)
    }
}

impl From<IntervalPattern> for Pattern {
    fn from(p: IntervalPattern) -> Self {
        Pattern::Interval(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn bivincular_symmetries() {
        let v = BivincularPattern::vincular(p("2143"), [2]).unwrap();
        let inv = v.symmetry(Symmetry::Inverse);
        assert_eq!(inv, BivincularPattern::new(p("2143"), [], [2]).unwrap());
        let w = BivincularPattern::new(p("3142"), [], [2]).unwrap();
        assert_eq!(w.symmetry(Symmetry::Inverse), BivincularPattern::new(p("2413"), [2], []).unwrap());
        let z = BivincularPattern::new(p("31524"), [0, 2], [3, 5]).unwrap();
        for op in Symmetry::ALL {
            assert_eq!(z.symmetry(op).symmetry(op), z);
        }
        assert_eq!(
            z.symmetry(Symmetry::Reverse),
            BivincularPattern::new(p("42513"), [5, 3], [3, 5]).unwrap()
        );
    }

    #[test]
    fn bivincular_rejects_out_of_range_adjacency() {
        assert!(matches!(
            BivincularPattern::new(p("12"), [3], []),
            Err(PatternError::AdjacencyOutOfRange { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn barred_reduction_and_rejections() {
        let b = BarredPattern::new(p("21354"), [3]).unwrap();
        assert_eq!(b.reduced(), &p("2143"));
        let two = BarredPattern::new(p("634125"), [3, 5]).unwrap();
        assert_eq!(two.reduced(), &p("4213"));
        assert!(matches!(BarredPattern::new(p("1234"), [2, 3]), Err(PatternError::BarsAdjacentInPosition { .. })));
        assert!(matches!(BarredPattern::new(p("1324"), [1, 3]), Err(PatternError::BarsAdjacentInValue { .. })));
        assert!(matches!(BarredPattern::new(p("12"), []), Err(PatternError::NoBars)));
        assert!(matches!(BarredPattern::new(p("1"), [1]), Err(PatternError::AllBarred)));
        assert!(matches!(BarredPattern::new(p("12"), [3]), Err(PatternError::BarOutOfRange { .. })));
    }

    #[test]
    fn bruhat_restriction_needs_an_ascent() {
        let t = Transposition::new(1, 4).unwrap();
        assert!(BruhatRestrictedPattern::new(p("2143"), [t]).is_ok());
        let bad = Transposition::new(1, 2).unwrap();
        assert!(matches!(BruhatRestrictedPattern::new(p("2143"), [bad]), Err(PatternError::NotAnAscent { .. })));
        let far = Transposition::new(1, 5).unwrap();
        assert!(matches!(
            BruhatRestrictedPattern::new(p("2143"), [far]),
            Err(PatternError::RestrictionOutOfRange { .. })
        ));
    }

    #[test]
    fn interval_order_is_checked() {
        assert!(IntervalPattern::new(p("41523"), p("31524")).is_ok());
        assert!(matches!(
            IntervalPattern::new(p("31524"), p("41523")),
            Err(PatternError::IntervalNotOrdered { .. })
        ));
        assert!(matches!(
            IntervalPattern::new(p("12"), p("123")),
            Err(PatternError::IntervalRankMismatch { .. })
        ));
    }

    #[test]
    fn marked_mesh_cells_are_range_checked() {
        let r = MarkedRegion::at_least([Cell::new(5, 0)], 1).unwrap();
        assert!(matches!(
            MarkedMeshPattern::new(p("2143"), vec![r]),
            Err(PatternError::CellOutOfRange { .. })
        ));
        assert!(matches!(MarkedRegion::at_least([], 1), Err(PatternError::EmptyRegion)));
        let m = MeshPattern::new(p("12"), [Cell::new(1, 1)]).unwrap();
        let mm = MarkedMeshPattern::from_mesh(&m);
        assert_eq!(mm.regions().len(), 1);
        assert_eq!(mm.regions()[0].cmp(), Comparison::Exactly);
    }
}
