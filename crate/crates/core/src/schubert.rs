//! Pattern criteria for singularity properties of Schubert varieties.
//!
//! Each property has several characterizations; they are kept side by side
//! so that the verification suites can compare them exhaustively.

use std::str::FromStr;
use std::sync::OnceLock;

use crate::grassmann::is_balanced;
use crate::matcher::{
    contains_bivincular, contains_bruhat_restricted, contains_classical, contains_interval, contains_marked_mesh,
};
use crate::pattern::{
    column_strip, row_strip, BivincularPattern, BruhatRestrictedPattern, Cell, IntervalPattern, MarkedMeshPattern,
    MarkedRegion, PatternError,
};
use crate::perm::{Permutation, Transposition};

/// Declares a method enum with its CLI names.
macro_rules! methods {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(format!(
                        "unknown method {s:?}, expected one of: {}",
                        [$($text),+].join(", ")
                    )),
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}
pub(crate) use methods;

methods!(FactorialMethod { Patterns => "patterns", Forest => "forest" });
methods!(GorensteinMethod {
    Bivincular => "bivincular",
    MarkedMesh => "marked_mesh",
    Bruhat => "bruhat",
    Interval => "interval",
});
methods!(DbiMethod { MarkedMesh => "marked_mesh", Classical => "classical" });
methods!(HexagonMethod { MarkedMesh => "marked_mesh", Classical => "classical" });

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn perms(list: &[&str]) -> Vec<Permutation> {
    list.iter().map(|s| perm(s)).collect()
}

fn t(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("literal transposition")
}

fn avoids_all(pi: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|p| !contains_classical(p, pi))
}

pub fn is_smooth(pi: &Permutation) -> bool {
    static SET: OnceLock<Vec<Permutation>> = OnceLock::new();
    avoids_all(pi, SET.get_or_init(|| perms(&["1324", "2143"])))
}

pub fn is_factorial(pi: &Permutation, method: FactorialMethod) -> bool {
    match method {
        FactorialMethod::Patterns => {
            static V: OnceLock<BivincularPattern> = OnceLock::new();
            let v = V.get_or_init(|| BivincularPattern::vincular(perm("2143"), [2]).expect("valid"));
            !contains_bivincular(v, pi) && !contains_classical(&perm("1324"), pi)
        }
        FactorialMethod::Forest => pi.is_forest_like(),
    }
}

/// The box `(1,3) ∪ (3,1)` region on 2143, containing at least one point.
fn dbi_first_region() -> MarkedRegion {
    MarkedRegion::at_least([Cell::new(1, 3), Cell::new(3, 1)], 1).expect("nonempty")
}

fn gorenstein_marked_mesh() -> &'static MarkedMeshPattern {
    static PAT: OnceLock<MarkedMeshPattern> = OnceLock::new();
    PAT.get_or_init(|| {
        let shading = column_strip(2, 4).chain(row_strip(2, 4));
        MarkedMeshPattern::with_shading(perm("2143"), shading, vec![dbi_first_region()]).expect("valid")
    })
}

pub fn is_gorenstein(pi: &Permutation, method: GorensteinMethod) -> bool {
    match method {
        GorensteinMethod::Bivincular => {
            static PATS: OnceLock<[BivincularPattern; 2]> = OnceLock::new();
            let pats = PATS.get_or_init(|| {
                [
                    BivincularPattern::new(perm("31524"), [2], [3]).expect("valid"),
                    BivincularPattern::new(perm("24153"), [3], [2]).expect("valid"),
                ]
            });
            is_balanced(pi) && pats.iter().all(|b| !contains_bivincular(b, pi))
        }
        GorensteinMethod::MarkedMesh => is_balanced(pi) && !contains_marked_mesh(gorenstein_marked_mesh(), pi),
        GorensteinMethod::Bruhat => {
            static PATS: OnceLock<[BruhatRestrictedPattern; 2]> = OnceLock::new();
            let pats = PATS.get_or_init(|| {
                [
                    BruhatRestrictedPattern::new(perm("31524"), [t(1, 5), t(2, 3)]).expect("valid"),
                    BruhatRestrictedPattern::new(perm("24153"), [t(1, 5), t(3, 4)]).expect("valid"),
                ]
            });
            is_balanced(pi) && pats.iter().all(|b| !contains_bruhat_restricted(b, pi))
        }
        GorensteinMethod::Interval => {
            gorenstein_interval_obstructions(pi.rank()).iter().all(|i| !contains_interval(i, pi))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalFamily {
    G,
    H,
}

/// `g(a,b)` (rank `a+b+2`) or `h(a,b)` (rank `a+b+4`), with the component
/// having fewer non-inversions placed first.
pub fn gorenstein_interval_family(which: IntervalFamily, a: usize, b: usize) -> Result<IntervalPattern, PatternError> {
    let bad = |family, reason| PatternError::FamilyParameters { family, a, b, reason };
    let (x, y): (Vec<usize>, Vec<usize>) = match which {
        IntervalFamily::G => {
            if a == 0 || b == 0 || a == b {
                return Err(bad("g", "needs a, b > 0 and a != b"));
            }
            let mut x: Vec<usize> = (a + 2..=a + b + 2).collect();
            x.extend(1..=a + 1);
            let mut y = vec![1];
            y.extend(a + 2..=a + b + 1);
            y.extend(2..=a + 1);
            y.push(a + b + 2);
            (x, y)
        }
        IntervalFamily::H => {
            if a == 0 && b == 0 {
                return Err(bad("h", "needs a > 0 or b > 0"));
            }
            let mut x = vec![a + 2];
            x.extend(a + 4..=a + b + 3);
            x.push(1);
            x.push(a + b + 4);
            x.extend(2..=a + 1);
            x.push(a + 3);
            let mut y: Vec<usize> = (a + 4..=a + b + 4).collect();
            y.push(a + 2);
            y.push(a + 3);
            y.extend(1..=a + 1);
            (x, y)
        }
    };
    let (x, y) = (Permutation::new(x)?, Permutation::new(y)?);
    if x.non_inversions() <= y.non_inversions() {
        IntervalPattern::new(x, y)
    } else {
        IntervalPattern::new(y, x)
    }
}

/// Ranks up to which the interval obstructions are generated once and kept.
pub const INTERVAL_FAMILY_CAP: usize = 9;

fn interval_family_members(max_rank: usize) -> Vec<IntervalPattern> {
    let mut out = Vec::new();
    for a in 1..max_rank {
        for b in 1..max_rank {
            if a != b && a + b + 2 <= max_rank {
                out.push(gorenstein_interval_family(IntervalFamily::G, a, b).expect("valid parameters"));
            }
        }
    }
    for a in 0..max_rank {
        for b in 0..max_rank {
            if (a > 0 || b > 0) && a + b + 4 <= max_rank {
                out.push(gorenstein_interval_family(IntervalFamily::H, a, b).expect("valid parameters"));
            }
        }
    }
    out.sort_by_key(|i| i.rank());
    out
}

/// All g and h members of rank at most `max_rank`, by rank.
pub fn gorenstein_interval_obstructions(max_rank: usize) -> std::borrow::Cow<'static, [IntervalPattern]> {
    static CACHE: OnceLock<Vec<IntervalPattern>> = OnceLock::new();
    if max_rank <= INTERVAL_FAMILY_CAP {
        let all = CACHE.get_or_init(|| interval_family_members(INTERVAL_FAMILY_CAP));
        let end = all.partition_point(|i| i.rank() <= max_rank);
        std::borrow::Cow::Borrowed(&all[..end])
    } else {
        std::borrow::Cow::Owned(interval_family_members(max_rank))
    }
}

/// Encodings of the second marked mesh pattern for DBI: two single-box
/// regions on 2143, each holding a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DbiCandidate {
    /// Boxes (3,0) and (4,2).
    HighBox,
    /// Boxes (3,0) and (4,1).
    LowBox,
}

impl DbiCandidate {
    pub const ALL: [DbiCandidate; 2] = [DbiCandidate::HighBox, DbiCandidate::LowBox];

    pub fn boxes(self) -> [Cell; 2] {
        match self {
            DbiCandidate::HighBox => [Cell::new(3, 0), Cell::new(4, 2)],
            DbiCandidate::LowBox => [Cell::new(3, 0), Cell::new(4, 1)],
        }
    }

    pub fn pattern(self) -> MarkedMeshPattern {
        let regions = self.boxes().map(|c| MarkedRegion::at_least([c], 1).expect("nonempty")).to_vec();
        MarkedMeshPattern::new(perm("2143"), regions).expect("valid")
    }
}

/// The encoding used by the marked mesh DBI method. It is the one the
/// exhaustive comparison with classical 426153 singles out.
pub const DBI_SECOND_PATTERN: DbiCandidate = DbiCandidate::LowBox;

fn dbi_marked_meshes() -> &'static [MarkedMeshPattern; 2] {
    static PATS: OnceLock<[MarkedMeshPattern; 2]> = OnceLock::new();
    PATS.get_or_init(|| {
        [
            MarkedMeshPattern::new(perm("2143"), vec![dbi_first_region()]).expect("valid"),
            DBI_SECOND_PATTERN.pattern(),
        ]
    })
}

pub fn is_dbi(pi: &Permutation, method: DbiMethod) -> bool {
    match method {
        DbiMethod::Classical => {
            static SET: OnceLock<Vec<Permutation>> = OnceLock::new();
            avoids_all(pi, SET.get_or_init(|| perms(&["24153", "31524", "426153", "1324"])))
        }
        DbiMethod::MarkedMesh => {
            !contains_classical(&perm("1324"), pi) && dbi_marked_meshes().iter().all(|m| !contains_marked_mesh(m, pi))
        }
    }
}

pub fn is_123_hexagon_avoiding(pi: &Permutation, method: HexagonMethod) -> bool {
    match method {
        HexagonMethod::Classical => {
            static SET: OnceLock<Vec<Permutation>> = OnceLock::new();
            avoids_all(pi, SET.get_or_init(|| perms(&["123", "53281764", "53218764", "43281765", "43218765"])))
        }
        HexagonMethod::MarkedMesh => {
            static PAT: OnceLock<MarkedMeshPattern> = OnceLock::new();
            let pat = PAT.get_or_init(|| {
                let regions = [(2, 4), (0, 2), (4, 2), (2, 0)]
                    .map(|(c, r)| MarkedRegion::at_least([Cell::new(c, r)], 1).expect("nonempty"))
                    .to_vec();
                MarkedMeshPattern::new(perm("2143"), regions).expect("valid")
            });
            !contains_classical(&perm("123"), pi) && !contains_marked_mesh(pat, pi)
        }
    }
}

pub fn is_boolean(pi: &Permutation) -> bool {
    static SET: OnceLock<Vec<Permutation>> = OnceLock::new();
    avoids_all(pi, SET.get_or_init(|| perms(&["123", "2143"])))
}
