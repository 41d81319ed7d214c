//! Exhaustive verification suites.
//!
//! Each suite runs a list of checks over every permutation up to a rank
//! bound and reports the first counterexamples in rank-then-lexicographic
//! order. Results do not depend on the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::{self, par_filter_map};
use crate::families::{
    self, BaxterMethod, DumontFirstThird, DumontMethod, DumontSecondReading, FreelyBraidedMethod, SimsunMethod,
};
use crate::grassmann::{self, corner_report, CornerTag, Family};
use crate::matcher::{avoids_barred, contains, contains_bivincular, contains_marked_mesh, contains_mesh};
use crate::pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, IntervalPattern, MarkedMeshPattern,
    MarkedRegion, MeshPattern, Pattern,
};
use crate::perm::{Permutation, Symmetry, Transposition};
use crate::schubert::{
    self, DbiCandidate, DbiMethod, FactorialMethod, GorensteinMethod, HexagonMethod, DBI_SECOND_PATTERN,
};
use crate::translate;

/// Counterexamples kept per check.
const KEEP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Figure1,
    Symmetries,
    Translations,
    GorensteinMethods,
    DbiMethods,
    HexagonMethods,
    Families,
    Corners,
    Hierarchy,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Figure1,
        Suite::Symmetries,
        Suite::Translations,
        Suite::GorensteinMethods,
        Suite::DbiMethods,
        Suite::HexagonMethods,
        Suite::Families,
        Suite::Corners,
        Suite::Hierarchy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Figure1 => "figure1",
            Suite::Symmetries => "symmetries",
            Suite::Translations => "translations",
            Suite::GorensteinMethods => "gorenstein-methods",
            Suite::DbiMethods => "dbi-methods",
            Suite::HexagonMethods => "hexagon-methods",
            Suite::Families => "families",
            Suite::Corners => "corners",
            Suite::Hierarchy => "hierarchy",
        }
    }

    /// Rank bound used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Symmetries => 6,
            Suite::DbiMethods | Suite::HexagonMethods | Suite::Families => 8,
            Suite::Corners => 9,
            _ => 7,
        }
    }

    /// Smallest bound at which the suite's checks are conclusive.
    pub fn min_sound_n(self) -> usize {
        match self {
            Suite::DbiMethods => 6,
            Suite::HexagonMethods => 8,
            Suite::Figure1 | Suite::Hierarchy => 5,
            Suite::GorensteinMethods => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}, expected one of: {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Seed of the random pattern corpus.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20100101;

impl SuiteConfig {
    pub fn for_suite(suite: Suite) -> Self {
        SuiteConfig { max_n: suite.default_max_n(), seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of permutations (or cases) examined.
    pub checked: usize,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn new(name: &str, checked: usize, counterexamples: Vec<String>) -> Self {
        CheckResult { name: name.to_string(), passed: counterexamples.is_empty(), checked, counterexamples, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub passed: bool,
    /// False when `max_n` is below the suite's conclusive bound.
    pub sound: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let n = config.max_n.clamp(1, enumerate::ENUMERATION_RANK_CAP);
    let checks = match suite {
        Suite::Figure1 => figure1(n),
        Suite::Symmetries => symmetries(n, config.seed),
        Suite::Translations => translations(n, config.seed),
        Suite::GorensteinMethods => gorenstein_methods(n),
        Suite::DbiMethods => dbi_methods(n),
        Suite::HexagonMethods => hexagon_methods(n),
        Suite::Families => families_suite(n),
        Suite::Corners => corners(n),
        Suite::Hierarchy => hierarchy(n),
    };
    SuiteReport {
        suite,
        max_n: n,
        seed: config.seed,
        passed: checks.iter().all(|c| c.passed),
        sound: n >= suite.min_sound_n(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// sweeping helpers

/// Runs `f` on every permutation of rank `1..=max_n`; `f` describes a
/// failure or returns `None`.
pub fn sweep<F>(max_n: usize, f: F) -> (usize, Vec<String>)
where
    F: Fn(&Permutation) -> Option<String> + Sync,
{
    sweep_ranks(1..=max_n, f)
}

fn sweep_ranks<F>(ranks: impl IntoIterator<Item = usize>, f: F) -> (usize, Vec<String>)
where
    F: Fn(&Permutation) -> Option<String> + Sync,
{
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in ranks {
        checked += (1..=n).product::<usize>();
        if bad.len() < KEEP {
            bad.extend(par_filter_map(n, &f).expect("rank within cap"));
        }
    }
    bad.truncate(KEEP);
    (checked, bad)
}

/// All predicates agree on every permutation.
fn agreement<F>(name: &str, max_n: usize, labels: &[&str], f: F) -> CheckResult
where
    F: Fn(&Permutation) -> Vec<bool> + Sync,
{
    let (checked, bad) = sweep(max_n, |pi| {
        let v = f(pi);
        if v.windows(2).all(|w| w[0] == w[1]) {
            None
        } else {
            let parts: Vec<String> = labels.iter().zip(&v).map(|(l, b)| format!("{l}={b}")).collect();
            Some(format!("{pi}: {}", parts.join(" ")))
        }
    });
    CheckResult::new(name, checked, bad)
}

/// `a ⟹ b` on every permutation.
fn implication<A, B>(name: &str, max_n: usize, a: A, b: B) -> CheckResult
where
    A: Fn(&Permutation) -> bool + Sync,
    B: Fn(&Permutation) -> bool + Sync,
{
    let (checked, bad) = sweep(max_n, |pi| (a(pi) && !b(pi)).then(|| pi.to_string()));
    CheckResult::new(name, checked, bad)
}

fn p(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn t(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("literal transposition")
}

// ---------------------------------------------------------------------------
// suites

fn figure1(n: usize) -> Vec<CheckResult> {
    let barred = BarredPattern::new(p("21354"), [3]).expect("valid");
    let vin = BivincularPattern::vincular(p("2143"), [2]).expect("valid");
    let biv = BivincularPattern::new(p("2143"), [], [2]).expect("valid");
    let b14 = BruhatRestrictedPattern::new(p("2143"), [t(1, 4)]).expect("valid");
    let b23 = BruhatRestrictedPattern::new(p("2143"), [t(2, 3)]).expect("valid");
    let labels = ["barred", "vincular", "bivincular", "bruhat_t14", "bruhat_t23"];
    vec![agreement("equivalence-square", n, &labels, |pi| {
        vec![
            avoids_barred(&barred, pi),
            !contains_bivincular(&vin, pi),
            !contains_bivincular(&biv, pi),
            !crate::matcher::contains_bruhat_restricted(&b14, pi),
            !crate::matcher::contains_bruhat_restricted(&b23, pi),
        ]
    })]
}

fn symmetries(n: usize, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (checked, bad) = sweep(n, |pi| {
        for op in Symmetry::ALL {
            if pi.apply_symmetry(op).apply_symmetry(op) != *pi {
                return Some(format!("{pi}: {op:?} is not an involution"));
            }
        }
        None
    });
    out.push(CheckResult::new("involutions", checked, bad));

    // Every bivincular pattern of rank <= 2 and a seeded sample of rank 3-4.
    let mut corpus = Vec::new();
    for k in 1..=2 {
        for base in enumerate::all(k).expect("small rank") {
            for xs in subsets(k) {
                for ys in subsets(k) {
                    corpus.push(BivincularPattern::new(base.clone(), xs.clone(), ys).expect("in range"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    corpus.extend((0..50).map(|_| random_bivincular(&mut rng, 3, 4)));
    let (checked, bad) = sweep(n, |pi| {
        for pat in &corpus {
            let here = contains_bivincular(pat, pi);
            for op in Symmetry::ALL {
                if contains_bivincular(&pat.symmetry(op), &pi.apply_symmetry(op)) != here {
                    return Some(format!("{pi} with {} under {op:?}", Pattern::from(pat.clone())));
                }
            }
        }
        None
    });
    out.push(
        CheckResult::new("bivincular-symmetries", checked, bad)
            .with_note(format!("{} patterns", corpus.len())),
    );
    out
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << (k + 1)).map(|m| (0..=k).filter(|i| m & (1 << i) != 0).collect()).collect()
}

fn random_perm(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Permutation {
    let k = rng.gen_range(lo..=hi);
    let mut w: Vec<usize> = (1..=k).collect();
    w.shuffle(rng);
    Permutation::new(w).expect("shuffled identity")
}

fn random_subset(rng: &mut ChaCha8Rng, k: usize) -> Vec<usize> {
    (0..=k).filter(|_| rng.gen_bool(0.3)).collect()
}

fn random_bivincular(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> BivincularPattern {
    let base = random_perm(rng, lo, hi);
    let k = base.rank();
    let (xs, ys) = (random_subset(rng, k), random_subset(rng, k));
    BivincularPattern::new(base, xs, ys).expect("in range")
}

fn random_barred(rng: &mut ChaCha8Rng) -> BarredPattern {
    loop {
        let full = random_perm(rng, 2, 4);
        let bars: Vec<usize> = (1..=full.rank()).filter(|_| rng.gen_bool(0.4)).collect();
        if let Ok(b) = BarredPattern::new(full, bars) {
            return b;
        }
    }
}

fn random_bruhat(rng: &mut ChaCha8Rng) -> BruhatRestrictedPattern {
    let base = random_perm(rng, 2, 4);
    let k = base.rank();
    let ascents: Vec<Transposition> = (1..=k)
        .flat_map(|a| (a + 1..=k).map(move |b| (a, b)))
        .filter(|&(a, b)| base.covers(t(a, b)).expect("in range"))
        .map(|(a, b)| t(a, b))
        .collect();
    let chosen: Vec<Transposition> = ascents.into_iter().filter(|_| rng.gen_bool(0.4)).collect();
    BruhatRestrictedPattern::new(base, chosen).expect("covers are ascents")
}

fn random_interval(rng: &mut ChaCha8Rng) -> IntervalPattern {
    let upper = random_perm(rng, 2, 4);
    let k = upper.rank();
    let mut lower = upper.clone();
    for _ in 0..rng.gen_range(0..=3) {
        let downs: Vec<Transposition> = (1..=k)
            .flat_map(|a| (a + 1..=k).map(move |b| (a, b)))
            .map(|(a, b)| t(a, b))
            .filter(|&tr| lower.covers(tr).expect("in range"))
            .collect();
        match downs.choose(rng) {
            Some(&tr) => lower = lower.swap(tr).expect("in range"),
            None => break,
        }
    }
    IntervalPattern::new(lower, upper).expect("built by descending covers")
}

fn random_mesh(rng: &mut ChaCha8Rng) -> MeshPattern {
    let base = random_perm(rng, 1, 4);
    let k = base.rank();
    let cells: Vec<Cell> =
        (0..=k).flat_map(|c| (0..=k).map(move |r| Cell::new(c, r))).filter(|_| rng.gen_bool(0.2)).collect();
    MeshPattern::new(base, cells).expect("in range")
}

/// Every pattern named in the text plus the seeded random sample.
pub fn translation_corpus(seed: u64) -> Vec<Pattern> {
    let mut corpus: Vec<Pattern> = vec![
        BivincularPattern::new(p("31524"), [2], [3]).expect("valid").into(),
        BivincularPattern::new(p("24153"), [3], [2]).expect("valid").into(),
        BivincularPattern::vincular(p("2143"), [2]).expect("valid").into(),
        BivincularPattern::new(p("2143"), [], [2]).expect("valid").into(),
        BivincularPattern::new(p("123"), [1], [2]).expect("valid").into(),
        BivincularPattern::vincular(p("3142"), [2]).expect("valid").into(),
        BivincularPattern::vincular(p("2413"), [2]).expect("valid").into(),
        BivincularPattern::new(p("3142"), [], [2]).expect("valid").into(),
        BivincularPattern::new(p("2413"), [], [2]).expect("valid").into(),
        BivincularPattern::new(p("23154"), [], [2, 3]).expect("valid").into(),
        BivincularPattern::vincular(p("23154"), [3]).expect("valid").into(),
        BarredPattern::new(p("123"), [2]).expect("valid").into(),
        BarredPattern::new(p("21354"), [3]).expect("valid").into(),
        BarredPattern::new(p("634125"), [3, 5]).expect("valid").into(),
        BarredPattern::new(p("41352"), [3]).expect("valid").into(),
        BarredPattern::new(p("25314"), [3]).expect("valid").into(),
        BruhatRestrictedPattern::new(p("31524"), [t(1, 5)]).expect("valid").into(),
        BruhatRestrictedPattern::new(p("31524"), [t(1, 5), t(2, 3)]).expect("valid").into(),
        BruhatRestrictedPattern::new(p("24153"), [t(1, 5), t(3, 4)]).expect("valid").into(),
        BruhatRestrictedPattern::new(p("2143"), [t(1, 4)]).expect("valid").into(),
        BruhatRestrictedPattern::new(p("2143"), [t(2, 3)]).expect("valid").into(),
        IntervalPattern::new(p("41523"), p("31524")).expect("valid").into(),
        IntervalPattern::new(p("53241"), p("32154")).expect("valid").into(),
    ];
    for (which, a, b) in [(schubert::IntervalFamily::G, 1, 2), (schubert::IntervalFamily::H, 0, 1)] {
        corpus.push(schubert::gorenstein_interval_family(which, a, b).expect("valid").into());
    }
    for i in 1..=2 {
        corpus.push(grassmann::family_member(Family::F, i).expect("index >= 1").into());
        corpus.push(grassmann::family_member(Family::G, i).expect("index >= 1").into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    corpus.extend((0..50).map(|_| Pattern::from(random_bivincular(&mut rng, 1, 4))));
    corpus.extend((0..50).map(|_| Pattern::from(random_barred(&mut rng))));
    corpus.extend((0..50).map(|_| Pattern::from(random_bruhat(&mut rng))));
    corpus.extend((0..50).map(|_| Pattern::from(random_interval(&mut rng))));
    corpus
}

fn translations(n: usize, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let corpus = translation_corpus(seed);
    let translated: Vec<Vec<MeshPattern>> =
        corpus.iter().map(|c| translate::to_meshes(c).expect("translatable kind")).collect();
    let (checked, bad) = sweep(n, |pi| {
        corpus.iter().zip(&translated).find_map(|(src, meshes)| {
            let direct = contains(src, pi);
            let via = meshes.iter().any(|m| contains_mesh(m, pi));
            (direct != via).then(|| format!("{pi} with {src}: direct={direct} mesh={via}"))
        })
    });
    out.push(
        CheckResult::new("translation-fidelity", checked, bad).with_note(format!("{} patterns", corpus.len())),
    );

    // Mesh with no boxes is classical; a single =0 region is the mesh itself.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d657368);
    let meshes: Vec<MeshPattern> = (0..50).map(|_| random_mesh(&mut rng)).collect();
    let (checked, bad) = sweep(n.min(6), |pi| {
        meshes.iter().find_map(|m| {
            let plain = MeshPattern::new(m.perm().clone(), []).expect("no boxes");
            let classical = crate::matcher::contains_classical(m.perm(), pi);
            let marked = contains_marked_mesh(&MarkedMeshPattern::from_mesh(m), pi);
            (contains_mesh(&plain, pi) != classical || marked != contains_mesh(m, pi))
                .then(|| format!("{pi} with {}", Pattern::from(m.clone())))
        })
    });
    out.push(CheckResult::new("mesh-marked-mesh-classical", checked, bad));

    let biv = translate::bivincular_to_mesh(&BivincularPattern::new(p("31524"), [2], [3]).expect("valid"));
    let bru = translate::bruhat_to_mesh(
        &BruhatRestrictedPattern::new(p("31524"), [t(1, 5), t(2, 3)]).expect("valid"),
    )
    .expect("covers of the pattern");
    out.push(agreement("gorenstein-pair-meshes", n, &["bivincular", "bruhat"], |pi| {
        vec![contains_mesh(&biv, pi), contains_mesh(&bru, pi)]
    }));

    // Box (i,j) holding a point is the classical insertion at (i+1, j+1).
    let mut boxes = Vec::new();
    for k in 3..=4 {
        for base in enumerate::all(k).expect("small rank") {
            for c in 0..=k {
                for r in 0..=k {
                    let region = MarkedRegion::at_least([Cell::new(c, r)], 1).expect("nonempty");
                    let mm = MarkedMeshPattern::new(base.clone(), vec![region]).expect("valid");
                    boxes.push((mm, base.insert(c + 1, r + 1).expect("in range")));
                }
            }
        }
    }
    let (checked, bad) = sweep(n, |pi| {
        boxes.iter().find_map(|(mm, ins)| {
            (contains_marked_mesh(mm, pi) != crate::matcher::contains_classical(ins, pi))
                .then(|| format!("{pi} with {} vs {ins}", Pattern::from(mm.clone())))
        })
    });
    out.push(CheckResult::new("box-insertion-correspondence", checked, bad).with_note(format!("{} boxes", boxes.len())));
    out
}

fn gorenstein_methods(n: usize) -> Vec<CheckResult> {
    let labels: Vec<&str> = GorensteinMethod::ALL.iter().map(|m| m.name()).collect();
    vec![agreement("gorenstein-four-way", n, &labels, |pi| {
        GorensteinMethod::ALL.iter().map(|&m| schubert::is_gorenstein(pi, m)).collect()
    })]
}

/// Per candidate, the first permutation (rank then lexicographic) where it
/// disagrees with classical 426153.
pub fn dbi_candidate_oracle(n: usize) -> Vec<(DbiCandidate, Option<Permutation>)> {
    let target = p("426153");
    DbiCandidate::ALL
        .iter()
        .map(|&c| {
            let pat = c.pattern();
            let first = (1..=n).find_map(|k| {
                enumerate::par_find_first(k, |pi| {
                    contains_marked_mesh(&pat, pi) != crate::matcher::contains_classical(&target, pi)
                })
                .expect("rank within cap")
            });
            (c, first)
        })
        .collect()
}

fn dbi_methods(n: usize) -> Vec<CheckResult> {
    let oracle = dbi_candidate_oracle(n);
    let matching: Vec<DbiCandidate> = oracle.iter().filter(|(_, w)| w.is_none()).map(|(c, _)| *c).collect();
    let mut bad = Vec::new();
    if matching.len() != 1 {
        bad.push(format!("{} candidates match classical 426153: {matching:?}", matching.len()));
    } else if matching[0] != DBI_SECOND_PATTERN {
        bad.push(format!("oracle selects {:?} but {DBI_SECOND_PATTERN:?} is in use", matching[0]));
    }
    let note: Vec<String> = oracle
        .iter()
        .map(|(c, w)| {
            let boxes: Vec<String> = c.boxes().iter().map(|b| b.to_string()).collect();
            match w {
                None => format!("{c:?} {{{}}} matches", boxes.join(",")),
                Some(w) => format!("{c:?} {{{}}} differs first at {w}", boxes.join(",")),
            }
        })
        .collect();
    let cases = (1..=n).map(|k| (1..=k).product::<usize>()).sum::<usize>() * DbiCandidate::ALL.len();
    vec![
        CheckResult::new("dbi-second-pattern-oracle", cases, bad).with_note(note.join("; ")),
        agreement("dbi-two-way", n, &["marked_mesh", "classical"], |pi| {
            DbiMethod::ALL.iter().map(|&m| schubert::is_dbi(pi, m)).collect()
        }),
    ]
}

fn hexagon_methods(n: usize) -> Vec<CheckResult> {
    vec![agreement("hexagon-two-way", n, &["marked_mesh", "classical"], |pi| {
        HexagonMethod::ALL.iter().map(|&m| schubert::is_123_hexagon_avoiding(pi, m)).collect()
    })]
}

/// First permutation (rank then lexicographic) where `f` fails.
fn first_failure<F>(n: usize, f: F) -> Option<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    (1..=n).find_map(|k| enumerate::par_find_first(k, |pi| !f(pi)).expect("rank within cap"))
}

fn families_suite(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let labels: Vec<&str> = BaxterMethod::ALL.iter().map(|m| m.name()).collect();
    out.push(agreement("baxter-three-way", n, &labels, |pi| {
        BaxterMethod::ALL.iter().map(|&m| families::is_baxter(pi, m)).collect()
    }));
    out.push(agreement("simsun-two-way", n, &["direct", "mesh"], |pi| {
        SimsunMethod::ALL.iter().map(|&m| families::is_simsun(pi, m)).collect()
    }));
    out.push(agreement("freely-braided-two-way", n.min(7), &["classical", "marked_mesh"], |pi| {
        FreelyBraidedMethod::ALL.iter().map(|&m| families::is_freely_braided(pi, m)).collect()
    }));
    let (checked, bad) = sweep(n.min(7), |pi| {
        (1..=pi.rank())
            .find(|&i| families::fixed_point_marked_mesh(pi, i).expect("in range") != (pi.at(i) == i))
            .map(|i| format!("{pi} at {i}"))
    });
    out.push(CheckResult::new("fixed-point-encoding", checked, bad));
    let (checked, bad) = sweep(n.min(7), |pi| {
        let b = families::is_baxter(pi, BaxterMethod::Vincular);
        Symmetry::ALL
            .iter()
            .find(|&&op| families::is_baxter(&pi.apply_symmetry(op), BaxterMethod::Vincular) != b)
            .map(|op| format!("{pi} under {op:?}"))
    });
    out.push(CheckResult::new("baxter-symmetry-closure", checked, bad));

    // Dumont encodings: the reading in use must match the direct definition;
    // rejected readings are reported with their first disagreement.
    let direct1 = |pi: &Permutation| families::is_dumont_first(pi, DumontMethod::Direct);
    let mut notes = Vec::new();
    let mut bad = Vec::new();
    for third in DumontFirstThird::ALL {
        let w = first_failure(n, |pi| families::is_dumont_first_with(pi, third) == direct1(pi));
        match (&w, third == families::DUMONT_FIRST_THIRD) {
            (None, _) => notes.push(format!("{third:?} agrees")),
            (Some(w), true) => bad.push(format!("{w}: reading in use disagrees with the definition")),
            (Some(w), false) => notes.push(format!("{third:?} differs first at {w}")),
        }
    }
    out.push(CheckResult::new("dumont-first-encoding", factorial_sum(n), bad).with_note(notes.join("; ")));

    let direct2 = |pi: &Permutation| families::is_dumont_second(pi, DumontMethod::Direct);
    let mut notes = Vec::new();
    let mut bad = Vec::new();
    for reading in DumontSecondReading::ALL {
        let w = first_failure(n, |pi| families::is_dumont_second_with(pi, reading) == direct2(pi));
        match (&w, reading == families::DUMONT_SECOND_READING) {
            (None, _) => notes.push(format!("{reading:?} agrees")),
            (Some(w), true) => bad.push(format!("{w}: reading in use disagrees with the definition")),
            (Some(w), false) => notes.push(format!("{reading:?} differs first at {w}")),
        }
    }
    out.push(CheckResult::new("dumont-second-encoding", factorial_sum(n), bad).with_note(notes.join("; ")));
    out
}

fn factorial_sum(n: usize) -> usize {
    (1..=n).map(|k| (1..=k).product::<usize>()).sum()
}

/// Permutation, box rows, box columns, partition and interior outer-corner tags.
pub type CornerExample = (Permutation, usize, usize, Vec<usize>, Vec<CornerTag>);

/// The four partition examples.
pub fn corner_examples() -> Vec<CornerExample> {
    use CornerTag::*;
    vec![
        (p("14235"), 2, 3, vec![2], vec![TooWide]),
        (p("13425"), 3, 2, vec![1, 1], vec![TooDeep]),
        (p("1,3,4,8,9,2,5,6,7,10"), 5, 5, vec![4, 4, 1, 1], vec![TooDeep, TooWide]),
        (p("13672458"), 4, 4, vec![3, 3, 1], vec![Balanced, Balanced]),
    ]
}

fn corners(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for (rho, rows, cols, partition, tags) in corner_examples() {
        let r = corner_report(&rho).expect("Grassmannian");
        let interior: Vec<CornerTag> =
            r.outer_corners.iter().map(|c| c.tag).filter(|&t| t != CornerTag::Boundary).collect();
        if (r.box_rows, r.box_cols, &r.partition, &interior) != (rows, cols, &partition, &tags) {
            bad.push(format!(
                "{rho}: got {:?} in {}x{} with {interior:?}",
                r.partition, r.box_rows, r.box_cols
            ));
        }
    }
    out.push(CheckResult::new("corner-examples", 4, bad));

    let grassmannian = |pi: &Permutation| pi.is_grassmannian();
    let (checked, bad) = sweep(n, |pi| {
        if !grassmannian(pi) {
            return None;
        }
        let r = corner_report(pi).expect("Grassmannian");
        let fam = grassmann::unbalance_via_families(pi, pi.rank()).expect("Grassmannian");
        (r.too_wide() != fam.too_wide || r.too_deep() != fam.too_deep).then(|| {
            format!(
                "{pi}: corners wide={} deep={}, families wide={} deep={}",
                r.too_wide(),
                r.too_deep(),
                fam.too_wide,
                fam.too_deep
            )
        })
    });
    out.push(CheckResult::new("family-containment", checked, bad));

    let (checked, bad) = sweep(n.min(8), |pi| {
        let via_families = pi.descents().into_iter().all(|d| {
            let rho = grassmann::associated_grassmannian(pi, d).expect("descent");
            let u = grassmann::unbalance_via_families(&rho, rho.rank()).expect("Grassmannian");
            !u.too_wide && !u.too_deep
        });
        (via_families != grassmann::is_balanced(pi)).then(|| pi.to_string())
    });
    out.push(CheckResult::new("balanced-via-families", checked, bad));

    let (checked, bad) = sweep(n.min(8), |pi| {
        if !grassmannian(pi) {
            return None;
        }
        let r = corner_report(pi).expect("Grassmannian");
        let back = grassmann::grassmannian_from_partition(r.box_rows, r.box_cols, &r.partition);
        (back.as_ref() != Ok(pi)).then(|| format!("{pi}: rebuilt {back:?}"))
    });
    out.push(CheckResult::new("partition-round-trip", checked, bad));

    let mut bad = Vec::new();
    for i in 1..=4 {
        let f = grassmann::family_member(Family::F, i).expect("index >= 1");
        let g = grassmann::family_member(Family::G, i).expect("index >= 1");
        if f.symmetry(Symmetry::Reverse).symmetry(Symmetry::Complement) != g {
            bad.push(format!("member {i}"));
        }
    }
    out.push(CheckResult::new("families-reverse-complement", 4, bad));
    out
}

fn hierarchy(n: usize) -> Vec<CheckResult> {
    let factorial = |pi: &Permutation| schubert::is_factorial(pi, FactorialMethod::Patterns);
    vec![
        implication("smooth-implies-factorial", n, schubert::is_smooth, factorial),
        implication("factorial-implies-gorenstein", n, factorial, |pi| {
            schubert::is_gorenstein(pi, GorensteinMethod::Bivincular)
        }),
        implication("smooth-implies-dbi", n, schubert::is_smooth, |pi| schubert::is_dbi(pi, DbiMethod::Classical)),
        agreement("factorial-two-way", n, &["patterns", "forest"], |pi| {
            FactorialMethod::ALL.iter().map(|&m| schubert::is_factorial(pi, m)).collect()
        }),
        implication("boolean-implies-hexagon", n, schubert::is_boolean, |pi| {
            schubert::is_123_hexagon_avoiding(pi, HexagonMethod::Classical)
        }),
    ]
}
