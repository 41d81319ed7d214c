//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use permpat::enumerate;
use permpat::families::{self, BaxterMethod, SimsunMethod};
use permpat::grassmann::{self, corner_report, CornerTag, Family};
use permpat::matcher;
use permpat::pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, IntervalPattern, MarkedMeshPattern, MarkedRegion,
    MeshPattern, Pattern,
};
use permpat::schubert::{self, DbiMethod, FactorialMethod, HexagonMethod, IntervalFamily};
use permpat::translate;
use permpat::verify::{self, Suite, SuiteConfig};
use permpat::{Permutation, Symmetry, Transposition};

type Outcome = Result<String, String>;

fn p(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn pat(s: &str) -> Pattern {
    s.parse().expect("literal pattern")
}

fn t(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("literal transposition")
}

fn cells(list: &[(usize, usize)]) -> BTreeSet<Cell> {
    list.iter().map(|&(c, r)| Cell::new(c, r)).collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= limit, || format!("took {spent:?}, limit {limit:?}"))
}

/// Runs `suite` at rank `n` and requires the named checks to be present and
/// passing.
fn suite_checks(suite: Suite, n: usize, names: &[&str]) -> Outcome {
    let report = verify::run_suite(suite, &SuiteConfig { max_n: n, seed: verify::DEFAULT_SEED });
    ensure(report.sound, || format!("{suite} inconclusive at rank {n}"))?;
    let mut summary = Vec::new();
    for name in names {
        let check = report.checks.iter().find(|c| c.name == *name).ok_or_else(|| format!("missing check {name}"))?;
        ensure(check.passed, || format!("{name}: {}", check.counterexamples.join("; ")))?;
        summary.push(format!("{name} ({} cases)", check.checked));
        if let Some(note) = &check.note {
            summary.push(format!("[{note}]"));
        }
    }
    Ok(summary.join(", "))
}

fn all_up_to(n: usize) -> Vec<Permutation> {
    enumerate::up_to(n).expect("within the enumeration cap").collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let barred = BarredPattern::new(p("21354"), [3]).unwrap();
    let vin = BivincularPattern::new(p("2143"), [2], []).unwrap();
    let bivin = BivincularPattern::new(p("2143"), [], [2]).unwrap();
    let bru14 = BruhatRestrictedPattern::new(p("2143"), [t(1, 4)]).unwrap();
    let bru23 = BruhatRestrictedPattern::new(p("2143"), [t(2, 3)]).unwrap();
    let mut count = 0;
    for pi in all_up_to(7) {
        let w = pi.values();
        let avoid = [
            matcher::avoids_barred(&barred, &pi),
            !matcher::contains_bivincular(&vin, &pi),
            !matcher::contains_bivincular(&bivin, &pi),
            !matcher::contains_bruhat_restricted(&bru14, &pi),
            !matcher::contains_bruhat_restricted(&bru23, &pi),
            common::avoids_barred(&[2, 1, 3, 5, 4], &[3], w),
            !common::contains_bivincular(&[2, 1, 4, 3], &[2], &[], w),
            !common::contains_bivincular(&[2, 1, 4, 3], &[], &[2], w),
        ];
        ensure(avoid.iter().all(|&a| a == avoid[0]), || format!("{pi}: {avoid:?}"))?;
        count += 1;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{count} permutations, 5 conditions plus 3 brute-force oracles agree"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let detail = suite_checks(Suite::Translations, 7, &["translation-fidelity"])?;
    let corpus = verify::translation_corpus(verify::DEFAULT_SEED);
    let kinds = ["bv:", "bar:", "brt:", "iv:"];
    for kind in kinds {
        let random = corpus.iter().filter(|c| c.to_string().starts_with(kind)).count();
        ensure(random >= 50, || format!("only {random} {kind} patterns in the corpus"))?;
    }
    let random = &corpus[corpus.len() - 200..];
    let rank = |c: &Pattern| match c {
        Pattern::Barred(b) => b.full().rank(),
        other => other.base().rank(),
    };
    ensure(random.iter().all(|c| rank(c) <= 4), || "random corpus exceeds base rank 4".into())?;
    // The translated meshes evaluated by the brute-force mesh oracle.
    let perms = all_up_to(6);
    for src in &corpus {
        let meshes = translate::to_meshes(src).map_err(|e| format!("{src}: {e}"))?;
        for pi in &perms {
            let via = meshes.iter().any(|m| {
                let shaded: Vec<(usize, usize)> = m.shaded().iter().map(|c| (c.col, c.row)).collect();
                common::contains_mesh(m.perm().values(), &shaded, pi.values())
            });
            ensure(via == matcher::contains(src, pi), || format!("{src} on {pi}: oracle mesh says {via}"))?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{detail}; brute-force mesh oracle agrees on {} patterns to rank 6", corpus.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let detail = suite_checks(Suite::GorensteinMethods, 7, &["gorenstein-four-way"])?;
    within(start, Duration::from_secs(60))?;
    Ok(detail)
}

fn criterion_4() -> Outcome {
    let detail = suite_checks(
        Suite::Hierarchy,
        7,
        &["smooth-implies-factorial", "factorial-implies-gorenstein", "smooth-implies-dbi"],
    )?;
    for pi in all_up_to(7) {
        let w = pi.values();
        let smooth = !common::contains_classical(&[1, 3, 2, 4], w) && !common::contains_classical(&[2, 1, 4, 3], w);
        ensure(smooth == schubert::is_smooth(&pi), || format!("smooth oracle disagrees on {pi}"))?;
    }
    Ok(detail)
}

fn criterion_5() -> Outcome {
    let detail = suite_checks(Suite::Hierarchy, 7, &["factorial-two-way"])?;
    for pi in all_up_to(7) {
        let w = pi.values();
        let oracle = !common::contains_classical(&[1, 3, 2, 4], w) && common::avoids_barred(&[2, 1, 3, 5, 4], &[3], w);
        let methods: Vec<bool> = FactorialMethod::ALL.iter().map(|&m| schubert::is_factorial(&pi, m)).collect();
        ensure(methods.iter().all(|&m| m == oracle), || format!("{pi}: oracle {oracle}, methods {methods:?}"))?;
    }
    Ok(format!("{detail}; brute-force 1324 and 21-bar3-54 oracle agrees"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let detail = suite_checks(Suite::DbiMethods, 8, &["dbi-second-pattern-oracle", "dbi-two-way"])?;
    let classical = ["1324", "24153", "31524", "426153"].map(common::digits);
    for pi in all_up_to(7) {
        let oracle = classical.iter().all(|c| !common::contains_classical(c, pi.values()));
        let methods: Vec<bool> = DbiMethod::ALL.iter().map(|&m| schubert::is_dbi(&pi, m)).collect();
        ensure(methods.iter().all(|&m| m == oracle), || format!("{pi}: oracle {oracle}, methods {methods:?}"))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(detail)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let detail = suite_checks(Suite::HexagonMethods, 8, &["hexagon-two-way"])?;
    for w in ["53281764", "53218764", "43281765", "43218765"] {
        let w = p(w);
        let methods: Vec<bool> = HexagonMethod::ALL.iter().map(|&m| schubert::is_123_hexagon_avoiding(&w, m)).collect();
        ensure(methods.iter().all(|&m| !m), || format!("{w} should not be 123-hexagon avoiding"))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(detail)
}

fn criterion_8() -> Outcome {
    use CornerTag::*;
    type Case<'a> = (&'a str, usize, usize, &'a [usize], &'a [CornerTag]);
    let cases: [Case; 4] = [
        ("14235", 2, 3, &[2], &[TooWide]),
        ("13425", 3, 2, &[1, 1], &[TooDeep]),
        ("1,3,4,8,9,2,5,6,7,10", 5, 5, &[4, 4, 1, 1], &[TooDeep, TooWide]),
        ("13672458", 4, 4, &[3, 3, 1], &[Balanced, Balanced]),
    ];
    for (w, rows, cols, partition, tags) in cases {
        let r = corner_report(&p(w)).map_err(|e| format!("{w}: {e}"))?;
        ensure((r.box_rows, r.box_cols) == (rows, cols), || format!("{w}: box {}x{}", r.box_rows, r.box_cols))?;
        ensure(r.partition == partition, || format!("{w}: partition {:?}", r.partition))?;
        let got: Vec<CornerTag> = r.outer_corners.iter().map(|c| c.tag).filter(|&t| t != Boundary).collect();
        ensure(got == tags, || format!("{w}: corner tags {got:?}"))?;
    }
    ensure(grassmann::is_balanced(&p("13672458")) && !grassmann::is_balanced(&p("14235")), || {
        "balanced flags".into()
    })?;
    Ok("four partitions, boxes and corner tags".into())
}

fn criterion_9() -> Outcome {
    suite_checks(Suite::Corners, 9, &["family-containment"])
}

fn criterion_10() -> Outcome {
    const BAXTER: [usize; 6] = [1, 2, 6, 22, 92, 422];
    const SMOOTH: [usize; 7] = [1, 2, 6, 22, 88, 366, 1552];
    let naive_baxter: Vec<usize> = (1..=6)
        .map(|n| {
            common::perms(n)
                .iter()
                .filter(|w| {
                    !common::contains_bivincular(&[3, 1, 4, 2], &[2], &[], w)
                        && !common::contains_bivincular(&[2, 4, 1, 3], &[2], &[], w)
                })
                .count()
        })
        .collect();
    ensure(naive_baxter == BAXTER, || format!("brute-force Baxter counts {naive_baxter:?}"))?;
    let naive_smooth: Vec<usize> = (1..=7)
        .map(|n| {
            common::perms(n)
                .iter()
                .filter(|w| !common::contains_classical(&[1, 3, 2, 4], w) && !common::contains_classical(&[2, 1, 4, 3], w))
                .count()
        })
        .collect();
    ensure(naive_smooth == SMOOTH, || format!("brute-force smooth counts {naive_smooth:?}"))?;
    for &method in BaxterMethod::ALL {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate::par_count(n, |pi| families::is_baxter(pi, method)).unwrap())
            .collect();
        ensure(counts == BAXTER, || format!("Baxter via {method}: {counts:?}"))?;
    }
    let smooth: Vec<usize> = (1..=7).map(|n| enumerate::par_count(n, schubert::is_smooth).unwrap()).collect();
    ensure(smooth == SMOOTH, || format!("smooth: {smooth:?}"))?;
    Ok("Baxter 1,2,6,22,92,422 by all three methods; smooth 1,2,6,22,88,366,1552".into())
}

fn criterion_11() -> Outcome {
    let detail = suite_checks(
        Suite::Families,
        8,
        &[
            "simsun-two-way",
            "freely-braided-two-way",
            "fixed-point-encoding",
            "dumont-first-encoding",
            "dumont-second-encoding",
        ],
    )?;
    for pi in all_up_to(7) {
        let direct = families::is_simsun(&pi, SimsunMethod::Direct);
        let shaded = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];
        let oracle = !common::contains_mesh(&[3, 2, 1], &shaded, pi.values());
        ensure(direct == oracle, || format!("simsun brute-force mesh disagrees on {pi}"))?;
    }
    Ok(detail)
}

fn occurrence_positions(pattern: &Pattern, perm: &str) -> Vec<Vec<usize>> {
    matcher::occurrences(pattern, &p(perm)).iter().map(|o| o.positions().to_vec()).collect()
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    let mut check = |cond: bool, what: &str| -> Result<(), String> {
        checked += 1;
        ensure(cond, || what.to_string())
    };

    // Occurrences and containment.
    check(occurrence_positions(&pat("cl:123"), "32415") == [vec![1, 3, 5], vec![2, 3, 5]], "123 in 32415")?;
    check(occurrence_positions(&pat("cl:132"), "32415").is_empty(), "132 in 32415")?;
    let occ = matcher::occurrences(&pat("cl:2143"), &p("324615"));
    check(occ.len() == 1 && occ[0].values() == [3, 2, 6, 5], "2143 in 324615")?;
    let occ = matcher::occurrences(&pat("bv:123;x={1};y={}"), &p("32415"));
    check(occ.len() == 1 && occ[0].values() == [2, 4, 5], "(123,{1},{}) in 32415")?;
    check(!matcher::contains(&pat("bv:123;x={2};y={1,2}"), &p("32415")), "(123,{2},{1,2}) in 32415")?;
    check(matcher::count_occurrences(&pat("bv:123;x={};y={2}"), &p("32415")) == 2, "(123,{},{2}) count")?;
    check(!matcher::contains(&pat("bv:23154;x={};y={2,3}"), &p("423165")), "423165 avoids (23154,{},{2,3})")?;
    let occ = matcher::occurrences(&pat("bv:23154;x={3};y={}"), &p("423165"));
    check(occ.iter().any(|o| o.values() == [2, 3, 1, 6, 5]), "423165 contains (23154,{3},{}) via 23165")?;
    let mesh = pat("m:12;r={(0,0),(2,0),(0,2),(2,2)}");
    let vals: Vec<Vec<usize>> = matcher::occurrences(&mesh, &p("315426")).iter().map(|o| o.values().to_vec()).collect();
    check(vals.len() == 2 && vals.contains(&vec![3, 6]) && vals.contains(&vec![1, 6]), "mesh occurrences in 315426")?;
    check(matcher::avoids(&pat("bar:21354;bars={3}"), &p("4257613")), "4257613 avoids 21-bar3-54")?;
    let pop = pat("mm:1;marks=[{(0,0)}>=1;{(1,0)}>=1]");
    check(matcher::contains(&pop, &p("231")) && matcher::contains(&pop, &p("132")), "POP-121 in 231, 132")?;
    check(!matcher::contains(&pop, &p("123")), "POP-121 not in 123")?;
    let dbi1 = pat("mm:2143;marks=[{(1,3),(3,1)}>=1]");
    check(matcher::contains(&dbi1, &p("24153")) && matcher::contains(&dbi1, &p("31524")), "DBI first pattern")?;
    check(!matcher::contains(&dbi1, &p("2143")), "DBI first pattern not in 2143")?;
    let iv = IntervalPattern::new(p("41523"), p("31524")).unwrap();
    check(matcher::contains_interval(&iv, &p("31524")), "[41523,31524] in 31524")?;
    let iv2 = IntervalPattern::new(p("45123"), p("31524")).unwrap();
    check(matcher::contains_interval(&iv2, &p("31524")), "[45123,31524] in 31524")?;

    // Permutation operations.
    check(p("34125").insert(3, 4).unwrap() == p("354126"), "34125 insert 3,4")?;
    check(p("2143").insert(2, 4).unwrap() == p("24153"), "2143 insert 2,4")?;
    check(!p("24153").covers(t(1, 4)).unwrap(), "24153 does not cover via t(1,4)")?;
    check(p("41523").bruhat_leq(&p("31524")).unwrap(), "41523 <= 31524")?;
    let big = p("11,6,12,9,4,1,5,3,7,2,8,10");
    check(grassmann::gamma_word(&big, 4).unwrap() == [6, 9, 4, 5, 7, 8, 10], "gamma word")?;
    check(grassmann::associated_grassmannian(&big, 4).unwrap() == p("3612457"), "flattening 3612457")?;
    let v = BivincularPattern::new(p("2143"), [2], []).unwrap();
    check(v.symmetry(Symmetry::Inverse) == BivincularPattern::new(p("2143"), [], [2]).unwrap(), "vincular 2143 inverse")?;

    // Translations.
    let strips = translate::bivincular_to_mesh(&BivincularPattern::new(p("31524"), [2], [3]).unwrap());
    let mut want = BTreeSet::new();
    for i in 0..=5 {
        want.insert(Cell::new(2, i));
        want.insert(Cell::new(i, 3));
    }
    check(strips.shaded() == &want, "(31524,{2},{3}) strips")?;
    let one = translate::barred_to_meshes(&BarredPattern::new(p("123"), [2]).unwrap());
    check(one == [MeshPattern::new(p("12"), cells(&[(1, 1)])).unwrap()], "1-bar2-3")?;
    let two = translate::barred_to_meshes(&BarredPattern::new(p("634125"), [3, 5]).unwrap());
    let want2 = [
        MeshPattern::new(p("4213"), cells(&[(2, 2)])).unwrap(),
        MeshPattern::new(p("4213"), cells(&[(3, 1)])).unwrap(),
    ];
    check(two == want2, "63-bar4-1-bar2-5")?;
    let line = cells(&[(1, 3), (2, 3), (3, 3), (4, 3)]);
    let b1 = translate::bruhat_to_mesh(&BruhatRestrictedPattern::new(p("31524"), [t(1, 5)]).unwrap()).unwrap();
    check(b1.shaded() == &line, "31524 t(1,5)")?;
    let b2 = translate::bruhat_to_mesh(&BruhatRestrictedPattern::new(p("31524"), [t(1, 5), t(2, 3)]).unwrap())
        .unwrap();
    let mut super_line = line.clone();
    super_line.extend(cells(&[(2, 1), (2, 2), (2, 3), (2, 4)]));
    check(b2.shaded() == &super_line, "31524 t(1,5), t(2,3)")?;
    let i1 = translate::interval_to_mesh(&iv);
    check(i1.perm() == &p("31524") && i1.shaded() == &line, "[41523,31524] translation")?;
    let i2 = translate::interval_to_mesh(&IntervalPattern::new(p("53241"), p("32154")).unwrap());
    let want3 = cells(&[(1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3)]);
    check(i2.perm() == &p("32154") && i2.shaded() == &want3, "[53241,32154] translation")?;
    check(
        pat("bv:31524;x={2};y={3}").to_string() == "bv:31524;x={2};y={3}"
            && Pattern::from(translate::to_meshes(&pat("bv:31524;x={2};y={3}")).unwrap().remove(0)).to_string()
                == "m:31524;r={(0,3),(1,3),(2,0),(2,1),(2,2),(2,3),(2,4),(2,5),(3,3),(4,3),(5,3)}",
        "canonical translate output",
    )?;

    // Corners and families.
    check(grassmann::family_member(Family::F, 1).unwrap() == BivincularPattern::new(p("14235"), [], [2, 3, 4]).unwrap(), "F(1)")?;
    check(grassmann::family_member(Family::G, 1).unwrap() == BivincularPattern::new(p("13425"), [], [1, 2, 3]).unwrap(), "G(1)")?;
    check(
        grassmann::family_member(Family::F, 2).unwrap()
            == BivincularPattern::new(p("1562347"), [], [2, 3, 4, 5, 6]).unwrap(),
        "F(2)",
    )?;
    check(corner_report(&p("14235")).unwrap().too_wide(), "14235 too wide")?;
    check(corner_report(&p("13425")).unwrap().too_deep(), "13425 too deep")?;

    // Classifiers.
    check(!schubert::is_smooth(&p("1324")) && !schubert::is_smooth(&p("2143")), "smooth examples")?;
    check(FactorialMethod::ALL.iter().all(|&m| schubert::is_factorial(&p("4257613"), m)), "4257613 factorial")?;
    check(FactorialMethod::ALL.iter().all(|&m| !schubert::is_factorial(&p("1324"), m)), "1324 not factorial")?;
    let g12 = schubert::gorenstein_interval_family(IntervalFamily::G, 1, 2).unwrap();
    check(g12 == IntervalPattern::new(p("34512"), p("13425")).unwrap(), "g(1,2)")?;
    let h01 = schubert::gorenstein_interval_family(IntervalFamily::H, 0, 1).unwrap();
    check(h01 == IntervalPattern::new(p("45231"), p("24153")).unwrap(), "h(0,1)")?;
    for w in ["24153", "426153"] {
        check(DbiMethod::ALL.iter().all(|&m| !schubert::is_dbi(&p(w), m)), &format!("{w} not DBI"))?;
    }
    check(
        HexagonMethod::ALL.iter().all(|&m| !schubert::is_123_hexagon_avoiding(&p("53281764"), m)),
        "53281764 not hexagon avoiding",
    )?;
    check(SimsunMethod::ALL.iter().all(|&m| !families::is_simsun(&p("452613"), m)), "452613 not simsun")?;
    for w in ["4321", "3421"] {
        let methods = families::FreelyBraidedMethod::ALL;
        check(methods.iter().all(|&m| !families::is_freely_braided(&p(w), m)), &format!("{w} not freely braided"))?;
    }
    check(families::pop_121_occurrences(&p("231")) >= 1, "POP-121 count in 231")?;
    let mm = MarkedMeshPattern::new(p("1"), vec![MarkedRegion::at_least([Cell::new(0, 0)], 1).unwrap()]).unwrap();
    check(matcher::contains_marked_mesh(&mm, &p("12")) && !matcher::contains_marked_mesh(&mm, &p("21")), "single marked box")?;

    Ok(format!("{checked} worked examples"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("avoidance equivalence square, rank <= 7", criterion_1),
        ("translation fidelity over the seeded corpus, rank <= 7", criterion_2),
        ("Gorenstein four-way agreement, rank <= 7", criterion_3),
        ("hierarchy smooth => factorial => Gorenstein, smooth => DBI, rank <= 7", criterion_4),
        ("factorial pattern method = forest-like method, rank <= 7", criterion_5),
        ("DBI region oracle and two-way agreement, rank <= 8", criterion_6),
        ("123-hexagon two-way agreement, rank <= 8", criterion_7),
        ("corner machinery on the four partition examples", criterion_8),
        ("families F/G containment = corner geometry, Grassmannians of rank <= 9", criterion_9),
        ("counting regressions", criterion_10),
        ("family encodings", criterion_11),
        ("worked examples", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({secs:.2}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s) {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
