use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::{parse_boundary_word, Corpus, Entry};
use super::{same_group, CheckReport, GroupSummary, Status, Verdict};
use crate::abelian::{abelianize, relation_matrix, AbelianGroup, IntMatrix};
use crate::diagram::{
    apply_move, checkerboard_color, crossing_of, legal_moves, rotate, trace_faces, Diagram, Faces, Move, RegionMode,
};
use crate::enumeration::{count_homomorphisms, fingerprint, FiniteGroup, FINGERPRINT_TARGETS};
use crate::error::{Error, Result};
use crate::groups::{
    arc_core, boundary_quotient, checkerboard_graphs, core_of_wirtinger, default_base, dehn_with_faces, goeritz_matrix,
    rc_zero_with_faces, region_core_with_faces, second_region_core_with_faces, wirtinger,
};
use crate::presentation::Presentation;

/// Suite names accepted by [`run_suite`], in run order.
pub const SUITES: &[&str] = &[
    "expectations",
    "free-split",
    "split-union",
    "two-rank",
    "core-functor",
    "goeritz",
    "dehn-wirtinger",
    "surfaces",
    "moves",
];

/// Randomized move pairs generated by the `moves` suite.
const RANDOM_MOVES: usize = 120;
const RANDOM_SEED: u64 = 0x5eed;

fn natural_faces(d: &Diagram) -> Result<Faces> {
    trace_faces(d, RegionMode::natural(d))
}

fn is_classical(d: &Diagram) -> bool {
    RegionMode::natural(d) == RegionMode::Classical
}

fn failed(name: &str, err: Error) -> Verdict {
    Verdict::new(name, Status::Fail, format!("error: {err}"))
}

fn summarize(p: &Presentation) -> GroupSummary {
    GroupSummary::of(p)
}

/// `RC_ab = Z + AC_ab`, and `#Hom(RC, t) = |t| #Hom(AC, t)` for the abelian
/// fingerprint targets.
pub fn check_free_split(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("free-split");
    for e in &corpus.entries {
        let v = free_split_one(e).unwrap_or_else(|err| failed(&e.name, err));
        report.push(v);
    }
    report.sorted()
}

fn free_split_one(e: &Entry) -> Result<Verdict> {
    let faces = natural_faces(&e.diagram)?;
    let ac = arc_core(&e.diagram);
    let rc = region_core_with_faces(&e.diagram, &faces);
    let (a, r) = (abelianize(&ac), abelianize(&rc));
    let want = AbelianGroup::free(1).direct_sum(&a);
    let (fa, fr) = (fingerprint(&ac), fingerprint(&rc));
    let mut homs_ok = true;
    for (i, name) in FINGERPRINT_TARGETS.iter().enumerate() {
        if let Some(m) = name.strip_prefix('z') {
            let order: u128 = m.parse().expect("cyclic target");
            homs_ok &= fr[i] == order * fa[i];
        }
    }
    let holds = r == want && homs_ok;
    let detail = format!("RC_ab = {r}, Z + AC_ab = {want}{}", if homs_ok { "" } else { ", hom counts differ" });
    Ok(Verdict::new(&e.name, Status::resolve(holds, e.expects_failure("free-split")), detail)
        .with("ac", a)
        .with("rc", r))
}

/// `RC_ab + RC_ab = Z^(k+1) + RRC_ab` on classical diagrams with `k`
/// pieces, with matching torsion `T` and `T + T`.
pub fn check_split_union(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("split-union");
    for e in &corpus.entries {
        if !is_classical(&e.diagram) {
            report.push(Verdict::new(&e.name, Status::Skipped, "not classical"));
            continue;
        }
        let v = split_union_one(e).unwrap_or_else(|err| failed(&e.name, err));
        report.push(v);
    }
    report.sorted()
}

fn split_union_one(e: &Entry) -> Result<Verdict> {
    let d = &e.diagram;
    let faces = trace_faces(d, RegionMode::Classical)?;
    let k = d.num_pieces();
    let a = abelianize(&arc_core(d));
    let r = abelianize(&region_core_with_faces(d, &faces));
    let rr = abelianize(&second_region_core_with_faces(d, &faces));
    let lhs = r.direct_sum(&r);
    let rhs = AbelianGroup::free(k + 1).direct_sum(&rr);
    let t = AbelianGroup { free_rank: 0, divisors: a.divisors.clone() };
    let torsion_ok = r.divisors == a.divisors && rr.divisors == t.direct_sum(&t).divisors;
    let holds = lhs == rhs && torsion_ok;
    let detail = format!("k = {k}, RC_ab^2 = {lhs}, Z^{} + RRC_ab = {rhs}", k + 1);
    Ok(Verdict::new(&e.name, Status::resolve(holds, e.expects_failure("split-union")), detail)
        .with("pieces", k)
        .with("rc", r)
        .with("rrc", rr))
}

/// `mod2_rank(AC_ab)` equals the number of link components.
pub fn check_two_rank(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("two-rank");
    for e in &corpus.entries {
        let a = abelianize(&arc_core(&e.diagram));
        let mu = e.diagram.num_link_components();
        let holds = a.mod2_rank() == mu;
        let detail = format!("mod2 rank {} , components {mu}", a.mod2_rank()).replace(" ,", ",");
        report.push(
            Verdict::new(&e.name, Status::resolve(holds, e.expects_failure("two-rank")), detail)
                .with("ac", a)
                .with("components", mu),
        );
    }
    report.sorted()
}

/// The core group of the Wirtinger group against the arc core group.
pub fn check_core_functor(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("core-functor");
    for e in &corpus.entries {
        let d = e.diagram.with_default_orientation();
        let v = core_of_wirtinger(&d)
            .map(|cw| {
                let ac = arc_core(&d);
                let (s, t) = (summarize(&cw), summarize(&ac));
                let holds = s == t;
                Verdict::new(
                    &e.name,
                    Status::resolve(holds, e.expects_failure("core-functor")),
                    format!("core(W) {s}, AC {t}"),
                )
                .with("core", s.abelian)
                .with("ac", t.abelian)
            })
            .unwrap_or_else(|err| failed(&e.name, err));
        report.push(v);
    }
    report.sorted()
}

/// The unshaded part of the second regional core group's relation matrix,
/// padded with `β_s` zero columns, against the Goeritz matrix padded the
/// same way.
pub fn check_goeritz(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("goeritz");
    for e in &corpus.entries {
        if !is_classical(&e.diagram) {
            report.push(Verdict::new(&e.name, Status::Skipped, "not classical"));
            continue;
        }
        let v = goeritz_one(e).unwrap_or_else(|err| failed(&e.name, err));
        report.push(v);
    }
    report.sorted()
}

fn goeritz_one(e: &Entry) -> Result<Verdict> {
    let d = &e.diagram;
    let faces = trace_faces(d, RegionMode::Classical)?;
    let coloring = checkerboard_color(d, &faces).map_err(|_| Error::NotColorable)?;
    let graphs = checkerboard_graphs(d, &faces, &coloring)?;
    let g = goeritz_matrix(d, &faces, &coloring, None)?;
    let m = relation_matrix(&second_region_core_with_faces(d, &faces));
    let unshaded = &g.regions;
    let rows: Vec<usize> = (0..m.rows())
        .filter(|&i| (0..m.cols()).all(|j| m.get(i, j).sign() == num_bigint::Sign::NoSign || unshaded.contains(&j)))
        .collect();
    let mut mu = IntMatrix::zeros(rows.len(), unshaded.len());
    for (i, &row) in rows.iter().enumerate() {
        for (j, &col) in unshaded.iter().enumerate() {
            mu.set(i, j, m.get(row, col).clone());
        }
    }
    let lhs = AbelianGroup::cokernel(&mu.pad_columns(graphs.beta_s));
    let rhs = AbelianGroup::cokernel(&g.full.pad_columns(graphs.beta_s));
    let det = g.determinant().magnitude().clone();
    let det_ok = e.spec.expect.determinant.is_none_or(|want| det == want.into());
    let holds = lhs == rhs && det_ok;
    let detail = format!("RRC_U + F_bs: {lhs}, (G 0): {rhs}, det {det}");
    Ok(Verdict::new(&e.name, Status::resolve(holds, e.expects_failure("goeritz")), detail)
        .with("beta_s", graphs.beta_s)
        .with("beta_u", graphs.beta_u)
        .with("determinant", det))
}

/// On classical diagrams the Dehn and Wirtinger groups both abelianize to
/// `Z^μ` and have equally many homomorphisms to `S3`.
pub fn check_dehn_wirtinger(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("dehn-wirtinger");
    let s3 = FiniteGroup::named("s3").expect("standard target");
    for e in &corpus.entries {
        if !is_classical(&e.diagram) {
            report.push(Verdict::new(&e.name, Status::Skipped, "not classical"));
            continue;
        }
        let run = || -> Result<Verdict> {
            let d = e.diagram.with_default_orientation();
            let faces = trace_faces(&d, RegionMode::Classical)?;
            let dehn = dehn_with_faces(&d, &faces, default_base(&faces))?;
            let w = wirtinger(&d)?;
            let (a, b) = (abelianize(&dehn), abelianize(&w));
            let (h1, h2) = (count_homomorphisms(&dehn, &s3), count_homomorphisms(&w, &s3));
            let mu = d.num_link_components();
            let holds = a == b && a == AbelianGroup::free(mu) && h1 == h2;
            let detail = format!("Dehn {a}, Wirtinger {b}, Hom to S3: {h1} vs {h2}");
            Ok(Verdict::new(&e.name, Status::resolve(holds, e.expects_failure("dehn-wirtinger")), detail)
                .with("s3", h1))
        };
        report.push(run().unwrap_or_else(|err| failed(&e.name, err)));
    }
    report.sorted()
}

fn model_matches(p: &Presentation, model: &Option<String>) -> Result<bool> {
    match model {
        None => Ok(true),
        Some(text) => Ok(same_group(p, &Presentation::parse(text)?)),
    }
}

fn abelian_matches(a: &AbelianGroup, want: &Option<String>) -> Result<bool> {
    match want {
        None => Ok(true),
        Some(text) => AbelianGroup::parse(text)
            .map(|w| &w == a)
            .ok_or_else(|| Error::Parse(format!("bad abelian group {text:?}"))),
    }
}

/// Compares every diagram against the golden invariants in the manifest.
pub fn check_expectations(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("expectations");
    for e in &corpus.entries {
        let v = expectations_one(e).unwrap_or_else(|err| failed(&e.name, err));
        report.push(v);
    }
    report.sorted()
}

fn expectations_one(e: &Entry) -> Result<Verdict> {
    let d = &e.diagram;
    let x = &e.spec.expect;
    let faces = natural_faces(d)?;
    let ac = arc_core(d);
    let rc = region_core_with_faces(d, &faces);
    let rrc = second_region_core_with_faces(d, &faces);
    let (a, r, rr) = (abelianize(&ac), abelianize(&rc), abelianize(&rrc));
    let mut bad = Vec::new();
    for (label, ok) in [
        ("ac", abelian_matches(&a, &x.ac)? && model_matches(&ac, &x.ac_model)?),
        ("rc", abelian_matches(&r, &x.rc)? && model_matches(&rc, &x.rc_model)?),
        ("rrc", abelian_matches(&rr, &x.rrc)? && model_matches(&rrc, &x.rrc_model)?),
        ("components", x.components.is_none_or(|m| m == d.num_link_components())),
        ("pieces", x.pieces.is_none_or(|k| k == d.num_pieces())),
    ] {
        if !ok {
            bad.push(label);
        }
    }
    if let Some(want) = x.determinant {
        let got = trace_faces(d, RegionMode::Classical)
            .ok()
            .and_then(|f| checkerboard_color(d, &f).ok().and_then(|c| goeritz_matrix(d, &f, &c, None).ok()))
            .map(|g| g.determinant().magnitude().clone());
        if got != Some(want.into()) {
            bad.push("determinant");
        }
    }
    let detail = if bad.is_empty() {
        format!("({a}, {r}, {rr})")
    } else {
        format!("({a}, {r}, {rr}) mismatch in {}", bad.join(", "))
    };
    Ok(Verdict::new(&e.name, Status::resolve(bad.is_empty(), e.expects_failure("expectations")), detail)
        .with("ac", a)
        .with("rc", r)
        .with("rrc", rr))
}

/// For each surface diagram: `RC⁰` against the arc core group modulo the
/// boundary words, and both against the manifest.
pub fn check_surfaces(corpus: &Corpus) -> CheckReport {
    let mut report = CheckReport::new("surfaces");
    for s in &corpus.surfaces {
        let run = || -> Result<Verdict> {
            let d = corpus.entry(&s.diagram)?.diagram.with_default_orientation();
            let faces = trace_faces(&d, RegionMode::Virtual)?;
            let base = match &s.base {
                Some(id) => faces.region_index(id)?,
                None => {
                    checkerboard_color(&d, &faces).ok().and_then(|c| c.shaded_regions().first().copied()).unwrap_or(0)
                }
            };
            let rc0 = rc_zero_with_faces(&d, &faces, base)?;
            let dehn = dehn_with_faces(&d, &faces, base)?;
            let words = s.boundary.iter().map(|w| parse_boundary_word(w)).collect::<Result<Vec<_>>>()?;
            let q = boundary_quotient(&arc_core(&d), &words)?;
            let (r0, qa, da) = (abelianize(&rc0), abelianize(&q), abelianize(&dehn));
            let agree = same_group(&rc0, &q);
            let golden = abelian_matches(&r0, &s.rc0)?
                && abelian_matches(&da, &s.dehn)?
                && model_matches(&rc0, &s.rc0_model)?
                && model_matches(&dehn, &s.dehn_model)?;
            let detail =
                format!("RC0 {r0}, AC/boundary {qa}, Dehn {da}{}", if golden { "" } else { ", manifest mismatch" });
            Ok(Verdict::new(&s.name, Status::resolve(agree && golden, false), detail)
                .with("rc0", r0)
                .with("quotient", qa)
                .with("dehn", da))
        };
        report.push(run().unwrap_or_else(|err| failed(&s.name, err)));
    }
    report.sorted()
}

/// One (diagram, move) pair, optionally with the regional groups expected
/// before and after and the diagram the move must produce.
#[derive(Debug, Clone)]
pub struct MoveCase {
    pub label: String,
    pub before: Diagram,
    pub mv: Move,
    pub expect_rc: Option<[AbelianGroup; 2]>,
    pub expect_rrc: Option<[AbelianGroup; 2]>,
    pub result: Option<Diagram>,
}

impl MoveCase {
    pub fn new(label: impl Into<String>, before: Diagram, mv: Move) -> Self {
        MoveCase { label: label.into(), before, mv, expect_rc: None, expect_rrc: None, result: None }
    }
}

/// The hypotheses of the Ω2 invariance criterion, read off the diagram
/// that has the bigon. `X`, `Y` are the regions beside the two strands
/// before they overlap; `A`, `C` are the regions diagonally across the
/// bigon at its two crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoMoveCriterion {
    /// `X = Y`, so the first regional core group cannot change.
    pub x_equals_y: bool,
    /// `A = C`; otherwise the second regional core group cannot change.
    pub a_equals_c: bool,
}

/// Evaluates the Ω2 criterion for a move between `small` and `big`, where
/// `big` has the bigon. `X = Y` holds exactly when the overlap adds two
/// abstract faces, and always for planar diagrams.
pub fn two_move_criterion(small: &Diagram, big: &Diagram) -> Result<TwoMoveCriterion> {
    let fv_small = trace_faces(small, RegionMode::Virtual)?;
    let fv_big = trace_faces(big, RegionMode::Virtual)?;
    let old: HashSet<&str> = small.crossings().iter().map(|c| c.id.as_str()).collect();
    let fresh: Vec<usize> =
        (0..big.num_crossings()).filter(|&c| !old.contains(big.crossings()[c].id.as_str())).collect();
    let [p, q] = fresh[..] else {
        return Err(Error::InvalidArg("not an Ω2 pair".into()));
    };
    let bigon = |c: usize| {
        (4 * c..4 * c + 4).find(|&k| {
            let reg = &fv_big.regions[fv_big.region_of_corner(k)];
            reg.num_corners() == 2 && reg.corners().any(|j| j != k && crossing_of(j) == if c == p { q } else { p })
        })
    };
    let (Some(kp), Some(kq)) = (bigon(p), bigon(q)) else {
        return Err(Error::InvalidArg("no bigon between the new crossings".into()));
    };
    let planar = is_classical(small) && is_classical(big);
    let x_equals_y = planar || fv_big.num_regions() == fv_small.num_regions() + 2;
    let nat = natural_faces(big)?;
    let a_equals_c = nat.region_of_corner(rotate(kp, 2)) == nat.region_of_corner(rotate(kq, 2));
    Ok(TwoMoveCriterion { x_equals_y, a_equals_c })
}

/// Move cases listed in the manifest.
pub fn corpus_move_cases(corpus: &Corpus) -> Result<Vec<MoveCase>> {
    let parse_pair = |p: &Option<[String; 2]>| -> Result<Option<[AbelianGroup; 2]>> {
        match p {
            None => Ok(None),
            Some([a, b]) => {
                let g =
                    |t: &str| AbelianGroup::parse(t).ok_or_else(|| Error::Parse(format!("bad abelian group {t:?}")));
                Ok(Some([g(a)?, g(b)?]))
            }
        }
    };
    let mut out = Vec::new();
    for m in &corpus.moves {
        let before = corpus.entry(&m.diagram)?.diagram.clone();
        let mv = Move::parse(&before, &m.spec)?;
        let result = m.result.as_ref().map(|r| corpus.entry(r).map(|e| e.diagram.clone())).transpose()?;
        out.push(MoveCase {
            label: m.name.clone(),
            before,
            mv,
            expect_rc: parse_pair(&m.rc)?,
            expect_rrc: parse_pair(&m.rrc)?,
            result,
        });
    }
    Ok(out)
}

/// Same crossings, edges and loop count, ignoring crossing ids, loop names
/// and face markers.
fn same_layout(a: &Diagram, b: &Diagram) -> bool {
    a.num_crossings() == b.num_crossings()
        && a.num_loops() == b.num_loops()
        && a.crossings().iter().zip(b.crossings()).all(|(x, y)| x.over_even == y.over_even)
        && (0..a.num_slots()).all(|x| a.mate(x) == b.mate(x))
}

/// `count` random (diagram, legal move) pairs. Walks start at corpus
/// diagrams with at most six crossings; each step picks a move type
/// uniformly, then a site, and results join the pool while they stay
/// under nine crossings.
pub fn random_move_cases(corpus: &Corpus, count: usize, seed: u64) -> Vec<MoveCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<(String, Diagram)> = corpus
        .entries
        .iter()
        .filter(|e| e.diagram.num_crossings() <= 6)
        .map(|e| (e.name.clone(), e.diagram.clone()))
        .collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count && !pool.is_empty() {
        let (name, d) = pool[rng.gen_range(0..pool.len())].clone();
        let moves = legal_moves(&d);
        let mut kinds: Vec<u8> = moves.iter().map(Move::kind).collect();
        kinds.sort_unstable();
        kinds.dedup();
        let Some(&kind) = kinds.choose(&mut rng) else { continue };
        let sites: Vec<&Move> = moves.iter().filter(|m| m.kind() == kind).collect();
        let mv = (*sites.choose(&mut rng).expect("kind has a site")).clone();
        let label = format!("{:03} {name}: {}", out.len(), mv.describe(&d));
        if let Ok(after) = apply_move(&d, &mv) {
            if after.num_crossings() < 9 {
                pool.push((format!("{name}'"), after));
            }
        }
        out.push(MoveCase::new(label, d, mv));
    }
    out
}

/// Arc-core invariants must survive every move; the regional groups must
/// survive Ω1, Ω3, and any Ω2 meeting the criterion of
/// [`two_move_criterion`]. Cases with expectations must reproduce them.
pub fn check_move_invariance(cases: &[MoveCase]) -> CheckReport {
    let mut report = CheckReport::new("moves");
    for case in cases {
        report.push(move_one(case).unwrap_or_else(|err| failed(&case.label, err)));
    }
    report.sorted()
}

fn move_one(case: &MoveCase) -> Result<Verdict> {
    let d = &case.before;
    let after = apply_move(d, &case.mv)?;
    let groups = |x: &Diagram| -> Result<(GroupSummary, AbelianGroup, AbelianGroup)> {
        let f = natural_faces(x)?;
        Ok((
            summarize(&arc_core(x)),
            abelianize(&region_core_with_faces(x, &f)),
            abelianize(&second_region_core_with_faces(x, &f)),
        ))
    };
    let (ac0, rc0, rrc0) = groups(d)?;
    let (ac1, rc1, rrc1) = groups(&after)?;
    let (mut rc_required, mut rrc_required) = (true, true);
    if case.mv.kind() == 2 {
        let crit =
            if case.mv.crossing_delta() > 0 { two_move_criterion(d, &after)? } else { two_move_criterion(&after, d)? };
        rc_required = crit.x_equals_y;
        rrc_required = !crit.a_equals_c;
    }
    let mut problems = Vec::new();
    if ac0 != ac1 {
        problems.push(format!("AC {ac0} -> {ac1}"));
    }
    if rc_required && rc0 != rc1 {
        problems.push(format!("RC_ab {rc0} -> {rc1}"));
    }
    if rrc_required && rrc0 != rrc1 {
        problems.push(format!("RRC_ab {rrc0} -> {rrc1}"));
    }
    if let Some([b, a]) = &case.expect_rc {
        if (b, a) != (&rc0, &rc1) {
            problems.push(format!("RC_ab {rc0} -> {rc1}, expected {b} -> {a}"));
        }
    }
    if let Some([b, a]) = &case.expect_rrc {
        if (b, a) != (&rrc0, &rrc1) {
            problems.push(format!("RRC_ab {rrc0} -> {rrc1}, expected {b} -> {a}"));
        }
    }
    if let Some(r) = &case.result {
        if !same_layout(r, &after) {
            problems.push("result differs from the expected diagram".into());
        }
    }
    let mut notes = Vec::new();
    if rc0 != rc1 {
        notes.push(format!("RC_ab {rc0} -> {rc1}"));
    }
    if rrc0 != rrc1 {
        notes.push(format!("RRC_ab {rrc0} -> {rrc1}"));
    }
    let detail = if !problems.is_empty() {
        problems.join("; ")
    } else if notes.is_empty() {
        "invariant".to_string()
    } else {
        format!("{} (permitted by the Ω2 criterion)", notes.join(", "))
    };
    Ok(Verdict::new(&case.label, Status::resolve(problems.is_empty(), false), detail)
        .with("move", case.mv.describe(d))
        .with("rc", format!("{rc0} -> {rc1}"))
        .with("rrc", format!("{rrc0} -> {rrc1}")))
}

/// Runs one named suite, or all of them for `"all"`.
pub fn run_suite(corpus: &Corpus, suite: &str) -> Result<Vec<CheckReport>> {
    if suite == "all" {
        return SUITES.iter().map(|s| run_suite(corpus, s).map(|mut r| r.remove(0))).collect();
    }
    let report = match suite {
        "expectations" => check_expectations(corpus),
        "free-split" => check_free_split(corpus),
        "split-union" => check_split_union(corpus),
        "two-rank" => check_two_rank(corpus),
        "core-functor" => check_core_functor(corpus),
        "goeritz" => check_goeritz(corpus),
        "dehn-wirtinger" => check_dehn_wirtinger(corpus),
        "surfaces" => check_surfaces(corpus),
        "moves" => {
            let mut cases = corpus_move_cases(corpus)?;
            cases.extend(random_move_cases(corpus, RANDOM_MOVES, RANDOM_SEED));
            check_move_invariance(&cases)
        }
        other => {
            return Err(Error::InvalidArg(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    Ok(vec![report])
}
