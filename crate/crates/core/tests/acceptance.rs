//! Acceptance suite: one PASS/FAIL line per criterion over the whole corpus.
//!
//! Ground truth is recomputed here from first principles (coset scans,
//! distance scans, subset enumeration) rather than taken from the library.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use qleader::corpus::{CorpusEntry, CORPUS};
use qleader::errormodel::{DescentRule, ErrorPartition, LhMinimality};
use qleader::geometry::{Oracle, WordSet};
use qleader::leadercw::LeaderCodewords;
use qleader::*;

struct Built {
    order: WeightCompatibleOrder,
    lc: ListClosure,
    lcw: LeaderCodewords,
    ep: ErrorPartition,
    /// ≺-minimum of every coset, by scanning `y − c`.
    e0: WordSet,
}

struct Case {
    entry: &'static CorpusEntry,
    code: LinearCode,
    by_order: Vec<Built>,
}

impl Case {
    fn load(entry: &'static CorpusEntry) -> Case {
        let code = entry.code().expect("fixture parses");
        let codewords = code.codewords().unwrap();
        let space = code.space();
        let by_order = [TieBreak::Lex, TieBreak::Colex]
            .into_iter()
            .map(|tie| {
                let order = WeightCompatibleOrder::new(space, tie).unwrap();
                let lc = ListClosure::build(&code, &order).unwrap();
                let lcw = LeaderCodewords::extract(&lc).unwrap();
                let ep = ErrorPartition::new(&lc).unwrap();
                let e0 = space
                    .words()
                    .map(|y| {
                        let coset: Vec<Word> = codewords.iter().map(|c| space.sub(&y, c)).collect();
                        order.min(&coset).unwrap().clone()
                    })
                    .collect();
                Built { order, lc, lcw, ep, e0 }
            })
            .collect();
        Case { entry, code, by_order }
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn fmt_set(space: &WordSpace, set: &WordSet) -> String {
    let items: Vec<String> = set.iter().map(|w| space.format_word(w)).collect();
    format!("{{{}}}", items.join(", "))
}

fn near_leaders(oracle: &Oracle) -> (WordSet, WordSet) {
    let leaders = oracle.coset_leaders();
    let near = oracle
        .words()
        .iter()
        .filter(|w| oracle.distance_to_set(w, &leaders).is_some_and(|d| d <= 1))
        .cloned()
        .collect();
    (leaders, near)
}

fn criterion_1(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let (_, near) = near_leaders(&oracle);
        for b in &case.by_order {
            let missing: Vec<_> = near.iter().filter(|w| !b.lc.contains(w)).collect();
            out.check(missing.is_empty(), || {
                format!("{} ({}): {} words within distance 1 missing", case.entry.name, b.order.name(), missing.len())
            });
        }
    }
}

fn criterion_2(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let space = case.code.space();
        let leaders = oracle.coset_leaders();
        for b in &case.by_order {
            let name = case.entry.name;
            out.check(b.lc.coset_leaders() == leaders, || format!("{name} ({}): CL(C) differs", b.order.name()));
            out.check(b.lc.canonical_leaders() == b.e0, || {
                format!(
                    "{name} ({}): canonical leaders {} vs coset minima {}",
                    b.order.name(),
                    fmt_set(space, &b.lc.canonical_leaders()),
                    fmt_set(space, &b.e0)
                )
            });
            let table = b.lc.verify_against_oracle(&oracle).unwrap();
            out.check(table.passed(), || format!("{name} ({}): {table}", b.order.name()));
        }
    }
}

fn criterion_3(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let space = case.code.space();
        let (leaders, _) = near_leaders(&oracle);
        let name = case.entry.name;
        let mut ancestor = 0;
        let mut bound = 0;
        let mut support = 0;
        let mut equality = 0;
        for w in oracle.words() {
            let dist = oracle.distance_to_set(w, &leaders).unwrap();
            if dist > 1 {
                continue;
            }
            for &pos in space.gen_support(w).pairs() {
                let y = space.remove_generator(w, pos).unwrap();
                let wy = space.weight(&y);
                let cw = oracle.coset_weight(&y);
                if dist == 0 && wy > cw + 1 {
                    ancestor += 1;
                }
                if dist == 1 {
                    if wy > cw + 2 {
                        bound += 1;
                    } else if wy == cw + 2 {
                        equality += 1;
                        let coset_leaders = leaders.iter().filter(|l| case.code.contains(&space.sub(l, &y)));
                        let y_nonzero = space.coord_nonzero(&y, pos.coord);
                        let leaders_zero = coset_leaders.into_iter().all(|l| !space.coord_nonzero(l, pos.coord));
                        if !(y_nonzero && leaders_zero) {
                            support += 1;
                        }
                    }
                }
            }
        }
        out.check(ancestor == 0, || format!("{name}: {ancestor} leader decompositions exceed the +1 bound"));
        out.check(bound == 0, || format!("{name}: {bound} decompositions exceed the +2 bound"));
        out.check(support == 0, || {
            format!("{name}: {support} of {equality} equality cases break the support condition")
        });
        // the library's own checks must agree with the scan above
        let lib = &case.by_order[0].lc;
        let lib_ok = lib.verify_ancestor_bound().passed() && lib.verify_descendant_bound(&oracle).passed();
        out.check(lib_ok == (ancestor + bound + support == 0), || format!("{name}: library verdict disagrees"));
    }
}

fn criterion_4(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let space = case.code.space();
        let reference = oracle.leader_codewords();
        for b in &case.by_order {
            let mine = b.lcw.set();
            out.check(mine == reference, || {
                format!(
                    "{} ({}): extracted {} vs brute force {}",
                    case.entry.name,
                    b.order.name(),
                    fmt_set(space, &mine),
                    fmt_set(space, &reference)
                )
            });
        }
        let expected: Option<&[&str]> = match case.entry.name {
            "ternary_2_1" => Some(&["1 1", "2 2"]),
            "rep_3_1" => Some(&["1 1 1"]),
            _ => None,
        };
        if let Some(lits) = expected {
            let want: WordSet = lits.iter().map(|l| space.parse_word(l).unwrap()).collect();
            out.check(reference == want, || format!("{}: expected {}", case.entry.name, fmt_set(space, &want)));
        }
    }
}

fn criterion_5(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let space = case.code.space();
        let name = case.entry.name;
        let (leaders, _) = near_leaders(&oracle);
        let lcw = &case.by_order[0].lcw;
        let l = lcw.set();

        let irreducible = oracle
            .words()
            .iter()
            .filter(|y| !leaders.contains(*y))
            .filter(|y| !l.iter().any(|v| space.weight(&space.sub(y, v)) < space.weight(y)))
            .count();
        out.check(irreducible == 0, || format!("{name}: {irreducible} words neither leaders nor reducible"));

        let rho = oracle.words().iter().map(|y| oracle.coset_weight(y)).max().unwrap();
        let max_w = l.iter().map(|c| space.weight(c)).max().unwrap_or(0);
        out.check(max_w <= 2 * rho + 1, || format!("{name}: weight {max_w} > 2·{rho} + 1"));
        if name == "rep_3_1" {
            out.check(max_w == 3 && rho == 1, || format!("{name}: bound not tight (max {max_w}, ρ {rho})"));
        }

        let zn = oracle.zero_neighbours();
        out.check(l.is_subset(&zn), || format!("{name}: L(C) ⊄ Z(C)"));

        let x0 = oracle.x_operator(&oracle.voronoi(&space.zero()));
        let meeting: WordSet =
            oracle.nonzero_codewords().filter(|w| !x0.is_disjoint(&oracle.voronoi(w))).cloned().collect();
        out.check(meeting.is_subset(&l), || {
            format!("{name}: {} meet X(D(0)) but are not leader codewords", fmt_set(space, &meeting.difference(&l).cloned().collect()))
        });
        out.notes.push(format!("{name}: |L(C)| = {}, |Z(C)| = {}, ρ = {rho}, max weight {max_w}", l.len(), zn.len()));
    }
}

/// `y ∈ E0` iff no element of `t` gives `y − c ≺ y`, with E0 from coset scans.
fn is_trial_by_definition(case: &Case, b: &Built, t: &[Word]) -> bool {
    let space = case.code.space();
    space
        .words()
        .all(|y| b.e0.contains(&y) == !t.iter().any(|c| b.order.less(&space.sub(&y, c), &y)))
}

fn criterion_6(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let space = case.code.space();
        let name = case.entry.name;
        for b in &case.by_order {
            let ord = b.order.name();
            let l = b.lcw.words();
            let check = b.ep.is_trial_set(&l, LhMinimality::Subword1).unwrap();
            out.check(check.definition && check.hitting && check.larger_halves, || {
                format!(
                    "{name} ({ord}): L(C) forms definition {} hitting {} larger halves {}",
                    check.definition, check.hitting, check.larger_halves
                )
            });
            out.check(is_trial_by_definition(case, b, &l), || format!("{name} ({ord}): L(C) fails the definition scan"));

            match b.ep.extract_trial_set(&b.lc, &b.lcw, LhMinimality::Subword1) {
                Err(e) => out.failures.push(format!("{name} ({ord}): extraction: {e}")),
                Ok(ts) => {
                    let inside = ts.members.iter().all(|c| b.lcw.set().contains(c));
                    out.check(inside, || format!("{name} ({ord}): extracted set ⊄ L(C)"));
                    out.check(is_trial_by_definition(case, b, &ts.members), || {
                        format!("{name} ({ord}): extracted set fails the definition scan")
                    });
                    let m1: BTreeSet<&Word> = b.ep.minimal_uncorrectable().iter().collect();
                    for c in &ts.members {
                        let halves = b.ep.larger_halves(c, LhMinimality::Subword1).unwrap();
                        let ok = halves.iter().any(|y| m1.contains(y) && b.e0.contains(&space.sub(y, c)));
                        out.check(ok, || format!("{name} ({ord}): {} lacks a witness", space.format_word(c)));
                    }
                    if name == "ternary_2_1" && ord == "lex" {
                        let w = |s: &str| space.parse_word(s).unwrap();
                        let got: Vec<(Word, Vec<(Word, Word)>)> =
                            ts.members.iter().cloned().zip(ts.provenance.iter().cloned()).collect();
                        let want = vec![(w("1 1"), vec![(w("1 0"), w("0 2"))]), (w("2 2"), vec![(w("2 0"), w("0 1"))])];
                        out.check(got == want, || format!("{name}: extracted set or witnesses differ"));
                    }
                }
            }
        }
    }
}

/// All inclusion-minimal hitting sets of `{H(y) : y ∈ E1}` by scanning every
/// subset of the nonzero codewords.
fn minimal_trial_sets_by_scan(case: &Case, b: &Built) -> Vec<WordSet> {
    let space = case.code.space();
    let nonzero: Vec<Word> = case.code.codewords().unwrap().into_iter().filter(|c| !c.is_zero()).collect();
    assert!(nonzero.len() <= 20, "subset scan gate");
    let family: Vec<u32> = space
        .words()
        .filter(|y| !b.e0.contains(y))
        .map(|y| {
            nonzero
                .iter()
                .enumerate()
                .filter(|(_, c)| b.order.less(&space.sub(&y, c), &y))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let hits = |t: u32| family.iter().all(|&s| s & t != 0);
    (1u32..1 << nonzero.len())
        .filter(|&t| hits(t) && (0..nonzero.len()).filter(|i| t >> i & 1 == 1).all(|i| !hits(t & !(1 << i))))
        .map(|t| (0..nonzero.len()).filter(|i| t >> i & 1 == 1).map(|i| nonzero[i].clone()).collect())
        .collect()
}

fn criterion_7(cases: &[Case], out: &mut Outcome) {
    for case in cases.iter().filter(|c| c.code.codewords().unwrap().len() <= 64) {
        let name = case.entry.name;
        for b in &case.by_order {
            let ord = b.order.name();
            let scanned = minimal_trial_sets_by_scan(case, b);
            let mut lib: Vec<WordSet> =
                b.ep.minimal_trial_sets().unwrap().into_iter().map(|t| t.into_iter().collect()).collect();
            lib.sort();
            let mut sorted = scanned.clone();
            sorted.sort();
            out.check(lib == sorted, || format!("{name} ({ord}): transversal search disagrees with the subset scan"));
            let l = b.lcw.set();
            let outside: Vec<&WordSet> = scanned.iter().filter(|t| !t.is_subset(&l)).collect();
            out.check(outside.is_empty(), || {
                format!(
                    "{name} ({ord}): {} of {} minimal trial sets leave L(C), e.g. {}",
                    outside.len(),
                    scanned.len(),
                    fmt_set(case.code.space(), outside[0])
                )
            });
        }
    }
}

fn criterion_8(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let space = case.code.space();
        let name = case.entry.name;
        let words: Vec<Word> = space.words().collect();
        for b in &case.by_order {
            let ord = b.order.name();
            let mut broken = Vec::new();
            for x in words.iter().filter(|x| !b.e0.contains(*x)) {
                for y in words.iter().filter(|y| b.e0.contains(*y)) {
                    if space.subword1(x, y) {
                        broken.push((x, y));
                    }
                }
            }
            out.check(broken.is_empty(), || {
                format!(
                    "{name} ({ord}): {} pairs x ⊂₁ y with x uncorrectable, y correctable, e.g. {} ⊂₁ {}",
                    broken.len(),
                    space.format_word(broken[0].0),
                    space.format_word(broken[0].1)
                )
            });
            let mut bad = 0;
            let mut total = 0;
            let mut example = String::new();
            for c in case.code.codewords().unwrap().iter().filter(|c| !c.is_zero()) {
                let wc = space.weight(c);
                for u in b.ep.larger_halves(c, LhMinimality::Subword1).unwrap() {
                    total += 1;
                    let wu = space.weight(&u);
                    if wc > 2 * wu || 2 * wu > wc + 2 {
                        bad += 1;
                        if example.is_empty() {
                            example = format!("c = {}, u = {}", space.format_word(c), space.format_word(&u));
                        }
                    }
                }
            }
            out.check(bad == 0, || format!("{name} ({ord}): {bad} of {total} larger halves break the sandwich, e.g. {example}"));
        }
    }
}

fn criterion_9(cases: &[Case], out: &mut Outcome) {
    for case in cases {
        let oracle = Oracle::new(&case.code).unwrap();
        let space = case.code.space();
        let name = case.entry.name;
        for b in &case.by_order {
            let ord = b.order.name();
            let t = b.lcw.words();
            let mut bad = 0;
            for y in oracle.words() {
                let d = b.ep.gradient_decode(y, &t, DescentRule::Steepest);
                let coset: Vec<Word> = oracle.codewords().iter().map(|c| space.sub(y, c)).collect();
                let minimum = b.order.min(&coset).unwrap();
                let ok = d.steps <= oracle.words().len()
                    && &d.residual == minimum
                    && case.code.contains(&d.codeword)
                    && space.distance(y, &d.codeword) == oracle.coset_weight(y);
                if !ok {
                    bad += 1;
                }
            }
            out.check(bad == 0, || format!("{name} ({ord}): {bad} words decode wrongly"));
        }
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cases: Vec<Case> = CORPUS.iter().map(Case::load).collect();
    type Run = fn(&[Case], &mut Outcome);
    let criteria: [(&str, Run); 9] = [
        ("closure completeness", criterion_1),
        ("coset-leader equivalence", criterion_2),
        ("ancestor and descendant weight bounds", criterion_3),
        ("leader codewords vs brute force", criterion_4),
        ("leader codeword properties", criterion_5),
        ("trial sets from leader codewords", criterion_6),
        ("minimal trial sets inside leader codewords", criterion_7),
        ("monotone structure and larger-half sandwich", criterion_8),
        ("decoder soundness", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut out = Outcome::default();
        run(&cases, &mut out);
        let status = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {title}: {status} ({:.2?})", i + 1, t.elapsed());
        for f in &out.failures {
            println!("    {f}");
        }
        for n in &out.notes {
            println!("    note: {n}");
        }
        if !out.failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), started.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
