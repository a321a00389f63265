//! The full verification suite over one code, in a fixed order.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::errormodel::{DescentRule, ErrorPartition, LhMinimality};
use crate::geometry::{Oracle, VoronoiRule};
use crate::leadercw::LeaderCodewords;
use crate::leaderset::{Criterion3Scope, ListClosure};
use crate::report::Report;
use crate::wordspace::{check_subword_implies_less, TieBreak, WeightCompatibleOrder, WordSpace};
use crate::Limits;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub tie: TieBreak,
    pub limits: Limits,
    pub voronoi: VoronoiRule,
    pub lh: LhMinimality,
    pub scope: Criterion3Scope,
    pub descent: DescentRule,
}

/// Totality, weight compatibility and `a ⊂ b ⇒ a ≺ b` over every standard
/// word of the space.
pub fn verify_order_axioms(order: &WeightCompatibleOrder, space: &WordSpace, limits: &Limits) -> Result<Report> {
    space.check_enumerable(limits)?;
    limits.check("ordered pairs", space.size() * space.size())?;
    let mut report = Report::new(format!("order `{}` axioms", order.name()));
    let words: Vec<_> = space.words().collect();
    for x in &words {
        for y in &words {
            report.checked += 1;
            let xy = order.compare(x, y);
            if xy != order.compare(y, x).reverse() || (xy.is_eq() != (x == y)) {
                report.violation(format!("not total at {}, {}", space.format_word(x), space.format_word(y)));
            }
            if space.weight(x) < space.weight(y) && !xy.is_lt() {
                report.violation(format!(
                    "{} is lighter but not smaller than {}",
                    space.format_word(x),
                    space.format_word(y)
                ));
            }
        }
    }
    if !check_subword_implies_less(order, space, limits)? {
        report.violation("some a ⊂ b is not below b");
    }
    Ok(report)
}

/// Runs every check and returns one report per step:
/// field axioms, order axioms, ancestor bound, descendant bound, completeness,
/// leader codewords vs brute force, the four leader-codeword properties,
/// monotone structure, the trial-set forms on `L(C)` and on the extracted set,
/// the larger-half sandwich, and the decoder.
pub fn run_all(code: &LinearCode, opts: &VerifyOptions) -> Result<Vec<Report>> {
    let code = code.clone().with_limits(opts.limits);
    let space = code.space();
    let order = WeightCompatibleOrder::new(space, opts.tie.clone())?;
    let oracle = Oracle::new(&code)?.with_rule(opts.voronoi);
    let lc = ListClosure::build_with(&code, &order, opts.scope)?;
    let lcw = LeaderCodewords::extract(&lc)?;
    let ep = ErrorPartition::new(&lc)?;

    let mut reports = vec![
        space.field().verify_axioms(),
        verify_order_axioms(&order, space, &opts.limits)?,
        lc.verify_ancestor_bound(),
        lc.verify_descendant_bound(&oracle),
        lc.verify_completeness(&oracle),
    ];

    let mut equivalence = lcw.verify_against_oracle(&oracle);
    equivalence.absorb(lcw.verify_witnesses(&lc));
    reports.push(equivalence);

    let mut properties = Report::new("leader codeword properties");
    properties.absorb(lcw.verify_test_set(&oracle));
    properties.absorb(lcw.verify_weight_bound(&lc)?);
    properties.absorb(lcw.verify_zero_neighbour_props(&oracle));
    properties.finding(format!("closed under negation: {}", lcw.closed_under_negation(&code)));
    reports.push(properties);

    reports.push(ep.verify_monotone_structure());

    let mut on_leaders = ep.is_trial_set(&lcw.words(), opts.lh)?.report;
    on_leaders.name = "trial-set forms on leader codewords".into();
    reports.push(on_leaders);

    let mut extracted = Report::new("extracted trial set");
    match ep.extract_trial_set(&lc, &lcw, opts.lh) {
        Ok(ts) => {
            extracted.checked = ts.members.len();
            extracted.finding(format!("{} elements", ts.members.len()));
        }
        Err(Error::Verification(msg)) => extracted.violation(msg),
        Err(e) => return Err(e),
    }
    reports.push(extracted);

    reports.push(ep.verify_larger_half_sandwich(opts.lh)?);
    reports.push(ep.verify_decoder(&lcw.words(), opts.descent));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_codes_pass_everything() {
        for text in ["p 3\nm 1\nn 2\nk 1\nG\n1 1\n", "p 2\nm 1\nn 3\nk 1\nG\n1 1 1\n"] {
            let code = LinearCode::parse(text).unwrap();
            let reports = run_all(&code, &VerifyOptions::default()).unwrap();
            assert_eq!(reports.len(), 12);
            for r in &reports {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn bound_is_reported() {
        let code = LinearCode::parse("p 2\nm 1\nn 3\nk 1\nG\n1 1 1\n").unwrap();
        let opts = VerifyOptions { limits: Limits::new(4), ..VerifyOptions::default() };
        assert!(matches!(run_all(&code, &opts), Err(Error::Bound { .. })));
    }

    #[test]
    fn order_axioms_for_lex_and_colex() {
        let code = LinearCode::parse("p 3\nm 1\nn 3\nk 1\nG\n1 1 1\n").unwrap();
        for tie in [TieBreak::Lex, TieBreak::Colex] {
            let order = WeightCompatibleOrder::new(code.space(), tie).unwrap();
            assert!(verify_order_axioms(&order, code.space(), &Limits::default()).unwrap().passed());
        }
    }
}
