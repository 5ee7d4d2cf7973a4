//! Pairs of dual canonical elements: `q`-commuting pairs must have parameters
//! in one linearity domain, and multiplicative pairs must `q`-commute.

use qcanon_core::algebra::Algebra;
use qcanon_core::tropical::{same_linearity_domain_report, ParamVector};
use qcanon_core::weyl::Word;
use qcanon_core::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{exponents_up_to, select, tr_of};
use crate::config::RunConfig;
use crate::report::{Case, Report};

struct Outcome {
    case: Case,
    q_commute: Option<i64>,
    same_domain: bool,
    multiplicative: bool,
}

fn eval(
    alg: &Algebra,
    w: &Word,
    m: &ParamVector,
    n: &ParamVector,
) -> Result<(Option<i64>, bool, Option<Value>, Value)> {
    let b = alg.dual_canonical(w, m)?;
    let c = alg.dual_canonical(w, n)?;
    let qc = alg.q_commutation(&b, &c)?;
    let dom = same_linearity_domain_report(w, m, n)?;
    let product = alg.is_dual_canonical(&b.mul(&c)?, w, false)?;
    let witness = json!({
        "q_commutation": qc,
        "domain": dom,
        "product_parameter": product.as_ref().map(|(p, k)| json!({ "m": p, "q_power": k })),
    });
    let mult = product.map(|(p, _)| json!(p));
    Ok((qc, dom.verdict, mult, witness))
}

/// Ordered pairs `m <= n` over each word with `tr(m) + tr(n) <= bound`.
pub(super) fn pairs(cfg: &RunConfig) -> Result<Vec<(Word, ParamVector, ParamVector)>> {
    let mut out = Vec::new();
    for w in cfg.words()? {
        let exps = exponents_up_to(&w, cfg.bound)?;
        let trs: Vec<usize> = exps.iter().map(|m| tr_of(&w, m)).collect::<Result<_>>()?;
        for a in 0..exps.len() {
            for b in a..exps.len() {
                if trs[a] + trs[b] <= cfg.bound {
                    out.push((w.clone(), exps[a].clone(), exps[b].clone()));
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn run(alg: &Algebra, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    report.note("asserted: q-commuting pairs share a linearity domain, by both characterizations, which must agree");
    report.note("asserted: a product that is dual canonical up to a power of q comes from a q-commuting pair");
    report.note("data only: pairs that share a domain without q-commuting");
    let items = select(pairs(cfg)?, cfg, 2);
    let outcomes: Vec<Outcome> = items
        .par_iter()
        .map(|(w, m, n)| {
            let input = json!({ "word": w, "m": m, "n": n });
            let id = format!("{w}:{m:?}|{n:?}");
            match eval(alg, w, m, n) {
                Ok((qc, same, mult, witness)) => {
                    let ok = (qc.is_none() || same) && (mult.is_none() || qc.is_some());
                    Outcome {
                        case: Case::check(id, input, ok, witness),
                        q_commute: qc,
                        same_domain: same,
                        multiplicative: mult.is_some(),
                    }
                }
                Err(e) => Outcome {
                    case: Case::error(id, input, &e),
                    q_commute: None,
                    same_domain: false,
                    multiplicative: false,
                },
            }
        })
        .collect();

    let q_commuting = outcomes.iter().filter(|o| o.q_commute.is_some()).count();
    let multiplicative = outcomes.iter().filter(|o| o.multiplicative).count();
    let multiplicative_only = outcomes
        .iter()
        .filter(|o| o.multiplicative && o.q_commute.is_none())
        .count();
    let converse: Vec<Value> = outcomes
        .iter()
        .filter(|o| o.case.verdict && o.q_commute.is_none() && o.same_domain)
        .map(|o| o.case.input.clone())
        .collect();
    report.set_data("pairs", json!(outcomes.len()));
    report.set_data("q_commuting_pairs", json!(q_commuting));
    report.set_data("multiplicative_pairs", json!(multiplicative));
    report.set_data(
        "multiplicative_without_q_commuting",
        json!(multiplicative_only),
    );
    report.set_data("same_domain_without_q_commuting", json!(converse));
    report.extend(outcomes.into_iter().map(|o| o.case));
    Ok(())
}
