use std::collections::BTreeMap;

use qcanon_core::algebra::{divided_power, weights_up_to, Algebra, WordElt};
use qcanon_core::tropical::{reparametrize_along, ParamVector};
use qcanon_core::weyl::{braid_path, BraidMove, Word};
use qcanon_core::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::{Case, Report};
use crate::suites::Suite;

/// Builds and validates every transition table up to the bound for the
/// selected words. Tables go through the algebra's store, if one is attached.
pub fn cmd_basis(alg: &Algebra, cfg: &RunConfig) -> Result<Report> {
    cfg.validate(alg.caps())?;
    let mut report = Report::new("basis", cfg);
    report.note("each table is checked for a diagonal Gram matrix, a unitriangular bar matrix and qZ[q] transition coefficients");
    let words = cfg.words()?;
    let weights = weights_up_to(cfg.rank, cfg.bound);
    let items: Vec<(&Word, &qcanon_core::weyl::Root)> = words
        .iter()
        .flat_map(|w| weights.iter().map(move |wt| (w, wt)))
        .collect();
    let results: Vec<(Case, Option<usize>)> = items
        .par_iter()
        .map(|&(w, wt)| {
            let input = json!({ "word": w, "weight": wt });
            let id = format!("{w}:{wt:?}");
            let run = || -> Result<(usize, bool)> {
                let t = alg.table(w, wt)?;
                t.validate()?;
                // rank 1: B(m) is the divided power of the generator
                let rank1_ok = cfg.rank != 1
                    || alg.equal(
                        &t.canonical_element(0),
                        &divided_power(&WordElt::generator(1, 1), wt.height() as u32),
                    )?;
                Ok((t.dim(), rank1_ok))
            };
            match run() {
                Ok((dim, ok)) => (Case::check(id, input, ok, json!({ "dim": dim })), Some(dim)),
                Err(e) => (Case::error(id, input, &e), None),
            }
        })
        .collect();
    let mut dims = BTreeMap::new();
    for ((_, wt), (_, d)) in items.iter().zip(&results) {
        if let Some(d) = d {
            dims.entry(format!("{:?}", wt.coords())).or_insert(*d);
        }
    }
    report.set_data("tables", json!(items.len()));
    report.set_data("dimensions", json!(dims));
    report.extend(results.into_iter().map(|(c, _)| c));
    Ok(report)
}

/// Runs one verification suite.
pub fn cmd_verify(alg: &Algebra, suite: Suite, cfg: &RunConfig) -> Result<Report> {
    suite.run(alg, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub position: usize,
    #[serde(rename = "move")]
    pub kind: BraidMove,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub lusztig_parameter: ParamVector,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReparamOutput {
    pub from: Word,
    pub to: Word,
    pub input: ParamVector,
    pub output: ParamVector,
    pub path: Vec<PathStep>,
    /// Parameter over `to` of the dual canonical element `B_from(input)^*`;
    /// `null` when its weight is above the table cap.
    pub cross_check: Option<CrossCheck>,
}

/// `R_from^to(m)`, the move path used, and the algebraic cross-check when the table fits the caps.
pub fn cmd_reparam(
    alg: &Algebra,
    from: &Word,
    to: &Word,
    m: &ParamVector,
) -> Result<ReparamOutput> {
    if from.rank() != to.rank() {
        return Err(Error::RankMismatch(from.rank(), to.rank()));
    }
    if m.len() != from.len() || !m.is_nonnegative() {
        return Err(Error::Precondition(format!(
            "{m:?} is not a parameter for {from}"
        )));
    }
    let path = braid_path(from, to)?;
    let output = reparametrize_along(m, &path);
    let cross_check = match alg.dual_canonical(from, m) {
        Ok(b) => {
            let p = alg.lusztig_parameter(&b, to)?;
            Some(CrossCheck {
                agrees: p == output,
                lusztig_parameter: p,
            })
        }
        Err(Error::Capacity(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ReparamOutput {
        from: from.clone(),
        to: to.clone(),
        input: m.clone(),
        output,
        path: path
            .into_iter()
            .map(|(position, kind, word)| PathStep {
                position,
                kind,
                word,
            })
            .collect(),
        cross_check,
    })
}
