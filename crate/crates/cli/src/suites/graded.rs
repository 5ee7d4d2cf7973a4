//! Leading terms of products in the dual canonical and dual PBW bases, and
//! the generating relations of the PBW ordering.
//!
//! Checked, with lexicographic order as the verified bound for `m < n`:
//! - `q^{d(m,n)} B(m)^* B(n)^*` is `B(m+n)^*` plus lower terms with Laurent coefficients;
//! - `q^{d(n_k,m)} B(n_k)^* E(m)^*` is `E(n_k+m)^*` plus `q` times a `Z[q]`-combination;
//! - on adapted words, `q^{d(n_k,m)} B(n_k)^* B(m)^*` is `B(n_k+m)^*` plus `q` times lower `Z[q]` terms;
//! - on adapted words, every term `E(m)` of the straightening of
//!   `E_{b_k} E_{b_k'} - q^{(b_k', b_k)} E_{b_k'} E_{b_k}` is lower than
//!   `e_k + e_k'` and `d(n_j, m) <= d(n_j, e_k + e_k')` for all `j`.

use qcanon_core::algebra::{d_form, flag_exponent, psi_product, Algebra};
use qcanon_core::coeff::RationalFunction;
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::{cartan_pairing, is_adapted, Word};
use qcanon_core::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{analogue::pairs, exponents_up_to, select, tr_of};
use crate::config::RunConfig;
use crate::report::{Case, Report};

/// Checks coordinates `c` (indexed by `exps`) against `1` at `lead` and
/// `rest` elsewhere; returns the offending entries.
fn leading_shape(
    exps: &[ParamVector],
    c: &[RationalFunction],
    lead: &ParamVector,
    rest: impl Fn(&RationalFunction) -> bool,
) -> Vec<Value> {
    let mut bad = Vec::new();
    for (m, x) in exps.iter().zip(c) {
        if m == lead {
            if !x.is_one() {
                bad.push(json!({ "at": m, "coefficient": x.to_string() }));
            }
        } else if !x.is_zero() && !(m < lead && rest(x)) {
            bad.push(json!({ "at": m, "coefficient": x.to_string() }));
        }
    }
    bad
}

fn laurent(x: &RationalFunction) -> bool {
    x.as_laurent().is_some()
}

fn in_q_zq(x: &RationalFunction) -> bool {
    x.as_laurent().is_some_and(|p| p.in_q_zq())
}

/// `q^{d(m,n)} B(m)^* B(n)^*` in the dual canonical basis.
fn product_in_dual_canonical(
    alg: &Algebra,
    w: &Word,
    m: &ParamVector,
    n: &ParamVector,
    strict: bool,
) -> Result<Vec<Value>> {
    let x = alg
        .dual_canonical(w, m)?
        .mul(&alg.dual_canonical(w, n)?)?
        .shift(d_form(w, m, n)?);
    let t = alg.table(w, x.weight())?;
    let c = t.dual_canonical_coords(alg, &x)?;
    Ok(leading_shape(
        &t.exponents,
        &c,
        &(m + n),
        if strict { in_q_zq } else { laurent },
    ))
}

/// `q^{d(n_k,m)} B(n_k)^* E(m)^*` in the dual PBW basis.
fn minor_times_dual_pbw(
    alg: &Algebra,
    w: &Word,
    nk: &ParamVector,
    m: &ParamVector,
) -> Result<Vec<Value>> {
    let e = alg.pbw_monomial(w, m)?.scale_laurent(&psi_product(m));
    let x = alg.dual_canonical(w, nk)?.mul(&e)?.shift(d_form(w, nk, m)?);
    let t = alg.table(w, x.weight())?;
    let c = t.dual_pbw_coords(alg, &x)?;
    Ok(leading_shape(&t.exponents, &c, &(nk + m), in_q_zq))
}

/// Straightening of one pair of root vectors, with the two monotonicity checks.
fn relation(
    alg: &Algebra,
    w: &Word,
    k: usize,
    k2: usize,
) -> Result<(Vec<ParamVector>, Vec<Value>)> {
    let rv = alg.root_vectors(w)?;
    let roots = w.roots()?;
    let e = cartan_pairing(&roots[k2 - 1], &roots[k - 1]);
    let x = rv[k - 1]
        .mul(&rv[k2 - 1])?
        .sub(&rv[k2 - 1].mul(&rv[k - 1])?.shift(e))?;
    let support: Vec<ParamVector> = alg.to_pbw(&x, w)?.terms.into_keys().collect();
    let top = &ParamVector::unit(w.len(), k) + &ParamVector::unit(w.len(), k2);
    let mut bad = Vec::new();
    for m in &support {
        if m >= &top {
            bad.push(json!({ "term": m, "not_lower_than": top }));
        }
        for j in 1..=w.len() {
            let nj = flag_exponent(w, j)?;
            let (lo, hi) = (d_form(w, &nj, m)?, d_form(w, &nj, &top)?);
            if lo > hi {
                bad.push(json!({ "term": m, "j": j, "d_term": lo, "d_top": hi }));
            }
        }
    }
    Ok((support, bad))
}

fn case_from(id: String, input: Value, r: Result<Vec<Value>>) -> Case {
    match r {
        Ok(bad) => Case::check(id, input, bad.is_empty(), json!({ "offending_terms": bad })),
        Err(e) => Case::error(id, input, &e),
    }
}

pub(super) fn run(alg: &Algebra, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    report.note("lexicographic order is the verified bound wherever the PBW ordering appears");

    // products of two dual canonical elements
    let items = select(pairs(cfg)?, cfg, 3);
    let cases: Vec<Case> = items
        .par_iter()
        .map(|(w, m, n)| {
            let input = json!({ "check": "dual_canonical_product", "word": w, "m": m, "n": n });
            case_from(
                format!("product:{w}:{m:?}|{n:?}"),
                input,
                product_in_dual_canonical(alg, w, m, n, false),
            )
        })
        .collect();
    report.extend(cases);

    // flag exponents times dual PBW elements, and times dual canonical elements on adapted words
    let mut minor_items = Vec::new();
    for w in cfg.words()? {
        let exps = exponents_up_to(&w, cfg.bound)?;
        for k in 1..=w.len() {
            let nk = flag_exponent(&w, k)?;
            let room = cfg.bound.saturating_sub(tr_of(&w, &nk)?);
            for m in &exps {
                if tr_of(&w, m)? <= room {
                    minor_items.push((w.clone(), k, nk.clone(), m.clone()));
                }
            }
        }
    }
    let items = select(minor_items, cfg, 4);
    let cases: Vec<Case> = items
        .par_iter()
        .flat_map_iter(|(w, k, nk, m)| {
            let input = json!({ "check": "minor_times_dual_pbw", "word": w, "k": k, "m": m });
            let mut out = vec![case_from(
                format!("minor_pbw:{w}:{k}:{m:?}"),
                input,
                minor_times_dual_pbw(alg, w, nk, m),
            )];
            if is_adapted(w) {
                let input =
                    json!({ "check": "minor_times_dual_canonical", "word": w, "k": k, "m": m });
                out.push(case_from(
                    format!("minor_canonical:{w}:{k}:{m:?}"),
                    input,
                    product_in_dual_canonical(alg, w, nk, m, true),
                ));
            }
            out
        })
        .collect();
    report.extend(cases);

    // generating relations of the ordering on adapted words
    let mut rel_items = Vec::new();
    for w in cfg.words()?.into_iter().filter(is_adapted) {
        for k in 1..=w.len() {
            for k2 in k + 1..=w.len() {
                rel_items.push((w.clone(), k, k2));
            }
        }
    }
    let mut relations = Vec::new();
    let cases: Vec<(Case, Option<Value>)> = rel_items
        .par_iter()
        .map(|(w, k, k2)| {
            let input = json!({ "check": "generating_relation", "word": w, "k": k, "k2": k2 });
            let id = format!("relation:{w}:{k},{k2}");
            match relation(alg, w, *k, *k2) {
                Ok((support, bad)) => (
                    Case::check(id, input, bad.is_empty(), json!({ "offending_terms": bad })),
                    Some(json!({ "word": w, "k": k, "k2": k2, "lower_terms": support })),
                ),
                Err(e) => (Case::error(id, input, &e), None),
            }
        })
        .collect();
    let mut rel_cases = Vec::new();
    for (c, r) in cases {
        rel_cases.push(c);
        relations.extend(r);
    }
    report.set_data("generating_relations", json!(relations));
    report.extend(rel_cases);
    Ok(())
}
