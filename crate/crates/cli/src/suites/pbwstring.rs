//! PBW strings against Lusztig parameters, and the peeling law
//! `delta_{i_1}^{(max)}(E(m)^*) = E(0, m_2, ..., m_N)^*`.

use qcanon_core::algebra::{psi_product, Algebra};
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::Word;
use qcanon_core::Result;
use rayon::prelude::*;
use serde_json::json;

use super::{exponents_up_to, letters, select};
use crate::config::RunConfig;
use crate::report::{Case, Report};

fn eval(alg: &Algebra, w: &Word, m: &ParamVector) -> Result<(bool, serde_json::Value)> {
    let b = alg.dual_canonical(w, m)?;
    let string = alg.pbw_string(&b, w)?;
    let param = alg.lusztig_parameter(&b, w)?;

    // peeling law on the dual PBW element
    let e = alg.pbw_monomial(w, m)?.scale_laurent(&psi_product(m));
    let (peeled, phi) = alg.delta_max(w.letters()[0], &e)?;
    let mut rest = m.clone();
    rest.0[0] = 0;
    let expected = alg
        .pbw_monomial(w, &rest)?
        .scale_laurent(&psi_product(&rest));
    let peel_ok = phi as i64 == m.0[0] && alg.equal(&peeled, &expected)?;

    let ok = string == *m && param == *m && peel_ok;
    Ok((
        ok,
        json!({ "pbw_string": string, "lusztig_parameter": param, "peeling_law": peel_ok }),
    ))
}

pub(super) fn run(alg: &Algebra, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let mut items = Vec::new();
    for w in cfg.words()? {
        for m in exponents_up_to(&w, cfg.bound)? {
            items.push((w.clone(), m));
        }
    }
    let items = select(items, cfg, 1);
    let cases: Vec<Case> = items
        .par_iter()
        .map(|(w, m)| {
            let input = json!({ "word": letters(w), "m": m });
            let id = format!("{w}:{m:?}");
            match eval(alg, w, m) {
                Ok((ok, witness)) => Case::check(id, input, ok, witness),
                Err(e) => Case::error(id, input, &e),
            }
        })
        .collect();
    report.extend(cases);
    Ok(())
}
