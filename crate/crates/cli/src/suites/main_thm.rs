//! Products of `q`-commuting quantum flag minors times `q`-commuting dual
//! canonical elements stay dual canonical up to a power of `q`.

use qcanon_core::algebra::{flag_exponent, Algebra, WordElt};
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::Word;
use qcanon_core::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{exponents_up_to, select, tr_of};
use crate::config::RunConfig;
use crate::report::{Case, Report};

/// Largest number of minors in one product.
pub const MAX_FACTORS: usize = 3;

struct Minor {
    elt: WordElt,
    /// `(word, k)` realizations, first one kept as the name.
    sources: Vec<(Word, usize)>,
    parameter: ParamVector,
}

/// Distinct flag minors `B_i(n_k)^*` over the given adapted words.
fn minor_pool(alg: &Algebra, words: &[Word], base: &Word) -> Result<Vec<Minor>> {
    let mut pool: Vec<Minor> = Vec::new();
    for w in words {
        for k in 1..=w.len() {
            let x = alg.flag_minor(w, k)?;
            let mut found = false;
            for m in pool.iter_mut() {
                if m.elt.weight() == x.weight() && alg.equal(&m.elt, &x)? {
                    m.sources.push((w.clone(), k));
                    found = true;
                    break;
                }
            }
            if !found {
                let parameter = alg.lusztig_parameter(&x, base)?;
                pool.push(Minor {
                    elt: x,
                    sources: vec![(w.clone(), k)],
                    parameter,
                });
            }
        }
    }
    Ok(pool)
}

/// Multisets of at most [`MAX_FACTORS`] pool indices whose members pairwise `q`-commute.
fn commuting_sets(commute: &[Vec<bool>], heights: &[usize], max_height: usize) -> Vec<Vec<usize>> {
    let n = commute.len();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = (0..n).map(|i| (vec![i], heights[i])).collect();
    stack.reverse();
    while let Some((set, h)) = stack.pop() {
        if h > max_height {
            continue;
        }
        if set.len() < MAX_FACTORS {
            let last = *set.last().unwrap();
            for j in (last..n).rev() {
                if set.iter().all(|&i| commute[i][j]) {
                    let mut s = set.clone();
                    s.push(j);
                    stack.push((s, h + heights[j]));
                }
            }
        }
        out.push(set);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn product(pool: &[Minor], set: &[usize]) -> Result<WordElt> {
    let mut c = pool[set[0]].elt.clone();
    for &i in &set[1..] {
        c = c.mul(&pool[i].elt)?;
    }
    Ok(c)
}

pub(super) fn run(alg: &Algebra, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let words = cfg.adapted_words()?;
    let base = words[0].clone();
    report.note(format!("products of at most {MAX_FACTORS} flag minors (repeats allowed); the theorem covers any number"));
    report.note(format!(
        "dual canonical elements b are parametrized over {base}"
    ));

    let pool = minor_pool(alg, &words, &base)?;
    let heights: Vec<usize> = pool.iter().map(|m| m.elt.tr()).collect();
    let mut commute = vec![vec![false; pool.len()]; pool.len()];
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let c = alg.q_commutation(&pool[i].elt, &pool[j].elt)?.is_some();
            commute[i][j] = c;
            commute[j][i] = c;
        }
    }
    report.set_data(
        "flag_minors",
        json!(pool
            .iter()
            .map(|m| json!({
                "sources": m.sources.iter().map(|(w, k)| json!({ "word": w, "k": k, "n_k": flag_exponent(w, *k).ok() })).collect::<Vec<_>>(),
                "weight": m.elt.weight(),
                "parameter": m.parameter,
            }))
            .collect::<Vec<_>>()),
    );
    if cfg.word == crate::config::WordSel::All {
        // every nontrivial flag minor of SL_{n+1} (row set I != {1..k}, |I| = k) is realized
        let expected = (1usize << (cfg.rank + 1)) - cfg.rank - 2;
        report.extend([Case::check(
            "flag_minor_count",
            json!({ "rank": cfg.rank }),
            pool.len() == expected,
            json!({ "distinct_minors": pool.len(), "expected": expected }),
        )]);
    }

    let sets = commuting_sets(&commute, &heights, cfg.bound.saturating_sub(1));
    let products: Vec<Result<WordElt>> = sets.par_iter().map(|s| product(&pool, s)).collect();
    let mut set_cases = Vec::new();
    let mut usable = Vec::new();
    for (s, c) in sets.iter().zip(products) {
        let input = json!({ "check": "minor_product", "minors": s });
        let id = format!("product:{s:?}");
        let expected = s.iter().fold(ParamVector::zero(base.len()), |acc, &i| {
            &acc + &pool[i].parameter
        });
        match c.and_then(|c| alg.is_dual_canonical(&c, &base, false).map(|r| (c, r))) {
            Ok((c, r)) => {
                let ok = r.as_ref().is_some_and(|(p, _)| *p == expected);
                set_cases.push(Case::check(
                    id,
                    input,
                    ok,
                    json!({ "found": r.map(|(p, k)| json!([p, k])), "expected": expected }),
                ));
                if ok {
                    usable.push((s.clone(), c, expected));
                }
            }
            Err(e) => set_cases.push(Case::error(id, input, &e)),
        }
    }
    report.extend(set_cases);

    let exps = exponents_up_to(&base, cfg.bound)?;
    let mut candidates = Vec::new();
    for (u, (_, c, _)) in usable.iter().enumerate() {
        let room = cfg.bound - c.tr();
        for m in &exps {
            if tr_of(&base, m)? <= room {
                candidates.push((u, m.clone()));
            }
        }
    }
    let candidates = select(candidates, cfg, 5);
    let outcomes: Vec<Option<Case>> = candidates
        .par_iter()
        .map(|(u, m)| {
            let (set, c, pc) = &usable[*u];
            let input = json!({ "check": "minor_product_times_b", "minors": set, "b": m });
            let id = format!("cb:{set:?}|{m:?}");
            let eval = || -> Result<Option<(bool, Value)>> {
                let b = alg.dual_canonical(&base, m)?;
                let Some(n) = alg.q_commutation(c, &b)? else { return Ok(None) };
                let found = alg.is_dual_canonical(&c.mul(&b)?, &base, false)?;
                let expected = pc + m;
                let ok = found.as_ref().is_some_and(|(p, _)| *p == expected);
                Ok(Some((ok, json!({ "q_commutation": n, "found": found.map(|(p, k)| json!([p, k])), "expected": expected }))))
            };
            match eval() {
                Ok(None) => None,
                Ok(Some((ok, witness))) => Some(Case::check(id, input, ok, witness)),
                Err(e) => Some(Case::error(id, input, &e)),
            }
        })
        .collect();
    let examined = outcomes.len();
    let cases: Vec<Case> = outcomes.into_iter().flatten().collect();
    report.set_data("minor_sets", json!(sets.len()));
    report.set_data("pairs_examined", json!(examined));
    report.set_data("pairs_not_q_commuting", json!(examined - cases.len()));
    report.extend(cases);
    Ok(())
}
