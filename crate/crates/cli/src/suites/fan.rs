//! Linearity-domain structure: rank-2 cone enumeration, the propagation
//! property of shared domains, and the invariants of the reparametrization maps.

use qcanon_core::algebra::Algebra;
use qcanon_core::tropical::{
    images_all, rank2_fan, reparametrize_along, same_linearity_domain, samedomain_triple_check,
    ParamVector,
};
use qcanon_core::weyl::{reduced_words_w0, Word};
use qcanon_core::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::{Case, Report};

/// Entry bound of the exhaustive invariant sweep at each rank.
pub fn invariant_box(rank: usize) -> i64 {
    match rank {
        0..=2 => 5,
        3 => 3,
        _ => 1,
    }
}

fn box_points(len: usize, max: i64) -> Vec<ParamVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(ParamVector).collect()
}

#[derive(Default)]
struct Tally {
    points: usize,
    involution: usize,
    path_independence: usize,
    weight: usize,
    homogeneity: usize,
    nonnegativity: usize,
    first: Option<serde_json::Value>,
}

impl Tally {
    fn fail(&mut self, which: &str, m: &ParamVector, detail: serde_json::Value) {
        match which {
            "involution" => self.involution += 1,
            "path_independence" => self.path_independence += 1,
            "weight" => self.weight += 1,
            "homogeneity" => self.homogeneity += 1,
            _ => self.nonnegativity += 1,
        }
        if self.first.is_none() {
            self.first = Some(json!({ "property": which, "m": m, "detail": detail }));
        }
    }

    fn failures(&self) -> usize {
        self.involution
            + self.path_independence
            + self.weight
            + self.homogeneity
            + self.nonnegativity
    }
}

fn sweep_word(base: &Word, max: i64) -> Result<Case> {
    let words = reduced_words_w0(base.rank())?;
    let base_roots = base.roots()?;
    let mut t = Tally::default();
    for m in box_points(base.len(), max) {
        t.points += 1;
        let imgs = images_all(base, &m)?;
        let wt = m.weight(&base_roots);
        for (u, a) in &imgs {
            if a.weight(&u.roots()?) != wt {
                t.fail("weight", &m, json!({ "word": u, "image": a }));
            }
            if !a.is_nonnegative() {
                t.fail("nonnegativity", &m, json!({ "word": u, "image": a }));
            }
            for (pos, kind, v) in u.braid_moves() {
                let there = reparametrize_along(a, &[(pos, kind, v.clone())]);
                let idx = words.binary_search(&v).expect("moves stay in R(w0)");
                if there != imgs[idx].1 {
                    t.fail(
                        "path_independence",
                        &m,
                        json!({ "from": u, "to": v, "via_move": there, "via_tree": imgs[idx].1 }),
                    );
                }
                let back = reparametrize_along(&there, &[(pos, kind, u.clone())]);
                if back != *a {
                    t.fail(
                        "involution",
                        &m,
                        json!({ "word": u, "position": pos, "back": back }),
                    );
                }
            }
        }
        for s in [2i64, 3] {
            let scaled = images_all(base, &(s * &m))?;
            for ((u, a), (_, b)) in imgs.iter().zip(&scaled) {
                if s * a != *b {
                    t.fail(
                        "homogeneity",
                        &m,
                        json!({ "word": u, "factor": s, "image": b }),
                    );
                }
            }
        }
    }
    let input = json!({ "word": base, "max_entry": max, "points": t.points });
    let witness = json!({
        "involution_failures": t.involution,
        "path_independence_failures": t.path_independence,
        "weight_failures": t.weight,
        "homogeneity_failures": t.homogeneity,
        "nonnegativity_failures": t.nonnegativity,
        "first": t.first,
    });
    Ok(Case::check(
        format!("invariants:{base}"),
        input,
        t.failures() == 0,
        witness,
    ))
}

/// Exhaustive sweep of the reparametrization invariants over `[0, max]^N`, one case per base word.
/// From rank 4 on only the first word serves as a base; every move is still checked.
pub fn tropical_invariants(rank: usize, max: i64) -> Result<Vec<Case>> {
    let words = reduced_words_w0(rank)?;
    let bases = if rank >= 4 { &words[..1] } else { &words[..] };
    bases.par_iter().map(|w| sweep_word(w, max)).collect()
}

/// Parts pairwise sharing a domain with each other and their sum, and a
/// vector sharing a domain with the sum; drawn by rejection.
fn draw_triple(
    rng: &mut ChaCha8Rng,
    base: &Word,
    max: i64,
) -> Result<Option<(Vec<ParamVector>, ParamVector)>> {
    let n = base.len();
    let rand_vec =
        |rng: &mut ChaCha8Rng| ParamVector((0..n).map(|_| rng.gen_range(0..=max)).collect());
    let k = rng.gen_range(2..=3);
    let mut parts = vec![rand_vec(rng)];
    let mut sum = parts[0].clone();
    for _ in 1..k {
        let mut found = None;
        for _ in 0..50 {
            let p = rand_vec(rng);
            let s = &sum + &p;
            let mut ok = same_linearity_domain(base, &p, &s)?;
            for old in &parts {
                ok = ok
                    && same_linearity_domain(base, old, &p)?
                    && same_linearity_domain(base, old, &s)?;
            }
            if ok {
                found = Some((p, s));
                break;
            }
        }
        let Some((p, s)) = found else { return Ok(None) };
        parts.push(p);
        sum = s;
    }
    for _ in 0..50 {
        let q = rand_vec(rng);
        if same_linearity_domain(base, &sum, &q)? {
            return Ok(Some((parts, q)));
        }
    }
    Ok(None)
}

fn triple_case(base: &Word, parts: &[ParamVector], q: &ParamVector) -> Case {
    let input = json!({ "word": base, "parts": parts, "q": q });
    let id = format!("samedomain:{base}:{parts:?}|{q:?}");
    match samedomain_triple_check(base, parts, q) {
        Ok(ok) => Case::check(id, input, ok, json!({ "all_pairs_share_a_domain": ok })),
        Err(e) => Case::error(id, input, &e),
    }
}

/// All precondition-satisfying `(m1, m2; q)` with entries in `[0, max]`.
fn exhaustive_triples(base: &Word, max: i64) -> Result<Vec<(Vec<ParamVector>, ParamVector)>> {
    let pts = box_points(base.len(), max);
    let mut out = Vec::new();
    for a in 0..pts.len() {
        for b in a..pts.len() {
            let s = &pts[a] + &pts[b];
            if !(same_linearity_domain(base, &pts[a], &pts[b])?
                && same_linearity_domain(base, &pts[a], &s)?
                && same_linearity_domain(base, &pts[b], &s)?)
            {
                continue;
            }
            for q in &pts {
                if same_linearity_domain(base, &s, q)? {
                    out.push((vec![pts[a].clone(), pts[b].clone()], q.clone()));
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn run(_alg: &Algebra, cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let words = cfg.words()?;
    if cfg.rank == 2 {
        report.note(
            "rank 2: the linearity domains of each word are enumerated on the box [0, bound]^3",
        );
        for w in &words {
            let fan = rank2_fan(w, cfg.bound as i64)?;
            let input = json!({ "word": w, "bound": cfg.bound });
            let witness = serde_json::to_value(&fan).expect("fan report serializes");
            report.extend([Case::check(
                format!("fan:{w}"),
                input,
                fan.passed,
                witness.clone(),
            )]);
            report.set_data(&format!("fan:{w}"), witness);
        }
    }

    let max = if cfg.rank <= 2 { 2 } else { 3 };
    let mut triples = Vec::new();
    if cfg.exhaustive() {
        report.note(format!("propagation of shared domains: every precondition-satisfying triple with entries <= {max}"));
        for w in &words {
            for (parts, q) in exhaustive_triples(w, max)? {
                triples.push((w.clone(), parts, q));
            }
        }
    } else {
        let want = cfg.samples.unwrap_or(0);
        report.note(format!("propagation of shared domains: {want} seeded triples with entries <= {max}, drawn by rejection"));
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5a4d_0003);
        let mut attempts = 0usize;
        while triples.len() < want && attempts < 100 * want.max(1) {
            attempts += 1;
            let w = &words[rng.gen_range(0..words.len())];
            if let Some((parts, q)) = draw_triple(&mut rng, w, max)? {
                triples.push((w.clone(), parts, q));
            }
        }
        report.set_data("triple_draw_attempts", json!(attempts));
    }
    let cases: Vec<Case> = triples
        .par_iter()
        .map(|(w, parts, q)| triple_case(w, parts, q))
        .collect();
    report.extend(cases);

    let box_max = invariant_box(cfg.rank);
    report.note(format!(
        "reparametrization invariants (involution, path independence, weight, homogeneity, nonnegativity) on every point of [0, {box_max}]^N"
    ));
    report.extend(tropical_invariants(cfg.rank, box_max)?);
    Ok(())
}
