//! Explicit linearity-domain enumeration at rank 2.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{images_all, same_linearity_domain, walls, ParamVector};
use crate::error::{Error, Result};
use crate::weyl::Word;

/// One full-dimensional linearity domain, as a closed cone in the orthant.
#[derive(Clone, Debug, Serialize)]
pub struct Chamber {
    /// Strict sign of `a_k - a_{k+2}` at every (word, wall) pair, in `R(w0)` order.
    pub sign_vector: Vec<i8>,
    /// Inward normals `v` with the closure equal to `{a >= 0 : v.a >= 0}`.
    pub normals: Vec<Vec<i64>>,
    /// Lattice points of the closure inside the sampled box.
    pub closure_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FanReport {
    pub word: Word,
    pub bound: i64,
    pub chambers: Vec<Chamber>,
    /// Every chamber closure is cut out by its base-word wall inequalities.
    pub closures_are_half_spaces: bool,
    /// Every sampled point lies in some closure.
    pub covers_orthant: bool,
    /// Each pairwise intersection is the common wall, a face of both cones.
    pub intersections_are_common_faces: bool,
    /// Points of one closure pairwise share a domain; strict interiors of distinct chambers do not.
    pub consistent_with_domain_test: bool,
    pub passed: bool,
}

fn sign_vector(base: &Word, m: &ParamVector) -> Result<Vec<i8>> {
    let mut out = Vec::new();
    for (w, img) in images_all(base, m)? {
        for k in walls(&w) {
            out.push((img.0[k - 1] - img.0[k + 1]).signum() as i8);
        }
    }
    Ok(out)
}

fn weakly_in(sv: &[i8], chamber: &[i8]) -> bool {
    sv.iter().zip(chamber).all(|(&s, &c)| s == 0 || s == c)
}

fn box_points(len: usize, bound: i64) -> Vec<ParamVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(ParamVector).collect()
}

fn dot(v: &[i64], a: &ParamVector) -> i64 {
    v.iter().zip(&a.0).map(|(x, y)| x * y).sum()
}

/// Enumerates the linearity domains of a rank-2 word on the box `[0, bound]^3`
/// and checks they form a fan: closed half-space cones meeting in a common face.
pub fn rank2_fan(base: &Word, bound: i64) -> Result<FanReport> {
    if base.rank() != 2 || !base.is_reduced_w0() {
        return Err(Error::Precondition(
            "fan enumeration needs a reduced word for w0 at rank 2".into(),
        ));
    }
    if bound < 1 {
        return Err(Error::Precondition("bound must be positive".into()));
    }
    let points = box_points(base.len(), bound);
    let svs: Vec<Vec<i8>> = points
        .iter()
        .map(|p| sign_vector(base, p))
        .collect::<Result<_>>()?;

    // Each regular sign class is convex here, hence connected.
    let mut classes: BTreeMap<Vec<i8>, ()> = BTreeMap::new();
    for sv in &svs {
        if sv.iter().all(|&s| s != 0) {
            classes.insert(sv.clone(), ());
        }
    }
    let base_walls = walls(base);
    let n = base.len();
    let mut chambers = Vec::new();
    let mut closures: Vec<Vec<usize>> = Vec::new();
    let mut half_spaces = true;
    for sv in classes.keys() {
        let closure: Vec<usize> = (0..points.len())
            .filter(|&i| weakly_in(&svs[i], sv))
            .collect();
        // base-word walls come first in the sign vector when base is the least word;
        // recover their signs from any interior point instead of relying on order
        let interior = (0..points.len())
            .find(|&i| &svs[i] == sv)
            .expect("class is nonempty");
        let normals: Vec<Vec<i64>> = base_walls
            .iter()
            .map(|&k| {
                let s = (points[interior].0[k - 1] - points[interior].0[k + 1]).signum();
                let mut v = vec![0; n];
                v[k - 1] = s;
                v[k + 1] = -s;
                v
            })
            .collect();
        let described: Vec<usize> = (0..points.len())
            .filter(|&i| normals.iter().all(|v| dot(v, &points[i]) >= 0))
            .collect();
        half_spaces &= described == closure;
        chambers.push(Chamber {
            sign_vector: sv.clone(),
            normals,
            closure_size: closure.len(),
        });
        closures.push(closure);
    }

    let covers_orthant = (0..points.len()).all(|i| closures.iter().any(|c| c.contains(&i)));

    let mut common_faces = chambers.len() >= 2;
    for a in 0..chambers.len() {
        for b in a + 1..chambers.len() {
            let inter: Vec<usize> = closures[a]
                .iter()
                .copied()
                .filter(|i| closures[b].contains(i))
                .collect();
            // the face of a cut by a supporting hyperplane shared with b: normals opposite
            let shared: Vec<&Vec<i64>> = chambers[a]
                .normals
                .iter()
                .filter(|v| {
                    chambers[b]
                        .normals
                        .iter()
                        .any(|u| u.iter().zip(v.iter()).all(|(x, y)| x == &-y))
                })
                .collect();
            if shared.is_empty() {
                common_faces = false;
                continue;
            }
            let face_a: Vec<usize> = closures[a]
                .iter()
                .copied()
                .filter(|&i| shared.iter().all(|v| dot(v, &points[i]) == 0))
                .collect();
            let face_b: Vec<usize> = closures[b]
                .iter()
                .copied()
                .filter(|&i| shared.iter().all(|v| dot(v, &points[i]) == 0))
                .collect();
            common_faces &= inter == face_a && inter == face_b;
        }
    }

    let mut consistent = true;
    for (ci, closure) in closures.iter().enumerate() {
        for &i in closure {
            for &j in closure {
                if i < j && !same_linearity_domain(base, &points[i], &points[j])? {
                    consistent = false;
                }
            }
        }
        for other in chambers.iter().skip(ci + 1) {
            let pi = (0..points.len())
                .find(|&i| svs[i] == chambers[ci].sign_vector)
                .unwrap();
            let pj = (0..points.len())
                .find(|&i| svs[i] == other.sign_vector)
                .unwrap();
            if same_linearity_domain(base, &points[pi], &points[pj])? {
                consistent = false;
            }
        }
    }

    let passed = chambers.len() == 2 && half_spaces && covers_orthant && common_faces && consistent;
    Ok(FanReport {
        word: base.clone(),
        bound,
        chambers,
        closures_are_half_spaces: half_spaces,
        covers_orthant,
        intersections_are_common_faces: common_faces,
        consistent_with_domain_test: consistent,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_rank2_words_give_two_half_spaces() {
        for letters in [vec![1, 2, 1], vec![2, 1, 2]] {
            let w = Word::new(2, letters).unwrap();
            let r = rank2_fan(&w, 3).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.chambers.len(), 2);
            let mut normals: Vec<_> = r.chambers.iter().map(|c| c.normals.clone()).collect();
            normals.sort();
            assert_eq!(normals, vec![vec![vec![-1, 0, 1]], vec![vec![1, 0, -1]]]);
        }
    }

    #[test]
    fn rejects_other_ranks() {
        let w = Word::seed_w0(3);
        assert!(rank2_fan(&w, 2).is_err());
    }
}
