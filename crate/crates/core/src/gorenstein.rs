//! Gorenstein projective modules and self-injective dimension.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::artheory::{locate_in, socle_extension, Budget, IndecUniverse};
use crate::decompose::split_summands;
use crate::error::{Error, Result};
use crate::homological::{
    cosyzygy, indecomposable_projectives, injective, is_injective, is_projective, projective_cosyzygy, syzygy,
    syzygy_n, tau, transpose, ExtGroup,
};
use crate::module::{projective, FDModule};

/// Depth used when no self-injective dimension bound is known.
pub const FALLBACK_DEPTH: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Gprj,
    NotGprj,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GprjReport {
    pub verdict: Verdict,
    pub checked_depth: usize,
    /// Whether the verdict is certain (depth covers the Gorenstein bound).
    pub exact: bool,
    /// First Ext index with a nonzero group, and on which side.
    pub witness: Option<(usize, Side)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Module,
    Transpose,
}

fn ext_into_regular_vanishes(m: &FDModule, i: usize) -> Result<bool> {
    let om = syzygy_n(m, i - 1);
    if om.is_zero() {
        return Ok(true);
    }
    for p in indecomposable_projectives(m.algebra()) {
        if ExtGroup::new(&om, &p)?.dim() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Auslander-Bridger test: `Ext^i(M, A) = 0` and `Ext^i(Tr M, A^op) = 0`
/// for `1 <= i <= depth`. With `gorenstein_dim = Some(d)` and
/// `d <= depth` the verdict is exact.
pub fn is_gorenstein_projective(m: &FDModule, depth: usize, gorenstein_dim: Option<usize>) -> Result<GprjReport> {
    let exact = gorenstein_dim.is_some_and(|d| d <= depth);
    if is_projective(m) {
        return Ok(GprjReport { verdict: Verdict::Gprj, checked_depth: 0, exact: true, witness: None });
    }
    let tr = transpose(m);
    for i in 1..=depth {
        if !ext_into_regular_vanishes(m, i)? {
            return Ok(GprjReport {
                verdict: Verdict::NotGprj,
                checked_depth: i,
                exact: true,
                witness: Some((i, Side::Module)),
            });
        }
        if !ext_into_regular_vanishes(&tr, i)? {
            return Ok(GprjReport {
                verdict: Verdict::NotGprj,
                checked_depth: i,
                exact: true,
                witness: Some((i, Side::Transpose)),
            });
        }
    }
    Ok(GprjReport { verdict: Verdict::Gprj, checked_depth: depth, exact, witness: None })
}

/// Injective dimension of `m`, if at most `cap`.
pub fn injective_dimension(m: &FDModule, cap: usize) -> Option<usize> {
    let mut x = m.clone();
    for d in 0..=cap {
        if x.is_zero() || is_injective(&x) {
            return Some(d);
        }
        x = cosyzygy(&x).0;
    }
    None
}

fn regular_injective_dimension(alg: &Algebra, cap: usize) -> Option<usize> {
    let mut best = 0;
    for p in indecomposable_projectives(alg) {
        best = best.max(injective_dimension(&p, cap)?);
    }
    Some(best)
}

/// Injective dimension of the regular module on both sides (the larger),
/// or `None` when either exceeds `cap`.
pub fn selfinjective_dimension(alg: &Algebra, cap: usize) -> Option<usize> {
    let r = regular_injective_dimension(alg, cap)?;
    let l = regular_injective_dimension(&alg.opposite(), cap)?;
    Some(r.max(l))
}

/// Indices of the Gorenstein projective members of a closed universe,
/// and of members with an inconclusive verdict.
pub fn gprj_indices(u: &IndecUniverse) -> Result<(Vec<usize>, Vec<usize>)> {
    let d = selfinjective_dimension(&u.algebra, FALLBACK_DEPTH);
    let depth = d.unwrap_or(FALLBACK_DEPTH).max(1);
    let mut yes = Vec::new();
    let mut unsure = Vec::new();
    for i in u.canonical_order() {
        let r = is_gorenstein_projective(&u.modules[i], depth, d)?;
        match (r.verdict, r.exact) {
            (Verdict::Gprj, true) => yes.push(i),
            (Verdict::Gprj, false) | (Verdict::Inconclusive, _) => unsure.push(i),
            (Verdict::NotGprj, _) => {}
        }
    }
    Ok((yes, unsure))
}

/// Gorenstein projective indecomposables found by knitting inside the
/// subcategory, for algebras whose module category is too large to
/// enumerate. Starts from the projectives and `Omega^d` of simples and
/// injectives, and closes under `Omega`, projective cosyzygies, the
/// translate `Omega^d tau Omega^-d` and middles of the socle extensions. The
/// result is certified by the caller (for instance by
/// `subcategory_ar_quiver`, which rejects a list not closed under the
/// relative translate).
pub fn knit_gprj(alg: &Algebra, budget: Budget) -> Result<Vec<FDModule>> {
    let d = selfinjective_dimension(alg, FALLBACK_DEPTH)
        .ok_or_else(|| Error::Precondition("self-injective dimension not established".into()))?;
    let mut members: Vec<FDModule> = Vec::new();
    let push = |members: &mut Vec<FDModule>, m: &FDModule| -> Result<()> {
        for s in split_summands(m)? {
            if locate_in(members, &s.module)?.is_none() {
                members.push(s.module);
            }
        }
        Ok(())
    };
    for q in indecomposable_projectives(alg) {
        push(&mut members, &q)?;
    }
    for v in 0..alg.n_vertices() {
        let s = simple_module(alg, v);
        push(&mut members, &syzygy_n(&s, d))?;
        push(&mut members, &syzygy_n(&injective(alg, v), d))?;
    }
    let mut i = 0;
    while i < members.len() {
        if members.len() > budget.max_count || members.iter().any(|m| m.dim() > budget.max_dim) {
            return Err(Error::Budget(format!("knitting stopped after {} modules", members.len())));
        }
        let g = members[i].clone();
        i += 1;
        if is_projective(&g) {
            continue;
        }
        push(&mut members, &syzygy(&g).0)?;
        push(&mut members, &projective_cosyzygy(&g)?.0)?;
        let mut shifted = g.clone();
        for _ in 0..d {
            shifted = projective_cosyzygy(&shifted)?.0;
        }
        let t = non_projective_part(&syzygy_n(&tau(&shifted), d))?;
        if t.is_zero() {
            return Err(Error::Falsified("relative translate vanishes".into()));
        }
        push(&mut members, &t)?;
        let seq = socle_extension(&g, &t)?;
        push(&mut members, seq.middle())?;
    }
    Ok(members)
}

fn non_projective_part(m: &FDModule) -> Result<FDModule> {
    let parts: Vec<FDModule> =
        split_summands(m)?.into_iter().map(|s| s.module).filter(|s| !is_projective(s)).collect();
    Ok(if parts.is_empty() { FDModule::zero(m.algebra()) } else { FDModule::sum(&parts) })
}

fn simple_module(alg: &Algebra, v: usize) -> FDModule {
    let p = projective(alg, v);
    p.quotient(&p.radical_bases()).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::{all_indecomposables, Budget};
    use crate::module::tests::{a3, dual_numbers, t2_dual, simple};

    #[test]
    fn dimensions() {
        assert_eq!(selfinjective_dimension(&dual_numbers(), 5), Some(0));
        assert_eq!(selfinjective_dimension(&a3(), 5), Some(1));
    }

    #[test]
    fn gprj_over_small_algebras() {
        let a = a3();
        let u = all_indecomposables(&a, Budget::default()).unwrap();
        let (g, unsure) = gprj_indices(&u).unwrap();
        assert!(unsure.is_empty());
        assert_eq!(g.len(), 3);
        assert!(g.iter().all(|&i| u.projective[i]));
        let d = dual_numbers();
        let r = is_gorenstein_projective(&simple(&d, 0), 3, Some(0)).unwrap();
        assert_eq!(r.verdict, Verdict::Gprj);
        assert!(r.exact);
    }

    #[test]
    fn knitting_matches_filtering() {
        use crate::artheory::subcategory_ar_quiver;
        let a = t2_dual();
        let u = all_indecomposables(&a, Budget::default()).unwrap();
        let (g, _) = gprj_indices(&u).unwrap();
        let knit = knit_gprj(&a, Budget::default()).unwrap();
        assert_eq!(knit.len(), g.len());
        for &i in &g {
            assert!(locate_in(&knit, &u.modules[i]).unwrap().is_some());
        }
        let names: Vec<String> = (0..knit.len()).map(|i| format!("G{i}")).collect();
        let q = subcategory_ar_quiver(&knit, &names).unwrap();
        assert_eq!(q.nodes.len(), 5);
    }
}
