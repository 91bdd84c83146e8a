//! The Gorenstein projective functors over a stable Auslander algebra,
//! built from the smaller context through Υ.

use crate::artheory::{all_indecomposables, ar_quiver_of, locate_in, subcategory_ar_quiver, ARQuiver, Budget};
use crate::decompose::is_isomorphic;
use crate::error::{Error, Result};
use crate::gorenstein::gprj_indices;
use crate::homological::is_projective;
use crate::module::{hom_basis, FDModule};
use crate::stabfun::{representable, upsilon, AddXContext};

/// Display name of a module over `stable_aus`: `(-,X)` for the functor
/// represented by `X`, `S_X` for its simple top, otherwise its dimension
/// vector.
pub fn functor_name(ctx: &AddXContext, m: &FDModule) -> Result<String> {
    let total: usize = m.dim();
    for (q, &i) in ctx.stable_vertices.iter().enumerate() {
        if total == 1 && m.dims()[q] == 1 {
            return Ok(format!("S_{}", ctx.names[i]));
        }
        if is_projective(m) && is_isomorphic(m, &representable(ctx, &ctx.summands[i])?)? {
            return Ok(format!("(-,{})", ctx.names[i]));
        }
    }
    let parts: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
    Ok(format!("F[{}]", parts.join(",")))
}

/// Fast path and oracle for the Gorenstein projective functors over
/// `stable_aus(X)`, with `Y` the Gorenstein projectives inside `X`.
#[derive(Clone, Debug)]
pub struct FunctorQuivers {
    pub fast: ARQuiver,
    pub oracle: ARQuiver,
    /// Quiver of `stable_aus(Y)` under the same names.
    pub small: ARQuiver,
    /// Indices (in `fast`) of the members not hit by Υ.
    pub outside_image: Vec<usize>,
}

impl FunctorQuivers {
    pub fn agree(&self) -> bool {
        self.fast.same_shape(&self.oracle)
    }

    /// Whether the full subquiver on the Υ images is the quiver of
    /// `stable_aus(Y)`.
    pub fn image_is_small_quiver(&self) -> bool {
        let keep: Vec<usize> = (0..self.fast.nodes.len()).filter(|i| !self.outside_image.contains(i)).collect();
        let sub = induced(&self.fast, &keep);
        sub.same_labels(&self.small)
    }
}

fn induced(q: &ARQuiver, keep: &[usize]) -> ARQuiver {
    let pos = |i: usize| keep.iter().position(|&k| k == i);
    let mut out = ARQuiver {
        nodes: keep.iter().map(|&i| q.nodes[i].clone()).collect(),
        arrows: Vec::new(),
        tau: Vec::new(),
    };
    for a in &q.arrows {
        if let (Some(f), Some(t)) = (pos(a.from), pos(a.to)) {
            out.arrows.push(crate::artheory::ARArrow { from: f, to: t, valuation: a.valuation });
        }
    }
    for l in &q.tau {
        if let (Some(f), Some(t)) = (pos(l.from), pos(l.to)) {
            out.tau.push(crate::artheory::TauLink { from: f, to: t });
        }
    }
    out
}

/// Members of the fast path: Υ of every indecomposable over
/// `stable_aus(Y)`, then `(-,X)` for the non-projective `X` outside `Y`.
pub fn gprj_functor_members(x: &AddXContext, y: &AddXContext, budget: Budget) -> Result<(Vec<FDModule>, Vec<String>, usize)> {
    let small = all_indecomposables(&y.stable_aus, budget)?;
    if !small.closed {
        return Err(Error::Budget(format!("stable_aus(Y): {} modules", small.len())));
    }
    let mut members = Vec::new();
    let mut names = Vec::new();
    for i in small.canonical_order() {
        members.push(upsilon(y, x, &small.modules[i])?);
        names.push(functor_name(y, &small.modules[i])?);
    }
    let hit = members.len();
    for &i in &x.stable_vertices {
        if y.locate(&x.summands[i])?.is_none() {
            members.push(representable(x, &x.summands[i])?);
            names.push(format!("(-,{})", x.names[i]));
        }
    }
    Ok((members, names, hit))
}

fn by_name(q: ARQuiver) -> ARQuiver {
    let mut order: Vec<usize> = (0..q.nodes.len()).collect();
    order.sort_by(|&a, &b| q.nodes[a].name.cmp(&q.nodes[b].name).then(a.cmp(&b)));
    q.reordered(&order)
}

pub fn gprj_functor_quiver(x: &AddXContext, y: &AddXContext, budget: Budget) -> Result<FunctorQuivers> {
    let (members, names, hit) = gprj_functor_members(x, y, budget)?;
    let fast = subcategory_ar_quiver(&members, &names)?;

    let u = all_indecomposables(&x.stable_aus, budget)?;
    if !u.closed {
        return Err(Error::Budget(format!("stable_aus(X): {} modules", u.len())));
    }
    let (g, unsure) = gprj_indices(&u)?;
    if !unsure.is_empty() {
        return Err(Error::Inconclusive(format!("{} functors without a certain verdict", unsure.len())));
    }
    let omembers: Vec<FDModule> = g.iter().map(|&i| u.modules[i].clone()).collect();
    let mut onames = Vec::new();
    for (k, m) in omembers.iter().enumerate() {
        onames.push(match locate_in(&members, m)? {
            Some(j) => names[j].clone(),
            None => format!("?{k}"),
        });
    }
    let oracle = subcategory_ar_quiver(&omembers, &onames)?;

    let su = all_indecomposables(&y.stable_aus, budget)?;
    let mut small = ar_quiver_of(&su)?;
    let order = su.canonical_order();
    for n in small.nodes.iter_mut() {
        n.name = functor_name(y, &su.modules[order[n.id]])?;
    }
    let fast = by_name(fast);
    let outside_image = fast
        .nodes
        .iter()
        .filter(|n| names.iter().position(|x| *x == n.name).is_some_and(|j| j >= hit))
        .map(|n| n.id)
        .collect();
    Ok(FunctorQuivers { fast, oracle: by_name(oracle), small: by_name(small), outside_image })
}

/// `dim Hom(F, G) = dim Hom(Υ F, Υ G)` for all pairs of indecomposables
/// over `stable_aus(Y)`.
pub fn upsilon_preserves_homs(y: &AddXContext, x: &AddXContext, budget: Budget) -> Result<bool> {
    let u = all_indecomposables(&y.stable_aus, budget)?;
    let imgs: Vec<FDModule> = u.modules.iter().map(|m| upsilon(y, x, m)).collect::<Result<_>>()?;
    for i in 0..u.len() {
        for j in 0..u.len() {
            if hom_basis(&u.modules[i], &u.modules[j])?.len() != hom_basis(&imgs[i], &imgs[j])?.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Υ applied to every almost split sequence over `stable_aus(Y)` gives a
/// short exact sequence.
pub fn upsilon_preserves_exactness(y: &AddXContext, x: &AddXContext, budget: Budget) -> Result<bool> {
    let u = all_indecomposables(&y.stable_aus, budget)?;
    for (k, m) in u.modules.iter().enumerate() {
        if u.projective[k] {
            continue;
        }
        let s = crate::artheory::almost_split_sequence(m)?;
        let f = crate::stabfun::upsilon_map(y, x, &s.f)?;
        let g = crate::stabfun::upsilon_map(y, x, &s.g)?;
        let t = crate::homological::Ses { f, g };
        if t.check().is_err() || !t.g.is_surjective() || !t.f.is_injective() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::t2_dual;
    use crate::stabfun::{gprj_context, module_category_context};

    #[test]
    fn t2_dual_functor_quiver() {
        let a = t2_dual();
        let x = module_category_context(&a, Budget::default()).unwrap();
        let y = gprj_context(&a, Budget::default()).unwrap();
        let q = gprj_functor_quiver(&x, &y, Budget::default()).unwrap();
        assert_eq!(q.fast.nodes.len(), 10);
        assert_eq!(q.fast.arrows.len(), 14);
        assert_eq!(q.fast.tau.len(), 3);
        assert!(q.agree());
        assert!(q.image_is_small_quiver());
        assert_eq!(q.outside_image.len(), 4);
        assert!(upsilon_preserves_homs(&y, &x, Budget::default()).unwrap());
        assert!(upsilon_preserves_exactness(&y, &x, Budget::default()).unwrap());
    }
}
