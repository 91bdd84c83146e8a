//! Projective covers, duality, transpose, syzygies, Ext^1 and relative
//! approximations.

use crate::algebra::{unit_vector, Algebra};
use crate::decompose::local_scalar;
use crate::error::{Error, Result};
use crate::matrix::Quotient;
use crate::module::{
    factor_through_source, hom_basis, hom_space, map_between_projectives, map_from_projectives,
    projective, projective_sum, FDModule, HomSpace, ModuleMap,
};

/// Minimal projective cover `P -> M` with the vertex of each summand.
#[derive(Clone, Debug)]
pub struct Cover {
    pub vertices: Vec<usize>,
    pub map: ModuleMap,
}

impl Cover {
    pub fn projective(&self) -> &FDModule {
        self.map.src()
    }
}

/// Top representatives of `M`: one vector per summand of the cover.
fn top_generators(m: &FDModule) -> (Vec<usize>, Vec<Vec<u32>>) {
    let a = m.algebra();
    let p = a.char();
    let rad = m.radical_bases();
    let mut vertices = Vec::new();
    let mut elems = Vec::new();
    for v in 0..a.n_vertices() {
        let n = m.dims()[v];
        let units: Vec<Vec<u32>> = (0..n).map(|i| unit_vector(n, i)).collect();
        let q = Quotient::new(p, n, &rad[v].columns(), &units);
        for &r in q.representatives() {
            vertices.push(v);
            elems.push(units[r].clone());
        }
    }
    (vertices, elems)
}

pub fn projective_cover(m: &FDModule) -> Cover {
    let (vertices, elems) = top_generators(m);
    let pm = projective_sum(m.algebra(), &vertices);
    let map = map_from_projectives(&pm, &vertices, m, &elems);
    Cover { vertices, map }
}

/// First syzygy with its inclusion into the projective cover.
pub fn syzygy(m: &FDModule) -> (FDModule, ModuleMap, Cover) {
    let c = projective_cover(m);
    let (k, incl) = c.map.kernel();
    (k, incl, c)
}

pub fn syzygy_n(m: &FDModule, n: usize) -> FDModule {
    (0..n).fold(m.clone(), |x, _| syzygy(&x).0)
}

/// `D M = Hom_k(M, k)` as a module over the opposite algebra.
pub fn dual(m: &FDModule) -> FDModule {
    let op = m.algebra().opposite();
    let act = (0..op.dim()).map(|b| m.block(b).transpose()).collect();
    let lbl = m.label();
    let d = FDModule::from_parts(&op, m.dims().to_vec(), act);
    if lbl.is_empty() {
        d
    } else {
        d.with_label(format!("D{lbl}"))
    }
}

/// `D f : D N -> D M`, given `D M` and `D N`.
pub fn dual_map(f: &ModuleMap, dm: &FDModule, dn: &FDModule) -> ModuleMap {
    let blocks = f.blocks().iter().map(|b| b.transpose()).collect();
    ModuleMap::from_blocks_unchecked(dn, dm, blocks)
}

/// Indecomposable injective `I(v) = D(A e_v)`.
pub fn injective(alg: &Algebra, v: usize) -> FDModule {
    let op = alg.opposite();
    let d = dual(&projective(&op, v));
    d.with_label(format!("I{}", alg.vertex_name(v)))
}

pub fn injective_sum(alg: &Algebra, vertices: &[usize]) -> FDModule {
    if vertices.is_empty() {
        return FDModule::zero(alg);
    }
    let parts: Vec<FDModule> = vertices.iter().map(|&v| injective(alg, v)).collect();
    FDModule::direct_sum(alg, &parts).0
}

/// Injective envelope `M -> I` with the vertex of each summand.
pub fn injective_envelope(m: &FDModule) -> (Vec<usize>, ModuleMap) {
    let dm = dual(m);
    let c = projective_cover(&dm);
    let dp = dual(c.projective());
    let f = dual_map(&c.map, &dp, &dual(&dm));
    (c.vertices, f.reframe(m, &dp))
}

/// First cosyzygy `I / M`.
pub fn cosyzygy(m: &FDModule) -> (FDModule, ModuleMap) {
    let (_, env) = injective_envelope(m);
    env.cokernel()
}

pub fn is_projective(m: &FDModule) -> bool {
    projective_cover(m).projective().dim() == m.dim()
}

pub fn is_injective(m: &FDModule) -> bool {
    injective_envelope(m).1.tgt().dim() == m.dim()
}

/// Minimal projective presentation `P1 -> P0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub cover: Cover,
    pub p1_vertices: Vec<usize>,
    pub d: ModuleMap,
    /// `elems[j][i]` lies in `e_{v0_j} A e_{v1_i}` (full coordinates).
    pub elems: Vec<Vec<Vec<u32>>>,
}

pub fn minimal_presentation(m: &FDModule) -> Presentation {
    let a = m.algebra();
    let (om, incl, cover) = syzygy(m);
    let c1 = projective_cover(&om);
    let d = incl.compose(&c1.map);
    let (_, gens) = top_generators(&om);
    let v0 = &cover.vertices;
    let mut elems = vec![vec![vec![0u32; a.dim()]; c1.vertices.len()]; v0.len()];
    for (i, (&w, g)) in c1.vertices.iter().zip(&gens).enumerate() {
        let img = incl.block(w).mul_vec(g);
        let mut pos = 0;
        for (j, &v) in v0.iter().enumerate() {
            for &b in a.basis_between(v, w) {
                elems[j][i][b] = img[pos];
                pos += 1;
            }
        }
    }
    Presentation { cover, p1_vertices: c1.vertices, d, elems }
}

/// Auslander-Bridger transpose, a module over the opposite algebra.
pub fn transpose(m: &FDModule) -> FDModule {
    let op = m.algebra().opposite();
    let pr = minimal_presentation(m);
    let v0 = &pr.cover.vertices;
    let v1 = &pr.p1_vertices;
    if v1.is_empty() {
        // Tr of a projective is zero; Hom(P0, A) maps onto itself
        return FDModule::zero(&op);
    }
    let src = projective_sum(&op, v0);
    let tgt = projective_sum(&op, v1);
    // y -> y a_ij in A is left multiplication by a_ij in A^op
    let elems: Vec<Vec<Vec<u32>>> =
        (0..v1.len()).map(|i| (0..v0.len()).map(|j| pr.elems[j][i].clone()).collect()).collect();
    let f = map_between_projectives(&src, v0, &tgt, v1, &elems);
    f.cokernel().0
}

/// AR translate `D Tr M`.
pub fn tau(m: &FDModule) -> FDModule {
    dual(&transpose(m))
}

/// Inverse AR translate `Tr D M`.
pub fn tau_inverse(m: &FDModule) -> FDModule {
    transpose(&dual(m))
}

/// A short exact sequence `0 -> A -f-> B -g-> C -> 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub f: ModuleMap,
    pub g: ModuleMap,
}

impl Ses {
    pub fn left(&self) -> &FDModule {
        self.f.src()
    }
    pub fn middle(&self) -> &FDModule {
        self.f.tgt()
    }
    pub fn right(&self) -> &FDModule {
        self.g.tgt()
    }

    pub fn check(&self) -> Result<()> {
        if !self.f.is_injective() || !self.g.is_surjective() || !self.g.compose(&self.f).is_zero() {
            return Err(Error::Falsified("sequence is not short exact".into()));
        }
        if self.left().dim() + self.right().dim() != self.middle().dim() {
            return Err(Error::Falsified("sequence is not exact in the middle".into()));
        }
        Ok(())
    }

    /// Whether the sequence splits (`g` has a section).
    pub fn splits(&self) -> bool {
        let id = ModuleMap::identity(self.right());
        crate::module::factor_through_target(&id, &self.g).is_some()
    }
}

/// `Ext^1(M, N) = Hom(Omega M, N) / (maps extending to the cover)`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub m: FDModule,
    pub n: FDModule,
    pub omega_incl: ModuleMap,
    pub cover: Cover,
    pub hom: HomSpace,
    quot: Quotient,
}

impl ExtGroup {
    pub fn new(m: &FDModule, n: &FDModule) -> Result<ExtGroup> {
        m.same_algebra(n)?;
        let (om, incl, cover) = syzygy(m);
        let hom = hom_space(&om, n)?;
        let p = m.char();
        let len = om.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
        let sub: Vec<Vec<u32>> =
            hom_basis(cover.projective(), n)?.iter().map(|g| g.compose(&incl).vectorize()).collect();
        let span: Vec<Vec<u32>> = hom.basis.iter().map(|h| h.vectorize()).collect();
        let quot = Quotient::new(p, len, &sub, &span);
        Ok(ExtGroup { m: m.clone(), n: n.clone(), omega_incl: incl, cover, hom, quot })
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    /// Coordinates of the class of `h: Omega M -> N`.
    pub fn class_of(&self, h: &ModuleMap) -> Vec<u32> {
        self.quot.reduce(&h.vectorize()).expect("cocycle lies in Hom(Omega M, N)")
    }

    /// Cocycle representing the class with coordinates `c`.
    pub fn cocycle(&self, c: &[u32]) -> ModuleMap {
        let mut h = ModuleMap::zero(self.omega_incl.src(), &self.n);
        for (&r, &x) in self.quot.representatives().iter().zip(c) {
            if x != 0 {
                h = h.add(&self.hom.basis[r].scale(x));
            }
        }
        h
    }

    /// Pullback of a class along an endomorphism `r` of `M`.
    pub fn pull_back(&self, c: &[u32], r: &ModuleMap) -> Result<Vec<u32>> {
        let cover = &self.cover.map;
        let r0 = crate::module::factor_through_target(&r.compose(cover), cover)
            .ok_or_else(|| Error::Precondition("endomorphism does not lift".into()))?;
        let inner = r0.compose(&self.omega_incl);
        let r1 = crate::module::factor_through_target(&inner, &self.omega_incl)
            .ok_or_else(|| Error::Precondition("lift does not restrict".into()))?;
        Ok(self.class_of(&self.cocycle(c).compose(&r1)))
    }

    /// Pushout of a class along an endomorphism `s` of `N`.
    pub fn push_forward(&self, c: &[u32], s: &ModuleMap) -> Vec<u32> {
        self.class_of(&s.compose(&self.cocycle(c)))
    }

    /// Pushout extension `0 -> N -> E -> M -> 0` for the class `c`.
    pub fn to_ses(&self, c: &[u32]) -> Result<Ses> {
        let h = self.cocycle(c);
        let alg = self.m.algebra();
        let p0 = self.cover.projective().clone();
        let (sum, incls, _) = FDModule::direct_sum(alg, &[self.n.clone(), p0.clone()]);
        // E = (N + P0) / {(h x, -i x)}
        let rel = incls[0].compose(&h).sub(&incls[1].compose(&self.omega_incl));
        let (e, q) = rel.cokernel();
        let f = q.compose(&incls[0]);
        let (_, _, projs) = FDModule::direct_sum(alg, &[self.n.clone(), p0]);
        let to_m = self.cover.map.compose(&projs[1].reframe(&sum, self.cover.projective()));
        let g = factor_through_source(&to_m, &q)
            .ok_or_else(|| Error::Falsified("pushout map does not descend".into()))?;
        let s = Ses { f, g: g.reframe(&e, &self.m) };
        s.check()?;
        Ok(s)
    }
}

pub fn ext_dim(m: &FDModule, n: &FDModule, i: usize) -> Result<usize> {
    if i == 0 {
        return Ok(hom_space(m, n)?.dim());
    }
    Ok(ExtGroup::new(&syzygy_n(m, i - 1), n)?.dim())
}

/// Basis of the radical of `End(x)` for indecomposable `x`.
pub fn radical_endomorphisms(x: &FDModule) -> Result<Vec<ModuleMap>> {
    let id = ModuleMap::identity(x);
    let mut out = Vec::new();
    for h in hom_basis(x, x)? {
        let r = h.sub(&id.scale(local_scalar(&h)));
        if !r.is_zero() {
            out.push(r);
        }
    }
    let idx = crate::module::independent_maps(&out);
    Ok(idx.into_iter().map(|i| out[i].clone()).collect())
}

/// Radical morphisms `x -> y` between entries of a list of pairwise
/// non-isomorphic indecomposables (`same` when `x` and `y` are one entry).
pub fn radical_hom(x: &FDModule, y: &FDModule, same: bool) -> Result<Vec<ModuleMap>> {
    if same {
        radical_endomorphisms(x)
    } else {
        hom_basis(x, y)
    }
}

/// Minimal left approximation of `m` by sums of `targets` (pairwise
/// non-isomorphic indecomposables). Returns the map and, per component,
/// the index of the target it lands in.
pub fn minimal_left_approximation(m: &FDModule, targets: &[FDModule]) -> Result<(ModuleMap, Vec<usize>)> {
    let homs: Vec<Vec<ModuleMap>> = targets.iter().map(|t| hom_basis(m, t)).collect::<Result<_>>()?;
    let mut comps: Vec<(usize, ModuleMap)> = Vec::new();
    for (ti, t) in targets.iter().enumerate() {
        if homs[ti].is_empty() {
            continue;
        }
        let mut sub = Vec::new();
        for (si, s) in targets.iter().enumerate() {
            if homs[si].is_empty() {
                continue;
            }
            for r in radical_hom(s, t, si == ti)? {
                for f in &homs[si] {
                    sub.push(r.compose(f).vectorize());
                }
            }
        }
        let span: Vec<Vec<u32>> = homs[ti].iter().map(|f| f.vectorize()).collect();
        let q = Quotient::new(m.char(), span[0].len(), &sub, &span);
        for &r in q.representatives() {
            comps.push((ti, homs[ti][r].clone()));
        }
    }
    let alg = m.algebra();
    let parts: Vec<FDModule> = comps.iter().map(|(t, _)| targets[*t].clone()).collect();
    if parts.is_empty() {
        return Ok((ModuleMap::zero(m, &FDModule::zero(alg)), Vec::new()));
    }
    let (sum, incls, _) = FDModule::direct_sum(alg, &parts);
    let mut f = ModuleMap::zero(m, &sum);
    for ((_, c), i) in comps.iter().zip(&incls) {
        f = f.add(&i.compose(c));
    }
    Ok((f, comps.into_iter().map(|(t, _)| t).collect()))
}

/// Minimal right approximation of `m` by sums of `sources`.
pub fn minimal_right_approximation(m: &FDModule, sources: &[FDModule]) -> Result<(ModuleMap, Vec<usize>)> {
    let homs: Vec<Vec<ModuleMap>> = sources.iter().map(|s| hom_basis(s, m)).collect::<Result<_>>()?;
    let mut comps: Vec<(usize, ModuleMap)> = Vec::new();
    for (si, s) in sources.iter().enumerate() {
        if homs[si].is_empty() {
            continue;
        }
        let mut sub = Vec::new();
        for (ti, t) in sources.iter().enumerate() {
            if homs[ti].is_empty() {
                continue;
            }
            for r in radical_hom(s, t, si == ti)? {
                for f in &homs[ti] {
                    sub.push(f.compose(&r).vectorize());
                }
            }
        }
        let span: Vec<Vec<u32>> = homs[si].iter().map(|f| f.vectorize()).collect();
        let q = Quotient::new(m.char(), span[0].len(), &sub, &span);
        for &r in q.representatives() {
            comps.push((si, homs[si][r].clone()));
        }
    }
    let alg = m.algebra();
    let parts: Vec<FDModule> = comps.iter().map(|(s, _)| sources[*s].clone()).collect();
    if parts.is_empty() {
        return Ok((ModuleMap::zero(&FDModule::zero(alg), m), Vec::new()));
    }
    let (sum, _, projs) = FDModule::direct_sum(alg, &parts);
    let mut f = ModuleMap::zero(&sum, m);
    for ((_, c), pr) in comps.iter().zip(&projs) {
        f = f.add(&c.compose(pr));
    }
    Ok((f, comps.into_iter().map(|(s, _)| s).collect()))
}

/// Indecomposable projectives of an algebra, one per vertex.
pub fn indecomposable_projectives(alg: &Algebra) -> Vec<FDModule> {
    (0..alg.n_vertices()).map(|v| projective(alg, v)).collect()
}

pub fn indecomposable_injectives(alg: &Algebra) -> Vec<FDModule> {
    (0..alg.n_vertices()).map(|v| injective(alg, v)).collect()
}

/// Cokernel of the minimal left projective approximation (`M -> P`),
/// the projective cosyzygy.
pub fn projective_cosyzygy(m: &FDModule) -> Result<(FDModule, ModuleMap)> {
    let proj = indecomposable_projectives(m.algebra());
    let (f, _) = minimal_left_approximation(m, &proj)?;
    Ok(f.cokernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{is_isomorphic, iso_to_indecomposable};
    use crate::module::tests::{a3, dual_numbers, simple};

    #[test]
    fn injectives_of_a3() {
        let a = a3();
        assert_eq!(injective(&a, 0).dims(), &[1, 0, 0]);
        assert_eq!(injective(&a, 2).dims(), &[1, 1, 1]);
        assert!(is_isomorphic(&injective(&a, 2), &projective(&a, 0)).unwrap());
        assert!(is_injective(&projective(&a, 0)));
        assert!(!is_injective(&projective(&a, 1)));
    }

    #[test]
    fn tau_of_simple_is_projective() {
        let a = a3();
        let t = tau(&simple(&a, 1));
        assert!(iso_to_indecomposable(&t, &projective(&a, 2)).unwrap().is_some());
        let s2 = tau_inverse(&projective(&a, 2));
        assert!(iso_to_indecomposable(&s2, &simple(&a, 1)).unwrap().is_some());
        assert!(tau(&projective(&a, 1)).is_zero());
    }

    #[test]
    fn ext_dimensions() {
        let a = a3();
        let e = ExtGroup::new(&simple(&a, 1), &projective(&a, 2)).unwrap();
        assert_eq!(e.dim(), 1);
        let s = e.to_ses(&[1]).unwrap();
        assert!(!s.splits());
        assert!(is_isomorphic(s.middle(), &projective(&a, 1)).unwrap());
        let d = dual_numbers();
        let k = simple(&d, 0);
        assert_eq!(ExtGroup::new(&k, &k).unwrap().dim(), 1);
        assert_eq!(ext_dim(&k, &k, 3).unwrap(), 1);
        assert_eq!(ext_dim(&projective(&d, 0), &k, 1).unwrap(), 0);
    }

    #[test]
    fn syzygies_and_covers() {
        let a = a3();
        let (om, _, c) = syzygy(&simple(&a, 0));
        assert_eq!(c.vertices, vec![0]);
        assert!(is_isomorphic(&om, &projective(&a, 1)).unwrap());
        let (cz, _) = cosyzygy(&simple(&a, 2));
        assert_eq!(cz.dims(), &[1, 1, 0]);
        // S2 has no nonzero maps to projectives
        assert!(projective_cosyzygy(&simple(&a, 1)).unwrap().0.is_zero());
        let d = dual_numbers();
        let (pc, f) = projective_cosyzygy(&simple(&d, 0)).unwrap();
        assert_eq!(pc.dims(), &[1]);
        assert_eq!(f.src().dims(), &[2]);
    }

    #[test]
    fn double_dual_is_identity() {
        let a = a3();
        let m = projective(&a, 1);
        let dd = dual(&dual(&m));
        assert_eq!(dd.algebra(), m.algebra());
        assert!(ModuleMap::from_blocks(&m, &dd, ModuleMap::identity(&m).blocks().to_vec()).is_ok());
    }
}
