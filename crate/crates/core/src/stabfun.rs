//! Functors on `add X` as modules over `End(X)` and its stable quotient.
//!
//! Basis convention for `aus = End(X)`: an element going from `s` to `t`
//! is a map `X_t -> X_s`, and `phi * psi = phi o psi`. With this choice
//! the evaluation `Hom(X_-, M)` is a right `aus`-module (`g . phi =
//! g o phi`) and the projective `e_j aus` is `Hom(X_-, X_j)`.

use crate::algebra::{unit_vector, Algebra, Provenance};
use crate::artheory::{all_indecomposables, locate_in, standard_names, Budget, IndecUniverse};
use crate::decompose::{decompose, is_indecomposable};
use crate::error::{Error, Result};
use crate::gorenstein::{gprj_indices, is_gorenstein_projective, selfinjective_dimension, GprjReport, Verdict, FALLBACK_DEPTH};
use crate::homological::{
    indecomposable_projectives, is_projective, minimal_presentation, tau, projective_cover, radical_endomorphisms, Cover,
    syzygy, syzygy_n,
};
use crate::matrix::{Coords, FMatrix, Quotient};
use crate::module::{
    factor_through_source, hom_basis, hom_space, map_between_projectives,
    projective_map_elems, projective_sum, FDModule, HomSpace, ModuleMap,
};

/// `X` given by its indecomposable summands, with `End(X)` and
/// `End(X) / P(X, X)`.
#[derive(Clone, Debug)]
pub struct AddXContext {
    pub algebra: Algebra,
    pub summands: Vec<FDModule>,
    pub names: Vec<String>,
    pub aus: Algebra,
    pub stable_aus: Algebra,
    /// Λ-map `X_t -> X_s` of each basis element `s -> t` of `aus`.
    pub basis_maps: Vec<ModuleMap>,
    /// Spanning set of the ideal of maps factoring through projectives.
    pub projective_ideal: Vec<Vec<u32>>,
    /// Summand index of each vertex of `stable_aus`.
    pub stable_vertices: Vec<usize>,
    /// Self-injective dimension of Λ, if found within the fallback cap.
    pub gorenstein_dim: Option<usize>,
    block_coords: Vec<Option<Coords>>,
}

impl AddXContext {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Index of the summand isomorphic to the indecomposable `m`.
    pub fn locate(&self, m: &FDModule) -> Result<Option<usize>> {
        locate_in(&self.summands, m)
    }

    /// Coordinates in `aus` of a map `X_t -> X_s`, as an element `s -> t`.
    pub fn element(&self, s: usize, t: usize, f: &ModuleMap) -> Vec<u32> {
        let mut v = vec![0u32; self.aus.dim()];
        if let Some(c) = &self.block_coords[s * self.len() + t] {
            let x = c.coords(&f.vectorize()).expect("map between generator summands");
            for (&b, &c) in self.aus.basis_between(s, t).iter().zip(&x) {
                v[b] = c;
            }
        }
        v
    }

    /// Λ-map `X_t -> X_s` of an element `s -> t` of `aus`.
    pub fn element_map(&self, s: usize, t: usize, x: &[u32]) -> ModuleMap {
        let mut f = ModuleMap::zero(&self.summands[t], &self.summands[s]);
        for &b in self.aus.basis_between(s, t) {
            if x[b] != 0 {
                f = f.add(&self.basis_maps[b].scale(x[b]));
            }
        }
        f
    }

    /// `X_{i_1} + ... + X_{i_k}` with inclusions and projections.
    pub fn sum_of(&self, parts: &[usize]) -> (FDModule, Vec<ModuleMap>, Vec<ModuleMap>) {
        let mods: Vec<FDModule> = parts.iter().map(|&i| self.summands[i].clone()).collect();
        FDModule::direct_sum(&self.algebra, &mods)
    }

    /// Stable vertex of a summand, `None` for projective summands.
    pub fn stable_vertex(&self, i: usize) -> Option<usize> {
        self.stable_vertices.iter().position(|&v| v == i)
    }
}

/// Build `End(X)` and its stable quotient from pairwise non-isomorphic
/// indecomposables containing every indecomposable projective.
pub fn build_context(summands: &[FDModule], names: &[String]) -> Result<AddXContext> {
    let Some(first) = summands.first() else {
        return Err(Error::Precondition("no summands".into()));
    };
    let alg = first.algebra().clone();
    let p = alg.char();
    let m = summands.len();
    if names.len() != m {
        return Err(Error::DimensionMismatch("one name per summand".into()));
    }
    for (i, x) in summands.iter().enumerate() {
        x.same_algebra(first)?;
        if !is_indecomposable(x)? {
            return Err(Error::Precondition(format!("{} is not indecomposable", names[i])));
        }
        if locate_in(&summands[..i], x)?.is_some() {
            return Err(Error::Precondition(format!("duplicate summand {}", names[i])));
        }
    }
    for q in indecomposable_projectives(&alg) {
        if locate_in(summands, &q)?.is_none() {
            return Err(Error::Precondition(format!("projective {} missing", q.label())));
        }
    }

    // basis: idempotents first, then radical blocks
    let mut basis_maps = Vec::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut labels = Vec::new();
    for (v, x) in summands.iter().enumerate() {
        basis_maps.push(ModuleMap::identity(x));
        src.push(v);
        tgt.push(v);
        labels.push(format!("e[{}]", names[v]));
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); m * m];
    for s in 0..m {
        blocks[s * m + s].push(s);
        for t in 0..m {
            let maps = if s == t {
                radical_endomorphisms(&summands[s])?
            } else {
                hom_basis(&summands[t], &summands[s])?
            };
            for (k, f) in maps.into_iter().enumerate() {
                blocks[s * m + t].push(basis_maps.len());
                basis_maps.push(f);
                src.push(s);
                tgt.push(t);
                labels.push(format!("{}<{}#{k}", names[s], names[t]));
            }
        }
    }
    let block_coords: Vec<Option<Coords>> = blocks
        .iter()
        .map(|bl| {
            (!bl.is_empty()).then(|| {
                let cols: Vec<Vec<u32>> = bl.iter().map(|&b| basis_maps[b].vectorize()).collect();
                Coords::new(FMatrix::from_columns(p, cols[0].len(), &cols))
            })
        })
        .collect();
    let n = basis_maps.len();
    let local = |s: usize, u: usize, f: &ModuleMap| -> Vec<(usize, u32)> {
        let bl = &blocks[s * m + u];
        match &block_coords[s * m + u] {
            None => Vec::new(),
            Some(c) => {
                let x = c.coords(&f.vectorize()).expect("composite in its block");
                bl.iter().zip(x).filter(|(_, c)| *c != 0).map(|(&b, c)| (b, c)).collect()
            }
        }
    };
    let mut table = vec![Vec::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            if tgt[a] != src[b] {
                continue;
            }
            let prod = basis_maps[a].compose(&basis_maps[b]);
            table[a * n + b] = local(src[a], tgt[b], &prod);
        }
    }
    let aus = Algebra::from_adapted(
        p,
        labels,
        names.to_vec(),
        (0..m).collect(),
        src,
        tgt,
        table,
        Provenance::Endomorphism { summands: names.to_vec() },
    )?;

    let mut ctx = AddXContext {
        algebra: alg.clone(),
        summands: summands.to_vec(),
        names: names.to_vec(),
        aus: aus.clone(),
        stable_aus: aus.clone(),
        basis_maps,
        projective_ideal: Vec::new(),
        stable_vertices: Vec::new(),
        gorenstein_dim: selfinjective_dimension(&alg, FALLBACK_DEPTH),
        block_coords,
    };
    // P(X, X): maps X_t -> X_s through the projective cover of X_s
    let mut ideal = Vec::new();
    for s in 0..m {
        let cover = projective_cover(&summands[s]);
        for t in 0..m {
            for h in hom_basis(&summands[t], cover.projective())? {
                let f = cover.map.compose(&h);
                if !f.is_zero() {
                    ideal.push(ctx.element(s, t, &f));
                }
            }
        }
    }
    let stable = aus.quotient(&ideal)?;
    ctx.stable_vertices = stable.quotient_data().expect("quotient").vertex_map.clone();
    ctx.stable_aus = stable;
    ctx.projective_ideal = ideal;
    Ok(ctx)
}

/// `Hom(X_-, M)` with the Hom spaces used as vertex bases.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub module: FDModule,
    pub spaces: Vec<HomSpace>,
}

/// Evaluation functor: `M` to the `aus`-module `Hom(X_-, M)`.
pub fn eval(ctx: &AddXContext, m: &FDModule) -> Result<Evaluated> {
    let p = ctx.algebra.char();
    let spaces: Vec<HomSpace> = ctx.summands.iter().map(|x| hom_space(x, m)).collect::<Result<_>>()?;
    let dims: Vec<usize> = spaces.iter().map(|h| h.dim()).collect();
    let act = (0..ctx.aus.dim())
        .map(|b| {
            let (s, t) = (ctx.aus.src(b), ctx.aus.tgt(b));
            let cols: Vec<Vec<u32>> =
                spaces[s].basis.iter().map(|g| spaces[t].coords(&g.compose(&ctx.basis_maps[b]))).collect();
            FMatrix::from_columns(p, dims[t], &cols)
        })
        .collect();
    Ok(Evaluated { module: FDModule::new(&ctx.aus, dims, act)?, spaces })
}

/// `Hom(X_-, f)` between evaluated modules.
pub fn eval_map(f: &ModuleMap, em: &Evaluated, en: &Evaluated) -> Result<ModuleMap> {
    let p = f.src().char();
    let blocks = em
        .spaces
        .iter()
        .zip(&en.spaces)
        .map(|(hm, hn)| {
            let cols: Vec<Vec<u32>> = hm.basis.iter().map(|g| hn.coords(&f.compose(g))).collect();
            FMatrix::from_columns(p, hn.dim(), &cols)
        })
        .collect();
    ModuleMap::from_blocks(&em.module, &en.module, blocks)
}

/// `Hom(X_-, M)` modulo maps factoring through projectives, as a
/// `stable_aus`-module.
#[derive(Clone, Debug)]
pub struct StableEvaluated {
    pub module: FDModule,
    /// Hom spaces at the stable vertices.
    pub spaces: Vec<HomSpace>,
    quot: Vec<Quotient>,
}

impl StableEvaluated {
    /// Coordinates of `g: X_i -> M` (stable vertex `q`) in the module.
    pub fn coords(&self, q: usize, g: &ModuleMap) -> Vec<u32> {
        self.quot[q].reduce(&self.spaces[q].coords(g)).expect("map in Hom space")
    }

    fn rep(&self, q: usize, k: usize) -> &ModuleMap {
        &self.spaces[q].basis[self.quot[q].representatives()[k]]
    }
}

pub fn stable_eval(ctx: &AddXContext, m: &FDModule) -> Result<StableEvaluated> {
    let p = ctx.algebra.char();
    let cover = projective_cover(m);
    let mut spaces = Vec::new();
    let mut quot = Vec::new();
    for &i in &ctx.stable_vertices {
        let x = &ctx.summands[i];
        let hs = hom_space(x, m)?;
        let sub: Vec<Vec<u32>> =
            hom_basis(x, cover.projective())?.iter().map(|h| hs.coords(&cover.map.compose(h))).collect();
        let units: Vec<Vec<u32>> = (0..hs.dim()).map(|k| unit_vector(hs.dim(), k)).collect();
        quot.push(Quotient::new(p, hs.dim(), &sub, &units));
        spaces.push(hs);
    }
    let dims: Vec<usize> = quot.iter().map(|q| q.dim()).collect();
    let sa = &ctx.stable_aus;
    let reps = &sa.quotient_data().expect("stable quotient").reps;
    let mut se = StableEvaluated { module: FDModule::zero(sa), spaces, quot };
    let act = (0..sa.dim())
        .map(|q| {
            let (s, t) = (sa.src(q), sa.tgt(q));
            let phi = &ctx.basis_maps[reps[q]];
            let cols: Vec<Vec<u32>> = (0..dims[s]).map(|k| se.coords(t, &se.rep(s, k).compose(phi))).collect();
            FMatrix::from_columns(p, dims[t], &cols)
        })
        .collect();
    se.module = FDModule::new(sa, dims, act)?;
    Ok(se)
}

/// Map induced by `f` on stable evaluations.
pub fn stable_eval_map(f: &ModuleMap, em: &StableEvaluated, en: &StableEvaluated) -> Result<ModuleMap> {
    let p = f.src().char();
    let blocks = (0..em.spaces.len())
        .map(|q| {
            let cols: Vec<Vec<u32>> =
                (0..em.module.dims()[q]).map(|k| en.coords(q, &f.compose(em.rep(q, k)))).collect();
            FMatrix::from_columns(p, en.module.dims()[q], &cols)
        })
        .collect();
    ModuleMap::from_blocks(&em.module, &en.module, blocks)
}

/// Stable functor `Hom(X_-, M)` modulo projectives (shorthand).
pub fn representable(ctx: &AddXContext, m: &FDModule) -> Result<FDModule> {
    Ok(stable_eval(ctx, m)?.module)
}

/// Restrict an `aus`-module killed by `P(X, X)` to `stable_aus`.
pub fn deflate(ctx: &AddXContext, m: &FDModule) -> Result<FDModule> {
    for x in &ctx.projective_ideal {
        for s in 0..ctx.len() {
            for t in 0..ctx.len() {
                let combo: Vec<(usize, u32)> = ctx
                    .aus
                    .basis_between(s, t)
                    .iter()
                    .filter(|&&b| x[b] != 0)
                    .map(|&b| (b, x[b]))
                    .collect();
                if !combo.is_empty() && !m.combo_block(s, t, &combo).is_zero() {
                    return Err(Error::Precondition("module is not killed by P(X, X)".into()));
                }
            }
        }
    }
    let sa = &ctx.stable_aus;
    let qd = sa.quotient_data().expect("stable quotient");
    let dims: Vec<usize> = qd.vertex_map.iter().map(|&v| m.dims()[v]).collect();
    let act = qd.reps.iter().map(|&r| m.block(r).clone()).collect();
    FDModule::new(sa, dims, act)
}

/// View a `stable_aus`-module as an `aus`-module.
pub fn inflate(ctx: &AddXContext, f: &FDModule) -> Result<FDModule> {
    let p = ctx.algebra.char();
    let a = &ctx.aus;
    let qd = ctx.stable_aus.quotient_data().expect("stable quotient");
    let mut dims = vec![0usize; a.n_vertices()];
    for (q, &v) in qd.vertex_map.iter().enumerate() {
        dims[v] = f.dims()[q];
    }
    let act = (0..a.dim())
        .map(|b| {
            let (s, t) = (a.src(b), a.tgt(b));
            let mut blk = FMatrix::zeros(p, dims[t], dims[s]);
            if dims[s] > 0 && dims[t] > 0 {
                let c = qd.project(&unit_vector(a.dim(), b));
                for (q, &x) in c.iter().enumerate() {
                    if x != 0 {
                        blk.axpy(x, f.block(q));
                    }
                }
            }
            blk
        })
        .collect();
    FDModule::new(a, dims, act)
}

/// Λ-map `X_{src_1} + ... -> X_{tgt_1} + ...` whose component `i -> j`
/// is the element `elems[j][i]` (from `tgt_j` to `src_i` in `aus`).
pub fn yoneda_unmap(
    ctx: &AddXContext,
    src_parts: &[usize],
    tgt_parts: &[usize],
    elems: &[Vec<Vec<u32>>],
) -> ModuleMap {
    let (s, _, sp) = ctx.sum_of(src_parts);
    let (t, ti, _) = ctx.sum_of(tgt_parts);
    let mut f = ModuleMap::zero(&s, &t);
    for (i, &u) in src_parts.iter().enumerate() {
        for (j, &w) in tgt_parts.iter().enumerate() {
            let c = ctx.element_map(w, u, &elems[j][i]);
            if !c.is_zero() {
                f = f.add(&ti[j].compose(&c).compose(&sp[i]));
            }
        }
    }
    f
}

/// `Hom(X_-, f)` for `f` between sums of generator summands, as a map of
/// projective `aus`-modules, with its `elems`.
pub fn yoneda_map(
    ctx: &AddXContext,
    f: &ModuleMap,
    src_parts: &[usize],
    tgt_parts: &[usize],
) -> (ModuleMap, Vec<Vec<Vec<u32>>>) {
    let (ss, si, _) = ctx.sum_of(src_parts);
    let (ts, _, tp) = ctx.sum_of(tgt_parts);
    let f = f.reframe(&ss, &ts);
    let elems: Vec<Vec<Vec<u32>>> = tgt_parts
        .iter()
        .enumerate()
        .map(|(j, &w)| {
            src_parts
                .iter()
                .enumerate()
                .map(|(i, &u)| {
                    let c = tp[j].compose(&f).compose(&si[i]);
                    ctx.element(w, u, &c)
                })
                .collect()
        })
        .collect();
    let ps = projective_sum(&ctx.aus, src_parts);
    let pt = projective_sum(&ctx.aus, tgt_parts);
    (map_between_projectives(&ps, src_parts, &pt, tgt_parts, &elems), elems)
}

/// `0 -> A -s-> B -t-> C` of Λ-modules; the functor it presents is the
/// cokernel of `Hom(X_-, t)`.
#[derive(Clone, Debug)]
pub struct ResolutionTriple {
    pub s: ModuleMap,
    pub t: ModuleMap,
}

impl ResolutionTriple {
    pub fn a(&self) -> &FDModule {
        self.s.src()
    }
    pub fn b(&self) -> &FDModule {
        self.t.src()
    }
    pub fn c(&self) -> &FDModule {
        self.t.tgt()
    }

    /// `s` mono, `t` epi and `im s = ker t`.
    pub fn check(&self) -> Result<()> {
        if !self.s.is_injective() {
            return Err(Error::Falsified("s is not injective".into()));
        }
        if !self.t.compose(&self.s).is_zero() {
            return Err(Error::Falsified("t o s is not zero".into()));
        }
        if self.s.rank() + self.t.rank() != self.b().dim() {
            return Err(Error::Falsified("triple is not exact at B".into()));
        }
        Ok(())
    }
}

/// Minimal projective resolution of a stable functor over `aus`, read
/// back through Yoneda as `0 -> A -> B -> C` in `add X`.
pub fn minimal_resolution_triple(ctx: &AddXContext, f: &FDModule) -> Result<ResolutionTriple> {
    if f.is_zero() {
        return Err(Error::Precondition("zero functor".into()));
    }
    let g = inflate(ctx, f)?;
    let c0 = projective_cover(&g);
    let (om1, i1) = c0.map.kernel();
    let c1 = projective_cover(&om1);
    let d1 = i1.compose(&c1.map);
    let (om2, i2) = c1.map.kernel();
    let c2 = projective_cover(&om2);
    let d2 = i2.compose(&c2.map);
    if !c2.map.is_injective() {
        return Err(Error::Falsified("resolution has more than three terms".into()));
    }
    let t = yoneda_unmap(ctx, &c1.vertices, &c0.vertices, &projective_map_elems(&d1, &c1.vertices, &c0.vertices));
    let s = yoneda_unmap(ctx, &c2.vertices, &c1.vertices, &projective_map_elems(&d2, &c2.vertices, &c1.vertices));
    let tr = ResolutionTriple { s, t };
    tr.check()?;
    Ok(tr)
}

/// Stable functor presented by `Hom(X_-, B) -> Hom(X_-, C)`.
pub fn presented_functor(ctx: &AddXContext, t: &ModuleMap) -> Result<FDModule> {
    let eb = stable_eval(ctx, t.src())?;
    let ec = stable_eval(ctx, t.tgt())?;
    Ok(stable_eval_map(t, &eb, &ec)?.cokernel().0)
}

/// One horseshoe step: `(A, B, C)` to `(Omega C, A + P_C, B)`.
pub fn functor_syzygy_step(tr: &ResolutionTriple) -> Result<ResolutionTriple> {
    let (s, t) = (&tr.s, &tr.t);
    let (oc, iota, cover) = syzygy(tr.c());
    let h = t
        .lift_through(&cover.map)
        .ok_or_else(|| Error::Falsified("projective cover does not lift to B".into()))?;
    let hi = h.compose(&iota);
    let a = s.lift_through(&hi.scale(hi.src().char() - 1)).ok_or_else(|| {
        Error::Falsified("kernel of the cover does not land in the image of s".into())
    })?;
    let alg = oc.algebra();
    let (sum, inc, prj) = FDModule::direct_sum(alg, &[tr.a().clone(), cover.projective().clone()]);
    let s2 = inc[0].compose(&a).add(&inc[1].compose(&iota));
    let t2 = s.compose(&prj[0]).add(&h.compose(&prj[1]));
    let out = ResolutionTriple { s: s2.reframe(&oc, &sum), t: t2 };
    out.check()?;
    Ok(out)
}

/// `n` horseshoe steps.
pub fn functor_syzygy_n(tr: &ResolutionTriple, n: usize) -> Result<ResolutionTriple> {
    let mut cur = tr.clone();
    for _ in 0..n {
        cur = functor_syzygy_step(&cur)?;
    }
    Ok(cur)
}

/// Terms `(A', B', C')` predicted for the `n`-th step, up to projective
/// summands: the three cases of `n mod 3`.
pub fn predicted_terms(tr: &ResolutionTriple, n: usize) -> [FDModule; 3] {
    let k = n / 3;
    let om = |m: &FDModule, j: usize| syzygy_n(m, j);
    let (a, b, c) = (tr.a(), tr.b(), tr.c());
    match n % 3 {
        0 => [om(a, k), om(b, k), om(c, k)],
        1 => [om(c, k + 1), om(a, k), om(b, k)],
        _ => [om(b, k + 1), om(c, k + 1), om(a, k)],
    }
}

/// Non-projective parts of the decompositions agree.
pub fn same_up_to_projectives(x: &FDModule, y: &FDModule) -> Result<bool> {
    let strip = |m: &FDModule| -> Result<Vec<(FDModule, usize)>> {
        Ok(decompose(m)?.into_iter().filter(|(s, _)| !is_projective(s)).collect())
    };
    let (dx, dy) = (strip(x)?, strip(y)?);
    if dx.len() != dy.len() {
        return Ok(false);
    }
    for (s, k) in &dx {
        let hit = dy.iter().find(|(t, _)| locate_in(std::slice::from_ref(t), s).ok().flatten().is_some());
        match hit {
            Some((_, l)) if l == k => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Outcome of the horseshoe check against the direct syzygy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyCheck {
    pub n: usize,
    pub terms_match: bool,
    pub functor_matches: bool,
}

/// Compare the `n`-step triple with the predicted terms and its functor
/// with the `n`-th syzygy over `stable_aus`.
pub fn check_functor_syzygy(ctx: &AddXContext, f: &FDModule, n: usize) -> Result<SyzygyCheck> {
    let tr = minimal_resolution_triple(ctx, f)?;
    let out = functor_syzygy_n(&tr, n)?;
    let pred = predicted_terms(&tr, n);
    let got = [out.a(), out.b(), out.c()];
    let mut terms_match = true;
    for (g, p) in got.iter().zip(&pred) {
        terms_match &= same_up_to_projectives(g, p)?;
    }
    let g = presented_functor(ctx, &out.t)?;
    let direct = syzygy_n(f, n);
    Ok(SyzygyCheck { n, terms_match, functor_matches: same_up_to_projectives(&g, &direct)? })
}

/// Gorenstein projectivity of a functor, read from its resolution and
/// directly over `stable_aus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorGprj {
    pub from_resolution: Verdict,
    pub direct: GprjReport,
}

impl FunctorGprj {
    pub fn agree(&self) -> bool {
        self.from_resolution == self.direct.verdict
    }
}

pub fn is_gprj_functor(ctx: &AddXContext, f: &FDModule) -> Result<FunctorGprj> {
    if !is_indecomposable(f)? || is_projective(f) {
        return Err(Error::Precondition("functor must be indecomposable and non-projective".into()));
    }
    let tr = minimal_resolution_triple(ctx, f)?;
    let d = ctx.gorenstein_dim;
    let depth = d.unwrap_or(FALLBACK_DEPTH).max(1);
    let mut from_resolution = Verdict::Gprj;
    for m in [tr.a(), tr.b(), tr.c()] {
        if m.is_zero() {
            continue;
        }
        let r = is_gorenstein_projective(m, depth, d)?;
        if r.verdict != Verdict::Gprj {
            from_resolution = r.verdict;
            break;
        }
        if !r.exact {
            from_resolution = Verdict::Inconclusive;
        }
    }
    let sd = selfinjective_dimension(&ctx.stable_aus, FALLBACK_DEPTH);
    let direct = is_gorenstein_projective(f, sd.unwrap_or(FALLBACK_DEPTH).max(1), sd)?;
    Ok(FunctorGprj { from_resolution, direct })
}

/// Extension functor from the `y`-context into the `x`-context: present
/// `f` over `stable_aus(Y)`, read the differential as a Λ-map between
/// sums of `Y` summands and take the cokernel of its stable evaluation
/// at `X`.
pub fn upsilon(y: &AddXContext, x: &AddXContext, f: &FDModule) -> Result<FDModule> {
    Ok(match upsilon_parts(y, x, f)? {
        Some(u) => u.module,
        None => FDModule::zero(&x.stable_aus),
    })
}

struct UpsilonParts {
    module: FDModule,
    quot: ModuleMap,
    eval0: StableEvaluated,
    v0: Vec<usize>,
    cover: Cover,
}

fn lift_to_aus(y: &AddXContext, e: &[u32]) -> Vec<u32> {
    let qd = y.stable_aus.quotient_data().expect("stable quotient");
    let mut v = vec![0u32; y.aus.dim()];
    for (q, &c) in e.iter().enumerate() {
        v[qd.reps[q]] = c;
    }
    v
}

fn upsilon_parts(y: &AddXContext, x: &AddXContext, f: &FDModule) -> Result<Option<UpsilonParts>> {
    for s in &y.summands {
        if x.locate(s)?.is_none() {
            return Err(Error::Precondition("Y is not contained in X".into()));
        }
    }
    if f.is_zero() {
        return Ok(None);
    }
    let pr = minimal_presentation(f);
    let v0: Vec<usize> = pr.cover.vertices.iter().map(|&q| y.stable_vertices[q]).collect();
    let v1: Vec<usize> = pr.p1_vertices.iter().map(|&q| y.stable_vertices[q]).collect();
    let elems: Vec<Vec<Vec<u32>>> =
        pr.elems.iter().map(|row| row.iter().map(|e| lift_to_aus(y, e)).collect()).collect();
    let d = yoneda_unmap(y, &v1, &v0, &elems);
    let e1 = stable_eval(x, d.src())?;
    let eval0 = stable_eval(x, d.tgt())?;
    let (module, quot) = stable_eval_map(&d, &e1, &eval0)?.cokernel();
    Ok(Some(UpsilonParts { module, quot, eval0, v0, cover: pr.cover }))
}

/// Υ on a map of `stable_aus(Y)`-modules, between the modules returned
/// by [`upsilon`] on its source and target.
pub fn upsilon_map(y: &AddXContext, x: &AddXContext, phi: &ModuleMap) -> Result<ModuleMap> {
    let (Some(us), Some(ut)) = (upsilon_parts(y, x, phi.src())?, upsilon_parts(y, x, phi.tgt())?) else {
        return Ok(ModuleMap::zero(&upsilon(y, x, phi.src())?, &upsilon(y, x, phi.tgt())?));
    };
    let phi0 = ut
        .cover
        .map
        .lift_through(&phi.compose(&us.cover.map))
        .ok_or_else(|| Error::Falsified("map does not lift to projective covers".into()))?;
    let st: Vec<usize> = ut.cover.vertices.clone();
    let ss: Vec<usize> = us.cover.vertices.clone();
    let elems: Vec<Vec<Vec<u32>>> = projective_map_elems(&phi0, &ss, &st)
        .iter()
        .map(|row| row.iter().map(|e| lift_to_aus(y, e)).collect())
        .collect();
    let lam = yoneda_unmap(y, &us.v0, &ut.v0, &elems);
    let e = stable_eval_map(&lam, &us.eval0, &ut.eval0)?;
    factor_through_source(&ut.quot.compose(&e), &us.quot)
        .ok_or_else(|| Error::Falsified("map does not descend to the cokernels".into()))
}

/// Λ-module sum for a list of summand indices (Yoneda bookkeeping).
pub fn add_x_module(ctx: &AddXContext, parts: &[usize]) -> FDModule {
    ctx.sum_of(parts).0
}

/// Identify each stable vertex with its representable functor.
pub fn representables(ctx: &AddXContext) -> Result<Vec<FDModule>> {
    ctx.stable_vertices.iter().map(|&i| representable(ctx, &ctx.summands[i])).collect()
}

/// Apply `tau` `k` times to every non-projective indecomposable over
/// `stable_aus` and count how many return to themselves. Returns
/// `(checked, fixed)`.
pub fn tau_power_fixes(ctx: &AddXContext, k: usize, budget: Budget) -> Result<(usize, usize)> {
    let u = all_indecomposables(&ctx.stable_aus, budget)?;
    if !u.closed {
        return Err(Error::Budget(format!("stable_aus: {} modules", u.len())));
    }
    let (mut checked, mut fixed) = (0, 0);
    for (i, m) in u.modules.iter().enumerate() {
        if u.projective[i] {
            continue;
        }
        checked += 1;
        let mut t = m.clone();
        for _ in 0..k {
            t = tau(&t);
        }
        if crate::decompose::is_isomorphic(&t, m)? {
            fixed += 1;
        }
    }
    Ok((checked, fixed))
}

/// `add X` for all indecomposables of a representation-finite algebra.
pub fn module_category_context(alg: &Algebra, budget: Budget) -> Result<AddXContext> {
    let u = all_indecomposables(alg, budget)?;
    if !u.closed {
        return Err(Error::Budget(format!("closure stopped after {} modules", u.len())));
    }
    let order = u.canonical_order();
    let names = standard_names(alg, &u.modules, &order);
    subset_context(&u, &order, &names)
}

/// `add X` for the Gorenstein projective indecomposables.
pub fn gprj_context(alg: &Algebra, budget: Budget) -> Result<AddXContext> {
    let u = all_indecomposables(alg, budget)?;
    if !u.closed {
        return Err(Error::Budget(format!("closure stopped after {} modules", u.len())));
    }
    let (g, unsure) = gprj_indices(&u)?;
    if !unsure.is_empty() {
        return Err(Error::Inconclusive(format!("{} modules without a certain verdict", unsure.len())));
    }
    let names = standard_names(alg, &u.modules, &u.canonical_order());
    subset_context(&u, &g, &names)
}

fn subset_context(u: &IndecUniverse, idx: &[usize], names: &[String]) -> Result<AddXContext> {
    let mods: Vec<FDModule> = idx.iter().map(|&i| u.modules[i].clone()).collect();
    let nm: Vec<String> = idx.iter().map(|&i| names[i].clone()).collect();
    build_context(&mods, &nm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::{all_indecomposables, ar_quiver_of, standard_names, Budget, IndecUniverse};
    use crate::decompose::is_isomorphic;
    use crate::gorenstein::gprj_indices;
    use crate::module::projective;
    use crate::module::tests::{a3, t2_dual};

    fn full_context(alg: &Algebra) -> (IndecUniverse, AddXContext) {
        let u = all_indecomposables(alg, Budget::default()).unwrap();
        let order = u.canonical_order();
        let names = standard_names(alg, &u.modules, &order);
        let mods: Vec<FDModule> = order.iter().map(|&i| u.modules[i].clone()).collect();
        let nm: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        (u, build_context(&mods, &nm).unwrap())
    }

    fn named<'a>(ctx: &'a AddXContext, n: &str) -> &'a FDModule {
        &ctx.summands[ctx.names.iter().position(|x| x == n).unwrap()]
    }

    #[test]
    fn a3_stable_auslander() {
        let (_, ctx) = full_context(&a3());
        assert_eq!(ctx.stable_aus.dim(), 5);
        assert_eq!(ctx.stable_aus.n_vertices(), 3);
        let u = all_indecomposables(&ctx.stable_aus, Budget::default()).unwrap();
        assert_eq!(u.len(), 5);
        assert_eq!(ctx.aus.dim() - ctx.stable_aus.dim(), {
            let q = ctx.aus.quotient(&ctx.projective_ideal).unwrap();
            ctx.aus.dim() - q.dim()
        });
    }

    #[test]
    fn a3_resolutions() {
        let (_, ctx) = full_context(&a3());
        let iso = |x: &FDModule, y: &FDModule| is_isomorphic(x, y).unwrap();
        let i2 = named(&ctx, "I2").clone();
        let f = representable(&ctx, &i2).unwrap();
        let tr = minimal_resolution_triple(&ctx, &f).unwrap();
        assert!(iso(tr.a(), named(&ctx, "P3")));
        assert!(iso(tr.b(), named(&ctx, "P1")));
        assert!(iso(tr.c(), &i2));
        // simple functor at S2
        let s2 = named(&ctx, "S2").clone();
        let rep = representable(&ctx, &s2).unwrap();
        let (top, _) = rep.quotient(&rep.radical_bases());
        let tr = minimal_resolution_triple(&ctx, &top).unwrap();
        assert!(iso(tr.a(), named(&ctx, "P3")));
        assert!(iso(tr.b(), named(&ctx, "P2")));
        assert!(iso(tr.c(), &s2));
        let step = functor_syzygy_step(&tr).unwrap();
        assert!(iso(step.a(), named(&ctx, "P3")));
        let expect = FDModule::sum(&[named(&ctx, "P3").clone(), named(&ctx, "P2").clone()]);
        assert!(iso(step.b(), &expect));
        assert!(iso(step.c(), named(&ctx, "P2")));
    }

    #[test]
    fn yoneda_round_trip() {
        let (_, ctx) = full_context(&a3());
        let a = ctx.algebra.clone();
        let (p3, p2) = (named(&ctx, "P3").clone(), named(&ctx, "P2").clone());
        let i3 = ctx.names.iter().position(|x| x == "P3").unwrap();
        let i2 = ctx.names.iter().position(|x| x == "P2").unwrap();
        for f in hom_basis(&p3, &p2).unwrap() {
            let (g, elems) = yoneda_map(&ctx, &f, &[i3], &[i2]);
            assert!(g.intertwines());
            let back = yoneda_unmap(&ctx, &[i3], &[i2], &elems);
            assert_eq!(back.vectorize(), f.vectorize());
        }
        let id = ModuleMap::identity(&p2);
        let (g, _) = yoneda_map(&ctx, &id, &[i2], &[i2]);
        assert!(g.is_iso() && g.matrix().is_identity());
        let _ = projective(&a, 0);
    }

    #[test]
    fn syzygy_formulas_a3() {
        let (_, ctx) = full_context(&a3());
        let u = all_indecomposables(&ctx.stable_aus, Budget::default()).unwrap();
        for f in &u.modules {
            for n in 1..=6 {
                let c = check_functor_syzygy(&ctx, f, n).unwrap();
                assert!(c.terms_match && c.functor_matches, "{f:?} n={n}");
            }
        }
    }

    #[test]
    fn tau_periods() {
        use crate::module::tests::{dual_numbers, truncated};
        let x = module_category_context(&truncated(3), Budget::default()).unwrap();
        let (checked, fixed) = tau_power_fixes(&x, 6, Budget::default()).unwrap();
        assert!(checked > 0);
        assert_eq!(checked, fixed);
        let x = module_category_context(&dual_numbers(), Budget::default()).unwrap();
        assert_eq!(tau_power_fixes(&x, 6, Budget::default()).unwrap(), (0, 0));
    }

    #[test]
    fn t2_dual_contexts() {
        let (u, x) = full_context(&t2_dual());
        assert_eq!(u.len(), 9);
        assert_eq!(x.gorenstein_dim, Some(1));
        let (g, unsure) = gprj_indices(&u).unwrap();
        assert!(unsure.is_empty());
        assert_eq!(g.len(), 5);
        let names = standard_names(&u.algebra, &u.modules, &u.canonical_order());
        let y = build_context(
            &g.iter().map(|&i| u.modules[i].clone()).collect::<Vec<_>>(),
            &g.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(y.stable_aus.dim(), 6);
        assert_eq!(y.stable_aus.n_vertices(), 3);
        let b = all_indecomposables(&y.stable_aus, Budget::default()).unwrap();
        assert_eq!(b.len(), 6);
        let q = ar_quiver_of(&b).unwrap();
        assert_eq!(q.nodes.len(), 6);
        let images: Vec<FDModule> = b.modules.iter().map(|f| upsilon(&y, &x, f).unwrap()).collect();
        for (i, m) in images.iter().enumerate() {
            assert!(is_indecomposable(m).unwrap());
            for n in &images[..i] {
                assert!(!is_isomorphic(m, n).unwrap());
            }
        }
    }
}
