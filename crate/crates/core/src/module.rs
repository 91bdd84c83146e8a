//! Right modules over an [`Algebra`], stored as representations.
//!
//! A module is split into vertex spaces `M_v = M e_v`; a basis element
//! `b` going from `s` to `t` acts as a `dims[t] x dims[s]` block (columns
//! are vectors), so `act(b * c) = act(c) * act(b)`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::{Coords, FMatrix, Quotient};

struct ModData {
    alg: Algebra,
    dims: Vec<usize>,
    offs: Vec<usize>,
    act: Vec<FMatrix>,
    label: String,
}

/// A finite-dimensional right module. Cheap to clone.
#[derive(Clone)]
pub struct FDModule(Arc<ModData>);

impl fmt::Debug for FDModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDModule[{}]{:?}", self.label(), self.dims())
    }
}

impl FDModule {
    /// Build a module from action blocks, checking the module axioms.
    pub fn new(alg: &Algebra, dims: Vec<usize>, act: Vec<FMatrix>) -> Result<FDModule> {
        if dims.len() != alg.n_vertices() || act.len() != alg.dim() {
            return Err(Error::DimensionMismatch("module data does not match algebra".into()));
        }
        for (b, m) in act.iter().enumerate() {
            if m.rows() != dims[alg.tgt(b)] || m.cols() != dims[alg.src(b)] || m.modulus() != alg.char() {
                return Err(Error::DimensionMismatch(format!("action block of {}", alg.label(b))));
            }
        }
        let m = FDModule::from_parts(alg, dims, act);
        m.check_axioms()?;
        Ok(m)
    }

    pub(crate) fn from_parts(alg: &Algebra, dims: Vec<usize>, act: Vec<FMatrix>) -> FDModule {
        let mut offs = Vec::with_capacity(dims.len());
        let mut t = 0;
        for &d in &dims {
            offs.push(t);
            t += d;
        }
        FDModule(Arc::new(ModData { alg: alg.clone(), dims, offs, act, label: String::new() }))
    }

    fn check_axioms(&self) -> Result<()> {
        let a = self.algebra();
        for v in 0..a.n_vertices() {
            if !self.block(a.idempotent(v)).is_identity() {
                return Err(Error::Semantic(format!("idempotent {v} does not act as identity")));
            }
        }
        for &g in a.radical_generators() {
            for c in 0..a.dim() {
                if a.tgt(g) != a.src(c) {
                    continue;
                }
                let want = self.block(c).mul(self.block(g));
                let got = self.combo_block(a.src(g), a.tgt(c), a.product(g, c));
                if want != got {
                    return Err(Error::Semantic(format!(
                        "action does not respect {} * {}",
                        a.label(g),
                        a.label(c)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Action block of a sparse combination of basis elements from `s` to `t`.
    pub fn combo_block(&self, s: usize, t: usize, combo: &[(usize, u32)]) -> FMatrix {
        let mut m = FMatrix::zeros(self.algebra().char(), self.dims()[t], self.dims()[s]);
        for &(k, c) in combo {
            m.axpy(c, self.block(k));
        }
        m
    }

    pub fn zero(alg: &Algebra) -> FDModule {
        let dims = vec![0; alg.n_vertices()];
        let act = (0..alg.dim()).map(|_| FMatrix::zeros(alg.char(), 0, 0)).collect();
        FDModule::from_parts(alg, dims, act)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }
    pub fn char(&self) -> u32 {
        self.0.alg.char()
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn offsets(&self) -> &[usize] {
        &self.0.offs
    }
    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    /// Action block of basis element `b`.
    pub fn block(&self, b: usize) -> &FMatrix {
        &self.0.act[b]
    }
    pub fn label(&self) -> &str {
        &self.0.label
    }
    pub fn with_label(&self, label: impl Into<String>) -> FDModule {
        FDModule(Arc::new(ModData {
            alg: self.0.alg.clone(),
            dims: self.0.dims.clone(),
            offs: self.0.offs.clone(),
            act: self.0.act.clone(),
            label: label.into(),
        }))
    }

    /// Full `dim x dim` matrix of the action of basis element `b`.
    pub fn action_matrix(&self, b: usize) -> FMatrix {
        let a = self.algebra();
        let n = self.dim();
        let mut m = FMatrix::zeros(a.char(), n, n);
        m.set_block(self.0.offs[a.tgt(b)], self.0.offs[a.src(b)], self.block(b));
        m
    }

    pub fn same_algebra(&self, o: &FDModule) -> Result<()> {
        if self.algebra() != o.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Direct sum with canonical inclusions and projections.
    pub fn direct_sum(alg: &Algebra, parts: &[FDModule]) -> (FDModule, Vec<ModuleMap>, Vec<ModuleMap>) {
        let p = alg.char();
        let nv = alg.n_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims()[v]).sum()).collect();
        let act = (0..alg.dim())
            .map(|b| {
                let blocks: Vec<&FMatrix> = parts.iter().map(|m| m.block(b)).collect();
                FMatrix::block_diag(p, &blocks)
            })
            .collect();
        let sum = FDModule::from_parts(alg, dims, act);
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        let mut start = vec![0usize; nv];
        for m in parts {
            let ib: Vec<FMatrix> = (0..nv)
                .map(|v| {
                    let mut x = FMatrix::zeros(p, sum.dims()[v], m.dims()[v]);
                    x.set_block(start[v], 0, &FMatrix::identity(p, m.dims()[v]));
                    x
                })
                .collect();
            let pb: Vec<FMatrix> = ib.iter().map(|x| x.transpose()).collect();
            incl.push(ModuleMap::from_blocks_unchecked(m, &sum, ib));
            proj.push(ModuleMap::from_blocks_unchecked(&sum, m, pb));
            for v in 0..nv {
                start[v] += m.dims()[v];
            }
        }
        (sum, incl, proj)
    }

    pub fn sum(parts: &[FDModule]) -> FDModule {
        assert!(!parts.is_empty(), "empty direct sum needs an algebra");
        FDModule::direct_sum(parts[0].algebra(), parts).0
    }

    /// Submodule spanned per vertex by the columns of `bases` (which must
    /// be independent and closed under the action).
    pub fn submodule(&self, bases: Vec<FMatrix>) -> (FDModule, ModuleMap) {
        let a = self.algebra();
        let solvers: Vec<Coords> = bases.iter().map(|b| Coords::new(b.clone())).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let act = (0..a.dim())
            .map(|b| {
                let (s, t) = (a.src(b), a.tgt(b));
                let img = self.block(b).mul(&bases[s]);
                let cols: Vec<Vec<u32>> = img
                    .columns()
                    .iter()
                    .map(|c| solvers[t].coords(c).expect("subspace not invariant"))
                    .collect();
                FMatrix::from_columns(a.char(), dims[t], &cols)
            })
            .collect();
        let sub = FDModule::from_parts(a, dims, act);
        let incl = ModuleMap::from_blocks_unchecked(&sub, self, bases);
        (sub, incl)
    }

    /// Quotient by the submodule spanned per vertex by `bases`.
    pub fn quotient(&self, bases: &[FMatrix]) -> (FDModule, ModuleMap) {
        let a = self.algebra();
        let p = a.char();
        let nv = a.n_vertices();
        let quots: Vec<Quotient> = (0..nv)
            .map(|v| {
                let n = self.dims()[v];
                let units: Vec<Vec<u32>> = (0..n).map(|i| crate::algebra::unit_vector(n, i)).collect();
                Quotient::new(p, n, &bases[v].columns(), &units)
            })
            .collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let act = (0..a.dim())
            .map(|b| {
                let (s, t) = (a.src(b), a.tgt(b));
                let cols: Vec<Vec<u32>> = quots[s]
                    .representatives()
                    .iter()
                    .map(|&r| quots[t].reduce(&self.block(b).col(r)).expect("ambient"))
                    .collect();
                FMatrix::from_columns(p, dims[t], &cols)
            })
            .collect();
        let q = FDModule::from_parts(a, dims.clone(), act);
        let blocks = (0..nv)
            .map(|v| {
                let n = self.dims()[v];
                let cols: Vec<Vec<u32>> = (0..n)
                    .map(|i| quots[v].reduce(&crate::algebra::unit_vector(n, i)).expect("ambient"))
                    .collect();
                FMatrix::from_columns(p, dims[v], &cols)
            })
            .collect();
        let proj = ModuleMap::from_blocks_unchecked(self, &q, blocks);
        (q, proj)
    }

    /// The radical `M rad(A)` as a per-vertex basis.
    pub fn radical_bases(&self) -> Vec<FMatrix> {
        let a = self.algebra();
        let p = a.char();
        (0..a.n_vertices())
            .map(|t| {
                let parts: Vec<FMatrix> = a
                    .radical_generators()
                    .iter()
                    .filter(|&&g| a.tgt(g) == t)
                    .map(|&g| self.block(g).clone())
                    .collect();
                let refs: Vec<&FMatrix> = parts.iter().collect();
                FMatrix::hstack(p, self.dims()[t], &refs).image_basis()
            })
            .collect()
    }

    /// Per-vertex basis of the socle.
    pub fn socle_bases(&self) -> Vec<FMatrix> {
        let a = self.algebra();
        let p = a.char();
        (0..a.n_vertices())
            .map(|s| {
                let parts: Vec<FMatrix> = a
                    .radical_generators()
                    .iter()
                    .filter(|&&g| a.src(g) == s)
                    .map(|&g| self.block(g).clone())
                    .collect();
                let refs: Vec<&FMatrix> = parts.iter().collect();
                FMatrix::vstack(p, self.dims()[s], &refs).kernel_basis()
            })
            .collect()
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_vector(&self) -> Vec<usize> {
        self.radical_bases().iter().zip(self.dims()).map(|(r, &d)| d - r.cols()).collect()
    }

    pub fn socle_vector(&self) -> Vec<usize> {
        self.socle_bases().iter().map(|b| b.cols()).collect()
    }
}

/// A module homomorphism stored as per-vertex blocks.
#[derive(Clone)]
pub struct ModuleMap {
    src: FDModule,
    tgt: FDModule,
    blocks: Vec<FMatrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?}) {:?}", self.src, self.tgt, self.matrix())
    }
}

impl ModuleMap {
    /// Checked constructor from the full `tgt.dim x src.dim` matrix.
    pub fn new(src: &FDModule, tgt: &FDModule, matrix: &FMatrix) -> Result<ModuleMap> {
        src.same_algebra(tgt)?;
        if matrix.rows() != tgt.dim() || matrix.cols() != src.dim() {
            return Err(Error::DimensionMismatch("map matrix shape".into()));
        }
        let nv = src.algebra().n_vertices();
        let mut blocks = Vec::with_capacity(nv);
        for v in 0..nv {
            for w in 0..nv {
                if v != w {
                    let off = matrix.block(
                        tgt.offsets()[w],
                        tgt.offsets()[w] + tgt.dims()[w],
                        src.offsets()[v],
                        src.offsets()[v] + src.dims()[v],
                    );
                    if !off.is_zero() {
                        return Err(Error::Semantic("map mixes vertex components".into()));
                    }
                }
            }
            blocks.push(matrix.block(
                tgt.offsets()[v],
                tgt.offsets()[v] + tgt.dims()[v],
                src.offsets()[v],
                src.offsets()[v] + src.dims()[v],
            ));
        }
        let f = ModuleMap::from_blocks_unchecked(src, tgt, blocks);
        if !f.intertwines() {
            return Err(Error::Semantic("map does not intertwine the actions".into()));
        }
        Ok(f)
    }

    pub fn from_blocks(src: &FDModule, tgt: &FDModule, blocks: Vec<FMatrix>) -> Result<ModuleMap> {
        src.same_algebra(tgt)?;
        let f = ModuleMap::from_blocks_unchecked(src, tgt, blocks);
        if !f.intertwines() {
            return Err(Error::Semantic("map does not intertwine the actions".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_blocks_unchecked(src: &FDModule, tgt: &FDModule, blocks: Vec<FMatrix>) -> ModuleMap {
        debug_assert_eq!(blocks.len(), src.dims().len());
        debug_assert!(blocks
            .iter()
            .enumerate()
            .all(|(v, b)| b.rows() == tgt.dims()[v] && b.cols() == src.dims()[v]));
        ModuleMap { src: src.clone(), tgt: tgt.clone(), blocks }
    }

    pub fn intertwines(&self) -> bool {
        let a = self.src.algebra();
        a.radical_generators().iter().all(|&g| {
            let (s, t) = (a.src(g), a.tgt(g));
            self.blocks[t].mul(self.src.block(g)) == self.tgt.block(g).mul(&self.blocks[s])
        })
    }

    pub fn zero(src: &FDModule, tgt: &FDModule) -> ModuleMap {
        let p = src.char();
        let blocks = src.dims().iter().zip(tgt.dims()).map(|(&m, &n)| FMatrix::zeros(p, n, m)).collect();
        ModuleMap::from_blocks_unchecked(src, tgt, blocks)
    }

    pub fn identity(m: &FDModule) -> ModuleMap {
        let p = m.char();
        let blocks = m.dims().iter().map(|&d| FMatrix::identity(p, d)).collect();
        ModuleMap::from_blocks_unchecked(m, m, blocks)
    }

    pub fn src(&self) -> &FDModule {
        &self.src
    }
    pub fn tgt(&self) -> &FDModule {
        &self.tgt
    }
    pub fn blocks(&self) -> &[FMatrix] {
        &self.blocks
    }
    pub fn block(&self, v: usize) -> &FMatrix {
        &self.blocks[v]
    }

    /// Full block-diagonal matrix (`tgt.dim x src.dim`).
    pub fn matrix(&self) -> FMatrix {
        let refs: Vec<&FMatrix> = self.blocks.iter().collect();
        FMatrix::block_diag(self.src.char(), &refs)
    }

    /// Row-major concatenation of the blocks.
    pub fn vectorize(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    pub fn from_vector(src: &FDModule, tgt: &FDModule, v: &[u32]) -> ModuleMap {
        let p = src.char();
        let mut blocks = Vec::with_capacity(src.dims().len());
        let mut k = 0;
        for (&m, &n) in src.dims().iter().zip(tgt.dims()) {
            blocks.push(FMatrix::from_vec(p, n, m, v[k..k + n * m].to_vec()));
            k += n * m;
        }
        ModuleMap::from_blocks_unchecked(src, tgt, blocks)
    }

    /// `self` after `g`, i.e. `self o g`.
    pub fn compose(&self, g: &ModuleMap) -> ModuleMap {
        assert_eq!(g.tgt.dims(), self.src.dims(), "composition shape");
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap::from_blocks_unchecked(&g.src, &self.tgt, blocks)
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap::from_blocks_unchecked(&self.src, &self.tgt, blocks)
    }

    pub fn sub(&self, o: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.sub(b)).collect();
        ModuleMap::from_blocks_unchecked(&self.src, &self.tgt, blocks)
    }

    pub fn scale(&self, c: u32) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleMap::from_blocks_unchecked(&self.src, &self.tgt, blocks)
    }

    /// Same matrices viewed between other modules with equal layouts.
    pub fn reframe(&self, src: &FDModule, tgt: &FDModule) -> ModuleMap {
        assert_eq!(src.dims(), self.src.dims());
        assert_eq!(tgt.dims(), self.tgt.dims());
        ModuleMap::from_blocks_unchecked(src, tgt, self.blocks.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.src.dim() == self.tgt.dim() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let blocks: Option<Vec<FMatrix>> = self.blocks.iter().map(|b| b.inverse()).collect();
        blocks.map(|b| ModuleMap::from_blocks_unchecked(&self.tgt, &self.src, b))
    }

    pub fn kernel(&self) -> (FDModule, ModuleMap) {
        self.src.submodule(self.blocks.iter().map(|b| b.kernel_basis()).collect())
    }

    /// Image with the inclusion into the target and the corestriction.
    pub fn image(&self) -> (FDModule, ModuleMap, ModuleMap) {
        let bases: Vec<FMatrix> = self.blocks.iter().map(|b| b.image_basis()).collect();
        let (im, incl) = self.tgt.submodule(bases.clone());
        let p = self.src.char();
        let co = (0..bases.len())
            .map(|v| {
                let c = Coords::new(bases[v].clone());
                let cols: Vec<Vec<u32>> =
                    self.blocks[v].columns().iter().map(|x| c.coords(x).expect("in image")).collect();
                FMatrix::from_columns(p, bases[v].cols(), &cols)
            })
            .collect();
        let co = ModuleMap::from_blocks_unchecked(&self.src, &im, co);
        (im, incl, co)
    }

    pub fn cokernel(&self) -> (FDModule, ModuleMap) {
        let bases: Vec<FMatrix> = self.blocks.iter().map(|b| b.image_basis()).collect();
        self.tgt.quotient(&bases)
    }

    /// Solve `self o x = g` for `x`, if possible.
    pub fn lift_through(&self, g: &ModuleMap) -> Option<ModuleMap> {
        factor_through_target(g, self)
    }
}

/// Basis of a Hom space with coordinate extraction.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: FDModule,
    pub tgt: FDModule,
    pub basis: Vec<ModuleMap>,
    coords: Option<Coords>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coords(&self, f: &ModuleMap) -> Vec<u32> {
        match &self.coords {
            None => Vec::new(),
            Some(c) => c.coords(&f.vectorize()).expect("map lies in the Hom space"),
        }
    }

    pub fn combination(&self, c: &[u32]) -> ModuleMap {
        let mut f = ModuleMap::zero(&self.src, &self.tgt);
        for (b, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                f = f.add(&b.scale(x));
            }
        }
        f
    }
}

/// Basis of `Hom(m, n)` from the intertwining system on radical generators.
pub fn hom_basis(m: &FDModule, n: &FDModule) -> Result<Vec<ModuleMap>> {
    Ok(hom_space(m, n)?.basis)
}

pub fn hom_space(m: &FDModule, n: &FDModule) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let a = m.algebra();
    let p = a.char();
    let nv = a.n_vertices();
    let mut voff = vec![0usize; nv + 1];
    for v in 0..nv {
        voff[v + 1] = voff[v] + n.dims()[v] * m.dims()[v];
    }
    let nvars = voff[nv];
    let mut rows: Vec<u32> = Vec::new();
    let mut nrows = 0;
    for &g in a.radical_generators() {
        let (s, t) = (a.src(g), a.tgt(g));
        let (ms, mt, ns, nt) = (m.dims()[s], m.dims()[t], n.dims()[s], n.dims()[t]);
        if nt == 0 || ms == 0 {
            continue;
        }
        let mg = m.block(g);
        let ng = n.block(g);
        // (X_t M_g - N_g X_s)[r][c]
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![0u32; nvars];
                for k in 0..mt {
                    let v = mg.get(k, c);
                    if v != 0 {
                        let idx = voff[t] + r * mt + k;
                        row[idx] = field::add(row[idx], v, p);
                    }
                }
                for k in 0..ns {
                    let v = ng.get(r, k);
                    if v != 0 {
                        let idx = voff[s] + k * ms + c;
                        row[idx] = field::sub(row[idx], v, p);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.extend(row);
                    nrows += 1;
                }
            }
        }
    }
    let sys = FMatrix::from_vec(p, nrows, nvars, rows);
    let k = sys.kernel_basis();
    let basis: Vec<ModuleMap> = (0..k.cols()).map(|j| ModuleMap::from_vector(m, n, &k.col(j))).collect();
    let coords = (!basis.is_empty()).then(|| Coords::new(k));
    Ok(HomSpace { src: m.clone(), tgt: n.clone(), basis, coords })
}

/// Solve `h o x = g` for `x: g.src -> h.src` (factor `g` through `h`).
pub fn factor_through_target(g: &ModuleMap, h: &ModuleMap) -> Option<ModuleMap> {
    let hs = hom_space(g.src(), h.src()).ok()?;
    solve_in_span(&hs.basis.iter().map(|x| h.compose(x)).collect::<Vec<_>>(), g)
        .map(|c| hs.combination(&c))
}

/// Solve `x o h = g` for `x: h.tgt -> g.tgt` (factor `g` through `h`).
pub fn factor_through_source(g: &ModuleMap, h: &ModuleMap) -> Option<ModuleMap> {
    let hs = hom_space(h.tgt(), g.tgt()).ok()?;
    solve_in_span(&hs.basis.iter().map(|x| x.compose(h)).collect::<Vec<_>>(), g)
        .map(|c| hs.combination(&c))
}

/// Coefficients expressing `g` in the span of `maps`, if it lies there.
pub fn solve_in_span(maps: &[ModuleMap], g: &ModuleMap) -> Option<Vec<u32>> {
    let p = g.src().char();
    let n = g.vectorize().len();
    if maps.is_empty() {
        return g.is_zero().then(Vec::new);
    }
    let cols: Vec<Vec<u32>> = maps.iter().map(|f| f.vectorize()).collect();
    let a = FMatrix::from_columns(p, n, &cols);
    a.solve(&FMatrix::column(p, &g.vectorize())).ok().flatten().map(|x| x.col(0))
}

/// Dimension of the span of a family of maps with equal source and target.
pub fn span_dim(maps: &[ModuleMap]) -> usize {
    if maps.is_empty() {
        return 0;
    }
    let p = maps[0].src().char();
    let n = maps[0].vectorize().len();
    FMatrix::from_columns(p, n, &maps.iter().map(|f| f.vectorize()).collect::<Vec<_>>()).rank()
}

/// Indices of a maximal independent subfamily.
pub fn independent_maps(maps: &[ModuleMap]) -> Vec<usize> {
    if maps.is_empty() {
        return Vec::new();
    }
    let p = maps[0].src().char();
    let n = maps[0].vectorize().len();
    FMatrix::from_columns(p, n, &maps.iter().map(|f| f.vectorize()).collect::<Vec<_>>())
        .independent_columns()
}

/// Sum of projectives `P(v_1) + ... + P(v_k)` with `P(v) = e_v A`.
///
/// The vertex-`t` space of `P(v)` has basis `basis_between(v, t)`.
pub fn projective_sum(alg: &Algebra, vertices: &[usize]) -> FDModule {
    let parts: Vec<FDModule> = vertices.iter().map(|&v| projective(alg, v)).collect();
    if parts.is_empty() {
        return FDModule::zero(alg);
    }
    FDModule::direct_sum(alg, &parts).0
}

/// Indecomposable projective `P(v) = e_v A`.
pub fn projective(alg: &Algebra, v: usize) -> FDModule {
    let p = alg.char();
    let nv = alg.n_vertices();
    let dims: Vec<usize> = (0..nv).map(|t| alg.basis_between(v, t).len()).collect();
    let act = (0..alg.dim())
        .map(|b| {
            let (s, t) = (alg.src(b), alg.tgt(b));
            let from = alg.basis_between(v, s);
            let to = alg.basis_between(v, t);
            let mut m = FMatrix::zeros(p, to.len(), from.len());
            for (j, &x) in from.iter().enumerate() {
                for &(k, c) in alg.product(x, b) {
                    let i = to.iter().position(|&y| y == k).expect("homogeneous product");
                    m.set(i, j, c);
                }
            }
            m
        })
        .collect();
    FDModule::from_parts(alg, dims, act).with_label(format!("P{}", alg.vertex_name(v)))
}

/// Map from a sum of projectives `P(v_i)` sending the generator `e_{v_i}`
/// of summand `i` to `elems[i]`, a vector of `n` at vertex `v_i`.
pub fn map_from_projectives(
    src: &FDModule,
    vertices: &[usize],
    n: &FDModule,
    elems: &[Vec<u32>],
) -> ModuleMap {
    let a = n.algebra();
    let p = a.char();
    let nv = a.n_vertices();
    let blocks = (0..nv)
        .map(|t| {
            let mut cols: Vec<Vec<u32>> = Vec::new();
            for (i, &v) in vertices.iter().enumerate() {
                for &b in a.basis_between(v, t) {
                    cols.push(n.block(b).mul_vec(&elems[i]));
                }
            }
            FMatrix::from_columns(p, n.dims()[t], &cols)
        })
        .collect();
    ModuleMap::from_blocks_unchecked(src, n, blocks)
}

/// Map `P(v_1)+... -> P(w_1)+...` given by left multiplication:
/// summand `i` maps to summand `j` by `x -> elems[j][i] * x`,
/// where `elems[j][i]` lies in `e_{w_j} A e_{v_i}`.
pub fn map_between_projectives(
    src: &FDModule,
    src_vertices: &[usize],
    tgt: &FDModule,
    tgt_vertices: &[usize],
    elems: &[Vec<Vec<u32>>],
) -> ModuleMap {
    let a = src.algebra();
    // image of generator e_{v_i} in tgt: components elems[j][i] at vertex v_i
    let gens: Vec<Vec<u32>> = src_vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut out = Vec::with_capacity(tgt.dims()[v]);
            for (j, &w) in tgt_vertices.iter().enumerate() {
                for &b in a.basis_between(w, v) {
                    out.push(elems[j][i][b]);
                }
            }
            out
        })
        .collect();
    map_from_projectives(src, src_vertices, tgt, &gens)
}

/// Index of the generator `e_{v_i}` of summand `i` in the vertex-`v_i`
/// space of `projective_sum(alg, vertices)`.
pub fn generator_position(alg: &Algebra, vertices: &[usize], i: usize) -> usize {
    let v = vertices[i];
    let before: usize = vertices[..i].iter().map(|&w| alg.basis_between(w, v).len()).sum();
    let e = alg.idempotent(v);
    before + alg.basis_between(v, v).iter().position(|&b| b == e).expect("idempotent at its vertex")
}

/// Read back the `elems` of [`map_between_projectives`] from a map
/// between sums of indecomposable projectives.
pub fn projective_map_elems(f: &ModuleMap, src_vertices: &[usize], tgt_vertices: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let a = f.src().algebra();
    let mut elems = vec![vec![vec![0u32; a.dim()]; src_vertices.len()]; tgt_vertices.len()];
    for (i, &v) in src_vertices.iter().enumerate() {
        let g = generator_position(a, src_vertices, i);
        let img = f.block(v).col(g);
        let mut pos = 0;
        for (j, &w) in tgt_vertices.iter().enumerate() {
            for &b in a.basis_between(w, v) {
                elems[j][i][b] = img[pos];
                pos += 1;
            }
        }
    }
    elems
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraSpec, Arrow, Quiver, Relation};

    /// `T_2(k[x]/x^2)` as a bound quiver: loops at both vertices and `b: 2 -> 1`.
    pub fn t2_dual() -> Algebra {
        let quiver = Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                Arrow { name: "a1".into(), from: 0, to: 0 },
                Arrow { name: "a2".into(), from: 1, to: 1 },
                Arrow { name: "b".into(), from: 1, to: 0 },
            ],
        };
        let relations = vec![
            Relation { terms: vec![(1, vec![0, 0])] },
            Relation { terms: vec![(1, vec![1, 1])] },
            Relation { terms: vec![(1, vec![1, 2]), (-1, vec![2, 0])] },
        ];
        build_algebra(&AlgebraSpec { char: 32003, quiver, relations }).unwrap()
    }

    /// `k[x]/x^n`.
    pub fn truncated(n: usize) -> Algebra {
        let quiver = Quiver { vertices: vec!["1".into()], arrows: vec![Arrow { name: "x".into(), from: 0, to: 0 }] };
        let relations = vec![Relation { terms: vec![(1, vec![0; n])] }];
        build_algebra(&AlgebraSpec { char: 32003, quiver, relations }).unwrap()
    }

    pub fn a3() -> Algebra {
        let quiver = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), from: 0, to: 1 },
                Arrow { name: "b".into(), from: 1, to: 2 },
            ],
        };
        build_algebra(&AlgebraSpec { char: 32003, quiver, relations: vec![] }).unwrap()
    }

    pub fn dual_numbers() -> Algebra {
        let quiver = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), from: 0, to: 0 }],
        };
        build_algebra(&AlgebraSpec {
            char: 32003,
            quiver,
            relations: vec![Relation { terms: vec![(1, vec![0, 0])] }],
        })
        .unwrap()
    }

    /// Simple module at vertex v.
    pub fn simple(a: &Algebra, v: usize) -> FDModule {
        let dims: Vec<usize> = (0..a.n_vertices()).map(|w| usize::from(w == v)).collect();
        let act = (0..a.dim())
            .map(|b| {
                let (s, t) = (a.src(b), a.tgt(b));
                if a.is_idempotent(b) {
                    FMatrix::identity(a.char(), dims[s])
                } else {
                    FMatrix::zeros(a.char(), dims[t], dims[s])
                }
            })
            .collect();
        FDModule::new(a, dims, act).unwrap()
    }

    #[test]
    fn projectives_of_a3() {
        let a = a3();
        assert_eq!(projective(&a, 0).dims(), &[1, 1, 1]);
        assert_eq!(projective(&a, 1).dims(), &[0, 1, 1]);
        assert_eq!(projective(&a, 2).dims(), &[0, 0, 1]);
        for v in 0..3 {
            projective(&a, v).check_axioms().unwrap();
        }
    }

    #[test]
    fn hom_examples() {
        let a = a3();
        let s2 = simple(&a, 1);
        let s3 = simple(&a, 2);
        assert_eq!(hom_basis(&s2, &s2).unwrap().len(), 1);
        assert_eq!(hom_basis(&projective(&a, 2), &projective(&a, 1)).unwrap().len(), 1);
        assert_eq!(hom_basis(&s2, &s3).unwrap().len(), 0);
        for f in hom_basis(&projective(&a, 1), &projective(&a, 0)).unwrap() {
            assert!(f.intertwines());
        }
    }

    #[test]
    fn kernel_cokernel_image() {
        let a = a3();
        let p2 = projective(&a, 1);
        let s2 = simple(&a, 1);
        let f = &hom_basis(&p2, &s2).unwrap()[0];
        let (k, incl) = f.kernel();
        assert_eq!(k.dims(), &[0, 0, 1]);
        assert!(incl.intertwines() && incl.is_injective());
        let (c, _) = f.cokernel();
        assert!(c.is_zero());
        let (im, i, co) = f.image();
        assert_eq!(im.dims(), &[0, 1, 0]);
        assert_eq!(i.compose(&co).matrix(), f.matrix());
    }

    #[test]
    fn checked_constructor_rejects_bad_action() {
        let a = dual_numbers();
        let x = (0..a.dim()).find(|&b| !a.is_idempotent(b)).unwrap();
        let mut act = vec![FMatrix::identity(a.char(), 2); 2];
        act[x] = FMatrix::identity(a.char(), 2);
        assert!(FDModule::new(&a, vec![2], act).is_err());
    }

    #[test]
    fn maps_from_projectives() {
        let a = a3();
        let p1 = projective(&a, 0);
        let gens = vec![vec![1u32]];
        let s1 = simple(&a, 0);
        let f = map_from_projectives(&p1, &[0], &s1, &gens);
        assert!(f.intertwines() && f.is_surjective());
    }
}
