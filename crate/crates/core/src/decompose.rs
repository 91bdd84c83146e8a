//! Krull-Schmidt decomposition by Fitting splitting, local endomorphism
//! rings, and isomorphism tests.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field;
use crate::matrix::FMatrix;
use crate::module::{hom_basis, hom_space, FDModule, ModuleMap};
use crate::poly;

/// Default seed for randomized searches.
pub const DEFAULT_SEED: u64 = 0x5eed_a2f1;

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Seed for the random elements drawn while splitting modules. Results
/// do not depend on it; failures to split with a given seed do.
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}
/// Number of random trials in isomorphism searches.
pub const ISO_TRIALS: usize = 40;

/// An indecomposable summand with split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: FDModule,
    pub incl: ModuleMap,
    pub proj: ModuleMap,
}

/// Scalar part of an endomorphism of an indecomposable module
/// (`h = l * id + nilpotent`).
pub fn local_scalar(h: &ModuleMap) -> u32 {
    let m = h.src();
    let p = m.char();
    let d = m.dim();
    if d == 0 {
        return 0;
    }
    if !(d as u64).is_multiple_of(p as u64) {
        let tr = h.blocks().iter().fold(0u32, |s, b| {
            (0..b.rows()).fold(s, |s, i| field::add(s, b.get(i, i), p))
        });
        return field::mul(tr, field::inv((d as u64 % p as u64) as u32, p), p);
    }
    // Frobenius: (l + n)^(p^k) = l once p^k exceeds the nilpotency index
    let mut e = p as u64;
    while e < d as u64 {
        e *= p as u64;
    }
    let b = h.blocks().iter().find(|b| b.rows() > 0).expect("nonzero module");
    b.pow(e).get(0, 0)
}

/// Whether a family of endomorphisms spans a nilpotent subspace of End(m)
/// (every product of `dim m` of them vanishes).
fn span_is_nilpotent(maps: &[ModuleMap]) -> bool {
    if maps.is_empty() {
        return true;
    }
    let d = maps[0].src().dim();
    let mut power: Vec<ModuleMap> = maps.to_vec();
    for _ in 0..=d {
        let mut next = Vec::new();
        for a in &power {
            for b in maps {
                let c = a.compose(b);
                if !c.is_zero() {
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        let idx = crate::module::independent_maps(&next);
        power = idx.into_iter().map(|i| next[i].clone()).collect();
    }
    false
}

enum Split {
    Local,
    Pieces(Vec<FMatrix>, Vec<FMatrix>),
}

/// Try to split `m` using the endomorphism `h`.
fn fitting(h: &ModuleMap) -> Result<Option<(Vec<FMatrix>, Vec<FMatrix>)>> {
    let p = h.src().char();
    let full = h.matrix();
    let mu = poly::minimal_polynomial(&full);
    if poly::single_root_power(&mu, p).is_some() {
        return Ok(None);
    }
    let roots = poly::roots(&mu, p);
    let Some(&l) = roots.first() else {
        return Err(Error::NonSplit);
    };
    let d = h.src().dim() as u64;
    let mut kers = Vec::new();
    let mut ims = Vec::new();
    for b in h.blocks() {
        let z = b.sub(&FMatrix::scalar(p, b.rows(), l)).pow(d);
        kers.push(z.kernel_basis());
        ims.push(z.image_basis());
    }
    Ok(Some((kers, ims)))
}

fn try_split(m: &FDModule, seed: u64) -> Result<Split> {
    let end = hom_basis(m, m)?;
    if end.len() <= 1 {
        return Ok(Split::Local);
    }
    let p = m.char();
    let mut nil = Vec::new();
    let mut nonsplit = false;
    let attempt = |h: &ModuleMap, nil: &mut Vec<ModuleMap>, nonsplit: &mut bool| -> Result<Option<Split>> {
        match fitting(h) {
            Ok(Some((k, i))) => {
                let kdim: usize = k.iter().map(|x| x.cols()).sum();
                if kdim > 0 && kdim < m.dim() {
                    return Ok(Some(Split::Pieces(k, i)));
                }
                Ok(None)
            }
            Ok(None) => {
                let l = local_scalar_general(h);
                nil.push(h.sub(&ModuleMap::identity(m).scale(l)));
                Ok(None)
            }
            Err(Error::NonSplit) => {
                *nonsplit = true;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };
    for h in &end {
        if let Some(s) = attempt(h, &mut nil, &mut nonsplit)? {
            return Ok(s);
        }
    }
    if !nonsplit && nil.len() == end.len() && span_is_nilpotent(&nil) {
        return Ok(Split::Local);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIALS {
        let mut h = ModuleMap::zero(m, m);
        for b in &end {
            h = h.add(&b.scale(rng.gen_range(0..p)));
        }
        if let Some(s) = attempt(&h, &mut nil, &mut nonsplit)? {
            return Ok(s);
        }
    }
    if nonsplit {
        return Err(Error::NonSplit);
    }
    if span_is_nilpotent(&nil) {
        return Ok(Split::Local);
    }
    Err(Error::Inconclusive("endomorphism ring neither split nor certified local".into()))
}

/// Scalar `l` with `h - l` nilpotent, for `h` whose minimal polynomial is a
/// power of a linear factor.
fn local_scalar_general(h: &ModuleMap) -> u32 {
    let p = h.src().char();
    let mu = poly::minimal_polynomial(&h.matrix());
    poly::single_root_power(&mu, p).expect("caller checked")
}

/// Split `m` into indecomposable summands with inclusions and projections.
pub fn split_summands(m: &FDModule) -> Result<Vec<Summand>> {
    split_summands_seeded(m, seed())
}

pub fn split_summands_seeded(m: &FDModule, seed: u64) -> Result<Vec<Summand>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    match try_split(m, seed)? {
        Split::Local => Ok(vec![Summand {
            module: m.clone(),
            incl: ModuleMap::identity(m),
            proj: ModuleMap::identity(m),
        }]),
        Split::Pieces(k, i) => {
            let (kb, ib) = (k, i);
            let p = m.char();
            let (km, kincl) = m.submodule(kb.clone());
            let (im, iincl) = m.submodule(ib.clone());
            // projections from the direct sum decomposition M = K + I
            let mut kproj = Vec::new();
            let mut iproj = Vec::new();
            for v in 0..kb.len() {
                let both = FMatrix::hstack(p, m.dims()[v], &[&kb[v], &ib[v]]);
                let inv = both.inverse().expect("Fitting decomposition is direct");
                let kc = kb[v].cols();
                kproj.push(inv.block(0, kc, 0, m.dims()[v]));
                iproj.push(inv.block(kc, inv.rows(), 0, m.dims()[v]));
            }
            let kproj = ModuleMap::from_blocks(m, &km, kproj)?;
            let iproj = ModuleMap::from_blocks(m, &im, iproj)?;
            let mut out = Vec::new();
            for (sub, incl, proj) in [(km, kincl, kproj), (im, iincl, iproj)] {
                for s in split_summands_seeded(&sub, seed)? {
                    out.push(Summand {
                        module: s.module,
                        incl: incl.compose(&s.incl),
                        proj: s.proj.compose(&proj),
                    });
                }
            }
            Ok(out)
        }
    }
}

/// Whether `m` is nonzero with a local endomorphism ring.
pub fn is_indecomposable(m: &FDModule) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(try_split(m, seed())?, Split::Local))
}

/// Isomorphism test when `m` is known to be indecomposable: exact via the
/// pairing `(f, g) -> scalar(g o f)` on `Hom(m, n) x Hom(n, m)`.
pub fn iso_to_indecomposable(m: &FDModule, n: &FDModule) -> Result<Option<ModuleMap>> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleMap::zero(m, n)));
    }
    let hf = hom_basis(m, n)?;
    if hf.is_empty() {
        return Ok(None);
    }
    let hg = hom_basis(n, m)?;
    for f in &hf {
        for g in &hg {
            if local_scalar(&g.compose(f)) != 0 {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Invariants that must agree for isomorphic modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoKey {
    pub dims: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    pub end_dim: usize,
}

pub fn iso_key(m: &FDModule) -> Result<IsoKey> {
    Ok(IsoKey {
        dims: m.dims().to_vec(),
        top: m.top_vector(),
        socle: m.socle_vector(),
        end_dim: hom_space(m, m)?.dim(),
    })
}

/// General isomorphism test.
///
/// Dimension vectors first, then a seeded random search for an invertible
/// homomorphism, then comparison of indecomposable decompositions.
pub fn is_isomorphic(m: &FDModule, n: &FDModule) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let hf = hom_basis(m, n)?;
    if hf.is_empty() {
        return Ok(false);
    }
    let p = m.char();
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    for _ in 0..ISO_TRIALS {
        let mut f = ModuleMap::zero(m, n);
        for b in &hf {
            f = f.add(&b.scale(rng.gen_range(0..p)));
        }
        if f.is_iso() {
            return Ok(true);
        }
    }
    let dm = split_summands(m)?;
    let dn = split_summands(n)?;
    same_multiset(&dm, &dn)
}

fn same_multiset(a: &[Summand], b: &[Summand]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && iso_to_indecomposable(&x.module, &y.module)?.is_some() {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Decomposition into isomorphism classes with multiplicities.
pub fn decompose(m: &FDModule) -> Result<Vec<(FDModule, usize)>> {
    let pieces = split_summands(m)?;
    let mut out: Vec<(FDModule, usize)> = Vec::new();
    'next: for s in pieces {
        for (u, k) in out.iter_mut() {
            if iso_to_indecomposable(u, &s.module)?.is_some() {
                *k += 1;
                continue 'next;
            }
        }
        out.push((s.module, 1));
    }
    out.sort_by(|a, b| a.0.dims().cmp(b.0.dims()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{a3, dual_numbers, simple};
    use crate::module::{projective, projective_sum};

    #[test]
    fn regular_module_of_a3() {
        let a = a3();
        let reg = projective_sum(&a, &[0, 1, 2]);
        let d = decompose(&reg).unwrap();
        let dims: Vec<Vec<usize>> = d.iter().map(|(m, k)| {
            assert_eq!(*k, 1);
            m.dims().to_vec()
        }).collect();
        assert_eq!(dims, vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn repeated_summand() {
        let a = a3();
        let m = projective_sum(&a, &[1, 1]);
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(&d[0].0, &projective(&a, 1)).unwrap());
    }

    #[test]
    fn summands_recompose() {
        let a = dual_numbers();
        let m = FDModule::direct_sum(&a, &[projective(&a, 0), simple(&a, 0), simple(&a, 0)]).0;
        let parts = split_summands(&m).unwrap();
        assert_eq!(parts.len(), 3);
        let mut id = ModuleMap::zero(&m, &m);
        for s in &parts {
            assert!(s.proj.compose(&s.incl).matrix().is_identity());
            id = id.add(&s.incl.compose(&s.proj));
        }
        assert!(id.matrix().is_identity());
    }

    #[test]
    fn iso_examples() {
        let a = a3();
        let p2 = projective(&a, 1);
        assert!(is_isomorphic(&p2, &p2).unwrap());
        assert!(!is_isomorphic(&p2, &simple(&a, 1)).unwrap());
        assert!(is_indecomposable(&p2).unwrap());
        assert!(!is_indecomposable(&projective_sum(&a, &[0, 2])).unwrap());
    }

    #[test]
    fn scalar_part() {
        let a = dual_numbers();
        let pr = projective(&a, 0);
        for h in hom_basis(&pr, &pr).unwrap() {
            let l = local_scalar(&h);
            let n = h.sub(&ModuleMap::identity(&pr).scale(l));
            assert!(n.compose(&n).is_zero());
        }
    }
}
