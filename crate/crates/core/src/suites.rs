//! Invariant suites and the count identities, as run by the command line.

use std::time::Instant;

use serde::Serialize;

use crate::algebra::{t2, Algebra};
use crate::artheory::{
    all_indecomposables, almost_split_sequence, ar_quiver_of, check_tau_inverse, verify_almost_split, Budget,
};
use crate::decompose::{decompose, is_isomorphic};
use crate::error::{Error, Result};
use crate::functorq::{gprj_functor_quiver, upsilon_preserves_exactness, upsilon_preserves_homs};
use crate::homological::is_projective;
use crate::module::FDModule;
use crate::morphcat::{
    assemble_sx_fast, ext_projectives_in_s, sx_quiver_of, morph_encode, psi_kernel_is_v, s_universe,
    verify_trivial_meshes,
};
use crate::stabfun::{
    check_functor_syzygy, gprj_context, is_gprj_functor, module_category_context, AddXContext,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not decided within the budget.
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
}

impl Check {
    fn failed(name: impl Into<String>, e: &Error) -> Check {
        let status = if matches!(e, Error::Budget(_)) { Status::Skip } else { Status::Fail };
        Check { name: name.into(), status, detail: e.to_string(), millis: 0 }
    }
}

fn run(out: &mut Vec<Check>, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
    let t = Instant::now();
    let mut c = match f() {
        Ok((true, detail)) => Check { name: name.into(), status: Status::Pass, detail, millis: 0 },
        Ok((false, detail)) => Check { name: name.into(), status: Status::Fail, detail, millis: 0 },
        Err(e) => Check::failed(name, &e),
    };
    c.millis = t.elapsed().as_millis();
    out.push(c);
}

fn universe_checks(out: &mut Vec<Check>, alg: &Algebra, budget: Budget) {
    let u = match all_indecomposables(alg, budget) {
        Ok(u) if u.closed => u,
        Ok(u) => {
            out.push(Check::failed("mod closes", &Error::Budget(format!("stopped after {} modules", u.len()))));
            return;
        }
        Err(e) => {
            out.push(Check::failed("mod closes", &e));
            return;
        }
    };
    run(out, "mesh identity in mod", || {
        let q = ar_quiver_of(&u)?;
        q.check_meshes()?;
        Ok((true, format!("{} nodes", q.nodes.len())))
    });
    run(out, "tau and tau^-1 inverse", || {
        check_tau_inverse(&u)?;
        Ok((true, format!("{} modules", u.len())))
    });
    run(out, "almost split sequences", || {
        let mut n = 0;
        for (i, m) in u.modules.iter().enumerate() {
            if u.projective[i] {
                continue;
            }
            if !verify_almost_split(&almost_split_sequence(m)?, &u.modules)? {
                return Ok((false, format!("module {i}")));
            }
            n += 1;
        }
        Ok((true, format!("{n} sequences")))
    });
    run(out, "Krull-Schmidt recomposition", || {
        let mut n = 0;
        for i in 0..u.len() {
            for j in i..u.len() {
                let s = FDModule::sum(&[u.modules[i].clone(), u.modules[j].clone()]);
                let parts = decompose(&s)?;
                let total: usize = parts.iter().map(|p| p.1).sum();
                let back: Vec<FDModule> =
                    parts.iter().flat_map(|(m, k)| std::iter::repeat_n(m.clone(), *k)).collect();
                if total != 2 || !is_isomorphic(&FDModule::sum(&back), &s)? {
                    return Ok((false, format!("pair {i},{j}")));
                }
                n += 1;
            }
        }
        Ok((true, format!("{n} sums")))
    });
}

fn context_checks(out: &mut Vec<Check>, label: &str, ctx: &AddXContext, budget: Budget) {
    let t = match t2(&ctx.algebra) {
        Ok(t) => t,
        Err(e) => {
            out.push(Check::failed(format!("{label}: T2"), &e));
            return;
        }
    };
    let universe = s_universe(ctx, &t, budget);
    let fast = assemble_sx_fast(ctx, &t, budget);
    run(out, &format!("{label}: submodule category meshes"), || {
        let f = fast.clone()?;
        f.check_meshes()?;
        Ok((true, format!("{} nodes, {} arrows, {} tau", f.nodes.len(), f.arrows.len(), f.tau.len())))
    });
    run(out, &format!("{label}: submodule category fast path = oracle"), || {
        let f = fast.clone()?;
        let o = sx_quiver_of(ctx, &universe.clone()?)?;
        Ok((f.same_shape(&o), format!("{} oracle nodes", o.nodes.len())))
    });
    run(out, &format!("{label}: trivial meshes almost split"), || {
        let u = universe.clone()?;
        Ok((verify_trivial_meshes(ctx, &t, &u)?, format!("{} objects", u.len())))
    });
    run(out, &format!("{label}: kernel of Psi"), || {
        let u = universe.clone()?;
        Ok((psi_kernel_is_v(ctx, &u)?, String::new()))
    });
    run(out, &format!("{label}: Ext-projectives in S"), || {
        let u = universe.clone()?;
        let (proj, inj) = ext_projectives_in_s(ctx)?;
        let names: Vec<String> = (0..u.len()).map(|i| i.to_string()).collect();
        let q = crate::artheory::subcategory_ar_quiver(&u, &names)?;
        let listed = |objs: &[crate::morphcat::MorphObj], flag: fn(&crate::artheory::NodeFlags) -> bool| -> Result<bool> {
            let mods: Vec<FDModule> = objs.iter().map(|o| morph_encode(&t, o)).collect::<Result<_>>()?;
            for (i, m) in u.iter().enumerate() {
                let inside = crate::artheory::locate_in(&mods, m)?.is_some();
                if inside != flag(&q.nodes[i].flags) {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let ok = listed(&proj, |f| f.ext_projective)? && listed(&inj, |f| f.ext_injective)?;
        Ok((ok, format!("{} projective, {} injective", proj.len(), inj.len())))
    });
    let functors = all_indecomposables(&ctx.stable_aus, budget);
    run(out, &format!("{label}: syzygy formulas n <= 6"), || {
        let u = functors.clone()?;
        let mut n = 0;
        for (i, f) in u.modules.iter().enumerate() {
            if u.projective[i] {
                continue;
            }
            for k in 1..=6 {
                let c = check_functor_syzygy(ctx, f, k)?;
                if !(c.terms_match && c.functor_matches) {
                    return Ok((false, format!("functor {i}, n = {k}")));
                }
                n += 1;
            }
        }
        Ok((true, format!("{n} cases")))
    });
    run(out, &format!("{label}: Gprj verdicts agree"), || {
        let u = functors.clone()?;
        let mut n = 0;
        for (i, f) in u.modules.iter().enumerate() {
            if u.projective[i] {
                continue;
            }
            if !is_gprj_functor(ctx, f)?.agree() {
                return Ok((false, format!("functor {i}")));
            }
            n += 1;
        }
        Ok((true, format!("{n} functors")))
    });
}

/// Every invariant suite on one algebra.
pub fn verify_all(alg: &Algebra, budget: Budget) -> Vec<Check> {
    let mut out = Vec::new();
    universe_checks(&mut out, alg, budget);
    let x = module_category_context(alg, budget);
    let y = gprj_context(alg, budget);
    match &x {
        Ok(x) => context_checks(&mut out, "mod", x, budget),
        Err(e) => out.push(Check::failed("mod context", e)),
    }
    match (&x, &y) {
        (Ok(x), Ok(y)) if y.len() < x.len() && y.len() > y.summands.iter().filter(|m| is_projective(m)).count() => {
            context_checks(&mut out, "gprj", y, budget);
            run(&mut out, "Gprj functors fast path = oracle", || {
                let q = gprj_functor_quiver(x, y, budget)?;
                Ok((
                    q.agree() && q.image_is_small_quiver(),
                    format!("{} nodes, {} outside the image", q.fast.nodes.len(), q.outside_image.len()),
                ))
            });
            run(&mut out, "Upsilon exact and full on hom dimensions", || {
                Ok((upsilon_preserves_exactness(y, x, budget)? && upsilon_preserves_homs(y, x, budget)?, String::new()))
            });
        }
        (_, Err(e)) => out.push(Check::failed("gprj context", e)),
        _ => {}
    }
    out
}

/// One row of the count identity `|S_X| = 2 |X| + |stable functors|`,
/// with `|S_X|` counted inside `mod T_2(Λ)`.
#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub category: String,
    pub x: usize,
    pub functors: usize,
    /// `None` when the objects could not be enumerated within budget.
    pub s: Option<usize>,
    pub status: Status,
}

pub fn count_rows(alg: &Algebra, budget: Budget) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    let t = t2(alg)?;
    for (label, ctx) in [("mod", module_category_context(alg, budget)), ("gprj", gprj_context(alg, budget))] {
        let ctx = ctx?;
        let f = all_indecomposables(&ctx.stable_aus, budget)?;
        if !f.closed {
            return Err(Error::Budget(format!("stable functors: {} modules", f.len())));
        }
        let (s, status) = match s_universe(&ctx, &t, budget) {
            Ok(u) if u.len() == 2 * ctx.len() + f.len() => (Some(u.len()), Status::Pass),
            Ok(u) => (Some(u.len()), Status::Fail),
            Err(Error::Budget(_)) => (None, Status::Skip),
            Err(e) => return Err(e),
        };
        rows.push(CountRow { category: label.into(), x: ctx.len(), functors: f.len(), s, status });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{a3, dual_numbers, t2_dual};

    #[test]
    fn suites_pass_on_fixtures() {
        for alg in [a3(), t2_dual(), dual_numbers()] {
            for c in verify_all(&alg, Budget::default()) {
                let skip = c.status == Status::Skip && c.name.starts_with("mod:");
                assert!(c.status == Status::Pass || skip, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn counts() {
        let rows = count_rows(&t2_dual(), Budget::default()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].x, rows[0].functors, rows[0].status), (9, 52, Status::Skip));
        assert_eq!((rows[1].x, rows[1].functors, rows[1].s), (5, 6, Some(16)));
        assert_eq!(rows[1].status, Status::Pass);
        let rows = count_rows(&a3(), Budget::default()).unwrap();
        assert_eq!((rows[0].x, rows[0].functors, rows[0].s), (6, 5, Some(17)));
        assert_eq!((rows[1].x, rows[1].functors, rows[1].s), (3, 0, Some(6)));
    }
}
