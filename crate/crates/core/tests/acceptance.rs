use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use artransfer::artheory::{all_indecomposables, is_self_injective, ARQuiver, Budget};
use artransfer::functorq::{gprj_functor_quiver, upsilon_preserves_exactness, upsilon_preserves_homs};
use artransfer::gorenstein::selfinjective_dimension;
use artransfer::io::parse_spec;
use artransfer::morphcat::assemble_sx_quiver;
use artransfer::stabfun::{
    check_functor_syzygy, gprj_context, is_gprj_functor, module_category_context, tau_power_fixes, AddXContext,
};
use artransfer::suites::{verify_all, Status};
use artransfer::{build_algebra, Algebra, Result};
use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(name: &str) -> Algebra {
    let text = std::fs::read_to_string(root().join(name)).expect("fixture");
    build_algebra(&parse_spec(&text).expect("spec")).expect("algebra")
}

/// Labels of the golden files for the indecomposables of `T2(k[x]/(x^2))`.
const T2_DUAL_LABELS: [(&str, &str); 9] = [
    ("S1", "G3"),
    ("M1", "G1"),
    ("M3", "G2"),
    ("P1", "P1"),
    ("P2", "P2"),
    ("S2", "M"),
    ("I2", "U"),
    ("M2", "N"),
    ("M4", "T"),
];

fn relabel(ctx: &mut AddXContext) {
    for n in ctx.names.iter_mut() {
        if let Some((_, to)) = T2_DUAL_LABELS.iter().find(|(from, _)| from == n) {
            *n = to.to_string();
        }
    }
}

type Shape = (BTreeSet<String>, BTreeSet<(String, String)>, BTreeSet<(String, String)>);

fn golden(name: &str) -> Shape {
    let text = std::fs::read_to_string(root().join("golden").join(name)).expect("golden");
    let v: Value = serde_json::from_str(&text).expect("golden json");
    let pairs = |k: &str| -> BTreeSet<(String, String)> {
        v[k].as_array()
            .unwrap()
            .iter()
            .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
            .collect()
    };
    let nodes = v["nodes"].as_array().unwrap().iter().map(|n| n.as_str().unwrap().to_string()).collect();
    (nodes, pairs("arrows"), pairs("tau"))
}

fn shape(q: &ARQuiver) -> Shape {
    (
        q.nodes.iter().map(|n| n.name.clone()).collect(),
        q.named_arrows().into_iter().map(|(f, t, _, _)| (f, t)).collect(),
        q.named_tau().into_iter().collect(),
    )
}

fn matches_golden(q: &ARQuiver, file: &str) -> Result<bool> {
    let (g, s) = (golden(file), shape(q));
    if g != s {
        let missing: Vec<_> = g.1.difference(&s.1).collect();
        let extra: Vec<_> = s.1.difference(&g.1).collect();
        eprintln!("  {file}: missing arrows {missing:?}, extra arrows {extra:?}");
    }
    Ok(g == s)
}

/// `dim = vertices + arrows` means every path of length two vanishes.
fn radical_square_zero(alg: &Algebra) -> bool {
    let g = alg.gabriel_quiver();
    alg.dim() == g.vertices.len() + g.arrows.len()
}

fn criterion_1() -> Result<(bool, String)> {
    let b = Budget::default();
    let a = load("a3.json");
    let u = all_indecomposables(&a, b)?;
    let ctx = module_category_context(&a, b)?;
    let sa = &ctx.stable_aus;
    let g = sa.gabriel_quiver();
    let path = g.arrows.len() == 2 && {
        let mut ends: Vec<_> = g.arrows.iter().map(|a| (a.from, a.to)).collect();
        ends.sort();
        ends[0].1 == ends[1].0 || ends[1].1 == ends[0].0
    };
    let fu = all_indecomposables(sa, b)?;
    let q = assemble_sx_quiver(&ctx, b)?;
    let ok = u.len() == 6
        && sa.dim() == 5
        && g.vertices.len() == 3
        && path
        && radical_square_zero(sa)
        && fu.len() == 5
        && q.fast.nodes.len() == 17
        && matches_golden(&q.fast, "a3_submodule_category.json")?;
    Ok((ok, format!("{} modules, stable algebra dim {}, {} functors, {} nodes", u.len(), sa.dim(), fu.len(), q.fast.nodes.len())))
}

fn t2_dual_contexts() -> Result<(AddXContext, AddXContext)> {
    let a = load("t2dualnumbers.json");
    let mut x = module_category_context(&a, Budget::default())?;
    let mut y = gprj_context(&a, Budget::default())?;
    relabel(&mut x);
    relabel(&mut y);
    Ok((x, y))
}

fn criterion_2() -> Result<(bool, String)> {
    let b = Budget::default();
    let a = load("t2dualnumbers.json");
    let d = selfinjective_dimension(&a, 4);
    let u = all_indecomposables(&a, b)?;
    let (x, y) = t2_dual_contexts()?;
    let sb = &y.stable_aus;
    let g = sb.gabriel_quiver();
    let cycle = g.vertices.len() == 3
        && g.arrows.len() == 3
        && (0..3).all(|v| g.arrows.iter().filter(|a| a.from == v).count() == 1)
        && (0..3).all(|v| g.arrows.iter().filter(|a| a.to == v).count() == 1)
        && g.arrows.iter().all(|a| a.from != a.to);
    let fb = all_indecomposables(sb, b)?;
    let fq = gprj_functor_quiver(&x, &y, b)?;
    let sq = assemble_sx_quiver(&y, b)?;
    let ok = d == Some(1)
        && u.len() == 9
        && y.len() == 5
        && sb.dim() == 6
        && cycle
        && radical_square_zero(sb)
        && is_self_injective(sb)?
        && fb.len() == 6
        && fq.fast.nodes.len() == 10
        && matches_golden(&fq.fast, "t2dualnumbers_gprj_functors.json")?
        && sq.fast.nodes.len() == 16
        && matches_golden(&sq.fast, "t2dualnumbers_gprj_t2.json")?;
    Ok((
        ok,
        format!(
            "id {:?}, {} modules, {} Gprj, B dim {}, {} B-modules, {} and {} nodes",
            d,
            u.len(),
            y.len(),
            sb.dim(),
            fb.len(),
            fq.fast.nodes.len(),
            sq.fast.nodes.len()
        ),
    ))
}

fn criterion_3() -> Result<(bool, String)> {
    let b = Budget::default();
    let x3 = module_category_context(&load("nakayama-x3.json"), b)?;
    let (checked, fixed) = tau_power_fixes(&x3, 6, b)?;
    let x2 = module_category_context(&load("dualnumbers.json"), b)?;
    let vacuous = tau_power_fixes(&x2, 6, b)?;
    Ok((checked > 0 && checked == fixed && vacuous == (0, 0), format!("{fixed}/{checked} fixed, x^2 {vacuous:?}")))
}

fn criterion_4() -> Result<(bool, String)> {
    let b = Budget::default();
    let a3 = module_category_context(&load("a3.json"), b)?;
    let (x, y) = t2_dual_contexts()?;
    let p = assemble_sx_quiver(&a3, b)?.agree();
    let q = assemble_sx_quiver(&y, b)?.agree();
    let r = gprj_functor_quiver(&x, &y, b)?.agree();
    Ok((p && q && r, format!("A3 {p}, Gprj-T2 {q}, functors {r}")))
}

fn fixture_contexts() -> Result<Vec<AddXContext>> {
    let a3 = module_category_context(&load("a3.json"), Budget::default())?;
    let (x, y) = t2_dual_contexts()?;
    Ok(vec![a3, x, y])
}

fn criterion_5() -> Result<(bool, String)> {
    let mut n = 0;
    for ctx in fixture_contexts()? {
        let u = all_indecomposables(&ctx.stable_aus, Budget::default())?;
        for (i, f) in u.modules.iter().enumerate() {
            if u.projective[i] {
                continue;
            }
            for k in 1..=6 {
                let c = check_functor_syzygy(&ctx, f, k)?;
                if !(c.terms_match && c.functor_matches) {
                    return Ok((false, format!("functor {i}, n = {k}")));
                }
                n += 1;
            }
        }
    }
    Ok((true, format!("{n} cases")))
}

fn criterion_6() -> Result<(bool, String)> {
    let mut n = 0;
    for ctx in fixture_contexts()? {
        let u = all_indecomposables(&ctx.stable_aus, Budget::default())?;
        for (i, f) in u.modules.iter().enumerate() {
            if u.projective[i] {
                continue;
            }
            if !is_gprj_functor(&ctx, f)?.agree() {
                return Ok((false, format!("functor {i}")));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} functors")))
}

fn criterion_7() -> Result<(bool, String)> {
    let b = Budget::default();
    let (x, y) = t2_dual_contexts()?;
    let q = gprj_functor_quiver(&x, &y, b)?;
    let outside: BTreeSet<String> = q.outside_image.iter().map(|&i| q.fast.nodes[i].name.clone()).collect();
    let expected: BTreeSet<String> = ["(-,M)", "(-,N)", "(-,T)", "(-,U)"].iter().map(|s| s.to_string()).collect();
    let exact = upsilon_preserves_exactness(&y, &x, b)?;
    let homs = upsilon_preserves_homs(&y, &x, b)?;
    Ok((exact && homs && outside == expected, format!("exact {exact}, homs {homs}, outside {outside:?}")))
}

fn criterion_8() -> Result<(bool, String)> {
    let (mut pass, mut skip, mut fail) = (0, 0, Vec::new());
    for file in ["a3.json", "t2dualnumbers.json", "dualnumbers.json", "nakayama-x3.json"] {
        for c in verify_all(&load(file), Budget::default()) {
            match c.status {
                Status::Pass => pass += 1,
                Status::Skip => skip += 1,
                Status::Fail => fail.push(format!("{file}: {} ({})", c.name, c.detail)),
            }
        }
    }
    Ok((fail.is_empty(), format!("{pass} pass, {skip} over budget, failures {fail:?}")))
}

type Criterion = (&'static str, fn() -> Result<(bool, String)>, u128);

fn main() {
    let criteria: [Criterion; 8] = [
        ("A3 submodule category", criterion_1, 10_000),
        ("T2 of the dual numbers", criterion_2, 30_000),
        ("tau^6 on stable functors", criterion_3, 10_000),
        ("fast path = oracle", criterion_4, 60_000),
        ("syzygy formulas", criterion_5, 30_000),
        ("Gprj verdicts agree", criterion_6, u128::MAX),
        ("Upsilon certification", criterion_7, u128::MAX),
        ("property suites", criterion_8, 60_000),
    ];
    let mut failed = 0;
    for (k, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis();
        let (ok, detail) = match r {
            Ok((ok, d)) => (ok && ms < *limit, d),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        println!("{} criterion {}: {name}: {detail} ({ms} ms)", if ok { "PASS" } else { "FAIL" }, k + 1);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
