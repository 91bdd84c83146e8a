use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use artransfer::artheory::{all_indecomposables, ar_quiver_of, subcategory_ar_quiver, Budget};
use artransfer::functorq::gprj_functor_quiver;
use artransfer::gorenstein::{is_gorenstein_projective, selfinjective_dimension, Verdict, FALLBACK_DEPTH};
use artransfer::homological::{is_injective, is_projective};
use artransfer::io::{emit, parse_spec, Format};
use artransfer::morphcat::assemble_sx_fast;
use artransfer::stabfun::{gprj_context, module_category_context, AddXContext};
use artransfer::suites::{count_rows, verify_all, Status};
use artransfer::{build_algebra, t2, Algebra, Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "artransfer", version, about = "Auslander-Reiten quivers of bound quiver algebras over prime fields")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Override the field characteristic of the spec.
    #[arg(long, global = true)]
    field: Option<u32>,
    /// Largest module dimension explored.
    #[arg(long, global = true, default_value_t = Budget::default().max_dim)]
    max_dim: usize,
    /// Largest number of indecomposables explored.
    #[arg(long, global = true, default_value_t = Budget::default().max_count)]
    max_count: usize,
    /// Ext depth for Gorenstein projective tests when no bound is known.
    #[arg(long, global = true, default_value_t = FALLBACK_DEPTH)]
    depth: usize,
    #[arg(long, global = true, default_value_t = artransfer::decompose::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    #[arg(long, global = true, value_enum, default_value_t = Category::Mod)]
    category: Category,
}

#[derive(Subcommand)]
enum Verb {
    /// List the indecomposable modules.
    Indecs { spec: PathBuf },
    /// AR quiver of the module category, or of its Gorenstein projectives.
    ArQuiver { spec: PathBuf },
    /// Gorenstein projective verdicts and the self-injective dimension.
    Gprj { spec: PathBuf },
    /// Stable Auslander algebra of the chosen category.
    StableAus { spec: PathBuf },
    /// AR quiver of the submodule category over the chosen category.
    SubAr { spec: PathBuf },
    /// AR quiver of the Gorenstein projective functors over the stable
    /// Auslander algebra of T2 of the input.
    GprjFunctorQuiver {
        spec: PathBuf,
        /// Use the input algebra itself instead of T2 of it.
        #[arg(long)]
        no_triangular: bool,
    },
    /// Run every invariant suite.
    Verify { spec: PathBuf },
    /// Count identity for the submodule categories.
    Counts { spec: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Category {
    Mod,
    Gprj,
}

impl Cli {
    fn budget(&self) -> Budget {
        Budget { max_count: self.max_count, max_dim: self.max_dim }
    }

    fn quiver_format(&self) -> Format {
        match self.format {
            OutFormat::Dot => Format::Dot,
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
        }
    }

    fn load(&self, path: &PathBuf) -> Result<Algebra> {
        let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let mut spec = parse_spec(&text)?;
        if let Some(p) = self.field {
            spec.char = p;
        }
        build_algebra(&spec)
    }

    fn context(&self, alg: &Algebra) -> Result<AddXContext> {
        match self.category {
            Category::Mod => module_category_context(alg, self.budget()),
            Category::Gprj => gprj_context(alg, self.budget()),
        }
    }
}

fn flags(m: &artransfer::FDModule) -> String {
    let mut f = Vec::new();
    if is_projective(m) {
        f.push("projective");
    }
    if is_injective(m) {
        f.push("injective");
    }
    f.join(",")
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let budget = cli.budget();
    match &cli.verb {
        Verb::Indecs { spec } => {
            let alg = cli.load(spec)?;
            let u = all_indecomposables(&alg, budget)?;
            if !u.closed {
                return Err(Error::Budget(format!("closure stopped after {} modules", u.len())));
            }
            let order = u.canonical_order();
            let names = artransfer::artheory::standard_names(&alg, &u.modules, &order);
            let rows: Vec<_> = order
                .iter()
                .map(|&i| json!({"name": names[i], "dim_vector": u.modules[i].dims(), "flags": flags(&u.modules[i])}))
                .collect();
            Ok((
                match cli.format {
                    OutFormat::Json => serde_json::to_string_pretty(&rows).expect("json"),
                    _ => {
                        let mut s = format!("{} indecomposables\n", rows.len());
                        for &i in &order {
                            s.push_str(&format!("  {} {:?} {}\n", names[i], u.modules[i].dims(), flags(&u.modules[i])));
                        }
                        s
                    }
                },
                true,
            ))
        }
        Verb::ArQuiver { spec } => {
            let alg = cli.load(spec)?;
            let q = match cli.category {
                Category::Mod => ar_quiver_of(&all_indecomposables(&alg, budget)?)?,
                Category::Gprj => {
                    let ctx = gprj_context(&alg, budget)?;
                    subcategory_ar_quiver(&ctx.summands, &ctx.names)?
                }
            };
            Ok((emit(&q, cli.quiver_format()), true))
        }
        Verb::Gprj { spec } => {
            let alg = cli.load(spec)?;
            let d = selfinjective_dimension(&alg, cli.depth);
            let u = all_indecomposables(&alg, budget)?;
            if !u.closed {
                return Err(Error::Budget(format!("closure stopped after {} modules", u.len())));
            }
            let order = u.canonical_order();
            let names = artransfer::artheory::standard_names(&alg, &u.modules, &order);
            let mut rows = Vec::new();
            let mut inconclusive = false;
            for &i in &order {
                let r = is_gorenstein_projective(&u.modules[i], d.unwrap_or(cli.depth).max(1), d)?;
                inconclusive |= r.verdict == Verdict::Inconclusive || !r.exact;
                rows.push(json!({"name": names[i], "dim_vector": u.modules[i].dims(), "report": r}));
            }
            let doc = json!({"selfinjective_dimension": d, "modules": rows});
            let out = match cli.format {
                OutFormat::Json => serde_json::to_string_pretty(&doc).expect("json"),
                _ => {
                    let mut s = match d {
                        Some(d) => format!("self-injective dimension {d}\n"),
                        None => format!("self-injective dimension above {}\n", cli.depth),
                    };
                    for r in &rows {
                        s.push_str(&format!(
                            "  {} {} {}\n",
                            r["name"].as_str().unwrap_or(""),
                            r["dim_vector"],
                            r["report"]["verdict"].as_str().unwrap_or("")
                        ));
                    }
                    s
                }
            };
            if inconclusive {
                print!("{out}");
                return Err(Error::Inconclusive("Gorenstein bound not established".into()));
            }
            Ok((out, true))
        }
        Verb::StableAus { spec } => {
            let alg = cli.load(spec)?;
            let ctx = cli.context(&alg)?;
            let sa = &ctx.stable_aus;
            let g = sa.gabriel_quiver();
            let u = all_indecomposables(sa, budget)?;
            let vertices: Vec<String> = ctx.stable_vertices.iter().map(|&i| ctx.names[i].clone()).collect();
            let arrows: Vec<_> = g
                .arrows
                .iter()
                .map(|a| json!({"from": vertices[a.from], "to": vertices[a.to]}))
                .collect();
            let doc = json!({
                "dimension": sa.dim(),
                "vertices": vertices,
                "arrows": arrows,
                "indecomposables": if u.closed { Some(u.len()) } else { None },
            });
            Ok((
                match cli.format {
                    OutFormat::Json => serde_json::to_string_pretty(&doc).expect("json"),
                    _ => {
                        let mut s = format!("dimension {}\nvertices {}\n", sa.dim(), vertices.join(" "));
                        for a in &g.arrows {
                            s.push_str(&format!("  {} -> {}\n", vertices[a.from], vertices[a.to]));
                        }
                        match u.closed {
                            true => s.push_str(&format!("{} indecomposables\n", u.len())),
                            false => s.push_str(&format!("more than {} indecomposables\n", u.len())),
                        }
                        s
                    }
                },
                true,
            ))
        }
        Verb::SubAr { spec } => {
            let alg = cli.load(spec)?;
            let ctx = cli.context(&alg)?;
            let q = assemble_sx_fast(&ctx, &t2(&alg)?, budget)?;
            Ok((emit(&q, cli.quiver_format()), true))
        }
        Verb::GprjFunctorQuiver { spec, no_triangular } => {
            let base = cli.load(spec)?;
            let alg = if *no_triangular { base } else { t2(&base)? };
            let x = module_category_context(&alg, budget)?;
            let y = gprj_context(&alg, budget)?;
            let q = gprj_functor_quiver(&x, &y, budget)?;
            if !q.agree() {
                return Err(Error::Falsified("fast path and oracle disagree".into()));
            }
            Ok((emit(&q.fast, cli.quiver_format()), true))
        }
        Verb::Verify { spec } => {
            let alg = cli.load(spec)?;
            let checks = verify_all(&alg, budget);
            let ok = checks.iter().all(|c| c.status != Status::Fail);
            Ok((
                match cli.format {
                    OutFormat::Json => serde_json::to_string_pretty(&checks).expect("json"),
                    _ => checks
                        .iter()
                        .map(|c| {
                            let tag = match c.status {
                                Status::Pass => "PASS",
                                Status::Fail => "FAIL",
                                Status::Skip => "SKIP",
                            };
                            format!("{tag} {} ({}) {} ms\n", c.name, c.detail, c.millis)
                        })
                        .collect(),
                },
                ok,
            ))
        }
        Verb::Counts { spec } => {
            let alg = cli.load(spec)?;
            let rows = count_rows(&alg, budget)?;
            let ok = rows.iter().all(|r| r.status != Status::Fail);
            Ok((
                match cli.format {
                    OutFormat::Json => serde_json::to_string_pretty(&rows).expect("json"),
                    _ => {
                        let mut s = String::from("category  |X|  functors  |S_X|  2|X|+functors  status\n");
                        for r in &rows {
                            s.push_str(&format!(
                                "{:<9} {:>4} {:>9} {:>6} {:>14}  {}\n",
                                r.category,
                                r.x,
                                r.functors,
                                r.s.map_or("-".to_string(), |s| s.to_string()),
                                2 * r.x + r.functors,
                                match r.status {
                                    Status::Pass => "pass",
                                    Status::Fail => "fail",
                                    Status::Skip => "over budget",
                                }
                            ));
                        }
                        s
                    }
                },
                ok,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    artransfer::decompose::set_seed(cli.seed);
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
