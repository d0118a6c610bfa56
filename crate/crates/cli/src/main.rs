use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latpoly::artinian::artinian_hilbert_function;
use latpoly::classify::{
    census_by_hstar, enumerate_2d, enumerate_simplices, scan_leading_coefficient, scan_scott,
    ClassEntry, ClassificationTable, DEFAULT_VMAX,
};
use latpoly::ehrhart::hstar_report;
use latpoly::io::{parse_polytope, PolytopeJson};
use latpoly::monoid::minimal_monoid_generators;
use latpoly::normal_form::{are_equivalent, normal_form};
use latpoly::points::{interior_points_in_dilate, lattice_points_in_dilate};
use latpoly::pyramid::{geometric_pyramid_apexes, k_fold_pyramid, peel};
use latpoly::toric::{
    algebraic_pyramid_apexes, binomial_count_bound, compare_pyramid_detectors, stabilization_index,
    theorem_bound, toric_ideal_minimal_generators, Binomial,
};
use latpoly::verify::{run_verify_all, SCOTT_VMAX};
use latpoly::volume::normalized_volume;
use latpoly::{Error, LatticePolytope};
use serde_json::{json, Value};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "latpoly",
    version,
    about = "Exact Ehrhart theory and lattice pyramids"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// h*-polynomial, degree, codegree and normalized volume
    Hstar { file: PathBuf },
    /// Lattice points of the k-th dilate
    Points {
        file: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: u64,
        /// Count interior points only
        #[arg(long)]
        interior: bool,
    },
    /// Normalized volume
    Volume { file: PathBuf },
    /// Canonical form under affine unimodular maps
    NormalForm { file: PathBuf },
    /// Whether two polytopes are affinely unimodularly equivalent
    Equiv { first: PathBuf, second: PathBuf },
    /// Build, detect or peel lattice pyramids
    Pyramid {
        #[command(subcommand)]
        action: PyramidAction,
    },
    /// Minimal generators of the graded monoid
    MonoidGens { file: PathBuf },
    /// Minimal binomial generators of the toric ideal
    ToricIdeal { file: PathBuf },
    /// Pyramid apexes read off from the toric ideal, compared with geometry
    PyramidAlgebraic { file: PathBuf },
    /// Dimension bound and binomial count bound for degree d and volume V
    Bound { d: u64, v: u64 },
    /// Hilbert function of an artinian reduction
    Artinian {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Classes of polytopes with given dimension and normalized volume
    Classify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        volume: u64,
        #[arg(long)]
        simplices_only: bool,
        /// Search box side length for polygons (defaults to the volume)
        #[arg(long = "box")]
        box_size: Option<u64>,
    },
    /// Check h*_1 <= 3 h*_2 + 4 on all polygons of small volume
    ScanScott {
        #[arg(long, default_value_t = SCOTT_VMAX)]
        vmax: u64,
    },
    /// Class counts per h*-polynomial for polygons of small volume
    Census {
        #[arg(long, default_value_t = DEFAULT_VMAX)]
        vmax: u64,
    },
    /// Run every property suite over a corpus directory
    VerifyAll {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PyramidAction {
    /// The k-fold pyramid
    Build {
        file: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        times: usize,
    },
    /// Vertices that are pyramid apexes
    Detect { file: PathBuf },
    /// Strip apexes until none is left
    Peel { file: PathBuf },
}

/// A finished command: its payload and whether an invariant was violated.
struct Outcome {
    value: Value,
    table: String,
    ok: bool,
}

impl Outcome {
    fn ok(value: Value, table: String) -> Self {
        Outcome {
            value,
            table,
            ok: true,
        }
    }
}

fn read_input(path: &Path) -> Result<LatticePolytope, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_polytope(&text)
}

fn polytope_json(p: &LatticePolytope) -> Value {
    serde_json::to_value(PolytopeJson::from(p)).expect("serializable")
}

fn class_json(c: &ClassEntry) -> Value {
    json!({
        "normalForm": c.normal_form.matrix,
        "hstar": c.hstar,
        "nv": c.nv,
        "degree": c.degree,
        "vertices": c.representative,
    })
}

fn exps_json(m: &[u32]) -> Value {
    let map: serde_json::Map<String, Value> = m
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| (i.to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

fn binomial_json(b: &Binomial) -> Value {
    json!({"plus": exps_json(&b.plus), "minus": exps_json(&b.minus), "degree": b.degree})
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Hstar { file } => {
            let p = read_input(&file)?;
            let r = hstar_report(&p)?;
            let h = latpoly::HStarPolynomial::new(r.hstar.clone(), p.dim())?;
            let table = format!(
                "h*       {h}\ndegree   {}\ncodegree {}\nnv       {}\n",
                r.degree, r.codegree, r.nv
            );
            Outcome::ok(serde_json::to_value(&r).expect("serializable"), table)
        }
        Command::Points { file, k, interior } => {
            let p = read_input(&file)?;
            let pts = if interior {
                interior_points_in_dilate(&p, k)
            } else {
                lattice_points_in_dilate(&p, k)
            };
            let table = format!("{} points\n", pts.len());
            Outcome::ok(
                json!({"k": k, "interior": interior, "count": pts.len(), "points": pts}),
                table,
            )
        }
        Command::Volume { file } => {
            let nv = normalized_volume(&read_input(&file)?)?;
            Outcome::ok(json!({ "nv": nv }), format!("{nv}\n"))
        }
        Command::NormalForm { file } => {
            let nf = normal_form(&read_input(&file)?)?;
            let table: String = nf
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| format!("{x:>4}")).collect::<String>() + "\n")
                .collect();
            Outcome::ok(serde_json::to_value(&nf).expect("serializable"), table)
        }
        Command::Equiv { first, second } => {
            let (p, q) = (read_input(&first)?, read_input(&second)?);
            let eq = are_equivalent(&p, &q)?;
            Outcome::ok(json!({ "equivalent": eq }), format!("{eq}\n"))
        }
        Command::Pyramid { action } => match action {
            PyramidAction::Build { file, times } => {
                let q = k_fold_pyramid(&read_input(&file)?, times);
                Outcome::ok(polytope_json(&q), latpoly::io::to_text(&q))
            }
            PyramidAction::Detect { file } => {
                let p = read_input(&file)?;
                let apexes: Vec<_> = geometric_pyramid_apexes(&p)
                    .into_iter()
                    .map(|i| p.vertices()[i].clone())
                    .collect();
                let table = format!("{} apexes: {apexes:?}\n", apexes.len());
                Outcome::ok(
                    json!({ "apexes": apexes, "isPyramid": !apexes.is_empty() }),
                    table,
                )
            }
            PyramidAction::Peel { file } => {
                let d = peel(&read_input(&file)?)?;
                let table = format!(
                    "multiplicity {}\ncore dimension {}\n",
                    d.multiplicity, d.core.dim
                );
                Outcome::ok(serde_json::to_value(&d).expect("serializable"), table)
            }
        },
        Command::MonoidGens { file } => {
            let g = minimal_monoid_generators(&read_input(&file)?)?;
            let table: String = g.generators.iter().map(|x| format!("{x:?}\n")).collect();
            Outcome::ok(
                json!({
                    "generators": g.generators,
                    "count": g.len(),
                    "countByDegree": g.count_by_degree(),
                    "maxDegree": g.max_degree(),
                }),
                table,
            )
        }
        Command::ToricIdeal { file } => {
            let g = minimal_monoid_generators(&read_input(&file)?)?;
            let pres = toric_ideal_minimal_generators(&g)?;
            let vars: Vec<Value> = g
                .generators
                .iter()
                .enumerate()
                .map(|(i, x)| json!({"index": i, "generator": x, "degree": g.degree_of(i)}))
                .collect();
            let per_degree: serde_json::Map<String, Value> = pres
                .per_degree_counts
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            let table: String = pres
                .minimal_generators
                .iter()
                .map(|b| format!("deg {}: {:?} - {:?}\n", b.degree, b.plus, b.minus))
                .collect();
            Outcome::ok(
                json!({
                    "variables": vars,
                    "binomials": pres.minimal_generators.iter().map(binomial_json).collect::<Vec<_>>(),
                    "perDegreeCounts": per_degree,
                }),
                table,
            )
        }
        Command::PyramidAlgebraic { file } => {
            let p = read_input(&file)?;
            let g = minimal_monoid_generators(&p)?;
            let pres = toric_ideal_minimal_generators(&g)?;
            let c = compare_pyramid_detectors(&p)?;
            let table = format!(
                "algebraic {:?}\ngeometric {:?}\nagree {}\n",
                c.algebraic, c.geometric, c.agree
            );
            Outcome {
                value: json!({
                    "apexIndices": algebraic_pyramid_apexes(&pres),
                    "algebraic": c.algebraic,
                    "geometric": c.geometric,
                    "basesEquivalent": c.bases_equivalent,
                    "agree": c.agree,
                }),
                table,
                ok: c.agree,
            }
        }
        Command::Bound { d, v } => {
            if d == 0 || v == 0 {
                return Err(Error::InvalidInput("d and V must be positive".into()));
            }
            let (b, nu, c) = (
                theorem_bound(d, v),
                stabilization_index(d, v),
                binomial_count_bound(d, v),
            );
            let table = format!("bound {b}\nstabilization {nu}\nbinomials {c}\n");
            Outcome::ok(
                json!({
                    "d": d,
                    "V": v,
                    "theoremBound": b.to_string(),
                    "stabilizationIndex": nu.to_string(),
                    "binomialCountBound": c.to_string(),
                }),
                table,
            )
        }
        Command::Artinian { file, seed } => {
            let h = artinian_hilbert_function(&read_input(&file)?, seed)?;
            Outcome::ok(
                json!({ "seed": seed, "hilbertFunction": h }),
                format!("{h:?}\n"),
            )
        }
        Command::Classify {
            dim,
            volume,
            simplices_only,
            box_size,
        } => {
            let classes = classify(dim, volume, simplices_only, box_size)?;
            let table: String = classes
                .iter()
                .map(|c| {
                    format!(
                        "nv {} deg {} h* {:?} {:?}\n",
                        c.nv, c.degree, c.hstar, c.representative
                    )
                })
                .collect();
            Outcome::ok(
                Value::Array(classes.iter().map(class_json).collect()),
                table,
            )
        }
        Command::ScanScott { vmax } => {
            let tables = polygon_tables(vmax)?;
            let r = scan_scott(&tables);
            let table = format!(
                "checked {}\nviolations {}\nmin slack {:?}\ntight {:?}\n",
                r.checked,
                r.violations.len(),
                r.min_slack,
                r.tight
            );
            let lead = scan_leading_coefficient(&tables);
            let mut value = serde_json::to_value(&r).expect("serializable");
            value["leadingCoefficient"] = serde_json::to_value(&lead).expect("serializable");
            Outcome {
                ok: r.passed(),
                value,
                table,
            }
        }
        Command::Census { vmax } => {
            let rows = census_by_hstar(&polygon_tables(vmax)?);
            let table: String = rows
                .iter()
                .map(|r| format!("{:?} n={} count={}\n", r.hstar, r.n, r.count))
                .collect();
            Outcome::ok(serde_json::to_value(&rows).expect("serializable"), table)
        }
        Command::VerifyAll { corpus, seed } => {
            let r = run_verify_all(&corpus, seed)?;
            let table: String = r
                .suites
                .iter()
                .map(|(k, s)| {
                    format!(
                        "{:<24} {} ({} checks)\n",
                        k,
                        if s.passed { "pass" } else { "FAIL" },
                        s.checked
                    )
                })
                .collect();
            Outcome {
                ok: r.passed,
                value: serde_json::from_str(&r.to_json()).expect("valid json"),
                table,
            }
        }
    })
}

fn polygon_tables(vmax: u64) -> Result<Vec<ClassificationTable>, Error> {
    Ok(enumerate_2d(vmax, None)?.into_values().collect())
}

fn classify(
    dim: usize,
    volume: u64,
    simplices_only: bool,
    box_size: Option<u64>,
) -> Result<Vec<ClassEntry>, Error> {
    if volume == 0 || dim == 0 {
        return Err(Error::InvalidInput(
            "dimension and volume must be positive".into(),
        ));
    }
    if simplices_only || dim == 1 {
        return Ok(enumerate_simplices(dim, volume)?.classes);
    }
    if dim != 2 {
        return Err(Error::InvalidInput(
            "full classification is only available in dimension 2; use --simplices-only".into(),
        ));
    }
    let tables = enumerate_2d(volume, box_size)?;
    Ok(tables
        .into_iter()
        .filter(|((v, _), _)| *v == volume)
        .flat_map(|(_, t)| t.classes)
        .collect())
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) | Error::RegularSequenceNotFound { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&out.value).expect("serializable") + "\n"
                }
                Format::Table => out.table,
            };
            // A closed pipe downstream is not an error worth reporting.
            let _ = std::io::stdout().write_all(text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
