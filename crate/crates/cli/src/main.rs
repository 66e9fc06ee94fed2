use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lozenge::counting::{count_bruteforce, count_lgv, first_tiling, tiling_to_paths};
use lozenge::formulas::closed_form;
use lozenge::region::{build_region, first_violation};
use lozenge::render;
use lozenge::verify::{self, formula_count, Suite, SuiteOptions};
use lozenge::DentedHexParams;
use serde_json::{json, Value};

mod spec;

use spec::{parse_bounds, parse_range, RegionSpec};

const FORMAT: u32 = 1;

#[derive(Parser)]
#[command(name = "lozenge", version, about = "Count, check and draw lozenge tilings of dented hexagons")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of tilings.
    Count {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = CountMethod::Auto)]
        method: CountMethod,
    },
    /// Whether the region can be tiled, with the first violated line if not.
    Tileable {
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Draw the region, its first tiling or that tiling's paths.
    Render {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Which::Region)]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Size limits, e.g. `b=2,c=2,m=2,n=2,a=3`.
        #[arg(long, default_value = "")]
        bounds: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        inject_fault: i64,
    },
    /// Counts over a grid of shapes, as CSV.
    Sweep {
        #[arg(long = "a", default_value = "0..3")]
        a: String,
        #[arg(long = "b", default_value = "1..2")]
        b: String,
        #[arg(long = "c", default_value = "1..2")]
        c: String,
        /// Total number of dents.
        #[arg(long, default_value = "0..2")]
        dents: String,
        #[arg(long, value_enum, default_value_t = CountMethod::Auto)]
        method: CountMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RegionArgs {
    /// JSON region spec, or `-` for standard input.
    #[arg(long, conflicts_with_all = ["a", "b", "c", "t", "u", "v"])]
    spec: Option<PathBuf>,
    #[arg(short)]
    a: Option<u32>,
    #[arg(short)]
    b: Option<u32>,
    #[arg(short)]
    c: Option<u32>,
    /// Defaults to the number of dents.
    #[arg(short)]
    t: Option<u32>,
    /// Northeast dents, e.g. `-u 2,5`.
    #[arg(short, value_delimiter = ',')]
    u: Vec<u32>,
    /// Northwest dents.
    #[arg(short, value_delimiter = ',')]
    v: Vec<u32>,
}

impl RegionArgs {
    fn spec(&self) -> Result<RegionSpec> {
        if let Some(path) = &self.spec {
            return RegionSpec::read(path);
        }
        let need = |x: Option<u32>, name: &str| x.with_context(|| format!("missing -{name} (or pass --spec)"));
        Ok(RegionSpec {
            a: need(self.a, "a")?,
            b: need(self.b, "b")?,
            c: need(self.c, "c")?,
            t: self.t,
            u: self.u.clone(),
            v: self.v.clone(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Auto,
    Brute,
    Lgv,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Region,
    FirstTiling,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Cross,
    Kuo,
    Monotone,
    Poly,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Cross => Suite::Cross,
            SuiteArg::Kuo => Suite::Kuo,
            SuiteArg::Monotone => Suite::Monotone,
            SuiteArg::Poly => Suite::Poly,
            SuiteArg::All => Suite::All,
        }
    }
}

/// An error carrying its exit status.
struct Exit(u8, anyhow::Error);

fn invalid(e: anyhow::Error) -> Exit {
    Exit(2, e)
}

fn load(region: &RegionArgs, balanced: bool) -> Result<DentedHexParams, Exit> {
    let p = region.spec().and_then(|s| s.params()).map_err(invalid)?;
    if balanced {
        p.ensure_balanced().map_err(|e| invalid(e.into()))?;
    }
    Ok(p)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

/// Count and the method that produced it.
fn count(p: &DentedHexParams, method: CountMethod) -> Result<(String, &'static str, Option<String>)> {
    Ok(match method {
        CountMethod::Brute => (count_bruteforce(&build_region(p)).to_string(), "brute", None),
        CountMethod::Lgv => (count_lgv(p)?.to_string(), "lgv", None),
        CountMethod::Formula => {
            let (c, route) = formula_count(p)?;
            (c.to_string(), "formula", Some(route))
        }
        CountMethod::Auto => match closed_form(p) {
            Some(Ok((c, route))) => (c.to_string(), "formula", Some(route.to_string())),
            _ => (count_lgv(p)?.to_string(), "lgv", None),
        },
    })
}

fn cmd_count(region: &RegionArgs, method: CountMethod) -> Result<(), Exit> {
    let p = load(region, true)?;
    let start = Instant::now();
    let (n, used, route) = count(&p, method).map_err(|e| Exit(1, e))?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let tileable = first_violation(&p).map_err(|e| invalid(e.into()))?.is_none();
    let mut timings = BTreeMap::new();
    timings.insert(used, ms);
    let mut doc = json!({
        "format": FORMAT,
        "spec": RegionSpec::from_params(&p),
        "count": n,
        "method": used,
        "tileable": tileable,
        "timings_ms": timings,
    });
    if let Some(route) = route {
        doc["route"] = json!(route);
    }
    emit(None, &to_json(&doc)).map_err(|e| Exit(1, e))
}

fn cmd_tileable(region: &RegionArgs) -> Result<(), Exit> {
    let p = load(region, true)?;
    let witness = first_violation(&p).map_err(|e| invalid(e.into()))?;
    let doc = json!({
        "format": FORMAT,
        "spec": RegionSpec::from_params(&p),
        "tileable": witness.is_none(),
        "witness_N": witness,
    });
    emit(None, &to_json(&doc)).map_err(|e| Exit(1, e))
}

fn cmd_render(region: &RegionArgs, format: Format, which: Which, out: Option<&PathBuf>) -> Result<(), Exit> {
    let p = load(region, false)?;
    let r = build_region(&p);
    let dents = p.dent_cells();
    let text = match which {
        Which::Region => match format {
            Format::Svg => render::svg_region(&r, &dents),
            Format::Ascii => render::ascii_region(&r, &dents),
        },
        Which::FirstTiling | Which::Paths => {
            let t = first_tiling(&r).ok_or_else(|| Exit(3, anyhow::anyhow!("{p} has no tilings")))?;
            match (which, format) {
                (Which::FirstTiling, Format::Svg) => render::svg_tiling(&r, &dents, &t),
                (Which::FirstTiling, Format::Ascii) => render::ascii_tiling(&r, &dents, &t),
                (_, Format::Svg) => render::svg_paths(&r, &dents, &tiling_to_paths(&r, &t)),
                (_, Format::Ascii) => render::ascii_paths(&r, &dents, &tiling_to_paths(&r, &t)),
            }
        }
    };
    emit(out, &text).map_err(|e| Exit(1, e))
}

fn cmd_verify(suite: SuiteArg, bounds: &str, seed: u64, out: Option<&PathBuf>, fault: i64) -> Result<(), Exit> {
    let bounds = parse_bounds(bounds).map_err(invalid)?;
    let opts = SuiteOptions { seed, bounds, underline_fault: fault };
    let rep = verify::run_suite(suite.into(), &opts);
    let mut doc = serde_json::to_value(&rep).expect("reports serialize");
    doc["format"] = json!(FORMAT);
    emit(out, &to_json(&doc)).map_err(|e| Exit(1, e))?;
    if rep.passed {
        return Ok(());
    }
    let mut err = std::io::stderr();
    for f in &rep.failures {
        let _ = writeln!(err, "{f}");
    }
    for p in &rep.offending {
        let _ = writeln!(
            err,
            "offending spec: {}",
            serde_json::to_string(&RegionSpec::from_params(p)).expect("specs serialize")
        );
    }
    Err(Exit(1, anyhow::anyhow!("{} check(s) failed", rep.failures.len())))
}

fn subsets(max: u32, size: u32) -> Vec<Vec<u32>> {
    if size == 0 {
        return vec![vec![]];
    }
    (size..=max)
        .flat_map(|last| {
            subsets(last - 1, size - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn cmd_sweep(ranges: [&str; 4], method: CountMethod, out: Option<&PathBuf>) -> Result<(), Exit> {
    let [ra, rb, rc, rd] = ranges.map(|s| parse_range(s).map_err(invalid));
    let ((a0, a1), (b0, b1), (c0, c1), (d0, d1)) = (ra?, rb?, rc?, rd?);
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = ["a", "b", "c", "t", "u", "v", "tileable", "count", "method"];
    w.write_record(header).map_err(|e| Exit(1, e.into()))?;
    let join = |d: &[u32]| d.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    for b in b0..=b1 {
        for c in c0..=c1 {
            for k in d0..=d1 {
                for m in 0..=k {
                    for u in subsets(b + k, m) {
                        for v in subsets(c + k, k - m) {
                            for a in a0..=a1 {
                                let Ok(p) = DentedHexParams::new(a, b, c, k, u.clone(), v.clone()) else { continue };
                                let tileable = first_violation(&p).map_err(|e| Exit(1, e.into()))?.is_none();
                                let (n, used, _) = count(&p, method).map_err(|e| Exit(1, e))?;
                                let row = [
                                    a.to_string(),
                                    b.to_string(),
                                    c.to_string(),
                                    k.to_string(),
                                    join(&u),
                                    join(&v),
                                    tileable.to_string(),
                                    n,
                                    used.to_string(),
                                ];
                                w.write_record(&row).map_err(|e| Exit(1, e.into()))?;
                            }
                        }
                    }
                }
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Exit(1, anyhow::anyhow!("{e}")))?;
    emit(out, &String::from_utf8(bytes).expect("CSV of ASCII fields")).map_err(|e| Exit(1, e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Count { region, method } => cmd_count(region, *method),
        Cmd::Tileable { region } => cmd_tileable(region),
        Cmd::Render { region, format, which, out } => cmd_render(region, *format, *which, out.as_ref()),
        Cmd::Verify { suite, bounds, seed, out, inject_fault } => {
            cmd_verify(*suite, bounds, *seed, out.as_ref(), *inject_fault)
        }
        Cmd::Sweep { a, b, c, dents, method, out } => cmd_sweep([a, b, c, dents], *method, out.as_ref()),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
