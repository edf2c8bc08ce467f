//! `lshapes`: semigroup invariants, minimum distance diagrams and the
//! L-shape family from the command line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lshape_core::family::{sabariego_santos, FamilyInstance, TABLE_ONE};
use lshape_core::{
    enumerate_mdds, factorizations, lshapes_closed, minimal_presentation, Diagram, Error, NumericalSemigroup,
    RenderFormat, WeightedCayleyDigraph,
};
use serde::Serialize;
use serde_json::{json, Value};

const LONG_T: u64 = 7;
const LONG_N: u64 = 43;

#[derive(Parser)]
#[command(name = "lshapes", version, about = "Numerical semigroups, Cayley digraphs and their L-shapes")]
struct Cli {
    /// Emit a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a numerical semigroup.
    Semigroup(SemigroupArgs),
    /// Minimum distance diagrams of a weighted Cayley digraph on Z_N.
    Mdd(MddArgs),
    /// The family S_n, the digraphs G_t and their table.
    Family(FamilyArgs),
}

#[derive(Args, Serialize)]
struct SemigroupArgs {
    /// Minimal generators, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
    /// Apéry set with respect to this element.
    #[arg(long)]
    apery: Option<u64>,
    #[arg(long)]
    frobenius: bool,
    /// Pseudo-Frobenius numbers.
    #[arg(long)]
    pf: bool,
    /// Factorizations of this element.
    #[arg(long)]
    factorize: Option<i64>,
    /// A minimal presentation.
    #[arg(long)]
    presentation: bool,
}

#[derive(Args, Serialize)]
struct MddArgs {
    #[arg(long)]
    modulus: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    steps: Vec<u64>,
    /// Arc weights; all 1 when omitted.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
    #[arg(long)]
    count: bool,
    /// Print every diagram as a point list.
    #[arg(long)]
    list: bool,
    /// Print every diagram as `ascii` or `json`.
    #[arg(long)]
    render: Option<String>,
    #[arg(long)]
    diameter: bool,
    /// Distance from u to v, given as `u,v`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    distance: Option<Vec<u64>>,
}

#[derive(Args, Serialize)]
struct FamilyArgs {
    /// Odd n ≥ 5.
    #[arg(long)]
    n: Option<u64>,
    /// The constructed L-shapes of Ap(S, F(T)).
    #[arg(long)]
    lshapes: bool,
    /// Print counts only.
    #[arg(long)]
    count: bool,
    /// Sizes of the classes M_i.
    #[arg(long)]
    mi: bool,
    /// Run every closed-form check against brute force.
    #[arg(long)]
    verify_all: bool,
    /// The digraph G_t.
    #[arg(long, value_name = "T")]
    sabariego_santos: Option<u64>,
    /// Use the steps of G_t as weights.
    #[arg(long)]
    weighted: bool,
    /// MDD counts of G_t as CSV.
    #[arg(long)]
    table1: bool,
    #[arg(long, value_name = "T", default_value_t = 5)]
    max_t: u64,
    /// Permit runs that take minutes or more.
    #[arg(long)]
    allow_long: bool,
}

#[derive(Serialize)]
struct RunReport<'a, P: Serialize> {
    command: String,
    params: &'a P,
    payload: Value,
    wall_time_ms: f64,
    version: &'static str,
}

/// A failed run: bad input exits 2, a failed verification exits 3.
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FormulaMismatch(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Named results in request order. Text output prints a lone value bare.
#[derive(Default)]
struct Output {
    entries: Vec<(String, Value, String)>,
}

impl Output {
    fn push(&mut self, key: &str, value: Value, text: impl Into<String>) {
        self.entries.push((key.to_string(), value, text.into()));
    }

    fn json(&self) -> Value {
        Value::Object(self.entries.iter().map(|(k, v, _)| (k.clone(), v.clone())).collect())
    }

    fn text(&self) -> String {
        match self.entries.as_slice() {
            [(_, _, t)] => t.clone(),
            entries => entries
                .iter()
                .map(|(k, _, t)| if t.contains('\n') { format!("{k}:\n{t}") } else { format!("{k}: {t}") })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

fn braces<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let inner: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn semigroup(args: &SemigroupArgs) -> Result<Output, Failure> {
    let s = NumericalSemigroup::new(&args.gens)?;
    let mut out = Output::default();
    if let Some(m) = args.apery {
        let ap = s.apery(m)?.sorted();
        out.push("apery", json!(ap), braces(&ap));
    }
    if args.frobenius {
        let f = s.frobenius();
        out.push("frobenius", json!(f), f.to_string());
    }
    if args.pf {
        let pf = s.pseudo_frobenius();
        out.push("pseudo_frobenius", json!(pf), braces(&pf));
    }
    if let Some(x) = args.factorize {
        let z = factorizations(&s, x)?;
        let text = z.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
        out.push("factorizations", json!(z), text);
    }
    if args.presentation {
        let pairs = minimal_presentation(&s);
        let text = pairs.iter().map(|p| format!("({},{})", p.left, p.right)).collect::<Vec<_>>().join("\n");
        out.push("presentation", json!(pairs), text);
    }
    if out.entries.is_empty() {
        return Err(Failure::Input("nothing requested; pass --apery, --frobenius, --pf, --factorize or --presentation".into()));
    }
    Ok(out)
}

fn point_list(d: &Diagram) -> String {
    d.points().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn rendered(diagrams: &[Diagram], format: RenderFormat) -> Result<(Value, String), Failure> {
    let texts = diagrams.iter().map(|d| d.render(format)).collect::<Result<Vec<_>, _>>()?;
    let value = match format {
        RenderFormat::Json => {
            Value::Array(texts.iter().map(|t| serde_json::from_str(t).expect("renderer emits JSON")).collect())
        }
        RenderFormat::Ascii => json!(texts),
    };
    let sep = if format == RenderFormat::Json { "\n" } else { "\n\n" };
    let text = texts.iter().map(|t| t.trim_end()).collect::<Vec<_>>().join(sep);
    Ok((value, text))
}

fn mdd(args: &MddArgs) -> Result<Output, Failure> {
    let weights = args.weights.clone().unwrap_or_else(|| vec![1; args.steps.len()]);
    let g = WeightedCayleyDigraph::new(args.modulus, &args.steps, &weights)?;
    let render = args.render.as_deref().map(str::parse::<RenderFormat>).transpose()?;
    let mut out = Output::default();
    if args.diameter {
        let d = g.diameter();
        out.push("diameter", json!(d), d.to_string());
    }
    if let Some(uv) = &args.distance {
        let [u, v] = uv.as_slice() else {
            return Err(Failure::Input("--distance takes exactly two vertices, u,v".into()));
        };
        if *u >= args.modulus || *v >= args.modulus {
            return Err(Failure::Input(format!("vertices must lie in 0..{}", args.modulus)));
        }
        let d = g.distance(*u, *v);
        out.push("distance", json!(d), d.to_string());
    }
    let wants_diagrams = args.count || args.list || render.is_some() || out.entries.is_empty();
    if wants_diagrams {
        let mdds = enumerate_mdds(&g);
        if args.count || !(args.list || render.is_some()) {
            out.push("count", json!(mdds.len()), mdds.len().to_string());
        }
        if args.list {
            let lists: Vec<String> = mdds.iter().map(point_list).collect();
            let points: Vec<_> = mdds.iter().map(Diagram::points).collect();
            out.push("diagrams", json!(points), lists.join("\n"));
        }
        if let Some(format) = render {
            let (value, text) = rendered(&mdds, format)?;
            out.push("rendered", value, text);
        }
    }
    Ok(out)
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification(what()))
    }
}

fn verify_all(f: &FamilyInstance) -> Result<Vec<String>, Failure> {
    let n = f.n();
    let mut passed = vec!["F(T), PF(T), F(S) and max Ap(S, F(T))".to_string()];
    f.verify_f_region()?;
    passed.push("normal forms are a bijection onto F".into());
    let classes = f.classify_mi()?;
    for i in 1..=f.half() + 1 {
        let size = classes.get(&i).map_or(0, BTreeSet::len) as u64;
        check(size == f.mi_size_formula(i), || format!("|M_{i}| = {size}, formula gives {}", f.mi_size_formula(i)))?;
    }
    passed.push("sizes of M_i".into());
    for i in 2..=f.half() {
        f.minimal_nf(i)?;
    }
    passed.push("minimal elements of M_i".into());
    let mut want: Vec<_> = f
        .presentation_formula()
        .into_iter()
        .map(|(a, b)| lshape_core::PresentationPair::new(a, b))
        .collect();
    want.sort();
    check(minimal_presentation(f.t()) == want, || "minimal presentation differs from the closed form".into())?;
    passed.push("minimal presentation of T".into());
    f.pf_family()?;
    passed.push("PF(S)".into());
    let built: BTreeSet<_> = f.construct_lshape_family()?.iter().map(|l| l.diagram.points()).collect();
    let generic = lshapes_closed(f.s(), &f.closed_set());
    let generic_points: BTreeSet<_> = generic.iter().map(Diagram::points).collect();
    check(built == generic_points, || {
        format!("constructed {} L-shapes, exhaustive search found {}", built.len(), generic_points.len())
    })?;
    check(built.len() == f.lshape_count_formula(), || format!("{} L-shapes for n = {n}", built.len()))?;
    passed.push(format!("{} L-shapes, constructed and exhaustive", built.len()));
    check(generic.iter().all(|d| f.restrictions_hold(&d.points())), || "choice restrictions violated".into())?;
    passed.push("choice restrictions".into());
    let mdds = enumerate_mdds(&f.family_digraph());
    let ap = f.apery().sorted();
    check(mdds.len() == built.len() && mdds.iter().all(|d| d.weights() == ap), || {
        "digraph counterpart disagrees".into()
    })?;
    passed.push("digraph counterpart".into());
    Ok(passed)
}

fn family(args: &FamilyArgs) -> Result<Output, Failure> {
    let mut out = Output::default();
    if let Some(t) = args.sabariego_santos {
        if t >= LONG_T && !args.allow_long {
            return Err(Failure::Input(format!("t = {t} is a long run; pass --allow-long")));
        }
        let g = sabariego_santos(t, args.weighted)?;
        let mdds = enumerate_mdds(&g);
        if args.count {
            out.push("count", json!(mdds.len()), mdds.len().to_string());
        } else {
            let lists: Vec<String> = mdds.iter().map(point_list).collect();
            let points: Vec<_> = mdds.iter().map(Diagram::points).collect();
            out.push("diagrams", json!(points), lists.join("\n"));
        }
    }
    if args.table1 {
        if args.max_t >= LONG_T && !args.allow_long {
            return Err(Failure::Input(format!("--max-t {} is a long run; pass --allow-long", args.max_t)));
        }
        let mut rows = Vec::new();
        let mut csv = vec!["t,N,mdd_unweighted,mdd_weighted".to_string()];
        for row in TABLE_ONE.iter().filter(|r| r.t <= args.max_t) {
            let g = sabariego_santos(row.t, false)?;
            let unweighted = enumerate_mdds(&g).len();
            let weighted = enumerate_mdds(&sabariego_santos(row.t, true)?).len();
            csv.push(format!("{},{},{unweighted},{weighted}", row.t, g.modulus()));
            rows.push(json!({"t": row.t, "N": g.modulus(), "mdd_unweighted": unweighted, "mdd_weighted": weighted}));
        }
        out.push("table1", json!(rows), csv.join("\n"));
    }
    if let Some(n) = args.n {
        if n >= LONG_N && !args.allow_long {
            return Err(Failure::Input(format!("n = {n} is a long run; pass --allow-long")));
        }
        let f = FamilyInstance::build(n)?;
        if args.mi {
            let sizes: BTreeMap<u32, usize> = f.classify_mi()?.into_iter().map(|(i, c)| (i, c.len())).collect();
            out.push("mi", json!(sizes), braces(sizes.iter().map(|(i, c)| format!("{i}:{c}"))));
        }
        if args.lshapes {
            let shapes = f.construct_lshape_family()?;
            if args.count {
                out.push("count", json!(shapes.len()), shapes.len().to_string());
            } else {
                let mut text = Vec::new();
                let mut values = Vec::new();
                for l in &shapes {
                    let case = serde_json::to_value(l.case).expect("serializable");
                    text.push(format!("{:?}: {}", l.case, point_list(&l.diagram)));
                    values.push(json!({"case": case, "points": l.diagram.points()}));
                }
                out.push("lshapes", Value::Array(values), text.join("\n"));
            }
        }
        if args.verify_all {
            let passed = verify_all(&f)?;
            let text = passed.iter().map(|p| format!("ok {p}")).collect::<Vec<_>>().join("\n");
            out.push("verified", json!(passed), text);
        }
        if out.entries.is_empty() {
            let fr = f.frobenius_t();
            out.push("frobenius_t", json!(fr), fr.to_string());
        }
    }
    if out.entries.is_empty() {
        return Err(Failure::Input("nothing requested; pass --n, --sabariego-santos or --table1".into()));
    }
    Ok(out)
}

fn report<P: Serialize>(params: &P, start: Instant, out: Output, as_json: bool) {
    if as_json {
        let argv: Vec<String> = std::env::args().collect();
        let report = RunReport {
            command: argv.join(" "),
            params,
            payload: out.json(),
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            version: env!("CARGO_PKG_VERSION"),
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!("{}", out.text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Semigroup(a) => semigroup(a).map(|o| report(a, start, o, cli.json)),
        Command::Mdd(a) => mdd(a).map(|o| report(a, start, o, cli.json)),
        Command::Family(a) => family(a).map(|o| report(a, start, o, cli.json)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
