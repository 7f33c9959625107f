//! Command-line front end. [`run`] parses an argument vector and returns the
//! exit code together with the document to print.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fs;
use std::path::PathBuf;

use arrhodge::arrangement::{
    arrangement_to_json, build_lattice, builtin_family, deletion_restriction, parse_arrangement, parse_family_spec,
    Arrangement, ArrangementError, Family, DEFAULT_MAX_FLATS,
};
use arrhodge::exact_poly::format::{dense_to_latex, dense_to_string};
use arrhodge::hodge::{
    dims_table, hodge_generating_function, hodge_generating_function_via_mc, hodge_series, multiplier_ideal_series,
    HodgeError, DEFAULT_J_MAX, DEFAULT_P_MAX, DEFAULT_Y_TRUNCATION,
};
use arrhodge::ktheory::{grothendieck_class_complement, mc_complement};
use arrhodge::oracles::{compare_with_series, multiplier_oracle_dims, snc_ideal_dims};
use arrhodge::{IntPoly, IntersectionLattice};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "arrhodge", version, about = "Hodge ideals of central hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Arrangement file (text or JSON)
    #[arg(long, global = true, conflicts_with = "family")]
    file: Option<PathBuf>,

    /// Builtin family, e.g. `braid:4`, `generic:3,5`
    #[arg(long, global = true)]
    family: Option<String>,

    /// Truncation order in y
    #[arg(long, global = true)]
    ymax: Option<usize>,

    /// Largest degree j in dimension tables
    #[arg(long, global = true)]
    jmax: Option<usize>,

    /// Largest p in dimension tables
    #[arg(long, global = true)]
    pmax: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Abort lattice construction beyond this many flats
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FLATS)]
    max_flats: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flats with codimension, Möbius value and contained hyperplanes
    Lattice,
    /// Poincaré polynomial
    Poincare,
    /// Characteristic polynomial
    Charpoly,
    /// Class of the complement as a polynomial in the hyperplane class eta
    Class,
    /// Motivic Chern class of the complement
    Mc,
    /// Closed form, y-expansion and dimension table of the Hodge ideals
    HodgeSeries,
    /// Hilbert series of the multiplier ideal
    MultiplierSeries,
    /// Monomial count against the dimension table for d generic hyperplanes
    VerifySnc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Flat-ideal intersection against the multiplier series
    VerifyMultiplier,
    /// Motivic Chern class route against the closed form
    VerifyPipeline,
    /// Deletion-restriction for every hyperplane
    VerifyDelres,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<ArrangementError> for Failure {
    fn from(e: ArrangementError) -> Self {
        Failure::input(format!("error: {e}"))
    }
}

impl From<HodgeError> for Failure {
    fn from(e: HodgeError) -> Self {
        match e {
            HodgeError::EmptyDivisor | HodgeError::NotGeneralPosition { .. } => Failure::input(format!("error: {e}")),
            other => Failure { code: EXIT_VERIFY_FAILED, message: format!("internal error: {other}") },
        }
    }
}

/// Renderings of one result. Commands without a LaTeX form fall back to text.
struct Report {
    text: String,
    json: Value,
    latex: Option<String>,
    passed: bool,
}

impl Report {
    fn new(text: String, json: Value, latex: Option<String>) -> Self {
        Report { text, json, latex, passed: true }
    }

    fn render(self, format: Format) -> (i32, String) {
        let code = if self.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
        let mut out = match format {
            Format::Text => self.text,
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Latex => self.latex.unwrap_or(self.text),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        (code, out)
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok(report) => report.render(format),
        Err(f) => (f.code, format!("{}\n", f.message)),
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    if let Command::VerifySnc { n, d } = cli.command {
        return verify_snc(cli, n, d);
    }
    let arr = load_arrangement(cli)?;
    let lat = build_lattice(&arr, cli.max_flats)?;
    let head = json!({ "n": arr.n(), "d": arr.d(), "arrangement": arrangement_to_json(&arr) });
    match cli.command {
        Command::Lattice => Ok(lattice_report(&lat, head)),
        Command::Poincare => Ok(poly_report(head, "poincare", &lat.poincare_polynomial(), "x")),
        Command::Charpoly => Ok(poly_report(head, "charpoly", &lat.char_polynomial(), "x")),
        Command::Class => {
            let eta = IntPoly::new(grothendieck_class_complement(&lat).coeffs);
            Ok(poly_report(head, "class", &eta, "eta"))
        }
        Command::Mc => {
            let mc = mc_complement(&lat).map_err(HodgeError::from)?;
            let terms: Vec<Value> = mc.terms().map(|((a, b), c)| json!([a, b, int_json(c)])).collect();
            let json = extend(head, json!({ "mc": mc.to_string(), "mc_terms": terms }));
            Ok(Report::new(mc.to_string(), json, Some(mc.to_latex())))
        }
        Command::HodgeSeries => hodge_report(cli, &lat, head),
        Command::MultiplierSeries => multiplier_report(cli, &lat, head),
        Command::VerifyMultiplier => verify_multiplier(cli, &lat, head),
        Command::VerifyPipeline => verify_pipeline(cli, &lat, head),
        Command::VerifyDelres => verify_delres(&arr, cli.max_flats, head),
        Command::VerifySnc { .. } => unreachable!(),
    }
}

fn load_arrangement(cli: &Cli) -> Result<Arrangement, Failure> {
    match (&cli.file, &cli.family) {
        (Some(path), None) => {
            let src = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("error: cannot read {}: {e}", path.display())))?;
            Ok(parse_arrangement(&src)?)
        }
        (None, Some(spec)) => Ok(builtin_family(parse_family_spec(spec)?)?),
        (None, None) => Err(Failure::input("error: give an arrangement with --file PATH or --family SPEC")),
        (Some(_), Some(_)) => Err(Failure::input("error: --file and --family are mutually exclusive")),
    }
}

/// Integers as JSON numbers when they fit in `i64`, otherwise as strings.
fn int_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn ints_json(cs: &[BigInt]) -> Value {
    Value::Array(cs.iter().map(int_json).collect())
}

fn extend(mut base: Value, more: Value) -> Value {
    if let (Value::Object(b), Value::Object(m)) = (&mut base, more) {
        b.extend(m);
    }
    base
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn lattice_report(lat: &IntersectionLattice, head: Value) -> Report {
    let mut text = String::new();
    let mut latex = String::from("\\begin{tabular}{rrl}\ncodim & $\\mu$ & hyperplanes \\\\\n\\hline\n");
    let mut flats = Vec::new();
    for (f, mu) in lat.flats().iter().zip(lat.mu_values()) {
        let hs = f.contained_hyperplanes();
        text.push_str(&format!("codim {}  mu {:>3}  hyperplanes [{}]\n", f.codim(), mu.to_string(), join(hs)));
        latex.push_str(&format!("{} & {} & $\\{{{}\\}}$ \\\\\n", f.codim(), mu, join(hs)));
        flats.push(json!({ "codim": f.codim(), "mu": int_json(mu), "hyperplanes": hs }));
    }
    latex.push_str("\\end{tabular}");
    text.push_str(&format!("{} flats", lat.len()));
    Report::new(text, extend(head, json!({ "flats": flats })), Some(latex))
}

fn poly_report(head: Value, key: &str, p: &IntPoly, var: &'static str) -> Report {
    let latex_var = if var == "eta" { "\\eta" } else { var };
    let mut extra = serde_json::Map::new();
    extra.insert(key.to_string(), ints_json(p.coeffs()));
    Report::new(
        dense_to_string(p.coeffs(), var),
        extend(head, Value::Object(extra)),
        Some(dense_to_latex(p.coeffs(), latex_var)),
    )
}

fn dims_text(dims: &[Vec<u64>]) -> String {
    dims.iter().enumerate().map(|(p, row)| format!("  p={p}: {}", join(row))).collect::<Vec<_>>().join("\n")
}

fn hodge_report(cli: &Cli, lat: &IntersectionLattice, head: Value) -> Result<Report, Failure> {
    let ymax = cli.ymax.unwrap_or(DEFAULT_Y_TRUNCATION);
    let pmax = cli.pmax.unwrap_or(DEFAULT_P_MAX);
    let jmax = cli.jmax.unwrap_or(DEFAULT_J_MAX);
    let res = hodge_series(lat, ymax, Some((pmax, jmax)))?;
    let dims = res.dims.unwrap_or_default();
    let series: Vec<String> = res.series.coeffs().iter().map(ToString::to_string).collect();

    let mut text = format!("closed form: {}\nseries:\n", res.closed_form);
    for (p, s) in series.iter().enumerate() {
        text.push_str(&format!("  y^{p}: {s}\n"));
    }
    text.push_str(&format!("dims (j = 0..{jmax}):\n{}", dims_text(&dims)));

    let cf = &res.closed_form;
    let factors: Vec<Value> = cf.factor_list().into_iter().map(|(name, m)| json!([name, m])).collect();
    let json = extend(
        head,
        json!({
            "closed_form": {
                "text": cf.to_string(),
                "latex": cf.to_latex(),
                "numerator": cf.numerator().to_string(),
                "factors": factors,
            },
            "series": series,
            "dims": dims,
        }),
    );
    let mut latex = format!("\\sum_p H_{{I_p}}(t)\\,y^p = {}\n", cf.to_latex());
    for (p, c) in res.series.coeffs().iter().enumerate() {
        latex.push_str(&format!("H_{{I_{{{p}}}}}(t) = {}\n", c.to_latex()));
    }
    Ok(Report::new(text, json, Some(latex)))
}

fn multiplier_report(cli: &Cli, lat: &IntersectionLattice, head: Value) -> Result<Report, Failure> {
    let jmax = cli.jmax.unwrap_or(DEFAULT_J_MAX);
    let h = multiplier_ideal_series(lat)?;
    let dims = dims_table(lat, 0, jmax)?.swap_remove(0);
    let text = format!("H(t) = {h}\ndims (j = 0..{jmax}): {}", join(&dims));
    let json = extend(head, json!({ "series": h.to_string(), "dims": dims }));
    Ok(Report::new(text, json, Some(format!("H_{{\\mathcal{{J}}}}(t) = {}", h.to_latex()))))
}

fn verdict(lines: &mut String, passed: bool) {
    lines.push_str(if passed { "result: pass" } else { "result: FAIL" });
}

fn verify_snc(cli: &Cli, n: usize, d: usize) -> Result<Report, Failure> {
    if d < 1 || d > n {
        return Err(Failure::input(format!("error: verify-snc needs 1 <= d <= n (got n = {n}, d = {d})")));
    }
    let pmax = cli.pmax.unwrap_or(DEFAULT_P_MAX);
    let jmax = cli.jmax.unwrap_or(DEFAULT_J_MAX);
    let lat = build_lattice(&builtin_family(Family::Generic(n, d))?, cli.max_flats)?;
    let table = dims_table(&lat, pmax, jmax)?;
    let mut text = String::new();
    let mut checks = Vec::new();
    let mut passed = true;
    for (p, row) in table.iter().enumerate() {
        let oracle = snc_ideal_dims(n, d, p, jmax);
        let r = compare_with_series(&oracle, row);
        passed &= r.passed;
        match r.first_mismatch {
            None => text.push_str(&format!("p={p}: ok ({} degrees)\n", r.compared)),
            Some(j) => text.push_str(&format!("p={p}: mismatch at j={j}: oracle {oracle:?}, series {row:?}\n")),
        }
        checks.push(json!({ "p": p, "report": r, "oracle": oracle, "series": row }));
    }
    verdict(&mut text, passed);
    let json = json!({ "n": n, "d": d, "passed": passed, "checks": checks });
    Ok(Report { passed, ..Report::new(text, json, None) })
}

fn verify_multiplier(cli: &Cli, lat: &IntersectionLattice, head: Value) -> Result<Report, Failure> {
    let jmax = cli.jmax.unwrap_or(8);
    let oracle = multiplier_oracle_dims(lat, jmax).map_err(|e| Failure::input(format!("error: {e}")))?;
    let series = dims_table(lat, 0, jmax)?.swap_remove(0);
    let r = compare_with_series(&oracle, &series);
    let mut text = format!("oracle: {}\nseries: {}\n", join(&oracle), join(&series));
    if let Some(j) = r.first_mismatch {
        text.push_str(&format!("first mismatch at j={j}\n"));
    }
    verdict(&mut text, r.passed);
    let passed = r.passed;
    let json = extend(head, json!({ "passed": passed, "report": r, "oracle": oracle, "series": series }));
    Ok(Report { passed, ..Report::new(text, json, None) })
}

fn verify_pipeline(cli: &Cli, lat: &IntersectionLattice, head: Value) -> Result<Report, Failure> {
    let ymax = cli.ymax.unwrap_or(DEFAULT_Y_TRUNCATION);
    let closed = hodge_generating_function(lat)?.to_yseries(ymax).map_err(HodgeError::from)?;
    let via_mc = hodge_generating_function_via_mc(lat, ymax)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut passed = true;
    for p in 0..=ymax {
        let (a, b) = (closed.coeff(p), via_mc.coeff(p));
        let ok = a == b;
        passed &= ok;
        if ok {
            text.push_str(&format!("y^{p}: ok  {a}\n"));
        } else {
            text.push_str(&format!("y^{p}: MISMATCH closed form {a}, via mC {b}\n"));
        }
        rows.push(json!({ "p": p, "closed_form": a.to_string(), "via_mc": b.to_string(), "equal": ok }));
    }
    verdict(&mut text, passed);
    let json = extend(head, json!({ "passed": passed, "coefficients": rows }));
    Ok(Report { passed, ..Report::new(text, json, None) })
}

fn verify_delres(arr: &Arrangement, max_flats: usize, head: Value) -> Result<Report, Failure> {
    let pi = build_lattice(arr, max_flats)?.poincare_polynomial();
    let mut text = format!("pi = {pi}\n");
    let mut rows = Vec::new();
    let mut passed = true;
    for h in 0..arr.d() {
        let (del, res) = deletion_restriction(arr, h)?;
        let pd = build_lattice(&del, max_flats)?.poincare_polynomial();
        let pr = build_lattice(&res, max_flats)?.poincare_polynomial();
        let ok = pi == &pd + &(&IntPoly::x() * &pr);
        passed &= ok;
        text.push_str(&format!(
            "H{h}: {}  pi' = {pd}, pi'' = {pr}\n",
            if ok { "ok" } else { "MISMATCH" }
        ));
        rows.push(json!({
            "hyperplane": h,
            "deletion": ints_json(pd.coeffs()),
            "restriction": ints_json(pr.coeffs()),
            "holds": ok,
        }));
    }
    verdict(&mut text, passed);
    let json = extend(head, json!({ "passed": passed, "poincare": ints_json(pi.coeffs()), "hyperplanes": rows }));
    Ok(Report { passed, ..Report::new(text, json, None) })
}
