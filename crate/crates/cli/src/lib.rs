//! Command-line front end: parses ideals and partitions, runs the library
//! operations and prints deterministic text or JSON reports.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use multistruct::diagram::three_dim_diagram;
use multistruct::families::{
    flatness_check, generic_fiber_ideal, special_fiber_ideal, FamilySetup,
};
use multistruct::hilbert::{
    hilbert_function, hilbert_polynomial, multiplicity, same_hilbert_function,
    structure_decomposition,
};
use multistruct::ideal::{diagram_from_ideal, ideal_from_diagram, is_cm_structure, parse_ideal};
use multistruct::oracle::{degree_table, interpolate_polynomial, DEFAULT_MONOMIAL_CAP};
use multistruct::resolution::{
    degree_pair, hilbert_scheme_dimension, same_component, same_reduced_resolution,
};
use multistruct::{Diagram, Error, ExactPolynomial, MonomialIdeal, Partition, VariableList};

/// Environment variable overriding the oracle's monomial enumeration cap.
pub const ORACLE_CAP_VAR: &str = "MULTISTRUCT_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "multistruct",
    version,
    about = "Young-diagram calculus for monomial multiple structures on codimension-two linear subspaces"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Young diagram of a structure, with its partition and multiplicity
    Diagram(StructureArgs),
    /// Minimal monomial generators of a diagram structure
    Ideal(StructureArgs),
    /// Hilbert polynomial, multiplicity and structure-sheaf decomposition
    Hilbert(HilbertArgs),
    /// Generator and syzygy degrees of the minimal free resolution
    Resolution(StructureArgs),
    /// Dimension of the Hilbert scheme at the point of the structure
    Hilbdim(HilbdimArgs),
    /// Hilbert-function (R) and resolution (r) equivalence of two structures
    Equiv(EquivArgs),
    /// Partswise sum of two partitions
    Sum(PairArgs),
    /// 3D diagram of the intersection of two coplanar structures
    IntersectStructures(PairArgs),
    /// Flatness identity for the degeneration of a union onto one support
    FlatCheck(FlatArgs),
    /// Brute-force degree table with interpolated Hilbert polynomial
    Oracle(OracleArgs),
}

/// A structure given either by ideal generators over declared variables or
/// by the partition of its staircase.
#[derive(Args)]
#[command(group(ArgGroup::new("structure").required(true).args(["ideal", "partition"])))]
struct StructureArgs {
    /// Ideal generators, e.g. "x^5, x^4*y, y^2"
    #[arg(long, requires = "vars")]
    ideal: Option<String>,

    /// Partition of the staircase, e.g. 5,4
    #[arg(long)]
    partition: Option<String>,

    /// Comma-separated variable names, e.g. x,y,z,w
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,

    /// Number of leading thickening variables
    #[arg(long, default_value_t = 2)]
    codim: usize,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    structure: StructureArgs,

    /// Support dimension; defaults to the number of support variables minus
    /// one when --vars is given
    #[arg(long)]
    n: Option<u32>,

    /// Also evaluate the Hilbert function at this degree
    #[arg(long)]
    deg: Option<u32>,
}

#[derive(Args)]
struct HilbdimArgs {
    #[command(flatten)]
    structure: StructureArgs,

    /// Support dimension; defaults to the number of support variables minus
    /// one when --vars is given
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
struct EquivArgs {
    /// Partition of the first structure
    #[arg(long)]
    a: String,

    /// Partition of the second structure
    #[arg(long)]
    b: String,
}

#[derive(Args)]
struct PairArgs {
    /// First partition
    #[arg(long)]
    lam: String,

    /// Second partition
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct FlatArgs {
    #[command(flatten)]
    pair: PairArgs,

    /// Support dimension of the two structures
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct OracleArgs {
    /// Ideal generators, e.g. "x^5, x^4*y, y^2"
    #[arg(long)]
    ideal: String,

    /// Comma-separated variable names, e.g. x,y,z,w
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,

    /// Number of leading thickening variables
    #[arg(long, default_value_t = 2)]
    codim: usize,

    /// Largest degree of the table
    #[arg(long, default_value_t = 12)]
    max_d: u32,

    /// First degree used for interpolation; defaults to the sum of the
    /// generator total degrees
    #[arg(long)]
    start: Option<usize>,

    /// Degree bound of the interpolated polynomial; defaults to the number
    /// of variables minus two
    #[arg(long)]
    degree_bound: Option<usize>,
}

struct Report {
    text: String,
    json: Value,
}

pub fn run(args: impl IntoIterator<Item = String>, out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{err}");
                    0
                }
                _ => {
                    eprint!("{err}");
                    2
                }
            };
        }
    };
    let report = match dispatch(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return 1;
        }
    };
    let rendered = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            serde_json::to_string_pretty(&report.json).expect("report serializes")
        }
    };
    writeln!(out, "{rendered}").expect("write report");
    0
}

fn dispatch(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Diagram(args) => cmd_diagram(args),
        Command::Ideal(args) => cmd_ideal(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Resolution(args) => cmd_resolution(args),
        Command::Hilbdim(args) => cmd_hilbdim(args),
        Command::Equiv(args) => cmd_equiv(args),
        Command::Sum(args) => cmd_sum(args),
        Command::IntersectStructures(args) => cmd_intersect(args),
        Command::FlatCheck(args) => cmd_flat_check(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

/// Structure resolved from the command line, together with the report echo
/// of its inputs.
struct StructureInput {
    diagram: Diagram,
    ideal: MonomialIdeal,
    vars: VariableList,
    vars_given: bool,
    inputs: Value,
}

fn build_structure(args: &StructureArgs) -> Result<StructureInput, Error> {
    let vars_given = !args.vars.is_empty();
    if let Some(text) = &args.ideal {
        let vars = VariableList::new(args.vars.clone(), args.codim)?;
        let ideal = parse_ideal(text, &vars)?;
        let diagram = diagram_from_ideal(&ideal)?;
        let inputs = json!({
            "ideal": text,
            "vars": vars.names(),
            "codim": args.codim,
        });
        Ok(StructureInput {
            diagram,
            ideal,
            vars,
            vars_given,
            inputs,
        })
    } else {
        let text = args.partition.as_ref().expect("clap enforces the group");
        let partition = Partition::parse(text)?;
        let diagram = partition.to_diagram();
        let vars = if vars_given {
            VariableList::new(args.vars.clone(), args.codim)?
        } else {
            VariableList::from_names(&["x", "y"], 2).expect("static names")
        };
        let ideal = ideal_from_diagram(&diagram, vars.clone())?;
        let inputs = json!({
            "partition": partition_json(&partition),
            "vars": vars.names(),
            "codim": vars.codim_count(),
        });
        Ok(StructureInput {
            diagram,
            ideal,
            vars,
            vars_given,
            inputs,
        })
    }
}

/// The support dimension: explicit, or support variables minus one.
fn resolve_n(explicit: Option<u32>, input: &StructureInput) -> Result<(u32, Vec<String>), Error> {
    if let Some(n) = explicit {
        return Ok((n, Vec::new()));
    }
    if input.vars_given {
        let support = input.vars.support_count();
        if support == 0 {
            return Err(Error::InvalidVariableList {
                reason: "no support variables; pass --n explicitly".to_string(),
            });
        }
        let n = (support - 1) as u32;
        return Ok((n, vec![format!("n defaulted to {n} from the variable list")]));
    }
    Err(Error::InvalidVariableList {
        reason: "support dimension unknown; pass --n or --vars".to_string(),
    })
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn diagram_json(d: &Diagram) -> Value {
    let boxes: Vec<Vec<u32>> = d.boxes().iter().map(|b| b.coords().to_vec()).collect();
    json!(boxes)
}

fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.to_integer().to_i64() {
            return json!(i);
        }
    }
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(num), Some(den)) => json!({ "num": num, "den": den }),
        _ => json!({ "num": r.numer().to_string(), "den": r.denom().to_string() }),
    }
}

fn polynomial_json(p: &ExactPolynomial) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(rational_json).collect();
    json!({ "display": p.to_string(), "coeffs": coeffs })
}

fn report(command: &str, inputs: Value, results: Value, warnings: &[String], text: String) -> Report {
    Report {
        text,
        json: json!({
            "command": command,
            "inputs": inputs,
            "results": results,
            "warnings": warnings,
        }),
    }
}

fn cmd_diagram(args: &StructureArgs) -> Result<Report, Error> {
    let input = build_structure(args)?;
    let mut text = format!("{}\n", input.diagram);
    let mut results = json!({
        "boxes": diagram_json(&input.diagram),
        "multiplicity": multiplicity(&input.diagram),
        "rendering": input.diagram.to_string(),
    });
    if input.diagram.dim() == 2 {
        let partition = input.diagram.to_partition()?;
        text.push_str(&format!("partition: {partition}\n"));
        results["partition"] = partition_json(&partition);
    }
    text.push_str(&format!("multiplicity: {}", multiplicity(&input.diagram)));
    Ok(report("diagram", input.inputs, results, &[], text))
}

fn cmd_ideal(args: &StructureArgs) -> Result<Report, Error> {
    let input = build_structure(args)?;
    let gens: Vec<String> = input
        .ideal
        .gens()
        .iter()
        .rev()
        .map(|g| input.ideal.monomial_string(g))
        .collect();
    let text = format!(
        "ideal: {}\ncm structure: {}",
        input.ideal,
        is_cm_structure(&input.ideal)
    );
    let results = json!({
        "generators": gens,
        "cm_structure": is_cm_structure(&input.ideal),
    });
    Ok(report("ideal", input.inputs, results, &[], text))
}

fn cmd_hilbert(args: &HilbertArgs) -> Result<Report, Error> {
    let input = build_structure(&args.structure)?;
    let (n, warnings) = resolve_n(args.n, &input)?;
    let poly = hilbert_polynomial(&input.diagram, n as i32);
    let decomposition = structure_decomposition(&input.diagram, n as i32);
    let mut text = format!(
        "hilbert polynomial (n={n}): {poly}\nmultiplicity: {}\ndecomposition: {decomposition}",
        multiplicity(&input.diagram)
    );
    let mut results = json!({
        "n": n,
        "hilbert_polynomial": polynomial_json(&poly),
        "multiplicity": multiplicity(&input.diagram),
        "decomposition_weights": decomposition.weights(),
    });
    if let Some(deg) = args.deg {
        let value = hilbert_function(&input.diagram, n, deg);
        text.push_str(&format!("\nhilbert function at {deg}: {value}"));
        results["hilbert_function"] = json!({ "deg": deg, "value": value });
    }
    Ok(report("hilbert", input.inputs, results, &warnings, text))
}

fn cmd_resolution(args: &StructureArgs) -> Result<Report, Error> {
    let input = build_structure(args)?;
    let pair = degree_pair(&input.diagram)?;
    let text = format!(
        "resolution: {pair}\ngenerator degrees: {:?}\nsyzygy degrees: {:?}",
        pair.gen_degrees(),
        pair.syz_degrees()
    );
    let results = json!({
        "resolution": pair.to_string(),
        "gen_degrees": pair.gen_degrees(),
        "syz_degrees": pair.syz_degrees(),
    });
    Ok(report("resolution", input.inputs, results, &[], text))
}

fn cmd_hilbdim(args: &HilbdimArgs) -> Result<Report, Error> {
    let input = build_structure(&args.structure)?;
    let (n, warnings) = resolve_n(args.n, &input)?;
    let dim = hilbert_scheme_dimension(&input.diagram, n)?;
    let text = format!("{dim}");
    let results = json!({ "n": n, "dimension": dim });
    Ok(report("hilbdim", input.inputs, results, &warnings, text))
}

fn cmd_equiv(args: &EquivArgs) -> Result<Report, Error> {
    let a = Partition::parse(&args.a)?;
    let b = Partition::parse(&args.b)?;
    let (da, db) = (a.to_diagram(), b.to_diagram());
    let big_r = same_hilbert_function(&da, &db)?;
    let small_r = same_reduced_resolution(&da, &db)?;
    let component = same_component(&da, &db)?;
    let text = format!("R: {big_r}, r: {small_r}\nsame component: {component}");
    let inputs = json!({ "a": partition_json(&a), "b": partition_json(&b) });
    let results = json!({
        "hilbert_function_equivalent": big_r,
        "resolution_equivalent": small_r,
        "same_component": component,
    });
    Ok(report("equiv", inputs, results, &[], text))
}

fn cmd_sum(args: &PairArgs) -> Result<Report, Error> {
    let lam = Partition::parse(&args.lam)?;
    let mu = Partition::parse(&args.mu)?;
    let sum = lam.partswise_sum(&mu);
    let text = format!("{sum}");
    let inputs = json!({ "lam": partition_json(&lam), "mu": partition_json(&mu) });
    let results = json!({ "sum": partition_json(&sum) });
    Ok(report("sum", inputs, results, &[], text))
}

fn cmd_intersect(args: &PairArgs) -> Result<Report, Error> {
    let lam = Partition::parse(&args.lam)?;
    let mu = Partition::parse(&args.mu)?;
    let intersection = three_dim_diagram(&lam, &mu);
    let layers = intersection.layers()?;
    let layer_parts: Vec<Value> = layers
        .iter()
        .map(|l| Ok(partition_json(&l.to_partition()?)))
        .collect::<Result<_, Error>>()?;
    let text = format!(
        "{intersection}\nboxes: {}",
        intersection.box_count()
    );
    let inputs = json!({ "lam": partition_json(&lam), "mu": partition_json(&mu) });
    let results = json!({
        "boxes": intersection.box_count(),
        "layers": layer_parts,
        "rendering": intersection.to_string(),
    });
    Ok(report("intersect-structures", inputs, results, &[], text))
}

fn cmd_flat_check(args: &FlatArgs) -> Result<Report, Error> {
    let lam = Partition::parse(&args.pair.lam)?;
    let mu = Partition::parse(&args.pair.mu)?;
    let family = FamilySetup::new(lam.clone(), mu.clone(), args.n);
    let check = flatness_check(&family);
    let intersection = three_dim_diagram(&lam, &mu);
    let generic = generic_fiber_ideal(&family);
    let special = special_fiber_ideal(&family);
    let verdict = if check.holds { "PASS" } else { "FAIL" };
    let text = format!(
        "hilbert polynomial of {lam} (n={n}): {}\n\
         hilbert polynomial of {mu} (n={n}): {}\n\
         hilbert polynomial of the intersection (n-1): {}\n\
         special fiber {}: {}\n\
         generic fiber ideal: {}\n\
         special fiber ideal: {}\n\
         intersection diagram:\n{}\n\
         flatness: {verdict}",
        check.lam_polynomial,
        check.mu_polynomial,
        check.intersection_polynomial,
        lam.partswise_sum(&mu),
        check.special_fiber_polynomial,
        generic,
        special,
        intersection,
        n = args.n,
    );
    let inputs = json!({
        "lam": partition_json(&lam),
        "mu": partition_json(&mu),
        "n": args.n,
    });
    let results = json!({
        "lam_polynomial": polynomial_json(&check.lam_polynomial),
        "mu_polynomial": polynomial_json(&check.mu_polynomial),
        "intersection_polynomial": polynomial_json(&check.intersection_polynomial),
        "special_fiber_polynomial": polynomial_json(&check.special_fiber_polynomial),
        "special_fiber": partition_json(&lam.partswise_sum(&mu)),
        "generic_fiber_ideal": generic.to_string(),
        "special_fiber_ideal": special.to_string(),
        "intersection_boxes": intersection.box_count(),
        "holds": check.holds,
    });
    Ok(report("flat-check", inputs, results, &[], text))
}

fn oracle_cap() -> Result<u64, Error> {
    match std::env::var(ORACLE_CAP_VAR) {
        Ok(value) => value.parse().map_err(|_| Error::InvalidVariableList {
            reason: format!("{ORACLE_CAP_VAR} must be a positive integer, got {value:?}"),
        }),
        Err(_) => Ok(DEFAULT_MONOMIAL_CAP),
    }
}

fn cmd_oracle(args: &OracleArgs) -> Result<Report, Error> {
    let vars = VariableList::new(args.vars.clone(), args.codim)?;
    let ideal = parse_ideal(&args.ideal, &vars)?;
    let cap = oracle_cap()?;
    let table = degree_table(&ideal, args.max_d, cap)?;

    let degree_bound = args
        .degree_bound
        .unwrap_or_else(|| vars.len().saturating_sub(2));
    let mut warnings = Vec::new();
    let start = match args.start {
        Some(start) => start,
        None => {
            // Conservative stabilization bound, clamped so the table still
            // holds the extra consistency point. A premature start is caught
            // by the consistency check, not silently accepted.
            let degree_sum: usize = ideal
                .gens()
                .iter()
                .map(|g| g.total_degree() as usize)
                .sum();
            let latest = (args.max_d as usize)
                .checked_sub(degree_bound + 1)
                .ok_or_else(|| Error::InvalidRange {
                    reason: format!(
                        "interpolation with bound {degree_bound} needs --max-d >= {}",
                        degree_bound + 1
                    ),
                })?;
            if degree_sum > latest {
                warnings.push(format!(
                    "interpolation start lowered from {degree_sum} to {latest} to fit the table; \
                     raise --max-d to use the conservative bound"
                ));
            }
            degree_sum.min(latest)
        }
    };
    let needed = start + degree_bound + 1;
    if needed > args.max_d as usize {
        return Err(Error::InvalidRange {
            reason: format!(
                "interpolation from degree {start} with bound {degree_bound} needs --max-d >= {needed}"
            ),
        });
    }
    let poly = interpolate_polynomial(&table, start, degree_bound)?;

    let mut text = String::from("degree table:\n");
    for (d, v) in table.values().iter().enumerate() {
        text.push_str(&format!("  d={d}: {v}\n"));
    }
    text.push_str(&format!("interpolated polynomial (from d={start}): {poly}"));
    let inputs = json!({
        "ideal": args.ideal,
        "vars": vars.names(),
        "codim": args.codim,
        "max_d": args.max_d,
    });
    let results = json!({
        "degree_table": table.values(),
        "interpolation_start": start,
        "degree_bound": degree_bound,
        "polynomial": polynomial_json(&poly),
    });
    Ok(report("oracle", inputs, results, &warnings, text))
}
