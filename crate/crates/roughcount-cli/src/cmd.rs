//! Clap surface and command implementations. Every command is a pure
//! function from parsed arguments to an output string, so the test suite
//! can drive it without spawning processes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use roughcount_core::countability::{self, IndexReport, IndexValue, PartialMethod};
use roughcount_core::counting::{self, Method, OrderSpec};
use roughcount_core::fixtures;
use roughcount_core::granules;
use roughcount_core::measures::{self, ComponentLabel, ConsistencyParams, MeasureVector};
use roughcount_core::space::{ApproximationSpace, ElementSet};
use roughcount_core::{cipca, Rational};

use crate::input;
use crate::verify;
use crate::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "roughcount", version, about = "Dialectical counting over finite indiscernibility structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Space file (JSON) or information table (CSV). May be given twice
    /// for commands comparing two relations; defaults to the bundled
    /// example.
    #[arg(long, global = true)]
    pub input: Vec<PathBuf>,
    /// Which bundled relation to use when no --input is given: R or Q.
    #[arg(long, global = true)]
    pub rel: Option<String>,
    /// Counting order as comma-separated labels; defaults to the base
    /// order of the universe.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Attributes to induce the relation from (CSV inputs only).
    #[arg(long, global = true)]
    pub attrs: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Enumeration budget (maximum universe size for n! searches).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Monte Carlo sample count (requires --seed).
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Ipc,
    Hpc,
    Hppc,
    Ippc,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Ipc => Method::Ipc,
            MethodArg::Hpc => Method::Hpc,
            MethodArg::Hppc => Method::Hppc,
            MethodArg::Ippc => Method::Ippc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartialMethodArg {
    Hppc,
    Ippc,
}

impl PartialMethodArg {
    fn method(self) -> PartialMethod {
        match self {
            PartialMethodArg::Hppc => PartialMethod::Hppc,
            PartialMethodArg::Ippc => PartialMethod::Ippc,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classes, neighbourhoods and (optionally) approximations of a set.
    Space {
        /// Set to approximate, as comma-separated labels.
        #[arg(long)]
        set: Option<String>,
    },
    /// Run one counting procedure over the counting order.
    Count {
        #[arg(long, value_enum)]
        method: MethodArg,
    },
    /// Restrict a count to the positions of a subset.
    Induce {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Subset as comma-separated labels.
        #[arg(long)]
        subset: String,
    },
    /// Recover granules from an HPC count, or from a maximal IPC count.
    Granules {
        /// Search all orders for a maximal IPC count instead of using
        /// the given order's HPC count.
        #[arg(long)]
        maximal: bool,
    },
    /// Positive region, dependency, consistency and their granular forms.
    Measures {
        /// Consistency constant (nonnegative rational).
        #[arg(long, default_value = "2")]
        n: String,
    },
    /// Rough inclusion functions k, k1, k2 and granular replacements.
    Inclusion {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Countability decision, witness order, and index.
    Countability {
        #[arg(long, value_enum)]
        method: PartialMethodArg,
        /// Exact index by full enumeration (default when no --samples).
        #[arg(long)]
        exact: bool,
    },
    /// Quotient of all orders by IPC signature, with the partial
    /// operation table.
    Cipca {
        /// Include the full operation table.
        #[arg(long)]
        table: bool,
    },
    /// Recompute the bundled example and diff against its printed rows.
    Verify {
        /// Only `paper-example` is available.
        target: String,
    },
}

fn attr_list(common: &Common) -> Option<Vec<String>> {
    common
        .attrs
        .as_deref()
        .map(|a| input::parse_labels(a).into_iter().map(str::to_owned).collect())
}

/// The single space a command operates on: first --input, else the
/// bundled relation selected by --rel (default R).
fn primary_space(common: &Common) -> Result<ApproximationSpace> {
    if let Some(path) = common.input.first() {
        return input::load_space(path, attr_list(common).as_deref());
    }
    match common.rel.as_deref() {
        None | Some("R") => Ok(fixtures::paper_space_r()),
        Some("Q") => Ok(fixtures::paper_space_q()),
        Some(other) => Err(CliError::Parse(format!(
            "unknown bundled relation `{other}` (expected R or Q)"
        ))),
    }
}

/// The (R, Q) pair for two-relation commands: two --input files, or the
/// bundled pair.
fn space_pair(common: &Common) -> Result<(ApproximationSpace, ApproximationSpace)> {
    match common.input.as_slice() {
        [] => Ok((fixtures::paper_space_r(), fixtures::paper_space_q())),
        [r, q] => {
            let attrs = attr_list(common);
            Ok((
                input::load_space(r, attrs.as_deref())?,
                input::load_space(q, attrs.as_deref())?,
            ))
        }
        _ => Err(CliError::Parse(
            "this command takes exactly two --input files, or none".into(),
        )),
    }
}

fn order_for(common: &Common, space: &ApproximationSpace) -> Result<OrderSpec> {
    match common.order.as_deref() {
        None => Ok(OrderSpec::canonical(space.len())),
        Some(spec) => Ok(OrderSpec::from_labels(space, &input::parse_labels(spec))?),
    }
}

fn set_for(space: &ApproximationSpace, spec: &str) -> Result<ElementSet> {
    Ok(space.universe().set_of(input::parse_labels(spec))?)
}

fn budget_for(common: &Common, default: usize) -> Result<usize> {
    match common.budget {
        None => Ok(default),
        Some(0) => Err(CliError::Parse("--budget must be at least 1".into())),
        Some(b) => Ok(b),
    }
}

fn labels(space: &ApproximationSpace, set: &ElementSet) -> Vec<String> {
    set.iter()
        .map(|&i| space.universe().label(i).expect("index from this space").to_owned())
        .collect()
}

fn blocks_json(space: &ApproximationSpace, blocks: &[ElementSet]) -> Value {
    Value::Array(blocks.iter().map(|b| json!(labels(space, b))).collect())
}

fn rational(r: Rational) -> Value {
    Value::String(r.to_string())
}

fn measure_vector(v: &MeasureVector) -> Value {
    let components: Vec<Value> = v
        .labels()
        .iter()
        .zip(v.values())
        .map(|(label, value)| {
            let name = match label {
                ComponentLabel::Granule(i) => format!("granule_{i}"),
                ComponentLabel::ForwardGranule(i) => format!("k_star_{i}"),
                ComponentLabel::BackwardGranule(j) => format!("l_star_{j}"),
                ComponentLabel::Cross(i, j) => format!("cross_{i}_{j}"),
            };
            json!({ "component": name, "value": value.to_string() })
        })
        .collect();
    json!({ "components": components, "sum": v.sum().to_string() })
}

fn order_json(space: &ApproximationSpace, order: &OrderSpec) -> Value {
    Value::Array(
        order
            .indices()
            .iter()
            .map(|&i| json!(space.universe().label(i).expect("order over this space")))
            .collect(),
    )
}

fn index_report(space: &ApproximationSpace, report: &IndexReport) -> Value {
    let value = match &report.value {
        IndexValue::Exact(r) => json!({ "kind": "exact", "value": r.to_string() }),
        IndexValue::Estimate { hits, samples, seed } => json!({
            "kind": "estimate",
            "hits": hits,
            "samples": samples,
            "seed": seed,
            "value": report.value.as_rational().to_string(),
        }),
    };
    json!({
        "countable": report.countable,
        "index": value,
        "witness": report.witness.as_ref().map(|w| order_json(space, w)),
    })
}

/// Executes a parsed invocation and renders its output.
pub fn run(cli: &Cli) -> Result<String> {
    let value = execute(cli)?;
    Ok(render(&value, cli.common.format))
}

fn execute(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Space { set } => cmd_space(&cli.common, set.as_deref()),
        Command::Count { method } => cmd_count(&cli.common, method.method()),
        Command::Induce { method, subset } => cmd_induce(&cli.common, method.method(), subset),
        Command::Granules { maximal } => cmd_granules(&cli.common, *maximal),
        Command::Measures { n } => cmd_measures(&cli.common, n),
        Command::Inclusion { x, y } => cmd_inclusion(&cli.common, x, y),
        Command::Countability { method, exact } => {
            cmd_countability(&cli.common, method.method(), *exact)
        }
        Command::Cipca { table } => cmd_cipca(&cli.common, *table),
        Command::Verify { target } => cmd_verify(target),
    }
}

fn cmd_space(common: &Common, set: Option<&str>) -> Result<Value> {
    let space = primary_space(common)?;
    let neighbourhoods: Vec<Value> = (0..space.len())
        .map(|x| {
            let n = space.neighbourhood(x).expect("index in range");
            Ok(json!({
                "element": space.universe().label(x)?,
                "neighbourhood": labels(&space, &n),
            }))
        })
        .collect::<Result<_>>()?;
    let classes = if space.is_equivalence() {
        Some(blocks_json(&space, space.classes()?.blocks()))
    } else {
        None
    };
    let approximations = match set {
        None => None,
        Some(spec) => {
            let a = set_for(&space, spec)?;
            let (lower, upper) = if space.is_equivalence() {
                (space.lower(&a)?, space.upper(&a)?)
            } else {
                (space.lower_by_neighbourhoods(&a)?, space.upper_by_neighbourhoods(&a)?)
            };
            Some(json!({
                "set": labels(&space, &a),
                "lower": labels(&space, &lower),
                "upper": labels(&space, &upper),
                "definite": space.is_definite(&a),
            }))
        }
    };
    Ok(json!({
        "elements": space.universe().labels(),
        "is_equivalence": space.is_equivalence(),
        "classes": classes,
        "neighbourhoods": neighbourhoods,
        "approximations": approximations,
    }))
}

fn cmd_count(common: &Common, method: Method) -> Result<Value> {
    let space = primary_space(common)?;
    let order = order_for(common, &space)?;
    let seq = counting::count(&space, &order, method)?;
    Ok(json!({
        "method": method.name(),
        "order": order_json(&space, &order),
        "tokens": seq.rendered(),
    }))
}

fn cmd_induce(common: &Common, method: Method, subset: &str) -> Result<Value> {
    let space = primary_space(common)?;
    let order = order_for(common, &space)?;
    let seq = counting::count(&space, &order, method)?;
    let sub = set_for(&space, subset)?;
    let tokens: Vec<String> = counting::induced(&seq, &sub)
        .iter()
        .map(|t| t.render())
        .collect();
    Ok(json!({
        "method": method.name(),
        "subset": labels(&space, &sub),
        "tokens": tokens,
    }))
}

fn cmd_granules(common: &Common, maximal: bool) -> Result<Value> {
    let space = primary_space(common)?;
    let extraction = if maximal {
        let budget = budget_for(common, granules::DEFAULT_ORDER_BUDGET)?;
        granules::maximal_ipc_granules(&space, budget)?
    } else {
        let order = order_for(common, &space)?;
        let seq = counting::hpc(&space, &order)?;
        granules::granules_from_hpc(&seq, &space)?
    };
    Ok(json!({
        "source": if maximal { "maximal-ipc" } else { "hpc" },
        "blocks": blocks_json(&space, extraction.blocks.blocks()),
        "witness_order": order_json(&space, extraction.witness.order()),
        "witness_tokens": extraction.witness.rendered(),
    }))
}

fn cmd_measures(common: &Common, n: &str) -> Result<Value> {
    let (r, q) = space_pair(common)?;
    let params = ConsistencyParams::new(input::parse_rational(n)?)?;
    let pos = measures::pos_region(&r, &q)?;
    Ok(json!({
        "pos_region": labels(&r, &pos),
        "delta_q_on_r": rational(measures::delta(&r, &q)?),
        "delta_r_on_q": rational(measures::delta(&q, &r)?),
        "gk": measure_vector(&measures::gk(&r, &q)?),
        "constant": params.constant().to_string(),
        "cons": rational(measures::cons(&q, &r, params)?),
        "gcons": measure_vector(&measures::gcons(&q, &r, params)?),
    }))
}

fn cmd_inclusion(common: &Common, x: &str, y: &str) -> Result<Value> {
    let space = primary_space(common)?;
    let x = set_for(&space, x)?;
    let y = set_for(&space, y)?;
    Ok(json!({
        "x": labels(&space, &x),
        "y": labels(&space, &y),
        "k": rational(measures::k(&x, &y)),
        "k1": rational(measures::k1(&x, &y)),
        "k2": rational(measures::k2(&space, &x, &y)),
        "k_star": measure_vector(&measures::k_star(&space, &x, &y)?),
        "k1_star": measure_vector(&measures::k1_star(&space, &x, &y)?),
        "k2_star": measure_vector(&measures::k2_star(&space, &x, &y)?),
    }))
}

fn cmd_countability(common: &Common, method: PartialMethod, exact: bool) -> Result<Value> {
    let space = primary_space(common)?;
    let report = match (common.samples, exact) {
        (Some(_), true) => {
            return Err(CliError::Parse("--exact and --samples are mutually exclusive".into()))
        }
        (Some(samples), false) => {
            let seed = common
                .seed
                .ok_or_else(|| CliError::Parse("--samples requires --seed".into()))?;
            countability::index_estimate(&space, method, samples, seed)
        }
        (None, _) => {
            let budget = budget_for(common, granules::DEFAULT_ORDER_BUDGET)?;
            countability::index_exact(&space, method, budget)?
        }
    };
    let mut value = index_report(&space, &report);
    value["method"] = json!(method.method().name());
    Ok(value)
}

fn cmd_cipca(common: &Common, table: bool) -> Result<Value> {
    let space = primary_space(common)?;
    let budget = budget_for(
        common,
        if table { cipca::DEFAULT_TABLE_BUDGET } else { cipca::DEFAULT_QUOTIENT_BUDGET },
    )?;
    let quotient = cipca::quotient(&space, budget)?;
    let classes: Vec<Value> = quotient
        .classes()
        .iter()
        .map(|c| {
            json!({
                "signature": c.signature.iter().map(|t| t.render()).collect::<Vec<_>>(),
                "size": c.members.len(),
                "smallest_member": c.members[0],
            })
        })
        .collect();
    let op_table = table.then(|| {
        Value::Array(
            quotient
                .op_table()
                .into_iter()
                .map(|row| Value::Array(row.into_iter().map(|e| json!(e)).collect()))
                .collect(),
        )
    });
    Ok(json!({
        "composition": "(x*y)(i) = x(y(i))",
        "orders": cipca::counting_count(&space, budget)?,
        "classes": classes,
        "op_table": op_table,
    }))
}

fn cmd_verify(target: &str) -> Result<Value> {
    if target != "paper-example" {
        return Err(CliError::Parse(format!("unknown verify target `{target}`")));
    }
    let report = verify::verify_paper_example();
    let value = serde_json::to_value(&report).expect("report serializes");
    if !report.documented {
        // the caller prints the report before exiting with code 4
        return Err(CliError::Erratum(format!(
            "divergences differ from the documented set: {value}"
        )));
    }
    Ok(value)
}

/// Renders a value in the requested format, always newline-terminated.
pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("valid JSON value");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = String::new();
            flatten_tsv(value, String::new(), &mut out);
            out
        }
    }
}

fn scalar(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten_tsv(value: &Value, path: String, out: &mut String) {
    match value {
        Value::Array(items) => {
            if let Some(cells) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push_str(&path);
                out.push('\t');
                out.push_str(&cells.join(","));
                out.push('\n');
            } else {
                for (i, item) in items.iter().enumerate() {
                    flatten_tsv(item, format!("{path}.{i}"), out);
                }
            }
        }
        Value::Object(map) => {
            for (key, item) in map {
                let sub = if path.is_empty() { key.clone() } else { format!("{path}.{key}") };
                flatten_tsv(item, sub, out);
            }
        }
        other => {
            out.push_str(&path);
            out.push('\t');
            out.push_str(&scalar(other).expect("scalar"));
            out.push('\n');
        }
    }
}
