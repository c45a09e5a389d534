//! `rsr`: reduce a rating scale to the items whose summed score best
//! separates a binary decision, and check the data and the result.

mod report;
mod svg;

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rsr_core::{
    auc, check_attr_for_inclusion, diff_examples, gray_examples, gray_groups, reduction_ratio,
    roc_curve, start_auc_with, sum_scores, total_auc_with, unique_examples, Alternative,
    ColumnSelection, Dataset, Direction, InclusionOptions, Method, PositiveValue, ReducedScale,
    RocCurve, DEFAULT_N_BOOT,
};
use serde_json::{json, Value};

use report::{csv_field, dec7, sig7, table, DecisionInfo, Dimensions, RunReport};
use svg::{points_csv, LineChart, Series};

const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "rsr",
    version,
    about = "Rating scale reduction by greedy AUC maximization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count duplicate examples and list gray examples (identical attributes, different decisions)
    Audit {
        #[command(flatten)]
        input: InputArgs,
        /// Look for gray examples among distinct examples only
        #[arg(long)]
        dedup: bool,
    },
    /// AUC of every item on its own, largest first
    Rank {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        ranking: RankingArgs,
    },
    /// Rank items, add them up in order and stop at the first drop in AUC
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        ranking: RankingArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
    /// Test whether adding the next ranked item changes the reduced scale's AUC
    TestInclusion {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        ranking: RankingArgs,
        #[command(flatten)]
        test: TestArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// CSV file with a header row
    input: PathBuf,
    /// Label of the binary decision column
    #[arg(long)]
    decision: String,
    /// Decision value that marks a positive example; `auto` takes the larger one
    #[arg(long, default_value = "auto", value_parser = parse_positive)]
    positive: PositiveValue,
    /// Keep only these attribute columns (comma-separated)
    #[arg(long, value_delimiter = ',')]
    select: Vec<String>,
    /// Drop these attribute columns (comma-separated)
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Record the wall-clock time in the JSON report
    #[arg(long)]
    timestamp: bool,
}

#[derive(Args)]
struct RankingArgs {
    /// How item AUCs are judged when ranking
    #[arg(long, value_enum, default_value_t = DirectionArg::Fixed)]
    direction: DirectionArg,
    /// Reverse-code items whose AUC is below 0.5 before ranking
    #[arg(long)]
    auto_orient: bool,
}

#[derive(Args)]
struct PlotArgs {
    /// Write SVG charts and their point files
    #[arg(long)]
    plot: bool,
    /// Directory for plot files
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct TestArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = AlternativeArg::TwoSided)]
    alternative: AlternativeArg,
    /// Bootstrap replicates
    #[arg(long, default_value_t = DEFAULT_N_BOOT)]
    n_boot: usize,
    /// Bootstrap seed
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Fixed,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Delong,
    Bootstrap,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlternativeArg {
    #[value(alias = "two.sided")]
    TwoSided,
    Less,
    Greater,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Fixed => Direction::Fixed,
            DirectionArg::Auto => Direction::Auto,
        }
    }
}

impl From<AlternativeArg> for Alternative {
    fn from(a: AlternativeArg) -> Self {
        match a {
            AlternativeArg::TwoSided => Alternative::TwoSided,
            AlternativeArg::Less => Alternative::Less,
            AlternativeArg::Greater => Alternative::Greater,
        }
    }
}

fn parse_positive(s: &str) -> Result<PositiveValue, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(PositiveValue::Auto);
    }
    s.trim()
        .parse::<f64>()
        .map(PositiveValue::Value)
        .map_err(|_| format!("expected `auto` or a number, got `{s}`"))
}

#[derive(Debug)]
enum CliError {
    Core(rsr_core::Error),
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    NotReducible {
        items: usize,
    },
}

impl From<rsr_core::Error> for CliError {
    fn from(e: rsr_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Write { path, source } => write!(f, "cannot write {}: {source}", path.display()),
            CliError::NotReducible { items } => write!(
                f,
                "the scale is not reducible: all {items} items were retained, so there is no next item to test"
            ),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_analysis_error() => 3,
            CliError::NotReducible { .. } => 3,
            _ => 2,
        }
    }
}

/// What a command produced, in each output format.
struct Outcome {
    command: &'static str,
    parameters: Value,
    results: Value,
    table: String,
    csv: String,
}

struct Loaded {
    ds: Dataset,
    flipped: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rsr: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (input, loaded, outcome) = match &cli.command {
        Command::Audit { input, dedup } => {
            let loaded = load(input, None)?;
            let outcome = audit(&loaded.ds, *dedup)?;
            (input, loaded, outcome)
        }
        Command::Rank { input, ranking } => {
            let loaded = load(input, Some(ranking))?;
            let outcome = rank(&loaded.ds, ranking)?;
            (input, loaded, outcome)
        }
        Command::Reduce {
            input,
            ranking,
            plot,
        } => {
            let loaded = load(input, Some(ranking))?;
            let outcome = reduce(&loaded.ds, ranking, plot)?;
            (input, loaded, outcome)
        }
        Command::TestInclusion {
            input,
            ranking,
            test,
            plot,
        } => {
            let loaded = load(input, Some(ranking))?;
            let outcome = test_inclusion(&loaded.ds, ranking, test, plot)?;
            (input, loaded, outcome)
        }
    };

    let text = match input.format {
        Format::Table => {
            let mut t = String::new();
            if !loaded.flipped.is_empty() {
                t.push_str(&format!("reverse-coded: {}\n\n", loaded.flipped.join(", ")));
            }
            t.push_str(&outcome.table);
            t
        }
        Format::Csv => outcome.csv,
        Format::Json => {
            let report = build_report(input, &loaded, outcome);
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = lock.write_all(text.as_bytes()).and_then(|_| lock.flush());
    Ok(())
}

fn build_report(input: &InputArgs, loaded: &Loaded, outcome: Outcome) -> RunReport {
    let ds = &loaded.ds;
    let encoding = ds.encoding();
    let mut parameters = json!({
        "decision": input.decision,
        "positive": match input.positive {
            PositiveValue::Auto => json!("auto"),
            PositiveValue::Value(v) => json!(v),
        },
        "select": input.select,
        "exclude": input.exclude,
    });
    if let (Value::Object(base), Value::Object(extra)) = (&mut parameters, outcome.parameters) {
        base.extend(extra);
    }
    RunReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: outcome.command.to_string(),
        input: input.input.display().to_string(),
        dimensions: Dimensions {
            examples: ds.n_examples(),
            attributes: ds.n_attributes(),
            positives: ds.n_positive(),
            negatives: ds.n_negative(),
        },
        dropped_rows: ds.dropped_rows(),
        decision: DecisionInfo {
            column: input.decision.clone(),
            positive: encoding.positive,
            negative: encoding.negative,
        },
        parameters,
        flipped_items: loaded.flipped.clone(),
        results: outcome.results,
        timestamp: input.timestamp.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
    }
}

fn load(input: &InputArgs, ranking: Option<&RankingArgs>) -> Result<Loaded, CliError> {
    let mut ds = Dataset::load_csv(&input.input, &input.decision, input.positive)?;
    if !input.select.is_empty() {
        ds = ds.select_columns(&ColumnSelection::labels(&input.select))?;
    }
    if !input.exclude.is_empty() {
        ds = ds.exclude_columns(&input.exclude)?;
    }
    let mut flipped = Vec::new();
    if let Some(ranking) = ranking {
        let mut negative = Vec::new();
        for j in 0..ds.n_attributes() {
            if auc(ds.column(j), ds.decision())? < 0.5 {
                negative.push(j);
            }
        }
        let names: Vec<String> = negative.iter().map(|&j| ds.labels()[j].clone()).collect();
        if ranking.auto_orient {
            ds = ds.reverse_columns(&negative)?;
            flipped = names;
        } else if !names.is_empty() {
            eprintln!(
                "rsr: warning: {} item(s) score AUC below 0.5 and pull the total the wrong way: {} (see --auto-orient)",
                names.len(),
                names.join(", ")
            );
        }
    }
    Ok(Loaded { ds, flipped })
}

fn ranking_parameters(ranking: &RankingArgs) -> Value {
    json!({
        "direction": Direction::from(ranking.direction),
        "auto_orient": ranking.auto_orient,
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn fmt_value(v: f64) -> String {
    format!("{v}")
}

fn audit(ds: &Dataset, dedup: bool) -> Result<Outcome, CliError> {
    let rows = ds.rows();
    let report = diff_examples(&rows)?;
    let (rows, decision) = if dedup {
        let uniq = unique_examples(ds);
        (uniq.rows(), uniq.decision().to_vec())
    } else {
        (rows, ds.decision().to_vec())
    };
    let pairs = gray_examples(&rows, &decision)?;
    let groups = gray_groups(&rows, &decision)?;
    let encoding = ds.encoding();
    let code = |d: bool| {
        if d {
            encoding.positive
        } else {
            encoding.negative
        }
    };

    let mut text = format!(
        "total {}, distinct {}, duplicates {}\n{} gray pairs",
        report.total_examples,
        report.distinct_examples,
        report.duplicate_examples,
        pairs.len()
    );
    if !pairs.is_empty() {
        text.push_str(&format!(" in {} group(s)", groups.len()));
    }
    text.push('\n');
    let mut header = vec!["pair", "example_a", "example_b", "decision_a", "decision_b"];
    header.extend(ds.labels().iter().map(String::as_str));
    if !pairs.is_empty() {
        let body: Vec<(String, Vec<String>)> = pairs
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let mut cells = vec![
                    (p.row_index_a + 1).to_string(),
                    (p.row_index_b + 1).to_string(),
                    fmt_value(code(p.decision_a)),
                    fmt_value(code(p.decision_b)),
                ];
                cells.extend(p.attribute_values.iter().map(|&v| fmt_value(v)));
                ((k + 1).to_string(), cells)
            })
            .collect();
        text.push('\n');
        text.push_str(&table(&header, &body));
    }

    let mut csv = header[1..]
        .iter()
        .map(|h| csv_field(h))
        .collect::<Vec<_>>()
        .join(",");
    csv.push('\n');
    for p in &pairs {
        let mut cells = vec![
            (p.row_index_a + 1).to_string(),
            (p.row_index_b + 1).to_string(),
            fmt_value(code(p.decision_a)),
            fmt_value(code(p.decision_b)),
        ];
        cells.extend(p.attribute_values.iter().map(|&v| fmt_value(v)));
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }

    let pair_json: Vec<Value> = pairs
        .iter()
        .map(|p| {
            json!({
                "example_a": p.row_index_a + 1,
                "example_b": p.row_index_b + 1,
                "decision_a": code(p.decision_a),
                "decision_b": code(p.decision_b),
                "attribute_values": p.attribute_values,
            })
        })
        .collect();
    let group_json: Vec<Value> = groups
        .iter()
        .map(|g| {
            json!({
                "examples": g.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
                "attribute_values": g.attribute_values,
                "n_positive": g.n_positive,
                "n_negative": g.n_negative,
            })
        })
        .collect();
    Ok(Outcome {
        command: "audit",
        parameters: json!({ "dedup": dedup }),
        results: json!({
            "duplicates": report,
            "gray_pairs": pair_json,
            "gray_groups": group_json,
        }),
        table: text,
        csv,
    })
}

fn rank(ds: &Dataset, ranking: &RankingArgs) -> Result<Outcome, CliError> {
    let mut items = start_auc_with(ds, ranking.direction.into())?;
    items.sort_by(|a, b| b.auc.total_cmp(&a.auc));
    let body: Vec<(String, Vec<String>)> = items
        .iter()
        .map(|i| (i.label.clone(), vec![dec7(i.auc)]))
        .collect();
    let mut csv = String::from("item,auc\n");
    for i in &items {
        csv.push_str(&format!("{},{}\n", csv_field(&i.label), i.auc));
    }
    Ok(Outcome {
        command: "rank",
        parameters: ranking_parameters(ranking),
        results: json!({ "items": items }),
        table: table(&["", "AUC"], &body),
        csv,
    })
}

/// ROC curve of a summed score, turned around when the direction is
/// `auto` and the sum works backwards.
fn oriented_curve(
    mut scores: Vec<f64>,
    decision: &[bool],
    direction: Direction,
) -> Result<RocCurve, CliError> {
    let curve = roc_curve(&scores, decision)?;
    if direction == Direction::Auto && curve.auc < 0.5 {
        scores.iter_mut().for_each(|s| *s = -*s);
        return Ok(roc_curve(&scores, decision)?);
    }
    Ok(curve)
}

fn curve_points(curve: &RocCurve) -> Vec<(f64, f64)> {
    curve.points.iter().map(|p| (p.fpr, p.tpr)).collect()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| CliError::Write {
        path: path.clone(),
        source,
    })?;
    eprintln!("rsr: wrote {}", path.display());
    Ok(())
}

fn padded_range(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut lo = (lo * 20.0).floor() / 20.0;
    let mut hi = (hi * 20.0).ceil() / 20.0;
    if hi - lo < 0.05 {
        lo -= 0.05;
        hi += 0.05;
    }
    (lo.max(0.0), hi.min(1.0))
}

fn roc_chart(title: String, series: Vec<Series>) -> LineChart {
    LineChart {
        title,
        x_label: "1 - specificity".into(),
        y_label: "sensitivity".into(),
        x_range: (0.0, 1.0),
        y_range: (0.0, 1.0),
        series,
        diagonal: true,
        hlines: vec![],
    }
}

fn reduce(ds: &Dataset, ranking_args: &RankingArgs, plot: &PlotArgs) -> Result<Outcome, CliError> {
    let direction: Direction = ranking_args.direction.into();
    let ranking = total_auc_with(ds, direction)?;
    let scale = ReducedScale::from_ranking(&ranking)?;
    let ratio = reduction_ratio(&scale, ds.n_attributes())?;
    let scores = sum_scores(ds, &ColumnSelection::Indices(scale.columns.clone()))?;
    let curve = oriented_curve(scores, ds.decision(), direction)?;

    let body: Vec<(String, Vec<String>)> = ranking
        .order
        .iter()
        .zip(ranking.single_auc.iter().zip(&ranking.running_auc))
        .map(|(label, (&one, &run))| (label.clone(), vec![dec7(one), dec7(run)]))
        .collect();
    let stop = match scale.stop_reason {
        rsr_core::StopReason::FirstDecrease => "first decrease of the running total",
        rsr_core::StopReason::ExhaustedAllItems => "running total never decreased",
    };
    let mut text = table(&["", "AUC one variable", "AUC running total"], &body);
    text.push_str(&format!(
        "\nreduced scale: {}\nitems kept: {} of {} (ratio {})\nachieved AUC: {}\nstopped: {}\n",
        scale.items.join(", "),
        scale.len(),
        ds.n_attributes(),
        dec7(ratio),
        dec7(scale.achieved_auc),
        stop
    ));

    let mut csv = String::from("item,auc_one_variable,auc_running_total,retained\n");
    for (k, label) in ranking.order.iter().enumerate() {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            csv_field(label),
            ranking.single_auc[k],
            ranking.running_auc[k],
            k < scale.len()
        ));
    }

    if plot.plot {
        let running: Vec<(f64, f64)> = ranking
            .running_auc
            .iter()
            .enumerate()
            .map(|(k, &a)| ((k + 1) as f64, a))
            .collect();
        let max = ranking
            .running_auc
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let chart = LineChart {
            title: "AUC of the running total".into(),
            x_label: "number of items".into(),
            y_label: "AUC".into(),
            x_range: (1.0, ranking.len() as f64),
            y_range: padded_range(&ranking.running_auc),
            series: vec![Series {
                name: "running total".into(),
                points: running.clone(),
                markers: true,
            }],
            diagonal: false,
            hlines: vec![(max, format!("max {}", dec7(max)))],
        };
        write_file(&plot.out, "running_auc.svg", &chart.render())?;
        write_file(&plot.out, "running_auc.csv", &points_csv(&running))?;
        let points = curve_points(&curve);
        let chart = roc_chart(
            format!("ROC of {}", scale.items.join(" + ")),
            vec![Series {
                name: format!("reduced scale, AUC {}", dec7(curve.auc)),
                points: points.clone(),
                markers: false,
            }],
        );
        write_file(&plot.out, "roc_reduced.svg", &chart.render())?;
        write_file(&plot.out, "roc_reduced.csv", &points_csv(&points))?;
    }

    Ok(Outcome {
        command: "reduce",
        parameters: merge(
            ranking_parameters(ranking_args),
            json!({ "plot": plot.plot, "out": plot.out.display().to_string() }),
        ),
        results: json!({
            "ranking": ranking,
            "scale": scale,
            "reduction_ratio": ratio,
            "roc": curve.points.iter().map(|p| json!({
                "threshold": p.threshold.is_finite().then_some(p.threshold),
                "fpr": p.fpr,
                "tpr": p.tpr,
                "true_positives": p.true_positives,
                "false_positives": p.false_positives,
            })).collect::<Vec<_>>(),
        }),
        table: text,
        csv,
    })
}

fn test_inclusion(
    ds: &Dataset,
    ranking: &RankingArgs,
    test: &TestArgs,
    plot: &PlotArgs,
) -> Result<Outcome, CliError> {
    let direction: Direction = ranking.direction.into();
    let methods: &[Method] = match test.method {
        MethodArg::Delong => &[Method::DeLong],
        MethodArg::Bootstrap => &[Method::Bootstrap],
        MethodArg::Both => &[Method::DeLong, Method::Bootstrap],
    };
    let mut checks = Vec::new();
    for &method in methods {
        let opts = InclusionOptions {
            method,
            alternative: test.alternative.into(),
            n_boot: test.n_boot,
            seed: test.seed,
            direction,
        };
        match check_attr_for_inclusion(ds, &opts) {
            Ok(c) => checks.push(c),
            Err(rsr_core::Error::NoNextAttribute) => {
                return Err(CliError::NotReducible {
                    items: ds.n_attributes(),
                })
            }
            Err(e) => return Err(e.into()),
        }
    }
    let first = &checks[0];
    let (scale, candidate) = (&first.scale, &first.candidate);
    let (auc_1, auc_2) = (first.test.auc_1, first.test.auc_2);

    let mut text = format!(
        "reduced scale: {}\nnext item: {}\nAUC reduced: {}\nAUC with next item: {}\n\n",
        scale.items.join(", "),
        candidate,
        dec7(auc_1),
        dec7(auc_2)
    );
    let body: Vec<(String, Vec<String>)> = checks
        .iter()
        .map(|c| {
            let name = match c.test.method {
                Method::DeLong => "DeLong",
                Method::Bootstrap => "bootstrap",
            };
            (name.to_string(), vec![sig7(c.test.z), sig7(c.test.p_value)])
        })
        .collect();
    text.push_str(&table(&["", "Z statistics", "p-value"], &body));

    let mut csv = String::from("method,z,p_value,auc_reduced,auc_with_next\n");
    for c in &checks {
        let name = serde_json::to_value(c.test.method).expect("method serializes");
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            name.as_str().unwrap_or_default(),
            c.test.z,
            c.test.p_value,
            c.test.auc_1,
            c.test.auc_2
        ));
    }

    if plot.plot {
        let mut cols = scale.columns.clone();
        let reduced = oriented_curve(
            sum_scores(ds, &ColumnSelection::Indices(cols.clone()))?,
            ds.decision(),
            direction,
        )?;
        cols.push(ds.column_index(candidate).expect("candidate is a column"));
        let extended = oriented_curve(
            sum_scores(ds, &ColumnSelection::Indices(cols))?,
            ds.decision(),
            direction,
        )?;
        let (p1, p2) = (curve_points(&reduced), curve_points(&extended));
        let chart = roc_chart(
            "ROC curves compared".into(),
            vec![
                Series {
                    name: format!("{} (AUC {})", scale.items.join(" + "), dec7(reduced.auc)),
                    points: p1.clone(),
                    markers: false,
                },
                Series {
                    name: format!("+ {} (AUC {})", candidate, dec7(extended.auc)),
                    points: p2.clone(),
                    markers: false,
                },
            ],
        );
        write_file(&plot.out, "roc_inclusion.svg", &chart.render())?;
        write_file(&plot.out, "roc_inclusion_reduced.csv", &points_csv(&p1))?;
        write_file(&plot.out, "roc_inclusion_extended.csv", &points_csv(&p2))?;
    }

    let tests: Vec<_> = checks.iter().map(|c| &c.test).collect();
    Ok(Outcome {
        command: "test-inclusion",
        parameters: merge(
            ranking_parameters(ranking),
            json!({
                "method": methods,
                "alternative": Alternative::from(test.alternative),
                "n_boot": test.n_boot,
                "seed": test.seed,
                "plot": plot.plot,
                "out": plot.out.display().to_string(),
            }),
        ),
        results: json!({
            "scale": scale,
            "candidate": candidate,
            "auc_reduced": auc_1,
            "auc_with_next": auc_2,
            "tests": tests,
        }),
        table: text,
        csv,
    })
}
