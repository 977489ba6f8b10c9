//! Command-line front end: build a conchoid from flags and write CSV, SVG,
//! or JSON outputs.
//!
//! Exit codes: 0 success, 2 flag or expression parse errors, 3 construction
//! and runtime errors (degenerate curves, no valid samples, I/O failures).

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Arg, ArgAction, ArgMatches, Command};

use conchoid::{
    preset_config, sample_gpc, write_csv, write_json, write_svg, BaseCurve, CircularArcCurve,
    GpcConfig, GpcResult, LineSegmentCurve, OffsetExpr, PlotSpec, Point2, TableSpec, PRESETS,
};

enum CliError {
    /// Exit 2: bad flags, bad expressions, unknown presets.
    Usage(String),
    /// Exit 3: the construction itself failed.
    Runtime(String),
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn runtime(message: impl Into<String>) -> CliError {
    CliError::Runtime(message.into())
}

/// Run with a full argv (program name first). Returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let matches = match build_command().try_get_matches_from(argv) {
        Ok(matches) => matches,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(&matches) {
        Ok(()) => 0,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(CliError::Runtime(message)) => {
            eprintln!("error: {message}");
            3
        }
    }
}

fn build_command() -> Command {
    Command::new("conchoid")
        .version(env!("CARGO_PKG_VERSION"))
        .about(
            "Generate generalized planar conchoids: sample a base curve, offset each point \
             along its focal ray by d = f(l), and write the result as CSV, SVG, or JSON",
        )
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(line_command())
        .subcommand(arc_command())
        .subcommand(presets_command())
}

fn expr_value_arg(id: &'static str, value_name: &'static str, help: &'static str) -> Arg {
    Arg::new(id)
        .long(id)
        .value_name(value_name)
        .allow_hyphen_values(true)
        .help(help)
}

fn offset_arg() -> Arg {
    expr_value_arg("offset", "EXPR", "Offset function f(l), e.g. \"l + sin(l)\"").required(true)
}

fn m_arg() -> Arg {
    Arg::new("m")
        .long("m")
        .value_name("INT")
        .default_value("180")
        .value_parser(clap::value_parser!(u64).range(2..))
        .help("Sample count (at least 2)")
}

fn output_args() -> [Arg; 4] {
    [
        Arg::new("csv")
            .long("csv")
            .value_name("PATH")
            .help("Write the calculation table as CSV"),
        Arg::new("svg")
            .long("svg")
            .value_name("PATH")
            .help("Write the plot as SVG"),
        Arg::new("json")
            .long("json")
            .value_name("PATH")
            .help("Write the full result as JSON"),
        Arg::new("print-summary")
            .long("print-summary")
            .action(ArgAction::SetTrue)
            .help("Print a short summary to stdout"),
    ]
}

fn line_command() -> Command {
    Command::new("line")
        .about("Conchoid over a directed line segment")
        .arg(expr_value_arg("focus", "X,Y", "Focus point O").required(true))
        .arg(
            expr_value_arg("n0", "X,Y", "Segment start N")
                .requires("s")
                .conflicts_with_all(["line-y", "x-range"]),
        )
        .arg(expr_value_arg("s", "X,Y", "Segment end S").requires("n0"))
        .arg(
            expr_value_arg("line-y", "EXPR", "Horizontal line y = EXPR (use with --x-range)")
                .requires("x-range"),
        )
        .arg(expr_value_arg("x-range", "A:B", "x interval A to B for --line-y").requires("line-y"))
        .arg(offset_arg())
        .arg(m_arg())
        .args(output_args())
}

fn arc_command() -> Command {
    Command::new("arc")
        .about("Conchoid over a circular arc")
        .arg(expr_value_arg("focus", "X,Y", "Focus point O").required(true))
        .arg(expr_value_arg("center", "X,Y", "Arc centre").required(true))
        .arg(expr_value_arg("radius", "EXPR", "Arc radius").required(true))
        .arg(
            expr_value_arg("theta", "A:B", "Angle sweep from A to B, radians (e.g. 0:9/8*pi)")
                .required(true),
        )
        .arg(offset_arg())
        .arg(m_arg())
        .args(output_args())
}

fn presets_command() -> Command {
    Command::new("presets")
        .about("Run or list the named example configurations")
        .arg(
            Arg::new("list")
                .long("list")
                .action(ArgAction::SetTrue)
                .help("List preset names and parameters"),
        )
        .arg(Arg::new("name").value_name("NAME").help("Preset to run (see --list)"))
        .args(output_args())
}

/// Parse a constant expression flag; the variable l is not allowed.
fn parse_scalar(text: &str, flag: &str) -> Result<f64, CliError> {
    let expr = OffsetExpr::parse(text).map_err(|e| usage(format!("--{flag}: {e}")))?;
    if expr.contains_var() {
        return Err(usage(format!(
            "--{flag}: the variable l is only allowed in --offset"
        )));
    }
    let value = expr.evaluate(0.0);
    if !value.is_finite() {
        return Err(usage(format!("--{flag}: value {value} is not finite")));
    }
    Ok(value)
}

fn parse_point(text: &str, flag: &str) -> Result<Point2, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage(format!(
            "--{flag}: expected X,Y with exactly one comma, got {text:?}"
        )));
    }
    Ok(Point2::new(
        parse_scalar(parts[0], flag)?,
        parse_scalar(parts[1], flag)?,
    ))
}

fn parse_range(text: &str, flag: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return Err(usage(format!(
            "--{flag}: expected A:B with exactly one colon, got {text:?}"
        )));
    }
    Ok((parse_scalar(parts[0], flag)?, parse_scalar(parts[1], flag)?))
}

fn required_str<'a>(matches: &'a ArgMatches, id: &str) -> &'a str {
    matches
        .get_one::<String>(id)
        .expect("required by clap")
        .as_str()
}

fn parse_offset(matches: &ArgMatches) -> Result<OffsetExpr, CliError> {
    OffsetExpr::parse(required_str(matches, "offset"))
        .map_err(|e| usage(format!("--offset: {e}")))
}

fn parse_m(matches: &ArgMatches) -> usize {
    *matches.get_one::<u64>("m").expect("defaulted") as usize
}

struct Outputs<'a> {
    csv: Option<&'a str>,
    svg: Option<&'a str>,
    json: Option<&'a str>,
    print_summary: bool,
}

impl<'a> Outputs<'a> {
    fn from_matches(matches: &'a ArgMatches) -> Result<Self, CliError> {
        let outputs = Outputs {
            csv: matches.get_one::<String>("csv").map(String::as_str),
            svg: matches.get_one::<String>("svg").map(String::as_str),
            json: matches.get_one::<String>("json").map(String::as_str),
            print_summary: matches.get_flag("print-summary"),
        };
        if outputs.csv.is_none()
            && outputs.svg.is_none()
            && outputs.json.is_none()
            && !outputs.print_summary
        {
            return Err(usage(
                "no output requested; pass --csv, --svg, --json, or --print-summary",
            ));
        }
        Ok(outputs)
    }
}

fn dispatch(matches: &ArgMatches) -> Result<(), CliError> {
    match matches.subcommand() {
        Some(("line", sub)) => {
            let outputs = Outputs::from_matches(sub)?;
            let config = line_config(sub)?;
            emit(config, &outputs)
        }
        Some(("arc", sub)) => {
            let outputs = Outputs::from_matches(sub)?;
            let config = arc_config(sub)?;
            emit(config, &outputs)
        }
        Some(("presets", sub)) => run_presets(sub),
        _ => unreachable!("subcommand required"),
    }
}

fn line_config(matches: &ArgMatches) -> Result<GpcConfig, CliError> {
    let focus = parse_point(required_str(matches, "focus"), "focus")?;
    let (n, s) = if matches.contains_id("n0") {
        (
            parse_point(required_str(matches, "n0"), "n0")?,
            parse_point(required_str(matches, "s"), "s")?,
        )
    } else if matches.contains_id("line-y") {
        let y = parse_scalar(required_str(matches, "line-y"), "line-y")?;
        let (a, b) = parse_range(required_str(matches, "x-range"), "x-range")?;
        (Point2::new(a, y), Point2::new(b, y))
    } else {
        return Err(usage(
            "specify the segment with --n0/--s or with --line-y/--x-range",
        ));
    };
    let curve: BaseCurve = LineSegmentCurve::new(n, s)
        .map_err(|e| runtime(e.to_string()))?
        .into();
    let offset = parse_offset(matches)?;
    GpcConfig::new(focus, curve, offset, parse_m(matches)).map_err(|e| runtime(e.to_string()))
}

fn arc_config(matches: &ArgMatches) -> Result<GpcConfig, CliError> {
    let focus = parse_point(required_str(matches, "focus"), "focus")?;
    let center = parse_point(required_str(matches, "center"), "center")?;
    let radius = parse_scalar(required_str(matches, "radius"), "radius")?;
    let (theta_n, theta_s) = parse_range(required_str(matches, "theta"), "theta")?;
    let curve: BaseCurve = CircularArcCurve::new(center, radius, theta_n, theta_s)
        .map_err(|e| runtime(e.to_string()))?
        .into();
    let offset = parse_offset(matches)?;
    GpcConfig::new(focus, curve, offset, parse_m(matches)).map_err(|e| runtime(e.to_string()))
}

fn run_presets(matches: &ArgMatches) -> Result<(), CliError> {
    let list = matches.get_flag("list");
    let name = matches.get_one::<String>("name");
    match (list, name) {
        (true, Some(_)) => Err(usage("--list does not take a preset name")),
        (true, None) => {
            let mut text = String::new();
            for preset in PRESETS {
                let _ = writeln!(text, "{:<12} {}", preset.name, preset.description);
            }
            print!("{text}");
            Ok(())
        }
        (false, Some(name)) => {
            let outputs = Outputs::from_matches(matches)?;
            let config = preset_config(name).map_err(|e| usage(e.to_string()))?;
            emit(config, &outputs)
        }
        (false, None) => Err(usage("pass a preset name or --list")),
    }
}

fn describe_curve(curve: &BaseCurve) -> String {
    match curve {
        BaseCurve::Line(line) => format!(
            "line from ({}, {}) to ({}, {})",
            line.start().x,
            line.start().y,
            line.end().x,
            line.end().y
        ),
        BaseCurve::Arc(arc) => format!(
            "circular arc centre ({}, {}), radius {}, theta {} to {}",
            arc.centre().x,
            arc.centre().y,
            arc.radius(),
            arc.theta_n(),
            arc.theta_s()
        ),
        BaseCurve::Parametric(par) => {
            format!("parametric curve ({} quadrature panels)", par.arclen_subdivisions())
        }
    }
}

fn summarize(result: &GpcResult, written: &[&str]) -> String {
    let mut text = String::new();
    let config = &result.config;
    let _ = writeln!(text, "focus: ({}, {})", config.focus.x, config.focus.y);
    let _ = writeln!(text, "curve: {}", describe_curve(&config.curve));
    let _ = writeln!(text, "offset: {}", config.offset.render());
    let _ = writeln!(
        text,
        "samples: {} (dropped {})",
        result.samples.len(),
        result.dropped
    );
    for path in written {
        let _ = writeln!(text, "wrote {path}");
    }
    text
}

fn emit(config: GpcConfig, outputs: &Outputs) -> Result<(), CliError> {
    let result = sample_gpc(config).map_err(|e| runtime(e.to_string()))?;
    let mut written = Vec::new();
    if let Some(path) = outputs.csv {
        let text = write_csv(&result, &TableSpec::default());
        std::fs::write(path, text).map_err(|e| runtime(format!("writing {path}: {e}")))?;
        written.push(path);
    }
    if let Some(path) = outputs.svg {
        let text = write_svg(&result, &PlotSpec::default()).map_err(|e| runtime(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| runtime(format!("writing {path}: {e}")))?;
        written.push(path);
    }
    if let Some(path) = outputs.json {
        let text = write_json(&result);
        std::fs::write(path, text).map_err(|e| runtime(format!("writing {path}: {e}")))?;
        written.push(path);
    }
    if outputs.print_summary {
        print!("{}", summarize(&result, &written));
    }
    Ok(())
}
