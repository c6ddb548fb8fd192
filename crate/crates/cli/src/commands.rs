use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use fracvar::fracops::{caputo_left_l1_all, caputo_right_l1_all};
use fracvar::reproduce::{build_table, figure_data, Cell, TableConfig};
use fracvar::{
    functional_of, Grid, Method, Order, Quadrature, SampledFunction, SeriesControl, SolutionSpec,
};

use crate::output::{Field, Records};
use crate::{
    DerivArgs, FigureArgs, Format, FunctionalArgs, MethodArg, RuleArg, RunConfig, Side, TableArgs,
};

#[derive(Debug)]
pub enum CliError {
    /// Bad input or a domain error from the library.
    Invalid(String),
    Io {
        path: Option<PathBuf>,
        source: io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Io {
                path: Some(p),
                source,
            } => write!(f, "{}: {source}", p.display()),
            CliError::Io { path: None, source } => write!(f, "{source}"),
        }
    }
}

impl From<fracvar::Error> for CliError {
    fn from(e: fracvar::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Classical => Method::Classical,
            MethodArg::Crl => Method::Crl,
            MethodArg::Cc => Method::Cc,
        }
    }
}

impl From<RuleArg> for Quadrature {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Trapezoid => Quadrature::Trapezoid,
            RuleArg::Right => Quadrature::RightEndpoint,
        }
    }
}

fn render(records: &Records, format: Format) -> String {
    match format {
        Format::Csv => records.to_csv(),
        Format::Json => records.to_json(),
    }
}

fn emit(records: &Records, format: Format, out: Option<&Path>) -> Result<()> {
    let text = render(records, format);
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: Some(path.to_path_buf()),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: None, source }),
    }
}

fn control(tol: f64) -> Result<SeriesControl> {
    Ok(SeriesControl::new(tol, SeriesControl::DEFAULT_MAX_TERMS)?)
}

fn spec(cfg: &RunConfig) -> Result<SolutionSpec> {
    Ok(SolutionSpec::new(
        cfg.method.into(),
        Order::new(cfg.alpha)?,
    )?)
}

pub fn solve(cfg: &RunConfig) -> Result<()> {
    let spec = spec(cfg)?;
    let grid = Grid::unit(cfg.m)?;
    let y = spec.sample(grid, control(cfg.tol)?)?;
    let mut records = Records::new(["x", "y"]);
    for (x, v) in grid.nodes().zip(y.values()) {
        records.push(vec![Field::Num(x), Field::Num(*v)]);
    }
    emit(&records, cfg.format, cfg.out.as_deref())
}

pub fn functional(args: &FunctionalArgs) -> Result<()> {
    let cfg = &args.run;
    let value = functional_of(spec(cfg)?, cfg.m, control(cfg.tol)?, args.rule.into())?;
    let mut records = Records::new(["method", "alpha", "m", "j"]);
    records.push(vec![
        Field::Text(Method::from(cfg.method).to_string()),
        Field::Num(cfg.alpha),
        Field::Int(value.m),
        Field::Num(value.j),
    ]);
    emit(&records, cfg.format, cfg.out.as_deref())
}

fn cell(c: Cell) -> Field {
    match c {
        Cell::Value(v) => Field::Num(v),
        Cell::NotExists => Field::Text(Cell::NOT_EXISTS.into()),
    }
}

pub fn table(args: &TableArgs) -> Result<()> {
    if args.sweep.is_empty() || args.sweep.iter().any(|&m| m < 2) {
        return Err(CliError::Invalid("--sweep needs grid sizes >= 2".into()));
    }
    let cfg = TableConfig {
        alphas: args.alphas.clone(),
        sweep: args.sweep.clone(),
        ctl: control(args.tol)?,
        rule: args.rule.into(),
    };
    let rows = build_table(&cfg)?;
    let mut records = Records::new([
        "alpha",
        "j_crl",
        "j_cc",
        "m",
        "m_crl",
        "j_crl_limit",
        "j_cc_limit",
    ]);
    for row in rows {
        records.push(vec![
            Field::Num(row.alpha),
            cell(row.j_crl),
            Field::Num(row.j_cc),
            Field::Int(row.m),
            row.m_crl
                .map_or(Field::Text(Cell::NOT_EXISTS.into()), Field::Int),
            cell(row.j_crl_limit),
            Field::Num(row.j_cc_limit),
        ]);
    }
    emit(&records, args.format, args.out.as_deref())
}

pub fn figures(args: &FigureArgs) -> Result<()> {
    let sets = figure_data(args.alphas.as_deref(), args.m, control(args.tol)?)?;
    fs::create_dir_all(&args.out).map_err(|source| CliError::Io {
        path: Some(args.out.clone()),
        source,
    })?;
    let ext = match args.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    for set in sets {
        let mut records = Records::new(set.columns.iter().cloned());
        for row in &set.rows {
            records.push(row.iter().copied().map(Field::Num).collect());
        }
        let path = args.out.join(format!("{}.{ext}", set.name));
        emit(&records, args.format, Some(&path))?;
    }
    Ok(())
}

/// Parse `x,y` rows; a first line that is not numeric is taken as a header.
fn read_samples(path: &Path) -> Result<SampledFunction> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: Some(path.to_path_buf()),
        source,
    })?;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = match fields.as_slice() {
            [x, y, ..] => x
                .parse::<f64>()
                .and_then(|x| y.parse::<f64>().map(|y| (x, y))),
            _ => {
                return Err(CliError::Invalid(format!(
                    "line {}: expected x,y",
                    lineno + 1
                )))
            }
        };
        match parsed {
            Ok((x, y)) => {
                xs.push(x);
                ys.push(y);
            }
            Err(_) if lineno == 0 => continue,
            Err(e) => return Err(CliError::Invalid(format!("line {}: {e}", lineno + 1))),
        }
    }
    if xs.len() < 2 {
        return Err(CliError::Invalid("need at least two samples".into()));
    }
    let m = xs.len() - 1;
    let (a, b) = (xs[0], xs[m]);
    let grid = Grid::new(a, b, m)?;
    let slack = 1e-9 * (b - a);
    if let Some(i) = (0..=m).find(|&i| (xs[i] - grid.node(i)).abs() > slack) {
        return Err(CliError::Invalid(format!(
            "grid is not uniform: x[{i}] = {} but expected {}",
            xs[i],
            grid.node(i)
        )));
    }
    Ok(SampledFunction::new(grid, ys)?)
}

pub fn deriv(args: &DerivArgs) -> Result<()> {
    let ord = Order::new(args.alpha)?;
    let f = read_samples(&args.input)?;
    let d = match args.side {
        Side::Left => caputo_left_l1_all(&f, ord),
        Side::Right => caputo_right_l1_all(&f, ord),
    };
    let mut records = Records::new(["x", "dy"]);
    for (x, v) in f.grid().nodes().zip(d) {
        records.push(vec![Field::Num(x), Field::Num(v)]);
    }
    emit(&records, args.format, args.out.as_deref())
}
