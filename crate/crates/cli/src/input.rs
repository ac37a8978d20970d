//! Loading algebras, parameters and maps from names, files and flags.

use std::path::Path;

use lcalg::cayley_dickson::{named_algebra, Grading};
use lcalg::lowdim::four::{extract_tu, Params4, Params4Text};
use lcalg::rational::parse_rational;
use lcalg::{Algebra, Error, ParseError, QMatrix, Rational};

use crate::{GradingChoice, EXIT_FAILURE, EXIT_MALFORMED, EXIT_USAGE};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: msg.into() }
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_MALFORMED, message: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(ParseError::File(_)) | Error::InvalidConstants(_) | Error::InvalidUnit(_) => EXIT_MALFORMED,
            Error::Parse(_) | Error::UnknownAlgebra(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError { code, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::malformed(format!("{}: {e}", path.display())))
}

/// A catalogue name or an algebra file, with the grading it carries.
pub fn load_algebra(src: &str) -> CliResult<(Algebra, Option<Grading>)> {
    let path = Path::new(src);
    if path.exists() {
        let text = read_file(path)?;
        return lcalg::io::parse_algebra_json(&text).map_err(|e| match e {
            Error::Parse(ParseError::Rational(r)) => CliError::malformed(format!("malformed rational `{r}` in {src}")),
            Error::InvalidGrading(g) => CliError::malformed(format!("invalid grading in {src}: {g}")),
            other => {
                let mut err = CliError::from(other);
                err.code = EXIT_MALFORMED;
                err
            }
        });
    }
    if src.ends_with(".json") {
        return Err(CliError::malformed(format!("{src}: no such file")));
    }
    let n = named_algebra(src)?;
    Ok((n.algebra, n.grading))
}

pub fn choose_grading(a: &Algebra, stored: Option<Grading>, choice: GradingChoice) -> CliResult<Option<Grading>> {
    Ok(match choice {
        GradingChoice::Auto => stored,
        GradingChoice::Trivial => Some(Grading::trivial(a.dim())),
        GradingChoice::Natural => Some(Grading::natural(a.dim())?),
    })
}

fn parse_list(text: &str) -> CliResult<Vec<Rational>> {
    text.split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| CliError::usage(e.to_string())))
        .collect()
}

pub fn parse_rationals(items: &[String]) -> CliResult<Vec<Rational>> {
    items
        .iter()
        .map(|s| parse_rational(s.trim()).map_err(|e| CliError::usage(e.to_string())))
        .collect()
}

/// `T` as `a,b,c;d,e,f;g,h,i` and `u` as `x,y,z`.
pub fn params_from_flags(t: &str, u: &str) -> CliResult<Params4> {
    let rows = t.split(';').map(parse_list).collect::<CliResult<Vec<_>>>()?;
    let m = QMatrix::from_rows(rows).map_err(|e| CliError::usage(format!("T: {e}")))?;
    Params4::new(m, parse_list(u)?).map_err(|e| CliError::usage(format!("(T, u): {e}")))
}

/// A parameter file, an algebra file or a catalogue name. Algebras go
/// through exact extraction.
pub fn load_params(src: &str) -> CliResult<Params4> {
    let path = Path::new(src);
    if path.exists() {
        let text = read_file(path)?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| CliError::malformed(format!("{src}: {e}")))?;
        if value.get("T").is_some() {
            let p: Params4Text = serde_json::from_value(value).map_err(|e| CliError::malformed(format!("{src}: {e}")))?;
            return Params4::try_from(&p).map_err(|e| CliError::malformed(format!("{src}: {e}")));
        }
    }
    let (a, _) = load_algebra(src)?;
    Ok(extract_tu(&a)?.params)
}

pub fn params_source(source: Option<&str>, t: Option<&str>, u: Option<&str>) -> CliResult<Params4> {
    match (source, t, u) {
        (Some(s), _, _) => load_params(s),
        (None, Some(t), Some(u)) => params_from_flags(t, u),
        _ => Err(CliError::usage("give a source or both --T and --u")),
    }
}

pub fn load_map(src: &str) -> CliResult<QMatrix> {
    let text = read_file(Path::new(src))?;
    lcalg::io::parse_map_json(&text).map_err(|e| CliError::malformed(format!("{src}: {e}")))
}
