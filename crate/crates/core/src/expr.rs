//! Linear combinations of basis labels: `f1 - f4`, `2/3*e8 + 1`, `e_8/2`.
//!
//! A term is an optional rational coefficient, an optional `*`, an optional
//! label and an optional `/q` divisor. A term without a label is a multiple
//! of the unit. Labels match with underscores ignored, and `<sym>0` names
//! the unit when it is labelled `1`.

use num::Zero;

use crate::algebra::{Algebra, Element};
use crate::error::ParseError;
use crate::rational::{int, parse_rational, Rational};

fn normalize(label: &str) -> String {
    label.replace('_', "")
}

fn resolve(a: &Algebra, label: &str) -> Result<usize, ParseError> {
    let key = normalize(label);
    if let Some(i) = a.labels().iter().position(|l| normalize(l) == key) {
        return Ok(i);
    }
    let digits = key.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    let prefix = &key[..key.len() - digits.len()];
    if let (false, Ok(i)) = (prefix.is_empty(), digits.parse::<usize>()) {
        if i < a.dim() && (a.labels()[i] == "1" || normalize(&a.labels()[i]) == key) {
            return Ok(i);
        }
    }
    Err(ParseError::UnknownLabel(label.to_string()))
}

pub fn parse_element(expr: &str, a: &Algebra) -> Result<Element, ParseError> {
    let bad = |reason: &str| ParseError::Expression {
        expr: expr.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty expression"));
    }
    // split into signed terms at top-level + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for (k, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && k > 0 && !current.is_empty() && !current.ends_with(['*', '/']) {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && current.is_empty() {
            if ch == '-' {
                negative = !negative;
            }
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(bad("dangling operator"));
    }
    terms.push((negative, current));

    let mut out = Element::zero(a.dim());
    for (negative, term) in terms {
        let (coef, index) = parse_term(&term, a).map_err(|e| match e {
            ParseError::UnknownLabel(_) => e,
            _ => bad(&format!("cannot read term `{term}`")),
        })?;
        let coef = if negative { -coef } else { coef };
        let index = match index {
            Some(i) => i,
            None => a.unit().ok_or_else(|| bad("scalar term in an algebra without unit"))?,
        };
        let mut c = out.into_coords();
        c[index] += coef;
        out = Element::new(c);
    }
    Ok(out)
}

fn parse_term(term: &str, a: &Algebra) -> Result<(Rational, Option<usize>), ParseError> {
    let err = || ParseError::Expression {
        expr: term.to_string(),
        reason: "malformed term".into(),
    };
    // trailing divisor applies to the whole term
    let (body, divisor) = match term.rsplit_once('/') {
        Some((b, d)) if !b.is_empty() && d.chars().all(|c| c.is_ascii_digit()) && !b.ends_with('*') => {
            let is_fraction = b.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '.');
            if is_fraction {
                (term, int(1))
            } else {
                (b, parse_rational(d)?)
            }
        }
        _ => (term, int(1)),
    };
    if divisor.is_zero() {
        return Err(err());
    }
    let (coef_text, label) = match body.split_once('*') {
        Some((c, l)) => (Some(c), Some(l)),
        None => {
            let starts_numeric = body.starts_with(|c: char| c.is_ascii_digit() || c == '.');
            if starts_numeric && resolve(a, body).is_err() {
                (Some(body), None)
            } else {
                (None, Some(body))
            }
        }
    };
    let coef = match coef_text {
        Some(c) => parse_rational(c)?,
        None => int(1),
    } / divisor;
    let index = match label {
        Some("") => return Err(err()),
        Some("1") => None,
        Some(l) => Some(resolve(a, l)?),
        None => None,
    };
    Ok((coef, index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::named_algebra;
    use crate::rational::frac;

    #[test]
    fn difference_of_labels() {
        let to = named_algebra("TO").unwrap().algebra;
        assert_eq!(parse_element("f1-f4", &to).unwrap(), Element::from_i64(&[0, 1, 0, 0, -1, 0, 0, 0]));
        assert_eq!(parse_element("-f3 + f12", &named_algebra("TS").unwrap().algebra).unwrap().coords()[3], int(-1));
    }

    #[test]
    fn unit_and_fractions() {
        let s = named_algebra("S").unwrap().algebra;
        assert_eq!(parse_element("1", &s).unwrap(), Element::basis(16, 0));
        assert_eq!(parse_element("e_8/2 + e8/2", &s).unwrap(), Element::basis(16, 8));
        let x = parse_element("2/3*e8 + 1", &s).unwrap();
        assert_eq!(x.coords()[8], frac(2, 3));
        assert_eq!(x.coords()[0], int(1));
        assert_eq!(parse_element("e0 - 1", &s).unwrap(), Element::zero(16));
        assert_eq!(parse_element("-1/2", &s).unwrap().coords()[0], frac(-1, 2));
    }

    #[test]
    fn errors() {
        let h = named_algebra("H").unwrap().algebra;
        assert!(matches!(parse_element("e9", &h), Err(ParseError::UnknownLabel(_))));
        assert!(parse_element("e1 +", &h).is_err());
        assert!(parse_element("", &h).is_err());
        assert!(parse_element("2**e1", &h).is_err());
    }
}
