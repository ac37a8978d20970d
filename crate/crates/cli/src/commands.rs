use std::fmt::Write as _;

use serde_json::{json, Value};

use lcalg::cayley_dickson::named_algebra;
use lcalg::expr::parse_element;
use lcalg::io::algebra_to_json;
use lcalg::lowdim::four::{build_a_tu, exact_zero_divisor, symmetric_definiteness, Definiteness, Params4, Params4Text};
use lcalg::lowdim::geometry::{equiv_4d, geometric_type, hyperboloid_config, is_division_4d, DivisionVerdict, Kind};
use lcalg::lowdim::three::{build_a_ts, canonical_3d};
use lcalg::properties::{property_report, Check, Flag, PropertySet, Verdict};
use lcalg::rational::format_rational;
use lcalg::structure::annihilator::{alter_scalar_space, annihilator, zero_divisor_search, ZeroDivisorOutcome};
use lcalg::structure::embedding::{check_homomorphism, tilde_octonion_embedding, HomFailure};
use lcalg::structure::recognize::recognize_alternative_division;
use lcalg::structure::superalt::classify_super_alternative;
use lcalg::structure::RecognitionResult;
use lcalg::verify::{verify_claim, verify_paper_with, VerifyOptions};
use lcalg::{Algebra, Element, QMatrix, Rational, Subspace};

use crate::input::{
    choose_grading, load_algebra, load_map, params_from_flags, params_source, parse_rationals, CliError, CliResult,
};
use crate::{Cli, Command, Format, TableStyle};

pub struct Output {
    pub text: String,
    /// False when a checked property fails (exit code 1).
    pub ok: bool,
}

fn emit(format: Format, value: Value, md: String, ok: bool) -> Output {
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json values serialize")),
        Format::Md => md,
    };
    Output { text, ok }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn vec_text(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

fn matrix_text(m: &QMatrix) -> Vec<Vec<String>> {
    m.rows_vec().iter().map(|r| vec_text(r)).collect()
}

fn show(a: &Algebra, x: &Element) -> String {
    x.display_with(a.labels())
}

fn subspace_elements(a: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| show(a, &Element::new(v.clone()))).collect()
}

fn parse_in(expr: &str, a: &Algebra) -> CliResult<Element> {
    parse_element(expr, a).map_err(|e| CliError::usage(e.to_string()))
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Gen { name, ts, t, u, out } => gen(f, name.as_deref(), ts.as_deref(), t.as_deref(), u.as_deref(), out.as_deref()),
        Command::Table { algebra, style } => table(f, algebra, *style),
        Command::Check {
            algebra,
            props,
            grading,
            budget,
        } => {
            let (a, stored) = load_algebra(algebra)?;
            let g = choose_grading(&a, stored, *grading)?;
            let which: PropertySet = props.parse().map_err(CliError::usage)?;
            let r = property_report(&a, g.as_ref(), which, *budget, cli.seed)?;
            let flags: Vec<(&str, &Option<Flag>)> = vec![
                ("quadratic", &r.quadratic),
                ("locally complex", &r.locally_complex),
                ("alternative", &r.alternative),
                ("super-alternative", &r.super_alternative),
                ("nicely normed", &r.nicely_normed),
                ("commutative", &r.commutative),
                ("zero divisors", &r.has_zero_divisors),
            ];
            // commutativity and zero divisors are informational
            let ok = flags[..5].iter().all(|(_, fl)| fl.as_ref().is_none_or(|fl| fl.verdict != Verdict::No));
            let mut md = format!("# Properties of {algebra} (dim {})\n\n| property | verdict | witness |\n|---|---|---|\n", r.dim);
            for (label, fl) in flags {
                if let Some(fl) = fl {
                    let v = serde_json::to_value(fl.verdict).expect("verdict serializes");
                    let _ = writeln!(md, "| {label} | {} | {} |", v.as_str().unwrap_or(""), fl.witness.as_deref().unwrap_or(""));
                }
            }
            Ok(emit(f, serde_json::to_value(&r).expect("report serializes"), md, ok))
        }
        Command::Recognize { algebra } => {
            let (a, _) = load_algebra(algebra)?;
            recognition_output(f, &a, recognize_alternative_division(&a))
        }
        Command::ClassifySuper { algebra, grading } => {
            let (a, stored) = load_algebra(algebra)?;
            let g = choose_grading(&a, stored, *grading)?
                .ok_or_else(|| CliError::usage("no grading: the file has none; pass --grading trivial or natural"))?;
            recognition_output(f, &a, classify_super_alternative(&a, &g))
        }
        Command::Classify3 { algebra, params } => {
            let a = match (algebra, params) {
                (_, Some(p)) => {
                    let v = parse_rationals(p)?;
                    build_a_ts(&v[0], &v[1]).map_err(|e| CliError::usage(e.to_string()))?
                }
                (Some(src), None) => load_algebra(src)?.0,
                _ => return Err(CliError::usage("give an algebra or --params t s")),
            };
            let c = canonical_3d(&a)?;
            let value = json!({
                "t": c.t_text(),
                "s": c.s_text(),
                "t_squared": q(&c.t_squared),
                "s_squared": q(&c.s_squared),
                "t_approx": c.t(),
                "s_approx": c.s(),
            });
            let md = format!("(t, s) = ({}, {})\n", c.t_text(), c.s_text());
            Ok(emit(f, value, md, true))
        }
        Command::Classify4 { source, t, u, tol } => {
            let p = params_source(source.as_deref(), t.as_deref(), u.as_deref())?;
            classify4(f, &p, *tol)
        }
        Command::Iso4 { first, second, tol } => {
            let p1 = params_source(Some(first), None, None)?.to_f64();
            let p2 = params_source(Some(second), None, None)?.to_f64();
            let eq = equiv_4d(&p1, &p2, *tol);
            let witness = eq.witness.map(|m| (0..3).map(|i| (0..3).map(|j| m[(i, j)]).collect::<Vec<f64>>()).collect::<Vec<_>>());
            let value = json!({ "isomorphic": eq.equivalent, "witness": witness, "borderline": eq.borderline });
            let mut md = format!("isomorphic: {}\n", if eq.equivalent { "yes" } else { "no" });
            if let Some(w) = &witness {
                let _ = writeln!(md, "Q = {w:?}");
            }
            if eq.borderline {
                md.push_str("note: decided within 10x of the tolerance\n");
            }
            Ok(emit(f, value, md, true))
        }
        Command::Division4 { source, t, u, tol } => {
            let p = params_source(source.as_deref(), t.as_deref(), u.as_deref())?;
            let (value, md) = division_report(&p, *tol);
            Ok(emit(f, value, md, true))
        }
        Command::Ann { algebra, element } => {
            let (a, _) = load_algebra(algebra)?;
            let x = parse_in(element, &a)?;
            let s = annihilator(&a, &x)?;
            let basis = subspace_elements(&a, &s);
            let value = json!({ "element": show(&a, &x), "dim": s.dim(), "basis": basis });
            let md = format!("Ann({}) has dimension {}\n{}", show(&a, &x), s.dim(), bullet(&basis));
            Ok(emit(f, value, md, true))
        }
        Command::Zerodiv { algebra, budget } => {
            let (a, _) = load_algebra(algebra)?;
            let (value, md) = match zero_divisor_search(&a, *budget, cli.seed)? {
                ZeroDivisorOutcome::Found { x, y } => (
                    json!({ "outcome": "found", "x": show(&a, &x), "y": show(&a, &y) }),
                    format!("zero divisors: ({}) * ({}) = 0\n", show(&a, &x), show(&a, &y)),
                ),
                ZeroDivisorOutcome::NoneFound { reason } => (
                    json!({ "outcome": "none", "reason": reason }),
                    format!("no zero divisors: {reason}\n"),
                ),
                ZeroDivisorOutcome::Exhausted { tried } => (
                    json!({ "outcome": "exhausted", "tried": tried }),
                    format!("no zero divisor among {tried} candidates; undecided\n"),
                ),
            };
            Ok(emit(f, value, md, true))
        }
        Command::Alterscalar { algebra } => {
            let (a, _) = load_algebra(algebra)?;
            let r = alter_scalar_space(&a)?;
            let basis = subspace_elements(&a, &r.solutions);
            let value = json!({ "dim": r.solutions.dim(), "basis": basis, "has_alter_scalars": r.has_alter_scalars });
            let md = format!(
                "solutions of x^2 a = x(xa): dimension {}\n{}alter-scalars: {}\n",
                r.solutions.dim(),
                bullet(&basis),
                if r.has_alter_scalars { "yes" } else { "no" }
            );
            Ok(emit(f, value, md, true))
        }
        Command::EmbedCheck { map, from, to } => {
            let (a, _) = load_algebra(from)?;
            let (b, _) = load_algebra(to)?;
            let m = match map {
                Some(path) => load_map(path)?,
                None => {
                    if named_algebra(from).map(|n| n.name) != Ok("TO".into()) || named_algebra(to).map(|n| n.name) != Ok("S".into()) {
                        return Err(CliError::usage("the built-in map goes from TO to S; pass --map for other pairs"));
                    }
                    tilde_octonion_embedding()
                }
            };
            let check = check_homomorphism(&m, &a, &b)?;
            let (value, md) = match &check {
                Check::Holds => (json!({ "homomorphism": true }), "injective unital homomorphism: yes\n".to_string()),
                Check::Fails(HomFailure::Unit) => (
                    json!({ "homomorphism": false, "failure": "unit" }),
                    "not a homomorphism: the unit is not preserved\n".to_string(),
                ),
                Check::Fails(HomFailure::NotInjective { rank }) => (
                    json!({ "homomorphism": false, "failure": "not injective", "rank": rank }),
                    format!("not injective: rank {rank}\n"),
                ),
                Check::Fails(HomFailure::Product { i, j, expected, found }) => {
                    let (li, lj) = (&a.labels()[*i], &a.labels()[*j]);
                    (
                        json!({
                            "homomorphism": false,
                            "failure": "product",
                            "pair": [li, lj],
                            "expected": show(&b, expected),
                            "found": show(&b, found),
                        }),
                        format!(
                            "not a homomorphism at ({li}, {lj}): map({li} {lj}) = {} but map({li}) map({lj}) = {}\n",
                            show(&b, expected),
                            show(&b, found)
                        ),
                    )
                }
            };
            Ok(emit(f, value, md, check.holds()))
        }
        Command::Subalg { algebra, elements, no_unit } => {
            let (a, _) = load_algebra(algebra)?;
            let default = ["f1 + f14", "f3 - f12", "f6 - f9", "f7 - f8"];
            let exprs: Vec<String> = if elements.is_empty() {
                default.iter().map(|s| s.to_string()).collect()
            } else {
                elements.clone()
            };
            let gens = exprs.iter().map(|e| parse_in(e, &a)).collect::<CliResult<Vec<_>>>()?;
            let mut spanning: Vec<Vec<Rational>> = gens.iter().map(|g| g.coords().to_vec()).collect();
            if !no_unit {
                spanning.push(a.unit_element()?.into_coords());
            }
            let span = Subspace::span(a.dim(), &spanning)?;
            let generated = a.generated_subalgebra(&gens, !no_unit)?;
            let closed = generated == span;
            let basis = subspace_elements(&a, &generated);
            let value = json!({
                "generators": exprs,
                "span_dim": span.dim(),
                "generated_dim": generated.dim(),
                "span_is_subalgebra": closed,
                "basis": basis,
            });
            let md = format!(
                "span dimension {}, generated subalgebra dimension {}; the span is {}a subalgebra\n{}",
                span.dim(),
                generated.dim(),
                if closed { "" } else { "not " },
                bullet(&basis)
            );
            Ok(emit(f, value, md, true))
        }
        Command::VerifyPaper { claim } => {
            let opts = VerifyOptions {
                seed: Some(cli.seed),
                ..Default::default()
            };
            let claims = match claim {
                Some(id) => vec![verify_claim(id, &opts).ok_or_else(|| CliError::usage(format!("unknown claim `{id}`")))?],
                None => verify_paper_with(&opts).claims,
            };
            let ok = claims.iter().all(|c| c.pass);
            let mut md = String::from("| claim | status | ms | witness |\n|---|---|---|---|\n");
            for c in &claims {
                let _ = writeln!(
                    md,
                    "| {} ({}) | {} | {} | {} |",
                    c.id,
                    c.anchor,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.elapsed_ms,
                    c.witness
                );
            }
            let value = json!({ "claims": claims, "all_pass": ok });
            Ok(emit(f, value, md, ok))
        }
    }
}

fn floats(v: &[f64]) -> String {
    // -0 prints as 0
    let parts: Vec<String> = v.iter().map(|x| format!("{}", x + 0.0)).collect();
    format!("[{}]", parts.join(", "))
}

fn bullet(items: &[String]) -> String {
    items.iter().map(|s| format!("- {s}\n")).collect()
}

fn gen(
    f: Format,
    name: Option<&str>,
    ts: Option<&[String]>,
    t: Option<&str>,
    u: Option<&str>,
    out: Option<&std::path::Path>,
) -> CliResult<Output> {
    let (a, grading) = match (name, ts, t, u) {
        (Some(n), None, None, _) => {
            let n = named_algebra(n)?;
            (n.algebra, n.grading)
        }
        (None, Some(v), None, _) => {
            let v = parse_rationals(v)?;
            (build_a_ts(&v[0], &v[1]).map_err(|e| CliError::usage(e.to_string()))?, None)
        }
        (None, None, Some(t), Some(u)) => (build_a_tu(&params_from_flags(t, u)?), None),
        _ => return Err(CliError::usage("give a catalogue name, --ts t s, or --T and --u")),
    };
    let text = match f {
        Format::Json => format!("{}\n", algebra_to_json(&a, grading.as_ref())),
        Format::Md => table_text(&a, TableStyle::Md),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError {
                code: crate::EXIT_FAILURE,
                message: format!("{}: {e}", path.display()),
            })?;
            Ok(Output {
                text: String::new(),
                ok: true,
            })
        }
        None => Ok(Output { text, ok: true }),
    }
}

fn table_text(a: &Algebra, style: TableStyle) -> String {
    let n = a.dim();
    let labels = a.labels();
    let cell = |i: usize, j: usize| show(a, &a.basis_product(i, j));
    let mut s = String::new();
    match style {
        TableStyle::Md => {
            let _ = writeln!(s, "| | {} |", labels.join(" | "));
            let _ = writeln!(s, "|{}", "---|".repeat(n + 1));
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| cell(i, j)).collect();
                let _ = writeln!(s, "| **{}** | {} |", labels[i], row.join(" | "));
            }
        }
        TableStyle::Csv => {
            let _ = writeln!(s, ",{}", labels.join(","));
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| cell(i, j)).collect();
                let _ = writeln!(s, "{},{}", labels[i], row.join(","));
            }
        }
    }
    s
}

fn table(f: Format, src: &str, style: TableStyle) -> CliResult<Output> {
    let (a, _) = load_algebra(src)?;
    let n = a.dim();
    let rows: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| show(&a, &a.basis_product(i, j))).collect()).collect();
    let value = json!({ "labels": a.labels(), "products": rows });
    Ok(emit(f, value, table_text(&a, style), true))
}

fn recognition_output(f: Format, a: &Algebra, r: lcalg::Result<RecognitionResult>) -> CliResult<Output> {
    match r {
        Ok(r) => {
            let target = r.tag.algebra();
            let basis: Vec<String> = r.basis.iter().map(|e| show(a, e)).collect();
            let value = json!({
                "tag": r.tag.name(),
                "basis": basis,
                "iso": matrix_text(&r.iso),
                "verified": true,
            });
            let mut md = format!("isomorphic to {} (isomorphism verified on all basis products)\n\n", r.tag);
            for (label, b) in target.labels().iter().zip(&basis) {
                let _ = writeln!(md, "- {label} <- {b}");
            }
            Ok(emit(f, value, md, true))
        }
        Err(e @ (lcalg::Error::NotLocallyComplex
        | lcalg::Error::NotAlternative
        | lcalg::Error::NotSuperAlternative
        | lcalg::Error::NotQuadratic
        | lcalg::Error::NotUnital)) => {
            let value = json!({ "tag": Value::Null, "reason": e.to_string() });
            Ok(emit(f, value, format!("not recognized: {e}\n"), false))
        }
        Err(e) => Err(e.into()),
    }
}

fn kind_text(k: Kind) -> String {
    serde_json::to_value(k).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
}

fn division_report(p: &Params4, tol: f64) -> (Value, String) {
    let exact = symmetric_definiteness(&p.symmetric_part());
    match is_division_4d(&p.to_f64(), tol) {
        DivisionVerdict::Division => (
            json!({ "division": true, "exact_definite": exact != Definiteness::Indefinite }),
            "division algebra: yes (symmetric part of T is definite)\n".to_string(),
        ),
        DivisionVerdict::ZeroDivisors { x, y, residual } => {
            let a = build_a_tu(p);
            let exact_pair = exact_zero_divisor(p).filter(|(x, y)| a.multiply(x, y).map(|z| z.is_zero()).unwrap_or(false));
            let mut value = json!({
                "division": false,
                "x": [x[0], x[1], x[2], x[3]],
                "y": [y[0], y[1], y[2], y[3]],
                "residual": residual,
            });
            let mut md = format!(
                "division algebra: no\nzero divisors x = {}, y = {}, |xy| = {residual:e}\n",
                floats(x.as_slice()),
                floats(y.as_slice())
            );
            if let Some((ex, ey)) = exact_pair {
                value["exact"] = json!({ "x": show(&a, &ex), "y": show(&a, &ey) });
                let _ = writeln!(md, "exact pair: ({}) * ({}) = 0", show(&a, &ex), show(&a, &ey));
            }
            (value, md)
        }
    }
}

fn classify4(f: Format, p: &Params4, tol: f64) -> CliResult<Output> {
    let fp = p.to_f64();
    let ty = geometric_type(&fp.t, tol);
    let (division, division_md) = division_report(p, tol);
    let params = Params4Text::from(p);
    let mut value = json!({
        "params": params,
        "rank": ty.rank,
        "type": kind_text(ty.kind),
        "division": division,
    });
    let mut md = format!(
        "T = {:?}\nu = {:?}\nsymmetric part: rank {}, {}\n{division_md}",
        params.t,
        params.u,
        ty.rank,
        kind_text(ty.kind)
    );
    if ty.kind == Kind::Hyperboloid {
        let c = hyperboloid_config(&fp, tol)?;
        let _ = writeln!(
            md,
            "configuration: delta = {}, u = {}, c = {}",
            floats(&c.delta),
            floats(&c.u),
            floats(&c.c)
        );
        value["configuration"] = serde_json::to_value(&c).expect("config serializes");
    }
    Ok(emit(f, value, md, true))
}
