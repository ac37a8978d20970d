//! Reproduces the numbered catalogue of computational claims: tables,
//! identities, recognition, classification and annihilator facts.

use std::time::Instant;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::cayley_dickson::{cayley_dickson_tower, jordan_spin, named_algebra, Grading};
use crate::expr::parse_element;
use crate::lowdim::four::{build_a_tu, exact_zero_divisor, extract_tu, symmetric_definiteness, Definiteness, Params4};
use crate::lowdim::geometry::{equiv_4d, geometric_type, is_division_4d, sorted_eigen, DivisionVerdict, FloatParams4};
use crate::lowdim::three::{build_a_ts, build_a_ts_raw, canonical_3d, iso_3d};
use crate::matrix::QMatrix;
use crate::properties::{
    is_alternative, is_commutative_jn, is_locally_complex, is_nicely_normed, is_super_alternative, moufang_failure,
    JnVerdict,
};
use crate::rational::{frac, int, Rational};
use crate::rotation::{random_grading_preserving_rotation, random_orthogonal, random_unit_fixing_rotation};
use crate::structure::annihilator::{alter_scalar_space, annihilator};
use crate::structure::embedding::{check_homomorphism, tilde_octonion_embedding, HomFailure};
use crate::structure::recognize::recognize_alternative_division;
use crate::structure::superalt::classify_super_alternative;
use crate::structure::Tag;
use crate::subspace::Subspace;
use crate::tables::{parse_signed_table, OCTONION_TABLE, SEDENION_TABLE};
use crate::properties::Check;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    pub elapsed_ms: u128,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Overrides for mutation testing.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Used in place of the built-in tilde-octonion table.
    pub tilde_octonions: Option<Algebra>,
    pub seed: Option<u64>,
}

type Outcome = std::result::Result<String, String>;

struct Ctx {
    tilde_octonions: Algebra,
    seed: u64,
}

impl Ctx {
    fn named(&self, name: &str) -> (Algebra, Option<Grading>) {
        let n = named_algebra(name).expect("catalogue name");
        if name == "TO" {
            return (self.tilde_octonions.clone(), n.grading);
        }
        (n.algebra, n.grading)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

type ClaimFn = fn(&Ctx) -> Outcome;

const CLAIMS: [(&str, &str, ClaimFn); 12] = [
    ("01-tables", "octonion and sedenion multiplication tables", claim_tables),
    ("02-moufang", "Moufang identity (xy)(zx) = (x(yz))x", claim_moufang),
    ("03-recognize", "alternative locally complex algebras are R, C, H, O", claim_recognize),
    ("04-alter-scalars", "alter-scalars of S, TO, TS and O", claim_alter_scalars),
    ("05-annihilators", "zero divisors and annihilator dimensions", claim_annihilators),
    ("06-super-alternative", "list of super-alternative locally complex algebras", claim_super_alternative),
    ("07-embedding", "embedding of TO into S", claim_embedding),
    ("08-subalgebra", "five-dimensional subalgebra of TS", claim_subalgebra),
    ("09-classify-3d", "three-dimensional classification by (t, s)", claim_classify_3d),
    ("10-classify-4d", "four-dimensional classification by (T, u)", claim_classify_4d),
    ("11-properties", "property checkers on the catalogue", claim_properties),
    ("12-cd-annihilator-law", "annihilator dimensions in A_5 are multiples of 4", claim_cd_annihilators),
];

/// Claim ids with their descriptions, in report order.
pub fn claim_list() -> Vec<(&'static str, &'static str)> {
    CLAIMS.iter().map(|(id, anchor, _)| (*id, *anchor)).collect()
}

pub fn verify_paper() -> VerificationReport {
    verify_paper_with(&VerifyOptions::default())
}

pub fn verify_paper_with(opts: &VerifyOptions) -> VerificationReport {
    let ctx = Ctx {
        tilde_octonions: opts
            .tilde_octonions
            .clone()
            .unwrap_or_else(crate::cayley_dickson::tilde_octonions),
        seed: opts.seed.unwrap_or(DEFAULT_SEED),
    };
    let mut claims: Vec<ClaimResult> = CLAIMS
        .par_iter()
        .map(|(id, anchor, f)| run_claim(id, anchor, *f, &ctx))
        .collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    VerificationReport { claims }
}

/// Runs one claim by id.
pub fn verify_claim(id: &str, opts: &VerifyOptions) -> Option<ClaimResult> {
    let ctx = Ctx {
        tilde_octonions: opts
            .tilde_octonions
            .clone()
            .unwrap_or_else(crate::cayley_dickson::tilde_octonions),
        seed: opts.seed.unwrap_or(DEFAULT_SEED),
    };
    CLAIMS
        .iter()
        .find(|(cid, _, _)| *cid == id)
        .map(|(cid, anchor, f)| run_claim(cid, anchor, *f, &ctx))
}

fn run_claim(id: &str, anchor: &str, f: ClaimFn, ctx: &Ctx) -> ClaimResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| f(ctx)))
        .unwrap_or_else(|_| Err("check panicked".to_string()));
    let (pass, witness) = match outcome {
        Ok(w) => (true, w),
        Err(w) => (false, w),
    };
    ClaimResult {
        id: id.to_string(),
        anchor: anchor.to_string(),
        pass,
        elapsed_ms: start.elapsed().as_millis(),
        witness,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(a: &Algebra, expr: &str) -> Element {
    parse_element(expr, a).expect("well-formed expression")
}

fn claim_tables(_: &Ctx) -> Outcome {
    for (n, table) in [(3, OCTONION_TABLE), (4, SEDENION_TABLE)] {
        let literal = parse_signed_table(table, "e").map_err(|err| err.to_string())?;
        let doubled = cayley_dickson_tower(n);
        let dim = literal.dim();
        for i in 0..dim {
            for j in 0..dim {
                let (x, y) = (doubled.algebra().basis_product(i, j), literal.basis_product(i, j));
                ensure(x == y, || format!("dim {dim}: e{i} e{j} differs"))?;
            }
        }
    }
    Ok("64 + 256 products agree".into())
}

fn claim_moufang(ctx: &Ctx) -> Outcome {
    let (o, _) = ctx.named("O");
    let (s, _) = ctx.named("S");
    if let Some(t) = moufang_failure(&o) {
        return Err(format!("fails on O at {t:?}"));
    }
    match moufang_failure(&s) {
        Some((i, j, k)) => Ok(format!("holds on O; fails on S at (e{i}, e{j}, e{k})")),
        None => Err("holds on every basis triple of S".into()),
    }
}

fn claim_recognize(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(3);
    let mut inputs = Vec::new();
    for (name, tag) in [("R", Tag::R), ("C", Tag::C), ("H", Tag::H), ("O", Tag::O)] {
        let (a, _) = ctx.named(name);
        for _ in 0..10 {
            let b = random_unit_fixing_rotation(&a, &mut rng).map_err(|err| err.to_string())?.0;
            inputs.push((name, tag, b));
        }
        inputs.push((name, tag, a));
    }
    inputs.par_iter().try_for_each(|(name, tag, b)| {
        let r = recognize_alternative_division(b).map_err(|err| format!("{name}: {err}"))?;
        ensure(r.tag == *tag, || format!("{name} recognized as {}", r.tag))?;
        let hom = check_homomorphism(&r.iso, b, &tag.algebra()).map_err(|err| err.to_string())?;
        ensure(hom.holds(), || format!("{name}: iso is not multiplicative"))
    })?;
    Ok(format!("{} algebras recognized with verified isomorphisms", inputs.len()))
}

fn claim_alter_scalars(ctx: &Ctx) -> Outcome {
    let expected: [(&str, Vec<usize>); 4] = [
        ("S", vec![0, 8]),
        ("TO", vec![0]),
        ("TS", vec![0]),
        ("O", (0..8).collect()),
    ];
    let mut dims = Vec::new();
    for (name, idx) in expected {
        let (a, _) = ctx.named(name);
        let sol = alter_scalar_space(&a).map_err(|err| err.to_string())?.solutions;
        let want = Subspace::coordinate(a.dim(), &idx).map_err(|err| err.to_string())?;
        ensure(sol == want, || format!("{name}: solution space has dimension {}", sol.dim()))?;
        dims.push(format!("{name}:{}", sol.dim()));
    }
    Ok(dims.join(" "))
}

fn claim_annihilators(ctx: &Ctx) -> Outcome {
    let (to, _) = ctx.named("TO");
    let x = e(&to, "f1 - f4");
    ensure(to.mul(&x, &e(&to, "f3 - f6")).is_zero(), || "(f1 - f4)(f3 - f6) != 0 in TO".into())?;
    let ann = annihilator(&to, &x).map_err(|err| err.to_string())?;
    ensure(ann.dim() == 2, || format!("dim Ann(f1 - f4) = {}", ann.dim()))?;
    for v in ["f2 + f7", "f3 - f6"] {
        ensure(ann.contains(e(&to, v).coords()), || format!("{v} not in Ann(f1 - f4)"))?;
    }
    let (ts, _) = ctx.named("TS");
    let y = e(&ts, "f3 + f12");
    let ann = annihilator(&ts, &y).map_err(|err| err.to_string())?;
    ensure(ann.dim() == 6, || format!("dim Ann(f3 + f12) = {}", ann.dim()))?;
    for v in ["f1 + f14", "f2 - f13", "f4 + f11", "f5 + f10", "f6 - f9", "f7 - f8"] {
        ensure(ann.contains(e(&ts, v).coords()), || format!("{v} not in Ann(f3 + f12)"))?;
    }
    let (s, _) = ctx.named("S");
    let mut zero_divisors = 0;
    for i in 1..16 {
        for j in i + 1..16 {
            for sign in [1, -1] {
                let x = &Element::basis(16, i) + &Element::basis(16, j).scale(&int(sign));
                let d = annihilator(&s, &x).map_err(|err| err.to_string())?.dim();
                if d > 0 {
                    ensure(d == 4, || format!("dim Ann(e{i} {sign:+} e{j}) = {d} in S"))?;
                    zero_divisors += 1;
                }
            }
        }
    }
    ensure(zero_divisors > 0, || "no zero divisors of S in the e_i +- e_j family".into())?;
    Ok(format!("TO: 2, TS: 6, S: {zero_divisors} zero divisors all with dim Ann = 4"))
}

fn claim_super_alternative(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(6);
    let cases = [
        ("C", Tag::C, true),
        ("H", Tag::H, true),
        ("O", Tag::O, true),
        ("S", Tag::S, false),
        ("TO", Tag::TO, false),
        ("TS", Tag::TS, false),
    ];
    let mut inputs = Vec::new();
    for (name, tag, trivial) in cases {
        let (a, natural) = ctx.named(name);
        let g = if trivial { Grading::trivial(a.dim()) } else { natural.expect("graded catalogue entry") };
        for _ in 0..5 {
            let b = random_grading_preserving_rotation(&a, &g, &mut rng).map_err(|err| err.to_string())?.0;
            inputs.push((name, tag, b, g.clone()));
        }
        inputs.push((name, tag, a, g));
    }
    inputs.par_iter().try_for_each(|(name, tag, b, g)| {
        let r = match classify_super_alternative(b, g) {
            Ok(r) => r,
            Err(err) => {
                if let Ok(Check::Fails(w)) = is_super_alternative(b, g) {
                    return Err(format!("{name}: {:?} law fails at x = {}", w.law, w.x.display_with(b.labels())));
                }
                return Err(format!("{name}: {err}"));
            }
        };
        ensure(r.tag == *tag, || format!("{name} classified as {}", r.tag))?;
        let hom = check_homomorphism(&r.iso, b, &tag.algebra()).map_err(|err| err.to_string())?;
        ensure(hom.holds(), || format!("{name}: iso is not multiplicative"))
    })?;
    Ok(format!("{} graded algebras classified with verified isomorphisms", inputs.len()))
}

fn claim_embedding(ctx: &Ctx) -> Outcome {
    let (to, _) = ctx.named("TO");
    let (s, _) = ctx.named("S");
    let m = tilde_octonion_embedding();
    ensure(
        check_homomorphism(&m, &to, &s).map_err(|err| err.to_string())?.holds(),
        || "the map TO -> S is not a homomorphism".into(),
    )?;
    let mut bad = m.clone();
    bad[(13, 5)] = -bad[(13, 5)].clone();
    match check_homomorphism(&bad, &to, &s).map_err(|err| err.to_string())? {
        Check::Fails(HomFailure::Product { i, j, .. }) => {
            Ok(format!("embedding verified; sign-flipped map fails at (f{i}, f{j})"))
        }
        other => Err(format!("mutated map not rejected at a product: {other:?}")),
    }
}

fn claim_subalgebra(ctx: &Ctx) -> Outcome {
    let (o, _) = ctx.named("O");
    let sub = o
        .generated_subalgebra(&[o.basis_element(1), o.basis_element(2)], true)
        .map_err(|err| err.to_string())?;
    ensure(sub.dim() == 4, || format!("{{1, e1, e2}} generates dimension {}", sub.dim()))?;
    let (ts, _) = ctx.named("TS");
    let span_of = |gens: &[&str]| -> (Vec<Element>, Subspace) {
        let mut elems = vec![ts.basis_element(0)];
        elems.extend(gens.iter().map(|g| e(&ts, g)));
        let coords: Vec<Vec<Rational>> = elems.iter().map(|x| x.coords().to_vec()).collect();
        (elems, Subspace::span(ts.dim(), &coords).expect("matching lengths"))
    };
    let (elems, span) = span_of(&["f1 + f14", "f3 - f12", "f6 - f9", "f7 - f8"]);
    for x in &elems {
        for y in &elems {
            let p = ts.mul(x, y);
            if !span.contains(p.coords()) {
                let (_, fixed) = span_of(&["f1 + f14", "f3 + f12", "f6 - f9", "f7 - f8"]);
                let closed = ts.generated_subalgebra(fixed.basis().iter().cloned().map(Element::new).collect::<Vec<_>>().as_slice(), true)
                    .map(|c| c == fixed)
                    .unwrap_or(false);
                return Err(format!(
                    "({})({}) = {} leaves the span; with f3 + f12 in place of f3 - f12 the span is {}closed",
                    x.display_with(ts.labels()),
                    y.display_with(ts.labels()),
                    p.display_with(ts.labels()),
                    if closed { "" } else { "not " }
                ));
            }
        }
    }
    ensure(span.dim() == 5, || format!("span has dimension {}", span.dim()))?;
    Ok("TS: the 5-dimensional span is closed; O: <e1, e2> has dimension 4".into())
}

fn claim_classify_3d(ctx: &Ctx) -> Outcome {
    let grid: Vec<Rational> = (0..10).map(|i| frac(i, 3)).collect();
    let mut forms = Vec::new();
    for t in &grid {
        for s in &grid {
            let c = canonical_3d(&build_a_ts(t, s).map_err(|err| err.to_string())?).map_err(|err| err.to_string())?;
            ensure(c.exact_t().as_ref() == Some(t) && c.exact_s().as_ref() == Some(s), || {
                format!("round trip of ({t}, {s}) gave ({}, {})", c.t_text(), c.s_text())
            })?;
            let z = [s * frac(3, 5), s * frac(-4, 5)];
            let raw = canonical_3d(&build_a_ts_raw(&-t.clone(), [&z[0], &z[1]])).map_err(|err| err.to_string())?;
            ensure(raw == c, || format!("raw (-{t}, |z| = {s}) gave ({}, {})", raw.t_text(), raw.s_text()))?;
            forms.push(c);
        }
    }
    let mut rng = ctx.rng(9);
    for k in 0..10 {
        let (t, s) = (&grid[rng.gen_range(0..10)], &grid[rng.gen_range(0..10)]);
        let a = build_a_ts(t, s).map_err(|err| err.to_string())?;
        let (b, _) = random_unit_fixing_rotation(&a, &mut rng).map_err(|err| err.to_string())?;
        let c = canonical_3d(&b).map_err(|err| err.to_string())?;
        ensure(c.exact_t().as_ref() == Some(t) && c.exact_s().as_ref() == Some(s), || format!("rotated sample {k} changed its class"))?;
    }
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            ensure(!iso_3d(&forms[i], &forms[j], 1e-9), || format!("grid points {i} and {j} identified"))?;
        }
    }
    Ok("100 grid points round trip, reflect and are pairwise distinct".into())
}

pub(crate) fn random_params<R: Rng>(rng: &mut R) -> Params4 {
    let mut r = || frac(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    let rows: Vec<Vec<Rational>> = (0..3).map(|_| (0..3).map(|_| r()).collect()).collect();
    let u = (0..3).map(|_| r()).collect();
    Params4 {
        t: QMatrix::from_rows(rows).expect("3x3"),
        u,
    }
}

/// `(det Q) Q T Q^T`, `(det Q) Q u` exactly.
fn transform_exact(p: &Params4, q: &QMatrix) -> Params4 {
    let d = q.determinant().expect("square");
    let t = q.mul(&p.t).and_then(|m| m.mul(&q.transpose())).expect("3x3").scale(&d);
    let u = q.mul_vec(&p.u).expect("3x3").iter().map(|x| x * &d).collect();
    Params4 { t, u }
}

fn eigen_separated(a: &FloatParams4, b: &FloatParams4, gap: f64) -> bool {
    let (x, _) = sorted_eigen(&a.symmetric_part());
    let (y, _) = sorted_eigen(&b.symmetric_part());
    let flipped = nalgebra::Vector3::new(-x[2], -x[1], -x[0]);
    (x - y).amax() > gap && (flipped - y).amax() > gap
}

fn claim_classify_4d(ctx: &Ctx) -> Outcome {
    let tol = 1e-9;
    let mut rng = ctx.rng(10);
    for k in 0..20 {
        let p = random_params(&mut rng);
        let back = extract_tu(&build_a_tu(&p)).map_err(|err| err.to_string())?.params;
        ensure(back == p, || format!("round trip {k} changed the parameters"))?;
    }
    for k in 0..20 {
        let p = random_params(&mut rng);
        let q = if k == 0 {
            QMatrix::identity(3).scale(&int(-1))
        } else {
            random_orthogonal(3, &mut rng, true)
        };
        let img = transform_exact(&p, &q);
        let (pf, imgf) = (p.to_f64(), img.to_f64());
        let eq = equiv_4d(&pf, &imgf, tol);
        ensure(eq.equivalent, || format!("orbit pair {k} not recognized"))?;
        ensure(geometric_type(&pf.t, tol) == geometric_type(&imgf.t, tol), || format!("type changed on orbit {k}"))?;
        if k == 0 {
            ensure(img.t == p.t.scale(&int(-1)) && img.u == p.u, || "Q = -I does not give (-T, u)".into())?;
        }
    }
    let mut separated = 0;
    while separated < 20 {
        let (a, b) = (random_params(&mut rng).to_f64(), random_params(&mut rng).to_f64());
        if !eigen_separated(&a, &b, 1e-6) {
            continue;
        }
        ensure(!equiv_4d(&a, &b, tol).equivalent, || format!("separated pair {separated} declared equivalent"))?;
        separated += 1;
    }
    let mut zero_divisor_pairs = 0;
    for k in 0..50 {
        let p = random_params(&mut rng);
        let definite = symmetric_definiteness(&p.symmetric_part()) != Definiteness::Indefinite;
        match is_division_4d(&p.to_f64(), tol) {
            DivisionVerdict::Division => ensure(definite, || format!("sample {k}: indefinite but called division"))?,
            DivisionVerdict::ZeroDivisors { residual, .. } => {
                ensure(!definite, || format!("sample {k}: definite but zero divisors reported"))?;
                let exact_ok = exact_zero_divisor(&p)
                    .map(|(x, y)| build_a_tu(&p).mul(&x, &y).is_zero())
                    .unwrap_or(false);
                ensure(residual < 1e-8 || exact_ok, || format!("sample {k}: residual {residual:e}"))?;
                zero_divisor_pairs += 1;
            }
        }
    }
    Ok(format!("20 round trips, 20 orbit pairs, 20 separated pairs, {zero_divisor_pairs}/50 verified zero-divisor pairs"))
}

fn claim_properties(ctx: &Ctx) -> Outcome {
    for name in ["R", "C", "H", "O"] {
        let (a, _) = ctx.named(name);
        ensure(is_alternative(&a).holds(), || format!("{name} not alternative"))?;
    }
    let mut witnesses = Vec::new();
    for name in ["S", "TO", "TS", "A5"] {
        let (a, _) = ctx.named(name);
        match is_alternative(&a) {
            Check::Fails(w) => {
                let lhs_rhs = a.mul(&a.mul(&w.x, &w.x), &w.y) - a.mul(&w.x, &a.mul(&w.x, &w.y));
                let rhs_lhs = a.mul(&w.y, &a.mul(&w.x, &w.x)) - a.mul(&a.mul(&w.y, &w.x), &w.x);
                ensure(!lhs_rhs.is_zero() || !rhs_lhs.is_zero(), || format!("{name}: witness does not violate"))?;
                witnesses.push(format!("{name}@{}", w.x.display_with(a.labels())));
            }
            Check::Holds => return Err(format!("{name} reported alternative")),
        }
    }
    let graded = [("R", Some(Grading::trivial(1))), ("C", None), ("H", None), ("O", None), ("S", None), ("TO", None), ("TS", None)];
    for (name, grading) in graded {
        let (a, natural) = ctx.named(name);
        let g = grading.or(natural).expect("graded catalogue entry");
        let holds = is_super_alternative(&a, &g).map_err(|err| err.to_string())?.holds();
        ensure(holds, || format!("{name} not super-alternative"))?;
    }
    for name in ["R", "C", "H", "O", "S", "TO", "TS", "A5", "J3", "J5"] {
        let (a, _) = ctx.named(name);
        ensure(is_locally_complex(&a).map_err(|err| err.to_string())?.holds(), || format!("{name} not locally complex"))?;
    }
    let grid = [int(0), frac(1, 2), int(1), int(3)];
    for t in &grid {
        for s in &grid {
            let a = build_a_ts(t, s).map_err(|err| err.to_string())?;
            ensure(is_locally_complex(&a).map_err(|err| err.to_string())?.holds(), || format!("A_({t},{s}) not LC"))?;
            let nn = is_nicely_normed(&a).map_err(|err| err.to_string())?.holds();
            ensure(nn == t.is_zero(), || format!("A_({t},{s}): nicely normed = {nn}"))?;
        }
    }
    let mut rng = ctx.rng(11);
    for k in 0..8 {
        let mut p = random_params(&mut rng);
        if k % 2 == 0 {
            p.u = vec![int(0); 3];
        }
        let a = build_a_tu(&p);
        ensure(is_locally_complex(&a).map_err(|err| err.to_string())?.holds(), || format!("A_(T,u) sample {k} not LC"))?;
        let nn = is_nicely_normed(&a).map_err(|err| err.to_string())?.holds();
        let u_zero = p.u.iter().all(Zero::is_zero);
        ensure(nn == u_zero, || format!("A_(T,u) sample {k}: nicely normed = {nn}"))?;
    }
    for n in 3..=6 {
        let j = jordan_spin(n).map_err(|err| err.to_string())?;
        match is_commutative_jn(&j).map_err(|err| err.to_string())? {
            JnVerdict::Yes { iso: Some(_) } => {}
            other => return Err(format!("J{n}: {other:?}")),
        }
    }
    let (h, _) = ctx.named("H");
    ensure(
        matches!(is_commutative_jn(&h).map_err(|err| err.to_string())?, JnVerdict::No { .. }),
        || "H reported commutative".into(),
    )?;
    Ok(format!("non-alternative witnesses: {}", witnesses.join(", ")))
}

fn claim_cd_annihilators(ctx: &Ctx) -> Outcome {
    let a5 = cayley_dickson_tower(5);
    let a = a5.algebra();
    let n = a.dim();
    let mut rng = ctx.rng(12);
    let samples: Vec<Element> = (0..200)
        .map(|_| {
            let i = rng.gen_range(1..n);
            let mut j = rng.gen_range(1..n);
            while j == i {
                j = rng.gen_range(1..n);
            }
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            &Element::basis(n, i) + &Element::basis(n, j).scale(&int(sign))
        })
        .collect();
    let dims: Vec<usize> = samples
        .par_iter()
        .map(|x| annihilator(a, x).map(|s| s.dim()).unwrap_or(usize::MAX))
        .collect();
    if let Some(k) = dims.iter().position(|d| d % 4 != 0) {
        return Err(format!("dim Ann = {} for {}", dims[k], samples[k].display_with(a.labels())));
    }
    let nonzero = dims.iter().filter(|&&d| d > 0).count();
    Ok(format!("200 samples, {nonzero} zero divisors, all dimensions multiples of 4"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutated_tilde_octonions_fail_super_alternativity() {
        let to = named_algebra("TO").unwrap().algebra;
        let mut c = to.constants().to_vec();
        // flip the sign of f1 f4 = f5
        let idx = (8 + 4) * 8 + 5;
        c[idx] = -c[idx].clone();
        let bad = Algebra::new(8, c, Some(0)).unwrap().with_labels(to.labels().to_vec()).unwrap();
        let opts = VerifyOptions {
            tilde_octonions: Some(bad),
            seed: None,
        };
        let r = verify_claim("06-super-alternative", &opts).unwrap();
        assert!(!r.pass);
        assert!(r.witness.contains("TO"), "{}", r.witness);
    }

    #[test]
    fn claim_ids_are_unique() {
        let mut ids: Vec<&str> = CLAIMS.iter().map(|c| c.0).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 12);
    }
}
