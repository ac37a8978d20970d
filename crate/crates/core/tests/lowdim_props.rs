use nalgebra::Matrix3;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lcalg::lowdim::four::{build_a_tu, extract_tu, Params4};
use lcalg::lowdim::geometry::{equiv_4d, geometric_type, DEFAULT_TOL};
use lcalg::lowdim::three::{build_a_ts, canonical_3d};
use lcalg::properties::{property_report, PropertyReport, PropertySet, Verdict};
use lcalg::rational::{frac, int, to_f64};
use lcalg::rotation::{random_orthogonal, random_unit_fixing_rotation};
use lcalg::{QMatrix, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn nonneg() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn params() -> impl Strategy<Value = Params4> {
    (prop::collection::vec(rational(), 9), prop::collection::vec(rational(), 3)).prop_map(|(t, u)| {
        let rows = t.chunks(3).map(<[Rational]>::to_vec).collect();
        Params4::new(QMatrix::from_rows(rows).unwrap(), u).unwrap()
    })
}

fn transform(p: &Params4, q: &QMatrix) -> Params4 {
    let d = q.determinant().unwrap();
    let t = q.mul(&p.t).unwrap().mul(&q.transpose()).unwrap().scale(&d);
    let u = q.mul_vec(&p.u).unwrap().iter().map(|x| x * &d).collect();
    Params4::new(t, u).unwrap()
}

fn verdicts(r: &PropertyReport) -> Vec<Option<Verdict>> {
    [&r.quadratic, &r.locally_complex, &r.alternative, &r.nicely_normed, &r.commutative]
        .iter()
        .map(|f| f.as_ref().map(|f| f.verdict))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn canonical_3d_inverts_build(t in nonneg(), s in nonneg()) {
        let c = canonical_3d(&build_a_ts(&t, &s).unwrap()).unwrap();
        prop_assert_eq!(c.exact_t(), Some(t));
        prop_assert_eq!(c.exact_s(), Some(s));
    }

    #[test]
    fn canonical_3d_is_rotation_invariant(t in nonneg(), s in nonneg(), seed in any::<u64>()) {
        let a = build_a_ts(&t, &s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b, _) = random_unit_fixing_rotation(&a, &mut rng).unwrap();
        prop_assert_eq!(canonical_3d(&b).unwrap(), canonical_3d(&a).unwrap());
    }

    #[test]
    fn extract_inverts_build(p in params()) {
        prop_assert_eq!(extract_tu(&build_a_tu(&p)).unwrap().params, p);
    }

    #[test]
    fn orbits_are_equivalent_with_equal_type_and_properties(p in params(), seed in any::<u64>(), flip in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut q = random_orthogonal(3, &mut rng, false);
        if flip {
            q = q.scale(&int(-1));
        }
        let img = transform(&p, &q);
        let (pf, imgf) = (p.to_f64(), img.to_f64());
        prop_assert!(equiv_4d(&pf, &imgf, DEFAULT_TOL).equivalent);
        prop_assert_eq!(geometric_type(&pf.t, DEFAULT_TOL), geometric_type(&imgf.t, DEFAULT_TOL));
        let ra = property_report(&build_a_tu(&p), None, PropertySet::All, 0, 1).unwrap();
        let rb = property_report(&build_a_tu(&img), None, PropertySet::All, 0, 1).unwrap();
        prop_assert_eq!(verdicts(&ra), verdicts(&rb));
    }

    #[test]
    fn float_transform_matches_exact(p in params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_orthogonal(3, &mut rng, true);
        let qf = Matrix3::from_fn(|i, j| to_f64(&q[(i, j)]));
        let exact = transform(&p, &q).to_f64();
        let float = p.to_f64().transform(&qf);
        prop_assert!((exact.t - float.t).amax() < 1e-9 && (exact.u - float.u).amax() < 1e-9);
    }
}
