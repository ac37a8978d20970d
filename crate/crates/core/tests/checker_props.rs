use proptest::prelude::*;

use lcalg::cayley_dickson::named_algebra;
use lcalg::properties::{
    is_alternative, is_locally_complex, is_nicely_normed, is_quadratic, locally_complex_certificate, Check, Law,
};
use lcalg::rational::{frac, int};
use lcalg::structure::decompose::Decomposition;
use lcalg::{Algebra, Element, MinimalQuadratic, Rational};
use num::{Signed, Zero};

/// Four-dimensional unital algebra with `e_a^2 = d_a`, and for `a != b`
/// with third index `c`, `e_a e_b = sign * (u_c + sum_k t[k][c] e_k)`. The
/// products are anticommuting unless `commuting_pair`, which makes
/// `e_1 e_2 = e_2 e_1`.
#[derive(Clone, Debug)]
struct Model {
    d: [i64; 3],
    t: [[i64; 3]; 3],
    u: [i64; 3],
    commuting_pair: bool,
}

impl Model {
    fn build(&self) -> Algebra {
        Algebra::from_fn(4, Some(0), |i, j| {
            let mut out = vec![Rational::zero(); 4];
            match (i, j) {
                (0, k) | (k, 0) => out[k] = int(1),
                (a, b) if a == b => out[0] = int(self.d[a - 1]),
                (a, b) => {
                    let (a, b) = (a - 1, b - 1);
                    let c = 3 - a - b;
                    let even = (a + 1) % 3 == b;
                    let mut sign = if even { 1 } else { -1 };
                    if self.commuting_pair && a.min(b) == 0 && a.max(b) == 1 {
                        sign = 1;
                    }
                    out[0] = int(sign * self.u[c]);
                    for k in 0..3 {
                        out[k + 1] = int(sign * self.t[k][c]);
                    }
                }
            }
            out
        })
        .unwrap()
    }

    fn locally_complex(&self) -> bool {
        !self.commuting_pair && self.d.iter().all(|&d| d < 0)
    }
}

fn model() -> impl Strategy<Value = Model> {
    (
        prop::array::uniform3(prop_oneof![Just(-3i64), Just(-1), Just(1), Just(2)]),
        prop::array::uniform3(prop::array::uniform3(-2i64..=2)),
        prop::array::uniform3(prop_oneof![2 => Just(0i64), 1 => -2i64..=2]),
        prop::bool::weighted(0.2),
    )
        .prop_map(|(d, mut t, u, commuting_pair)| {
            // a commuting pair with a scalar product would still be quadratic
            if commuting_pair && t.iter().all(|row| row[2] == 0) {
                t[2][2] = 1;
            }
            Model { d, t, u, commuting_pair }
        })
}

fn element(n: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q)), n).prop_map(Element::new)
}

fn named(k: usize) -> Algebra {
    let name = ["H", "O", "S", "TO", "TS", "J4"][k];
    named_algebra(name).unwrap().algebra
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_check_agrees_with_decomposition(m in model()) {
        let a = m.build();
        let quadratic = is_quadratic(&a).unwrap().holds();
        prop_assert_eq!(quadratic, !m.commuting_pair);
        prop_assert_eq!(quadratic, Decomposition::new(&a).is_ok());
    }

    #[test]
    fn locally_complex_verdict_and_certificate(m in model()) {
        let a = m.build();
        let lc = is_locally_complex(&a).unwrap();
        prop_assert_eq!(lc.holds(), m.locally_complex());
        match locally_complex_certificate(&a).unwrap() {
            Ok(cert) => {
                prop_assert!(lc.holds());
                prop_assert!(cert.verify(&a));
                prop_assert!(cert.norms[1..].iter().all(|n| n.is_positive()));
            }
            Err(_) => prop_assert!(!lc.holds()),
        }
    }

    #[test]
    fn locally_complex_means_positive_norms(m in model(), xs in prop::collection::vec(element(4), 20)) {
        let a = m.build();
        prop_assume!(is_locally_complex(&a).unwrap().holds());
        for x in &xs {
            match a.minimal_quadratic(x).unwrap() {
                MinimalQuadratic::Quadratic { norm, .. } => prop_assert!(norm.is_positive()),
                MinimalQuadratic::Scalar(_) => {}
                MinimalQuadratic::NotQuadratic => prop_assert!(false, "LC algebra with non-quadratic element"),
            }
        }
    }

    #[test]
    fn nicely_normed_implies_locally_complex(m in model()) {
        let a = m.build();
        if is_nicely_normed(&a).unwrap().holds() {
            prop_assert!(is_locally_complex(&a).unwrap().holds());
        }
    }

    #[test]
    fn polarized_verdict_matches_the_full_identity(k in 0usize..6, seed in any::<u64>()) {
        let a = named(k);
        let n = a.dim();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut sample = || {
            use rand::Rng;
            Element::new((0..n).map(|_| frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect())
        };
        let violated = |x: &Element, y: &Element| {
            let x2 = a.multiply(x, x).unwrap();
            a.multiply(&x2, y).unwrap() != a.multiply(x, &a.multiply(x, y).unwrap()).unwrap()
                || a.multiply(y, &x2).unwrap() != a.multiply(&a.multiply(y, x).unwrap(), x).unwrap()
        };
        match is_alternative(&a) {
            Check::Holds => {
                for _ in 0..20 {
                    let (x, y) = (sample(), sample());
                    prop_assert!(!violated(&x, &y));
                }
            }
            Check::Fails(w) => {
                let x2 = a.multiply(&w.x, &w.x).unwrap();
                let defect = match w.law {
                    Law::Left => &a.multiply(&x2, &w.y).unwrap() - &a.multiply(&w.x, &a.multiply(&w.x, &w.y).unwrap()).unwrap(),
                    Law::Right => &a.multiply(&w.y, &x2).unwrap() - &a.multiply(&a.multiply(&w.y, &w.x).unwrap(), &w.x).unwrap(),
                };
                prop_assert!(!defect.is_zero());
                prop_assert_eq!(defect, w.defect);
            }
        }
    }
}
