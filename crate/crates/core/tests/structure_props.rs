use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lcalg::cayley_dickson::named_algebra;
use lcalg::rational::frac;
use lcalg::rotation::{random_grading_preserving_rotation, random_unit_fixing_rotation};
use lcalg::structure::annihilator::{alter_scalar_space, annihilator};
use lcalg::structure::embedding::check_homomorphism;
use lcalg::structure::recognize::recognize_alternative_division;
use lcalg::structure::superalt::classify_super_alternative;
use lcalg::{Algebra, Element};

fn named(name: &str) -> Algebra {
    named_algebra(name).unwrap().algebra
}

fn product(a: &Algebra, x: &Element, y: &Element) -> Element {
    a.multiply(x, y).unwrap()
}

#[test]
fn sedenion_pair_annihilators_have_dimension_four() {
    let s = named("S");
    let mut zero_divisors = 0;
    for i in 1..16 {
        for j in i + 1..16 {
            for sign in [frac(1, 1), frac(-1, 1)] {
                let x = &Element::basis(16, i) + &Element::basis(16, j).scale(&sign);
                let d = annihilator(&s, &x).unwrap().dim();
                assert!(d == 0 || d == 4, "e{i} {sign} e{j}: {d}");
                zero_divisors += usize::from(d == 4);
            }
        }
    }
    assert_eq!(zero_divisors, 84);
}

#[test]
fn homogeneous_basis_elements_anticommute_and_are_not_zero_divisors() {
    for name in ["S", "TO", "TS"] {
        let n = named_algebra(name).unwrap();
        let (a, g) = (n.algebra, n.grading.unwrap());
        let basis = g.homogeneous_basis();
        for (_, u) in basis.iter().skip(1) {
            assert_eq!(annihilator(&a, u).unwrap().dim(), 0, "{name}");
            for (_, v) in basis.iter().skip(1) {
                if u != v {
                    assert!((&product(&a, u, v) + &product(&a, v, u)).is_zero(), "{name}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn recognition_is_basis_independent(k in 0usize..2, seed in any::<u64>()) {
        let name = ["H", "O"][k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b, _) = random_unit_fixing_rotation(&named(name), &mut rng).unwrap();
        let r = recognize_alternative_division(&b).unwrap();
        prop_assert_eq!(r.tag.name(), name);
        prop_assert_eq!(r.iso.rank(), b.dim());
        prop_assert!(check_homomorphism(&r.iso, &b, &r.tag.algebra()).unwrap().holds());
    }

    #[test]
    fn super_classification_is_basis_independent(k in 0usize..3, seed in any::<u64>()) {
        let name = ["S", "TO", "TS"][k];
        let n = named_algebra(name).unwrap();
        let g = n.grading.unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b, _) = random_grading_preserving_rotation(&n.algebra, &g, &mut rng).unwrap();
        let r = classify_super_alternative(&b, &g).unwrap();
        prop_assert_eq!(r.tag.name(), name);
        prop_assert!(check_homomorphism(&r.iso, &b, &r.tag.algebra()).unwrap().holds());
    }

    #[test]
    fn alter_scalar_solutions_satisfy_the_identity(k in 0usize..4, seed in any::<u64>()) {
        let a = named(["S", "TO", "TS", "O"][k]);
        let n = a.dim();
        let sol = alter_scalar_space(&a).unwrap().solutions;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..50 {
            let x = Element::new((0..n).map(|_| frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect());
            let x2 = product(&a, &x, &x);
            for v in sol.basis() {
                let s = Element::new(v.clone());
                prop_assert_eq!(product(&a, &x2, &s), product(&a, &x, &product(&a, &x, &s)));
            }
        }
    }
}
