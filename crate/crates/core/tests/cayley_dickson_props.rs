use proptest::prelude::*;

use lcalg::cayley_dickson::{cayley_dickson, cayley_dickson_tower, named_algebra, Grading};
use lcalg::properties::{is_locally_complex, is_super_alternative};
use lcalg::{Algebra, Element};

fn is_scalar(a: &Algebra, x: &Element) -> bool {
    a.scalar_value(x).is_some()
}

#[test]
fn doubling_doubles_dimension_with_unit_first() {
    for n in 0..5 {
        let base = cayley_dickson_tower(n);
        let next = cayley_dickson(&base).unwrap();
        assert_eq!(next.algebra().dim(), 2 * base.algebra().dim());
        assert_eq!(next.algebra().unit(), Some(0));
        assert_eq!(next.algebra(), cayley_dickson_tower(n + 1).algebra());
    }
}

#[test]
fn trace_and_norm_are_scalar_on_basis_and_pair_sums() {
    for n in 1..=4 {
        let ia = cayley_dickson_tower(n);
        let a = ia.algebra();
        let d = a.dim();
        let mut xs: Vec<Element> = (0..d).map(|i| Element::basis(d, i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                xs.push(&Element::basis(d, i) + &Element::basis(d, j));
            }
        }
        for x in &xs {
            let star = ia.apply(x);
            assert!(is_scalar(a, &(x + &star)), "A_{n}: x + x* for {x:?}");
            let xs_ = a.multiply(x, &star).unwrap();
            assert!(is_scalar(a, &xs_), "A_{n}: x x* for {x:?}");
            assert_eq!(xs_, a.multiply(&star, x).unwrap());
        }
    }
}

#[test]
fn natural_gradings_are_valid() {
    for n in 1..=5 {
        let a = cayley_dickson_tower(n).into_parts().0;
        Grading::natural(a.dim()).unwrap().validate(&a).unwrap();
    }
}

#[test]
fn small_cayley_dickson_algebras_are_locally_complex() {
    for n in 0..=4 {
        let a = cayley_dickson_tower(n).into_parts().0;
        assert!(is_locally_complex(&a).unwrap().holds(), "A_{n}");
    }
}

#[test]
fn tilde_algebras_are_locally_complex_and_super_alternative() {
    for name in ["TO", "TS"] {
        let n = named_algebra(name).unwrap();
        let g = n.grading.unwrap();
        g.validate(&n.algebra).unwrap();
        assert!(is_locally_complex(&n.algebra).unwrap().holds(), "{name}");
        assert!(is_super_alternative(&n.algebra, &g).unwrap().holds(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn involution_gives_scalar_trace_and_norm(
        n in 1usize..=4,
        coords in prop::collection::vec(-5i64..=5, 16),
    ) {
        let ia = cayley_dickson_tower(n);
        let a = ia.algebra();
        let x = Element::from_i64(&coords[..a.dim()]);
        let star = ia.apply(&x);
        prop_assert!(is_scalar(a, &(&x + &star)));
        prop_assert!(is_scalar(a, &a.multiply(&x, &star).unwrap()));
    }
}
