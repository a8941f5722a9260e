use ordergap::gaps::enumerate_gaps;
use ordergap::sierpinski::{
    generate_lattice, intersection_of_ideals, normal_form, normalize_intersection, SierpinskiChain,
};
use ordergap::{ElementSet, Limits};
use proptest::prelude::*;

fn chain(max: usize) -> impl Strategy<Value = SierpinskiChain> {
    (1..=max)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|order| SierpinskiChain::with_integer_points(order).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn two_ideals_suffice_for_any_intersection(sc in chain(8)) {
        let p = sc.poset();
        prop_assert!(sc.is_realizer_of(&p));
        for mask in 1u64..(1 << sc.len()) {
            let xs: Vec<usize> = (0..sc.len()).filter(|&x| mask >> x & 1 == 1).collect();
            let (i, j) = normalize_intersection(&sc, &xs).unwrap();
            prop_assert_eq!(
                intersection_of_ideals(&p, &[i, j]).unwrap(),
                intersection_of_ideals(&p, &xs).unwrap()
            );
        }
    }

    #[test]
    fn normal_forms_are_oriented_and_exact(sc in chain(8)) {
        let limits = Limits::default();
        let gl = generate_lattice(&sc, &limits).unwrap();
        for m in gl.members() {
            let mut u = ElementSet::empty(gl.base());
            for (x, y) in normal_form(&gl, m, &limits).unwrap() {
                prop_assert!(sc.real_leq(x, y) && sc.omega_leq(y, x));
                u = u.union(&intersection_of_ideals(gl.base(), &[x, y]).unwrap());
            }
            prop_assert_eq!(&u, m);
        }
    }

    #[test]
    fn generated_lattices_are_closed_and_distributive(sc in chain(7)) {
        let gl = generate_lattice(&sc, &Limits::default()).unwrap();
        for a in gl.members() {
            for b in gl.members() {
                prop_assert!(gl.index_of(&a.union(b)).is_some());
                prop_assert!(gl.index_of(&a.intersection(b)).is_some());
            }
        }
        prop_assert!(gl.poset().is_lattice().is_lattice());
        prop_assert!(gl.distributivity(500, 0).holds());
    }

    #[test]
    fn small_generated_lattices_have_no_gaps(sc in chain(4)) {
        let limits = Limits::default();
        let lp = generate_lattice(&sc, &limits).unwrap().poset();
        prop_assume!(lp.len() <= 10);
        prop_assert!(enumerate_gaps(&lp, &limits).unwrap().is_empty());
    }
}
