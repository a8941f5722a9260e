use ordergap::catalogue::posets_up_to;
use ordergap::{ElementSet, Execution, Poset};

fn catalogue(max: usize) -> Vec<Poset> {
    posets_up_to(max, Execution::default()).unwrap()
}

#[test]
fn order_axioms_hold_on_the_catalogue() {
    for p in catalogue(6) {
        let n = p.len();
        for x in 0..n {
            assert!(p.leq(x, x));
            for y in 0..n {
                if x != y && p.leq(x, y) {
                    assert!(!p.leq(y, x), "{p:?}");
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) {
                        assert!(p.leq(x, z), "{p:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn bounds_are_dual() {
    for p in catalogue(6) {
        let d = p.dual();
        for mask in 0..(1u64 << p.len()) {
            let c = ElementSet::from_mask(&p, mask);
            let cd = ElementSet::from_mask(&d, mask);
            let lower: Vec<usize> = p.lower_bounds(&c).unwrap().iter().collect();
            let upper_dual: Vec<usize> = d.upper_bounds(&cd).unwrap().iter().collect();
            assert_eq!(lower, upper_dual);
            let upper: Vec<usize> = p.upper_bounds(&c).unwrap().iter().collect();
            let lower_dual: Vec<usize> = d.lower_bounds(&cd).unwrap().iter().collect();
            assert_eq!(upper, lower_dual);
        }
    }
}

#[test]
fn lattices_are_self_dual_as_a_class() {
    for p in catalogue(6) {
        assert_eq!(p.is_lattice().is_lattice(), p.dual().is_lattice().is_lattice(), "{p:?}");
    }
}

/// `((p, q), r)` and `(p, (q, r))` land on the same index, so associativity
/// up to isomorphism is equality of the two relations.
#[test]
fn product_is_associative() {
    let small = catalogue(3);
    for p in &small {
        for q in &small {
            for r in &small {
                let left = p.product(q, 1 << 20).unwrap().product(r, 1 << 20).unwrap();
                let right = p.product(&q.product(r, 1 << 20).unwrap(), 1 << 20).unwrap();
                assert!(left.same_order(&right));
            }
        }
    }
}

/// Lattice witnesses: a missing join or meet really is missing.
#[test]
fn lattice_witnesses_are_genuine() {
    for p in catalogue(5) {
        match p.is_lattice() {
            ordergap::LatticeCheck::Lattice => {
                let n = p.len();
                for x in 0..n {
                    for y in 0..n {
                        let j = p.join(x, y).unwrap();
                        let upper = p.up_row(x).intersection(p.up_row(y)).collect::<Vec<_>>();
                        assert!(upper.iter().all(|&u| p.leq(j, u)) && upper.contains(&j));
                    }
                }
            }
            ordergap::LatticeCheck::Missing {
                pair: (x, y),
                join,
                meet,
            } => {
                assert!(join || meet);
                if join {
                    assert!(p.join(x, y).is_none());
                }
                if meet {
                    assert!(p.meet(x, y).is_none());
                }
            }
        }
    }
}
