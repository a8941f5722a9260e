use ordergap::catalogue::posets_up_to;
use ordergap::deciders::{has_selection_property, is_retract_of, RetractOutcome, SelectionOutcome};
use ordergap::gaps::{
    classify_pair, enumerate_gaps, is_irreducible_gap, is_minimal_gap, minimal_subgap, pregap_leq, subgaps,
};
use ordergap::{ElementSet, Execution, Limits, PairClass, Poset, Pregap};

fn catalogue(max: usize) -> Vec<Poset> {
    posets_up_to(max, Execution::default()).unwrap()
}

fn all_pregaps(p: &Poset) -> Vec<Pregap> {
    let full = 1u64 << p.len();
    let mut out = Vec::new();
    for a in 0..full {
        for b in 0..full {
            if let Ok(g) = Pregap::new(p, ElementSet::from_mask(p, a), ElementSet::from_mask(p, b)) {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn pregap_order_is_a_quasiorder() {
    for p in catalogue(4) {
        let pregaps = all_pregaps(&p);
        let leq: Vec<Vec<bool>> = pregaps
            .iter()
            .map(|x| {
                pregaps
                    .iter()
                    .map(|y| pregap_leq(&p, x, y).unwrap().is_some())
                    .collect()
            })
            .collect();
        let n = pregaps.len();
        for i in 0..n {
            assert!(leq[i][i]);
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] {
                        assert!(leq[i][k], "{p:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn lattice_pregaps_are_separated_by_the_join() {
    for p in catalogue(5).into_iter().filter(|p| p.is_lattice().is_lattice()) {
        for g in all_pregaps(&p) {
            assert!(matches!(
                classify_pair(&p, g.a(), g.b()).unwrap(),
                PairClass::Separable { .. }
            ));
            let join = p.join_of(g.a()).unwrap().expect("lattices have all finite joins");
            assert!(g.separators(&p).unwrap().contains(join));
        }
    }
}

#[test]
fn irreducible_implies_minimal_and_minimal_subgaps_exist() {
    let limits = Limits::default();
    for p in catalogue(5) {
        for g in enumerate_gaps(&p, &limits).unwrap() {
            if is_irreducible_gap(&p, &g, &limits).unwrap() {
                assert!(is_minimal_gap(&p, &g, &limits).unwrap());
            }
            let m = minimal_subgap(&p, &g, &limits).unwrap();
            assert!(m.is_gap() && is_minimal_gap(&p, &m, &limits).unwrap());
            assert!(m.a().is_subset(g.a()) && m.b().is_subset(g.b()));
            assert!(subgaps(&p, &g, &limits).unwrap().iter().any(|s| s == &m));
        }
    }
}

fn has_selector(p: &Poset) -> bool {
    matches!(
        has_selection_property(p, &Limits::default()).unwrap(),
        SelectionOutcome::Selector(_)
    )
}

/// Retracts of posets with the selection property keep it.
#[test]
fn selection_is_closed_under_retracts() {
    let all = catalogue(4);
    let with_selector: Vec<&Poset> = all.iter().filter(|q| has_selector(q)).collect();
    let mut checked = 0;
    for q in with_selector {
        for p in all.iter().filter(|p| p.len() <= q.len()) {
            if let RetractOutcome::Retract(cert) = is_retract_of(p, q, &Limits::default()).unwrap() {
                assert!(cert.verify());
                assert!(has_selector(p), "retract {p:?} of {q:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn sequential_and_parallel_agree_on_gaps() {
    let par = Limits::default();
    let seq = Limits::default().sequential();
    for p in catalogue(5) {
        let a: Vec<_> = enumerate_gaps(&p, &par)
            .unwrap()
            .iter()
            .map(|g| g.display(&p))
            .collect();
        let b: Vec<_> = enumerate_gaps(&p, &seq)
            .unwrap()
            .iter()
            .map(|g| g.display(&p))
            .collect();
        assert_eq!(a, b);
    }
}
