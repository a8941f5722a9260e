use serde_json::{json, Value};

use super::{race_roots, Branch, Budget, Exhaustion, MonotoneMap};
use crate::config::Limits;
use crate::error::Result;
use crate::poset::Poset;

/// `f: P -> Q` and `g: Q -> P` with `g ∘ f` the identity on `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractCertificate {
    pub f: MonotoneMap,
    pub g: MonotoneMap,
}

impl RetractCertificate {
    pub fn verify(&self) -> bool {
        self.f.then(&self.g).map(|id| id.is_identity()).unwrap_or(false)
    }

    pub fn to_json(&self) -> Value {
        json!({ "f": self.f.to_json(), "g": self.g.to_json() })
    }
}

#[derive(Debug, Clone)]
pub enum RetractOutcome {
    Retract(RetractCertificate),
    Absent(Exhaustion),
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    /// `(|↑x|, |↓x|)` per element.
    sig_p: Vec<(usize, usize)>,
    sig_q: Vec<(usize, usize)>,
}

fn signature(p: &Poset) -> Vec<(usize, usize)> {
    (0..p.len())
        .map(|i| (p.up_row(i).count_ones(..), p.down_row(i).count_ones(..)))
        .collect()
}

impl Search<'_> {
    /// `q` may receive `x` in an embedding extending `f[..x]`.
    fn embeds(&self, f: &[usize], x: usize, q: usize) -> bool {
        let (sp, sq) = (self.sig_p[x], self.sig_q[q]);
        if sq.0 < sp.0 || sq.1 < sp.1 {
            return false;
        }
        f.iter()
            .enumerate()
            .all(|(y, &fy)| self.p.leq(y, x) == self.q.leq(fy, q) && self.p.leq(x, y) == self.q.leq(q, fy))
    }

    fn extend_f(&self, f: &mut Vec<usize>, budget: &mut Budget) -> Option<Option<Vec<usize>>> {
        let x = f.len();
        if x == self.p.len() {
            return self.retraction(f, budget);
        }
        for q in 0..self.q.len() {
            if !self.embeds(f, x, q) {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            f.push(q);
            if let Some(g) = self.extend_f(f, budget)? {
                return Some(Some(g));
            }
            f.pop();
        }
        Some(None)
    }

    /// A retraction `g` with `g(f(x)) = x`, or `None` inside the budget.
    fn retraction(&self, f: &[usize], budget: &mut Budget) -> Option<Option<Vec<usize>>> {
        let m = self.q.len();
        let mut g: Vec<Option<usize>> = vec![None; m];
        for (x, &fx) in f.iter().enumerate() {
            g[fx] = Some(x);
        }
        let free: Vec<usize> = (0..m).filter(|&v| g[v].is_none()).collect();
        let ok = self.extend_g(&mut g, &free, 0, budget)?;
        Some(ok.then(|| g.into_iter().map(|v| v.unwrap()).collect()))
    }

    fn extend_g(&self, g: &mut [Option<usize>], free: &[usize], k: usize, budget: &mut Budget) -> Option<bool> {
        let Some(&v) = free.get(k) else {
            return Some(true);
        };
        for target in 0..self.p.len() {
            let consistent = g.iter().enumerate().all(|(r, gr)| match gr {
                None => true,
                Some(gr) => {
                    (!self.q.leq(r, v) || self.p.leq(*gr, target)) && (!self.q.leq(v, r) || self.p.leq(target, *gr))
                }
            });
            if !consistent {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            g[v] = Some(target);
            if self.extend_g(g, free, k + 1, budget)? {
                return Some(true);
            }
            g[v] = None;
        }
        Some(false)
    }
}

/// Searches for a retraction of `q` onto a copy of `p`. The first
/// certificate in lexicographic order of `(f, g)` is returned.
pub fn is_retract_of(p: &Poset, q: &Poset, limits: &Limits) -> Result<RetractOutcome> {
    if p.len() > q.len() {
        return Ok(RetractOutcome::Absent(Exhaustion { nodes: 0 }));
    }
    let search = Search {
        p,
        q,
        sig_p: signature(p),
        sig_q: signature(q),
    };
    let (found, nodes) = race_roots(limits.execution, q.len(), limits.search_budget, |root, limit| {
        let mut budget = Budget::new(limit);
        if !search.embeds(&[], 0, root) {
            return Branch::Exhausted(0);
        }
        if !budget.tick() {
            return Branch::OverBudget;
        }
        let mut f = vec![root];
        match search.extend_f(&mut f, &mut budget) {
            None => Branch::OverBudget,
            Some(Some(g)) => Branch::Found((f, g), budget.used),
            Some(None) => Branch::Exhausted(budget.used),
        }
    })?;
    Ok(match found {
        Some((f, g)) => {
            let f = super::check_monotone(p, q, f)?;
            let g = super::check_monotone(q, p, g)?;
            RetractOutcome::Retract(RetractCertificate { f, g })
        }
        None => RetractOutcome::Absent(Exhaustion { nodes }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn butterfly() -> Poset {
        Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap()
    }

    fn certificate(p: &Poset, q: &Poset) -> Option<RetractCertificate> {
        match is_retract_of(p, q, &Limits::default()).unwrap() {
            RetractOutcome::Retract(c) => Some(c),
            RetractOutcome::Absent(_) => None,
        }
    }

    #[test]
    fn self_retract_is_identity() {
        let p = butterfly();
        let c = certificate(&p, &p).unwrap();
        assert!(c.verify());
        assert!(c.f.is_identity());
    }

    #[test]
    fn chain_into_longer_chain() {
        let c = certificate(&Poset::chain(2).unwrap(), &Poset::chain(3).unwrap()).unwrap();
        assert!(c.verify());
        assert_eq!(c.f.image(), [0, 1]);
        assert_eq!(c.g.image(), [0, 1, 1]);
    }

    #[test]
    fn butterfly_is_not_a_retract_of_the_square() {
        let c2 = Poset::chain(2).unwrap();
        let square = c2.product(&c2, 1 << 20).unwrap();
        assert!(certificate(&butterfly(), &square).is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let limits = Limits {
            search_budget: 2,
            ..Limits::default()
        };
        let c4 = Poset::chain(4).unwrap();
        assert!(matches!(
            is_retract_of(
                &butterfly(),
                &c4.product(&Poset::antichain(2).unwrap(), 1 << 20).unwrap(),
                &limits
            ),
            Err(crate::Error::BudgetExceeded(2))
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let q = butterfly().product(&Poset::chain(2).unwrap(), 1 << 20).unwrap();
        let p = butterfly();
        let par = certificate(&p, &q).unwrap();
        let seq = match is_retract_of(&p, &q, &Limits::default().sequential()).unwrap() {
            RetractOutcome::Retract(c) => c,
            _ => panic!(),
        };
        assert_eq!(par, seq);
    }
}
