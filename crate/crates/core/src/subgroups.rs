//! Subgroup lattice enumeration and the views derived from it.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::invariants::{is_prime, log_base};
use crate::set::ElementSet;

/// Default cap on the group order for subgroup enumeration.
pub const SUBGROUP_CAP: usize = 200;

/// Every subgroup of a group, sorted by `(size, set)`.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    order: usize,
    subgroups: Vec<ElementSet>,
}

/// Distinct cyclic subgroups, each with its least generator.
pub fn cyclic_subgroups(g: &Group) -> Vec<(usize, ElementSet)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let c = g.cyclic_subgroup(x);
        if seen.insert(c.clone()) {
            out.push((x, c));
        }
    }
    out
}

pub fn all_subgroups(g: &Group) -> Result<SubgroupLattice> {
    all_subgroups_capped(g, SUBGROUP_CAP)
}

/// Seeds with the cyclic subgroups, then joins every known subgroup with
/// every cyclic generator until no new subgroup appears.
pub fn all_subgroups_capped(g: &Group, cap: usize) -> Result<SubgroupLattice> {
    if g.order() > cap {
        return Err(Error::SizeLimit {
            what: format!("subgroup enumeration of a group of order {}", g.order()),
            cap,
        });
    }
    let cyclics = cyclic_subgroups(g);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    // (subgroup, a generating list)
    let mut known: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    for (x, c) in &cyclics {
        seen.insert(c.clone());
        let gens = if *x == 0 { vec![] } else { vec![*x] };
        known.push((c.clone(), gens));
    }
    let mut start = 0;
    while start < known.len() {
        let end = known.len();
        for k in start..end {
            for (x, _) in &cyclics {
                if known[k].0.contains(*x) {
                    continue;
                }
                let mut gens = known[k].1.clone();
                gens.push(*x);
                let joined = g.closure_of(&gens);
                if seen.insert(joined.clone()) {
                    known.push((joined, gens));
                }
            }
        }
        start = end;
    }
    let mut subgroups: Vec<ElementSet> = known.into_iter().map(|(s, _)| s).collect();
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(SubgroupLattice {
        order: g.order(),
        subgroups,
    })
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[ElementSet] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Proper subgroups not contained in any other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<ElementSet> {
        let proper: Vec<&ElementSet> = self
            .subgroups
            .iter()
            .filter(|s| s.len() < self.order)
            .collect();
        proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .map(|s| (*s).clone())
            .collect()
    }

    /// Intersection of the maximal subgroups (the whole group if there are
    /// none, i.e. for the trivial group).
    pub fn frattini(&self) -> ElementSet {
        let mut phi = ElementSet::full(self.order);
        for m in self.maximal_subgroups() {
            phi.intersect_with(&m);
        }
        phi
    }

    /// One Sylow `p`-subgroup (the least in lattice order) and the number of
    /// Sylow `p`-subgroups.
    pub fn sylow(&self, p: usize) -> Result<(ElementSet, usize)> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        let mut part = 1;
        while self.order.is_multiple_of(part * p) {
            part *= p;
        }
        let all: Vec<&ElementSet> = self.subgroups.iter().filter(|s| s.len() == part).collect();
        debug_assert!(log_base(part, p).is_some());
        let first = (*all.first().expect("Sylow subgroups exist")).clone();
        Ok((first, all.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn klein_four_has_five_subgroups() {
        let l = all_subgroups(&elementary_abelian(2, 2).unwrap()).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.maximal_subgroups().len(), 3);
    }

    #[test]
    fn a4_sylow_counts() {
        let l = all_subgroups(&alternating(4).unwrap()).unwrap();
        assert_eq!(l.len(), 10);
        let (p3, n3) = l.sylow(3).unwrap();
        assert_eq!((p3.len(), n3), (3, 4));
        let (p2, n2) = l.sylow(2).unwrap();
        assert_eq!((p2.len(), n2), (4, 1));
    }

    #[test]
    fn d8_frattini_by_intersection() {
        let g = dihedral(8).unwrap();
        let l = all_subgroups(&g).unwrap();
        let maxes = l.maximal_subgroups();
        assert_eq!(maxes.len(), 3);
        // brute force: elements lying in all three maximal subgroups
        let brute: Vec<usize> = (0..8)
            .filter(|&x| maxes.iter().all(|m| m.contains(x)))
            .collect();
        assert_eq!(brute.len(), 2);
        assert_eq!(l.frattini().to_vec(), brute);
        assert_eq!(l.frattini(), g.cyclic_subgroup(2));
    }

    #[test]
    fn s5_lattice_within_cap() {
        let l = all_subgroups(&symmetric(5).unwrap()).unwrap();
        assert_eq!(l.len(), 156);
        assert_eq!(l.maximal_subgroups().len(), 22);
    }

    #[test]
    fn cap_is_enforced() {
        let g = general_linear_2(5).unwrap();
        assert!(matches!(all_subgroups(&g), Err(Error::SizeLimit { .. })));
    }
}
