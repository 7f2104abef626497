//! Covers by subgroups and the invariant λ(G).
//!
//! λ(G), the largest size of an irredundant cover, equals the number of
//! maximal cyclic subgroups. [`lambda`] counts those directly;
//! [`lambda_bruteforce`] searches irredundant covers from the definition and
//! serves as an independent oracle on small groups.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::ElementSet;
use crate::subgroups::{all_subgroups, cyclic_subgroups};

/// Cyclic subgroups not properly contained in another cyclic subgroup,
/// sorted by descending order, then by least generator.
pub fn maximal_cyclic_subgroups(g: &Group) -> Vec<ElementSet> {
    let cyclics = cyclic_subgroups(g);
    let mut maximal: Vec<(usize, ElementSet)> = cyclics
        .iter()
        .filter(|(_, c)| {
            !cyclics
                .iter()
                .any(|(_, d)| d.len() > c.len() && c.is_subset(d))
        })
        .cloned()
        .collect();
    maximal.sort_by(|(xa, a), (xb, b)| b.len().cmp(&a.len()).then(xa.cmp(xb)));
    maximal.into_iter().map(|(_, c)| c).collect()
}

/// Number of maximal cyclic subgroups. The trivial group gives 1.
pub fn lambda(g: &Group) -> usize {
    maximal_cyclic_subgroups(g).len()
}

/// A collection of subgroups of one group, with its cover status.
#[derive(Debug, Clone)]
pub struct Cover<'g> {
    pub parent: &'g Group,
    pub members: Vec<ElementSet>,
    pub is_cover: bool,
    pub is_irredundant: bool,
}

/// Evaluates whether `members` cover `g` and whether the cover is
/// irredundant (no member lies inside the union of the others).
pub fn cover_predicates(g: &Group, members: Vec<ElementSet>) -> Result<Cover<'_>> {
    for (i, m) in members.iter().enumerate() {
        if !g.is_subgroup(m) {
            return Err(Error::NotSubgroup(format!("cover member {i}")));
        }
    }
    let n = g.order();
    let mut union = ElementSet::empty(n);
    for m in &members {
        union.union_with(m);
    }
    let is_cover = union.len() == n;
    let is_irredundant = is_cover
        && (0..members.len()).all(|i| {
            let mut others = ElementSet::empty(n);
            for (j, m) in members.iter().enumerate() {
                if j != i {
                    others.union_with(m);
                }
            }
            !members[i].is_subset(&others)
        });
    Ok(Cover {
        parent: g,
        members,
        is_cover,
        is_irredundant,
    })
}

/// Limits for the brute-force oracle.
pub const BRUTE_MAX_ORDER: usize = 16;
pub const BRUTE_MAX_SUBGROUPS: usize = 40;

struct Brute<'a> {
    n: usize,
    subs: &'a [ElementSet],
    best: usize,
}

impl Brute<'_> {
    /// Depth-first search over include/exclude decisions. Every chosen member
    /// must keep a private element (one no other chosen member contains);
    /// since adding members only removes private elements, a member without
    /// one prunes the branch. Each further member needs its own private
    /// element outside the current union, which bounds the gain.
    fn search(&mut self, next: usize, chosen: &mut Vec<usize>, union: &ElementSet) {
        if union.len() == self.n && chosen.len() > self.best {
            self.best = chosen.len();
        }
        let room = self.n - union.len();
        if chosen.len() + room.min(self.subs.len() - next) <= self.best {
            return;
        }
        for k in next..self.subs.len() {
            let cand = &self.subs[k];
            if cand.count_outside(union) == 0 {
                continue;
            }
            chosen.push(k);
            if self.all_have_private(chosen) {
                let widened = union.union(cand);
                self.search(k + 1, chosen, &widened);
            }
            chosen.pop();
        }
    }

    fn all_have_private(&self, chosen: &[usize]) -> bool {
        if chosen.len() == 1 {
            return true;
        }
        chosen.iter().enumerate().all(|(i, &a)| {
            let mut others = ElementSet::empty(self.n);
            for (j, &b) in chosen.iter().enumerate() {
                if i != j {
                    others.union_with(&self.subs[b]);
                }
            }
            self.subs[a].count_outside(&others) > 0
        })
    }
}

/// λ straight from the definition: the largest irredundant cover drawn from
/// all subgroups (the whole group included).
pub fn lambda_bruteforce(g: &Group) -> Result<usize> {
    if g.order() > BRUTE_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: format!("brute-force lambda of a group of order {}", g.order()),
            cap: BRUTE_MAX_ORDER,
        });
    }
    let lattice = all_subgroups(g)?;
    if lattice.len() > BRUTE_MAX_SUBGROUPS {
        return Err(Error::SizeLimit {
            what: format!("brute-force lambda over {} subgroups", lattice.len()),
            cap: BRUTE_MAX_SUBGROUPS,
        });
    }
    let mut brute = Brute {
        n: g.order(),
        subs: lattice.subgroups(),
        best: 0,
    };
    brute.search(0, &mut Vec::new(), &ElementSet::empty(g.order()));
    Ok(brute.best)
}
