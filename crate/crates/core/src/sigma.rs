//! σ(G): the least number of proper subgroups whose union is G.
//!
//! Any proper subgroup in a cover can be swapped for a maximal subgroup
//! containing it, so the search runs over maximal subgroups only. The solver
//! is a plain branch-and-bound for exact set cover: branch on the uncovered
//! element that the fewest candidates contain, bound by a disjoint packing of
//! uncovered elements.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::ElementSet;
use crate::subgroups::all_subgroups;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    Finite(usize),
    /// Cyclic groups are not a union of proper subgroups.
    Infinite,
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma::Finite(n) => write!(f, "{n}"),
            Sigma::Infinite => f.write_str("infinite"),
        }
    }
}

struct Solver<'a> {
    sets: &'a [ElementSet],
    /// For each element, the candidate sets containing it.
    containing: Vec<Vec<usize>>,
    best: usize,
    best_choice: Vec<usize>,
    deadline: Instant,
    timed_out: bool,
    nodes: u64,
}

impl Solver<'_> {
    /// Greedy packing of uncovered elements such that no two share a
    /// candidate set; each needs its own set, so the packing size is a lower
    /// bound on the sets still needed.
    fn packing_bound(&self, uncovered: &ElementSet) -> usize {
        let mut blocked = vec![false; self.sets.len()];
        let mut order: Vec<usize> = uncovered.iter().collect();
        order.sort_by_key(|&x| self.containing[x].len());
        let mut count = 0;
        for x in order {
            if self.containing[x].iter().all(|&s| !blocked[s]) {
                count += 1;
                for &s in &self.containing[x] {
                    blocked[s] = true;
                }
            }
        }
        count
    }

    fn search(&mut self, uncovered: &ElementSet, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if (self.nodes == 1 || self.nodes.is_multiple_of(1024)) && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.best {
                self.best = chosen.len();
                self.best_choice = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.packing_bound(uncovered) >= self.best {
            return;
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&x| self.containing[x].len())
            .expect("uncovered is non-empty");
        let mut options = self.containing[pivot].clone();
        options.sort_by_key(|&s| std::cmp::Reverse(self.sets[s].intersection(uncovered).len()));
        for s in options {
            chosen.push(s);
            let rest = uncovered.difference(&self.sets[s]);
            self.search(&rest, chosen);
            chosen.pop();
            if self.timed_out {
                return;
            }
        }
    }
}

/// Result of a successful σ computation with the witnessing cover.
#[derive(Debug, Clone)]
pub struct SigmaSolution {
    pub sigma: Sigma,
    pub cover: Vec<ElementSet>,
}

/// Exact minimum cover by proper subgroups within a time budget.
pub fn sigma_exact(g: &Group, budget: Duration) -> Result<Sigma> {
    sigma_with_cover(g, budget).map(|s| s.sigma)
}

pub fn sigma_with_cover(g: &Group, budget: Duration) -> Result<SigmaSolution> {
    if g.is_cyclic() {
        return Ok(SigmaSolution {
            sigma: Sigma::Infinite,
            cover: vec![],
        });
    }
    let maximal = all_subgroups(g)?.maximal_subgroups();
    let mut containing = vec![Vec::new(); g.order()];
    for (i, m) in maximal.iter().enumerate() {
        for x in m.iter() {
            containing[x].push(i);
        }
    }
    let mut solver = Solver {
        sets: &maximal,
        containing,
        best: maximal.len() + 1,
        best_choice: Vec::new(),
        deadline: Instant::now() + budget,
        timed_out: false,
        nodes: 0,
    };
    let universe = ElementSet::full(g.order());
    let lower = solver.packing_bound(&universe);
    solver.search(&universe, &mut Vec::new());
    if solver.timed_out {
        let upper = if solver.best <= maximal.len() {
            solver.best.to_string()
        } else {
            "unknown".into()
        };
        return Err(Error::Timeout { lower, upper });
    }
    let cover = solver
        .best_choice
        .iter()
        .map(|&i| maximal[i].clone())
        .collect();
    Ok(SigmaSolution {
        sigma: Sigma::Finite(solver.best),
        cover,
    })
}
