//! Isomorphism testing by backtracking on generator images.
//!
//! Cheap invariants reject most non-isomorphic pairs up front. Otherwise a
//! small generating set of the source is chosen greedily, and each generator
//! is mapped to a target element with the same local signature. After every
//! assignment the partial map is extended over the subgroup generated so far;
//! any clash or loss of injectivity prunes the branch.

use crate::group::Group;
use crate::invariants;

/// A verified isomorphism between two groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    /// `forward[x]` is the image of source element `x`.
    pub forward: Vec<usize>,
}

impl Isomorphism {
    /// Checks bijectivity and the homomorphism equation on all pairs.
    pub fn verify(&self, source: &Group, target: &Group) -> bool {
        let n = source.order();
        if target.order() != n || self.forward.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.forward {
            if y >= n || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.forward[source.mul(a, b)] == target.mul(self.forward[a], self.forward[b])
            })
        })
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut backward = vec![0; self.forward.len()];
        for (x, &y) in self.forward.iter().enumerate() {
            backward[y] = x;
        }
        Isomorphism { forward: backward }
    }
}

/// Per-element signature: element order, centralizer size and number of
/// square roots. Preserved by every isomorphism.
pub(crate) fn element_signatures(g: &Group) -> Vec<(usize, usize, usize)> {
    let n = g.order();
    let orders = g.element_orders();
    let mut roots = vec![0usize; n];
    for x in 0..n {
        roots[g.mul(x, x)] += 1;
    }
    (0..n)
        .map(|x| {
            let centralizer = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (orders[x], centralizer, roots[x])
        })
        .collect()
}

/// Group-level invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub profile: Vec<(usize, usize)>,
    pub center: usize,
    pub derived: usize,
    pub signature_counts: Vec<((usize, usize, usize), usize)>,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let profile = invariants::order_profile(g);
    let mut counts = std::collections::BTreeMap::new();
    for s in element_signatures(g) {
        *counts.entry(s).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        profile: profile.counts.into_iter().collect(),
        center: invariants::center(g).len(),
        derived: invariants::derived_subgroup(g).len(),
        signature_counts: counts.into_iter().collect(),
    }
}

/// Greedy generating set: repeatedly add the element that enlarges the
/// generated subgroup the most, preferring elements whose signature class is
/// small (fewer candidate images), then smaller index.
pub(crate) fn greedy_generators(g: &Group, sigs: &[(usize, usize, usize)]) -> Vec<usize> {
    let n = g.order();
    let mut class_size = std::collections::HashMap::new();
    for s in sigs {
        *class_size.entry(*s).or_insert(0usize) += 1;
    }
    let mut gens = Vec::new();
    let mut sub = g.closure_of(&gens);
    while sub.len() < n {
        let mut best: Option<(usize, usize, usize)> = None; // (size, class, x)
        for x in 0..n {
            if sub.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let size = g.closure_of(&trial).len();
            let class = class_size[&sigs[x]];
            let better = match best {
                None => true,
                Some((bs, bc, _)) => size > bs || (size == bs && class < bc),
            };
            if better {
                best = Some((size, class, x));
            }
        }
        let (_, _, x) = best.expect("proper subgroup has an outside element");
        gens.push(x);
        sub = g.closure_of(&gens);
    }
    gens
}

struct Search<'a> {
    source: &'a Group,
    target: &'a Group,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Extends `gens[..k] -> images[..k]` to a map on the generated subgroup,
    /// or returns `None` if the assignment is inconsistent.
    fn extend(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.source.order();
        let mut forward = vec![usize::MAX; n];
        let mut used = vec![false; n];
        forward[0] = 0;
        used[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for i in 0..k {
                let z = self.source.mul(x, self.gens[i]);
                let w = self.target.mul(forward[x], self.images[i]);
                if forward[z] == usize::MAX {
                    if used[w] {
                        return None;
                    }
                    forward[z] = w;
                    used[w] = true;
                    frontier.push(z);
                } else if forward[z] != w {
                    return None;
                }
            }
        }
        Some(forward)
    }

    fn run(&mut self, k: usize) -> Option<Vec<usize>> {
        if k == self.gens.len() {
            return self.extend(k);
        }
        for idx in 0..self.candidates[k].len() {
            self.images[k] = self.candidates[k][idx];
            if self.extend(k + 1).is_some() {
                if let Some(found) = self.run(k + 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Decides whether `g` and `h` are isomorphic, returning a verified
/// isomorphism when they are.
pub fn are_isomorphic(g: &Group, h: &Group) -> Option<Isomorphism> {
    if g.order() != h.order() {
        return None;
    }
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    find_isomorphism_unchecked(g, h)
}

/// Backtracking search without the fingerprint pre-check.
pub(crate) fn find_isomorphism_unchecked(g: &Group, h: &Group) -> Option<Isomorphism> {
    let sg = element_signatures(g);
    let sh = element_signatures(h);
    let gens = greedy_generators(g, &sg);
    let candidates = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| sh[y] == sg[x]).collect())
        .collect();
    let mut search = Search {
        source: g,
        target: h,
        images: vec![0; gens.len()],
        gens,
        candidates,
    };
    let forward = search.run(0)?;
    if forward.contains(&usize::MAX) {
        return None;
    }
    let iso = Isomorphism { forward };
    assert!(iso.verify(g, h), "backtracking produced an invalid map");
    Some(iso)
}

/// All automorphisms of `g`, ordered lexicographically by the images of the
/// greedy generating set. Only intended for small groups.
pub fn automorphisms(g: &Group) -> Vec<Vec<usize>> {
    let sg = element_signatures(g);
    let gens = greedy_generators(g, &sg);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..g.order()).filter(|&y| sg[y] == sg[x]).collect())
        .collect();
    let mut search = Search {
        source: g,
        target: g,
        images: vec![0; gens.len()],
        gens,
        candidates,
    };
    let mut out = Vec::new();
    collect_all(&mut search, 0, &mut out);
    out
}

fn collect_all(search: &mut Search<'_>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == search.gens.len() {
        if let Some(f) = search.extend(k) {
            if !f.contains(&usize::MAX) {
                out.push(f);
            }
        }
        return;
    }
    for idx in 0..search.candidates[k].len() {
        search.images[k] = search.candidates[k][idx];
        if search.extend(k + 1).is_some() {
            collect_all(search, k + 1, out);
        }
    }
}
