//! Structural invariants: element orders, Ω/℧, centers, derived series, and
//! the metabelian power-formula checker.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::ElementSet;

/// Number of elements of each order, plus the exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderProfile {
    pub counts: BTreeMap<usize, usize>,
    /// Least common multiple of the element orders.
    pub exponent: usize,
}

impl OrderProfile {
    pub fn count(&self, order: usize) -> usize {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// Largest element order. Not the same as the exponent in general.
    pub fn max_order(&self) -> usize {
        *self
            .counts
            .keys()
            .next_back()
            .expect("profile is never empty")
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn order_profile(g: &Group) -> OrderProfile {
    let mut counts = BTreeMap::new();
    let mut exponent = 1;
    for &o in g.element_orders() {
        *counts.entry(o).or_insert(0) += 1;
        exponent = exponent / gcd(exponent, o) * o;
    }
    OrderProfile { counts, exponent }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// If `n` is a power of `p` (including `p^0 = 1`), returns the exponent.
pub(crate) fn log_base(n: usize, p: usize) -> Option<u32> {
    let mut m = n;
    let mut k = 0;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        k += 1;
    }
    Some(k)
}

/// Whether Ω/℧ return the raw element set or the subgroup it generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Set,
    Subgroup,
}

fn require_p_group(g: &Group, p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if log_base(g.order(), p).is_none() {
        return Err(Error::Domain(format!(
            "order {} is not a power of {p}",
            g.order()
        )));
    }
    Ok(())
}

fn finish(g: &Group, set: ElementSet, variant: Variant) -> ElementSet {
    match variant {
        Variant::Set => set,
        Variant::Subgroup => g.generated_subgroup(&set),
    }
}

/// Ω_s: elements with `a^{p^s} = 1` (or the subgroup they generate).
pub fn omega(g: &Group, p: usize, s: u32, variant: Variant) -> Result<ElementSet> {
    require_p_group(g, p)?;
    let q = p.pow(s) as i64;
    let set = ElementSet::from_elements(g.order(), g.elements().filter(|&a| g.pow(a, q) == 0));
    Ok(finish(g, set, variant))
}

/// ℧_s: the `p^s`-th powers (or the subgroup they generate).
pub fn agemo(g: &Group, p: usize, s: u32, variant: Variant) -> Result<ElementSet> {
    require_p_group(g, p)?;
    let q = p.pow(s) as i64;
    let set = ElementSet::from_elements(g.order(), g.elements().map(|a| g.pow(a, q)));
    Ok(finish(g, set, variant))
}

/// Elements commuting with every element of `s`.
pub fn centralizer(g: &Group, s: &ElementSet) -> ElementSet {
    ElementSet::from_elements(
        g.order(),
        g.elements()
            .filter(|&x| s.iter().all(|y| g.mul(x, y) == g.mul(y, x))),
    )
}

pub fn center(g: &Group) -> ElementSet {
    centralizer(g, &ElementSet::full(g.order()))
}

/// Commutator subgroup of `h` (a subgroup of `g`).
pub fn commutator_subgroup(g: &Group, h: &ElementSet) -> ElementSet {
    let mut seeds = ElementSet::empty(g.order());
    for a in h.iter() {
        for b in h.iter() {
            seeds.insert(g.commutator(a, b));
        }
    }
    g.generated_subgroup(&seeds)
}

pub fn derived_subgroup(g: &Group) -> ElementSet {
    commutator_subgroup(g, &ElementSet::full(g.order()))
}

/// The derived series `G ⊇ G′ ⊇ G″ ⊇ …`, stopped once it becomes stationary.
#[derive(Debug, Clone)]
pub struct DerivedSeries {
    pub terms: Vec<ElementSet>,
}

impl DerivedSeries {
    pub fn is_solvable(&self) -> bool {
        self.terms.last().is_some_and(|t| t.len() == 1)
    }

    /// `G″ = 1`.
    pub fn is_metabelian(&self) -> bool {
        self.terms.get(2).is_none_or(|t| t.len() == 1)
    }

    pub fn derived_length(&self) -> Option<usize> {
        self.is_solvable().then(|| self.terms.len() - 1)
    }
}

pub fn derived_series(g: &Group) -> DerivedSeries {
    let mut terms = vec![ElementSet::full(g.order())];
    loop {
        let last = terms.last().unwrap();
        if last.len() == 1 {
            break;
        }
        let next = commutator_subgroup(g, last);
        if next.len() == last.len() {
            break;
        }
        terms.push(next);
    }
    DerivedSeries { terms }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).is_solvable()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Left-normed commutator `[a,b, a,…,a, b,…,b]` with `i-1` extra `a`s and
/// `j-1` extra `b`s.
fn iterated_commutator(g: &Group, a: usize, b: usize, i: u64, j: u64) -> usize {
    let mut c = g.commutator(a, b);
    for _ in 1..i {
        c = g.commutator(c, a);
    }
    for _ in 1..j {
        c = g.commutator(c, b);
    }
    c
}

/// Both sides of the metabelian power formula
/// `(ab⁻¹)^n = a^n · ∏_{i,j≥1, i+j≤n} [ia,jb]^C(n,i+j) · b^{-n}`.
///
/// The product is taken in lexicographic `(i, j)` order; all factors lie in
/// the abelian derived subgroup so the order does not matter. No hypothesis
/// on `g` is checked here.
pub fn metabelian_power_sides(g: &Group, a: usize, b: usize, n: u64) -> (usize, usize) {
    let lhs = g.pow(g.mul(a, g.inv(b)), n as i64);
    let mut rhs = g.pow(a, n as i64);
    for i in 1..n {
        for j in 1..=(n - i) {
            let c = iterated_commutator(g, a, b, i, j);
            rhs = g.mul(rhs, g.pow(c, binomial(n, i + j) as i64));
        }
    }
    rhs = g.mul(rhs, g.pow(b, -(n as i64)));
    (lhs, rhs)
}

/// Evaluates the metabelian power formula for `(a, b, n)`.
///
/// Requires `g` to be a metabelian p-group.
pub fn metabelian_power_check(g: &Group, a: usize, b: usize, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if a >= g.order() || b >= g.order() {
        return Err(Error::Domain("element out of range".into()));
    }
    let p_group = (2..=g.order())
        .find(|&p| g.order().is_multiple_of(p))
        .is_none_or(|p| log_base(g.order(), p).is_some());
    if !p_group {
        return Err(Error::Domain(format!(
            "order {} is not a prime power",
            g.order()
        )));
    }
    if !derived_series(g).is_metabelian() {
        return Err(Error::Domain("group is not metabelian".into()));
    }
    let (lhs, rhs) = metabelian_power_sides(g, a, b, n);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn quaternion_profile() {
        let q = dicyclic(8).unwrap();
        let p = order_profile(&q);
        assert_eq!(p.counts, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(p.exponent, 4);
    }

    #[test]
    fn exponent_differs_from_max_order() {
        let g = semidirect_named(
            &elementary_abelian(3, 2).unwrap(),
            &cyclic(2).unwrap(),
            "inv",
        )
        .unwrap();
        let p = order_profile(&g);
        // Brute-force orders straight from the table.
        let mut brute = BTreeMap::new();
        for x in 0..g.order() {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = g.mul(y, x);
                k += 1;
            }
            *brute.entry(k).or_insert(0) += 1;
        }
        assert_eq!(brute, BTreeMap::from([(1, 1), (2, 9), (3, 8)]));
        assert_eq!(p.counts, brute);
        assert_eq!(p.exponent, 6);
        assert_eq!(p.max_order(), 3);
    }

    #[test]
    fn omega_and_agemo_on_elementary_and_cyclic() {
        let e = elementary_abelian(2, 3).unwrap();
        assert_eq!(omega(&e, 2, 1, Variant::Set).unwrap().len(), 8);
        assert_eq!(omega(&e, 2, 1, Variant::Subgroup).unwrap().len(), 8);
        assert_eq!(agemo(&e, 2, 1, Variant::Set).unwrap().len(), 1);
        let c8 = cyclic(8).unwrap();
        assert_eq!(agemo(&c8, 2, 1, Variant::Subgroup).unwrap().len(), 4);
        assert!(matches!(
            omega(&cyclic(6).unwrap(), 2, 1, Variant::Set),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            omega(&c8, 4, 1, Variant::Set),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn centers() {
        assert_eq!(center(&dihedral(8).unwrap()).len(), 2);
        assert_eq!(center(&dicyclic(8).unwrap()).len(), 2);
        let a4 = alternating(4).unwrap();
        let three = (0..12).find(|&x| a4.element_order(x) == 3).unwrap();
        let c = centralizer(&a4, &a4.cyclic_subgroup(three));
        // brute force: elements commuting with the 3-cycle
        let brute = (0..12)
            .filter(|&y| a4.mul(y, three) == a4.mul(three, y))
            .count();
        assert_eq!(brute, 3);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn derived_series_examples() {
        let s3 = dihedral(6).unwrap();
        let ds = derived_series(&s3);
        assert_eq!(
            ds.terms.iter().map(ElementSet::len).collect::<Vec<_>>(),
            vec![6, 3, 1]
        );
        assert!(ds.is_solvable() && ds.is_metabelian());

        let a4 = derived_series(&alternating(4).unwrap());
        assert_eq!(
            a4.terms.iter().map(ElementSet::len).collect::<Vec<_>>(),
            vec![12, 4, 1]
        );

        let a5 = derived_series(&alternating(5).unwrap());
        assert_eq!(a5.terms.len(), 1);
        assert!(!a5.is_solvable());
    }

    #[test]
    fn power_formula_on_quaternion() {
        let q = dicyclic(8).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                for n in 2..=4 {
                    let (l, r) = metabelian_power_sides(&q, a, b, n);
                    assert_eq!(l, r, "a={a} b={b} n={n}");
                    assert!(metabelian_power_check(&q, a, b, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn power_formula_with_identity() {
        let g = dihedral(8).unwrap();
        for b in 0..8 {
            for n in 1..=5 {
                assert!(metabelian_power_check(&g, 0, b, n).unwrap());
            }
        }
    }

    #[test]
    fn power_formula_domain_errors() {
        let s3 = dihedral(6).unwrap();
        assert!(matches!(
            metabelian_power_check(&s3, 1, 2, 2),
            Err(Error::Domain(_))
        ));
        let d8 = dihedral(8).unwrap();
        assert!(matches!(
            metabelian_power_check(&d8, 1, 2, 0),
            Err(Error::Domain(_))
        ));
    }
}
