//! Executable checks of the classification of groups with λ(G) = |G| − t
//! for t ≤ 5, and of the structural facts relating λ to element orders.
//!
//! Everything here is evaluated over a finite catalog, so every report states
//! the order bound it covers.

use std::fmt::Write as _;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::covers::{cover_predicates, lambda, maximal_cyclic_subgroups};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::invariants::{is_prime, is_solvable, order_profile};
use crate::iso::are_isomorphic;
use crate::set::ElementSet;
use crate::sigma::{sigma_exact, Sigma};
use crate::smallgroups::CatalogEntry;
use crate::spec::build;
use crate::subgroups::all_subgroups;

/// Specs of the classes with λ(G) = |G| − t, for `t` in 1..=5. For `t = 1`
/// the family C2^k is infinite and is cut off at `max_order`.
pub fn expected_classes(t: u8, max_order: usize) -> Result<Vec<String>> {
    let fixed: &[&str] = match t {
        1 => {
            return Ok((1..)
                .take_while(|&k| 1usize << k <= max_order)
                .map(|k| {
                    if k == 1 {
                        "C2".to_string()
                    } else {
                        format!("C2^{k}")
                    }
                })
                .collect())
        }
        2 => &["C3", "D6"],
        3 => &["C4", "D8"],
        4 => &["C5", "D10", "C4xC2", "D8xC2"],
        5 => &["C6", "D12", "Q8", "C3^2", "A4", "C3^2:C2[inv]"],
        _ => {
            return Err(Error::Parameter(format!(
                "theorem tag must be 1..=5, got {t}"
            )))
        }
    };
    Ok(fixed
        .iter()
        .filter(|s| build(s).map(|g| g.order() <= max_order).unwrap_or(false))
        .map(|s| s.to_string())
        .collect())
}

/// One catalog group whose gap |G| − λ(G) equals the theorem tag.
#[derive(Debug, Clone, Serialize)]
pub struct DetailRow {
    pub order: usize,
    pub spec: String,
    pub lambda: usize,
    pub gap: usize,
    pub matched: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub theorem: u8,
    pub max_order: usize,
    pub expected: Vec<String>,
    pub found: Vec<String>,
    pub missing: Vec<String>,
    pub extraneous: Vec<String>,
    pub pass: bool,
    #[serde(skip)]
    pub rows: Vec<DetailRow>,
    /// Set when the expected family was cut off at `max_order`.
    #[serde(skip)]
    pub truncated: bool,
}

/// λ of every catalog entry, in catalog order.
pub fn catalog_lambdas(catalog: &[CatalogEntry]) -> Vec<usize> {
    catalog.par_iter().map(|e| lambda(&e.group)).collect()
}

fn in_range(catalog: &[CatalogEntry], max_order: usize) -> Vec<&CatalogEntry> {
    let mut v: Vec<&CatalogEntry> = catalog
        .iter()
        .filter(|e| (2..=max_order).contains(&e.order))
        .collect();
    v.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.spec.cmp(&b.spec)));
    v
}

/// Compares the catalog groups with λ(G) = |G| − t against the expected
/// class list, matching by isomorphism.
pub fn verify_theorem(
    t: u8,
    catalog: &[CatalogEntry],
    max_order: usize,
) -> Result<ClassificationReport> {
    let expected = expected_classes(t, max_order)?;
    let expected_groups: Vec<Group> = expected.iter().map(|s| build(s)).collect::<Result<_>>()?;
    let entries = in_range(catalog, max_order);
    let lambdas: Vec<usize> = entries.par_iter().map(|e| lambda(&e.group)).collect();

    let mut hits = vec![0usize; expected.len()];
    let mut rows = Vec::new();
    let mut extraneous = Vec::new();
    for (e, &l) in entries.iter().zip(&lambdas) {
        if e.order - l != t as usize {
            continue;
        }
        let matched = expected_groups
            .iter()
            .position(|x| are_isomorphic(x, &e.group).is_some());
        match matched {
            Some(k) => hits[k] += 1,
            None => extraneous.push(e.spec.clone()),
        }
        rows.push(DetailRow {
            order: e.order,
            spec: e.spec.clone(),
            lambda: l,
            gap: e.order - l,
            matched: matched.map(|k| expected[k].clone()),
        });
    }
    let missing: Vec<String> = expected
        .iter()
        .zip(&hits)
        .filter(|(_, &h)| h == 0)
        .map(|(s, _)| s.clone())
        .collect();
    let pass = missing.is_empty() && extraneous.is_empty() && hits.iter().all(|&h| h == 1);
    Ok(ClassificationReport {
        theorem: t,
        max_order,
        expected,
        found: rows.iter().map(|r| r.spec.clone()).collect(),
        missing,
        extraneous,
        pass,
        rows,
        truncated: t == 1,
    })
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.join(", ")
    }
}

impl ClassificationReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "t={}: groups with lambda(G) = |G| - {} among catalog orders 2..={} (nothing is claimed beyond order {})",
            self.theorem, self.theorem, self.max_order, self.max_order
        );
        if self.truncated {
            let _ = writeln!(
                s,
                "  expected family C2^n truncated at order {}",
                self.max_order
            );
        }
        let _ = writeln!(s, "  expected:   {}", list(&self.expected));
        let _ = writeln!(s, "  found:      {}", list(&self.found));
        let _ = writeln!(s, "  missing:    {}", list(&self.missing));
        let _ = writeln!(s, "  extraneous: {}", list(&self.extraneous));
        let _ = writeln!(
            s,
            "  {:>5}  {:<16} {:>6}  {:>3}  matched",
            "order", "spec", "lambda", "gap"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "  {:>5}  {:<16} {:>6}  {:>3}  {}",
                r.order,
                r.spec,
                r.lambda,
                r.gap,
                r.matched.as_deref().unwrap_or("-")
            );
        }
        let _ = writeln!(s, "  result: {}", if self.pass { "PASS" } else { "FAIL" });
        s
    }
}

/// Outcome of one structural claim over the catalog.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub claim: String,
    pub evaluated: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub max_order: usize,
    pub checks: Vec<PropertyCheck>,
    pub pass: bool,
}

impl PropertyReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "structural checks over catalog orders 2..={} (nothing is claimed beyond order {})",
            self.max_order, self.max_order
        );
        for c in &self.checks {
            let verdict = if c.violations.is_empty() {
                "ok"
            } else {
                "VIOLATED"
            };
            let _ = writeln!(
                s,
                "  {:<24} {:>5} evaluated  {:<8}  {}",
                c.name, c.evaluated, verdict, c.claim
            );
            for v in &c.violations {
                let _ = writeln!(s, "      witness: {v}");
            }
        }
        let _ = writeln!(s, "  result: {}", if self.pass { "PASS" } else { "FAIL" });
        s
    }
}

/// Per-group facts shared by the structural checks.
struct Facts {
    spec: String,
    order: usize,
    lambda: usize,
    cyclic: bool,
    /// Orders of the maximal cyclic subgroups, largest first.
    mc_orders: Vec<usize>,
    order3_subgroups: usize,
    solvable: bool,
    cover_ok: bool,
    sub_violations: Vec<String>,
    sub_count: usize,
    quotient_violations: Vec<String>,
    quotient_count: usize,
    sigma: Option<Sigma>,
}

const SIGMA_BUDGET: Duration = Duration::from_secs(20);

fn facts(e: &CatalogEntry) -> Result<Facts> {
    let g = &e.group;
    let mcs = maximal_cyclic_subgroups(g);
    let l = mcs.len();
    let profile = order_profile(g);
    let cover = cover_predicates(g, mcs.clone())?;
    let lattice = all_subgroups(g)?;

    let mut sub_violations = Vec::new();
    for s in lattice.subgroups() {
        let (h, _) = g.induced(s)?;
        let ls = lambda(&h);
        if ls > l {
            sub_violations.push(format!(
                "{}: subgroup of order {} has lambda {ls} > {l}",
                e.spec,
                s.len()
            ));
        }
    }

    let mut quotient_violations = Vec::new();
    let mut quotient_count = 0;
    for s in lattice.subgroups().iter().filter(|s| g.is_normal(s)) {
        quotient_count += 1;
        let (q, _) = g.quotient(s)?;
        let lq = lambda(&q);
        if lq > l {
            quotient_violations.push(format!(
                "{}: quotient by a normal subgroup of order {} has lambda {lq} > {l}",
                e.spec,
                s.len()
            ));
        }
    }
    let mut core = ElementSet::full(g.order());
    for m in &mcs {
        core.intersect_with(m);
    }
    quotient_count += 1;
    if !g.is_normal(&core) {
        quotient_violations.push(format!(
            "{}: intersection of maximal cyclic subgroups is not normal",
            e.spec
        ));
    } else {
        let (q, _) = g.quotient(&core)?;
        let lq = lambda(&q);
        if lq != l {
            quotient_violations.push(format!(
                "{}: quotient by the intersection of maximal cyclic subgroups (order {}) has lambda {lq} != {l}",
                e.spec,
                core.len()
            ));
        }
    }

    let sigma = if g.is_cyclic() {
        Some(Sigma::Infinite)
    } else {
        sigma_exact(g, SIGMA_BUDGET).ok()
    };

    Ok(Facts {
        spec: e.spec.clone(),
        order: e.order,
        lambda: l,
        cyclic: g.is_cyclic(),
        mc_orders: mcs.iter().map(ElementSet::len).collect(),
        order3_subgroups: profile.count(3) / 2,
        solvable: is_solvable(g),
        cover_ok: cover.is_cover && cover.is_irredundant,
        sub_count: lattice.len(),
        sub_violations,
        quotient_violations,
        quotient_count,
        sigma,
    })
}

fn check<'a>(
    facts: &'a [Facts],
    name: &str,
    claim: &str,
    applies: impl Fn(&Facts) -> bool,
    holds: impl Fn(&'a Facts) -> std::result::Result<(), String>,
) -> PropertyCheck {
    let mut evaluated = 0;
    let mut violations = Vec::new();
    for f in facts.iter().filter(|f| applies(f)) {
        evaluated += 1;
        if let Err(w) = holds(f) {
            violations.push(format!("{}: {w}", f.spec));
        }
    }
    PropertyCheck {
        name: name.into(),
        claim: claim.into(),
        evaluated,
        violations,
    }
}

/// Evaluates every structural claim on each catalog group of order
/// `2..=max_order`. Violations are report content, not errors.
pub fn structural_property_suite(
    catalog: &[CatalogEntry],
    max_order: usize,
) -> Result<PropertyReport> {
    let entries = in_range(catalog, max_order);
    let all: Vec<Facts> = entries
        .par_iter()
        .map(|e| facts(e))
        .collect::<Result<_>>()?;
    let o1 = |f: &Facts| f.mc_orders[0];
    let mut checks = vec![
        check(
            &all,
            "maximal-cyclic-cover",
            "the maximal cyclic subgroups form an irredundant cover",
            |_| true,
            |f| if f.cover_ok { Ok(()) } else { Err("not an irredundant cover".into()) },
        ),
        check(
            &all,
            "exponent-two",
            "o(g1) = 2 iff lambda = |G| - 1",
            |_| true,
            |f| {
                if (o1(f) == 2) == (f.lambda == f.order - 1) {
                    Ok(())
                } else {
                    Err(format!("o(g1) = {}, lambda = {}", o1(f), f.lambda))
                }
            },
        ),
        check(
            &all,
            "max-order-three",
            "o(g1) = 3 implies lambda = |G| - k - 1, k = #subgroups of order 3",
            |f| o1(f) == 3,
            |f| {
                let want = f.order - f.order3_subgroups - 1;
                if f.lambda == want {
                    Ok(())
                } else {
                    Err(format!("lambda = {}, |G| - k - 1 = {want}", f.lambda))
                }
            },
        ),
        check(
            &all,
            "largest-cyclic-bound",
            "o(g1) <= |G| - lambda + 1",
            |_| true,
            |f| {
                if o1(f) + f.lambda <= f.order + 1 {
                    Ok(())
                } else {
                    Err(format!("o(g1) = {}, lambda = {}", o1(f), f.lambda))
                }
            },
        ),
        check(
            &all,
            "bound-attained-dihedral",
            "noncyclic, lambda < |G| - 1 and o(g1) = |G| - lambda + 1 imply G = D(2n) with n = o(g1), other maximal cyclics of order 2",
            |f| !f.cyclic && f.lambda + 1 < f.order && o1(f) == f.order - f.lambda + 1,
            |f| {
                let n = o1(f);
                if f.mc_orders[1..].iter().any(|&o| o != 2) {
                    return Err(format!("maximal cyclic orders {:?}", f.mc_orders));
                }
                let d = build(&format!("D{}", 2 * n)).map_err(|e| e.to_string())?;
                let g = entries
                    .iter()
                    .find(|e| e.spec == f.spec)
                    .map(|e| &e.group)
                    .expect("facts come from entries");
                if are_isomorphic(g, &d).is_some() {
                    Ok(())
                } else {
                    Err(format!("not isomorphic to D{}", 2 * n))
                }
            },
        ),
        check(
            &all,
            "prime-order-bound",
            "k maximal cyclics of prime order p imply lambda <= |G| - k(p - 2) - 1",
            |f| f.mc_orders.iter().any(|&o| is_prime(o)),
            |f| {
                let mut primes: Vec<usize> =
                    f.mc_orders.iter().copied().filter(|&o| is_prime(o)).collect();
                primes.dedup();
                for p in primes {
                    let k = f.mc_orders.iter().filter(|&&o| o == p).count();
                    if f.lambda + k * (p - 2) + 1 > f.order {
                        return Err(format!("p = {p}, k = {k}, lambda = {}", f.lambda));
                    }
                }
                Ok(())
            },
        ),
        check(
            &all,
            "small-gap-solvable",
            "lambda >= |G| - 5 implies G solvable",
            |f| f.lambda + 5 >= f.order,
            |f| if f.solvable { Ok(()) } else { Err("not solvable".into()) },
        ),
        check(
            &all,
            "gap-five-largest-order",
            "lambda = |G| - 5 implies o(g1) in {3, 4, 6}",
            |f| f.lambda + 5 == f.order,
            |f| {
                if [3, 4, 6].contains(&o1(f)) {
                    Ok(())
                } else {
                    Err(format!("o(g1) = {}", o1(f)))
                }
            },
        ),
        check(
            &all,
            "sigma-below-lambda",
            "sigma <= lambda for noncyclic G (where sigma finished in budget)",
            |f| !f.cyclic && f.sigma.is_some(),
            |f| match f.sigma {
                Some(Sigma::Finite(s)) if s <= f.lambda => Ok(()),
                other => Err(format!("sigma = {other:?}, lambda = {}", f.lambda)),
            },
        ),
    ];
    checks.push(PropertyCheck {
        name: "subgroup-monotone".into(),
        claim: "lambda(H) <= lambda(G) for every subgroup H".into(),
        evaluated: all.iter().map(|f| f.sub_count).sum(),
        violations: all.iter().flat_map(|f| f.sub_violations.clone()).collect(),
    });
    checks.push(PropertyCheck {
        name: "quotient-monotone".into(),
        claim: "lambda(G/N) <= lambda(G) for normal N, with equality for N = intersection of maximal cyclics".into(),
        evaluated: all.iter().map(|f| f.quotient_count).sum(),
        violations: all.iter().flat_map(|f| f.quotient_violations.clone()).collect(),
    });
    let pass = checks.iter().all(|c| c.violations.is_empty());
    Ok(PropertyReport {
        max_order,
        checks,
        pass,
    })
}
