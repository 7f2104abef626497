//! Named groups and product constructions.
//!
//! All families are parametrized by total order: `dihedral(8)` is the
//! symmetry group of the square, `dicyclic(8)` is the quaternion group.

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_CAP};
use crate::invariants::{center, is_prime, log_base};
use crate::iso::{automorphisms, element_signatures, greedy_generators};
use crate::set::ElementSet;

/// Families accepted by [`build_named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[n]`
    Cyclic,
    /// `[order]`, order even and at least 4.
    Dihedral,
    /// `[order]`, order divisible by 4 and at least 8.
    Dicyclic,
    /// `[16]`
    Semidihedral,
    /// `[d1, d2, ...]` for `C_d1 × C_d2 × ...`
    Abelian,
    /// `[p, k]`
    ElementaryAbelian,
    /// `[n]`, n ≤ 6
    Symmetric,
    /// `[n]`, n ≤ 6
    Alternating,
    /// `[p]`, p ∈ {2, 3, 5}
    GeneralLinear2,
}

pub fn build_named(family: Family, params: &[usize]) -> Result<Group> {
    let one = || -> Result<usize> {
        match params {
            [x] => Ok(*x),
            _ => Err(Error::Parameter(format!(
                "{family:?} takes exactly one parameter, got {}",
                params.len()
            ))),
        }
    };
    match family {
        Family::Cyclic => cyclic(one()?),
        Family::Dihedral => dihedral(one()?),
        Family::Dicyclic => dicyclic(one()?),
        Family::Semidihedral => semidihedral(one()?),
        Family::Abelian => abelian(params),
        Family::ElementaryAbelian => match params {
            [p, k] => elementary_abelian(*p, *k),
            _ => Err(Error::Parameter("elementary abelian takes (p, k)".into())),
        },
        Family::Symmetric => symmetric(one()?),
        Family::Alternating => alternating(one()?),
        Family::GeneralLinear2 => general_linear_2(one()?),
    }
}

fn table_from(order: usize, label: String, mul: impl Fn(usize, usize) -> usize) -> Group {
    let mut table = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = mul(a, b);
        }
    }
    Group::from_trusted(order, table, label)
}

/// `C_n` with element `k` standing for the `k`-th power of the generator.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Parameter(
            "cyclic group order must be at least 1".into(),
        ));
    }
    if n > DEFAULT_CAP {
        return Err(Error::SizeLimit {
            what: format!("C{n}"),
            cap: DEFAULT_CAP,
        });
    }
    Ok(table_from(n, format!("C{n}"), |a, b| (a + b) % n))
}

/// Dihedral group of the given order `2n`. Element `i + n·j` is `r^i s^j`.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "dihedral group order must be even and at least 4, got {order}"
        )));
    }
    let n = order / 2;
    Ok(table_from(order, format!("D{order}"), |a, b| {
        let (i1, j1) = (a % n, a / n);
        let (i2, j2) = (b % n, b / n);
        let i = if j1 == 0 { i1 + i2 } else { i1 + n - i2 };
        (i % n) + n * ((j1 + j2) % 2)
    }))
}

/// Dicyclic group of order `4m`: `⟨a, x | a^{2m} = 1, x² = a^m, a^x = a⁻¹⟩`.
/// Element `i + 2m·j` is `a^i x^j`. Labeled `Q{order}` for 2-power orders.
pub fn dicyclic(order: usize) -> Result<Group> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(Error::Parameter(format!(
            "dicyclic group order must be divisible by 4 and at least 8, got {order}"
        )));
    }
    let m = order / 4;
    let two_m = 2 * m;
    let label = if order.is_power_of_two() {
        format!("Q{order}")
    } else {
        format!("Dic{order}")
    };
    Ok(table_from(order, label, |a, b| {
        let (i1, j1) = (a % two_m, a / two_m);
        let (i2, j2) = (b % two_m, b / two_m);
        match (j1, j2) {
            (0, _) => (i1 + i2) % two_m + two_m * j2,
            (1, 0) => (i1 + two_m - i2) % two_m + two_m,
            _ => (i1 + two_m - i2 + m) % two_m,
        }
    }))
}

/// `SD16 = ⟨α, β | α⁸ = β² = 1, α^β = α³⟩`. Element `i + 8j` is `α^i β^j`.
pub fn semidihedral(order: usize) -> Result<Group> {
    if order != 16 {
        return Err(Error::Parameter(format!(
            "only the semidihedral group of order 16 is supported, got {order}"
        )));
    }
    Ok(table_from(16, "SD16".into(), |a, b| {
        let (i1, j1) = (a % 8, a / 8);
        let (i2, j2) = (b % 8, b / 8);
        let twist = if j1 == 0 { 1 } else { 3 };
        (i1 + twist * i2) % 8 + 8 * ((j1 + j2) % 2)
    }))
}

/// `C_{d1} × C_{d2} × …`.
pub fn abelian(invariants: &[usize]) -> Result<Group> {
    let mut iter = invariants.iter();
    let first = *iter
        .next()
        .ok_or_else(|| Error::Parameter("abelian type needs at least one factor".into()))?;
    let mut g = cyclic(first)?;
    for &d in iter {
        g = direct_product(&g, &cyclic(d)?)?;
    }
    Ok(g)
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Ok(Group::trivial());
    }
    Ok(abelian(&vec![p; k])?.with_label(if k == 1 {
        format!("C{p}")
    } else {
        format!("C{p}^{k}")
    }))
}

fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    // apply p first, then q
    p.iter().map(|&i| q[i as usize]).collect()
}

fn cycle(n: usize, points: &[usize]) -> Vec<u8> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    for w in 0..points.len() {
        perm[points[w]] = points[(w + 1) % points.len()] as u8;
    }
    perm
}

/// Symmetric group on `n ≤ 6` points, generated by `(0 1)` and the `n`-cycle.
pub fn symmetric(n: usize) -> Result<Group> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parameter(format!(
            "symmetric degree must be 1..=6, got {n}"
        )));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
    }
    let id: Vec<u8> = (0..n as u8).collect();
    Ok(Group::from_closure(
        id,
        &gens,
        |p: &Vec<u8>, q: &Vec<u8>| compose(p, q),
        DEFAULT_CAP,
        format!("S{n}"),
    )?
    .0)
}

/// Alternating group on `n ≤ 6` points, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> Result<Group> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parameter(format!(
            "alternating degree must be 1..=6, got {n}"
        )));
    }
    let gens: Vec<Vec<u8>> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    let id: Vec<u8> = (0..n as u8).collect();
    Ok(Group::from_closure(
        id,
        &gens,
        |p: &Vec<u8>, q: &Vec<u8>| compose(p, q),
        DEFAULT_CAP,
        format!("A{n}"),
    )?
    .0)
}

/// A 2×2 matrix over `Z/p`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub entries: [u32; 4],
    pub modulus: u32,
}

impl Mat2 {
    pub fn new(modulus: u32, entries: [i64; 4]) -> Mat2 {
        let m = modulus as i64;
        Mat2 {
            entries: entries.map(|e| e.rem_euclid(m) as u32),
            modulus,
        }
    }

    pub fn identity(modulus: u32) -> Mat2 {
        Mat2::new(modulus, [1, 0, 0, 1])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = o.entries;
        let p = self.modulus;
        Mat2 {
            entries: [
                (a * e + b * g) % p,
                (a * f + b * h) % p,
                (c * e + d * g) % p,
                (c * f + d * h) % p,
            ],
            modulus: p,
        }
    }

    pub fn det(&self) -> u32 {
        let [a, b, c, d] = self.entries;
        let p = self.modulus;
        (a * d + p * p - (b * c) % p) % p
    }
}

/// Closure of a set of invertible matrices mod `p`; returns the group and the
/// matrix behind each index.
pub fn matrix_group(p: u32, generators: &[Mat2], label: &str) -> Result<(Group, Vec<Mat2>)> {
    if let Some(m) = generators.iter().find(|m| m.modulus != p || m.det() == 0) {
        return Err(Error::Parameter(format!("{m:?} is not invertible mod {p}")));
    }
    Group::from_closure(Mat2::identity(p), generators, Mat2::mul, DEFAULT_CAP, label)
}

/// `GL(2, p)` for `p ∈ {2, 3, 5}`, closed over all invertible matrices listed
/// in lexicographic order.
pub fn general_linear_2(p: usize) -> Result<Group> {
    if ![2, 3, 5].contains(&p) {
        return Err(Error::Parameter(format!(
            "GL(2,p) requires p in {{2,3,5}}, got {p}"
        )));
    }
    let p = p as u32;
    let mut all = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Mat2 {
                        entries: [a, b, c, d],
                        modulus: p,
                    };
                    if m.det() != 0 {
                        all.push(m);
                    }
                }
            }
        }
    }
    Ok(matrix_group(p, &all, &format!("GL(2,{p})"))?.0)
}

/// `G × H` on index pairs: `(g, h)` is element `g·|H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let (m, n) = (g.order(), h.order());
    let order = m
        .checked_mul(n)
        .filter(|&o| o <= DEFAULT_CAP)
        .ok_or_else(|| Error::SizeLimit {
            what: format!("{} x {}", g.label(), h.label()),
            cap: DEFAULT_CAP,
        })?;
    Ok(table_from(
        order,
        format!("{}x{}", g.label(), h.label()),
        |a, b| g.mul(a / n, b / n) * n + h.mul(a % n, b % n),
    ))
}

fn central_involution(g: &Group) -> Result<usize> {
    let invs: Vec<usize> = center(g)
        .iter()
        .filter(|&z| g.element_order(z) == 2)
        .collect();
    match invs.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::Amalgamation(format!(
            "{} has {} central involutions, expected exactly one",
            g.label(),
            invs.len()
        ))),
    }
}

/// Central product amalgamated over the unique central involution of each
/// factor: `(G × H) / ⟨(z_G, z_H)⟩`.
pub fn central_product(g: &Group, h: &Group) -> Result<Group> {
    let zg = central_involution(g)?;
    let zh = central_involution(h)?;
    let product = direct_product(g, h)?;
    let n = ElementSet::from_elements(product.order(), [0, zg * h.order() + zh]);
    let (q, _) = product.quotient(&n)?;
    Ok(q.with_label(format!("{}*{}", g.label(), h.label())))
}

/// A homomorphism `H → Aut(N)`, stored as one permutation of `N` per element
/// of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    maps: Vec<Vec<usize>>,
}

fn is_automorphism(n: &Group, f: &[usize]) -> bool {
    if f.len() != n.order() {
        return false;
    }
    let mut hit = vec![false; n.order()];
    for &y in f {
        if y >= n.order() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    n.elements()
        .all(|a| n.elements().all(|b| f[n.mul(a, b)] == n.mul(f[a], f[b])))
}

impl Action {
    pub fn trivial(n: &Group, h: &Group) -> Action {
        Action {
            maps: vec![n.elements().collect(); h.order()],
        }
    }

    /// Extends automorphisms assigned to generators of `H` to the whole of
    /// `H`, checking that each image is an automorphism and that the
    /// assignment is compatible with the relations of `H`.
    pub fn from_generator_images(
        n: &Group,
        h: &Group,
        generators: &[usize],
        images: &[Vec<usize>],
    ) -> Result<Action> {
        if generators.len() != images.len() {
            return Err(Error::Action("one image per generator is required".into()));
        }
        for (g, f) in generators.iter().zip(images) {
            if *g >= h.order() {
                return Err(Error::Action(format!("generator {g} out of range")));
            }
            if !is_automorphism(n, f) {
                return Err(Error::Action(format!(
                    "image of generator {g} is not an automorphism of {}",
                    n.label()
                )));
            }
        }
        let mut maps: Vec<Option<Vec<usize>>> = vec![None; h.order()];
        maps[0] = Some(n.elements().collect());
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for (&g, f) in generators.iter().zip(images) {
                let xg = h.mul(x, g);
                let fx = maps[x].as_ref().unwrap();
                let composed: Vec<usize> = f.iter().map(|&y| fx[y]).collect();
                match &maps[xg] {
                    None => {
                        maps[xg] = Some(composed);
                        frontier.push(xg);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::Action(format!(
                            "assignment is not compatible with the relations of {}",
                            h.label()
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let maps: Option<Vec<Vec<usize>>> = maps.into_iter().collect();
        let maps =
            maps.ok_or_else(|| Error::Action(format!("generators do not generate {}", h.label())))?;
        Action::from_maps(n, h, maps)
    }

    /// Validates a full table of automorphisms indexed by the elements of `H`.
    pub fn from_maps(n: &Group, h: &Group, maps: Vec<Vec<usize>>) -> Result<Action> {
        if maps.len() != h.order() {
            return Err(Error::Action(
                "one automorphism per element of H is required".into(),
            ));
        }
        for (x, f) in maps.iter().enumerate() {
            if !is_automorphism(n, f) {
                return Err(Error::Action(format!(
                    "map for element {x} is not an automorphism"
                )));
            }
        }
        for a in h.elements() {
            for b in h.elements() {
                let ab = &maps[h.mul(a, b)];
                if n.elements().any(|x| ab[x] != maps[a][maps[b][x]]) {
                    return Err(Error::Action(format!(
                        "action is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Action { maps })
    }

    pub fn map(&self, h: usize) -> &[usize] {
        &self.maps[h]
    }
}

/// `N ⋊ H` with `(n₁, h₁)(n₂, h₂) = (n₁·φ_{h₁}(n₂), h₁h₂)`; `(n, h)` is element
/// `n·|H| + h`. Conjugating `(n, 1)` by `(1, h)⁻¹` gives `(φ_h(n), 1)`.
pub fn semidirect_product(n: &Group, h: &Group, action: &Action, label: &str) -> Result<Group> {
    if action.maps.len() != h.order() || action.maps.iter().any(|m| m.len() != n.order()) {
        return Err(Error::Action(
            "action does not match the operand groups".into(),
        ));
    }
    let k = h.order();
    let order = n
        .order()
        .checked_mul(k)
        .filter(|&o| o <= DEFAULT_CAP)
        .ok_or_else(|| Error::SizeLimit {
            what: label.into(),
            cap: DEFAULT_CAP,
        })?;
    Ok(table_from(order, label.into(), |a, b| {
        let (n1, h1) = (a / k, a % k);
        let (n2, h2) = (b / k, b % k);
        n.mul(n1, action.maps[h1][n2]) * k + h.mul(h1, h2)
    }))
}

/// Generators used for registered actions when none are supplied: the least
/// generator for cyclic groups, the greedy generating set otherwise.
pub fn default_generators(h: &Group) -> Vec<usize> {
    if h.order() == 1 {
        return vec![];
    }
    if let Some(g) = h.elements().find(|&x| h.element_order(x) == h.order()) {
        return vec![g];
    }
    greedy_generators(h, &element_signatures(h))
}

/// Registered action names:
///
/// * `triv`: trivial action.
/// * `inv`: `|H| = 2`, `N` abelian; the involution inverts `N`.
/// * `pow<k>`: `H` and `N` cyclic; the generator of `H` acts by `x ↦ x^k`.
/// * `aut<k>`: `H` cyclic; the generator acts by the first automorphism of
///   `N` of order `k` in the deterministic automorphism listing.
/// * `sgn<bits>`: `N` abelian; generator `i` of `H` inverts `N` when bit `i`
///   is `1` and acts trivially when it is `0`.
pub fn registered_action(n: &Group, h: &Group, h_gens: &[usize], name: &str) -> Result<Action> {
    let identity: Vec<usize> = n.elements().collect();
    let inversion: Vec<usize> = n.elements().map(|x| n.inv(x)).collect();
    let need_abelian = || {
        if n.is_abelian() {
            Ok(())
        } else {
            Err(Error::Action(format!(
                "`{name}` requires an abelian normal factor"
            )))
        }
    };
    let need_cyclic_h = || {
        if h.is_cyclic() && h_gens.len() == 1 {
            Ok(h_gens[0])
        } else {
            Err(Error::Action(format!(
                "`{name}` requires a cyclic complement"
            )))
        }
    };
    if name == "triv" {
        return Ok(Action::trivial(n, h));
    }
    if name == "inv" {
        need_abelian()?;
        if h.order() != 2 {
            return Err(Error::Action(
                "`inv` requires a complement of order 2".into(),
            ));
        }
        return Action::from_generator_images(n, h, &[1], &[inversion]);
    }
    if let Some(k) = name.strip_prefix("pow") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Action(format!("bad exponent in `{name}`")))?;
        if !n.is_cyclic() {
            return Err(Error::Action(
                "`pow` requires a cyclic normal factor".into(),
            ));
        }
        let gen = need_cyclic_h()?;
        let image: Vec<usize> = n.elements().map(|x| n.pow(x, k as i64)).collect();
        return Action::from_generator_images(n, h, &[gen], &[image]);
    }
    if let Some(k) = name.strip_prefix("aut") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Action(format!("bad order in `{name}`")))?;
        let gen = need_cyclic_h()?;
        let auto = automorphisms(n)
            .into_iter()
            .find(|f| permutation_order(f) == k)
            .ok_or_else(|| {
                Error::Action(format!("{} has no automorphism of order {k}", n.label()))
            })?;
        return Action::from_generator_images(n, h, &[gen], &[auto]);
    }
    if let Some(bits) = name.strip_prefix("sgn") {
        need_abelian()?;
        if bits.len() != h_gens.len() || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Action(format!(
                "`{name}` needs one 0/1 flag per generator of {} ({} generators)",
                h.label(),
                h_gens.len()
            )));
        }
        let images: Vec<Vec<usize>> = bits
            .chars()
            .map(|c| {
                if c == '1' {
                    inversion.clone()
                } else {
                    identity.clone()
                }
            })
            .collect();
        return Action::from_generator_images(n, h, h_gens, &images);
    }
    Err(Error::Action(format!("unknown action `{name}`")))
}

fn permutation_order(f: &[usize]) -> usize {
    let mut k = 1;
    let mut cur: Vec<usize> = f.to_vec();
    while cur.iter().enumerate().any(|(i, &y)| i != y) {
        cur = cur.iter().map(|&y| f[y]).collect();
        k += 1;
    }
    k
}

/// Semidirect product with a registered action and default generators.
pub fn semidirect_named(n: &Group, h: &Group, name: &str) -> Result<Group> {
    let gens = default_generators(h);
    let action = registered_action(n, h, &gens, name)?;
    semidirect_product(
        n,
        h,
        &action,
        &format!("{}:{}[{name}]", n.label(), h.label()),
    )
}

/// Checks that `order` is a power of a prime; used for quaternion atoms.
pub(crate) fn is_two_power(order: usize) -> bool {
    log_base(order, 2).is_some()
}
