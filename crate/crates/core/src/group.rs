//! Finite groups as explicit multiplication tables.
//!
//! Every group in this crate is a [`Group`]: an `n × n` table over the
//! indices `0..n`, with `0` as the identity. Groups are built either from a
//! table ([`Group::from_table`]), by closing a set of generators under an
//! associative product ([`Group::from_closure`]), or by one of the
//! constructors in [`crate::constructors`].

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::OnceLock;

use crate::error::{Axiom, Error, Result};
use crate::set::ElementSet;

/// Default cap on the size of a closure or product.
pub const DEFAULT_CAP: usize = 10_000;

/// Tables up to this order get the full associativity loop.
const FULL_ASSOC_CHECK: usize = 256;

#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    label: String,
    orders: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from a flat table whose axioms are already known to hold.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>, label: impl Into<String>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("trusted table has inverses");
        }
        Group {
            order,
            table,
            inverses,
            label: label.into(),
            orders: OnceLock::new(),
        }
    }

    /// Validates a Cayley table and returns the group it defines.
    ///
    /// Checks, in order: shape and entry range, the Latin-square property,
    /// existence of a two-sided identity, inverses, and associativity. The
    /// first violated axiom is reported with a witness. If the identity is
    /// not at index 0 the elements are relabeled by swapping it into place.
    pub fn from_table(rows: &[Vec<usize>], label: impl Into<String>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("table is empty".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Shape(format!("row {i} has entry {v} >= {n}")));
            }
        }
        let at = |i: usize, j: usize| rows[i][j];

        // Latin square: each row and column is a permutation.
        for i in 0..n {
            let mut seen_row = vec![usize::MAX; n];
            let mut seen_col = vec![usize::MAX; n];
            for j in 0..n {
                let v = at(i, j);
                if seen_row[v] != usize::MAX {
                    return Err(Error::Axiom {
                        axiom: Axiom::Latin,
                        witness: vec![i, seen_row[v], j],
                        detail: format!("row {i} repeats value {v}"),
                    });
                }
                seen_row[v] = j;
                let w = at(j, i);
                if seen_col[w] != usize::MAX {
                    return Err(Error::Axiom {
                        axiom: Axiom::Latin,
                        witness: vec![seen_col[w], j, i],
                        detail: format!("column {i} repeats value {w}"),
                    });
                }
                seen_col[w] = j;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::Axiom {
                axiom: Axiom::Identity,
                witness: vec![],
                detail: "no two-sided identity element".into(),
            })?;

        // Relabel so that the identity is 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(at(i, j));
            }
        }

        let mut inverses = vec![0; n];
        for (i, inv) in inverses.iter_mut().enumerate() {
            let right = (0..n).find(|&j| table[i * n + j] == 0);
            match right {
                Some(j) if table[j * n + i] == 0 => *inv = j,
                _ => {
                    return Err(Error::Axiom {
                        axiom: Axiom::Inverse,
                        witness: vec![i],
                        detail: format!("element {i} has no two-sided inverse"),
                    })
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::Axiom {
                            axiom: Axiom::Associativity,
                            witness: vec![a, b, c],
                            detail: format!("(x{a}·x{b})·x{c} != x{a}·(x{b}·x{c})"),
                        });
                    }
                }
            }
        }

        Ok(Group {
            order: n,
            table,
            inverses,
            label: label.into(),
            orders: OnceLock::new(),
        })
    }

    /// Closes `generators` under `mul`, numbering elements breadth-first from
    /// the identity (right multiplication by each generator, in the given
    /// order). Returns the group together with the concrete elements, so that
    /// `elements[i]` is the value behind index `i`.
    pub fn from_closure<T, F>(
        identity: T,
        generators: &[T],
        mul: F,
        cap: usize,
        label: impl Into<String>,
    ) -> Result<(Group, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = mul(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(Error::SizeLimit {
                            what: "closure".into(),
                            cap,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }

        let n = elements.len();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = mul(&elements[i], &elements[j]);
                table[i * n + j] = *index.get(&p).ok_or_else(|| Error::Axiom {
                    axiom: Axiom::Latin,
                    witness: vec![i, j],
                    detail: "product leaves the generated set".into(),
                })?;
            }
        }
        let group = Self::check_closed_table(n, table, label.into())?;
        Ok((group, elements))
    }

    /// Cheap validation for tables produced by an associative rule: identity
    /// and inverse laws in full, associativity on a deterministic sample
    /// (or in full for small tables).
    fn check_closed_table(n: usize, table: Vec<usize>, label: String) -> Result<Group> {
        for j in 0..n {
            if table[j] != j || table[j * n] != j {
                return Err(Error::Axiom {
                    axiom: Axiom::Identity,
                    witness: vec![j],
                    detail: "element 0 is not the identity".into(),
                });
            }
        }
        let mut inverses = vec![usize::MAX; n];
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] {
                    return Err(Error::Axiom {
                        axiom: Axiom::Latin,
                        witness: vec![i, j],
                        detail: format!("row {i} repeats value {v}"),
                    });
                }
                seen[v] = true;
                if v == 0 {
                    inverses[i] = j;
                }
            }
        }
        for i in 0..n {
            if table[inverses[i] * n + i] != 0 {
                return Err(Error::Axiom {
                    axiom: Axiom::Inverse,
                    witness: vec![i],
                    detail: "left and right inverses differ".into(),
                });
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                return Err(Error::Axiom {
                    axiom: Axiom::Associativity,
                    witness: vec![a, b, c],
                    detail: "product rule is not associative on the closure".into(),
                });
            }
            Ok(())
        };
        if n <= FULL_ASSOC_CHECK / 4 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Spot check along a fixed stride.
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..20_000 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let (a, b, c) = (
                    (state % n as u64) as usize,
                    ((state >> 21) % n as u64) as usize,
                    ((state >> 42) % n as u64) as usize,
                );
                check(a, b, c)?;
            }
        }
        Ok(Group {
            order: n,
            table,
            inverses,
            label,
            orders: OnceLock::new(),
        })
    }

    pub fn trivial() -> Group {
        Group::from_trusted(1, vec![0], "C1")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    /// Row-major flat view of the table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `a^k` for any integer `k` (negative powers use the inverse).
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let (mut base, mut e) = if k < 0 {
            (self.inv(a), k.unsigned_abs())
        } else {
            (a, k as u64)
        };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Commutator `[a,b] = a⁻¹b⁻¹ab`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inv(a), self.inv(b)), ab)
    }

    /// Conjugate `a^b = b⁻¹ab`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders().contains(&self.order)
    }

    /// The cyclic subgroup `⟨x⟩`.
    pub fn cyclic_subgroup(&self, x: usize) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        let mut y = 0;
        loop {
            s.insert(y);
            y = self.mul(y, x);
            if y == 0 {
                break;
            }
        }
        s
    }

    /// Smallest subgroup containing `seeds`. Empty seeds give `{1}`.
    pub fn generated_subgroup(&self, seeds: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = seeds.iter().filter(|&x| x != 0).collect();
        let s = self.closure_of(&gens);
        debug_assert_eq!(self.order % s.len(), 0, "Lagrange");
        s
    }

    /// Subgroup generated by a list of elements.
    pub fn closure_of(&self, gens: &[usize]) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        s.insert(0);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if s.insert(y) {
                    frontier.push(y);
                }
            }
        }
        s
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.parent_order() == self.order
            && s.contains(0)
            && s.iter()
                .all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    fn require_subgroup(&self, s: &ElementSet) -> Result<()> {
        if s.parent_order() != self.order {
            return Err(Error::NotSubgroup(format!(
                "set belongs to a group of order {}, not {}",
                s.parent_order(),
                self.order
            )));
        }
        if !s.contains(0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in s.iter() {
            for b in s.iter() {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "product of {a} and {b} leaves the set"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Returns a conjugation witness `(element, conjugator)` if `s` is not
    /// normal, `None` if it is. Assumes `s` is a subgroup.
    fn normality_witness(&self, s: &ElementSet) -> Option<(usize, usize)> {
        for g in 0..self.order {
            for a in s.iter() {
                if !s.contains(self.conjugate(a, g)) {
                    return Some((a, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && self.normality_witness(s).is_none()
    }

    /// The quotient `G/N` and the projection `G → G/N`.
    ///
    /// Cosets are numbered by their least element, so the coset of the
    /// identity is 0.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(Group, Vec<usize>)> {
        self.require_subgroup(normal)?;
        if let Some((element, conjugator)) = self.normality_witness(normal) {
            return Err(Error::NotNormal {
                element,
                conjugator,
            });
        }
        let n = self.order;
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for h in normal.iter() {
                projection[self.mul(x, h)] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = projection[self.mul(reps[i], reps[j])];
            }
        }
        for a in 0..n {
            for b in 0..n {
                assert_eq!(
                    projection[self.mul(a, b)],
                    table[projection[a] * m + projection[b]],
                    "projection is a homomorphism"
                );
            }
        }
        let label = format!("{}/N{}", self.label, normal.len());
        Ok((Group::from_trusted(m, table, label), projection))
    }

    /// The subgroup `s` as a standalone group, with the embedding back into
    /// `self`. Elements keep their relative order, so the identity stays 0.
    pub fn induced(&self, s: &ElementSet) -> Result<(Group, Vec<usize>)> {
        self.require_subgroup(s)?;
        let embedding = s.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i;
        }
        let m = embedding.len();
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = local[self.mul(embedding[i], embedding[j])];
            }
        }
        let label = format!("{}<{}>", self.label, m);
        Ok((Group::from_trusted(m, table, label), embedding))
    }

    /// Serializes to the plain-text exchange format: `order n` followed by
    /// `n` rows of space-separated indices.
    pub fn to_exchange(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for row in self.table.chunks(self.order) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the exchange format written by [`Group::to_exchange`] and
    /// validates the table. Index 0 must be the identity.
    pub fn from_exchange(text: &str, label: impl Into<String>) -> Result<Group> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or(Error::Exchange {
            line: 1,
            message: "missing header".into(),
        })?;
        let n: usize = header
            .trim()
            .strip_prefix("order")
            .and_then(|rest| rest.trim().parse().ok())
            .filter(|&n: &usize| n > 0)
            .ok_or(Error::Exchange {
                line: hl + 1,
                message: "expected `order n` with n >= 1".into(),
            })?;
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines.by_ref().take(n) {
            let row: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse).collect();
            rows.push(row.map_err(|_| Error::Exchange {
                line: ln + 1,
                message: "non-integer entry".into(),
            })?);
        }
        if rows.len() != n {
            return Err(Error::Exchange {
                line: hl + 1,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::Exchange {
                line: ln + 1,
                message: "trailing content after table".into(),
            });
        }
        if rows[0].iter().enumerate().any(|(j, &v)| v != j) {
            return Err(Error::Exchange {
                line: hl + 2,
                message: "index 0 must be the identity".into(),
            });
        }
        Group::from_table(&rows, label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
        // apply p, then q
        p.iter().map(|&i| q[i as usize]).collect()
    }

    fn s3() -> Group {
        let id = vec![0u8, 1, 2];
        let t = vec![1u8, 0, 2];
        let c = vec![1u8, 2, 0];
        Group::from_closure(
            id,
            &[t, c],
            |p: &Vec<u8>, q: &Vec<u8>| compose(p, q),
            DEFAULT_CAP,
            "S3",
        )
        .unwrap()
        .0
    }

    #[test]
    fn closure_of_transposition_and_three_cycle() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let mut profile: Vec<usize> = g.element_orders().to_vec();
        profile.sort();
        assert_eq!(profile, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let (g, elems) = Group::from_closure(
            vec![0u8],
            &[],
            |p: &Vec<u8>, q: &Vec<u8>| compose(p, q),
            DEFAULT_CAP,
            "1",
        )
        .unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(elems.len(), 1);
    }

    #[test]
    fn closure_respects_cap() {
        let add = |a: &u64, b: &u64| (a + b) % 100;
        let err = Group::from_closure(0u64, &[1], add, 50, "C100").unwrap_err();
        assert!(matches!(err, Error::SizeLimit { cap: 50, .. }));
    }

    #[test]
    fn closure_rejects_non_group_rule() {
        // max is associative with identity 0 but has no inverses
        let err = Group::from_closure(0u8, &[1, 2], |a, b| *a.max(b), 100, "bad").unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
    }

    #[test]
    fn validate_c2() {
        let g = Group::from_table(&[vec![0, 1], vec![1, 0]], "C2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn validate_reports_latin_violation() {
        let err = Group::from_table(&[vec![0, 0], vec![1, 0]], "x").unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom {
                axiom: Axiom::Latin,
                ..
            }
        ));
    }

    #[test]
    fn validate_normalizes_identity() {
        // C2 with the identity at index 1
        let g = Group::from_table(&[vec![1, 0], vec![0, 1]], "C2").unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn validate_rejects_missing_identity() {
        let rows = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        let err = Group::from_table(&rows, "x").unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom {
                axiom: Axiom::Identity,
                ..
            }
        ));
    }

    #[test]
    fn nonassociative_loop_of_order_five() {
        // Brute-force search for a 5x5 Latin square with identity row and
        // column 0 and two-sided inverses that fails associativity.
        fn search(rows: &mut Vec<Vec<usize>>, cell: usize) -> Option<Vec<Vec<usize>>> {
            let n = 5;
            if cell == (n - 1) * (n - 1) {
                let assoc = (0..n).all(|a| {
                    (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]]))
                });
                let inverses = (0..n).all(|a| (0..n).any(|b| rows[a][b] == 0 && rows[b][a] == 0));
                return if assoc || !inverses {
                    None
                } else {
                    Some(rows.clone())
                };
            }
            let (i, j) = (1 + cell / (n - 1), 1 + cell % (n - 1));
            for v in 0..n {
                if (0..j).any(|k| rows[i][k] == v) || (0..i).any(|k| rows[k][j] == v) {
                    continue;
                }
                rows[i][j] = v;
                if let Some(found) = search(rows, cell + 1) {
                    return Some(found);
                }
            }
            rows[i][j] = usize::MAX;
            None
        }
        let mut rows = vec![vec![usize::MAX; 5]; 5];
        for (k, row) in rows.iter_mut().enumerate() {
            row[0] = k;
        }
        rows[0] = (0..5).collect();
        let table = search(&mut rows, 0).expect("a nonassociative loop of order 5 exists");
        let err = Group::from_table(&table, "loop").unwrap_err();
        match err {
            Error::Axiom {
                axiom: Axiom::Associativity,
                witness,
                ..
            } => {
                let (a, b, c) = (witness[0], witness[1], witness[2]);
                assert_ne!(table[table[a][b]][c], table[a][table[b][c]]);
            }
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn generated_and_quotient() {
        let g = s3();
        let three = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let c3 = g.cyclic_subgroup(three);
        assert_eq!(c3.len(), 3);
        assert!(g.is_normal(&c3));
        let (q, proj) = g.quotient(&c3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[0], 0);
        let two = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let c2 = g.cyclic_subgroup(two);
        assert!(matches!(g.quotient(&c2), Err(Error::NotNormal { .. })));
        let not_sub = ElementSet::from_elements(6, [0, two, three]);
        assert!(matches!(g.quotient(&not_sub), Err(Error::NotSubgroup(_))));
        let (whole, _) = g.quotient(&ElementSet::full(6)).unwrap();
        assert_eq!(whole.order(), 1);
    }

    #[test]
    fn induced_subgroup_keeps_identity() {
        let g = s3();
        let three = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let (h, emb) = g.induced(&g.cyclic_subgroup(three)).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(emb[0], 0);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(emb[h.mul(a, b)], g.mul(emb[a], emb[b]));
            }
        }
    }

    #[test]
    fn exchange_round_trip_and_errors() {
        let g = s3();
        let text = g.to_exchange();
        let back = Group::from_exchange(&text, "S3").unwrap();
        assert_eq!(back.table(), g.table());
        assert!(matches!(
            Group::from_exchange("order 2\n0 1\n", "x"),
            Err(Error::Exchange { .. })
        ));
        assert!(matches!(
            Group::from_exchange("order 2\n1 0\n0 1\n", "x"),
            Err(Error::Exchange { .. })
        ));
        assert!(matches!(
            Group::from_exchange("size 2\n", "x"),
            Err(Error::Exchange { .. })
        ));
    }
}
