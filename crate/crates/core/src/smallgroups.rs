//! The universe of test groups.
//!
//! Two sources that check each other: an exhaustive Cayley-table enumerator
//! for orders up to 16, and a curated catalog of constructor specs shipped as
//! a data file.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::iso::{are_isomorphic, find_isomorphism_unchecked, fingerprint, Fingerprint};
use crate::spec::parse_group_spec;

/// Largest order handled by [`enumerate_groups_of_order`].
pub const MAX_ENUMERATION_ORDER: usize = 16;

const NONE: u8 = u8::MAX;

/// Backtracking state for filling a Cayley table with identity 0.
///
/// Cells are decided in order of `max(i, j)`. Values follow the
/// least-number heuristic: elements that have not yet appeared anywhere in
/// the table are interchangeable, so only the smallest of them is tried.
/// Every assignment propagates through the associativity equations
/// `(xy)z = x(yz)` in which the cell takes part.
struct TableSearch {
    n: usize,
    cells: Vec<u8>,
    row_pos: Vec<u8>,
    col_pos: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<(usize, usize, usize)>,
    order: Vec<(usize, usize)>,
}

impl TableSearch {
    fn new(n: usize) -> TableSearch {
        let mut s = TableSearch {
            n,
            cells: vec![NONE; n * n],
            row_pos: vec![NONE; n * n],
            col_pos: vec![NONE; n * n],
            trail: Vec::new(),
            queue: Vec::new(),
            order: Vec::new(),
        };
        for k in 0..n {
            s.set(0, k, k);
            s.set(k, 0, k);
        }
        s.trail.clear();
        for k in 1..n {
            for i in 1..k {
                s.order.push((i, k));
                s.order.push((k, i));
            }
            s.order.push((k, k));
        }
        s
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.cells[a * self.n + b];
        (v != NONE).then_some(v as usize)
    }

    fn set(&mut self, a: usize, b: usize, c: usize) {
        let n = self.n;
        self.cells[a * n + b] = c as u8;
        self.row_pos[a * n + c] = b as u8;
        self.col_pos[b * n + c] = a as u8;
        self.trail.push(a * n + b);
    }

    fn undo_to(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let (a, b) = (cell / n, cell % n);
            let c = self.cells[cell] as usize;
            self.cells[cell] = NONE;
            self.row_pos[a * n + c] = NONE;
            self.col_pos[b * n + c] = NONE;
        }
    }

    /// Records `t[a][b] = c`, returning `false` on a contradiction.
    fn assign(&mut self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n;
        if let Some(v) = self.get(a, b) {
            return v == c;
        }
        if self.row_pos[a * n + c] != NONE || self.col_pos[b * n + c] != NONE {
            return false;
        }
        self.set(a, b, c);
        self.queue.push((a, b, c));
        true
    }

    /// Makes `t[p][q]` and `t[r][s]` equal if one side is known.
    fn equate(&mut self, p: usize, q: usize, r: usize, s: usize) -> bool {
        match (self.get(p, q), self.get(r, s)) {
            (Some(x), Some(y)) => x == y,
            (Some(x), None) => self.assign(r, s, x),
            (None, Some(y)) => self.assign(p, q, y),
            (None, None) => true,
        }
    }

    fn propagate(&mut self) -> bool {
        let n = self.n;
        while let Some((a, b, c)) = self.queue.pop() {
            for z in 0..n {
                // (ab)z = a(bz)
                if let Some(d) = self.get(b, z) {
                    if !self.equate(c, z, a, d) {
                        return false;
                    }
                }
                // (za)b = z(ab)
                if let Some(e) = self.get(z, a) {
                    if !self.equate(e, b, z, c) {
                        return false;
                    }
                }
                // t[z][y] = a  ⇒  (zy)b = z(yb), i.e. t[z][t[y][b]] = c
                let y = self.row_pos[z * n + a];
                if y != NONE {
                    let y = y as usize;
                    match self.get(y, b) {
                        Some(w) => {
                            if !self.assign(z, w, c) {
                                return false;
                            }
                        }
                        None => {
                            let w = self.row_pos[z * n + c];
                            if w != NONE && !self.assign(y, b, w as usize) {
                                return false;
                            }
                        }
                    }
                }
                // t[y][z] = b  ⇒  a(yz) = (ay)z, i.e. t[t[a][y]][z] = c
                let y = self.col_pos[z * n + b];
                if y != NONE {
                    let y = y as usize;
                    match self.get(a, y) {
                        Some(u) => {
                            if !self.assign(u, z, c) {
                                return false;
                            }
                        }
                        None => {
                            let u = self.col_pos[z * n + c];
                            if u != NONE && !self.assign(a, y, u as usize) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn max_mentioned(&self) -> usize {
        let n = self.n;
        let mut mx = 0;
        for a in 1..n {
            for b in 1..n {
                if let Some(v) = self.get(a, b) {
                    mx = mx.max(a).max(b).max(v);
                }
            }
        }
        mx
    }

    fn next_cell(&self, from: usize) -> Option<(usize, usize, usize)> {
        (from..self.order.len()).find_map(|k| {
            let (i, j) = self.order[k];
            self.get(i, j).is_none().then_some((k, i, j))
        })
    }

    /// Candidate values for the next open cell, and that cell's position.
    fn branch(&self, from: usize) -> Option<(usize, usize, usize, Vec<usize>)> {
        let (k, i, j) = self.next_cell(from)?;
        let mx = self.max_mentioned().max(i).max(j);
        let top = (mx + 1).min(self.n - 1);
        Some((k, i, j, (0..=top).collect()))
    }

    fn solve(&mut self, from: usize, out: &mut Vec<Vec<usize>>) {
        let Some((k, i, j, values)) = self.branch(from) else {
            out.push(self.cells.iter().map(|&v| v as usize).collect());
            return;
        };
        for v in values {
            let mark = self.trail.len();
            self.queue.clear();
            if self.assign(i, j, v) && self.propagate() {
                self.solve(k + 1, out);
            }
            self.queue.clear();
            self.undo_to(mark);
        }
    }
}

/// Every Cayley table (up to the symmetry breaking) of order `n`, split over
/// the first decision so the subtrees can run in parallel.
fn raw_tables(n: usize) -> Vec<Vec<usize>> {
    let root = TableSearch::new(n);
    let Some((k, i, j, values)) = root.branch(0) else {
        return vec![root.cells.iter().map(|&v| v as usize).collect()];
    };
    values
        .into_par_iter()
        .map(|v| {
            let mut s = TableSearch::new(n);
            let mut out = Vec::new();
            if s.assign(i, j, v) && s.propagate() {
                s.solve(k + 1, &mut out);
            }
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Merges tables into isomorphism classes, keeping the lexicographically
/// least table of each class. The result does not depend on input order.
fn classes_of(tables: Vec<Vec<usize>>, n: usize) -> Vec<Group> {
    let groups: Vec<(Fingerprint, Group)> = tables
        .into_par_iter()
        .map(|t| {
            let g = Group::from_trusted(n, t, format!("G{n}"));
            (fingerprint(&g), g)
        })
        .collect();
    let mut buckets: BTreeMap<Fingerprint, Vec<Group>> = BTreeMap::new();
    for (fp, g) in groups {
        buckets.entry(fp).or_default().push(g);
    }
    let mut reps: Vec<(Fingerprint, Group)> = buckets
        .into_par_iter()
        .flat_map_iter(|(fp, mut members)| {
            members.sort_by(|a, b| a.table().cmp(b.table()));
            let mut classes: Vec<Group> = Vec::new();
            for g in members {
                if !classes
                    .iter()
                    .any(|r| find_isomorphism_unchecked(r, &g).is_some())
                {
                    classes.push(g);
                }
            }
            classes.into_iter().map(move |g| (fp.clone(), g))
        })
        .collect();
    reps.sort_by(|(fa, a), (fb, b)| fa.cmp(fb).then_with(|| a.table().cmp(b.table())));
    reps.into_iter()
        .enumerate()
        .map(|(i, (_, g))| g.with_label(format!("G{n}#{}", i + 1)))
        .collect()
}

/// All groups of order `n ≤ 16` up to isomorphism, one representative each,
/// in deterministic order.
pub fn enumerate_groups_of_order(n: usize) -> Result<Vec<Group>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::Parameter(format!(
            "enumeration supports orders 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let tables = raw_tables(n);
    let groups = classes_of(tables, n);
    for g in &groups {
        Group::from_table(&g.rows(), g.label())?;
    }
    Ok(groups)
}

/// One line of a catalog file.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub order: usize,
    pub spec: String,
    pub name: String,
    pub group: Group,
}

/// The catalog shipped with the crate.
pub const SHIPPED_CATALOG: &str = include_str!("../data/catalog.txt");

/// Parsed catalog text: entries plus the per-order class counts it declares
/// (`# count: ORDER=K` lines).
#[derive(Debug, Clone)]
pub struct CatalogFile {
    pub lines: Vec<(usize, String, String)>,
    pub counts: BTreeMap<usize, usize>,
}

pub fn parse_catalog(text: &str) -> Result<CatalogFile> {
    let mut lines = Vec::new();
    let mut counts = BTreeMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(decl) = comment.trim().strip_prefix("count:") {
                let parsed = decl.trim().split_once('=').and_then(|(o, k)| {
                    Some((
                        o.trim().parse::<usize>().ok()?,
                        k.trim().parse::<usize>().ok()?,
                    ))
                });
                let (o, k) = parsed.ok_or_else(|| {
                    Error::Catalog(format!("line {}: malformed count declaration", ln + 1))
                })?;
                counts.insert(o, k);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        let [order, spec, name] = fields.as_slice() else {
            return Err(Error::Catalog(format!(
                "line {}: expected `order;spec;name`",
                ln + 1
            )));
        };
        let order = order
            .parse()
            .map_err(|_| Error::Catalog(format!("line {}: bad order `{order}`", ln + 1)))?;
        lines.push((order, spec.to_string(), name.to_string()));
    }
    Ok(CatalogFile { lines, counts })
}

/// Builds and checks a catalog: every spec builds to its declared order,
/// entries of equal order are pairwise non-isomorphic, and each order up to
/// `max_order` has exactly the declared number of classes.
pub fn load_catalog(text: &str, max_order: usize) -> Result<Vec<CatalogEntry>> {
    if !(2..=32).contains(&max_order) {
        return Err(Error::Parameter(format!(
            "catalog max order must be in 2..=32, got {max_order}"
        )));
    }
    let file = parse_catalog(text)?;
    for order in 2..=max_order {
        if !file.counts.contains_key(&order) {
            return Err(Error::Catalog(format!(
                "catalog declares no class count for order {order}; it is not known to be complete there"
            )));
        }
    }
    let selected: Vec<&(usize, String, String)> = file
        .lines
        .iter()
        .filter(|(o, _, _)| (2..=max_order).contains(o))
        .collect();
    let entries: Vec<CatalogEntry> = selected
        .par_iter()
        .map(|(order, spec, name)| {
            let group = parse_group_spec(spec)?.build()?;
            if group.order() != *order {
                return Err(Error::Catalog(format!(
                    "`{spec}` has order {}, declared {order}",
                    group.order()
                )));
            }
            Ok(CatalogEntry {
                order: *order,
                spec: spec.clone(),
                name: name.clone(),
                group: group.with_label(name.clone()),
            })
        })
        .collect::<Result<_>>()?;
    for order in 2..=max_order {
        let same: Vec<&CatalogEntry> = entries.iter().filter(|e| e.order == order).collect();
        let declared = file.counts[&order];
        if same.len() != declared {
            return Err(Error::Catalog(format!(
                "order {order}: {} entries, {declared} declared",
                same.len()
            )));
        }
        for (i, a) in same.iter().enumerate() {
            for b in &same[i + 1..] {
                if are_isomorphic(&a.group, &b.group).is_some() {
                    return Err(Error::Catalog(format!(
                        "`{}` and `{}` are isomorphic",
                        a.spec, b.spec
                    )));
                }
            }
        }
    }
    let mut entries = entries;
    entries.sort_by_key(|a| a.order);
    Ok(entries)
}

/// The shipped catalog restricted to orders `2..=max_order`.
pub fn curated_catalog(max_order: usize) -> Result<Vec<CatalogEntry>> {
    load_catalog(SHIPPED_CATALOG, max_order)
}

/// Matches the enumerated groups of order `n` one-to-one against the catalog
/// entries of that order. Returns, for each enumerated group, the index of
/// its catalog entry.
pub fn cross_validate(catalog: &[CatalogEntry], n: usize) -> Result<Vec<usize>> {
    let enumerated = enumerate_groups_of_order(n)?;
    let entries: Vec<(usize, &CatalogEntry)> = catalog
        .iter()
        .enumerate()
        .filter(|(_, e)| e.order == n)
        .collect();
    if n >= 2 && entries.len() != enumerated.len() {
        return Err(Error::Catalog(format!(
            "order {n}: enumeration found {} classes, catalog lists {}",
            enumerated.len(),
            entries.len()
        )));
    }
    let mut used = vec![false; entries.len()];
    let mut matching = Vec::new();
    for g in &enumerated {
        let hit = entries
            .iter()
            .enumerate()
            .find(|(k, (_, e))| !used[*k] && are_isomorphic(g, &e.group).is_some());
        match hit {
            Some((k, (idx, _))) => {
                used[k] = true;
                matching.push(*idx);
            }
            None if n == 1 => {}
            None => {
                return Err(Error::Catalog(format!(
                    "enumerated group {} of order {n} has no catalog match",
                    g.label()
                )))
            }
        }
    }
    Ok(matching)
}
