//! The group-spec language.
//!
//! ```text
//! spec := unit (("x" | "*") unit)*          left-associative; x direct, * central
//! unit := atom | atom ":" atom "[" name "]" semidirect with a registered action
//! atom := "C"int("^"int)? | "D"int | "Q"int | "Dic"int | "SD16"
//!       | "S"int | "A"int | "GL(2,"int")"
//! ```
//!
//! Atoms are parametrized by total order, so `D8` is the dihedral group of
//! order 8. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::constructors::{self, default_generators, is_two_power};
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// `C n` or `C n^k` (the `k`-fold direct power).
    Cyclic {
        n: usize,
        power: Option<usize>,
    },
    Dihedral(usize),
    Quaternion(usize),
    Dicyclic(usize),
    Semidihedral16,
    Symmetric(usize),
    Alternating(usize),
    GeneralLinear2(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unit {
    Atom(Atom),
    Semidirect {
        normal: Atom,
        complement: Atom,
        action: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOp {
    Direct,
    Central,
}

/// A parsed group spec: a first unit followed by left-associative products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub first: Unit,
    pub rest: Vec<(ProductOp, Unit)>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic { n, power: None } => write!(f, "C{n}"),
            Atom::Cyclic { n, power: Some(k) } => write!(f, "C{n}^{k}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion(n) => write!(f, "Q{n}"),
            Atom::Dicyclic(n) => write!(f, "Dic{n}"),
            Atom::Semidihedral16 => write!(f, "SD16"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::GeneralLinear2(p) => write!(f, "GL(2,{p})"),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Atom(a) => write!(f, "{a}"),
            Unit::Semidirect {
                normal,
                complement,
                action,
            } => write!(f, "{normal}:{complement}[{action}]"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.first)?;
        for (op, unit) in &self.rest {
            let sym = match op {
                ProductOp::Direct => 'x',
                ProductOp::Central => '*',
            };
            write!(f, "{sym}{unit}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn new(src: &str) -> Parser<'_> {
        Parser {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            src,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, lit: &str) -> bool {
        let n = lit.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .map(|&(_, c)| c)
                .eq(lit.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.err(format!("expected `{lit}`"))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat("Dic") {
            return Ok(Atom::Dicyclic(self.int()?));
        }
        if self.eat("SD") {
            let at = self.pos;
            let n = self.int()?;
            if n != 16 {
                self.pos = at;
                return self.err("only SD16 is available");
            }
            return Ok(Atom::Semidihedral16);
        }
        if self.eat("GL(2,") {
            let p = self.int()?;
            self.expect(")")?;
            return Ok(Atom::GeneralLinear2(p));
        }
        if self.eat("C") {
            let n = self.int()?;
            let power = if self.eat("^") {
                Some(self.int()?)
            } else {
                None
            };
            return Ok(Atom::Cyclic { n, power });
        }
        if self.eat("D") {
            return Ok(Atom::Dihedral(self.int()?));
        }
        if self.eat("Q") {
            return Ok(Atom::Quaternion(self.int()?));
        }
        if self.eat("S") {
            return Ok(Atom::Symmetric(self.int()?));
        }
        if self.eat("A") {
            return Ok(Atom::Alternating(self.int()?));
        }
        self.err("expected a group atom (C, D, Q, Dic, SD16, S, A, GL(2,p))")
    }

    fn unit(&mut self) -> Result<Unit> {
        let normal = self.atom()?;
        if !self.eat(":") {
            return Ok(Unit::Atom(normal));
        }
        let complement = self.atom()?;
        self.expect("[")?;
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an action name");
        }
        let action = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        self.expect("]")?;
        Ok(Unit::Semidirect {
            normal,
            complement,
            action,
        })
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let first = self.unit()?;
        let mut rest = Vec::new();
        loop {
            let op = if self.eat("x") {
                ProductOp::Direct
            } else if self.eat("*") {
                ProductOp::Central
            } else {
                break;
            };
            rest.push((op, self.unit()?));
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(GroupSpec { first, rest })
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    Parser::new(text).spec()
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Builds an atom together with its canonical generators.
fn build_atom(atom: &Atom) -> Result<(Group, Vec<usize>)> {
    let label = atom.to_string();
    let (group, gens) = match *atom {
        Atom::Cyclic { n, power: None } => {
            let g = constructors::cyclic(n)?;
            let gens = if n > 1 { vec![1] } else { vec![] };
            (g, gens)
        }
        Atom::Cyclic { n, power: Some(k) } => {
            if n == 0 || k == 0 {
                return Err(Error::Parameter(format!("{atom} needs n >= 1 and k >= 1")));
            }
            let g = constructors::abelian(&vec![n; k])?;
            let gens = if n > 1 {
                (0..k).map(|f| n.pow((k - 1 - f) as u32)).collect()
            } else {
                vec![]
            };
            (g, gens)
        }
        Atom::Dihedral(order) => (constructors::dihedral(order)?, vec![1, order / 2]),
        Atom::Quaternion(order) => {
            if !is_two_power(order) || order < 8 {
                return Err(Error::Parameter(format!(
                    "generalized quaternion order must be a power of 2 and at least 8, got {order}"
                )));
            }
            (constructors::dicyclic(order)?, vec![1, order / 2])
        }
        Atom::Dicyclic(order) => (constructors::dicyclic(order)?, vec![1, order / 2]),
        Atom::Semidihedral16 => (constructors::semidihedral(16)?, vec![1, 8]),
        Atom::Symmetric(n) => {
            let g = constructors::symmetric(n)?;
            let gens = default_generators(&g);
            (g, gens)
        }
        Atom::Alternating(n) => {
            let g = constructors::alternating(n)?;
            let gens = default_generators(&g);
            (g, gens)
        }
        Atom::GeneralLinear2(p) => {
            let g = constructors::general_linear_2(p)?;
            let gens = default_generators(&g);
            (g, gens)
        }
    };
    Ok((group.with_label(label), gens))
}

fn build_unit(unit: &Unit) -> Result<Group> {
    match unit {
        Unit::Atom(a) => Ok(build_atom(a)?.0),
        Unit::Semidirect {
            normal,
            complement,
            action,
        } => {
            let (n, _) = build_atom(normal)?;
            let (h, gens) = build_atom(complement)?;
            let act = constructors::registered_action(&n, &h, &gens, action)?;
            constructors::semidirect_product(&n, &h, &act, &unit.to_string())
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        let mut g = build_unit(&self.first)?;
        for (op, unit) in &self.rest {
            let h = build_unit(unit)?;
            g = match op {
                ProductOp::Direct => constructors::direct_product(&g, &h)?,
                ProductOp::Central => constructors::central_product(&g, &h)?,
            };
        }
        Ok(g.with_label(self.to_string()))
    }
}

/// Parses and builds in one step.
pub fn build(text: &str) -> Result<Group> {
    parse_group_spec(text)?.build()
}
