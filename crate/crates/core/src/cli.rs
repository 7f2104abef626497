//! Command-line front end. [`run`] parses arguments and [`execute`]
//! dispatches to the library; both return the rendered output instead of
//! printing so the binary stays a thin wrapper.
//!
//! Exit status: 0 on success or a passing check, 1 when a check finds a
//! violation or mismatch, 2 on usage and validation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{structural_property_suite, verify_theorem};
use crate::covers::{lambda, maximal_cyclic_subgroups};
use crate::error::{Error, Result};
use crate::invariants::order_profile;
use crate::iso::are_isomorphic;
use crate::sigma::sigma_exact;
use crate::smallgroups::{enumerate_groups_of_order, load_catalog, CatalogEntry, SHIPPED_CATALOG};
use crate::spec::build;

/// Environment variable naming an alternate catalog file.
pub const CATALOG_ENV: &str = "GROUPLAB_CATALOG";

#[derive(Debug, Parser)]
#[command(
    name = "grouplab",
    version,
    about = "Maximal and minimal covers of finite groups"
)]
pub struct CommandRequest {
    /// Worker threads for catalog-wide work (default: available parallelism)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Suppress diagnostics on stderr
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremSelection {
    One(u8),
    All,
}

fn parse_theorem(s: &str) -> std::result::Result<TheoremSelection, String> {
    match s {
        "all" => Ok(TheoremSelection::All),
        "1" | "2" | "3" | "4" | "5" => Ok(TheoremSelection::One(s.parse().unwrap())),
        _ => Err(format!("expected 1, 2, 3, 4, 5 or all, got `{s}`")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group from a spec and write its Cayley table
    Build {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of maximal cyclic subgroups
    Lambda { spec: String },
    /// Least number of proper subgroups covering the group
    Sigma {
        spec: String,
        #[arg(long, default_value_t = 120)]
        timeout: u64,
    },
    /// Maximal cyclic subgroups, summarized by order
    Covers {
        spec: String,
        /// List every subgroup with its elements
        #[arg(long)]
        list: bool,
    },
    /// Test two specs for isomorphism
    Iso { first: String, second: String },
    /// All groups of order N (at most 16) up to isomorphism
    Enumerate {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Load and check the catalog, then list its entries
    Catalog {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
    /// Check the classification of groups with lambda(G) = |G| - t
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremSelection,
        #[arg(long, default_value_t = 20)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the structural relations between lambda and element orders
    Props {
        #[arg(long, default_value_t = 20)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(pass: bool, stdout: String) -> Outcome {
        Outcome {
            code: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn note(mut self, quiet: bool, msg: String) -> Outcome {
        if !quiet {
            self.stderr.push_str(&msg);
            self.stderr.push('\n');
        }
        self
    }
}

/// Parses `args` (program name first) and executes the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(req) => execute(&req),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

/// Runs a validated request on a worker pool of the requested size.
pub fn execute(req: &CommandRequest) -> Outcome {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = req.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot start worker pool: {e}\n"),
            }
        }
    };
    pool.install(|| match dispatch(req) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e, &req.command),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    })
}

fn exit_code(e: &Error, command: &Command) -> i32 {
    match (e, command) {
        (Error::Catalog(_), Command::Catalog { .. }) => 1,
        _ => 2,
    }
}

/// The catalog named by [`CATALOG_ENV`], or the shipped one.
pub fn catalog(max_order: usize) -> Result<Vec<CatalogEntry>> {
    match std::env::var_os(CATALOG_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::Catalog(format!(
                    "cannot read {}: {e}",
                    PathBuf::from(&path).display()
                ))
            })?;
            load_catalog(&text, max_order)
        }
        None => load_catalog(SHIPPED_CATALOG, max_order),
    }
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(req: &CommandRequest) -> Result<Outcome> {
    let quiet = req.quiet;
    Ok(match &req.command {
        Command::Build { spec, out } => {
            let g = build(spec)?;
            let text = g.to_exchange();
            match out {
                Some(path) => {
                    write_out(path, &text)?;
                    Outcome::ok(String::new()).note(
                        quiet,
                        format!(
                            "wrote {} (order {}) to {}",
                            g.label(),
                            g.order(),
                            path.display()
                        ),
                    )
                }
                None => Outcome::ok(text),
            }
        }
        Command::Lambda { spec } => Outcome::ok(format!("{}\n", lambda(&build(spec)?))),
        Command::Sigma { spec, timeout } => {
            let g = build(spec)?;
            Outcome::ok(format!(
                "{}\n",
                sigma_exact(&g, Duration::from_secs(*timeout))?
            ))
        }
        Command::Covers { spec, list } => {
            let g = build(spec)?;
            let mcs = maximal_cyclic_subgroups(&g);
            let mut s = format!("lambda {}\n", mcs.len());
            if *list {
                for m in &mcs {
                    let _ = writeln!(s, "order {:>3}: {:?}", m.len(), m);
                }
            } else {
                let mut by_order: Vec<(usize, usize)> = Vec::new();
                for m in &mcs {
                    match by_order.last_mut() {
                        Some((o, c)) if *o == m.len() => *c += 1,
                        _ => by_order.push((m.len(), 1)),
                    }
                }
                for (o, c) in by_order {
                    let _ = writeln!(s, "order {o:>3}: {c}");
                }
            }
            Outcome::ok(s)
        }
        Command::Iso { first, second } => {
            let g = build(first)?;
            let h = build(second)?;
            match are_isomorphic(&g, &h) {
                Some(f) => Outcome::ok(format!("isomorphic\nmap {:?}\n", f.forward)),
                None => Outcome::ok("not isomorphic\n".into()),
            }
        }
        Command::Enumerate { n, out } => {
            let groups = enumerate_groups_of_order(*n)?;
            let mut s = format!("{} groups of order {n}\n", groups.len());
            for g in &groups {
                let p = order_profile(g);
                let profile: Vec<String> =
                    p.counts.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                let _ = writeln!(
                    s,
                    "{:<8} abelian={:<5} lambda={:<3} orders {{{}}}",
                    g.label(),
                    g.is_abelian(),
                    lambda(g),
                    profile.join(", ")
                );
            }
            let mut outcome = Outcome::ok(s);
            if let Some(path) = out {
                let text: String = groups
                    .iter()
                    .map(|g| format!("# {}\n{}", g.label(), g.to_exchange()))
                    .collect::<Vec<_>>()
                    .join("\n");
                write_out(path, &text)?;
                outcome = outcome.note(
                    quiet,
                    format!("wrote {} tables to {}", groups.len(), path.display()),
                );
            }
            outcome
        }
        Command::Catalog { max_order } => {
            let cat = catalog(*max_order)?;
            let mut s = format!("{} classes of order 2..={max_order}\n", cat.len());
            for e in &cat {
                let _ = writeln!(
                    s,
                    "{:>3}  {:<16} {:<12} lambda={}",
                    e.order,
                    e.spec,
                    e.name,
                    lambda(&e.group)
                );
            }
            Outcome::ok(s)
        }
        Command::Verify {
            theorem,
            max_order,
            format,
        } => {
            let cat = catalog(*max_order)?;
            let tags: Vec<u8> = match theorem {
                TheoremSelection::One(t) => vec![*t],
                TheoremSelection::All => (1..=5).collect(),
            };
            let reports = tags
                .iter()
                .map(|&t| verify_theorem(t, &cat, *max_order))
                .collect::<Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.pass);
            let text = match (format, theorem) {
                (Format::Json, TheoremSelection::One(_)) => json(&reports[0]),
                (Format::Json, TheoremSelection::All) => json(&reports),
                (Format::Text, _) => {
                    let mut s: String = reports.iter().map(|r| r.render_text()).collect();
                    if reports.len() > 1 {
                        let _ = writeln!(s, "overall: {}", if pass { "PASS" } else { "FAIL" });
                    }
                    s
                }
            };
            Outcome::verdict(pass, text)
        }
        Command::Props { max_order, format } => {
            let cat = catalog(*max_order)?;
            let report = structural_property_suite(&cat, *max_order)?;
            let text = match format {
                Format::Json => json(&report),
                Format::Text => report.render_text(),
            };
            Outcome::verdict(report.pass, text)
        }
    })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
