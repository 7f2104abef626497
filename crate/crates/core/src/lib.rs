//! Finite groups as Cayley tables, and the two cover invariants
//! λ(G) (largest irredundant cover by subgroups, equal to the number of
//! maximal cyclic subgroups) and σ(G) (smallest cover by proper subgroups).
//!
//! ```
//! use grouplab::{build, lambda};
//!
//! let g = build("D8xC2").unwrap();
//! assert_eq!(g.order(), 16);
//! assert_eq!(lambda(&g), 12);
//! ```
//!
//! Groups come from the spec language in [`spec`] or the constructors in
//! [`constructors`]; [`smallgroups`] enumerates and catalogs small groups,
//! and [`classify`] checks which of them have λ(G) close to |G|.

pub mod classify;
pub mod cli;
pub mod constructors;
pub mod covers;
mod error;
pub mod group;
pub mod invariants;
pub mod iso;
pub mod set;
pub mod sigma;
pub mod smallgroups;
pub mod spec;
pub mod subgroups;

pub use covers::{lambda, maximal_cyclic_subgroups};
pub use error::{Axiom, Error, Result};
pub use group::Group;
pub use iso::are_isomorphic;
pub use set::ElementSet;
pub use sigma::{sigma_exact, Sigma};
pub use spec::{build, parse_group_spec, GroupSpec};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/building.md")]
    mod building {}
    #[doc = include_str!("../../../book/src/lambda.md")]
    mod lambda {}
    #[doc = include_str!("../../../book/src/sigma.md")]
    mod sigma {}
    #[doc = include_str!("../../../book/src/small-groups.md")]
    mod small_groups {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
