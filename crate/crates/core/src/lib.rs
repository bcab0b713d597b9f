//! Exhaustive checking of generalized closed/open set classes and
//! normality-type separation axioms on finite topological spaces.
//!
//! The crate is organized bottom-up:
//!
//! - [`mask`]: subsets as bit masks.
//! - [`space`]: validated topologies, closure/interior/θ-closure, space files.
//! - [`classes`]: set-class predicates and class closure/interior operators.
//! - [`axioms`]: separation axioms with witnesses and refutations.
//! - [`explorer`]: topology enumeration, implication checks, claim audits.
//! - [`cli`]: the `topocheck` command surface.

pub mod axioms;
pub mod classes;
pub mod cli;
pub mod explorer;
pub mod mask;
pub mod space;

pub use axioms::{axiom_report, satisfies, Axiom, AxiomVerdict, Disjointness, MeeklyOptions, Operands};
pub use classes::{class_closure, class_family, class_interior, classification_table, is_member, is_pi_closed, SetClass};
pub use mask::SubsetMask;
pub use space::{validate_topology, SpaceContext, Topology, TopologyError};
