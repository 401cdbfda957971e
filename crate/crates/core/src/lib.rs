//! Finite commutative rings and modules, deciders for CS-type module and
//! ring classes, trivial extensions, and an exhaustive verification harness.

pub mod deciders;
pub mod descriptor;
pub mod elemset;
pub mod error;
pub mod cli;
pub mod harness;
pub mod lattice;
pub mod module;
pub mod ring;
pub mod trivext;
pub mod verdict;
pub mod zring;

pub use descriptor::{Descriptor, ElemLit, ModuleDescriptor, RingDescriptor};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use module::{build_module, FiniteModule, ModuleHom, Submodule};
pub use ring::{build_ring, FiniteRing, Ideal, Limits};
pub use trivext::{trivial_extension, TrivialExtension};
pub use verdict::{Method, Verdict, Witness};
pub use cli::{parse_descriptor, parse_descriptor_file};
pub use harness::{run_suite, run_theorem, Family, FamilyConfig, TheoremReport};
