//! Construction and verification of Berge-K_{1,ℓ}-saturated 3-uniform
//! hypergraphs.
//!
//! * [`hypergraph`] and [`link`]: the 3-graph type, links, Berge degrees.
//! * [`checker`]: freeness, saturation, aggressive-saturation tags, ℓ = 5
//!   degree-deficiency tools.
//! * [`gadgets`]: the fixed building blocks.
//! * [`confmodel`]: random linear 3-graphs with a given degree sequence.
//! * [`assembler`]: closed-form sat/ex values and spectrum witness builders.
//! * [`oracle`]: independent ground truth for tests and audits.

pub mod assembler;
pub mod catalog;
pub mod checker;
pub mod confmodel;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod hypergraph;
pub mod link;
pub mod oracle;
pub mod smallgraph;

pub use checker::{is_berge_free, is_saturated, VerifyReport};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph3, Triple};
pub use link::{berge_degree, berge_witness, link, BergeWitness, LinkGraph};
