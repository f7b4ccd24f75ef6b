//! Independent ground truth. Nothing here uses the link decomposition in
//! [`crate::link`] or the decision procedures in [`crate::checker`].
//!
//! * [`matching`]: Berge degree as a maximum bipartite matching.
//! * [`exhaustive`]: every saturated 3-graph on at most 7 vertices.
//! * [`links`]: every small link graph, classified and bounded.

pub mod exhaustive;
pub mod links;
pub mod matching;

pub use exhaustive::{exhaustive_spectrum, sat_ex_observed, ExhaustiveOptions, SpectrumResult};
pub use links::{enumerate_link_catalog, CatalogEntry, CatalogReport, Stratum};
pub use matching::{berge_degree_matching, max_matching};
