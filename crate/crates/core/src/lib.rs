//! Heterogeneous graphlet orbits: canonical forms of vertex/edge-colored
//! (di)graphs and anchored orbits, isomorph-free catalogs of a given type,
//! and exact anchored orbit counts in host networks.

pub mod canonical;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hostfile;
pub mod partition;
pub mod store;

pub use canonical::{
    automorphisms, canonical_graph, canonical_orbit, vertex_orbit_partition, Canonizer,
    Labeling, OrbitClass, Strategy,
};
pub use count::{count_graphlets, count_orbits, CountVector};
pub use enumerate::{
    generate_graphs, generate_orbits, Catalog, CatalogKind, CatalogType, Generator, Limits, Stats,
};
pub use error::{Error, Result};
pub use graph::{CanonicalKey, Color, ColoredGraph, Permutation};
pub use partition::{refine_partition, OrderedPartition};
pub use store::CatalogStore;
