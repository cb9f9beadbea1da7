//! Fixed-parameter algorithms for k-Path, MaxLeaf Subtree and Multicut in
//! Trees that read their input through immutable graph views and keep only
//! polylogarithmically many words of working state.
//!
//! Every solver charges its working state to a [`WorkspaceMeter`]; the input
//! graph is never charged. Connectivity questions go through
//! [`st_connected`], which is a metered Savitch recursion by default.

pub mod colour;
pub mod connectivity;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kpath;
pub mod maxleaf;
pub mod meter;
pub mod multicut;
pub mod oracles;
pub mod report;

pub use colour::{find_prime_above, ColourFamily, Colouring};
pub use connectivity::{st_connected, ConnectivityStrategy};
pub use error::{Error, Result};
pub use graph::{EdgeMask, Graph, GraphView, Masked, Vertex, VertexMask};
pub use kpath::{solve_kpath, solve_kpath_jobs, KPathOutcome};
pub use maxleaf::{solve_maxleaf, solve_maxleaf_jobs, LeafLabelledTree, MaxLeafOutcome};
pub use meter::{word_bits, WorkspaceMeter};
pub use multicut::{solve_multicut, MulticutInstance, MulticutOutcome};
pub use report::SpaceReport;
