//! Node-weighted triangle detection, counting and minimization.
//!
//! Every weighted query here is reduced to unweighted tripartite triangle
//! detection (or counting) on a family of subgraphs chosen from the weight
//! frequencies, so the total matrix work stays within a constant factor of
//! a single `n × n` Boolean product.
//!
//! ```
//! use nwt_core::{detect, parse_graph, CostLedger, WeightedGraph};
//!
//! let g: WeightedGraph<i64> = parse_graph("3 3\n0 1\n1 2\n2 -3\n0 1\n1 2\n0 2").unwrap();
//! let mut ledger = CostLedger::new();
//! let w = detect(&g, 0, &mut ledger).unwrap();
//! assert_eq!(w.weight_sum, 0);
//! ```

pub mod bitlinalg;
pub mod count;
pub mod detect;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod min;
pub mod oracle;
pub mod slice;
pub mod sparse;
pub mod weight;

pub use bitlinalg::{bool_product, BitMatrix, CostLedger, SliceDecision};
pub use count::{count, CountBreakdown};
pub use detect::{build_frequency_table, detect, greedy_partition, FrequencyTable, WeightPartition};
pub use error::NwtError;
pub use generate::{generate_random, RandomGraphParams, WeightDistribution};
pub use graph::{induced_subgraph, TriangleWitness, WeightedGraph};
pub use io::{parse_graph, serialize_graph, ParseError};
pub use min::{min_triangle, MinTriangle};
pub use slice::{build_slice, TripartiteSlice};
pub use sparse::detect_sparse;
pub use weight::{Rational, Weight};
