//! Arc-strong connectivity `λ` and strong subgraph 2-arc-connectivity `λ₂`
//! of digraphs, with certificate constructions for Cartesian products.
//!
//! ```
//! use arcconn::{cartesian_product, directed_cycle, lambda_2, Lambda2Mode};
//!
//! let c3 = directed_cycle(3).unwrap();
//! let p = cartesian_product(&c3, &c3);
//! assert_eq!(lambda_2(p.digraph(), Lambda2Mode::Exhaustive).unwrap().value, 2);
//! ```

pub mod class_spec;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod flow;
pub mod generators;
pub mod io;
pub mod product;
pub mod sssc;

pub use class_spec::{ClassSpec, InputSpec, LoadedInput};
pub use constructions::{
    check_bounds, check_formula, class_table_value, hunt_tightness, lift_certificates, product_lambda_formula,
    prop_certificates, undirected_product_lambda, BoundsReport, ClassPair, DigraphClass, FormulaBreakdown, HuntConfig,
};
pub use digraph::{biorient, ArcPair, ArcSet, Digraph, UndirectedGraph};
pub use error::{Error, Result};
pub use flow::{arc_connectivity, max_flow_unit, verify_cut, ConnectivityReport, LocalArcConnectivity};
pub use generators::{
    bidirected_cycle, bidirected_tree, complete_digraph, directed_cycle, random_connected_graph, random_strong_digraph,
    tree, TreeShape,
};
pub use product::{cartesian_product, Axis, FiberRef, ProductDigraph};
pub use sssc::{
    lambda_2, lambda_s_at_least, lambda_s_exact, lambda_s_oracle_paths, lambda_s_oracle_subsets, lambda_s_upper_bounds,
    verify_certificate, CertificateFamily, Feasibility, Lambda2Mode, Lambda2Result, LambdaResult, SeedPair,
};
