//! Closed forms, bound checkers and explicit certificate constructions for
//! Cartesian products.

pub mod bounds;
pub mod formula;
pub mod lift;
pub mod props;
pub mod table;

pub use bounds::{
    check_bounds, hunt_tightness, random_factor_pair, BoundsReport, HuntConfig, HuntReport, HuntTrial, TightnessWitness,
};
pub use formula::{
    check_formula, product_lambda_formula, undirected_product_lambda, FormulaBreakdown, FormulaCheck, FormulaTerm,
};
pub use lift::{lift_certificates, lift_with, LiftCase, LiftedFamily};
pub use props::{prop_certificates, ClassPair, PropFamily, Routing};
pub use table::{class_table_value, render_class_table, DigraphClass};
