use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::generators::{bidirected_cycle, bidirected_tree, complete_digraph, directed_cycle, TreeShape};

/// The four factor classes with closed-form `λ₂` of their products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DigraphClass {
    DirectedCycle,
    BidirectedCycle,
    BidirectedTree(TreeShape),
    Complete,
}

impl DigraphClass {
    /// Representatives with a path-shaped tree, in table order.
    pub const ALL: [DigraphClass; 4] = [
        DigraphClass::DirectedCycle,
        DigraphClass::BidirectedCycle,
        DigraphClass::BidirectedTree(TreeShape::Path),
        DigraphClass::Complete,
    ];

    /// Smallest order for which the table entry is stated.
    ///
    /// Directed and bidirected cycles start at 3; trees and complete
    /// digraphs include the digon at order 2.
    pub fn min_order(&self) -> usize {
        match self {
            DigraphClass::DirectedCycle | DigraphClass::BidirectedCycle => 3,
            DigraphClass::BidirectedTree(_) | DigraphClass::Complete => 2,
        }
    }

    pub fn build(&self, order: usize) -> Result<Digraph> {
        self.check_order(order)?;
        match self {
            DigraphClass::DirectedCycle => directed_cycle(order),
            DigraphClass::BidirectedCycle => bidirected_cycle(order),
            DigraphClass::BidirectedTree(shape) => bidirected_tree(*shape, order),
            DigraphClass::Complete => complete_digraph(order),
        }
    }

    fn check_order(&self, order: usize) -> Result<()> {
        if order < self.min_order() {
            return Err(Error::OrderTooSmall {
                what: self.label(),
                min: self.min_order(),
                got: order,
            });
        }
        Ok(())
    }

    fn label(&self) -> &'static str {
        match self {
            DigraphClass::DirectedCycle => "directed cycle",
            DigraphClass::BidirectedCycle => "bidirected cycle",
            DigraphClass::BidirectedTree(_) => "bidirected tree",
            DigraphClass::Complete => "complete digraph",
        }
    }

    /// Column position in the table, ignoring tree shape.
    pub fn index(&self) -> usize {
        match self {
            DigraphClass::DirectedCycle => 0,
            DigraphClass::BidirectedCycle => 1,
            DigraphClass::BidirectedTree(_) => 2,
            DigraphClass::Complete => 3,
        }
    }
}

impl fmt::Display for DigraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigraphClass::DirectedCycle => write!(f, "C"),
            DigraphClass::BidirectedCycle => write!(f, "<C>"),
            DigraphClass::BidirectedTree(shape) => write!(f, "<T:{shape}>"),
            DigraphClass::Complete => write!(f, "<K>"),
        }
    }
}

impl FromStr for DigraphClass {
    type Err = Error;

    /// Accepts `cn`, `bcm`, `bkm` and `btm` or `btm:<shape>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cn" => Ok(DigraphClass::DirectedCycle),
            "bcm" => Ok(DigraphClass::BidirectedCycle),
            "bkm" => Ok(DigraphClass::Complete),
            "btm" => Ok(DigraphClass::BidirectedTree(TreeShape::Path)),
            _ => match s.strip_prefix("btm:") {
                Some(shape) => Ok(DigraphClass::BidirectedTree(shape.parse()?)),
                None => Err(Error::ClassSpec(s.to_string())),
            },
        }
    }
}

/// Closed-form `λ₂(R_n □ C_m)` for row class `R` of order `n` and column
/// class `C` of order `m`.
pub fn class_table_value(row: DigraphClass, col: DigraphClass, n: usize, m: usize) -> Result<usize> {
    row.check_order(n)?;
    col.check_order(m)?;
    // Rows and columns for C⃗, ↔C, ↔T, ↔K.
    let table: [[usize; 4]; 4] = [[2, 3, 2, m], [3, 4, 3, m + 1], [2, 3, 2, m], [n, n + 1, n, n + m - 2]];
    Ok(table[row.index()][col.index()])
}

/// Plain-text rendering of the table at fixed orders.
pub fn render_class_table(n: usize, m: usize) -> Result<String> {
    let mut out = format!("n={n} m={m}\n{:>6}", "");
    for col in DigraphClass::ALL {
        out.push_str(&format!("{:>8}", col.to_string().replace(":path", "")));
    }
    out.push('\n');
    for row in DigraphClass::ALL {
        out.push_str(&format!("{:>6}", row.to_string().replace(":path", "")));
        for col in DigraphClass::ALL {
            out.push_str(&format!("{:>8}", class_table_value(row, col, n, m)?));
        }
        out.push('\n');
    }
    Ok(out)
}
