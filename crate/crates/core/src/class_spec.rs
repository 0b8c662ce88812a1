//! Textual digraph specifications: `cn:<n>`, `bcm:<m>`, `btm:<shape>:<m>`,
//! `bkm:<m>`, `rand:<n>:<p>:<seed>`, `file:<path>`, and products `A x B`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::generators::{
    bidirected_cycle, bidirected_tree, complete_digraph, directed_cycle, random_strong_digraph, TreeShape,
};
use crate::io::{parse_json, parse_text, GraphFile, ProductShape};
use crate::product::{cartesian_product, ProductDigraph};

#[derive(Debug, Clone, PartialEq)]
pub enum ClassSpec {
    DirectedCycle(usize),
    BidirectedCycle(usize),
    BidirectedTree(TreeShape, usize),
    Complete(usize),
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Text or JSON digraph file, told apart by a leading `{`.
    File(PathBuf),
}

fn num<T: FromStr>(field: &str, whole: &str) -> Result<T> {
    field.parse().map_err(|_| Error::ClassSpec(whole.to_string()))
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(ClassSpec::File(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["cn", n] => Ok(ClassSpec::DirectedCycle(num(n, s)?)),
            ["bcm", m] => Ok(ClassSpec::BidirectedCycle(num(m, s)?)),
            ["bkm", m] => Ok(ClassSpec::Complete(num(m, s)?)),
            ["btm", m] => Ok(ClassSpec::BidirectedTree(TreeShape::Path, num(m, s)?)),
            ["btm", shape, m] => Ok(ClassSpec::BidirectedTree(
                shape.parse().map_err(|_| Error::ClassSpec(s.to_string()))?,
                num(m, s)?,
            )),
            ["rand", n, p, seed] => Ok(ClassSpec::Random {
                n: num(n, s)?,
                p: num(p, s)?,
                seed: num(seed, s)?,
            }),
            _ => Err(Error::ClassSpec(s.to_string())),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::DirectedCycle(n) => write!(f, "cn:{n}"),
            ClassSpec::BidirectedCycle(m) => write!(f, "bcm:{m}"),
            ClassSpec::BidirectedTree(shape, m) => write!(f, "btm:{shape}:{m}"),
            ClassSpec::Complete(m) => write!(f, "bkm:{m}"),
            ClassSpec::Random { n, p, seed } => write!(f, "rand:{n}:{p}:{seed}"),
            ClassSpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl ClassSpec {
    pub fn load(&self) -> Result<GraphFile> {
        let plain = |digraph: Result<Digraph>| {
            Ok(GraphFile {
                digraph: digraph?,
                product: None,
            })
        };
        match self {
            ClassSpec::DirectedCycle(n) => plain(directed_cycle(*n)),
            ClassSpec::BidirectedCycle(m) => plain(bidirected_cycle(*m)),
            ClassSpec::BidirectedTree(shape, m) => plain(bidirected_tree(*shape, *m)),
            ClassSpec::Complete(m) => plain(complete_digraph(*m)),
            ClassSpec::Random { n, p, seed } => plain(random_strong_digraph(*n, *p, *seed)),
            ClassSpec::File(path) => {
                let src = std::fs::read_to_string(path)?;
                if src.trim_start().starts_with('{') {
                    parse_json(&src)
                } else {
                    parse_text(&src)
                }
            }
        }
    }
}

/// A single digraph or a product of two.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSpec {
    Single(ClassSpec),
    Product(ClassSpec, ClassSpec),
}

impl FromStr for InputSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        match tokens.as_slice() {
            [one] => Ok(InputSpec::Single(one.parse()?)),
            [a, "x", b] => Ok(InputSpec::Product(a.parse()?, b.parse()?)),
            _ => Err(Error::ClassSpec(s.to_string())),
        }
    }
}

impl fmt::Display for InputSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputSpec::Single(a) => write!(f, "{a}"),
            InputSpec::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// A loaded input; products keep their factors.
#[derive(Debug, Clone)]
pub struct LoadedInput {
    pub digraph: Digraph,
    pub product: Option<ProductDigraph>,
    /// Factor orders, from the product or a file header.
    pub shape: Option<ProductShape>,
}

impl InputSpec {
    pub fn load(&self) -> Result<LoadedInput> {
        match self {
            InputSpec::Single(a) => {
                let f = a.load()?;
                Ok(LoadedInput {
                    digraph: f.digraph,
                    product: None,
                    shape: f.product,
                })
            }
            InputSpec::Product(a, b) => {
                let p = cartesian_product(&a.load()?.digraph, &b.load()?.digraph);
                Ok(LoadedInput {
                    digraph: p.digraph().clone(),
                    shape: Some(ProductShape::of(&p)),
                    product: Some(p),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "cn:5",
            "bcm:4",
            "btm:star:5",
            "btm:random7:6",
            "bkm:3",
            "rand:5:0.3:11",
            "file:/tmp/g.dg",
        ] {
            let spec: ClassSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "btm:4".parse::<ClassSpec>().unwrap(),
            ClassSpec::BidirectedTree(TreeShape::Path, 4)
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "cn", "cn:x", "btm:oak:4", "rand:3:0.1", "zz:3"] {
            assert!(s.parse::<ClassSpec>().is_err(), "{s}");
        }
        assert!("cn:3 y cn:3".parse::<InputSpec>().is_err());
    }

    #[test]
    fn load_product() {
        let spec: InputSpec = "cn:3 x bcm:3".parse().unwrap();
        let loaded = spec.load().unwrap();
        assert_eq!(loaded.digraph.order(), 9);
        assert_eq!(loaded.shape, Some(ProductShape { n: 3, m: 3 }));
        assert_eq!(loaded.digraph.arc_count(), 9 + 18);
    }

    #[test]
    fn load_missing_file() {
        let spec: InputSpec = "file:/definitely/not/here.dg".parse().unwrap();
        assert!(matches!(spec.load(), Err(Error::Io(_))));
    }
}
