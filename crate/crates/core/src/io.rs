//! Text, JSON and DOT formats.
//!
//! Text format: a line `n <order>`, then one `u v` arc per line. `#` starts a
//! comment; a `# product n=<n> m=<m>` comment records the factor orders of a
//! Cartesian product.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::digraph::{ArcPair, ArcSet, Digraph};
use crate::error::{Error, Result};
use crate::product::ProductDigraph;
use crate::sssc::{CertificateFamily, SeedPair};

/// Factor orders of a product; vertex `(i, j)` has index `i·m + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductShape {
    pub n: usize,
    pub m: usize,
}

impl ProductShape {
    pub fn of(p: &ProductDigraph) -> Self {
        ProductShape { n: p.n(), m: p.m() }
    }
}

/// A digraph together with its product shape, if it is known to be one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub digraph: Digraph,
    pub product: Option<ProductShape>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_product_header(comment: &str) -> Option<ProductShape> {
    let rest = comment.trim().strip_prefix("product")?;
    let mut n = None;
    let mut m = None;
    for field in rest.split_whitespace() {
        match field.split_once('=') {
            Some(("n", v)) => n = v.parse().ok(),
            Some(("m", v)) => m = v.parse().ok(),
            _ => {}
        }
    }
    Some(ProductShape { n: n?, m: m? })
}

pub fn parse_text(src: &str) -> Result<GraphFile> {
    let mut order = None;
    let mut product = None;
    let mut arcs = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(shape) = comment.and_then(parse_product_header) {
            product = Some(shape);
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["n", v] if order.is_none() => {
                order = Some(v.parse::<usize>().map_err(|e| parse_err(line_no, e.to_string()))?)
            }
            [u, v] if order.is_some() => {
                let u = u.parse::<usize>().map_err(|e| parse_err(line_no, e.to_string()))?;
                let v = v.parse::<usize>().map_err(|e| parse_err(line_no, e.to_string()))?;
                arcs.push((u, v));
            }
            _ if order.is_none() => return Err(parse_err(line_no, "expected `n <order>`")),
            _ => return Err(parse_err(line_no, "expected `u v`")),
        }
    }
    let order = order.ok_or_else(|| parse_err(0, "missing `n <order>` line"))?;
    let digraph = Digraph::from_arc_list(order, arcs)?;
    if let Some(shape) = product {
        if shape.n * shape.m != order {
            return Err(parse_err(
                0,
                format!("product header {}x{} does not match order {order}", shape.n, shape.m),
            ));
        }
    }
    Ok(GraphFile { digraph, product })
}

pub fn to_text(d: &Digraph, product: Option<ProductShape>) -> String {
    let mut out = String::new();
    if let Some(ProductShape { n, m }) = product {
        let _ = writeln!(out, "# product n={n} m={m}");
    }
    let _ = writeln!(out, "n {}", d.order());
    for &(u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_text_file(path: &Path) -> Result<GraphFile> {
    parse_text(&std::fs::read_to_string(path)?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<ArcPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<ProductShape>,
}

pub fn to_json(d: &Digraph, product: Option<ProductShape>) -> Result<String> {
    Ok(serde_json::to_string_pretty(&DigraphJson {
        n: d.order(),
        arcs: d.arcs().to_vec(),
        product,
    })?)
}

pub fn parse_json(src: &str) -> Result<GraphFile> {
    let j: DigraphJson = serde_json::from_str(src)?;
    Ok(GraphFile {
        digraph: Digraph::from_arc_list(j.n, j.arcs)?,
        product: j.product,
    })
}

/// Serialized certificate family. `s` and `t` are the two seeds; `arcs`
/// optionally carries the host digraph so the file verifies on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub members: Vec<Vec<ArcPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<ProductShape>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcPair>>,
}

impl CertificateJson {
    pub fn new(host: &Digraph, cert: &CertificateFamily, product: Option<ProductShape>) -> Self {
        CertificateJson {
            n: host.order(),
            s: cert.seed.x(),
            t: cert.seed.y(),
            members: cert.members.iter().map(ArcSet::to_vec).collect(),
            product,
            arcs: Some(host.arcs().to_vec()),
        }
    }

    pub fn family(&self) -> Result<CertificateFamily> {
        let seed = SeedPair::new(self.s, self.t)?;
        let members = self.members.iter().map(|m| m.iter().copied().collect()).collect();
        Ok(CertificateFamily::new(seed, members))
    }

    /// The embedded host digraph, if present.
    pub fn host(&self) -> Option<Result<Digraph>> {
        self.arcs
            .as_ref()
            .map(|arcs| Digraph::from_arc_list(self.n, arcs.iter().copied()))
    }

    pub fn to_string_pretty(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn parse(src: &str) -> Result<Self> {
        Ok(serde_json::from_str(src)?)
    }
}

const PALETTE: [&str; 8] = ["red", "blue", "green3", "orange", "purple", "cyan3", "magenta", "gold3"];

/// Color for certificate member `i`; named colors first, then evenly spaced
/// hues.
pub fn member_color(i: usize, total: usize) -> String {
    if total <= PALETTE.len() {
        PALETTE[i].to_string()
    } else {
        format!("\"{:.3} 0.850 0.850\"", i as f64 / total as f64)
    }
}

fn node_label(v: usize, product: Option<ProductShape>) -> String {
    match product {
        Some(ProductShape { m, .. }) => format!("  {v} [label=\"({},{})\"];", v / m, v % m),
        None => format!("  {v};"),
    }
}

pub fn to_dot(d: &Digraph, product: Option<ProductShape>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..d.order() {
        let _ = writeln!(out, "{}", node_label(v, product));
    }
    for &(u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT drawing with each certificate member in its own color. Host arcs
/// outside every member are drawn gray; seeds are drawn as double circles.
pub fn certificate_to_dot(
    host: Option<&Digraph>,
    order: usize,
    cert: &CertificateFamily,
    product: Option<ProductShape>,
) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..order {
        let mut line = node_label(v, product);
        if cert.seed.as_slice().contains(&v) {
            line = line.trim_end_matches(';').trim_end_matches(']').to_string();
            line.push_str(if product.is_some() {
                ", shape=doublecircle];"
            } else {
                " [shape=doublecircle];"
            });
        }
        let _ = writeln!(out, "{line}");
    }
    let total = cert.len();
    for (i, member) in cert.members.iter().enumerate() {
        let color = member_color(i, total);
        for &(u, v) in member {
            let _ = writeln!(out, "  {u} -> {v} [color={color}, penwidth=2];");
        }
    }
    if let Some(d) = host {
        for &(u, v) in d.arcs() {
            if !cert.members.iter().any(|m| m.contains(&(u, v))) {
                let _ = writeln!(out, "  {u} -> {v} [color=gray];");
            }
        }
    }
    out.push_str("}\n");
    out
}
