use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::flow::{arc_connectivity, verify_cut, ConnectivityReport};
use crate::product::cartesian_product;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaTerm {
    /// `λ(G)·|H|`
    LambdaGTimesOrderH,
    /// `λ(H)·|G|`
    LambdaHTimesOrderG,
    /// `δ⁺(G) + δ⁺(H)`
    OutDegreeSum,
    /// `δ⁻(G) + δ⁻(H)`
    InDegreeSum,
}

/// The four terms of the product arc-connectivity formula and their minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaBreakdown {
    pub lambda_g_times_order_h: usize,
    pub lambda_h_times_order_g: usize,
    pub out_degree_sum: usize,
    pub in_degree_sum: usize,
    pub value: usize,
    /// First term (in declaration order) attaining the minimum.
    pub argmin: FormulaTerm,
}

impl FormulaBreakdown {
    fn from_terms(terms: [usize; 4]) -> Self {
        use FormulaTerm::*;
        let tags = [LambdaGTimesOrderH, LambdaHTimesOrderG, OutDegreeSum, InDegreeSum];
        let (idx, &value) = terms
            .iter()
            .enumerate()
            .min_by_key(|(i, v)| (**v, *i))
            .expect("four terms");
        FormulaBreakdown {
            lambda_g_times_order_h: terms[0],
            lambda_h_times_order_g: terms[1],
            out_degree_sum: terms[2],
            in_degree_sum: terms[3],
            value,
            argmin: tags[idx],
        }
    }
}

impl fmt::Display for FormulaBreakdown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min{{{}, {}, {}, {}}} = {}",
            self.lambda_g_times_order_h,
            self.lambda_h_times_order_g,
            self.out_degree_sum,
            self.in_degree_sum,
            self.value
        )
    }
}

fn require_factor(d: &Digraph, name: &'static str) -> Result<()> {
    if d.order() < 2 {
        return Err(Error::OrderTooSmall {
            what: name,
            min: 2,
            got: d.order(),
        });
    }
    if !d.is_strong() {
        return Err(Error::NotStrong(name));
    }
    Ok(())
}

/// `λ(G □ H) = min{λ(G)|H|, λ(H)|G|, δ⁺(G)+δ⁺(H), δ⁻(G)+δ⁻(H)}` for strong
/// factors of order at least two.
pub fn product_lambda_formula(g: &Digraph, h: &Digraph) -> Result<FormulaBreakdown> {
    require_factor(g, "factor G")?;
    require_factor(h, "factor H")?;
    let rg = arc_connectivity(g)?;
    let rh = arc_connectivity(h)?;
    Ok(FormulaBreakdown::from_terms([
        rg.lambda * h.order(),
        rh.lambda * g.order(),
        rg.delta_out + rh.delta_out,
        rg.delta_in + rh.delta_in,
    ]))
}

/// `λ(G □ H) = min{λ(G)|V(H)|, λ(H)|V(G)|, δ(G)+δ(H)}` for connected
/// undirected graphs with at least two vertices.
pub fn undirected_product_lambda(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<usize> {
    for (graph, name) in [(g, "graph G"), (h, "graph H")] {
        if graph.order() < 2 {
            return Err(Error::OrderTooSmall {
                what: name,
                min: 2,
                got: graph.order(),
            });
        }
        if !graph.is_connected() {
            return Err(Error::NotConnected(name));
        }
    }
    // Edge-connectivity of a graph equals arc-connectivity of its
    // biorientation.
    let lg = arc_connectivity(&g.biorient())?.lambda;
    let lh = arc_connectivity(&h.biorient())?.lambda;
    Ok((lg * h.order())
        .min(lh * g.order())
        .min(g.min_degree() + h.min_degree()))
}

#[derive(Debug, Clone)]
pub struct FormulaCheck {
    pub formula: FormulaBreakdown,
    pub flow: ConnectivityReport,
    /// Whether removing the flow's minimum cut destroys strongness.
    pub cut_verified: bool,
    /// Factors, kept so a failure can be reproduced.
    pub g: Digraph,
    pub h: Digraph,
}

impl FormulaCheck {
    pub fn passed(&self) -> bool {
        self.formula.value == self.flow.lambda && self.cut_verified
    }
}

/// Compares the closed form against flow-computed `λ(G □ H)` and checks the
/// flow's cut certificate.
pub fn check_formula(g: &Digraph, h: &Digraph) -> Result<FormulaCheck> {
    let formula = product_lambda_formula(g, h)?;
    let product = cartesian_product(g, h);
    let flow = arc_connectivity(product.digraph())?;
    let cut_verified = flow.min_cut.len() == flow.lambda && verify_cut(product.digraph(), &flow.min_cut);
    Ok(FormulaCheck {
        formula,
        flow,
        cut_verified,
        g: g.clone(),
        h: h.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bidirected_cycle, bidirected_tree, complete_digraph, directed_cycle, tree, TreeShape};

    #[test]
    fn formula_examples() {
        let c3 = directed_cycle(3).unwrap();
        let f = product_lambda_formula(&c3, &c3).unwrap();
        assert_eq!(
            [
                f.lambda_g_times_order_h,
                f.lambda_h_times_order_g,
                f.out_degree_sum,
                f.in_degree_sum
            ],
            [3, 3, 2, 2]
        );
        assert_eq!(f.value, 2);
        assert_eq!(f.argmin, FormulaTerm::OutDegreeSum);

        let k4 = complete_digraph(4).unwrap();
        let f = product_lambda_formula(&c3, &k4).unwrap();
        assert_eq!(
            [
                f.lambda_g_times_order_h,
                f.lambda_h_times_order_g,
                f.out_degree_sum,
                f.in_degree_sum
            ],
            [4, 9, 4, 4]
        );
        assert_eq!(f.value, 4);
        assert_eq!(f.argmin, FormulaTerm::LambdaGTimesOrderH);

        let k3 = complete_digraph(3).unwrap();
        assert_eq!(product_lambda_formula(&k3, &k3).unwrap().value, 4);
    }

    #[test]
    fn formula_rejects_bad_factors() {
        let c3 = directed_cycle(3).unwrap();
        let path = Digraph::from_arc_list(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(product_lambda_formula(&c3, &path), Err(Error::NotStrong(_))));
        let single = Digraph::empty(1).unwrap();
        assert!(matches!(
            product_lambda_formula(&single, &c3),
            Err(Error::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn undirected_examples() {
        let c4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(undirected_product_lambda(&c4, &c4).unwrap(), 4);
        let k3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(undirected_product_lambda(&k3, &k3).unwrap(), 4);
        let p2 = UndirectedGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(undirected_product_lambda(&p2, &p2).unwrap(), 2);
        let split = UndirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            undirected_product_lambda(&split, &p2),
            Err(Error::NotConnected(_))
        ));
    }

    #[test]
    fn theorem31_instances() {
        let c3 = directed_cycle(3).unwrap();
        let r = check_formula(&c3, &c3).unwrap();
        assert!(r.passed());
        assert_eq!(r.flow.lambda, 2);
        let r = check_formula(
            &bidirected_cycle(4).unwrap(),
            &bidirected_tree(TreeShape::Star, 5).unwrap(),
        )
        .unwrap();
        assert!(r.passed());
        assert!(tree(TreeShape::Star, 5).is_ok());
    }
}
