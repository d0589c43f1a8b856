//! wpo-isomorphism of small finite quasi-orders.

use petgraph::algo::is_isomorphic;
use petgraph::graph::DiGraph;

use super::{FinitePoset, OracleError};

/// Largest quotient accepted by [`iso`].
pub const ISO_LIMIT: usize = 14;

/// Whether the quotients of `p` and `q` are isomorphic posets.
pub fn iso(p: &FinitePoset, q: &FinitePoset) -> Result<bool, OracleError> {
    let (p, q) = (p.quotient(), q.quotient());
    for x in [&p, &q] {
        if x.len() > ISO_LIMIT {
            return Err(OracleError::TooLarge {
                size: Some(x.len()),
                limit: ISO_LIMIT,
            });
        }
    }
    Ok(is_isomorphic(&strict_graph(&p), &strict_graph(&q)))
}

fn strict_graph(p: &FinitePoset) -> DiGraph<(), ()> {
    let mut g = DiGraph::with_capacity(p.len(), 0);
    let nodes: Vec<_> = (0..p.len()).map(|_| g.add_node(())).collect();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.lt(i, j) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::build;

    fn b(s: &str) -> FinitePoset {
        build(&s.parse().unwrap(), None).unwrap()
    }

    #[test]
    fn powerset_isomorphisms() {
        assert!(iso(&b("Pf(G(1)|G(1))"), &b("Pf(G(1))*Pf(G(1))")).unwrap());
        assert!(iso(&b("Pf(3)"), &b("4")).unwrap());
        assert!(iso(&b("Pf(2+G(2))"), &b("Pf(2)+PfPlus(G(2))")).unwrap());
    }

    #[test]
    fn distinguishes() {
        assert!(!iso(&b("G(2)"), &b("2")).unwrap());
        assert!(!iso(&b("2*2"), &b("1+G(2)+1+G(1)")).unwrap());
        assert!(iso(&b("1+G(2)+1"), &b("2*2")).unwrap());
    }

    #[test]
    fn too_large() {
        assert!(iso(&b("G(15)"), &b("G(15)")).is_err());
    }
}
