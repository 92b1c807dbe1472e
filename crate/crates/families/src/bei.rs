//! Binomial edge ideals: one 2x2-minor binomial x_i y_j - x_j y_i per edge,
//! and the combinatorial description of their colon ideals by an edge
//! binomial (neighborhood completion, plus monomial path generators when the
//! edge is present).

use devtwo_engine::budget::Budget;
use devtwo_engine::error::{Error, Result};
use devtwo_engine::ideal::Ideal;
use devtwo_engine::monomial::Monomial;
use devtwo_engine::poly::Polynomial;
use devtwo_engine::ring::{numbered_vars, PolyRing, RingRef};

use crate::graphs::GraphSpec;

/// K[x_1..x_n, y_1..y_n] for a graph on n vertices.
pub fn bei_ring(nverts: usize, charac: u64) -> Result<RingRef> {
    let mut vars = numbered_vars("x", nverts);
    vars.extend(numbered_vars("y", nverts));
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    PolyRing::standard(&names, charac)
}

/// x_u y_v - x_v y_u for 0-based u < v.
pub fn edge_binomial(ring: &RingRef, nverts: usize, u: usize, v: usize) -> Result<Polynomial> {
    let (u, v) = (u.min(v), u.max(v));
    let x = |i: usize| Polynomial::var(ring, i);
    let y = |i: usize| Polynomial::var(ring, nverts + i);
    x(u).mul(&y(v))?.sub(&x(v).mul(&y(u))?)
}

/// J_G with one binomial per edge, in the graph's edge order.
pub fn binomial_edge_ideal(g: &GraphSpec, ring: &RingRef) -> Result<Ideal> {
    let gens: Vec<Polynomial> = g
        .edges
        .iter()
        .map(|&(u, v)| edge_binomial(ring, g.nverts, u, v))
        .collect::<Result<_>>()?;
    Ideal::new(ring, gens)
}

/// The monomial x_{i_1}...x_{i_s} resp. y-prefixed variants attached to an
/// inner path, used by the colon description for present edges.
fn path_monomial(ring: &RingRef, nverts: usize, inner: &[usize], t: usize) -> Polynomial {
    let mut exps = vec![0u16; ring.nvars()];
    for (pos, &v) in inner.iter().enumerate() {
        if pos < t {
            exps[nverts + v] += 1;
        } else {
            exps[v] += 1;
        }
    }
    Polynomial::term(
        ring,
        devtwo_engine::coeff::Coeff::one(ring.charac()),
        Monomial::from_exps(&exps),
    )
}

/// Combinatorial colon ideal (J_G : f_e).
///
/// For e not in E(G) the edge must be a bridge of G ∪ {e}; the colon is the
/// binomial edge ideal of the neighborhood completion G_e. For e in E(G) the
/// completion ideal is augmented by the monomials g_{P,t} of every inner path
/// P between the endpoints.
pub fn colon_bei(g: &GraphSpec, e: (usize, usize), ring: &RingRef) -> Result<Ideal> {
    let (i, j) = (e.0.min(e.1), e.0.max(e.1));
    if i == j || j >= g.nverts {
        return Err(Error::InvalidParameter(format!("bad edge ({},{})", i, j)));
    }
    if g.has_edge(i, j) {
        let completion = g.neighbor_completion(i, j);
        let mut gens = binomial_edge_ideal(&completion, ring)?.gens().to_vec();
        for inner in g.inner_paths(i, j) {
            for t in 0..=inner.len() {
                gens.push(path_monomial(ring, g.nverts, &inner, t));
            }
        }
        Ideal::new(ring, gens)
    } else {
        if !g.is_bridge_when_added(i, j) {
            return Err(Error::HypothesisViolation(format!(
                "edge ({},{}) is not a bridge of the augmented graph",
                i + 1,
                j + 1
            )));
        }
        let completion = g.neighbor_completion(i, j);
        binomial_edge_ideal(&completion, ring)
    }
}

/// Groebner route for the same colon, used as the oracle in tests and
/// verification reports.
pub fn colon_bei_groebner(
    g: &GraphSpec,
    e: (usize, usize),
    ring: &RingRef,
    budget: &Budget,
) -> Result<Ideal> {
    let ideal = binomial_edge_ideal(g, ring)?;
    let f = edge_binomial(ring, g.nverts, e.0, e.1)?;
    devtwo_engine::ideal::colon_elem(&ideal, &f, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use devtwo_engine::ideal::ideal_eq;

    #[test]
    fn path_ideal_generators() {
        let g = GraphSpec::path(3).unwrap();
        let r = bei_ring(3, 0).unwrap();
        let j = binomial_edge_ideal(&g, &r).unwrap();
        assert_eq!(j.gens().len(), 2);
        assert_eq!(j.gens()[0].render(), "-x2*y1 + x1*y2");
    }

    #[test]
    fn bridge_precondition_enforced() {
        let g = GraphSpec::path(3).unwrap();
        let r = bei_ring(3, 0).unwrap();
        // closing the path into a triangle: {1,3} is not a bridge
        assert!(matches!(
            colon_bei(&g, (0, 2), &r),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn disjoint_edges_bridge_colon() {
        // two disjoint edges; the connecting edge is a bridge and the colon
        // equals J_G (no completion edges appear)
        let g = GraphSpec::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let r = bei_ring(4, 0).unwrap();
        let combinatorial = colon_bei(&g, (1, 2), &r).unwrap();
        let b = Budget::unlimited();
        let oracle = colon_bei_groebner(&g, (1, 2), &r, &b).unwrap();
        assert!(ideal_eq(&combinatorial, &oracle, &b).unwrap());
    }

    #[test]
    fn present_edge_colon_on_path() {
        let g = GraphSpec::path(3).unwrap();
        let r = bei_ring(3, 0).unwrap();
        let b = Budget::unlimited();
        let combinatorial = colon_bei(&g, (0, 1), &r).unwrap();
        let oracle = colon_bei_groebner(&g, (0, 1), &r, &b).unwrap();
        assert!(ideal_eq(&combinatorial, &oracle, &b).unwrap());
    }

    #[test]
    fn present_edge_colon_on_cycle_has_path_monomials() {
        let c4 = GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = bei_ring(4, 0).unwrap();
        let b = Budget::unlimited();
        let combinatorial = colon_bei(&c4, (0, 1), &r).unwrap();
        let oracle = colon_bei_groebner(&c4, (0, 1), &r, &b).unwrap();
        assert!(ideal_eq(&combinatorial, &oracle, &b).unwrap());
    }
}
