//! Deviation-two families: a base sequence f_1..f_n whose first n-2 entries
//! form a regular sequence, with iterative extensions g_1..g_k subject to the
//! regularity and colon conditions of the two classes.

use devtwo_engine::budget::Budget;
use devtwo_engine::error::{Error, Result};
use devtwo_engine::ideal::{self, Ideal};
use devtwo_engine::koszul;
use devtwo_engine::poly::Polynomial;
use devtwo_engine::resolution::presentation_of_ideal_quotient;
use devtwo_engine::ring::RingRef;
use serde_json::json;

use crate::bei::{bei_ring, binomial_edge_ideal, edge_binomial};
use crate::graphs::{build_g1, build_g2, GraphSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassTag {
    ClassI,
    ClassII,
}

#[derive(Clone, Debug)]
pub struct DeviationFamily {
    ring: RingRef,
    f: Vec<Polynomial>,
    g: Vec<Polynomial>,
    class_tag: ClassTag,
    label: String,
}

impl DeviationFamily {
    pub fn new(
        ring: &RingRef,
        f: Vec<Polynomial>,
        g: Vec<Polynomial>,
        class_tag: ClassTag,
        label: String,
    ) -> Result<DeviationFamily> {
        if f.len() < 3 {
            return Err(Error::InvalidParameter(
                "a base sequence needs at least 3 elements".into(),
            ));
        }
        for p in f.iter().chain(g.iter()) {
            if p.is_zero() {
                return Err(Error::InvalidParameter("zero element in family".into()));
            }
            if !p.ring().same_ring(ring) {
                return Err(Error::RingMismatch);
            }
            if p.bidegree().is_none() {
                return Err(Error::NotGraded("family elements must be homogeneous".into()));
            }
        }
        Ok(DeviationFamily {
            ring: ring.clone(),
            f,
            g,
            class_tag,
            label,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn f(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn g(&self) -> &[Polynomial] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn k(&self) -> usize {
        self.g.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn class_tag(&self) -> ClassTag {
        self.class_tag
    }

    /// x-degrees d_1..d_n of the base generators.
    pub fn degrees(&self) -> Vec<i64> {
        self.f.iter().map(|p| p.bidegree().unwrap().x()).collect()
    }

    /// x-degrees d_{n+1}..d_{n+k} of the extension elements.
    pub fn g_degrees(&self) -> Vec<i64> {
        self.g.iter().map(|p| p.bidegree().unwrap().x()).collect()
    }

    /// d_alpha = sum of d_{n+i} over i in alpha (0-based subset of 0..k).
    pub fn d_alpha(&self, alpha: &[usize]) -> i64 {
        let degs = self.g_degrees();
        alpha.iter().map(|&i| degs[i]).sum()
    }

    pub fn base_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.f.clone()).unwrap()
    }

    /// I_0' = <f_1..f_{n-2}>, the regular part.
    pub fn regular_part(&self) -> Ideal {
        Ideal::new(&self.ring, self.f[..self.n() - 2].to_vec()).unwrap()
    }

    /// I_0'' = <f_1..f_{n-1}>, the almost-complete-intersection part.
    pub fn almost_ci_part(&self) -> Ideal {
        Ideal::new(&self.ring, self.f[..self.n() - 1].to_vec()).unwrap()
    }

    /// Generators of I_j = I_0 + <g_1..g_j>.
    pub fn gens_at(&self, j: usize) -> Vec<Polynomial> {
        let mut gens = self.f.clone();
        gens.extend(self.g[..j].to_vec());
        gens
    }

    pub fn ideal_at(&self, j: usize) -> Ideal {
        Ideal::new(&self.ring, self.gens_at(j)).unwrap()
    }

    /// Base invariants: deviation two, the regular part really is a regular
    /// sequence, and (I_0' : f_{n-1}) ⊆ (I_0' : f_n).
    pub fn validate_base(&self, budget: &Budget) -> Result<BaseReport> {
        let n = self.n();
        let base = self.base_ideal();
        let deviation = ideal::deviation(&base, budget)?;
        let regular = crate::dseq::is_regular_sequence(&self.f[..n - 2], budget)?;
        let prime = self.regular_part();
        let c1 = ideal::colon_elem(&prime, &self.f[n - 2], budget)?;
        let c2 = ideal::colon_elem(&prime, &self.f[n - 1], budget)?;
        let mut colon_inclusion = true;
        for h in c1.gens() {
            if !ideal::membership(h, &c2, budget)? {
                colon_inclusion = false;
                break;
            }
        }
        Ok(BaseReport {
            deviation,
            regular_part_is_regular: regular,
            colon_inclusion,
        })
    }

    /// Per-condition class report. Class I: the g's act regularly on B/I_0
    /// and on B/I_0'', and the colon inclusion persists for every prefix.
    /// Class II replaces the inclusion by regularity on (I_0'' : f_n)/I_0''.
    pub fn class_check(&self, budget: &Budget) -> Result<ClassCheckReport> {
        let n = self.n();
        let base = self.validate_base(budget)?;
        let mut g_regular_on_base = Vec::new();
        let mut acc = self.base_ideal();
        for g in &self.g {
            let ok = ideal::is_regular_on_quotient(g, &acc, budget)?;
            g_regular_on_base.push(ok);
            acc = acc.sum(&Ideal::new(&self.ring, vec![g.clone()])?)?;
        }
        let mut g_regular_on_almost_ci = Vec::new();
        let mut acc = self.almost_ci_part();
        for g in &self.g {
            let ok = ideal::is_regular_on_quotient(g, &acc, budget)?;
            g_regular_on_almost_ci.push(ok);
            acc = acc.sum(&Ideal::new(&self.ring, vec![g.clone()])?)?;
        }
        let mut colon_inclusions = Vec::new();
        let mut g_regular_on_colon_module = None;
        match self.class_tag {
            ClassTag::ClassI => {
                for j in 1..=self.k() {
                    let mut gens = self.f[..n - 2].to_vec();
                    gens.extend(self.g[..j].to_vec());
                    let extended = Ideal::new(&self.ring, gens)?;
                    let c1 = ideal::colon_elem(&extended, &self.f[n - 2], budget)?;
                    let c2 = ideal::colon_elem(&extended, &self.f[n - 1], budget)?;
                    let mut ok = true;
                    for h in c1.gens() {
                        if !ideal::membership(h, &c2, budget)? {
                            ok = false;
                            break;
                        }
                    }
                    colon_inclusions.push(ok);
                }
            }
            ClassTag::ClassII => {
                let dpp = self.almost_ci_part();
                let colon = ideal::colon_elem(&dpp, &self.f[n - 1], budget)?;
                let m = presentation_of_ideal_quotient(&colon, &dpp, budget)?;
                g_regular_on_colon_module = Some(koszul::is_regular_sequence_on_presentation(
                    &self.g, &m, budget,
                )?);
            }
        }
        Ok(ClassCheckReport {
            class_tag: self.class_tag,
            base,
            g_regular_on_base,
            g_regular_on_almost_ci,
            colon_inclusions,
            g_regular_on_colon_module,
        })
    }
}

#[derive(Clone, Debug)]
pub struct BaseReport {
    pub deviation: i64,
    pub regular_part_is_regular: bool,
    pub colon_inclusion: bool,
}

impl BaseReport {
    pub fn all_pass(&self) -> bool {
        self.deviation == 2 && self.regular_part_is_regular && self.colon_inclusion
    }
}

#[derive(Clone, Debug)]
pub struct ClassCheckReport {
    pub class_tag: ClassTag,
    pub base: BaseReport,
    pub g_regular_on_base: Vec<bool>,
    pub g_regular_on_almost_ci: Vec<bool>,
    pub colon_inclusions: Vec<bool>,
    pub g_regular_on_colon_module: Option<bool>,
}

impl ClassCheckReport {
    pub fn all_pass(&self) -> bool {
        self.base.all_pass()
            && self.g_regular_on_base.iter().all(|&b| b)
            && self.g_regular_on_almost_ci.iter().all(|&b| b)
            && self.colon_inclusions.iter().all(|&b| b)
            && self.g_regular_on_colon_module.unwrap_or(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "class": match self.class_tag { ClassTag::ClassI => "I", ClassTag::ClassII => "II" },
            "base_deviation": self.base.deviation,
            "base_regular_part": self.base.regular_part_is_regular,
            "base_colon_inclusion": self.base.colon_inclusion,
            "g_regular_on_base": self.g_regular_on_base,
            "g_regular_on_almost_ci": self.g_regular_on_almost_ci,
            "colon_inclusions": self.colon_inclusions,
            "g_regular_on_colon_module": self.g_regular_on_colon_module,
            "all_pass": self.all_pass(),
        })
    }
}

/// Family of the pendant-path graphs: the base is the (l,1,1) graph inside
/// the ring of the full (l,m,n) graph; extensions append the remaining beta
/// edges, then the remaining gamma edges.
///
/// Base order: spine edges, then the beta attachment f_{n-1}, then the gamma
/// attachment f_n.
pub fn family_from_g1(l: usize, m: usize, n: usize, attach: usize) -> Result<DeviationFamily> {
    let g_full = build_g1(l, m, n, attach)?;
    let ring = bei_ring(g_full.nverts, 0)?;
    let nv = g_full.nverts;
    let a = |i: usize| i - 1;
    let b = |i: usize| l + i - 1;
    let c = |i: usize| l + m + i - 1;
    let mut f = Vec::new();
    for i in 1..l {
        f.push(edge_binomial(&ring, nv, a(i), a(i + 1))?);
    }
    f.push(edge_binomial(&ring, nv, a(attach), b(1))?);
    f.push(edge_binomial(&ring, nv, a(attach), c(1))?);
    let mut g = Vec::new();
    for i in 1..m {
        g.push(edge_binomial(&ring, nv, b(i), b(i + 1))?);
    }
    for i in 1..n {
        g.push(edge_binomial(&ring, nv, c(i), c(i + 1))?);
    }
    DeviationFamily::new(
        &ring,
        f,
        g,
        ClassTag::ClassI,
        format!("g1:{},{},{}@{}", l, m, n, attach),
    )
}

/// Family of the pendant-path cycle graphs. The base reorders the (l,1,1)
/// edges so that the first n-2 form a regular sequence: the open spine path,
/// then the beta attachment; f_{n-1} is the cycle-closing edge and f_n the
/// gamma attachment.
pub fn family_from_g2(l: usize, m: usize, n: usize, attach: usize) -> Result<DeviationFamily> {
    let g_full = build_g2(l, m, n, attach)?;
    let ring = bei_ring(g_full.nverts, 0)?;
    let nv = g_full.nverts;
    let a = |i: usize| i - 1;
    let b = |i: usize| l + i - 1;
    let c = |i: usize| l + m + i - 1;
    let mut f = Vec::new();
    for i in 1..l {
        f.push(edge_binomial(&ring, nv, a(i), a(i + 1))?);
    }
    f.push(edge_binomial(&ring, nv, a(attach), b(1))?);
    f.push(edge_binomial(&ring, nv, a(l), a(1))?);
    f.push(edge_binomial(&ring, nv, a(attach), c(1))?);
    let mut g = Vec::new();
    for i in 1..m {
        g.push(edge_binomial(&ring, nv, b(i), b(i + 1))?);
    }
    for i in 1..n {
        g.push(edge_binomial(&ring, nv, c(i), c(i + 1))?);
    }
    DeviationFamily::new(
        &ring,
        f,
        g,
        ClassTag::ClassI,
        format!("g2:{},{},{}@{}", l, m, n, attach),
    )
}

/// The graph whose edge set matches `gens_at(j)` for a graph-built family:
/// useful for cross-checking against the binomial edge ideal builder.
pub fn graph_ideal_matches_family(
    fam: &DeviationFamily,
    graph: &GraphSpec,
    ring: &RingRef,
    budget: &Budget,
) -> Result<bool> {
    let j = binomial_edge_ideal(graph, ring)?;
    ideal::ideal_eq(&j, &fam.ideal_at(fam.k()), budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_family_shape() {
        let fam = family_from_g1(3, 2, 1, 2).unwrap();
        assert_eq!(fam.n(), 4);
        assert_eq!(fam.k(), 1);
        assert_eq!(fam.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(fam.d_alpha(&[0]), 2);
        // base ideal is the (3,1,1) graph's ideal inside the 6-vertex ring
        assert_eq!(fam.ring().nvars(), 12);
    }

    #[test]
    fn g2_family_shape() {
        let fam = family_from_g2(3, 1, 1, 1).unwrap();
        assert_eq!(fam.n(), 5);
        assert_eq!(fam.k(), 0);
        // base: two spine edges, beta attach, closing edge, gamma attach
        assert_eq!(fam.f()[2].render().contains("y4"), true);
    }

    #[test]
    fn ideal_at_matches_graph() {
        let fam = family_from_g1(3, 2, 1, 2).unwrap();
        let g = build_g1(3, 2, 1, 2).unwrap();
        let b = Budget::unlimited();
        assert!(graph_ideal_matches_family(&fam, &g, fam.ring(), &b).unwrap());
    }
}
