//! Koszul complexes on generator sequences, their cycles and homology
//! presentations, regularity-of-elements tests on presented modules, and the
//! mapping-cone resolution of the second homology under an added regular
//! element.

use crate::budget::Budget;
use crate::complex::{mapping_cone, FreeComplex, FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};
use crate::matrix;
use crate::modgb::module_gb;
use crate::modvec::{ModOrder, ModVec};
use crate::poly::Polynomial;
use crate::resolution::{columns_to_map, syzygy_map, Presentation};
use crate::ring::Bideg;
#[cfg(test)]
use crate::ring::RingRef;

/// Wedge bases are index subsets of {0..n-1} in colexicographic order; the
/// differential is the alternating contraction against the sequence.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    pub seq: Vec<Polynomial>,
    pub complex: FreeComplex,
    /// bases[i] lists the i-subsets, each ascending, in colex order.
    pub bases: Vec<Vec<Vec<usize>>>,
}

/// All i-subsets of {0..n-1} in colexicographic order (compare by largest
/// differing element).
pub fn subsets_colex(n: usize, i: usize) -> Vec<Vec<usize>> {
    if i > n {
        return vec![];
    }
    if i == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in (i - 1)..n {
        for mut s in subsets_colex(m, i - 1) {
            s.push(m);
            out.push(s);
        }
    }
    out
}

pub fn koszul(seq: &[Polynomial], budget: &Budget) -> Result<KoszulComplex> {
    let _ = budget;
    if seq.is_empty() {
        return Err(Error::InvalidParameter("empty sequence".into()));
    }
    let ring = seq[0].ring().clone();
    let mut degs: Vec<Bideg> = Vec::with_capacity(seq.len());
    for f in seq {
        if f.is_zero() {
            return Err(Error::InvalidParameter("zero entry in sequence".into()));
        }
        degs.push(
            f.bidegree()
                .ok_or_else(|| Error::NotGraded("Koszul complex needs homogeneous forms".into()))?,
        );
    }
    let n = seq.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets_colex(n, i)).collect();
    let mut modules: Vec<FreeModule> = Vec::with_capacity(n + 1);
    for basis in bases.iter() {
        let shifts: Vec<Bideg> = basis
            .iter()
            .map(|s| {
                s.iter()
                    .fold(Bideg::ZERO, |acc, &j| acc.add(degs[j]))
            })
            .collect();
        modules.push(FreeModule::new(&ring, shifts));
    }
    let mut maps: Vec<ModuleMap> = Vec::with_capacity(n);
    for i in 1..=n {
        let source = modules[i].clone();
        let target = modules[i - 1].clone();
        let mut entries = matrix::zeros(&ring, target.rank(), source.rank());
        let index_of: std::collections::HashMap<Vec<usize>, usize> = bases[i - 1]
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k))
            .collect();
        for (col, s) in bases[i].iter().enumerate() {
            for (t, &j) in s.iter().enumerate() {
                let mut sub = s.clone();
                sub.remove(t);
                let row = index_of[&sub];
                let signed = if t % 2 == 0 {
                    seq[j].clone()
                } else {
                    seq[j].neg()
                };
                entries[row][col] = signed;
            }
        }
        maps.push(ModuleMap::new(source, target, entries)?);
    }
    let complex = FreeComplex { modules, maps };
    complex.check_composition_zero()?;
    complex.check_graded()?;
    Ok(KoszulComplex {
        seq: seq.to_vec(),
        complex,
        bases,
    })
}

/// Cycles Z_i = ker(d_i) as a map into V_i (column = cycle generator).
pub fn koszul_cycles(k: &KoszulComplex, i: usize, budget: &Budget) -> Result<ModuleMap> {
    let ring = k.complex.modules[0].ring.clone();
    if i == 0 {
        // Z_0 = V_0 = B
        let v0 = k.complex.modules[0].clone();
        return ModuleMap::new(
            v0.clone(),
            v0,
            vec![vec![Polynomial::one(&ring)]],
        );
    }
    if i >= k.complex.len() {
        let v = FreeModule::zero(&ring);
        return ModuleMap::new(
            FreeModule::zero(&ring),
            v,
            vec![],
        );
    }
    syzygy_map(k.complex.map(i).unwrap(), budget)
}

/// H_i = Z_i / B_i presented on the cycle generators: relations are all
/// combinations of the cycles landing in the boundary module, obtained from
/// syzygies of the concatenated matrix [Z | d_{i+1}].
pub fn koszul_homology(k: &KoszulComplex, i: usize, budget: &Budget) -> Result<Presentation> {
    let ring = k.complex.modules[0].ring.clone();
    let n = k.seq.len();
    if i == 0 {
        // H_0 = B / <sequence>
        let gens = FreeModule::new(&ring, vec![Bideg::ZERO]);
        let shifts: Vec<Bideg> = k.seq.iter().map(|f| f.bidegree().unwrap()).collect();
        let rel = ModuleMap::new(
            FreeModule::new(&ring, shifts),
            gens.clone(),
            vec![k.seq.to_vec()],
        )?;
        let ambient = ModuleMap::new(
            gens.clone(),
            gens.clone(),
            vec![vec![Polynomial::one(&ring)]],
        )?;
        return Ok(Presentation::new(rel, Some(ambient)));
    }
    if i > n {
        let zero = FreeModule::zero(&ring);
        let rel = ModuleMap::new(zero.clone(), zero.clone(), vec![])?;
        return Ok(Presentation::new(rel, None));
    }
    let cycles = koszul_cycles(k, i, budget)?;
    let p = cycles.source.rank();
    let vi = k.complex.modules[i].clone();
    // columns of [Z | d_{i+1}] in V_i
    let order = ModOrder::top(&ring, vi.rank().max(1));
    let mut cols: Vec<ModVec> = cycles.columns_as_modvecs(&order);
    let boundary_cols: Vec<ModVec> = if i < n {
        k.complex.map(i + 1).unwrap().columns_as_modvecs(&order)
    } else {
        vec![]
    };
    cols.extend(boundary_cols);
    let syz = crate::modgb::syzygies_of_columns(&ring, &cols, &order, budget)?;
    // keep the first block of each syzygy: the relation among cycle gens
    let rel_order = ModOrder::top(&ring, p.max(1));
    let mut rel_cols: Vec<ModVec> = Vec::new();
    for s in syz {
        let full = s.to_column(cols.len());
        let head = &full[..p];
        if head.iter().all(|e| e.is_zero()) {
            continue;
        }
        rel_cols.push(ModVec::from_column(&ring, &rel_order, head));
    }
    let relations = columns_to_map(&ring, &cycles.source, rel_cols)?;
    Ok(Presentation::new(relations, Some(cycles)))
}

/// H_i(K) = 0 iff every cycle generator lies in the boundary module.
pub fn koszul_homology_is_zero(k: &KoszulComplex, i: usize, budget: &Budget) -> Result<bool> {
    let ring = k.complex.modules[0].ring.clone();
    let n = k.seq.len();
    if i == 0 || i > n {
        return Ok(i > n);
    }
    let cycles = koszul_cycles(k, i, budget)?;
    if cycles.source.rank() == 0 {
        return Ok(true);
    }
    if i == n {
        // no boundaries at the top
        return Ok(cycles.is_zero());
    }
    let d_next = k.complex.map(i + 1).unwrap();
    let (order, gb) = d_next.column_gb(budget)?;
    for c in 0..cycles.source.rank() {
        let v = ModVec::from_column(&ring, &order, &cycles.column(c));
        if !gb.contains(&ring, &v, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplication by g is injective on the presented module: no u with
/// g·u in im(relations) outside im(relations).
pub fn is_regular_on_presentation(
    g: &Polynomial,
    pres: &Presentation,
    budget: &Budget,
) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let ring = g.ring().clone();
    let p = pres.gen_module.rank();
    if p == 0 {
        return Ok(true);
    }
    let order = ModOrder::top(&ring, p);
    // columns of [g·Id | relations]
    let mut cols: Vec<ModVec> = (0..p)
        .map(|i| ModVec::from_poly(g, i))
        .collect();
    cols.extend(pres.relations.columns_as_modvecs(&order));
    let syz = crate::modgb::syzygies_of_columns(&ring, &cols, &order, budget)?;
    let rel_cols = pres.relations.columns_as_modvecs(&order);
    let rel_gb = module_gb(&ring, &rel_cols, &order, budget)?;
    for s in syz {
        let full = s.to_column(cols.len());
        let head = &full[..p];
        if head.iter().all(|e| e.is_zero()) {
            continue;
        }
        let u = ModVec::from_column(&ring, &order, head);
        if !rel_gb.contains(&ring, &u, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The presented module modulo g: relations gain g·Id columns.
pub fn quotient_presentation_by(g: &Polynomial, pres: &Presentation) -> Result<Presentation> {
    let ring = g.ring().clone();
    let p = pres.gen_module.rank();
    let d = g
        .bidegree()
        .ok_or_else(|| Error::NotGraded("quotient by inhomogeneous element".into()))?;
    let mut entries = pres.relations.entries.clone();
    let extra_shifts: Vec<Bideg> = pres.gen_module.shifts.iter().map(|s| s.add(d)).collect();
    for (r, row) in entries.iter_mut().enumerate() {
        for i in 0..p {
            row.push(if i == r { g.clone() } else { Polynomial::zero(&ring) });
        }
    }
    let mut src_shifts = pres.relations.source.shifts.clone();
    src_shifts.extend(extra_shifts);
    let rel = ModuleMap::new(
        FreeModule::new(&ring, src_shifts),
        pres.gen_module.clone(),
        entries,
    )?;
    Ok(Presentation::new(rel, pres.ambient.clone()))
}

/// Checks that a sequence acts regularly on a presented module, dividing out
/// each element as it goes.
pub fn is_regular_sequence_on_presentation(
    gs: &[Polynomial],
    pres: &Presentation,
    budget: &Budget,
) -> Result<bool> {
    let mut current = pres.clone();
    for g in gs {
        if !is_regular_on_presentation(g, &current, budget)? {
            return Ok(false);
        }
        current = quotient_presentation_by(g, &current)?;
    }
    Ok(true)
}

/// Mapping-cone resolution of H_2(I + <f>, B) from a resolution of
/// H_2(I, B): the cone of multiplication by f. The hypotheses (f regular on
/// B/I and on H_1(I, B)) are checked first.
pub fn h2_cone_resolution(
    l_of_h2: &FreeComplex,
    f: &Polynomial,
    ideal: &Ideal,
    budget: &Budget,
) -> Result<FreeComplex> {
    if !ideal::is_regular_on_quotient(f, ideal, budget)? {
        return Err(Error::HypothesisViolation(
            "f is not regular on B/I".into(),
        ));
    }
    let k = koszul(ideal.gens(), budget)?;
    let h1 = koszul_homology(&k, 1, budget)?;
    if !is_regular_on_presentation(f, &h1, budget)? {
        return Err(Error::HypothesisViolation(
            "f is not regular on the first Koszul homology".into(),
        ));
    }
    multiplication_cone(l_of_h2, f)
}

/// Cone of f·id on a complex; resolves M/fM when the complex resolves M and
/// f is M-regular.
pub fn multiplication_cone(complex: &FreeComplex, f: &Polynomial) -> Result<FreeComplex> {
    let ring = complex.modules[0].ring.clone();
    let d = f
        .bidegree()
        .ok_or_else(|| Error::NotGraded("cone over inhomogeneous element".into()))?;
    let shifted = complex.shifted(d);
    let u: Vec<ModuleMap> = (0..complex.len())
        .map(|i| ModuleMap::identity_times(&ring, complex.module(i).unwrap(), f))
        .collect::<Result<_>>()?;
    mapping_cone(complex, &shifted, &u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;
    use crate::resolution::BettiTable;
    use crate::ring::PolyRing;

    fn polys(ring: &RingRef, texts: &[&str]) -> Vec<Polynomial> {
        texts.iter().map(|t| poly_parse(ring, t).unwrap()).collect()
    }

    #[test]
    fn colex_subsets() {
        assert_eq!(
            subsets_colex(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn koszul_on_two_variables() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let k = koszul(&polys(&r, &["x", "y"]), &b).unwrap();
        assert_eq!(k.complex.ranks(), vec![1, 2, 1]);
        assert_eq!(k.complex.modules[2].shifts, vec![Bideg(2, 0)]);
        assert_eq!(k.complex.modules[1].shifts, vec![Bideg(1, 0), Bideg(1, 0)]);
    }

    #[test]
    fn koszul_shift_bookkeeping() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let k = koszul(&polys(&r, &["x^2", "x*y"]), &b).unwrap();
        assert_eq!(k.complex.modules[1].shifts, vec![Bideg(2, 0), Bideg(2, 0)]);
        assert_eq!(k.complex.modules[2].shifts, vec![Bideg(4, 0)]);
    }

    #[test]
    fn regular_sequence_has_vanishing_higher_homology() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let k = koszul(&polys(&r, &["x", "y", "z"]), &b).unwrap();
        for i in 1..=3 {
            assert!(koszul_homology_is_zero(&k, i, &b).unwrap(), "H_{}", i);
        }
    }

    #[test]
    fn non_regular_pair_has_h1() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let k = koszul(&polys(&r, &["x^2", "x*y"]), &b).unwrap();
        assert!(!koszul_homology_is_zero(&k, 1, &b).unwrap());
        // H_1 is cyclic, annihilated by x: a presentation of (B/<x>)(-shift)
        let h1 = koszul_homology(&k, 1, &b).unwrap();
        let betti = h1.betti(&b).unwrap();
        // minimal resolution of B/<x> shifted: ranks 1,1
        assert_eq!(betti.total(0), 1);
        assert_eq!(betti.total(1), 1);
        let x = poly_parse(&r, "x").unwrap();
        assert!(!is_regular_on_presentation(&x, &h1, &b).unwrap());
        let y = poly_parse(&r, "y").unwrap();
        assert!(is_regular_on_presentation(&y, &h1, &b).unwrap());
    }

    #[test]
    fn cone_resolves_quotient_of_free_module() {
        // resolution of B (rank 1) and f = x: cone resolves B/<x>
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let free = FreeComplex::single(FreeModule::new(&r, vec![Bideg::ZERO]));
        let f = poly_parse(&r, "x").unwrap();
        let cone = multiplication_cone(&free, &f).unwrap();
        assert_eq!(cone.ranks(), vec![1, 1]);
        cone.check_graded().unwrap();
        let betti = BettiTable::of(&cone);
        assert_eq!(betti.rank(1, Bideg(1, 0)), 1);
        let _ = b;
    }
}
