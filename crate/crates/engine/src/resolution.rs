//! Free resolutions by iterated syzygy computation, minimization by unit
//! cancellation, Betti tables, and Castelnuovo-Mumford regularity.

use std::collections::BTreeMap;

use serde_json::json;

use crate::budget::Budget;
use crate::complex::{FreeComplex, FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix;
use crate::modgb::syzygies_of_columns;
use crate::modvec::{ModOrder, ModVec};
use crate::ring::{Bideg, RingRef};

/// Syzygies of the columns of `phi`, as a map into `phi.source` with shifts
/// inferred from homogeneity.
pub fn syzygy_map(phi: &ModuleMap, budget: &Budget) -> Result<ModuleMap> {
    let ring = phi.ring().clone();
    let order = ModOrder::top(&ring, phi.target.rank().max(1));
    let cols = phi.columns_as_modvecs(&order);
    let syz = syzygies_of_columns(&ring, &cols, &order, budget)?;
    columns_to_map(&ring, &phi.source, syz)
}

/// Assembles module vectors over `target` into a degree-zero map from a new
/// free module whose shifts are read off the entries.
pub fn columns_to_map(
    ring: &RingRef,
    target: &FreeModule,
    cols: Vec<ModVec>,
) -> Result<ModuleMap> {
    let mut shifts: Vec<Bideg> = Vec::with_capacity(cols.len());
    let mut entries = matrix::zeros(ring, target.rank(), cols.len());
    for (c, v) in cols.iter().enumerate() {
        let polys = v.to_column(target.rank());
        let mut shift: Option<Bideg> = None;
        for (r, e) in polys.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let d = e.bidegree().ok_or_else(|| {
                Error::NotGraded(format!("syzygy column {} entry {} inhomogeneous", c, r))
            })?;
            let s = d.add(target.shifts[r]);
            match shift {
                None => shift = Some(s),
                Some(prev) if prev != s => {
                    return Err(Error::NotGraded(format!(
                        "syzygy column {} mixes degrees {} and {}",
                        c, prev, s
                    )))
                }
                _ => {}
            }
        }
        shifts.push(shift.unwrap_or(Bideg::ZERO));
        for (r, e) in polys.into_iter().enumerate() {
            entries[r][c] = e;
        }
    }
    ModuleMap::new(FreeModule::new(ring, shifts), target.clone(), entries)
}

/// Options for `resolve_cokernel`.
#[derive(Clone, Copy, Debug)]
pub struct ResolveOpts {
    pub max_len: usize,
    /// Cancel unit entries after each syzygy step, keeping ranks near-minimal
    /// as the tower grows.
    pub minimize_steps: bool,
}

impl Default for ResolveOpts {
    fn default() -> Self {
        ResolveOpts {
            max_len: 64,
            minimize_steps: true,
        }
    }
}

/// Free resolution of coker(phi1) extending the given presentation:
/// F_0 <- F_1 <- F_2 <- ... with the presentation map first. The resolution
/// is exact except at homological degree 0 and stops when a syzygy step is
/// zero or `max_len` maps have been produced.
pub fn resolve_cokernel(phi1: ModuleMap, opts: ResolveOpts, budget: &Budget) -> Result<FreeComplex> {
    let mut modules = vec![phi1.target.clone(), phi1.source.clone()];
    let mut maps = vec![phi1];
    loop {
        if maps.len() >= opts.max_len {
            break;
        }
        let last = maps.last().unwrap();
        if last.source.rank() == 0 || last.is_zero() {
            break;
        }
        let next = syzygy_map(last, budget)?;
        if next.source.rank() == 0 {
            break;
        }
        modules.push(next.source.clone());
        maps.push(next);
        if opts.minimize_steps {
            let k = maps.len() - 1;
            cancel_units_at(&mut modules, &mut maps, k);
            if maps[k].source.rank() == 0 {
                modules.pop();
                maps.pop();
                break;
            }
        }
    }
    let complex = FreeComplex { modules, maps };
    Ok(complex.trimmed())
}

/// Minimal free resolution of B/I.
pub fn resolve_quotient_ring(ideal: &Ideal, budget: &Budget) -> Result<FreeComplex> {
    let ring = ideal.ring().clone();
    let f0 = FreeModule::new(&ring, vec![Bideg::ZERO]);
    let gens = ideal.gens().to_vec();
    let mut shifts = Vec::with_capacity(gens.len());
    for g in &gens {
        shifts.push(
            g.bidegree()
                .ok_or_else(|| Error::NotGraded("resolution needs homogeneous generators".into()))?,
        );
    }
    let f1 = FreeModule::new(&ring, shifts);
    let entries = vec![gens];
    let phi1 = ModuleMap::new(f1, f0, entries)?;
    let complex = resolve_cokernel(phi1, ResolveOpts::default(), budget)?;
    Ok(minimize(complex))
}

/// Removes a unit entry at map `k`, position (r, c): basis element c of the
/// source and r of the target cancel. Adjacent maps shrink accordingly; the
/// composition identities keep everything a complex.
fn cancel_unit(modules: &mut [FreeModule], maps: &mut [ModuleMap], k: usize, r: usize, c: usize) {
    let ring = maps[k].ring().clone();
    let p = ring.charac();
    let u = maps[k].entries[r][c].clone();
    let u_inv_entry = {
        let lc = u.lead_coeff().unwrap().clone();
        let inv = lc.inv(p).expect("unit entry");
        inv
    };
    let old = &maps[k].entries;
    let (rows, cols) = matrix::shape(old);
    let mut fresh = matrix::zeros(&ring, rows - 1, cols - 1);
    for a in 0..rows {
        if a == r {
            continue;
        }
        for b in 0..cols {
            if b == c {
                continue;
            }
            let correction = old[a][c]
                .mul(&old[r][b])
                .and_then(|m| Ok(m.scale(&u_inv_entry)))
                .expect("unit cancellation");
            let val = old[a][b].sub(&correction).expect("unit cancellation");
            let (na, nb) = (if a > r { a - 1 } else { a }, if b > c { b - 1 } else { b });
            fresh[na][nb] = val;
        }
    }
    let mut src_shifts = maps[k].source.shifts.clone();
    src_shifts.remove(c);
    let mut tgt_shifts = maps[k].target.shifts.clone();
    tgt_shifts.remove(r);
    let new_source = FreeModule::new(&ring, src_shifts);
    let new_target = FreeModule::new(&ring, tgt_shifts);
    maps[k] = ModuleMap::new(new_source.clone(), new_target.clone(), fresh).expect("shapes");
    modules[k] = new_target.clone();
    modules[k + 1] = new_source.clone();

    // the next map loses the row for the cancelled source basis element
    if k + 1 < maps.len() {
        maps[k + 1].entries.remove(c);
        maps[k + 1].target = new_source;
    }
    // the previous map loses the column for the cancelled target basis element
    if k > 0 {
        for row in maps[k - 1].entries.iter_mut() {
            row.remove(r);
        }
        maps[k - 1].source = new_target;
    }
}

fn find_unit(maps: &[ModuleMap], k: usize) -> Option<(usize, usize)> {
    // deterministic scan: leftmost column, then lowest row
    let m = &maps[k];
    let (rows, cols) = matrix::shape(&m.entries);
    for c in 0..cols {
        for r in 0..rows {
            if m.entries[r][c].is_unit() {
                return Some((r, c));
            }
        }
    }
    None
}

fn cancel_units_at(modules: &mut Vec<FreeModule>, maps: &mut Vec<ModuleMap>, k: usize) {
    while let Some((r, c)) = find_unit(maps, k) {
        cancel_unit(modules, maps, k, r, c);
    }
}

/// Gaussian removal of unit entries across the whole complex; the result has
/// no unit entry in any differential and the same homology. Differentials are
/// processed from homological degree 1 upward, leftmost-lowest unit first.
pub fn minimize(complex: FreeComplex) -> FreeComplex {
    let mut modules = complex.modules;
    let mut maps = complex.maps;
    loop {
        let mut found = None;
        for k in 0..maps.len() {
            if let Some((r, c)) = find_unit(&maps, k) {
                found = Some((k, r, c));
                break;
            }
        }
        match found {
            Some((k, r, c)) => cancel_unit(&mut modules, &mut maps, k, r, c),
            None => break,
        }
    }
    FreeComplex { modules, maps }.trimmed()
}

/// Betti table of a complex: (homological degree, generator bidegree) -> rank.
/// Minimal complexes give minimal Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, Bideg), usize>,
}

impl BettiTable {
    pub fn of(complex: &FreeComplex) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, m) in complex.modules.iter().enumerate() {
            for s in &m.shifts {
                *entries.entry((i, *s)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn rank(&self, i: usize, shift: Bideg) -> usize {
        self.entries.get(&(i, shift)).copied().unwrap_or(0)
    }

    /// Total rank in homological degree i.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Collapses bidegrees onto the x-grading: beta_{i,j} with j the x-shift.
    pub fn single_graded(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for ((i, d), r) in &self.entries {
            *out.entry((*i, d.x())).or_insert(0) += r;
        }
        out
    }

    /// reg = max(j - i) over nonzero beta_{i,j} in the x-grading.
    pub fn regularity(&self) -> i64 {
        self.entries
            .iter()
            .map(|((i, d), _)| d.x() - *i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, d), r)| json!({"i": i, "shift": [d.0, d.1], "rank": r}))
            .collect();
        json!(rows)
    }

    /// CSV over the x-grading: rows are homological degrees, columns shifts.
    pub fn to_csv(&self) -> String {
        let sg = self.single_graded();
        let imax = sg.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let jmin = sg.keys().map(|(_, j)| *j).min().unwrap_or(0);
        let jmax = sg.keys().map(|(_, j)| *j).max().unwrap_or(0);
        let mut out = String::from("i\\j");
        for j in jmin..=jmax {
            out.push_str(&format!(",{}", j));
        }
        out.push('\n');
        for i in 0..=imax {
            out.push_str(&format!("{}", i));
            for j in jmin..=jmax {
                out.push_str(&format!(",{}", sg.get(&(i, j)).copied().unwrap_or(0)));
            }
            out.push('\n');
        }
        out
    }
}

/// Castelnuovo-Mumford regularity of B/I in the x-grading, from the minimal
/// free resolution.
pub fn regularity_of_quotient(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    let res = resolve_quotient_ring(ideal, budget)?;
    Ok(BettiTable::of(&res).regularity())
}

/// A module given by generators inside an ambient free module and relations
/// among those generators: M = im(gens) / im(gens·rels) presented as
/// coker(rels). The ambient columns let homology modules remember their cycle
/// representatives.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Generator degrees (shifts of the presenting free module).
    pub gen_module: FreeModule,
    /// Relations: map into `gen_module`.
    pub relations: ModuleMap,
    /// Optional ambient realization of the generators (columns in a free
    /// module), kept for augmentation bookkeeping.
    pub ambient: Option<ModuleMap>,
}

impl Presentation {
    pub fn new(relations: ModuleMap, ambient: Option<ModuleMap>) -> Self {
        Presentation {
            gen_module: relations.target.clone(),
            relations,
            ambient,
        }
    }

    pub fn is_zero_module(&self, budget: &Budget) -> Result<bool> {
        // the cokernel vanishes iff every unit vector lies in the relation image
        let ring = self.relations.ring().clone();
        let (_, gb) = self.relations.column_gb(budget)?;
        for i in 0..self.gen_module.rank() {
            let e = ModVec::unit(&ring, i);
            if !gb.contains(&ring, &e, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cancels unit relation entries, dropping redundant generators while
    /// keeping ambient representatives of the survivors.
    pub fn minimalize(&self) -> Presentation {
        let ring = self.relations.ring().clone();
        let mut rel = self.relations.clone();
        let mut ambient = self.ambient.clone();
        loop {
            let mut unit = None;
            'scan: for c in 0..rel.source.rank() {
                for r in 0..rel.target.rank() {
                    if rel.entries[r][c].is_unit() {
                        unit = Some((r, c));
                        break 'scan;
                    }
                }
            }
            let (r, c) = match unit {
                Some(u) => u,
                None => break,
            };
            let p = ring.charac();
            let u_inv = rel.entries[r][c].lead_coeff().unwrap().inv(p).unwrap();
            let (rows, cols) = matrix::shape(&rel.entries);
            let mut fresh = matrix::zeros(&ring, rows - 1, cols - 1);
            for a in 0..rows {
                if a == r {
                    continue;
                }
                for b in 0..cols {
                    if b == c {
                        continue;
                    }
                    let corr = rel.entries[a][c]
                        .mul(&rel.entries[r][b])
                        .unwrap()
                        .scale(&u_inv);
                    let v = rel.entries[a][b].sub(&corr).unwrap();
                    fresh[if a > r { a - 1 } else { a }][if b > c { b - 1 } else { b }] = v;
                }
            }
            let mut tgt = rel.target.shifts.clone();
            tgt.remove(r);
            let mut src = rel.source.shifts.clone();
            src.remove(c);
            rel = ModuleMap::new(
                FreeModule::new(&ring, src),
                FreeModule::new(&ring, tgt),
                fresh,
            )
            .unwrap();
            if let Some(a) = ambient.as_mut() {
                for row in a.entries.iter_mut() {
                    row.remove(r);
                }
                a.source = rel.target.clone();
            }
        }
        Presentation {
            gen_module: rel.target.clone(),
            relations: rel,
            ambient,
        }
    }

    /// Free resolution of the presented module; minimal when `minimize_all`.
    pub fn resolve(&self, minimize_all: bool, budget: &Budget) -> Result<FreeComplex> {
        let minimal = self.minimalize();
        let complex = resolve_cokernel(minimal.relations, ResolveOpts::default(), budget)?;
        Ok(if minimize_all { minimize(complex) } else { complex })
    }

    pub fn betti(&self, budget: &Budget) -> Result<BettiTable> {
        Ok(BettiTable::of(&self.resolve(true, budget)?))
    }
}

/// Presentation of the subquotient Q/N for ideals N ⊆ Q: generators are the
/// generators of Q, relations all combinations landing in N.
pub fn presentation_of_ideal_quotient(
    q: &Ideal,
    n: &Ideal,
    budget: &Budget,
) -> Result<Presentation> {
    let ring = q.ring().clone();
    let p = q.gens().len();
    let mut shifts = Vec::with_capacity(p);
    for g in q.gens() {
        shifts.push(
            g.bidegree()
                .ok_or_else(|| Error::NotGraded("subquotient needs homogeneous generators".into()))?,
        );
    }
    let gen_module = FreeModule::new(&ring, shifts);
    let mut row: Vec<crate::poly::Polynomial> = q.gens().to_vec();
    row.extend(n.gens().iter().cloned());
    let syz = crate::modgb::syzygies_of_row(&ring, &row, budget)?;
    let order = ModOrder::top(&ring, p.max(1));
    let mut rel_cols: Vec<ModVec> = Vec::new();
    for s in syz {
        let full = s.to_column(row.len());
        let head = &full[..p];
        if head.iter().all(|e| e.is_zero()) {
            continue;
        }
        rel_cols.push(ModVec::from_column(&ring, &order, head));
    }
    let relations = columns_to_map(&ring, &gen_module, rel_cols)?;
    let ambient = ModuleMap::new(
        gen_module.clone(),
        FreeModule::new(&ring, vec![Bideg::ZERO]),
        vec![q.gens().to_vec()],
    )?;
    Ok(Presentation::new(relations, Some(ambient)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::parse::poly_parse;
    use crate::ring::PolyRing;

    fn ideal_of(ring: &RingRef, texts: &[&str]) -> Ideal {
        let gens = texts.iter().map(|t| poly_parse(ring, t).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn koszul_resolution_of_three_variables() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x", "y", "z"]);
        let res = resolve_quotient_ring(&i, &b).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        res.check_composition_zero().unwrap();
        res.check_graded().unwrap();
        let betti = BettiTable::of(&res);
        assert_eq!(betti.rank(0, Bideg(0, 0)), 1);
        assert_eq!(betti.rank(1, Bideg(1, 0)), 3);
        assert_eq!(betti.rank(2, Bideg(2, 0)), 3);
        assert_eq!(betti.rank(3, Bideg(3, 0)), 1);
        assert_eq!(betti.regularity(), 0);
    }

    #[test]
    fn two_quadrics_complete_intersection() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x^2", "y^2"]);
        let res = resolve_quotient_ring(&i, &b).unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 1]);
        let betti = BettiTable::of(&res);
        assert_eq!(betti.rank(1, Bideg(2, 0)), 2);
        assert_eq!(betti.rank(2, Bideg(4, 0)), 1);
        assert_eq!(betti.regularity(), 2);
    }

    #[test]
    fn regularity_examples() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        assert_eq!(
            regularity_of_quotient(&ideal_of(&r, &["x", "y", "z"]), &b).unwrap(),
            0
        );
    }

    #[test]
    fn minimize_collapses_trivial_summand() {
        // presentation of B/<x> padded with a redundant generator
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x", "x^2 + x*y"]);
        let res = resolve_quotient_ring(&i, &b).unwrap();
        assert_eq!(res.ranks(), vec![1, 1]);
        let betti = BettiTable::of(&res);
        assert_eq!(betti.rank(1, Bideg(1, 0)), 1);
        assert_eq!(betti.regularity(), 0);
    }

    #[test]
    fn presentation_zero_module_detection() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        let b = Budget::unlimited();
        // coker of identity is zero
        let f1 = FreeModule::new(&r, vec![Bideg::ZERO]);
        let rel = ModuleMap::new(
            f1.clone(),
            f1.clone(),
            vec![vec![Polynomial::one(&r)]],
        )
        .unwrap();
        let p = Presentation::new(rel, None);
        assert!(p.is_zero_module(&b).unwrap());
        let minimal = p.minimalize();
        assert_eq!(minimal.gen_module.rank(), 0);
    }
}
