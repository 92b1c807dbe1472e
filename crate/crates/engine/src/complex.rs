//! Graded free modules with bidegree shifts, polynomial matrices between
//! them, and chains with vanishing consecutive compositions. Also the two
//! constructions everything downstream leans on: mapping cones and chain-map
//! lifts through resolutions.

use serde_json::json;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matrix::{self, PolyMatrix};
use crate::modgb::{module_gb, ModGb};
use crate::modvec::{ModOrder, ModVec};
use crate::poly::Polynomial;
use crate::ring::{Bideg, RingRef};

#[derive(Clone, Debug)]
pub struct FreeModule {
    pub ring: RingRef,
    pub shifts: Vec<Bideg>,
}

impl PartialEq for FreeModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.shifts == other.shifts
    }
}

impl FreeModule {
    pub fn new(ring: &RingRef, shifts: Vec<Bideg>) -> Self {
        FreeModule {
            ring: ring.clone(),
            shifts,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn zero(ring: &RingRef) -> Self {
        FreeModule::new(ring, vec![])
    }

    /// Twist by B(-d): shifts record generator degrees, so they increase by d.
    /// For a free module written ⊕ B(-a_k), `shifts[k] = a_k`.
    pub fn shifted(&self, d: Bideg) -> FreeModule {
        FreeModule::new(
            &self.ring,
            self.shifts.iter().map(|s| s.add(d)).collect(),
        )
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut shifts = self.shifts.clone();
        shifts.extend(other.shifts.iter().copied());
        FreeModule::new(&self.ring, shifts)
    }
}

/// A degree-zero map of graded free modules: entries[row][col] with
/// bidegree(entries[r][c]) = shifts_source[c] - shifts_target[r] whenever the
/// entry is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub source: FreeModule,
    pub target: FreeModule,
    pub entries: PolyMatrix,
}

impl ModuleMap {
    pub fn new(source: FreeModule, target: FreeModule, entries: PolyMatrix) -> Result<Self> {
        let (r, c) = matrix::shape(&entries);
        if r != target.rank() {
            return Err(Error::InvalidParameter(format!(
                "map has {} rows but target rank {}",
                r,
                target.rank()
            )));
        }
        if target.rank() > 0 && c != source.rank() {
            return Err(Error::InvalidParameter(format!(
                "map has {} columns but source rank {}",
                c,
                source.rank()
            )));
        }
        Ok(ModuleMap {
            source,
            target,
            entries,
        })
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> Self {
        let entries = matrix::zeros(&source.ring, target.rank(), source.rank());
        ModuleMap {
            source,
            target,
            entries,
        }
    }

    pub fn identity_times(ring: &RingRef, module: &FreeModule, f: &Polynomial) -> Result<Self> {
        let shift = f
            .bidegree()
            .ok_or_else(|| Error::NotGraded("scalar chain map needs homogeneous f".into()))?;
        let source = module.shifted(shift);
        let mut entries = matrix::zeros(ring, module.rank(), module.rank());
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = f.clone();
        }
        Ok(ModuleMap {
            source,
            target: module.clone(),
            entries,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.source.ring
    }

    pub fn is_zero(&self) -> bool {
        matrix::is_zero_matrix(&self.entries)
    }

    pub fn compose(&self, inner: &ModuleMap) -> Result<ModuleMap> {
        // self ∘ inner : inner.source -> self.target
        if inner.target.rank() != self.source.rank() {
            return Err(Error::InvalidParameter("maps do not compose".into()));
        }
        let entries = matrix::mat_mul(&self.entries, &inner.entries, self.ring())?;
        ModuleMap::new(inner.source.clone(), self.target.clone(), entries)
    }

    /// Verifies the degree-zero convention entry by entry.
    pub fn check_graded(&self) -> Result<()> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let d = e.bidegree().ok_or_else(|| {
                    Error::NotGraded(format!("entry ({},{}) inhomogeneous", r, c))
                })?;
                let expect = self.source.shifts[c].sub(self.target.shifts[r]);
                if d != expect {
                    return Err(Error::NotGraded(format!(
                        "entry ({},{}) has bidegree {} but shifts need {}",
                        r, c, d, expect
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn columns_as_modvecs(&self, order: &ModOrder) -> Vec<ModVec> {
        (0..self.source.rank())
            .map(|c| ModVec::from_column(self.ring(), order, &self.column(c)))
            .collect()
    }

    /// Groebner basis of the column module, reusable for membership/lifts.
    pub fn column_gb(&self, budget: &Budget) -> Result<(ModOrder, ModGb)> {
        let order = ModOrder::top(self.ring(), self.target.rank().max(1));
        let cols = self.columns_as_modvecs(&order);
        let gb = module_gb(self.ring(), &cols, &order, budget)?;
        Ok((order, gb))
    }

    /// Textual matrix form: one row per line, entries in the polynomial
    /// grammar separated by `, `.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "matrix {}x{}\n",
            self.target.rank(),
            self.source.rank()
        ));
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.render()).collect();
            out.push_str(&cells.join(", "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "source_shifts": self.source.shifts.iter().map(|s| vec![s.0, s.1]).collect::<Vec<_>>(),
            "target_shifts": self.target.shifts.iter().map(|s| vec![s.0, s.1]).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|row| {
                row.iter().map(|e| e.render()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// A chain of composable maps d[k]: modules[k+1] -> modules[k] with
/// d[k] ∘ d[k+1] = 0.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub modules: Vec<FreeModule>,
    pub maps: Vec<ModuleMap>,
}

impl FreeComplex {
    /// A complex concentrated in homological degree 0.
    pub fn single(module: FreeModule) -> Self {
        FreeComplex {
            modules: vec![module],
            maps: vec![],
        }
    }

    pub fn from_maps(maps: Vec<ModuleMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::InvalidParameter("empty complex needs a module".into()));
        }
        let mut modules = vec![maps[0].target.clone()];
        for m in &maps {
            modules.push(m.source.clone());
        }
        let c = FreeComplex { modules, maps };
        c.check_composable()?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module(&self, i: usize) -> Option<&FreeModule> {
        self.modules.get(i)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, |m| m.rank())
    }

    /// The differential F_i -> F_{i-1}; `None` outside range.
    pub fn map(&self, i: usize) -> Option<&ModuleMap> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    fn check_composable(&self) -> Result<()> {
        for (k, m) in self.maps.iter().enumerate() {
            if m.target != self.modules[k] || m.source != self.modules[k + 1] {
                return Err(Error::InvalidParameter(format!(
                    "map {} endpoints do not match modules",
                    k
                )));
            }
        }
        Ok(())
    }

    /// Exact symbolic check that consecutive compositions vanish.
    pub fn check_composition_zero(&self) -> Result<()> {
        for k in 0..self.maps.len().saturating_sub(1) {
            let comp = self.maps[k].compose(&self.maps[k + 1])?;
            if !comp.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "composition of differentials {} and {} is nonzero",
                    k + 1,
                    k + 2
                )));
            }
        }
        Ok(())
    }

    pub fn check_graded(&self) -> Result<()> {
        for m in &self.maps {
            m.check_graded()?;
        }
        Ok(())
    }

    pub fn shifted(&self, d: Bideg) -> FreeComplex {
        let modules: Vec<FreeModule> = self.modules.iter().map(|m| m.shifted(d)).collect();
        let maps: Vec<ModuleMap> = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, m)| ModuleMap {
                source: modules[k + 1].clone(),
                target: modules[k].clone(),
                entries: m.entries.clone(),
            })
            .collect();
        FreeComplex { modules, maps }
    }

    /// Ranks by homological degree.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Drops trailing zero modules.
    pub fn trimmed(mut self) -> FreeComplex {
        while self
            .modules
            .last()
            .map_or(false, |m| m.rank() == 0)
            && self.modules.len() > 1
        {
            self.modules.pop();
            self.maps.pop();
        }
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "ranks": self.ranks(),
            "maps": self.maps.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!("complex with ranks {:?}\n", self.ranks());
        for (k, m) in self.maps.iter().enumerate() {
            out.push_str(&format!("differential {}:\n{}", k + 1, m.render()));
        }
        out
    }
}

/// Mapping cone of a chain map u: A -> B (u[i]: A_i -> B_i):
/// C_i = B_i ⊕ A_{i-1}, differential [[-d_B, u],[0, d_A]].
/// The caller provides A already shifted so every u[i] is degree zero.
pub fn mapping_cone(b: &FreeComplex, a: &FreeComplex, u: &[ModuleMap]) -> Result<FreeComplex> {
    let ring = b.modules[0].ring.clone();
    let levels = b.len().max(a.len() + 1);
    let mut modules = Vec::with_capacity(levels);
    for i in 0..levels {
        let bm = b
            .module(i)
            .cloned()
            .unwrap_or_else(|| FreeModule::zero(&ring));
        let am = if i >= 1 {
            a.module(i - 1)
                .cloned()
                .unwrap_or_else(|| FreeModule::zero(&ring))
        } else {
            FreeModule::zero(&ring)
        };
        modules.push(bm.direct_sum(&am));
    }
    let mut maps = Vec::with_capacity(levels.saturating_sub(1));
    for i in 1..levels {
        let source = modules[i].clone();
        let target = modules[i - 1].clone();
        let b_rank_t = b.module(i - 1).map_or(0, |m| m.rank());
        let b_rank_s = b.module(i).map_or(0, |m| m.rank());
        let a_rank_t = if i >= 2 {
            a.module(i - 2).map_or(0, |m| m.rank())
        } else {
            0
        };
        let a_rank_s = a.module(i - 1).map_or(0, |m| m.rank());
        let mut entries = matrix::zeros(&ring, target.rank(), source.rank());
        // top-left: -d_B
        if let Some(db) = b.map(i) {
            for r in 0..b_rank_t {
                for c in 0..b_rank_s {
                    entries[r][c] = db.entries[r][c].neg();
                }
            }
        }
        // top-right: u_{i-1}: A_{i-1} -> B_{i-1}
        if a_rank_s > 0 && b_rank_t > 0 {
            if let Some(ui) = u.get(i - 1) {
                if ui.entries.len() != b_rank_t {
                    return Err(Error::InvalidParameter(
                        "chain map component has wrong target rank".into(),
                    ));
                }
                for r in 0..b_rank_t {
                    for c in 0..a_rank_s {
                        entries[r][b_rank_s + c] = ui.entries[r][c].clone();
                    }
                }
            } else {
                return Err(Error::InvalidParameter(
                    "chain map missing a required component".into(),
                ));
            }
        }
        // bottom-right: d_A (A_{i-1} -> A_{i-2})
        if i >= 2 {
            if let Some(da) = a.map(i - 1) {
                for r in 0..a_rank_t {
                    for c in 0..a_rank_s {
                        entries[b_rank_t + r][b_rank_s + c] = da.entries[r][c].clone();
                    }
                }
            }
        }
        maps.push(ModuleMap::new(source, target, entries)?);
    }
    let cone = FreeComplex { modules, maps };
    Ok(cone.trimmed())
}

/// Lifts a map to-be-resolved through two resolutions, producing chain map
/// components u[i]: A_i -> B_i.
///
/// `b_aug` gives the augmentation B_0 -> M ⊆ (ambient free module) as the
/// matrix of its columns; `a0_to_ambient` is the composite A_0 -> M in the
/// same ambient coordinates. Solving proceeds column by column by Groebner
/// division; a failed division signals that the requested map does not exist
/// (an acyclicity-hypothesis violation in the callers).
pub fn lift_chain_map(
    ring: &RingRef,
    b_aug: &PolyMatrix,
    b: &FreeComplex,
    a: &FreeComplex,
    a0_to_ambient: &PolyMatrix,
    budget: &Budget,
) -> Result<Vec<ModuleMap>> {
    let mut lifts: Vec<ModuleMap> = Vec::new();
    // level 0
    let ambient_rank = b_aug.len();
    let order0 = ModOrder::top(ring, ambient_rank.max(1));
    let aug_cols: Vec<ModVec> = (0..matrix::shape(b_aug).1)
        .map(|c| {
            let col: Vec<Polynomial> = b_aug.iter().map(|row| row[c].clone()).collect();
            ModVec::from_column(ring, &order0, &col)
        })
        .collect();
    let gb0 = module_gb(ring, &aug_cols, &order0, budget)?;
    let a0_rank = matrix::shape(a0_to_ambient).1;
    let mut u0 = matrix::zeros(ring, b.rank(0), a0_rank);
    for c in 0..a0_rank {
        let col: Vec<Polynomial> = a0_to_ambient.iter().map(|row| row[c].clone()).collect();
        let v = ModVec::from_column(ring, &order0, &col);
        let x = gb0
            .lift(ring, &v, budget)?
            .ok_or_else(|| Error::LiftFailed("level-0 column not in the image".into()))?;
        for (r, e) in x.to_column(b.rank(0)).into_iter().enumerate() {
            u0[r][c] = e;
        }
    }
    lifts.push(ModuleMap::new(
        a.modules[0].clone(),
        b.modules[0].clone(),
        u0,
    )?);

    // higher levels: solve d_B ∘ u_i = u_{i-1} ∘ d_A
    for i in 1..a.len() {
        let da = a.map(i).expect("complex map");
        let target = matrix::mat_mul(&lifts[i - 1].entries, &da.entries, ring)?;
        let (b_rank_i, b_rank_prev) = (b.rank(i), b.rank(i - 1));
        if b_rank_i == 0 {
            if !matrix::is_zero_matrix(&target) {
                return Err(Error::LiftFailed(format!(
                    "level-{} lift needs a nonzero map into a zero module",
                    i
                )));
            }
            lifts.push(ModuleMap::new(
                a.modules[i].clone(),
                FreeModule::zero(ring),
                vec![],
            )?);
            continue;
        }
        let db = b.map(i).expect("resolution map");
        let order = ModOrder::top(ring, b_rank_prev.max(1));
        let db_cols = db.columns_as_modvecs(&order);
        let gb = module_gb(ring, &db_cols, &order, budget)?;
        let mut ui = matrix::zeros(ring, b_rank_i, a.rank(i));
        for c in 0..a.rank(i) {
            let col: Vec<Polynomial> = target.iter().map(|row| row[c].clone()).collect();
            let v = ModVec::from_column(ring, &order, &col);
            let x = gb
                .lift(ring, &v, budget)?
                .ok_or_else(|| Error::LiftFailed(format!("level-{} column has no preimage", i)))?;
            for (r, e) in x.to_column(b_rank_i).into_iter().enumerate() {
                ui[r][c] = e;
            }
        }
        lifts.push(ModuleMap::new(
            a.modules[i].clone(),
            b.modules[i].clone(),
            ui,
        )?);
    }
    Ok(lifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;
    use crate::ring::PolyRing;

    #[test]
    fn cone_of_multiplication_on_rank_one() {
        // B = 0 -> B, f = x: cone is 0 -> B(-1) -> B resolving B/<x>
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b0 = FreeModule::new(&r, vec![Bideg::ZERO]);
        let b = FreeComplex::single(b0.clone());
        let f = poly_parse(&r, "x").unwrap();
        let u0 = ModuleMap::identity_times(&r, &b0, &f).unwrap();
        let a = FreeComplex::single(u0.source.clone());
        let cone = mapping_cone(&b, &a, &[u0]).unwrap();
        assert_eq!(cone.ranks(), vec![1, 1]);
        assert_eq!(cone.modules[1].shifts, vec![Bideg(1, 0)]);
        assert_eq!(cone.maps[0].entries[0][0], f);
        cone.check_graded().unwrap();
        cone.check_composition_zero().unwrap();
    }

    #[test]
    fn cone_ranks_follow_block_shape() {
        // ranks (r0, r1+r0, r2+r1, ...) for the cone of f·id on a complex
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        // Koszul-style complex on (x, y): B(-2) -> B(-1)^2 -> B
        let f0 = FreeModule::new(&r, vec![Bideg::ZERO]);
        let f1 = FreeModule::new(&r, vec![Bideg(1, 0), Bideg(1, 0)]);
        let f2 = FreeModule::new(&r, vec![Bideg(2, 0)]);
        let d1 = ModuleMap::new(
            f1.clone(),
            f0.clone(),
            vec![vec![poly_parse(&r, "x").unwrap(), poly_parse(&r, "y").unwrap()]],
        )
        .unwrap();
        let d2 = ModuleMap::new(
            f2.clone(),
            f1.clone(),
            vec![
                vec![poly_parse(&r, "y").unwrap()],
                vec![poly_parse(&r, "-x").unwrap()],
            ],
        )
        .unwrap();
        let b = FreeComplex::from_maps(vec![d1, d2]).unwrap();
        b.check_composition_zero().unwrap();
        b.check_graded().unwrap();
        let g = poly_parse(&r, "z").unwrap();
        let a = b.shifted(Bideg(1, 0));
        let u: Vec<ModuleMap> = (0..b.len())
            .map(|i| ModuleMap::identity_times(&r, b.module(i).unwrap(), &g).unwrap())
            .collect();
        let cone = mapping_cone(&b, &a, &u).unwrap();
        assert_eq!(cone.ranks(), vec![1, 3, 3, 1]);
        cone.check_composition_zero().unwrap();
        cone.check_graded().unwrap();
    }
}
