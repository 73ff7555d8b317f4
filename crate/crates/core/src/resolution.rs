//! Free resolutions by iterated Schreyer syzygies, minimization and Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::budget;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, schreyer_sort, schreyer_syzygies};
use crate::module::Module;
use crate::ring::{Bidegree, FreeElement, FreeModule, Polynomial, Ring};
use crate::submodule::{element_degree, relations_modulo, Submodule};

/// A homogeneous map of free modules, stored by its columns.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub source: FreeModule,
    pub target: FreeModule,
    /// Column `c` is the image of the `c`-th basis vector of the source.
    pub columns: Vec<FreeElement<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn entry(&self, ring: &Ring<F>, r: usize, c: usize) -> Polynomial<F> {
        ring.component(&self.columns[c], r as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Image of an element of the source.
    pub fn apply(&self, ring: &Ring<F>, v: &FreeElement<F>) -> FreeElement<F> {
        let order = self.target.default_order(ring);
        let mut acc = FreeElement::zero();
        for c in 0..self.columns.len() as u32 {
            let p = ring.component(v, c);
            if !p.is_zero() {
                let w = ring.mul_poly_element(&p, &self.columns[c as usize], &order);
                acc = ring.add_elements(&acc, &w, &order);
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &Ring<F>, other: &ModuleMap<F>) -> ModuleMap<F> {
        ModuleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            columns: other.columns.iter().map(|c| self.apply(ring, c)).collect(),
        }
    }

    /// True when some entry has a nonzero constant term.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.terms().iter().any(|t| t.mono.is_one()))
    }
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_len` of a module.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Arc<Ring<F>>,
    modules: Vec<FreeModule>,
    /// `maps[i]` is the differential `F_{i+1} -> F_i`.
    maps: Vec<ModuleMap<F>>,
    minimal: bool,
    /// The basis of the presentation's free module, expressed in `F_0`
    /// modulo the image of the first differential.
    projection: Vec<FreeElement<F>>,
    /// Presentation basis indices that survive as the basis of `F_0`.
    kept: Vec<usize>,
}

impl<F: Field> Resolution<F> {
    /// Resolve `module`; `max_length` defaults to the number of variables.
    pub fn of_module(module: &Module<F>, minimal: bool, max_length: Option<usize>) -> Result<Self> {
        let ring = module.ring().clone();
        let max_len = max_length.unwrap_or(ring.nvars());
        let mut res = frame(module, max_len + 1)?;
        if minimal {
            res.minimize();
        }
        res.truncate(max_len);
        Ok(res)
    }

    /// Resolve a submodule `N ⊆ F` regarded as a module in its own right.
    pub fn of_submodule(sub: &Submodule<F>, minimal: bool, max_length: Option<usize>) -> Result<Self> {
        let ring = sub.ring().clone();
        let max_len = max_length.unwrap_or(ring.nvars());
        if sub.is_zero() {
            let zero = FreeModule::new(Vec::new());
            return Ok(Resolution { ring, modules: vec![zero], maps: Vec::new(), minimal: true, projection: Vec::new(), kept: Vec::new() });
        }
        let quotient = Module::cokernel(sub.clone());
        let mut res = frame(&quotient, max_len + 2)?;
        res.minimize();
        if res.modules[0].rank() == sub.ambient().rank() && minimal {
            // F/N has F as minimal first module: drop it
            let mut modules = res.modules.split_off(1);
            let mut maps = res.maps.split_off(1);
            let projection = (0..modules[0].rank() as u32).map(|c| FreeElement::basis(&ring, c)).collect();
            maps.truncate(max_len);
            modules.truncate(max_len + 1);
            let kept = (0..modules[0].rank()).collect();
            let mut out = Resolution { ring, modules, maps, minimal: true, projection, kept };
            out.trim_zeros();
            return Ok(out);
        }
        Self::of_module(&Module::from_submodule(sub)?, minimal, Some(max_len))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> Option<&FreeModule> {
        self.modules.get(i)
    }

    /// The differential `∂_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<&ModuleMap<F>> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    pub fn maps(&self) -> &[ModuleMap<F>] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn projection(&self) -> &[FreeElement<F>] {
        &self.projection
    }

    /// For each basis vector of `F_0`, the presentation generator it came from.
    pub fn kept_generators(&self) -> &[usize] {
        &self.kept
    }

    /// Express an element of the presentation's free module in `F_0`.
    pub fn project(&self, v: &FreeElement<F>) -> FreeElement<F> {
        let order = self.modules[0].default_order(&self.ring);
        let mut acc = FreeElement::zero();
        for (j, p) in self.projection.iter().enumerate() {
            let c = self.ring.component(v, j as u32);
            if !c.is_zero() {
                let w = self.ring.mul_poly_element(&c, p, &order);
                acc = self.ring.add_elements(&acc, &w, &order);
            }
        }
        acc
    }

    /// Length of the resolution: the largest `i` with `F_i != 0` (0 for the zero module).
    pub fn length(&self) -> usize {
        (0..self.modules.len()).rev().find(|&i| self.modules[i].rank() > 0).unwrap_or(0)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Rebuild from explicit data (for tests and for padded complexes).
    pub fn from_parts(ring: Arc<Ring<F>>, modules: Vec<FreeModule>, maps: Vec<ModuleMap<F>>) -> Result<Self> {
        if maps.len() + 1 != modules.len() {
            return Err(Error::InvalidArgument("need one more module than maps".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.source != modules[i + 1] || m.target != modules[i] {
                return Err(Error::AmbientMismatch);
            }
        }
        let projection = (0..modules[0].rank() as u32).map(|c| FreeElement::basis(&ring, c)).collect();
        let minimal = maps.iter().all(|m| !m.has_unit_entry());
        let kept = (0..modules[0].rank()).collect();
        Ok(Resolution { ring, modules, maps, minimal, projection, kept })
    }

    fn truncate(&mut self, max_len: usize) {
        self.maps.truncate(max_len);
        self.modules.truncate(max_len + 1);
        self.trim_zeros();
    }

    fn trim_zeros(&mut self) {
        while self.modules.len() > 1 && self.modules.last().map(|m| m.rank()) == Some(0) {
            self.modules.pop();
            self.maps.pop();
        }
    }

    /// Prune unit entries until none is left.
    pub fn minimize(&mut self) {
        let ring = self.ring.clone();
        let f = ring.field();
        for i in 0..self.maps.len() {
            loop {
                let found = self.maps[i].columns.iter().enumerate().find_map(|(c, col)| {
                    col.terms().iter().find(|t| t.mono.is_one()).map(|t| (c, t.comp as usize, t.coeff.clone()))
                });
                let Some((c, r, u)) = found else { break };
                let order = self.modules[i].default_order(&ring);
                let col_c = self.maps[i].columns[c].clone();
                let uinv = f.inv(&u).expect("unit");
                let eliminate = |v: &FreeElement<F>| -> FreeElement<F> {
                    let a = ring.component(v, r as u32);
                    if a.is_zero() {
                        return v.clone();
                    }
                    let factor = ring.scale(&f.neg(&uinv), &a);
                    let w = ring.mul_poly_element(&factor, &col_c, &order);
                    ring.add_elements(v, &w, &order)
                };
                for (k, col) in self.maps[i].columns.iter_mut().enumerate() {
                    if k != c {
                        *col = eliminate(col);
                    }
                }
                if i == 0 {
                    for p in self.projection.iter_mut() {
                        *p = eliminate(p);
                    }
                }
                let mut drop_row = vec![false; self.modules[i].rank()];
                drop_row[r] = true;
                let mut drop_col = vec![false; self.modules[i + 1].rank()];
                drop_col[c] = true;
                // ∂_{i+1}: remove column c and row r
                self.maps[i].columns.remove(c);
                for col in self.maps[i].columns.iter_mut() {
                    *col = col.delete_components(&drop_row);
                }
                if i == 0 {
                    for p in self.projection.iter_mut() {
                        *p = p.delete_components(&drop_row);
                    }
                    self.kept.remove(r);
                } else {
                    self.maps[i - 1].columns.remove(r);
                }
                if i + 1 < self.maps.len() {
                    for col in self.maps[i + 1].columns.iter_mut() {
                        *col = col.delete_components(&drop_col);
                    }
                }
                self.modules[i] = self.modules[i].remove(&drop_row);
                self.modules[i + 1] = self.modules[i + 1].remove(&drop_col);
                self.sync_shapes();
            }
        }
        self.trim_zeros();
        self.minimal = true;
    }

    fn sync_shapes(&mut self) {
        for (i, m) in self.maps.iter_mut().enumerate() {
            m.target = self.modules[i].clone();
            m.source = self.modules[i + 1].clone();
            let order = m.target.default_order(&self.ring);
            for col in m.columns.iter_mut() {
                self.ring.normalize(col, &order);
            }
        }
    }

    /// `M_i = im(∂_i) ⊆ F_{i-1}` for `i >= 1`.
    pub fn syzygy_module(&self, i: usize) -> Result<Submodule<F>> {
        if i == 0 || i > self.modules.len() {
            return Err(Error::OutOfRange { index: i, max: self.modules.len() });
        }
        let target = self.modules[i - 1].clone();
        let cols = self.maps.get(i - 1).map(|m| m.columns.clone()).unwrap_or_default();
        Submodule::new(self.ring.clone(), target, cols)
    }

    /// `∂_i ∘ ∂_{i+1} = 0` for all `i`.
    pub fn composition_vanishes(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&self.ring, &w[1]).is_zero())
    }

    /// `ker ∂_i ⊆ im ∂_{i+1}` for `1 <= i <= length` (exactness at `F_i`).
    pub fn is_exact_at(&self, i: usize) -> Result<bool> {
        if i == 0 || i >= self.modules.len() {
            return Ok(true);
        }
        let d = &self.maps[i - 1];
        let kernel = relations_modulo(&self.ring, &d.target, &d.columns, &[], self.modules[i].shifts())?;
        let image = self.syzygy_module(i + 1).unwrap_or_else(|_| Submodule::zero(self.ring.clone(), self.modules[i].clone()));
        for v in &kernel {
            if !image.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn betti_table(&self) -> Result<BettiTable> {
        if !self.minimal {
            return Err(Error::NotMinimal("Betti numbers need a minimal resolution".into()));
        }
        let mut entries = BTreeMap::new();
        for (i, m) in self.modules.iter().enumerate() {
            for s in m.shifts() {
                *entries.entry((i, s.internal, s.rees)).or_insert(0) += 1;
            }
        }
        Ok(BettiTable { entries, ranks: self.ranks() })
    }
}

fn frame<F: Field>(module: &Module<F>, levels: usize) -> Result<Resolution<F>> {
    let ring = module.ring().clone();
    let f0 = module.free_module().clone();
    let o0 = f0.default_order(&ring);
    let gb = buchberger(&ring, &o0, module.relations().gens(), false)?;
    let mut cols: Vec<FreeElement<F>> = gb.elements().to_vec();
    schreyer_sort(&mut cols);
    let mut modules = vec![f0.clone()];
    let mut maps = Vec::new();
    let mut prev_order = o0;
    for k in 1..=levels {
        budget::check()?;
        if cols.is_empty() {
            break;
        }
        let target = modules[k - 1].clone();
        let shifts: Vec<Bidegree> =
            cols.iter().map(|c| element_degree(&ring, &target, c)).collect::<Result<_>>()?;
        let source = FreeModule::new(shifts);
        let store = target.default_order(&ring);
        let stored: Vec<FreeElement<F>> = cols
            .iter()
            .map(|c| {
                let mut c = c.clone();
                ring.normalize(&mut c, &store);
                c
            })
            .collect();
        modules.push(source.clone());
        maps.push(ModuleMap { source, target, columns: stored });
        if k == levels {
            break;
        }
        let (next_order, mut taus) = schreyer_syzygies(&ring, &prev_order, &cols)?;
        schreyer_sort(&mut taus);
        cols = taus;
        prev_order = next_order;
    }
    let projection = (0..f0.rank() as u32).map(|c| FreeElement::basis(&ring, c)).collect();
    let kept = (0..f0.rank()).collect();
    let mut res = Resolution { ring, modules, maps, minimal: false, projection, kept };
    res.minimal = res.maps.iter().all(|m| !m.has_unit_entry());
    Ok(res)
}

/// Graded Betti numbers `β_{i,(a,b)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `(i, internal, rees) -> multiplicity`.
    pub entries: BTreeMap<(usize, i64, i64), usize>,
    pub ranks: Vec<usize>,
}

impl BettiTable {
    pub fn projective_dimension(&self) -> usize {
        self.ranks.iter().rposition(|r| *r > 0).unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity `max(a - i)` over internal shifts.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(i, a, _)| a - *i as i64).max()
    }

    /// Shifts of `F_i` as `(internal, rees)` with multiplicities.
    pub fn shifts(&self, i: usize) -> Vec<(Bidegree, usize)> {
        self.entries
            .iter()
            .filter(|((k, _, _), _)| *k == i)
            .map(|((_, a, b), n)| (Bidegree::new(*a, *b), *n))
            .collect()
    }

    /// The usual text layout: column `i`, row `j` holds `β_{i, i+j}` (internal degrees).
    pub fn to_text(&self) -> String {
        let mut table: BTreeMap<(i64, usize), usize> = BTreeMap::new();
        for ((i, a, _), n) in &self.entries {
            *table.entry((a - *i as i64, *i)).or_insert(0) += n;
        }
        let cols = self.ranks.len();
        let width = self.ranks.iter().map(|r| r.to_string().len()).max().unwrap_or(1).max(1) + 1;
        let mut out = String::new();
        let _ = write!(out, "{:>6}", "");
        for i in 0..cols {
            let _ = write!(out, "{:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>6}", "total:");
        for r in &self.ranks {
            let _ = write!(out, "{:>width$}", r);
        }
        out.push('\n');
        let rows: Vec<i64> = {
            let mut v: Vec<i64> = table.keys().map(|(j, _)| *j).collect();
            v.dedup();
            v
        };
        if let (Some(&lo), Some(&hi)) = (rows.first(), rows.last()) {
            for j in lo..=hi {
                let _ = write!(out, "{:>6}", format!("{j}:"));
                for i in 0..cols {
                    match table.get(&(j, i)) {
                        Some(n) => {
                            let _ = write!(out, "{:>width$}", n);
                        }
                        None => {
                            let _ = write!(out, "{:>width$}", ".");
                        }
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, a, b), n)| serde_json::json!({"i": i, "internal": a, "rees": b, "count": n}))
            .collect();
        serde_json::json!({
            "ranks": self.ranks,
            "pd": self.projective_dimension(),
            "regularity": self.regularity(),
            "entries": entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;

    fn ideal(names: &[&str], gens: &[&str]) -> Submodule<PrimeField> {
        let r = Ring::polynomial(PrimeField::default(), names).unwrap();
        let g: Vec<_> = gens.iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
        Submodule::ideal(r, &g).unwrap()
    }

    #[test]
    fn koszul_complex_of_the_residue_field() {
        let i = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let res = Resolution::of_module(&Module::quotient_ring(&i).unwrap(), true, None).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        let b = res.betti_table().unwrap();
        assert_eq!(b.regularity(), Some(0));
        assert!(res.composition_vanishes());
        for k in 1..=3 {
            assert!(res.is_exact_at(k).unwrap());
        }
    }

    #[test]
    fn twisted_cubic() {
        let i = ideal(&["a", "b", "c", "d"], &["ac-b2", "bd-c2", "ad-bc"]);
        let res = Resolution::of_module(&Module::quotient_ring(&i).unwrap(), true, None).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        let b = res.betti_table().unwrap();
        assert_eq!(b.shifts(2), vec![(Bidegree::new(3, 0), 2)]);
        assert!(b.to_text().contains("total:"));
    }

    #[test]
    fn nonminimal_presentation_is_pruned() {
        let i = ideal(&["x", "y"], &["x", "x+y", "y", "x2"]);
        let res = Resolution::of_submodule(&i, true, None).unwrap();
        assert_eq!(res.ranks(), vec![2, 1]);
        let q = Resolution::of_module(&Module::quotient_ring(&i).unwrap(), false, None).unwrap();
        assert!(q.composition_vanishes());
    }

    #[test]
    fn submodule_not_in_mf() {
        let r = Ring::polynomial(PrimeField::default(), &["x", "y"]).unwrap();
        let f = FreeModule::free(2);
        let o = f.default_order(&r);
        let one = parse_polynomial(&r, "1").unwrap();
        let x = parse_polynomial(&r, "x").unwrap();
        let y = parse_polynomial(&r, "y").unwrap();
        let gens = vec![
            r.element_from_polys(&[one.clone(), Polynomial::zero()], &o),
            r.element_from_polys(&[Polynomial::zero(), x], &o),
            r.element_from_polys(&[Polynomial::zero(), y], &o),
        ];
        let n = Submodule::new(r, f, gens).unwrap();
        let res = Resolution::of_submodule(&n, true, None).unwrap();
        assert_eq!(res.ranks(), vec![3, 1]);
    }
}
