//! Linear parts of minimal resolutions, the linearity defect, componentwise
//! linearity and the mapping-cone formula.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::buchberger;
use crate::module::Module;
use crate::resolution::{ModuleMap, Resolution};
use crate::ring::{Bidegree, FreeElement, FreeModule, Polynomial, Ring, Term};
use crate::submodule::{base_monomials, relations_modulo, Submodule};

/// The linear part of a minimal resolution: only internal-degree-one
/// entries survive, and `F_i` is regraded to sit in degree `i`.
#[derive(Clone, Debug)]
pub struct LinearPart<F: Field> {
    ring: Arc<Ring<F>>,
    modules: Vec<FreeModule>,
    maps: Vec<ModuleMap<F>>,
}

impl<F: Field> LinearPart<F> {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `maps[i]` is the differential `(lin F)_{i+1} -> (lin F)_i`.
    pub fn maps(&self) -> &[ModuleMap<F>] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn composition_vanishes(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&self.ring, &w[1]).is_zero())
    }

    /// `ker ∂_i ⊆ im ∂_{i+1}` at position `i`.
    pub fn homology_vanishes(&self, i: usize) -> Result<bool> {
        if i >= self.modules.len() || self.modules[i].rank() == 0 {
            return Ok(true);
        }
        let kernel: Vec<FreeElement<F>> = if i == 0 {
            (0..self.modules[0].rank() as u32).map(|c| FreeElement::basis(&self.ring, c)).collect()
        } else {
            let d = &self.maps[i - 1];
            relations_modulo(&self.ring, &d.target, &d.columns, &[], self.modules[i].shifts())?
        };
        if kernel.is_empty() {
            return Ok(true);
        }
        let image = match self.maps.get(i) {
            Some(d) => Submodule::new(self.ring.clone(), self.modules[i].clone(), d.columns.clone())?,
            None => Submodule::zero(self.ring.clone(), self.modules[i].clone()),
        };
        for v in &kernel {
            if !image.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sup { i : H_i(lin F) != 0 }`, and 0 when every homology vanishes.
    pub fn defect(&self) -> Result<usize> {
        for i in (0..self.modules.len()).rev() {
            if !self.homology_vanishes(i)? {
                return Ok(i);
            }
        }
        Ok(0)
    }
}

/// Keep the linear entries of a minimal resolution.
pub fn linear_part<F: Field>(res: &Resolution<F>) -> Result<LinearPart<F>> {
    if !res.is_minimal() {
        return Err(Error::NotMinimal("the linear part needs a minimal resolution".into()));
    }
    let ring = res.ring().clone();
    let modules: Vec<FreeModule> = res
        .modules()
        .iter()
        .enumerate()
        .map(|(i, m)| FreeModule::new(vec![Bidegree::new(i as i64, 0); m.rank()]))
        .collect();
    let mut maps = Vec::with_capacity(res.maps().len());
    for (i, d) in res.maps().iter().enumerate() {
        let target = modules[i].clone();
        let order = target.default_order(&ring);
        let columns = d
            .columns
            .iter()
            .enumerate()
            .map(|(c, col)| {
                let top = d.source.shift(c).internal;
                let terms: Vec<Term<F>> = col
                    .terms()
                    .iter()
                    .filter(|t| {
                        ring.mono_bidegree(&t.mono).internal == 1
                            && top - d.target.shift(t.comp as usize).internal == 1
                    })
                    .cloned()
                    .collect();
                let mut v = FreeElement::from_terms(terms);
                ring.normalize(&mut v, &order);
                v
            })
            .collect();
        maps.push(ModuleMap { source: modules[i + 1].clone(), target, columns });
    }
    Ok(LinearPart { ring, modules, maps })
}

fn require_base_ring<F: Field>(ring: &Ring<F>) -> Result<()> {
    if ring.nvars() != ring.base_indices().len() {
        return Err(Error::InvalidArgument("linearity defect is computed over the base ring only".into()));
    }
    Ok(())
}

/// `lind_R M`; 0 for the zero module.
pub fn linearity_defect<F: Field>(module: &Module<F>) -> Result<usize> {
    require_base_ring(module.ring())?;
    let res = Resolution::of_module(module, true, None)?;
    linear_part(&res)?.defect()
}

/// `lind_R N` of a submodule regarded as a module.
pub fn linearity_defect_of_submodule<F: Field>(sub: &Submodule<F>) -> Result<usize> {
    require_base_ring(sub.ring())?;
    let res = Resolution::of_submodule(sub, true, None)?;
    linear_part(&res)?.defect()
}

/// For each degree `d` of a minimal generator, the submodule generated by
/// `N_d` has a `d`-linear resolution.
pub fn is_componentwise_linear<F: Field>(sub: &Submodule<F>) -> Result<bool> {
    require_base_ring(sub.ring())?;
    let ring = sub.ring();
    let min = sub.trim()?;
    let gens = min.gens().to_vec();
    let degrees: Vec<i64> = min.generator_degrees()?.iter().map(|d| d.internal).collect();
    let mut distinct = degrees.clone();
    distinct.sort();
    distinct.dedup();
    let order = sub.order().clone();
    for &d in &distinct {
        let mut part = Vec::new();
        for (g, &e) in gens.iter().zip(&degrees) {
            if e > d {
                continue;
            }
            for m in base_monomials(ring, (d - e) as usize) {
                let mut v = ring.mul_mono_element(&m, g);
                ring.normalize(&mut v, &order);
                part.push(v);
            }
        }
        let component = Submodule::new(ring.clone(), sub.ambient().clone(), part)?;
        let res = Resolution::of_submodule(&component, true, None)?;
        let linear = res
            .modules()
            .iter()
            .enumerate()
            .all(|(i, m)| m.shifts().iter().all(|s| s.internal == d + i as i64));
        if !linear {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The inputs and outcome of the mapping-cone formula `lind(P/M) = max{lind P, lind M + 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingCone {
    pub lind_p: usize,
    pub lind_m: usize,
    /// `max{lind P, lind M + 1}`.
    pub lind_quotient: usize,
    /// Ranks of the lifted maps `φ_i : F_i -> G_i`.
    pub lift_lengths: usize,
}

/// Apply the mapping-cone formula to `M ⊆ P`, where `P = G/K` and `M` is
/// generated by the images of `m` in `G`.  Fails when some lifting matrix
/// has an entry outside `m²`.
pub fn mapping_cone_lind<F: Field>(p: &Module<F>, m: &[FreeElement<F>]) -> Result<MappingCone> {
    let ring = p.ring().clone();
    require_base_ring(&ring)?;
    let g_res = Resolution::of_module(p, true, None)?;
    let sub = Module::subquotient(ring.clone(), p.free_module(), m, p.relations().gens())?;
    let f_res = Resolution::of_module(&sub, true, None)?;
    if f_res.modules()[0].rank() == 0 {
        return Err(Error::InvalidArgument("the submodule is zero".into()));
    }
    let g0 = &g_res.modules()[0];
    let order0 = g0.default_order(&ring);
    // φ_0: basis of F_0 -> generators of M in G_0
    let mut phi: Vec<FreeElement<F>> = f_res
        .kept_generators()
        .iter()
        .map(|&k| {
            let mut v = g_res.project(&m[k]);
            ring.normalize(&mut v, &order0);
            v
        })
        .collect();
    check_m2(&ring, &phi, 0)?;
    let mut lifts = 0;
    for i in 1..f_res.modules().len() {
        let Some(df) = f_res.differential(i) else { break };
        let gi = g_res.module(i).cloned().unwrap_or_else(|| FreeModule::new(Vec::new()));
        let prev_target = g_res.modules()[i - 1].clone();
        let prev_order = prev_target.default_order(&ring);
        // φ_{i-1} ∘ ∂^F_i
        let images: Vec<FreeElement<F>> = df
            .columns
            .iter()
            .map(|col| {
                let mut acc = FreeElement::zero();
                for t in col.terms() {
                    let w = ring.mul_poly_element(
                        &ring.from_terms(vec![(t.mono, t.coeff.clone())]),
                        &phi[t.comp as usize],
                        &prev_order,
                    );
                    acc = ring.add_elements(&acc, &w, &prev_order);
                }
                acc
            })
            .collect();
        let next: Vec<FreeElement<F>> = if gi.rank() == 0 {
            if images.iter().any(|v| !v.is_zero()) {
                return Err(Error::InvalidArgument("the inclusion does not lift".into()));
            }
            images.iter().map(|_| FreeElement::zero()).collect()
        } else {
            let dg = g_res.differential(i).expect("differential");
            let gb = buchberger(&ring, &prev_order, &dg.columns, true)?;
            let oi = gi.default_order(&ring);
            let mut out = Vec::with_capacity(images.len());
            for (c, v) in images.iter().enumerate() {
                let lift = gb.lift(&ring, v).ok_or_else(|| Error::InvalidArgument("the inclusion does not lift".into()))?;
                out.push(homogeneous_part(&ring, &lift, &gi, df.source.shift(c).internal, &oi));
            }
            out
        };
        check_m2(&ring, &next, i)?;
        phi = next;
        lifts = i;
        if gi.rank() == 0 {
            break;
        }
    }
    let lind_p = linear_part(&g_res)?.defect()?;
    let lind_m = linear_part(&f_res)?.defect()?;
    Ok(MappingCone { lind_p, lind_m, lind_quotient: lind_p.max(lind_m + 1), lift_lengths: lifts })
}

fn homogeneous_part<F: Field>(
    ring: &Ring<F>,
    v: &FreeElement<F>,
    module: &FreeModule,
    degree: i64,
    order: &crate::order::ModuleOrder,
) -> FreeElement<F> {
    let terms: Vec<Term<F>> = v
        .terms()
        .iter()
        .filter(|t| ring.mono_bidegree(&t.mono).internal + module.shift(t.comp as usize).internal == degree)
        .cloned()
        .collect();
    let mut out = FreeElement::from_terms(terms);
    ring.normalize(&mut out, order);
    out
}

fn check_m2<F: Field>(ring: &Ring<F>, columns: &[FreeElement<F>], degree: usize) -> Result<()> {
    for col in columns {
        for t in col.terms() {
            if ring.base_degree(&t.mono) < 2 {
                let p: Polynomial<F> = ring.component(col, t.comp);
                return Err(Error::LiftingCondition { degree, entry: ring.format(&p) });
            }
        }
    }
    Ok(())
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
    fn linear_part_truncates_quadrics() {
        let i = ideal(&["x", "y"], &["x2", "y2"]);
        let res = Resolution::of_submodule(&i, true, None).unwrap();
        let lin = linear_part(&res).unwrap();
        assert!(lin.maps()[0].is_zero());
        assert!(!lin.homology_vanishes(1).unwrap());
        assert_eq!(lin.defect().unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_is_linear() {
        let i = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        assert_eq!(linearity_defect_of_submodule(&i).unwrap(), 0);
        assert!(is_componentwise_linear(&i).unwrap());
        assert!(!is_componentwise_linear(&ideal(&["x", "y"], &["x2", "y2"])).unwrap());
    }

    #[test]
    fn mixed_linear_entry_is_kept() {
        let i = ideal(&["x", "y"], &["x", "y2"]);
        let res = Resolution::of_submodule(&i, true, None).unwrap();
        let lin = linear_part(&res).unwrap();
        let col = &lin.maps()[0].columns[0];
        assert_eq!(col.len(), 1);
        assert!(lin.composition_vanishes());
    }

    #[test]
    fn zero_module_has_defect_zero() {
        let i = ideal(&["x"], &["1"]);
        let q = Module::quotient_ring(&i).unwrap();
        assert_eq!(linearity_defect(&q).unwrap(), 0);
    }

    #[test]
    fn lifting_condition_rejects_the_maximal_ideal() {
        let i = ideal(&["x", "y"], &["x", "y"]);
        let r = i.ring().clone();
        let p = Module::free(r.clone(), FreeModule::free(1));
        let m: Vec<_> = i.gens().to_vec();
        assert!(matches!(mapping_cone_lind(&p, &m), Err(Error::LiftingCondition { degree: 0, .. })));
    }
}
