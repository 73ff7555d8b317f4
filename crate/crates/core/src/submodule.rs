//! Submodules of graded free modules and the operations built on Gröbner bases.

use std::sync::{Arc, OnceLock};

use crate::budget;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::ring::{Bidegree, FreeElement, FreeModule, Homogeneity, Polynomial, Ring, Term};

/// A finitely generated submodule of a graded free module.
///
/// The Gröbner basis for the submodule's order is computed on first use and
/// then shared by every clone made afterwards.
#[derive(Debug)]
pub struct Submodule<F: Field> {
    ring: Arc<Ring<F>>,
    ambient: FreeModule,
    gens: Vec<FreeElement<F>>,
    order: ModuleOrder,
    gb: OnceLock<Arc<GroebnerBasis<F>>>,
}

impl<F: Field> Clone for Submodule<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Submodule {
            ring: self.ring.clone(),
            ambient: self.ambient.clone(),
            gens: self.gens.clone(),
            order: self.order.clone(),
            gb,
        }
    }
}

/// Bidegree of a nonzero homogeneous element of `module`.
pub fn element_degree<F: Field>(ring: &Ring<F>, module: &FreeModule, v: &FreeElement<F>) -> Result<Bidegree> {
    match ring.element_bidegree(v, module) {
        Homogeneity::Homogeneous(d) => Ok(d),
        Homogeneity::Zero => Err(Error::InvalidArgument("the zero element has no degree".into())),
        Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous(ring.format_element(v))),
    }
}

/// Bidegree of `v`, or of its leading term when `v` is not homogeneous.
fn lead_degree<F: Field>(ring: &Ring<F>, module: &FreeModule, v: &FreeElement<F>) -> Bidegree {
    match ring.element_bidegree(v, module) {
        Homogeneity::Homogeneous(d) => d,
        _ => v
            .lead()
            .map(|t| ring.mono_bidegree(&t.mono) + module.shift(t.comp as usize))
            .unwrap_or(Bidegree::ZERO),
    }
}

/// All monomials of degree `q` in the base variables.
pub fn base_monomials<F: Field>(ring: &Ring<F>, q: usize) -> Vec<Monomial> {
    let base = ring.base_indices();
    let mut out = Vec::new();
    let mut cur = ring.one();
    fn rec(base: &[usize], k: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if k + 1 == base.len() {
            cur.set_exponent(base[k], left as u16);
            out.push(*cur);
            cur.set_exponent(base[k], 0);
            return;
        }
        for e in (0..=left).rev() {
            cur.set_exponent(base[k], e as u16);
            rec(base, k + 1, left - e, cur, out);
        }
        cur.set_exponent(base[k], 0);
    }
    if base.is_empty() {
        if q == 0 {
            out.push(cur);
        }
        return out;
    }
    rec(&base, 0, q, &mut cur, &mut out);
    out
}

/// `{ v in R^r : sum v_k a_k in span(b) }`, computed by a Gröbner basis of the
/// module generated by `(a_k, e_k)` and `(b_l, 0)` in `F ⊕ R^r` for an order
/// eliminating the first summand.  The result is a Gröbner basis of that
/// kernel for the term-over-position order on `R^r` with `a_shifts`.
pub fn relations_modulo<F: Field>(
    ring: &Ring<F>,
    ambient: &FreeModule,
    a: &[FreeElement<F>],
    b: &[FreeElement<F>],
    a_shifts: &[Bidegree],
) -> Result<Vec<FreeElement<F>>> {
    let n = ambient.rank() as u32;
    let f = ring.field();
    let mut shifts = ambient.internal_shifts();
    shifts.extend(a_shifts.iter().map(|s| s.internal));
    let mut blocks = vec![0u32; ambient.rank()];
    blocks.extend(std::iter::repeat_n(1, a.len()));
    let order = ModuleOrder::block(ring.order().clone(), shifts, blocks);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for (k, v) in a.iter().enumerate() {
        let mut terms = v.terms.clone();
        terms.push(Term { mono: ring.one(), comp: n + k as u32, coeff: f.one() });
        let mut e = FreeElement::from_terms(terms);
        ring.normalize(&mut e, &order);
        gens.push(e);
    }
    for v in b {
        let mut e = v.clone();
        ring.normalize(&mut e, &order);
        if !e.is_zero() {
            gens.push(e);
        }
    }
    let gb = buchberger(ring, &order, &gens, false)?;
    let target = ModuleOrder::top(ring.order().clone(), a_shifts.iter().map(|s| s.internal).collect());
    Ok(gb
        .elements()
        .iter()
        .filter(|e| e.terms[0].comp >= n)
        .map(|e| {
            let mut v = e.map_components(|c| c - n);
            ring.normalize(&mut v, &target);
            v
        })
        .collect())
}

impl<F: Field> Submodule<F> {
    /// The submodule of `ambient` generated by `gens` (zero generators are dropped).
    pub fn new(ring: Arc<Ring<F>>, ambient: FreeModule, gens: Vec<FreeElement<F>>) -> Result<Self> {
        let order = ambient.default_order(&ring);
        Self::with_order(ring, ambient, gens, order)
    }

    pub fn with_order(
        ring: Arc<Ring<F>>,
        ambient: FreeModule,
        gens: Vec<FreeElement<F>>,
        order: ModuleOrder,
    ) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for mut g in gens {
            if let Some(c) = g.max_component() {
                if c as usize >= ambient.rank() {
                    return Err(Error::AmbientMismatch);
                }
            }
            if g.terms.iter().any(|t| t.mono.nvars() != ring.nvars()) {
                return Err(Error::RingMismatch);
            }
            ring.normalize(&mut g, &order);
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Submodule { ring, ambient, gens: out, order, gb: OnceLock::new() })
    }

    /// An ideal, as a submodule of the free module of rank one.
    pub fn ideal(ring: Arc<Ring<F>>, gens: &[Polynomial<F>]) -> Result<Self> {
        let ambient = FreeModule::free(1);
        let order = ambient.default_order(&ring);
        let gens = gens.iter().map(|p| ring.poly_to_element(p, 0, &order)).collect();
        Self::new(ring, ambient, gens)
    }

    pub fn zero(ring: Arc<Ring<F>>, ambient: FreeModule) -> Self {
        let order = ambient.default_order(&ring);
        Submodule { ring, ambient, gens: Vec::new(), order, gb: OnceLock::new() }
    }

    /// The whole free module.
    pub fn whole(ring: Arc<Ring<F>>, ambient: FreeModule) -> Self {
        let gens = (0..ambient.rank() as u32).map(|c| FreeElement::basis(&ring, c)).collect();
        Self::new(ring, ambient, gens).expect("basis vectors lie in the ambient module")
    }

    /// `m^q F` where `m` is generated by the base variables.
    pub fn base_power(ring: Arc<Ring<F>>, ambient: FreeModule, q: usize) -> Self {
        let monos = base_monomials(&ring, q);
        let one = ring.field().one();
        let gens = (0..ambient.rank() as u32)
            .flat_map(|c| monos.iter().map(move |m| (c, *m)))
            .map(|(c, m)| FreeElement::from_terms(vec![Term { mono: m, comp: c, coeff: one.clone() }]))
            .collect();
        Self::new(ring, ambient, gens).expect("monomial generators lie in the ambient module")
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn gens(&self) -> &[FreeElement<F>] {
        &self.gens
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators of an ideal as polynomials.
    pub fn gen_polys(&self) -> Vec<Polynomial<F>> {
        self.gens.iter().map(|g| self.ring.component(g, 0)).collect()
    }

    /// Bidegrees of the generators; fails on inhomogeneous generators.
    pub fn generator_degrees(&self) -> Result<Vec<Bidegree>> {
        self.gens.iter().map(|g| element_degree(&self.ring, &self.ambient, g)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generator_degrees().is_ok()
    }

    pub fn gb(&self) -> Result<&GroebnerBasis<F>> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = buchberger(&self.ring, &self.order, &self.gens, false)?;
        let _ = self.gb.set(Arc::new(g));
        Ok(self.gb.get().expect("just set"))
    }

    fn check_ambient(&self, other: &Submodule<F>) -> Result<()> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.ambient.rank() != other.ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &FreeElement<F>) -> Result<FreeElement<F>> {
        if let Some(c) = v.max_component() {
            if c as usize >= self.ambient.rank() {
                return Err(Error::AmbientMismatch);
            }
        }
        let nf = self.gb()?.normal_form(&self.ring, v);
        budget::check()?;
        Ok(nf)
    }

    pub fn contains(&self, v: &FreeElement<F>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_submodule(&self, other: &Submodule<F>) -> Result<bool> {
        self.check_ambient(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of submodules by mutual containment.
    pub fn equals(&self, other: &Submodule<F>) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    /// True when the submodule is the whole ambient module.
    pub fn is_whole(&self) -> Result<bool> {
        for c in 0..self.ambient.rank() as u32 {
            if !self.contains(&FreeElement::basis(&self.ring, c))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A minimal generating set (for homogeneous submodules).
    pub fn trim(&self) -> Result<Submodule<F>> {
        let gb = self.gb()?;
        let gens: Vec<FreeElement<F>> = match gb.minimal_generator_indices() {
            Some(idx) => idx.iter().map(|&i| self.gens[i].clone()).collect(),
            None => crate::groebner::minimal_generators(&self.ring, &self.order, &self.gens)?,
        };
        let out = Submodule::with_order(self.ring.clone(), self.ambient.clone(), gens, self.order.clone())?;
        let _ = out.gb.set(Arc::new(gb.for_minimal_generators(out.gens.len())));
        Ok(out)
    }

    pub fn sum(&self, other: &Submodule<F>) -> Result<Submodule<F>> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::with_order(self.ring.clone(), self.ambient.clone(), gens, self.order.clone())
    }

    /// `J * N` for an ideal `J` given by generators.
    pub fn times_ideal(&self, ideal: &[Polynomial<F>]) -> Result<Submodule<F>> {
        let mut gens = Vec::with_capacity(ideal.len() * self.gens.len());
        for p in ideal {
            for g in &self.gens {
                gens.push(self.ring.mul_poly_element(p, g, &self.order));
            }
        }
        Submodule::with_order(self.ring.clone(), self.ambient.clone(), gens, self.order.clone())
    }

    /// `m^q N`.
    pub fn times_base_power(&self, q: usize) -> Result<Submodule<F>> {
        let mut gens = Vec::new();
        for m in base_monomials(&self.ring, q) {
            for g in &self.gens {
                gens.push(self.ring.mul_mono_element(&m, g));
            }
        }
        Submodule::with_order(self.ring.clone(), self.ambient.clone(), gens, self.order.clone())
    }

    /// Generators of the syzygy module of the listed generators, as a
    /// submodule of the free module with one basis vector per generator.
    pub fn syzygies(&self) -> Result<Submodule<F>> {
        let shifts: Vec<Bidegree> = self.gens.iter().map(|g| lead_degree(&self.ring, &self.ambient, g)).collect();
        let rels = relations_modulo(&self.ring, &self.ambient, &self.gens, &[], &shifts)?;
        let free = FreeModule::new(shifts);
        let out = Submodule::new(self.ring.clone(), free, rels)?;
        out.trim()
    }

    /// `sum_k v_k g_k` for `v` in the free module on the generators.
    pub fn combine(&self, v: &FreeElement<F>) -> FreeElement<F> {
        let mut acc = FreeElement::zero();
        for c in 0..self.gens.len() as u32 {
            let p = self.ring.component(v, c);
            if !p.is_zero() {
                let w = self.ring.mul_poly_element(&p, &self.gens[c as usize], &self.order);
                acc = self.ring.add_elements(&acc, &w, &self.order);
            }
        }
        acc
    }

    /// `self ∩ other` via the kernel of `(a_k) ⊕ (b_l)`.
    pub fn intersect(&self, other: &Submodule<F>) -> Result<Submodule<F>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(self.ring.clone(), self.ambient.clone()));
        }
        let shifts: Vec<Bidegree> = self.gens.iter().map(|g| lead_degree(&self.ring, &self.ambient, g)).collect();
        let rels = relations_modulo(&self.ring, &self.ambient, &self.gens, &other.gens, &shifts)?;
        let gens = rels.iter().map(|v| self.combine(v)).collect();
        let out = Submodule::with_order(self.ring.clone(), self.ambient.clone(), gens, self.order.clone())?;
        out.trim()
    }

    /// `N : f = { v : f v ∈ N }`.
    pub fn quotient_poly(&self, f: &Polynomial<F>) -> Result<Submodule<F>> {
        if f.is_zero() {
            return Ok(Submodule::whole(self.ring.clone(), self.ambient.clone()));
        }
        let df = match self.ring.bidegree(f) {
            Homogeneity::Homogeneous(d) => d,
            _ => self.ring.mono_bidegree(&f.terms()[0].0),
        };
        let a: Vec<FreeElement<F>> = (0..self.ambient.rank() as u32)
            .map(|c| self.ring.poly_to_element(f, c, &self.order))
            .collect();
        let shifts: Vec<Bidegree> = self.ambient.shifts().iter().map(|s| *s + df).collect();
        let rels = relations_modulo(&self.ring, &self.ambient, &a, &self.gens, &shifts)?;
        let out = Submodule::with_order(self.ring.clone(), self.ambient.clone(), rels, self.order.clone())?;
        out.trim()
    }

    /// `N : J` for an ideal `J` given by generators.
    pub fn quotient(&self, ideal: &[Polynomial<F>]) -> Result<Submodule<F>> {
        let mut acc: Option<Submodule<F>> = None;
        for f in ideal {
            let q = self.quotient_poly(f)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Submodule::whole(self.ring.clone(), self.ambient.clone())))
    }

    /// `N : J^∞`, the stable value of `N ⊆ N:J ⊆ N:J^2 ⊆ ...`, together with
    /// the number of quotient steps taken.
    pub fn saturate(&self, ideal: &[Polynomial<F>]) -> Result<(Submodule<F>, usize)> {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.quotient(ideal)?;
            steps += 1;
            if cur.contains_submodule(&next)? {
                return Ok((cur, steps));
            }
            cur = next;
        }
    }

    /// Saturation with respect to the ideal of base variables.
    pub fn saturate_base(&self) -> Result<(Submodule<F>, usize)> {
        let m: Vec<Polynomial<F>> = self.ring.base_indices().iter().map(|&i| self.ring.var(i)).collect();
        self.saturate(&m)
    }

    /// Keep only the generators whose terms avoid the variables in `drop`
    /// (meaningful on a Gröbner basis for an order eliminating them).
    pub fn eliminate_gb(&self, drop: &[usize]) -> Result<Vec<FreeElement<F>>> {
        Ok(self
            .gb()?
            .elements()
            .iter()
            .filter(|e| e.terms.iter().all(|t| drop.iter().all(|&i| t.mono.exponent(i) == 0)))
            .cloned()
            .collect())
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format_element(g)).collect();
        format!("<{}>", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring() -> Arc<Ring<Rationals>> {
        Ring::polynomial(Rationals, &["x", "y", "z"]).unwrap()
    }

    fn poly(r: &Ring<Rationals>, terms: &[(i64, [u16; 3])]) -> Polynomial<Rationals> {
        r.from_terms(terms.iter().map(|(c, e)| (Monomial::from_exponents(e), r.field().from_i64(*c))).collect())
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = ring();
        let a = Submodule::ideal(r.clone(), &[poly(&r, &[(1, [1, 0, 0])])]).unwrap();
        let b = Submodule::ideal(r.clone(), &[poly(&r, &[(1, [0, 1, 0])])]).unwrap();
        let c = a.intersect(&b).unwrap();
        let xy = Submodule::ideal(r.clone(), &[poly(&r, &[(1, [1, 1, 0])])]).unwrap();
        assert!(c.equals(&xy).unwrap());
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn quotient_and_saturation() {
        let r = Ring::polynomial(PrimeField::default(), &["x"]).unwrap();
        let x = r.var(0);
        let x2 = r.pow(&x, 2);
        let i = Submodule::ideal(r.clone(), &[x2]).unwrap();
        let q = i.quotient(std::slice::from_ref(&x)).unwrap();
        assert!(q.equals(&Submodule::ideal(r.clone(), std::slice::from_ref(&x)).unwrap()).unwrap());
        let (s, _) = i.saturate(&[x]).unwrap();
        assert!(s.is_whole().unwrap());
    }

    #[test]
    fn syzygies_of_koszul_pair() {
        let r = ring();
        let i = Submodule::ideal(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        let s = i.syzygies().unwrap();
        assert_eq!(s.gens().len(), 1);
        let g = &s.gens()[0];
        assert!(i.combine(g).is_zero());
        assert_eq!(s.ambient().shifts(), &[Bidegree::new(1, 0), Bidegree::new(1, 0)]);
    }

    #[test]
    fn base_power_counts() {
        let r = ring();
        assert_eq!(base_monomials(&r, 2).len(), 6);
        assert_eq!(base_monomials(&r, 0).len(), 1);
    }
}
