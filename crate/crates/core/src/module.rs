//! Finitely presented graded modules, stored as cokernels `F / N`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, VarKind, VariableSet};
use crate::ring::{Bidegree, FreeElement, FreeModule, Polynomial, Ring, Term};
use crate::submodule::{base_monomials, relations_modulo, Submodule};

/// The module `F / N` for a free module `F` and a submodule `N`.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    relations: Submodule<F>,
}

impl<F: Field> Module<F> {
    pub fn cokernel(relations: Submodule<F>) -> Self {
        Module { relations }
    }

    pub fn free(ring: Arc<Ring<F>>, free: FreeModule) -> Self {
        Module { relations: Submodule::zero(ring, free) }
    }

    /// `R / I` for an ideal `I`.
    pub fn quotient_ring(ideal: &Submodule<F>) -> Result<Self> {
        if ideal.ambient().rank() != 1 {
            return Err(Error::InvalidArgument("expected an ideal".into()));
        }
        Ok(Module { relations: ideal.clone() })
    }

    /// A presentation of the submodule `N` itself as an abstract module:
    /// minimal generators `g_1..g_r` and their syzygies.
    pub fn from_submodule(sub: &Submodule<F>) -> Result<Self> {
        let trimmed = sub.trim()?;
        let shifts = trimmed.generator_degrees()?;
        let rels = relations_modulo(sub.ring(), sub.ambient(), trimmed.gens(), &[], &shifts)?;
        let free = FreeModule::new(shifts);
        Ok(Module { relations: Submodule::new(sub.ring().clone(), free, rels)? })
    }

    /// `(span(a) + span(b)) / span(b)`, presented on the generators `a`.
    pub fn subquotient(
        ring: Arc<Ring<F>>,
        ambient: &FreeModule,
        a: &[FreeElement<F>],
        b: &[FreeElement<F>],
    ) -> Result<Self> {
        let shifts: Vec<Bidegree> = a
            .iter()
            .map(|v| crate::submodule::element_degree(&ring, ambient, v))
            .collect::<Result<_>>()?;
        let rels = relations_modulo(&ring, ambient, a, b, &shifts)?;
        let free = FreeModule::new(shifts);
        Ok(Module { relations: Submodule::new(ring, free, rels)? })
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        self.relations.ring()
    }

    pub fn free_module(&self) -> &FreeModule {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &Submodule<F> {
        &self.relations
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.relations.is_whole()
    }

    /// Add relations.
    pub fn with_relations(&self, extra: &[FreeElement<F>]) -> Result<Self> {
        let mut gens = self.relations.gens().to_vec();
        gens.extend(extra.iter().cloned());
        Ok(Module { relations: Submodule::new(self.ring().clone(), self.free_module().clone(), gens)? })
    }

    /// `C / mC` where `m` is generated by the base variables.
    pub fn base_reduction(&self) -> Result<Self> {
        let ring = self.ring();
        let mut extra = Vec::new();
        for i in ring.base_indices() {
            for c in 0..self.free_module().rank() as u32 {
                extra.push(FreeElement::from_terms(vec![Term {
                    mono: Monomial::var(ring.nvars(), i),
                    comp: c,
                    coeff: ring.field().one(),
                }]));
            }
        }
        self.with_relations(&extra)
    }

    /// The Rees-degree-`n` component, as a module over the ring of base
    /// variables `base`.
    pub fn rees_slice(&self, base: &Arc<Ring<F>>, n: i64) -> Result<Module<F>> {
        let ring = self.ring();
        let base_idx = ring.base_indices();
        let rees_idx = ring.rees_indices();
        if base.nvars() != base_idx.len() {
            return Err(Error::VariableMismatch(base.nvars(), base_idx.len()));
        }
        // basis of the slice: (component, Rees monomial)
        let mut basis: Vec<(u32, Monomial)> = Vec::new();
        let mut shifts = Vec::new();
        for (c, s) in self.free_module().shifts().iter().enumerate() {
            if s.rees > n {
                continue;
            }
            for w in rees_monomials(ring, &rees_idx, (n - s.rees) as usize) {
                let d = ring.mono_bidegree(&w) + *s;
                basis.push((c as u32, w));
                shifts.push(Bidegree::new(d.internal, 0));
            }
        }
        let index_of = |c: u32, w: &Monomial| basis.iter().position(|(bc, bw)| *bc == c && bw == w);
        let map: Vec<Option<usize>> = (0..ring.nvars()).map(|i| base_idx.iter().position(|&b| b == i)).collect();
        let free = FreeModule::new(shifts);
        let order = free.default_order(base);
        let mut rels = Vec::new();
        for g in self.relations.gens() {
            let lead = g.lead().expect("nonzero relation");
            let r = ring.mono_bidegree(&lead.mono).rees + self.free_module().shift(lead.comp as usize).rees;
            if r > n {
                continue;
            }
            for w in rees_monomials(ring, &rees_idx, (n - r) as usize) {
                let mut terms = Vec::with_capacity(g.len());
                for t in g.terms() {
                    let m = t.mono.mul(&w);
                    let mut wpart = ring.one();
                    let mut xpart = ring.one();
                    for i in 0..ring.nvars() {
                        if rees_idx.contains(&i) {
                            wpart.set_exponent(i, m.exponent(i));
                        } else {
                            xpart.set_exponent(i, m.exponent(i));
                        }
                    }
                    let k = index_of(t.comp, &wpart).ok_or_else(|| {
                        Error::Inhomogeneous("relation is not homogeneous in the Rees grading".into())
                    })?;
                    let xm = Ring::<F>::map_monomial(&xpart, &map, base.nvars()).expect("base variables only");
                    terms.push(Term { mono: xm, comp: k as u32, coeff: t.coeff.clone() });
                }
                let mut v = FreeElement::from_terms(terms);
                base.normalize(&mut v, &order);
                rels.push(v);
            }
        }
        Ok(Module { relations: Submodule::new(base.clone(), free, rels)? })
    }

    pub fn format(&self) -> String {
        format!("coker {}", self.relations.format())
    }
}

/// Monomials of degree `n` in the variables `idx`.
pub fn rees_monomials<F: Field>(ring: &Ring<F>, idx: &[usize], n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = ring.one();
    fn rec(idx: &[usize], k: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if k + 1 == idx.len() {
            cur.set_exponent(idx[k], left as u16);
            out.push(*cur);
            cur.set_exponent(idx[k], 0);
            return;
        }
        for e in (0..=left).rev() {
            cur.set_exponent(idx[k], e as u16);
            rec(idx, k + 1, left - e, cur, out);
        }
        cur.set_exponent(idx[k], 0);
    }
    if idx.is_empty() {
        if n == 0 {
            out.push(cur);
        }
        return out;
    }
    rec(idx, 0, n, &mut cur, &mut out);
    out
}

/// The ring of base variables of `ring`, with the same names and field.
pub fn base_ring<F: Field>(ring: &Ring<F>) -> Result<Arc<Ring<F>>> {
    let names: Vec<String> =
        ring.vars().vars().iter().filter(|v| v.kind == VarKind::Base).map(|v| v.name.clone()).collect();
    Ok(Ring::new(ring.field().clone(), VariableSet::base(&names)?))
}

/// Re-embed a polynomial over `from` into `to`, matching variables by name.
pub fn transfer<F: Field>(from: &Ring<F>, to: &Ring<F>, p: &Polynomial<F>) -> Result<Polynomial<F>> {
    let map: Vec<Option<usize>> = from.vars().names().map(|n| to.vars().index_of(n)).collect();
    let mut terms = Vec::with_capacity(p.terms().len());
    for (m, c) in p.terms() {
        let mm = Ring::<F>::map_monomial(m, &map, to.nvars())
            .ok_or_else(|| Error::InvalidArgument("variable missing from the target ring".into()))?;
        terms.push((mm, c.clone()));
    }
    Ok(to.from_terms(terms))
}

/// `m^q` generators of the base ring, as polynomials.
pub fn base_power_polys<F: Field>(ring: &Ring<F>, q: usize) -> Vec<Polynomial<F>> {
    base_monomials(ring, q).into_iter().map(|m| ring.from_terms(vec![(m, ring.field().one())])).collect()
}
