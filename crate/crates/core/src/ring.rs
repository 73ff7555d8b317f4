//! Bigraded polynomial rings, polynomials, free modules and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{MonoOrder, Monomial, VarKind, Variable, VariableSet};
use crate::order::ModuleOrder;

/// A pair (internal degree, Rees degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub internal: i64,
    pub rees: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { internal: 0, rees: 0 };

    pub fn new(internal: i64, rees: i64) -> Self {
        Bidegree { internal, rees }
    }
}

impl std::ops::Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.internal + o.internal, self.rees + o.rees)
    }
}

impl std::ops::Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.internal - o.internal, self.rees - o.rees)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.internal, self.rees)
    }
}

/// Result of asking for the bidegree of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(Bidegree),
    Inhomogeneous,
}

/// A polynomial ring `k[vars]` with its monomial order.
#[derive(Debug, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    vars: VariableSet,
    order: MonoOrder,
}

impl<F: Field> Ring<F> {
    /// The ring with weighted grevlex (by internal degree), or, when auxiliary
    /// variables are present, an order eliminating them.
    pub fn new(field: F, vars: VariableSet) -> Arc<Self> {
        let internal = vars.internal_weights();
        let aux = vars.indices_of(VarKind::Aux);
        let order = if aux.is_empty() {
            MonoOrder::grevlex(internal)
        } else {
            MonoOrder::elimination(&aux, internal)
        };
        Arc::new(Ring { field, vars, order })
    }

    /// Polynomial ring over `field` in base variables with the given names.
    pub fn polynomial<S: AsRef<str>>(field: F, names: &[S]) -> Result<Arc<Self>> {
        Ok(Self::new(field, VariableSet::base(names)?))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonoOrder {
        &self.order
    }

    pub fn same_as(&self, other: &Ring<F>) -> bool {
        std::ptr::eq(self, other) || (self.field == other.field && self.vars == other.vars)
    }

    /// Indices of the base variables, which generate the ideal `m`.
    pub fn base_indices(&self) -> Vec<usize> {
        self.vars.indices_of(VarKind::Base)
    }

    pub fn rees_indices(&self) -> Vec<usize> {
        self.vars.indices_of(VarKind::Rees)
    }

    pub fn has_rees(&self) -> bool {
        self.vars.vars().iter().any(|v| v.kind == VarKind::Rees)
    }

    pub fn mono_bidegree(&self, m: &Monomial) -> Bidegree {
        let mut d = Bidegree::ZERO;
        for (e, v) in m.exponents().iter().zip(self.vars.vars()) {
            d.internal += *e as i64 * v.internal;
            d.rees += *e as i64 * v.rees;
        }
        d
    }

    /// The `m`-adic order of a monomial: its degree in the base variables.
    pub fn base_degree(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .zip(self.vars.vars())
            .filter(|(_, v)| v.kind == VarKind::Base)
            .map(|(e, _)| *e as i64)
            .sum()
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        Polynomial { terms: vec![(Monomial::var(self.nvars(), i), self.field.one())] }
    }

    pub fn var_by_name(&self, name: &str) -> Option<Polynomial<F>> {
        self.vars.index_of(name).map(|i| self.var(i))
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(self.one(), c)] }
        }
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        let mut terms = terms;
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn add(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        let f = &self.field;
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < p.terms.len() && j < q.terms.len() {
            match self.order.cmp(&p.terms[i].0, &q.terms[j].0) {
                Ordering::Greater => {
                    out.push(p.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(q.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&p.terms[i].1, &q.terms[j].1);
                    if !f.is_zero(&c) {
                        out.push((p.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p.terms[i..]);
        out.extend_from_slice(&q.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, p: &Polynomial<F>) -> Polynomial<F> {
        Polynomial { terms: p.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect() }
    }

    pub fn sub(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        self.add(p, &self.neg(q))
    }

    pub fn scale(&self, c: &F::Elem, p: &Polynomial<F>) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: p.terms.iter().map(|(m, d)| (*m, self.field.mul(c, d))).collect() }
    }

    pub fn mul_term(&self, c: &F::Elem, mono: &Monomial, p: &Polynomial<F>) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: p.terms.iter().map(|(m, d)| (m.mul(mono), self.field.mul(c, d))).collect() }
    }

    pub fn mul(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = Vec::with_capacity(p.terms.len() * q.terms.len());
        for (m, c) in &p.terms {
            for (n, d) in &q.terms {
                terms.push((m.mul(n), self.field.mul(c, d)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, p: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.constant(self.field.one());
        for _ in 0..e {
            acc = self.mul(&acc, p);
        }
        acc
    }

    /// Shared bidegree of all terms, if any.
    pub fn bidegree(&self, p: &Polynomial<F>) -> Homogeneity {
        let mut it = p.terms.iter().map(|(m, _)| self.mono_bidegree(m));
        match it.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Evaluate `p` with the variable `i` replaced by the polynomial `values[i]`.
    pub fn substitute(&self, p: &Polynomial<F>, values: &[Polynomial<F>], target: &Ring<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for (m, c) in &p.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = target.mul(&t, &target.pow(&values[i], e as u32));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    pub fn format(&self, p: &Polynomial<F>) -> String {
        format_terms(&self.field, &self.vars, p.terms.iter().map(|(m, c)| (m, c)))
    }

    /// Sort a free-module element by `order`, merging equal terms.
    pub fn normalize(&self, v: &mut FreeElement<F>, order: &ModuleOrder) {
        v.terms.sort_by(|a, b| order.cmp(&b.mono, b.comp, &a.mono, a.comp));
        let mut out: Vec<Term<F>> = Vec::with_capacity(v.terms.len());
        for t in v.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono && last.comp == t.comp {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !self.field.is_zero(&t.coeff));
        v.terms = out;
    }

    /// Embed a polynomial as a multiple of the basis vector `comp`.
    pub fn poly_to_element(&self, p: &Polynomial<F>, comp: u32, order: &ModuleOrder) -> FreeElement<F> {
        let mut v = FreeElement {
            terms: p.terms.iter().map(|(m, c)| Term { mono: *m, comp, coeff: c.clone() }).collect(),
        };
        self.normalize(&mut v, order);
        v
    }

    /// The `comp`-th coordinate of `v` as a polynomial.
    pub fn component(&self, v: &FreeElement<F>, comp: u32) -> Polynomial<F> {
        self.from_terms(v.terms.iter().filter(|t| t.comp == comp).map(|t| (t.mono, t.coeff.clone())).collect())
    }

    /// Build an element from its coordinates.
    pub fn element_from_polys(&self, coords: &[Polynomial<F>], order: &ModuleOrder) -> FreeElement<F> {
        let mut v = FreeElement::zero();
        for (c, p) in coords.iter().enumerate() {
            v.terms.extend(p.terms.iter().map(|(m, e)| Term { mono: *m, comp: c as u32, coeff: e.clone() }));
        }
        self.normalize(&mut v, order);
        v
    }

    pub fn add_elements(&self, a: &FreeElement<F>, b: &FreeElement<F>, order: &ModuleOrder) -> FreeElement<F> {
        let one = self.field.one();
        self.add_scaled(a, &one, &self.one(), b, order)
    }

    /// `a + c * mono * b`; both inputs sorted by `order`.
    pub fn add_scaled(
        &self,
        a: &FreeElement<F>,
        c: &F::Elem,
        mono: &Monomial,
        b: &FreeElement<F>,
        order: &ModuleOrder,
    ) -> FreeElement<F> {
        let f = &self.field;
        if f.is_zero(c) || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Term<F>> = None;
        loop {
            if pending.is_none() && j < b.terms.len() {
                let t = &b.terms[j];
                pending = Some(Term { mono: t.mono.mul(mono), comp: t.comp, coeff: f.mul(c, &t.coeff) });
                j += 1;
            }
            match (a.terms.get(i), pending.as_ref()) {
                (None, None) => break,
                (Some(t), None) => {
                    out.push(t.clone());
                    i += 1;
                }
                (None, Some(_)) => out.push(pending.take().unwrap()),
                (Some(t), Some(p)) => match order.cmp(&t.mono, t.comp, &p.mono, p.comp) {
                    Ordering::Greater => {
                        out.push(t.clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(pending.take().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(&t.coeff, &p.coeff);
                        if !f.is_zero(&s) {
                            out.push(Term { mono: t.mono, comp: t.comp, coeff: s });
                        }
                        pending = None;
                        i += 1;
                    }
                },
            }
        }
        FreeElement { terms: out }
    }

    pub fn scale_element(&self, c: &F::Elem, v: &FreeElement<F>) -> FreeElement<F> {
        if self.field.is_zero(c) {
            return FreeElement::zero();
        }
        FreeElement {
            terms: v
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, comp: t.comp, coeff: self.field.mul(c, &t.coeff) })
                .collect(),
        }
    }

    /// `p * v`, sorted by `order`.
    pub fn mul_poly_element(&self, p: &Polynomial<F>, v: &FreeElement<F>, order: &ModuleOrder) -> FreeElement<F> {
        let mut acc = FreeElement::zero();
        for (m, c) in &p.terms {
            acc = self.add_scaled(&acc, c, m, v, order);
        }
        acc
    }

    /// Multiply by a monomial; the result stays sorted for every order used here.
    pub fn mul_mono_element(&self, m: &Monomial, v: &FreeElement<F>) -> FreeElement<F> {
        FreeElement {
            terms: v.terms.iter().map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: t.coeff.clone() }).collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&self, v: &mut FreeElement<F>) -> F::Elem {
        match v.terms.first() {
            None => self.field.one(),
            Some(t) => {
                let inv = self.field.inv(&t.coeff).expect("nonzero leading coefficient");
                for t in v.terms.iter_mut() {
                    t.coeff = self.field.mul(&inv, &t.coeff);
                }
                inv
            }
        }
    }

    pub fn element_bidegree(&self, v: &FreeElement<F>, module: &FreeModule) -> Homogeneity {
        let mut it = v.terms.iter().map(|t| self.mono_bidegree(&t.mono) + module.shift(t.comp as usize));
        match it.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn format_element(&self, v: &FreeElement<F>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let mut comps: Vec<u32> = v.terms.iter().map(|t| t.comp).collect();
        comps.sort_unstable();
        comps.dedup();
        let parts: Vec<String> = comps
            .iter()
            .map(|&c| {
                let p = self.component(v, c);
                let s = self.format(&p);
                if p.terms.len() > 1 {
                    format!("({s})*e{}", c + 1)
                } else if s == "1" {
                    format!("e{}", c + 1)
                } else if s == "-1" {
                    format!("-e{}", c + 1)
                } else {
                    format!("{s}*e{}", c + 1)
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }

    /// A copy of this ring with one more variable.
    pub fn extend(&self, extra: Variable) -> Result<Arc<Ring<F>>> {
        Ok(Ring::new(self.field.clone(), self.vars.with_extra(extra)?))
    }

    /// Re-embed a monomial into a ring whose variables extend or restrict ours; `map[i]`
    /// gives the target index of variable `i`.
    pub fn map_monomial(m: &Monomial, map: &[Option<usize>], target_nvars: usize) -> Option<Monomial> {
        let mut out = Monomial::one(target_nvars);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.set_exponent(map[i]?, e);
        }
        Some(out)
    }
}

fn format_terms<'a, F: Field>(
    field: &F,
    vars: &VariableSet,
    terms: impl Iterator<Item = (&'a Monomial, &'a F::Elem)>,
) -> String
where
    F::Elem: 'a,
{
    let mut s = String::new();
    for (k, (m, c)) in terms.enumerate() {
        let mut cs = field.format(c);
        let neg = cs.starts_with('-');
        if neg {
            cs.remove(0);
        }
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            s.push_str(&cs);
        } else if cs == "1" {
            s.push_str(&m.fmt_with(vars));
        } else {
            s.push_str(&format!("{cs}*{}", m.fmt_with(vars)));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// A polynomial: terms sorted decreasingly by the ring's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    pub(crate) terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// True when every monomial lies in `m^k`, measured by base-variable degree.
    pub fn in_base_power(&self, ring: &Ring<F>, k: i64) -> bool {
        self.terms.iter().all(|(m, _)| ring.base_degree(m) >= k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<F: Field> {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: F::Elem,
}

/// An element of a free module, as a list of terms sorted by some module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeElement<F: Field> {
    pub(crate) terms: Vec<Term<F>>,
}

impl<F: Field> FreeElement<F> {
    pub fn zero() -> Self {
        FreeElement { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<Term<F>>) -> Self {
        FreeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Basis vector `e_comp`.
    pub fn basis(ring: &Ring<F>, comp: u32) -> Self {
        FreeElement { terms: vec![Term { mono: ring.one(), comp, coeff: ring.field().one() }] }
    }

    /// Drop the listed components and renumber the rest.
    pub fn delete_components(&self, removed: &[bool]) -> Self {
        let mut newidx = Vec::with_capacity(removed.len());
        let mut k = 0u32;
        for &r in removed {
            newidx.push(k);
            if !r {
                k += 1;
            }
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .filter(|t| !removed[t.comp as usize])
                .map(|t| Term { mono: t.mono, comp: newidx[t.comp as usize], coeff: t.coeff.clone() })
                .collect(),
        }
    }

    /// Rename components through `map` (result must be re-sorted by the caller).
    pub fn map_components(&self, map: impl Fn(u32) -> u32) -> Self {
        FreeElement {
            terms: self.terms.iter().map(|t| Term { mono: t.mono, comp: map(t.comp), coeff: t.coeff.clone() }).collect(),
        }
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }
}

/// A graded free module `⊕ S(-a_j, -b_j)`: one bidegree shift per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeModule {
    shifts: Vec<Bidegree>,
}

impl FreeModule {
    pub fn new(shifts: Vec<Bidegree>) -> Self {
        FreeModule { shifts }
    }

    /// Free module of the given rank with all generators in bidegree zero.
    pub fn free(rank: usize) -> Self {
        FreeModule { shifts: vec![Bidegree::ZERO; rank] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Bidegree] {
        &self.shifts
    }

    pub fn shift(&self, j: usize) -> Bidegree {
        self.shifts[j]
    }

    pub fn internal_shifts(&self) -> Vec<i64> {
        self.shifts.iter().map(|s| s.internal).collect()
    }

    /// The default term-over-position order for this module.
    pub fn default_order<F: Field>(&self, ring: &Ring<F>) -> ModuleOrder {
        ModuleOrder::top(ring.order().clone(), self.internal_shifts())
    }

    pub fn order_with(&self, mono: MonoOrder) -> ModuleOrder {
        ModuleOrder::top(mono, self.internal_shifts())
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        FreeModule { shifts }
    }

    pub fn remove(&self, removed: &[bool]) -> FreeModule {
        FreeModule {
            shifts: self.shifts.iter().zip(removed).filter(|(_, &r)| !r).map(|(s, _)| *s).collect(),
        }
    }
}

/// Checks that two ring handles refer to the same ring.
pub fn check_same_ring<F: Field>(a: &Ring<F>, b: &Ring<F>) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qq_xyz() -> Arc<Ring<Rationals>> {
        Ring::polynomial(Rationals, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = qq_xyz();
        let (x, y) = (r.var(0), r.var(1));
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.format(&p), "x^2 - y^2");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = qq_xyz();
        let p = r.add(&r.pow(&r.var(0), 3), &r.var(2));
        let minus = r.scale(&Rationals.from_i64(-1), &p);
        assert!(r.add(&p, &minus).is_zero());
    }

    #[test]
    fn mod_seven_scaling() {
        let f = PrimeField::new(7).unwrap();
        let r = Ring::polynomial(f, &["x"]).unwrap();
        let x = r.var(0);
        let p = r.mul(&r.scale(&5, &x), &r.scale(&3, &x));
        assert_eq!(p, r.pow(&x, 2));
    }

    #[test]
    fn rees_relation_bidegrees() {
        let vars = VariableSet::with_rees(&["x", "y", "z"], &[("w0", 2), ("w1", 2), ("w2", 2)]).unwrap();
        let r = Ring::new(Rationals, vars);
        let v = |n: &str| r.var_by_name(n).unwrap();
        let rel1 = r.sub(&r.mul(&v("w0"), &v("y")), &r.mul(&v("w1"), &v("x")));
        assert_eq!(r.bidegree(&rel1), Homogeneity::Homogeneous(Bidegree::new(3, 1)));
        let x2 = r.pow(&v("x"), 2);
        let z2 = r.pow(&v("z"), 2);
        let rel2 = r.sub(&r.mul(&v("w0"), &z2), &r.mul(&v("w2"), &x2));
        assert_eq!(r.bidegree(&rel2), Homogeneity::Homogeneous(Bidegree::new(4, 1)));
        let inh = r.add(&v("x"), &x2);
        assert_eq!(r.bidegree(&inh), Homogeneity::Inhomogeneous);
    }

    #[test]
    fn element_bidegree_uses_shifts() {
        let r = qq_xyz();
        let module = FreeModule::new(vec![Bidegree::new(1, 0), Bidegree::new(2, 0)]);
        let order = module.default_order(&r);
        let v = r.element_from_polys(&[r.pow(&r.var(0), 2), r.var(1)], &order);
        assert_eq!(r.element_bidegree(&v, &module), Homogeneity::Homogeneous(Bidegree::new(3, 0)));
    }
}
