//! Buchberger's algorithm for submodules of free modules, normal forms and
//! Schreyer syzygies.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::budget;
use crate::error::Result;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::ring::{FreeElement, Ring, Term};

/// A reduced Gröbner basis together with optional change-of-basis data.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: ModuleOrder,
    elems: Vec<FreeElement<F>>,
    /// `elems[i] = sum_j reps[i][j] * gens[j]`, when tracking was requested.
    reps: Option<Vec<FreeElement<F>>>,
    rep_order: ModuleOrder,
    ngens: usize,
    /// Indices of the input generators that form a minimal generating set
    /// (homogeneous input only).
    minimal: Option<Vec<usize>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeElement<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn representations(&self) -> Option<&[FreeElement<F>]> {
        self.reps.as_deref()
    }

    pub fn minimal_generator_indices(&self) -> Option<&[usize]> {
        self.minimal.as_deref()
    }

    /// The same basis, regarded as computed from `n` generators that are all minimal.
    pub(crate) fn for_minimal_generators(&self, n: usize) -> Self {
        GroebnerBasis {
            order: self.order.clone(),
            elems: self.elems.clone(),
            reps: None,
            rep_order: self.rep_order.clone(),
            ngens: n,
            minimal: Some((0..n).collect()),
        }
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }

    /// Leading terms `(monomial, component)`.
    pub fn leads(&self) -> Vec<(Monomial, u32)> {
        self.elems.iter().map(|e| (e.terms[0].mono, e.terms[0].comp)).collect()
    }

    pub fn normal_form(&self, ring: &Ring<F>, v: &FreeElement<F>) -> FreeElement<F> {
        let mut v = v.clone();
        ring.normalize(&mut v, &self.order);
        reduce(ring, &self.order, &Reducers::new(&self.elems), v, None).0
    }

    pub fn contains(&self, ring: &Ring<F>, v: &FreeElement<F>) -> bool {
        self.normal_form(ring, v).is_zero()
    }

    /// Coefficients `a` with `v = sum a_j gens[j]`, or `None` when `v` is not in
    /// the submodule.  Requires a basis computed with tracking.
    pub fn lift(&self, ring: &Ring<F>, v: &FreeElement<F>) -> Option<FreeElement<F>> {
        let reps = self.reps.as_ref().expect("lift needs a tracked Gröbner basis");
        let mut v = v.clone();
        ring.normalize(&mut v, &self.order);
        let mut quot = Vec::new();
        let (rem, _) = reduce(ring, &self.order, &Reducers::new(&self.elems), v, Some(&mut quot));
        if !rem.is_zero() {
            return None;
        }
        Some(combine(ring, &quot, reps, &self.rep_order))
    }
}

/// `sum_k c_k m_k reps[i_k]` for quotient terms `(i_k, c_k, m_k)`.
pub(crate) fn combine<F: Field>(
    ring: &Ring<F>,
    quot: &[(usize, F::Elem, Monomial)],
    reps: &[FreeElement<F>],
    order: &ModuleOrder,
) -> FreeElement<F> {
    let mut terms = Vec::new();
    for (i, c, m) in quot {
        for t in &reps[*i].terms {
            terms.push(Term { mono: t.mono.mul(m), comp: t.comp, coeff: ring.field().mul(c, &t.coeff) });
        }
    }
    let mut out = FreeElement::from_terms(terms);
    ring.normalize(&mut out, order);
    out
}

/// Leading-term index over a list of elements.
pub(crate) struct Reducers<'a, F: Field> {
    elems: Vec<&'a FreeElement<F>>,
    index: Vec<usize>,
    leads: Vec<(Monomial, u32, u32)>,
}

impl<'a, F: Field> Reducers<'a, F> {
    pub(crate) fn new(elems: &'a [FreeElement<F>]) -> Self {
        let mut r = Reducers { elems: Vec::new(), index: Vec::new(), leads: Vec::new() };
        for (i, e) in elems.iter().enumerate() {
            r.push(i, e);
        }
        r
    }

    fn empty() -> Self {
        Reducers { elems: Vec::new(), index: Vec::new(), leads: Vec::new() }
    }

    fn push(&mut self, i: usize, e: &'a FreeElement<F>) {
        if let Some(t) = e.terms.first() {
            self.elems.push(e);
            self.index.push(i);
            self.leads.push((t.mono, t.comp, t.mono.support_mask()));
        }
    }

    #[inline]
    fn find(&self, m: &Monomial, comp: u32) -> Option<usize> {
        let mask = m.support_mask();
        self.leads
            .iter()
            .position(|(lm, lc, lmask)| *lc == comp && lmask & !mask == 0 && lm.divides(m))
    }
}

/// Fully reduce `v` (sorted by `order`) modulo `reducers`.  Quotient terms
/// `(index, coefficient, monomial)` are appended to `quot` when requested.
/// Returns the remainder and the scalar the input was multiplied by (always 1 here).
pub(crate) fn reduce<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    reducers: &Reducers<'_, F>,
    v: FreeElement<F>,
    mut quot: Option<&mut Vec<(usize, F::Elem, Monomial)>>,
) -> (FreeElement<F>, F::Elem) {
    let f = ring.field();
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut p = v;
    let mut pos = 0usize;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        steps += 1;
        if steps.is_multiple_of(256) && budget::check().is_err() {
            // the caller notices the deadline at its next check
            break;
        }
        let lead = &p.terms[pos];
        match reducers.find(&lead.mono, lead.comp) {
            Some(k) => {
                let g = reducers.elems[k];
                let gl = &g.terms[0];
                let m = gl.mono.div(&lead.mono).expect("divisible");
                let c = f.div(&lead.coeff, &gl.coeff).expect("nonzero lead");
                let minus = f.neg(&c);
                if let Some(q) = quot.as_deref_mut() {
                    q.push((reducers.index[k], c, m));
                }
                // the leads cancel exactly
                let tail = FreeElement::from_terms(g.terms[1..].to_vec());
                let rest = FreeElement::from_terms(p.terms[pos + 1..].to_vec());
                p = ring.add_scaled(&rest, &minus, &m, &tail, order);
                pos = 0;
            }
            None => {
                rem.push(lead.clone());
                pos += 1;
            }
        }
    }
    rem.extend(p.terms.drain(pos..));
    (FreeElement::from_terms(rem), f.one())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Job {
    // pairs sort before generators of the same degree
    Pair(usize, usize),
    Gen(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Queued {
    sugar: i64,
    kind: u8,
    seq: usize,
    job: Job,
}

struct Entry<F: Field> {
    v: FreeElement<F>,
    rep: Option<FreeElement<F>>,
    lead: Monomial,
    comp: u32,
    sugar: i64,
    redundant: bool,
}

#[derive(Clone)]
struct PendingPair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    live: bool,
}

fn element_sugar<F: Field>(order: &ModuleOrder, v: &FreeElement<F>) -> i64 {
    v.terms.iter().map(|t| order.degree(&t.mono, t.comp)).max().unwrap_or(0)
}

fn is_homogeneous<F: Field>(order: &ModuleOrder, v: &FreeElement<F>) -> bool {
    let mut it = v.terms.iter().map(|t| order.degree(&t.mono, t.comp));
    match it.next() {
        None => true,
        Some(d) => it.all(|e| e == d),
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens` with respect to `order`.
///
/// With `track` set, every basis element carries its expression in terms of
/// the input generators.
pub fn buchberger<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    gens: &[FreeElement<F>],
    track: bool,
) -> Result<GroebnerBasis<F>> {
    let f = ring.field();
    let ngens = gens.len();
    let mut gens: Vec<FreeElement<F>> = gens.to_vec();
    for g in gens.iter_mut() {
        ring.normalize(g, order);
    }
    let homogeneous = gens.iter().all(|g| is_homogeneous(order, g));
    let rank_one = gens.iter().all(|g| g.terms.iter().all(|t| t.comp == 0));
    let gen_degrees: Vec<i64> = gens.iter().map(|g| element_sugar(order, g)).collect();
    let rep_order = ModuleOrder::top(ring.order().clone(), gen_degrees.clone());

    let mut basis: Vec<Entry<F>> = Vec::new();
    let mut pairs: Vec<PendingPair> = Vec::new();
    let mut queue: BinaryHeap<Reverse<Queued>> = BinaryHeap::new();
    let mut seq = 0usize;
    for (k, g) in gens.iter().enumerate() {
        if !g.is_zero() {
            queue.push(Reverse(Queued { sugar: gen_degrees[k], kind: 1, seq, job: Job::Gen(k) }));
            seq += 1;
        }
    }
    let mut minimal = Vec::new();

    while let Some(Reverse(item)) = queue.pop() {
        budget::check()?;
        let (mut s, mut rep, sugar) = match item.job {
            Job::Gen(k) => {
                let rep = track.then(|| {
                    FreeElement::from_terms(vec![Term { mono: ring.one(), comp: k as u32, coeff: f.one() }])
                });
                (gens[k].clone(), rep, gen_degrees[k])
            }
            Job::Pair(pi, _) => {
                let pp = &pairs[pi];
                if !pp.live {
                    continue;
                }
                let (a, b) = (&basis[pp.i], &basis[pp.j]);
                let ma = a.lead.div(&pp.lcm).expect("lcm");
                let mb = b.lead.div(&pp.lcm).expect("lcm");
                let one = f.one();
                let minus = f.neg(&one);
                let sa = ring.mul_mono_element(&ma, &a.v);
                let s = ring.add_scaled(&sa, &minus, &mb, &b.v, order);
                let rep = match (&a.rep, &b.rep) {
                    (Some(ra), Some(rb)) => {
                        let x = ring.mul_mono_element(&ma, ra);
                        Some(ring.add_scaled(&x, &minus, &mb, rb, &rep_order))
                    }
                    _ => None,
                };
                let sugar = (a.sugar + ma.weighted_degree(order.mono().grading_weights()))
                    .max(b.sugar + mb.weighted_degree(order.mono().grading_weights()));
                (s, rep, sugar)
            }
        };
        if s.is_zero() {
            continue;
        }
        let mut quot = Vec::new();
        {
            let mut red = Reducers::empty();
            for (i, e) in basis.iter().enumerate() {
                red.push(i, &e.v);
            }
            let (r, _) = reduce(ring, order, &red, s, track.then_some(&mut quot));
            s = r;
        }
        budget::check()?;
        if let Some(rp) = rep.as_mut() {
            for (i, c, m) in &quot {
                let minus = f.neg(c);
                let ri = basis[*i].rep.as_ref().expect("tracked");
                *rp = ring.add_scaled(rp, &minus, m, ri, &rep_order);
            }
        }
        if s.is_zero() {
            continue;
        }
        if let Job::Gen(k) = item.job {
            minimal.push(k);
        }
        let inv = ring.make_monic(&mut s);
        if let Some(rp) = rep.as_mut() {
            *rp = ring.scale_element(&inv, rp);
        }
        let lead = s.terms[0].mono;
        let comp = s.terms[0].comp;
        let t = basis.len();
        basis.push(Entry { v: s, rep, lead, comp, sugar, redundant: false });
        gebauer_moeller(&mut basis, &mut pairs, &mut queue, &mut seq, t, rank_one, order);
    }

    // interreduce
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let li = (basis[i].lead, basis[i].comp);
        let dominated = (0..basis.len()).any(|j| {
            j != i
                && basis[j].comp == li.1
                && basis[j].lead.divides(&li.0)
                && (basis[j].lead != li.0 || j < i)
        });
        if !dominated {
            keep.push(i);
        }
    }
    let kept: Vec<FreeElement<F>> = keep.iter().map(|&i| basis[i].v.clone()).collect();
    let mut elems = Vec::with_capacity(keep.len());
    let mut reps = track.then(Vec::new);
    for (pos, &i) in keep.iter().enumerate() {
        let e = &basis[i];
        // tail reduction by the other kept elements
        let others: Vec<FreeElement<F>> =
            kept.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, v)| v.clone()).collect();
        let other_idx: Vec<usize> = keep.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &k)| k).collect();
        let red = Reducers::new(&others);
        let head = FreeElement::from_terms(vec![e.v.terms[0].clone()]);
        let tail = FreeElement::from_terms(e.v.terms[1..].to_vec());
        let mut quot = Vec::new();
        let (rtail, _) = reduce(ring, order, &red, tail, track.then_some(&mut quot));
        let mut v = head;
        v.terms.extend(rtail.terms);
        if let Some(reps) = reps.as_mut() {
            let mut rp = e.rep.clone().expect("tracked");
            for (k, c, m) in &quot {
                let minus = f.neg(c);
                let ri = basis[other_idx[*k]].rep.as_ref().expect("tracked");
                rp = ring.add_scaled(&rp, &minus, m, ri, &rep_order);
            }
            reps.push(rp);
        }
        elems.push(v);
    }
    // deterministic order: increasing leading terms
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ta, tb) = (&elems[a].terms[0], &elems[b].terms[0]);
        order.cmp(&ta.mono, ta.comp, &tb.mono, tb.comp)
    });
    let elems: Vec<FreeElement<F>> = idx.iter().map(|&i| elems[i].clone()).collect();
    let reps = reps.map(|r| idx.iter().map(|&i| r[i].clone()).collect());
    minimal.sort_unstable();
    Ok(GroebnerBasis { order: order.clone(), elems, reps, rep_order, ngens, minimal: homogeneous.then_some(minimal) })
}

fn gebauer_moeller<F: Field>(
    basis: &mut [Entry<F>],
    pairs: &mut Vec<PendingPair>,
    queue: &mut BinaryHeap<Reverse<Queued>>,
    seq: &mut usize,
    t: usize,
    product_criterion: bool,
    order: &ModuleOrder,
) {
    let (lt, ct) = (basis[t].lead, basis[t].comp);
    // candidate pairs with the new element
    let mut cands: Vec<(usize, Monomial, bool)> = (0..t)
        .filter(|&i| !basis[i].redundant && basis[i].comp == ct)
        .map(|i| (i, basis[i].lead.lcm(&lt), product_criterion && basis[i].lead.is_coprime(&lt)))
        .collect();
    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some((i, l, coprime)) = cands.pop() {
        let dominated = !coprime
            && (cands.iter().any(|(_, l2, _)| l2.divides(&l)) || kept.iter().any(|(_, l2, _)| l2.divides(&l)));
        if !dominated {
            kept.push((i, l, coprime));
        }
    }
    // old pairs made redundant by the new leading term
    for p in pairs.iter_mut() {
        if p.live && p.comp == ct && lt.divides(&p.lcm) {
            let li = basis[p.i].lead.lcm(&lt);
            let lj = basis[p.j].lead.lcm(&lt);
            if li != p.lcm && lj != p.lcm {
                p.live = false;
            }
        }
    }
    for (i, l, coprime) in kept {
        if coprime {
            continue;
        }
        let d = order.degree(&l, ct);
        let sugar = {
            let w = order.mono().grading_weights();
            let a = basis[i].sugar + basis[i].lead.div(&l).unwrap().weighted_degree(w);
            let b = basis[t].sugar + lt.div(&l).unwrap().weighted_degree(w);
            a.max(b).max(d)
        };
        pairs.push(PendingPair { i, j: t, lcm: l, comp: ct, live: true });
        queue.push(Reverse(Queued { sugar, kind: 0, seq: *seq, job: Job::Pair(pairs.len() - 1, 0) }));
        *seq += 1;
    }
    for b in basis.iter_mut().take(t) {
        if !b.redundant && b.comp == ct && lt.divides(&b.lead) {
            b.redundant = true;
        }
    }
}

/// Syzygies of a Gröbner basis by Schreyer's construction.
///
/// Returns the Schreyer order on the free module with one basis vector per
/// element of `basis`, and generators of the syzygy module which form a
/// Gröbner basis for that order.
pub fn schreyer_syzygies<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    basis: &[FreeElement<F>],
) -> Result<(ModuleOrder, Vec<FreeElement<F>>)> {
    let f = ring.field();
    let leads: Vec<(Monomial, u32)> = basis.iter().map(|g| (g.terms[0].mono, g.terms[0].comp)).collect();
    let new_order = order.schreyer(&leads);
    let reducers = Reducers::new(basis);
    let mut out = Vec::new();
    for a in 0..basis.len() {
        budget::check()?;
        let (la, ca) = leads[a];
        // minimal generators of the monomial ideal (lt(g_b) : lt(g_a)), b > a
        let mut quotients: Vec<(usize, Monomial)> = Vec::new();
        for (b, &(lb, cb)) in leads.iter().enumerate().skip(a + 1) {
            if cb != ca {
                continue;
            }
            let u = la.div(&la.lcm(&lb)).unwrap();
            quotients.push((b, u));
        }
        let mut minimal: Vec<(usize, Monomial)> = Vec::new();
        for (k, (b, u)) in quotients.iter().enumerate() {
            let dominated = quotients.iter().enumerate().any(|(k2, (_, u2))| {
                k2 != k && u2.divides(u) && (u2 != u || k2 < k)
            });
            if !dominated {
                minimal.push((*b, *u));
            }
        }
        for (b, ua) in minimal {
            let lb = leads[b].0;
            let l = la.mul(&ua);
            let ub = lb.div(&l).unwrap();
            let ca_inv = f.inv(&basis[a].terms[0].coeff).unwrap();
            let cb_inv = f.inv(&basis[b].terms[0].coeff).unwrap();
            let sa = ring.mul_mono_element(&ua, &ring.scale_element(&ca_inv, &basis[a]));
            let s = ring.add_scaled(&sa, &f.neg(&cb_inv), &ub, &basis[b], order);
            let mut quot = Vec::new();
            let (rem, _) = reduce(ring, order, &reducers, s, Some(&mut quot));
            budget::check()?;
            debug_assert!(rem.is_zero(), "input is not a Gröbner basis");
            let mut terms = vec![
                Term { mono: ua, comp: a as u32, coeff: ca_inv },
                Term { mono: ub, comp: b as u32, coeff: f.neg(&cb_inv) },
            ];
            for (i, c, m) in quot {
                terms.push(Term { mono: m, comp: i as u32, coeff: f.neg(&c) });
            }
            let mut tau = FreeElement::from_terms(terms);
            ring.normalize(&mut tau, &new_order);
            debug_assert_eq!(tau.terms[0].comp, a as u32);
            out.push(tau);
        }
    }
    Ok((new_order, out))
}

/// Sort generators with a common leading component so that leading monomials
/// decrease lexicographically; this keeps iterated Schreyer resolutions within
/// the Hilbert syzygy bound.
pub fn schreyer_sort<F: Field>(elems: &mut [FreeElement<F>]) {
    elems.sort_by(|a, b| {
        let (ta, tb) = (&a.terms[0], &b.terms[0]);
        ta.comp.cmp(&tb.comp).then_with(|| tb.mono.lex_cmp(&ta.mono))
    });
}

/// Syzygies of an arbitrary list of generators, as elements of the free
/// module with one basis vector per generator (ordered by `syz_order`).
pub fn syzygies_of<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    gens: &[FreeElement<F>],
    syz_order: &ModuleOrder,
) -> Result<Vec<FreeElement<F>>> {
    let f = ring.field();
    let gb = buchberger(ring, order, gens, true)?;
    let reps = gb.reps.as_ref().unwrap();
    let mut out = Vec::new();
    if !gb.elems.is_empty() {
        let (_, taus) = schreyer_syzygies(ring, order, &gb.elems)?;
        for tau in taus {
            let q: Vec<(usize, F::Elem, Monomial)> =
                tau.terms.iter().map(|t| (t.comp as usize, t.coeff.clone(), t.mono)).collect();
            let s = combine(ring, &q, reps, syz_order);
            if !s.is_zero() {
                out.push(s);
            }
        }
    }
    // each generator minus its expression through the basis
    let reducers = Reducers::new(&gb.elems);
    for (j, g) in gens.iter().enumerate() {
        let mut g = g.clone();
        ring.normalize(&mut g, order);
        let mut quot = Vec::new();
        let (rem, _) = reduce(ring, order, &reducers, g, Some(&mut quot));
        debug_assert!(rem.is_zero());
        let expr = combine(ring, &quot, reps, syz_order);
        let ej = FreeElement::from_terms(vec![Term { mono: ring.one(), comp: j as u32, coeff: f.one() }]);
        let s = ring.add_scaled(&ej, &f.neg(&f.one()), &ring.one(), &expr, syz_order);
        if !s.is_zero() {
            out.push(s);
        }
    }
    Ok(out)
}

/// A minimal generating subset of homogeneous generators (all of `gens`
/// when they are not homogeneous for `order`, minus zeros and duplicates).
pub fn minimal_generators<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    gens: &[FreeElement<F>],
) -> Result<Vec<FreeElement<F>>> {
    let gb = buchberger(ring, order, gens, false)?;
    match gb.minimal_generator_indices() {
        Some(idx) => Ok(idx
            .iter()
            .map(|&i| {
                let mut g = gens[i].clone();
                ring.normalize(&mut g, order);
                g
            })
            .collect()),
        None => {
            // drop generators one at a time while the span is unchanged
            let mut kept: Vec<FreeElement<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
            let mut i = 0;
            while i < kept.len() {
                let others: Vec<FreeElement<F>> =
                    kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
                let gb = buchberger(ring, order, &others, false)?;
                if gb.contains(ring, &kept[i]) {
                    kept.remove(i);
                } else {
                    i += 1;
                }
            }
            Ok(kept)
        }
    }
}

/// Compare leading terms under `order` (greater means earlier in a sorted element).
pub fn cmp_leads<F: Field>(order: &ModuleOrder, a: &FreeElement<F>, b: &FreeElement<F>) -> Ordering {
    match (a.lead(), b.lead()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => order.cmp(&x.mono, x.comp, &y.mono, y.comp),
    }
}
