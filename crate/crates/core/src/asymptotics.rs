//! Rees presentations, persistence degrees, the stabilization threshold
//! `N(C)` and sequences of linearity defects along powers of an ideal.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{hilbert_series, persistence_from_series, Grading};
use crate::linearity::{linearity_defect, linearity_defect_of_submodule};
use crate::module::{base_ring, transfer, Module};
use crate::monomial::{MonoOrder, VarKind, Variable, VariableSet};
use crate::resolution::Resolution;
use crate::ring::{Bidegree, FreeElement, FreeModule, Polynomial, Ring, Term};
use crate::submodule::Submodule;

/// `-inf` as a JSON sentinel.
pub fn ext_json(v: Option<i64>) -> Value {
    match v {
        Some(n) => json!(n),
        None => json!("-inf"),
    }
}

fn ext_max(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// A bigraded presentation of `⊕ I^n M` or `⊕ I^n M / I^{n+1} M` over
/// `S = R[w_1, ..., w_m]`, where `w_j` has bidegree `(deg g_j, 1)`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    pub base: Arc<Ring<F>>,
    pub ring: Arc<Ring<F>>,
    /// Minimal generators `g_j` of `I`, in the base ring.
    pub generators: Vec<Polynomial<F>>,
    /// `ker(S -> Rees(I))`.
    pub kernel: Submodule<F>,
    pub module: Module<F>,
    pub graded_piece: bool,
}

impl<F: Field> ReesPresentation<F> {
    /// The component of Rees degree `n`, as a module over the base ring.
    pub fn component(&self, n: i64) -> Result<Module<F>> {
        self.module.rees_slice(&self.base, n)
    }
}

fn fresh_name<F: Field>(ring: &Ring<F>, stem: &str) -> String {
    let mut name = stem.to_string();
    while ring.vars().index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// Minimal homogeneous generators of an ideal inside the irrelevant ideal.
fn ideal_generators<F: Field>(ideal: &Submodule<F>) -> Result<Vec<Polynomial<F>>> {
    if ideal.ambient().rank() != 1 {
        return Err(Error::InvalidArgument("expected an ideal".into()));
    }
    let trimmed = ideal.trim()?;
    let gens = trimmed.gen_polys();
    for g in &gens {
        if g.terms().iter().any(|(m, _)| m.is_one()) {
            return Err(Error::NotInIrrelevantIdeal);
        }
    }
    trimmed.generator_degrees()?;
    Ok(gens)
}

/// Present `⊕_n I^n M` (or its associated graded module) over the Rees ring.
pub fn rees_presentation<F: Field>(ideal: &Submodule<F>, module: &Module<F>, graded_piece: bool) -> Result<ReesPresentation<F>> {
    let base = module.ring().clone();
    if base.has_rees() || !base.same_as(ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let gens = ideal_generators(ideal)?;
    let base_names: Vec<String> = base.vars().names().map(String::from).collect();
    let mut rees: Vec<(String, i64)> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let d = match base.bidegree(g) {
            crate::ring::Homogeneity::Homogeneous(b) => b.internal,
            _ => return Err(Error::Inhomogeneous(base.format(g))),
        };
        let mut name = format!("w{j}");
        while base_names.contains(&name) {
            name.push('_');
        }
        rees.push((name, d));
    }
    let s = Ring::new(base.field().clone(), VariableSet::with_rees(&base_names, &rees)?);
    let t_name = fresh_name(&s, "t");
    let t_ring = s.extend(Variable { name: t_name.clone(), kind: VarKind::Aux, internal: 0, rees: 1 })?;
    let t_idx = t_ring.nvars() - 1;
    let t = t_ring.var(t_idx);

    let free = module.free_module();
    let shifts: Vec<Bidegree> = free.shifts().iter().map(|s| Bidegree::new(s.internal, 0)).collect();
    let s_free = FreeModule::new(shifts);

    // kernel of S -> R[t], w_j -> t g_j
    let subst: Vec<Polynomial<F>> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let w = t_ring.var(base.nvars() + j);
            let tg = t_ring.mul(&t, &transfer(&base, &t_ring, g)?);
            Ok(t_ring.sub(&w, &tg))
        })
        .collect::<Result<_>>()?;
    let kernel_t = Submodule::ideal(t_ring.clone(), &subst)?;
    let kernel_polys: Vec<Polynomial<F>> = kernel_t
        .eliminate_gb(&[t_idx])?
        .iter()
        .map(|e| transfer(&t_ring, &s, &t_ring.component(e, 0)))
        .collect::<Result<_>>()?;
    let kernel = Submodule::ideal(s.clone(), &kernel_polys)?.trim()?;

    // the module: (w_j - t g_j) e_l together with the relations of M
    let t_order = s_free.default_order(&t_ring);
    let mut rels_t = Vec::new();
    for l in 0..free.rank() as u32 {
        for p in &subst {
            rels_t.push(t_ring.poly_to_element(p, l, &t_order));
        }
    }
    for k in module.relations().gens() {
        rels_t.push(transfer_element(&base, &t_ring, k, &t_order)?);
    }
    let sub_t = Submodule::new(t_ring.clone(), s_free.clone(), rels_t)?;
    let s_order = s_free.default_order(&s);
    let mut rels: Vec<FreeElement<F>> = sub_t
        .eliminate_gb(&[t_idx])?
        .iter()
        .map(|e| transfer_element(&t_ring, &s, e, &s_order))
        .collect::<Result<_>>()?;
    if graded_piece {
        for l in 0..free.rank() as u32 {
            for g in &gens {
                rels.push(s.poly_to_element(&transfer(&base, &s, g)?, l, &s_order));
            }
        }
    }
    let relations = Submodule::new(s.clone(), s_free, rels)?.trim()?;
    Ok(ReesPresentation {
        base,
        ring: s,
        generators: gens,
        kernel,
        module: Module::cokernel(relations),
        graded_piece,
    })
}

fn transfer_element<F: Field>(
    from: &Ring<F>,
    to: &Ring<F>,
    v: &FreeElement<F>,
    order: &crate::order::ModuleOrder,
) -> Result<FreeElement<F>> {
    let map: Vec<Option<usize>> = from.vars().names().map(|n| to.vars().index_of(n)).collect();
    let mut terms = Vec::with_capacity(v.len());
    for t in v.terms() {
        let mono = Ring::<F>::map_monomial(&t.mono, &map, to.nvars())
            .ok_or_else(|| Error::InvalidArgument("variable missing from the target ring".into()))?;
        terms.push(Term { mono, comp: t.comp, coeff: t.coeff.clone() });
    }
    let mut out = FreeElement::from_terms(terms);
    to.normalize(&mut out, order);
    Ok(out)
}

/// Minimal generators of `I^n` (with `I^0 = R`).
pub fn ideal_power<F: Field>(ideal: &Submodule<F>, n: usize) -> Result<Submodule<F>> {
    let ring = ideal.ring();
    let gens = ideal.trim()?.gen_polys();
    let mut cur = Submodule::ideal(ring.clone(), &[ring.constant(ring.field().one())])?;
    for _ in 0..n {
        cur = cur.times_ideal(&gens)?.trim()?;
    }
    Ok(cur)
}

/// Which module of the `n`-th power is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `I^n M`.
    Power,
    /// `I^n M / I^{n+1} M`.
    GradedPiece,
    /// `M / I^n M`.
    Quotient,
    /// `(I^n : m^∞)`, for `M = R`.
    SaturationPower,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Power => "power",
            Variant::GradedPiece => "graded-piece",
            Variant::Quotient => "quotient",
            Variant::SaturationPower => "saturation-power",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        [Variant::Power, Variant::GradedPiece, Variant::Quotient, Variant::SaturationPower]
            .into_iter()
            .find(|v| v.name() == s)
    }
}

fn times_free<F: Field>(ring: &Ring<F>, free: &FreeModule, polys: &[Polynomial<F>]) -> Vec<FreeElement<F>> {
    let order = free.default_order(ring);
    let mut out = Vec::new();
    for l in 0..free.rank() as u32 {
        for p in polys {
            out.push(ring.poly_to_element(p, l, &order));
        }
    }
    out
}

/// The module `I^n M`, `I^n M / I^{n+1} M` or `M / I^n M` over the base ring.
pub fn module_power<F: Field>(ideal: &Submodule<F>, n: usize, module: &Module<F>, variant: Variant) -> Result<Module<F>> {
    let ring = module.ring().clone();
    let free = module.free_module();
    let k = module.relations().gens();
    let pn = ideal_power(ideal, n)?.gen_polys();
    match variant {
        Variant::Power => Module::subquotient(ring.clone(), free, &times_free(&ring, free, &pn), k),
        Variant::GradedPiece => {
            let pn1 = ideal_power(ideal, n + 1)?.gen_polys();
            let mut b = k.to_vec();
            b.extend(times_free(&ring, free, &pn1));
            Module::subquotient(ring.clone(), free, &times_free(&ring, free, &pn), &b)
        }
        Variant::Quotient => module.with_relations(&times_free(&ring, free, &pn)),
        Variant::SaturationPower => Err(Error::InvalidArgument("saturation powers are ideals".into())),
    }
}

/// `pdeg` in the Rees grading: `None` for the zero module.
pub fn persistence_degree<F: Field>(module: &Module<F>) -> Result<Option<i64>> {
    let reduced = module.base_reduction()?;
    let series = hilbert_series(&reduced, Grading::Rees)?;
    let bound = module.free_module().shifts().iter().map(|s| s.rees).max().unwrap_or(0);
    persistence_from_series(&series, bound)
}

/// `(m^{q+1} P ∩ M + m^q M) / m^q M` for `M = M_i ⊆ P = F_{i-1}`, presented
/// on generators of `m^{q+1} P ∩ M`.
pub fn tor_image<F: Field>(res: &Resolution<F>, i: usize, q: usize) -> Result<Module<F>> {
    let ring = res.ring().clone();
    if i == 0 || i > res.length() {
        let p = res.module(i.saturating_sub(1)).cloned().unwrap_or_else(|| FreeModule::new(Vec::new()));
        return Ok(Module::cokernel(Submodule::whole(ring, p)));
    }
    let m = res.syzygy_module(i)?;
    let p = m.ambient().clone();
    let u = Submodule::base_power(ring.clone(), p.clone(), q + 1).intersect(&m)?;
    let mq = m.times_base_power(q)?;
    if u.is_zero() {
        return Ok(Module::cokernel(Submodule::whole(ring, FreeModule::new(Vec::new()))));
    }
    Module::subquotient(ring, &p, u.gens(), mq.gens())
}

/// Total dimension of a module of finite length, by counting standard monomials.
pub fn finite_length<F: Field>(module: &Module<F>) -> Result<usize> {
    let ring = module.ring();
    let gb = module.relations().gb()?;
    let leads = gb.leads();
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let mut total = 0;
    for c in 0..module.free_module().rank() as u32 {
        let mine: Vec<_> = leads.iter().filter(|(_, k)| *k == c).map(|(m, _)| *m).collect();
        let mut d = 0;
        loop {
            budget::check()?;
            let count = crate::module::rees_monomials(ring, &vars, d)
                .iter()
                .filter(|m| !mine.iter().any(|l| l.divides(m)))
                .count();
            if count == 0 {
                break;
            }
            total += count;
            d += 1;
            if d > 64 {
                return Err(Error::InfiniteHilbertFunction("module is not of finite length".into()));
            }
        }
    }
    Ok(total)
}

/// Minimal `h >= 1` with `m^q P ∩ M = m^{q-h}(m^h P ∩ M)` for all `q` in
/// `[h, h + window]`, for `M = M_i ⊆ P = F_{i-1}`.
pub fn artin_rees_number<F: Field>(res: &Resolution<F>, i: usize, window: usize) -> Result<usize> {
    let m = res.syzygy_module(i)?;
    let ring = res.ring().clone();
    let p = m.ambient().clone();
    let mut cache: BTreeMap<usize, Submodule<F>> = BTreeMap::new();
    let mut level = |q: usize| -> Result<Submodule<F>> {
        if let Some(x) = cache.get(&q) {
            return Ok(x.clone());
        }
        let x = Submodule::base_power(ring.clone(), p.clone(), q).intersect(&m)?;
        cache.insert(q, x.clone());
        Ok(x)
    };
    for h in 1..=64 {
        let xh = level(h)?;
        let mut ok = true;
        for q in h + 1..=h + window {
            let lhs = level(q)?;
            if !xh.times_base_power(q - h)?.contains_submodule(&lhs)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(h);
        }
    }
    Err(Error::InvalidArgument("no Artin-Rees number below 64".into()))
}

/// Both readings of `sup{q : (K_i / n K_i)_q != 0}` for the initial module `K_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KCertificate {
    /// `q` read as the `m`-adic order; floored at 1.
    pub filtration: i64,
    /// `q` read as the Rees degree of `K_i / m K_i`; `None` when unbounded.
    pub rees: Option<i64>,
    pub agrees_with_t: bool,
    pub rees_agrees_with_t: bool,
}

/// Initial forms (lowest `m`-adic order) of `M_i` and the two readings of
/// the Artin–Rees number they give.
pub fn k_certificate<F: Field>(res: &Resolution<F>, i: usize, t: usize) -> Result<KCertificate> {
    let m = res.syzygy_module(i)?;
    let ring = res.ring().clone();
    let p = m.ambient().clone();
    let weights = ring.vars().internal_weights();
    let negative_base: Vec<i64> = ring.vars().base_weights().iter().map(|w| -w).collect();
    let mono = MonoOrder::refined(weights, negative_base);
    let order = p.order_with(mono);
    let gb = crate::groebner::buchberger(&ring, &order, m.gens(), false)?;
    let mut initial = Vec::new();
    for g in gb.elements() {
        let low = g.terms().iter().map(|t| ring.base_degree(&t.mono)).min().unwrap_or(0);
        let terms: Vec<Term<F>> = g.terms().iter().filter(|t| ring.base_degree(&t.mono) == low).cloned().collect();
        initial.push(FreeElement::from_terms(terms));
    }
    let k = Submodule::new(ring.clone(), p.clone(), initial)?.trim()?;
    let filtration = k
        .gens()
        .iter()
        .map(|g| ring.base_degree(&g.terms()[0].mono))
        .max()
        .unwrap_or(0)
        .max(1);
    let k_mod_m = Module::subquotient(ring.clone(), &p, k.gens(), k.times_base_power(1)?.gens())?;
    let rees = match hilbert_series(&k_mod_m.base_reduction()?, Grading::Rees) {
        Ok(series) => {
            let data = series.data()?;
            if !data.polynomial_is_zero() {
                None
            } else {
                let top = data.agreement_index.max(series.offset + series.numerator.len() as i64);
                (series.offset..=top).rev().find(|&n| series.value(n) != 0)
            }
        }
        Err(Error::InfiniteHilbertFunction(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(KCertificate {
        filtration,
        rees,
        agrees_with_t: filtration == t as i64,
        rees_agrees_with_t: rees == Some(t as i64),
    })
}

/// Per-level data of the stabilization threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCertificate {
    pub i: usize,
    pub t: usize,
    /// `c(i, 1), ..., c(i, T(i))`; `None` is `-inf`.
    pub c: Vec<Option<i64>>,
    pub n: Option<i64>,
    pub k_certificate: Option<KCertificate>,
}

/// The threshold `N(C)` and its ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub pd: usize,
    pub glind_bound: usize,
    pub per_level: Vec<LevelCertificate>,
    pub n0: Option<i64>,
    pub n: Option<i64>,
}

impl StabilityCertificate {
    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .per_level
            .iter()
            .map(|l| {
                let mut v = json!({
                    "i": l.i,
                    "T": l.t,
                    "c": l.c.iter().map(|c| ext_json(*c)).collect::<Vec<_>>(),
                    "n": ext_json(l.n),
                });
                if let Some(k) = &l.k_certificate {
                    v["K"] = json!({
                        "filtration": k.filtration,
                        "rees": k.rees.map(|r| json!(r)).unwrap_or(json!("inf")),
                        "agreesWithT": k.agrees_with_t,
                        "reesAgreesWithT": k.rees_agrees_with_t,
                    });
                }
                v
            })
            .collect();
        json!({
            "pd": self.pd,
            "glindBound": self.glind_bound,
            "perLevel": levels,
            "n0": ext_json(self.n0),
            "N": ext_json(self.n),
        })
    }
}

/// `N(C) = max{n(0), n(1), ..., n(min{glind_bound, pd})}`.
pub fn stability_threshold<F: Field>(c: &Module<F>, glind_bound: usize, certify: bool) -> Result<StabilityCertificate> {
    let n0 = persistence_degree(c)?;
    let res = Resolution::of_module(c, true, None)?;
    let pd = res.length();
    let top = glind_bound.min(pd);
    let per_level: Vec<LevelCertificate> = (1..=top)
        .into_par_iter()
        .map(|i| level_certificate(&res, i, certify))
        .collect::<Result<_>>()?;
    let n = per_level.iter().fold(n0, |acc, l| ext_max(acc, l.n));
    Ok(StabilityCertificate { pd, glind_bound, per_level, n0, n })
}

fn level_certificate<F: Field>(res: &Resolution<F>, i: usize, certify: bool) -> Result<LevelCertificate> {
    let t = artin_rees_number(res, i, 3)?;
    let c: Vec<Option<i64>> = (1..=t).map(|q| persistence_degree(&tor_image(res, i, q)?)).collect::<Result<_>>()?;
    let n = c.iter().fold(None, |acc, x| ext_max(acc, *x));
    let k_certificate = if certify { Some(k_certificate(res, i, t)?) } else { None };
    Ok(LevelCertificate { i, t, c, n, k_certificate })
}

/// One computed entry of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Value {
        lind: usize,
        /// Least internal degree of a generator (`None` for the zero module).
        min_degree: Option<i64>,
        generators: usize,
        millis: u128,
    },
    Timeout,
}

/// Values `n -> lind` with detected stable value or quasiperiod.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub variant: Variant,
    pub values: BTreeMap<usize, Entry>,
    pub stable_value: Option<usize>,
    pub stabilization_index: Option<usize>,
    /// `(start, period)` of a repeating tail, when no stable value exists.
    pub quasiperiod: Option<(usize, usize)>,
    pub certificate: Option<StabilityCertificate>,
    /// Whether all computed values with `n >= max(1, N)` agree.
    pub certified_constant: Option<bool>,
}

impl AsymptoticReport {
    /// The computed values up to the first timeout.
    pub fn prefix(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for e in self.values.values() {
            match e {
                Entry::Value { lind, .. } => out.push(*lind),
                Entry::Timeout => break,
            }
        }
        out
    }

    pub fn lind(&self, n: usize) -> Option<usize> {
        match self.values.get(&n) {
            Some(Entry::Value { lind, .. }) => Some(*lind),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let values: serde_json::Map<String, Value> = self
            .values
            .iter()
            .map(|(n, e)| {
                let v = match e {
                    Entry::Value { lind, min_degree, generators, .. } => json!({
                        "lind": lind,
                        "minDegree": ext_json(*min_degree),
                        "generators": generators,
                    }),
                    Entry::Timeout => json!("timeout"),
                };
                (n.to_string(), v)
            })
            .collect();
        json!({
            "variant": self.variant.name(),
            "values": values,
            "stableValue": self.stable_value,
            "stabilizationIndex": self.stabilization_index,
            "quasiperiod": self.quasiperiod.map(|(s, p)| json!({"start": s, "period": p})),
            "certificate": self.certificate.as_ref().map(|c| c.to_json()),
            "certifiedConstant": self.certified_constant,
        })
    }
}

/// Options of [`lind_sequence`].
#[derive(Clone, Debug)]
pub struct SequenceOptions {
    pub max_n: usize,
    /// Budget per entry.
    pub timeout: Option<Duration>,
    pub certify: bool,
    pub glind_bound: Option<usize>,
}

impl Default for SequenceOptions {
    fn default() -> Self {
        SequenceOptions { max_n: 4, timeout: None, certify: false, glind_bound: None }
    }
}

fn entry_for<F: Field>(ideal: &Submodule<F>, module: &Module<F>, variant: Variant, n: usize) -> Result<Entry> {
    let start = Instant::now();
    let ring = module.ring();
    let (lind, min_degree, generators) = match variant {
        Variant::SaturationPower => {
            let (sat, _) = ideal_power(ideal, n)?.saturate_base()?;
            let sat = sat.trim()?;
            let degs = sat.generator_degrees()?;
            let lind = linearity_defect_of_submodule(&sat)?;
            (lind, degs.iter().map(|d| d.internal).min(), degs.len())
        }
        _ => {
            let m = module_power(ideal, n, module, variant)?;
            let degs: Vec<i64> = m.free_module().shifts().iter().map(|s| s.internal).collect();
            let lind = linearity_defect(&m)?;
            let zero = m.is_zero()?;
            (lind, if zero { None } else { degs.iter().copied().min() }, if zero { 0 } else { degs.len() })
        }
    };
    let _ = ring;
    Ok(Entry::Value { lind, min_degree, generators, millis: start.elapsed().as_millis() })
}

/// `lind` along `n = 1..=max_n` for the chosen variant.  Entries run in
/// parallel; an entry exceeding its budget is recorded as a timeout.
pub fn lind_sequence<F: Field>(
    ideal: &Submodule<F>,
    module: &Module<F>,
    variant: Variant,
    options: &SequenceOptions,
) -> Result<AsymptoticReport> {
    if variant == Variant::SaturationPower && module.free_module().rank() != 1 {
        return Err(Error::InvalidArgument("saturation powers need M = R".into()));
    }
    let entries: Vec<(usize, Result<Entry>)> = (1..=options.max_n)
        .into_par_iter()
        .map(|n| {
            let run = || entry_for(ideal, module, variant, n);
            let out = match options.timeout {
                Some(t) => budget::with_deadline(t, run),
                None => run(),
            };
            (n, out)
        })
        .collect();
    let mut values = BTreeMap::new();
    for (n, e) in entries {
        match e {
            Ok(v) => values.insert(n, v),
            Err(Error::Timeout) => values.insert(n, Entry::Timeout),
            Err(e) => return Err(e),
        };
    }
    let mut report = AsymptoticReport {
        variant,
        values,
        stable_value: None,
        stabilization_index: None,
        quasiperiod: None,
        certificate: None,
        certified_constant: None,
    };
    let prefix = report.prefix();
    if let Some((start, value)) = constant_tail(&prefix) {
        report.stable_value = Some(value);
        report.stabilization_index = Some(start);
    } else {
        report.quasiperiod = quasiperiod(&prefix);
    }
    if options.certify && matches!(variant, Variant::Power | Variant::GradedPiece) {
        let rees = rees_presentation(ideal, module, variant == Variant::GradedPiece)?;
        let bound = options.glind_bound.unwrap_or(module.ring().base_indices().len());
        let cert = stability_threshold(&rees.module, bound, false)?;
        let from = cert.n.unwrap_or(1).max(1) as usize;
        let tail: Vec<usize> = prefix.iter().skip(from - 1).copied().collect();
        report.certified_constant = Some(tail.windows(2).all(|w| w[0] == w[1]));
        report.certificate = Some(cert);
    }
    Ok(report)
}

/// `(start, value)` of the maximal constant tail when it has length at least 2.
/// Indices are 1-based.
pub fn constant_tail(values: &[usize]) -> Option<(usize, usize)> {
    let last = *values.last()?;
    let len = values.iter().rev().take_while(|v| **v == last).count();
    (len >= 2).then(|| (values.len() - len + 1, last))
}

/// Smallest period `p >= 2` whose pattern repeats at least twice over a
/// tail of `values`; returns the 1-based start and the period.
pub fn quasiperiod(values: &[usize]) -> Option<(usize, usize)> {
    for p in 2..=values.len() / 2 {
        for start in 0..=values.len() - 2 * p {
            let tail = &values[start..];
            if (p..tail.len()).all(|k| tail[k] == tail[k - p]) {
                return Some((start + 1, p));
            }
        }
    }
    None
}

/// The base ring of a Rees presentation ring.
pub fn base_of<F: Field>(ring: &Ring<F>) -> Result<Arc<Ring<F>>> {
    base_ring(ring)
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
    fn rees_kernel_of_regular_sequence() {
        let i = ideal(&["x", "y"], &["x", "y"]);
        let r = Module::free(i.ring().clone(), FreeModule::free(1));
        let p = rees_presentation(&i, &r, false).unwrap();
        assert_eq!(p.kernel.gens().len(), 1);
        let s = &p.ring;
        let expect = parse_polynomial(s, "w0 y - w1 x").unwrap();
        let e = Submodule::ideal(s.clone(), &[expect]).unwrap();
        assert!(p.kernel.equals(&e).unwrap());
    }

    #[test]
    fn principal_ideal_has_no_rees_relations() {
        let i = ideal(&["x", "y"], &["x"]);
        let r = Module::free(i.ring().clone(), FreeModule::free(1));
        let p = rees_presentation(&i, &r, false).unwrap();
        assert!(p.kernel.is_zero());
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let i = ideal(&["x"], &["x", "1"]);
        let r = Module::free(i.ring().clone(), FreeModule::free(1));
        assert!(matches!(rees_presentation(&i, &r, false), Err(Error::NotInIrrelevantIdeal)));
    }

    #[test]
    fn tails_and_periods() {
        assert_eq!(constant_tail(&[3, 1, 1, 1]), Some((2, 1)));
        assert_eq!(constant_tail(&[1, 2]), None);
        assert_eq!(quasiperiod(&[5, 0, 1, 0, 1]), Some((2, 2)));
        assert_eq!(quasiperiod(&[0, 1, 2, 0, 1]), None);
    }

    #[test]
    fn powers_of_the_maximal_ideal() {
        let i = ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(ideal_power(&i, 3).unwrap().gens().len(), 4);
        assert_eq!(ideal_power(&i, 0).unwrap().gens().len(), 1);
    }
}
