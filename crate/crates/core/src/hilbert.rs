//! Hilbert series of finitely presented modules from their leading-term modules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::Module;
use crate::monomial::Monomial;

/// Which degree a Hilbert function counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grading {
    Internal,
    Rees,
}

/// Hilbert series `numerator(t) / prod_i (1 - t^{weights_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// `numerator[k]` is the coefficient of `t^(offset + k)`.
    pub numerator: Vec<i64>,
    pub offset: i64,
    pub weights: Vec<i64>,
}

/// Hilbert series in reduced form together with the Hilbert polynomial data
/// (standard grading only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub series: HilbertSeries,
    /// `h(t)` with `series = t^offset h(t) / (1-t)^dim` and `h(1) != 0`.
    pub h: Vec<i64>,
    pub dim: usize,
    /// From this degree on the Hilbert function equals the Hilbert polynomial.
    pub agreement_index: i64,
}

type Laurent2 = BTreeMap<(i64, i64), i64>;

fn mul2(a: &Laurent2, b: &Laurent2) -> Laurent2 {
    let mut out = Laurent2::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            *out.entry((ka.0 + kb.0, ka.1 + kb.1)).or_insert(0) += va * vb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn add2(a: &mut Laurent2, b: &Laurent2) {
    for (k, v) in b {
        *a.entry(*k).or_insert(0) += v;
    }
    a.retain(|_, v| *v != 0);
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    *gens = out;
}

/// Numerator of the Hilbert series of `k[x] / (gens)` for variables with
/// bidegree `degs[i]`, by the pivot recursion `N(L) = N(L + p) + t^p N(L : p)`.
fn numerator(gens: &[Monomial], degs: &[(i64, i64)]) -> Laurent2 {
    let mono_deg = |m: &Monomial| {
        let mut d = (0, 0);
        for (i, e) in m.exponents().iter().enumerate() {
            d.0 += degs[i].0 * *e as i64;
            d.1 += degs[i].1 * *e as i64;
        }
        d
    };
    let mut one = Laurent2::new();
    one.insert((0, 0), 1);
    if gens.is_empty() {
        return one;
    }
    let nv = gens[0].nvars();
    // pairwise coprime generators: product formula
    let mut counts = vec![0usize; nv];
    for g in gens {
        for (i, e) in g.exponents().iter().enumerate() {
            if *e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (best, &cnt) = counts.iter().enumerate().max_by_key(|(_, c)| **c).unwrap();
    if cnt <= 1 {
        let mut acc = one;
        for g in gens {
            let mut f = Laurent2::new();
            f.insert((0, 0), 1);
            *f.entry(mono_deg(g)).or_insert(0) -= 1;
            f.retain(|_, v| *v != 0);
            acc = mul2(&acc, &f);
        }
        return acc;
    }
    let e = gens.iter().map(|g| g.exponent(best)).filter(|&e| e > 0).min().unwrap();
    let mut p = Monomial::one(nv);
    p.set_exponent(best, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(best) < e).copied().collect();
    plus.push(p);
    minimalize(&mut plus);
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut h = *g;
            h.set_exponent(best, g.exponent(best).saturating_sub(e));
            h
        })
        .collect();
    minimalize(&mut colon);
    let mut out = numerator(&plus, degs);
    let mut shifted = Laurent2::new();
    shifted.insert(mono_deg(&p), 1);
    let rec = mul2(&shifted, &numerator(&colon, degs));
    add2(&mut out, &rec);
    out
}

impl HilbertSeries {
    /// Coefficient of `t^n`.
    pub fn value(&self, n: i64) -> i64 {
        let top = n - self.offset;
        if top < 0 {
            return 0;
        }
        // number of monomials of each weighted degree up to `top`
        let mut counts = vec![0i64; top as usize + 1];
        counts[0] = 1;
        for &w in &self.weights {
            for d in w as usize..=top as usize {
                counts[d] += counts[d - w as usize];
            }
        }
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| *k as i64 <= top)
            .map(|(k, c)| c * counts[(top - k as i64) as usize])
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|c| *c == 0)
    }

    /// Reduce to `t^offset h(t) / (1-t)^d`; requires all weights equal to one.
    pub fn data(&self) -> Result<HilbertData> {
        if self.weights.iter().any(|w| *w != 1) {
            return Err(Error::InvalidArgument("Hilbert polynomial needs a standard grading".into()));
        }
        let mut h = self.numerator.clone();
        while h.last() == Some(&0) {
            h.pop();
        }
        let mut dim = self.weights.len();
        if h.is_empty() {
            return Ok(HilbertData { series: self.clone(), h, dim: 0, agreement_index: i64::MIN });
        }
        while dim > 0 && h.iter().sum::<i64>() == 0 {
            // divide by (1 - t)
            let mut q = vec![0i64; h.len() - 1];
            let mut acc = 0;
            for k in 0..h.len() - 1 {
                acc += h[k];
                q[k] = acc;
            }
            h = q;
            dim -= 1;
        }
        let deg_h = self.offset + h.len() as i64 - 1;
        Ok(HilbertData { series: self.clone(), h, dim, agreement_index: deg_h - dim as i64 + 1 })
    }
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

impl HilbertData {
    /// Value of the Hilbert polynomial at `n`.
    pub fn polynomial_value(&self, n: i64) -> i128 {
        if self.dim == 0 {
            return 0;
        }
        let d = self.dim as i128;
        self.h
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let m = (n - self.series.offset - k as i64) as i128;
                // C(m + d - 1, d - 1) as a polynomial in m
                let mut num: i128 = 1;
                for i in 1..d {
                    num *= m + i;
                }
                let mut den: i128 = 1;
                for i in 1..d {
                    den *= i;
                }
                *c as i128 * num / den
            })
            .sum()
    }

    pub fn function_value(&self, n: i64) -> i128 {
        let d = self.dim as i128;
        if d == 0 {
            return self
                .h
                .get((n - self.series.offset).max(-1).try_into().unwrap_or(usize::MAX))
                .map(|c| *c as i128)
                .unwrap_or(0);
        }
        self.h
            .iter()
            .enumerate()
            .map(|(k, c)| *c as i128 * binom((n - self.series.offset - k as i64) as i128 + d - 1, d - 1))
            .sum()
    }

    pub fn polynomial_is_zero(&self) -> bool {
        self.dim == 0 || self.h.is_empty()
    }
}

/// Hilbert series of `module` in the chosen grading.  Variables of weight
/// zero must act nilpotently on the module, otherwise graded pieces are
/// infinite-dimensional and an error is returned.
pub fn hilbert_series<F: Field>(module: &Module<F>, grading: Grading) -> Result<HilbertSeries> {
    let ring = module.ring();
    let free = module.free_module();
    let weights: Vec<i64> = match grading {
        Grading::Internal => ring.vars().internal_weights(),
        Grading::Rees => ring.vars().rees_weights(),
    };
    if weights.iter().any(|w| *w < 0) {
        return Err(Error::InvalidArgument("negative weights".into()));
    }
    let degs: Vec<(i64, i64)> = weights.iter().map(|&w| if w == 0 { (1, 0) } else { (0, w) }).collect();
    let nzero = weights.iter().filter(|w| **w == 0).count();
    let gb = module.relations().gb()?;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); free.rank()];
    for e in gb.elements() {
        let t = e.lead().expect("nonzero basis element");
        per_comp[t.comp as usize].push(t.mono);
    }
    let mut total = Laurent2::new();
    for (c, gens) in per_comp.iter_mut().enumerate() {
        minimalize(gens);
        let shift = match grading {
            Grading::Internal => free.shift(c).internal,
            Grading::Rees => free.shift(c).rees,
        };
        let num = numerator(gens, &degs);
        let mut s = Laurent2::new();
        s.insert((0, shift), 1);
        add2(&mut total, &mul2(&num, &s));
    }
    // divide by (1 - s)^nzero and set s = 1
    let mut by_t: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for ((a, b), v) in &total {
        let row = by_t.entry(*b).or_default();
        if row.len() <= *a as usize {
            row.resize(*a as usize + 1, 0);
        }
        row[*a as usize] += v;
    }
    let mut univariate: BTreeMap<i64, i64> = BTreeMap::new();
    for (b, mut poly) in by_t {
        for _ in 0..nzero {
            if poly.iter().sum::<i64>() != 0 {
                return Err(Error::InfiniteHilbertFunction(format!(
                    "{grading:?} grading has infinite-dimensional pieces"
                )));
            }
            let mut q = vec![0i64; poly.len().saturating_sub(1)];
            let mut acc = 0;
            for k in 0..q.len() {
                acc += poly[k];
                q[k] = acc;
            }
            poly = q;
        }
        let v: i64 = poly.iter().sum();
        if v != 0 {
            univariate.insert(b, v);
        }
    }
    let pos: Vec<i64> = weights.iter().copied().filter(|w| *w > 0).collect();
    let offset = univariate.keys().next().copied().unwrap_or(0);
    let top = univariate.keys().last().copied().unwrap_or(0);
    let mut numerator = vec![0i64; (top - offset + 1) as usize];
    for (b, v) in univariate {
        numerator[(b - offset) as usize] = v;
    }
    if numerator.iter().all(|c| *c == 0) {
        numerator.clear();
    }
    Ok(HilbertSeries { numerator, offset, weights: pos })
}

/// Persistence degree from the Hilbert data of a module over a standard
/// graded polynomial ring: the least `p` such that the graded pieces of
/// degree `>= p` are either all zero or all nonzero.  `None` stands for `-inf`
/// (the zero module).  `gen_bound` bounds the degrees of a generating set.
pub fn persistence_from_series(series: &HilbertSeries, gen_bound: i64) -> Result<Option<i64>> {
    if series.is_zero() {
        return Ok(None);
    }
    let data = series.data()?;
    let lowest = series.offset;
    let bound = data.agreement_index.max(gen_bound).max(lowest);
    if data.polynomial_is_zero() {
        let last_nonzero = (lowest..=bound).rev().find(|&n| series.value(n) != 0);
        return Ok(last_nonzero.map(|n| n + 1));
    }
    let last_zero = (lowest..=bound).rev().find(|&n| series.value(n) == 0);
    Ok(Some(last_zero.map(|n| n + 1).unwrap_or(lowest)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::VariableSet;
    use crate::ring::{FreeModule, Ring};
    use crate::submodule::Submodule;

    #[test]
    fn numerator_of_two_squares() {
        let g = vec![Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 2])];
        let n = numerator(&g, &[(0, 1), (0, 1)]);
        let expect: Laurent2 = [((0, 0), 1), ((0, 2), -2), ((0, 4), 1)].into_iter().collect();
        assert_eq!(n, expect);
        let g = vec![Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[1, 1])];
        let n = numerator(&g, &[(0, 1), (0, 1)]);
        let expect: Laurent2 = [((0, 0), 1), ((0, 2), -2), ((0, 3), 1)].into_iter().collect();
        assert_eq!(n, expect);
    }

    #[test]
    fn free_module_over_three_rees_variables() {
        let vars = VariableSet::with_rees(&["x"], &[("a", 2), ("b", 2), ("c", 2)]).unwrap();
        let r = Ring::new(PrimeField::default(), vars);
        let m = Module::free(r, FreeModule::free(1)).base_reduction().unwrap();
        let s = hilbert_series(&m, Grading::Rees).unwrap();
        for n in 0..6 {
            assert_eq!(s.value(n), (n + 1) * (n + 2) / 2);
        }
        assert_eq!(persistence_from_series(&s, 0).unwrap(), Some(0));
    }

    #[test]
    fn zero_module_has_zero_series() {
        let r = Ring::polynomial(PrimeField::default(), &["x", "y"]).unwrap();
        let m = Module::cokernel(Submodule::whole(r, FreeModule::free(2)));
        let s = hilbert_series(&m, Grading::Internal).unwrap();
        assert!(s.is_zero());
        assert_eq!(persistence_from_series(&s, 0).unwrap(), None);
    }

    #[test]
    fn eventually_zero_persistence() {
        let r = Ring::polynomial(PrimeField::default(), &["w"]).unwrap();
        let w3 = r.pow(&r.var(0), 3);
        let m = Module::quotient_ring(&Submodule::ideal(r, &[w3]).unwrap()).unwrap();
        let s = hilbert_series(&m, Grading::Internal).unwrap();
        assert_eq!(persistence_from_series(&s, 0).unwrap(), Some(3));
        let d = s.data().unwrap();
        assert_eq!(d.dim, 0);
        assert_eq!(d.function_value(2), 1);
        assert_eq!(d.function_value(3), 0);
    }
}
